//! Exact counting and decision algorithms for hard graph problems, built on
//! inclusion-exclusion sieves over the subset lattice: graph coloring via
//! independent-set counts, permanents and perfect matchings, Hamiltonian
//! paths, minimum Steiner tree size, randomized k-path detection over
//! GF(2^16), and the zeta/Möbius transform machinery behind them. Every
//! sieve ships with an independent brute-force oracle for differential
//! testing.
//!
//! All counts are exact: the default carrier is an arbitrary-precision
//! integer, with an optional 128-bit checked mode that aborts on overflow
//! rather than wrap.

pub mod coloring;
pub mod error;
pub mod gf16;
pub mod graph;
pub mod hampath;
pub mod kpath;
pub mod matchings;
pub mod matrix;
pub mod oracles;
pub mod ring;
pub mod rng;
pub mod setfn;
pub mod sieve;
pub mod steiner;
pub mod subset;
pub mod transforms;

pub use error::{Error, Result};
pub use gf16::GF16;
pub use graph::Graph;
pub use matrix::Matrix01;
pub use ring::{Checked128, Count, CountRing, Ring};
pub use rng::SplitMix64;
pub use setfn::{parse_setfn, set_table_cap, table_cap, SetFunction, DEFAULT_TABLE_CAP};
pub use subset::{BitSubset, GROUND_SET_MAX};
