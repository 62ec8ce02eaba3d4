//! Zeta and Möbius transforms on the subset lattice.
//!
//! The fast variants run n rounds of in-place butterflies, round i combining
//! each subset with the subset one element smaller:
//!
//! ```text
//! g_i(S) = g_{i-1}(S) + [i in S] * g_{i-1}(S \ {i})      (zeta)
//! g_i(S) = g_{i-1}(S) - [i in S] * g_{i-1}(S \ {i})      (Möbius)
//! ```
//!
//! for a total of O(2^n * n) ring operations. Rounds go through the bits in
//! ascending order (bit 0 first); any fixed order is valid, this one is
//! pinned for reproducibility. The naive O(3^n) double loops are retained as
//! oracles for the fast versions.

use crate::error::{Error, Result};
use crate::ring::{ring_pow, Ring};
use crate::setfn::SetFunction;

/// Cap for the O(3^n) naive transforms.
pub const NAIVE_TRANSFORM_CAP: usize = 14;

/// One zeta round: adds `f(S \ {bit})` into `f(S)` for every `S` containing
/// `bit`. Exposed so tests can inspect the round intermediates.
pub fn zeta_round_in_place<R: Ring>(f: &mut SetFunction<R>, bit: usize) {
    butterfly(f, bit, false);
}

/// One Möbius round: subtracts instead of adding.
pub fn mobius_round_in_place<R: Ring>(f: &mut SetFunction<R>, bit: usize) {
    butterfly(f, bit, true);
}

fn butterfly<R: Ring>(f: &mut SetFunction<R>, bit: usize, subtract: bool) {
    debug_assert!(bit < f.ground_size());
    let half = 1usize << bit;
    for block in f.values_mut().chunks_exact_mut(half * 2) {
        let (lo, hi) = block.split_at_mut(half);
        for (h, l) in hi.iter_mut().zip(lo.iter()) {
            if subtract {
                *h -= l;
            } else {
                *h += l;
            }
        }
    }
}

/// In-place zeta transform: afterwards `f(T) = sum over S subseteq T` of the
/// original values.
pub fn zeta_yates_in_place<R: Ring>(f: &mut SetFunction<R>) {
    for bit in 0..f.ground_size() {
        zeta_round_in_place(f, bit);
    }
}

/// In-place Möbius transform, the inverse of [`zeta_yates_in_place`].
pub fn mobius_yates_in_place<R: Ring>(f: &mut SetFunction<R>) {
    for bit in 0..f.ground_size() {
        mobius_round_in_place(f, bit);
    }
}

/// Out-of-place zeta transform.
pub fn zeta_yates<R: Ring>(f: &SetFunction<R>) -> SetFunction<R> {
    let mut g = f.clone();
    zeta_yates_in_place(&mut g);
    g
}

/// Out-of-place Möbius transform.
pub fn mobius_yates<R: Ring>(f: &SetFunction<R>) -> SetFunction<R> {
    let mut g = f.clone();
    mobius_yates_in_place(&mut g);
    g
}

fn check_naive_cap(n: usize) -> Result<()> {
    if n > NAIVE_TRANSFORM_CAP {
        return Err(Error::cap(format!(
            "naive transform on {n} elements costs 3^{n} (cap {NAIVE_TRANSFORM_CAP})"
        )));
    }
    Ok(())
}

/// Naive zeta transform by direct double loop over subset pairs; O(3^n).
pub fn zeta_naive<R: Ring>(f: &SetFunction<R>) -> Result<SetFunction<R>> {
    let n = f.ground_size();
    check_naive_cap(n)?;
    SetFunction::from_fn(n, |t| {
        let mut acc = R::zero();
        for s in t.subsets() {
            acc += f.get(&s);
        }
        acc
    })
}

/// Naive Möbius transform: `sum over S subseteq T of (-1)^{|T \ S|} f(S)`.
pub fn mobius_naive<R: Ring>(f: &SetFunction<R>) -> Result<SetFunction<R>> {
    let n = f.ground_size();
    check_naive_cap(n)?;
    SetFunction::from_fn(n, |t| {
        let mut acc = R::zero();
        for s in t.subsets() {
            if (t.len() - s.len()) % 2 == 0 {
                acc += f.get(&s);
            } else {
                acc -= f.get(&s);
            }
        }
        acc
    })
}

/// Pointwise k-th power in the ring, `k >= 1`.
pub fn pointwise_pow<R: Ring>(h: &SetFunction<R>, k: u64) -> Result<SetFunction<R>> {
    if k == 0 {
        return Err(Error::invalid("pointwise_pow requires k >= 1"));
    }
    SetFunction::from_fn(h.ground_size(), |s| ring_pow(h.get(&s), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::ring::{Checked128, Count};
    use crate::rng::SplitMix64;
    use crate::subset::BitSubset;

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn is_independent(g: &Graph, s: &BitSubset) -> bool {
        s.elements().all(|v| g.adj(v) & s.mask() == 0)
    }

    /// Indicator of the nonempty independent sets.
    fn indep_indicator(g: &Graph) -> SetFunction<Count> {
        SetFunction::indicator(g.node_count(), |s| !s.is_empty() && is_independent(g, &s))
            .unwrap()
    }

    fn random_table(n: usize, rng: &mut SplitMix64) -> SetFunction<Count> {
        SetFunction::from_fn(n, |_| Count::from(rng.next_below(2001) as i64 - 1000)).unwrap()
    }

    // Final column of the butterfly network on the example graph: the zeta
    // transform of the independent-set indicator is the g table.
    #[test]
    fn zeta_of_indicator_is_the_g_table() {
        let fz = zeta_yates(&indep_indicator(&paw()));
        let expect: Vec<i64> = vec![0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 3, 4, 3, 4, 5, 6];
        let got: Vec<Count> = fz.values().to_vec();
        assert_eq!(got, expect.into_iter().map(Count::from).collect::<Vec<_>>());
        assert_eq!(fz.at_full(), &Count::from(6));
        assert_eq!(fz.get_mask(0b1101), &Count::from(4)); // {A,C,D}
    }

    #[test]
    fn zeta_of_delta_at_empty_is_all_ones() {
        let f = SetFunction::<Count>::indicator(5, |s| s.is_empty()).unwrap();
        let fz = zeta_yates(&f);
        assert!(fz.values().iter().all(|v| v == &Count::from(1)));
    }

    #[test]
    fn yates_agrees_with_naive_on_random_tables() {
        let mut rng = SplitMix64::new(20260810);
        for _ in 0..100 {
            let f = random_table(10, &mut rng);
            assert_eq!(zeta_yates(&f), zeta_naive(&f).unwrap());
            assert_eq!(mobius_yates(&f), mobius_naive(&f).unwrap());
        }
    }

    #[test]
    fn inversion_round_trips() {
        let mut rng = SplitMix64::new(77);
        for n in 0..=12usize {
            let f = random_table(n, &mut rng);
            assert_eq!(mobius_yates(&zeta_yates(&f)), f);
            assert_eq!(zeta_yates(&mobius_yates(&f)), f);
        }
    }

    #[test]
    fn naive_inversion_exhaustive_on_01_tables() {
        for n in 0..=3usize {
            let size = 1usize << n;
            for bits in 0u32..1 << size {
                let f = SetFunction::new(
                    n,
                    (0..size).map(|i| Count::from(bits >> i & 1)).collect(),
                )
                .unwrap();
                assert_eq!(mobius_naive(&zeta_naive(&f).unwrap()).unwrap(), f);
            }
        }
    }

    #[test]
    fn naive_rejects_large_n() {
        let f = SetFunction::<Count>::zeroed(NAIVE_TRANSFORM_CAP + 1).unwrap();
        assert!(zeta_naive(&f).is_err());
        assert!(mobius_naive(&f).is_err());
    }

    #[test]
    fn naive_on_singleton_table_is_identity() {
        let f = SetFunction::new(0, vec![Count::from(9)]).unwrap();
        assert_eq!(zeta_naive(&f).unwrap(), f);
    }

    #[test]
    fn out_of_place_matches_in_place() {
        let mut rng = SplitMix64::new(3);
        let f = random_table(8, &mut rng);
        let out = zeta_yates(&f);
        let mut inp = f.clone();
        zeta_yates_in_place(&mut inp);
        assert_eq!(out, inp);
    }

    // After round i, g_i(S) sums f(R) over R subseteq S agreeing with S on
    // the bits above i.
    #[test]
    fn round_intermediate_law() {
        let mut rng = SplitMix64::new(99);
        for n in [4usize, 6, 8] {
            let f = random_table(n, &mut rng);
            let full = BitSubset::full(n).mask();
            let mut g = f.clone();
            for bit in 0..n {
                zeta_round_in_place(&mut g, bit);
                let hi = full & !((1u64 << (bit + 1)) - 1);
                for s in BitSubset::all(n) {
                    let mut expect = Count::from(0);
                    for r in s.subsets() {
                        if r.mask() & hi == s.mask() & hi {
                            expect += f.get(&r);
                        }
                    }
                    assert_eq!(g.get(&s), &expect, "n={n} bit={bit} s={s}");
                }
            }
        }
    }

    // Frozen round-by-round tables on the paw-graph indicator, rounds 1
    // and 2 (independently checkable via the round-intermediate law).
    #[test]
    fn round_intermediates_on_example_graph() {
        let mut g = indep_indicator(&paw());
        zeta_round_in_place(&mut g, 0);
        let g1_expect: Vec<i64> = vec![0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0];
        assert_eq!(
            g.values().to_vec(),
            g1_expect.into_iter().map(Count::from).collect::<Vec<_>>()
        );
        zeta_round_in_place(&mut g, 1);
        let g2_expect: Vec<i64> = vec![0, 1, 1, 2, 1, 1, 1, 1, 1, 1, 2, 2, 1, 1, 1, 1];
        assert_eq!(
            g.values().to_vec(),
            g2_expect.into_iter().map(Count::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn linearity_of_zeta() {
        let mut rng = SplitMix64::new(11);
        let f = random_table(7, &mut rng);
        let g = random_table(7, &mut rng);
        let a = Count::from(rng.next_below(100) as i64);
        let b = Count::from(rng.next_below(100) as i64);
        let combo = SetFunction::from_fn(7, |s| {
            a.clone() * f.get(&s) + b.clone() * g.get(&s)
        })
        .unwrap();
        let lhs = zeta_yates(&combo);
        let fz = zeta_yates(&f);
        let gz = zeta_yates(&g);
        let rhs = SetFunction::from_fn(7, |s| {
            a.clone() * fz.get(&s) + b.clone() * gz.get(&s)
        })
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pointwise_pow_examples() {
        let fz = zeta_yates(&indep_indicator(&paw()));
        let sq = pointwise_pow(&fz, 2).unwrap();
        assert_eq!(sq.get_mask(0b1010), &Count::from(9)); // {B,D}
        assert_eq!(pointwise_pow(&fz, 1).unwrap(), fz);
        let ones = SetFunction::<Count>::from_fn(4, |_| Count::from(1)).unwrap();
        assert_eq!(pointwise_pow(&ones, 17).unwrap(), ones);
        assert!(pointwise_pow(&fz, 0).is_err());
    }

    // Frozen covering tables on the paw graph: (f zeta)^2 mu and
    // (f zeta)^3 mu, verified against direct cover enumeration.
    #[test]
    fn power_then_mobius_panels() {
        let fz = zeta_yates(&indep_indicator(&paw()));
        let two = mobius_yates(&pointwise_pow(&fz, 2).unwrap());
        let expect2: Vec<i64> = vec![0, 1, 1, 2, 1, 2, 2, 0, 1, 2, 7, 2, 7, 2, 6, 0];
        assert_eq!(
            two.values().to_vec(),
            expect2.into_iter().map(Count::from).collect::<Vec<_>>()
        );
        assert_eq!(two.at_full(), &Count::from(0));

        let three = mobius_yates(&pointwise_pow(&fz, 3).unwrap());
        let expect3: Vec<i64> = vec![0, 1, 1, 6, 1, 6, 6, 6, 1, 6, 25, 24, 25, 24, 66, 18];
        assert_eq!(
            three.values().to_vec(),
            expect3.into_iter().map(Count::from).collect::<Vec<_>>()
        );
        assert_eq!(three.at_full(), &Count::from(18));
    }

    // In characteristic 2 the Möbius signs vanish, so zeta and Möbius are
    // the same transform and applying zeta twice is the identity.
    #[test]
    fn gf16_ring_instantiates_with_zeta_equal_mobius() {
        use crate::gf16::GF16;
        let mut rng = SplitMix64::new(2222);
        for n in [0usize, 1, 4, 8] {
            let f = SetFunction::from_fn(n, |_| GF16(rng.next_u64() as u16)).unwrap();
            let fz = zeta_yates(&f);
            assert_eq!(fz, mobius_yates(&f));
            assert_eq!(zeta_yates(&fz), f, "zeta is an involution in GF(2^16)");
            assert_eq!(fz, zeta_naive(&f).unwrap());
        }
    }

    // The ring is a parameter: the transforms also run over a fixed-width
    // integer carrier, producing identical tables.
    #[test]
    fn checked128_ring_agrees_with_bigint() {
        let mut rng = SplitMix64::new(5);
        let f_big = random_table(9, &mut rng);
        let f_128 = SetFunction::from_fn(9, |s| {
            Checked128(f_big.get(&s).to_string().parse().unwrap())
        })
        .unwrap();
        let z_big = zeta_yates(&f_big);
        let z_128 = zeta_yates(&f_128);
        for m in 0..f_big.len() as u64 {
            assert_eq!(z_big.get_mask(m).to_string(), z_128.get_mask(m).to_string());
        }
    }
}
