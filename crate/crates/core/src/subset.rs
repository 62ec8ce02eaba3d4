//! Subsets of a ground set of at most 63 elements, packed into one machine
//! word. This is the universal index type: every table, sieve, and transform
//! in the crate ranges over these.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground-set size (one `u64` word, sign bit unused).
pub const GROUND_SET_MAX: usize = 63;

/// A subset of `{0, .., n-1}` as a bitmask. Invariant: no bits at or above
/// position `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitSubset {
    mask: u64,
    n: u8,
}

impl BitSubset {
    /// Builds a subset from a raw mask, validating the invariants.
    pub fn new(n: usize, mask: u64) -> Result<Self> {
        if n > GROUND_SET_MAX {
            return Err(Error::invalid(format!(
                "ground set size {n} exceeds the maximum of {GROUND_SET_MAX}"
            )));
        }
        if n < 64 && mask >> n != 0 {
            return Err(Error::invalid(format!(
                "mask {mask:#x} has bits outside the ground set of size {n}"
            )));
        }
        Ok(BitSubset { mask, n: n as u8 })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, 0).expect("ground set too large")
    }

    pub fn full(n: usize) -> Self {
        let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Self::new(n, mask).expect("ground set too large")
    }

    pub fn singleton(n: usize, element: usize) -> Self {
        assert!(element < n, "element {element} outside ground set of size {n}");
        Self::new(n, 1 << element).unwrap()
    }

    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &e in elements {
            if e >= n {
                return Err(Error::invalid(format!(
                    "element {e} outside ground set of size {n}"
                )));
            }
            mask |= 1 << e;
        }
        Self::new(n, mask)
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.mask.count_ones()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        element < self.n as usize && self.mask >> element & 1 == 1
    }

    #[inline]
    pub fn is_subset_of(&self, other: &BitSubset) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    #[inline]
    pub fn union(&self, other: &BitSubset) -> BitSubset {
        debug_assert_eq!(self.n, other.n);
        BitSubset { mask: self.mask | other.mask, n: self.n }
    }

    #[inline]
    pub fn intersection(&self, other: &BitSubset) -> BitSubset {
        debug_assert_eq!(self.n, other.n);
        BitSubset { mask: self.mask & other.mask, n: self.n }
    }

    #[inline]
    pub fn difference(&self, other: &BitSubset) -> BitSubset {
        debug_assert_eq!(self.n, other.n);
        BitSubset { mask: self.mask & !other.mask, n: self.n }
    }

    #[inline]
    pub fn symmetric_difference(&self, other: &BitSubset) -> BitSubset {
        debug_assert_eq!(self.n, other.n);
        BitSubset { mask: self.mask ^ other.mask, n: self.n }
    }

    /// Complement within the ground set.
    #[inline]
    pub fn complement(&self) -> BitSubset {
        BitSubset {
            mask: !self.mask & Self::full(self.n as usize).mask,
            n: self.n,
        }
    }

    pub fn insert(&mut self, element: usize) {
        assert!(element < self.n as usize);
        self.mask |= 1 << element;
    }

    pub fn remove(&mut self, element: usize) {
        assert!(element < self.n as usize);
        self.mask &= !(1 << element);
    }

    /// Iterates over the elements in increasing order.
    pub fn elements(&self) -> Elements {
        Elements { mask: self.mask }
    }

    /// Iterates over all `2^len` subsets of this set, in increasing mask
    /// order.
    pub fn subsets(&self) -> Subsets {
        Subsets {
            of: self.mask,
            cur: 0,
            n: self.n,
            done: false,
        }
    }

    /// Iterates over all `2^n` subsets of a ground set of size `n`, in
    /// increasing mask order.
    pub fn all(n: usize) -> Subsets {
        BitSubset::full(n).subsets()
    }
}

impl fmt::Debug for BitSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSubset({self})")
    }
}

impl fmt::Display for BitSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Iterator over the element indices of a subset.
pub struct Elements {
    mask: u64,
}

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.mask == 0 {
            return None;
        }
        let e = self.mask.trailing_zeros() as usize;
        self.mask &= self.mask - 1;
        Some(e)
    }
}

/// Iterator over all submasks of a mask, ascending. Uses the identity that
/// `(cur - of) & of` steps to the next submask in increasing order.
pub struct Subsets {
    of: u64,
    cur: u64,
    n: u8,
    done: bool,
}

impl Iterator for Subsets {
    type Item = BitSubset;

    #[inline]
    fn next(&mut self) -> Option<BitSubset> {
        if self.done {
            return None;
        }
        let out = BitSubset { mask: self.cur, n: self.n };
        if self.cur == self.of {
            self.done = true;
        } else {
            self.cur = self.cur.wrapping_sub(self.of) & self.of;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_enforced() {
        assert!(BitSubset::new(3, 0b1000).is_err());
        assert!(BitSubset::new(64, 0).is_err());
        assert!(BitSubset::new(63, u64::MAX >> 1).is_ok());
        assert!(BitSubset::new(0, 0).is_ok());
    }

    #[test]
    fn subset_enumeration_visits_each_once_ascending() {
        for n in 0..=6usize {
            for base in BitSubset::all(n) {
                let subs: Vec<u64> = base.subsets().map(|s| s.mask()).collect();
                assert_eq!(subs.len(), 1 << base.len());
                let mut sorted = subs.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(subs, sorted, "ascending and duplicate-free");
                assert!(subs.iter().all(|&m| m & !base.mask() == 0));
            }
        }
    }

    #[test]
    fn elements_and_ops() {
        let s = BitSubset::from_elements(6, &[0, 2, 5]).unwrap();
        assert_eq!(s.elements().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "{0,2,5}");
        let t = BitSubset::from_elements(6, &[2, 3]).unwrap();
        assert_eq!(s.intersection(&t).elements().collect::<Vec<_>>(), vec![2]);
        assert_eq!(s.union(&t).len(), 4);
        assert_eq!(s.symmetric_difference(&t).elements().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert!(BitSubset::from_elements(6, &[0]).unwrap().is_subset_of(&s));
        assert!(!t.is_subset_of(&s));
        assert_eq!(s.complement().elements().collect::<Vec<_>>(), vec![1, 3, 4]);
    }

    #[test]
    fn from_elements_rejects_out_of_range() {
        assert!(BitSubset::from_elements(3, &[3]).is_err());
    }
}
