//! The alternating-sum primitives every problem module reduces to: the
//! sandwich identity over an interval of the subset lattice, and the generic
//! complement-of-union sieve over intersection sizes.

use crate::error::{Error, Result};
use crate::ring::{Count, Ring};
use crate::subset::BitSubset;

/// Direct enumeration of `sum over r subseteq S subseteq t of (-1)^{|t \ S|}`.
///
/// Equals 1 iff `r == t` and 0 otherwise; kept as an executable witness of
/// the identity the sieves rely on. Cost 2^{|t \ r|}.
pub fn pie_sum(r: &BitSubset, t: &BitSubset) -> Result<Count> {
    if !r.is_subset_of(t) {
        return Err(Error::invalid(format!(
            "pie_sum requires r subseteq t over the same ground set (r={r}, t={t})"
        )));
    }
    let free = t.difference(r);
    let t_len = t.len();
    let mut acc = Count::from(0);
    for extra in free.subsets() {
        let s_len = r.len() + extra.len();
        if (t_len - s_len).is_multiple_of(2) {
            acc += 1;
        } else {
            acc -= 1;
        }
    }
    Ok(acc)
}

/// Generic inclusion-exclusion driver: given `a(X) = |intersection of A_i
/// for i in X|` (with `a(empty)` the universe size), returns the number of
/// elements avoiding every `A_i`, i.e. `sum over X of (-1)^{|X|} a(X)`.
///
/// Callback failures propagate unchanged.
pub fn sieve_complement_of_union<R, E>(
    n: usize,
    mut intersection_size: impl FnMut(BitSubset) -> std::result::Result<R, E>,
) -> std::result::Result<R, E>
where
    R: Ring,
{
    let mut acc = R::zero();
    for x in BitSubset::all(n) {
        let term = intersection_size(x)?;
        if x.len() % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn sub(n: usize, mask: u64) -> BitSubset {
        BitSubset::new(n, mask).unwrap()
    }

    #[test]
    fn sandwich_identity_examples() {
        // r={0} inside t={0,1,2}: as many odd- as even-sized sandwiched sets.
        assert_eq!(pie_sum(&sub(3, 0b001), &sub(3, 0b111)).unwrap(), Count::from(0));
        // r == t: exactly one sandwiched set.
        assert_eq!(pie_sum(&sub(2, 0b11), &sub(2, 0b11)).unwrap(), Count::from(1));
        // empty interval on the empty ground set.
        assert_eq!(pie_sum(&sub(0, 0), &sub(0, 0)).unwrap(), Count::from(1));
    }

    #[test]
    fn sandwich_identity_exhaustive_up_to_n6() {
        for n in 0..=6usize {
            for t in BitSubset::all(n) {
                for r in t.subsets() {
                    let expect = Count::from(i32::from(r == t));
                    assert_eq!(pie_sum(&r, &t).unwrap(), expect, "r={r} t={t}");
                }
            }
        }
    }

    #[test]
    fn rejects_non_subset() {
        let err = pie_sum(&sub(3, 0b100), &sub(3, 0b011)).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        // Mismatched ground sets are also rejected.
        assert!(pie_sum(&sub(2, 0b01), &sub(3, 0b011)).is_err());
    }

    #[test]
    fn complement_of_union_examples() {
        // One set of size 2 in a universe of 5.
        let counts = [5u64, 2u64];
        let got: Count = sieve_complement_of_union(1, |x| {
            Ok::<_, Error>(Count::from(counts[x.mask() as usize]))
        })
        .unwrap();
        assert_eq!(got, Count::from(3));

        // Empty family: everything is zero.
        let got: Count =
            sieve_complement_of_union(2, |_| Ok::<_, Error>(Count::from(0))).unwrap();
        assert_eq!(got, Count::from(0));
    }

    #[test]
    fn complement_of_union_matches_direct_count() {
        // Explicit family over universe {0..7}: A_0={0,1,2}, A_1={2,3}, A_2={5}.
        let family = [0b0000_0111u32, 0b0000_1100, 0b0010_0000];
        let universe = 0b1111_1111u32;
        let direct = (0..8).filter(|&e| family.iter().all(|a| a >> e & 1 == 0)).count();
        let got: Count = sieve_complement_of_union(3, |x| {
            let mut inter = universe;
            for i in x.elements() {
                inter &= family[i];
            }
            Ok::<_, Error>(Count::from(u64::from(inter.count_ones())))
        })
        .unwrap();
        assert_eq!(got, Count::from(direct as u64));
    }

    #[test]
    fn callback_errors_propagate() {
        let res: std::result::Result<Count, &str> =
            sieve_complement_of_union(2, |x| if x.len() == 2 { Err("boom") } else { Ok(Count::from(1)) });
        assert_eq!(res, Err("boom"));
    }
}
