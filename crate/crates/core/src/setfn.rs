//! Dense set functions: one ring value per subset of the ground set, indexed
//! by bitmask. The carrier of the zeta and Möbius transforms.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::atomic::{AtomicU8, Ordering};

use crate::error::{Error, Result};
use crate::graph::content_lines;
use crate::ring::{Count, Ring};
use crate::subset::BitSubset;

/// Default cap on the ground-set size of dense tables (2^26 entries).
pub const DEFAULT_TABLE_CAP: u8 = 26;

static TABLE_CAP: AtomicU8 = AtomicU8::new(DEFAULT_TABLE_CAP);

/// Current cap on the ground-set size of dense 2^n tables.
pub fn table_cap() -> usize {
    TABLE_CAP.load(Ordering::Relaxed) as usize
}

/// Adjusts the dense-table cap (bounds memory use at 2^cap entries).
pub fn set_table_cap(cap: u8) {
    assert!(cap as usize <= crate::subset::GROUND_SET_MAX);
    TABLE_CAP.store(cap, Ordering::Relaxed);
}

fn check_cap(n: usize) -> Result<()> {
    if n > table_cap() {
        return Err(Error::cap(format!(
            "set function on {n} elements needs a 2^{n}-entry table (cap {})",
            table_cap()
        )));
    }
    Ok(())
}

/// A function from subsets of `{0,..,n-1}` into a ring, stored densely in
/// increasing mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunction<R> {
    n: usize,
    values: Vec<R>,
}

impl<R: Ring> SetFunction<R> {
    pub fn new(n: usize, values: Vec<R>) -> Result<Self> {
        check_cap(n)?;
        if values.len() != 1usize << n {
            return Err(Error::invalid(format!(
                "set function on {n} elements needs {} values, got {}",
                1usize << n,
                values.len()
            )));
        }
        Ok(SetFunction { n, values })
    }

    pub fn zeroed(n: usize) -> Result<Self> {
        check_cap(n)?;
        Ok(SetFunction { n, values: vec![R::zero(); 1 << n] })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(BitSubset) -> R) -> Result<Self> {
        check_cap(n)?;
        let values = (0..1u64 << n)
            .map(|m| f(BitSubset::new(n, m).unwrap()))
            .collect();
        Ok(SetFunction { n, values })
    }

    /// The indicator of `pred`, i.e. 1 on subsets satisfying it, 0 elsewhere.
    pub fn indicator(n: usize, mut pred: impl FnMut(BitSubset) -> bool) -> Result<Self> {
        Self::from_fn(n, |s| if pred(s) { R::one() } else { R::zero() })
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false // always 2^n >= 1 entries
    }

    pub fn get(&self, s: &BitSubset) -> &R {
        assert_eq!(s.ground_size(), self.n, "ground-set size mismatch");
        &self.values[s.mask() as usize]
    }

    #[inline]
    pub fn get_mask(&self, mask: u64) -> &R {
        &self.values[mask as usize]
    }

    pub fn set_mask(&mut self, mask: u64, value: R) {
        self.values[mask as usize] = value;
    }

    #[inline]
    pub fn values(&self) -> &[R] {
        &self.values
    }

    #[inline]
    pub fn values_mut(&mut self) -> &mut [R] {
        &mut self.values
    }

    /// Value on the full ground set.
    pub fn at_full(&self) -> &R {
        &self.values[self.values.len() - 1]
    }
}

impl<R: Ring + std::fmt::Display> SetFunction<R> {
    /// Serializes in the set-function file format: header `n`, then 2^n
    /// values in increasing mask order.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for v in &self.values {
            let _ = writeln!(out, "{v}");
        }
        out
    }
}

/// Parses the set-function file format with exact integer values.
pub fn parse_setfn(text: &str) -> Result<SetFunction<Count>> {
    let mut header: Option<(usize, usize)> = None; // (n, line)
    let mut values: Vec<Count> = Vec::new();
    let mut last_seen_line = 1;
    for (line_no, line) in content_lines(text) {
        last_seen_line = line_no;
        for tok in line.split_whitespace() {
            match header {
                None => {
                    let n: usize = tok.parse().map_err(|_| {
                        Error::parse(line_no, format!("invalid ground-set size {tok:?}"))
                    })?;
                    check_cap(n)?;
                    header = Some((n, line_no));
                    values.reserve_exact(1 << n);
                }
                Some((n, _)) => {
                    if values.len() == 1 << n {
                        return Err(Error::parse(
                            line_no,
                            format!("more than 2^{n} values"),
                        ));
                    }
                    let v = Count::from_str(tok).map_err(|_| {
                        Error::parse(line_no, format!("invalid integer {tok:?}"))
                    })?;
                    values.push(v);
                }
            }
        }
    }
    let (n, _) = header.ok_or_else(|| Error::parse(1, "missing header line \"n\""))?;
    if values.len() != 1 << n {
        return Err(Error::parse(
            last_seen_line,
            format!("expected 2^{n} = {} values, found {}", 1usize << n, values.len()),
        ));
    }
    SetFunction::new(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_roundtrip() {
        let f = parse_setfn("2\n0 1\n1 3\n").unwrap();
        assert_eq!(f.ground_size(), 2);
        assert_eq!(f.get_mask(3), &Count::from(3));
        let again = parse_setfn(&f.to_file_string()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn parse_negative_and_errors() {
        let f = parse_setfn("1\n-5 7\n").unwrap();
        assert_eq!(f.get_mask(0), &Count::from(-5));

        match parse_setfn("2\n1 2 3\n") {
            Err(Error::Parse { line: 2, msg }) => assert!(msg.contains("found 3"), "{msg}"),
            other => panic!("expected count mismatch, got {other:?}"),
        }
        match parse_setfn("2\n1 2 3 4 5\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected too-many-values error, got {other:?}"),
        }
        assert!(parse_setfn("").is_err());
        assert!(parse_setfn("1\n1 x\n").is_err());
    }

    #[test]
    fn cap_enforced() {
        let n = table_cap() + 1;
        let text = format!("{n}\n");
        assert!(matches!(parse_setfn(&text), Err(Error::SizeCap { .. })));
        assert!(matches!(
            SetFunction::<Count>::zeroed(n),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn n_zero_is_a_single_entry() {
        let f = parse_setfn("0\n42\n").unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.at_full(), &Count::from(42));
    }
}
