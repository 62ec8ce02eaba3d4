//! Square 0/1 matrices, the biadjacency input of the permanent. Rows are
//! stored as bitmasks so that row sums over a column subset are a single
//! popcount.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{content_lines, last_line, parse_field};
use crate::subset::GROUND_SET_MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix01 {
    n: usize,
    rows: Vec<u64>,
}

impl Matrix01 {
    /// Builds from explicit 0/1 entries; rejects anything else.
    pub fn from_rows(entries: &[Vec<u8>]) -> Result<Self> {
        let n = entries.len();
        if n > GROUND_SET_MAX {
            return Err(Error::invalid(format!(
                "dimension {n} exceeds the maximum of {GROUND_SET_MAX}"
            )));
        }
        let mut rows = Vec::with_capacity(n);
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let mut bits = 0u64;
            for (j, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 => bits |= 1 << j,
                    _ => {
                        return Err(Error::invalid(format!(
                            "entry ({i},{j}) is {e}, expected 0 or 1"
                        )))
                    }
                }
            }
            rows.push(bits);
        }
        Ok(Matrix01 { n, rows })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_rows(
            &(0..n)
                .map(|i| (0..n).map(|j| u8::from(i == j)).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::from_rows(&vec![vec![1u8; n]; n])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> j & 1) as u8
    }

    /// Row `i` as a bitmask over columns.
    #[inline]
    pub fn row_mask(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Number of ones of row `i` within the column subset `cols`.
    #[inline]
    pub fn row_sum_in(&self, i: usize, cols: u64) -> u32 {
        (self.rows[i] & cols).count_ones()
    }

    /// Parses the matrix file format: header `n`, then `n` lines of `n`
    /// whitespace-separated entries in {0,1}.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (header_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line \"n\""))?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), header_no, "dimension")?;
        if it.next().is_some() {
            return Err(Error::parse(header_no, "header must be exactly \"n\""));
        }
        if n > GROUND_SET_MAX {
            return Err(Error::parse(
                header_no,
                format!("dimension {n} exceeds the maximum of {GROUND_SET_MAX}"),
            ));
        }
        let mut rows = Vec::with_capacity(n);
        for (line_no, line) in lines {
            if rows.len() == n {
                return Err(Error::parse(line_no, format!("more than {n} matrix rows")));
            }
            let mut bits = 0u64;
            let mut count = 0usize;
            for tok in line.split_whitespace() {
                if count == n {
                    return Err(Error::parse(line_no, format!("row has more than {n} entries")));
                }
                match tok {
                    "0" => {}
                    "1" => bits |= 1 << count,
                    _ => {
                        return Err(Error::parse(
                            line_no,
                            format!("entry {tok:?} is not 0 or 1"),
                        ))
                    }
                }
                count += 1;
            }
            if count != n {
                return Err(Error::parse(
                    line_no,
                    format!("row has {count} entries, expected {n}"),
                ));
            }
            rows.push(bits);
        }
        if rows.len() != n {
            return Err(Error::parse(
                last_line(text),
                format!("expected {n} rows, found {}", rows.len()),
            ));
        }
        Ok(Matrix01 { n, rows })
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn matrix3() -> Matrix01 {
        Matrix01::from_rows(&[vec![1, 1, 1], vec![1, 1, 0], vec![0, 1, 1]]).unwrap()
    }

    #[test]
    fn parse_and_roundtrip() {
        let m = Matrix01::parse("3\n1 1 1\n1 1 0\n0 1 1\n").unwrap();
        assert_eq!(m, matrix3());
        assert_eq!(Matrix01::parse(&m.to_file_string()).unwrap(), m);
        assert_eq!(m.row_sum_in(0, 0b111), 3);
        assert_eq!(m.row_sum_in(2, 0b011), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Matrix01::parse("2\n0 2\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Matrix01::parse("2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Matrix01::parse("2\n0 1 1\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn zero_dim_matrix() {
        let m = Matrix01::parse("0\n").unwrap();
        assert_eq!(m.dim(), 0);
    }
}
