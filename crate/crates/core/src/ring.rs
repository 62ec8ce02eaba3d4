//! The ring abstraction behind every table and sieve, plus the two integer
//! carriers: arbitrary-precision [`Count`] (the default) and the fixed-width
//! [`Checked128`] speed mode that aborts on overflow instead of wrapping.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub, SubAssign};

use num_traits::{One, Zero};

/// Arbitrary-precision signed integer, the default carrier for all exact
/// counts. Signed because sieve intermediates alternate in sign; final
/// answers are checked nonnegative by the operations that produce them.
pub type Count = num_bigint::BigInt;

/// Commutative ring with subtraction, as required by the zeta/Möbius
/// transforms and the alternating sums. Implemented by [`Count`],
/// [`Checked128`], and `GF16`.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Sub<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Sub<Output = Self>
        + for<'a> AddAssign<&'a Self>
        + for<'a> SubAssign<&'a Self>
        + for<'a> MulAssign<&'a Self>
{
}

/// Ordered integer ring used by the counting operations proper (as opposed to
/// the transforms, which also run over GF(2^16)).
pub trait CountRing: Ring + PartialOrd + From<u64> + fmt::Display {}

impl<T> CountRing for T where T: Ring + PartialOrd + From<u64> + fmt::Display {}

/// `base^exp` by binary exponentiation; `exp = 0` gives `one()`.
pub fn ring_pow<R: Ring>(base: &R, mut exp: u64) -> R {
    let mut result = R::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            let s = sq.clone();
            sq *= &s;
        }
    }
    result
}

/// 128-bit signed integer that panics on overflow. Exists purely as a faster
/// drop-in for [`Count`] on instances known to stay within 128 bits; it never
/// wraps silently.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct Checked128(pub i128);

impl Checked128 {
    #[inline]
    fn checked(v: Option<i128>, op: &str) -> Self {
        match v {
            Some(x) => Checked128(x),
            None => panic!("i128 overflow in {op}; rerun with the arbitrary-precision ring"),
        }
    }
}

impl Add for Checked128 {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::checked(self.0.checked_add(rhs.0), "add")
    }
}

impl Sub for Checked128 {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::checked(self.0.checked_sub(rhs.0), "sub")
    }
}

impl Mul for Checked128 {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Self::checked(self.0.checked_mul(rhs.0), "mul")
    }
}

impl AddAssign<&Checked128> for Checked128 {
    #[inline]
    fn add_assign(&mut self, rhs: &Self) {
        *self = *self + *rhs;
    }
}

impl SubAssign<&Checked128> for Checked128 {
    #[inline]
    fn sub_assign(&mut self, rhs: &Self) {
        *self = *self - *rhs;
    }
}

impl MulAssign<&Checked128> for Checked128 {
    #[inline]
    fn mul_assign(&mut self, rhs: &Self) {
        *self = *self * *rhs;
    }
}

impl Zero for Checked128 {
    #[inline]
    fn zero() -> Self {
        Checked128(0)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Checked128 {
    #[inline]
    fn one() -> Self {
        Checked128(1)
    }
}

impl From<u64> for Checked128 {
    #[inline]
    fn from(v: u64) -> Self {
        Checked128(v as i128)
    }
}

impl fmt::Display for Checked128 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_basics() {
        let two = Count::from(2);
        assert_eq!(ring_pow(&two, 0), Count::from(1));
        assert_eq!(ring_pow(&two, 10), Count::from(1024));
        assert_eq!(ring_pow(&Checked128(3), 4), Checked128(81));
    }

    #[test]
    fn checked_arithmetic() {
        let a = Checked128(i128::MAX / 2);
        assert_eq!(a + Checked128(1), Checked128(i128::MAX / 2 + 1));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn checked_mul_overflows_loudly() {
        let a = Checked128(1i128 << 100);
        let _ = a * a;
    }
}
