//! GF(2^16) with modulus x^16 + x^5 + x^3 + x + 1.
//!
//! Addition is XOR; multiplication is carry-less polynomial multiplication
//! reduced modulo the fixed modulus. A log/antilog table pair built from
//! that definition backs the hot path. Building the tables first verifies,
//! once, that the modulus really has no divisor of degree 1..=8 over GF(2);
//! the field refuses to operate otherwise.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub, SubAssign};
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The modulus polynomial, bits 16, 5, 3, 1, 0.
pub const MODULUS: u32 = 0x1002B;

const ORDER: usize = (1 << 16) - 1;

/// An element of GF(2^16).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GF16(pub u16);

/// Carry-less product of two field elements, reduced modulo [`MODULUS`].
/// This is the defining multiplication; [`GF16::mul`] routes through tables
/// derived from it.
pub fn mul_clmul(a: GF16, b: GF16) -> GF16 {
    let mut acc: u32 = 0;
    let a32 = a.0 as u32;
    for i in 0..16 {
        if b.0 >> i & 1 == 1 {
            acc ^= a32 << i;
        }
    }
    for bit in (16..32).rev() {
        if acc >> bit & 1 == 1 {
            acc ^= MODULUS << (bit - 16);
        }
    }
    GF16(acc as u16)
}

fn poly_degree(p: u32) -> u32 {
    31 - p.leading_zeros()
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Exhaustively checks that the modulus has no divisor of degree 1..=8 over
/// GF(2). A degree-16 polynomial with a proper factorization has a factor of
/// degree at most 8, so this establishes irreducibility.
pub fn modulus_is_irreducible() -> bool {
    (2u32..1 << 9).all(|d| poly_rem(MODULUS, d) != 0)
}

struct Tables {
    exp: Vec<u16>, // exp[i] = generator^i, i in 0..2*ORDER for wrap-free lookup
    log: Vec<u16>, // log[a] for a != 0
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        assert!(
            modulus_is_irreducible(),
            "GF(2^16) modulus {MODULUS:#x} failed the irreducibility check"
        );
        // Find a generator of the multiplicative group by direct order test.
        let mut exp = vec![0u16; 2 * ORDER];
        let mut log = vec![0u16; 1 << 16];
        'candidates: for g in 2u16.. {
            let mut value = GF16(1);
            for (i, slot) in exp.iter_mut().take(ORDER).enumerate() {
                *slot = value.0;
                if value.0 == 1 && i > 0 {
                    continue 'candidates; // order of g divides i < ORDER
                }
                value = mul_clmul(value, GF16(g));
            }
            if value.0 != 1 {
                continue; // should not happen: order must divide ORDER
            }
            for i in 0..ORDER {
                exp[ORDER + i] = exp[i];
                log[exp[i] as usize] = i as u16;
            }
            return Tables { exp, log };
        }
        unreachable!("GF(2^16)* is cyclic, a generator exists")
    })
}

impl GF16 {
    pub const ZERO: GF16 = GF16(0);
    pub const ONE: GF16 = GF16(1);

    #[inline]
    pub fn raw(self) -> u16 {
        self.0
    }

    /// `self^exp` by square-and-multiply.
    pub fn pow(self, mut exp: u32) -> GF16 {
        let mut result = GF16::ONE;
        let mut sq = self;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * sq;
            }
            sq = sq * sq;
            exp >>= 1;
        }
        result
    }

    /// Multiplicative inverse via exponentiation to 2^16 - 2; zero is
    /// rejected.
    pub fn inv(self) -> Result<GF16> {
        if self.0 == 0 {
            return Err(Error::invalid("zero has no multiplicative inverse"));
        }
        Ok(self.pow((1 << 16) - 2))
    }
}

// Addition in characteristic 2 is XOR; the clippy suspicion does not apply.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for GF16 {
    type Output = GF16;
    #[inline]
    fn add(self, rhs: GF16) -> GF16 {
        GF16(self.0 ^ rhs.0)
    }
}

/// Characteristic 2: subtraction is addition.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for GF16 {
    type Output = GF16;
    #[inline]
    fn sub(self, rhs: GF16) -> GF16 {
        self + rhs
    }
}

impl Mul for GF16 {
    type Output = GF16;
    #[inline]
    fn mul(self, rhs: GF16) -> GF16 {
        if self.0 == 0 || rhs.0 == 0 {
            return GF16(0);
        }
        let t = tables();
        let idx = t.log[self.0 as usize] as usize + t.log[rhs.0 as usize] as usize;
        GF16(t.exp[idx])
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign<&GF16> for GF16 {
    #[inline]
    fn add_assign(&mut self, rhs: &GF16) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl SubAssign<&GF16> for GF16 {
    #[inline]
    fn sub_assign(&mut self, rhs: &GF16) {
        self.0 ^= rhs.0;
    }
}

impl MulAssign<&GF16> for GF16 {
    #[inline]
    fn mul_assign(&mut self, rhs: &GF16) {
        *self = *self * *rhs;
    }
}

impl Zero for GF16 {
    #[inline]
    fn zero() -> Self {
        GF16(0)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for GF16 {
    #[inline]
    fn one() -> Self {
        GF16(1)
    }
}

impl fmt::Debug for GF16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF16({:#06x})", self.0)
    }
}

impl fmt::Display for GF16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#06x}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn modulus_check_passes() {
        assert!(modulus_is_irreducible());
    }

    #[test]
    fn small_products() {
        // x * x = x^2, no reduction triggered.
        assert_eq!(mul_clmul(GF16(2), GF16(2)), GF16(4));
        assert_eq!(GF16(2) * GF16(2), GF16(4));
        // Reference products computed independently from the definition.
        assert_eq!(GF16(0x1234) * GF16(0x5678), GF16(0x19a7));
        assert_eq!(GF16(0xFFFF) * GF16(0xFFFF), GF16(0xabfa));
    }

    #[test]
    fn table_mul_matches_clmul() {
        let mut rng = SplitMix64::new(161616);
        for _ in 0..200_000 {
            let a = GF16(rng.next_u64() as u16);
            let b = GF16(rng.next_u64() as u16);
            assert_eq!(a * b, mul_clmul(a, b), "a={a:?} b={b:?}");
        }
    }

    #[test]
    fn one_is_identity_exhaustive() {
        for v in 0..=u16::MAX {
            assert_eq!(GF16(v) * GF16::ONE, GF16(v));
            assert_eq!(GF16(v) + GF16::ZERO, GF16(v));
        }
    }

    #[test]
    fn inverses() {
        assert!(GF16::ZERO.inv().is_err());
        // Spot checks; the acceptance suite verifies all 2^16 - 1.
        for v in [1u16, 2, 3, 0x1234, 0xFFFF, 0x8000] {
            let a = GF16(v);
            assert_eq!(a * a.inv().unwrap(), GF16::ONE);
        }
        assert_eq!(GF16(3).inv().unwrap(), GF16(0xffe6));
    }

    #[test]
    fn field_laws_on_random_triples() {
        let mut rng = SplitMix64::new(314159);
        for _ in 0..100_000 {
            let a = GF16(rng.next_u64() as u16);
            let b = GF16(rng.next_u64() as u16);
            let c = GF16(rng.next_u64() as u16);
            assert_eq!(a * b, b * a);
            assert_eq!((a * b) * c, a * (b * c));
            assert_eq!(a * (b + c), a * b + a * c);
            // Frobenius in characteristic 2.
            let s = a + b;
            assert_eq!(s * s, a * a + b * b);
        }
    }
}
