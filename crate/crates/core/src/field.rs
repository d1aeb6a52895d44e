//! Coefficient rings and fields.
//!
//! All exact linear algebra in this crate is generic over [`Field`]; the
//! diagram-algebra engines only need [`Ring`]. Three concrete scalar types
//! implement these traits: [`Rational`] (ℚ), [`crate::ScalarQ`] (ℚ(q)) and
//! [`Fp61`] (the prime field of order 2⁶¹ − 1, used for modular screening
//! and rank lower bounds).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational numbers.
pub type Rational = BigRational;

/// A commutative ring with unit, with by-reference helpers used in hot loops.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.mul_ref(b);
        *self = self.add_ref(&t);
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = -a.mul_ref(b);
        *self = self.add_ref(&t);
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv().expect("division by zero"))
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The Mersenne prime 2⁶¹ − 1.
pub const P61: u64 = (1u64 << 61) - 1;
/// Auxiliary primes below 2⁶² for multi-modular reconstruction.
pub const P62A: u64 = (1u64 << 62) - 57;
pub const P62B: u64 = (1u64 << 62) - 87;

/// Element of the prime field 𝔽ₚ for a prime p < 2⁶³.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// 𝔽ₚ with p = 2⁶¹ − 1, the default screening field.
pub type Fp61 = Fp<P61>;

impl<const P: u64> Fp<P> {
    pub const MODULUS: u64 = P;

    pub const fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    fn reduce128(x: u128) -> u64 {
        if P == P61 {
            let lo = (x as u64) & P61;
            let hi = (x >> 61) as u64;
            let mut s = lo + (hi & P61) + (hi >> 61);
            while s >= P61 {
                s -= P61;
            }
            s
        } else {
            (x % P as u128) as u64
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let m = n.mod_floor(&BigInt::from(P));
        Fp(m.to_u64().expect("residue fits in u64"))
    }

    /// Reduction of a rational number; `None` when p divides the denominator.
    pub fn from_rational(x: &Rational) -> Option<Self> {
        let d = Self::from_bigint(x.denom());
        if d.0 == 0 {
            return None;
        }
        Some(Self::from_bigint(x.numer()) * d.inv().unwrap())
    }

    pub fn pow_u64(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Symmetric lift to (−p/2, p/2].
    pub fn to_signed(self) -> BigInt {
        if self.0 > P / 2 {
            BigInt::from(self.0) - BigInt::from(P)
        } else {
            BigInt::from(self.0)
        }
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Fp(Self::reduce128(self.0 as u128 * o.0 as u128))
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u64> Ring for Fp<P> {
    fn from_i64(n: i64) -> Self {
        if n >= 0 {
            Fp::new(n as u64)
        } else {
            -Fp::new(n.unsigned_abs())
        }
    }

    #[inline]
    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }

    #[inline]
    fn add_ref(&self, other: &Self) -> Self {
        *self + *other
    }

    #[inline]
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self + *a * *b;
    }

    #[inline]
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self - *a * *b;
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow_u64(P - 2))
        }
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn rational_sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp61_inverse_and_reduction() {
        let a = Fp61::from_i64(-7);
        assert_eq!(a * a.inv().unwrap(), Fp61::one());
        let x = rat(3, 4);
        let r = Fp61::from_rational(&x).unwrap();
        assert_eq!(r * Fp61::from_i64(4), Fp61::from_i64(3));
        assert_eq!(Fp61::new(P61), Fp61::zero());
        let big = Fp61::new(P61 - 1);
        assert_eq!(big * big, Fp61::one());
    }

    fn miller_rabin(n: u64) -> bool {
        let mulmod = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
        let powmod = |mut b: u64, mut e: u64| {
            let mut acc = 1u64;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(acc, b);
                }
                b = mulmod(b, b);
                e >>= 1;
            }
            acc
        };
        let (mut d, mut s) = (n - 1, 0);
        while d % 2 == 0 {
            d /= 2;
            s += 1;
        }
        [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37].iter().all(|&a| {
            let mut x = powmod(a, d);
            if x == 1 || x == n - 1 {
                return true;
            }
            for _ in 1..s {
                x = mulmod(x, x);
                if x == n - 1 {
                    return true;
                }
            }
            false
        })
    }

    #[test]
    fn moduli_are_prime() {
        for p in [P61, P62A, P62B] {
            assert!(miller_rabin(p), "{p}");
        }
        let a = Fp::<P62A>::from_i64(-5);
        assert_eq!(a * a.inv().unwrap(), Fp::one());
    }

    #[test]
    fn ring_pow() {
        assert_eq!(Ring::pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(Ring::pow(&Fp61::from_i64(3), 4), Fp61::from_i64(81));
    }
}
