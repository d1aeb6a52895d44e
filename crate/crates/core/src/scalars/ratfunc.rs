use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{poly_divrem, poly_gcd, LaurentPoly};
use super::ScalarError;
use crate::field::{Field, Fp61, Rational, Ring};

/// An element of ℚ(q) in canonical form.
///
/// `den` is an ordinary polynomial with nonzero constant term and leading
/// coefficient 1, coprime to `num`; all powers of q live in `num`. Two
/// values are equal as rational functions iff they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl ScalarQ {
    pub fn from_laurent(p: LaurentPoly) -> Self {
        ScalarQ { num: p, den: LaurentPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_laurent(LaurentPoly::q_pow(1))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// Builds `num / den`, normalizing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let k = den.low_exp();
        let (num, den) = (num.shift(-k), den.shift(-k));
        if den.is_constant() {
            let c = den.coeff(0).recip();
            return ScalarQ { num: num.scale(&c), den: LaurentPoly::one() };
        }
        let n_low = num.low_exp();
        let n_poly = num.dense_poly();
        let d_poly = den.dense_poly();
        let g = poly_gcd(&n_poly, &d_poly);
        let (n_poly, d_poly) = if g.len() > 1 {
            let (nq, nr) = poly_divrem(&n_poly, &g);
            let (dq, dr) = poly_divrem(&d_poly, &g);
            debug_assert!(nr.is_empty() && dr.is_empty());
            (nq, dq)
        } else {
            (n_poly, d_poly)
        };
        let lead = d_poly.last().unwrap().recip();
        let num = LaurentPoly::from_poly(n_poly).shift(n_low).scale(&lead);
        let den = LaurentPoly::from_poly(d_poly).scale(&lead);
        ScalarQ { num, den }
    }

    /// Balanced quantum integer [n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹).
    pub fn quantum_integer(n: u32) -> Self {
        let n = n as i32;
        Self::from_laurent(LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, Rational::one()))))
    }

    /// Exact evaluation at q = 1.
    pub fn specialize_q1(&self) -> Result<Rational, ScalarError> {
        let one = Rational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            return Err(ScalarError::PoleAtOne);
        }
        Ok(self.num.eval(&one) / d)
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, q: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(ScalarError::Pole(q.to_string()));
        }
        Ok(self.num.eval(q) / d)
    }

    /// Evaluation at q₀ ∈ 𝔽ₚ, `None` at a pole (or non-p-integral coefficient).
    pub fn eval_fp(&self, q: Fp61) -> Option<Fp61> {
        let d = self.den.eval_fp(q)?;
        let n = self.num.eval_fp(q)?;
        Some(n * d.inv()?)
    }

    fn add_impl(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -o.clone() } else { o.clone() };
        }
        let on = if negate { -o.num.clone() } else { o.num.clone() };
        if self.den == o.den {
            if self.den.is_one() {
                return ScalarQ { num: &self.num + &on, den: LaurentPoly::one() };
            }
            return Self::normalize(&self.num + &on, self.den.clone());
        }
        let num = &(&self.num * &o.den) + &(&on * &self.den);
        let den = &self.den * &o.den;
        Self::normalize(num, den)
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return ScalarQ { num: &self.num * &o.num, den: LaurentPoly::one() };
        }
        Self::normalize(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }
}

impl From<LaurentPoly> for ScalarQ {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl Zero for ScalarQ {
    fn zero() -> Self {
        ScalarQ { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for ScalarQ {
    fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }
}

impl Add for ScalarQ {
    type Output = ScalarQ;
    fn add(self, o: Self) -> Self {
        self.add_impl(&o, false)
    }
}

impl Sub for ScalarQ {
    type Output = ScalarQ;
    fn sub(self, o: Self) -> Self {
        self.add_impl(&o, true)
    }
}

impl Mul for ScalarQ {
    type Output = ScalarQ;
    fn mul(self, o: Self) -> Self {
        self.mul_impl(&o)
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> Self {
        ScalarQ { num: -self.num, den: self.den }
    }
}

impl Ring for ScalarQ {
    fn from_i64(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.mul_impl(b);
        *self = self.add_impl(&t, false);
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let t = a.mul_impl(b);
        *self = self.add_impl(&t, true);
    }
}

impl Field for ScalarQ {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

/// `(num) / (den)` with both parts in the `LaurentPoly` display format.
impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}", self)
        }
    }
}

impl std::str::FromStr for ScalarQ {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        let (n, d) = match s.split_once(") / (") {
            Some((n, d)) => (
                n.strip_prefix('(').ok_or_else(|| ScalarError::Parse(s.to_string()))?,
                d.strip_suffix(')').ok_or_else(|| ScalarError::Parse(s.to_string()))?,
            ),
            None => (s, "1*q^0"),
        };
        let num: LaurentPoly = n.parse().map_err(ScalarError::Parse)?;
        let den: LaurentPoly = d.parse().map_err(ScalarError::Parse)?;
        ScalarQ::new(num, den)
    }
}

impl serde::Serialize for ScalarQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn lp(t: &[(i32, i64)]) -> ScalarQ {
        ScalarQ::from_laurent(LaurentPoly::from_int_terms(t))
    }

    #[test]
    fn arithmetic_examples() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let b = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(a * b, lp(&[(2, 1), (-2, -1)]));

        let x = lp(&[(2, 1), (-2, 1)]);
        let inv = x.try_inv().unwrap();
        let expected =
            ScalarQ::new(LaurentPoly::from_int_terms(&[(2, 1)]), LaurentPoly::from_int_terms(&[(4, 1), (0, 1)]))
                .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(inv.denom(), &LaurentPoly::from_int_terms(&[(4, 1), (0, 1)]));

        let three = ScalarQ::quantum_integer(3);
        assert_eq!(three.clone() - ScalarQ::one(), x);
        assert_eq!(ScalarQ::quantum_integer(2), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(ScalarQ::quantum_integer(1), ScalarQ::one());
        assert_eq!(three.specialize_q1().unwrap(), Rational::from_i64(3));
        assert_eq!(x.specialize_q1().unwrap(), Rational::from_i64(2));
    }

    #[test]
    fn pole_at_one() {
        let f = ScalarQ::new(LaurentPoly::one(), LaurentPoly::from_int_terms(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(f.specialize_q1(), Err(ScalarError::PoleAtOne));
        assert!(ScalarQ::zero().try_inv().is_err());
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2 - 1)/(q - 1) == q + 1 and 1/(2q) == (1/2) q^-1
        let a = ScalarQ::new(
            LaurentPoly::from_int_terms(&[(2, 1), (0, -1)]),
            LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]),
        )
        .unwrap();
        assert_eq!(a, lp(&[(1, 1), (0, 1)]));
        let b = ScalarQ::new(LaurentPoly::one(), LaurentPoly::from_int_terms(&[(1, 2)])).unwrap();
        assert_eq!(b, ScalarQ::from_laurent(LaurentPoly::monomial(rat(1, 2), -1)));
    }

    #[test]
    fn display_roundtrip() {
        let x = ScalarQ::new(
            LaurentPoly::from_int_terms(&[(3, 2), (-1, -1)]),
            LaurentPoly::from_int_terms(&[(2, 1), (0, 3)]),
        )
        .unwrap();
        let s = x.to_string();
        assert_eq!(s.parse::<ScalarQ>().unwrap(), x);
    }
}
