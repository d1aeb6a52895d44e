use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{Field, Fp61, Rational, Ring};

/// A Laurent polynomial in q with rational coefficients.
///
/// Stored densely from the lowest exponent present. The zero polynomial has
/// no coefficients; otherwise the first and last stored coefficients are
/// nonzero, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn monomial(c: Rational, e: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: e, coeffs: vec![c] }
    }

    /// The monomial qᵉ.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_i64(n))
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        let terms: Vec<(i32, Rational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// Builds from integer (exponent, coefficient) pairs.
    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_i64(c))))
    }

    pub(crate) fn from_dense(low: i32, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly { low: low + lead_zeros as i32, coeffs }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn high_exp(&self) -> i32 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.low + self.coeffs.len() as i32 - 1
        }
    }

    pub fn coeff(&self, e: i32) -> Rational {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.low == 0)
    }

    /// True when the polynomial is c·qᵉ for some nonzero c.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Multiplies by qᵏ.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Evaluation at a nonzero rational point.
    pub fn eval(&self, q: &Rational) -> Rational {
        assert!(!q.is_zero() || self.low >= 0, "evaluation of a Laurent polynomial at 0");
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        if self.low >= 0 {
            acc * Ring::pow(q, self.low as u32)
        } else {
            acc / Ring::pow(q, (-self.low) as u32)
        }
    }

    /// Evaluation at q₀ ∈ 𝔽ₚ; `None` if a coefficient is not p-integral or q₀ = 0
    /// with negative exponents present.
    pub fn eval_fp(&self, q: Fp61) -> Option<Fp61> {
        let mut acc = Fp61::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Fp61::from_rational(c)?;
        }
        if self.low >= 0 {
            Some(acc * q.pow_u64(self.low as u64))
        } else {
            Some(acc * q.inv()?.pow_u64((-self.low) as u64))
        }
    }

    /// Substitutes q ↦ q^k (k may be negative).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Coefficients as a dense ordinary polynomial after dividing out q^low.
    pub(crate) fn dense_poly(&self) -> Vec<Rational> {
        self.coeffs.clone()
    }

    pub(crate) fn from_poly(coeffs: Vec<Rational>) -> Self {
        Self::from_dense(0, coeffs)
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other { -other.clone() } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + i];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_dense(low, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_dense(self.low + other.low, coeffs)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: Self) -> Self {
        self.add_impl(&o, false)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: Self) -> Self {
        self.add_impl(&o, true)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: Self) -> Self {
        self.mul_impl(&o)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.add_impl(o, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.add_impl(o, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(o)
    }
}

impl Ring for LaurentPoly {
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }
}

fn fmt_coeff(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Terms written highest exponent first as `c*q^e`, e.g. `1*q^2 - 1*q^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i32, &Rational)> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            let neg = c.numer() < &num_bigint::BigInt::zero();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*q^{}", fmt_coeff(&abs), e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = String;

    /// Parses the `Display` format (`c*q^e` terms joined by ` + ` / ` - `).
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (None, None) => (rest, None),
                (a, b) => {
                    let (pos, s) = match (a, b) {
                        (Some(x), Some(y)) if x < y => (x, 1),
                        (Some(x), None) => (x, 1),
                        (_, Some(y)) => (y, -1),
                        _ => unreachable!(),
                    };
                    (&rest[..pos], Some((s, &rest[pos + 3..])))
                }
            };
            let (c, e) = term.split_once("*q^").ok_or_else(|| format!("malformed term `{term}`"))?;
            let c: Rational = c.trim().parse().map_err(|_| format!("bad coefficient `{c}`"))?;
            let e: i32 = e.trim().parse().map_err(|_| format!("bad exponent `{e}`"))?;
            terms.push((e, c * Rational::from_i64(sign)));
            match next {
                None => break,
                Some((s, r)) => {
                    sign = s;
                    rest = r;
                }
            }
        }
        Ok(Self::from_terms(terms))
    }
}

// Dense polynomial helpers over ℚ (index = degree), used for gcds and factoring.

pub(crate) fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: Vec<Rational> = a.to_vec();
    poly_trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut quot = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                r[shift + i] -= &c * bc;
            }
        }
        quot[shift] = c;
        r.pop();
        poly_trim(&mut r);
    }
    poly_trim(&mut quot);
    (quot, r)
}

pub(crate) fn poly_monic(mut p: Vec<Rational>) -> Vec<Rational> {
    poly_trim(&mut p);
    if let Some(l) = p.last().cloned() {
        if !l.is_one() {
            for c in p.iter_mut() {
                *c /= &l;
            }
        }
    }
    p
}

/// Monic gcd of two polynomials (zero if both are zero).
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = poly_monic(r);
    }
    poly_monic(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]);
        let b = LaurentPoly::from_int_terms(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn display_roundtrip() {
        let p = LaurentPoly::from_terms(vec![
            (3, Rational::from_i64(2)),
            (-1, crate::field::rat(-1, 4)),
            (0, Rational::from_i64(1)),
        ]);
        let s = p.to_string();
        assert_eq!(s, "2*q^3 + 1*q^0 - 1/4*q^-1");
        assert_eq!(s.parse::<LaurentPoly>().unwrap(), p);
        let n = LaurentPoly::from_int_terms(&[(2, -1)]);
        assert_eq!(n.to_string().parse::<LaurentPoly>().unwrap(), n);
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = vec![Rational::from_i64(-2), Rational::from_i64(-1), Rational::from_i64(1)];
        let b = vec![Rational::from_i64(3), Rational::from_i64(4), Rational::from_i64(1)];
        assert_eq!(poly_gcd(&a, &b), vec![Rational::from_i64(1), Rational::from_i64(1)]);
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_int_terms(&[(2, 1), (0, 1), (-2, 1)]);
        assert_eq!(p.eval(&Rational::from_i64(1)), Rational::from_i64(3));
        let quarter = crate::field::Field::inv(&Fp61::from_i64(4)).unwrap();
        assert_eq!(p.eval_fp(Fp61::from_i64(2)).unwrap(), Fp61::from_i64(5) + quarter);
    }
}
