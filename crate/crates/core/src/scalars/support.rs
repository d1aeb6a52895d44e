use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::laurent::{poly_divrem, poly_monic, LaurentPoly};
use super::ScalarQ;
use crate::field::Rational;

/// Factorization of a denominator over ℚ into monic factors with multiplicities.
///
/// A power of q coming from negative exponents of the numerator is listed as
/// the factor `q`. Factors other than the explicitly tested families are
/// reported as they remain after division and need not be irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DenominatorSupport {
    pub factors: Vec<(LaurentPoly, u32)>,
}

impl DenominatorSupport {
    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of the factors with multiplicity.
    pub fn product(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn contains(&self, f: &LaurentPoly) -> Option<u32> {
        self.factors.iter().find(|(g, _)| g == f).map(|(_, m)| *m)
    }
}

impl fmt::Display for DenominatorSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|(p, m)| if *m == 1 { format!("({p})") } else { format!("({p})^{m}") }).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn lp(t: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(t)
}

/// Irreducible factors over ℚ of q·[2]·[3]·([3]−1) after clearing q-powers.
pub fn s_irreducibles() -> Vec<LaurentPoly> {
    vec![lp(&[(2, 1), (0, 1)]), lp(&[(2, 1), (1, 1), (0, 1)]), lp(&[(2, 1), (1, -1), (0, 1)]), lp(&[(4, 1), (0, 1)])]
}

fn to_dense(p: &LaurentPoly) -> Vec<Rational> {
    (0..=p.high_exp()).map(|e| p.coeff(e)).collect()
}

fn divide_out(rest: &mut Vec<Rational>, f: &[Rational]) -> u32 {
    let mut m = 0;
    while rest.len() > 1 {
        let (quot, rem) = poly_divrem(rest, f);
        if !rem.is_empty() {
            break;
        }
        *rest = quot;
        m += 1;
    }
    m
}

/// Φ_n as a dense polynomial.
fn cyclotomic(n: usize) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); n + 1];
    p[0] = -Rational::one();
    p[n] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_divrem(&p, &cyclotomic(d)).0;
        }
    }
    p
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut ds = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            ds.push(BigInt::from(d));
            if d * d != n {
                ds.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(ds)
}

/// Monic linear factors q − x for rational roots x, found by the rational root test.
fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    if p.len() < 2 {
        return Vec::new();
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let (Some(a0), Some(an)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return Vec::new();
    };
    let mut roots = Vec::new();
    for num in &a0 {
        for den in &an {
            for sign in [1, -1] {
                let x = Rational::new(num * sign, den.clone());
                if !roots.contains(&x) && eval_dense(p, &x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn eval_dense(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Factors the denominator of `a` and decides membership in the localization
/// of ℚ[q, q⁻¹] at the multiplicative set generated by [2], [3] and [3] − 1.
pub fn support_in_s(a: &ScalarQ) -> (bool, DenominatorSupport) {
    let mut factors = Vec::new();
    let mut in_s = true;
    let low = a.numer().low_exp();
    if !a.numer().is_zero() && low < 0 {
        factors.push((LaurentPoly::q_pow(1), (-low) as u32));
    }
    let mut rest = poly_monic(to_dense(a.denom()));
    for f in s_irreducibles() {
        let m = divide_out(&mut rest, &to_dense(&f));
        if m > 0 {
            factors.push((f, m));
        }
    }
    for x in rational_roots(&rest) {
        let lin = vec![-x, Rational::one()];
        let m = divide_out(&mut rest, &lin);
        if m > 0 {
            factors.push((LaurentPoly::from_terms([(1, Rational::one()), (0, lin[0].clone())]), m));
            in_s = false;
        }
    }
    for n in 5..=30 {
        if rest.len() <= 1 {
            break;
        }
        if matches!(n, 6 | 8) {
            continue;
        }
        let c = cyclotomic(n);
        let m = divide_out(&mut rest, &c);
        if m > 0 {
            factors.push((LaurentPoly::from_terms(c.into_iter().enumerate().map(|(e, c)| (e as i32, c))), m));
            in_s = false;
        }
    }
    if rest.len() > 1 {
        factors.push((LaurentPoly::from_terms(rest.into_iter().enumerate().map(|(e, c)| (e as i32, c))), 1));
        in_s = false;
    }
    (in_s, DenominatorSupport { factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_minus_one_is_outside() {
        let a = ScalarQ::new(LaurentPoly::one(), lp(&[(1, 1), (0, -1)])).unwrap();
        let (ok, sup) = support_in_s(&a);
        assert!(!ok);
        assert_eq!(sup.factors, vec![(lp(&[(1, 1), (0, -1)]), 1)]);
    }

    #[test]
    fn unit_denominator() {
        let (ok, sup) = support_in_s(&ScalarQ::q_pow(-4));
        assert!(ok);
        assert_eq!(sup.factors, vec![(LaurentPoly::q_pow(1), 4)]);
        assert_eq!(sup.product(), LaurentPoly::q_pow(4));
    }

    #[test]
    fn quantum_integer_inverses_are_inside() {
        for n in [2u32, 3] {
            let (ok, _) = support_in_s(&ScalarQ::quantum_integer(n).try_inv().unwrap());
            assert!(ok);
        }
        let three_minus_one = ScalarQ::quantum_integer(3) - ScalarQ::one();
        let inv2 = three_minus_one.try_inv().unwrap();
        let (ok, sup) = support_in_s(&(inv2.clone() * inv2));
        assert!(ok);
        assert_eq!(sup.contains(&lp(&[(4, 1), (0, 1)])), Some(2));
    }

    #[test]
    fn cyclotomic_and_leftover_factors() {
        assert_eq!(cyclotomic(5).len(), 5);
        let den = &lp(&[(4, 1), (3, 1), (2, 1), (1, 1), (0, 1)]) * &lp(&[(2, 1), (0, -2)]);
        let a = ScalarQ::new(LaurentPoly::one(), den).unwrap();
        let (ok, sup) = support_in_s(&a);
        assert!(!ok);
        assert_eq!(sup.factors.len(), 2);
        assert_eq!(sup.product(), a.denom().clone());
    }
}
