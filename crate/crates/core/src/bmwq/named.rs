use num_traits::One;

use super::engine::BmwEngine;
use crate::brauer::Letter;
use crate::field::{Rational, Ring};
use crate::scalars::{LaurentPoly, ScalarQ};

fn lp(t: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(t)
}

/// The coefficients (a, b, c, d) of Φ_q:
/// a = 1 + (1−q⁻²)², b = 1 + (1−q²)² + (1−q⁻²)²,
/// c = (1 + (2+q⁻²)(1−q⁻²)² + (1+q²)(1−q⁻²)⁴) / ([3]−1)², d = (q−q⁻¹)².
pub fn phi_coefficients() -> [ScalarQ; 4] {
    let [a, b, c, d] = phi_coefficients_cleared();
    let den = ScalarQ::from_laurent(three_minus_one().pow(2)).try_inv().expect("nonzero");
    [a, b, c, d].map(|x| ScalarQ::from_laurent(x) * den.clone())
}

/// [3] − 1 = q² + q⁻².
pub fn three_minus_one() -> LaurentPoly {
    lp(&[(2, 1), (-2, 1)])
}

/// ([3]−1)²·(a, b, c, d), all Laurent polynomials.
pub fn phi_coefficients_cleared() -> [LaurentPoly; 4] {
    let one = LaurentPoly::one();
    let u = &one - &LaurentPoly::q_pow(-2);
    let v = &one - &LaurentPoly::q_pow(2);
    let u2 = &u * &u;
    let a = &one + &u2;
    let b = &(&one + &(&v * &v)) + &u2;
    let c = &(&one + &(&lp(&[(0, 2), (-2, 1)]) * &u2)) + &(&lp(&[(0, 1), (2, 1)]) * &(&u2 * &u2));
    let d = lp(&[(2, 1), (0, -2), (-2, 1)]);
    let s = three_minus_one().pow(2);
    [&a * &s, &b * &s, c, &d * &s]
}

/// f_i, F_q = f₁f₃, e_{14}, e_{1234} and the three sandwiches making up Φ_q.
#[derive(Clone, Debug)]
pub struct NamedQ<R> {
    /// f_1, …, f_{r−1}.
    pub f: Vec<Vec<R>>,
    pub big_f: Vec<R>,
    pub e14: Vec<R>,
    pub e1234: Vec<R>,
    /// F_q e₂ F_q, F_q e₂ e_{14} F_q, F_q e_{1234} F_q.
    pub fe2f: Vec<R>,
    pub fe2e14f: Vec<R>,
    pub fe1234f: Vec<R>,
}

impl<R: Ring> NamedQ<R> {
    /// a·F e₂ F − b·F − c·F e₂ e_{14} F + d·F e_{1234} F.
    pub fn combine(&self, coeffs: &[R; 4]) -> Vec<R> {
        let [a, b, c, d] = coeffs;
        (0..self.big_f.len())
            .map(|j| {
                a.clone() * self.fe2f[j].clone()
                    - b.clone() * self.big_f[j].clone()
                    - c.clone() * self.fe2e14f[j].clone()
                    + d.clone() * self.fe1234f[j].clone()
            })
            .collect()
    }
}

/// Named elements in an engine whose coefficients receive q-values through
/// `conv` (a ring homomorphism from ℚ[q, q⁻¹]).
pub fn named_q_elements<R: Ring>(engine: &BmwEngine<R>, conv: impl Fn(&LaurentPoly) -> R) -> NamedQ<R> {
    let r = engine.r;
    assert!(r >= 4, "named elements need r ≥ 4");
    let q2 = conv(&LaurentPoly::q_pow(2));
    let u = conv(&(&LaurentPoly::one() - &LaurentPoly::q_pow(-2)));
    let one = engine.word(&[]);
    let f: Vec<Vec<R>> = (1..r as u8)
        .map(|i| {
            let g = engine.word(&[Letter::Pos(i)]);
            let e = engine.word(&[Letter::Cup(i)]);
            (0..engine.dim()).map(|j| -g[j].clone() - u.clone() * e[j].clone() + q2.clone() * one[j].clone()).collect()
        })
        .collect();
    let big_f = engine.mul(&f[0], &f[2]);
    let e14 = engine.word(&[Letter::Neg(3), Letter::Pos(1), Letter::Cup(2), Letter::Neg(1), Letter::Pos(3)]);
    let e1234 =
        engine.word(&[Letter::Cup(2), Letter::Pos(1), Letter::Neg(3), Letter::Pos(2), Letter::Neg(1), Letter::Pos(3)]);
    let e2 = engine.word(&[Letter::Cup(2)]);
    let fe2 = engine.mul(&big_f, &e2);
    let fe2f = engine.mul(&fe2, &big_f);
    let fe2e14f = engine.mul(&engine.mul(&fe2, &e14), &big_f);
    let fe1234f = engine.mul(&engine.mul(&big_f, &e1234), &big_f);
    NamedQ { f, big_f, e14, e1234, fe2f, fe2e14f, fe1234f }
}

/// Φ_q over ℚ(q).
pub fn phi_q(engine: &BmwEngine<ScalarQ>) -> Vec<ScalarQ> {
    let named = named_q_elements(engine, |p| ScalarQ::from_laurent(p.clone()));
    named.combine(&phi_coefficients())
}

/// ([3]−1)²·Φ_q, with Laurent coefficients; spans the same ideal as Φ_q.
pub fn phi_q_cleared<R: Ring>(engine: &BmwEngine<R>, conv: impl Fn(&LaurentPoly) -> R) -> Vec<R> {
    let named = named_q_elements(engine, &conv);
    named.combine(&phi_coefficients_cleared().map(|c| conv(&c)))
}

/// (a, b, c, d) at q = 1: (1, 1, 1/4, 0).
pub fn phi_coefficients_at_one() -> [Rational; 4] {
    phi_coefficients().map(|c| c.specialize_q1().expect("no pole at 1"))
}
