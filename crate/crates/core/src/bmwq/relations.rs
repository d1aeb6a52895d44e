use num_traits::One;
use serde::Serialize;

use super::engine::BmwEngine;
use crate::brauer::{word_to_string, Letter};
use crate::field::Ring;
use crate::scalars::LaurentPoly;

/// A relation Σ cₖ·wordₖ = 0 with coefficients in ℚ[q, q⁻¹].
#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub family: &'static str,
    pub terms: Vec<(LaurentPoly, Vec<Letter>)>,
}

impl RelationInstance {
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                let w = if w.is_empty() { "1".to_string() } else { word_to_string(w) };
                format!("({c})·[{w}]")
            })
            .collect();
        format!("{}: {} = 0", self.family, parts.join(" + "))
    }

    /// Σ cₖ·value(wordₖ) for any evaluation of words and coefficients.
    pub fn evaluate<T>(
        &self,
        word: impl Fn(&[Letter]) -> T,
        scale: impl Fn(&LaurentPoly, T) -> T,
        add: impl Fn(T, T) -> T,
    ) -> Option<T> {
        self.terms.iter().map(|(c, w)| scale(c, word(w))).reduce(add)
    }
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn c(t: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(t)
}

/// Every instance at rank r of the defining relations of BMW_r(q), their
/// listed consequences, and the images of the generic relations under
/// y ↦ q⁻⁴, z ↦ q² − q⁻².
pub fn relation_instances(r: usize) -> Vec<RelationInstance> {
    use Letter::{Cup as E, Neg as N, Pos as G};
    let one = LaurentPoly::one();
    let m1 = -one.clone();
    let z = c(&[(2, 1), (-2, -1)]);
    let y = q(-4);
    let y_inv = q(4);
    let delta = c(&[(2, 1), (0, 1), (-2, 1)]);
    let mut out = Vec::new();
    let mut push =
        |family: &'static str, terms: Vec<(LaurentPoly, Vec<Letter>)>| out.push(RelationInstance { family, terms });
    let n = r.saturating_sub(1) as u8;
    for i in 1..=n {
        for j in i + 2..=n {
            push("commute g_i g_j", vec![(one.clone(), vec![G(i), G(j)]), (m1.clone(), vec![G(j), G(i)])]);
            push("commute g_i e_j", vec![(one.clone(), vec![G(i), E(j)]), (m1.clone(), vec![E(j), G(i)])]);
            push("commute e_i g_j", vec![(one.clone(), vec![E(i), G(j)]), (m1.clone(), vec![G(j), E(i)])]);
            push("commute e_i e_j", vec![(one.clone(), vec![E(i), E(j)]), (m1.clone(), vec![E(j), E(i)])]);
        }
        if i < n {
            push(
                "braid",
                vec![(one.clone(), vec![G(i), G(i + 1), G(i)]), (m1.clone(), vec![G(i + 1), G(i), G(i + 1)])],
            );
        }
        push(
            "kauffman",
            vec![(one.clone(), vec![G(i)]), (m1.clone(), vec![N(i)]), (-z.clone(), vec![]), (z.clone(), vec![E(i)])],
        );
        push("g e = q^-4 e", vec![(one.clone(), vec![G(i), E(i)]), (-y.clone(), vec![E(i)])]);
        push("e g = q^-4 e", vec![(one.clone(), vec![E(i), G(i)]), (-y.clone(), vec![E(i)])]);
        let mut neighbours = Vec::new();
        if i > 1 {
            neighbours.push(i - 1);
        }
        if i < n {
            neighbours.push(i + 1);
        }
        for &j in &neighbours {
            push("e g e = q^4 e", vec![(one.clone(), vec![E(i), G(j), E(i)]), (-q(4), vec![E(i)])]);
            push("e g^-1 e = q^-4 e", vec![(one.clone(), vec![E(i), N(j), E(i)]), (-q(-4), vec![E(i)])]);
            push("e e e = e", vec![(one.clone(), vec![E(i), E(j), E(i)]), (m1.clone(), vec![E(i)])]);
        }
        // (g − q²)(g + q⁻²) = −q⁻⁴(q² − q⁻²)e
        push(
            "quadratic",
            vec![
                (one.clone(), vec![G(i), G(i)]),
                (c(&[(-2, 1), (2, -1)]), vec![G(i)]),
                (m1.clone(), vec![]),
                (&y * &z, vec![E(i)]),
            ],
        );
        // (g − y)(g² − zg − 1) = g³ − (z+y)g² + (yz−1)g + y
        push(
            "cubic",
            vec![
                (one.clone(), vec![G(i), G(i), G(i)]),
                (-(&z + &y), vec![G(i), G(i)]),
                (&(&y * &z) - &one, vec![G(i)]),
                (y.clone(), vec![]),
            ],
        );
        push("e^2 = delta e", vec![(one.clone(), vec![E(i), E(i)]), (-delta.clone(), vec![E(i)])]);
        if i < n {
            // with an extra factor q⁻⁴ (resp. y) this would contradict
            // e_i g_{i+1}⁻¹ e_i = q⁻⁴e_i after left multiplication by e_i
            push(
                "g_{i+1}^-1 e_i = g_i e_{i+1} e_i",
                vec![(one.clone(), vec![N(i + 1), E(i)]), (m1.clone(), vec![G(i), E(i + 1), E(i)])],
            );
            push(
                "psi(z g_i e_{i+1} e_i = z g_{i+1}^-1 e_i)",
                vec![(z.clone(), vec![G(i), E(i + 1), E(i)]), (-z.clone(), vec![N(i + 1), E(i)])],
            );
        }
        push(
            "psi(z e^2 = (z + y^-1 - y) e)",
            vec![(z.clone(), vec![E(i), E(i)]), (-(&(&z + &y_inv) - &y), vec![E(i)])],
        );
        push(
            "psi(-yz e = g^2 - z g - 1)",
            vec![
                (-(&y * &z), vec![E(i)]),
                (m1.clone(), vec![G(i), G(i)]),
                (z.clone(), vec![G(i)]),
                (one.clone(), vec![]),
            ],
        );
    }
    out
}

/// The variant g_{i+1}⁻¹e_i = q⁻⁴·g_i e_{i+1} e_i. It is not a consequence
/// of the defining relations: multiplying on the left by e_i turns it into
/// q⁻⁴e_i = q⁻⁸e_i.
pub fn q4_variant_relation(i: u8) -> RelationInstance {
    use Letter::{Cup as E, Neg as N, Pos as G};
    RelationInstance {
        family: "g_{i+1}^-1 e_i = q^-4 g_i e_{i+1} e_i (variant)",
        terms: vec![(LaurentPoly::one(), vec![N(i + 1), E(i)]), (-q(-4), vec![G(i), E(i + 1), E(i)])],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub r: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Evaluates every relation instance in the engine as an exact identity.
pub fn validate_relations<R: Ring>(engine: &BmwEngine<R>, conv: impl Fn(&LaurentPoly) -> R + Sync) -> RelationReport {
    let checks = relation_instances(engine.r)
        .iter()
        .map(|rel| {
            let v = rel
                .evaluate(
                    |w| engine.word(w),
                    |c, v| {
                        let c = conv(c);
                        v.into_iter().map(|x| c.clone() * x).collect::<Vec<R>>()
                    },
                    |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect(),
                )
                .unwrap_or_default();
            RelationCheck { relation: rel.describe(), passed: v.iter().all(|x| x.is_zero()) }
        })
        .collect();
    RelationReport { r: engine.r, checks }
}
