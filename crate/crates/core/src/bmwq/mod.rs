//! BMW_r(q) over ℚ(q) with y = q⁻⁴, z = q² − q⁻²: the descending-tangle
//! basis, a skein-reduction multiplication engine, the elements f_i, F_q,
//! e_{14}, e_{1234}, Φ_q, relation checks, ideal closure and specialization
//! to the Brauer algebra at q = 1.

pub mod cache;
mod engine;
mod integral;
mod named;
mod relations;
mod skein;

pub use engine::{letter_id, letter_of_id, BmwEngine};
pub use integral::{integral_form_report, IntegralFormReport, SupportRow};
pub use named::{
    named_q_elements, phi_coefficients, phi_coefficients_at_one, phi_coefficients_cleared, phi_q, phi_q_cleared,
    three_minus_one, NamedQ,
};
pub use relations::{
    q4_variant_relation, relation_instances, validate_relations, RelationCheck, RelationInstance, RelationReport,
};
pub use skein::{descending_lift, trace, SkeinParams, SkeinReducer, Trace};

use crate::brauer::{ideal_closure, screened_closure, ActionTables, AlgebraElement, Letter, ScreenedSpan};
use crate::field::{Field, Fp61, Rational};
use crate::linalg::Echelon;
use crate::scalars::{LaurentPoly, ScalarError, ScalarQ};

/// An element of BMW_r(q) in the basis {T_D}.
pub type BmwElement = AlgebraElement<ScalarQ>;

/// Generator tables for g_i and e_i on both sides, as used by ideal closure.
pub fn action_tables<R: crate::field::Ring>(engine: &BmwEngine<R>) -> ActionTables<R> {
    let ids: Vec<usize> =
        (1..engine.r as u8).flat_map(|i| [letter_id(Letter::Pos(i)), letter_id(Letter::Cup(i))]).collect();
    ActionTables {
        n: engine.dim(),
        left: ids.iter().map(|&k| engine.left[k].clone()).collect(),
        right: ids.iter().map(|&k| engine.right[k].clone()).collect(),
    }
}

/// Two-sided ideal generated by `gens` in the engine's algebra.
pub fn q_ideal_closure<F: Field>(engine: &BmwEngine<F>, gens: &[Vec<F>]) -> Echelon<F> {
    ideal_closure(&action_tables(engine), gens)
}

/// Ideal closure screened at q = q₀ in 𝔽ₚ, keeping exact Laurent vectors.
///
/// The kept vectors lie in the ideal over ℚ(q) and are independent there, so
/// their number bounds the ideal's dimension from below.
pub fn screened_q_closure(
    engine: &BmwEngine<LaurentPoly>,
    q0: Fp61,
    gens: &[Vec<LaurentPoly>],
) -> ScreenedSpan<LaurentPoly, Fp61> {
    screened_closure(&action_tables(engine), |c| c.eval_fp(q0).expect("coefficient undefined at q0"), gens)
}

/// Termwise q → 1.
pub fn specialize_to_brauer(a: &BmwElement) -> Result<AlgebraElement<Rational>, ScalarError> {
    a.try_map(|c| c.specialize_q1())
}

/// Termwise q → 1 for Laurent coefficients (never a pole).
pub fn specialize_laurent(a: &AlgebraElement<LaurentPoly>) -> AlgebraElement<Rational> {
    let one = Rational::from_integer(1.into());
    a.map(|c| c.eval(&one))
}

#[cfg(test)]
mod tests;
