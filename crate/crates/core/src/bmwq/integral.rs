use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::engine::BmwEngine;
use super::named::{phi_coefficients, three_minus_one};
use crate::scalars::{support_in_s, LaurentPoly, ScalarQ};

/// Denominator support of one coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct SupportRow {
    pub name: String,
    pub value: ScalarQ,
    /// In the localization of ℚ[q, q⁻¹] at [2], [3], [3] − 1.
    pub in_s: bool,
    /// In ℚ[q, q⁻¹].
    pub laurent: bool,
    pub support: String,
}

impl SupportRow {
    pub fn new(name: &str, value: ScalarQ) -> Self {
        let (in_s, sup) = support_in_s(&value);
        SupportRow { name: name.to_string(), laurent: value.is_laurent(), in_s, support: sup.to_string(), value }
    }
}

/// Supports of the coefficients of Φ_q and of Φ̃_q = (q² + q⁻²)Φ_q, and the
/// membership of every structure constant of the engine.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralFormReport {
    pub r: usize,
    pub coefficients: Vec<SupportRow>,
    pub scaled: Vec<SupportRow>,
    pub structure_constants: usize,
    pub structure_constants_in_s: bool,
}

impl IntegralFormReport {
    /// Membership of a, b, c, d and of all structure constants.
    pub fn passed(&self) -> bool {
        self.coefficients.iter().all(|c| c.in_s) && self.structure_constants_in_s
    }

    pub fn scaled_row(&self, name: &str) -> Option<&SupportRow> {
        self.scaled.iter().find(|s| s.name == name)
    }
}

pub fn integral_form_report(engine: &BmwEngine<LaurentPoly>) -> IntegralFormReport {
    let names = ["a", "b", "c", "d"];
    let coeffs = phi_coefficients();
    let coefficients = names.iter().zip(coeffs.iter()).map(|(n, c)| SupportRow::new(n, c.clone())).collect();
    let m = ScalarQ::from_laurent(three_minus_one());
    let scaled = ["ã", "b̃", "c̃", "d̃"].iter().zip(coeffs).map(|(n, c)| SupportRow::new(n, m.clone() * c)).collect();
    let table = engine.structure_table();
    let constants: Vec<&LaurentPoly> = table.iter().flatten().flatten().map(|(_, c)| c).collect();
    let structure_constants_in_s =
        constants.par_iter().all(|c| c.is_zero() || support_in_s(&ScalarQ::from_laurent((*c).clone())).0);
    IntegralFormReport {
        r: engine.r,
        coefficients,
        scaled,
        structure_constants: constants.len(),
        structure_constants_in_s,
    }
}
