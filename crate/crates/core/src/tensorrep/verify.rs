use std::path::Path;

use serde::Serialize;

use super::endo::TensorRep;
use super::kernel::{basis_lifts, classical_rank_and_kernel, quantum_rank_at, sample_points, Method, Mode};
use crate::bmwq::{cache, phi_q_cleared, relation_instances, screened_q_closure, BmwEngine};
use crate::brauer::{double_factorial, ideal_closure, phi, ActionTables, DiagramBasis};
use crate::cellular::{annihilated_lambdas, CellDatum, IdealSpec, MAX_DATUM_R};
use crate::field::{Fp61, Rational, Ring};
use crate::linalg::Echelon;
use crate::partitions::{lambda0, Partition};
use crate::scalars::LaurentPoly;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("r = {r} exceeds the limit {limit} for {what}")]
    TooLarge { what: &'static str, r: usize, limit: usize },
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
    #[error(transparent)]
    Cache(#[from] cache::CacheError),
    #[error(transparent)]
    Cell(#[from] crate::cellular::CellError),
}

pub const MAX_VERIFY_CLASSICAL_R: usize = 5;
pub const MAX_VERIFY_QUANTUM_R: usize = 5;
pub const MAX_EXACT_QUANTUM_R: usize = 4;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Number of sample points for quantum ranks.
    pub points: usize,
    pub seed: u64,
    /// Directory for cached BMW tables.
    pub cache: Option<std::path::PathBuf>,
    /// Also check which simple modules Φ annihilates.
    pub ann_lambdas: bool,
    /// Quantum: evaluate every element of the screened ideal basis on
    /// tensor space (r ≤ 4) and label the result exact.
    pub exact: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { points: 5, seed: 1, cache: None, ann_lambdas: true, exact: false }
    }
}

/// {λ : ⟨Φ⟩·L(λ) = 0} against Λ⁰_r.
#[derive(Clone, Debug, Serialize)]
pub struct AnnLambdas {
    pub annihilated: Vec<Partition>,
    pub expected: Vec<Partition>,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub r: usize,
    pub mode: Mode,
    pub rank: usize,
    pub kernel_dim: usize,
    pub ideal_dim: usize,
    pub equal: bool,
    pub method: Method,
    /// Ranks at the sample points (quantum).
    pub sample_ranks: Vec<usize>,
    /// Human-readable descriptions of failed checks.
    pub witnesses: Vec<String>,
    pub ann_lambdas: Option<AnnLambdas>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.equal && self.witnesses.is_empty() && self.ann_lambdas.as_ref().is_none_or(|a| a.equal)
    }
}

/// Checks ker η = ⟨Φ⟩ (classical) or ker η_q = ⟨Φ_q⟩ (quantum) on V^{⊗r}.
///
/// Classical: exact certified kernel compared with the ideal closure.
/// Quantum: the rank at sample points bounds rank η_q from below; the
/// ideal closure screened at one point yields independent exact elements
/// of ⟨Φ_q⟩, which lies in ker η_q because η_q(Φ_q) = 0. When the counts
/// meet, ker η_q = ⟨Φ_q⟩ exactly. In exact mode every kept element is
/// also evaluated on tensor space.
pub fn verify_main_theorem(r: usize, mode: Mode, opts: &VerifyOptions) -> Result<TheoremReport, VerifyError> {
    let mut report = match mode {
        Mode::Classical => verify_classical(r, opts)?,
        Mode::Quantum => verify_quantum(r, opts)?,
    };
    if opts.ann_lambdas && r <= MAX_DATUM_R {
        let a = ann_lambdas(r)?;
        if !a.equal {
            report.witnesses.push(format!("Φ annihilates {:?}, expected {:?}", a.annihilated, a.expected));
        }
        report.ann_lambdas = Some(a);
    }
    Ok(report)
}

pub fn ann_lambdas(r: usize) -> Result<AnnLambdas, VerifyError> {
    let datum = CellDatum::brauer3(r)?;
    let gens = if r >= 4 { vec![phi(r).to_dense(&datum.basis)] } else { Vec::new() };
    // only the generators matter for which simples are killed
    let ideal = IdealSpec { generators: gens, span: Echelon::new(datum.basis.len()) };
    let annihilated = annihilated_lambdas(&datum, &ideal);
    let expected = lambda0(r);
    Ok(AnnLambdas { equal: annihilated == expected, annihilated, expected })
}

fn verify_classical(r: usize, opts: &VerifyOptions) -> Result<TheoremReport, VerifyError> {
    if r == 0 || r > MAX_VERIFY_CLASSICAL_R {
        return Err(VerifyError::TooLarge { what: "classical verification", r, limit: MAX_VERIFY_CLASSICAL_R });
    }
    let ck = classical_rank_and_kernel(r, opts.seed)?;
    let basis = DiagramBasis::new(r);
    let ideal = if r >= 4 {
        let tables = ActionTables::brauer(&basis, &Rational::from_i64(3));
        ideal_closure(&tables, &[phi(r).to_dense(&basis)])
    } else {
        Echelon::new(basis.len())
    };
    let mut witnesses = Vec::new();
    if let Some((i, _)) = ideal.rows().iter().enumerate().find(|(_, v)| !ck.contains(v)) {
        witnesses.push(format!("ideal basis vector {i} is not in ker η"));
    }
    if ideal.dim() != ck.dim() {
        if let Some((i, _)) = ck.basis.iter().enumerate().find(|(_, v)| !ideal.contains(v)) {
            witnesses.push(format!("kernel basis vector {i} is not in ⟨Φ⟩"));
        }
    }
    Ok(TheoremReport {
        r,
        mode: Mode::Classical,
        rank: ck.rank,
        kernel_dim: ck.dim(),
        ideal_dim: ideal.dim(),
        equal: witnesses.is_empty() && ideal.dim() == ck.dim(),
        method: Method::Exact,
        sample_ranks: Vec::new(),
        witnesses,
        ann_lambdas: None,
    })
}

fn verify_quantum(r: usize, opts: &VerifyOptions) -> Result<TheoremReport, VerifyError> {
    if r == 0 || r > MAX_VERIFY_QUANTUM_R {
        return Err(VerifyError::TooLarge { what: "quantum verification", r, limit: MAX_VERIFY_QUANTUM_R });
    }
    if opts.exact && r > MAX_EXACT_QUANTUM_R {
        return Err(VerifyError::TooLarge { what: "exact quantum verification", r, limit: MAX_EXACT_QUANTUM_R });
    }
    let n = double_factorial(r);
    let lifts = basis_lifts(r);
    let points = sample_points(opts.points.max(1), opts.seed);
    let sample_ranks: Vec<usize> =
        points.iter().map(|&q0| quantum_rank_at(r, &lifts, q0, opts.seed ^ 0x5eed)).collect();
    let rank_lb = sample_ranks.iter().copied().max().unwrap_or(0);
    let mut witnesses = Vec::new();
    if sample_ranks.iter().any(|&k| k != rank_lb) {
        witnesses.push(format!("sample ranks disagree: {sample_ranks:?}"));
    }

    let ideal_lb = if r >= 4 {
        let engine = load_engine(opts.cache.as_deref(), r)?;
        let lifts: Vec<_> = engine.lifts.iter().cloned().zip(engine.writhe.iter().copied()).collect();
        let rep = TensorRep::quantum(r);
        let phi_v = phi_q_cleared(&engine, |c| c.clone());
        if !rep.eval_combination(&lifts, &phi_v).is_zero() {
            witnesses.push("η_q(Φ_q) ≠ 0".to_string());
        }
        let span = screened_q_closure(&engine, screening_point(opts.seed), &[phi_v]);
        if opts.exact {
            if let Some(i) = span.exact.iter().position(|v| !rep.eval_combination(&lifts, v).is_zero()) {
                witnesses.push(format!("ideal element {i} is not in ker η_q"));
            }
        }
        span.dim()
    } else {
        0
    };
    // rank ≥ rank_lb, dim ker ≥ ideal_lb, rank + dim ker = n
    let equal = rank_lb + ideal_lb == n;
    if !equal {
        witnesses.push(format!("bounds do not meet: rank ≥ {rank_lb}, dim⟨Φ_q⟩ ≥ {ideal_lb}, dim = {n}"));
    }
    Ok(TheoremReport {
        r,
        mode: Mode::Quantum,
        rank: rank_lb,
        kernel_dim: n - rank_lb,
        ideal_dim: ideal_lb,
        equal,
        method: if opts.exact { Method::Exact } else { Method::Sampled },
        sample_ranks,
        witnesses,
        ann_lambdas: None,
    })
}

fn load_engine(dir: Option<&Path>, r: usize) -> Result<BmwEngine<LaurentPoly>, VerifyError> {
    Ok(cache::load_or_build(dir, r)?)
}

/// A point for ideal screening, away from the sample points.
fn screening_point(seed: u64) -> Fp61 {
    sample_points(1, seed.wrapping_add(0x9e37_79b9))[0]
}

/// Descriptions of the relation instances that fail on V^{⊗r}.
pub fn tensor_relation_failures(r: usize, mode: Mode) -> Vec<String> {
    match mode {
        Mode::Quantum => {
            let rep = TensorRep::quantum(r);
            failing(&rep, |c| c.clone())
        }
        Mode::Classical => {
            let rep = TensorRep::classical(r);
            let one = Rational::from_i64(1);
            failing(&rep, |c| c.eval(&one))
        }
    }
}

fn failing<R: Ring>(rep: &TensorRep<R>, conv: impl Fn(&LaurentPoly) -> R) -> Vec<String> {
    relation_instances(rep.r)
        .iter()
        .filter(|rel| {
            rel.evaluate(|w| rep.eval_word(w), |c, m| m.scale(&conv(c)), |a, b| a.add(&b)).is_none_or(|v| !v.is_zero())
        })
        .map(|rel| rel.describe())
        .collect()
}
