use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::endo::TensorRep;
use crate::bmwq::descending_lift;
use crate::brauer::{diagram_to_word, DiagramBasis, Letter};
use crate::field::{Field, Fp61, Rational};
use crate::linalg::{certified_left_kernel, rref_in_place, CertifiedKernel, LinalgError, SparseRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Classical,
    Quantum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Sampled,
}

/// Largest r for which the classical rows (9^r columns) are materialized.
pub const MAX_CLASSICAL_R: usize = 6;
/// Largest r for quantum sampling.
pub const MAX_QUANTUM_R: usize = 6;

/// Rows of the classical representation matrix: flatten(η(D)) for every
/// basis diagram D, with columns indexed by the 9^r matrix entries.
pub fn classical_rows(r: usize) -> Vec<SparseRow<Rational>> {
    assert!(r <= MAX_CLASSICAL_R, "classical rows limited to r ≤ {MAX_CLASSICAL_R}");
    let basis = DiagramBasis::new(r);
    let rep = TensorRep::classical(r);
    basis.diagrams.par_iter().map(|d| rep.eval_word(&diagram_to_word(d)).flatten()).collect()
}

/// Exact rank and left kernel of the classical representation matrix;
/// kernel vectors are in diagram coordinates.
pub fn classical_rank_and_kernel(r: usize, seed: u64) -> Result<CertifiedKernel, LinalgError> {
    let rows = classical_rows(r);
    certified_left_kernel(&rows, 9usize.pow(r as u32), seed)
}

/// Descending lifts (word, self-writhe) of the basis diagrams, in basis order.
pub fn basis_lifts(r: usize) -> Vec<(Vec<Letter>, i32)> {
    DiagramBasis::new(r).diagrams.par_iter().map(descending_lift).collect()
}

/// Rows vec(Uᵀ·η(T_D)·V) for random U, V ∈ F^{3^r × k}.
///
/// A linear image of the full rows, so their rank is a lower bound for the
/// rank of η on the algebra.
pub fn compressed_rows<F: Field>(
    rep: &TensorRep<F>,
    lifts: &[(Vec<Letter>, i32)],
    k: usize,
    sample: impl Fn(&mut ChaCha8Rng) -> F,
    seed: u64,
) -> Vec<Vec<F>> {
    let n = rep.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let u: Vec<Vec<F>> = (0..n).map(|_| (0..k).map(|_| sample(&mut rng)).collect()).collect();
    let v: Vec<Vec<F>> = (0..n).map(|_| (0..k).map(|_| sample(&mut rng)).collect()).collect();
    lifts
        .par_iter()
        .map(|(w, s)| {
            let m = rep.eval_lift(w, *s);
            let mut mv = vec![vec![F::zero(); k]; n];
            for (j, col) in m.cols.iter().enumerate() {
                for (i, x) in col {
                    for (a, b) in mv[*i].iter_mut().zip(&v[j]) {
                        a.add_mul_assign(x, b);
                    }
                }
            }
            let mut out = vec![F::zero(); k * k];
            for i in 0..n {
                for a in 0..k {
                    let ua = &u[i][a];
                    if ua.is_zero() {
                        continue;
                    }
                    for c in 0..k {
                        out[a * k + c].add_mul_assign(ua, &mv[i][c]);
                    }
                }
            }
            out
        })
        .collect()
}

/// Compression width: k² ≥ #rows + 16, capped by the tensor dimension.
pub fn compression_width(rows: usize, n: usize) -> usize {
    let mut k = 1;
    while k * k < rows + 16 {
        k += 1;
    }
    k.min(n)
}

/// Rank of η_q at q = q₀ ∈ 𝔽ₚ from compressed rows (a lower bound for the
/// rank over ℚ(q)).
pub fn quantum_rank_at(r: usize, lifts: &[(Vec<Letter>, i32)], q0: Fp61, seed: u64) -> usize {
    assert!(r <= MAX_QUANTUM_R, "quantum sampling limited to r ≤ {MAX_QUANTUM_R}");
    let rep = TensorRep::quantum(r).at_fp(q0);
    let k = compression_width(lifts.len(), rep.dim());
    let mut rows = compressed_rows(&rep, lifts, k, |g| Fp61::new(g.gen::<u64>()), seed);
    rref_in_place(&mut rows, k * k).len()
}

/// Sample points q₀ ∈ 𝔽ₚ avoiding 0 and the zeros of q⁴ − 1, q⁴ + 1, q⁴ + q² + 1
/// (the 𝒮 polynomials and the poles of the coefficients).
pub fn sample_points(count: usize, seed: u64) -> Vec<Fp61> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let q = Fp61::new(rng.gen::<u64>());
        let q2 = q * q;
        let q4 = q2 * q2;
        let one = Fp61::one();
        let bad = q.is_zero() || (q4 - one).is_zero() || (q4 + one).is_zero() || (q4 + q2 + one).is_zero();
        if !bad && !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Rank of the representation matrix and a kernel basis in diagram coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct RankKernel {
    pub r: usize,
    pub mode: Mode,
    pub method: Method,
    pub rank: usize,
    pub kernel_dim: usize,
    /// Ranks observed at the sample points (quantum only).
    pub sample_ranks: Vec<usize>,
}

/// Classical: exact certified kernel. Quantum: ranks at `points` sample
/// points; the rank over ℚ(q) is at least their maximum.
pub fn rep_rank_and_kernel(
    r: usize,
    mode: Mode,
    points: usize,
    seed: u64,
) -> Result<(RankKernel, Option<CertifiedKernel>), LinalgError> {
    let n = crate::brauer::double_factorial(r);
    match mode {
        Mode::Classical => {
            let ck = classical_rank_and_kernel(r, seed)?;
            let rk = RankKernel {
                r,
                mode,
                method: Method::Exact,
                rank: ck.rank,
                kernel_dim: ck.dim(),
                sample_ranks: Vec::new(),
            };
            Ok((rk, Some(ck)))
        }
        Mode::Quantum => {
            let lifts = basis_lifts(r);
            let ranks: Vec<usize> = sample_points(points, seed)
                .into_iter()
                .map(|q0| quantum_rank_at(r, &lifts, q0, seed ^ 0x5eed))
                .collect();
            let rank = ranks.iter().copied().max().unwrap_or(0);
            let rk = RankKernel { r, mode, method: Method::Sampled, rank, kernel_dim: n - rank, sample_ranks: ranks };
            Ok((rk, None))
        }
    }
}
