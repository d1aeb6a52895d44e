use rayon::prelude::*;

use super::sl2::{build_rmatrix, to_laurent};
use crate::brauer::{BrauerDiagram, Letter};
use crate::field::{Fp61, Rational, Ring};
use crate::linalg::{Matrix, SparseRow};
use crate::scalars::LaurentPoly;

/// Sparse exact endomorphism of the 3^r-dimensional tensor space, stored by
/// columns. Tensor words index rows and columns, factor j carrying the digit
/// of weight 3^{r−1−j}.
#[derive(Clone, Debug, PartialEq)]
pub struct EndoMatrix<R> {
    pub r: usize,
    /// `cols[j]` = image of the j-th basis word.
    pub cols: Vec<SparseRow<R>>,
}

pub fn tensor_dim(r: usize) -> usize {
    3usize.pow(r as u32)
}

/// Digits of a tensor index, most significant factor first.
pub fn tensor_word(idx: usize, r: usize) -> Vec<u8> {
    (0..r).map(|j| ((idx / 3usize.pow((r - 1 - j) as u32)) % 3) as u8).collect()
}

impl<R: Ring> EndoMatrix<R> {
    pub fn identity(r: usize) -> Self {
        EndoMatrix { r, cols: (0..tensor_dim(r)).map(|j| vec![(j, R::one())]).collect() }
    }

    pub fn zero(r: usize) -> Self {
        EndoMatrix { r, cols: vec![Vec::new(); tensor_dim(r)] }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.cols[j].iter().find(|(k, _)| *k == i).map(|(_, v)| v.clone()).unwrap_or_else(R::zero)
    }

    /// self·other.
    pub fn mul(&self, other: &Self) -> Self {
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        EndoMatrix { r: self.r, cols }
    }

    /// self·v for a sparse vector.
    pub fn apply(&self, v: &[(usize, R)]) -> SparseRow<R> {
        let mut acc: Vec<(usize, R)> = Vec::new();
        for (k, x) in v {
            for (i, y) in &self.cols[*k] {
                acc.push((*i, x.mul_ref(y)));
            }
        }
        normalize(acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| normalize(a.iter().chain(b.iter()).cloned().collect()))
            .collect();
        EndoMatrix { r: self.r, cols }
    }

    pub fn scale(&self, c: &R) -> Self {
        let cols =
            self.cols.iter().map(|col| normalize(col.iter().map(|(i, x)| (*i, x.mul_ref(c))).collect())).collect();
        EndoMatrix { r: self.r, cols }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-R::one()))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> EndoMatrix<S> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, x)| (*i, f(x))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        EndoMatrix { r: self.r, cols }
    }

    /// Row-major flattening: entry (i, j) goes to slot i·3^r + j.
    pub fn flatten(&self) -> SparseRow<R> {
        let n = self.dim();
        let mut out: Vec<(usize, R)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, x)| (i * n + j, x.clone())))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    pub fn to_dense(&self) -> Matrix<R> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn from_dense(r: usize, m: &Matrix<R>) -> Self {
        let n = tensor_dim(r);
        assert_eq!(m.nrows(), n, "matrix size does not match 3^r");
        let cols = (0..n)
            .map(|j| (0..n).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect())
            .collect();
        EndoMatrix { r, cols }
    }
}

fn normalize<R: Ring>(mut v: Vec<(usize, R)>) -> SparseRow<R> {
    v.sort_by_key(|(k, _)| *k);
    let mut out: Vec<(usize, R)> = Vec::with_capacity(v.len());
    for (k, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == k => *y = y.add_ref(&x),
            _ => out.push((k, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// A 9×9 operator on two adjacent factors, stored by columns.
#[derive(Clone, Debug)]
pub struct LocalOp<R> {
    pub cols: Vec<SparseRow<R>>,
}

impl<R: Ring> LocalOp<R> {
    pub fn from_matrix(m: &Matrix<R>) -> Self {
        assert!(m.nrows() == 9 && m.ncols() == 9, "local operators are 9×9");
        LocalOp {
            cols: (0..9)
                .map(|j| (0..9).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Matrix<R> {
        let mut m = Matrix::zeros(9, 9);
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LocalOp<S> {
        LocalOp {
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|(i, x)| (*i, f(x))).filter(|(_, x)| !x.is_zero()).collect())
                .collect(),
        }
    }

    /// Applies the operator on factors i−1, i (1 ≤ i ≤ r−1) to a sparse vector.
    pub fn apply_at(&self, i: usize, r: usize, v: &[(usize, R)]) -> SparseRow<R> {
        let hi = 3usize.pow((r - i) as u32);
        let lo = 3usize.pow((r - 1 - i) as u32);
        let mut acc = Vec::with_capacity(v.len() * 3);
        for (k, x) in v {
            let a = (k / hi) % 3;
            let b = (k / lo) % 3;
            let base = k - a * hi - b * lo;
            for (l, y) in &self.cols[3 * a + b] {
                acc.push((base + (l / 3) * hi + (l % 3) * lo, x.mul_ref(y)));
            }
        }
        normalize(acc)
    }
}

/// The three local operators g ↦ Ř, g⁻¹ ↦ Ř⁻¹, e ↦ ě.
#[derive(Clone, Debug)]
pub struct LocalOps<R> {
    pub pos: LocalOp<R>,
    pub neg: LocalOp<R>,
    pub cup: LocalOp<R>,
}

impl<R: Ring> LocalOps<R> {
    pub fn get(&self, l: Letter) -> &LocalOp<R> {
        match l {
            Letter::Pos(_) => &self.pos,
            Letter::Neg(_) => &self.neg,
            Letter::Cup(_) => &self.cup,
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LocalOps<S> {
        LocalOps { pos: self.pos.map(&f), neg: self.neg.map(&f), cup: self.cup.map(&f) }
    }
}

impl LocalOps<LaurentPoly> {
    /// Ř, Ř⁻¹ and ě with entries in ℚ[q, q⁻¹].
    pub fn quantum() -> Self {
        let rm = build_rmatrix();
        let conv =
            |m: &Matrix<_>| LocalOp::from_matrix(&to_laurent(m).expect("R-matrix entries are Laurent polynomials"));
        LocalOps { pos: conv(&rm.r_check), neg: conv(&rm.r_check_inv), cup: conv(&rm.e_check) }
    }
}

impl LocalOps<Rational> {
    /// The q = 1 specialization: the flip and 3P₀.
    pub fn classical() -> Self {
        let one = Rational::from_integer(1.into());
        LocalOps::quantum().map(|c| c.eval(&one))
    }
}

/// The representation of words on V^{⊗r}: g_i ↦ Ř on factors i, i+1,
/// e_i ↦ ě there, and products of letters ↦ products of matrices.
#[derive(Clone, Debug)]
pub struct TensorRep<R> {
    pub r: usize,
    pub ops: LocalOps<R>,
    /// Images of y = q⁻⁴ and y⁻¹, used to normalize descending lifts.
    pub y: R,
    pub y_inv: R,
}

impl TensorRep<LaurentPoly> {
    pub fn quantum(r: usize) -> Self {
        TensorRep { r, ops: LocalOps::quantum(), y: LaurentPoly::q_pow(-4), y_inv: LaurentPoly::q_pow(4) }
    }

    /// Entries evaluated at q = q₀ in 𝔽ₚ.
    pub fn at_fp(&self, q0: Fp61) -> TensorRep<Fp61> {
        let f = |c: &LaurentPoly| c.eval_fp(q0).expect("q0 must be nonzero");
        TensorRep { r: self.r, ops: self.ops.map(f), y: f(&self.y), y_inv: f(&self.y_inv) }
    }
}

impl TensorRep<Rational> {
    pub fn classical(r: usize) -> Self {
        TensorRep {
            r,
            ops: LocalOps::classical(),
            y: Rational::from_integer(1.into()),
            y_inv: Rational::from_integer(1.into()),
        }
    }
}

impl<R: Ring> TensorRep<R> {
    pub fn dim(&self) -> usize {
        tensor_dim(self.r)
    }

    /// place(op, i): the local operator on factors i, i+1 and the identity elsewhere.
    pub fn place(&self, op: &LocalOp<R>, i: usize) -> EndoMatrix<R> {
        assert!(i >= 1 && i < self.r, "position {i} out of range for r = {}", self.r);
        let cols = (0..self.dim()).map(|j| op.apply_at(i, self.r, &[(j, R::one())])).collect();
        EndoMatrix { r: self.r, cols }
    }

    pub fn letter(&self, l: Letter) -> EndoMatrix<R> {
        self.place(self.ops.get(l), l.index())
    }

    /// word·v, applying the rightmost letter first.
    pub fn apply_word(&self, word: &[Letter], v: &[(usize, R)]) -> SparseRow<R> {
        word.iter().rev().fold(v.to_vec(), |acc, &l| {
            assert!(l.index() < self.r, "letter {l} out of range for r = {}", self.r);
            self.ops.get(l).apply_at(l.index(), self.r, &acc)
        })
    }

    pub fn eval_word(&self, word: &[Letter]) -> EndoMatrix<R> {
        let cols = (0..self.dim()).map(|j| self.apply_word(word, &[(j, R::one())])).collect();
        EndoMatrix { r: self.r, cols }
    }

    /// Image of the basis element T_D = y^{−w}·(descending lift of D).
    pub fn eval_lift(&self, lift: &[Letter], writhe: i32) -> EndoMatrix<R> {
        let m = self.eval_word(lift);
        let c = if writhe >= 0 { self.y_inv.pow(writhe as u32) } else { self.y.pow((-writhe) as u32) };
        m.scale(&c)
    }

    /// Image of a linear combination of basis elements given as lifts.
    pub fn eval_combination(&self, lifts: &[(Vec<Letter>, i32)], coeffs: &[R]) -> EndoMatrix<R> {
        let parts: Vec<EndoMatrix<R>> = lifts
            .par_iter()
            .zip(coeffs.par_iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((w, s), c)| self.eval_lift(w, *s).scale(c))
            .collect();
        parts.into_iter().fold(EndoMatrix::zero(self.r), |a, b| a.add(&b))
    }
}

/// η on a Brauer diagram by its defining formula: a through strand forces
/// equal digits, and each cup or cap contributes the invariant pairing
/// ξ(a, b) = (−1)^a when a + b = 2.
pub fn eta_direct(d: &BrauerDiagram) -> EndoMatrix<Rational> {
    let r = d.r();
    let n = tensor_dim(r);
    let xi = |a: u8, b: u8| -> i64 {
        if a + b == 2 {
            if a.is_multiple_of(2) {
                1
            } else {
                -1
            }
        } else {
            0
        }
    };
    let cols = (0..n)
        .map(|j| {
            let bottom = tensor_word(j, r);
            let mut out = Vec::new();
            'rows: for i in 0..n {
                let top = tensor_word(i, r);
                let digit = |p: usize| if p < r { top[p] } else { bottom[p - r] };
                let mut val = 1i64;
                for (p, q) in d.pairs() {
                    let through = (p < r) != (q < r);
                    let v = if through { i64::from(digit(p) == digit(q)) } else { xi(digit(p), digit(q)) };
                    if v == 0 {
                        continue 'rows;
                    }
                    val *= v;
                }
                out.push((i, Rational::from_integer(val.into())));
            }
            out
        })
        .collect();
    EndoMatrix { r, cols }
}
