use rayon::prelude::*;

use super::skein::{descending_lift, SkeinParams, SkeinReducer};
use crate::brauer::{AlgebraElement, BrauerDiagram, DiagramBasis, Letter};
use crate::field::{Fp61, Rational, Ring};
use crate::linalg::SparseRow;
use crate::scalars::{LaurentPoly, ScalarQ};

impl SkeinParams<LaurentPoly> {
    /// y = q⁻⁴, z = q² − q⁻², δ = q² + 1 + q⁻².
    pub fn quantum() -> Self {
        SkeinParams {
            y: LaurentPoly::q_pow(-4),
            y_inv: LaurentPoly::q_pow(4),
            z: LaurentPoly::from_int_terms(&[(2, 1), (-2, -1)]),
            delta: LaurentPoly::from_int_terms(&[(2, 1), (0, 1), (-2, 1)]),
        }
    }
}

/// Index of a letter in the generator tables: 3(i−1) + {0: g_i, 1: g_i⁻¹, 2: e_i}.
pub fn letter_id(l: Letter) -> usize {
    let k = match l {
        Letter::Pos(_) => 0,
        Letter::Neg(_) => 1,
        Letter::Cup(_) => 2,
    };
    3 * (l.index() - 1) + k
}

pub fn letter_of_id(id: usize) -> Letter {
    let i = (id / 3 + 1) as u8;
    match id % 3 {
        0 => Letter::Pos(i),
        1 => Letter::Neg(i),
        _ => Letter::Cup(i),
    }
}

/// BMW_r in the basis {T_D} of descending tangles, with coefficients in `R`.
///
/// Only products with a single generator (on either side) are stored;
/// general products are computed as chains of generator products along the
/// descending lift of each basis element.
#[derive(Clone, Debug)]
pub struct BmwEngine<R> {
    pub r: usize,
    pub basis: DiagramBasis,
    pub params: SkeinParams<R>,
    pub lifts: Vec<Vec<Letter>>,
    pub writhe: Vec<i32>,
    /// `left[id][j]` = letter·T_j, `right[id][j]` = T_j·letter.
    pub left: Vec<Vec<SparseRow<R>>>,
    pub right: Vec<Vec<SparseRow<R>>>,
}

impl<R: Ring> BmwEngine<R> {
    pub fn build(r: usize, params: SkeinParams<R>) -> Self {
        assert!(r >= 1, "rank must be positive");
        let basis = DiagramBasis::new(r);
        let (lifts, writhe): (Vec<_>, Vec<_>) = basis.diagrams.par_iter().map(descending_lift).unzip();
        let letters: Vec<Letter> = (0..3 * (r - 1)).map(letter_of_id).collect();
        let build = |on_left: bool| -> Vec<Vec<SparseRow<R>>> {
            letters
                .iter()
                .map(|&l| {
                    (0..basis.len())
                        .into_par_iter()
                        .map(|j| {
                            let mut red = SkeinReducer::new(&params, &basis);
                            let mut w = Vec::with_capacity(lifts[j].len() + 1);
                            if on_left {
                                w.push(l);
                                w.extend_from_slice(&lifts[j]);
                            } else {
                                w.extend_from_slice(&lifts[j]);
                                w.push(l);
                            }
                            let norm = params.y_pow(-writhe[j]);
                            red.reduce(&w).into_iter().map(|(k, c)| (k, c * norm.clone())).collect()
                        })
                        .collect()
                })
                .collect()
        };
        let left = build(true);
        let right = build(false);
        BmwEngine { r, basis, params, lifts, writhe, left, right }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Converts coefficients; `f` must be a ring homomorphism.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Sync) -> BmwEngine<S>
    where
        R: Sync,
    {
        let conv = |t: &Vec<Vec<SparseRow<R>>>| -> Vec<Vec<SparseRow<S>>> {
            t.par_iter()
                .map(|rows| {
                    rows.iter()
                        .map(|row| row.iter().map(|(j, c)| (*j, f(c))).filter(|(_, c)| !c.is_zero()).collect())
                        .collect()
                })
                .collect()
        };
        BmwEngine {
            r: self.r,
            basis: self.basis.clone(),
            params: self.params.map(&f),
            lifts: self.lifts.clone(),
            writhe: self.writhe.clone(),
            left: conv(&self.left),
            right: conv(&self.right),
        }
    }

    fn apply(table: &[SparseRow<R>], v: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, c) in &table[i] {
                out[*j].add_mul_assign(x, c);
            }
        }
        out
    }

    /// letter·v on dense coordinates.
    pub fn left_letter(&self, l: Letter, v: &[R]) -> Vec<R> {
        Self::apply(&self.left[letter_id(l)], v)
    }

    /// v·letter on dense coordinates.
    pub fn right_letter(&self, v: &[R], l: Letter) -> Vec<R> {
        Self::apply(&self.right[letter_id(l)], v)
    }

    pub fn unit_vector(&self, j: usize) -> Vec<R> {
        let mut v = vec![R::zero(); self.dim()];
        v[j] = R::one();
        v
    }

    /// word·v, applying the letters from the right end of the word.
    pub fn left_word(&self, word: &[Letter], v: &[R]) -> Vec<R> {
        word.iter().rev().fold(v.to_vec(), |acc, &l| self.left_letter(l, &acc))
    }

    /// v·word.
    pub fn right_word(&self, v: &[R], word: &[Letter]) -> Vec<R> {
        word.iter().fold(v.to_vec(), |acc, &l| self.right_letter(&acc, l))
    }

    /// The element spelled by a word.
    pub fn word(&self, word: &[Letter]) -> Vec<R> {
        self.left_word(word, &self.unit_vector(self.basis.index_of(&BrauerDiagram::identity(self.r))))
    }

    /// T_j·v.
    pub fn basis_left_mul(&self, j: usize, v: &[R]) -> Vec<R> {
        let w = self.left_word(&self.lifts[j], v);
        let c = self.params.y_pow(-self.writhe[j]);
        w.into_iter().map(|x| x * c.clone()).collect()
    }

    /// v·T_j.
    pub fn basis_right_mul(&self, v: &[R], j: usize) -> Vec<R> {
        let w = self.right_word(v, &self.lifts[j]);
        let c = self.params.y_pow(-self.writhe[j]);
        w.into_iter().map(|x| x * c.clone()).collect()
    }

    /// Product of dense coordinate vectors, expanding the left factor.
    pub fn mul(&self, a: &[R], b: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim()];
        for (j, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = self.basis_left_mul(j, b);
            for (o, y) in out.iter_mut().zip(&t) {
                if !y.is_zero() {
                    o.add_mul_assign(x, y);
                }
            }
        }
        out
    }

    /// Product expanding the right factor instead; must agree with `mul`.
    pub fn mul_right_chain(&self, a: &[R], b: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim()];
        for (j, x) in b.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = self.basis_right_mul(a, j);
            for (o, y) in out.iter_mut().zip(&t) {
                if !y.is_zero() {
                    o.add_mul_assign(x, y);
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[&[R]]) -> Vec<R> {
        let mut acc = self.unit_vector(self.basis.index_of(&BrauerDiagram::identity(self.r)));
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn to_element(&self, v: &[R]) -> AlgebraElement<R> {
        AlgebraElement::from_dense(&self.basis, v)
    }

    pub fn from_element(&self, a: &AlgebraElement<R>) -> Vec<R> {
        a.to_dense(&self.basis)
    }

    /// The anti-automorphism reversing words: T_D ↦ T_{D*} up to the
    /// re-expansion of the reversed lift, computed through the tables.
    pub fn star(&self, v: &[R]) -> Vec<R> {
        let mut out = vec![R::zero(); self.dim()];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let rev: Vec<Letter> = self.lifts[j].iter().rev().copied().collect();
            let c = self.params.y_pow(-self.writhe[j]) * x.clone();
            let t = self.word(&rev);
            for (o, y) in out.iter_mut().zip(&t) {
                if !y.is_zero() {
                    o.add_mul_assign(&c, y);
                }
            }
        }
        out
    }

    /// Full structure constants T_i·T_j for every basis pair (small r only).
    pub fn structure_table(&self) -> Vec<Vec<SparseRow<R>>> {
        (0..self.dim())
            .into_par_iter()
            .map(|i| {
                (0..self.dim())
                    .map(|j| {
                        let v = self.basis_left_mul(i, &self.unit_vector(j));
                        v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
                    })
                    .collect()
            })
            .collect()
    }
}

impl BmwEngine<LaurentPoly> {
    /// The engine over ℚ[q, q⁻¹].
    pub fn quantum(r: usize) -> Self {
        Self::build(r, SkeinParams::quantum())
    }

    /// Basis and lifts without tables, to be filled from a cache.
    pub(crate) fn skeleton(r: usize) -> Self {
        let basis = DiagramBasis::new(r);
        let (lifts, writhe) = basis.diagrams.iter().map(descending_lift).unzip();
        BmwEngine { r, basis, params: SkeinParams::quantum(), lifts, writhe, left: Vec::new(), right: Vec::new() }
    }

    /// Coefficients in ℚ(q).
    pub fn to_ratfunc(&self) -> BmwEngine<ScalarQ> {
        self.map(|c| ScalarQ::from_laurent(c.clone()))
    }

    /// Coefficients evaluated at q = 1.
    pub fn at_one(&self) -> BmwEngine<Rational> {
        let one = Rational::from_i64(1);
        self.map(|c| c.eval(&one))
    }

    /// Coefficients evaluated at q = q₀ in 𝔽ₚ.
    pub fn at_fp(&self, q0: Fp61) -> BmwEngine<Fp61> {
        self.map(|c| c.eval_fp(q0).expect("coefficient not defined at q0"))
    }
}
