use num_traits::{One, Zero};

use crate::brauer::{diagram_to_word, BrauerDiagram, Letter};
use crate::field::Rational;
use crate::linalg::{rref_in_place, Echelon, Matrix};

/// A finite-dimensional B_r(δ)-module given by the matrices of s_i and e_i
/// acting on column vectors.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    pub r: usize,
    pub dim: usize,
    /// s_1, …, s_{r−1}.
    pub s: Vec<Matrix<Rational>>,
    /// e_1, …, e_{r−1}.
    pub e: Vec<Matrix<Rational>>,
}

impl ModuleRep {
    pub fn generators(&self) -> impl Iterator<Item = &Matrix<Rational>> {
        self.s.iter().chain(self.e.iter())
    }

    pub fn letter(&self, l: Letter) -> &Matrix<Rational> {
        match l {
            Letter::Pos(i) | Letter::Neg(i) => &self.s[i as usize - 1],
            Letter::Cup(i) => &self.e[i as usize - 1],
        }
    }

    pub fn act_word(&self, word: &[Letter]) -> Matrix<Rational> {
        word.iter().fold(Matrix::identity(self.dim), |m, &l| m.mul(self.letter(l)))
    }

    pub fn act_diagram(&self, d: &BrauerDiagram) -> Matrix<Rational> {
        self.act_word(&diagram_to_word(d))
    }

    /// Restriction to an invariant subspace with the given basis (columns
    /// of `basis`, linearly independent).
    pub fn submodule(&self, basis: &[Vec<Rational>]) -> ModuleRep {
        let k = basis.len();
        let coords = |v: &[Rational]| -> Vec<Rational> {
            // solve basis·x = v
            let n = self.dim;
            let mut rows: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    let mut row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
                    row.push(v[i].clone());
                    row
                })
                .collect();
            let piv = rref_in_place(&mut rows, k + 1);
            assert!(!piv.contains(&k), "subspace is not invariant");
            let mut x = vec![Rational::zero(); k];
            for (row, &p) in rows.iter().zip(&piv) {
                x[p] = row[k].clone();
            }
            x
        };
        let restrict = |m: &Matrix<Rational>| -> Matrix<Rational> {
            let mut out = Matrix::zeros(k, k);
            for (j, b) in basis.iter().enumerate() {
                let x = coords(&m.mul_vec(b));
                for (i, c) in x.into_iter().enumerate() {
                    out.set(i, j, c);
                }
            }
            out
        };
        ModuleRep {
            r: self.r,
            dim: k,
            s: self.s.iter().map(restrict).collect(),
            e: self.e.iter().map(restrict).collect(),
        }
    }

    /// The quotient by an invariant subspace, on a complement spanned by
    /// standard basis vectors.
    pub fn quotient(&self, sub: &[Vec<Rational>]) -> ModuleRep {
        let n = self.dim;
        let ech = Echelon::from_vectors(n, sub.iter().cloned());
        let pivots: Vec<usize> = ech.pivots().to_vec();
        let complement: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let k = complement.len();
        // v ≡ Σ_c v'_c e_c modulo the subspace, reading off the non-pivot slots
        let restrict = |m: &Matrix<Rational>| -> Matrix<Rational> {
            let mut out = Matrix::zeros(k, k);
            for (j, &c) in complement.iter().enumerate() {
                let col: Vec<Rational> = (0..n).map(|i| m.get(i, c).clone()).collect();
                let red = ech.reduce(col);
                for (i, &c2) in complement.iter().enumerate() {
                    out.set(i, j, red[c2].clone());
                }
            }
            out
        };
        ModuleRep {
            r: self.r,
            dim: k,
            s: self.s.iter().map(restrict).collect(),
            e: self.e.iter().map(restrict).collect(),
        }
    }

    /// Checks the defining relations of B_r(δ) on the generator matrices.
    pub fn satisfies_relations(&self, delta: &Rational) -> bool {
        let id = Matrix::identity(self.dim);
        let n = self.s.len();
        for i in 0..n {
            let (s, e) = (&self.s[i], &self.e[i]);
            if s.mul(s) != id || e.mul(e) != e.scale(delta) || s.mul(e) != *e || e.mul(s) != *e {
                return false;
            }
            for j in 0..n {
                let (s2, e2) = (&self.s[j], &self.e[j]);
                if i.abs_diff(j) >= 2 {
                    if s.mul(s2) != s2.mul(s) || s.mul(e2) != e2.mul(s) || e.mul(e2) != e2.mul(e) {
                        return false;
                    }
                } else if i.abs_diff(j) == 1
                    && (s.mul(s2).mul(s) != s2.mul(s).mul(s2)
                        || e.mul(e2).mul(e) != *e
                        || s.mul(s2).mul(e) != e2.mul(e))
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Basis of {X : X·ρ_M(g) = ρ_N(g)·X for every generator g}, each X a
/// dim N × dim M matrix.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Vec<Matrix<Rational>> {
    assert_eq!(m.r, n.r, "modules over different algebras");
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Vec::new();
    }
    let mut ech: Echelon<Rational> = Echelon::new(unknowns);
    for (gm, gn) in m.generators().zip(n.generators()) {
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..dm {
                    let c = gm.get(k, j);
                    if !c.is_zero() {
                        row[i * dm + k] += c;
                    }
                }
                for k in 0..dn {
                    let c = gn.get(i, k);
                    if !c.is_zero() {
                        row[k * dm + j] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    ech.insert(row);
                }
                if ech.dim() == unknowns {
                    return Vec::new();
                }
            }
        }
    }
    let mut rows = ech.rows().to_vec();
    let piv = rref_in_place(&mut rows, unknowns);
    let free: Vec<usize> = (0..unknowns).filter(|j| !piv.contains(j)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); unknowns];
            x[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&piv) {
                x[p] = -row[f].clone();
            }
            Matrix::from_rows((0..dn).map(|i| x[i * dm..(i + 1) * dm].to_vec()).collect(), dm)
        })
        .collect()
}

/// M ≅ N: equal dimensions and an invertible intertwiner.
pub fn isomorphic(m: &ModuleRep, n: &ModuleRep) -> bool {
    if m.dim != n.dim || m.r != n.r {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    let homs = hom_space(m, n);
    if homs.is_empty() {
        return false;
    }
    // a fixed generic combination; invertible for some choice iff an isomorphism exists
    for attempt in 0..4i64 {
        let mut x = Matrix::zeros(n.dim, m.dim);
        for (k, h) in homs.iter().enumerate() {
            let c = Rational::from_integer((1 + k as i64 * (attempt + 2) + attempt * attempt).into());
            x = x.add(&h.scale(&c));
        }
        if x.rank() == m.dim {
            return true;
        }
    }
    false
}
