use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::dangle::{dangles, Dangle};
use super::module::ModuleRep;
use crate::brauer::BrauerDiagram;
use crate::field::{Rational, Ring};
use crate::linalg::{Echelon, Matrix};
use crate::partitions::{LambdaR, Partition};
use crate::symgrp::SpechtModule;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CellError {
    #[error("{lambda} is not in Λ_{r}")]
    NotInLambda { lambda: String, r: usize },
    #[error("r = {r} exceeds the limit {limit} for {what}")]
    TooLarge { what: &'static str, r: usize, limit: usize },
    #[error("the subspace J is not *-stable")]
    NotStarStable,
}

/// The cell module W_r(λ) ≅ I_r^t ⊗ S(λ) of B_r(δ), |λ| = t, with basis
/// (dangle, standard tableau) ordered dangle-major.
#[derive(Clone, Debug)]
pub struct CellModule {
    pub lambda: Partition,
    pub r: usize,
    pub delta: Rational,
    pub dangles: Vec<Dangle>,
    pub specht: SpechtModule,
    pub rep: ModuleRep,
    /// Gram matrix of the invariant form φ_λ.
    pub gram: Matrix<Rational>,
}

impl CellModule {
    pub fn new(r: usize, lambda: &Partition, delta: &Rational) -> Result<Self, CellError> {
        if !LambdaR::new(r).contains(lambda) {
            return Err(CellError::NotInLambda { lambda: lambda.to_string(), r });
        }
        let t = lambda.size();
        let ds = dangles(r, t);
        let specht = SpechtModule::new(lambda);
        let mut cell = CellModule {
            lambda: lambda.clone(),
            r,
            delta: delta.clone(),
            dangles: ds,
            specht,
            rep: ModuleRep { r, dim: 0, s: Vec::new(), e: Vec::new() },
            gram: Matrix::zeros(0, 0),
        };
        let mut perms = HashMap::new();
        let s = (1..r).map(|i| cell.act_diagram_cached(&BrauerDiagram::s(i, r), &mut perms)).collect();
        let e = (1..r).map(|i| cell.act_diagram_cached(&BrauerDiagram::e(i, r), &mut perms)).collect();
        cell.rep = ModuleRep { r, dim: cell.dim(), s, e };
        cell.gram = cell.compute_gram(&mut perms);
        Ok(cell)
    }

    pub fn dim(&self) -> usize {
        self.dangles.len() * self.specht.dim()
    }

    fn index(&self, dangle: &Dangle) -> usize {
        self.dangles.binary_search(dangle).expect("dangle enumerated in sorted order")
    }

    fn perm_matrix<'a>(
        &self,
        p: &[usize],
        cache: &'a mut HashMap<Vec<usize>, Matrix<Rational>>,
    ) -> &'a Matrix<Rational> {
        cache.entry(p.to_vec()).or_insert_with(|| self.specht.perm_action(p))
    }

    /// The matrix of a diagram, computed directly on dangles.
    pub fn act_diagram(&self, d: &BrauerDiagram) -> Matrix<Rational> {
        self.act_diagram_cached(d, &mut HashMap::new())
    }

    fn act_diagram_cached(
        &self,
        d: &BrauerDiagram,
        perms: &mut HashMap<Vec<usize>, Matrix<Rational>>,
    ) -> Matrix<Rational> {
        let k = self.specht.dim();
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (ui, u) in self.dangles.iter().enumerate() {
            let Some((u2, pi, loops)) = u.act(d) else { continue };
            let vi = self.index(&u2);
            let scale = Ring::pow(&self.delta, loops as u32);
            let pm = self.perm_matrix(&pi, perms);
            for a in 0..k {
                for b in 0..k {
                    let x = pm.get(a, b);
                    if !x.is_zero() {
                        m.set(vi * k + a, ui * k + b, x * &scale);
                    }
                }
            }
        }
        m
    }

    fn compute_gram(&self, perms: &mut HashMap<Vec<usize>, Matrix<Rational>>) -> Matrix<Rational> {
        let k = self.specht.dim();
        let n = self.dim();
        let form = self.specht.form_matrix();
        let mut g = Matrix::zeros(n, n);
        for (ui, u) in self.dangles.iter().enumerate() {
            for (vi, v) in self.dangles.iter().enumerate() {
                let Some((pi, loops)) = u.pair(v) else { continue };
                let scale = Ring::pow(&self.delta, loops as u32);
                let pm = form.mul(self.perm_matrix(&pi, perms));
                for a in 0..k {
                    for b in 0..k {
                        let x = pm.get(a, b);
                        if !x.is_zero() {
                            g.set(ui * k + a, vi * k + b, x * &scale);
                        }
                    }
                }
            }
        }
        g
    }

    /// (rank of the Gram matrix = dim L(λ), basis of Rad(λ)).
    pub fn gram_radical(&self) -> (usize, Vec<Vec<Rational>>) {
        let rad = self.gram.nullspace();
        (self.dim() - rad.len(), rad)
    }

    /// The simple head L(λ) = W(λ)/Rad(λ).
    pub fn simple_quotient(&self) -> ModuleRep {
        let (_, rad) = self.gram_radical();
        self.rep.quotient(&rad)
    }
}

/// Ann_{W(λ)}(B_r^t) (joint kernel of all diagrams with at most t through
/// strands) compared with Rad(λ).
#[derive(Clone, Debug, Serialize)]
pub struct CharRadCheck {
    pub lambda: Partition,
    pub radical_dim: usize,
    pub annihilator_dim: usize,
    pub equal: bool,
}

pub fn check_char_rad(cell: &CellModule) -> CharRadCheck {
    let t = cell.lambda.size();
    let n = cell.dim();
    let basis = crate::brauer::DiagramBasis::new(cell.r);
    let mut rows = Echelon::new(n);
    for d in basis.diagrams.iter().filter(|d| d.through_count() <= t) {
        let m = cell.act_diagram(d);
        for i in 0..n {
            let row = m.row(i);
            if row.iter().any(|x| !x.is_zero()) {
                rows.insert(row.to_vec());
            }
        }
        if rows.dim() == n {
            break;
        }
    }
    let ann = Matrix::from_rows(rows.rows().to_vec(), n).nullspace();
    let (_, rad) = cell.gram_radical();
    let ea = Echelon::from_vectors(n, ann.iter().cloned());
    let er = Echelon::from_vectors(n, rad.iter().cloned());
    CharRadCheck {
        lambda: cell.lambda.clone(),
        radical_dim: rad.len(),
        annihilator_dim: ann.len(),
        equal: ea.same_subspace(&er),
    }
}
