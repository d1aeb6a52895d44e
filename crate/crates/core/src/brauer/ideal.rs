use rayon::prelude::*;

use super::diagram::{BrauerDiagram, DiagramBasis};
use crate::field::{Field, Ring};
use crate::linalg::Echelon;

/// Left and right multiplication by the algebra generators on basis
/// coordinates: `left[g][i]` is g·b_i and `right[g][i]` is b_i·g.
#[derive(Clone, Debug)]
pub struct ActionTables<F> {
    pub n: usize,
    pub left: Vec<Vec<Vec<(usize, F)>>>,
    pub right: Vec<Vec<Vec<(usize, F)>>>,
}

impl<F: Ring> ActionTables<F> {
    /// Generator tables of B_r(δ) for the generators s_1…s_{r−1}, e_1…e_{r−1}.
    pub fn brauer(basis: &DiagramBasis, delta: &F) -> Self {
        let r = basis.r;
        let mut gens: Vec<BrauerDiagram> = (1..r).map(|i| BrauerDiagram::s(i, r)).collect();
        gens.extend((1..r).map(|i| BrauerDiagram::e(i, r)));
        let mut powers = vec![F::one()];
        for _ in 0..r {
            let next = powers.last().unwrap().mul_ref(delta);
            powers.push(next);
        }
        let build = |left: bool| -> Vec<Vec<Vec<(usize, F)>>> {
            gens.iter()
                .map(|g| {
                    basis
                        .diagrams
                        .iter()
                        .map(|d| {
                            let (p, loops) = if left { g.compose(d) } else { d.compose(g) };
                            vec![(basis.index_of(&p), powers[loops].clone())]
                        })
                        .collect()
                })
                .collect()
        };
        ActionTables { n: basis.len(), left: build(true), right: build(false) }
    }

    pub fn num_generators(&self) -> usize {
        self.left.len()
    }

    fn apply(table: &[Vec<(usize, F)>], v: &[F], n: usize) -> Vec<F> {
        let mut out = vec![F::zero(); n];
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

    pub fn left_mul(&self, g: usize, v: &[F]) -> Vec<F> {
        Self::apply(&self.left[g], v, self.n)
    }

    pub fn right_mul(&self, g: usize, v: &[F]) -> Vec<F> {
        Self::apply(&self.right[g], v, self.n)
    }

    /// All 2·(#generators) one-step products of `v`.
    pub fn neighbours(&self, v: &[F]) -> Vec<Vec<F>> {
        let mut out = Vec::with_capacity(2 * self.num_generators());
        for g in 0..self.num_generators() {
            out.push(self.left_mul(g, v));
            out.push(self.right_mul(g, v));
        }
        out
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G + Sync) -> ActionTables<G>
    where
        F: Sync,
    {
        let conv = |t: &Vec<Vec<Vec<(usize, F)>>>| -> Vec<Vec<Vec<(usize, G)>>> {
            t.iter()
                .map(|g| {
                    g.iter()
                        .map(|row| row.iter().map(|(j, c)| (*j, f(c))).filter(|(_, c)| !c.is_zero()).collect())
                        .collect()
                })
                .collect()
        };
        ActionTables { n: self.n, left: conv(&self.left), right: conv(&self.right) }
    }
}

/// Two-sided ideal generated by `gens`: the smallest subspace containing them
/// that is closed under left and right multiplication by the generators.
///
/// Each round multiplies the newly added basis vectors in parallel and
/// reduces the products sequentially in a fixed order, so the result does
/// not depend on the thread count.
pub fn ideal_closure<F: Field>(tables: &ActionTables<F>, gens: &[Vec<F>]) -> Echelon<F> {
    let mut ech = Echelon::new(tables.n);
    let mut frontier = Vec::new();
    for g in gens {
        let v = ech.reduce(g.clone());
        if ech.insert(v.clone()) {
            frontier.push(v);
        }
    }
    while !frontier.is_empty() {
        let products: Vec<Vec<Vec<F>>> = frontier.par_iter().map(|v| tables.neighbours(v)).collect();
        frontier.clear();
        for p in products.into_iter().flatten() {
            let v = ech.reduce(p);
            if v.iter().any(|x| !x.is_zero()) {
                ech.insert(v.clone());
                frontier.push(v);
            }
        }
    }
    ech
}

/// Ideal closure carried out in a residue field, with exact products kept for
/// every vector that is new in the residue field.
///
/// The kept vectors are linearly independent (their images are) and lie in
/// the ideal, so their number is a lower bound for the dimension of the
/// ideal in characteristic zero.
#[derive(Clone, Debug)]
pub struct ScreenedSpan<R, F> {
    pub exact: Vec<Vec<R>>,
    pub residue: Echelon<F>,
}

impl<R, F> ScreenedSpan<R, F> {
    pub fn dim(&self) -> usize {
        self.exact.len()
    }
}

/// `reduce` must be a ring homomorphism, e.g. reduction modulo p or
/// evaluation at a point.
pub fn screened_closure<R: Ring, F: Field>(
    exact: &ActionTables<R>,
    reduce: impl Fn(&R) -> F + Sync,
    gens: &[Vec<R>],
) -> ScreenedSpan<R, F> {
    let image = |v: &[R]| -> Vec<F> { v.iter().map(&reduce).collect() };
    let mut ech = Echelon::new(exact.n);
    let mut kept = Vec::new();
    let mut frontier: Vec<Vec<R>> = Vec::new();
    for g in gens {
        if ech.insert(image(g)) {
            kept.push(g.clone());
            frontier.push(g.clone());
        }
    }
    while !frontier.is_empty() {
        let products: Vec<Vec<(Vec<R>, Vec<F>)>> = frontier
            .par_iter()
            .map(|v| {
                exact
                    .neighbours(v)
                    .into_iter()
                    .map(|p| {
                        let m = image(&p);
                        (p, m)
                    })
                    .collect()
            })
            .collect();
        frontier.clear();
        for (p, m) in products.into_iter().flatten() {
            if ech.insert(m) {
                kept.push(p.clone());
                frontier.push(p);
            }
        }
    }
    ScreenedSpan { exact: kept, residue: ech }
}

/// Diagrams with at most m through strands (a basis of the ideal B_r^m).
pub fn through_filtration(basis: &DiagramBasis, m: usize) -> Vec<BrauerDiagram> {
    basis.diagrams.iter().filter(|d| d.through_count() <= m).cloned().collect()
}
