use std::collections::HashMap;

use num_traits::Zero;

use super::cell::CellError;
use super::module::ModuleRep;
use crate::brauer::{BrauerDiagram, DiagramBasis};
use crate::field::{Rational, Ring};
use crate::linalg::{Echelon, Matrix};

/// Largest r accepted by [`functor_g`].
pub const MAX_G_R: usize = 3;

/// F(M) = e_{r−1}M as a B_{r−2}-module (B_{r−2} acting on the first r−2
/// strands).
pub fn functor_f(m: &ModuleRep) -> ModuleRep {
    let r = m.r;
    assert!(r >= 3, "F needs r ≥ 3");
    let e = &m.e[r - 2];
    let img =
        Echelon::from_vectors(m.dim, e.transpose().to_rows().into_iter().filter(|v| v.iter().any(|x| !x.is_zero())));
    let restricted = ModuleRep { r: r - 2, dim: m.dim, s: m.s[..r - 3].to_vec(), e: m.e[..r - 3].to_vec() };
    restricted.submodule(img.rows())
}

/// G(M) = B_{r+2}e_{r+1} ⊗_{B_r} M, the balanced tensor product over the
/// diagrams of B_{r+2} whose bottom row pairs the last two points.
pub fn functor_g(m: &ModuleRep, delta: &Rational) -> Result<ModuleRep, CellError> {
    let r = m.r;
    if r > MAX_G_R {
        return Err(CellError::TooLarge { what: "functor G", r, limit: MAX_G_R });
    }
    let n = r + 2;
    let basis = DiagramBasis::new(n);
    let diagrams: Vec<&BrauerDiagram> = basis.diagrams.iter().filter(|d| d.partner(n + r) == n + r + 1).collect();
    let positions: HashMap<&BrauerDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (*d, i)).collect();
    let index = |d: &BrauerDiagram| positions.get(d).copied();
    let dm = m.dim;
    let total = diagrams.len() * dm;
    let slot = |di: usize, k: usize| di * dm + k;

    // (D·g) ⊗ w − D ⊗ (g·w)
    let mut relations = Echelon::new(total);
    let gens_r: Vec<(BrauerDiagram, &Matrix<Rational>)> = (1..r)
        .flat_map(|i| [(BrauerDiagram::s(i, r).embed(n), &m.s[i - 1]), (BrauerDiagram::e(i, r).embed(n), &m.e[i - 1])])
        .collect();
    for (di, d) in diagrams.iter().enumerate() {
        for (g, rho) in &gens_r {
            let (dg, loops) = d.compose(g);
            let c = Ring::pow(delta, loops as u32);
            let dgi = index(&dg).expect("right action preserves the bottom arc");
            for k in 0..dm {
                let mut v = vec![Rational::zero(); total];
                v[slot(dgi, k)] += &c;
                for j in 0..dm {
                    let x = rho.get(j, k);
                    if !x.is_zero() {
                        v[slot(di, j)] -= x;
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    relations.insert(v);
                }
            }
        }
    }

    let left = |x: &BrauerDiagram| -> Matrix<Rational> {
        let mut out = Matrix::zeros(total, total);
        for (di, d) in diagrams.iter().enumerate() {
            let (xd, loops) = x.compose(d);
            let c = Ring::pow(delta, loops as u32);
            let xi = index(&xd).expect("left action preserves the bottom arc");
            for k in 0..dm {
                out.set(slot(xi, k), slot(di, k), c.clone());
            }
        }
        out
    };
    let free = ModuleRep {
        r: n,
        dim: total,
        s: (1..n).map(|i| left(&BrauerDiagram::s(i, n))).collect(),
        e: (1..n).map(|i| left(&BrauerDiagram::e(i, n))).collect(),
    };
    Ok(free.quotient(relations.rows()))
}
