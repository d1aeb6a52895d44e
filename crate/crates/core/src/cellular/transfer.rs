use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::cell::CellModule;
use crate::field::{Fp, Rational, Ring, P61, P62A, P62B};
use crate::linalg::{crt, nullspace_from_rref, rational_reconstruct, rref_in_place, Echelon, Matrix};
use crate::partitions::Partition;

type Sparse<F> = Vec<Vec<(usize, F)>>;

/// Column-sparse copy of a dense matrix: `cols[j]` lists (i, m_ij).
fn sparse_cols(m: &Matrix<Rational>) -> Sparse<Rational> {
    (0..m.ncols())
        .map(|j| (0..m.nrows()).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect())
        .collect()
}

fn apply<F: Ring>(cols: &Sparse<F>, v: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (j, col) in cols.iter().enumerate() {
        if v[j].is_zero() {
            continue;
        }
        for (i, x) in col {
            out[*i].add_mul_assign(x, &v[j]);
        }
    }
    out
}

/// Spanning tree of M = B·w₀: basis vector k is generator `g` applied to
/// basis vector `parent` for `steps[k] = Some((parent, g))`; the root is w₀.
struct CyclicBasis {
    root: Vec<Rational>,
    steps: Vec<Option<(usize, usize)>>,
}

impl CyclicBasis {
    fn vectors<F: Ring>(&self, gens: &[Sparse<F>], root: Vec<F>) -> Vec<Vec<F>> {
        let n = root.len();
        let mut out: Vec<Vec<F>> = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let v = match step {
                None => root.clone(),
                Some((parent, g)) => apply(&gens[*g], &out[*parent], n),
            };
            out.push(v);
        }
        out
    }
}

fn reduce_sparse<const P: u64>(m: &[Sparse<Rational>]) -> Option<Vec<Sparse<Fp<P>>>> {
    m.iter()
        .map(|cols| {
            cols.iter().map(|c| c.iter().map(|(i, x)| Fp::<P>::from_rational(x).map(|y| (*i, y))).collect()).collect()
        })
        .collect()
}

fn cyclic_basis(gens: &[Sparse<Rational>], dim: usize, seed: u64) -> Option<CyclicBasis> {
    let gens_p = reduce_sparse::<P61>(gens)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let w0: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        let root_p: Vec<Fp<P61>> = w0.iter().map(|&x| Fp::from_rational(&Rational::from_i64(x)).unwrap()).collect();
        let mut ech = Echelon::new(dim);
        if !ech.insert(root_p.clone()) {
            continue;
        }
        let mut vectors = vec![root_p];
        let mut steps = vec![None];
        let mut k = 0;
        while k < vectors.len() && vectors.len() < dim {
            for (g, cols) in gens_p.iter().enumerate() {
                let w = apply(cols, &vectors[k], dim);
                if ech.insert(w.clone()) {
                    vectors.push(w);
                    steps.push(Some((k, g)));
                }
            }
            k += 1;
        }
        if vectors.len() == dim {
            return Some(CyclicBasis { root: w0.into_iter().map(Rational::from_i64).collect(), steps });
        }
    }
    None
}

/// dim Hom_B(W(μ), W(λ)), computed from a cyclic generator of W(μ).
#[derive(Clone, Debug, Serialize)]
pub struct HomTransfer {
    pub r: usize,
    pub source: Partition,
    pub target: Partition,
    /// From a modular rank; valid over ℚ.
    pub upper_bound: usize,
    /// Number of independent intertwiners reconstructed and verified exactly.
    pub verified: usize,
    #[serde(skip)]
    pub intertwiners: Vec<Matrix<Rational>>,
}

impl HomTransfer {
    /// The exact dimension, when the bounds meet.
    pub fn dim(&self) -> Option<usize> {
        (self.upper_bound == self.verified).then_some(self.upper_bound)
    }
}

type Residue = (u64, Vec<usize>, Vec<Vec<u64>>);

/// Hom between cell modules of the same B_r, without forming the
/// dim M · dim N unknowns of the direct system.
///
/// An intertwiner X is fixed by v = X·w₀ for a cyclic vector w₀ of M; v
/// satisfies one block of equations per (generator, tree vector). Random
/// 𝔽ₚ-combinations of the blocks bound the solution space from above; the
/// resulting X are lifted by rational reconstruction and checked exactly.
pub fn hom_dimension_cyclic(m: &CellModule, n: &CellModule, seed: u64) -> HomTransfer {
    assert_eq!(m.r, n.r, "modules over different algebras");
    let (dm, dn) = (m.dim(), n.dim());
    let gm: Vec<Sparse<Rational>> = m.rep.generators().map(sparse_cols).collect();
    let gn: Vec<Sparse<Rational>> = n.rep.generators().map(sparse_cols).collect();
    let mut out = HomTransfer {
        r: m.r,
        source: m.lambda.clone(),
        target: n.lambda.clone(),
        upper_bound: 0,
        verified: 0,
        intertwiners: Vec::new(),
    };
    if dm == 0 || dn == 0 {
        return out;
    }
    let tree = cyclic_basis(&gm, dm, seed).expect("cell module is cyclic");
    let residues: Vec<Residue> = [P61, P62A, P62B]
        .into_par_iter()
        .enumerate()
        .filter_map(|(k, p)| {
            match k {
                0 => modular_solutions::<P61>(&tree, &gm, &gn, seed),
                1 => modular_solutions::<P62A>(&tree, &gm, &gn, seed),
                _ => modular_solutions::<P62B>(&tree, &gm, &gn, seed),
            }
            .map(|(free, xs)| (p, free, xs))
        })
        .collect();
    // a prime can only enlarge the solution space
    let Some(best) = residues.iter().map(|r| r.2.len()).min() else {
        return out;
    };
    out.upper_bound = best;
    if best == 0 {
        return out;
    }
    let free = &residues.iter().find(|r| r.2.len() == best).unwrap().1;
    let mut modulus = BigInt::from(1);
    let mut acc: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); dn * dm]; best];
    for (p, _, xs) in residues.iter().filter(|r| &r.1 == free) {
        for (a, x) in acc.iter_mut().zip(xs) {
            for (s, y) in a.iter_mut().zip(x) {
                *s = crt(s, &modulus, *y, *p);
            }
        }
        modulus *= BigInt::from(*p);
        let candidate: Option<Vec<Matrix<Rational>>> = acc
            .iter()
            .map(|v| {
                let flat: Option<Vec<Rational>> = v.iter().map(|a| rational_reconstruct(a, &modulus)).collect();
                flat.map(|f| Matrix::from_rows(f.chunks(dm).map(<[Rational]>::to_vec).collect(), dm))
            })
            .collect();
        let Some(xs) = candidate else { continue };
        let independent = Echelon::from_vectors(dn * dm, xs.iter().map(|x| x.to_rows().concat())).dim() == xs.len();
        if independent && xs.par_iter().all(|x| intertwines(x, &gm, &gn)) {
            out.verified = xs.len();
            out.intertwiners = xs;
            break;
        }
    }
    out
}

/// Bases of the intertwiners modulo P (X row-major, flattened), with the
/// free coordinates of the corresponding v = X·w₀.
fn modular_solutions<const P: u64>(
    tree: &CyclicBasis,
    gm: &[Sparse<Rational>],
    gn: &[Sparse<Rational>],
    seed: u64,
) -> Option<(Vec<usize>, Vec<Vec<u64>>)> {
    let gm_p = reduce_sparse::<P>(gm)?;
    let gn_p = reduce_sparse::<P>(gn)?;
    let root: Vec<Fp<P>> = tree.root.iter().map(Fp::from_rational).collect::<Option<_>>()?;
    let dm = root.len();
    let dn = gn.first().map_or(0, Vec::len);
    let b_cols = tree.vectors(&gm_p, root);
    let b = Matrix::from_rows((0..dm).map(|i| b_cols.iter().map(|v| v[i]).collect()).collect(), dm);
    let binv = b.inverse()?;
    // coords[g][j][k]: coefficient of b_j in g·b_k
    let coords: Vec<Matrix<Fp<P>>> = gm_p
        .iter()
        .map(|cols| {
            let gb: Vec<Vec<Fp<P>>> = b_cols.iter().map(|v| apply(cols, v, dm)).collect();
            binv.mul(&Matrix::from_rows((0..dm).map(|i| gb.iter().map(|v| v[i]).collect()).collect(), dm))
        })
        .collect();
    // A_k = ρ_N(word_k), column-major dense
    let mut a: Vec<Vec<Vec<Fp<P>>>> = Vec::with_capacity(dm);
    for step in &tree.steps {
        let ak = match step {
            None => (0..dn).map(|j| unit::<P>(dn, j)).collect(),
            Some((parent, g)) => a[*parent].iter().map(|col| apply(&gn_p[*g], col, dn)).collect(),
        };
        a.push(ak);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ P);
    let mut rows: Vec<Vec<Fp<P>>> = Vec::new();
    for _ in 0..3 {
        let r: Vec<Vec<Fp<P>>> = (0..gn.len()).map(|_| (0..dm).map(|_| Fp::new(rng.gen())).collect()).collect();
        // L = Σ_j α_j A_j − Σ_g ρ_N(g)·S_g with S_g = Σ_k r_gk A_k
        let mut l: Vec<Vec<Fp<P>>> = vec![vec![Fp::zero(); dn]; dn];
        for j in 0..dm {
            let mut alpha = Fp::<P>::zero();
            for (g, rg) in r.iter().enumerate() {
                for (k, rk) in rg.iter().enumerate() {
                    alpha.add_mul_assign(rk, coords[g].get(j, k));
                }
            }
            add_scaled(&mut l, &a[j], alpha);
        }
        for (g, rg) in r.iter().enumerate() {
            let mut s: Vec<Vec<Fp<P>>> = vec![vec![Fp::zero(); dn]; dn];
            for (k, rk) in rg.iter().enumerate() {
                add_scaled(&mut s, &a[k], *rk);
            }
            for (lc, sc) in l.iter_mut().zip(&s) {
                let gs = apply(&gn_p[g], sc, dn);
                for (x, y) in lc.iter_mut().zip(gs) {
                    *x = *x - y;
                }
            }
        }
        rows.extend((0..dn).map(|i| l.iter().map(|col| col[i]).collect::<Vec<_>>()));
    }
    let pivots = rref_in_place(&mut rows, dn);
    let free: Vec<usize> = (0..dn).filter(|j| !pivots.contains(j)).collect();
    let xs = nullspace_from_rref(&rows, &pivots, dn)
        .into_iter()
        .map(|v| {
            // X·b_k = A_k v, so X = Y·B⁻¹
            let y = Matrix::from_rows((0..dn).map(|i| a.iter().map(|ak| row_dot(ak, i, &v)).collect()).collect(), dm);
            y.mul(&binv).to_rows().concat().into_iter().map(|x| x.value()).collect()
        })
        .collect();
    Some((free, xs))
}

/// Row i of a column-major matrix times v.
fn row_dot<const P: u64>(cols: &[Vec<Fp<P>>], i: usize, v: &[Fp<P>]) -> Fp<P> {
    let mut acc = Fp::zero();
    for (c, x) in cols.iter().zip(v) {
        acc.add_mul_assign(&c[i], x);
    }
    acc
}

fn unit<const P: u64>(n: usize, i: usize) -> Vec<Fp<P>> {
    let mut v = vec![Fp::zero(); n];
    v[i] = Fp::new(1);
    v
}

fn add_scaled<const P: u64>(acc: &mut [Vec<Fp<P>>], m: &[Vec<Fp<P>>], c: Fp<P>) {
    if c.is_zero() {
        return;
    }
    for (ac, mc) in acc.iter_mut().zip(m) {
        for (x, y) in ac.iter_mut().zip(mc) {
            x.add_mul_assign(&c, y);
        }
    }
}

/// X·ρ_M(g) = ρ_N(g)·X for every generator, exactly.
fn intertwines(x: &Matrix<Rational>, gm: &[Sparse<Rational>], gn: &[Sparse<Rational>]) -> bool {
    let dn = x.nrows();
    let xt = x.transpose();
    gm.iter().zip(gn).all(|(cm, cn)| {
        cm.iter().enumerate().all(|(j, col)| {
            let mut lhs = vec![Rational::zero(); dn];
            for (i, c) in col {
                for (l, xv) in lhs.iter_mut().zip(xt.row(*i)) {
                    l.add_mul_assign(c, xv);
                }
            }
            lhs == apply(cn, xt.row(j), dn)
        })
    })
}
