use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::cell::{check_char_rad, CellError, CellModule, CharRadCheck};
use super::module::{hom_space, ModuleRep};
use crate::brauer::{ideal_closure, ActionTables, DiagramBasis};
use crate::field::{Rational, Ring};
use crate::linalg::{certified_left_kernel, Echelon, Matrix, SparseRow};
use crate::partitions::{content_sum_outside, lambda0, LambdaR, Partition};

/// Largest r for which the whole cell datum and algebra radical are built.
pub const MAX_DATUM_R: usize = 5;

/// All cell modules of B_r(δ) in the order of Λ_r, with the matrices of
/// every basis diagram on every cell module.
pub struct CellDatum {
    pub r: usize,
    pub delta: Rational,
    pub basis: DiagramBasis,
    pub cells: Vec<CellModule>,
    /// `actions[λ][D]` = matrix of diagram D on W(λ).
    pub actions: Vec<Vec<Matrix<Rational>>>,
}

impl CellDatum {
    pub fn new(r: usize, delta: &Rational) -> Result<Self, CellError> {
        if r > MAX_DATUM_R {
            return Err(CellError::TooLarge { what: "cell datum", r, limit: MAX_DATUM_R });
        }
        let basis = DiagramBasis::new(r);
        let cells: Vec<CellModule> =
            LambdaR::new(r).members.par_iter().map(|l| CellModule::new(r, l, delta)).collect::<Result<_, _>>()?;
        let actions = cells.par_iter().map(|c| basis.diagrams.iter().map(|d| c.act_diagram(d)).collect()).collect();
        Ok(CellDatum { r, delta: delta.clone(), basis, cells, actions })
    }

    /// B_r(3).
    pub fn brauer3(r: usize) -> Result<Self, CellError> {
        Self::new(r, &Rational::from_i64(3))
    }

    pub fn position(&self, lambda: &Partition) -> Option<usize> {
        self.cells.iter().position(|c| &c.lambda == lambda)
    }

    /// Σ_λ (dim W(λ))², which equals dim B_r for a cell datum.
    pub fn dimension_sum(&self) -> usize {
        self.cells.iter().map(|c| c.dim() * c.dim()).sum()
    }

    /// Matrix of an algebra element (dense diagram coordinates) on W(λ).
    pub fn act_element(&self, cell: usize, a: &[Rational]) -> Matrix<Rational> {
        let n = self.cells[cell].dim();
        let mut m = Matrix::zeros(n, n);
        for (x, act) in a.iter().zip(&self.actions[cell]) {
            if !x.is_zero() {
                m = m.add(&act.scale(x));
            }
        }
        m
    }

    /// Whether a·L(λ) = 0, i.e. G_λ·ρ_λ(a) = 0.
    pub fn kills_simple(&self, cell: usize, a: &[Rational]) -> bool {
        self.cells[cell].gram.mul(&self.act_element(cell, a)).is_zero()
    }

    pub fn simple(&self, cell: usize) -> ModuleRep {
        self.cells[cell].simple_quotient()
    }

    pub fn simple_dims(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.gram_radical().0).collect()
    }
}

/// The radical ℛ of B_r(δ): elements acting as zero on every simple module,
/// the left kernel of D ↦ (G_λ·ρ_λ(D))_λ. Exact, certified.
pub fn algebra_radical(datum: &CellDatum) -> Vec<Vec<Rational>> {
    let rows: Vec<SparseRow<Rational>> = (0..datum.basis.len())
        .into_par_iter()
        .map(|j| {
            let mut row = Vec::new();
            let mut offset = 0;
            for (c, cell) in datum.cells.iter().enumerate() {
                let n = cell.dim();
                let m = cell.gram.mul(&datum.actions[c][j]);
                for a in 0..n {
                    for b in 0..n {
                        let x = m.get(a, b);
                        if !x.is_zero() {
                            row.push((offset + a * n + b, x.clone()));
                        }
                    }
                }
                offset += n * n;
            }
            row
        })
        .collect();
    let ncols = datum.dimension_sum();
    certified_left_kernel(&rows, ncols, 0x7261_6469).expect("radical kernel certification").basis
}

/// Composition factors of W(λ) with multiplicities, from the ℛ-radical
/// series; each semisimple layer is split by intertwiner dimensions
/// against the simple modules.
pub fn composition_factors(
    datum: &CellDatum,
    cell: usize,
    radical: &[Vec<Rational>],
    simples: &[ModuleRep],
) -> Vec<(Partition, usize)> {
    let w = &datum.cells[cell];
    let n = w.dim();
    if w.gram_radical().1.is_empty() {
        return vec![(w.lambda.clone(), 1)];
    }
    let rad_mats: Vec<Matrix<Rational>> = radical.par_iter().map(|a| datum.act_element(cell, a)).collect();
    let mut current: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i)).collect();
    let mut counts: Vec<usize> = vec![0; datum.cells.len()];
    while !current.is_empty() {
        let mut next = Echelon::new(n);
        for m in &rad_mats {
            for v in &current {
                let img = m.mul_vec(v);
                if img.iter().any(|x| !x.is_zero()) {
                    next.insert(img);
                }
            }
        }
        let next: Vec<Vec<Rational>> = next.rows().to_vec();
        let sub = w.rep.submodule(&current);
        let next_coords: Vec<Vec<Rational>> = next.iter().map(|v| coordinates(&current, v)).collect();
        let layer = sub.quotient(&next_coords);
        let mut covered = 0;
        for (k, s) in simples.iter().enumerate() {
            if s.dim == 0 || s.dim > layer.dim {
                continue;
            }
            let mult = hom_space(&layer, s).len();
            counts[k] += mult;
            covered += mult * s.dim;
        }
        assert_eq!(covered, layer.dim, "radical layer of W({}) is not accounted for by simple modules", w.lambda);
        current = next;
    }
    datum.cells.iter().zip(counts).filter(|(_, m)| *m > 0).map(|(c, m)| (c.lambda.clone(), m)).collect()
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from_i64(1);
    v
}

/// Coordinates of v in the (independent) spanning list `basis`.
fn coordinates(basis: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    let k = basis.len();
    let n = v.len();
    let m = Matrix::from_rows(
        (0..n).map(|i| basis.iter().map(|b| b[i].clone()).chain([v[i].clone()]).collect()).collect(),
        k + 1,
    );
    let ns = m.nullspace();
    let sol = ns.iter().find(|x| !x[k].is_zero()).expect("vector lies in the span");
    let c = -sol[k].clone();
    sol[..k].iter().map(|x| x / &c).collect()
}

/// A two-sided ideal J given by generators and its span.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub generators: Vec<Vec<Rational>>,
    pub span: Echelon<Rational>,
}

impl IdealSpec {
    pub fn generated_by(datum: &CellDatum, generators: Vec<Vec<Rational>>) -> Self {
        let tables = ActionTables::brauer(&datum.basis, &datum.delta);
        let span = ideal_closure(&tables, &generators);
        IdealSpec { generators, span }
    }

    pub fn zero(datum: &CellDatum) -> Self {
        IdealSpec { generators: Vec::new(), span: Echelon::new(datum.basis.len()) }
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }
}

/// Λ⁰_J = {λ : J·L(λ) = 0}, computed from the generators of J.
pub fn annihilated_lambdas(datum: &CellDatum, ideal: &IdealSpec) -> Vec<Partition> {
    (0..datum.cells.len())
        .filter(|&c| datum.cells[c].gram_radical().0 > 0)
        .filter(|&c| ideal.generators.iter().all(|g| datum.kills_simple(c, g)))
        .map(|c| datum.cells[c].lambda.clone())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRow {
    pub lambda: Partition,
    pub factors: Vec<(Partition, usize)>,
}

/// Both sides of: J ⊇ ℛ ⟺ for each λ ∈ Λ⁰_J every composition factor of
/// W(λ) other than L(λ) is some L(μ) with μ ∈ Λ¹_J.
#[derive(Clone, Debug, Serialize)]
pub struct ThmRadOutcome {
    pub r: usize,
    pub ideal_dim: usize,
    pub radical_dim: usize,
    pub lhs: bool,
    pub rhs: bool,
    pub lambda0: Vec<Partition>,
    pub factors: Vec<FactorRow>,
    /// Factor pairs (λ, μ) violating the criterion.
    pub violations: Vec<(Partition, Partition)>,
}

impl ThmRadOutcome {
    pub fn consistent(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn thmrad_check(
    datum: &CellDatum,
    radical: &[Vec<Rational>],
    simples: &[ModuleRep],
    ideal: &IdealSpec,
) -> Result<ThmRadOutcome, CellError> {
    for g in &ideal.generators {
        let star = star_vector(datum, g);
        if !ideal.span.contains(&star) {
            return Err(CellError::NotStarStable);
        }
    }
    let lhs = radical.iter().all(|v| ideal.span.contains(v));
    let l0 = annihilated_lambdas(datum, ideal);
    let mut factors = Vec::new();
    let mut violations = Vec::new();
    for lambda in &l0 {
        let c = datum.position(lambda).unwrap();
        let f = composition_factors(datum, c, radical, simples);
        for (mu, _) in &f {
            if mu != lambda && l0.contains(mu) {
                violations.push((lambda.clone(), mu.clone()));
            }
        }
        factors.push(FactorRow { lambda: lambda.clone(), factors: f });
    }
    Ok(ThmRadOutcome {
        r: datum.r,
        ideal_dim: ideal.dim(),
        radical_dim: radical.len(),
        lhs,
        rhs: violations.is_empty(),
        lambda0: l0,
        factors,
        violations,
    })
}

fn star_vector(datum: &CellDatum, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for (j, x) in v.iter().enumerate() {
        if !x.is_zero() {
            out[datum.basis.index_of(&datum.basis.get(j).star())] = x.clone();
        }
    }
    out
}

/// Per-λ summary of the cell module.
#[derive(Clone, Debug, Serialize)]
pub struct CellRow {
    pub lambda: Partition,
    pub dim_w: usize,
    pub dim_rad: usize,
    pub dim_l: usize,
    pub factors: Vec<(Partition, usize)>,
    pub char_rad: CharRadCheck,
    /// |μ| > |λ| for every factor L(μ), μ ≠ λ.
    pub strict_inequality: bool,
    /// Y(λ) ⊆ Y(μ) with vanishing content sum for every factor L(μ), μ ≠ λ.
    pub content_criterion: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellsReport {
    pub r: usize,
    pub algebra_dim: usize,
    pub radical_dim: usize,
    pub rows: Vec<CellRow>,
    /// Simple dimensions over Λ⁰, in Λ_r order.
    pub lambda0_simple_dims: Vec<usize>,
}

impl CellsReport {
    pub fn passed(&self) -> bool {
        let sq: usize = self.rows.iter().map(|r| r.dim_l * r.dim_l).sum();
        self.rows.iter().all(|r| r.char_rad.equal && r.strict_inequality && r.content_criterion)
            && self.algebra_dim - self.radical_dim == sq
    }

    pub fn row(&self, lambda: &Partition) -> Option<&CellRow> {
        self.rows.iter().find(|r| &r.lambda == lambda)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("lambda,dim_w,dim_rad,dim_l,factors,char_rad\n");
        for r in &self.rows {
            let f: Vec<String> = r.factors.iter().map(|(p, m)| format!("{p}^{m}")).collect();
            s.push_str(&format!(
                "\"{}\",{},{},{},\"{}\",{}\n",
                r.lambda.to_csv(),
                r.dim_w,
                r.dim_rad,
                r.dim_l,
                f.join(" "),
                r.char_rad.equal
            ));
        }
        s
    }
}

/// Dimensions, radicals, composition factors and radical checks for all
/// cell modules of B_r(3).
pub fn cells_report(datum: &CellDatum, radical: &[Vec<Rational>]) -> CellsReport {
    let simples: Vec<ModuleRep> = (0..datum.cells.len()).map(|c| datum.simple(c)).collect();
    let rows: Vec<CellRow> = (0..datum.cells.len())
        .into_par_iter()
        .map(|c| {
            let cell = &datum.cells[c];
            let (rank, rad) = cell.gram_radical();
            let factors = composition_factors(datum, c, radical, &simples);
            let others = factors.iter().filter(|(mu, _)| mu != &cell.lambda);
            let strict_inequality = others.clone().all(|(mu, _)| mu.size() > cell.lambda.size());
            let content_criterion =
                others.clone().all(|(mu, _)| content_sum_outside(&cell.lambda, mu) == (true, Some(0)));
            CellRow {
                lambda: cell.lambda.clone(),
                dim_w: cell.dim(),
                dim_rad: rad.len(),
                dim_l: rank,
                factors,
                char_rad: check_char_rad(cell),
                strict_inequality,
                content_criterion,
            }
        })
        .collect();
    let l0 = lambda0(datum.r);
    let lambda0_simple_dims = rows.iter().filter(|r| l0.contains(&r.lambda)).map(|r| r.dim_l).collect();
    CellsReport { r: datum.r, algebra_dim: datum.basis.len(), radical_dim: radical.len(), rows, lambda0_simple_dims }
}
