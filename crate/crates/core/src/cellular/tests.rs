use num_traits::Zero;

use super::*;
use crate::brauer::{ideal_closure, phi, ActionTables, BrauerDiagram, DiagramBasis};
use crate::field::{Rational, Ring};
use crate::partitions::{LambdaR, Partition};

fn three() -> Rational {
    Rational::from_i64(3)
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts)
}

fn cell(r: usize, parts: &[usize]) -> CellModule {
    CellModule::new(r, &p(parts), &three()).unwrap()
}

fn odd_double_factorial(n: usize) -> usize {
    (1..n).step_by(2).product::<usize>().max(1)
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Standard tableau count by hook lengths.
fn hook_count(lambda: &Partition) -> usize {
    let conj = lambda.conjugate();
    let num: usize = (1..=lambda.size()).product();
    let hooks: usize = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| (0..row).map(move |j| (i, j, row)))
        .map(|(i, j, row)| row - j + conj.parts()[j] - i - 1)
        .product();
    num / hooks
}

#[test]
fn dimensions_match_counting_formula() {
    for r in 1..=5 {
        let mut sum = 0;
        for lambda in &LambdaR::new(r).members {
            let t = lambda.size();
            let expect = binom(r, t) * odd_double_factorial(r - t) * hook_count(lambda);
            let c = CellModule::new(r, lambda, &three()).unwrap();
            assert_eq!(c.dim(), expect, "dim W_{r}({lambda})");
            sum += expect * expect;
        }
        assert_eq!(sum, crate::brauer::double_factorial(r));
    }
    let dims: Vec<usize> =
        LambdaR::new(4).members.iter().map(|l| CellModule::new(4, l, &three()).unwrap().dim()).collect();
    assert_eq!(dims, vec![1, 3, 2, 3, 1, 6, 6, 3]);
    assert_eq!(cell(5, &[2, 1]).dim(), 20);
}

#[test]
fn rejects_partitions_outside_lambda_r() {
    assert!(matches!(CellModule::new(4, &p(&[3]), &three()), Err(CellError::NotInLambda { .. })));
    assert!(matches!(CellModule::new(4, &p(&[2, 2, 1]), &three()), Err(CellError::NotInLambda { .. })));
}

#[test]
fn relations_form_and_direct_action() {
    for r in 2..=5 {
        let basis = DiagramBasis::new(r);
        for lambda in &LambdaR::new(r).members {
            let c = CellModule::new(r, lambda, &three()).unwrap();
            assert!(c.rep.satisfies_relations(&three()), "relations on W_{r}({lambda})");
            let g = &c.gram;
            assert_eq!(g, &g.transpose(), "Gram of W_{r}({lambda}) not symmetric");
            assert!(!g.is_zero(), "φ vanishes on W_{r}({lambda})");
            // s_i, e_i are self-adjoint diagrams: Gρ(g) = ρ(g)ᵀG
            for m in c.rep.generators() {
                assert_eq!(g.mul(m), m.transpose().mul(g), "invariance on W_{r}({lambda})");
            }
            if r <= 4 {
                for d in &basis.diagrams {
                    assert_eq!(c.act_diagram(d), c.rep.act_diagram(d), "{d} on W_{r}({lambda})");
                    let star = c.act_diagram(&d.star());
                    assert_eq!(g.mul(&c.act_diagram(d)), star.transpose().mul(g));
                }
            }
        }
    }
}

#[test]
fn three_cup_relation_on_w5_1() {
    let c = cell(5, &[1]);
    let (e1, e2) = (&c.rep.e[0], &c.rep.e[1]);
    assert_eq!(&e1.mul(e2).mul(e1), e1);
}

#[test]
fn gram_radicals() {
    for lambda in &LambdaR::new(4).members {
        assert_eq!(CellModule::new(4, lambda, &three()).unwrap().gram_radical().1.len(), 0);
    }
    let expected = [(vec![2, 1], 15), (vec![1, 1, 1], 6)];
    for lambda in &LambdaR::new(5).members {
        let c = CellModule::new(5, lambda, &three()).unwrap();
        let (rank, rad) = c.gram_radical();
        let want = expected.iter().find(|(q, _)| p(q) == *lambda).map_or(c.dim(), |x| x.1);
        assert_eq!(rank, want, "rank of φ on W_5({lambda})");
        assert_eq!(rank + rad.len(), c.dim());
    }
}

#[test]
fn char_rad() {
    for (r, parts, dim) in
        [(5, vec![2, 1], 5), (5, vec![5], 0), (5, vec![1, 1, 1], 4), (4, vec![2], 0), (4, vec![1, 1], 0)]
    {
        let ch = check_char_rad(&cell(r, &parts));
        assert!(ch.equal);
        assert_eq!((ch.radical_dim, ch.annihilator_dim), (dim, dim));
    }
}

#[test]
fn cyclic_outside_radical() {
    for (parts, seed) in [(vec![2, 1], 3i64), (vec![1, 1, 1], 5), (vec![3], 7)] {
        let c = cell(5, &parts);
        let (_, rad) = c.gram_radical();
        let rad_span = crate::linalg::Echelon::from_vectors(c.dim(), rad.iter().cloned());
        let w: Vec<Rational> = (0..c.dim() as i64).map(|i| Rational::from_i64((i * seed) % 7 - 3)).collect();
        assert!(!rad_span.contains(&w));
        let mut span = crate::linalg::Echelon::new(c.dim());
        let mut frontier = vec![w];
        while let Some(v) = frontier.pop() {
            if span.insert(v.clone()) {
                frontier.extend(c.rep.generators().map(|m| m.mul_vec(&v)));
            }
        }
        assert_eq!(span.dim(), c.dim());
    }
}

#[test]
fn intertwiners_between_cell_modules() {
    let a = cell(5, &[2, 2, 1]);
    let b = cell(5, &[2, 1]);
    let homs = hom_space(&a.rep, &b.rep);
    assert_eq!(homs.len(), 1);
    // the image of the intertwiner is the radical
    let x = &homs[0];
    let rad = crate::linalg::Echelon::from_vectors(b.dim(), b.gram_radical().1);
    for col in x.transpose().to_rows() {
        assert!(rad.contains(&col));
    }
    assert_eq!(x.rank(), 5);
    assert!(hom_space(&cell(5, &[3, 2]).rep, &b.rep).is_empty());
    assert_eq!(hom_space(&b.rep, &b.rep).len(), 1);
    assert!(isomorphic(&a.rep, &a.rep));
    assert!(!isomorphic(&cell(4, &[2]).rep, &cell(4, &[1, 1]).rep));
}

#[test]
fn functor_f_on_cell_modules() {
    for lambda in &LambdaR::new(3).members {
        let w5 = CellModule::new(5, lambda, &three()).unwrap();
        let w3 = CellModule::new(3, lambda, &three()).unwrap();
        assert!(isomorphic(&functor_f(&w5.rep), &w3.rep), "F(W_5({lambda}))");
    }
    let f = functor_f(&cell(4, &[]).rep);
    assert_eq!(f.dim, 1);
    assert!(isomorphic(&f, &cell(2, &[]).rep));
}

#[test]
fn functor_g_and_fg_identity() {
    let g = functor_g(&cell(3, &[1]).rep, &three()).unwrap();
    assert_eq!(g.dim, 15);
    assert!(g.satisfies_relations(&three()));
    assert!(isomorphic(&g, &cell(5, &[1]).rep));
    let g2 = functor_g(&cell(2, &[]).rep, &three()).unwrap();
    assert!(isomorphic(&g2, &cell(4, &[]).rep));
    for lambda in &LambdaR::new(3).members {
        let w = CellModule::new(3, lambda, &three()).unwrap();
        let fg = functor_f(&functor_g(&w.rep, &three()).unwrap());
        assert!(isomorphic(&fg, &w.rep), "FG(W_3({lambda}))");
    }
    assert!(matches!(functor_g(&cell(4, &[]).rep, &three()), Err(CellError::TooLarge { .. })));
}

fn r5() -> (CellDatum, Vec<Vec<Rational>>) {
    let datum = CellDatum::brauer3(5).unwrap();
    let rad = algebra_radical(&datum);
    (datum, rad)
}

#[test]
fn radical_small_r() {
    for r in 3..=4 {
        let datum = CellDatum::brauer3(r).unwrap();
        assert_eq!(datum.dimension_sum(), crate::brauer::double_factorial(r));
        assert!(algebra_radical(&datum).is_empty());
    }
    assert!(matches!(CellDatum::brauer3(6), Err(CellError::TooLarge { .. })));
}

#[test]
fn radical_and_factors_r5() {
    let (datum, rad) = r5();
    let sq: usize = datum.simple_dims().iter().map(|d| d * d).sum();
    assert!(!rad.is_empty());
    assert_eq!(rad.len(), 945 - sq);
    // each radical element kills every simple module
    for c in 0..datum.cells.len() {
        for v in rad.iter().take(5) {
            assert!(datum.kills_simple(c, v));
        }
    }
    let report = cells_report(&datum, &rad);
    assert!(report.passed());
    assert_eq!(report.row(&p(&[2, 1])).unwrap().factors, vec![(p(&[2, 2, 1]), 1), (p(&[2, 1]), 1)]);
    assert_eq!(report.row(&p(&[1, 1, 1])).unwrap().factors, vec![(p(&[2, 1, 1, 1]), 1), (p(&[1, 1, 1]), 1)]);
    for row in &report.rows {
        assert!(row.char_rad.equal);
        let total: usize = row.factors.iter().map(|(mu, m)| m * report.row(mu).unwrap().dim_l).sum();
        assert_eq!(total, row.dim_w, "factors of W_5({})", row.lambda);
    }
    let mut l0 = report.lambda0_simple_dims.clone();
    l0.sort_unstable();
    assert_eq!(l0, vec![1, 4, 6, 10, 15, 15]);

    let tables = ActionTables::brauer(&datum.basis, &three());
    let phi_v = phi(5).to_dense(&datum.basis);
    let ideal = IdealSpec { generators: vec![phi_v.clone()], span: ideal_closure(&tables, &[phi_v]) };
    let out = thmrad_check(&datum, &rad, &report_simples(&datum), &ideal).unwrap();
    assert!(out.lhs && out.rhs, "{out:?}");
    let zero = IdealSpec::zero(&datum);
    let out0 = thmrad_check(&datum, &rad, &report_simples(&datum), &zero).unwrap();
    assert!(!out0.lhs && !out0.rhs);
    let lam: Vec<Partition> = annihilated_lambdas(&datum, &ideal);
    assert_eq!(lam, crate::partitions::lambda0(5));

    // a non-*-stable generator set is rejected
    let mut g = vec![Rational::zero(); datum.basis.len()];
    let d = BrauerDiagram::e(1, 5).compose(&BrauerDiagram::s(2, 5)).0;
    g[datum.basis.index_of(&d)] = Rational::from_i64(1);
    let bad = IdealSpec { generators: vec![g.clone()], span: crate::linalg::Echelon::from_vectors(g.len(), [g]) };
    assert!(matches!(thmrad_check(&datum, &rad, &report_simples(&datum), &bad), Err(CellError::NotStarStable)));
}

fn report_simples(datum: &CellDatum) -> Vec<ModuleRep> {
    (0..datum.cells.len()).map(|c| datum.simple(c)).collect()
}

#[test]
fn thmrad_semisimple_r4() {
    let datum = CellDatum::brauer3(4).unwrap();
    let rad = algebra_radical(&datum);
    let out = thmrad_check(&datum, &rad, &report_simples(&datum), &IdealSpec::zero(&datum)).unwrap();
    assert!(out.lhs && out.rhs);
    for c in 0..datum.cells.len() {
        let f = composition_factors(&datum, c, &rad, &report_simples(&datum));
        assert_eq!(f, vec![(datum.cells[c].lambda.clone(), 1)]);
    }
}

#[test]
fn cyclic_hom_matches_direct_solve() {
    for (src, dst, dim) in [
        (vec![2, 2, 1], vec![2, 1], 1),
        (vec![3, 2], vec![2, 1], 0),
        (vec![2, 1, 1, 1], vec![1, 1, 1], 1),
        (vec![2, 1], vec![2, 1], 1),
    ] {
        let (a, b) = (cell(5, &src), cell(5, &dst));
        let h = hom_dimension_cyclic(&a, &b, 9);
        assert_eq!(h.dim(), Some(dim), "{h:?}");
        assert_eq!(hom_space(&a.rep, &b.rep).len(), dim);
        for x in &h.intertwiners {
            for (gm, gn) in a.rep.generators().zip(b.rep.generators()) {
                assert_eq!(x.mul(gm), gn.mul(x));
            }
        }
    }
}
