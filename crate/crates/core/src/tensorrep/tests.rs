use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::*;
use crate::bmwq::{phi_q_cleared, relation_instances, BmwEngine};
use crate::brauer::{diagram_to_word, phi, DiagramBasis, Letter};
use crate::field::{Rational, Ring};
use crate::linalg::Matrix;
use crate::scalars::{LaurentPoly, ScalarQ};

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn qm(m: &Matrix<ScalarQ>, c: ScalarQ) -> Matrix<ScalarQ> {
    m.scale(&c)
}

#[test]
fn sl2_module_relations() {
    let d = QuantumSl2Data::new();
    let q2 = ScalarQ::q_pow(2);
    assert_eq!(d.k.mul(&d.e).mul(&d.k_inv), qm(&d.e, q2.clone()));
    assert_eq!(d.k.mul(&d.f).mul(&d.k_inv), qm(&d.f, ScalarQ::q_pow(-2)));
    let comm = d.e.mul(&d.f).sub(&d.f.mul(&d.e));
    let rhs = d.k.sub(&d.k_inv).scale(&(ScalarQ::q() - ScalarQ::q_pow(-1)).try_inv().unwrap());
    assert_eq!(comm, rhs);
    assert!(d.e.mul_vec(&[ScalarQ::one(), ScalarQ::zero(), ScalarQ::zero()]).iter().all(|x| x.is_zero()));
}

#[test]
fn rmatrix_spectrum() {
    let rm = build_rmatrix();
    let id = Matrix::identity(9);
    let [p4, p2, p0] = &rm.projectors;
    assert_eq!(p4.add(p2).add(p0), id);
    for (p, dim) in [(p4, 5), (p2, 3), (p0, 1)] {
        assert_eq!(&p.mul(p), p);
        assert_eq!(p.rank(), dim);
    }
    assert_eq!(rm.r_check.mul(p4), p4.scale(&ScalarQ::q_pow(2)));
    assert_eq!(rm.r_check.mul(p2), p2.scale(&-ScalarQ::q_pow(-2)));
    assert_eq!(rm.r_check.mul(p0), p0.scale(&ScalarQ::q_pow(-4)));
    assert_eq!(rm.r_check.mul(&rm.r_check_inv), id);
    // ě² = [3]ě
    assert_eq!(rm.e_check.mul(&rm.e_check), rm.e_check.scale(&ScalarQ::quantum_integer(3)));
    // Ř − Ř⁻¹ = (q² − q⁻²)(1 − ě)
    let z = ScalarQ::q_pow(2) - ScalarQ::q_pow(-2);
    assert_eq!(rm.r_check.sub(&rm.r_check_inv), id.sub(&rm.e_check).scale(&z));
    // commutes with the coproduct action
    let (de, df, dk) = QuantumSl2Data::new().coproduct2();
    for x in [&de, &df, &dk] {
        assert_eq!(rm.r_check.mul(x), x.mul(&rm.r_check));
        assert_eq!(rm.e_check.mul(x), x.mul(&rm.e_check));
    }
    assert!(to_laurent(&rm.r_check).is_some() && to_laurent(&rm.e_check).is_some());
}

#[test]
fn classical_limit_is_flip_and_contraction() {
    let ops = LocalOps::classical();
    let mut flip = Matrix::zeros(9, 9);
    for a in 0..3 {
        for b in 0..3 {
            flip.set(3 * b + a, 3 * a + b, int(1));
        }
    }
    assert_eq!(ops.pos.to_matrix(), flip);
    assert_eq!(ops.neg.to_matrix(), flip);
    let xi = [(2usize, 1i64), (4, -1), (6, 1)];
    let mut e = Matrix::zeros(9, 9);
    for (i, a) in xi {
        for (j, b) in xi {
            e.set(i, j, int(a * b));
        }
    }
    assert_eq!(ops.cup.to_matrix(), e);
}

#[test]
fn placement() {
    let rep = TensorRep::quantum(2);
    let rm = to_laurent(&build_rmatrix().r_check).unwrap();
    assert_eq!(rep.place(&rep.ops.pos, 1).to_dense(), rm);
    let rep3 = TensorRep::quantum(3);
    let kr = kron(&Matrix::identity(3), &rm);
    assert_eq!(rep3.place(&rep3.ops.pos, 2).to_dense(), kr);
    let g1 = rep3.letter(Letter::Pos(1));
    let g2 = rep3.letter(Letter::Pos(2));
    assert_eq!(g1.mul(&g2).mul(&g1), g2.mul(&g1).mul(&g2));
    let rep4 = TensorRep::quantum(4);
    let e1 = rep4.letter(Letter::Cup(1));
    let g2 = rep4.letter(Letter::Pos(2));
    assert_eq!(e1.mul(&g2).mul(&e1), e1.scale(&LaurentPoly::q_pow(4)));
    assert_eq!(rep4.eval_word(&[Letter::Cup(1), Letter::Pos(2), Letter::Cup(1)]), e1.scale(&LaurentPoly::q_pow(4)));
}

fn relations_hold<R: Ring>(rep: &TensorRep<R>, conv: impl Fn(&LaurentPoly) -> R) {
    for rel in relation_instances(rep.r) {
        let v = rel.evaluate(|w| rep.eval_word(w), |c, m| m.scale(&conv(c)), |a, b| a.add(&b)).unwrap();
        assert!(v.is_zero(), "{} fails on tensor space", rel.describe());
    }
}

#[test]
fn relation_suite_on_tensor_space() {
    for r in 2..=4 {
        relations_hold(&TensorRep::quantum(r), |c| c.clone());
        let one = int(1);
        relations_hold(&TensorRep::classical(r), |c| c.eval(&one));
    }
}

#[test]
fn generators_lie_in_commutant() {
    let r = 3;
    let (e, f, k) = QuantumSl2Data::new().tensor_action(r);
    let rep = TensorRep::quantum(r);
    for i in 1..r as u8 {
        for l in [Letter::Pos(i), Letter::Cup(i)] {
            let m = rep.letter(l).to_dense().map(|c| ScalarQ::from_laurent(c.clone()));
            for x in [&e, &f, &k] {
                assert_eq!(m.mul(x), x.mul(&m), "{l} does not commute");
            }
        }
    }
}

#[test]
fn direct_formula_matches_words() {
    for r in 1..=4 {
        let rep = TensorRep::classical(r);
        for d in &DiagramBasis::new(r).diagrams {
            assert_eq!(rep.eval_word(&diagram_to_word(d)), eta_direct(d), "η mismatch on {d}");
        }
    }
}

#[test]
fn contraction_squares() {
    let rep = TensorRep::classical(3);
    let e1 = rep.letter(Letter::Cup(1));
    assert_eq!(e1.mul(&e1), e1.scale(&int(3)));
}

#[test]
fn phi_acts_as_zero() {
    let rep = TensorRep::classical(4);
    let p = phi(4);
    let mut acc = EndoMatrix::zero(4);
    for (d, c) in p.terms() {
        acc = acc.add(&eta_direct(d).scale(c));
    }
    assert!(acc.is_zero());
    assert!(!rep.letter(Letter::Cup(1)).is_zero());

    let engine = BmwEngine::quantum(4);
    let v = phi_q_cleared(&engine, |c| c.clone());
    let lifts: Vec<_> = engine.lifts.iter().cloned().zip(engine.writhe.iter().copied()).collect();
    let m = TensorRep::quantum(4).eval_combination(&lifts, &v);
    assert!(m.is_zero(), "η_q(Φ_q) ≠ 0");
}

#[test]
fn homomorphism_on_basis_pairs() {
    let engine = BmwEngine::quantum(3);
    let rep = TensorRep::quantum(3);
    let lifts: Vec<_> = engine.lifts.iter().cloned().zip(engine.writhe.iter().copied()).collect();
    let images: Vec<_> = lifts.iter().map(|(w, s)| rep.eval_lift(w, *s)).collect();
    for i in 0..engine.dim() {
        for j in 0..engine.dim() {
            let prod = engine.mul(&engine.unit_vector(i), &engine.unit_vector(j));
            assert_eq!(rep.eval_combination(&lifts, &prod), images[i].mul(&images[j]), "η_q(T_{i}T_{j})");
        }
    }
}

fn weight_oracle(r: usize) -> BTreeMap<usize, BigUint> {
    // coefficients of (x⁻² + 1 + x²)^r; m(d) = mult(d) − mult(d + 2)
    let mut mult: BTreeMap<i64, BigUint> = BTreeMap::from([(0, BigUint::one())]);
    for _ in 0..r {
        let mut next: BTreeMap<i64, BigUint> = BTreeMap::new();
        for (w, c) in &mult {
            for s in [-2, 0, 2] {
                *next.entry(w + s).or_default() += c;
            }
        }
        mult = next;
    }
    let get = |w: i64| mult.get(&w).cloned().unwrap_or_default();
    (0..=2 * r as i64).step_by(2).map(|d| (d as usize, get(d) - get(d + 2))).filter(|(_, m)| !m.is_zero()).collect()
}

#[test]
fn bratteli_multiplicities() {
    let to_map =
        |v: &[(usize, u32)]| -> BTreeMap<usize, BigUint> { v.iter().map(|&(d, m)| (d, BigUint::from(m))).collect() };
    assert_eq!(bratteli(1), to_map(&[(2, 1)]));
    assert_eq!(bratteli(4), to_map(&[(0, 3), (2, 6), (4, 6), (6, 3), (8, 1)]));
    assert_eq!(bratteli(5), to_map(&[(0, 6), (2, 15), (4, 15), (6, 10), (8, 4), (10, 1)]));
    assert_eq!(commutant_dim(4), BigUint::from(91u32));
    assert_eq!(commutant_dim(5), BigUint::from(603u32));
    for r in 1..=30 {
        assert_eq!(bratteli(r), weight_oracle(r), "r = {r}");
        assert_eq!(bratteli(r).len(), r + 1 - usize::from(r == 1));
    }
}

#[test]
fn classical_rank_small() {
    for (r, rank) in [(2, 3), (3, 15), (4, 91)] {
        let ck = classical_rank_and_kernel(r, 7).unwrap();
        assert_eq!(ck.rank, rank);
        assert_eq!(ck.rank + ck.dim(), crate::brauer::double_factorial(r));
    }
}

#[test]
fn quantum_rank_small() {
    let lifts = basis_lifts(4);
    for q0 in sample_points(2, 3) {
        assert_eq!(quantum_rank_at(4, &lifts, q0, 11), 91);
    }
    let lifts3 = basis_lifts(3);
    assert_eq!(quantum_rank_at(3, &lifts3, sample_points(1, 5)[0], 1), 15);
}

#[test]
fn main_theorem_small_ranks() {
    let opts = VerifyOptions { points: 2, seed: 3, cache: None, ann_lambdas: true, exact: true };
    for (r, rank, ker) in [(2, 3, 0), (3, 15, 0), (4, 91, 14)] {
        for mode in [Mode::Classical, Mode::Quantum] {
            let rep = verify_main_theorem(r, mode, &opts).unwrap();
            assert!(rep.passed(), "{rep:?}");
            assert_eq!((rep.rank, rep.kernel_dim, rep.ideal_dim), (rank, ker, ker));
            assert_eq!(rep.method, Method::Exact);
        }
    }
    assert!(matches!(verify_main_theorem(6, Mode::Classical, &opts), Err(VerifyError::TooLarge { .. })));
    assert!(matches!(verify_main_theorem(5, Mode::Quantum, &opts), Err(VerifyError::TooLarge { .. })));
    for mode in [Mode::Classical, Mode::Quantum] {
        assert!(tensor_relation_failures(3, mode).is_empty());
    }
}

#[test]
fn phi_annihilates_exactly_lambda0_simples() {
    let a = ann_lambdas(4).unwrap();
    assert!(a.equal);
    assert_eq!(a.annihilated.len(), 5);
}
