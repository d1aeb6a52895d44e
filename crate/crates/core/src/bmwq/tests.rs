use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::brauer::{brauer3, named_elements, BrauerDiagram};
use crate::field::Ring;

fn scaled(c: &LaurentPoly, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    v.iter().map(|x| c * x).collect()
}

#[test]
fn trace_of_small_words() {
    use Letter::{Cup as E, Neg as N, Pos as G};
    let t = trace(&[G(1), E(1)], 2);
    assert_eq!((t.diagram, t.loops, t.self_writhe), (BrauerDiagram::e(1, 2), 0, 1));
    let t = trace(&[N(1), E(1)], 2);
    assert_eq!(t.self_writhe, -1);
    let t = trace(&[E(1), E(1)], 2);
    assert_eq!(t.loops, 1);
    let t = trace(&[E(1), G(2), E(1)], 3);
    assert_eq!((t.diagram, t.self_writhe), (BrauerDiagram::e(1, 3), -1));
    assert!(trace(&[G(1)], 2).ascending.is_empty());
    assert_eq!(trace(&[N(1)], 2).ascending, vec![0]);
}

#[test]
fn generator_examples() {
    use Letter::{Cup as E, Pos as G};
    let eng = BmwEngine::quantum(3);
    let e1 = eng.word(&[E(1)]);
    assert_eq!(eng.word(&[G(1), E(1)]), scaled(&LaurentPoly::q_pow(-4), &e1));
    assert_eq!(eng.word(&[E(1), G(2), E(1)]), scaled(&LaurentPoly::q_pow(4), &e1));
    let one = eng.word(&[]);
    let g = eng.word(&[G(1)]);
    let lin = |a: &LaurentPoly| -> Vec<LaurentPoly> { g.iter().zip(&one).map(|(x, o)| x - &(a * o)).collect() };
    let cubic =
        eng.product(&[&lin(&LaurentPoly::q_pow(-4)), &lin(&LaurentPoly::q_pow(2)), &lin(&-LaurentPoly::q_pow(-2))]);
    assert!(cubic.iter().all(|x| x.is_zero()));
}

#[test]
fn relations_hold() {
    for r in 2..=4 {
        let eng = BmwEngine::quantum(r);
        let rep = validate_relations(&eng, |c| c.clone());
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
}

#[test]
fn q4_variant_is_refuted() {
    let eng = BmwEngine::quantum(3);
    let rel = q4_variant_relation(1);
    let e1 = eng.word(&[Letter::Cup(1)]);
    let v = rel
        .evaluate(|w| eng.word(w), |c, v| scaled(c, &v), |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect())
        .unwrap();
    let left = eng.mul(&e1, &v);
    let expect = scaled(&(&LaurentPoly::q_pow(-4) - &LaurentPoly::q_pow(-8)), &e1);
    assert_eq!(left, expect);
}

#[test]
fn specializes_to_brauer() {
    for r in 2..=4 {
        let eng = BmwEngine::quantum(r).at_one();
        let table = eng.structure_table();
        let three = Rational::from_i64(3);
        for (i, a) in eng.basis.diagrams.iter().enumerate() {
            for (j, b) in eng.basis.diagrams.iter().enumerate() {
                let (p, loops) = a.compose(b);
                let expect = vec![(eng.basis.index_of(&p), Ring::pow(&three, loops as u32))];
                assert_eq!(table[i][j], expect, "{a} * {b}");
            }
        }
    }
}

#[test]
fn chains_agree_and_associate() {
    let eng = BmwEngine::quantum(4);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = eng.dim();
    for _ in 0..30 {
        let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let (a, b, c) = (eng.unit_vector(i), eng.unit_vector(j), eng.unit_vector(k));
        assert_eq!(eng.mul(&a, &b), eng.mul_right_chain(&a, &b));
        assert_eq!(eng.mul(&eng.mul(&a, &b), &c), eng.mul(&a, &eng.mul(&b, &c)));
    }
}

#[test]
fn named_identities() {
    let eng = BmwEngine::quantum(4);
    let id = |p: &LaurentPoly| p.clone();
    let named = named_q_elements(&eng, id);
    let s = three_minus_one();
    let ff = eng.mul(&named.big_f, &named.big_f);
    assert_eq!(ff, scaled(&s.pow(2), &named.big_f));
    let psi = phi_q_cleared(&eng, id);
    for i in 1..=3u8 {
        let e = eng.word(&[Letter::Cup(i)]);
        assert!(eng.mul(&e, &psi).iter().all(|x| x.is_zero()));
        assert!(eng.mul(&psi, &e).iter().all(|x| x.is_zero()));
    }
    // Ψ = s²Φ_q with s = [3]−1, and Φ_q² = −s²bΦ_q, so Ψ² = −s²·(s²b)·Ψ.
    let kappa = -(&s.pow(2) * &phi_coefficients_cleared()[1]);
    assert_eq!(eng.mul(&psi, &psi), scaled(&kappa, &psi));
    assert_eq!(eng.star(&psi), psi);
}

#[test]
fn phi_specializes() {
    assert_eq!(
        phi_coefficients_at_one(),
        [Rational::from_i64(1), Rational::from_i64(1), crate::field::rat(1, 4), Rational::from_i64(0)]
    );
    let eng = BmwEngine::quantum(4).to_ratfunc();
    let phi = eng.to_element(&phi_q(&eng));
    assert_eq!(specialize_to_brauer(&phi).unwrap(), named_elements(4).phi);
    let b = brauer3(4);
    let g121 = eng.to_element(&eng.word(&[Letter::Pos(1), Letter::Pos(2), Letter::Pos(1)]));
    assert_eq!(specialize_to_brauer(&g121).unwrap(), b.product(&[&b.s(1), &b.s(2), &b.s(1)]));
}

#[test]
fn ideal_dimension_r4() {
    let eng = BmwEngine::quantum(4);
    let psi = phi_q_cleared(&eng, |p| p.clone());
    let span = screened_q_closure(&eng, Fp61::new(1_000_003), std::slice::from_ref(&psi));
    assert_eq!(span.dim(), 14);
    let modp = eng.at_fp(Fp61::new(1_000_003));
    let gen: Vec<Fp61> = psi.iter().map(|c| c.eval_fp(Fp61::new(1_000_003)).unwrap()).collect();
    assert_eq!(q_ideal_closure(&modp, &[gen]).dim(), 14);
    let one = modp.word(&[]);
    assert_eq!(q_ideal_closure(&modp, &[one]).dim(), 105);
}

#[test]
fn integral_form_supports() {
    let engine = BmwEngine::quantum(4);
    let rep = integral_form_report(&engine);
    assert!(rep.passed());
    assert_eq!(rep.structure_constants, engine.structure_table().iter().flatten().map(|v| v.len()).sum::<usize>());
    for name in ["a", "b", "d"] {
        let row = rep.coefficients.iter().find(|r| r.name == name).unwrap();
        assert!(row.in_s && row.laurent, "{name}");
    }
    let c = rep.coefficients.iter().find(|r| r.name == "c").unwrap();
    assert!(c.in_s && !c.laurent);
    // c̃ keeps a q⁴ + 1 factor in its denominator
    let c_tilde = rep.scaled_row("c̃").unwrap();
    assert!(c_tilde.in_s && !c_tilde.laurent);
    assert!(c_tilde.value.denom().eval(&Rational::from_i64(1)) != Rational::from_i64(0));
    let q4p1 = LaurentPoly::from_int_terms(&[(4, 1), (0, 1)]);
    let (_, sup) = crate::scalars::support_in_s(&c_tilde.value);
    assert!(sup.contains(&q4p1).is_some(), "{sup}");
    for name in ["ã", "b̃", "d̃"] {
        assert!(rep.scaled_row(name).unwrap().laurent, "{name}");
    }
}
