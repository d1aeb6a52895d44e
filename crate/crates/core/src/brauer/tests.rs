use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::field::{Rational, Ring};

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

#[test]
fn basis_counts() {
    for r in 1..=6 {
        assert_eq!(DiagramBasis::new(r).len(), double_factorial(r));
    }
    let b4 = DiagramBasis::new(4);
    assert_eq!(through_filtration(&b4, 4).len(), 105);
    assert_eq!(through_filtration(&b4, 0).len(), 9);
    assert_eq!(through_filtration(&DiagramBasis::new(3), 1).len(), 9);
}

#[test]
fn product_examples() {
    let r = 4;
    let (e1, s1) = (BrauerDiagram::e(1, r), BrauerDiagram::s(1, r));
    assert_eq!(e1.compose(&e1), (e1.clone(), 1));
    let (x, l) = e1.compose(&BrauerDiagram::e(2, r));
    let (y, l2) = x.compose(&e1);
    assert_eq!((y, l + l2), (e1.clone(), 0));
    assert_eq!(s1.compose(&s1), (BrauerDiagram::identity(r), 0));
    assert_eq!(s1.compose(&e1), (e1.clone(), 0));
}

#[test]
fn relations() {
    for r in 2..=5 {
        let b = brauer3(r);
        let one = b.one();
        for i in 1..r {
            let (s, e) = (b.s(i), b.e(i));
            assert_eq!(b.mul(&s, &s), one);
            assert_eq!(b.mul(&e, &e), e.scale(&q(3)));
            assert_eq!(b.mul(&s, &e), e);
            assert_eq!(b.mul(&e, &s), e);
            for j in 1..r {
                if i.abs_diff(j) >= 2 {
                    let (sj, ej) = (b.s(j), b.e(j));
                    assert_eq!(b.mul(&s, &sj), b.mul(&sj, &s));
                    assert_eq!(b.mul(&s, &ej), b.mul(&ej, &s));
                    assert_eq!(b.mul(&e, &ej), b.mul(&ej, &e));
                }
            }
            if i + 1 < r {
                let (s2, e2) = (b.s(i + 1), b.e(i + 1));
                assert_eq!(b.product(&[&s, &s2, &s]), b.product(&[&s2, &s, &s2]));
                assert_eq!(b.product(&[&e, &e2, &e]), e);
                assert_eq!(b.product(&[&e2, &e, &e2]), e2);
                assert_eq!(b.product(&[&s, &e2, &e]), b.mul(&s2, &e));
                assert_eq!(b.product(&[&e2, &e, &s2]), b.mul(&e2, &s));
            }
        }
    }
}

#[test]
fn named_identities() {
    let b = brauer3(4);
    let n = named_elements(4);
    assert_eq!(b.mul(&n.f, &n.f), n.f.scale(&q(4)));
    assert_eq!(b.mul(&n.phi, &n.phi), n.phi.scale(&q(-4)));
    assert_eq!(n.phi.star(), n.phi);
    assert!(!n.phi.is_zero());
}

#[test]
fn words_round_trip() {
    for r in 1..=5 {
        let basis = DiagramBasis::new(r);
        for d in &basis.diagrams {
            let w = diagram_to_word(d);
            assert_eq!(expand_word(&w, r), (d.clone(), 0), "{d} via {}", word_to_string(&w));
        }
    }
    assert!(diagram_to_word(&BrauerDiagram::identity(4)).is_empty());
    assert_eq!(diagram_to_word(&BrauerDiagram::e(3, 4)), vec![Letter::Cup(3)]);
    assert_eq!(diagram_to_word(&BrauerDiagram::s(2, 4)), vec![Letter::Pos(2)]);
}

#[test]
fn associativity_and_star() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in 2..=5 {
        let basis = DiagramBasis::new(r);
        for _ in 0..500 {
            let pick = |rng: &mut ChaCha8Rng| basis.get(rng.gen_range(0..basis.len())).clone();
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let (ab, l1) = a.compose(&b);
            let (abc, l2) = ab.compose(&c);
            let (bc, l3) = b.compose(&c);
            let (abc2, l4) = a.compose(&bc);
            assert_eq!((abc, l1 + l2), (abc2, l3 + l4));
            assert_eq!(ab.star(), b.star().compose(&a.star()).0);
            assert_eq!(a.star().star(), a);
        }
    }
}

#[test]
fn filtration_is_an_ideal() {
    for r in 1..=4 {
        let basis = DiagramBasis::new(r);
        for m in 0..=r {
            for d in through_filtration(&basis, m) {
                for x in &basis.diagrams {
                    assert!(d.compose(x).0.through_count() <= m);
                    assert!(x.compose(&d).0.through_count() <= m);
                }
            }
        }
    }
}

#[test]
fn closure_r4() {
    let basis = DiagramBasis::new(4);
    let tables = ActionTables::brauer(&basis, &q(3));
    let phi = named_elements(4).phi.to_dense(&basis);
    assert_eq!(ideal_closure(&tables, &[phi]).dim(), 14);
    let one = AlgebraElement::<Rational>::identity(4).to_dense(&basis);
    assert_eq!(ideal_closure(&tables, &[one]).dim(), 105);
}

#[test]
fn diagram_text_format() {
    let d = BrauerDiagram::e(2, 3);
    assert_eq!(d.to_string(), "[(T1,B1),(T2,T3),(B2,B3)]");
    assert_eq!(BrauerDiagram::parse(&d.to_string()), Some(d));
}
