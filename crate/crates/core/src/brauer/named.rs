use super::diagram::BrauerDiagram;
use super::element::AlgebraElement;
use crate::field::{rat, Rational, Ring};

/// B_r(δ) over a ring: generators and products with a fixed loop value.
#[derive(Clone, Debug)]
pub struct BrauerAlgebra<R> {
    pub r: usize,
    pub delta: R,
}

impl<R: Ring> BrauerAlgebra<R> {
    pub fn new(r: usize, delta: R) -> Self {
        BrauerAlgebra { r, delta }
    }

    pub fn one(&self) -> AlgebraElement<R> {
        AlgebraElement::identity(self.r)
    }

    pub fn s(&self, i: usize) -> AlgebraElement<R> {
        AlgebraElement::basis(BrauerDiagram::s(i, self.r))
    }

    pub fn e(&self, i: usize) -> AlgebraElement<R> {
        AlgebraElement::basis(BrauerDiagram::e(i, self.r))
    }

    pub fn mul(&self, a: &AlgebraElement<R>, b: &AlgebraElement<R>) -> AlgebraElement<R> {
        a.mul(b, &self.delta)
    }

    pub fn product(&self, factors: &[&AlgebraElement<R>]) -> AlgebraElement<R> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Generators s_1, …, s_{r−1}, e_1, …, e_{r−1} as diagrams.
    pub fn generators(&self) -> Vec<BrauerDiagram> {
        let mut g: Vec<BrauerDiagram> = (1..self.r).map(|i| BrauerDiagram::s(i, self.r)).collect();
        g.extend((1..self.r).map(|i| BrauerDiagram::e(i, self.r)));
        g
    }
}

/// The elements F, e_{1,4} and Φ of B_r(3), r ≥ 4.
#[derive(Clone, Debug)]
pub struct NamedElements {
    pub f: AlgebraElement<Rational>,
    pub e14: AlgebraElement<Rational>,
    pub phi: AlgebraElement<Rational>,
}

/// B_r(3) over ℚ.
pub fn brauer3(r: usize) -> BrauerAlgebra<Rational> {
    BrauerAlgebra::new(r, Rational::from_i64(3))
}

/// F = (1−s₁)(1−s₃), e_{1,4} = s₁s₃e₂s₃s₁, Φ = Fe₂F − F − ¼Fe₂e_{1,4}F.
pub fn named_elements(r: usize) -> NamedElements {
    assert!(r >= 4, "F, e14 and Φ need r ≥ 4");
    let b = brauer3(r);
    let one = b.one();
    let f = b.mul(&one.sub(&b.s(1)), &one.sub(&b.s(3)));
    let e14 = b.product(&[&b.s(1), &b.s(3), &b.e(2), &b.s(3), &b.s(1)]);
    let fe2f = b.product(&[&f, &b.e(2), &f]);
    let fe2e14f = b.product(&[&f, &b.e(2), &e14, &f]);
    let phi = fe2f.sub(&f).sub(&fe2e14f.scale(&rat(1, 4)));
    NamedElements { f, e14, phi }
}

/// Φ in B_r(3) (convenience).
pub fn phi(r: usize) -> AlgebraElement<Rational> {
    named_elements(r).phi
}
