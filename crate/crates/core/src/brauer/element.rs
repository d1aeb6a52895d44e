use std::collections::BTreeMap;
use std::fmt;

use super::diagram::{BrauerDiagram, DiagramBasis};
use crate::field::Ring;

/// A linear combination of Brauer diagrams with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct AlgebraElement<R> {
    r: usize,
    terms: BTreeMap<BrauerDiagram, R>,
}

impl<R: Ring> AlgebraElement<R> {
    pub fn zero(r: usize) -> Self {
        AlgebraElement { r, terms: BTreeMap::new() }
    }

    pub fn basis(d: BrauerDiagram) -> Self {
        Self::term(d, R::one())
    }

    pub fn term(d: BrauerDiagram, c: R) -> Self {
        let mut e = Self::zero(d.r());
        e.add_term(d, c);
        e
    }

    pub fn identity(r: usize) -> Self {
        Self::basis(BrauerDiagram::identity(r))
    }

    pub fn scalar(r: usize, c: R) -> Self {
        Self::term(BrauerDiagram::identity(r), c)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> R {
        self.terms.get(d).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: R) {
        assert_eq!(d.r(), self.r, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(x) => {
                *x = x.add_ref(&c);
                if x.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &o.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-R::one()))
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.r);
        }
        AlgebraElement { r: self.r, terms: self.terms.iter().map(|(d, x)| (d.clone(), x.mul_ref(c))).collect() }
    }

    /// Product with `self` on top; each closed loop contributes `delta`.
    pub fn mul(&self, o: &Self, delta: &R) -> Self {
        assert_eq!(self.r, o.r, "rank mismatch");
        let mut out = Self::zero(self.r);
        let mut powers = vec![R::one()];
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let (d, loops) = a.compose(b);
                while powers.len() <= loops {
                    let next = powers.last().unwrap().mul_ref(delta);
                    powers.push(next);
                }
                out.add_term(d, x.mul_ref(y).mul_ref(&powers[loops]));
            }
        }
        out
    }

    /// Termwise top-bottom reflection (the anti-involution *).
    pub fn star(&self) -> Self {
        AlgebraElement { r: self.r, terms: self.terms.iter().map(|(d, x)| (d.star(), x.clone())).collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero(self.r);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), f(x));
        }
        out
    }

    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<AlgebraElement<S>, E> {
        let mut out = AlgebraElement::zero(self.r);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), f(x)?);
        }
        Ok(out)
    }

    /// Adds vertical strands on the right.
    pub fn embed(&self, r_new: usize) -> Self {
        let mut out = Self::zero(r_new);
        for (d, x) in &self.terms {
            out.add_term(d.embed(r_new), x.clone());
        }
        out
    }

    /// Coordinates in the given basis.
    pub fn to_dense(&self, basis: &DiagramBasis) -> Vec<R> {
        let mut v = vec![R::zero(); basis.len()];
        for (d, x) in &self.terms {
            v[basis.index_of(d)] = x.clone();
        }
        v
    }

    pub fn from_dense(basis: &DiagramBasis, v: &[R]) -> Self {
        let mut out = Self::zero(basis.r);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                out.add_term(basis.get(i).clone(), x.clone());
            }
        }
        out
    }

    pub fn to_sparse(&self, basis: &DiagramBasis) -> Vec<(usize, R)> {
        let mut v: Vec<(usize, R)> = self.terms.iter().map(|(d, x)| (basis.index_of(d), x.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    }
}

impl<R: Ring + fmt::Display> fmt::Display for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, x)| format!("({x})·{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(d, x)| format!("({x:?})·{d}")).collect();
        write!(f, "AlgebraElement[r={}]{{{}}}", self.r, parts.join(" + "))
    }
}
