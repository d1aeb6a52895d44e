//! Standard tableaux and Specht modules of the symmetric group in Young's
//! seminormal form, exact over ℚ.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::field::Rational;
use crate::linalg::Matrix;
use crate::partitions::{content, Partition};

/// A standard filling of a Young diagram by 1..n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    shape: Partition,
    /// rows[i][j] is the entry in row i+1, column j+1.
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// 1-based (row, column) of entry k.
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x == k) {
                return (i + 1, j + 1);
            }
        }
        panic!("entry {k} not in tableau");
    }

    /// Row index of each entry 1..n; determines the tableau.
    pub fn row_word(&self) -> Vec<usize> {
        let n = self.shape.size();
        let mut w = vec![0; n];
        for (i, row) in self.rows.iter().enumerate() {
            for &x in row {
                w[x - 1] = i + 1;
            }
        }
        w
    }

    /// The tableau with k and k+1 exchanged, if it is still standard.
    pub fn swap(&self, k: usize) -> Option<StandardTableau> {
        let (a, b) = (self.position(k), self.position(k + 1));
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.0 - 1][a.1 - 1] = k + 1;
        rows[b.0 - 1][b.1 - 1] = k;
        Some(StandardTableau { shape: self.shape.clone(), rows })
    }

    /// Axial distance c(k+1) − c(k).
    pub fn axial_distance(&self, k: usize) -> i64 {
        content(self.position(k + 1)) - content(self.position(k))
    }
}

/// All standard tableaux of a shape, ordered lexicographically by row word.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    fn go(shape: &[usize], filled: &mut Vec<usize>, word: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == n {
            out.push(word.clone());
            return;
        }
        for i in 0..shape.len() {
            if filled[i] < shape[i] && (i == 0 || filled[i - 1] > filled[i]) {
                filled[i] += 1;
                word.push(i + 1);
                go(shape, filled, word, n, out);
                word.pop();
                filled[i] -= 1;
            }
        }
    }
    let mut words = Vec::new();
    go(shape.parts(), &mut vec![0; shape.len()], &mut word, n, &mut words);
    for w in words {
        let mut rows = vec![Vec::new(); shape.len()];
        for (k, &r) in w.iter().enumerate() {
            rows[r - 1].push(k + 1);
        }
        out.push(StandardTableau { shape: shape.clone(), rows });
    }
    out
}

/// Specht module S(λ) with seminormal generator matrices.
///
/// Matrices act on column vectors: `action[k-1][(T', T)]` is the coefficient
/// of v_{T'} in s_k·v_T.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    pub shape: Partition,
    pub basis: Vec<StandardTableau>,
    pub action: Vec<Matrix<Rational>>,
    /// Diagonal of the invariant symmetric form.
    pub form: Vec<Rational>,
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Self {
        let basis = standard_tableaux(shape);
        let index: HashMap<Vec<usize>, usize> = basis.iter().enumerate().map(|(i, t)| (t.row_word(), i)).collect();
        let n = shape.size();
        let dim = basis.len();
        let mut action = Vec::new();
        for k in 1..n {
            let mut m = Matrix::zeros(dim, dim);
            for (j, t) in basis.iter().enumerate() {
                let d = t.axial_distance(k);
                m.set(j, j, Rational::new(1.into(), d.into()));
                if let Some(t2) = t.swap(k) {
                    let i = index[&t2.row_word()];
                    let c =
                        if d > 0 { Rational::one() } else { Rational::one() - Rational::new(1.into(), (d * d).into()) };
                    m.set(i, j, c);
                }
            }
            action.push(m);
        }
        let form = Self::invariant_form(&basis, &index);
        SpechtModule { shape: shape.clone(), basis, action, form }
    }

    fn invariant_form(basis: &[StandardTableau], index: &HashMap<Vec<usize>, usize>) -> Vec<Rational> {
        let dim = basis.len();
        let mut form: Vec<Option<Rational>> = vec![None; dim];
        if dim == 0 {
            return Vec::new();
        }
        form[0] = Some(Rational::one());
        let mut queue = vec![0];
        let n = basis[0].shape().size();
        while let Some(j) = queue.pop() {
            let g = form[j].clone().unwrap();
            for k in 1..n {
                if let Some(t2) = basis[j].swap(k) {
                    let i = index[&t2.row_word()];
                    let d = basis[j].axial_distance(k);
                    let dd = Rational::new((d * d).into(), 1.into());
                    let factor = Rational::one() - dd.recip();
                    let gi = if d > 0 { g.clone() * factor } else { g.clone() / factor };
                    match &form[i] {
                        None => {
                            form[i] = Some(gi);
                            queue.push(i);
                        }
                        Some(existing) => debug_assert_eq!(existing, &gi),
                    }
                }
            }
        }
        form.into_iter().map(|x| x.expect("tableau graph is connected")).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Product of generator matrices for a word of adjacent transpositions (1-based).
    pub fn word_action(&self, word: &[usize]) -> Matrix<Rational> {
        let mut m = Matrix::identity(self.dim());
        for &k in word {
            assert!(k >= 1 && k < self.shape.size().max(1), "transposition s_{k} out of range");
            m = m.mul(&self.action[k - 1]);
        }
        m
    }

    /// Matrix of the permutation π (given as images π[j] of 0..n, composed as functions).
    pub fn perm_action(&self, perm: &[usize]) -> Matrix<Rational> {
        self.word_action(&reduced_word(perm))
    }

    /// Gram matrix of the invariant form, diagonal.
    pub fn form_matrix(&self) -> Matrix<Rational> {
        let mut g = Matrix::zeros(self.dim(), self.dim());
        for (i, x) in self.form.iter().enumerate() {
            g.set(i, i, x.clone());
        }
        g
    }

    pub fn character(&self, perm: &[usize]) -> Rational {
        let m = self.perm_action(perm);
        (0..self.dim()).fold(Rational::zero(), |acc, i| acc + m.get(i, i).clone())
    }
}

/// Reduced word (1-based adjacent transpositions) with π = s_{w₁} ∘ s_{w₂} ∘ ….
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut rev = Vec::new();
    while let Some(k) = (0..p.len().saturating_sub(1)).find(|&k| p[k] > p[k + 1]) {
        p.swap(k, k + 1);
        rev.push(k + 1);
    }
    rev.reverse();
    rev
}

/// Composition (a ∘ b)(j) = a(b(j)).
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&j| a[j]).collect()
}

/// Sign (−1)^{inversions}.
pub fn sign(perm: &[usize]) -> i64 {
    if reduced_word(perm).len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
fn rational_int(n: i64) -> Rational {
    <Rational as crate::field::Ring>::from_i64(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(x: &[usize]) -> Partition {
        Partition::new(x)
    }

    #[test]
    fn dimensions() {
        assert_eq!(SpechtModule::new(&p(&[1, 1])).action[0], Matrix::from_rows(vec![vec![rational_int(-1)]], 1));
        assert_eq!(SpechtModule::new(&p(&[2, 1])).dim(), 2);
        assert_eq!(SpechtModule::new(&p(&[2, 2, 1])).dim(), 5);
        for t in 1..=6 {
            let s: usize = partitions_of(t).iter().map(|l| SpechtModule::new(l).dim().pow(2)).sum();
            assert_eq!(s, factorial(t));
        }
    }

    #[test]
    fn coxeter_relations() {
        for t in 2..=6 {
            for l in partitions_of(t) {
                let m = SpechtModule::new(&l);
                let id = Matrix::identity(m.dim());
                for i in 0..t - 1 {
                    let si = &m.action[i];
                    assert_eq!(si.mul(si), id, "{l} s_{}²", i + 1);
                    if i + 1 < t - 1 {
                        let sj = &m.action[i + 1];
                        assert_eq!(si.mul(sj).mul(si), sj.mul(si).mul(sj));
                    }
                    for j in i + 2..t - 1 {
                        assert_eq!(si.mul(&m.action[j]), m.action[j].mul(si));
                    }
                    // invariance of the diagonal form: G s = sᵀ G
                    let g = m.form_matrix();
                    assert_eq!(g.mul(si), si.transpose().mul(&g));
                }
            }
        }
    }

    #[test]
    fn perm_words() {
        let m = SpechtModule::new(&p(&[2, 1]));
        assert_eq!(m.word_action(&[]), Matrix::identity(2));
        assert_eq!(m.word_action(&[1, 2, 1]), m.word_action(&[2, 1, 2]));
        for t in 1..=5 {
            let sgn = SpechtModule::new(&Partition::new(&vec![1; t]));
            let cycle: Vec<usize> = (0..t).map(|j| (j + 1) % t).collect();
            let expected = if (t - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sgn.perm_action(&cycle), Matrix::identity(1).scale(&rational_int(expected)));
        }
        let perms = permutations(4);
        assert_eq!(perms.len(), 24);
        for a in &perms {
            let w = reduced_word(a);
            let rebuilt = w.iter().fold((0..4).collect::<Vec<usize>>(), |acc, &k| {
                let mut s: Vec<usize> = (0..4).collect();
                s.swap(k - 1, k);
                compose(&acc, &s)
            });
            assert_eq!(&rebuilt, a);
        }
    }

    #[test]
    fn character_sum_rule() {
        // Σ_λ dim S(λ)·χ_λ(π) is the regular character: n! at the identity, 0 elsewhere.
        for t in 2..=4 {
            let mods: Vec<SpechtModule> = partitions_of(t).iter().map(SpechtModule::new).collect();
            for perm in permutations(t) {
                let s = mods
                    .iter()
                    .fold(Rational::zero(), |acc, m| acc + rational_int(m.dim() as i64) * m.character(&perm));
                let id = perm.iter().enumerate().all(|(i, &x)| i == x);
                assert_eq!(s, rational_int(if id { factorial(t) as i64 } else { 0 }));
            }
        }
    }
}
