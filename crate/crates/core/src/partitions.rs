//! Partitions, Young diagrams and contents, the poset Λ_r, its subsets Λ_r⁰
//! and Λ_r¹, and the content criterion for composition factors.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A partition λ₁ ≥ λ₂ ≥ … > 0; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Panics if `parts` is not weakly decreasing.
    pub fn new(parts: &[usize]) -> Self {
        let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing: {parts:?}");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Boxes (row, column) of the Young diagram, 1-based, row by row.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j))).collect()
    }

    pub fn contains_box(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && i <= self.parts.len() && j >= 1 && j <= self.parts[i - 1]
    }

    /// Y(self) ⊆ Y(other).
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let n = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=n).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }

    /// Dominance comparison for partitions of equal size; `None` when incomparable
    /// (or of different sizes).
    pub fn dominance(&self, other: &Partition) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let (mut a, mut b) = (0usize, 0usize);
        let (mut ge, mut le) = (true, true);
        for k in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(k).copied().unwrap_or(0);
            b += other.parts.get(k).copied().unwrap_or(0);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let cur = self.parts.get(i).copied().unwrap_or(0);
            if i == 0 || self.parts[i - 1] > cur {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition { parts: p });
            }
        }
        out
    }

    /// Partitions obtained by removing one box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            let next = self.parts.get(i + 1).copied().unwrap_or(0);
            if self.parts[i] > next {
                let mut p = self.parts.clone();
                p[i] -= 1;
                out.push(Partition::new(&p));
            }
        }
        out
    }

    /// Parses `"2,1"`; the empty string or `"∅"` give the empty partition.
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<usize>> = s.split(',').map(|x| x.trim().parse().ok()).collect();
        let parts = parts?;
        parts.windows(2).all(|w| w[0] >= w[1]).then(|| Partition::new(&parts))
    }

    /// Comma-separated parts, empty for ∅.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Content j − i of a box (i, j).
pub fn content((i, j): (usize, usize)) -> i64 {
    j as i64 - i as i64
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", self.to_csv())
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_csv())
    }
}

/// All partitions of n, in reverse lexicographic order ((n) first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The poset Λ_r = {λ : |λ| = t, 0 ≤ t ≤ r, t ≡ r mod 2}.
#[derive(Clone, Debug)]
pub struct LambdaR {
    pub r: usize,
    /// Sorted by decreasing size, then reverse lexicographically.
    pub members: Vec<Partition>,
}

impl LambdaR {
    pub fn new(r: usize) -> Self {
        let members = (0..=r).rev().filter(|t| (r - t).is_multiple_of(2)).flat_map(partitions_of).collect();
        LambdaR { r, members }
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.size() <= self.r && (self.r - lambda.size()).is_multiple_of(2)
    }

    /// μ > λ in the order of Λ_r: larger size, or equal size and strictly dominating.
    pub fn greater(mu: &Partition, lambda: &Partition) -> bool {
        match mu.size().cmp(&lambda.size()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => mu.dominance(lambda) == Some(Ordering::Greater),
        }
    }

    /// Comparison in the partial order; `None` when incomparable.
    pub fn compare(a: &Partition, b: &Partition) -> Option<Ordering> {
        if a == b {
            Some(Ordering::Equal)
        } else if Self::greater(a, b) {
            Some(Ordering::Greater)
        } else if Self::greater(b, a) {
            Some(Ordering::Less)
        } else {
            None
        }
    }
}

/// (Y(λ) ⊆ Y(μ), |μ| − |λ| + Σ_{P ∈ Y(μ)∖Y(λ)} c(P)); the value is `None`
/// when the inclusion fails.
pub fn content_sum_outside(lambda: &Partition, mu: &Partition) -> (bool, Option<i64>) {
    if !lambda.is_contained_in(mu) {
        return (false, None);
    }
    let s: i64 = mu.boxes().into_iter().filter(|b| !lambda.contains_box(*b)).map(content).sum();
    (true, Some(mu.size() as i64 - lambda.size() as i64 + s))
}

/// Λ_r⁰ = {(t), (t−1, 1), (1³)} ∩ Λ_r.
pub fn lambda0(r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for t in (0..=r).rev().filter(|t| (r - t).is_multiple_of(2)) {
        out.push(Partition::new(&[t]));
        if t >= 2 {
            out.push(Partition::new(&[t - 1, 1]));
        }
    }
    if r % 2 == 1 && r >= 3 {
        out.push(Partition::new(&[1, 1, 1]));
    }
    out.sort_by(|a, b| b.size().cmp(&a.size()).then(b.cmp(a)));
    out
}

/// Λ_r¹ = Λ_r ∖ Λ_r⁰.
pub fn lambda1(r: usize) -> Vec<Partition> {
    let l0 = lambda0(r);
    LambdaR::new(r).members.into_iter().filter(|p| !l0.contains(p)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CruxRow {
    pub lambda: Partition,
    pub mu: Partition,
    pub inclusion: bool,
    pub value: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CruxReport {
    pub r: usize,
    pub rows: Vec<CruxRow>,
    pub violations: Vec<CruxRow>,
}

impl CruxReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        self.rows.iter().find(|r| &r.lambda == lambda && &r.mu == mu).and_then(|r| r.value)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("lambda,mu,inclusion,value\n");
        for r in &self.rows {
            let v = r.value.map(|v| v.to_string()).unwrap_or_default();
            s.push_str(&format!("\"{}\",\"{}\",{},{}\n", r.lambda.to_csv(), r.mu.to_csv(), r.inclusion, v));
        }
        s
    }
}

/// For all λ ≠ μ in Λ_r⁰ with Y(λ) ⊆ Y(μ), checks that the content sum is nonzero.
pub fn verify_crux(r: usize) -> CruxReport {
    let l0 = lambda0(r);
    let mut rows = Vec::new();
    for lambda in &l0 {
        for mu in &l0 {
            if mu == lambda {
                continue;
            }
            let (inclusion, value) = content_sum_outside(lambda, mu);
            rows.push(CruxRow { lambda: lambda.clone(), mu: mu.clone(), inclusion, value });
        }
    }
    let violations = rows.iter().filter(|r| r.value == Some(0)).cloned().collect();
    CruxReport { r, rows, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::new(x)
    }

    #[test]
    fn content_examples() {
        assert_eq!(content_sum_outside(&p(&[1]), &p(&[1, 1, 1])), (true, Some(-1)));
        assert_eq!(content_sum_outside(&p(&[2, 1]), &p(&[2, 2, 1])), (true, Some(0)));
        assert!(!content_sum_outside(&p(&[2]), &p(&[1, 1])).0);
        for n in 0..6 {
            for l in partitions_of(n) {
                assert_eq!(content_sum_outside(&l, &l), (true, Some(0)));
            }
        }
    }

    #[test]
    fn lambda0_examples() {
        assert_eq!(lambda0(4), vec![p(&[4]), p(&[3, 1]), p(&[2]), p(&[1, 1]), Partition::empty()]);
        assert_eq!(lambda0(5), vec![p(&[5]), p(&[4, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1]), p(&[1])]);
        assert_eq!(lambda0(1), vec![p(&[1])]);
        for r in 2..=64 {
            assert_eq!(lambda0(r).len(), r + 1, "r = {r}");
        }
    }

    #[test]
    fn lambda_r_order() {
        let l4 = LambdaR::new(4);
        assert_eq!(l4.members.len(), 8);
        assert_eq!(l4.members[0], p(&[4]));
        assert_eq!(l4.members[7], Partition::empty());
        assert!(LambdaR::greater(&p(&[2, 2]), &p(&[2, 1, 1])));
        assert!(LambdaR::greater(&p(&[1, 1, 1, 1]), &p(&[2])));
        assert_eq!(LambdaR::compare(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])), None);
    }

    #[test]
    fn crux_small() {
        let rep = verify_crux(5);
        assert!(rep.passed());
        assert_eq!(rep.value(&p(&[1]), &p(&[1, 1, 1])), Some(-1));
        assert!(rep.value(&p(&[3]), &p(&[5])).unwrap() > 0);
    }

    #[test]
    fn parsing() {
        assert_eq!(Partition::parse("2,1"), Some(p(&[2, 1])));
        assert_eq!(Partition::parse("(3,1)"), Some(p(&[3, 1])));
        assert_eq!(Partition::parse(""), Some(Partition::empty()));
        assert_eq!(Partition::parse("1,2"), None);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
