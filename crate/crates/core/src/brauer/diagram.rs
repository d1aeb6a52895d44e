use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// A perfect matching on r top points and r bottom points.
///
/// Points are numbered 0..r for the top row and r..2r for the bottom row;
/// `partner[p]` is the point matched with `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    partner: Vec<u8>,
}

impl BrauerDiagram {
    pub fn from_partner(partner: Vec<u8>) -> Self {
        let n = partner.len();
        assert!(n.is_multiple_of(2), "odd number of points");
        for (p, &q) in partner.iter().enumerate() {
            assert!((q as usize) < n && q as usize != p && partner[q as usize] as usize == p, "not a perfect matching");
        }
        BrauerDiagram { partner }
    }

    /// Builds from pairs of points in the 0..2r numbering.
    pub fn from_pairs(r: usize, pairs: &[(usize, usize)]) -> Self {
        let mut partner = vec![u8::MAX; 2 * r];
        for &(a, b) in pairs {
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        Self::from_partner(partner)
    }

    pub fn identity(r: usize) -> Self {
        let mut partner = vec![0; 2 * r];
        for i in 0..r {
            partner[i] = (i + r) as u8;
            partner[i + r] = i as u8;
        }
        BrauerDiagram { partner }
    }

    /// The transposition s_i (1-based i).
    pub fn s(i: usize, r: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{i} out of range for r = {r}");
        Self::from_permutation(&{
            let mut p: Vec<usize> = (0..r).collect();
            p.swap(i - 1, i);
            p
        })
    }

    /// The cup–cap e_i (1-based i).
    pub fn e(i: usize, r: usize) -> Self {
        assert!(i >= 1 && i < r, "e_{i} out of range for r = {r}");
        let mut d = Self::identity(r);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[r + a] = (r + b) as u8;
        d.partner[r + b] = (r + a) as u8;
        d
    }

    /// Permutation diagram joining top point x to bottom point f(x).
    pub fn from_permutation(f: &[usize]) -> Self {
        let r = f.len();
        let mut partner = vec![0; 2 * r];
        for (x, &y) in f.iter().enumerate() {
            partner[x] = (r + y) as u8;
            partner[r + y] = x as u8;
        }
        BrauerDiagram { partner }
    }

    pub fn r(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    pub fn partners(&self) -> &[u8] {
        &self.partner
    }

    /// Pairs (a, b) with a < b, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&p| p < self.partner(p)).map(|p| (p, self.partner(p))).collect()
    }

    /// Number of strands joining the top row to the bottom row.
    pub fn through_count(&self) -> usize {
        let r = self.r();
        (0..r).filter(|&p| self.partner(p) >= r).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.through_count() == self.r()
    }

    /// For a permutation diagram, the map top x ↦ bottom f(x).
    pub fn permutation(&self) -> Option<Vec<usize>> {
        let r = self.r();
        self.is_permutation().then(|| (0..r).map(|x| self.partner(x) - r).collect())
    }

    /// Top-bottom reflection.
    pub fn star(&self) -> Self {
        let r = self.r();
        let flip = |p: usize| if p < r { p + r } else { p - r };
        let mut partner = vec![0; 2 * r];
        for p in 0..2 * r {
            partner[flip(p)] = flip(self.partner(p)) as u8;
        }
        BrauerDiagram { partner }
    }

    /// Concatenation with `self` on top of `other`; returns the diagram and
    /// the number of closed loops formed in the middle row.
    pub fn compose(&self, other: &Self) -> (Self, usize) {
        let r = self.r();
        assert_eq!(r, other.r(), "rank mismatch");
        // Middle point k is self's bottom k and other's top k.
        let mut seen = vec![false; r];
        let mut partner = vec![0u8; 2 * r];
        // Follow from an outer point; returns the outer endpoint.
        let walk = |start_top: bool, p: usize, seen: &mut Vec<bool>| -> usize {
            // in_self: current point lives in `self` (else in `other`)
            let (mut in_self, mut q) = if start_top { (true, self.partner(p)) } else { (false, other.partner(p + r)) };
            loop {
                if in_self {
                    if q < r {
                        return q;
                    }
                    let k = q - r;
                    seen[k] = true;
                    q = other.partner(k);
                    in_self = false;
                } else {
                    if q >= r {
                        return q;
                    }
                    let k = q;
                    seen[k] = true;
                    q = self.partner(k + r);
                    in_self = true;
                }
            }
        };
        for p in 0..r {
            let end = walk(true, p, &mut seen);
            // end < r means self-top; end ≥ r means other-bottom
            partner[p] = end as u8;
        }
        for p in 0..r {
            let end = walk(false, p, &mut seen);
            partner[r + p] = end as u8;
        }
        let mut loops = 0;
        for k in 0..r {
            if seen[k] {
                continue;
            }
            loops += 1;
            let mut m = k;
            loop {
                seen[m] = true;
                let q = other.partner(m);
                debug_assert!(q < r);
                seen[q] = true;
                let next = self.partner(q + r) - r;
                if seen[next] {
                    break;
                }
                m = next;
            }
        }
        (BrauerDiagram { partner }, loops)
    }

    /// Adds `extra` vertical strands on the right.
    pub fn embed(&self, r_new: usize) -> Self {
        let r = self.r();
        assert!(r_new >= r);
        let map = |p: usize| if p < r { p } else { p - r + r_new };
        let mut partner = vec![0u8; 2 * r_new];
        for p in 0..2 * r {
            partner[map(p)] = map(self.partner(p)) as u8;
        }
        for i in r..r_new {
            partner[i] = (i + r_new) as u8;
            partner[i + r_new] = i as u8;
        }
        BrauerDiagram { partner }
    }

    fn point_name(&self, p: usize) -> String {
        let r = self.r();
        if p < r {
            format!("T{}", p + 1)
        } else {
            format!("B{}", p - r + 1)
        }
    }

    /// Parses the `[(T1,B2),(T2,T3),…]` format.
    pub fn parse(s: &str) -> Option<Self> {
        let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?;
        let mut raw = Vec::new();
        for chunk in inner.split("),") {
            let c = chunk.trim().trim_start_matches(',').trim_start_matches('(').trim_end_matches(')');
            if c.is_empty() {
                continue;
            }
            let (a, b) = c.split_once(',')?;
            raw.push((parse_point(a)?, parse_point(b)?));
        }
        let r = raw.len();
        let conv = |(top, i): (bool, usize)| if top { i - 1 } else { r + i - 1 };
        let pairs: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (conv(a), conv(b))).collect();
        if pairs.iter().any(|&(a, b)| a >= 2 * r || b >= 2 * r) {
            return None;
        }
        std::panic::catch_unwind(|| Self::from_pairs(r, &pairs)).ok()
    }
}

fn parse_point(s: &str) -> Option<(bool, usize)> {
    let s = s.trim();
    let (top, rest) = if let Some(x) = s.strip_prefix('T') { (true, x) } else { (false, s.strip_prefix('B')?) };
    let i: usize = rest.parse().ok()?;
    (i >= 1).then_some((top, i))
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.pairs().iter().map(|&(a, b)| format!("({},{})", self.point_name(a), self.point_name(b))).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for BrauerDiagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The diagram basis of B_r in a fixed order, with a reverse index.
#[derive(Clone, Debug)]
pub struct DiagramBasis {
    pub r: usize,
    pub diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
}

impl DiagramBasis {
    /// All (2r−1)!! diagrams; the smallest unmatched point is paired with each
    /// larger free point in increasing order.
    pub fn new(r: usize) -> Self {
        let mut diagrams = Vec::new();
        let mut partner = vec![u8::MAX; 2 * r];
        fn go(partner: &mut Vec<u8>, out: &mut Vec<BrauerDiagram>) {
            let Some(p) = partner.iter().position(|&x| x == u8::MAX) else {
                out.push(BrauerDiagram { partner: partner.clone() });
                return;
            };
            for q in p + 1..partner.len() {
                if partner[q] == u8::MAX {
                    partner[p] = q as u8;
                    partner[q] = p as u8;
                    go(partner, out);
                    partner[p] = u8::MAX;
                    partner[q] = u8::MAX;
                }
            }
        }
        go(&mut partner, &mut diagrams);
        let index = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        DiagramBasis { r, diagrams, index }
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn index_of(&self, d: &BrauerDiagram) -> usize {
        self.index[d]
    }

    pub fn get(&self, i: usize) -> &BrauerDiagram {
        &self.diagrams[i]
    }
}

/// (2r−1)!!
pub fn double_factorial(r: usize) -> usize {
    (1..=r).map(|k| 2 * k - 1).product()
}
