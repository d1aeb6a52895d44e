use std::fmt;

use super::diagram::BrauerDiagram;

/// A letter of a diagram word, stacked top to bottom; indices are 1-based.
///
/// In the Brauer algebra both crossings are s_i; in the BMW algebra `Pos(i)`
/// is g_i and `Neg(i)` is g_i⁻¹.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Pos(u8),
    Neg(u8),
    Cup(u8),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Pos(i) | Letter::Neg(i) | Letter::Cup(i) => i as usize,
        }
    }

    pub fn is_crossing(self) -> bool {
        !matches!(self, Letter::Cup(_))
    }

    /// Underlying Brauer diagram of the letter.
    pub fn diagram(self, r: usize) -> BrauerDiagram {
        match self {
            Letter::Pos(i) | Letter::Neg(i) => BrauerDiagram::s(i as usize, r),
            Letter::Cup(i) => BrauerDiagram::e(i as usize, r),
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Pos(i) => Letter::Neg(i),
            Letter::Neg(i) => Letter::Pos(i),
            c => c,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Pos(i) => write!(f, "g{i}"),
            Letter::Neg(i) => write!(f, "G{i}"),
            Letter::Cup(i) => write!(f, "e{i}"),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn word_to_string(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Product of the letters' diagrams, with the number of closed loops formed.
pub fn expand_word(word: &[Letter], r: usize) -> (BrauerDiagram, usize) {
    let mut d = BrauerDiagram::identity(r);
    let mut loops = 0;
    for l in word {
        let (n, k) = d.compose(&l.diagram(r));
        d = n;
        loops += k;
    }
    (d, loops)
}

/// Lexicographically minimal reduced word for the permutation diagram joining
/// top x to bottom f(x); letter k on top means f = f' ∘ s_k.
pub fn permutation_word(f: &[usize]) -> Vec<usize> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    while let Some(k) = (0..f.len().saturating_sub(1)).find(|&k| f[k] > f[k + 1]) {
        f.swap(k, k + 1);
        out.push(k + 1);
    }
    out
}

/// Canonical factorization d = σ·(e_{t+1}e_{t+3}⋯e_{r−1})·τ.
///
/// Through strands, ordered by top endpoint, pass through positions 1..t of
/// the skeleton; top arcs (ordered by smaller endpoint) occupy the skeleton's
/// cap slots in order, and likewise bottom arcs and cups.
pub struct Factorization {
    pub t: usize,
    /// σ as a map top point ↦ skeleton top position (0-based).
    pub sigma: Vec<usize>,
    /// τ as a map skeleton bottom position ↦ bottom point (0-based).
    pub tau: Vec<usize>,
}

pub fn factorize(d: &BrauerDiagram) -> Factorization {
    let r = d.r();
    let t = d.through_count();
    let mut sigma = vec![usize::MAX; r];
    let mut tau = vec![usize::MAX; r];
    let mut pos = 0;
    for x in 0..r {
        let y = d.partner(x);
        if y >= r {
            sigma[x] = pos;
            tau[pos] = y - r;
            pos += 1;
        }
    }
    let mut slot = t;
    for x in 0..r {
        let y = d.partner(x);
        if y < r && x < y {
            sigma[x] = slot;
            sigma[y] = slot + 1;
            slot += 2;
        }
    }
    let mut slot = t;
    for x in r..2 * r {
        let y = d.partner(x);
        if y >= r && x < y {
            tau[slot] = x - r;
            tau[slot + 1] = y - r;
            slot += 2;
        }
    }
    Factorization { t, sigma, tau }
}

/// Word over {s_i, e_i} (crossings as `Pos`) whose expansion is `d` with no loops.
pub fn diagram_to_word(d: &BrauerDiagram) -> Vec<Letter> {
    let r = d.r();
    let f = factorize(d);
    let mut w: Vec<Letter> = permutation_word(&f.sigma).into_iter().map(|k| Letter::Pos(k as u8)).collect();
    let mut i = f.t + 1;
    while i < r {
        w.push(Letter::Cup(i as u8));
        i += 2;
    }
    w.extend(permutation_word(&f.tau).into_iter().map(|k| Letter::Pos(k as u8)));
    w
}
