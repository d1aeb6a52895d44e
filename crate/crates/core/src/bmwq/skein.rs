use std::collections::HashMap;

use crate::brauer::{BrauerDiagram, DiagramBasis, Letter};
use crate::field::Ring;

/// Values of the skein parameters in a coefficient ring: the kink factor y,
/// its inverse, the Kauffman coefficient z and the loop value δ.
#[derive(Clone, Debug)]
pub struct SkeinParams<R> {
    pub y: R,
    pub y_inv: R,
    pub z: R,
    pub delta: R,
}

impl<R: Ring> SkeinParams<R> {
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SkeinParams<S> {
        SkeinParams { y: f(&self.y), y_inv: f(&self.y_inv), z: f(&self.z), delta: f(&self.delta) }
    }

    /// y^k for a signed exponent.
    pub fn y_pow(&self, k: i32) -> R {
        if k >= 0 {
            self.y.pow(k as u32)
        } else {
            self.y_inv.pow((-k) as u32)
        }
    }
}

/// Connectivity and crossing data of a word read as a framed tangle.
#[derive(Clone, Debug)]
pub struct Trace {
    pub diagram: BrauerDiagram,
    pub loops: usize,
    /// Sum of the signs of crossings of a component with itself.
    pub self_writhe: i32,
    /// Crossings, in traversal order of their first visit, that are first met
    /// on the under strand.
    pub ascending: Vec<usize>,
}

#[derive(Clone, Copy)]
struct Visit {
    component: usize,
    over: bool,
    dir: (i32, i32),
}

fn port(letter: Letter, top: bool, pos: usize) -> (bool, usize, Option<bool>) {
    let a = letter.index() - 1;
    let b = a + 1;
    match letter {
        Letter::Pos(_) | Letter::Neg(_) => {
            if pos == a {
                (!top, b, Some(top))
            } else if pos == b {
                (!top, a, Some(!top))
            } else {
                (!top, pos, None)
            }
        }
        Letter::Cup(_) => {
            if pos == a {
                (top, b, None)
            } else if pos == b {
                (top, a, None)
            } else {
                (!top, pos, None)
            }
        }
    }
}

/// Follows every strand of the tangle spelled by `word` (letters stacked top
/// to bottom). Arcs are traversed from their first boundary point in the
/// order top 1..r, bottom 1..r; closed loops afterwards.
///
/// A crossing is ascending when the traversal first reaches it along the
/// under strand; a word with no ascending crossing is descending.
pub fn trace(word: &[Letter], r: usize) -> Trace {
    let len = word.len();
    let mut seen = vec![false; (len + 1) * r];
    let mut visits: Vec<Option<Visit>> = vec![None; len];
    let mut partner = vec![0u8; 2 * r];
    let mut ascending = Vec::new();
    let mut self_writhe = 0;
    let mut component = 0;

    // Walks from (level, pos) moving down (or up) until reaching a boundary
    // point or `stop`. Returns whether it ended moving down, and the position.
    let mut walk =
        |level: usize, pos: usize, down: bool, stop: Option<(usize, usize)>, seen: &mut Vec<bool>, component: usize| {
            let (mut level, mut pos, mut down) = (level, pos, down);
            seen[level * r + pos] = true;
            loop {
                if (down && level == len) || (!down && level == 0) {
                    return (down, pos);
                }
                let k = if down { level } else { level - 1 };
                let letter = word[k];
                let (top_out, pos_out, strand_a) = port(letter, down, pos);
                if let Some(is_a) = strand_a {
                    let over = matches!(letter, Letter::Pos(_)) == is_a;
                    let mut dir = if is_a { (1, -1) } else { (-1, -1) };
                    if !down {
                        dir = (-dir.0, -dir.1);
                    }
                    let v = Visit { component, over, dir };
                    match visits[k] {
                        None => {
                            if !over {
                                ascending.push(k);
                            }
                            visits[k] = Some(v);
                        }
                        Some(first) => {
                            if first.component == component {
                                let (o, u) = if first.over { (first.dir, v.dir) } else { (v.dir, first.dir) };
                                self_writhe += (o.0 * u.1 - o.1 * u.0).signum();
                            }
                        }
                    }
                }
                level = if top_out { k } else { k + 1 };
                pos = pos_out;
                down = !top_out;
                if Some((level, pos)) == stop {
                    return (down, pos);
                }
                seen[level * r + pos] = true;
            }
        };

    for start in 0..2 * r {
        let (level, pos, down) = if start < r { (0, start, true) } else { (len, start - r, false) };
        if seen[level * r + pos] {
            continue;
        }
        let (at_bottom, p2) = walk(level, pos, down, None, &mut seen, component);
        let end = if at_bottom { r + p2 } else { p2 };
        partner[start] = end as u8;
        partner[end] = start as u8;
        component += 1;
    }
    let mut loops = 0;
    for level in 1..len {
        for pos in 0..r {
            if !seen[level * r + pos] {
                walk(level, pos, true, Some((level, pos)), &mut seen, component);
                component += 1;
                loops += 1;
            }
        }
    }
    Trace { diagram: BrauerDiagram::from_partner(partner), loops, self_writhe, ascending }
}

/// Cancels adjacent pairs that reduce by a single defining relation:
/// g g⁻¹ = 1, e e = δe, g e = e g = y e, g⁻¹e = e g⁻¹ = y⁻¹e.
fn simplify(word: &[Letter]) -> (Vec<Letter>, i32, usize) {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    let (mut ypow, mut loops) = (0, 0);
    for &l in word {
        if let Some(&prev) = out.last() {
            if prev.index() == l.index() {
                match (prev, l) {
                    (Letter::Pos(_), Letter::Neg(_)) | (Letter::Neg(_), Letter::Pos(_)) => {
                        out.pop();
                        continue;
                    }
                    (Letter::Cup(_), Letter::Cup(_)) => {
                        loops += 1;
                        continue;
                    }
                    (Letter::Cup(_), Letter::Pos(_)) => {
                        ypow += 1;
                        continue;
                    }
                    (Letter::Cup(_), Letter::Neg(_)) => {
                        ypow -= 1;
                        continue;
                    }
                    (Letter::Pos(_), Letter::Cup(_)) => {
                        out.pop();
                        out.push(l);
                        ypow += 1;
                        continue;
                    }
                    (Letter::Neg(_), Letter::Cup(_)) => {
                        out.pop();
                        out.push(l);
                        ypow -= 1;
                        continue;
                    }
                    _ => {}
                }
            }
        }
        out.push(l);
    }
    (out, ypow, loops)
}

/// Expands words in the basis of descending tangles by the Kauffman skein
/// relation g − g⁻¹ = z(1 − e), switching ascending crossings one at a time.
///
/// A descending word with connectivity D, ℓ closed loops and self-writhe w
/// equals y^w δ^ℓ T_D, where T_D is the descending tangle of D with every
/// component of writhe zero.
pub struct SkeinReducer<'a, R> {
    pub params: &'a SkeinParams<R>,
    pub basis: &'a DiagramBasis,
    memo: HashMap<Vec<Letter>, Vec<(usize, R)>>,
}

impl<'a, R: Ring> SkeinReducer<'a, R> {
    pub fn new(params: &'a SkeinParams<R>, basis: &'a DiagramBasis) -> Self {
        SkeinReducer { params, basis, memo: HashMap::new() }
    }

    pub fn reduce(&mut self, word: &[Letter]) -> Vec<(usize, R)> {
        let p = self.params;
        let (w, ypow, loops) = simplify(word);
        let factor = p.y_pow(ypow) * p.delta.pow(loops as u32);
        let base = self.reduce_simplified(w);
        base.into_iter().map(|(j, c)| (j, c * factor.clone())).filter(|(_, c)| !c.is_zero()).collect()
    }

    fn reduce_simplified(&mut self, word: Vec<Letter>) -> Vec<(usize, R)> {
        if let Some(v) = self.memo.get(&word) {
            return v.clone();
        }
        let r = self.basis.r;
        let t = trace(&word, r);
        let result = match t.ascending.first() {
            None => {
                let p = self.params;
                let c = p.y_pow(t.self_writhe) * p.delta.pow(t.loops as u32);
                vec![(self.basis.index_of(&t.diagram), c)]
            }
            Some(&k) => {
                let letter = word[k];
                let mut switched = word.clone();
                switched[k] = letter.inverse();
                let mut removed = word.clone();
                removed.remove(k);
                let mut capped = word.clone();
                capped[k] = Letter::Cup(letter.index() as u8);
                // g = g⁻¹ + z − z e and g⁻¹ = g − z + z e
                let z = match letter {
                    Letter::Pos(_) => self.params.z.clone(),
                    _ => -self.params.z.clone(),
                };
                let mut acc: HashMap<usize, R> = HashMap::new();
                let mut push = |terms: Vec<(usize, R)>, c: Option<&R>| {
                    for (j, x) in terms {
                        let x = match c {
                            Some(c) => x * c.clone(),
                            None => x,
                        };
                        let e = acc.entry(j).or_insert_with(R::zero);
                        *e = e.add_ref(&x);
                    }
                };
                push(self.reduce(&switched), None);
                push(self.reduce(&removed), Some(&z));
                push(self.reduce(&capped), Some(&-z.clone()));
                let mut v: Vec<(usize, R)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                v.sort_by_key(|(j, _)| *j);
                v
            }
        };
        self.memo.insert(word, result.clone());
        result
    }
}

/// The descending lift of a diagram: its canonical factorization word with
/// crossing signs chosen so that the tangle is descending, and its self-writhe.
pub fn descending_lift(d: &BrauerDiagram) -> (Vec<Letter>, i32) {
    let mut w = crate::brauer::diagram_to_word(d);
    loop {
        let t = trace(&w, d.r());
        if t.ascending.is_empty() {
            debug_assert_eq!(&t.diagram, d);
            return (w, t.self_writhe);
        }
        for k in t.ascending {
            w[k] = w[k].inverse();
        }
    }
}
