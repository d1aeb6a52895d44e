use std::fmt;

use crate::brauer::BrauerDiagram;

/// A half diagram on r points: disjoint arcs plus t free points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dangle {
    partner: Vec<Option<u8>>,
}

impl Dangle {
    pub fn from_partner(partner: Vec<Option<u8>>) -> Self {
        for (i, p) in partner.iter().enumerate() {
            if let Some(j) = p {
                assert_eq!(partner[*j as usize], Some(i as u8), "arcs must be symmetric");
                assert_ne!(*j as usize, i, "a point cannot be paired with itself");
            }
        }
        Dangle { partner }
    }

    pub fn r(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        self.partner[i].map(usize::from)
    }

    /// Free points in increasing order.
    pub fn free(&self) -> Vec<usize> {
        (0..self.r()).filter(|&i| self.partner[i].is_none()).collect()
    }

    pub fn t(&self) -> usize {
        self.partner.iter().filter(|p| p.is_none()).count()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.r()).filter_map(|i| self.partner(i).filter(|&j| j > i).map(|j| (i, j))).collect()
    }

    /// D·u: stacks D on top of u (D's bottom row on u's points).
    ///
    /// Returns the new dangle on D's top row, the map π sending the k-th free
    /// point of u to the position of its new location among the new free
    /// points, and the number of closed loops; `None` when two free points of
    /// u get joined (the number of through strands drops).
    pub fn act(&self, d: &BrauerDiagram) -> Option<(Dangle, Vec<usize>, usize)> {
        let r = self.r();
        assert_eq!(d.r(), r, "diagram and dangle sizes differ");
        let free = self.free();
        let mut new_partner: Vec<Option<u8>> = vec![None; r];
        let mut done = vec![false; r];
        let mut seen_bottom = vec![false; r];
        let mut target = vec![usize::MAX; free.len()];
        for p in 0..r {
            if done[p] {
                continue;
            }
            done[p] = true;
            let mut cur = d.partner(p);
            loop {
                if cur < r {
                    new_partner[p] = Some(cur as u8);
                    new_partner[cur] = Some(p as u8);
                    done[cur] = true;
                    break;
                }
                let j = cur - r;
                seen_bottom[j] = true;
                match self.partner(j) {
                    None => {
                        let k = free.binary_search(&j).unwrap();
                        target[k] = p;
                        break;
                    }
                    Some(j2) => {
                        seen_bottom[j2] = true;
                        cur = d.partner(r + j2);
                    }
                }
            }
        }
        if target.contains(&usize::MAX) {
            return None;
        }
        let mut loops = 0;
        for j in 0..r {
            if seen_bottom[j] {
                continue;
            }
            loops += 1;
            let mut cur = j;
            loop {
                seen_bottom[cur] = true;
                let j2 = self.partner(cur).expect("unreached points lie on closed loops");
                seen_bottom[j2] = true;
                let next = d.partner(r + j2) - r;
                if next == j {
                    break;
                }
                cur = next;
            }
        }
        let out = Dangle { partner: new_partner };
        let new_free = out.free();
        let pi = target.iter().map(|p| new_free.binary_search(p).unwrap()).collect();
        Some((out, pi, loops))
    }

    /// Pairing of u* stacked over v: the map π sending the k-th free point
    /// of v to the index of the free point of u it reaches, and the number
    /// of closed loops; `None` when two free points of one side get joined.
    pub fn pair(&self, v: &Dangle) -> Option<(Vec<usize>, usize)> {
        let r = self.r();
        let (fu, fv) = (self.free(), v.free());
        if fu.len() != fv.len() {
            return None;
        }
        let mut seen = vec![false; r];
        let mut pi = Vec::with_capacity(fv.len());
        for &start in &fv {
            // alternate: u-arc, v-arc, u-arc, …
            let mut cur = start;
            seen[cur] = true;
            loop {
                match self.partner(cur) {
                    None => {
                        pi.push(fu.binary_search(&cur).unwrap());
                        break;
                    }
                    Some(j) => {
                        seen[j] = true;
                        {
                            let k = v.partner(j)?;
                            seen[k] = true;
                            cur = k;
                        }
                    }
                }
            }
        }
        let mut loops = 0;
        for i in 0..r {
            if seen[i] {
                continue;
            }
            loops += 1;
            let mut cur = i;
            loop {
                seen[cur] = true;
                let j = self.partner(cur)?;
                seen[j] = true;
                let k = v.partner(j)?;
                if k == i {
                    break;
                }
                cur = k;
            }
        }
        Some((pi, loops))
    }
}

impl fmt::Debug for Dangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs().iter().map(|(a, b)| format!("({},{})", a + 1, b + 1)).collect();
        let free: Vec<String> = self.free().iter().map(|a| (a + 1).to_string()).collect();
        write!(f, "{{{} | {}}}", arcs.join(""), free.join(","))
    }
}

/// All dangles on r points with t free points, in a fixed order.
pub fn dangles(r: usize, t: usize) -> Vec<Dangle> {
    assert!(t <= r && (r - t).is_multiple_of(2), "need t ≤ r and t ≡ r mod 2");
    let mut out = Vec::new();
    let mut partner: Vec<Option<u8>> = vec![None; r];
    let mut assigned = vec![false; r];
    fn rec(i: usize, free_left: usize, partner: &mut Vec<Option<u8>>, assigned: &mut Vec<bool>, out: &mut Vec<Dangle>) {
        let r = partner.len();
        let Some(i) = (i..r).find(|&k| !assigned[k]) else {
            if free_left == 0 {
                out.push(Dangle { partner: partner.clone() });
            }
            return;
        };
        if free_left > 0 {
            assigned[i] = true;
            rec(i + 1, free_left - 1, partner, assigned, out);
            assigned[i] = false;
        }
        for j in i + 1..r {
            if assigned[j] {
                continue;
            }
            assigned[i] = true;
            assigned[j] = true;
            partner[i] = Some(j as u8);
            partner[j] = Some(i as u8);
            rec(i + 1, free_left, partner, assigned, out);
            partner[i] = None;
            partner[j] = None;
            assigned[i] = false;
            assigned[j] = false;
        }
    }
    rec(0, t, &mut partner, &mut assigned, &mut out);
    out
}
