use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Multiplicities m_r(d) of V(d) in V(2)^{⊗r}, keyed by highest weight d.
///
/// V(d) ⊗ V(2) = V(d+2) ⊕ V(d) ⊕ V(d−2) for d ≥ 2, and V(0) ⊗ V(2) = V(2).
pub fn bratteli(r: usize) -> BTreeMap<usize, BigUint> {
    assert!(r >= 1, "r must be positive");
    let mut m: Vec<BigUint> = vec![BigUint::zero(); 2 * r + 3];
    m[2] = BigUint::one();
    for _ in 1..r {
        let mut next = vec![BigUint::zero(); m.len()];
        for d in (0..m.len()).step_by(2) {
            let mut x = BigUint::zero();
            if d >= 2 {
                x += &m[d - 2];
                x += &m[d];
            }
            if d + 2 < m.len() {
                x += &m[d + 2];
            }
            next[d] = x;
        }
        m = next;
    }
    m.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

/// dim E(r) = Σ_d m_r(d)².
pub fn commutant_dim(r: usize) -> BigUint {
    bratteli(r).values().map(|x| x * x).sum()
}
