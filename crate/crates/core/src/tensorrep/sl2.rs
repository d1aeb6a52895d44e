use num_traits::{One, Zero};

use crate::field::Ring;
use crate::linalg::Matrix;
use crate::scalars::{LaurentPoly, ScalarQ};

/// The 3-dimensional 𝒰_q(𝔰𝔩₂)-module V_q with basis v₀, v₁, v₂ of weights
/// 2, 0, −2: K vₐ = q^{2−2a} vₐ, F v₀ = v₁, F v₁ = v₂, E v₁ = [2]v₀, E v₂ = [2]v₁.
///
/// Coproduct: Δ(E) = E⊗1 + K⊗E, Δ(F) = F⊗K⁻¹ + 1⊗F, Δ(K) = K⊗K.
#[derive(Clone, Debug)]
pub struct QuantumSl2Data {
    pub e: Matrix<ScalarQ>,
    pub f: Matrix<ScalarQ>,
    pub k: Matrix<ScalarQ>,
    pub k_inv: Matrix<ScalarQ>,
    pub coproduct: &'static str,
}

pub const COPRODUCT: &str = "E⊗1+K⊗E, F⊗K⁻¹+1⊗F, K⊗K";

impl QuantumSl2Data {
    pub fn new() -> Self {
        let two = ScalarQ::quantum_integer(2);
        let mut e = Matrix::zeros(3, 3);
        e.set(0, 1, two.clone());
        e.set(1, 2, two);
        let mut f = Matrix::zeros(3, 3);
        f.set(1, 0, ScalarQ::one());
        f.set(2, 1, ScalarQ::one());
        let mut k = Matrix::zeros(3, 3);
        let mut k_inv = Matrix::zeros(3, 3);
        for a in 0..3 {
            k.set(a, a, ScalarQ::q_pow(2 - 2 * a as i32));
            k_inv.set(a, a, ScalarQ::q_pow(2 * a as i32 - 2));
        }
        QuantumSl2Data { e, f, k, k_inv, coproduct: COPRODUCT }
    }

    /// (Δ(E), Δ(F), Δ(K)) on V_q ⊗ V_q.
    pub fn coproduct2(&self) -> (Matrix<ScalarQ>, Matrix<ScalarQ>, Matrix<ScalarQ>) {
        let id = Matrix::identity(3);
        let de = kron(&self.e, &id).add(&kron(&self.k, &self.e));
        let df = kron(&self.f, &self.k_inv).add(&kron(&id, &self.f));
        (de, df, kron(&self.k, &self.k))
    }

    /// Actions of E, F, K on V_q^{⊗r} by iterating the coproduct.
    pub fn tensor_action(&self, r: usize) -> (Matrix<ScalarQ>, Matrix<ScalarQ>, Matrix<ScalarQ>) {
        let (mut e, mut f, mut k, mut k_inv) = (self.e.clone(), self.f.clone(), self.k.clone(), self.k_inv.clone());
        for _ in 1..r {
            let n = e.nrows();
            let id_n = Matrix::identity(n);
            let id3 = Matrix::identity(3);
            let e2 = kron(&e, &id3).add(&kron(&k, &self.e));
            let f2 = kron(&f, &self.k_inv).add(&kron(&id_n, &self.f));
            let k2 = kron(&k, &self.k);
            let kinv2 = kron(&k_inv, &self.k_inv);
            (e, f, k, k_inv) = (e2, f2, k2, kinv2);
        }
        (e, f, k)
    }
}

impl Default for QuantumSl2Data {
    fn default() -> Self {
        Self::new()
    }
}

/// Kronecker product; the first factor is the most significant index.
pub fn kron<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let (ar, ac, br, bc) = (a.nrows(), a.ncols(), b.nrows(), b.ncols());
    let mut m = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        m.set(i * br + k, j * bc + l, x.mul_ref(y));
                    }
                }
            }
        }
    }
    m
}

/// The braiding Ř = q²P₄ − q⁻²P₂ + q⁻⁴P₀ and ě = (q²+1+q⁻²)P₀ on V_q ⊗ V_q,
/// with the isotypic projectors P_d.
#[derive(Clone, Debug)]
pub struct RMatrixPair {
    pub r_check: Matrix<ScalarQ>,
    /// Ř⁻¹ = q⁻²P₄ − q²P₂ + q⁴P₀.
    pub r_check_inv: Matrix<ScalarQ>,
    pub e_check: Matrix<ScalarQ>,
    pub projectors: [Matrix<ScalarQ>; 3],
}

/// Builds the projectors from highest-weight vectors (the kernel of Δ(E)
/// in each weight space) and the Δ(F)-strings they generate.
pub fn build_rmatrix() -> RMatrixPair {
    let data = QuantumSl2Data::new();
    let (de, df, _) = data.coproduct2();
    let weight = |idx: usize| 4 - 2 * (idx / 3 + idx % 3) as i32;
    let highest = de.nullspace();
    assert_eq!(highest.len(), 3, "V⊗V should have three highest-weight vectors");
    let mut columns: Vec<Vec<ScalarQ>> = Vec::new();
    let mut owner: Vec<usize> = Vec::new();
    // summand index: 0 ↦ V(4), 1 ↦ V(2), 2 ↦ V(0)
    for v in &highest {
        let w = v.iter().enumerate().find(|(_, x)| !x.is_zero()).map(|(i, _)| weight(i)).unwrap();
        let slot = ((4 - w) / 2) as usize;
        let mut cur = v.clone();
        for _ in 0..=w {
            columns.push(cur.clone());
            owner.push(slot);
            cur = df.mul_vec(&cur);
        }
        assert!(cur.iter().all(|x| x.is_zero()), "Δ(F)-string longer than expected");
    }
    assert_eq!(columns.len(), 9);
    let b = Matrix::from_rows((0..9).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect(), 9);
    let b_inv = b.inverse().expect("weight strings form a basis");
    let proj = |slot: usize| -> Matrix<ScalarQ> {
        let mut d = Matrix::zeros(9, 9);
        for (j, &o) in owner.iter().enumerate() {
            if o == slot {
                d.set(j, j, ScalarQ::one());
            }
        }
        b.mul(&d).mul(&b_inv)
    };
    let projectors = [proj(0), proj(1), proj(2)];
    let r_check = projectors[0]
        .scale(&ScalarQ::q_pow(2))
        .sub(&projectors[1].scale(&ScalarQ::q_pow(-2)))
        .add(&projectors[2].scale(&ScalarQ::q_pow(-4)));
    let r_check_inv = projectors[0]
        .scale(&ScalarQ::q_pow(-2))
        .sub(&projectors[1].scale(&ScalarQ::q_pow(2)))
        .add(&projectors[2].scale(&ScalarQ::q_pow(4)));
    let e_check = projectors[2].scale(&ScalarQ::quantum_integer(3));
    RMatrixPair { r_check, r_check_inv, e_check, projectors }
}

/// Converts a matrix with Laurent-polynomial entries.
pub fn to_laurent(m: &Matrix<ScalarQ>) -> Option<Matrix<LaurentPoly>> {
    let rows: Option<Vec<Vec<LaurentPoly>>> =
        (0..m.nrows()).map(|i| m.row(i).iter().map(|x| x.to_laurent()).collect()).collect();
    Some(Matrix::from_rows(rows?, m.ncols()))
}
