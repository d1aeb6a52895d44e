//! Exact linear algebra over a [`Field`], plus multi-modular kernels with
//! exact verification for the large rational systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::field::{Field, Fp, Rational, Ring, P61, P62A, P62B};

/// Sparse row: (column, value) pairs, columns strictly increasing.
pub type SparseRow<R> = Vec<(usize, R)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("rational reconstruction failed after {0} primes")]
    Reconstruction(usize),
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Ring> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_mul_assign(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    o.add_mul_assign(x, a);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul_ref(c)).collect() }
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }
}

impl<F: Field> Matrix<F> {
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Basis of {x : M x = 0}, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        nullspace_from_rref(&rows, &pivots, self.cols)
    }

    /// Basis of {x : x M = 0}.
    pub fn left_nullspace(&self) -> Vec<Vec<F>> {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let piv = rref_in_place(&mut aug, 2 * n);
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_rows(aug.into_iter().map(|r| r[n..].to_vec()).collect(), n))
    }
}

/// Reduced row echelon form in place; rows are truncated to the rank and the
/// pivot columns returned.
pub fn rref_in_place<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        x.sub_mul_assign(&f, y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn nullspace_from_rref<F: Field>(rows: &[Vec<F>], pivots: &[usize], ncols: usize) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut v = vec![F::zero(); ncols];
            v[j] = F::one();
            for (row, &p) in rows.iter().zip(pivots) {
                v[p] = -row[j].clone();
            }
            v
        })
        .collect()
}

/// An incrementally built subspace of Fⁿ kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        x.sub_mul_assign(&f, y);
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        x.sub_mul_assign(&f, y);
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_subspace(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    pub fn from_vectors(n: usize, vs: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut e = Self::new(n);
        for v in vs {
            e.insert(v);
        }
        e
    }
}

/// Converts a sparse row into a dense one of length `n`.
pub fn densify<R: Ring>(row: &[(usize, R)], n: usize) -> Vec<R> {
    let mut v = vec![R::zero(); n];
    for (j, x) in row {
        v[*j] = x.clone();
    }
    v
}

/// Reduces sparse rows modulo p and projects them to at most `k` dense
/// columns with a seeded random matrix when the column count is large.
///
/// The rank of the projection never exceeds the rank of the input, so it is a
/// valid lower bound for the rank in characteristic zero.
pub fn project_mod_p<const P: u64>(rows: &[SparseRow<Fp<P>>], ncols: usize, seed: u64) -> (Vec<Vec<Fp<P>>>, usize) {
    let n = rows.len();
    let k = n + 16;
    if ncols <= k {
        return (rows.iter().map(|r| densify(r, ncols)).collect(), ncols);
    }
    let out: Vec<Vec<Fp<P>>> = rows
        .par_iter()
        .map(|row| {
            let mut acc = vec![Fp::<P>::zero(); k];
            for (c, v) in row {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (*c as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
                for a in acc.iter_mut() {
                    let h = Fp::<P>::new(rng.gen::<u64>());
                    *a = *a + *v * h;
                }
            }
            acc
        })
        .collect();
    (out, k)
}

/// Rank modulo p of a sparse matrix (a lower bound for its rank over ℚ or ℚ(q)).
pub fn rank_mod_p<const P: u64>(rows: &[SparseRow<Fp<P>>], ncols: usize, seed: u64) -> usize {
    let (mut dense, k) = project_mod_p(rows, ncols, seed);
    rref_in_place(&mut dense, k).len()
}

/// Left kernel of a sparse matrix over 𝔽ₚ: (free row indices, kernel basis).
///
/// The basis vector for free index j has a 1 in slot j and zeros in every
/// other free slot.
pub fn left_kernel_mod_p<const P: u64>(
    rows: &[SparseRow<Fp<P>>],
    ncols: usize,
    seed: u64,
) -> (Vec<usize>, Vec<Vec<Fp<P>>>) {
    let n = rows.len();
    let (dense, k) = project_mod_p(rows, ncols, seed);
    let mut t: Vec<Vec<Fp<P>>> = (0..k).map(|j| dense.iter().map(|r| r[j]).collect()).collect();
    let pivots = rref_in_place(&mut t, n);
    let basis = nullspace_from_rref(&t, &pivots, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    ((0..n).filter(|&j| !is_pivot[j]).collect(), basis)
}

/// Rational n/d ≡ a (mod m) with |n|, |d| ≤ √(m/2), if one exists.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !Integer::gcd(&r1, &t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

pub(crate) fn crt(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    // x ≡ a (mod m), x ≡ b (mod p)
    let pb = BigInt::from(p);
    let m_inv = m.mod_floor(&pb).modpow(&BigInt::from(p - 2), &pb);
    let diff = (BigInt::from(b) - a).mod_floor(&pb);
    a + m * ((diff * m_inv).mod_floor(&pb))
}

/// Exactly verified left kernel of a rational matrix.
#[derive(Clone, Debug)]
pub struct CertifiedKernel {
    /// Rank over ℚ (upper bound from the exhibited kernel, lower bound from a modular rank).
    pub rank: usize,
    /// Row indices carrying the identity pattern of the basis.
    pub free: Vec<usize>,
    /// Kernel basis; vector i is 1 at `free[i]` and 0 at the other free slots.
    pub basis: Vec<Vec<Rational>>,
    pub primes_used: usize,
}

impl CertifiedKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Membership of `v` in the kernel, using the identity pattern on free slots.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut acc = vec![Rational::zero(); v.len()];
        for (f, b) in self.free.iter().zip(&self.basis) {
            let c = &v[*f];
            if c.is_zero() {
                continue;
            }
            for (a, x) in acc.iter_mut().zip(b) {
                if !x.is_zero() {
                    *a += c * x;
                }
            }
        }
        acc == v
    }
}

fn reduce_rows<const P: u64>(rows: &[SparseRow<Rational>]) -> Option<Vec<SparseRow<Fp<P>>>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|(j, x)| Fp::<P>::from_rational(x).map(|v| (*j, v)))
                .filter(|e| e.as_ref().is_none_or(|(_, v)| !v.is_zero()))
                .collect::<Option<Vec<_>>>()
        })
        .collect()
}

fn kernel_residues<const P: u64>(
    rows: &[SparseRow<Rational>],
    ncols: usize,
    seed: u64,
) -> Option<(Vec<usize>, Vec<Vec<u64>>)> {
    let red = reduce_rows::<P>(rows)?;
    let (free, basis) = left_kernel_mod_p(&red, ncols, seed);
    Some((free, basis.into_iter().map(|v| v.into_iter().map(|x| x.value()).collect()).collect()))
}

/// Checks Σᵢ xᵢ·rowᵢ = 0 exactly.
pub fn is_left_kernel_vector(x: &[Rational], rows: &[SparseRow<Rational>], ncols: usize) -> bool {
    let lcm = x.iter().filter(|c| !c.is_zero()).fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut acc: Vec<BigInt> = Vec::new();
    let mut acc_rat: Vec<Rational> = Vec::new();
    let integral_rows = rows.iter().all(|r| r.iter().all(|(_, v)| v.is_integer()));
    if integral_rows {
        acc.resize(ncols, BigInt::zero());
    } else {
        acc_rat.resize(ncols, Rational::zero());
    }
    for (xi, row) in x.iter().zip(rows) {
        if xi.is_zero() {
            continue;
        }
        if integral_rows {
            let s = (xi * Rational::from_integer(lcm.clone())).to_integer();
            for (j, v) in row {
                acc[*j] += &s * v.numer();
            }
        } else {
            for (j, v) in row {
                acc_rat[*j] += xi * v;
            }
        }
    }
    if integral_rows {
        acc.iter().all(|v| v.is_zero())
    } else {
        acc_rat.iter().all(|v| v.is_zero())
    }
}

/// Left kernel of a sparse rational matrix, computed modulo up to three
/// primes, lifted by rational reconstruction, and verified exactly.
pub fn certified_left_kernel(
    rows: &[SparseRow<Rational>],
    ncols: usize,
    seed: u64,
) -> Result<CertifiedKernel, LinalgError> {
    let n = rows.len();
    let mut modulus = BigInt::one();
    let mut lifted: Option<(Vec<usize>, Vec<Vec<BigInt>>)> = None;
    let mut used = 0;
    for (k, p) in [P61, P62A, P62B].into_iter().enumerate() {
        let res = match k {
            0 => kernel_residues::<P61>(rows, ncols, seed),
            1 => kernel_residues::<P62A>(rows, ncols, seed),
            _ => kernel_residues::<P62B>(rows, ncols, seed),
        };
        let Some((free, basis)) = res else { continue };
        lifted = Some(match lifted.take() {
            None => (free, basis.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect()),
            Some((f0, acc)) => {
                if f0 != free {
                    // Unlucky prime for the pivot pattern; keep the smaller kernel.
                    if free.len() < f0.len() {
                        modulus = BigInt::one();
                        (free, basis.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect())
                    } else {
                        (f0, acc)
                    }
                } else {
                    let merged = acc
                        .iter()
                        .zip(&basis)
                        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| crt(x, &modulus, *y, p)).collect())
                        .collect();
                    (f0, merged)
                }
            }
        });
        modulus *= BigInt::from(p);
        used += 1;
        let (free, acc) = lifted.as_ref().unwrap();
        let candidate: Option<Vec<Vec<Rational>>> = acc
            .par_iter()
            .map(|v| v.iter().map(|a| rational_reconstruct(a, &modulus)).collect::<Option<Vec<_>>>())
            .collect();
        if let Some(basis) = candidate {
            let ok = basis.par_iter().all(|x| is_left_kernel_vector(x, rows, ncols));
            if ok {
                return Ok(CertifiedKernel { rank: n - free.len(), free: free.clone(), basis, primes_used: used });
            }
        }
    }
    Err(LinalgError::Reconstruction(used))
}

/// Exact left kernel of a small dense matrix, by direct elimination.
pub fn left_kernel_exact<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let n = rows.len();
    let mut t: Vec<Vec<F>> = (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    let pivots = rref_in_place(&mut t, n);
    nullspace_from_rref(&t, &pivots, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn rref_and_nullspace() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), q(1)]], 3);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(|x| x.is_zero()));
        let inv = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(1)]], 2).inverse().unwrap();
        assert_eq!(inv, Matrix::from_rows(vec![vec![q(1), q(-1)], vec![q(-1), q(2)]], 2));
    }

    #[test]
    fn echelon_insert_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![q(0), q(2), q(4)]));
        assert!(e.insert(vec![q(1), q(1), q(1)]));
        assert!(!e.insert(vec![q(2), q(4), q(6)]));
        assert_eq!(e.dim(), 2);
        assert_eq!(e.pivots(), &[0, 1]);
        assert!(e.contains(&[q(1), q(0), q(-1)]));
        assert!(!e.contains(&[q(0), q(0), q(1)]));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(P61);
        let x = rat(-7, 12);
        let r = crate::Fp61::from_rational(&x).unwrap();
        assert_eq!(rational_reconstruct(&BigInt::from(r.value()), &m), Some(x));
    }

    #[test]
    fn certified_kernel_small() {
        // rows: r0, r1, r0 + r1/3, 2 r1
        let r0: SparseRow<Rational> = vec![(0, q(1)), (5, q(2)), (40, q(-1))];
        let r1: SparseRow<Rational> = vec![(1, q(3)), (5, q(1))];
        let r2: SparseRow<Rational> = vec![(0, q(1)), (1, q(1)), (5, rat(7, 3)), (40, q(-1))];
        let r3: SparseRow<Rational> = vec![(1, q(6)), (5, q(2))];
        let rows = vec![r0, r1, r2, r3];
        let k = certified_left_kernel(&rows, 100, 7).unwrap();
        assert_eq!(k.rank, 2);
        assert_eq!(k.dim(), 2);
        for v in &k.basis {
            assert!(is_left_kernel_vector(v, &rows, 100));
        }
        assert!(k.contains(&[q(2), rat(2, 3), q(-2), q(0)]));
        assert!(!k.contains(&[q(1), q(0), q(0), q(0)]));
    }
}
