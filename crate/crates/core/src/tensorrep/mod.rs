//! The representations of B_r(3) and BMW_r(q) on tensor powers of the
//! 3-dimensional module: the R-matrix Ř and contraction ě, evaluation of
//! words and basis elements as sparse endomorphisms, rank and kernel of the
//! representation, and the Bratteli multiplicities of the commutant.

mod bratteli;
mod endo;
mod kernel;
mod sl2;
mod verify;

pub use bratteli::{bratteli, commutant_dim};
pub use endo::{eta_direct, tensor_dim, tensor_word, EndoMatrix, LocalOp, LocalOps, TensorRep};
pub use kernel::{
    basis_lifts, classical_rank_and_kernel, classical_rows, compressed_rows, compression_width, quantum_rank_at,
    rep_rank_and_kernel, sample_points, Method, Mode, RankKernel, MAX_CLASSICAL_R, MAX_QUANTUM_R,
};
pub use sl2::{build_rmatrix, kron, to_laurent, QuantumSl2Data, RMatrixPair, COPRODUCT};

pub use verify::{
    ann_lambdas, tensor_relation_failures, verify_main_theorem, AnnLambdas, TheoremReport, VerifyError, VerifyOptions,
    MAX_EXACT_QUANTUM_R, MAX_VERIFY_CLASSICAL_R, MAX_VERIFY_QUANTUM_R,
};

#[cfg(test)]
mod tests;
