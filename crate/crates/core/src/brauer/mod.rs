//! The Brauer algebra B_r(δ): diagram basis, concatenation product, the
//! elements s_i, e_i, F, e_{1,4}, Φ, the through-strand filtration and ideal
//! closure.
//!
//! Products stack the left factor on top. A diagram's top row is the output
//! side of a representation, so that η(a·b) = η(a)η(b).

mod diagram;
mod element;
mod ideal;
mod named;
mod word;

pub use diagram::{double_factorial, BrauerDiagram, DiagramBasis};
pub use element::AlgebraElement;
pub use ideal::{ideal_closure, screened_closure, through_filtration, ActionTables, ScreenedSpan};
pub use named::{brauer3, named_elements, phi, BrauerAlgebra, NamedElements};
pub use word::{diagram_to_word, expand_word, factorize, permutation_word, word_to_string, Factorization, Letter};

#[cfg(test)]
mod tests;
