//! Exact computations in the Brauer algebra B_r(3), the specialized BMW
//! algebra BMW_r(q), their cell modules, and their tensor representations on
//! the 3-dimensional sl₂ module.
//!
//! Linear algebra and the diagram algebras are generic over a coefficient
//! [`Ring`]/[`Field`]; the concrete scalars used throughout are [`Rational`],
//! [`ScalarQ`] and [`Fp61`].

pub mod bmwq;
pub mod brauer;
pub mod cellular;
pub mod field;
pub mod linalg;
pub mod partitions;
pub mod scalars;
pub mod symgrp;
pub mod tensorrep;

pub use field::{Field, Fp61, Rational, Ring};
pub use scalars::{LaurentPoly, ScalarQ};
