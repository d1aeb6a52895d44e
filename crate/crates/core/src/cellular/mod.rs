//! Cell modules of the Brauer algebra B_r(δ): dangle bases, invariant
//! forms, radicals, composition factors and the functors between B_r and
//! B_{r+2}.

mod cell;
mod dangle;
mod functors;
mod module;
mod radical;
mod transfer;

pub use cell::{check_char_rad, CellError, CellModule, CharRadCheck};
pub use dangle::{dangles, Dangle};
pub use functors::{functor_f, functor_g, MAX_G_R};
pub use module::{hom_space, isomorphic, ModuleRep};
pub use radical::{
    algebra_radical, annihilated_lambdas, cells_report, composition_factors, thmrad_check, CellDatum, CellRow,
    CellsReport, FactorRow, IdealSpec, ThmRadOutcome, MAX_DATUM_R,
};

pub use transfer::{hom_dimension_cyclic, HomTransfer};

#[cfg(test)]
mod tests;
