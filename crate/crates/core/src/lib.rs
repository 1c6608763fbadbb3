//! Exact symbolic realizations of Lie (super)algebras and their q-deformations
//! by differential and finite-difference operators acting on finite
//! dimensional polynomial modules.

pub mod algebra;
pub mod diffop;
pub mod error;
pub mod matrix;
pub mod modspace;
pub mod poly;
pub mod qdiffop;
pub mod report;
pub mod reps;
pub mod suites;
pub mod scalar;

pub use algebra::{GenLabel, Relation, RelationTable};
pub use diffop::{BlockOp, DiffOp, Operator};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use modspace::{Basis, DirectSum};
pub use poly::{GaugedPoly, Monomial, Poly};
pub use qdiffop::QDiffOp;
pub use report::Report;
pub use scalar::{Field, QLaurent, Rational, Ring, Scalar};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/superalgebras.md")]
    mod superalgebras {}
    #[doc = include_str!("../../../book/src/deformation.md")]
    mod deformation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
