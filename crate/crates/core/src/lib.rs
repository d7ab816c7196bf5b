//! Exact computation with octonions, Jordan-type and quasi-multiplied algebras,
//! octonionic matrix algebras, near-structures and the fundamental-length algebra.

pub mod algebra;
pub mod analysis;
pub mod biedenharn;
pub mod builtin;
pub mod elementary;
pub mod fl;
pub mod identities;
pub mod io;
pub mod linalg;
pub mod near;
pub mod octmatrix;
pub mod octonion;
pub mod poly;
pub mod qform;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod weyl;
pub mod zorn;

pub use algebra::{Algebra, AlgebraError, Element, StructureAlgebra};
pub use octonion::{ExactOctonion, Octonion};
pub use scalar::{Gaussian, Rational};
