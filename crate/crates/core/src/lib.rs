pub mod algebra;
pub mod dispersion;
pub mod error;
pub mod half;
pub mod matrix;
pub mod reference;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod spinor;
pub mod verify;

pub use error::{Error, Result};
pub use half::HalfInteger;
pub use matrix::ExactMatrix;
pub use rep::{build_labeled_basis, state_count, LabeledBasis, Representation, StateLabel};
pub use report::VerificationReport;
pub use scalar::{ComplexScalar, RadicalScalar, Rational};
pub use spinor::{apply_generator, inner_product, monomial_basis, Charge, GeneratorName, Monomial, SpinorPolynomial};
