//! Exact computations in the Brauer algebra `B(n,N)`, its irreducible
//! representations in Young's orthogonal form, and the affine Brauer
//! algebra `A(n,N)`.

pub mod affine;
pub mod coeffs;
pub mod diagrams;
pub mod error;
pub mod repform;
pub mod shapes;
pub mod suites;
pub mod tensor;

pub use error::{Error, Result};
