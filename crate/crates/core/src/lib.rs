//! Exact structure-constant computations for post-Lie algebras, pp-post-Lie
//! algebras and their bialgebras over Q(i).
//!
//! Algebras are stored as tables of structure constants
//! (`e_i * e_j = sum_k c[i][j][k] e_k`), and every checker evaluates its
//! identities on basis tuples with exact arithmetic.

pub mod acceptance;
pub mod algebra;
pub mod checks;
pub mod coalgebra;
pub mod constructions;
pub mod corpus;
pub mod cybe;
pub mod derived;
pub mod error;
pub mod forms;
pub mod io;
pub mod matrix;
pub mod oop;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod vector;

pub use algebra::{AlgebraSpec, OpName};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{CheckReport, Violation};
pub use scalar::{Field, Scalar};
pub use tensor::Tensor3;
pub use vector::Vector;

/// A bilinear form, `B[i][j] = B(e_i, e_j)`.
pub type BilinearForm = Matrix;
/// A linear map, `M[target][source]`.
pub type LinearMap = Matrix;
/// An element of `A (x) A`, `r[p][q]` the coefficient of `e_p (x) e_q`.
pub type Tensor2 = Matrix;
