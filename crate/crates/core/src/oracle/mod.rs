//! Exact matrix models used to check the closed formulas and criteria.
//!
//! Everything here works over Q(i). Real models have rational entries and
//! quaternionic models use the complex realization of size `2n` together
//! with the matrix `J` of the right multiplication by `j`.

pub mod cayley;
pub mod invariant;
pub mod linalg;
pub mod matrix;
pub mod model;
pub mod sweep;

pub use cayley::{cayley, cayley_inverse};
pub use invariant::{invariant_form_on_sd, FormKind};
pub use matrix::ExactMatrix;
pub use model::{build_model, centralizer_dim, compact_oracle, levi_dims, MatrixModel, TripleElement};
pub use sweep::{forms_up_to, verify, VerifyReport};
