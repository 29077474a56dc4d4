//! Exact hyperdeterminant calculus for even-order hypermatrices.
//!
//! The crate evaluates Cayley's hyperdeterminant over exact rationals (or
//! rational polynomials in one variable `y`) and specializes it to Hankel
//! hypermatrices of Beta-distribution moments. In that setting the
//! hyperdeterminant reproduces the Selberg and Aomoto integrals for integer
//! exponent `k` with no numerical integration at all:
//!
//! ```
//! use hyperdet::prelude::*;
//!
//! let p = SelbergParams::new(int(1), int(1), 2, 2).unwrap();
//! let tensor = build_selberg_tensor(&p);
//! let det = det_wedge(&tensor, &Budget::default()).unwrap();
//! assert_eq!(det, rat(1, 30));
//! assert_eq!(det, selberg_closed_form_normalized(&p));
//! ```
//!
//! Modules:
//!
//! - [`scalar`]: rationals, univariate polynomials, Pochhammer symbols;
//! - [`tensor`]: hypermatrices, three hyperdeterminant algorithms, the group
//!   action, subtensors and the minor summation formula;
//! - [`hankel`]: Hankel builders, the Vandermonde-power fast path and the
//!   Dyson constant term;
//! - [`selberg`]: Selberg, symmetric and Aomoto tensors with their closed forms
//!   and identity checks;
//! - [`quadrature`]: a floating-point Gauss–Legendre cross-check of the
//!   integral side;
//! - [`io`] and [`cli`]: JSON formats and the command-line front end.

pub mod budget;
pub mod check;
pub mod cli;
pub mod error;
pub mod hankel;
pub mod io;
pub mod quadrature;
pub mod scalar;
pub mod selberg;
pub mod tensor;

pub use budget::Budget;
pub use error::{Error, Result};

pub mod prelude {
    pub use crate::budget::Budget;
    pub use crate::check::Check;
    pub use crate::error::{Error, Result};
    pub use crate::hankel::{
        build_hankel, c_lambda_table, dyson_constant_term, hankel_det_fast, top_coefficient, vandermonde_power,
        MomentSequence, SparseMultiPoly,
    };
    pub use crate::scalar::rational::{binomial, factorial, int, multinomial, pochhammer, rat};
    pub use crate::scalar::{Rational, Scalar, UniPoly};
    pub use crate::selberg::{
        aomoto_closed_form, aomoto_via_jacobi, beta_moment_normalized, build_aomoto_tensor, build_selberg_tensor,
        build_symmetric_selberg_tensor, pascal_sign_matrix, selberg_closed_form_normalized, SelbergParams,
    };
    pub use crate::tensor::{
        det_permutation_oracle, det_wedge, expand_first_index, gl_action, hyperdeterminant, minor_summation,
        split_sign, subtensor, Algorithm, Hypermatrix, SubsetFamily,
    };
}
