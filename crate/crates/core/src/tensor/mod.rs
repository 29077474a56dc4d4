//! Hypermatrices and their Cayley hyperdeterminant.
//!
//! Three independent evaluations are provided and are expected to agree
//! exactly on every even-order input:
//!
//! - [`det_permutation_oracle`]: signed sum over tuples of permutations;
//! - [`det_wedge`]: the `n`-th power in the tensor power of a Grassmann algebra;
//! - [`expand_first_index`]: recursive expansion along the first index.

pub mod action;
pub mod expand;
pub mod hypermatrix;
pub mod matrix;
pub mod minor;
pub mod oracle;
pub mod wedge;

use std::fmt;
use std::str::FromStr;

pub use action::{gl_action, split_sign, subtensor, SubsetFamily};
pub use expand::expand_first_index;
pub use hypermatrix::{Hypermatrix, IndexIter};
pub use matrix::det_classical;
pub use minor::minor_summation;
pub use oracle::det_permutation_oracle;
pub use wedge::{det_wedge, wedge_levels, WedgeAccumulator};

use crate::budget::{sat_factorial, sat_pow, Budget};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Oracle,
    Wedge,
    Expand,
    /// Wedge, except for tiny inputs where the oracle is cheaper.
    Auto,
}

/// Below this many permutation products `Auto` uses the oracle.
pub const AUTO_ORACLE_THRESHOLD: u128 = 64;

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Algorithm::Oracle),
            "wedge" => Ok(Algorithm::Wedge),
            "expand" => Ok(Algorithm::Expand),
            "auto" => Ok(Algorithm::Auto),
            other => Err(Error::Parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Wedge => "wedge",
            Algorithm::Expand => "expand",
            Algorithm::Auto => "auto",
        })
    }
}

impl Algorithm {
    /// The concrete algorithm `Auto` resolves to for `m`.
    pub fn resolve<S: Scalar>(self, m: &Hypermatrix<S>) -> Algorithm {
        match self {
            Algorithm::Auto => {
                let products = sat_pow(sat_factorial(m.dim()), m.order().saturating_sub(1));
                if m.order() % 2 == 1 || products <= AUTO_ORACLE_THRESHOLD {
                    Algorithm::Oracle
                } else {
                    Algorithm::Wedge
                }
            }
            other => other,
        }
    }
}

pub fn hyperdeterminant<S: Scalar>(m: &Hypermatrix<S>, algorithm: Algorithm, budget: &Budget) -> Result<S> {
    match algorithm.resolve(m) {
        Algorithm::Oracle => det_permutation_oracle(m, budget),
        Algorithm::Wedge => det_wedge(m, budget),
        Algorithm::Expand => expand_first_index(m, budget),
        Algorithm::Auto => unreachable!("resolved above"),
    }
}
