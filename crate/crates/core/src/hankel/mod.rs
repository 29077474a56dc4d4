//! Hankel hypermatrices (entries depending only on `|I| = i_1 + ... + i_d`)
//! and their evaluation through the expansion of `Δ(x)^{2k}`.

pub mod dyson;
pub mod multipoly;
pub mod table;

use num_traits::Zero;

pub use dyson::{dyson_check, dyson_closed_form, dyson_constant_term, dyson_constant_term_direct, DysonCheck};
pub use multipoly::{vandermonde_power, SparseMultiPoly};
pub use table::{c_lambda_table, top_coefficient, top_coefficient_closed_form, CoefficientTable};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::tensor::Hypermatrix;

/// Moments `m_0 .. m_L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    values: Vec<Rational>,
}

impl MomentSequence {
    pub fn new(values: Vec<Rational>) -> Self {
        MomentSequence { values }
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> Rational) -> Self {
        MomentSequence::new((0..len).map(f).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.values.get(i)
    }

    /// Errors unless `m_0 .. m_needed` are all present.
    pub fn require(&self, needed: usize) -> Result<()> {
        if self.values.len() <= needed {
            return Err(Error::MomentsTooShort {
                needed,
                available: self.values.len(),
            });
        }
        Ok(())
    }

    /// Copy with `m_i = 0` for `i > last` and `m_last = top`.
    pub fn truncated(&self, last: usize, top: Rational) -> Self {
        let mut values = self.values.clone();
        for (i, v) in values.iter_mut().enumerate() {
            if i > last {
                *v = Rational::zero();
            }
        }
        if let Some(v) = values.get_mut(last) {
            *v = top;
        }
        MomentSequence { values }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MomentSequence::new(self.values.iter().map(|v| v * c).collect())
    }
}

/// Order-`d`, dimension-`n` Hankel hypermatrix with entries `f(|I|)`.
pub fn build_hankel_with<S: crate::scalar::Scalar>(n: usize, d: usize, f: impl Fn(usize) -> S) -> Hypermatrix<S> {
    let values: Vec<S> = (0..=d * (n - 1)).map(f).collect();
    Hypermatrix::from_fn(d, n, |ix| values[ix.iter().sum::<usize>()].clone())
}

pub fn build_hankel(m: &MomentSequence, n: usize, d: usize) -> Result<Hypermatrix<Rational>> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParams("dimension and order must be positive".into()));
    }
    m.require(d * (n - 1))?;
    Ok(build_hankel_with(n, d, |s| m.values[s].clone()))
}

/// `Det_{2k}(m_{|I|})` over `0..n`, evaluated as `Σ_λ c_λ Π_i m_{λ_i}`.
pub fn hankel_det_fast(m: &MomentSequence, n: usize, k: usize, budget: &Budget) -> Result<Rational> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParams(format!("need n, k >= 1 (got n={n}, k={k})")));
    }
    m.require(2 * k * (n - 1))?;
    if n == 1 {
        return Ok(m.values[0].clone());
    }
    let table = table::cached_table(n, k, budget)?;
    let mut acc = Rational::zero();
    for (lambda, c) in table.iter() {
        let mut term = c.clone();
        for &l in lambda {
            let v = &m.values[l as usize];
            if v.is_zero() {
                term = Rational::zero();
                break;
            }
            term *= v;
        }
        acc += term;
    }
    Ok(acc)
}
