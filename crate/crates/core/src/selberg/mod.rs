//! Beta-moment tensors for the Selberg and Aomoto integrals and their
//! closed forms.
//!
//! Every tensor here is divided entrywise by `B(a, b)`, so all entries are
//! ratios of Pochhammer symbols: `B(a+m, b+l) / B(a, b) = (a)_m (b)_l / (a+b)_{m+l}`.
//! With that normalization `Det` of the Selberg tensor equals
//! `S_n(a,b;k) / (n! B(a,b)^n)`.

pub mod identities;
pub mod jacobi;

use std::fmt;

use num_traits::{One, Signed, Zero};

pub use identities::{
    dyson_ending_check, selberg_via_dyson, verify_aomoto_reflection, verify_beta_contiguity, verify_selberg_symmetry,
    verify_symmetric_form,
};

use crate::error::{Error, Result};
use crate::hankel::build_hankel_with;
use crate::scalar::rational::{binomial, factorial, from_bigint, int, pochhammer, sign_pow};
use crate::scalar::{Rational, UniPoly};
use crate::tensor::Hypermatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelbergParams {
    pub a: Rational,
    pub b: Rational,
    pub k: usize,
    pub n: usize,
}

impl SelbergParams {
    pub fn new(a: Rational, b: Rational, k: usize, n: usize) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::InvalidParams(format!("a and b must be positive (a={a}, b={b})")));
        }
        if k == 0 || n == 0 {
            return Err(Error::InvalidParams(format!(
                "k and n must be at least 1 (k={k}, n={n})"
            )));
        }
        Ok(SelbergParams { a, b, k, n })
    }

    /// Same `k`, `n` with `a` and `b` exchanged.
    pub fn swapped(&self) -> Self {
        SelbergParams {
            a: self.b.clone(),
            b: self.a.clone(),
            k: self.k,
            n: self.n,
        }
    }

    pub fn order(&self) -> usize {
        2 * self.k
    }
}

impl fmt::Display for SelbergParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} k={} n={}", self.a, self.b, self.k, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    Selberg,
    Aomoto,
    SelbergSymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedTensorLabel {
    pub kind: TensorKind,
    pub params: SelbergParams,
}

/// `B(a+m, b) / B(a, b) = (a)_m / (a+b)_m`.
pub fn beta_moment_normalized(p: &SelbergParams, m: u64) -> Rational {
    pochhammer(&p.a, m) / pochhammer(&(&p.a + &p.b), m)
}

/// Order-`2k` Hankel tensor of normalized Beta moments.
pub fn build_selberg_tensor(p: &SelbergParams) -> Hypermatrix<Rational> {
    build_hankel_with(p.n, p.order(), |s| beta_moment_normalized(p, s as u64))
}

/// Entry at `(I, J)` (first `k` indices, last `k` indices) is
/// `B(a+|I|, b+|J|) / B(a, b)`.
pub fn build_symmetric_selberg_tensor(p: &SelbergParams) -> Hypermatrix<Rational> {
    let ab = &p.a + &p.b;
    let k = p.k;
    Hypermatrix::from_fn(p.order(), p.n, |ix| {
        let i: usize = ix[..k].iter().sum();
        let j: usize = ix[k..].iter().sum();
        pochhammer(&p.a, i as u64) * pochhammer(&p.b, j as u64) / pochhammer(&ab, (i + j) as u64)
    })
}

/// Entry at `I` is `B(a+|I|, b)/B(a, b) · (y - (a+|I|)/(a+b+|I|))`.
pub fn build_aomoto_tensor(p: &SelbergParams) -> Hypermatrix<UniPoly> {
    build_hankel_with(p.n, p.order(), |s| {
        let beta = beta_moment_normalized(p, s as u64);
        let m = int(s as i64);
        let root = (&p.a + &m) / (&p.a + &p.b + &m);
        UniPoly::linear(beta.clone(), -(beta * root))
    })
}

/// `S_n(a,b;k) / (n! B(a,b)^n)` as
/// `(1/n!) Π_{j<n} (a)_{jk} (b)_{jk} ((j+1)k)! / ((a+b)_{(n+j-1)k} k!)`.
pub fn selberg_closed_form_normalized(p: &SelbergParams) -> Rational {
    let (n, k) = (p.n as u64, p.k as u64);
    let ab = &p.a + &p.b;
    let k_fact = from_bigint(factorial(k));
    let mut acc = from_bigint(factorial(n)).recip();
    for j in 0..n {
        acc *= pochhammer(&p.a, j * k) * pochhammer(&p.b, j * k) * from_bigint(factorial((j + 1) * k));
        acc /= pochhammer(&ab, (n + j - 1) * k) * &k_fact;
    }
    acc
}

/// Normalized Aomoto polynomial via the terminating `₂F₁` series:
/// `(-1)^n · Sel · (a/k)_n / (c)_n · ₂F₁(-n, c; a/k | y)`, `c = (a+b)/k + n - 1`.
pub fn aomoto_closed_form(p: &SelbergParams) -> UniPoly {
    let n = p.n as u64;
    let kr = int(p.k as i64);
    let a_k = &p.a / &kr;
    let c = (&p.a + &p.b) / &kr + int(p.n as i64 - 1);
    let prefactor = sign_pow(n) * selberg_closed_form_normalized(p) * pochhammer(&a_k, n) / pochhammer(&c, n);
    jacobi::hyp2f1_terminating(n, &c, &a_k).scale(&prefactor)
}

/// Same polynomial from the monic Jacobi recurrence:
/// `(-2)^{-n} · Sel · P_n^{(a/k-1, b/k-1)}(1 - 2y)`.
pub fn aomoto_via_jacobi(p: &SelbergParams) -> UniPoly {
    let kr = int(p.k as i64);
    let alpha = &p.a / &kr - Rational::one();
    let beta = &p.b / &kr - Rational::one();
    let jac = jacobi::monic_jacobi(p.n, &alpha, &beta);
    let shifted = jac.compose(&UniPoly::linear(int(-2), int(1)));
    let factor = num_traits::pow(int(-2), p.n).recip() * selberg_closed_form_normalized(p);
    shifted.scale(&factor)
}

/// `g_{ij} = (-1)^j C(i, j)`, 0-based, lower triangular with
/// `det g = (-1)^{n(n-1)/2}`.
pub fn pascal_sign_matrix(n: usize) -> Hypermatrix<Rational> {
    Hypermatrix::from_fn(2, n, |ix| {
        let (i, j) = (ix[0] as u64, ix[1] as u64);
        let c = from_bigint(binomial(i, j));
        if c.is_zero() {
            c
        } else {
            sign_pow(j) * c
        }
    })
}
