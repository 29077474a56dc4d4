//! Exact checks of the algebraic identities satisfied by the moment tensors.

use num_traits::{One, Zero};

use super::{
    build_aomoto_tensor, build_selberg_tensor, build_symmetric_selberg_tensor, pascal_sign_matrix,
    selberg_closed_form_normalized, SelbergParams,
};
use crate::budget::Budget;
use crate::check::Check;
use crate::error::Result;
use crate::hankel::{hankel_det_fast, top_coefficient, MomentSequence};
use crate::scalar::rational::{binomial, factorial, from_bigint, int, pochhammer, sign_pow};
use crate::scalar::{Rational, UniPoly};
use crate::tensor::{det_wedge, gl_action, Hypermatrix};

/// `Σ_{i=0}^{n} (-1)^i C(n,i) (a)_i/(a+b)_i = (b)_n/(a+b)_n`.
pub fn verify_beta_contiguity(p: &SelbergParams, n: u64) -> Check {
    let ab = &p.a + &p.b;
    let lhs = (0..=n).fold(Rational::zero(), |acc, i| {
        acc + sign_pow(i) * from_bigint(binomial(n, i)) * pochhammer(&p.a, i) / pochhammer(&ab, i)
    });
    let rhs = pochhammer(&p.b, n) / pochhammer(&ab, n);
    Check::compare(format!("contiguity n={n}"), &lhs, &rhs)
}

/// Sign relation between the symmetric and Hankel forms, plus the entrywise
/// statement that `(1,..,1,g,..,g)` carries one to the other.
pub fn verify_symmetric_form(p: &SelbergParams, budget: &Budget) -> Result<Vec<Check>> {
    let (n, k) = (p.n, p.k);
    let sym = build_symmetric_selberg_tensor(p);
    let hankel = build_selberg_tensor(p);
    let det_sym = det_wedge(&sym, budget)?;
    let det_hankel = det_wedge(&hankel, budget)?;
    let signed = sign_pow((k * n * (n - 1) / 2) as u64) * det_sym;

    let g = pascal_sign_matrix(n);
    let mut g_list = vec![Hypermatrix::<Rational>::identity_matrix(n); k];
    g_list.extend(std::iter::repeat_n(g, k));
    let moved = gl_action(&g_list, &sym)?;

    Ok(vec![
        Check::compare("symmetric form determinant", &signed, &det_hankel),
        Check::flag("symmetric form action", moved == hankel, "(1,g)·S^Sym", "S"),
    ])
}

/// `Det S(a,b) = Det S(b,a)`.
pub fn verify_selberg_symmetry(p: &SelbergParams, budget: &Budget) -> Result<Check> {
    let lhs = det_wedge(&build_selberg_tensor(p), budget)?;
    let rhs = det_wedge(&build_selberg_tensor(&p.swapped()), budget)?;
    Ok(Check::compare("a<->b symmetry", &lhs, &rhs))
}

/// `Det A^{a,b}(y) = (-1)^n Det A^{b,a}(1-y)`, and the tensor-level form
/// `(g,..,g)·A^{b,a}(1-y) = -A^{a,b}(y)`.
pub fn verify_aomoto_reflection(p: &SelbergParams, budget: &Budget) -> Result<Vec<Check>> {
    let reflect = UniPoly::linear(int(-1), int(1));
    let direct = build_aomoto_tensor(p);
    let swapped = build_aomoto_tensor(&p.swapped()).map(|e| e.compose(&reflect));

    let lhs = det_wedge(&direct, budget)?;
    let rhs = det_wedge(&swapped, budget)?.scale(&sign_pow(p.n as u64));

    let g = pascal_sign_matrix(p.n).map(|e| UniPoly::constant(e.clone()));
    let g_list = vec![g; p.order()];
    let moved = gl_action(&g_list, &swapped)?;
    let negated = direct.scale(&int(-1));

    Ok(vec![
        Check::compare("reflection determinant", &lhs, &rhs),
        Check::flag("reflection action", moved == negated, "g·A^{b,a}(1-y)", "-A^{a,b}(y)"),
    ])
}

/// `Det((a')_{|I|})` for `a' = -k(n-1)`, computed on the Hankel fast path.
fn dyson_ending_hankel(n: usize, k: usize, budget: &Budget) -> Result<Rational> {
    let shift = int(-((k * (n - 1)) as i64));
    let moments = MomentSequence::from_fn(2 * k * (n - 1) + 1, |j| pochhammer(&shift, j as u64));
    hankel_det_fast(&moments, n, k, budget)
}

/// `(-1)^{kn(n-1)} 𝔡_{n,k} (k(n-1))!^n`.
fn dyson_ending_closed(n: usize, k: usize, budget: &Budget) -> Result<Rational> {
    let top = top_coefficient(n, k, budget)?;
    let f = from_bigint(factorial((k * (n - 1)) as u64));
    Ok(sign_pow((k * n * (n - 1)) as u64) * top * num_traits::pow(f, n))
}

/// Selberg value rebuilt from the Dyson ending: the `a`,`b` dependence is
/// `Π_{m=1}^{n} (a)_{k(m-1)} (b)_{k(m-1)} / (a+b)_{k(n+m-2)}`, and the
/// remaining constant is `Det((a')_{|I|}) / Π_m (a')_{k(m-1)}`.
pub fn selberg_via_dyson(p: &SelbergParams, budget: &Budget) -> Result<Rational> {
    let (n, k) = (p.n, p.k);
    let ab = &p.a + &p.b;
    let shift = int(-((k * (n - 1)) as i64));
    let mut factor = Rational::one();
    let mut shift_product = Rational::one();
    for m in 1..=n {
        let e = (k * (m - 1)) as u64;
        factor *= pochhammer(&p.a, e) * pochhammer(&p.b, e) / pochhammer(&ab, (k * (n + m - 2)) as u64);
        shift_product *= pochhammer(&shift, e);
    }
    Ok(factor * dyson_ending_closed(n, k, budget)? / shift_product)
}

pub fn dyson_ending_check(p: &SelbergParams, budget: &Budget) -> Result<Vec<Check>> {
    let (n, k) = (p.n, p.k);
    let hankel = dyson_ending_hankel(n, k, budget)?;
    let closed = dyson_ending_closed(n, k, budget)?;
    let sel = selberg_closed_form_normalized(p);
    let moments = MomentSequence::from_fn(2 * k * (n - 1) + 1, |j| super::beta_moment_normalized(p, j as u64));
    let fast = hankel_det_fast(&moments, n, k, budget)?;
    Ok(vec![
        Check::compare("dyson ending", &hankel, &closed),
        Check::compare("ratio identity", &fast, &sel),
        Check::compare("selberg from dyson ending", &selberg_via_dyson(p, budget)?, &sel),
    ])
}
