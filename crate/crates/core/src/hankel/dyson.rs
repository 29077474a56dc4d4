//! Constant term of `Π_{i≠j} (1 - x_i/x_j)^{a_i}`.
//!
//! Denominators are cleared by multiplying through by `Π_j x_j^{A - a_j}`
//! (`A = Σ a_i`), which turns the product into `Π_{i≠j} (x_j - x_i)^{a_i}`;
//! the constant term is then the coefficient of that central monomial.

use num_traits::Zero;

use super::multipoly::{homogeneous_bound, product_of_differences};
use super::table::{dyson_sign_exponent, top_coefficient};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::rational::{factorial, from_bigint, multinomial, sign_pow};
use crate::scalar::Rational;

/// Direct constant-term extraction for arbitrary exponents `a_i`.
pub fn dyson_constant_term_direct(a: &[u64], budget: &Budget) -> Result<Rational> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidParams("need at least one variable".into()));
    }
    let total: u64 = a.iter().sum();
    let degree = (total as usize) * (n - 1);
    let bound = homogeneous_bound(n, degree);
    if bound > budget.max_terms {
        return Err(Error::budget("polynomial terms", bound, budget.max_terms));
    }
    let factors = (0..n).flat_map(|i| {
        (0..n)
            .filter(move |&j| j != i)
            .flat_map(move |j| std::iter::repeat_n((j, i), a[i] as usize))
    });
    let poly = product_of_differences(n, factors, budget)?;
    let centre: Vec<u32> = a.iter().map(|&ai| (total - ai) as u32).collect();
    Ok(poly.coeff(&centre))
}

/// `(a_1 + ... + a_n)! / Π a_i!`.
pub fn dyson_closed_form(a: &[u64]) -> Rational {
    from_bigint(multinomial(a))
}

/// Everything computed by [`dyson_constant_term`], for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DysonCheck {
    pub n: usize,
    pub k: usize,
    pub direct: Rational,
    pub closed_form: Rational,
    pub top_coefficient: Rational,
    /// `(-1)^{k n(n-1)/2} n! 𝔡_{n,k}`
    pub from_top_coefficient: Rational,
}

impl DysonCheck {
    pub fn consistent(&self) -> bool {
        self.direct == self.closed_form && self.direct == self.from_top_coefficient
    }
}

pub fn dyson_check(n: usize, k: usize, budget: &Budget) -> Result<DysonCheck> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParams(format!("need n, k >= 1 (got n={n}, k={k})")));
    }
    let a = vec![k as u64; n];
    let direct = dyson_constant_term_direct(&a, budget)?;
    let closed_form = dyson_closed_form(&a);
    let top = top_coefficient(n, k, budget)?;
    let from_top = sign_pow(dyson_sign_exponent(n, k)) * from_bigint(factorial(n as u64)) * &top;
    Ok(DysonCheck {
        n,
        k,
        direct,
        closed_form,
        top_coefficient: top,
        from_top_coefficient: from_top,
    })
}

/// `𝒞_{n,k}`, computed by expansion and by the multinomial closed form, and
/// tied to the top Hankel coefficient; any disagreement is an error.
pub fn dyson_constant_term(n: usize, k: usize, budget: &Budget) -> Result<Rational> {
    let check = dyson_check(n, k, budget)?;
    if !check.consistent() {
        return Err(Error::Inconsistent(format!(
            "Dyson n={n} k={k}: direct {}, closed form {}, from top coefficient {}",
            check.direct, check.closed_form, check.from_top_coefficient
        )));
    }
    debug_assert!(!check.direct.is_zero());
    Ok(check.direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;

    #[test]
    fn equal_parameters() {
        let b = Budget::default();
        assert_eq!(dyson_constant_term(2, 1, &b).unwrap(), int(2));
        assert_eq!(dyson_constant_term(3, 1, &b).unwrap(), int(6));
        assert_eq!(dyson_constant_term(2, 2, &b).unwrap(), int(6));
        assert_eq!(dyson_constant_term(3, 2, &b).unwrap(), int(90));
        assert_eq!(dyson_constant_term(1, 3, &b).unwrap(), int(1));
        assert_eq!(dyson_constant_term(4, 1, &b).unwrap(), int(24));
    }

    #[test]
    fn unequal_parameters() {
        let b = Budget::default();
        for a in [vec![1, 2], vec![3, 1], vec![1, 2, 3], vec![2, 0, 1], vec![2, 2, 1]] {
            assert_eq!(
                dyson_constant_term_direct(&a, &b).unwrap(),
                dyson_closed_form(&a),
                "a = {a:?}"
            );
        }
    }

    #[test]
    fn sign_in_the_relation_depends_on_pairs() {
        // (-1)^k and (-1)^{k n(n-1)/2} agree for n = 2, 3 and differ for n = 1, 4 with odd k
        let b = Budget::default();
        for (n, k) in [(1usize, 1usize), (4, 1)] {
            let c = dyson_check(n, k, &b).unwrap();
            assert!(c.consistent());
            let literal = sign_pow(k as u64) * from_bigint(factorial(n as u64)) * &c.top_coefficient;
            assert_ne!(literal, c.direct);
        }
    }
}
