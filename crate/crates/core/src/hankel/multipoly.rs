use std::collections::BTreeMap;

use num_traits::Zero;

use crate::budget::{sat_binomial, Budget};
use crate::error::{Error, Result};
use crate::scalar::Rational;

pub type Exponents = Vec<u32>;

/// Polynomial in `x_1..x_n` as a map from exponent tuples to nonzero
/// rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl SparseMultiPoly {
    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], Rational::from_integer(1.into()));
        SparseMultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies in place by `x_plus - x_minus`.
    pub fn mul_difference(&mut self, plus: usize, minus: usize) {
        let mut next: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut up = e.clone();
            up[plus] += 1;
            *next.entry(up).or_insert_with(Rational::zero) += c;
            let mut down = e.clone();
            down[minus] += 1;
            *next.entry(down).or_insert_with(Rational::zero) -= c;
        }
        next.retain(|_, c| !c.is_zero());
        self.terms = next;
    }

    /// Sum of the coefficients times the values of the monomials at `x`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let mono = e
                .iter()
                .zip(x)
                .fold(c.clone(), |m, (&p, xi)| m * num_traits::pow(xi.clone(), p as usize));
            acc + mono
        })
    }
}

/// Product of the linear factors `(x_plus - x_minus)` in the given order,
/// checking the term count against the budget after each factor.
pub fn product_of_differences(
    nvars: usize,
    factors: impl IntoIterator<Item = (usize, usize)>,
    budget: &Budget,
) -> Result<SparseMultiPoly> {
    let mut p = SparseMultiPoly::one(nvars);
    for (plus, minus) in factors {
        p.mul_difference(plus, minus);
        if p.len() as u128 > budget.max_terms {
            return Err(Error::budget("polynomial terms", p.len() as u128, budget.max_terms));
        }
    }
    Ok(p)
}

/// Upper bound on the monomials of a homogeneous polynomial of `degree`
/// in `nvars` variables.
pub(crate) fn homogeneous_bound(nvars: usize, degree: usize) -> u128 {
    sat_binomial(degree + nvars - 1, nvars - 1)
}

/// `Π_{i<j} (x_j - x_i)^{2k}`, factors multiplied one at a time in
/// lexicographic `(i, j)` order.
pub fn vandermonde_power(n: usize, k: usize, budget: &Budget) -> Result<SparseMultiPoly> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParams(format!("need n, k >= 1 (got n={n}, k={k})")));
    }
    let degree = k * n * (n - 1);
    let bound = homogeneous_bound(n, degree);
    if bound > budget.max_terms {
        return Err(Error::budget("polynomial terms", bound, budget.max_terms));
    }
    let factors = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (j, i)))
        .flat_map(|pair| std::iter::repeat_n(pair, 2 * k));
    product_of_differences(n, factors, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;

    #[test]
    fn two_variables_square() {
        let p = vandermonde_power(2, 1, &Budget::default()).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[0, 2]), int(1));
        assert_eq!(p.coeff(&[1, 1]), int(-2));
        assert_eq!(p.coeff(&[2, 0]), int(1));
    }

    #[test]
    fn two_variables_fourth_power() {
        let p = vandermonde_power(2, 2, &Budget::default()).unwrap();
        let expected = [1, -4, 6, -4, 1];
        for (j, c) in expected.iter().enumerate() {
            assert_eq!(p.coeff(&[j as u32, 4 - j as u32]), int(*c));
        }
    }

    #[test]
    fn three_variables_square() {
        let p = vandermonde_power(3, 1, &Budget::default()).unwrap();
        let ones = vec![int(1); 3];
        assert_eq!(p.eval(&ones), int(0));
        for (e, _) in p.terms() {
            assert_eq!(e.iter().sum::<u32>(), 6);
            assert!(e.iter().all(|&x| x <= 4));
        }
        // Δ(0,1,2)^2 = (1·2·1)^2
        assert_eq!(p.eval(&[int(0), int(1), int(2)]), int(4));
    }

    #[test]
    fn budget_rejects() {
        let tight = Budget {
            max_terms: 10,
            ..Budget::default()
        };
        assert!(matches!(
            vandermonde_power(4, 2, &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
