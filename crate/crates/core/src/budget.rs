/// Work limits for the factorial-scale and exponential-scale algorithms.
///
/// Every enumeration checks its size against these before doing any work so
/// oversized inputs fail immediately with [`crate::Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Signed products the permutation enumerations may form.
    pub max_products: u128,
    /// Estimated bytes the wedge-power state may occupy.
    pub max_state_bytes: u128,
    /// Monomials a sparse multivariate expansion may hold.
    pub max_terms: u128,
}

pub const DEFAULT_MAX_PRODUCTS: u128 = 100_000_000;
pub const DEFAULT_MAX_STATE_BYTES: u128 = 2 << 30;
pub const DEFAULT_MAX_TERMS: u128 = 20_000_000;

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_products: DEFAULT_MAX_PRODUCTS,
            max_state_bytes: DEFAULT_MAX_STATE_BYTES,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn sat_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

pub(crate) fn sat_factorial(n: usize) -> u128 {
    (2..=n as u128).fold(1u128, |acc, i| acc.saturating_mul(i))
}

pub(crate) fn sat_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
