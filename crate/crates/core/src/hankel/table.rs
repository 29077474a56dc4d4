use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::multipoly::vandermonde_power;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::rational::{factorial, from_bigint, multinomial, sign_pow};
use crate::scalar::Rational;

/// The normalization attached to every table: coefficients already carry the
/// `1/n!`, so the Hankel hyperdeterminant is exactly `Σ_λ c_λ Π_i X_{λ_i}`.
pub const NORMALIZATION: &str = "divided by n!: Det(X_{|I|}) = sum over lambda of c_lambda * prod_i X_{lambda_i}";

/// `c_λ^{n,k}` keyed by weakly increasing `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    n: usize,
    k: usize,
    coeffs: BTreeMap<Vec<u32>, Rational>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub lambda: Vec<u32>,
    pub coeff: String,
}

impl CoefficientTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn normalization(&self) -> &'static str {
        NORMALIZATION
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, lambda: &[u32]) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.coeffs.iter()
    }

    /// `(i-1)k <= λ_i <= k(n+i-2)` for 1-based `i`, plus `|λ| = kn(n-1)`.
    pub fn support_is_valid(&self) -> bool {
        let (n, k) = (self.n as u32, self.k as u32);
        self.coeffs.keys().all(|lam| {
            lam.iter().sum::<u32>() == k * n * (n - 1)
                && lam.iter().enumerate().all(|(i0, &l)| {
                    let i = i0 as u32 + 1;
                    (i - 1) * k <= l && l + 2 * k <= k * (n + i)
                })
        })
    }

    pub fn rows(&self) -> Vec<TableRow> {
        self.coeffs
            .iter()
            .map(|(lambda, c)| TableRow {
                lambda: lambda.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.rows()).expect("rows serialize")
    }

    pub fn from_rows(n: usize, k: usize, rows: &[TableRow]) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for row in rows {
            if row.lambda.len() != n {
                return Err(Error::Parse(format!("lambda {:?} has wrong length", row.lambda)));
            }
            coeffs.insert(row.lambda.clone(), crate::scalar::rational::parse_rational(&row.coeff)?);
        }
        Ok(CoefficientTable { n, k, coeffs })
    }
}

/// Aggregates `Δ^{2k}` by sorted exponent tuple and divides by `n!`.
pub fn c_lambda_table(n: usize, k: usize, budget: &Budget) -> Result<CoefficientTable> {
    let poly = vandermonde_power(n, k, budget)?;
    let inv = from_bigint(factorial(n as u64)).recip();
    let mut coeffs: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (e, c) in poly.terms() {
        let mut lam = e.clone();
        lam.sort_unstable();
        *coeffs.entry(lam).or_insert_with(Rational::zero) += c;
    }
    coeffs.retain(|_, c| !c.is_zero());
    for c in coeffs.values_mut() {
        *c *= &inv;
    }
    Ok(CoefficientTable { n, k, coeffs })
}

type TableCache = Mutex<HashMap<(usize, usize), Arc<CoefficientTable>>>;

/// Process-wide memo of [`c_lambda_table`]; tables are immutable once built.
pub fn cached_table(n: usize, k: usize, budget: &Budget) -> Result<Arc<CoefficientTable>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(n, k)) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(c_lambda_table(n, k, budget)?);
    cache.lock().unwrap().insert((n, k), Arc::clone(&table));
    Ok(table)
}

/// `𝔡_{n,k}`: the coefficient of `X_{k(n-1)}^n`, read off the expansion.
pub fn top_coefficient(n: usize, k: usize, budget: &Budget) -> Result<Rational> {
    let table = cached_table(n, k, budget)?;
    Ok(table.get(&vec![(k * (n - 1)) as u32; n]))
}

/// Sign `(-1)^{k n(n-1)/2}` relating `Π_{i≠j}(1 - x_i/x_j)^k` to
/// `Δ(x)^{2k} Π x_i^{-k(n-1)}`.
pub fn dyson_sign_exponent(n: usize, k: usize) -> u64 {
    (k * n * (n.saturating_sub(1)) / 2) as u64
}

/// `𝔡_{n,k} = (-1)^{k n(n-1)/2} (kn)! / (n! (k!)^n)`.
pub fn top_coefficient_closed_form(n: usize, k: usize) -> Rational {
    let parts = vec![k as u64; n];
    sign_pow(dyson_sign_exponent(n, k)) * from_bigint(multinomial(&parts)) / from_bigint(factorial(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::int;

    #[test]
    fn small_tables() {
        let b = Budget::default();
        let t = c_lambda_table(2, 1, &b).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(&[0, 2]), int(1));
        assert_eq!(t.get(&[1, 1]), int(-1));

        let t = c_lambda_table(2, 2, &b).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.get(&[0, 4]), int(1));
        assert_eq!(t.get(&[1, 3]), int(-4));
        assert_eq!(t.get(&[2, 2]), int(3));
    }

    #[test]
    fn support_bounds() {
        let b = Budget::default();
        for n in 1..=4 {
            for k in 1..=2 {
                assert!(c_lambda_table(n, k, &b).unwrap().support_is_valid(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn top_coefficients() {
        let b = Budget::default();
        assert_eq!(top_coefficient(2, 1, &b).unwrap(), int(-1));
        assert_eq!(top_coefficient(2, 2, &b).unwrap(), int(3));
        assert_eq!(top_coefficient(3, 1, &b).unwrap(), int(-1));
        assert_eq!(top_coefficient(1, 1, &b).unwrap(), int(1));
        // 4x4 anti-triangular Hankel: reversal of 4 elements is even
        assert_eq!(top_coefficient(4, 1, &b).unwrap(), int(1));
        for n in 1..=4 {
            for k in 1..=3 {
                if n == 4 && k == 3 {
                    continue;
                }
                assert_eq!(
                    top_coefficient(n, k, &b).unwrap(),
                    top_coefficient_closed_form(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn json_rows_roundtrip() {
        let t = c_lambda_table(3, 1, &Budget::default()).unwrap();
        let rows: Vec<TableRow> = serde_json::from_value(t.to_json()).unwrap();
        assert_eq!(CoefficientTable::from_rows(3, 1, &rows).unwrap(), t);
    }
}
