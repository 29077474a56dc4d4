//! Classical determinants, used to cross-check the order-2 case and the
//! `det(g)` factors of the group action.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::tensor::Hypermatrix;

/// Determinant of an order-2 rational hypermatrix: each row is cleared of
/// denominators, then Bareiss fraction-free elimination runs over the integers.
pub fn det_classical(m: &Hypermatrix<Rational>) -> Result<Rational> {
    if m.order() != 2 {
        return Err(Error::ShapeMismatch(format!(
            "classical determinant needs order 2, got {}",
            m.order()
        )));
    }
    let n = m.dim();
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = &m.entries()[i * n..(i + 1) * n];
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    Ok(Rational::new(sign * det, scale))
}
