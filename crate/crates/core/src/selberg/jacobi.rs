//! Terminating `₂F₁` series and monic Jacobi polynomials.

use num_traits::{One, Zero};

use crate::scalar::rational::{int, pochhammer};
use crate::scalar::{Rational, UniPoly};

/// `₂F₁(-n, b; c | y) = Σ_{i=0}^{n} (-n)_i (b)_i / ((c)_i i!) y^i`.
///
/// Panics if some `(c)_i` with `i <= n` vanishes.
pub fn hyp2f1_terminating(n: u64, b: &Rational, c: &Rational) -> UniPoly {
    let minus_n = int(-(n as i64));
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut i_fact = Rational::one();
    for i in 0..=n {
        if i > 0 {
            i_fact *= int(i as i64);
        }
        let denom = pochhammer(c, i) * &i_fact;
        assert!(!denom.is_zero(), "₂F₁ lower parameter hits a non-positive integer");
        coeffs.push(pochhammer(&minus_n, i) * pochhammer(b, i) / denom);
    }
    UniPoly::new(coeffs)
}

/// Monic Jacobi polynomial `P_n^{(α,β)}(x)` (weight `(1-x)^α (1+x)^β`) from
/// the three-term recurrence `P_{m+1} = (x - b_m) P_m - c_m P_{m-1}`.
pub fn monic_jacobi(n: usize, alpha: &Rational, beta: &Rational) -> UniPoly {
    let x = UniPoly::y();
    let mut prev = UniPoly::one();
    if n == 0 {
        return prev;
    }
    let two = int(2);
    let s = alpha + beta;
    let b0 = (beta - alpha) / (&s + &two);
    let mut cur = &x - &UniPoly::constant(b0);
    for m in 1..n {
        let mr = int(m as i64);
        let t = &two * &mr + &s; // 2m + α + β
        let bm = (beta * beta - alpha * alpha) / (&t * (&t + &two));
        // c_1 has the factor (1+α+β) cancelled against (2m+α+β-1)
        let cm = if m == 1 {
            int(4) * (&mr + alpha) * (&mr + beta) / (&t * &t * (&t + int(1)))
        } else {
            int(4) * &mr * (&mr + alpha) * (&mr + beta) * (&mr + &s) / (&t * &t * (&t + int(1)) * (&t - int(1)))
        };
        let next = &(&(&x - &UniPoly::constant(bm)) * &cur) - &prev.scale(&cm);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::rat;

    #[test]
    fn legendre_monic() {
        // α = β = 0: monic Legendre P2 = x^2 - 1/3, P3 = x^3 - 3/5 x
        let z = int(0);
        assert_eq!(monic_jacobi(2, &z, &z), UniPoly::new(vec![rat(-1, 3), int(0), int(1)]));
        assert_eq!(
            monic_jacobi(3, &z, &z),
            UniPoly::new(vec![int(0), rat(-3, 5), int(0), int(1)])
        );
    }

    #[test]
    fn chebyshev_first_kind() {
        // α = β = -1/2: monic T_3 / 4 = x^3 - 3/4 x; exercises the m = 1 cancellation
        let h = rat(-1, 2);
        assert_eq!(
            monic_jacobi(3, &h, &h),
            UniPoly::new(vec![int(0), rat(-3, 4), int(0), int(1)])
        );
    }

    #[test]
    fn orthogonality_against_beta_moments() {
        // On [0,1] with x -> 1 - 2y the weight becomes y^α (1-y)^β; for integer α, β
        // the moments are Beta values, so ∫ P_2(1-2y) y^j w(y) dy = 0 for j < 2.
        let alpha = int(1);
        let beta = int(2);
        let p = monic_jacobi(2, &alpha, &beta).compose(&UniPoly::linear(int(-2), int(1)));
        // ∫ y^{m+1} (1-y)^2 dy = B(m+2, 3) = 2 (m+1)! / (m+4)!
        let moment = |m: usize| {
            let f = |n: usize| (1..=n).fold(int(1), |a, i| a * int(i as i64));
            int(2) * f(m + 1) / f(m + 4)
        };
        for j in 0..2 {
            let s = p
                .coeffs()
                .iter()
                .enumerate()
                .fold(int(0), |acc, (i, c)| acc + c * moment(i + j));
            assert_eq!(s, int(0), "j = {j}");
        }
    }

    #[test]
    fn hyp2f1_small() {
        // ₂F₁(-1, b; c | y) = 1 - (b/c) y
        let f = hyp2f1_terminating(1, &int(3), &int(2));
        assert_eq!(f, UniPoly::new(vec![int(1), rat(-3, 2)]));
        assert_eq!(hyp2f1_terminating(0, &int(3), &int(2)), UniPoly::one());
    }
}
