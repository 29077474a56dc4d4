//! Expansion of the hyperdeterminant along the first index.
//!
//! `Det(M) = Σ sign(I) · M_{0,i_2..i_d} · Det(M[Ī])` where `Ī` removes `0` from
//! the first axis and `i_t` from axis `t`. With 0-based positions inside the
//! current subtensor, `sign(I) = (-1)^{i_2 + ... + i_d}`; for even `d` this has
//! the same parity as the 1-based `(-1)^{i_1 + ... + i_d}` with `i_1 = 1`.

use crate::budget::{sat_factorial, sat_pow, Budget};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Hypermatrix;

pub fn expand_first_index<S: Scalar>(m: &Hypermatrix<S>, budget: &Budget) -> Result<S> {
    let d = m.order();
    if d % 2 == 1 {
        return Err(Error::OddOrder(d));
    }
    let n = m.dim();
    let required = sat_pow(sat_factorial(n), d - 1);
    if required > budget.max_products {
        return Err(Error::budget(
            "first-index expansion terms",
            required,
            budget.max_products,
        ));
    }
    let mut remaining: Vec<Vec<usize>> = vec![(0..n).collect(); d];
    let strides = m.strides();
    Ok(expand_rec(m, &strides, &mut remaining))
}

fn expand_rec<S: Scalar>(m: &Hypermatrix<S>, strides: &[usize], remaining: &mut [Vec<usize>]) -> S {
    let d = remaining.len();
    let size = remaining[0].len();
    let first = remaining[0][0];
    if size == 1 {
        let at: usize = remaining.iter().zip(strides).map(|(axis, s)| axis[0] * s).sum();
        return m.entries()[at].clone();
    }

    let head = remaining[0].remove(0);
    debug_assert_eq!(head, first);
    let mut acc = S::zero();
    // positions chosen on axes 1..d
    let mut pos = vec![0usize; d - 1];
    loop {
        let mut at = first * strides[0];
        let mut parity = 0usize;
        for (t, &p) in pos.iter().enumerate() {
            at += remaining[t + 1][p] * strides[t + 1];
            parity += p;
        }
        let entry = &m.entries()[at];
        if !entry.is_zero() {
            let removed: Vec<usize> = pos
                .iter()
                .enumerate()
                .map(|(t, &p)| remaining[t + 1].remove(p))
                .collect();
            let minor = expand_rec(m, strides, remaining);
            for (t, (&p, v)) in pos.iter().zip(removed).enumerate() {
                remaining[t + 1].insert(p, v);
            }
            let term = entry.mul_ref(&minor);
            if parity % 2 == 1 {
                acc.sub_assign_ref(&term);
            } else {
                acc.add_assign_ref(&term);
            }
        }
        let mut t = d - 1;
        loop {
            if t == 0 {
                remaining[0].insert(0, head);
                return acc;
            }
            t -= 1;
            pos[t] += 1;
            if pos[t] < size {
                break;
            }
            pos[t] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};
    use crate::scalar::Rational;
    use crate::tensor::det_permutation_oracle;

    #[test]
    fn two_by_two_laplace() {
        let m = Hypermatrix::matrix(vec![vec![int(2), int(3)], vec![int(5), int(7)]]).unwrap();
        assert_eq!(expand_first_index(&m, &Budget::default()).unwrap(), int(-1));
    }

    #[test]
    fn dim_one() {
        let m = Hypermatrix::new(4, 1, vec![rat(5, 3)]).unwrap();
        assert_eq!(expand_first_index(&m, &Budget::default()).unwrap(), rat(5, 3));
    }

    #[test]
    fn matches_oracle_order_four() {
        let m = Hypermatrix::from_fn(4, 3, |ix| {
            let v = (ix[0] * 31 + ix[1] * 17 + ix[2] * 7 + ix[3] * 3) % 19;
            rat(v as i64 - 9, 1 + (ix[1] + ix[3]) as i64)
        });
        let b = Budget::default();
        assert_eq!(
            expand_first_index(&m, &b).unwrap(),
            det_permutation_oracle(&m, &b).unwrap()
        );
    }

    #[test]
    fn rejects_odd() {
        let m = Hypermatrix::<Rational>::zeros(3, 2);
        assert!(matches!(
            expand_first_index(&m, &Budget::default()),
            Err(Error::OddOrder(3))
        ));
    }
}
