//! Hyperdeterminant as an explicit signed sum over tuples of permutations.
//!
//! For even order the summand is invariant under composing every permutation
//! with a common one on the right, so the first permutation is pinned to the
//! identity and the `1/n!` prefactor disappears. Odd orders have no such
//! symmetry: they enumerate all `d` permutations and divide by `n!`, which
//! makes the vanishing of odd-order hyperdeterminants an actual computation.

use rayon::prelude::*;

use crate::budget::{sat_factorial, sat_pow, Budget};
use crate::error::{Error, Result};
use crate::scalar::rational::{factorial, from_bigint};
use crate::scalar::Scalar;
use crate::tensor::Hypermatrix;

/// All permutations of `0..n` in lexicographic order, each with its sign.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push((p.clone(), permutation_is_odd(&p)));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Parity of a word of distinct values, by inversion count.
pub fn permutation_is_odd(word: &[usize]) -> bool {
    let mut inversions = 0usize;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

pub fn det_permutation_oracle<S: Scalar>(m: &Hypermatrix<S>, budget: &Budget) -> Result<S> {
    let d = m.order();
    let n = m.dim();
    let even = d.is_multiple_of(2);
    let free_axes = if even { d - 1 } else { d };

    let required = sat_pow(sat_factorial(n), free_axes);
    if required > budget.max_products {
        return Err(Error::budget("permutation products", required, budget.max_products));
    }

    let perms = permutations_with_sign(n);
    let strides = m.strides();
    // offsets[t][p][i] = perms[p][i] * stride of the t-th free axis
    let first_free = d - free_axes;
    let offsets: Vec<Vec<Vec<usize>>> = (first_free..d)
        .map(|axis| {
            perms
                .iter()
                .map(|(p, _)| p.iter().map(|&v| v * strides[axis]).collect())
                .collect()
        })
        .collect();
    // pinned identity on axis 0 for even order
    let base: Vec<usize> = (0..n).map(|i| if even { i * strides[0] } else { 0 }).collect();

    let entries = m.entries();
    let partials: Vec<S> = (0..perms.len())
        .into_par_iter()
        .map(|head| {
            let mut acc = S::zero();
            let mut counters = vec![0usize; free_axes];
            counters[0] = head;
            let mut row = vec![0usize; n];
            loop {
                let mut odd = false;
                row.copy_from_slice(&base);
                for (t, &c) in counters.iter().enumerate() {
                    odd ^= perms[c].1;
                    for (r, off) in row.iter_mut().zip(&offsets[t][c]) {
                        *r += off;
                    }
                }
                let mut prod = S::one();
                for &at in &row {
                    let e = &entries[at];
                    if e.is_zero() {
                        prod = S::zero();
                        break;
                    }
                    prod = prod.mul_ref(e);
                }
                if !prod.is_zero() {
                    if odd {
                        acc.sub_assign_ref(&prod);
                    } else {
                        acc.add_assign_ref(&prod);
                    }
                }
                // odometer over the free axes after the head
                let mut t = free_axes;
                loop {
                    t -= 1;
                    if t == 0 {
                        return acc;
                    }
                    counters[t] += 1;
                    if counters[t] < perms.len() {
                        break;
                    }
                    counters[t] = 0;
                }
            }
        })
        .collect();

    let total = partials.iter().fold(S::zero(), |acc, x| acc.add_ref(x));
    if even {
        Ok(total)
    } else {
        let inv = from_bigint(factorial(n as u64)).recip();
        Ok(total.scale(&inv))
    }
}
