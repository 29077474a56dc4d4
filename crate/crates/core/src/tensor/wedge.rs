//! Hyperdeterminant through the `n`-th power of `M` in the `d`-fold tensor
//! power of the Grassmann algebra on `η_0..η_{n-1}`.
//!
//! A level-`p` state maps a `d`-tuple of `p`-subsets `(S_1..S_d)` to the
//! coefficient of `η_{S_1} ⊗ ... ⊗ η_{S_d}`, each `η_S` written in increasing
//! index order. Multiplying on the right by `M` appends `η_i` on every axis;
//! moving it into sorted position passes the elements of `S_t` above `i`,
//! which fixes the sign. At level `p` the coefficient at `I` is
//! `p! · Det(M[I])`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::budget::{sat_binomial, sat_pow, Budget};
use crate::error::{Error, Result};
use crate::scalar::rational::{factorial, from_bigint};
use crate::scalar::Scalar;
use crate::tensor::Hypermatrix;

/// `d` subset masks of `n` bits each, packed into one `u128`
/// (axis `t` occupies bits `t*n .. (t+1)*n`).
pub type WedgeKey = u128;

const PAR_THRESHOLD: usize = 512;

#[derive(Clone, Debug)]
pub struct WedgeAccumulator<S> {
    order: usize,
    dim: usize,
    level: usize,
    terms: HashMap<WedgeKey, S>,
}

impl<S: Scalar> WedgeAccumulator<S> {
    /// The unit element: level 0, empty subsets on every axis.
    pub fn unit(order: usize, dim: usize) -> Result<Self> {
        check_key_width(order, dim)?;
        let mut terms = HashMap::new();
        terms.insert(0, S::one());
        Ok(WedgeAccumulator {
            order,
            dim,
            level: 0,
            terms,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pack(&self, masks: &[u32]) -> WedgeKey {
        pack(masks, self.dim)
    }

    pub fn unpack(&self, key: WedgeKey) -> Vec<u32> {
        unpack(key, self.order, self.dim)
    }

    /// Coefficient of `η_{S_1} ⊗ ... ⊗ η_{S_d}`, zero if absent.
    pub fn coefficient(&self, masks: &[u32]) -> S {
        self.terms.get(&self.pack(masks)).cloned().unwrap_or_else(S::zero)
    }

    /// Terms sorted by key.
    pub fn sorted_terms(&self) -> Vec<(WedgeKey, &S)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, s)| (*k, s)).collect();
        v.sort_unstable_by_key(|(k, _)| *k);
        v
    }

    /// Right multiplication by `M`, raising the level by one.
    pub fn mul_tensor(&self, m: &Hypermatrix<S>) -> Result<Self> {
        if m.order() != self.order || m.dim() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "wedge state is order {}/dim {}, tensor is order {}/dim {}",
                self.order,
                self.dim,
                m.order(),
                m.dim()
            )));
        }
        let strides = m.strides();
        let terms = self.sorted_terms();
        let step = |chunk: &[(WedgeKey, &S)]| {
            let mut out: HashMap<WedgeKey, S> = HashMap::new();
            for (key, coeff) in chunk {
                self.extend_term(*key, coeff, m, &strides, &mut out);
            }
            out.retain(|_, v| !v.is_zero());
            out
        };
        let next = if terms.len() < PAR_THRESHOLD {
            step(&terms)
        } else {
            let chunk = terms.len().div_ceil(rayon::current_num_threads() * 4);
            let parts: Vec<HashMap<WedgeKey, S>> = terms.par_chunks(chunk).map(step).collect();
            let mut merged: HashMap<WedgeKey, S> = HashMap::new();
            for part in parts {
                for (k, v) in part {
                    match merged.get_mut(&k) {
                        Some(slot) => slot.add_assign_ref(&v),
                        None => {
                            merged.insert(k, v);
                        }
                    }
                }
            }
            merged.retain(|_, v| !v.is_zero());
            merged
        };
        Ok(WedgeAccumulator {
            order: self.order,
            dim: self.dim,
            level: self.level + 1,
            terms: next,
        })
    }

    fn extend_term(
        &self,
        key: WedgeKey,
        coeff: &S,
        m: &Hypermatrix<S>,
        strides: &[usize],
        out: &mut HashMap<WedgeKey, S>,
    ) {
        let d = self.order;
        let n = self.dim;
        let masks = self.unpack(key);
        // per axis: (offset contribution, sign parity, key bit) for each free index
        let options: Vec<Vec<(usize, bool, WedgeKey)>> = masks
            .iter()
            .enumerate()
            .map(|(t, &mask)| {
                (0..n)
                    .filter(|&i| mask & (1 << i) == 0)
                    .map(|i| {
                        let above = (mask >> (i + 1)).count_ones();
                        (i * strides[t], above % 2 == 1, 1u128 << (t * n + i))
                    })
                    .collect()
            })
            .collect();
        if options.iter().any(|o| o.is_empty()) {
            return;
        }
        let entries = m.entries();
        let mut counters = vec![0usize; d];
        loop {
            let mut at = 0usize;
            let mut odd = false;
            let mut new_key = key;
            for (t, &c) in counters.iter().enumerate() {
                let (off, parity, bit) = options[t][c];
                at += off;
                odd ^= parity;
                new_key |= bit;
            }
            let e = &entries[at];
            if !e.is_zero() {
                let term = coeff.mul_ref(e);
                let slot = out.entry(new_key).or_insert_with(S::zero);
                if odd {
                    slot.sub_assign_ref(&term);
                } else {
                    slot.add_assign_ref(&term);
                }
            }
            let mut t = d;
            loop {
                if t == 0 {
                    return;
                }
                t -= 1;
                counters[t] += 1;
                if counters[t] < options[t].len() {
                    break;
                }
                counters[t] = 0;
            }
        }
    }
}

pub fn pack(masks: &[u32], dim: usize) -> WedgeKey {
    masks
        .iter()
        .enumerate()
        .fold(0u128, |acc, (t, &m)| acc | ((m as u128) << (t * dim)))
}

pub fn unpack(key: WedgeKey, order: usize, dim: usize) -> Vec<u32> {
    let mask = (1u128 << dim) - 1;
    (0..order).map(|t| ((key >> (t * dim)) & mask) as u32).collect()
}

fn check_key_width(order: usize, dim: usize) -> Result<()> {
    let bits = (order as u128) * (dim as u128);
    if dim > 32 || bits > 128 {
        return Err(Error::budget("wedge key width (bits)", bits, 128));
    }
    Ok(())
}

/// Estimated bytes held across all wedge levels, from
/// `Σ_p C(n,p)^d` keys.
pub fn wedge_state_bytes<S>(order: usize, dim: usize) -> u128 {
    let keys = (0..=dim)
        .map(|p| sat_pow(sat_binomial(dim, p), order))
        .fold(0u128, |a, b| a.saturating_add(b));
    let per_entry = (std::mem::size_of::<WedgeKey>() + std::mem::size_of::<S>() + 64) as u128;
    keys.saturating_mul(per_entry)
}

fn check_budget<S: Scalar>(m: &Hypermatrix<S>, budget: &Budget) -> Result<()> {
    if m.order() % 2 == 1 {
        return Err(Error::OddOrder(m.order()));
    }
    let bytes = wedge_state_bytes::<S>(m.order(), m.dim());
    if bytes > budget.max_state_bytes {
        return Err(Error::budget("wedge state bytes", bytes, budget.max_state_bytes));
    }
    check_key_width(m.order(), m.dim())
}

/// Every level `M^0, M^1, ..., M^n` of the wedge power.
pub fn wedge_levels<S: Scalar>(m: &Hypermatrix<S>, budget: &Budget) -> Result<Vec<WedgeAccumulator<S>>> {
    check_budget(m, budget)?;
    let mut levels = vec![WedgeAccumulator::unit(m.order(), m.dim())?];
    for _ in 0..m.dim() {
        let next = levels.last().unwrap().mul_tensor(m)?;
        levels.push(next);
    }
    Ok(levels)
}

pub fn det_wedge<S: Scalar>(m: &Hypermatrix<S>, budget: &Budget) -> Result<S> {
    if m.order() % 2 == 1 {
        return Err(Error::OddOrder(m.order()));
    }
    if m.dim() == 1 {
        return Ok(m.entries()[0].clone());
    }
    check_budget(m, budget)?;
    let mut state = WedgeAccumulator::unit(m.order(), m.dim())?;
    for _ in 0..m.dim() {
        state = state.mul_tensor(m)?;
    }
    let full = (1u32 << m.dim()) - 1;
    let top = state.coefficient(&vec![full; m.order()]);
    let inv = from_bigint(factorial(m.dim() as u64)).recip();
    Ok(top.scale(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};
    use crate::scalar::Rational;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn oracle_examples() {
        let id = Hypermatrix::<Rational>::identity_matrix(2);
        assert_eq!(det_wedge(&id, &b()).unwrap(), int(1));
        let ones = Hypermatrix::from_fn(4, 2, |_| int(1));
        assert_eq!(det_wedge(&ones, &b()).unwrap(), int(0));
        let beta = Hypermatrix::from_fn(4, 2, |ix| rat(1, ix.iter().sum::<usize>() as i64 + 1));
        assert_eq!(det_wedge(&beta, &b()).unwrap(), rat(1, 30));
    }

    #[test]
    fn classical_hilbert_three() {
        // det of the 3x3 Hilbert matrix
        let h = Hypermatrix::from_fn(2, 3, |ix| rat(1, (ix[0] + ix[1] + 1) as i64));
        assert_eq!(det_wedge(&h, &b()).unwrap(), rat(1, 2160));
    }

    #[test]
    fn order_six_constant_is_zero() {
        let m = Hypermatrix::from_fn(6, 2, |_| rat(3, 7));
        assert_eq!(det_wedge(&m, &b()).unwrap(), int(0));
    }

    #[test]
    fn rejects_odd_order() {
        let m = Hypermatrix::<Rational>::zeros(3, 2);
        assert!(matches!(det_wedge(&m, &b()), Err(Error::OddOrder(3))));
    }

    #[test]
    fn rejects_oversized_state() {
        let m = Hypermatrix::<Rational>::zeros(2, 12);
        let tight = Budget {
            max_state_bytes: 10_000,
            ..Budget::default()
        };
        assert!(matches!(det_wedge(&m, &tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn level_sizes_match_binomials() {
        let m = Hypermatrix::from_fn(4, 3, |ix| {
            int(1 + (ix[0] * 7 + ix[1] * 3 + ix[2] * 5 + ix[3]) as i64 % 13)
        });
        let levels = wedge_levels(&m, &b()).unwrap();
        assert!(levels[1].len() <= 81);
        assert_eq!(levels[0].len(), 1);
        assert!(levels[3].len() <= 1);
    }

    #[test]
    fn key_packing_roundtrip() {
        let masks = vec![0b101, 0b011, 0b110, 0b000];
        assert_eq!(unpack(pack(&masks, 3), 4, 3), masks);
    }
}
