//! Subtensors, split signs and the `GL(V)^{×d}` action.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Hypermatrix;

/// One sorted, duplicate-free subset of `0..n` per axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetFamily {
    subsets: Vec<Vec<usize>>,
}

impl SubsetFamily {
    /// Sorts and deduplicates each subset; rejects indices `>= dim`.
    pub fn new(subsets: Vec<Vec<usize>>, dim: usize) -> Result<Self> {
        let mut out = Vec::with_capacity(subsets.len());
        for (axis, mut s) in subsets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if let Some(&bad) = s.iter().find(|&&i| i >= dim) {
                return Err(Error::ShapeMismatch(format!(
                    "axis {axis}: index {bad} out of range for dimension {dim}"
                )));
            }
            out.push(s);
        }
        Ok(SubsetFamily { subsets: out })
    }

    /// Same subset on every axis.
    pub fn uniform(subset: Vec<usize>, order: usize, dim: usize) -> Result<Self> {
        Self::new(vec![subset; order], dim)
    }

    pub fn from_masks(masks: &[u32], dim: usize) -> Self {
        SubsetFamily {
            subsets: masks
                .iter()
                .map(|&m| (0..dim).filter(|&i| m & (1 << i) != 0).collect())
                .collect(),
        }
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    /// Common cardinality, or an error listing the sizes.
    pub fn cardinality(&self) -> Result<usize> {
        let sizes: Vec<usize> = self.subsets.iter().map(Vec::len).collect();
        match sizes.first() {
            Some(&c) if sizes.iter().all(|&s| s == c) => Ok(c),
            _ => Err(Error::UnequalSubsetSizes(sizes)),
        }
    }
}

/// `M[F]`: entries `M_{F_1[j_1], ..., F_d[j_d]}`.
pub fn subtensor<S: Scalar>(m: &Hypermatrix<S>, family: &SubsetFamily) -> Result<Hypermatrix<S>> {
    if family.len() != m.order() {
        return Err(Error::ShapeMismatch(format!(
            "{} subsets for an order-{} tensor",
            family.len(),
            m.order()
        )));
    }
    if let Some(bad) = family.subsets().iter().flatten().find(|&&i| i >= m.dim()) {
        return Err(Error::ShapeMismatch(format!("index {bad} out of range")));
    }
    let size = family.cardinality()?;
    if size == 0 {
        return Err(Error::ShapeMismatch("empty subsets give a 0-dimensional tensor".into()));
    }
    let subsets = family.subsets();
    let mut src = vec![0usize; m.order()];
    Ok(Hypermatrix::from_fn(m.order(), size, |ix| {
        for (t, &j) in ix.iter().enumerate() {
            src[t] = subsets[t][j];
        }
        m.get(&src).clone()
    }))
}

/// `ε(I, J)`: product over axes of the sign of the word `I_s` (ascending)
/// followed by `J_s` (ascending).
pub fn split_sign(i: &SubsetFamily, j: &SubsetFamily) -> Result<i32> {
    if i.len() != j.len() {
        return Err(Error::ShapeMismatch("families of different order".into()));
    }
    let mut odd = false;
    for (axis, (a, b)) in i.subsets().iter().zip(j.subsets()).enumerate() {
        let dim = a.len() + b.len();
        let mut seen = vec![false; dim];
        for &x in a.iter().chain(b) {
            if x >= dim || seen[x] {
                return Err(Error::NotPartition { axis, dim });
            }
            seen[x] = true;
        }
        let inversions: usize = a.iter().map(|&x| b.iter().filter(|&&y| y < x).count()).sum();
        odd ^= inversions % 2 == 1;
    }
    Ok(if odd { -1 } else { 1 })
}

/// Sign of `η_I ∧ η_J` for mask families, assuming each pair is disjoint.
pub(crate) fn split_sign_masks(i: &[u32], j: &[u32]) -> bool {
    let mut odd = false;
    for (&a, &b) in i.iter().zip(j) {
        let mut rest = a;
        while rest != 0 {
            let x = rest.trailing_zeros();
            rest &= rest - 1;
            let below = b & ((1u32 << x) - 1);
            odd ^= below.count_ones() % 2 == 1;
        }
    }
    odd
}

/// `(g^(1) ⊗ ... ⊗ g^(d)) · M`: entry `I` is `Σ_J M_J Π_t g^(t)_{i_t j_t}`.
///
/// For `d = 2` this is `g M hᵀ`.
pub fn gl_action<S: Scalar>(g_list: &[Hypermatrix<S>], m: &Hypermatrix<S>) -> Result<Hypermatrix<S>> {
    if g_list.len() != m.order() {
        return Err(Error::ShapeMismatch(format!(
            "{} matrices for an order-{} tensor",
            g_list.len(),
            m.order()
        )));
    }
    for (t, g) in g_list.iter().enumerate() {
        if g.order() != 2 || g.dim() != m.dim() {
            return Err(Error::ShapeMismatch(format!("matrix {t} must be {n}x{n}", n = m.dim())));
        }
    }
    let mut cur = m.clone();
    for (axis, g) in g_list.iter().enumerate() {
        cur = contract_axis(&cur, axis, g);
    }
    Ok(cur)
}

fn contract_axis<S: Scalar>(m: &Hypermatrix<S>, axis: usize, g: &Hypermatrix<S>) -> Hypermatrix<S> {
    let n = m.dim();
    let stride = m.strides()[axis];
    let entries = m.entries();
    let g_entries = g.entries();
    let mut flat = Vec::with_capacity(entries.len());
    for idx in m.indices() {
        let i = idx[axis];
        let base = m.linear_index(&idx) - i * stride;
        let mut acc = S::zero();
        for j in 0..n {
            let gij = &g_entries[i * n + j];
            let e = &entries[base + j * stride];
            if !gij.is_zero() && !e.is_zero() {
                acc.add_assign_ref(&gij.mul_ref(e));
            }
        }
        flat.push(acc);
    }
    Hypermatrix::new(m.order(), n, flat).expect("same shape as input")
}
