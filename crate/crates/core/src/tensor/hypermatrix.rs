use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense order-`d`, dimension-`n` array with 0-based indices, stored row-major
/// (the first index varies slowest).
#[derive(Clone, Debug, PartialEq)]
pub struct Hypermatrix<S> {
    order: usize,
    dim: usize,
    entries: Vec<S>,
}

/// Row-major odometer over `{0..dim}^order`.
#[derive(Clone, Debug)]
pub struct IndexIter {
    dim: usize,
    current: Option<Vec<usize>>,
}

impl IndexIter {
    pub fn new(order: usize, dim: usize) -> Self {
        let current = if dim == 0 { None } else { Some(vec![0; order]) };
        IndexIter { dim, current }
    }
}

impl Iterator for IndexIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut advanced = false;
        for slot in next.iter_mut().rev() {
            *slot += 1;
            if *slot < self.dim {
                advanced = true;
                break;
            }
            *slot = 0;
        }
        if advanced {
            self.current = Some(next);
        }
        Some(cur)
    }
}

impl<S: Scalar> Hypermatrix<S> {
    pub fn new(order: usize, dim: usize, entries: Vec<S>) -> Result<Self> {
        if order == 0 || dim == 0 {
            return Err(Error::ShapeMismatch(format!(
                "order and dimension must be positive (got order {order}, dim {dim})"
            )));
        }
        let expected = dim
            .checked_pow(order as u32)
            .ok_or_else(|| Error::ShapeMismatch(format!("{dim}^{order} entries overflow")))?;
        if entries.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "order {order}, dim {dim} needs {expected} entries, got {}",
                entries.len()
            )));
        }
        Ok(Hypermatrix { order, dim, entries })
    }

    /// Panics if `order` or `dim` is zero.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        assert!(order > 0 && dim > 0, "order and dimension must be positive");
        let entries = IndexIter::new(order, dim).map(|idx| f(&idx)).collect();
        Hypermatrix { order, dim, entries }
    }

    pub fn zeros(order: usize, dim: usize) -> Self {
        Self::from_fn(order, dim, |_| S::zero())
    }

    /// Order-2 hypermatrix from rows.
    pub fn matrix(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("matrix rows must all have length n".into()));
        }
        Self::new(2, n, rows.into_iter().flatten().collect())
    }

    pub fn identity_matrix(n: usize) -> Self {
        Self::from_fn(2, n, |ix| if ix[0] == ix[1] { S::one() } else { S::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    /// Stride of each axis in the flat entry array.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.order];
        for t in (0..self.order.saturating_sub(1)).rev() {
            strides[t] = strides[t + 1] * self.dim;
        }
        strides
    }

    pub fn linear_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.entries[self.linear_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: S) {
        let at = self.linear_index(idx);
        self.entries[at] = value;
    }

    pub fn indices(&self) -> IndexIter {
        IndexIter::new(self.order, self.dim)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Hypermatrix<T> {
        Hypermatrix {
            order: self.order,
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.order != other.order || self.dim != other.dim {
            return Err(Error::ShapeMismatch(format!(
                "order {}/dim {} vs order {}/dim {}",
                self.order, self.dim, other.order, other.dim
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Hypermatrix {
            order: self.order,
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &crate::scalar::Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Copy with the two slices `i` and `j` of `axis` exchanged.
    pub fn swap_slices(&self, axis: usize, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        for idx in self.indices() {
            if idx[axis] == i || idx[axis] == j {
                let mut src = idx.clone();
                src[axis] = if idx[axis] == i { j } else { i };
                out.set(&idx, self.get(&src).clone());
            }
        }
        out
    }
}
