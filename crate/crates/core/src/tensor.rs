//! Dense multilinear tensors.
//!
//! A tensor of arity `r` with profile `(d₁,…,d_r)` encodes a multilinear map
//! `V₁ × … × V_{r-1} → V_r`: the last index is always the output coordinate.
//! Storage is row-major, so the output slice for a basis tuple is contiguous.

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

/// Argument of [`Tensor::apply_args`]: a basis index or a coordinate vector.
#[derive(Debug, Clone, Copy)]
pub enum Arg<'a, T> {
    E(usize),
    V(&'a [T]),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<T = Scalar> {
    dims: Vec<usize>,
    data: Vec<T>,
}

impl<T: std::fmt::Debug> std::fmt::Debug for Tensor<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Tensor")
            .field("dims", &self.dims)
            .field("data", &self.data)
            .finish()
    }
}

impl<T: Ring> Tensor<T> {
    pub fn new(dims: Vec<usize>, data: Vec<T>) -> Result<Self> {
        let expected: usize = dims.iter().product();
        if data.len() != expected {
            return Err(Error::shape(
                format!("{expected} entries for profile {dims:?}"),
                format!("{} entries", data.len()),
            ));
        }
        Ok(Tensor { dims, data })
    }

    pub fn zeros(dims: Vec<usize>) -> Self {
        let len = dims.iter().product();
        Tensor {
            dims,
            data: vec![T::zero(); len],
        }
    }

    /// Builds a tensor entry by entry; `f` receives each multi-index in
    /// row-major order.
    pub fn from_fn(dims: Vec<usize>, mut f: impl FnMut(&[usize]) -> T) -> Self {
        let len: usize = dims.iter().product();
        let mut data = Vec::with_capacity(len);
        let mut idx = vec![0usize; dims.len()];
        for _ in 0..len {
            data.push(f(&idx));
            for p in (0..dims.len()).rev() {
                idx[p] += 1;
                if idx[p] < dims[p] {
                    break;
                }
                idx[p] = 0;
            }
        }
        Tensor { dims, data }
    }

    /// Accumulates `(index, value)` pairs into a zero tensor.
    pub fn from_entries<I>(dims: Vec<usize>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, T)>,
    {
        let mut t = Self::zeros(dims);
        for (idx, val) in entries {
            let off = t.checked_offset(&idx)?;
            t.data[off] = t.data[off].clone() + val;
        }
        Ok(t)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// Output dimension (size of the last index).
    pub fn out_dim(&self) -> usize {
        *self.dims.last().unwrap_or(&1)
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| acc * d + i)
    }

    fn checked_offset(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "index of length {} for tensor of arity {}",
                idx.len(),
                self.dims.len()
            )));
        }
        if let Some((p, (&i, &d))) = idx.iter().zip(&self.dims).enumerate().find(|(_, (&i, &d))| i >= d) {
            return Err(Error::DimensionMismatch(format!(
                "index {i} out of range {d} at position {p}"
            )));
        }
        Ok(self.offset(idx))
    }

    /// Panics on an out-of-range index.
    pub fn get(&self, idx: &[usize]) -> &T {
        let off = self.checked_offset(idx).expect("tensor index in range");
        &self.data[off]
    }

    pub fn try_get(&self, idx: &[usize]) -> Result<&T> {
        self.checked_offset(idx).map(|off| &self.data[off])
    }

    /// Output slice for a full input basis tuple (length `arity - 1`).
    pub fn slice(&self, inputs: &[usize]) -> &[T] {
        debug_assert_eq!(inputs.len() + 1, self.dims.len());
        let n = self.out_dim();
        let base = self.offset(inputs) * n;
        &self.data[base..base + n]
    }

    /// Coefficient vector of the multilinear map on the given basis elements.
    pub fn eval(&self, inputs: &[usize]) -> Result<Vec<T>> {
        if inputs.len() + 1 != self.dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} basis indices for a map of {} arguments",
                inputs.len(),
                self.dims.len().saturating_sub(1)
            )));
        }
        for (p, (&i, &d)) in inputs.iter().zip(&self.dims).enumerate() {
            if i >= d {
                return Err(Error::DimensionMismatch(format!(
                    "index {i} out of range {d} at position {p}"
                )));
            }
        }
        Ok(self.slice(inputs).to_vec())
    }

    /// Applies the multilinear map to coordinate vectors, skipping zero
    /// coordinates.
    pub fn apply(&self, args: &[&[T]]) -> Vec<T> {
        assert_eq!(args.len() + 1, self.dims.len(), "argument count");
        for (a, &d) in args.iter().zip(&self.dims) {
            assert_eq!(a.len(), d, "argument dimension");
        }
        let nonzero: Vec<Vec<(usize, &T)>> = args
            .iter()
            .map(|a| a.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        let mut acc = vec![T::zero(); self.out_dim()];
        self.accumulate(&nonzero, 0, 0, None, &mut acc);
        acc
    }

    fn accumulate(&self, nonzero: &[Vec<(usize, &T)>], pos: usize, base: usize, coeff: Option<T>, acc: &mut [T]) {
        if pos == nonzero.len() {
            let n = self.out_dim();
            let slice = &self.data[base * n..base * n + n];
            match coeff {
                Some(c) => crate::scalar::vec_axpy(acc, &c, slice),
                None => crate::scalar::vec_axpy(acc, &T::one(), slice),
            }
            return;
        }
        for &(i, v) in &nonzero[pos] {
            let c = match &coeff {
                Some(c) => c.clone() * v.clone(),
                None => v.clone(),
            };
            self.accumulate(nonzero, pos + 1, base * self.dims[pos] + i, Some(c), acc);
        }
    }

    /// Applies the map to a mix of basis indices and coordinate vectors.
    pub fn apply_args(&self, args: &[Arg<'_, T>]) -> Vec<T> {
        assert_eq!(args.len() + 1, self.dims.len(), "argument count");
        let nonzero: Vec<Vec<(usize, Option<&T>)>> = args
            .iter()
            .map(|a| match a {
                Arg::E(i) => vec![(*i, None)],
                Arg::V(v) => v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, Some(c)))
                    .collect(),
            })
            .collect();
        let mut acc = vec![T::zero(); self.out_dim()];
        self.accumulate_mixed(&nonzero, 0, 0, None, &mut acc);
        acc
    }

    fn accumulate_mixed(
        &self,
        nonzero: &[Vec<(usize, Option<&T>)>],
        pos: usize,
        base: usize,
        coeff: Option<T>,
        acc: &mut [T],
    ) {
        if pos == nonzero.len() {
            let n = self.out_dim();
            let slice = &self.data[base * n..base * n + n];
            match coeff {
                Some(c) => crate::scalar::vec_axpy(acc, &c, slice),
                None => crate::scalar::vec_axpy(acc, &T::one(), slice),
            }
            return;
        }
        for &(i, v) in &nonzero[pos] {
            let c = match (&coeff, v) {
                (Some(c), Some(v)) => Some(c.clone() * v.clone()),
                (Some(c), None) => Some(c.clone()),
                (None, Some(v)) => Some(v.clone()),
                (None, None) => None,
            };
            self.accumulate_mixed(nonzero, pos + 1, base * self.dims[pos] + i, c, acc);
        }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Tensor<U> {
        Tensor {
            dims: self.dims.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Entrywise `self + other`; profiles must agree.
    pub fn add(&self, other: &Tensor<T>) -> Result<Tensor<T>> {
        self.require_dims(other.dims())?;
        Ok(Tensor {
            dims: self.dims.clone(),
            data: crate::scalar::vec_add(&self.data, &other.data),
        })
    }

    pub fn scale(&self, c: &T) -> Tensor<T> {
        self.map(|v| c.clone() * v.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Reorders axes: axis `p` of the result is axis `perm[p]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor<T> {
        assert_eq!(perm.len(), self.dims.len());
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut src = vec![0; perm.len()];
        Tensor::from_fn(dims, |idx| {
            for (p, &q) in perm.iter().enumerate() {
                src[q] = idx[p];
            }
            self.get(&src).clone()
        })
    }

    pub fn require_dims(&self, dims: &[usize]) -> Result<()> {
        if self.dims != dims {
            return Err(Error::shape(format!("{dims:?}"), format!("{:?}", self.dims)));
        }
        Ok(())
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (Vec<usize>, &T)> + '_ {
        let dims = self.dims.clone();
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(off, v)| {
                let mut idx = vec![0; dims.len()];
                let mut rest = off;
                for p in (0..dims.len()).rev() {
                    idx[p] = rest % dims[p];
                    rest /= dims[p];
                }
                (idx, v)
            })
    }
}
