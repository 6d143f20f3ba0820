use std::fmt;

use super::{Matrix, Scalar};
use crate::{Error, Result};

/// Bilinear map `K^d0 x K^d1 -> K^d2`. Entry `(i, j, k)` is the
/// coefficient of `e_k` in the image of `(e_i, e_j)`.
///
/// Products of an algebra of dimension `n` are `(n, n, n)` tensors. An
/// action of an `n`-dimensional algebra on an `m`-dimensional space is an
/// `(n, m, m)` tensor, so `act(x, v)` is again [`Tensor3::apply`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 { dims: (d0, d1, d2), data: vec![Scalar::zero(); d0 * d1 * d2] }
    }

    pub fn cube(n: usize) -> Self {
        Tensor3::zeros(n, n, n)
    }

    /// `entries[i][j][k]`; all slices must be rectangular.
    pub fn from_nested(entries: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let d0 = entries.len();
        let d1 = entries.first().map_or(0, Vec::len);
        let d2 = entries.first().and_then(|s| s.first()).map_or(0, Vec::len);
        let mut t = Tensor3::zeros(d0, d1, d2);
        for (i, slice) in entries.into_iter().enumerate() {
            if slice.len() != d1 {
                return Err(Error::Dimension("ragged tensor".into()));
            }
            for (j, fibre) in slice.into_iter().enumerate() {
                if fibre.len() != d2 {
                    return Err(Error::Dimension("ragged tensor".into()));
                }
                for (k, e) in fibre.into_iter().enumerate() {
                    t.set(i, j, k, e);
                }
            }
        }
        Ok(t)
    }

    /// Integer entries `entries[i][j][k]`; panics on ragged input.
    pub fn from_ints(entries: &[Vec<Vec<i64>>]) -> Self {
        let nested = entries
            .iter()
            .map(|s| s.iter().map(|f| f.iter().map(|&e| Scalar::from_int(e)).collect()).collect())
            .collect();
        Tensor3::from_nested(nested).expect("ragged integer tensor")
    }

    /// Products given as `(i, j, k, coefficient)` on an `n`-dimensional space.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut t = Tensor3::cube(n);
        for (i, j, k, c) in entries {
            t.set(*i, *j, *k, c.clone());
        }
        t
    }

    /// Action tensor whose `i`-th slice acts as `mats[i]` (each `m x m`).
    pub fn from_action_matrices(m: usize, mats: &[Matrix]) -> Result<Self> {
        let mut t = Tensor3::zeros(mats.len(), m, m);
        for (i, a) in mats.iter().enumerate() {
            if a.rows() != m || a.cols() != m {
                return Err(Error::Dimension(format!(
                    "action matrix {} is {}x{}, expected {m}x{m}",
                    i,
                    a.rows(),
                    a.cols()
                )));
            }
            for r in 0..m {
                for c in 0..m {
                    t.set(i, c, r, a.get(r, c).clone());
                }
            }
        }
        Ok(t)
    }

    /// The operator `v -> apply(e_i, v)` of an action tensor.
    pub fn action_matrix(&self, i: usize) -> Matrix {
        let (_, d1, d2) = self.dims;
        let mut m = Matrix::zeros(d2, d1);
        for c in 0..d1 {
            for r in 0..d2 {
                m.set(r, c, self.get(i, c, r).clone());
            }
        }
        m
    }

    /// The operator `v -> apply(x, v)`.
    pub fn apply_matrix(&self, x: &[Scalar]) -> Matrix {
        let (d0, d1, d2) = self.dims;
        assert_eq!(x.len(), d0, "left argument length");
        let mut m = Matrix::zeros(d2, d1);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for c in 0..d1 {
                for r in 0..d2 {
                    let e = self.get(i, c, r);
                    if !e.is_zero() {
                        let v = m.get(r, c) + &(xi * e);
                        m.set(r, c, v);
                    }
                }
            }
        }
        m
    }

    pub fn action_matrices(&self) -> Vec<Matrix> {
        (0..self.dims.0).map(|i| self.action_matrix(i)).collect()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let at = self.index(i, j, k);
        self.data[at] = value;
    }

    /// The fibre over `(i, j)`, that is the image of `(e_i, e_j)`.
    pub fn fibre(&self, i: usize, j: usize) -> &[Scalar] {
        let at = self.index(i, j, 0);
        &self.data[at..at + self.dims.2]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        let (d0, d1, _) = self.dims;
        (0..d0).map(|i| (0..d1).map(|j| self.fibre(i, j).to_vec()).collect()).collect()
    }

    /// Sum of `x_i y_j t(i, j, .)`, skipping zero coordinates.
    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dims.0, "left argument length");
        assert_eq!(y.len(), self.dims.1, "right argument length");
        let mut out = vec![Scalar::zero(); self.dims.2];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let fibre = self.fibre(i, j);
                if fibre.iter().all(Scalar::is_zero) {
                    continue;
                }
                let w = xi * yj;
                for (o, c) in out.iter_mut().zip(fibre) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// The map `(x, y) -> t(m1 x, m2 y)`.
    pub fn precompose(&self, m1: &Matrix, m2: &Matrix) -> Tensor3 {
        let (_, _, d2) = self.dims;
        let mut out = Tensor3::zeros(m1.cols(), m2.cols(), d2);
        for i in 0..m1.cols() {
            let x = m1.column(i);
            for j in 0..m2.cols() {
                let v = self.apply(&x, &m2.column(j));
                for (k, e) in v.into_iter().enumerate() {
                    out.set(i, j, k, e);
                }
            }
        }
        out
    }

    /// The map `(x, y) -> m t(x, y)`.
    pub fn postcompose(&self, m: &Matrix) -> Tensor3 {
        let (d0, d1, _) = self.dims;
        let mut out = Tensor3::zeros(d0, d1, m.rows());
        for i in 0..d0 {
            for j in 0..d1 {
                let v = m.apply(self.fibre(i, j));
                for (k, e) in v.into_iter().enumerate() {
                    out.set(i, j, k, e);
                }
            }
        }
        out
    }

    /// The map `(x, y) -> t(y, x)`.
    pub fn swap_arguments(&self) -> Tensor3 {
        let (d0, d1, d2) = self.dims;
        let mut out = Tensor3::zeros(d1, d0, d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    out.set(j, i, k, self.get(i, j, k).clone());
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims, "tensor dimensions");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims, "tensor dimensions");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3{:?}{:?}", self.dims, self.to_nested())
    }
}

/// Apply the bilinear map `t` to `(x, y)`.
pub fn apply_bilinear(t: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let (d0, d1, _) = t.dims();
    if x.len() != d0 || y.len() != d1 {
        return Err(Error::Dimension(format!(
            "arguments of length {} and {} for a {}x{} bilinear map",
            x.len(),
            y.len(),
            d0,
            d1
        )));
    }
    Ok(t.apply(x, y))
}
