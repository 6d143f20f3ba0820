//! Exact rational linear algebra: scalars, dense matrices and bilinear maps.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::Matrix;
pub use scalar::{ParseScalarError, Scalar};
pub use tensor::{apply_bilinear, Tensor3};

/// The `i`-th standard basis vector of `K^n`.
pub fn basis_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a += k * b`
pub fn axpy(a: &mut [Scalar], k: &Scalar, b: &[Scalar]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x += k * y;
        }
    }
}
