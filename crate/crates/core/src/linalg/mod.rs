//! Dense complex linear algebra on small matrices.
//!
//! Everything here is hand-rolled so the crate stays generic over the real
//! scalar: LU with partial pivoting, a cyclic Jacobi eigensolver for
//! Hermitian matrices, a single-shift QR eigensolver for general complex
//! matrices, inverse iteration, and column-pivoted QR for range extraction.
//! Matrices are `ndarray` arrays of `num_complex::Complex<T>`.

pub mod eigen;
pub mod hermitian;
pub mod lu;
pub mod qr;

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::scalar::{Cplx, Scalar};

pub use eigen::{complex_eigenvalues, eigenvector_at};
pub use hermitian::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use lu::LuDecomp;
pub use qr::range_basis;

/// Dense complex matrix over the crate scalar.
pub type CMatrix<T> = Array2<Cplx<T>>;
/// Dense complex vector over the crate scalar.
pub type CVector<T> = Array1<Cplx<T>>;

/// Conjugate transpose.
pub fn adjoint<T: Scalar>(a: &CMatrix<T>) -> CMatrix<T> {
    a.t().mapv(|x| x.conj())
}

/// n-by-n complex identity.
pub fn identity<T: Scalar>(n: usize) -> CMatrix<T> {
    Array2::from_shape_fn((n, n), |(i, j)| {
        if i == j {
            Complex::new(T::one(), T::zero())
        } else {
            Complex::zero_c()
        }
    })
}

trait ZeroC<T> {
    fn zero_c() -> Complex<T>;
}
impl<T: Scalar> ZeroC<T> for Complex<T> {
    fn zero_c() -> Complex<T> {
        Complex::new(T::zero(), T::zero())
    }
}

/// Frobenius norm.
pub fn frobenius_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    a.iter()
        .map(|x| x.norm_sqr())
        .fold(T::zero(), |acc, v| acc + v)
        .sqrt()
}

/// Euclidean norm of a complex vector.
pub fn vector_norm<T: Scalar>(v: &CVector<T>) -> T {
    v.iter()
        .map(|x| x.norm_sqr())
        .fold(T::zero(), |acc, v| acc + v)
        .sqrt()
}

/// Largest entrywise deviation from Hermitian symmetry, `max |A - A*|`.
pub fn hermitian_deviation<T: Scalar>(a: &CMatrix<T>) -> T {
    let n = a.nrows();
    let mut dev = T::zero();
    for i in 0..n {
        for j in 0..n {
            let d = (a[[i, j]] - a[[j, i]].conj()).norm();
            if d > dev {
                dev = d;
            }
        }
    }
    dev
}

/// Hermitian part `(A + A*)/2`.
pub fn hermitian_part<T: Scalar>(a: &CMatrix<T>) -> CMatrix<T> {
    let half = Complex::new(T::from_f64(0.5).unwrap(), T::zero());
    (a + &adjoint(a)).mapv(|x| x * half)
}

/// Anti-Hermitian part divided by `i`: `(A - A*)/(2i)`, itself Hermitian.
pub fn imaginary_part<T: Scalar>(a: &CMatrix<T>) -> CMatrix<T> {
    let half_over_i = Complex::new(T::zero(), -T::from_f64(0.5).unwrap());
    (a - &adjoint(a)).mapv(|x| x * half_over_i)
}

/// Trace of a square matrix.
pub fn trace<T: Scalar>(a: &CMatrix<T>) -> Cplx<T> {
    let mut t = Complex::new(T::zero(), T::zero());
    for i in 0..a.nrows() {
        t += a[[i, i]];
    }
    t
}

/// Pairwise (cascade) summation: deterministic for a fixed input order and
/// more accurate than a running sum on long node lists.
pub fn pairwise_sum<T: Scalar>(values: &[Cplx<T>]) -> Cplx<T> {
    match values.len() {
        0 => Complex::new(T::zero(), T::zero()),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

/// Real-valued pairwise summation.
pub fn pairwise_sum_real<T: Scalar>(values: &[T]) -> T {
    match values.len() {
        0 => T::zero(),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum_real(&values[..mid]) + pairwise_sum_real(&values[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    fn sample() -> CMatrix<f64> {
        ndarray::array![
            [cplx(1.0, 0.0), cplx(2.0, 1.0)],
            [cplx(0.0, -3.0), cplx(4.0, 0.5)]
        ]
    }

    #[test]
    fn adjoint_is_conjugate_transpose() {
        let a = sample();
        let at = adjoint(&a);
        assert_eq!(at[[0, 1]], cplx(0.0, 3.0));
        assert_eq!(at[[1, 0]], cplx(2.0, -1.0));
    }

    #[test]
    fn hermitian_and_imaginary_parts_reassemble() {
        let a = sample();
        let h = hermitian_part(&a);
        let m = imaginary_part(&a);
        // A = H + i M
        let i = cplx(0.0, 1.0);
        let back = &h + &m.mapv(|x| x * i);
        for (x, y) in back.iter().zip(a.iter()) {
            assert!((x - y).norm() < 1e-15);
        }
        assert!(hermitian_deviation(&h) < 1e-15);
        assert!(hermitian_deviation(&m) < 1e-15);
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let xs: Vec<_> = (0..101).map(|k| cplx(k as f64, -(k as f64) / 2.0)).collect();
        let naive = xs.iter().fold(cplx(0.0, 0.0), |a, b| a + b);
        let pw = pairwise_sum(&xs);
        assert!((naive - pw).norm() < 1e-10);
    }
}
