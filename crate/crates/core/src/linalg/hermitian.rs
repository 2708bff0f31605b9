//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each (p, q) sweep step factors the 2x2 block through a phase that makes
//! the off-diagonal entry real, then applies the classical symmetric Schur
//! rotation. Quadratic convergence; plenty for the matrix sizes at hand.

use num_complex::Complex;

use super::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Eigenvalues (ascending) and the unitary matrix of eigenvectors (columns).
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Scalar> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
}

const MAX_SWEEPS: usize = 64;

fn off_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    let n = a.nrows();
    let mut acc = T::zero();
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc = acc + a[[p, q]].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi<T: Scalar>(a: &CMatrix<T>, want_vectors: bool) -> Result<(Vec<T>, Option<CMatrix<T>>)> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "Hermitian eigensolver requires square input");
    if n == 0 {
        return Ok((Vec::new(), want_vectors.then(|| super::identity(0))));
    }
    let mut m = a.clone();
    let mut v = want_vectors.then(|| super::identity::<T>(n));
    let scale = super::frobenius_norm(&m).max(T::min_positive_value());
    let tol = T::epsilon() * scale * T::from_usize(n).unwrap();

    for _sweep in 0..MAX_SWEEPS {
        if off_norm(&m) <= tol {
            let mut values: Vec<T> = (0..n).map(|i| m[[i, i]].re).collect();
            if let Some(vm) = v.as_mut() {
                // sort ascending, permuting eigenvector columns alongside
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap());
                let sorted_vals: Vec<T> = order.iter().map(|&i| values[i]).collect();
                let mut sorted_vecs = super::identity::<T>(n);
                for (new_c, &old_c) in order.iter().enumerate() {
                    for r in 0..n {
                        sorted_vecs[[r, new_c]] = vm[[r, old_c]];
                    }
                }
                return Ok((sorted_vals, Some(sorted_vecs)));
            }
            values.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok((values, None));
        }

        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                let abs_apq = apq.norm();
                if abs_apq <= T::epsilon() * scale {
                    continue;
                }
                let phase = apq / Complex::new(abs_apq, T::zero());
                let alpha = m[[p, p]].re;
                let beta = m[[q, q]].re;
                let tau = (beta - alpha) / (abs_apq + abs_apq);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;

                // U restricted to the (p,q) plane:
                //   [ c*phase  s*phase ]
                //   [   -s        c    ]
                let u_pp = phase * Complex::new(c, T::zero());
                let u_pq = phase * Complex::new(s, T::zero());
                let u_qp = Complex::new(-s, T::zero());
                let u_qq = Complex::new(c, T::zero());

                // columns: A <- A U
                for r in 0..n {
                    let arp = m[[r, p]];
                    let arq = m[[r, q]];
                    m[[r, p]] = arp * u_pp + arq * u_qp;
                    m[[r, q]] = arp * u_pq + arq * u_qq;
                }
                // rows: A <- U* A
                for cidx in 0..n {
                    let apc = m[[p, cidx]];
                    let aqc = m[[q, cidx]];
                    m[[p, cidx]] = u_pp.conj() * apc + u_qp.conj() * aqc;
                    m[[q, cidx]] = u_pq.conj() * apc + u_qq.conj() * aqc;
                }
                // clean the rotated pair
                m[[p, q]] = Complex::new(T::zero(), T::zero());
                m[[q, p]] = Complex::new(T::zero(), T::zero());
                m[[p, p]] = Complex::new(m[[p, p]].re, T::zero());
                m[[q, q]] = Complex::new(m[[q, q]].re, T::zero());

                if let Some(vm) = v.as_mut() {
                    for r in 0..n {
                        let vrp = vm[[r, p]];
                        let vrq = vm[[r, q]];
                        vm[[r, p]] = vrp * u_pp + vrq * u_qp;
                        vm[[r, q]] = vrp * u_pq + vrq * u_qq;
                    }
                }
            }
        }
    }
    Err(Error::EigenNoConvergence { n })
}

/// Eigenvalues of a Hermitian matrix, sorted ascending.
pub fn hermitian_eigenvalues<T: Scalar>(a: &CMatrix<T>) -> Result<Vec<T>> {
    jacobi(a, false).map(|(vals, _)| vals)
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigen<T: Scalar>(a: &CMatrix<T>) -> Result<HermitianEigen<T>> {
    let (values, vectors) = jacobi(a, true)?;
    Ok(HermitianEigen {
        values,
        vectors: vectors.unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;
    use ndarray::array;

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let a: CMatrix<f64> = array![
            [cplx(3.0, 0.0), cplx(0.0, 0.0)],
            [cplx(0.0, 0.0), cplx(-1.0, 0.0)]
        ];
        let vals = hermitian_eigenvalues(&a).unwrap();
        assert_eq!(vals, vec![-1.0, 3.0]);
    }

    #[test]
    fn known_2x2_complex_hermitian() {
        // [[2, i],[-i, 2]] has eigenvalues 1 and 3
        let a: CMatrix<f64> = array![
            [cplx(2.0, 0.0), cplx(0.0, 1.0)],
            [cplx(0.0, -1.0), cplx(2.0, 0.0)]
        ];
        let vals = hermitian_eigenvalues(&a).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn reconstruction_from_eigenpairs() {
        // pseudo-random Hermitian 5x5
        let n = 5;
        let mut a: CMatrix<f64> = CMatrix::from_shape_fn((n, n), |(i, j)| {
            let x = ((i * 7 + j * 3 + 1) % 11) as f64 / 3.0 - 1.5;
            let y = ((i * 5 + j * 13 + 2) % 7) as f64 / 4.0 - 0.8;
            cplx(x, y)
        });
        a = super::super::hermitian_part(&a);
        let eig = hermitian_eigen(&a).unwrap();
        // U diag(w) U* == A
        let n = a.nrows();
        let mut recon = CMatrix::<f64>::from_elem((n, n), cplx(0.0, 0.0));
        for i in 0..n {
            for j in 0..n {
                let mut acc = cplx(0.0, 0.0);
                for k in 0..n {
                    acc += eig.vectors[[i, k]] * cplx(eig.values[k], 0.0) * eig.vectors[[j, k]].conj();
                }
                recon[[i, j]] = acc;
            }
        }
        let err = super::super::frobenius_norm(&(&recon - &a));
        assert!(err < 1e-12, "reconstruction error {err}");
        // unitarity
        let utu = super::super::adjoint(&eig.vectors).dot(&eig.vectors);
        let eye = super::super::identity::<f64>(n);
        assert!(super::super::frobenius_norm(&(&utu - &eye)) < 1e-12);
    }

    #[test]
    fn trace_and_det_match_eigenvalue_sums() {
        let a: CMatrix<f64> = array![
            [cplx(1.0, 0.0), cplx(2.0, -1.0), cplx(0.0, 0.5)],
            [cplx(2.0, 1.0), cplx(-2.0, 0.0), cplx(1.0, 1.0)],
            [cplx(0.0, -0.5), cplx(1.0, -1.0), cplx(0.5, 0.0)]
        ];
        let vals = hermitian_eigenvalues(&a).unwrap();
        let tr: f64 = vals.iter().sum();
        assert!((tr - (1.0 - 2.0 + 0.5)).abs() < 1e-12);
        let det_eig: f64 = vals.iter().product();
        let det_lu = super::super::lu::LuDecomp::new(&a).det();
        assert!((det_lu.re - det_eig).abs() < 1e-10);
        assert!(det_lu.im.abs() < 1e-10);
    }
}
