//! LU factorisation with partial pivoting for dense complex matrices.

use ndarray::{Array1, Array2};
use num_complex::Complex;

use super::{CMatrix, CVector};
use crate::error::{Error, Result};
use crate::scalar::{Cplx, Scalar};

/// Packed LU factors of a square complex matrix, `P A = L U`.
#[derive(Debug, Clone)]
pub struct LuDecomp<T: Scalar> {
    lu: CMatrix<T>,
    perm: Vec<usize>,
    swaps: usize,
    min_pivot: T,
    scale: T,
}

impl<T: Scalar> LuDecomp<T> {
    /// Factor `a`. Always succeeds; singularity shows up as a (near-)zero
    /// pivot, reported by [`LuDecomp::is_singular`] and by `det() == 0`.
    pub fn new(a: &CMatrix<T>) -> Self {
        let n = a.nrows();
        assert_eq!(n, a.ncols(), "LU requires a square matrix");
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0usize;
        let mut min_pivot = T::infinity();
        let scale = super::frobenius_norm(a);

        for k in 0..n {
            // pivot row: largest magnitude in column k at or below the diagonal
            let mut p = k;
            let mut best = lu[[k, k]].norm_sqr();
            for i in (k + 1)..n {
                let m = lu[[i, k]].norm_sqr();
                if m > best {
                    best = m;
                    p = i;
                }
            }
            if p != k {
                for j in 0..n {
                    let tmp = lu[[k, j]];
                    lu[[k, j]] = lu[[p, j]];
                    lu[[p, j]] = tmp;
                }
                perm.swap(k, p);
                swaps += 1;
            }
            let piv = lu[[k, k]];
            let piv_norm = piv.norm();
            if piv_norm < min_pivot {
                min_pivot = piv_norm;
            }
            if piv_norm == T::zero() {
                continue;
            }
            for i in (k + 1)..n {
                let factor = lu[[i, k]] / piv;
                lu[[i, k]] = factor;
                for j in (k + 1)..n {
                    let sub = factor * lu[[k, j]];
                    lu[[i, j]] -= sub;
                }
            }
        }
        if n == 0 {
            min_pivot = T::zero();
        }

        LuDecomp {
            lu,
            perm,
            swaps,
            min_pivot,
            scale,
        }
    }

    pub fn dim(&self) -> usize {
        self.lu.nrows()
    }

    /// Smallest pivot magnitude encountered.
    pub fn min_pivot(&self) -> T {
        self.min_pivot
    }

    /// True when the smallest pivot is negligible relative to the input scale.
    pub fn is_singular(&self) -> bool {
        let floor = T::epsilon() * self.scale * T::from_usize(self.dim().max(1)).unwrap();
        self.min_pivot <= floor
    }

    /// Determinant (product of pivots with the permutation sign).
    pub fn det(&self) -> Cplx<T> {
        let mut d = Complex::new(T::one(), T::zero());
        for k in 0..self.dim() {
            d = d * self.lu[[k, k]];
        }
        if self.swaps % 2 == 1 {
            d = -d;
        }
        d
    }

    fn check_solvable(&self) -> Result<()> {
        if self.is_singular() {
            return Err(Error::SingularSystem {
                pivot: self.min_pivot.to_f64().unwrap_or(0.0),
            });
        }
        Ok(())
    }

    /// Solve `A x = b` for a single right-hand side.
    pub fn solve_vec(&self, b: &CVector<T>) -> Result<CVector<T>> {
        self.check_solvable()?;
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                context: "LU solve",
                expected: n,
                got: b.len(),
            });
        }
        let mut x: CVector<T> = Array1::from_iter(self.perm.iter().map(|&pi| b[pi]));
        // forward: L y = P b
        for i in 1..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[[i, j]] * x[j];
            }
            x[i] = acc;
        }
        // backward: U x = y
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc -= self.lu[[i, j]] * x[j];
            }
            x[i] = acc / self.lu[[i, i]];
        }
        Ok(x)
    }

    /// Solve `A X = B` column by column.
    pub fn solve_mat(&self, b: &CMatrix<T>) -> Result<CMatrix<T>> {
        self.check_solvable()?;
        let n = self.dim();
        if b.nrows() != n {
            return Err(Error::DimensionMismatch {
                context: "LU solve",
                expected: n,
                got: b.nrows(),
            });
        }
        let mut x = Array2::from_elem((n, b.ncols()), Complex::new(T::zero(), T::zero()));
        for c in 0..b.ncols() {
            let col = self.solve_vec(&b.column(c).to_owned())?;
            for r in 0..n {
                x[[r, c]] = col[r];
            }
        }
        Ok(x)
    }

    /// Matrix inverse.
    pub fn inverse(&self) -> Result<CMatrix<T>> {
        self.solve_mat(&super::identity(self.dim()))
    }
}
