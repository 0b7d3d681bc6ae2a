//! Dense matrix kernel every other module builds on.
//!
//! Real 64-bit scalars only. Factorizations are backed by nalgebra; the
//! semantics fixed here (pivot thresholds, descending singular values,
//! rank tolerances) are what the rest of the crate relies on.

use nalgebra::DMatrix;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative rank tolerance used by default for all rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-12;

/// Dense real matrix with finite entries.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    inner: DMatrix<f64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})", self.rows(), self.cols())?;
        if self.rows() <= 8 && self.cols() <= 8 {
            write!(f, " {}", self.inner)?;
        }
        Ok(())
    }
}

impl Matrix {
    fn check_finite(inner: DMatrix<f64>) -> Result<Self> {
        if let Some((i, j)) = (0..inner.nrows())
            .flat_map(|i| (0..inner.ncols()).map(move |j| (i, j)))
            .find(|&(i, j)| !inner[(i, j)].is_finite())
        {
            return Err(Error::NonFiniteEntry(format!("entry ({i}, {j})")));
        }
        Ok(Self { inner })
    }

    /// Build from row-major data. Rejects non-finite entries.
    pub fn from_row_major(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Self::check_finite(DMatrix::from_row_slice(rows, cols, data))
    }

    /// Build from column-major data.
    pub fn from_col_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Self::check_finite(DMatrix::from_vec(rows, cols, data))
    }

    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::DimensionMismatch("ragged row lengths".into()));
        }
        let flat: Vec<f64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Self::from_row_major(nr, nc, &flat)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> f64) -> Self {
        Self {
            inner: DMatrix::from_fn(rows, cols, f),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            inner: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), diag.len(), |i, j| if i == j { diag[i] } else { 0.0 })
    }

    pub fn scalar(x: f64) -> Self {
        Self::from_fn(1, 1, |_, _| x)
    }

    pub(crate) fn from_dmatrix(inner: DMatrix<f64>) -> Self {
        Self { inner }
    }

    pub(crate) fn as_dmatrix(&self) -> &DMatrix<f64> {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.rows() == 0 || self.cols() == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.inner[(i, j)] = v;
    }

    /// Entries in column-major order (the storage order).
    pub fn col_major_entries(&self) -> &[f64] {
        self.inner.as_slice()
    }

    pub fn transpose(&self) -> Matrix {
        Self {
            inner: self.inner.transpose(),
        }
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Self {
            inner: &self.inner * s,
        }
    }

    /// Owned copy of the block starting at (`r0`, `c0`) of size `nr` x `nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        Self {
            inner: self.inner.view((r0, c0), (nr, nc)).into_owned(),
        }
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        self.inner
            .view_mut((r0, c0), (b.rows(), b.cols()))
            .copy_from(&b.inner);
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        let nonempty: Vec<&&Matrix> = parts.iter().filter(|m| m.cols() > 0 || m.rows() > 0).collect();
        let rows = nonempty.first().map_or(0, |m| m.rows());
        let cols: usize = parts.iter().map(|m| m.cols()).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c = 0;
        for m in parts {
            if m.cols() > 0 && rows > 0 {
                out.set_block(0, c, m);
            }
            c += m.cols();
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let nonempty: Vec<&&Matrix> = parts.iter().filter(|m| m.cols() > 0 || m.rows() > 0).collect();
        let cols = nonempty.first().map_or(0, |m| m.cols());
        let rows: usize = parts.iter().map(|m| m.rows()).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut r = 0;
        for m in parts {
            if m.rows() > 0 && cols > 0 {
                out.set_block(r, 0, m);
            }
            r += m.rows();
        }
        out
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|m| m.rows()).sum();
        let cols: usize = parts.iter().map(|m| m.cols()).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for m in parts {
            if !m.is_empty() {
                out.set_block(r, c, m);
            }
            r += m.rows();
            c += m.cols();
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.norm()
    }

    pub fn trace(&self) -> f64 {
        self.inner.trace()
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().fold(0.0f64, |a, &x| a.max(x.abs()))
    }

    /// Largest singular value, computed via the SVD backend.
    pub fn two_norm_estimate(&self) -> f64 {
        if self.is_empty() {
            return 0.0;
        }
        self.svd().map_or(0.0, |s| s.sigma.first().copied().unwrap_or(0.0))
    }

    /// Solve `self * X = rhs` with partial-pivoting LU.
    ///
    /// Fails with `SingularMatrix` when a pivot magnitude falls below
    /// `n * eps * max|self|`.
    pub fn lu_solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("lu_solve needs a square matrix".into()));
        }
        if self.rows() != rhs.rows() {
            return Err(Error::DimensionMismatch(format!(
                "lu_solve: lhs is {}x{} but rhs has {} rows",
                self.rows(),
                self.cols(),
                rhs.rows()
            )));
        }
        let n = self.rows();
        if n == 0 {
            return Ok(rhs.clone());
        }
        let lu = self.inner.clone().lu();
        let threshold = n as f64 * f64::EPSILON * self.max_abs();
        let min_pivot = lu.u().diagonal().iter().fold(f64::INFINITY, |a, &x| a.min(x.abs()));
        if min_pivot < threshold || !min_pivot.is_finite() {
            return Err(Error::SingularMatrix {
                pivot: min_pivot,
                threshold,
            });
        }
        lu.solve(&rhs.inner)
            .map(Self::from_dmatrix)
            .ok_or(Error::SingularMatrix {
                pivot: min_pivot,
                threshold,
            })
    }

    /// Solve `X * self = rhs`, i.e. a right division.
    pub fn lu_solve_right(&self, rhs: &Matrix) -> Result<Matrix> {
        Ok(self
            .transpose()
            .lu_solve(&rhs.transpose())?
            .transpose())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.lu_solve(&Matrix::identity(self.rows()))
    }

    /// Column-pivoted Householder QR: `self * P = Q * R` with `perm[j]` the
    /// source column placed at position `j`. The pivot order makes `diag(R)`
    /// nonincreasing in magnitude.
    pub fn qr_pivoted(&self) -> PivotedQr {
        let (m, n) = (self.rows(), self.cols());
        let mut r = self.inner.clone();
        let mut q = DMatrix::<f64>::identity(m, m);
        let mut perm: Vec<usize> = (0..n).collect();
        let steps = m.min(n);
        for k in 0..steps {
            // Pivot: bring the remaining column of largest norm to front.
            let mut best = k;
            let mut best_norm = -1.0;
            for j in k..n {
                let norm2: f64 = (k..m).map(|i| r[(i, j)] * r[(i, j)]).sum();
                if norm2 > best_norm {
                    best_norm = norm2;
                    best = j;
                }
            }
            if best != k {
                r.swap_columns(k, best);
                perm.swap(k, best);
            }
            if best_norm <= 0.0 {
                break;
            }
            if k == m - 1 {
                break;
            }
            let subdiag: f64 = ((k + 1)..m).map(|i| r[(i, k)] * r[(i, k)]).sum();
            if subdiag == 0.0 {
                continue;
            }
            let mut v = vec![0.0; m - k];
            for i in k..m {
                v[i - k] = r[(i, k)];
            }
            let alpha = best_norm.sqrt();
            let alpha = if v[0] >= 0.0 { -alpha } else { alpha };
            v[0] -= alpha;
            let vnorm2: f64 = v.iter().map(|x| x * x).sum();
            if vnorm2 == 0.0 {
                continue;
            }
            for j in k..n {
                let dot: f64 = (k..m).map(|i| v[i - k] * r[(i, j)]).sum();
                let f = 2.0 * dot / vnorm2;
                for i in k..m {
                    r[(i, j)] -= f * v[i - k];
                }
            }
            for j in 0..m {
                let dot: f64 = (k..m).map(|i| v[i - k] * q[(i, j)]).sum();
                let f = 2.0 * dot / vnorm2;
                for i in k..m {
                    q[(i, j)] -= f * v[i - k];
                }
            }
        }
        for j in 0..n.min(m) {
            for i in (j + 1)..m {
                r[(i, j)] = 0.0;
            }
        }
        PivotedQr {
            q: Matrix::from_dmatrix(q.transpose()),
            r: Matrix::from_dmatrix(r),
            perm,
        }
    }

    /// Householder QR with the full square orthogonal factor.
    pub fn qr_full(&self) -> (Matrix, Matrix) {
        let m = self.rows();
        let n = self.cols();
        let mut r = self.inner.clone();
        let mut q = DMatrix::<f64>::identity(m, m);
        for k in 0..n.min(m.saturating_sub(1)) {
            // Householder vector for column k, rows k..m.
            let mut v = vec![0.0; m - k];
            for i in k..m {
                v[i - k] = r[(i, k)];
            }
            let alpha = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if alpha == 0.0 {
                continue;
            }
            let alpha = if v[0] >= 0.0 { -alpha } else { alpha };
            v[0] -= alpha;
            let vnorm2: f64 = v.iter().map(|x| x * x).sum();
            if vnorm2 == 0.0 {
                continue;
            }
            // Apply H = I - 2 v v^T / (v^T v) to R (left) and accumulate into Q.
            for j in k..n {
                let dot: f64 = (k..m).map(|i| v[i - k] * r[(i, j)]).sum();
                let f = 2.0 * dot / vnorm2;
                for i in k..m {
                    r[(i, j)] -= f * v[i - k];
                }
            }
            for j in 0..m {
                let dot: f64 = (k..m).map(|i| v[i - k] * q[(i, j)]).sum();
                let f = 2.0 * dot / vnorm2;
                for i in k..m {
                    q[(i, j)] -= f * v[i - k];
                }
            }
        }
        // q currently holds the product of reflections applied to I, i.e. Q^T.
        for j in 0..n {
            for i in (j + 1)..m {
                r[(i, j)] = 0.0;
            }
        }
        (Matrix::from_dmatrix(q.transpose()), Matrix::from_dmatrix(r))
    }

    /// Singular value decomposition `self = U * diag(sigma) * V^T`,
    /// singular values sorted descending.
    pub fn svd(&self) -> Result<Svd> {
        let (m, n) = (self.rows(), self.cols());
        if m == 0 || n == 0 {
            return Ok(Svd {
                u: Matrix::identity(m),
                sigma: vec![0.0; m.min(n)],
                v: Matrix::identity(n),
            });
        }
        let svd = self
            .inner
            .clone()
            .try_svd(true, true, f64::EPSILON, 100_000)
            .ok_or(Error::ConvergenceFailure)?;
        let u = svd.u.ok_or(Error::ConvergenceFailure)?;
        let v_t = svd.v_t.ok_or(Error::ConvergenceFailure)?;
        let k = svd.singular_values.len();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| {
            svd.singular_values[b]
                .partial_cmp(&svd.singular_values[a])
                .unwrap()
        });
        let sigma: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
        let u_sorted = DMatrix::from_fn(m, k, |i, j| u[(i, order[j])]);
        let v = v_t.transpose();
        let v_sorted = DMatrix::from_fn(n, k, |i, j| v[(i, order[j])]);
        Ok(Svd {
            u: Matrix::from_dmatrix(u_sorted),
            sigma,
            v: Matrix::from_dmatrix(v_sorted),
        })
    }

    /// Orthonormal basis of the range at relative rank tolerance `tol`.
    pub fn orth(&self, tol: f64) -> Result<Matrix> {
        if self.is_empty() {
            return Ok(Matrix::zeros(self.rows(), 0));
        }
        let svd = self.svd()?;
        let s1 = svd.sigma.first().copied().unwrap_or(0.0);
        let rank = svd.sigma.iter().filter(|&&s| s > tol * s1 && s > 0.0).count();
        Ok(svd.u.block(0, 0, self.rows(), rank))
    }

    /// Frobenius, two-norm estimate (via SVD) and trace in one record.
    pub fn norms_and_trace(&self) -> NormsAndTrace {
        NormsAndTrace {
            frobenius: self.frobenius_norm(),
            two_norm_estimate: self.two_norm_estimate(),
            trace: if self.is_square() { self.trace() } else { f64::NAN },
        }
    }

    pub fn symmetrize(&self) -> Matrix {
        (self + &self.transpose()).scale(0.5)
    }
}

#[derive(Debug, Clone)]
pub struct PivotedQr {
    pub q: Matrix,
    pub r: Matrix,
    pub perm: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Matrix,
    pub sigma: Vec<f64>,
    pub v: Matrix,
}

#[derive(Debug, Clone, Copy)]
pub struct NormsAndTrace {
    pub frobenius: f64,
    pub two_norm_estimate: f64,
    pub trace: f64,
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.inner[idx]
    }
}

macro_rules! elementwise_op {
    ($trait:ident, $fn:ident, $op:tt, $name:expr) => {
        impl $trait for &Matrix {
            type Output = Matrix;
            fn $fn(self, rhs: &Matrix) -> Matrix {
                assert_eq!(
                    (self.rows(), self.cols()),
                    (rhs.rows(), rhs.cols()),
                    concat!("matrix ", $name, ": shape mismatch")
                );
                Matrix {
                    inner: &self.inner $op &rhs.inner,
                }
            }
        }
    };
}

elementwise_op!(Add, add, +, "add");
elementwise_op!(Sub, sub, -, "sub");

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols(),
            rhs.rows(),
            "matrix mul: {}x{} * {}x{}",
            self.rows(),
            self.cols(),
            rhs.rows(),
            rhs.cols()
        );
        Matrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            inner: -&self.inner,
        }
    }
}

/// Complex matrix stored as a real/imaginary pair of real matrices.
#[derive(Debug, Clone)]
pub struct ComplexMat {
    pub re: Matrix,
    pub im: Matrix,
}

impl ComplexMat {
    pub fn new(re: Matrix, im: Matrix) -> Self {
        assert_eq!((re.rows(), re.cols()), (im.rows(), im.cols()));
        Self { re, im }
    }

    pub fn from_real(re: Matrix) -> Self {
        let im = Matrix::zeros(re.rows(), re.cols());
        Self { re, im }
    }

    pub fn rows(&self) -> usize {
        self.re.rows()
    }

    pub fn cols(&self) -> usize {
        self.re.cols()
    }

    pub fn sub(&self, rhs: &ComplexMat) -> ComplexMat {
        ComplexMat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    pub fn add(&self, rhs: &ComplexMat) -> ComplexMat {
        ComplexMat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    pub fn scale(&self, s: f64) -> ComplexMat {
        ComplexMat {
            re: self.re.scale(s),
            im: self.im.scale(s),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.re.frobenius_norm().hypot(self.im.frobenius_norm())
    }

    /// Largest singular value, via the real 2p x 2m embedding.
    pub fn two_norm(&self) -> f64 {
        let top = Matrix::hstack(&[&self.re, &self.im.scale(-1.0)]);
        let bottom = Matrix::hstack(&[&self.im, &self.re]);
        Matrix::vstack(&[&top, &bottom]).two_norm_estimate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Matrix {
        Matrix::from_fn(n, m, |_, _| rng.random_range(-1.0..1.0))
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Matrix::from_row_major(1, 2, &[1.0, f64::NAN]).is_err());
        assert!(Matrix::from_row_major(1, 2, &[1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn lu_solve_identity() {
        let a = Matrix::identity(2);
        let b = Matrix::from_rows(&[&[3.0], &[4.0]]).unwrap();
        let x = a.lu_solve(&b).unwrap();
        assert_eq!(x, b);
    }

    #[test]
    fn lu_solve_diagonal_inverse() {
        let a = Matrix::from_diagonal(&[2.0, 4.0]);
        let x = a.lu_solve(&Matrix::identity(2)).unwrap();
        assert!((x.get(0, 0) - 0.5).abs() < 1e-15);
        assert!((x.get(1, 1) - 0.25).abs() < 1e-15);
        assert!(x.get(0, 1).abs() < 1e-15 && x.get(1, 0).abs() < 1e-15);
    }

    #[test]
    fn lu_solve_permutation() {
        let a = Matrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let b = Matrix::from_rows(&[&[1.0], &[2.0]]).unwrap();
        let x = a.lu_solve(&b).unwrap();
        assert!((x.get(0, 0) - 2.0).abs() < 1e-15);
        assert!((x.get(1, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn lu_solve_singular_is_reported() {
        let a = Matrix::from_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        match a.lu_solve(&Matrix::identity(2)) {
            Err(Error::SingularMatrix { .. }) => {}
            other => panic!("expected SingularMatrix, got {other:?}"),
        }
    }

    #[test]
    fn lu_residual_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [5, 20, 50] {
            let a = &random_matrix(n, n, &mut rng) + &Matrix::identity(n).scale(3.0);
            let x = a.lu_solve(&Matrix::identity(n)).unwrap();
            let res = (&(&a * &x) - &Matrix::identity(n)).frobenius_norm();
            assert!(res < 1e-10, "n = {n}: residual {res}");
        }
    }

    #[test]
    fn qr_pivoted_identity() {
        let qr = Matrix::identity(3).qr_pivoted();
        assert!((&qr.q - &Matrix::identity(3)).frobenius_norm() < 1e-14);
        assert!((&qr.r - &Matrix::identity(3)).frobenius_norm() < 1e-14);
        assert_eq!(qr.perm, vec![0, 1, 2]);
    }

    #[test]
    fn qr_pivoted_zero_matrix() {
        let qr = Matrix::zeros(2, 2).qr_pivoted();
        assert!(qr.r.frobenius_norm() < 1e-14);
        let qtq = &qr.q.transpose() * &qr.q;
        assert!((&qtq - &Matrix::identity(2)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn qr_pivoted_detects_rank_deficiency() {
        // Independent oracle: the Gram determinant of the columns vanishes.
        let a = Matrix::from_rows(&[&[1.0, 2.0], &[2.0, 4.0]]).unwrap();
        let gram = &a.transpose() * &a;
        let gram_det = gram.get(0, 0) * gram.get(1, 1) - gram.get(0, 1) * gram.get(1, 0);
        assert_eq!(gram_det, 0.0);
        let qr = a.qr_pivoted();
        assert!(qr.r.get(1, 1).abs() <= 1e-12 * qr.r.get(0, 0).abs());
    }

    #[test]
    fn qr_pivoted_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let a = random_matrix(8, 6, &mut rng);
            let qr = a.qr_pivoted();
            let ap = Matrix::from_fn(8, 6, |i, j| a.get(i, qr.perm[j]));
            let recon = &qr.q * &qr.r;
            assert!((&ap - &recon).frobenius_norm() <= 1e-12 * a.frobenius_norm().max(1.0));
            let qtq = &qr.q.transpose() * &qr.q;
            assert!((&qtq - &Matrix::identity(qr.q.cols())).frobenius_norm() < 1e-12);
            // Diagonal of R nonincreasing in magnitude.
            let d: Vec<f64> = (0..6).map(|i| qr.r.get(i, i).abs()).collect();
            assert!(d.windows(2).all(|w| w[0] >= w[1] - 1e-14));
        }
    }

    #[test]
    fn qr_full_reconstruction() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(10, 4, &mut rng);
        let (q, r) = a.qr_full();
        assert_eq!(q.rows(), 10);
        assert_eq!(q.cols(), 10);
        assert!((&(&q * &r) - &a).frobenius_norm() < 1e-12 * a.frobenius_norm().max(1.0));
        let qtq = &q.transpose() * &q;
        assert!((&qtq - &Matrix::identity(10)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn svd_diagonal() {
        let svd = Matrix::from_diagonal(&[3.0, 1.0]).svd().unwrap();
        assert!((svd.sigma[0] - 3.0).abs() < 1e-14);
        assert!((svd.sigma[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn svd_zero() {
        let svd = Matrix::zeros(3, 3).svd().unwrap();
        assert!(svd.sigma.iter().all(|&s| s == 0.0));
    }

    #[test]
    fn svd_permuted_diagonal() {
        let a = Matrix::from_rows(&[&[0.0, 2.0], &[1.0, 0.0]]).unwrap();
        let svd = a.svd().unwrap();
        assert!((svd.sigma[0] - 2.0).abs() < 1e-14);
        assert!((svd.sigma[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn svd_reconstruction_and_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_matrix(40, 25, &mut rng);
        let svd = a.svd().unwrap();
        let sig = Matrix::from_diagonal(&svd.sigma);
        let recon = &(&svd.u * &sig) * &svd.v.transpose();
        assert!((&recon - &a).frobenius_norm() <= 1e-12 * a.frobenius_norm());
        let utu = &svd.u.transpose() * &svd.u;
        assert!((&utu - &Matrix::identity(25)).frobenius_norm() < 1e-12);
        let vtv = &svd.v.transpose() * &svd.v;
        assert!((&vtv - &Matrix::identity(25)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn norms_and_trace_examples() {
        let nt = Matrix::identity(4).norms_and_trace();
        assert!((nt.frobenius - 2.0).abs() < 1e-15);
        assert!((nt.trace - 4.0).abs() < 1e-15);

        let nt = Matrix::from_diagonal(&[-1.0, -1.0, 1.0]).norms_and_trace();
        assert!((nt.trace + 1.0).abs() < 1e-15);

        let nt = Matrix::from_rows(&[&[3.0, 4.0], &[0.0, 0.0]])
            .unwrap()
            .norms_and_trace();
        assert!((nt.frobenius - 5.0).abs() < 1e-15);
        assert!((nt.two_norm_estimate - 5.0).abs() < 1e-12);
    }

    #[test]
    fn complex_two_norm_matches_real_case() {
        let m = ComplexMat::from_real(Matrix::from_diagonal(&[3.0, 1.0]));
        assert!((m.two_norm() - 3.0).abs() < 1e-12);
        // i * I has two-norm 1.
        let m = ComplexMat::new(Matrix::zeros(2, 2), Matrix::identity(2));
        assert!((m.two_norm() - 1.0).abs() < 1e-12);
    }
}
