//! Small matrix/vector helpers shared by the engine and by tests.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Largest entrywise absolute difference between two matrices.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest absolute entry of a matrix.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Distance between two matrices after aligning the global phase of `a`
/// onto `b` (the phase maximizing the overlap tr(a\u{2020}b)).
///
/// Falls back to the plain distance when the overlap vanishes, in which
/// case no phase can reconcile the two anyway.
pub fn phase_aligned_distance(a: &CMatrix, b: &CMatrix) -> f64 {
    let t = (a.adjoint() * b).trace();
    if t.norm() < 1e-12 {
        return max_abs_diff(a, b);
    }
    let phase = t / t.norm();
    let aligned = a.map(|x| x * phase);
    max_abs_diff(&aligned, b)
}

/// Phase-aligned distance between two state vectors.
pub fn vector_phase_distance(a: &CVector, b: &CVector) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    let t = a.dotc(b);
    let aligned = if t.norm() < 1e-12 {
        a.clone()
    } else {
        a.map(|x| x * (t / t.norm()))
    };
    aligned
        .iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Max deviation of `m` from Hermiticity.
pub fn hermiticity_deviation(m: &CMatrix) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

/// Max deviation of `u` from unitarity, as |u\u{2020}u - I|.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    let gram = u.adjoint() * u;
    let eye = CMatrix::identity(u.nrows(), u.ncols());
    max_abs_diff(&gram, &eye)
}

/// Kronecker product of a list of matrices, left factor most significant.
pub fn kron_all(mats: &[CMatrix]) -> CMatrix {
    let mut out = CMatrix::from_element(1, 1, ONE);
    for m in mats {
        out = out.kronecker(m);
    }
    out
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let eig = nalgebra::SymmetricEigen::new(m.clone());
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}
