//! Quantum operators on subsets of qubits, and their tensor embedding.

use num_complex::Complex64 as C64;

use super::linalg::{unitarity_deviation, CMatrix, ONE, ZERO};
use super::{check_qubit, check_register_size, TOL_EXACT};
use crate::error::{Error, Result};

/// Rotation axis for single-qubit rotations `R_n(alpha) = exp(-i alpha sigma_n / 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Pauli sigma_x.
pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
}

/// Pauli sigma_y.
pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, C64::new(0.0, -1.0), C64::new(0.0, 1.0), ZERO])
}

/// Pauli sigma_z.
pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE])
}

/// 2x2 identity.
pub fn identity2() -> CMatrix {
    CMatrix::identity(2, 2)
}

/// Single-qubit rotation `R_n(alpha) = cos(a/2) I - i sin(a/2) sigma_n`.
///
/// Rotations about the negative axis are obtained by negating the angle.
pub fn rotation_matrix(axis: Axis, alpha: f64) -> CMatrix {
    let c = C64::new((alpha / 2.0).cos(), 0.0);
    let s = C64::new(0.0, -(alpha / 2.0).sin());
    let sigma = match axis {
        Axis::X => pauli_x(),
        Axis::Y => pauli_y(),
        Axis::Z => pauli_z(),
    };
    CMatrix::identity(2, 2).map(|x| x * c) + sigma.map(|x| x * s)
}

/// The pseudo-Hadamard `H = exp(-i pi sigma_y / 4) = R_y(pi/2)`.
pub fn pseudo_hadamard() -> CMatrix {
    rotation_matrix(Axis::Y, std::f64::consts::FRAC_PI_2)
}

/// An operator acting on an ordered subset of qubits.
///
/// `targets[0]` is the most significant qubit of the operator's own basis
/// ordering. The matrix dimension is `2^k` for `k` targets.
#[derive(Debug, Clone)]
pub struct QOperator {
    targets: Vec<usize>,
    mat: CMatrix,
    unitary: bool,
}

impl QOperator {
    /// Wraps a matrix acting on the given qubits. Target indices must be
    /// distinct and 1-based; range checks against a register happen at
    /// application time.
    pub fn new(targets: Vec<usize>, mat: CMatrix) -> Result<Self> {
        let dim = mat.nrows();
        if dim != mat.ncols() || dim != 1 << targets.len() {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: 1 << targets.len(),
            });
        }
        for (i, &q) in targets.iter().enumerate() {
            if q == 0 {
                return Err(Error::QubitOutOfRange { q, n: 0 });
            }
            if targets[..i].contains(&q) {
                return Err(Error::DuplicateQubit { q });
            }
        }
        Ok(QOperator {
            targets,
            mat,
            unitary: false,
        })
    }

    /// Like [`QOperator::new`] but additionally requires `U^dagger U = I`
    /// within 1e-10 and flags the operator as unitary.
    pub fn unitary(targets: Vec<usize>, mat: CMatrix) -> Result<Self> {
        let dev = unitarity_deviation(&mat);
        if dev > TOL_EXACT {
            return Err(Error::NotUnitary { dev });
        }
        let mut op = Self::new(targets, mat)?;
        op.unitary = true;
        Ok(op)
    }

    /// Single-qubit operator on qubit `q`.
    pub fn single(q: usize, mat: CMatrix) -> Result<Self> {
        Self::new(vec![q], mat)
    }

    /// Unitary single-qubit operator on qubit `q`.
    pub fn single_unitary(q: usize, mat: CMatrix) -> Result<Self> {
        Self::unitary(vec![q], mat)
    }

    /// `sigma_x` on qubit `q`.
    pub fn x(q: usize) -> Self {
        Self::unitary(vec![q], pauli_x()).unwrap()
    }

    /// `sigma_y` on qubit `q`.
    pub fn y(q: usize) -> Self {
        Self::unitary(vec![q], pauli_y()).unwrap()
    }

    /// `sigma_z` on qubit `q`.
    pub fn z(q: usize) -> Self {
        Self::unitary(vec![q], pauli_z()).unwrap()
    }

    /// `R_n(alpha)` on qubit `q`.
    pub fn rotation(q: usize, axis: Axis, alpha: f64) -> Self {
        Self::unitary(vec![q], rotation_matrix(axis, alpha)).unwrap()
    }

    /// Identity on an n-qubit register.
    pub fn identity(n: usize) -> Self {
        let dim = 1 << n;
        QOperator {
            targets: (1..=n).collect(),
            mat: CMatrix::identity(dim, dim),
            unitary: true,
        }
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn is_flagged_unitary(&self) -> bool {
        self.unitary
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Adjoint operator on the same targets.
    pub fn adjoint(&self) -> Self {
        QOperator {
            targets: self.targets.clone(),
            mat: self.mat.adjoint(),
            unitary: self.unitary,
        }
    }

    /// Full `2^n x 2^n` matrix of this operator embedded in an n-qubit
    /// register, identity on the untouched qubits.
    pub fn embedded_matrix(&self, n: usize) -> Result<CMatrix> {
        check_register_size(n)?;
        for &q in &self.targets {
            check_qubit(q, n)?;
        }
        let k = self.targets.len();
        if k == n && self.targets.iter().enumerate().all(|(i, &q)| q == i + 1) {
            return Ok(self.mat.clone());
        }
        let dim = 1 << n;
        // Bit positions of targets counted from the LSB of a basis index.
        let shifts: Vec<usize> = self.targets.iter().map(|&q| n - q).collect();
        let rest_mask: usize = !shifts.iter().fold(0usize, |m, &s| m | (1 << s)) & (dim - 1);

        let spread = |local: usize| -> usize {
            let mut out = 0usize;
            for (i, &s) in shifts.iter().enumerate() {
                if (local >> (k - 1 - i)) & 1 == 1 {
                    out |= 1 << s;
                }
            }
            out
        };

        let mut full = CMatrix::from_element(dim, dim, ZERO);
        for rest in 0..dim {
            if rest & rest_mask != rest {
                continue;
            }
            for ia in 0..(1 << k) {
                let a = rest | spread(ia);
                for ib in 0..(1 << k) {
                    let b = rest | spread(ib);
                    full[(a, b)] = self.mat[(ia, ib)];
                }
            }
        }
        Ok(full)
    }
}

/// Embeds `op` into a `total_qubits`-register and returns the result as a
/// full-register operator.
pub fn embed_operator(op: &QOperator, total_qubits: usize) -> Result<QOperator> {
    let mat = op.embedded_matrix(total_qubits)?;
    Ok(QOperator {
        targets: (1..=total_qubits).collect(),
        mat,
        unitary: op.unitary,
    })
}
