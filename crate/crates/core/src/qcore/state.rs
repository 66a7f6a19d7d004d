//! Pure state vectors and density matrices.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;

use super::linalg::{hermitian_eigenvalues, hermiticity_deviation, CMatrix, CVector, ONE, ZERO};
use super::operator::QOperator;
use super::{check_qubit, check_register_size, qubit_bit, TOL_EXACT};
use crate::error::{Error, Result};

/// A pure n-qubit state, `2^n` complex amplitudes with qubit 1 as the most
/// significant bit of the basis index.
#[derive(Debug, Clone)]
pub struct StateVector {
    n: usize,
    amps: CVector,
}

impl StateVector {
    /// Builds a state from raw amplitudes, checking the length is a power
    /// of two and the norm is 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<C64>) -> Result<Self> {
        let dim = amps.len();
        let n = dim.trailing_zeros() as usize;
        if dim == 0 || dim != 1 << n {
            return Err(Error::NotQubitSized { dim });
        }
        check_register_size(n)?;
        let amps = DVector::from_vec(amps);
        let norm = amps.norm();
        if (norm - 1.0).abs() > TOL_EXACT {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector { n, amps })
    }

    /// Computational basis state `|index>` of an n-qubit register.
    pub fn basis_state(n: usize, index: usize) -> Result<Self> {
        check_register_size(n)?;
        let dim = 1 << n;
        if index >= dim {
            return Err(Error::DimensionMismatch {
                left: index,
                right: dim,
            });
        }
        let mut amps = DVector::from_element(dim, ZERO);
        amps[index] = ONE;
        Ok(StateVector { n, amps })
    }

    /// Basis state from a bit string such as `"0110"` (qubit 1 first).
    pub fn from_bits(bits: &str) -> Result<Self> {
        let n = bits.len();
        check_register_size(n)?;
        let mut index = 0usize;
        for c in bits.chars() {
            index <<= 1;
            match c {
                '0' => {}
                '1' => index |= 1,
                _ => {
                    return Err(Error::SpecInvalid(format!(
                        "invalid bit character `{c}` in basis label"
                    )))
                }
            }
        }
        Self::basis_state(n, index)
    }

    /// Single-qubit `|0>`.
    pub fn ket0() -> Self {
        Self::basis_state(1, 0).unwrap()
    }

    /// Single-qubit `|1>`.
    pub fn ket1() -> Self {
        Self::basis_state(1, 1).unwrap()
    }

    /// Single-qubit `|+> = (|0> + |1>)/sqrt(2)`.
    pub fn ket_plus() -> Self {
        let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        StateVector {
            n: 1,
            amps: DVector::from_vec(vec![s, s]),
        }
    }

    /// Single-qubit `|-> = (|0> - |1>)/sqrt(2)`.
    pub fn ket_minus() -> Self {
        let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        StateVector {
            n: 1,
            amps: DVector::from_vec(vec![s, -s]),
        }
    }

    /// `|+>^{\u{2297}n}`.
    pub fn all_plus(n: usize) -> Result<Self> {
        check_register_size(n)?;
        let dim = 1 << n;
        let s = C64::new((dim as f64).sqrt().recip(), 0.0);
        Ok(StateVector {
            n,
            amps: DVector::from_element(dim, s),
        })
    }

    /// Tensor product of several states, first factor most significant.
    pub fn tensor(parts: &[StateVector]) -> Result<Self> {
        let n: usize = parts.iter().map(|p| p.n).sum();
        check_register_size(n)?;
        let mut amps = DVector::from_element(1, ONE);
        for p in parts {
            amps = amps.kronecker(&p.amps);
        }
        Ok(StateVector { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> C64 {
        self.amps[index]
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self.amps.dotc(&other.amps))
    }

    /// Fidelity `|<self|other>|^2`, invariant under global phases.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Applies a unitary operator; the result keeps norm 1 within 1e-10.
    pub fn apply(&self, op: &QOperator) -> Result<StateVector> {
        let full = op.embedded_matrix(self.n)?;
        let amps = &full * &self.amps;
        Ok(StateVector { n: self.n, amps })
    }

    /// Expectation value `<psi|obs|psi>` of a Hermitian observable.
    pub fn expectation(&self, obs: &QOperator) -> Result<f64> {
        self.to_density().expectation(obs)
    }

    /// `|psi><psi|` as a density matrix.
    pub fn to_density(&self) -> DensityMatrix {
        let mat = &self.amps * self.amps.adjoint();
        DensityMatrix {
            n: self.n,
            mat,
            deviation: false,
        }
    }

    /// Renormalizes in place; used after projective measurements.
    pub(crate) fn renormalize(&mut self) -> Result<()> {
        let norm = self.amps.norm();
        if norm < 1e-12 {
            return Err(Error::NotNormalized { norm });
        }
        self.amps /= C64::new(norm, 0.0);
        Ok(())
    }
}

/// A (possibly mixed) n-qubit state as a `2^n x 2^n` Hermitian matrix.
///
/// Deviation matrices from pseudopure NMR contexts carry a flag that
/// exempts them from the unit-trace requirement; Hermiticity is always
/// enforced.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    n: usize,
    mat: CMatrix,
    deviation: bool,
}

impl DensityMatrix {
    /// Builds a physical density matrix: Hermitian within 1e-10 and unit
    /// trace within 1e-10.
    pub fn new(mat: CMatrix) -> Result<Self> {
        Self::build(mat, false)
    }

    /// Builds a deviation matrix (Hermitian, trace unconstrained).
    pub fn new_deviation(mat: CMatrix) -> Result<Self> {
        Self::build(mat, true)
    }

    fn build(mat: CMatrix, deviation: bool) -> Result<Self> {
        let dim = mat.nrows();
        if dim != mat.ncols() {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: mat.ncols(),
            });
        }
        let n = dim.trailing_zeros() as usize;
        if dim == 0 || dim != 1 << n {
            return Err(Error::NotQubitSized { dim });
        }
        check_register_size(n)?;
        let herm = hermiticity_deviation(&mat);
        if herm > TOL_EXACT {
            return Err(Error::NotHermitian { dev: herm });
        }
        if !deviation {
            let trace = mat.trace();
            if (trace.re - 1.0).abs() > TOL_EXACT || trace.im.abs() > TOL_EXACT {
                return Err(Error::BadTrace { trace: trace.re });
            }
        }
        Ok(DensityMatrix { n, mat, deviation })
    }

    /// Maximally mixed state `I/2^n`.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_register_size(n)?;
        let dim = 1 << n;
        let mat = CMatrix::identity(dim, dim).map(|x| x / C64::new(dim as f64, 0.0));
        Ok(DensityMatrix {
            n,
            mat,
            deviation: false,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn is_deviation(&self) -> bool {
        self.deviation
    }

    pub fn trace(&self) -> C64 {
        self.mat.trace()
    }

    /// Purity `tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        (&self.mat * &self.mat).trace().re
    }

    /// Conjugates by a unitary: `rho -> U rho U^dagger`.
    pub fn apply(&self, op: &QOperator) -> Result<DensityMatrix> {
        let full = op.embedded_matrix(self.n)?;
        let mat = &full * &self.mat * full.adjoint();
        Ok(DensityMatrix {
            n: self.n,
            mat,
            deviation: self.deviation,
        })
    }

    /// `tr(rho * obs)` for a Hermitian observable; errors if the imaginary
    /// residue exceeds 1e-10, discards it otherwise.
    pub fn expectation(&self, obs: &QOperator) -> Result<f64> {
        let m = obs.embedded_matrix(self.n)?;
        let herm = hermiticity_deviation(&m);
        if herm > TOL_EXACT {
            return Err(Error::NotHermitian { dev: herm });
        }
        let val = (&self.mat * &m).trace();
        if val.im.abs() > TOL_EXACT {
            return Err(Error::ComplexExpectation { imag: val.im });
        }
        Ok(val.re)
    }

    /// Overlap `<psi|rho|psi>` with a pure state.
    pub fn overlap(&self, psi: &StateVector) -> Result<f64> {
        if psi.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: psi.dim(),
                right: self.dim(),
            });
        }
        let v = psi.amplitudes();
        let val = v.dotc(&(&self.mat * v));
        Ok(val.re)
    }

    /// Smallest eigenvalue; physical states satisfy `>= -1e-8`.
    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigenvalues(&self.mat)[0]
    }

    /// Populations of a given qubit, `(p0, p1)`.
    pub fn qubit_populations(&self, q: usize) -> Result<(f64, f64)> {
        check_qubit(q, self.n)?;
        let mut p0 = 0.0;
        let mut p1 = 0.0;
        for a in 0..self.dim() {
            let p = self.mat[(a, a)].re;
            if qubit_bit(a, q, self.n) == 0 {
                p0 += p;
            } else {
                p1 += p;
            }
        }
        Ok((p0, p1))
    }

    pub(crate) fn from_raw(n: usize, mat: CMatrix, deviation: bool) -> Self {
        DensityMatrix { n, mat, deviation }
    }

    pub(crate) fn matrix_mut(&mut self) -> &mut CMatrix {
        &mut self.mat
    }
}

/// Convenience: dense matrix of a pure-state projector `|psi><psi|`.
pub fn projector(psi: &StateVector) -> DMatrix<C64> {
    psi.amplitudes() * psi.amplitudes().adjoint()
}
