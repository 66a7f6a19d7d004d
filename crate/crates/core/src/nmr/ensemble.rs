//! Ensemble states, pseudopure initialization and free evolution under
//! the weak-coupling Hamiltonian.

use num_complex::Complex64 as C64;

use super::molecule::MoleculeSpec;
use crate::error::{Error, Result};
use crate::qcore::{qubit_bit, DensityMatrix, QOperator, StateVector};

/// A density matrix together with ensemble bookkeeping: a deviation flag
/// (inherited from the matrix) and the simulated wall-clock pulse time.
#[derive(Debug, Clone)]
pub struct EnsembleState {
    rho: DensityMatrix,
    elapsed_time: f64,
}

impl EnsembleState {
    pub fn new(rho: DensityMatrix) -> Self {
        EnsembleState {
            rho,
            elapsed_time: 0.0,
        }
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    pub fn into_rho(self) -> DensityMatrix {
        self.rho
    }

    pub fn is_deviation(&self) -> bool {
        self.rho.is_deviation()
    }

    /// Seconds of simulated pulse/evolution time accumulated so far.
    pub fn elapsed_time(&self) -> f64 {
        self.elapsed_time
    }

    pub fn num_qubits(&self) -> usize {
        self.rho.num_qubits()
    }

    /// Applies a unitary without advancing the clock.
    pub fn apply(&self, op: &QOperator) -> Result<EnsembleState> {
        Ok(EnsembleState {
            rho: self.rho.apply(op)?,
            elapsed_time: self.elapsed_time,
        })
    }

    pub(crate) fn replace_rho(&self, rho: DensityMatrix) -> EnsembleState {
        EnsembleState {
            rho,
            elapsed_time: self.elapsed_time,
        }
    }

    pub(crate) fn advance_clock(&mut self, dt: f64) {
        self.elapsed_time += dt;
    }
}

/// Pseudopure state `rho = (1 - eps) I/2^n + eps |0..0><0..0|`.
///
/// `eps = 1` gives the pure ground state. The spatial-averaging pulse
/// sequence that produces such states on a spectrometer is not simulated.
pub fn pseudopure_init(spec: &MoleculeSpec, epsilon: f64) -> Result<EnsembleState> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::BadPolarization(epsilon));
    }
    let n = spec.num_spins();
    let ground = StateVector::basis_state(n, 0)?.to_density();
    let mixed = DensityMatrix::maximally_mixed(n)?;
    let mat = mixed.matrix().map(|x| x * (1.0 - epsilon)) + ground.matrix().map(|x| x * epsilon);
    Ok(EnsembleState::new(DensityMatrix::new(mat)?))
}

/// Diagonal energies of the weak-coupling Hamiltonian
/// `H0 = sum_j omega_j I_z^(j) + 2 pi sum_{j<k} J_jk I_z^(j) I_z^(k)`
/// with `I_z = sigma_z / 2`, in rad/s per basis state.
pub fn hamiltonian_energies(spec: &MoleculeSpec) -> Vec<f64> {
    let n = spec.num_spins();
    let dim = 1usize << n;
    let zsign = |a: usize, q: usize| -> f64 {
        if qubit_bit(a, q, n) == 0 {
            1.0
        } else {
            -1.0
        }
    };
    (0..dim)
        .map(|a| {
            let mut e = 0.0;
            for q in 1..=n {
                e += spec.omega_of_qubit(q) * 0.5 * zsign(a, q);
            }
            for q1 in 1..=n {
                for q2 in (q1 + 1)..=n {
                    e += std::f64::consts::TAU
                        * spec.j_of_qubits(q1, q2)
                        * 0.25
                        * zsign(a, q1)
                        * zsign(a, q2);
                }
            }
            e
        })
        .collect()
}

/// Free evolution `rho -> exp(-i H0 t) rho exp(i H0 t)`; H0 is diagonal,
/// so this is an elementwise phase on the matrix entries.
pub fn free_evolution(state: &EnsembleState, spec: &MoleculeSpec, t: f64) -> Result<EnsembleState> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    if state.num_qubits() != spec.num_spins() {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: spec.num_spins(),
        });
    }
    let energies = hamiltonian_energies(spec);
    let mut rho = state.rho().clone();
    let dim = rho.dim();
    for a in 0..dim {
        for b in 0..dim {
            let phase = C64::from_polar(1.0, -(energies[a] - energies[b]) * t);
            rho.matrix_mut()[(a, b)] *= phase;
        }
    }
    let mut out = state.replace_rho(rho);
    out.advance_clock(t);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::linalg::{max_abs_diff, phase_aligned_distance, CMatrix};
    use crate::qcore::operator::pauli_z;
    use crate::qcore::Axis;

    fn one_spin(shift: f64) -> MoleculeSpec {
        MoleculeSpec::parse(&format!("[shifts]\nA = {shift}\n[jcouplings]\n")).unwrap()
    }

    fn two_spin_j(j: f64) -> MoleculeSpec {
        MoleculeSpec::parse(&format!("[shifts]\nA = 0\nB = 0\n[jcouplings]\nB = {j}\n")).unwrap()
    }

    #[test]
    fn full_polarization_is_the_ground_state() {
        let spec = MoleculeSpec::crotonic_acid();
        let state = pseudopure_init(&spec, 1.0).unwrap();
        let ground = StateVector::basis_state(4, 0).unwrap();
        assert!((state.rho().overlap(&ground).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn half_polarization_single_spin_diagonal() {
        let spec = one_spin(0.0);
        let state = pseudopure_init(&spec, 0.5).unwrap();
        let m = state.rho().matrix();
        assert!((m[(0, 0)].re - 0.75).abs() < 1e-12);
        assert!((m[(1, 1)].re - 0.25).abs() < 1e-12);
    }

    #[test]
    fn polarization_out_of_range_is_rejected() {
        let spec = one_spin(0.0);
        assert!(pseudopure_init(&spec, 0.0).is_err());
        assert!(pseudopure_init(&spec, 1.5).is_err());
    }

    #[test]
    fn zero_time_evolution_is_identity() {
        let spec = MoleculeSpec::crotonic_acid();
        let state = pseudopure_init(&spec, 0.7).unwrap();
        let out = free_evolution(&state, &spec, 0.0).unwrap();
        assert!(max_abs_diff(out.rho().matrix(), state.rho().matrix()) < 1e-15);
    }

    #[test]
    fn negative_time_is_rejected() {
        let spec = one_spin(100.0);
        let state = pseudopure_init(&spec, 1.0).unwrap();
        assert!(matches!(
            free_evolution(&state, &spec, -0.1),
            Err(Error::NegativeTime(_))
        ));
    }

    #[test]
    fn single_spin_precession_period() {
        // omega = 2 pi * 100 rad/s: |+><+| returns to itself at t = 10 ms.
        let spec = one_spin(100.0);
        let plus = EnsembleState::new(StateVector::ket_plus().to_density());
        let half = free_evolution(&plus, &spec, 0.005).unwrap();
        assert!(max_abs_diff(half.rho().matrix(), plus.rho().matrix()) > 0.5);
        let full = free_evolution(&plus, &spec, 0.010).unwrap();
        assert!(max_abs_diff(full.rho().matrix(), plus.rho().matrix()) < 1e-9);
    }

    #[test]
    fn j_coupling_evolution_reaches_the_zz_gate() {
        // Two spins, no shifts, J = 10 Hz: at t = 1/(2J) the propagator is
        // exp(-i (pi/4) sigma_z sigma_z) up to global phase.
        let spec = two_spin_j(10.0);
        let energies = hamiltonian_energies(&spec);
        let t = 1.0 / 20.0;
        let prop = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(
            energies
                .iter()
                .map(|e| C64::from_polar(1.0, -e * t))
                .collect(),
        ));
        let zz = pauli_z().kronecker(&pauli_z());
        let angle = std::f64::consts::FRAC_PI_4;
        let expect = CMatrix::from_fn(4, 4, |r, c| {
            if r == c {
                C64::from_polar(1.0, -angle * zz[(r, c)].re)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        assert!(phase_aligned_distance(&prop, &expect) < 1e-12);
    }

    #[test]
    fn evolution_preserves_spectrum_and_clock() {
        let spec = MoleculeSpec::crotonic_acid();
        let state = pseudopure_init(&spec, 1.0).unwrap();
        let rotated = state.apply(&QOperator::rotation(2, Axis::Y, 1.0)).unwrap();
        let out = free_evolution(&rotated, &spec, 0.003).unwrap();
        assert!((out.elapsed_time() - 0.003).abs() < 1e-15);
        assert!((out.rho().purity() - rotated.rho().purity()).abs() < 1e-10);
        assert!((out.rho().trace().re - 1.0).abs() < 1e-10);
    }
}
