//! NMR gate constructions: the five-factor CNOT decomposition, the GHZ
//! preparation network and the local rotations onto the graph state.

use super::ensemble::EnsembleState;
use super::molecule::MoleculeSpec;
use crate::error::{Error, Result};
use crate::qcore::linalg::CMatrix;
use crate::qcore::operator::{identity2, pauli_x, pauli_z, rotation_matrix};
use crate::qcore::{Axis, QOperator, StateVector};

/// The J-coupling two-qubit gate `exp(-i (pi/4) sigma_z^(j) sigma_z^(k))`,
/// realizable by free evolution for `t = 1/(2 J_jk)` with refocusing.
pub fn zz_gate_matrix() -> CMatrix {
    let zz = pauli_z().kronecker(&pauli_z());
    CMatrix::from_fn(4, 4, |r, c| {
        if r == c {
            num_complex::Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4 * zz[(r, c)].re)
        } else {
            num_complex::Complex64::new(0.0, 0.0)
        }
    })
}

/// CNOT with control `j` and target `k`, decomposed into the pulse
/// sequence (leftmost applied first)
/// `R_{-z}^{(k)}(pi/2) - R_{-z}^{(j)}(pi/2) - R_{-x}^{(k)}(pi/2) -
///  exp(-i (pi/4) sz^(j) sz^(k)) - R_y^{(k)}(pi/2)`,
/// which equals the canonical CNOT up to a global phase.
pub fn cnot_decomposed(j: usize, k: usize, spec: &MoleculeSpec) -> Result<QOperator> {
    if j == k {
        return Err(Error::BadEdge {
            j,
            k,
            reason: "CNOT needs distinct control and target".into(),
        });
    }
    let n = spec.num_spins();
    if j == 0 || j > n || k == 0 || k > n {
        return Err(Error::QubitOutOfRange { q: j.max(k), n });
    }
    let half = std::f64::consts::FRAC_PI_2;
    // Factors in the local (j, k) two-qubit space, j most significant.
    let on_j = |m: CMatrix| m.kronecker(&identity2());
    let on_k = |m: CMatrix| identity2().kronecker(&m);
    let seq = [
        on_k(rotation_matrix(Axis::Z, -half)),
        on_j(rotation_matrix(Axis::Z, -half)),
        on_k(rotation_matrix(Axis::X, -half)),
        zz_gate_matrix(),
        on_k(rotation_matrix(Axis::Y, half)),
    ];
    let mut u = CMatrix::identity(4, 4);
    for factor in seq {
        u = factor * u;
    }
    QOperator::unitary(vec![j, k], u)
}

/// The canonical CNOT matrix (control most significant).
pub fn cnot_canonical() -> CMatrix {
    crate::mbqc::oracle::cnot_matrix()
}

/// The GHZ state this pipeline prepares: `(|0110> + |1001>)/sqrt(2)`.
///
/// This bit pattern (and not the `0101`/`1010` alternative) is the one
/// the local rotations of [`ghz_to_graph`] carry onto the graph state;
/// see the tests.
pub fn ghz_target() -> StateVector {
    let b1 = StateVector::from_bits("0110").unwrap();
    let b2 = StateVector::from_bits("1001").unwrap();
    let inv = num_complex::Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let amps: Vec<num_complex::Complex64> = b1
        .amplitudes()
        .iter()
        .zip(b2.amplitudes().iter())
        .map(|(a, b)| (a + b) * inv)
        .collect();
    StateVector::from_amplitudes(amps).unwrap()
}

/// Gate list of the GHZ preparation network acting on `|0000>`:
/// a pseudo-Hadamard on qubit 1, CNOTs fanning out to qubits 2..4, and
/// sigma_x flips bringing the branch pattern to `|0110> / |1001>`.
pub fn ghz_network(spec: &MoleculeSpec) -> Result<Vec<QOperator>> {
    if spec.num_spins() != 4 {
        return Err(Error::WrongSpinCount {
            op: "ghz_network",
            want: 4,
            got: spec.num_spins(),
        });
    }
    Ok(vec![
        QOperator::rotation(1, Axis::Y, std::f64::consts::FRAC_PI_2),
        cnot_decomposed(1, 2, spec)?,
        cnot_decomposed(1, 3, spec)?,
        cnot_decomposed(1, 4, spec)?,
        QOperator::single_unitary(2, pauli_x())?,
        QOperator::single_unitary(3, pauli_x())?,
    ])
}

/// Prepares the GHZ state from the pure ground state by the network of
/// [`ghz_network`]; output fidelity with [`ghz_target`] is 1 within 1e-10.
pub fn prepare_ghz(spec: &MoleculeSpec) -> Result<EnsembleState> {
    let mut state = EnsembleState::new(StateVector::basis_state(4, 0)?.to_density());
    for gate in ghz_network(spec)? {
        state = state.apply(&gate)?;
    }
    Ok(state)
}

/// The three local rotations taking the GHZ state onto the graph state:
/// `R_{-y}^{(1)}(pi/2) R_{-y}^{(3)}(pi/2) R_{-y}^{(4)}(pi/2)`.
pub fn graph_rotations() -> Vec<QOperator> {
    let half = std::f64::consts::FRAC_PI_2;
    vec![
        QOperator::rotation(1, Axis::Y, -half),
        QOperator::rotation(3, Axis::Y, -half),
        QOperator::rotation(4, Axis::Y, -half),
    ]
}

/// Applies [`graph_rotations`] to a 4-qubit ensemble state.
pub fn ghz_to_graph(state: &EnsembleState) -> Result<EnsembleState> {
    if state.num_qubits() != 4 {
        return Err(Error::WrongSpinCount {
            op: "ghz_to_graph",
            want: 4,
            got: state.num_qubits(),
        });
    }
    let mut out = state.clone();
    for rot in graph_rotations() {
        out = out.apply(&rot)?;
    }
    Ok(out)
}
