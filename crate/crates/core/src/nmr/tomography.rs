//! Idealized state tomography: full Pauli-expectation readout and linear
//! reconstruction, with an optional additive noise knob.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::error::Result;
use crate::qcore::linalg::{kron_all, CMatrix, ZERO};
use crate::qcore::operator::{identity2, pauli_x, pauli_y, pauli_z};
use crate::qcore::{DensityMatrix, TOL_EXACT};

/// Dense matrix of a Pauli string; `digits` hold one of 0..=3 per qubit
/// (I, X, Y, Z), qubit 1 first.
pub fn pauli_string_matrix(digits: &[u8]) -> CMatrix {
    let mats: Vec<CMatrix> = digits
        .iter()
        .map(|d| match d {
            0 => identity2(),
            1 => pauli_x(),
            2 => pauli_y(),
            3 => pauli_z(),
            _ => unreachable!("pauli digit out of range"),
        })
        .collect();
    kron_all(&mats)
}

fn pauli_digits(n: usize, index: usize) -> Vec<u8> {
    let mut digits = vec![0u8; n];
    let mut rem = index;
    for d in digits.iter_mut().rev() {
        *d = (rem % 4) as u8;
        rem /= 4;
    }
    digits
}

/// All `4^n` Pauli-string expectation values `tr(rho P)`, in lexicographic
/// digit order (I < X < Y < Z, qubit 1 most significant).
pub fn pauli_expectations(rho: &DensityMatrix) -> Vec<f64> {
    let n = rho.num_qubits();
    (0..4usize.pow(n as u32))
        .map(|idx| {
            let p = pauli_string_matrix(&pauli_digits(n, idx));
            (rho.matrix() * p).trace().re
        })
        .collect()
}

/// Linear reconstruction `rho = (1/2^n) sum <P> P` from a list of Pauli
/// expectations in the order of [`pauli_expectations`].
pub fn reconstruct_from_expectations(n: usize, expectations: &[f64]) -> Result<DensityMatrix> {
    let dim = 1usize << n;
    let mut acc = CMatrix::from_element(dim, dim, ZERO);
    for (idx, &val) in expectations.iter().enumerate() {
        let p = pauli_string_matrix(&pauli_digits(n, idx));
        acc += p.map(|x| x * C64::new(val / dim as f64, 0.0));
    }
    // The sum of real multiples of Pauli strings is Hermitian by
    // construction; with noisy expectations the trace may drift off 1.
    let trace = acc.trace();
    if (trace.re - 1.0).abs() <= TOL_EXACT && trace.im.abs() <= TOL_EXACT {
        DensityMatrix::new(acc)
    } else {
        DensityMatrix::new_deviation(acc)
    }
}

/// Noiseless tomography round trip; equals the input within 1e-10.
pub fn tomography_reconstruct(rho: &DensityMatrix) -> Result<DensityMatrix> {
    reconstruct_from_expectations(rho.num_qubits(), &pauli_expectations(rho))
}

/// Tomography with additive i.i.d. Gaussian noise of standard deviation
/// `sigma` on every Pauli expectation.
pub fn tomography_reconstruct_noisy<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    sigma: f64,
    rng: &mut R,
) -> Result<DensityMatrix> {
    if sigma == 0.0 {
        return tomography_reconstruct(rho);
    }
    let normal = Normal::new(0.0, sigma).expect("sigma validated by caller");
    let noisy: Vec<f64> = pauli_expectations(rho)
        .into_iter()
        .map(|v| v + normal.sample(rng))
        .collect();
    reconstruct_from_expectations(rho.num_qubits(), &noisy)
}
