//! Spin relaxation: independent per-spin amplitude damping plus pure
//! dephasing, composed across spins.

use num_complex::Complex64 as C64;

use super::ensemble::EnsembleState;
use super::molecule::MoleculeSpec;
use crate::error::{Error, Result};
use crate::qcore::linalg::{CMatrix, ZERO};
use crate::qcore::operator::pauli_z;
use crate::qcore::QOperator;

/// Kraus operators of the single-spin relaxation channel over time `t`:
/// amplitude damping toward `|0>` at rate `1/T1` composed with pure
/// dephasing at rate `1/T2 - 1/(2 T1)`, so the off-diagonal decays as
/// `exp(-t/T2)`.
pub fn single_spin_kraus(t: f64, t1: f64, t2: f64, spin: usize) -> Result<Vec<CMatrix>> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let dephasing_rate = 1.0 / t2 - 1.0 / (2.0 * t1);
    if dephasing_rate < -1e-12 {
        return Err(Error::UnphysicalRelaxation {
            spin,
            t2,
            limit: 2.0 * t1,
        });
    }
    let gamma = 1.0 - (-t / t1).exp();
    let p = (1.0 - (-t * dephasing_rate.max(0.0)).exp()) / 2.0;

    let a0 = CMatrix::from_row_slice(
        2,
        2,
        &[
            C64::new(1.0, 0.0),
            ZERO,
            ZERO,
            C64::new((1.0 - gamma).sqrt(), 0.0),
        ],
    );
    let a1 = CMatrix::from_row_slice(2, 2, &[ZERO, C64::new(gamma.sqrt(), 0.0), ZERO, ZERO]);
    let keep = C64::new((1.0 - p).sqrt(), 0.0);
    let flip = C64::new(p.sqrt(), 0.0);
    Ok(vec![
        a0.map(|x| x * keep),
        a1.map(|x| x * keep),
        (pauli_z() * &a0).map(|x| x * flip),
        (pauli_z() * &a1).map(|x| x * flip),
    ])
}

/// Applies the product relaxation channel to every spin for a duration
/// `t`, advancing the ensemble clock. Trace is preserved; infinite
/// relaxation times leave the state untouched.
pub fn relaxation_channel(
    state: &EnsembleState,
    spec: &MoleculeSpec,
    t: f64,
) -> Result<EnsembleState> {
    if t < 0.0 {
        return Err(Error::NegativeTime(t));
    }
    let n = spec.num_spins();
    if state.num_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: n,
        });
    }
    let mut rho = state.rho().clone();
    for q in 1..=n {
        let kraus = single_spin_kraus(t, spec.t1_of_qubit(q), spec.t2_of_qubit(q), q)?;
        let dim = rho.dim();
        let mut acc = CMatrix::from_element(dim, dim, ZERO);
        for k in kraus {
            let embedded = QOperator::single(q, k)?.embedded_matrix(n)?;
            acc += &embedded * rho.matrix() * embedded.adjoint();
        }
        rho = crate::qcore::DensityMatrix::from_raw(n, acc, rho.is_deviation());
    }
    let mut out = state.replace_rho(rho);
    out.advance_clock(t);
    Ok(out)
}

/// Choi matrix of the single-spin channel, `sum_ij |i><j| (x) E(|i><j|)`.
/// Complete positivity means its eigenvalues are nonnegative.
pub fn single_spin_choi(t: f64, t1: f64, t2: f64) -> Result<CMatrix> {
    let kraus = single_spin_kraus(t, t1, t2, 0)?;
    let mut choi = CMatrix::from_element(4, 4, ZERO);
    for i in 0..2usize {
        for j in 0..2usize {
            let mut e = CMatrix::from_element(2, 2, ZERO);
            e[(i, j)] = C64::new(1.0, 0.0);
            let mut out = CMatrix::from_element(2, 2, ZERO);
            for k in &kraus {
                out += k * &e * k.adjoint();
            }
            for r in 0..2 {
                for c in 0..2 {
                    choi[(2 * i + r, 2 * j + c)] = out[(r, c)];
                }
            }
        }
    }
    Ok(choi)
}
