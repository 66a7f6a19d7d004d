//! Non-unitary primitives: partial trace and single-qubit dephasing.

use num_complex::Complex64 as C64;

use super::linalg::{CMatrix, ZERO};
use super::state::DensityMatrix;
use super::{check_qubit, qubit_bit};
use crate::error::{Error, Result};

/// Reduced density matrix on the kept qubits (ascending order of the
/// original indices, significance preserved). The trace is preserved.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.num_qubits();
    if keep.is_empty() {
        return Err(Error::EmptyKeepList);
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() {
        return Err(Error::DuplicateQubit {
            q: keep
                .iter()
                .find(|&&q| keep.iter().filter(|&&p| p == q).count() > 1)
                .copied()
                .unwrap_or(0),
        });
    }
    for &q in &kept {
        check_qubit(q, n)?;
    }
    let traced: Vec<usize> = (1..=n).filter(|q| !kept.contains(q)).collect();
    let k = kept.len();
    let m = traced.len();
    let dim_out = 1 << k;

    // Compose a full basis index from the kept-part and traced-part bits.
    let compose = |kept_idx: usize, traced_idx: usize| -> usize {
        let mut a = 0usize;
        for (i, &q) in kept.iter().enumerate() {
            if (kept_idx >> (k - 1 - i)) & 1 == 1 {
                a |= 1 << (n - q);
            }
        }
        for (i, &q) in traced.iter().enumerate() {
            if (traced_idx >> (m - 1 - i)) & 1 == 1 {
                a |= 1 << (n - q);
            }
        }
        a
    };

    let mut out = CMatrix::from_element(dim_out, dim_out, ZERO);
    for ia in 0..dim_out {
        for ib in 0..dim_out {
            let mut sum = C64::new(0.0, 0.0);
            for t in 0..(1 << m) {
                sum += rho.matrix()[(compose(ia, t), compose(ib, t))];
            }
            out[(ia, ib)] = sum;
        }
    }
    Ok(DensityMatrix::from_raw(k, out, rho.is_deviation()))
}

/// Zeroes every matrix element connecting the `|0>_q` and `|1>_q`
/// subspaces, leaving the block form
/// `|0><0|_q rho_00 + |1><1|_q rho_11`. Idempotent by construction.
pub fn dephase_qubit(rho: &DensityMatrix, q: usize) -> Result<DensityMatrix> {
    let n = rho.num_qubits();
    check_qubit(q, n)?;
    let mut out = rho.clone();
    let dim = rho.dim();
    for a in 0..dim {
        for b in 0..dim {
            if qubit_bit(a, q, n) != qubit_bit(b, q, n) {
                out.matrix_mut()[(a, b)] = ZERO;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::linalg::max_abs_diff;
    use crate::qcore::operator::{Axis, QOperator};
    use crate::qcore::state::StateVector;

    fn bell() -> DensityMatrix {
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        StateVector::from_amplitudes(vec![C64::new(inv, 0.0), ZERO, ZERO, C64::new(inv, 0.0)])
            .unwrap()
            .to_density()
    }

    #[test]
    fn trace_out_second_qubit_of_product_state() {
        let psi = StateVector::tensor(&[StateVector::ket0(), StateVector::ket_plus()]).unwrap();
        let red = partial_trace(&psi.to_density(), &[1]).unwrap();
        let expect = StateVector::ket0().to_density();
        assert!(max_abs_diff(red.matrix(), expect.matrix()) < 1e-12);
    }

    #[test]
    fn trace_out_half_of_bell_pair_gives_mixed() {
        let red = partial_trace(&bell(), &[2]).unwrap();
        let mixed = DensityMatrix::maximally_mixed(1).unwrap();
        assert!(max_abs_diff(red.matrix(), mixed.matrix()) < 1e-12);
    }

    #[test]
    fn keeping_all_qubits_is_identity() {
        let rho = bell();
        let red = partial_trace(&rho, &[1, 2]).unwrap();
        assert!(max_abs_diff(red.matrix(), rho.matrix()) < 1e-15);
    }

    #[test]
    fn empty_keep_list_is_an_error() {
        assert!(matches!(
            partial_trace(&bell(), &[]),
            Err(Error::EmptyKeepList)
        ));
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let psi = StateVector::all_plus(3)
            .unwrap()
            .apply(&QOperator::rotation(2, Axis::X, 0.9))
            .unwrap();
        let red = partial_trace(&psi.to_density(), &[1, 3]).unwrap();
        assert!((red.trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dephasing_plus_gives_maximally_mixed() {
        let rho = StateVector::ket_plus().to_density();
        let out = dephase_qubit(&rho, 1).unwrap();
        let mixed = DensityMatrix::maximally_mixed(1).unwrap();
        assert!(max_abs_diff(out.matrix(), mixed.matrix()) < 1e-12);
    }

    #[test]
    fn dephasing_basis_state_is_identity() {
        let rho = StateVector::ket0().to_density();
        let out = dephase_qubit(&rho, 1).unwrap();
        assert!(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
    }

    #[test]
    fn dephasing_splits_entangled_branches() {
        // |Phi> = (|0>|phi0> + |1>|phi1>)/norm dephases on qubit 1 to the
        // classical mixture of the two branches.
        let phi0 = StateVector::ket_plus();
        let phi1 = StateVector::ket1();
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        let mut amps = vec![ZERO; 4];
        for (i, a) in phi0.amplitudes().iter().enumerate() {
            amps[i] = a * C64::new(inv, 0.0);
        }
        for (i, a) in phi1.amplitudes().iter().enumerate() {
            amps[2 + i] = a * C64::new(inv, 0.0);
        }
        let rho = StateVector::from_amplitudes(amps).unwrap().to_density();
        let out = dephase_qubit(&rho, 1).unwrap();

        let mut expect = CMatrix::from_element(4, 4, ZERO);
        let b0 = phi0.to_density();
        let b1 = phi1.to_density();
        for i in 0..2 {
            for j in 0..2 {
                expect[(i, j)] = b0.matrix()[(i, j)] * 0.5;
                expect[(2 + i, 2 + j)] = b1.matrix()[(i, j)] * 0.5;
            }
        }
        assert!(max_abs_diff(out.matrix(), &expect) < 1e-12);
    }

    #[test]
    fn dephasing_is_idempotent() {
        let psi = StateVector::all_plus(2)
            .unwrap()
            .apply(&QOperator::rotation(1, Axis::X, 0.7))
            .unwrap();
        let rho = psi.to_density();
        let once = dephase_qubit(&rho, 1).unwrap();
        let twice = dephase_qubit(&once, 1).unwrap();
        assert!(max_abs_diff(once.matrix(), twice.matrix()) < 1e-15);
    }

    #[test]
    fn dephasing_equals_z_phase_average() {
        // Averaging exp(-i phi sigma_z/2) over 64 uniform phases must equal
        // the analytic dephasing to well below 1e-8.
        let psi = StateVector::all_plus(2)
            .unwrap()
            .apply(&QOperator::rotation(2, Axis::Y, 1.1))
            .unwrap();
        let rho = psi.to_density();
        for q in 1..=2 {
            let mut acc = CMatrix::from_element(4, 4, ZERO);
            let samples = 64;
            for k in 0..samples {
                let phi = 2.0 * std::f64::consts::PI * (k as f64) / (samples as f64);
                let u = QOperator::rotation(q, Axis::Z, phi);
                acc += rho.apply(&u).unwrap().matrix();
            }
            acc /= C64::new(samples as f64, 0.0);
            let direct = dephase_qubit(&rho, q).unwrap();
            assert!(max_abs_diff(&acc, direct.matrix()) < 1e-8);
        }
    }

    #[test]
    fn invalid_qubit_index_rejected() {
        assert!(matches!(
            dephase_qubit(&bell(), 3),
            Err(Error::QubitOutOfRange { .. })
        ));
    }
}
