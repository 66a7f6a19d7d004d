//! Pulsed-field-gradient modeling: single gradient pulses, ensemble
//! dephasing averages, the refocused dephasing sequences that mimic
//! projective measurements, and the conditional feed-forward gates.

use num_complex::Complex64 as C64;

use super::ensemble::EnsembleState;
use super::molecule::MoleculeSpec;
use crate::error::{Error, Result};
use crate::mbqc::oracle::FeedForwardRule;
use crate::mbqc::MeasurementBasis;
use crate::qcore::linalg::{CMatrix, ZERO};
use crate::qcore::operator::{pauli_x, pauli_z, rotation_matrix};
use crate::qcore::{check_qubit, Axis, QOperator};

/// Number of shared gradient phases averaged in [`pz_sequence`]. The
/// accumulated coherence orders stay within [-16, 16] for four spins, so
/// 32 equally spaced phases cancel every nonzero order exactly.
const PZ_PHASE_SAMPLES: usize = 32;

/// `exp(-i phi F_z)` with `F_z = sum_j I_z^(j)` (homonuclear, one shared
/// gyromagnetic ratio), as a diagonal full-register unitary.
pub fn fz_phase_operator(phi: f64, n: usize) -> QOperator {
    let dim = 1usize << n;
    let mut m = CMatrix::from_element(dim, dim, ZERO);
    for a in 0..dim {
        let mz = n as f64 / 2.0 - a.count_ones() as f64;
        m[(a, a)] = C64::from_polar(1.0, -phi * mz);
    }
    QOperator::unitary((1..=n).collect(), m).expect("diagonal phases are unitary")
}

/// Applies a single gradient pulse `exp(-i phi F_z)`.
pub fn gradient_pulse(
    state: &EnsembleState,
    spec: &MoleculeSpec,
    phi: f64,
) -> Result<EnsembleState> {
    if state.num_qubits() != spec.num_spins() {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: spec.num_spins(),
        });
    }
    state.apply(&fz_phase_operator(phi, spec.num_spins()))
}

/// Ensemble average of [`gradient_pulse`] over `samples` phases uniform
/// on `[0, 2 pi)`, modeling spatial dephasing across the sample.
pub fn gradient_average(
    state: &EnsembleState,
    spec: &MoleculeSpec,
    samples: usize,
) -> Result<EnsembleState> {
    if samples == 0 {
        return Err(Error::BadSampleCount(samples));
    }
    let n = spec.num_spins();
    if state.num_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: n,
        });
    }
    let dim = 1usize << n;
    let mut acc = CMatrix::from_element(dim, dim, ZERO);
    for k in 0..samples {
        let phi = std::f64::consts::TAU * k as f64 / samples as f64;
        let pulsed = state.apply(&fz_phase_operator(phi, n))?;
        acc += pulsed.rho().matrix();
    }
    acc /= C64::new(samples as f64, 0.0);
    Ok(state.replace_rho(crate::qcore::DensityMatrix::from_raw(
        n,
        acc,
        state.is_deviation(),
    )))
}

/// Ideal gradient crusher: analytically zeroes every matrix element whose
/// bra and ket differ in total F_z quantum number (i.e. Hamming weight),
/// keeping only zero-order coherences. This is the exact limit of
/// [`gradient_average`].
pub fn gradient_crusher(state: &EnsembleState, spec: &MoleculeSpec) -> Result<EnsembleState> {
    let n = spec.num_spins();
    if state.num_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: n,
        });
    }
    let mut rho = state.rho().clone();
    let dim = rho.dim();
    for a in 0..dim {
        for b in 0..dim {
            if a.count_ones() != b.count_ones() {
                rho.matrix_mut()[(a, b)] = ZERO;
            }
        }
    }
    Ok(state.replace_rho(rho))
}

/// One item of a refocused gradient sequence.
enum SeqItem {
    Gradient,
    Rot { q: usize, angle: f64 },
}

fn pz_items(q: usize) -> Vec<SeqItem> {
    use SeqItem::{Gradient as G, Rot};
    let pi = std::f64::consts::PI;
    match q {
        // G1 - Ry2(pi) - Ry4(pi) - G1 - Ry3(pi) - Ry4(pi)
        //    - G1 - R-y2(pi) - R-y4(pi) - G1 - R-y3(pi) - R-y4(pi)
        1 => vec![
            G,
            Rot { q: 2, angle: pi },
            Rot { q: 4, angle: pi },
            G,
            Rot { q: 3, angle: pi },
            Rot { q: 4, angle: pi },
            G,
            Rot { q: 2, angle: -pi },
            Rot { q: 4, angle: -pi },
            G,
            Rot { q: 3, angle: -pi },
            Rot { q: 4, angle: -pi },
        ],
        // Ry3(pi) - Ry4(pi) - G2 - Ry1(pi) - Ry4(pi) - G2
        //    - R-y3(pi) - R-y4(pi) - G2 - R-y1(pi) - R-y4(pi) - G2
        2 => vec![
            Rot { q: 3, angle: pi },
            Rot { q: 4, angle: pi },
            G,
            Rot { q: 1, angle: pi },
            Rot { q: 4, angle: pi },
            G,
            Rot { q: 3, angle: -pi },
            Rot { q: 4, angle: -pi },
            G,
            Rot { q: 1, angle: -pi },
            Rot { q: 4, angle: -pi },
            G,
        ],
        _ => unreachable!("pz_sequence is defined for qubits 1 and 2 only"),
    }
}

/// The per-phase sequence unitaries whose uniform average realizes
/// [`pz_sequence`]. Each 16x16 matrix composes the literal pulse list
/// (leftmost applied first) with one shared gradient phase; exposing them
/// lets callers compare the averaged map against other channels.
pub fn pz_unitaries(spec: &MoleculeSpec, q: usize) -> Result<Vec<CMatrix>> {
    if q != 1 && q != 2 {
        return Err(Error::QubitOutOfRange { q, n: 2 });
    }
    let n = spec.num_spins();
    if n != 4 {
        return Err(Error::WrongSpinCount {
            op: "pz_sequence",
            want: 4,
            got: n,
        });
    }
    let items = pz_items(q);
    let dim = 1usize << n;
    // Rotation factors do not depend on the gradient phase.
    let fixed: Vec<Option<CMatrix>> = items
        .iter()
        .map(|item| match item {
            SeqItem::Gradient => None,
            SeqItem::Rot { q, angle } => Some(
                QOperator::rotation(*q, Axis::Y, *angle)
                    .embedded_matrix(n)
                    .expect("register size checked above"),
            ),
        })
        .collect();
    let mut out = Vec::with_capacity(PZ_PHASE_SAMPLES);
    for k in 0..PZ_PHASE_SAMPLES {
        let phi = std::f64::consts::TAU * k as f64 / PZ_PHASE_SAMPLES as f64;
        let grad = fz_phase_operator(phi, n).embedded_matrix(n)?;
        let mut u = CMatrix::identity(dim, dim);
        for factor in &fixed {
            u = match factor {
                Some(rot) => rot * u,
                None => &grad * u,
            };
        }
        out.push(u);
    }
    Ok(out)
}

/// The refocused gradient sequence dephasing qubit `q` of a four-spin
/// register (`q` must be 1 or 2, the two sequences given).
///
/// All four gradients share one spatial phase per ensemble member; the pi
/// pulses invert the other spins between gradients so their accumulated
/// phase cancels, and the net effect equals [`dephase_qubit`] on `q`.
/// The average runs over [`PZ_PHASE_SAMPLES`] shared phases, which cancels
/// the integer coherence orders exactly (well below the 1e-8 contract).
pub fn pz_sequence(state: &EnsembleState, spec: &MoleculeSpec, q: usize) -> Result<EnsembleState> {
    if state.num_qubits() != spec.num_spins() {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: spec.num_spins(),
        });
    }
    let unitaries = pz_unitaries(spec, q)?;
    let dim = state.rho().dim();
    let mut acc = CMatrix::from_element(dim, dim, ZERO);
    for u in &unitaries {
        acc += u * state.rho().matrix() * u.adjoint();
    }
    acc /= C64::new(unitaries.len() as f64, 0.0);
    Ok(state.replace_rho(crate::qcore::DensityMatrix::from_raw(
        state.num_qubits(),
        acc,
        state.is_deviation(),
    )))
}

/// Row-major superoperator of the channel `rho -> (1/K) sum U rho U^+`.
pub fn channel_superoperator(unitaries: &[CMatrix]) -> CMatrix {
    let dim = unitaries[0].nrows();
    let sdim = dim * dim;
    let mut s = CMatrix::from_element(sdim, sdim, ZERO);
    for u in unitaries {
        s += u.kronecker(&u.map(|x| x.conj()));
    }
    s /= C64::new(unitaries.len() as f64, 0.0);
    s
}

/// Row-major superoperator of [`dephase_qubit`] on an n-qubit register.
pub fn dephase_superoperator(q: usize, n: usize) -> CMatrix {
    let dim = 1usize << n;
    let sdim = dim * dim;
    let mut s = CMatrix::from_element(sdim, sdim, ZERO);
    for a in 0..dim {
        for b in 0..dim {
            if crate::qcore::qubit_bit(a, q, n) == crate::qcore::qubit_bit(b, q, n) {
                let idx = a * dim + b;
                s[(idx, idx)] = C64::new(1.0, 0.0);
            }
        }
    }
    s
}

/// Measurement mimicry: rotates the basis onto the z axis, then dephases
/// with [`pz_sequence`], leaving the outcomes labeled in the `|0>_q`
/// (s = 0) and `|1>_q` (s = 1) subspaces.
///
/// The literal pulse sequences cover `B1(0)`, `B1(pi)` and `B2(0)`; other
/// angles need `allow_general`, which prepends `R_{-z}(alpha)` to the
/// basis rotation.
pub fn mimic_measurement(
    state: &EnsembleState,
    spec: &MoleculeSpec,
    q: usize,
    basis: MeasurementBasis,
    allow_general: bool,
) -> Result<EnsembleState> {
    if q != 1 && q != 2 {
        return Err(Error::QubitOutOfRange { q, n: 2 });
    }
    let alpha = basis.alpha().rem_euclid(std::f64::consts::TAU);
    let half = std::f64::consts::FRAC_PI_2;
    let tol = 1e-12;
    let is_zero = alpha < tol || (std::f64::consts::TAU - alpha) < tol;
    let is_pi = (alpha - std::f64::consts::PI).abs() < tol;

    let pre: CMatrix = if is_zero {
        rotation_matrix(Axis::Y, -half)
    } else if is_pi && q == 1 {
        rotation_matrix(Axis::Y, half)
    } else if allow_general {
        rotation_matrix(Axis::Y, -half) * rotation_matrix(Axis::Z, -alpha)
    } else {
        return Err(Error::UnsupportedMimicBasis {
            alpha: basis.alpha(),
        });
    };
    let rotated = state.apply(&QOperator::single_unitary(q, pre)?)?;
    pz_sequence(&rotated, spec, q)
}

/// Controlled unitary: applies `target_op` to `tq` when the control qubit
/// `cq` is in the z-basis state `cval`.
pub fn controlled_on_z(cq: usize, cval: u8, tq: usize, target_op: CMatrix) -> Result<QOperator> {
    if cq == tq {
        return Err(Error::DuplicateQubit { q: cq });
    }
    let fire = |idx: usize| -> CMatrix {
        let mut p = CMatrix::from_element(2, 2, ZERO);
        p[(idx, idx)] = C64::new(1.0, 0.0);
        p
    };
    let active = fire(cval as usize).kronecker(&target_op);
    let idle = fire(1 - cval as usize).kronecker(&CMatrix::identity(2, 2));
    QOperator::unitary(vec![cq, tq], active + idle)
}

/// Conditional feed-forward on a measurement-mimicked ensemble state.
///
/// Implements the per-oracle corrections as controlled unitaries whose
/// controls are the subspace labels left on qubits 1 and 2: sigma_x on
/// qubit 3 fires when qubit 2 is `|A>`, sigma_z on qubit 3 fires when
/// qubit 1 is `|B>`, and sigma_z on qubit 4 always fires when qubit 1 is
/// `|1>`. The `(A, B)` polarities come from the rule's exponent offsets.
pub fn conditional_feed_forward(
    state: &EnsembleState,
    rule: &FeedForwardRule,
) -> Result<EnsembleState> {
    if state.num_qubits() != 4 {
        return Err(Error::WrongSpinCount {
            op: "conditional_feed_forward",
            want: 4,
            got: state.num_qubits(),
        });
    }
    let (a_pol, b_pol) = rule.control_polarities();
    let cx = controlled_on_z(2, a_pol, 3, pauli_x())?;
    let cz3 = controlled_on_z(1, b_pol, 3, pauli_z())?;
    let cz4 = controlled_on_z(1, 1, 4, pauli_z())?;
    state.apply(&cx)?.apply(&cz3)?.apply(&cz4)
}

/// Conditional block of a labeled state: the normalized sub-state of the
/// remaining qubits given that qubit `q` carries label `s`, together with
/// the label probability.
pub fn conditional_block(
    state: &EnsembleState,
    q: usize,
    s: u8,
) -> Result<(f64, crate::qcore::DensityMatrix)> {
    let n = state.num_qubits();
    check_qubit(q, n)?;
    let keep: Vec<usize> = (1..=n).filter(|&x| x != q).collect();
    let proj = {
        let mut p = CMatrix::from_element(2, 2, ZERO);
        p[(s as usize, s as usize)] = C64::new(1.0, 0.0);
        QOperator::single(q, p)?
    };
    let projected = state.rho().apply(&proj)?;
    let prob = projected.trace().re;
    if prob < 1e-12 {
        return Err(Error::ZeroProbabilityBranch { q, s });
    }
    let scaled = crate::qcore::DensityMatrix::from_raw(
        n,
        projected.matrix().map(|x| x / C64::new(prob, 0.0)),
        false,
    );
    Ok((prob, crate::qcore::partial_trace(&scaled, &keep)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mbqc::star_graph_state;
    use crate::nmr::gates::prepare_ghz;
    use crate::qcore::linalg::max_abs_diff;
    use crate::qcore::{dephase_qubit, StateVector};

    fn spec() -> MoleculeSpec {
        MoleculeSpec::crotonic_acid()
    }

    fn graph_ensemble() -> EnsembleState {
        EnsembleState::new(star_graph_state().to_density())
    }

    #[test]
    fn zero_quantum_states_survive_gradients() {
        let ghz = prepare_ghz(&spec()).unwrap();
        let crushed = gradient_crusher(&ghz, &spec()).unwrap();
        assert!(max_abs_diff(crushed.rho().matrix(), ghz.rho().matrix()) < 1e-10);
        let averaged = gradient_average(&ghz, &spec(), 256).unwrap();
        assert!(max_abs_diff(averaged.rho().matrix(), ghz.rho().matrix()) < 1e-10);
    }

    #[test]
    fn single_spin_plus_dephases_to_mixed() {
        let one = MoleculeSpec::parse("[shifts]\nA = 0\n[jcouplings]\n").unwrap();
        let plus = EnsembleState::new(StateVector::ket_plus().to_density());
        let out = gradient_average(&plus, &one, 64).unwrap();
        let mixed = crate::qcore::DensityMatrix::maximally_mixed(1).unwrap();
        assert!(max_abs_diff(out.rho().matrix(), mixed.matrix()) < 1e-12);
    }

    #[test]
    fn analytic_and_sampled_averaging_agree() {
        let state = graph_ensemble();
        let sampled = gradient_average(&state, &spec(), 256).unwrap();
        let analytic = gradient_crusher(&state, &spec()).unwrap();
        assert!(max_abs_diff(sampled.rho().matrix(), analytic.rho().matrix()) < 1e-8);
    }

    #[test]
    fn crusher_is_an_idempotent_trace_preserving_projection() {
        let state = graph_ensemble();
        let once = gradient_crusher(&state, &spec()).unwrap();
        let twice = gradient_crusher(&once, &spec()).unwrap();
        assert!(max_abs_diff(once.rho().matrix(), twice.rho().matrix()) < 1e-15);
        assert!((once.rho().trace().re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pz_sequences_equal_single_qubit_dephasing_on_the_graph_state() {
        let state = graph_ensemble();
        for q in [1usize, 2usize] {
            let seq = pz_sequence(&state, &spec(), q).unwrap();
            let direct = dephase_qubit(state.rho(), q).unwrap();
            assert!(
                max_abs_diff(seq.rho().matrix(), direct.matrix()) < 1e-8,
                "qubit {q}"
            );
        }
    }

    #[test]
    fn pz_sequences_equal_dephasing_as_channels() {
        // Superoperator comparison: entry (cd),(ab) is the coefficient of
        // the channel output at (c,d) for the elementary input |a><b|, so
        // a max-entry bound is exactly the complete-operator-basis bound.
        let molecule = spec();
        for q in [1usize, 2usize] {
            let s_pz = channel_superoperator(&pz_unitaries(&molecule, q).unwrap());
            let s_deph = dephase_superoperator(q, 4);
            let dev = max_abs_diff(&s_pz, &s_deph);
            assert!(dev < 1e-8, "qubit {q}: {dev:.2e}");
        }
    }

    #[test]
    fn pz_spot_checks_on_elementary_inputs() {
        let molecule = spec();
        for q in [1usize, 2usize] {
            for (a, b) in [(0usize, 8usize), (3, 5), (6, 6), (9, 1)] {
                let mut m = CMatrix::from_element(16, 16, ZERO);
                m[(a, b)] = C64::new(0.5, 0.3);
                m[(b, a)] = C64::new(0.5, -0.3);
                let input = crate::qcore::DensityMatrix::from_raw(4, m, true);
                let state = EnsembleState::new(input.clone());
                let seq = pz_sequence(&state, &molecule, q).unwrap();
                let direct = dephase_qubit(&input, q).unwrap();
                let dev = max_abs_diff(seq.rho().matrix(), direct.matrix());
                assert!(dev < 1e-8, "qubit {q}, element ({a},{b}): {dev:.2e}");
            }
        }
    }

    #[test]
    fn refocused_spins_keep_their_coherences() {
        // pz on qubit 1 must leave a coherence living on qubits 2..4
        // untouched (and vice versa for qubit 2).
        let molecule = spec();
        let psi = StateVector::tensor(&[
            StateVector::ket0(),
            StateVector::ket_plus(),
            StateVector::ket_plus(),
            StateVector::ket_plus(),
        ])
        .unwrap();
        let state = EnsembleState::new(psi.to_density());
        let out = pz_sequence(&state, &molecule, 1).unwrap();
        assert!(max_abs_diff(out.rho().matrix(), state.rho().matrix()) < 1e-8);
    }

    #[test]
    fn diagonal_inputs_pass_through_pz() {
        let molecule = spec();
        let mut m = CMatrix::from_element(16, 16, ZERO);
        m[(3, 3)] = C64::new(0.25, 0.0);
        m[(5, 5)] = C64::new(0.75, 0.0);
        let state = EnsembleState::new(crate::qcore::DensityMatrix::from_raw(4, m, false));
        for q in [1, 2] {
            let out = pz_sequence(&state, &molecule, q).unwrap();
            assert!(max_abs_diff(out.rho().matrix(), state.rho().matrix()) < 1e-10);
        }
    }

    #[test]
    fn pz_rejects_other_qubits() {
        assert!(pz_sequence(&graph_ensemble(), &spec(), 3).is_err());
    }

    #[test]
    fn mimic_b0_on_graph_state_gives_even_populations() {
        let out = mimic_measurement(
            &graph_ensemble(),
            &spec(),
            1,
            MeasurementBasis::new(0.0),
            false,
        )
        .unwrap();
        let (p0, p1) = out.rho().qubit_populations(1).unwrap();
        assert!((p0 - 0.5).abs() < 1e-9);
        assert!((p1 - 0.5).abs() < 1e-9);
    }

    #[test]
    fn mimic_on_basis_eigenstate_fills_one_subspace() {
        let psi = StateVector::tensor(&[
            StateVector::ket_plus(),
            StateVector::ket0(),
            StateVector::ket0(),
            StateVector::ket0(),
        ])
        .unwrap();
        let state = EnsembleState::new(psi.to_density());
        let out = mimic_measurement(&state, &spec(), 1, MeasurementBasis::new(0.0), false).unwrap();
        let (p0, p1) = out.rho().qubit_populations(1).unwrap();
        assert!((p0 - 1.0).abs() < 1e-10);
        assert!(p1.abs() < 1e-10);
    }

    #[test]
    fn mimic_conditional_blocks_match_forced_projective_branches() {
        use crate::mbqc::{measure_xy, MeasurementBasis};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let psi = star_graph_state();
        let state = EnsembleState::new(psi.to_density());
        let mimicked =
            mimic_measurement(&state, &spec(), 1, MeasurementBasis::new(0.0), false).unwrap();
        for s in 0..2u8 {
            let (prob, block) = conditional_block(&mimicked, 1, s).unwrap();
            let (rec, post) =
                measure_xy(&psi, 1, MeasurementBasis::new(0.0), Some(s), &mut rng).unwrap();
            assert!((prob - rec.probability).abs() < 1e-9);
            let projected = crate::qcore::partial_trace(&post.to_density(), &[2, 3, 4]).unwrap();
            assert!(max_abs_diff(block.matrix(), projected.matrix()) < 1e-8);
        }
    }

    #[test]
    fn unsupported_basis_needs_the_extension_flag() {
        let state = graph_ensemble();
        let odd = MeasurementBasis::new(0.7);
        assert!(matches!(
            mimic_measurement(&state, &spec(), 1, odd, false),
            Err(Error::UnsupportedMimicBasis { .. })
        ));
        assert!(mimic_measurement(&state, &spec(), 1, odd, true).is_ok());
    }

    #[test]
    fn general_angle_mimicry_matches_the_branch_mixture() {
        // With the extension flag, the mimicked state for B1(alpha) equals
        // the probability-weighted mixture of relabeled projective
        // branches.
        use crate::mbqc::measure_xy;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let alpha = 1.1;
        let psi = star_graph_state();
        let state = EnsembleState::new(psi.to_density());
        let mimicked =
            mimic_measurement(&state, &spec(), 1, MeasurementBasis::new(alpha), true).unwrap();
        for s in 0..2u8 {
            let (prob, block) = conditional_block(&mimicked, 1, s).unwrap();
            let (rec, post) =
                measure_xy(&psi, 1, MeasurementBasis::new(alpha), Some(s), &mut rng).unwrap();
            assert!((prob - rec.probability).abs() < 1e-9);
            let projected = crate::qcore::partial_trace(&post.to_density(), &[2, 3, 4]).unwrap();
            assert!(max_abs_diff(block.matrix(), projected.matrix()) < 1e-8);
        }
    }

    #[test]
    fn general_angle_mimicry_works_on_qubit_two_as_well() {
        use crate::mbqc::measure_xy;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let alpha = 2.3;
        let psi = star_graph_state();
        let state = EnsembleState::new(psi.to_density());
        let mimicked =
            mimic_measurement(&state, &spec(), 2, MeasurementBasis::new(alpha), true).unwrap();
        for s in 0..2u8 {
            let (prob, block) = conditional_block(&mimicked, 2, s).unwrap();
            let (rec, post) =
                measure_xy(&psi, 2, MeasurementBasis::new(alpha), Some(s), &mut rng).unwrap();
            assert!((prob - rec.probability).abs() < 1e-9);
            let projected = crate::qcore::partial_trace(&post.to_density(), &[1, 3, 4]).unwrap();
            assert!(max_abs_diff(block.matrix(), projected.matrix()) < 1e-8);
        }
    }

    #[test]
    fn controlled_unitaries_respect_polarity() {
        let c = controlled_on_z(1, 0, 2, pauli_x()).unwrap();
        let s00 = StateVector::from_bits("00").unwrap();
        let out = s00.apply(&c).unwrap();
        let expect = StateVector::from_bits("01").unwrap();
        assert!((out.fidelity(&expect).unwrap() - 1.0).abs() < 1e-12);
        let s10 = StateVector::from_bits("10").unwrap();
        let out = s10.apply(&c).unwrap();
        assert!((out.fidelity(&s10).unwrap() - 1.0).abs() < 1e-12);
    }
}
