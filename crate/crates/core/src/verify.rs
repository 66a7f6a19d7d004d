//! The invariant suite behind `--mode verify`: every module-level
//! invariant is exercised as a named check with a pass/fail result.

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::mbqc::logical::corrected_logical_map;
use crate::mbqc::oracle::{oracle_unitary, FeedForwardRule, OracleId};
use crate::mbqc::{
    build_entangler, run_dj, star_graph_state, star_graph_state_reference, Graph, MeasurementBasis,
    Verdict,
};
use crate::nmr::gates::{ghz_target, prepare_ghz};
use crate::nmr::gradient::{
    channel_superoperator, dephase_superoperator, gradient_crusher, pz_unitaries,
};
use crate::nmr::metrics::{correlation_attenuated, fidelity_normalized, witness_value};
use crate::nmr::pipeline::{branch_average_projective, dj_ensemble};
use crate::nmr::relax::single_spin_choi;
use crate::nmr::{ghz_to_graph, EnsembleState, MoleculeSpec};
use crate::qcore::linalg::{
    hermitian_eigenvalues, max_abs_diff, phase_aligned_distance, unitarity_deviation, CMatrix, ZERO,
};
use crate::qcore::{dephase_qubit, partial_trace, Axis, DensityMatrix, QOperator, StateVector};

type CheckFn = fn() -> Result<(), String>;

/// Outcome of one named invariant check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> StateVector {
    let dim = 1usize << n;
    let amps: Vec<C64> = (0..dim)
        .map(|_| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    StateVector::from_amplitudes(amps.into_iter().map(|a| a / norm).collect()).unwrap()
}

fn random_rotation(rng: &mut ChaCha8Rng, n: usize) -> QOperator {
    let q = rng.random_range(1..=n);
    let axis = match rng.random_range(0..3) {
        0 => Axis::X,
        1 => Axis::Y,
        _ => Axis::Z,
    };
    QOperator::rotation(q, axis, rng.random_range(-3.0..3.0))
}

fn check_unitary_preserves_norm_and_spectrum() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..20 {
        let psi = random_state(&mut rng, 3);
        let u = random_rotation(&mut rng, 3);
        let out = psi.apply(&u).map_err(|e| e.to_string())?;
        ensure((out.norm() - 1.0).abs() < 1e-10, "norm drift")?;

        let rho = psi.to_density();
        let evolved = rho.apply(&u).map_err(|e| e.to_string())?;
        let before = hermitian_eigenvalues(rho.matrix());
        let after = hermitian_eigenvalues(evolved.matrix());
        let dev = before
            .iter()
            .zip(after.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        ensure(dev < 1e-10, format!("eigenvalue drift {dev:.2e}"))?;
    }
    Ok(())
}

fn check_dephase_idempotent() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..10 {
        let rho = random_state(&mut rng, 3).to_density();
        for q in 1..=3 {
            let once = dephase_qubit(&rho, q).map_err(|e| e.to_string())?;
            let twice = dephase_qubit(&once, q).map_err(|e| e.to_string())?;
            ensure(
                max_abs_diff(once.matrix(), twice.matrix()) == 0.0,
                "dephasing not exactly idempotent",
            )?;
        }
    }
    Ok(())
}

fn check_dephase_equals_phase_average() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let rho = random_state(&mut rng, 2).to_density();
    for q in 1..=2 {
        let samples = 64;
        let mut acc = CMatrix::from_element(4, 4, ZERO);
        for k in 0..samples {
            let phi = std::f64::consts::TAU * k as f64 / samples as f64;
            let u = QOperator::rotation(q, Axis::Z, phi);
            acc += rho.apply(&u).map_err(|e| e.to_string())?.matrix();
        }
        acc /= C64::new(samples as f64, 0.0);
        let direct = dephase_qubit(&rho, q).map_err(|e| e.to_string())?;
        let dev = max_abs_diff(&acc, direct.matrix());
        ensure(dev < 1e-8, format!("qubit {q}: deviation {dev:.2e}"))?;
    }
    Ok(())
}

fn check_partial_trace_identity() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let rho = random_state(&mut rng, 3).to_density();
    let kept = partial_trace(&rho, &[1, 2, 3]).map_err(|e| e.to_string())?;
    ensure(
        max_abs_diff(kept.matrix(), rho.matrix()) < 1e-14,
        "keeping all qubits changed the state",
    )
}

fn check_embed_disjoint_commute() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..10 {
        let a = QOperator::rotation(1, Axis::X, rng.random_range(-3.0..3.0))
            .embedded_matrix(3)
            .map_err(|e| e.to_string())?;
        let b = QOperator::rotation(3, Axis::Y, rng.random_range(-3.0..3.0))
            .embedded_matrix(3)
            .map_err(|e| e.to_string())?;
        ensure(
            max_abs_diff(&(&a * &b), &(&b * &a)) < 1e-12,
            "disjoint embeddings do not commute",
        )?;
    }
    Ok(())
}

fn check_graph_state_anchor() -> Result<(), String> {
    let fid = star_graph_state()
        .fidelity(&star_graph_state_reference())
        .map_err(|e| e.to_string())?;
    ensure((fid - 1.0).abs() < 1e-10, format!("anchor fidelity {fid}"))
}

fn check_dj_deterministic() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for oracle in OracleId::ALL {
        for s1 in 0..2u8 {
            for s2 in 0..2u8 {
                let out = run_dj(oracle, Some((s1, s2)), &mut rng).map_err(|e| e.to_string())?;
                let expect = if oracle.is_constant() { 1.0 } else { -1.0 };
                ensure(
                    (out.control_qubit_sx - expect).abs() < 1e-9,
                    format!("{oracle} ({s1},{s2}): sx4 = {}", out.control_qubit_sx),
                )?;
                let want = if oracle.is_constant() {
                    Verdict::Constant
                } else {
                    Verdict::Balanced
                };
                ensure(out.verdict == want, format!("{oracle} verdict"))?;
            }
        }
    }
    Ok(())
}

fn check_branch_probabilities() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for oracle in OracleId::ALL {
        for s1 in 0..2u8 {
            for s2 in 0..2u8 {
                let out = run_dj(oracle, Some((s1, s2)), &mut rng).map_err(|e| e.to_string())?;
                for rec in &out.records {
                    ensure(
                        (rec.probability - 0.5).abs() < 1e-10,
                        format!("branch probability {}", rec.probability),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn check_stabilizer_invariance() -> Result<(), String> {
    let rho = star_graph_state().to_density();
    let s = build_entangler(&Graph::star4()).map_err(|e| e.to_string())?;
    for j in 1..=4 {
        let xj = QOperator::x(j)
            .embedded_matrix(4)
            .map_err(|e| e.to_string())?;
        let k = s.matrix() * xj * s.matrix().adjoint();
        let op = QOperator::unitary((1..=4).collect(), k).map_err(|e| e.to_string())?;
        let conj = rho.apply(&op).map_err(|e| e.to_string())?;
        ensure(
            max_abs_diff(conj.matrix(), rho.matrix()) < 1e-10,
            format!("vertex {j} stabilizer broken"),
        )?;
    }
    Ok(())
}

fn check_oracles() -> Result<(), String> {
    let plus2 = StateVector::tensor(&[StateVector::ket_plus(), StateVector::ket_plus()])
        .map_err(|e| e.to_string())?;
    for oracle in OracleId::ALL {
        let u = oracle_unitary(oracle);
        ensure(
            unitarity_deviation(u.matrix()) < 1e-12,
            format!("{oracle} not unitary"),
        )?;
        let sx = plus2
            .apply(&u)
            .and_then(|s| s.expectation(&QOperator::x(1)))
            .map_err(|e| e.to_string())?;
        let expect = if oracle.is_constant() { 1.0 } else { -1.0 };
        ensure(
            (sx - expect).abs() < 1e-12,
            format!("{oracle} circuit verdict"),
        )?;
    }
    Ok(())
}

fn check_logical_map_unitary_grid() -> Result<(), String> {
    let step = std::f64::consts::TAU / 8.0;
    for i in 0..8 {
        for j in 0..8 {
            for s1 in 0..2u8 {
                for s2 in 0..2u8 {
                    let m =
                        crate::mbqc::extract_logical_map(i as f64 * step, j as f64 * step, s1, s2)
                            .map_err(|e| e.to_string())?;
                    let dev = unitarity_deviation(&m);
                    ensure(
                        dev < 1e-10,
                        format!("grid ({i},{j}) branch ({s1},{s2}): {dev:.2e}"),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn check_logical_map_correctable_grid() -> Result<(), String> {
    let rule = FeedForwardRule::for_oracle(OracleId::F2);
    let step = std::f64::consts::TAU / 8.0;
    let mut worst = 0.0f64;
    for i in 0..8 {
        for j in 0..8 {
            let a1 = i as f64 * step;
            let a2 = j as f64 * step;
            let base = corrected_logical_map(a1, a2, 0, 0, &rule).map_err(|e| e.to_string())?;
            for s1 in 0..2u8 {
                for s2 in 0..2u8 {
                    let m =
                        corrected_logical_map(a1, a2, s1, s2, &rule).map_err(|e| e.to_string())?;
                    worst = worst.max(phase_aligned_distance(&m, &base));
                }
            }
        }
    }
    ensure(worst < 1e-10, format!("worst branch distance {worst:.2e}"))
}

fn check_eq2_cnot_all_pairs() -> Result<(), String> {
    let spec = MoleculeSpec::crotonic_acid();
    for j in 1..=4usize {
        for k in 1..=4usize {
            if j == k {
                continue;
            }
            let dec = crate::nmr::cnot_decomposed(j, k, &spec).map_err(|e| e.to_string())?;
            let dist = phase_aligned_distance(dec.matrix(), &crate::nmr::gates::cnot_canonical());
            ensure(dist < 1e-10, format!("pair ({j},{k}): {dist:.2e}"))?;
        }
    }
    Ok(())
}

fn check_pz_equals_dephase() -> Result<(), String> {
    let spec = MoleculeSpec::crotonic_acid();
    for q in [1usize, 2usize] {
        let s_pz = channel_superoperator(&pz_unitaries(&spec, q).map_err(|e| e.to_string())?);
        let dev = max_abs_diff(&s_pz, &dephase_superoperator(q, 4));
        ensure(dev < 1e-8, format!("qubit {q}: {dev:.2e}"))?;
    }
    Ok(())
}

fn check_ensemble_equals_branch_average() -> Result<(), String> {
    let spec = MoleculeSpec::crotonic_acid();
    for oracle in OracleId::ALL {
        let ens = dj_ensemble(&spec, oracle, 1.0, None).map_err(|e| e.to_string())?;
        let avg = branch_average_projective(oracle).map_err(|e| e.to_string())?;
        let red_ens = partial_trace(ens.final_state.rho(), &[4]).map_err(|e| e.to_string())?;
        let red_avg = partial_trace(&avg, &[4]).map_err(|e| e.to_string())?;
        let dev = max_abs_diff(red_ens.matrix(), red_avg.matrix());
        ensure(dev < 1e-9, format!("{oracle}: qubit-4 deviation {dev:.2e}"))?;
        let full = max_abs_diff(ens.final_state.rho().matrix(), avg.matrix());
        ensure(
            full < 1e-9,
            format!("{oracle}: full-state deviation {full:.2e}"),
        )?;
    }
    Ok(())
}

fn check_gradient_projection() -> Result<(), String> {
    let spec = MoleculeSpec::crotonic_acid();
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let state = EnsembleState::new(random_state(&mut rng, 4).to_density());
    let once = gradient_crusher(&state, &spec).map_err(|e| e.to_string())?;
    let twice = gradient_crusher(&once, &spec).map_err(|e| e.to_string())?;
    ensure(
        max_abs_diff(once.rho().matrix(), twice.rho().matrix()) == 0.0,
        "crusher not idempotent",
    )?;
    ensure(
        (once.rho().trace().re - 1.0).abs() < 1e-12,
        "crusher not trace preserving",
    )
}

fn check_relaxation_cptp() -> Result<(), String> {
    for (t1, t2, t) in [
        (12.37, 0.3762, 0.02),
        (4.89, 0.5067, 0.1),
        (4.13, 0.5665, 1.0),
        (4.96, 0.5445, 0.4),
    ] {
        let choi = single_spin_choi(t, t1, t2).map_err(|e| e.to_string())?;
        let min = hermitian_eigenvalues(&choi)[0];
        ensure(
            min > -1e-10,
            format!("Choi eigenvalue {min:.2e} for T1={t1}, T2={t2}"),
        )?;
        let trace = choi.trace().re;
        ensure(
            (trace - 2.0).abs() < 1e-10,
            format!("Choi trace {trace} (should be 2 for a CPTP map)"),
        )?;
    }
    Ok(())
}

fn check_witness_bounds() -> Result<(), String> {
    let w = witness_value(&ghz_target().to_density()).map_err(|e| e.to_string())?;
    ensure((w + 0.5).abs() < 1e-12, format!("witness at GHZ: {w}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for _ in 0..20 {
        let rho = random_state(&mut rng, 4).to_density();
        let w = witness_value(&rho).map_err(|e| e.to_string())?;
        ensure(w >= -0.5 - 1e-12, format!("witness below bound: {w}"))?;
    }
    Ok(())
}

fn check_metrics_linearity() -> Result<(), String> {
    let ideal = ghz_target().to_density();
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let probe = random_state(&mut rng, 4).to_density();
    let c1 = correlation_attenuated(&ideal, &probe).map_err(|e| e.to_string())?;
    for scale in [0.25, 0.73, 2.0] {
        let scaled = DensityMatrix::new_deviation(probe.matrix().map(|x| x * scale))
            .map_err(|e| e.to_string())?;
        let c = correlation_attenuated(&ideal, &scaled).map_err(|e| e.to_string())?;
        ensure(
            (c - scale * c1).abs() < 1e-10,
            format!("correlation not linear at scale {scale}"),
        )?;
        let f1 = fidelity_normalized(&ideal, &probe).map_err(|e| e.to_string())?;
        let f2 = fidelity_normalized(&ideal, &scaled).map_err(|e| e.to_string())?;
        ensure(
            (f1 - f2).abs() < 1e-10,
            format!("fidelity not scale invariant at {scale}"),
        )?;
    }
    Ok(())
}

fn check_free_evolution_commutes_with_gradient() -> Result<(), String> {
    use crate::nmr::ensemble::hamiltonian_energies;
    let spec = MoleculeSpec::crotonic_acid();
    let energies = hamiltonian_energies(&spec);
    let t = 0.0137;
    let h_phase = CMatrix::from_fn(16, 16, |r, c| {
        if r == c {
            C64::from_polar(1.0, -energies[r] * t)
        } else {
            ZERO
        }
    });
    let g = crate::nmr::gradient::fz_phase_operator(0.7, 4)
        .embedded_matrix(4)
        .map_err(|e| e.to_string())?;
    ensure(
        max_abs_diff(&(&h_phase * &g), &(&g * &h_phase)) < 1e-12,
        "diagonal operators failed to commute",
    )
}

fn check_ghz_pipeline() -> Result<(), String> {
    let spec = MoleculeSpec::crotonic_acid();
    let ghz = prepare_ghz(&spec).map_err(|e| e.to_string())?;
    let fid = ghz
        .rho()
        .overlap(&ghz_target())
        .map_err(|e| e.to_string())?;
    ensure((fid - 1.0).abs() < 1e-10, format!("GHZ fidelity {fid}"))?;
    let crushed = gradient_crusher(&ghz, &spec).map_err(|e| e.to_string())?;
    ensure(
        max_abs_diff(crushed.rho().matrix(), ghz.rho().matrix()) < 1e-10,
        "crusher disturbed the GHZ state",
    )?;
    let graph = ghz_to_graph(&ghz).map_err(|e| e.to_string())?;
    let gfid = graph
        .rho()
        .overlap(&star_graph_state())
        .map_err(|e| e.to_string())?;
    ensure((gfid - 1.0).abs() < 1e-10, format!("graph fidelity {gfid}"))
}

fn check_measurement_basis_orthonormal() -> Result<(), String> {
    for k in 0..16 {
        let alpha = k as f64 * std::f64::consts::TAU / 16.0;
        let dev = MeasurementBasis::new(alpha).orthonormality_deviation();
        ensure(dev < 1e-12, format!("alpha {alpha}: {dev:.2e}"))?;
    }
    Ok(())
}

fn check_report_reproducibility() -> Result<(), String> {
    use crate::report::{run_command, Mode, RunConfig};
    let cfg = RunConfig {
        mode: Mode::Tomography,
        noise: 0.01,
        ..RunConfig::default()
    };
    let a = run_command(&cfg).map_err(|e| e.to_string())?;
    let b = run_command(&cfg).map_err(|e| e.to_string())?;
    ensure(
        a.report.render() == b.report.render(),
        "report text differs between identical runs",
    )?;
    for (x, y) in a.artifacts.iter().zip(b.artifacts.iter()) {
        ensure(
            x.name == y.name && x.content == y.content,
            format!("artifact {} differs", x.name),
        )?;
    }
    Ok(())
}

const CHECKS: &[(&str, CheckFn)] = &[
    (
        "qcore/unitary-preserves-norm-and-spectrum",
        check_unitary_preserves_norm_and_spectrum,
    ),
    ("qcore/dephase-idempotent", check_dephase_idempotent),
    (
        "qcore/dephase-equals-phase-average",
        check_dephase_equals_phase_average,
    ),
    ("qcore/partial-trace-identity", check_partial_trace_identity),
    ("qcore/embed-disjoint-commute", check_embed_disjoint_commute),
    ("mbqc/graph-state-anchor", check_graph_state_anchor),
    (
        "mbqc/measurement-basis-orthonormal",
        check_measurement_basis_orthonormal,
    ),
    ("mbqc/dj-deterministic-16", check_dj_deterministic),
    (
        "mbqc/branch-probabilities-uniform",
        check_branch_probabilities,
    ),
    ("mbqc/stabilizer-invariance", check_stabilizer_invariance),
    ("mbqc/oracle-unitarity-and-verdicts", check_oracles),
    (
        "mbqc/logical-map-unitary-8x8",
        check_logical_map_unitary_grid,
    ),
    (
        "mbqc/logical-map-branch-correctable-8x8",
        check_logical_map_correctable_grid,
    ),
    ("nmr/eq2-cnot-all-pairs", check_eq2_cnot_all_pairs),
    ("nmr/pz-equals-dephase-channel", check_pz_equals_dephase),
    (
        "nmr/ensemble-equals-branch-average",
        check_ensemble_equals_branch_average,
    ),
    ("nmr/gradient-projection", check_gradient_projection),
    ("nmr/relaxation-cptp", check_relaxation_cptp),
    ("nmr/witness-bounds", check_witness_bounds),
    (
        "nmr/metrics-linearity-scale-invariance",
        check_metrics_linearity,
    ),
    (
        "nmr/free-evolution-commutes-with-gradient",
        check_free_evolution_commutes_with_gradient,
    ),
    ("nmr/ghz-pipeline", check_ghz_pipeline),
    ("cli/report-reproducibility", check_report_reproducibility),
];

/// Runs every invariant check, returning one result per check.
pub fn run_all() -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|(name, f)| match f() {
            Ok(()) => CheckResult {
                name,
                passed: true,
                detail: String::new(),
            },
            Err(detail) => CheckResult {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}
