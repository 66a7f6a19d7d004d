//! Projective measurements in the x-y plane.

use num_complex::Complex64 as C64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::qcore::state::projector;
use crate::qcore::{check_qubit, QOperator, StateVector};

/// A measurement basis `B(alpha) = {|alpha_+>, |alpha_->}` in the x-y
/// plane, with `|alpha_\u{00b1}> = (|0> \u{00b1} e^{i alpha}|1>)/sqrt(2)`.
#[derive(Debug, Clone, Copy)]
pub struct MeasurementBasis {
    alpha: f64,
}

impl MeasurementBasis {
    pub fn new(alpha: f64) -> Self {
        MeasurementBasis { alpha }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Basis ket for outcome `s`: `s = 0` selects `|alpha_+>`, `s = 1`
    /// selects `|alpha_->`.
    pub fn ket(&self, s: u8) -> StateVector {
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        let sign = if s == 0 { 1.0 } else { -1.0 };
        let phase = C64::from_polar(sign * inv, self.alpha);
        StateVector::from_amplitudes(vec![C64::new(inv, 0.0), phase]).unwrap()
    }

    /// Max deviation of the two basis kets from orthonormality.
    pub fn orthonormality_deviation(&self) -> f64 {
        let p = self.ket(0);
        let m = self.ket(1);
        let cross = p.inner(&m).unwrap().norm();
        let norms = (p.norm() - 1.0).abs().max((m.norm() - 1.0).abs());
        cross.max(norms)
    }
}

/// One projective measurement outcome.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub qubit: usize,
    pub alpha: f64,
    /// Outcome bit: 0 for the `|alpha_+>` branch, 1 for `|alpha_->`.
    pub s: u8,
    /// Born probability of the recorded branch.
    pub probability: f64,
}

/// Projects qubit `q` onto `|alpha_s>`, renormalizes, and records the
/// outcome. The measured qubit stays in the register, left in the
/// post-measurement basis state.
///
/// With `forced` the branch is selected deterministically (an error if its
/// probability is below 1e-12); otherwise the branch is drawn from the
/// Born probabilities using the supplied generator.
pub fn measure_xy<R: Rng + ?Sized>(
    state: &StateVector,
    q: usize,
    basis: MeasurementBasis,
    forced: Option<u8>,
    rng: &mut R,
) -> Result<(MeasurementRecord, StateVector)> {
    let n = state.num_qubits();
    check_qubit(q, n)?;

    let proj = |s: u8| -> Result<StateVector> {
        let p = QOperator::single(q, projector(&basis.ket(s)))?;
        state.apply(&p)
    };
    let branch0 = proj(0)?;
    let p0 = branch0.norm().powi(2);

    let s = match forced {
        Some(s) => {
            let p = if s == 0 { p0 } else { 1.0 - p0 };
            if p <= 1e-12 {
                return Err(Error::ZeroProbabilityBranch { q, s });
            }
            s
        }
        None => {
            if rng.random::<f64>() < p0 {
                0
            } else {
                1
            }
        }
    };

    let mut post = if s == 0 { branch0 } else { proj(1)? };
    let probability = if s == 0 { p0 } else { 1.0 - p0 };
    post.renormalize()?;
    Ok((
        MeasurementRecord {
            qubit: q,
            alpha: basis.alpha(),
            s,
            probability,
        },
        post,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(42)
    }

    #[test]
    fn basis_kets_are_orthonormal() {
        for alpha in [0.0, 0.4, std::f64::consts::PI, 5.1] {
            assert!(MeasurementBasis::new(alpha).orthonormality_deviation() < 1e-12);
        }
    }

    #[test]
    fn b0_on_plus_is_deterministic() {
        let (rec, post) = measure_xy(
            &StateVector::ket_plus(),
            1,
            MeasurementBasis::new(0.0),
            None,
            &mut rng(),
        )
        .unwrap();
        assert_eq!(rec.s, 0);
        assert!((rec.probability - 1.0).abs() < 1e-12);
        assert!((post.fidelity(&StateVector::ket_plus()).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn b0_on_ket0_is_unbiased() {
        for s in [0u8, 1u8] {
            let (rec, _) = measure_xy(
                &StateVector::ket0(),
                1,
                MeasurementBasis::new(0.0),
                Some(s),
                &mut rng(),
            )
            .unwrap();
            assert!((rec.probability - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn b_pi_on_minus_yields_plus_branch() {
        // |alpha=pi, +> = (|0> - |1>)/sqrt(2) = |->.
        let (rec, _) = measure_xy(
            &StateVector::ket_minus(),
            1,
            MeasurementBasis::new(std::f64::consts::PI),
            None,
            &mut rng(),
        )
        .unwrap();
        assert_eq!(rec.s, 0);
        assert!((rec.probability - 1.0).abs() < 1e-12);
    }

    #[test]
    fn forcing_a_dead_branch_fails() {
        let out = measure_xy(
            &StateVector::ket_plus(),
            1,
            MeasurementBasis::new(0.0),
            Some(1),
            &mut rng(),
        );
        assert!(matches!(out, Err(Error::ZeroProbabilityBranch { .. })));
    }

    #[test]
    fn post_state_keeps_the_measured_qubit() {
        let psi = StateVector::tensor(&[StateVector::ket_plus(), StateVector::ket1()]).unwrap();
        let (_, post) =
            measure_xy(&psi, 1, MeasurementBasis::new(0.0), Some(0), &mut rng()).unwrap();
        assert_eq!(post.num_qubits(), 2);
        let expect = StateVector::tensor(&[StateVector::ket_plus(), StateVector::ket1()]).unwrap();
        assert!((post.fidelity(&expect).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unforced_sampling_matches_born_statistics() {
        let mut rng = rng();
        let psi = StateVector::ket0();
        let mut zeros = 0usize;
        let trials = 4000;
        for _ in 0..trials {
            let (rec, _) = measure_xy(&psi, 1, MeasurementBasis::new(0.0), None, &mut rng).unwrap();
            if rec.s == 0 {
                zeros += 1;
            }
        }
        let freq = zeros as f64 / trials as f64;
        assert!((freq - 0.5).abs() < 0.05, "frequency {freq} far from 1/2");
    }

    #[test]
    fn seeded_runs_reproduce() {
        let psi = StateVector::ket0();
        let draw = |seed: u64| -> Vec<u8> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| {
                    measure_xy(&psi, 1, MeasurementBasis::new(0.0), None, &mut rng)
                        .unwrap()
                        .0
                        .s
                })
                .collect()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }
}
