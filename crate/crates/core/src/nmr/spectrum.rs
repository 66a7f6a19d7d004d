//! Free-induction-decay synthesis and Fourier-transform readout.

use num_complex::Complex64 as C64;
use rustfft::FftPlanner;

use super::ensemble::{free_evolution, EnsembleState};
use super::molecule::MoleculeSpec;
use super::relax::relaxation_channel;
use crate::error::{Error, Result};
use crate::qcore::linalg::{CMatrix, ZERO};
use crate::qcore::{check_qubit, QOperator};

/// A frequency-domain NMR spectrum on a uniform grid.
#[derive(Debug, Clone)]
pub struct SpectrumData {
    /// Frequency grid in Hz, ascending, length = sample count.
    pub frequencies: Vec<f64>,
    /// Complex spectrum values; the real part is the absorption signal.
    pub amplitudes: Vec<C64>,
    pub observe_qubit: usize,
    pub duration: f64,
    pub samples: usize,
    /// Phase convention: a spin along +x (thermal state after a [pi/2]_y
    /// pulse) gives positive absorption peaks.
    pub reference_phase: &'static str,
}

pub const REFERENCE_PHASE_CONVENTION: &str = "thermal-pi2y-positive";

/// Simulates the free-induction decay
/// `s(t) = tr(rho(t) sigma_+^(observe))` with `rho(t)` evolved under the
/// weak-coupling Hamiltonian and the per-spin relaxation channel, and
/// discrete-Fourier-transforms it into a [`SpectrumData`].
///
/// With resolved couplings a four-spin system shows a `2^3 = 8`-line
/// multiplet on the observed spin; a spin along `|+>` gives all-positive
/// lines, `|->` the inverted mirror, and `|0>`/`|1>` no signal at all.
pub fn synthesize_spectrum(
    state: &EnsembleState,
    spec: &MoleculeSpec,
    observe: usize,
    duration: f64,
    samples: usize,
) -> Result<SpectrumData> {
    let n = spec.num_spins();
    check_qubit(observe, n)?;
    if duration <= 0.0 {
        return Err(Error::BadDuration(duration));
    }
    if samples < 256 || !samples.is_power_of_two() {
        return Err(Error::BadSampleCount(samples));
    }
    if state.num_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: state.num_qubits(),
            right: n,
        });
    }

    // sigma_+ = |0><1| on the observed spin: tr(rho sigma_+) picks the
    // <1|rho|0> coherences, which rotate at +shift under this convention.
    let sigma_plus = {
        let mut m = CMatrix::from_element(2, 2, ZERO);
        m[(0, 1)] = C64::new(1.0, 0.0);
        QOperator::single(observe, m)?.embedded_matrix(n)?
    };

    let dt = duration / samples as f64;
    let mut fid = Vec::with_capacity(samples);
    let mut rho = state.clone();
    for _ in 0..samples {
        fid.push((rho.rho().matrix() * &sigma_plus).trace());
        rho = free_evolution(&rho, spec, dt)?;
        rho = relaxation_channel(&rho, spec, dt)?;
    }

    let mut buf = fid;
    FftPlanner::new()
        .plan_fft_forward(samples)
        .process(&mut buf);
    // Shift so the grid runs from -samples/(2 duration) upward.
    let half = samples / 2;
    let mut amplitudes = Vec::with_capacity(samples);
    let mut frequencies = Vec::with_capacity(samples);
    let scale = C64::new(dt, 0.0);
    for k in 0..samples {
        let src = (k + half) % samples;
        amplitudes.push(buf[src] * scale);
        frequencies.push((k as f64 - half as f64) / duration);
    }
    Ok(SpectrumData {
        frequencies,
        amplitudes,
        observe_qubit: observe,
        duration,
        samples,
        reference_phase: REFERENCE_PHASE_CONVENTION,
    })
}

/// Counts sign-resolved absorption peaks: strict local maxima of the
/// real part above `rel_threshold * max|Re|`, and the mirror count below
/// the negated threshold. Returns `(positive, negative)`.
pub fn count_signed_peaks(spectrum: &SpectrumData, rel_threshold: f64) -> (usize, usize) {
    let re: Vec<f64> = spectrum.amplitudes.iter().map(|a| a.re).collect();
    let max_abs = re.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    if max_abs <= 0.0 {
        return (0, 0);
    }
    let thr = rel_threshold * max_abs;
    let mut pos = 0;
    let mut neg = 0;
    for i in 1..re.len() - 1 {
        if re[i] > thr && re[i] >= re[i - 1] && re[i] > re[i + 1] {
            pos += 1;
        }
        if re[i] < -thr && re[i] <= re[i - 1] && re[i] < re[i + 1] {
            neg += 1;
        }
    }
    (pos, neg)
}

/// Largest absolute amplitude of the real part, for zero-signal checks.
pub fn max_absorption(spectrum: &SpectrumData) -> f64 {
    spectrum
        .amplitudes
        .iter()
        .fold(0.0f64, |m, a| m.max(a.re.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::StateVector;

    /// A four-spin molecule with well-separated generic couplings on the
    /// observed spin and slow relaxation, so all eight lines resolve.
    fn resolved_spec() -> MoleculeSpec {
        MoleculeSpec::parse(
            "\
[shifts]
A = -400
B = 300
C = 150
D = -90
[jcouplings]
B = 48
C = 24 36
D = 12 60 80
[relaxation]
A = 8 2
B = 8 2
C = 8 2
D = 8 2
",
        )
        .unwrap()
    }

    fn observe_state(single: StateVector) -> EnsembleState {
        // Qubits 1..3 maximally mixed (thermal-like), qubit 4 prepared.
        let mixed = crate::qcore::DensityMatrix::maximally_mixed(3).unwrap();
        let target = single.to_density();
        let mat = mixed.matrix().kronecker(target.matrix());
        EnsembleState::new(crate::qcore::DensityMatrix::from_raw(4, mat, false))
    }

    #[test]
    fn plus_state_gives_eight_positive_lines() {
        let spec = resolved_spec();
        let state = observe_state(StateVector::ket_plus());
        let sp = synthesize_spectrum(&state, &spec, 4, 2.0, 4096).unwrap();
        let (pos, neg) = count_signed_peaks(&sp, 0.2);
        assert_eq!(pos, 8, "expected the full multiplet");
        assert_eq!(neg, 0);
    }

    #[test]
    fn minus_state_mirrors_the_multiplet() {
        let spec = resolved_spec();
        let state = observe_state(StateVector::ket_minus());
        let sp = synthesize_spectrum(&state, &spec, 4, 2.0, 4096).unwrap();
        let (pos, neg) = count_signed_peaks(&sp, 0.2);
        assert_eq!(neg, 8);
        assert_eq!(pos, 0);
    }

    #[test]
    fn ket0_gives_no_signal() {
        let spec = resolved_spec();
        let state = observe_state(StateVector::ket0());
        let sp = synthesize_spectrum(&state, &spec, 4, 1.0, 1024).unwrap();
        assert!(max_absorption(&sp) < 1e-12);
    }

    #[test]
    fn multiplet_lines_sit_at_the_coupling_offsets() {
        // Observed spin D at -90 Hz couples to A, B, C with 12, 60, 80 Hz:
        // the strongest line positions are -90 +/- 6 +/- 30 +/- 40.
        let spec = resolved_spec();
        let state = observe_state(StateVector::ket_plus());
        let sp = synthesize_spectrum(&state, &spec, 4, 2.0, 4096).unwrap();
        let re: Vec<f64> = sp.amplitudes.iter().map(|a| a.re).collect();
        let max = re.iter().cloned().fold(0.0f64, f64::max);
        for s1 in [-1.0, 1.0] {
            for s2 in [-1.0, 1.0] {
                for s3 in [-1.0, 1.0] {
                    let f = -90.0 + s1 * 6.0 + s2 * 30.0 + s3 * 40.0;
                    // Nearest grid point must carry a substantial signal.
                    let k = sp
                        .frequencies
                        .iter()
                        .position(|&g| (g - f).abs() <= 0.5 / sp.duration)
                        .unwrap();
                    assert!(
                        re[k] > 0.2 * max,
                        "missing line at {f} Hz (found {:.3e})",
                        re[k]
                    );
                }
            }
        }
    }

    #[test]
    fn single_spin_peak_sits_at_its_shift() {
        let spec = MoleculeSpec::parse("[shifts]\nA = 125\n[jcouplings]\n[relaxation]\nA = 4 1\n")
            .unwrap();
        let state = EnsembleState::new(StateVector::ket_plus().to_density());
        let sp = synthesize_spectrum(&state, &spec, 1, 2.0, 1024).unwrap();
        let (imax, _) = sp
            .amplitudes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.re.partial_cmp(&b.1.re).unwrap())
            .unwrap();
        assert!((sp.frequencies[imax] - 125.0).abs() <= 1.0 / sp.duration);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let spec = resolved_spec();
        let state = observe_state(StateVector::ket_plus());
        assert!(matches!(
            synthesize_spectrum(&state, &spec, 4, 0.0, 1024),
            Err(Error::BadDuration(_))
        ));
        assert!(matches!(
            synthesize_spectrum(&state, &spec, 4, 1.0, 1000),
            Err(Error::BadSampleCount(_))
        ));
        assert!(matches!(
            synthesize_spectrum(&state, &spec, 4, 1.0, 128),
            Err(Error::BadSampleCount(_))
        ));
    }
}
