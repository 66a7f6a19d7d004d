//! State-quality metrics: attenuated correlation, normalized fidelity and
//! the GHZ entanglement witness.

use super::gates::ghz_target;
use crate::error::{Error, Result};
use crate::qcore::DensityMatrix;

fn overlap_trace(rho_id: &DensityMatrix, rho_exp: &DensityMatrix) -> Result<f64> {
    if rho_id.dim() != rho_exp.dim() {
        return Err(Error::DimensionMismatch {
            left: rho_id.dim(),
            right: rho_exp.dim(),
        });
    }
    Ok((rho_id.matrix() * rho_exp.matrix()).trace().re)
}

/// Attenuated correlation `c(rho_exp) = tr(rho_id rho_exp) / sqrt(tr(rho_id^2))`,
/// sensitive to the net loss of magnetization.
pub fn correlation_attenuated(rho_id: &DensityMatrix, rho_exp: &DensityMatrix) -> Result<f64> {
    let num = overlap_trace(rho_id, rho_exp)?;
    let den = rho_id.purity().sqrt();
    Ok(num / den)
}

/// Normalized fidelity
/// `F = tr(rho_id rho_exp) / sqrt(tr(rho_id^2) tr(rho_exp^2))`,
/// invariant under positive scaling of `rho_exp`.
pub fn fidelity_normalized(rho_id: &DensityMatrix, rho_exp: &DensityMatrix) -> Result<f64> {
    let num = overlap_trace(rho_id, rho_exp)?;
    let p_exp = rho_exp.purity();
    if p_exp < 1e-24 {
        return Err(Error::BadTrace { trace: 0.0 });
    }
    Ok(num / (rho_id.purity() * p_exp).sqrt())
}

/// Expectation of the witness `W = I/2 - |GHZ><GHZ|`:
/// `tr(W rho) = 1/2 - <GHZ|rho|GHZ>`. Negative values certify genuine
/// four-partite (pseudo-)entanglement.
pub fn witness_value(rho: &DensityMatrix) -> Result<f64> {
    if rho.num_qubits() != 4 {
        return Err(Error::WrongSpinCount {
            op: "witness_value",
            want: 4,
            got: rho.num_qubits(),
        });
    }
    Ok(0.5 - rho.overlap(&ghz_target())?)
}
