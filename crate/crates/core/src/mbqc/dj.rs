//! The full one-way Deutsch-Josza run: graph state, two measurements,
//! feed-forward, readout on physical qubit 4.

use std::fmt;

use rand::Rng;

use super::measure::{measure_xy, MeasurementBasis, MeasurementRecord};
use super::oracle::{feed_forward, FeedForwardRule, OracleId};
use super::star_graph_state;
use crate::error::Result;
use crate::qcore::{QOperator, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Constant,
    Balanced,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Constant => f.write_str("constant"),
            Verdict::Balanced => f.write_str("balanced"),
        }
    }
}

/// Outcome of one projective Deutsch-Josza run.
#[derive(Debug, Clone)]
pub struct DJOutcome {
    pub oracle: OracleId,
    pub s1: u8,
    pub s2: u8,
    pub verdict: Verdict,
    /// `<sigma_x>` on physical qubit 4 after feed-forward.
    pub control_qubit_sx: f64,
    pub records: Vec<MeasurementRecord>,
    pub final_state: StateVector,
}

/// Runs the one-way Deutsch-Josza algorithm for one oracle.
///
/// Prepares the star graph state, measures qubit 1 in `B1(0)` (constant
/// oracles) or `B1(pi)` (balanced oracles) and qubit 2 in `B2(0)`, applies
/// the oracle's feed-forward rule, and reads `<sigma_x>` on qubit 4. The
/// verdict is deterministic regardless of the measured branch.
///
/// `branch` forces the `(s1, s2)` outcomes; otherwise they are drawn from
/// the Born probabilities with the supplied generator.
pub fn run_dj<R: Rng + ?Sized>(
    oracle: OracleId,
    branch: Option<(u8, u8)>,
    rng: &mut R,
) -> Result<DJOutcome> {
    let rule = FeedForwardRule::for_oracle(oracle);
    let (alpha1, alpha2) = rule.measurement_angles();

    let graph_state = star_graph_state();
    let (rec1, state) = measure_xy(
        &graph_state,
        1,
        MeasurementBasis::new(alpha1),
        branch.map(|(s1, _)| s1),
        rng,
    )?;
    let (rec2, state) = measure_xy(
        &state,
        2,
        MeasurementBasis::new(alpha2),
        branch.map(|(_, s2)| s2),
        rng,
    )?;
    let state = feed_forward(&state, &rule, rec1.s, rec2.s)?;
    let control_qubit_sx = state.expectation(&QOperator::x(4))?;
    let verdict = if control_qubit_sx >= 0.0 {
        Verdict::Constant
    } else {
        Verdict::Balanced
    };
    Ok(DJOutcome {
        oracle,
        s1: rec1.s,
        s2: rec2.s,
        verdict,
        control_qubit_sx,
        records: vec![rec1, rec2],
        final_state: state,
    })
}

/// Expected verdict of an oracle from its truth table.
pub fn expected_verdict(oracle: OracleId) -> Verdict {
    if oracle.is_constant() {
        Verdict::Constant
    } else {
        Verdict::Balanced
    }
}
