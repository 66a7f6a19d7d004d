//! Deutsch-Josza oracles and the feed-forward rules that implement them
//! on the star graph.

use std::fmt;

use crate::error::{Error, Result};
use crate::qcore::linalg::{CMatrix, ONE, ZERO};
use crate::qcore::operator::{identity2, pauli_x, pauli_z};
use crate::qcore::{QOperator, StateVector};

/// The four one-bit to one-bit functions: f1 and f2 are constant (0 and 1),
/// f3 and f4 are balanced (x and 1 xor x).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleId {
    F1,
    F2,
    F3,
    F4,
}

impl OracleId {
    pub const ALL: [OracleId; 4] = [OracleId::F1, OracleId::F2, OracleId::F3, OracleId::F4];

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f1" => Ok(OracleId::F1),
            "f2" => Ok(OracleId::F2),
            "f3" => Ok(OracleId::F3),
            "f4" => Ok(OracleId::F4),
            other => Err(Error::UnknownOracle(other.to_string())),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            OracleId::F1 => "f1",
            OracleId::F2 => "f2",
            OracleId::F3 => "f3",
            OracleId::F4 => "f4",
        }
    }

    /// Truth table f(x).
    pub fn eval(&self, x: u8) -> u8 {
        match self {
            OracleId::F1 => 0,
            OracleId::F2 => 1,
            OracleId::F3 => x & 1,
            OracleId::F4 => 1 ^ (x & 1),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, OracleId::F1 | OracleId::F2)
    }
}

impl fmt::Display for OracleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-oracle feed-forward exponents:
/// `FF^(3) = sigma_z^{a s1 + b} sigma_x^{c s2 + d}` on physical qubit 3 and
/// `FF^(4) = sigma_z^{s1}` on physical qubit 4, exponents mod 2.
#[derive(Debug, Clone, Copy)]
pub struct FeedForwardRule {
    oracle: OracleId,
    a: u8,
    b: u8,
    c: u8,
    d: u8,
}

impl FeedForwardRule {
    /// The rule row for an oracle, together with its measurement angles:
    ///
    /// | oracle | bases          | FF3                        | FF4          |
    /// |--------|----------------|----------------------------|--------------|
    /// | f1     | B1(0),  B2(0)  | sz^{s1}   sx^{s2+1}        | sz^{s1}      |
    /// | f2     | B1(0),  B2(0)  | sz^{s1}   sx^{s2}          | sz^{s1}      |
    /// | f3     | B1(pi), B2(0)  | sz^{s1+1} sx^{s2}          | sz^{s1}      |
    /// | f4     | B1(pi), B2(0)  | sz^{s1+1} sx^{s2+1}        | sz^{s1}      |
    pub fn for_oracle(oracle: OracleId) -> Self {
        let (b, d) = match oracle {
            OracleId::F1 => (0, 1),
            OracleId::F2 => (0, 0),
            OracleId::F3 => (1, 0),
            OracleId::F4 => (1, 1),
        };
        FeedForwardRule {
            oracle,
            a: 1,
            b,
            c: 1,
            d,
        }
    }

    pub fn oracle(&self) -> OracleId {
        self.oracle
    }

    pub fn constants(&self) -> (u8, u8, u8, u8) {
        (self.a, self.b, self.c, self.d)
    }

    /// Measurement angles `(alpha1, alpha2)` for qubits 1 and 2.
    pub fn measurement_angles(&self) -> (f64, f64) {
        let alpha1 = if self.oracle.is_constant() {
            0.0
        } else {
            std::f64::consts::PI
        };
        (alpha1, 0.0)
    }

    /// `(z, x)` exponents of FF3, evaluated mod 2.
    pub fn ff3_exponents(&self, s1: u8, s2: u8) -> (u8, u8) {
        ((self.a * s1 + self.b) % 2, (self.c * s2 + self.d) % 2)
    }

    /// Exponent of the sigma_z in FF4.
    pub fn ff4_exponent(&self, s1: u8) -> u8 {
        s1 % 2
    }

    /// Control polarities of the ensemble feed-forward gates, as the
    /// `(A, B)` pair: `A` is the qubit-2 spin state that triggers the
    /// sigma_x on qubit 3, `B` the qubit-1 spin state that triggers the
    /// sigma_z on qubit 3. The sigma_z on qubit 4 always triggers on
    /// qubit 1 being `|1>`.
    pub fn control_polarities(&self) -> (u8, u8) {
        ((1 + self.d) % 2, (1 + self.b) % 2)
    }
}

fn pauli_power(base: CMatrix, e: u8) -> CMatrix {
    if e % 2 == 1 {
        base
    } else {
        identity2()
    }
}

/// FF3 as a 2x2 matrix for a given branch.
pub fn ff3_matrix(rule: &FeedForwardRule, s1: u8, s2: u8) -> CMatrix {
    let (ez, ex) = rule.ff3_exponents(s1, s2);
    pauli_power(pauli_z(), ez) * pauli_power(pauli_x(), ex)
}

/// FF4 as a 2x2 matrix for a given branch.
pub fn ff4_matrix(rule: &FeedForwardRule, s1: u8) -> CMatrix {
    pauli_power(pauli_z(), rule.ff4_exponent(s1))
}

/// Applies FF3 to physical qubit 3 and FF4 to physical qubit 4.
pub fn feed_forward(
    state: &StateVector,
    rule: &FeedForwardRule,
    s1: u8,
    s2: u8,
) -> Result<StateVector> {
    let ff3 = QOperator::single_unitary(3, ff3_matrix(rule, s1, s2))?;
    let ff4 = QOperator::single_unitary(4, ff4_matrix(rule, s1))?;
    state.apply(&ff3)?.apply(&ff4)
}

/// `CNOT = |0><0|_c (x) I_t + |1><1|_c (x) sigma_x_t` as a 4x4 matrix with
/// the control on the most significant slot.
pub fn cnot_matrix() -> CMatrix {
    CMatrix::from_row_slice(
        4,
        4,
        &[
            ONE, ZERO, ZERO, ZERO, //
            ZERO, ONE, ZERO, ZERO, //
            ZERO, ZERO, ZERO, ONE, //
            ZERO, ZERO, ONE, ZERO,
        ],
    )
}

/// The oracle network on (control, target), control most significant:
/// first sigma_z on the target, then `|x>|y> -> |x>|y xor f(x)>`.
pub fn oracle_unitary(oracle: OracleId) -> QOperator {
    let pre = identity2().kronecker(&pauli_z());
    let xor_part = match oracle {
        OracleId::F1 => CMatrix::identity(4, 4),
        OracleId::F2 => identity2().kronecker(&pauli_x()),
        OracleId::F3 => cnot_matrix(),
        OracleId::F4 => identity2().kronecker(&pauli_x()) * cnot_matrix(),
    };
    QOperator::unitary(vec![1, 2], xor_part * pre).expect("oracle networks are unitary")
}
