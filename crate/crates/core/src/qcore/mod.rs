//! Dense complex linear algebra engine for n-qubit states, operators and
//! channels.
//!
//! Conventions used throughout the crate:
//!
//! * Qubits are numbered 1..=n, and qubit 1 is the **most significant bit**
//!   of a computational basis index, so the basis state `|q1 q2 .. qn>`
//!   reads left to right. `|0110>` on four qubits is index 6.
//! * Operators are plain dense matrices; the engine caps registers at
//!   [`MAX_QUBITS`] qubits.
//! * Equality of states and unitaries is tested up to global phase via the
//!   helpers in [`linalg`].

pub mod channel;
pub mod linalg;
pub mod operator;
pub mod state;

pub use channel::{dephase_qubit, partial_trace};
pub use operator::{embed_operator, Axis, QOperator};
pub use state::{DensityMatrix, StateVector};

use crate::error::{Error, Result};

/// Hard cap on register size for the dense engine.
pub const MAX_QUBITS: usize = 10;

/// Tolerance for exact algebraic identities (unitarity, Hermiticity, norms).
pub const TOL_EXACT: f64 = 1e-10;

/// Tolerance for channel-averaging approximations.
pub const TOL_CHANNEL: f64 = 1e-8;

/// Checks a 1-based qubit index against the register size.
pub(crate) fn check_qubit(q: usize, n: usize) -> Result<()> {
    if q == 0 || q > n {
        return Err(Error::QubitOutOfRange { q, n });
    }
    Ok(())
}

pub(crate) fn check_register_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::TooManyQubits { n, max: MAX_QUBITS });
    }
    Ok(())
}

/// Bit of basis index `a` belonging to qubit `q` (1-based, qubit 1 = MSB).
#[inline]
pub(crate) fn qubit_bit(a: usize, q: usize, n: usize) -> usize {
    (a >> (n - q)) & 1
}
