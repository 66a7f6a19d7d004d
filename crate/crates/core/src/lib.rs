//! Deterministic simulator of one-way (measurement-based) quantum
//! computation on a star-like four-qubit graph state, together with an
//! NMR-ensemble physics layer: pseudopure initialization, J-coupling
//! evolution, gradient-mimicked measurements, conditional feed-forward,
//! relaxation, tomography, entanglement metrics and spectrum readout.
//!
//! The crate is organized in four layers:
//!
//! * [`qcore`] — dense complex linear algebra for n-qubit states,
//!   operators and channels (qubit 1 is the most significant bit).
//! * [`mbqc`] — the one-way computing pattern: graph construction,
//!   entangling, x-y-plane measurements, feed-forward and the
//!   Deutsch-Josza oracles.
//! * [`nmr`] — the ensemble realization: molecule parameters, pseudopure
//!   states, gate decompositions, gradient sequences, relaxation,
//!   tomography, metrics and spectra.
//! * [`report`] — run configurations, pipelines and reproducible
//!   structured reports backing the CLI.
//!
//! ```
//! use onewaysim::mbqc::{run_dj, OracleId, Verdict};
//! use rand::SeedableRng;
//!
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
//! // Any measured branch gives the same verdict after feed-forward.
//! for s1 in 0..2 {
//!     for s2 in 0..2 {
//!         let out = run_dj(OracleId::F3, Some((s1, s2)), &mut rng).unwrap();
//!         assert_eq!(out.verdict, Verdict::Balanced);
//!         assert!((out.control_qubit_sx + 1.0).abs() < 1e-9);
//!     }
//! }
//! ```

pub mod error;
pub mod mbqc;
pub mod nmr;
pub mod qcore;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
