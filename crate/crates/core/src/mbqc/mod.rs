//! The one-way computing pattern: graph construction, entangling,
//! x-y-plane measurements, feed-forward and the Deutsch-Josza oracles.

pub mod dj;
pub mod logical;
pub mod measure;
pub mod oracle;

pub use dj::{run_dj, DJOutcome, Verdict};
pub use logical::{corrected_logical_map, extract_logical_map};
pub use measure::{measure_xy, MeasurementBasis, MeasurementRecord};
pub use oracle::{feed_forward, oracle_unitary, FeedForwardRule, OracleId};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::qcore::linalg::{CMatrix, ONE};
use crate::qcore::{QOperator, StateVector};

/// An undirected simple graph whose edges carry controlled-phase gates.
///
/// Edges are stored as ordered `(j, k)` pairs because the entangling gate
/// of this pattern acts asymmetrically: the phase sits on the `|0>_j |1>_k`
/// component.
#[derive(Debug, Clone)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(j, k)) in edges.iter().enumerate() {
            if j == k {
                return Err(Error::BadEdge {
                    j,
                    k,
                    reason: "self-loop".into(),
                });
            }
            if j == 0 || j > vertices || k == 0 || k > vertices {
                return Err(Error::BadEdge {
                    j,
                    k,
                    reason: format!("vertex out of range 1..={vertices}"),
                });
            }
            if edges[..i]
                .iter()
                .any(|&(a, b)| (a, b) == (j, k) || (a, b) == (k, j))
            {
                return Err(Error::BadEdge {
                    j,
                    k,
                    reason: "duplicate edge".into(),
                });
            }
        }
        Ok(Graph { vertices, edges })
    }

    /// The star-like 4-qubit graph with edges (1,2), (2,3), (4,2), in the
    /// order the entangler multiplies them.
    pub fn star4() -> Self {
        Graph {
            vertices: 4,
            edges: vec![(1, 2), (2, 3), (4, 2)],
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// The two-qubit entangling gate
/// `S^{(jk)} = |0><0|_j (x) sigma_z_k + |1><1|_j (x) I_k`,
/// i.e. phase -1 on `|0>_j |1>_k`. Note this is *not* the standard CZ
/// convention; see [`standard_cz`] for the usual gate and the relation
/// `S^{(jk)} = CZ^{(jk)} . sigma_z^{(k)}`.
pub fn controlled_phase(j: usize, k: usize) -> Result<QOperator> {
    if j == k {
        return Err(Error::BadEdge {
            j,
            k,
            reason: "controlled phase needs two distinct qubits".into(),
        });
    }
    let mut m = CMatrix::identity(4, 4);
    m[(1, 1)] = -ONE; // |0>_j |1>_k
    QOperator::unitary(vec![j, k], m)
}

/// The standard controlled-Z gate (phase -1 on `|1>_j |1>_k`), provided
/// for cross-checks against the graph-state literature.
pub fn standard_cz(j: usize, k: usize) -> Result<QOperator> {
    if j == k {
        return Err(Error::BadEdge {
            j,
            k,
            reason: "controlled phase needs two distinct qubits".into(),
        });
    }
    let mut m = CMatrix::identity(4, 4);
    m[(3, 3)] = -ONE;
    QOperator::unitary(vec![j, k], m)
}

/// Ordered product of [`controlled_phase`] gates over the graph edges,
/// as a full-register operator. All factors are diagonal, so the order is
/// immaterial; the edge order is kept anyway.
pub fn build_entangler(g: &Graph) -> Result<QOperator> {
    let n = g.vertices();
    let dim = 1usize << n;
    let mut mat = CMatrix::identity(dim, dim);
    for &(j, k) in g.edges() {
        let factor = controlled_phase(j, k)?.embedded_matrix(n)?;
        mat = factor * mat;
    }
    QOperator::unitary((1..=n).collect(), mat)
}

/// Entangles a product of single-qubit inputs over the graph: builds the
/// tensor product (vertex 1 first) and applies the entangler.
pub fn prepare_graph_state(g: &Graph, inputs: &[StateVector]) -> Result<StateVector> {
    if inputs.len() != g.vertices() {
        return Err(Error::DimensionMismatch {
            left: inputs.len(),
            right: g.vertices(),
        });
    }
    for input in inputs {
        if input.num_qubits() != 1 {
            return Err(Error::DimensionMismatch {
                left: input.num_qubits(),
                right: 1,
            });
        }
        let norm = input.norm();
        if (norm - 1.0).abs() > crate::qcore::TOL_EXACT {
            return Err(Error::NotNormalized { norm });
        }
    }
    let product = StateVector::tensor(inputs)?;
    product.apply(&build_entangler(g)?)
}

/// The four-qubit graph state of the star graph, `S |++++>`.
pub fn star_graph_state() -> StateVector {
    let plus = StateVector::ket_plus();
    prepare_graph_state(
        &Graph::star4(),
        &[plus.clone(), plus.clone(), plus.clone(), plus],
    )
    .expect("star graph state construction cannot fail")
}

/// `|psi_G> = (|+0-+> + |-1+->)/sqrt(2)` written out from its amplitude
/// formula, independent of the entangler.
pub fn star_graph_state_reference() -> StateVector {
    let plus = StateVector::ket_plus();
    let minus = StateVector::ket_minus();
    let b1 = StateVector::tensor(&[
        plus.clone(),
        StateVector::ket0(),
        minus.clone(),
        plus.clone(),
    ])
    .unwrap();
    let b2 = StateVector::tensor(&[minus.clone(), StateVector::ket1(), plus, minus]).unwrap();
    let inv = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let amps: Vec<C64> = b1
        .amplitudes()
        .iter()
        .zip(b2.amplitudes().iter())
        .map(|(a, b)| (a + b) * inv)
        .collect();
    StateVector::from_amplitudes(amps).unwrap()
}
