//! The NMR-ensemble realization of the one-way computation: molecule
//! parameters, pseudopure states, decomposed gates, gradient sequences,
//! relaxation, tomography, metrics and spectrum synthesis.

pub mod ensemble;
pub mod gates;
pub mod gradient;
pub mod metrics;
pub mod molecule;
pub mod pipeline;
pub mod relax;
pub mod spectrum;
pub mod tomography;

pub use ensemble::{free_evolution, pseudopure_init, EnsembleState};
pub use gates::{cnot_decomposed, ghz_target, ghz_to_graph, prepare_ghz};
pub use gradient::{
    conditional_feed_forward, gradient_average, gradient_crusher, gradient_pulse,
    mimic_measurement, pz_sequence,
};
pub use metrics::{correlation_attenuated, fidelity_normalized, witness_value};
pub use molecule::{load_molecule_spec, MoleculeSpec};
pub use pipeline::{dj_ensemble, prepare_graph_via_ghz, EnsembleDJOutcome};
pub use relax::relaxation_channel;
pub use spectrum::{synthesize_spectrum, SpectrumData};
pub use tomography::{tomography_reconstruct, tomography_reconstruct_noisy};
