//! Runs the one-way Deutsch-Josza algorithm over every oracle and branch,
//! then the gradient-mimicked ensemble variant, printing one line each.
//!
//! ```sh
//! cargo run --example dj_demo
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use onewaysim::mbqc::{run_dj, OracleId};
use onewaysim::nmr::{dj_ensemble, MoleculeSpec};

fn main() -> onewaysim::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    println!("projective one-way runs (every branch):");
    for oracle in OracleId::ALL {
        for s1 in 0..2 {
            for s2 in 0..2 {
                let out = run_dj(oracle, Some((s1, s2)), &mut rng)?;
                println!(
                    "  {oracle} branch ({s1},{s2}): verdict {:<8} <sx4> = {:+.6}",
                    out.verdict.to_string(),
                    out.control_qubit_sx
                );
            }
        }
    }

    let spec = MoleculeSpec::crotonic_acid();
    println!("\nensemble runs (pseudopure eps = 0.8, no relaxation):");
    for oracle in OracleId::ALL {
        let out = dj_ensemble(&spec, oracle, 0.8, None)?;
        println!(
            "  {oracle}: verdict {:<8} <sx4> = {:+.6}",
            out.verdict.to_string(),
            out.sx4
        );
    }
    Ok(())
}
