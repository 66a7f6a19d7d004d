//! Run configurations, pipeline dispatch and reproducible structured
//! reports. Identical configuration and seed produce byte-identical
//! output files.

use std::fmt;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mbqc::oracle::OracleId;
use crate::mbqc::{run_dj, star_graph_state, star_graph_state_reference, Verdict};
use crate::nmr::gates::ghz_target;
use crate::nmr::metrics::{correlation_attenuated, fidelity_normalized, witness_value};
use crate::nmr::pipeline::{
    dj_ensemble, graph_from_ghz, prepare_ghz_with_budget, DEFAULT_PREPARATION_BUDGET,
};
use crate::nmr::spectrum::{count_signed_peaks, max_absorption, synthesize_spectrum};
use crate::nmr::tomography::tomography_reconstruct_noisy;
use crate::nmr::MoleculeSpec;
use crate::qcore::linalg::CMatrix;
use crate::qcore::DensityMatrix;
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    GraphState,
    DjProjective,
    DjEnsemble,
    Tomography,
    Metrics,
    Spectrum,
    Verify,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::GraphState => "graph-state",
            Mode::DjProjective => "dj-projective",
            Mode::DjEnsemble => "dj-ensemble",
            Mode::Tomography => "tomography",
            Mode::Metrics => "metrics",
            Mode::Spectrum => "spectrum",
            Mode::Verify => "verify",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "graph-state" => Ok(Mode::GraphState),
            "dj-projective" => Ok(Mode::DjProjective),
            "dj-ensemble" => Ok(Mode::DjEnsemble),
            "tomography" => Ok(Mode::Tomography),
            "metrics" => Ok(Mode::Metrics),
            "spectrum" => Ok(Mode::Spectrum),
            "verify" => Ok(Mode::Verify),
            other => Err(Error::BadConfig(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Measurement branch selection for the projective mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchSel {
    /// Enumerate all four (s1, s2) branches.
    All,
    /// Draw outcomes from the Born probabilities with the run seed.
    Sampled,
    Fixed(u8, u8),
}

impl BranchSel {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "all" => Ok(BranchSel::All),
            "sampled" => Ok(BranchSel::Sampled),
            other => {
                let (a, b) = other.split_once(',').ok_or_else(|| {
                    Error::BadConfig(format!(
                        "branch must be `all`, `sampled` or `s1,s2`, got `{other}`"
                    ))
                })?;
                let parse_bit = |t: &str| -> Result<u8> {
                    match t.trim() {
                        "0" => Ok(0),
                        "1" => Ok(1),
                        bad => Err(Error::BadConfig(format!("branch bit `{bad}`"))),
                    }
                };
                Ok(BranchSel::Fixed(parse_bit(a)?, parse_bit(b)?))
            }
        }
    }

    pub fn as_string(&self) -> String {
        match self {
            BranchSel::All => "all".into(),
            BranchSel::Sampled => "sampled".into(),
            BranchSel::Fixed(a, b) => format!("{a},{b}"),
        }
    }
}

/// Everything a run needs; echoed verbatim into the report.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    /// `None` runs all four oracles.
    pub oracle: Option<OracleId>,
    pub branch: BranchSel,
    pub seed: u64,
    pub epsilon: f64,
    pub noise: f64,
    /// Molecule file; `None` uses the bundled crotonic acid.
    pub spec_path: Option<PathBuf>,
    pub out_dir: PathBuf,
    /// Preparation relaxation budget in seconds, when enabled.
    pub time_budget: Option<f64>,
    pub duration: f64,
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::DjProjective,
            oracle: None,
            branch: BranchSel::All,
            seed: 42,
            epsilon: 1.0,
            noise: 0.0,
            spec_path: None,
            out_dir: PathBuf::from("out"),
            time_budget: None,
            duration: 2.0,
            samples: 8192,
        }
    }
}

/// An ordered, machine-readable report: sections of key/value lines with
/// stable ordering.
#[derive(Debug, Clone, Default)]
pub struct Report {
    sections: Vec<(String, Vec<(String, String)>)>,
}

impl Report {
    pub fn push(&mut self, section: &str, key: impl Into<String>, value: impl Into<String>) {
        if let Some((_, lines)) = self.sections.iter_mut().find(|(s, _)| s == section) {
            lines.push((key.into(), value.into()));
        } else {
            self.sections
                .push((section.to_string(), vec![(key.into(), value.into())]));
        }
    }

    pub fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.sections
            .iter()
            .find(|(s, _)| s == section)
            .and_then(|(_, lines)| {
                lines
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, v)| v.as_str())
            })
    }

    pub fn section_lines(&self, section: &str) -> Vec<(&str, &str)> {
        self.sections
            .iter()
            .find(|(s, _)| s == section)
            .map(|(_, lines)| {
                lines
                    .iter()
                    .map(|(k, v)| (k.as_str(), v.as_str()))
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn render(&self) -> String {
        let mut out = String::from("# onewaysim report\nformat = 1\n");
        for (section, lines) in &self.sections {
            out.push_str(&format!("\n[{section}]\n"));
            for (k, v) in lines {
                out.push_str(&format!("{k} = {v}\n"));
            }
        }
        out
    }
}

/// A text artifact written next to the report.
#[derive(Debug, Clone)]
pub struct Artifact {
    pub name: String,
    pub content: String,
}

/// Output of [`run_command`]: the report plus its data files.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: Report,
    pub artifacts: Vec<Artifact>,
    /// Number of failed checks (verify mode), 0 otherwise.
    pub failures: usize,
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.9}")
}

fn fmt_signed(v: f64) -> String {
    format!("{v:+.9}")
}

/// Real or imaginary part of a matrix as a fixed-precision numeric grid.
fn matrix_grid(m: &CMatrix, imag: bool) -> String {
    let mut out = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| {
                let v = if imag { m[(r, c)].im } else { m[(r, c)].re };
                format!("{v:>13.9}")
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn selected_oracles(cfg: &RunConfig) -> Vec<OracleId> {
    match cfg.oracle {
        Some(o) => vec![o],
        None => OracleId::ALL.to_vec(),
    }
}

fn load_spec(cfg: &RunConfig) -> Result<(MoleculeSpec, String)> {
    match &cfg.spec_path {
        Some(path) => Ok((MoleculeSpec::load(path)?, path.display().to_string())),
        None => Ok((
            MoleculeSpec::crotonic_acid(),
            "builtin:crotonic-acid".into(),
        )),
    }
}

fn echo_config(report: &mut Report, cfg: &RunConfig, spec_label: &str) {
    report.push("config", "mode", cfg.mode.as_str());
    report.push(
        "config",
        "oracle",
        cfg.oracle.map_or("all".to_string(), |o| o.to_string()),
    );
    report.push("config", "branch", cfg.branch.as_string());
    report.push("config", "seed", cfg.seed.to_string());
    report.push("config", "epsilon", fmt_f64(cfg.epsilon));
    report.push("config", "noise", fmt_f64(cfg.noise));
    report.push("config", "spec", spec_label);
    report.push("config", "out", cfg.out_dir.display().to_string());
    report.push(
        "config",
        "time_budget_s",
        cfg.time_budget.map_or("none".to_string(), fmt_f64),
    );
    report.push("config", "duration", fmt_f64(cfg.duration));
    report.push("config", "samples", cfg.samples.to_string());
}

fn pinned_conventions(report: &mut Report) {
    report.push("pinned", "ghz_state", "(|0110> + |1001>)/sqrt(2)");
    report.push(
        "pinned",
        "oracle_truth_table",
        "f1: x->0 (constant), f2: x->1 (constant), f3: x->x (balanced), f4: x->1^x (balanced)",
    );
    report.push(
        "pinned",
        "feedforward_polarity",
        "A = qubit-2 state firing sigma_x on qubit 3, B = qubit-1 state firing sigma_z on qubit 3; (A,B) = f1:(0,1) f2:(1,1) f3:(1,0) f4:(0,0)",
    );
    report.push(
        "pinned",
        "logical_wires",
        "target: physical 1 -> physical 3, control: physical 4",
    );
    report.push(
        "pinned",
        "qubit2_angle_feedforward",
        "second measurement angle adapts to (-1)^s1 * alpha2",
    );
}

fn verdict_expect(oracle: OracleId) -> Verdict {
    if oracle.is_constant() {
        Verdict::Constant
    } else {
        Verdict::Balanced
    }
}

fn run_graph_state(cfg: &RunConfig, spec: &MoleculeSpec, out: &mut RunOutput) -> Result<()> {
    let built = star_graph_state();
    let reference = star_graph_state_reference();
    out.report.push(
        "results",
        "entangler_fidelity_to_reference",
        fmt_f64(built.fidelity(&reference)?),
    );

    let ghz = prepare_ghz_with_budget(spec, cfg.epsilon, cfg.time_budget)?;
    out.report.push(
        "results",
        "ghz_overlap_with_target",
        fmt_f64(ghz.rho().overlap(&ghz_target())?),
    );
    let graph = graph_from_ghz(&ghz, spec, cfg.time_budget.is_some())?;
    out.report.push(
        "results",
        "nmr_route_overlap_with_graph_state",
        fmt_f64(graph.rho().overlap(&built)?),
    );
    out.report.push(
        "results",
        "preparation_elapsed_s",
        fmt_f64(graph.elapsed_time()),
    );
    out.artifacts.push(Artifact {
        name: "graph_state_rho_real.txt".into(),
        content: matrix_grid(graph.rho().matrix(), false),
    });
    out.artifacts.push(Artifact {
        name: "graph_state_rho_imag.txt".into(),
        content: matrix_grid(graph.rho().matrix(), true),
    });
    Ok(())
}

fn run_dj_projective(cfg: &RunConfig, out: &mut RunOutput) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut constant = 0usize;
    let mut balanced = 0usize;
    let mut rows = 0usize;
    for oracle in selected_oracles(cfg) {
        let branches: Vec<Option<(u8, u8)>> = match cfg.branch {
            BranchSel::All => vec![Some((0, 0)), Some((0, 1)), Some((1, 0)), Some((1, 1))],
            BranchSel::Sampled => vec![None],
            BranchSel::Fixed(a, b) => vec![Some((a, b))],
        };
        for branch in branches {
            let dj = run_dj(oracle, branch, &mut rng)?;
            match dj.verdict {
                Verdict::Constant => constant += 1,
                Verdict::Balanced => balanced += 1,
            }
            rows += 1;
            let key = format!("{}[{}{}]", oracle, dj.s1, dj.s2);
            let expected = verdict_expect(oracle);
            out.report.push(
                "results",
                key,
                format!(
                    "verdict={} expected={} sx4={} p1={} p2={}",
                    dj.verdict,
                    expected,
                    fmt_signed(dj.control_qubit_sx),
                    fmt_f64(dj.records[0].probability),
                    fmt_f64(dj.records[1].probability),
                ),
            );
        }
    }
    out.report.push("summary", "rows", rows.to_string());
    out.report
        .push("summary", "constant_verdicts", constant.to_string());
    out.report
        .push("summary", "balanced_verdicts", balanced.to_string());
    Ok(())
}

fn run_dj_ensemble_mode(cfg: &RunConfig, spec: &MoleculeSpec, out: &mut RunOutput) -> Result<()> {
    for oracle in selected_oracles(cfg) {
        let result = dj_ensemble(spec, oracle, cfg.epsilon, cfg.time_budget)?;
        out.report.push(
            "results",
            format!("{oracle}"),
            format!(
                "verdict={} sx4={} expected={}",
                result.verdict,
                fmt_signed(result.sx4),
                fmt_signed(if oracle.is_constant() {
                    cfg.epsilon
                } else {
                    -cfg.epsilon
                }),
            ),
        );
        let pops: Vec<String> = result
            .label_populations
            .iter()
            .map(|(s1, s2, p)| format!("p{s1}{s2}={}", fmt_f64(*p)))
            .collect();
        out.report
            .push("results", format!("{oracle}.labels"), pops.join(" "));
    }
    Ok(())
}

fn run_tomography(cfg: &RunConfig, spec: &MoleculeSpec, out: &mut RunOutput) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ideal = ghz_target().to_density();
    let prepared = prepare_ghz_with_budget(spec, cfg.epsilon, cfg.time_budget)?;
    let recon = tomography_reconstruct_noisy(prepared.rho(), cfg.noise, &mut rng)?;

    out.report
        .push("results", "trace", fmt_f64(recon.trace().re));
    out.report.push(
        "results",
        "correlation_attenuated",
        fmt_f64(correlation_attenuated(&ideal, &recon)?),
    );
    out.report.push(
        "results",
        "fidelity_normalized",
        fmt_f64(fidelity_normalized(&ideal, &recon)?),
    );
    out.report
        .push("results", "witness", fmt_signed(witness_value(&recon)?));

    // Largest real-part entries, row col value, descending.
    let m = recon.matrix();
    let mut entries: Vec<(usize, usize, f64)> = (0..16)
        .flat_map(|r| (0..16).map(move |c| (r, c)))
        .map(|(r, c)| (r, c, m[(r, c)].re))
        .collect();
    entries.sort_by(|a, b| b.2.abs().partial_cmp(&a.2.abs()).unwrap());
    for (i, (r, c, v)) in entries.iter().take(4).enumerate() {
        out.report.push(
            "results",
            format!("largest_real_entry_{i}"),
            format!("({r},{c}) {}", fmt_signed(*v)),
        );
    }

    out.artifacts.push(Artifact {
        name: "rho_ideal_real.txt".into(),
        content: matrix_grid(ideal.matrix(), false),
    });
    out.artifacts.push(Artifact {
        name: "rho_recon_real.txt".into(),
        content: matrix_grid(recon.matrix(), false),
    });
    out.artifacts.push(Artifact {
        name: "rho_recon_imag.txt".into(),
        content: matrix_grid(recon.matrix(), true),
    });
    Ok(())
}

fn run_metrics(cfg: &RunConfig, spec: &MoleculeSpec, out: &mut RunOutput) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ideal = ghz_target().to_density();
    let prepared = prepare_ghz_with_budget(spec, cfg.epsilon, cfg.time_budget)?;
    let rho_exp: DensityMatrix = if cfg.noise > 0.0 {
        tomography_reconstruct_noisy(prepared.rho(), cfg.noise, &mut rng)?
    } else {
        prepared.rho().clone()
    };
    out.report.push(
        "results",
        "correlation_attenuated",
        fmt_f64(correlation_attenuated(&ideal, &rho_exp)?),
    );
    out.report.push(
        "results",
        "fidelity_normalized",
        fmt_f64(fidelity_normalized(&ideal, &rho_exp)?),
    );
    out.report
        .push("results", "witness", fmt_signed(witness_value(&rho_exp)?));

    // Informational: correlation against the preparation time budget.
    let base = cfg.time_budget.unwrap_or(DEFAULT_PREPARATION_BUDGET);
    for factor in [0.5, 1.0, 2.0] {
        let budget = base * factor;
        let rho = prepare_ghz_with_budget(spec, cfg.epsilon, Some(budget))?;
        let c = correlation_attenuated(&ideal, rho.rho())?;
        out.report.push(
            "budget_sweep",
            format!("c_at_{}ms", (budget * 1e3).round() as u64),
            fmt_f64(c),
        );
    }
    Ok(())
}

fn run_spectrum(cfg: &RunConfig, spec: &MoleculeSpec, out: &mut RunOutput) -> Result<()> {
    for oracle in selected_oracles(cfg) {
        let result = dj_ensemble(spec, oracle, cfg.epsilon, cfg.time_budget)?;
        let sp = synthesize_spectrum(&result.final_state, spec, 4, cfg.duration, cfg.samples)?;
        let (pos, neg) = count_signed_peaks(&sp, 0.2);
        out.report.push(
            "results",
            format!("{oracle}"),
            format!(
                "verdict={} sx4={} peaks_positive={pos} peaks_negative={neg} max_absorption={}",
                result.verdict,
                fmt_signed(result.sx4),
                fmt_f64(max_absorption(&sp)),
            ),
        );

        let mut table = String::new();
        for (f, a) in sp.frequencies.iter().zip(sp.amplitudes.iter()) {
            table.push_str(&format!("{f:>14.6} {:>14.9}\n", a.re));
        }
        out.artifacts.push(Artifact {
            name: format!("spectrum_{oracle}.txt"),
            content: table,
        });
        out.artifacts.push(Artifact {
            name: format!("spectrum_{oracle}.meta.txt"),
            content: format!(
                "observe_qubit = 4\nduration_s = {}\nsamples = {}\nreference_phase = {}\noracle = {oracle}\n",
                fmt_f64(sp.duration),
                sp.samples,
                sp.reference_phase,
            ),
        });
    }
    Ok(())
}

fn run_verify(out: &mut RunOutput) {
    let results = verify::run_all();
    let mut failures = 0usize;
    for check in &results {
        let status = if check.passed { "pass" } else { "FAIL" };
        let line = if check.detail.is_empty() {
            status.to_string()
        } else {
            format!("{status} ({})", check.detail)
        };
        out.report.push("checks", check.name, line);
        if !check.passed {
            failures += 1;
        }
    }
    out.report
        .push("summary", "checks", results.len().to_string());
    out.report.push("summary", "failures", failures.to_string());
    out.failures = failures;
}

/// Executes the configured pipeline and assembles the report and its
/// artifacts. Pure except for reading an external molecule file.
pub fn run_command(cfg: &RunConfig) -> Result<RunOutput> {
    if !(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0) {
        return Err(Error::BadPolarization(cfg.epsilon));
    }
    if cfg.noise < 0.0 {
        return Err(Error::BadConfig(format!("negative noise {}", cfg.noise)));
    }
    let (spec, spec_label) = load_spec(cfg)?;
    let mut out = RunOutput {
        report: Report::default(),
        artifacts: Vec::new(),
        failures: 0,
    };
    echo_config(&mut out.report, cfg, &spec_label);
    if spec.relaxation_defaulted() {
        out.report.push(
            "warnings",
            "relaxation",
            "no [relaxation] section; defaulting T1 = T2 = infinity",
        );
    }
    pinned_conventions(&mut out.report);

    match cfg.mode {
        Mode::GraphState => run_graph_state(cfg, &spec, &mut out)?,
        Mode::DjProjective => run_dj_projective(cfg, &mut out)?,
        Mode::DjEnsemble => run_dj_ensemble_mode(cfg, &spec, &mut out)?,
        Mode::Tomography => run_tomography(cfg, &spec, &mut out)?,
        Mode::Metrics => run_metrics(cfg, &spec, &mut out)?,
        Mode::Spectrum => run_spectrum(cfg, &spec, &mut out)?,
        Mode::Verify => run_verify(&mut out),
    }
    Ok(out)
}

/// Writes the artifacts and the rendered report into `dir`, returning the
/// file manifest. The report itself lists every written file under
/// `[files]`.
pub fn emit_report(output: &RunOutput, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
    let mut manifest = Vec::new();
    let mut report = output.report.clone();
    for artifact in &output.artifacts {
        let path = dir.join(&artifact.name);
        std::fs::write(&path, &artifact.content)
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        report.push(
            "files",
            &artifact.name,
            format!("{} bytes", artifact.content.len()),
        );
        manifest.push(path);
    }
    report.push("files", "report.txt", "rendered report");
    let path = dir.join("report.txt");
    std::fs::write(&path, report.render()).map_err(|e| Error::io(path.display().to_string(), e))?;
    manifest.push(path);
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(mode: Mode) -> RunConfig {
        RunConfig {
            mode,
            ..RunConfig::default()
        }
    }

    #[test]
    fn projective_all_enumerates_sixteen_rows() {
        let out = run_command(&cfg(Mode::DjProjective)).unwrap();
        assert_eq!(out.report.get("summary", "rows"), Some("16"));
        assert_eq!(out.report.get("summary", "constant_verdicts"), Some("8"));
        assert_eq!(out.report.get("summary", "balanced_verdicts"), Some("8"));
    }

    #[test]
    fn ensemble_mode_reports_unit_signal_for_f1() {
        let mut c = cfg(Mode::DjEnsemble);
        c.oracle = Some(OracleId::F1);
        let out = run_command(&c).unwrap();
        let row = out.report.get("results", "f1").unwrap();
        assert!(row.contains("verdict=constant"), "{row}");
        assert!(row.contains("sx4=+1.000000000"), "{row}");
    }

    #[test]
    fn metrics_mode_on_the_ideal_pipeline() {
        let out = run_command(&cfg(Mode::Metrics)).unwrap();
        assert_eq!(
            out.report.get("results", "correlation_attenuated"),
            Some("1.000000000")
        );
        assert_eq!(
            out.report.get("results", "fidelity_normalized"),
            Some("1.000000000")
        );
        assert_eq!(out.report.get("results", "witness"), Some("-0.500000000"));
    }

    #[test]
    fn identical_configs_emit_identical_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let mut c = cfg(Mode::Tomography);
        c.noise = 0.01;
        let a_dir = dir.path().join("a");
        let b_dir = dir.path().join("b");
        emit_report(&run_command(&c).unwrap(), &a_dir).unwrap();
        emit_report(&run_command(&c).unwrap(), &b_dir).unwrap();
        for name in ["report.txt", "rho_recon_real.txt"] {
            let a = std::fs::read(a_dir.join(name)).unwrap();
            let b = std::fs::read(b_dir.join(name)).unwrap();
            assert_eq!(a, b, "{name} differs between identical runs");
        }
    }

    #[test]
    fn different_seeds_change_noisy_tomography() {
        let mut c1 = cfg(Mode::Tomography);
        c1.noise = 0.01;
        let mut c2 = c1.clone();
        c2.seed = 43;
        let a = run_command(&c1).unwrap();
        let b = run_command(&c2).unwrap();
        assert_ne!(
            a.report.get("results", "correlation_attenuated"),
            b.report.get("results", "correlation_attenuated")
        );
    }

    #[test]
    fn spectrum_mode_emits_two_column_files() {
        let mut c = cfg(Mode::Spectrum);
        c.oracle = Some(OracleId::F1);
        c.samples = 1024;
        c.duration = 1.0;
        let out = run_command(&c).unwrap();
        let table = &out
            .artifacts
            .iter()
            .find(|a| a.name == "spectrum_f1.txt")
            .unwrap()
            .content;
        assert_eq!(table.lines().count(), 1024);
        for line in table.lines().take(4) {
            assert_eq!(line.split_whitespace().count(), 2);
        }
    }

    #[test]
    fn config_echo_is_verbatim() {
        let mut c = cfg(Mode::Metrics);
        c.seed = 123;
        c.epsilon = 0.75;
        c.noise = 0.02;
        c.time_budget = Some(0.085);
        let out = run_command(&c).unwrap();
        assert_eq!(out.report.get("config", "seed"), Some("123"));
        assert_eq!(out.report.get("config", "epsilon"), Some("0.750000000"));
        assert_eq!(out.report.get("config", "noise"), Some("0.020000000"));
        assert_eq!(
            out.report.get("config", "time_budget_s"),
            Some("0.085000000")
        );
    }

    #[test]
    fn defaulted_relaxation_warns_in_the_report() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bare.molspec");
        std::fs::write(
            &path,
            "[shifts]\nA = 100\nB = -50\nC = 10\nD = 70\n[jcouplings]\nB = 7\nC = 3 5\nD = 1 2 4\n",
        )
        .unwrap();
        let mut c = cfg(Mode::DjEnsemble);
        c.oracle = Some(OracleId::F3);
        c.spec_path = Some(path);
        let out = run_command(&c).unwrap();
        assert!(out
            .report
            .get("warnings", "relaxation")
            .unwrap()
            .contains("infinity"));
        let row = out.report.get("results", "f3").unwrap();
        assert!(row.contains("verdict=balanced"), "{row}");
    }

    #[test]
    fn bad_epsilon_is_rejected() {
        let mut c = cfg(Mode::DjEnsemble);
        c.epsilon = 0.0;
        assert!(run_command(&c).is_err());
    }

    #[test]
    fn branch_parse_round_trips() {
        assert_eq!(BranchSel::parse("all").unwrap(), BranchSel::All);
        assert_eq!(BranchSel::parse("sampled").unwrap(), BranchSel::Sampled);
        assert_eq!(BranchSel::parse("1,0").unwrap(), BranchSel::Fixed(1, 0));
        assert!(BranchSel::parse("2,0").is_err());
    }
}
