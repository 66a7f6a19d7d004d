//! Molecule parameter files: chemical shifts, J-couplings, relaxation
//! times and the nucleus-to-qubit assignment.
//!
//! The on-disk format is a plain-text section file:
//!
//! ```text
//! [shifts]        # nucleus = offset (Hz); order defines the nucleus list
//! [jcouplings]    # lower-triangular rows: nucleus = J(row,col1) J(row,col2) ..
//! [relaxation]    # nucleus = T1 T2  (seconds); optional section
//! [qubit_map]     # qubit index = nucleus; optional, defaults to identity
//! ```

use std::collections::BTreeSet;
use std::path::Path;

use crate::error::{Error, Result};

/// Spin-system parameters of one molecule.
#[derive(Debug, Clone)]
pub struct MoleculeSpec {
    names: Vec<String>,
    shifts_hz: Vec<f64>,
    /// Full symmetric J matrix in Hz, zero diagonal, nucleus order.
    j_hz: Vec<Vec<f64>>,
    t1: Vec<f64>,
    t2: Vec<f64>,
    /// `qubit_map[q-1]` is the nucleus index assigned to physical qubit q.
    qubit_map: Vec<usize>,
    relaxation_defaulted: bool,
}

impl MoleculeSpec {
    /// Builds and validates a spec from nucleus-ordered data.
    pub fn new(
        names: Vec<String>,
        shifts_hz: Vec<f64>,
        j_hz: Vec<Vec<f64>>,
        t1: Vec<f64>,
        t2: Vec<f64>,
        qubit_map: Vec<usize>,
    ) -> Result<Self> {
        let spec = MoleculeSpec {
            names,
            shifts_hz,
            j_hz,
            t1,
            t2,
            qubit_map,
            relaxation_defaulted: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let n = self.names.len();
        if n == 0 {
            return Err(Error::SpecInvalid("no nuclei defined".into()));
        }
        for (field, len) in [
            ("shifts", self.shifts_hz.len()),
            ("T1", self.t1.len()),
            ("T2", self.t2.len()),
            ("qubit_map", self.qubit_map.len()),
            ("jcouplings", self.j_hz.len()),
        ] {
            if len != n {
                return Err(Error::SpecInvalid(format!(
                    "{field} has {len} entries for {n} nuclei"
                )));
            }
        }
        for (i, row) in self.j_hz.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SpecInvalid(format!(
                    "J matrix row {} has {} entries for {} nuclei",
                    self.names[i],
                    row.len(),
                    n
                )));
            }
            if row[i] != 0.0 {
                return Err(Error::SpecInvalid(format!(
                    "J matrix diagonal must be zero, J({0},{0}) = {1}",
                    self.names[i], row[i]
                )));
            }
            for j in 0..n {
                if (self.j_hz[i][j] - self.j_hz[j][i]).abs() > 1e-12 {
                    return Err(Error::SpecInvalid(format!(
                        "J matrix is asymmetric at ({},{}): {} vs {}",
                        self.names[i], self.names[j], self.j_hz[i][j], self.j_hz[j][i]
                    )));
                }
            }
        }
        for i in 0..n {
            let (t1, t2) = (self.t1[i], self.t2[i]);
            if t1.is_nan() || t2.is_nan() || t1 <= 0.0 || t2 <= 0.0 {
                return Err(Error::SpecInvalid(format!(
                    "relaxation times must be positive for {}: T1 = {t1}, T2 = {t2}",
                    self.names[i]
                )));
            }
            if t1 < t2 {
                return Err(Error::SpecInvalid(format!(
                    "T1 >= T2 violated for {}: T1 = {t1} < T2 = {t2}",
                    self.names[i]
                )));
            }
        }
        let seen: BTreeSet<usize> = self.qubit_map.iter().copied().collect();
        if seen.len() != n || self.qubit_map.iter().any(|&m| m >= n) {
            return Err(Error::SpecInvalid(format!(
                "qubit_map {:?} is not a permutation of the {n} nuclei",
                self.qubit_map
            )));
        }
        Ok(())
    }

    /// Number of spins.
    pub fn num_spins(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relaxation_defaulted(&self) -> bool {
        self.relaxation_defaulted
    }

    fn nucleus_of_qubit(&self, q: usize) -> usize {
        self.qubit_map[q - 1]
    }

    /// Nucleus label assigned to a physical qubit.
    pub fn nucleus_name_of_qubit(&self, q: usize) -> &str {
        &self.names[self.nucleus_of_qubit(q)]
    }

    /// Rotating-frame offset of a qubit's nucleus in Hz.
    pub fn shift_of_qubit(&self, q: usize) -> f64 {
        self.shifts_hz[self.nucleus_of_qubit(q)]
    }

    /// Larmor angular frequency of a qubit's nucleus, `2 pi * shift`.
    pub fn omega_of_qubit(&self, q: usize) -> f64 {
        std::f64::consts::TAU * self.shift_of_qubit(q)
    }

    /// J-coupling between the nuclei of two qubits, Hz.
    pub fn j_of_qubits(&self, q1: usize, q2: usize) -> f64 {
        self.j_hz[self.nucleus_of_qubit(q1)][self.nucleus_of_qubit(q2)]
    }

    pub fn t1_of_qubit(&self, q: usize) -> f64 {
        self.t1[self.nucleus_of_qubit(q)]
    }

    pub fn t2_of_qubit(&self, q: usize) -> f64 {
        self.t2[self.nucleus_of_qubit(q)]
    }

    /// Parses the section file format. Errors carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq, Clone, Copy)]
        enum Section {
            None,
            Shifts,
            JCouplings,
            Relaxation,
            QubitMap,
        }

        let mut section = Section::None;
        let mut names: Vec<String> = Vec::new();
        let mut shifts: Vec<f64> = Vec::new();
        let mut j_rows: Vec<(usize, String, Vec<f64>)> = Vec::new();
        let mut relax: Vec<(usize, String, f64, f64)> = Vec::new();
        let mut map_entries: Vec<(usize, usize, String)> = Vec::new();
        let mut saw_relaxation = false;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name.strip_suffix(']').ok_or(Error::SpecParse {
                    line,
                    msg: "unterminated section header".into(),
                })?;
                section = match name.trim() {
                    "shifts" => Section::Shifts,
                    "jcouplings" => Section::JCouplings,
                    "relaxation" => {
                        saw_relaxation = true;
                        Section::Relaxation
                    }
                    "qubit_map" => Section::QubitMap,
                    other => {
                        return Err(Error::SpecParse {
                            line,
                            msg: format!("unknown section [{other}]"),
                        })
                    }
                };
                continue;
            }
            let (key, value) = content.split_once('=').ok_or(Error::SpecParse {
                line,
                msg: "expected `key = value`".into(),
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = |tok: &str| -> Result<f64> {
                tok.parse::<f64>().map_err(|_| Error::SpecParse {
                    line,
                    msg: format!("cannot parse number `{tok}`"),
                })
            };
            match section {
                Section::None => {
                    return Err(Error::SpecParse {
                        line,
                        msg: "data before the first section header".into(),
                    })
                }
                Section::Shifts => {
                    if names.iter().any(|n| n == key) {
                        return Err(Error::SpecParse {
                            line,
                            msg: format!("duplicate nucleus `{key}`"),
                        });
                    }
                    names.push(key.to_string());
                    shifts.push(parse_f64(value)?);
                }
                Section::JCouplings => {
                    let vals: Vec<f64> = value
                        .split_whitespace()
                        .map(parse_f64)
                        .collect::<Result<_>>()?;
                    j_rows.push((line, key.to_string(), vals));
                }
                Section::Relaxation => {
                    let vals: Vec<f64> = value
                        .split_whitespace()
                        .map(parse_f64)
                        .collect::<Result<_>>()?;
                    if vals.len() != 2 {
                        return Err(Error::SpecParse {
                            line,
                            msg: format!("expected `T1 T2`, got {} values", vals.len()),
                        });
                    }
                    relax.push((line, key.to_string(), vals[0], vals[1]));
                }
                Section::QubitMap => {
                    let q: usize = key.parse().map_err(|_| Error::SpecParse {
                        line,
                        msg: format!("cannot parse qubit index `{key}`"),
                    })?;
                    map_entries.push((line, q, value.to_string()));
                }
            }
        }

        let n = names.len();
        if n == 0 {
            return Err(Error::SpecInvalid("missing [shifts] section".into()));
        }
        let index_of = |line: usize, name: &str| -> Result<usize> {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::SpecParse {
                    line,
                    msg: format!("unknown nucleus `{name}`"),
                })
        };

        // Lower-triangular J rows: row for nucleus i lists J(i, 0..i).
        let mut j = vec![vec![0.0; n]; n];
        let mut row_seen = vec![false; n];
        row_seen[0] = true; // the first nucleus has no earlier neighbors
        for (line, name, vals) in &j_rows {
            let i = index_of(*line, name)?;
            if vals.len() != i {
                return Err(Error::SpecParse {
                    line: *line,
                    msg: format!(
                        "J row for {name} must list {i} value(s) (couplings to the earlier nuclei), got {}",
                        vals.len()
                    ),
                });
            }
            row_seen[i] = true;
            for (k, v) in vals.iter().enumerate() {
                j[i][k] = *v;
                j[k][i] = *v;
            }
        }
        if let Some(missing) = row_seen.iter().position(|seen| !seen) {
            return Err(Error::SpecInvalid(format!(
                "missing [jcouplings] row for nucleus {}",
                names[missing]
            )));
        }

        let (mut t1, mut t2) = (vec![f64::INFINITY; n], vec![f64::INFINITY; n]);
        for (line, name, a, b) in &relax {
            let i = index_of(*line, name)?;
            t1[i] = *a;
            t2[i] = *b;
        }

        let qubit_map: Vec<usize> = if map_entries.is_empty() {
            (0..n).collect()
        } else {
            let mut map = vec![usize::MAX; n];
            for (line, q, name) in &map_entries {
                if *q == 0 || *q > n {
                    return Err(Error::SpecParse {
                        line: *line,
                        msg: format!("qubit index {q} out of range 1..={n}"),
                    });
                }
                map[*q - 1] = index_of(*line, name)?;
            }
            if map.contains(&usize::MAX) {
                return Err(Error::SpecInvalid(
                    "qubit_map does not cover every qubit".into(),
                ));
            }
            map
        };

        let spec = MoleculeSpec {
            names,
            shifts_hz: shifts,
            j_hz: j,
            t1,
            t2,
            qubit_map,
            relaxation_defaulted: !saw_relaxation,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Loads and parses a molecule file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::parse(&text)
    }

    /// The bundled crotonic-acid example (four labelled carbons, nuclei
    /// C2, C4, C3, C1 assigned to qubits 1..4).
    pub fn crotonic_acid() -> Self {
        Self::parse(include_str!("../../data/crotonic_acid.molspec"))
            .expect("bundled molecule file parses")
    }
}

/// Spec-level alias for [`MoleculeSpec::load`].
pub fn load_molecule_spec(path: impl AsRef<Path>) -> Result<MoleculeSpec> {
    MoleculeSpec::load(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_crotonic_acid_has_the_measured_relaxation_times() {
        let spec = MoleculeSpec::crotonic_acid();
        assert_eq!(spec.num_spins(), 4);
        // Qubit 4 is C1: T1 = 12.37 s, T2 = 376.2 ms.
        assert_eq!(spec.nucleus_name_of_qubit(4), "C1");
        assert!((spec.t1_of_qubit(4) - 12.37).abs() < 1e-12);
        assert!((spec.t2_of_qubit(4) - 0.3762).abs() < 1e-12);
        // Qubit map is C2, C4, C3, C1.
        assert_eq!(spec.nucleus_name_of_qubit(1), "C2");
        assert_eq!(spec.nucleus_name_of_qubit(2), "C4");
        assert_eq!(spec.nucleus_name_of_qubit(3), "C3");
        assert!(!spec.relaxation_defaulted());
    }

    #[test]
    fn j_matrix_lookup_is_symmetric_across_the_qubit_map() {
        let spec = MoleculeSpec::crotonic_acid();
        for q1 in 1..=4 {
            for q2 in 1..=4 {
                assert_eq!(spec.j_of_qubits(q1, q2), spec.j_of_qubits(q2, q1));
            }
        }
        assert_eq!(spec.j_of_qubits(1, 1), 0.0);
    }

    #[test]
    fn asymmetric_j_row_is_rejected_with_the_pair_named() {
        let text = "\
[shifts]
A = 100
B = -50
[jcouplings]
B = 7 3
";
        let err = MoleculeSpec::parse(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("J row"), "{msg}");
    }

    #[test]
    fn missing_relaxation_defaults_to_infinity_with_a_flag() {
        let text = "\
[shifts]
A = 100
B = -50
[jcouplings]
B = 7
";
        let spec = MoleculeSpec::parse(text).unwrap();
        assert!(spec.relaxation_defaulted());
        assert!(spec.t1_of_qubit(1).is_infinite());
        assert!(spec.t2_of_qubit(2).is_infinite());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "[shifts]\nA = not_a_number\n";
        match MoleculeSpec::parse(text) {
            Err(Error::SpecParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn t1_smaller_than_t2_is_rejected() {
        let text = "\
[shifts]
A = 0
B = 1
[jcouplings]
B = 5
[relaxation]
A = 0.1 0.5
B = 1.0 0.5
";
        let err = MoleculeSpec::parse(text).unwrap_err();
        assert!(err.to_string().contains("T1 >= T2"), "{err}");
    }

    #[test]
    fn qubit_map_must_be_a_permutation() {
        let text = "\
[shifts]
A = 0
B = 1
[jcouplings]
B = 5
[qubit_map]
1 = A
2 = A
";
        assert!(MoleculeSpec::parse(text).is_err());
    }

    #[test]
    fn default_qubit_map_is_identity() {
        let text = "\
[shifts]
A = 0
B = 1
[jcouplings]
B = 5
";
        let spec = MoleculeSpec::parse(text).unwrap();
        assert_eq!(spec.nucleus_name_of_qubit(1), "A");
        assert_eq!(spec.nucleus_name_of_qubit(2), "B");
    }
}
