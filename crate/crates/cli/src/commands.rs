//! Command dispatch over a parsed algebra file, and directory batches.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use taumap::artranslation::{five_term_check, tau, FiveTermReport};
use taumap::k0::{coxeter_matrix, decide_tau_map, Sign};
use taumap::nakayama::Direction;
use taumap::repr::{ext1_dim, is_isomorphic};
use taumap::verify::verify_nakayama;
use taumap::{KupischSeries, MonomialAlgebra, NakayamaIndec, Representation};

use crate::file::{parse_algebra_file, AlgebraFile, ParseError};
use crate::report::{emit_report, AlgebraSummary, Check, Format, Report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_FAILED: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Info,
    Cartan,
    Coxeter {
        sign: Sign,
    },
    ExtQuiver,
    IsNakayama,
    /// `τ M(vertex, length)` on a Nakayama algebra.
    TauModule {
        vertex: String,
        length: usize,
    },
    TauSimple {
        vertex: String,
    },
    TauMap,
    Verify,
    Reduce {
        vertex: String,
    },
    FiveTerm {
        vertex: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Info => "info",
            Command::Cartan => "cartan",
            Command::Coxeter { .. } => "coxeter",
            Command::ExtQuiver => "ext-quiver",
            Command::IsNakayama => "is-nakayama",
            Command::TauModule { .. } | Command::TauSimple { .. } => "tau",
            Command::TauMap => "tau-map",
            Command::Verify => "verify",
            Command::Reduce { .. } => "reduce",
            Command::FiveTerm { .. } => "five-term",
        }
    }
}

/// Anything that makes the input unusable; reported with exit code 1.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Algebra(#[from] taumap::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit: u8,
}

fn summary(a: &MonomialAlgebra) -> AlgebraSummary {
    AlgebraSummary {
        name: a.name().unwrap_or("unnamed").to_string(),
        dim: a.dim(),
        nakayama: a.is_nakayama(),
    }
}

fn vertex(a: &MonomialAlgebra, id: &str) -> Result<usize, InputError> {
    a.quiver()
        .vertex_index(id)
        .ok_or_else(|| InputError::Usage(format!("unknown vertex `{id}`")))
}

fn labels(a: &MonomialAlgebra, vs: &[usize]) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| a.quiver().vertex_label(v)).collect();
    names.join(" ")
}

fn fmt_vec(v: &[i64]) -> String {
    let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", cells.join(" "))
}

fn nakayama_series(a: &Arc<MonomialAlgebra>) -> Result<KupischSeries, InputError> {
    if !a.is_nakayama() || !a.quiver().is_connected() {
        return Err(InputError::Usage(
            "this command needs a connected Nakayama algebra".into(),
        ));
    }
    Ok(KupischSeries::of(a)?)
}

fn check(name: impl Into<String>, pass: bool) -> Check {
    Check {
        name: name.into(),
        pass,
    }
}

pub fn run_command(command: &Command, file: &AlgebraFile) -> Result<Outcome, InputError> {
    let a = Arc::new(file.build()?);
    let q = a.quiver();
    let mut r = Report::new(command.name(), summary(&a));
    match command {
        Command::Info => {
            r.details.push(format!("vertices: {}", q.vertex_count()));
            r.details.push(format!("arrows: {}", q.arrow_count()));
            r.details
                .push(format!("relations: {}", a.relations().len()));
            r.details.push(format!("basis size: {}", a.basis().len()));
            r.details.push(format!("acyclic: {}", q.is_acyclic()));
            for c in q.components() {
                r.details.push(format!("component: {}", labels(&a, &c)));
            }
        }
        Command::Cartan => r.matrix = Some(a.cartan_matrix().to_nested()),
        Command::Coxeter { sign } => {
            let c = coxeter_matrix(&a, *sign)?;
            r.details.push(format!("sign: {sign}"));
            match c.to_int() {
                Some(m) => r.matrix = Some(m.to_nested()),
                None => {
                    let m = &c.matrix;
                    r.rational_matrix = Some(
                        (0..m.rows())
                            .map(|i| m.row(i).iter().map(ToString::to_string).collect())
                            .collect(),
                    );
                }
            }
        }
        Command::ExtQuiver => {
            let n = a.vertex_count();
            let mut m = vec![vec![0i64; n]; n];
            for (s, row) in m.iter_mut().enumerate() {
                for (t, cell) in row.iter_mut().enumerate() {
                    *cell = ext1_dim(&a, s, t)? as i64;
                    if *cell > 0 {
                        r.details.push(format!(
                            "Ext^1(S{}, S{}) = {}",
                            q.vertex_label(s),
                            q.vertex_label(t),
                            cell
                        ));
                    }
                }
            }
            r.matrix = Some(m);
        }
        Command::IsNakayama => {
            r.verdict = Some(
                if a.is_nakayama() {
                    "nakayama"
                } else {
                    "not-nakayama"
                }
                .into(),
            );
            if a.is_nakayama() && q.is_connected() {
                let k = KupischSeries::of(&a)?;
                let series: Vec<String> = k.lengths().iter().map(ToString::to_string).collect();
                r.details.push(format!(
                    "{} Kupisch series: {}",
                    if k.is_cyclic() { "cyclic" } else { "linear" },
                    series.join(" ")
                ));
            }
        }
        Command::TauSimple { vertex: id } => {
            let v = vertex(&a, id)?;
            let t = tau(&Representation::simple(&a, v))?;
            if t.is_zero() {
                r.verdict = Some("projective".into());
                r.details
                    .push(format!("S{id} is projective; its translate is zero"));
            } else {
                r.verdict = Some("non-projective".into());
                r.details.push(format!(
                    "dim vector of tau S{id}: {}",
                    fmt_vec(&t.dim_vector())
                ));
            }
        }
        Command::TauModule { vertex: id, length } => {
            let k = nakayama_series(&a)?;
            let m = NakayamaIndec::new(vertex(&a, id)?, *length);
            let t = tau(&k.module(m)?)?;
            match k.translate(m, Direction::Tau)? {
                None => {
                    r.verdict = Some("projective".into());
                    r.checks = Some(vec![check("engine translate is zero", t.is_zero())]);
                }
                Some(closed) => {
                    let expected = k.dim_vector(closed)?;
                    r.verdict = Some(closed.display(&k));
                    r.details
                        .push(format!("tau {} = {}", m.display(&k), closed.display(&k)));
                    r.details
                        .push(format!("dim vector: {}", fmt_vec(&t.dim_vector())));
                    r.checks = Some(vec![
                        check(
                            "dimension vector matches closed form",
                            t.dim_vector() == expected,
                        ),
                        check(
                            "isomorphic to closed form",
                            is_isomorphic(&t, &k.module(closed)?)?,
                        ),
                    ]);
                }
            }
        }
        Command::TauMap => {
            let v = decide_tau_map(&a)?;
            r.verdict = Some(v.status.to_string());
            r.matrix = v.witness.map(|w| w.to_nested());
            for c in &v.components {
                r.details.push(format!(
                    "component {}: {} ({})",
                    labels(&a, &c.vertices),
                    c.status,
                    c.branch
                ));
            }
        }
        Command::Verify => {
            let k = nakayama_series(&a)?;
            let report = verify_nakayama(&k)?;
            r.matrix = Some(report.phi.to_nested());
            r.details
                .push(format!("indecomposables: {}", report.indecomposables));
            r.details
                .push(format!("non-projective checked: {}", report.checks.len()));
            for m in &report.inverse_failures {
                r.details.push(format!(
                    "tau-inverse disagrees with closed form at {}",
                    m.display(&k)
                ));
            }
            r.checks = Some(
                report
                    .checks
                    .iter()
                    .map(|c| {
                        check(
                            format!(
                                "tau {} = {}",
                                c.module.display(&k),
                                c.closed_form.display(&k)
                            ),
                            c.passed(),
                        )
                    })
                    .collect(),
            );
            r.verdict = Some(if report.passed() { "pass" } else { "fail" }.into());
        }
        Command::Reduce { vertex: id } => {
            let (reduced, _) = a.delete_source_vertex(vertex(&a, id)?)?;
            r.algebra_file = Some(AlgebraFile::from_algebra(&reduced).render());
        }
        Command::FiveTerm { vertex: id } => {
            let v = vertex(&a, id)?;
            match five_term_check(&Representation::simple(&a, v))? {
                FiveTermReport::NotApplicable(why) => {
                    r.verdict = Some("not-applicable".into());
                    r.details.push(why);
                }
                FiveTermReport::Checked(splits) => {
                    r.verdict = Some("checked".into());
                    let mut checks = Vec::new();
                    for s in &splits {
                        let at = format!("split I{}", q.vertex_label(s.split_vertex));
                        checks.push(check(
                            format!("{at}: injective sequence exact"),
                            s.injective_sequence_exact,
                        ));
                        checks.push(check(
                            format!("{at}: Nakayama sequence exact"),
                            s.nakayama_sequence_exact,
                        ));
                        checks.push(check(
                            format!("{at}: M and N indecomposable"),
                            s.m_indecomposable && s.n_indecomposable,
                        ));
                        checks.push(check(
                            format!("{at}: M and N non-injective"),
                            s.m_non_injective && s.n_non_injective,
                        ));
                        checks.push(check(
                            format!("{at}: M and N non-isomorphic"),
                            s.non_isomorphic,
                        ));
                        checks.push(check(
                            format!("{at}: cokernels are the inverse translates"),
                            s.translates_agree,
                        ));
                    }
                    r.checks = Some(checks);
                }
            }
        }
    }
    let failed = !r.all_checks_pass() || r.verdict.as_deref() == Some("fail");
    Ok(Outcome {
        exit: if failed { EXIT_FAILED } else { EXIT_OK },
        report: r,
    })
}

/// Reads and parses a file, naming the algebra after the file stem when the
/// file has no `name:` line.
pub fn load(path: &Path) -> Result<AlgebraFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut file = parse_algebra_file(&text).map_err(|source| InputError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    if file.name.is_none() {
        file.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    }
    Ok(file)
}

/// Output of one invocation: what goes to stdout and stderr, and the exit
/// code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Rendered {
    pub stdout: String,
    pub stderr: String,
    pub exit: u8,
}

fn run_file(command: &Command, path: &Path) -> Result<Outcome, InputError> {
    run_command(command, &load(path)?)
}

/// Runs `command` on a file, or on every file of a directory in filename
/// order. A batch exits with 2 if any file failed verification, otherwise 1 if
/// any input was unusable.
pub fn run_path(command: &Command, path: &Path, format: Format) -> Rendered {
    if !path.is_dir() {
        return match run_file(command, path) {
            Ok(o) => Rendered {
                stdout: emit_report(&o.report, format),
                stderr: String::new(),
                exit: o.exit,
            },
            Err(e) => Rendered {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                exit: EXIT_INPUT,
            },
        };
    }
    let mut files: Vec<PathBuf> = match std::fs::read_dir(path) {
        Ok(entries) => entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect(),
        Err(e) => {
            return Rendered {
                stdout: String::new(),
                stderr: format!("error: {}: {e}\n", path.display()),
                exit: EXIT_INPUT,
            }
        }
    };
    files.sort();
    let results = taumap::sweep::map(&files, |p| run_file(command, p));
    let mut out = Rendered::default();
    let mut json = Vec::new();
    let mut any_input = false;
    let mut any_failed = false;
    for (p, res) in files.iter().zip(results) {
        let name = p
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match res {
            Ok(o) => {
                any_failed |= o.exit == EXIT_FAILED;
                match format {
                    Format::Text => {
                        out.stdout.push_str(&format!("== {name} ==\n"));
                        out.stdout.push_str(&emit_report(&o.report, format));
                    }
                    Format::Json => json.push(
                        serde_json::json!({"file": name, "exit": o.exit, "report": o.report}),
                    ),
                }
            }
            Err(e) => {
                any_input = true;
                out.stderr.push_str(&format!("error: {e}\n"));
                if format == Format::Json {
                    json.push(serde_json::json!({"file": name, "exit": EXIT_INPUT, "error": e.to_string()}));
                }
            }
        }
    }
    if format == Format::Json {
        out.stdout = serde_json::to_string_pretty(&json).expect("reports serialize") + "\n";
    }
    out.exit = if any_failed {
        EXIT_FAILED
    } else if any_input {
        EXIT_INPUT
    } else {
        EXIT_OK
    };
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(text: &str) -> AlgebraFile {
        parse_algebra_file(text).unwrap()
    }

    const TWO_CYCLE: &str = "vertices: 1 2\narrow a 1 2\narrow b 2 1\nrelation a b\n";

    #[test]
    fn tau_map_two_cycle() {
        let o = run_command(&Command::TauMap, &file(TWO_CYCLE)).unwrap();
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.report.verdict.as_deref(), Some("exists"));
        assert_eq!(o.report.matrix, Some(vec![vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn cartan_two_cycle() {
        let o = run_command(&Command::Cartan, &file(TWO_CYCLE)).unwrap();
        let text = emit_report(&o.report, Format::Text);
        assert!(text.contains("\n1 1\n1 2\n"), "{text}");
    }

    #[test]
    fn verify_counts() {
        let o = run_command(&Command::Verify, &file(TWO_CYCLE)).unwrap();
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.report.checks.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn tau_module_and_simple() {
        let f = file(TWO_CYCLE);
        let o = run_command(
            &Command::TauModule {
                vertex: "1".into(),
                length: 1,
            },
            &f,
        )
        .unwrap();
        assert_eq!(o.report.verdict.as_deref(), Some("M(2,1)"));
        assert!(o.report.all_checks_pass());
        let o = run_command(&Command::TauSimple { vertex: "1".into() }, &f).unwrap();
        assert!(
            o.report.details[0].ends_with("[0 1]"),
            "{:?}",
            o.report.details
        );
        let e = run_command(
            &Command::TauModule {
                vertex: "1".into(),
                length: 9,
            },
            &f,
        )
        .unwrap_err();
        assert!(matches!(e, InputError::Algebra(_)));
    }

    #[test]
    fn verify_needs_nakayama() {
        let star = file("vertices: 1 2 3\narrow a 1 2\narrow b 3 2\n");
        assert!(matches!(
            run_command(&Command::Verify, &star),
            Err(InputError::Usage(_))
        ));
    }
}
