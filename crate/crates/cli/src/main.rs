//! `buildings`: build, verify and inspect example buildings.
//!
//! Exit status is 0 on success, 1 when a requested check fails, and 2 on
//! any error, which is reported as one line `error: <kind>: <message>`.

mod catalog;

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use buildings_core::artifact::Artifact;
use buildings_core::bruhat::{bruhat_permutation, coset_canonical, iso_to_flag};
use buildings_core::bruhat::check_bn_axioms;
use buildings_core::building::{check_apartment_axioms, check_b1, check_b1_chambers, check_b2};
use buildings_core::chamber::{nerve, to_dot};
use buildings_core::coxeter::{CoxeterMatrix, CoxeterSystem};
use buildings_core::permutation::type_a_permutation;
use buildings_core::symplectic::{build_sp_building, incidence_graph};
use buildings_core::{ChamberSystem, FpMatrix, Report, WMetricBuilding};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use catalog::{ExampleSpec, Kind};

#[derive(Debug)]
pub struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    pub fn new(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error: {}: {}", self.kind, self.message)
    }
}

impl From<buildings_core::Error> for Failure {
    fn from(e: buildings_core::Error) -> Self {
        Failure::new(e.kind(), e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "buildings", version, about = "Build and check small Tits buildings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named example and write its artifact
    Build {
        kind: Kind,
        /// Dimension (flag, gb), rank (sp) or number of coordinates (arrangement)
        #[arg(long)]
        n: Option<usize>,
        /// Field size, a prime
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Tree branching: each vertex has q + 1 neighbors
        #[arg(long, default_value_t = 2)]
        q: usize,
        /// Tree depth
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Coxeter symbol file
        #[arg(long)]
        symbol: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check axioms on an artifact: B1, B1-thick, B2, B1', B2', BN
    Verify {
        artifact: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        axioms: Vec<String>,
        /// Treat B1 as B1-thick
        #[arg(long)]
        thick: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print δ(c, c′) as a canonical word; chambers by index or label
    Delta {
        artifact: PathBuf,
        c: String,
        c2: String,
    },
    /// Export a DOT graph
    Dot {
        artifact: PathBuf,
        /// For sp with n = 2: the point-line incidence graph
        #[arg(long)]
        incidence: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summary counts as JSON
    Stats {
        artifact: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bruhat cell of an invertible matrix, rows separated by `;`
    Bruhat {
        #[arg(long)]
        p: u32,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: usage: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::new("io", format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::new("io", e.to_string()))
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// `Ok(passed)`.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Build {
            kind,
            n,
            p,
            q,
            depth,
            symbol,
            out,
        } => {
            let symbol = symbol.as_deref().map(read_text).transpose()?;
            let spec = ExampleSpec {
                kind,
                n,
                p,
                q,
                depth,
                symbol,
            };
            emit(&spec.artifact()?.to_json(), out.as_deref())?;
            Ok(true)
        }
        Command::Verify {
            artifact,
            axioms,
            thick,
            out,
        } => verify(&artifact, &axioms, thick, out.as_deref()),
        Command::Delta { artifact, c, c2 } => {
            let a = Artifact::load(&artifact)?;
            let b = require_building(&a)?;
            let cs = b.chambers();
            let (c, d) = (chamber_id(cs, &c)?, chamber_id(cs, &c2)?);
            emit(&format!("{}\n", delta_text(&b, c, d)?), None)?;
            Ok(true)
        }
        Command::Dot {
            artifact,
            incidence,
            out,
        } => {
            let a = Artifact::load(&artifact)?;
            let spec = ExampleSpec::from_artifact(&a)?;
            let text = if incidence {
                if spec.kind != Kind::Sp {
                    return Err(Failure::new("usage", "--incidence needs an sp artifact"));
                }
                let sb = build_sp_building(spec.n.unwrap_or(0), spec.p)?;
                incidence_graph(&sb)?.graph.to_dot("incidence")
            } else if spec.kind == Kind::Tree {
                spec.tree()?.to_dot()
            } else {
                to_dot(&a.chamber_system()?)
            };
            emit(&text, out.as_deref())?;
            Ok(true)
        }
        Command::Stats { artifact, out } => {
            let a = Artifact::load(&artifact)?;
            emit(&pretty(&stats(&a)?), out.as_deref())?;
            Ok(true)
        }
        Command::Bruhat { p, matrix } => {
            emit(&bruhat(p, &matrix)?, None)?;
            Ok(true)
        }
    }
}

fn require_building(a: &Artifact) -> Result<WMetricBuilding, Failure> {
    a.building()?
        .ok_or_else(|| Failure::new("format", "artifact has no delta table"))
}

fn chamber_id(cs: &ChamberSystem, text: &str) -> Result<usize, Failure> {
    if let Ok(k) = text.parse::<usize>() {
        if k < cs.len() {
            return Ok(k);
        }
        return Err(Failure::new("out_of_range", format!("chamber {k} of {}", cs.len())));
    }
    (0..cs.len())
        .find(|&c| cs.label(c) == text)
        .ok_or_else(|| Failure::new("out_of_range", format!("no chamber labelled {text:?}")))
}

/// Canonical word, plus the permutation in type A.
fn delta_text(b: &WMetricBuilding, c: usize, d: usize) -> Result<String, Failure> {
    let e = b.try_delta(c, d)?;
    let cm = b.system().matrix();
    if e.is_identity() {
        return Ok("e".to_string());
    }
    let word = cm.format_word(e.word());
    let rank = cm.rank();
    if **cm == CoxeterMatrix::type_a(rank) {
        let pi = type_a_permutation(&e.labels(), rank)?;
        Ok(format!("{word} = {pi}"))
    } else {
        Ok(word)
    }
}

fn verify(path: &Path, axioms: &[String], thick: bool, out: Option<&Path>) -> Result<bool, Failure> {
    let a = Artifact::load(path)?;
    let cs = a.chamber_system()?;
    let building = a.building()?;
    let spec = ExampleSpec::from_artifact(&a)?;
    let mut reports: Vec<Report> = Vec::new();
    let mut apartment_reports: Option<(Report, Report)> = None;
    for axiom in axioms {
        match axiom.trim() {
            "B1" | "B1-thick" => {
                let thick = thick || axiom.trim() == "B1-thick";
                reports.push(match &building {
                    Some(b) => check_b1(b, thick),
                    None => check_b1_chambers(&cs, thick),
                });
            }
            "B2" => {
                let b = building
                    .as_ref()
                    .ok_or_else(|| Failure::new("format", "B2 needs a delta table"))?;
                reports.push(check_b2(b));
            }
            name @ ("B1'" | "B2'") => {
                if apartment_reports.is_none() {
                    let apartments = spec.apartments(&cs)?;
                    apartment_reports = Some(check_apartment_axioms(&cs, &apartments));
                }
                let (b1, b2) = apartment_reports.as_ref().expect("computed above");
                reports.push(if name == "B1'" { b1.clone() } else { b2.clone() });
            }
            "BN" => {
                if spec.kind != Kind::Gb {
                    return Err(Failure::new("usage", "BN needs a gb artifact"));
                }
                let n = spec.n.ok_or_else(|| Failure::new("format", "gb artifact without n"))?;
                reports.extend(check_bn_axioms(n, spec.p)?);
            }
            other => return Err(Failure::new("usage", format!("unknown axiom {other:?}"))),
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let value = json!({
        "type": a.kind,
        "params": a.params,
        "pass": pass,
        "reports": reports,
    });
    emit(&pretty(&value), out)?;
    Ok(pass)
}

fn stats(a: &Artifact) -> Result<Value, Failure> {
    let cs = a.chamber_system()?;
    let mut panels = BTreeMap::new();
    let mut thin = true;
    let mut thick = true;
    for (k, color) in cs.colors().iter().enumerate() {
        let mut sizes: BTreeMap<String, usize> = BTreeMap::new();
        for p in cs.panels(k) {
            *sizes.entry(p.len().to_string()).or_default() += 1;
            thin &= p.len() == 2;
            thick &= p.len() >= 3;
        }
        panels.insert(color.to_string(), sizes);
    }
    let mut value = json!({
        "type": a.kind,
        "params": a.params,
        "chambers": cs.len(),
        "rank": cs.rank(),
        "colors": cs.colors(),
        "connected": cs.is_connected(),
        "thin": thin,
        "thick": thick,
        "panel_sizes": panels,
        "nerve_f_vector": nerve(&cs).complex.f_vector(),
    });
    if let Some(b) = a.building()? {
        let mut lengths: BTreeMap<String, usize> = BTreeMap::new();
        for e in b.delta_table() {
            *lengths.entry(e.len().to_string()).or_default() += 1;
        }
        value["delta_lengths"] = json!(lengths);
        value["coxeter_order"] = json!(b.system().order());
    }
    Ok(value)
}

fn bruhat(p: u32, text: &str) -> Result<String, Failure> {
    let m = FpMatrix::parse(text, p)?;
    let w = bruhat_permutation(&m)?;
    let n = m.rows();
    let coset = coset_canonical(&m)?;
    let mut out = format!("w = {w}\n");
    if n >= 2 {
        let sys = CoxeterSystem::with_default_cap(CoxeterMatrix::type_a(n - 1))?;
        let e = sys.canonical_labels(&w.reduced_word())?;
        out.push_str(&format!("word = {}\n", sys.matrix().format_word(e.word())));
        out.push_str(&format!("length = {}\n", e.len()));
        out.push_str(&format!("flag = {}\n", iso_to_flag(&coset)?));
    }
    out.push_str(&format!("coset = {}\n", coset.representative()));
    Ok(out)
}
