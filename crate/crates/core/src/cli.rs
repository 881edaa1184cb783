//! The `superdegen` command line. Every subcommand builds a [`RunReport`];
//! the exit code is 0 exactly when no item failed.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{Catalog, CatalogError};
use crate::degen::{
    assemble, generic_structures, load_cert_file, shipped_all, verify_all, Cert, Checked, Expected, Verdict,
};
use crate::exact::{parse_scalar, Field, Scalar};
use crate::invariants::{fingerprint, orbit_dim, stabilizer_dim};

/// Parameter values used to spot-check families next to the symbolic check.
pub const LAMBDA_SAMPLES: [i64; 2] = [2, 5];

#[derive(Parser, Debug)]
#[command(
    name = "superdegen",
    version,
    about = "Exact checks on the geometry of 4-dimensional superalgebras"
)]
pub struct Cli {
    /// Catalog file to use instead of the compiled-in one.
    #[arg(long, global = true, env = "SUPERDEGEN_CATALOG")]
    pub catalog: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check axioms, components and declared dimensions of every entry.
    VerifyCatalog,
    /// Print the stabilizer or orbit dimension table.
    Tables {
        #[arg(long, value_enum)]
        kind: TableKind,
    },
    /// Verify certificate files (all shipped files when none are given).
    Check { files: Vec<PathBuf> },
    /// Emit the degeneration diagram of one component.
    Diagram {
        #[arg(long)]
        component: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: DiagramFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the invariants of one entry.
    Fingerprint {
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// List the structures nothing degenerates to in one component.
    Generic {
        #[arg(long)]
        component: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Stab,
    Orbit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
    Unsupported,
}

impl Status {
    fn word(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undetermined => "UNDET",
            Status::Unsupported => "UNSUP",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Outcome of one command. Elapsed time is kept out of the serialized form
/// so that repeated runs give identical reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub items: Vec<Item>,
    pub counts: BTreeMap<Status, usize>,
    /// Free text printed before the items (tables, diagrams).
    #[serde(skip_serializing_if = "String::is_empty")]
    pub text: String,
    /// Diagnostics kept off stdout in text mode.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// `text` is a document on its own (a diagram); item lines go to stderr.
    #[serde(skip)]
    pub body_only: bool,
    #[serde(skip)]
    pub elapsed: Duration,
    pub exit_code: i32,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.into(),
            items: Vec::new(),
            counts: BTreeMap::new(),
            text: String::new(),
            notes: Vec::new(),
            body_only: false,
            elapsed: Duration::ZERO,
            exit_code: 0,
        }
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.items.push(Item {
            id: id.into(),
            status,
            detail: detail.into(),
        });
    }

    fn finish(mut self, start: Instant) -> Self {
        self.counts.clear();
        for it in &self.items {
            *self.counts.entry(it.status).or_default() += 1;
        }
        self.exit_code = i32::from(self.counts.contains_key(&Status::Fail));
        self.elapsed = start.elapsed();
        self
    }

    pub fn failed(&self) -> bool {
        self.exit_code != 0
    }

    pub fn render_text(&self) -> String {
        self.text.clone() + &self.render_items()
    }

    /// Item lines and the count summary.
    pub fn render_items(&self) -> String {
        let mut s = String::new();
        for it in &self.items {
            let _ = writeln!(s, "{:<5} {} {}", it.status.word(), it.id, it.detail);
        }
        let counts: Vec<String> = self
            .counts
            .iter()
            .map(|(k, v)| format!("{} {v}", k.word().to_lowercase()))
            .collect();
        let _ = writeln!(s, "{}: {}", self.command, counts.join(", "));
        s
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn load_catalog(path: Option<&PathBuf>) -> Result<Catalog, CatalogError> {
    match path {
        Some(p) => Catalog::from_path(p),
        None => Ok(Catalog::embedded().clone()),
    }
}

pub fn cmd_verify_catalog(catalog: Option<&PathBuf>) -> RunReport {
    let start = Instant::now();
    let mut r = RunReport::new("verify-catalog");
    let cat = match load_catalog(catalog) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    for e in cat.entries() {
        // loading already enforced axioms, component and declared dims
        let stab = stabilizer_dim(&e.constants);
        let orbit = orbit_dim(&e.constants);
        r.push(
            &e.label,
            Status::Pass,
            format!("axioms, dim A_0 = {}, stab {stab}, orbit {orbit}", e.component),
        );
        if e.parametric {
            for v in LAMBDA_SAMPLES {
                let id = format!("{} at l = {v}", e.label);
                match cat.get(&e.label, Some(&Scalar::from_i64(v))) {
                    Ok(sc) => {
                        let (s, o) = (stabilizer_dim(&sc), orbit_dim(&sc));
                        let ok = sc.grading_split().map(|g| g.i) == Ok(e.component)
                            && Some(s) == e.expected_stab_dim.or(Some(stab))
                            && Some(o) == e.expected_orbit_dim.or(Some(orbit));
                        let st = if ok { Status::Pass } else { Status::Fail };
                        r.push(id, st, format!("axioms, stab {s}, orbit {o}"));
                    }
                    Err(err) => r.push(id, Status::Fail, err.to_string()),
                }
            }
        }
    }
    if cat.contains("(18;λ|0)") {
        match cat.coincidence_check() {
            Ok(list) => {
                for c in list {
                    let rel = if c.expected { "matches" } else { "differs from" };
                    r.push(
                        format!("{} at l = {} vs {}", c.family, c.lambda, c.other),
                        if c.pass() { Status::Pass } else { Status::Fail },
                        format!("{rel} ({})", c.comparison),
                    );
                }
            }
            Err(e) => r.push("coincidences", Status::Fail, e.to_string()),
        }
    }
    for (a, b) in cat.fingerprint_collisions() {
        r.notes.push(format!("{a} and {b} share a fingerprint"));
    }
    r.finish(start)
}

/// Rows of the dimension table: family index, then one cell per grading.
fn table_rows(cat: &Catalog) -> Vec<(String, BTreeMap<usize, String>)> {
    let mut rows: Vec<(String, BTreeMap<usize, String>)> = Vec::new();
    for e in cat.entries() {
        let Some((fam, j)) = e.label_parts() else { continue };
        let pos = match rows.iter().position(|(f, _)| f == fam) {
            Some(p) => p,
            None => {
                rows.push((fam.to_string(), BTreeMap::new()));
                rows.len() - 1
            }
        };
        rows[pos].1.insert(j, e.label.clone());
    }
    rows
}

pub fn cmd_tables(catalog: Option<&PathBuf>, kind: TableKind) -> RunReport {
    let start = Instant::now();
    let name = match kind {
        TableKind::Stab => "tables stab",
        TableKind::Orbit => "tables orbit",
    };
    let mut r = RunReport::new(name);
    let cat = match load_catalog(catalog) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    let rows = table_rows(&cat);
    let cols = rows
        .iter()
        .flat_map(|(_, m)| m.keys().copied())
        .max()
        .map_or(0, |m| m + 1);
    let _ = write!(r.text, "{:<8}", "");
    for j in 0..cols {
        let _ = write!(r.text, "{:>5}", format!("|{j}"));
    }
    r.text.push('\n');
    for (fam, cells) in &rows {
        let _ = write!(r.text, "{:<8}", format!("({fam}|.)"));
        for j in 0..cols {
            let cell = cells.get(&j).map(|label| {
                let e = cat.entry(label).expect("label from catalog");
                let (got, want) = match kind {
                    TableKind::Stab => (stabilizer_dim(&e.constants), e.expected_stab_dim),
                    TableKind::Orbit => (orbit_dim(&e.constants), e.expected_orbit_dim),
                };
                match want {
                    Some(w) if w != got => {
                        r.push(label, Status::Fail, format!("computed {got}, expected {w}"));
                        format!("{got}!")
                    }
                    Some(_) => {
                        r.push(label, Status::Pass, format!("{got}"));
                        got.to_string()
                    }
                    None => {
                        r.push(label, Status::Unsupported, format!("{got}, no declared value"));
                        got.to_string()
                    }
                }
            });
            let _ = write!(r.text, "{:>5}", cell.unwrap_or_default());
        }
        r.text.push('\n');
    }
    r.finish(start)
}

fn status_of(c: &Checked) -> Status {
    match (&c.verdict, c.cert.expected()) {
        (Verdict::Error { .. }, _) => Status::Fail,
        (Verdict::Verified { .. }, _) => Status::Pass,
        (Verdict::NotVerified { .. }, Expected::Verified) => Status::Fail,
        (Verdict::NotVerified { .. }, _) => Status::Pass,
        (Verdict::Undetermined { .. }, _) => Status::Undetermined,
        (Verdict::Unsupported { .. }, _) => Status::Unsupported,
    }
}

fn load_certs(files: &[PathBuf]) -> Result<Vec<Cert>, String> {
    if files.is_empty() {
        return shipped_all().map_err(|e| e.to_string());
    }
    let mut out = Vec::new();
    for f in files {
        out.extend(load_cert_file(f).map_err(|e| format!("{}: {e}", f.display()))?);
    }
    Ok(out)
}

pub fn cmd_check(catalog: Option<&PathBuf>, files: &[PathBuf]) -> RunReport {
    let start = Instant::now();
    let mut r = RunReport::new("check");
    let cat = match load_catalog(catalog) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    let certs = match load_certs(files) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e);
            return r.finish(start);
        }
    };
    for c in verify_all(&cat, certs, None) {
        let detail = format!(
            "{} {} -> {}: {} ({})",
            c.cert.kind(),
            c.cert.source(),
            c.cert.target(),
            c.verdict.status(),
            c.verdict.detail()
        );
        r.push(c.cert.id(), status_of(&c), detail);
    }
    r.finish(start)
}

fn shipped_graph(cat: &Catalog, r: &mut RunReport) -> Option<crate::degen::DegenerationGraph> {
    let certs = match shipped_all() {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return None;
        }
    };
    let checked = verify_all(cat, certs, None);
    match assemble(cat, &checked) {
        Ok((g, rejected)) => {
            for id in rejected {
                r.notes
                    .push(format!("certificate {id} did not verify and is left out"));
            }
            Some(g)
        }
        Err(e) => {
            r.push("graph", Status::Fail, e.to_string());
            None
        }
    }
}

pub fn cmd_diagram(
    catalog: Option<&PathBuf>,
    component: usize,
    format: DiagramFormat,
    out: Option<&PathBuf>,
) -> RunReport {
    let start = Instant::now();
    let mut r = RunReport::new("diagram");
    let cat = match load_catalog(catalog) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    let Some(graph) = shipped_graph(&cat, &mut r) else {
        return r.finish(start);
    };
    let d = graph.diagram(component);
    if d.nodes.is_empty() {
        r.push(format!("component {component}"), Status::Fail, "no nodes");
        return r.finish(start);
    }
    let body = match format {
        DiagramFormat::Dot => d.to_dot(),
        DiagramFormat::Json => serde_json::to_string_pretty(&d).expect("diagram serializes") + "\n",
    };
    match out {
        Some(p) => match std::fs::write(p, &body) {
            Ok(()) => r.push(
                format!("component {component}"),
                Status::Pass,
                format!("{} nodes written to {}", d.nodes.len(), p.display()),
            ),
            Err(e) => r.push(format!("component {component}"), Status::Fail, e.to_string()),
        },
        None => {
            r.text.push_str(&body);
            r.body_only = true;
            r.push(
                format!("component {component}"),
                Status::Pass,
                format!("{} nodes, {} edges", d.nodes.len(), d.edges.len()),
            );
        }
    }
    r.finish(start)
}

pub fn cmd_fingerprint(catalog: Option<&PathBuf>, label: &str, lambda: Option<&str>) -> RunReport {
    let start = Instant::now();
    let mut r = RunReport::new("fingerprint");
    let cat = match load_catalog(catalog) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    let value = match lambda.map(parse_scalar).transpose() {
        Ok(v) => v,
        Err(e) => {
            r.push("lambda", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    let sc = match (cat.entry(label), value) {
        (Ok(e), None) if e.parametric => Ok(e.constants.clone()),
        (_, v) => cat.get(label, v.as_ref()),
    };
    match sc
        .map_err(|e| e.to_string())
        .and_then(|sc| fingerprint(&sc).map_err(|e| e.to_string()))
    {
        Ok(fp) => {
            r.text = serde_json::to_string_pretty(&fp).expect("fingerprint serializes") + "\n";
            r.push(label, Status::Pass, "");
        }
        Err(e) => r.push(label, Status::Fail, e),
    }
    r.finish(start)
}

pub fn cmd_generic(catalog: Option<&PathBuf>, component: usize) -> RunReport {
    let start = Instant::now();
    let mut r = RunReport::new("generic");
    let cat = match load_catalog(catalog) {
        Ok(c) => c,
        Err(e) => {
            r.push("load", Status::Fail, e.to_string());
            return r.finish(start);
        }
    };
    let Some(graph) = shipped_graph(&cat, &mut r) else {
        return r.finish(start);
    };
    for g in generic_structures(&graph, component) {
        let fam = if g.family { " + family parameter" } else { "" };
        let status = if g.flag == crate::degen::GenericFlag::Undetermined {
            Status::Undetermined
        } else {
            Status::Pass
        };
        r.push(
            &g.label,
            status,
            format!("{:?}, orbit dim {}{fam}", g.flag, g.orbit_dim),
        );
    }
    r.finish(start)
}

pub fn execute(cli: &Cli) -> RunReport {
    let cat = cli.catalog.as_ref();
    match &cli.command {
        Command::VerifyCatalog => cmd_verify_catalog(cat),
        Command::Tables { kind } => cmd_tables(cat, *kind),
        Command::Check { files } => cmd_check(cat, files),
        Command::Diagram {
            component,
            format,
            out,
        } => cmd_diagram(cat, *component, *format, out.as_ref()),
        Command::Fingerprint { label, lambda } => cmd_fingerprint(cat, label, lambda.as_deref()),
        Command::Generic { component } => cmd_generic(cat, *component),
    }
}

/// Parses arguments, runs the command, prints the report and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let report = execute(&cli);
    if cli.json {
        print!("{}", report.render_json());
    } else {
        for n in &report.notes {
            eprintln!("note: {n}");
        }
        if report.body_only {
            print!("{}", report.text);
            eprint!("{}", report.render_items());
        } else {
            print!("{}", report.render_text());
        }
    }
    eprintln!("elapsed {:.2?}", report.elapsed);
    report.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("superdegen").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn parses_all_subcommands() {
        cli(&["verify-catalog"]);
        cli(&["tables", "--kind", "stab"]);
        cli(&["check", "a.json", "b.json"]);
        cli(&["diagram", "--component", "3", "--format", "json", "--out", "x"]);
        cli(&["fingerprint", "(18;l|1)", "--lambda", "2"]);
        cli(&["generic", "--component", "2"]);
        assert!(Cli::try_parse_from(["superdegen", "tables", "--kind", "x"]).is_err());
    }

    #[test]
    fn orbit_table_rows() {
        let r = cmd_tables(None, TableKind::Orbit);
        assert!(!r.failed(), "{}", r.render_text());
        assert!(r.text.contains("(18;λ|.)    8    9   10"), "{}", r.text);
        assert!(r.text.contains("(1|.)      12   12   12"), "{}", r.text);
        let r = cmd_tables(None, TableKind::Stab);
        assert!(r.text.contains("(9|.)       9    5    5    9"), "{}", r.text);
    }

    #[test]
    fn fingerprint_family() {
        let r = cmd_fingerprint(None, "(18;l|1)", Some("2"));
        assert!(!r.failed());
        assert!(r.text.contains("\"orbit_dim\": 9"));
        let r = cmd_fingerprint(None, "(18;l|1)", Some("1"));
        assert!(r.failed());
    }

    #[test]
    fn report_exit_contract() {
        let mut r = RunReport::new("x");
        r.push("a", Status::Undetermined, "");
        r.push("b", Status::Unsupported, "");
        let r = r.finish(Instant::now());
        assert_eq!(r.exit_code, 0);
        let mut r2 = RunReport::new("x");
        r2.push("a", Status::Fail, "");
        assert_eq!(r2.finish(Instant::now()).exit_code, 1);
    }
}
