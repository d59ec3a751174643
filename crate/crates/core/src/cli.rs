//! Command-line front end. `main.rs` only parses arguments and maps the
//! returned error to an exit code.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds::presets::{by_name, registry};
use crate::bounds::BoundSpec;
use crate::constructive::{
    audit, construct_c1, construct_griggs, construct_main, summarize, AuditVerdict, ConstructError, Theorem,
};
use crate::enumerate::{
    census, enumerate, ingest_graph6, probe_necessity, search_preset, CensusOptions, EnumerateError,
    EnumerationTask, Filters,
};
use crate::families;
use crate::graph::{classify, emit_graph6, parse_edge_list, parse_graph6, Graph, GraphOptions};
use crate::oracle::Oracle;
use crate::rational::Rational;
use crate::report::{preset_table, text_table, write_audit_csv, write_jsonl, write_summary_csv, RunManifest};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not in the class: {0}")]
    Class(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Class(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Verification(_) => 5,
            CliError::Io(_) => 1,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<crate::report::ReportError> for CliError {
    fn from(e: crate::report::ReportError) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::NotInClass(_) | ConstructError::NotConnectedSubcubic(_) => {
                CliError::Class(e.to_string())
            }
            ConstructError::NotTriangleFree(_) | ConstructError::C1OutOfRange(_) => {
                CliError::Precondition(e.to_string())
            }
            ConstructError::Verification(_) => CliError::Verification(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "subcubic", version, about = "Independence number bounds for subcubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every applicable preset on one graph.
    #[command(alias = "evaluate")]
    Bounds(BoundsArgs),
    /// Build a certified independent set.
    Construct(ConstructArgs),
    /// Print a family member as graph6 with its predicted profile.
    Gen(GenArgs),
    /// List connected subcubic graphs as graph6.
    Enumerate(EnumerateArgs),
    /// Evaluate specs over a corpus, listing tight graphs and violations.
    Census(CorpusArgs),
    /// Search a corpus for violations of candidate specs.
    Search(CorpusArgs),
    /// Check every reduction step's claim over a corpus.
    Audit(AuditArgs),
}

#[derive(Debug, Args, Default)]
pub struct InputArgs {
    /// Graph in graph6.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge-list file, or graph6 when the extension is .g6 or .graph6.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Family name: A, B, N, A-pendant, cycle, path, truncate; or a full `name:param` string.
    #[arg(long)]
    pub family: Option<String>,
    /// Same as --family.
    #[arg(long)]
    pub gen: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub index: Option<usize>,
    /// Base cubic graph for truncation: K4, K33, prism, petersen or an order.
    #[arg(long)]
    pub base: Option<String>,
    /// Seed for random attachment in family A.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl InputArgs {
    fn family_string(&self) -> Option<Result<String, CliError>> {
        let name = self.graph6.is_none().then_some(()).and(self.family.as_ref().or(self.gen.as_ref()))?;
        if name.contains(':') {
            return Some(Ok(name.clone()));
        }
        let param = self
            .n
            .or(self.k)
            .or(self.index)
            .map(|p| p.to_string())
            .or_else(|| self.base.clone());
        let Some(param) = param else {
            return Some(Err(CliError::Parse(format!("family {name} needs --n, --k, --index or --base"))));
        };
        let seed = self.seed.map(|s| format!(":{s}")).unwrap_or_default();
        Some(Ok(format!("{name}:{param}{seed}")))
    }

    /// Resolves the input by precedence graph6, file, family.
    pub fn load(&self) -> Result<Graph, CliError> {
        let opts = GraphOptions::from_env();
        if let Some(s) = &self.graph6 {
            return parse_graph6(s.trim(), &opts).map_err(|e| CliError::Parse(e.to_string()));
        }
        if let Some(path) = &self.file {
            let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let g6 = matches!(path.extension().and_then(|e| e.to_str()), Some("g6" | "graph6"));
            let parsed = if g6 {
                let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                parse_graph6(line.trim(), &opts)
            } else {
                parse_edge_list(&text, &opts)
            };
            return parsed.map_err(|e| CliError::Parse(e.to_string()));
        }
        match self.family_string() {
            Some(name) => families::by_name(&name?)
                .map(|inst| inst.graph)
                .map_err(|e| CliError::Parse(e.to_string())),
            None => Err(CliError::Parse("no input: give --graph6, --file or --family".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum OracleArg {
    #[default]
    Bb,
    Brute,
}

impl From<OracleArg> for Oracle {
    fn from(o: OracleArg) -> Self {
        match o {
            OracleArg::Bb => Oracle::BranchAndBound,
            OracleArg::Brute => Oracle::Brute,
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Apply each bound per component and sum (disconnected subcubic input).
    #[arg(long)]
    pub per_component: bool,
    #[arg(long, value_enum, default_value_t)]
    pub oracle: OracleArg,
    /// Emit JSON lines instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    Main,
    Griggs,
    C1,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub method: Method,
    /// Coefficient for the c1 method, as p/q.
    #[arg(long, default_value = "5/7")]
    pub c1: String,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args, Clone)]
pub struct FilterArgs {
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    #[arg(long)]
    pub triangle_free: bool,
    #[arg(long)]
    pub min_degree: Option<usize>,
    #[arg(long)]
    pub exclude_k4: bool,
}

impl FilterArgs {
    fn filters(&self) -> Filters {
        Filters {
            triangle_free: self.triangle_free,
            min_degree: self.min_degree,
            exclude_k4: self.exclude_k4,
        }
    }

    fn task(&self) -> EnumerationTask {
        EnumerationTask { min_n: self.min_n, max_n: self.max_n, filters: self.filters() }
    }
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub filters: FilterArgs,
    /// Write graph6 lines here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Preset name (repeatable), e.g. eq9, eq10, eq12:3/4, ab:1/2.
    #[arg(long)]
    pub spec: Vec<String>,
    /// Custom coefficients `c1,c2,c3,d` (repeatable).
    #[arg(long)]
    pub coeffs: Vec<String>,
    /// Named set of specs: open-question, corollary-12, prop5.
    #[arg(long)]
    pub preset: Option<String>,
    #[command(flatten)]
    pub filters: FilterArgs,
    /// graph6 corpus file used instead of the built-in enumeration.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub oracle: OracleArg,
    #[arg(long)]
    pub per_component: bool,
    /// Stop at the first violation.
    #[arg(long)]
    pub stop_early: bool,
    /// Solve every graph with both oracles.
    #[arg(long)]
    pub cross_check: bool,
    /// Directory for records.jsonl, summary.csv and manifest.json.
    #[arg(long, default_value = "subcubic-out")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long)]
    pub theorem: String,
    #[command(flatten)]
    pub filters: FilterArgs,
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "subcubic-out")]
    pub out_dir: PathBuf,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Construct(a) => cmd_construct(&a, out),
        Command::Gen(a) => cmd_gen(&a, out),
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Census(a) => cmd_corpus("census", &a, false, out),
        Command::Search(a) => cmd_corpus("search", &a, true, out),
        Command::Audit(a) => cmd_audit(&a, out),
    }
}

fn cmd_bounds(a: &BoundsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = a.input.load()?;
    let c = classify(&g);
    if a.per_component {
        if !c.subcubic {
            return Err(CliError::Class(format!("{} is not subcubic", emit_graph6(&g))));
        }
    } else if !c.in_class() {
        return Err(CliError::Class(format!(
            "{} must be connected, subcubic, not K4, with at least 3 vertices (use --per-component for disconnected input)",
            emit_graph6(&g)
        )));
    }
    let opts = CensusOptions { oracle: a.oracle.into(), per_component: a.per_component, ..Default::default() };
    let run = census(&registry(), std::slice::from_ref(&g), &opts);
    let rec = &run.records[0];
    if a.json {
        for o in &rec.outcomes {
            let line = serde_json::json!({
                "graph6": rec.graph6, "spec": o.spec, "bound": o.bound, "alpha": rec.alpha,
                "slack": o.slack, "tight": o.tight,
            });
            writeln!(out, "{line}")?;
        }
        return Ok(());
    }
    let rows: Vec<Vec<String>> = rec
        .outcomes
        .iter()
        .map(|o| {
            vec![
                o.spec.clone(),
                o.bound.to_string(),
                rec.alpha.to_string(),
                o.slack.to_string(),
                if o.tight { "tight".into() } else if o.holds() { String::new() } else { "VIOLATED".into() },
            ]
        })
        .collect();
    writeln!(out, "graph6 {}  n = {}  alpha = {}", rec.graph6, rec.n, rec.alpha)?;
    write!(out, "{}", text_table(&["spec", "bound", "alpha", "slack", "flag"], &rows))?;
    Ok(())
}

fn cmd_construct(a: &ConstructArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let g = a.input.load()?;
    let cert = match a.method {
        Method::Main => construct_main(&g)?,
        Method::Griggs => construct_griggs(&g)?,
        Method::C1 => {
            let c1: Rational = a.c1.parse().map_err(|_| CliError::Parse(format!("bad rational {}", a.c1)))?;
            construct_c1(&g, c1)?
        }
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&cert).map_err(|e| CliError::Io(e.to_string()))?)?;
    Ok(())
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let name = a
        .input
        .family_string()
        .ok_or_else(|| CliError::Parse("gen needs --family or --gen".into()))??;
    let inst = families::by_name(&name).map_err(|e| CliError::Parse(e.to_string()))?;
    writeln!(out, "{}", emit_graph6(&inst.graph))?;
    writeln!(out, "{}", serde_json::to_string(&inst).map_err(|e| CliError::Io(e.to_string()))?)?;
    Ok(())
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let graphs = enumerate(&a.filters.task())?;
    let text: String = graphs.iter().map(|g| emit_graph6(g) + "\n").collect();
    match &a.output {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            writeln!(out, "{} graphs written to {}", graphs.len(), p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load_corpus(input: &Option<PathBuf>, f: &FilterArgs, out: &mut dyn Write) -> Result<(Vec<Graph>, String), CliError> {
    match input {
        Some(p) => {
            let file = fs::File::open(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            let mut graphs = Vec::new();
            for item in ingest_graph6(BufReader::new(file), f.filters(), GraphOptions::from_env()) {
                match item {
                    Ok(g) => graphs.push(g),
                    Err(e) => writeln!(out, "ingest error line {}: {}", e.line, e.message)?,
                }
            }
            Ok((graphs, format!("ingested {}", p.display())))
        }
        None => {
            let task = f.task();
            let mut desc = format!("enumerated connected subcubic graphs, {} <= n <= {}", task.min_n, task.max_n);
            if f.triangle_free {
                desc.push_str(", triangle-free");
            }
            if let Some(d) = f.min_degree {
                desc.push_str(&format!(", min degree {d}"));
            }
            if f.exclude_k4 {
                desc.push_str(", K4 excluded");
            }
            Ok((enumerate(&task)?, desc))
        }
    }
}

fn resolve_specs(a: &CorpusArgs) -> Result<Vec<BoundSpec>, CliError> {
    let mut specs = Vec::new();
    if let Some(p) = &a.preset {
        specs.extend(search_preset(p).ok_or_else(|| CliError::Parse(format!("unknown preset {p}")))?);
    }
    for name in &a.spec {
        specs.push(by_name(name).map_err(|e| CliError::Parse(e.to_string()))?);
    }
    for c in &a.coeffs {
        specs.push(BoundSpec::parse_coefficients(c).map_err(|e| CliError::Parse(e.to_string()))?);
    }
    if specs.is_empty() {
        return Err(CliError::Parse("no specs: give --spec, --coeffs or --preset".into()));
    }
    Ok(specs)
}

fn manifest_base(command: &str, corpus: String, f: &FilterArgs) -> RunManifest {
    RunManifest::new(command, corpus)
        .param("max_n", f.max_n)
        .param("min_n", f.min_n)
        .param("triangle_free", f.triangle_free)
        .param("min_degree", f.min_degree.map_or("none".to_string(), |d| d.to_string()))
        .param("exclude_k4", f.exclude_k4)
}

fn file_names(dir: &Path, names: &[&str]) -> Vec<String> {
    names.iter().map(|n| dir.join(n).display().to_string()).collect()
}

fn cmd_corpus(command: &str, a: &CorpusArgs, search: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let start = Instant::now();
    let specs = resolve_specs(a)?;
    let (graphs, corpus) = load_corpus(&a.input, &a.filters, out)?;
    let opts = CensusOptions {
        oracle: a.oracle.into(),
        per_component: a.per_component,
        stop_on_violation: a.stop_early,
        cross_check: a.cross_check || search,
    };
    let run = census(&specs, &graphs, &opts);
    let dir = &a.out_dir;
    write_jsonl(&dir.join("records.jsonl"), &run.records)?;
    write_summary_csv(&dir.join("summary.csv"), &run.reports)?;
    let mut files = vec!["records.jsonl", "summary.csv"];

    let probes: Vec<_> = if a.preset.as_deref() == Some("prop5") {
        specs.iter().filter_map(|s| probe_necessity(s, 40)).collect()
    } else {
        Vec::new()
    };
    if !probes.is_empty() {
        write_jsonl(&dir.join("probes.jsonl"), &probes)?;
        files.push("probes.jsonl");
    }

    for r in &run.reports {
        writeln!(
            out,
            "spec {}: scanned {} holds {} tight {} violations {}{}",
            r.spec.name,
            r.scanned(),
            r.scanned() - r.violations().len(),
            r.tight().len(),
            r.violations().len(),
            if r.stopped_early { " (stopped early)" } else { "" }
        )?;
        if !search {
            for t in r.tight() {
                writeln!(out, "  tight {t}")?;
            }
        }
        for v in r.violations() {
            writeln!(out, "  violation {v}")?;
        }
    }
    for p in &probes {
        writeln!(
            out,
            "probe {} ({}): n = {} alpha = {} bound = {} slack = {}",
            p.spec, p.witness.description, p.n, p.alpha, p.bound, p.slack
        )?;
    }
    if opts.cross_check {
        writeln!(out, "oracle cross-check mismatches: {}", run.oracle_mismatches.len())?;
    }

    let mut m = manifest_base(command, corpus, &a.filters)
        .param("specs", specs.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join(" "))
        .param("oracle", a.oracle.to_possible_value().expect("named").get_name())
        .param("per_component", a.per_component)
        .param("stop_early", a.stop_early)
        .param("cross_check", opts.cross_check);
    if let Some(p) = &a.preset {
        m = m.param("preset", p);
    }
    m.presets = preset_table(&specs);
    files.push("manifest.json");
    m.result_files = file_names(dir, &files);
    m.wall_time_ms = start.elapsed().as_millis();
    m.write(&dir.join("manifest.json"))?;

    if !run.oracle_mismatches.is_empty() {
        return Err(CliError::Verification(format!(
            "oracles disagree on {}",
            run.oracle_mismatches.join(" ")
        )));
    }
    Ok(())
}

fn cmd_audit(a: &AuditArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let start = Instant::now();
    let theorem: Theorem = a.theorem.parse().map_err(|e: crate::constructive::AuditError| CliError::Parse(e.to_string()))?;
    let (graphs, corpus) = load_corpus(&a.input, &a.filters, out)?;
    let findings = audit(theorem, &graphs);
    let summary = summarize(&findings);
    let dir = &a.out_dir;
    write_jsonl(&dir.join("findings.jsonl"), &findings)?;
    write_audit_csv(&dir.join("summary.csv"), &summary)?;
    for (rule, c) in &summary.rules {
        writeln!(
            out,
            "{rule}: checked {} holds {} violated {} noted {}",
            c.checked, c.holds, c.violated, c.noted
        )?;
    }
    for f in findings.iter().filter(|f| f.verdict == AuditVerdict::Violated).take(10) {
        writeln!(out, "  violation {} {} at {:?}: {} vs {}", f.rule, f.graph6, f.site, f.lhs, f.rhs)?;
    }
    let mut m = manifest_base("audit", corpus, &a.filters).param("theorem", theorem);
    m.result_files = file_names(dir, &["findings.jsonl", "summary.csv", "manifest.json"]);
    m.wall_time_ms = start.elapsed().as_millis();
    m.write(&dir.join("manifest.json"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<(), CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("subcubic").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn bounds_on_triangle() {
        let (r, text) = run_args(&["bounds", "--graph6", "Bw"]);
        r.unwrap();
        let row = text.lines().find(|l| l.starts_with("eq13 ")).unwrap();
        assert!(row.contains("1/1") && row.ends_with("tight"), "{row}");
    }

    #[test]
    fn bounds_rejects_k4() {
        let (r, _) = run_args(&["bounds", "--graph6", "C~"]);
        assert_eq!(r.unwrap_err().exit_code(), 3);
    }

    #[test]
    fn parse_errors() {
        let (r, _) = run_args(&["bounds", "--graph6", "garbage"]);
        assert_eq!(r.unwrap_err().exit_code(), 2);
        let (r, _) = run_args(&["construct", "--graph6", "Bw", "--method", "c1", "--c1", "1/2"]);
        assert_eq!(r.unwrap_err().exit_code(), 4);
    }

    #[test]
    fn graph6_wins_over_family() {
        let input = InputArgs {
            graph6: Some("Bw".into()),
            family: Some("B".into()),
            n: Some(5),
            ..Default::default()
        };
        assert_eq!(input.load().unwrap().n(), 3);
    }
}
