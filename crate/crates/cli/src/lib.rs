//! Command implementations behind the `sparing` binary.
//!
//! Each `cmd_*` function writes its normal output to the given writer and
//! returns the process exit code. Input problems come back as [`CliError`],
//! which carries the code the binary should exit with.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sparing::corpus::{erdos_renyi, random_tree};
use sparing::formulas::{
    catalog, check_claim_with, find_claim, CheckOptions, Claim, ClaimVerdict, Outcome, ParamRanges,
};
use sparing::io::{read_graph, read_labeling, write_graph, write_labeling};
use sparing::setlabel::{mono_edges, verify_weak};
use sparing::solver::solve_and_certify_with;
use sparing::{generate, Edge, Error, FamilySpec, Graph, Solver};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_limit() {
            EXIT_LIMIT
        } else {
            EXIT_INPUT
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::input(e.to_string())
    }
}

pub type CliResult<T = i32> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "sparing",
    version,
    about = "Sparing numbers of weak IASI graphs"
)]
pub struct Cli {
    /// Solver worker threads; 0 uses every core.
    #[arg(long, global = true, env = "SPARING_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph file for a family instance or a seeded random graph.
    Generate(GenerateArgs),
    /// Print the sparing number, its witness and the mono-indexed edges.
    Solve(SourceArgs),
    /// Solve, build the witness labeling, verify it and optionally save it.
    Certify(CertifyArgs),
    /// Check a labeling file against the weak IASI conditions.
    Verify(VerifyArgs),
    /// Compare closed-form claims with exact values.
    Check(CheckArgs),
}

/// Where a graph comes from: a file or a family with its parameters.
#[derive(Debug, Clone, Default, Args)]
pub struct SourceArgs {
    /// Graph file in the `p n m` / `e u v` text format.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Family name, or a full `family=<name>;params=<k=v,...>` spec.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Part sizes, e.g. `2,3` for complete_bipartite or `1,2,3` for complete_bisplit.
    #[arg(long)]
    pub parts: Option<String>,
    #[arg(long)]
    pub cliques: Option<String>,
    #[arg(long)]
    pub cycles: Option<String>,
    /// Edges between the clique (or X) side and the rest, as `u-v,u-v`.
    #[arg(long)]
    pub adj: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    /// Erdős–Rényi G(n, p).
    Er,
    /// Uniform random recursive tree.
    Tree,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Generate a seeded random graph instead of a family.
    #[arg(long, value_enum, conflicts_with_all = ["family", "graph"])]
    pub random: Option<RandomKind>,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Write the labeling JSON here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub labeling: PathBuf,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CheckArgs {
    /// Claim ids separated by commas, or `all`.
    #[arg(long, default_value = "all")]
    pub claim: String,
    /// Range `a..b` (inclusive) or a single value.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Parses and runs a command line, returning the exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let solver = Solver::new().threads(cli.threads);
    match &cli.command {
        Command::Generate(a) => cmd_generate(a, out),
        Command::Solve(a) => cmd_solve(a, &solver, out),
        Command::Certify(a) => cmd_certify(a, &solver, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Check(a) => cmd_check(a, &solver, out, err),
    }
}

fn family_spec(src: &SourceArgs, family: &str) -> CliResult<FamilySpec> {
    if family.contains('=') {
        return Ok(family.parse()?);
    }
    let mut p = BTreeMap::new();
    let mut put = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            p.insert(k.to_string(), v);
        }
    };
    put("n", src.n.map(|v| v.to_string()));
    put("m", src.m.map(|v| v.to_string()));
    put("r", src.r.map(|v| v.to_string()));
    put("s", src.s.map(|v| v.to_string()));
    put("cliques", src.cliques.clone());
    put("cycles", src.cycles.clone());
    put("adj", src.adj.clone());
    put("parts", src.parts.clone());
    if let Some(parts) = &src.parts {
        let sizes: Vec<&str> = parts.split(',').map(str::trim).collect();
        let names: &[&str] = match family {
            "complete_bipartite" => &["a", "b"],
            "complete_bisplit" | "complete_tripartite" | "bisplit" => &["x", "y", "z"],
            _ => &[],
        };
        if !names.is_empty() {
            if sizes.len() != names.len() {
                return Err(CliError::input(format!(
                    "{family} takes {} part sizes, got {}",
                    names.len(),
                    sizes.len()
                )));
            }
            for (k, v) in names.iter().zip(sizes) {
                p.insert(k.to_string(), v.to_string());
            }
        }
    }
    Ok(FamilySpec::from_parts(family, &p)?)
}

/// Reads or generates the graph named by `src`.
pub fn load_graph(src: &SourceArgs) -> CliResult<Graph> {
    match (&src.graph, &src.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            Ok(read_graph(&text)?)
        }
        (None, Some(family)) => Ok(generate(&family_spec(src, family)?)?.graph),
        (None, None) => Err(CliError::input("give --graph FILE or --family NAME")),
    }
}

fn edge_list(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("[{}]", parts.join(","))
}

pub fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> CliResult {
    let g = match a.random {
        Some(kind) => {
            let n = a
                .source
                .n
                .ok_or_else(|| CliError::input("--random needs --n"))?;
            match kind {
                RandomKind::Er => erdos_renyi(n, a.density, a.seed)?,
                RandomKind::Tree => random_tree(n, a.seed)?,
            }
        }
        None => load_graph(&a.source)?,
    };
    let text = write_graph(&g);
    match &a.out {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_solve(a: &SourceArgs, solver: &Solver, out: &mut dyn Write) -> CliResult {
    let g = load_graph(a)?;
    let r = solver.solve(&g);
    writeln!(
        out,
        "phi={} witness={} mono={}",
        r.value,
        r.witness,
        edge_list(&r.mono)
    )?;
    Ok(EXIT_OK)
}

pub fn cmd_certify(a: &CertifyArgs, solver: &Solver, out: &mut dyn Write) -> CliResult {
    let g = load_graph(&a.source)?;
    let (r, f) = solve_and_certify_with(solver, &g)?;
    if let Some(path) = &a.out {
        fs::write(path, write_labeling(&f, g.vertex_count())?)?;
    }
    writeln!(out, "phi={} mono={} verified=true", r.value, r.mono.len())?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let g = load_graph(&a.source)?;
    let text = fs::read_to_string(&a.labeling)
        .map_err(|e| CliError::input(format!("{}: {e}", a.labeling.display())))?;
    let (n, f) = read_labeling(&text)?;
    if n != g.vertex_count() {
        return Err(CliError::input(format!(
            "labeling covers {n} vertices but the graph has {}",
            g.vertex_count()
        )));
    }
    let verdict = verify_weak(&g, &f)?;
    if verdict.ok() {
        writeln!(out, "weak-IASI: ok, mono={}", mono_edges(&g, &f)?.len())?;
        Ok(EXIT_OK)
    } else {
        for failure in &verdict.failures {
            writeln!(out, "{failure}")?;
        }
        Ok(EXIT_VIOLATION)
    }
}

/// One line of a claim-check report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub params: String,
    /// Predicted value, or `-` when the claim has none for this row.
    pub formula_value: String,
    pub exact_value: usize,
    /// `MATCH`, `MISMATCH` or `-`.
    pub verdict: String,
    pub witness_size: usize,
    pub mono_count: usize,
    pub runtime_ms: u128,
}

impl ReportRow {
    /// Whether the row is complete and agrees with itself.
    pub fn consistent(&self) -> bool {
        if self.exact_value != self.mono_count {
            return false;
        }
        match (self.formula_value.parse::<usize>(), self.verdict.as_str()) {
            (Ok(p), "MATCH") => p == self.exact_value,
            (Ok(p), "MISMATCH") => p != self.exact_value,
            (Err(_), "-") => self.formula_value == "-",
            _ => false,
        }
    }
}

/// Report rows for one checked point. `C13` yields a second row for the
/// induced labeling of the maximal subdivision.
pub fn rows_for(v: &ClaimVerdict) -> Vec<ReportRow> {
    let params = v.params.params_string();
    let runtime_ms = v.runtime.as_millis();
    let mut rows = vec![ReportRow {
        family: format!("{}:{}", v.claim, v.family),
        params: params.clone(),
        formula_value: v.predicted.to_string(),
        exact_value: v.exact,
        verdict: v.outcome.to_string(),
        witness_size: v.witness_size,
        mono_count: v.mono_count,
        runtime_ms,
    }];
    if let Some(ind) = &v.induced {
        let outcome = if ind.weak_ok && ind.mono as u64 == v.predicted {
            Outcome::Match
        } else {
            Outcome::Mismatch
        };
        rows.push(ReportRow {
            family: format!("{}:induced_labeling({})", v.claim, v.params.name()),
            params,
            formula_value: v.predicted.to_string(),
            exact_value: ind.mono,
            verdict: outcome.to_string(),
            witness_size: ind.non_singleton,
            mono_count: ind.mono,
            runtime_ms,
        });
    }
    rows
}

fn parse_range(flag: &str, s: &Option<String>) -> CliResult<Option<RangeInclusive<usize>>> {
    let Some(s) = s else { return Ok(None) };
    let bad = || {
        CliError::input(format!(
            "--{flag} expects a..b or a single value, got {s:?}"
        ))
    };
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(Some(range))
}

pub fn selected_claims(filter: &str) -> CliResult<Vec<Claim>> {
    if filter.trim().eq_ignore_ascii_case("all") {
        return Ok(catalog());
    }
    let mut claims: Vec<Claim> = Vec::new();
    for id in filter.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let c = find_claim(id)?;
        if !claims.iter().any(|k| k.id == c.id) {
            claims.push(c);
        }
    }
    if claims.is_empty() {
        return Err(CliError::input("no claims selected"));
    }
    Ok(claims)
}

/// Runs every selected claim over its sweep and returns the rows in claim order.
pub fn check_rows(a: &CheckArgs, solver: &Solver) -> CliResult<Vec<ReportRow>> {
    let ranges = ParamRanges {
        n: parse_range("n", &a.n)?,
        m: parse_range("m", &a.m)?,
        r: parse_range("r", &a.r)?,
        s: parse_range("s", &a.s)?,
    };
    let opts = CheckOptions {
        solver: solver.clone(),
    };
    let mut rows = Vec::new();
    for claim in selected_claims(&a.claim)? {
        let points = claim.points(&ranges);
        if points.is_empty() {
            return Err(CliError::input(format!(
                "{} has no parameter points in the given ranges; domain is {}",
                claim.id, claim.domain
            )));
        }
        for p in points {
            rows.extend(rows_for(&check_claim_with(&claim, &p, &opts)?));
        }
    }
    Ok(rows)
}

fn summary(rows: &[ReportRow]) -> String {
    let count = |v: &str| rows.iter().filter(|r| r.verdict == v).count();
    format!(
        "summary: rows={} MATCH={} MISMATCH={}",
        rows.len(),
        count("MATCH"),
        count("MISMATCH")
    )
}

const HEADER: [&str; 8] = [
    "family",
    "params",
    "formula_value",
    "exact_value",
    "verdict",
    "witness_size",
    "mono_count",
    "runtime_ms",
];

fn text_table(rows: &[ReportRow]) -> String {
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.family.clone(),
                r.params.clone(),
                r.formula_value.clone(),
                r.exact_value.to_string(),
                r.verdict.clone(),
                r.witness_size.to_string(),
                r.mono_count.to_string(),
                r.runtime_ms.to_string(),
            ]
        })
        .collect();
    let mut width = HEADER.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |row: &[String]| {
        let padded: Vec<String> = row
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&HEADER.map(String::from));
    for row in &cells {
        s += &line(row);
    }
    s
}

/// Text output ends with the summary line. CSV and JSON keep stdout
/// machine-readable and send the summary to `err`.
pub fn cmd_check(
    a: &CheckArgs,
    solver: &Solver,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let rows = check_rows(a, solver)?;
    match a.format {
        Format::Text => {
            out.write_all(text_table(&rows).as_bytes())?;
            writeln!(out, "{}", summary(&rows))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row)
                    .map_err(|e| CliError::input(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::input(e.to_string()))?;
            out.write_all(&bytes)?;
            writeln!(err, "{}", summary(&rows))?;
        }
        Format::Json => {
            let text =
                serde_json::to_string_pretty(&rows).map_err(|e| CliError::input(e.to_string()))?;
            writeln!(out, "{text}")?;
            writeln!(err, "{}", summary(&rows))?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sparing").chain(args.iter().copied());
        let code = run_from(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("n", &Some("3..6".into())).unwrap(), Some(3..=6));
        assert_eq!(
            parse_range("n", &Some("3..=6".into())).unwrap(),
            Some(3..=6)
        );
        assert_eq!(parse_range("n", &Some("4".into())).unwrap(), Some(4..=4));
        assert_eq!(parse_range("n", &None).unwrap(), None);
        assert!(parse_range("n", &Some("6..3".into())).is_err());
        assert!(parse_range("n", &Some("x".into())).is_err());
    }

    #[test]
    fn family_flags() {
        let src = SourceArgs {
            parts: Some("2,3".into()),
            ..Default::default()
        };
        assert_eq!(
            family_spec(&src, "complete_bipartite").unwrap(),
            FamilySpec::CompleteBipartite { a: 2, b: 3 }
        );
        assert_eq!(
            family_spec(&src, "complete_multipartite").unwrap(),
            FamilySpec::CompleteMultipartite { parts: vec![2, 3] }
        );
        let src = SourceArgs::default();
        assert_eq!(
            family_spec(&src, "family=cone;params=m=4,n=2").unwrap(),
            FamilySpec::Cone { m: 4, n: 2 }
        );
        assert_eq!(family_spec(&src, "cycle").unwrap_err().code, EXIT_INPUT);
    }

    #[test]
    fn solve_examples() {
        let (code, out, _) = run_args(&["solve", "--family", "complete", "--n", "4"]);
        assert_eq!(
            (code, out.as_str()),
            (0, "phi=3 witness=[0] mono=[(1,2),(1,3),(2,3)]\n")
        );
        let (code, out, _) = run_args(&["solve", "--family", "cycle", "--n", "4"]);
        assert_eq!((code, out.as_str()), (0, "phi=0 witness=[0,2] mono=[]\n"));
        let (code, _, err) = run_args(&["solve", "--graph", "/nonexistent/missing.g"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: "));
    }

    #[test]
    fn limits_and_bad_input() {
        assert_eq!(
            run_args(&["certify", "--family", "complete", "--n", "30"]).0,
            3
        );
        assert_eq!(
            run_args(&["solve", "--family", "complete", "--n", "65"]).0,
            3
        );
        assert_eq!(run_args(&["check", "--claim", "C99"]).0, 2);
        assert_eq!(run_args(&["check", "--claim", "C1", "--n", "oops"]).0, 2);
        assert_eq!(run_args(&["solve", "--family", "wheel", "--m", "2"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn check_c1_rows() {
        let a = CheckArgs {
            claim: "C1".into(),
            n: Some("3..6".into()),
            ..Default::default()
        };
        let rows = check_rows(&a, &Solver::new()).unwrap();
        assert_eq!(rows.len(), 4);
        for (row, n) in rows.iter().zip(3..) {
            assert_eq!(row.family, "C1:complete");
            assert_eq!(row.params, format!("n={n}"));
            assert_eq!(row.verdict, "MATCH");
            assert!(row.consistent());
        }
    }

    #[test]
    fn c13_has_two_rows() {
        let a = CheckArgs {
            claim: "c13".into(),
            n: Some("3".into()),
            ..Default::default()
        };
        let rows = check_rows(&a, &Solver::new()).unwrap();
        let k3: Vec<_> = rows
            .iter()
            .filter(|r| r.family.ends_with("(complete)"))
            .collect();
        assert_eq!(k3.len(), 2);
        assert_eq!(k3[0].family, "C13:maximal_subdivision(complete)");
        assert_eq!((k3[0].exact_value, k3[0].verdict.as_str()), (0, "MISMATCH"));
        assert_eq!(k3[1].family, "C13:induced_labeling(complete)");
        assert_eq!((k3[1].exact_value, k3[1].verdict.as_str()), (2, "MATCH"));
        assert!(rows.iter().all(ReportRow::consistent));
    }

    #[test]
    fn consistency_rules() {
        let mut row = ReportRow {
            family: "C1:complete".into(),
            params: "n=3".into(),
            formula_value: "1".into(),
            exact_value: 1,
            verdict: "MATCH".into(),
            witness_size: 1,
            mono_count: 1,
            runtime_ms: 0,
        };
        assert!(row.consistent());
        row.verdict = "MISMATCH".into();
        assert!(!row.consistent());
        row.formula_value = "-".into();
        row.verdict = "-".into();
        assert!(row.consistent());
        row.mono_count = 2;
        assert!(!row.consistent());
    }
}
