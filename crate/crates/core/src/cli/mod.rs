//! The `affsat` command line: argument parsing, query validation and the
//! single output document each command writes.
//!
//! Exit codes: 0 success, 1 check failure or internal error, 2 invalid input,
//! 3 node cap exceeded.

pub mod cache;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::cartan::{weights_from_dims, Rank, Weight};
use crate::crystal::{tensor_highest_weights_from, CrystalGraph, GenerationConfig, DEFAULT_NODE_CAP};
use crate::error::Error;
use crate::freudenthal::{box_below, Freudenthal};
use crate::satake::{enumerate_leaves, sheaf_rows, sheaf_rows_tsv};
use cache::Cache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "affsat", version, about = "Crystals, multiplicities and leaf strata for affine sl(n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Truncated crystal graph of B(lambda) (json or dot)
    Crystal(QueryArgs),
    /// Weight multiplicity dim V_mu(lambda)
    Mult(QueryArgs),
    /// Highest weights, multiplicity and fixed points of V(lambda1) (x) V(lambda2)
    Tensor(QueryArgs),
    /// Levi branching table at residue i (json or tsv)
    Branch(QueryArgs),
    /// Symplectic-leaf labels (kappa, k)
    Leaves(QueryArgs),
    /// Fixed-point count and attracting-set component count
    Fixed(QueryArgs),
    /// Compare crystal counts with the Freudenthal recursion
    Check(QueryArgs),
}

#[derive(Debug, Clone, Args)]
pub struct QueryArgs {
    /// Rank n of sl(n)
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Framing dimension vector W (lambda = sum w_i Lambda_i)
    #[arg(short = 'w', value_delimiter = ',', allow_hyphen_values = true)]
    pub w: Option<Vec<i64>>,
    /// Gauge dimension vector V (mu = lambda - sum v_i alpha_i)
    #[arg(short = 'v', value_delimiter = ',', allow_hyphen_values = true)]
    pub v: Option<Vec<i64>>,
    /// Framing vector of the second tensor factor
    #[arg(long = "w2", value_delimiter = ',', allow_hyphen_values = true)]
    pub w2: Option<Vec<i64>>,
    /// lambda as Weight JSON, instead of -n/-w
    #[arg(long)]
    pub lambda: Option<String>,
    /// Second tensor factor as Weight JSON, instead of --w2
    #[arg(long)]
    pub lambda2: Option<String>,
    /// mu as Weight JSON, instead of -v
    #[arg(long)]
    pub mu: Option<String>,
    /// Residue for branch
    #[arg(short = 'i')]
    pub i: Option<usize>,
    /// Componentwise cap on lowering coefficients
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub budget: Option<Vec<i64>>,
    /// Uniform budget shorthand
    #[arg(long, allow_hyphen_values = true)]
    pub depth: Option<i64>,
    /// Keep strata whose regular locus is empty
    #[arg(long)]
    pub include_empty: bool,
    /// json, dot or tsv
    #[arg(long, default_value = "json")]
    pub format: String,
    #[arg(long, env = "AFFSAT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    pub node_cap: usize,
    /// Worker threads for graph generation
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Crystal,
    Mult,
    Tensor,
    Branch,
    Leaves,
    Fixed,
    Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Tsv,
}

/// A validated query.
#[derive(Debug, Clone)]
pub struct QuerySpec {
    pub command: CommandKind,
    pub lambda: Weight,
    pub lambda2: Option<Weight>,
    pub mu: Option<Weight>,
    pub i: Option<usize>,
    pub budget: Option<Vec<i64>>,
    pub include_empty: bool,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub config: GenerationConfig,
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Core(Error),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Core(Error::Resource { .. }) => EXIT_RESOURCE,
            CliError::Core(Error::Consistency(_) | Error::Overflow(_)) => EXIT_FAILURE,
            CliError::Core(_) => EXIT_INVALID,
            CliError::Failed(_) => EXIT_FAILURE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(msg) | CliError::Failed(msg) => f.write_str(msg),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn parse_weight(label: &str, text: &str) -> Result<Weight, CliError> {
    serde_json::from_str(text).map_err(|e| invalid(format!("--{label}: {e}")))
}

fn highest_from_json(label: &str, text: &str) -> Result<Weight, CliError> {
    let w = parse_weight(label, text)?;
    if w.c().iter().any(|&x| x != 0) || !w.is_dominant() || w.level() < 1 {
        return Err(invalid(format!("--{label} must be dominant with zero lowering and level >= 1")));
    }
    Ok(w)
}

impl QueryArgs {
    fn rank(&self) -> Result<Rank, CliError> {
        let n = self.n.ok_or_else(|| invalid("-n is required"))?;
        Ok(Rank::new(n)?)
    }

    fn lambda(&self) -> Result<Weight, CliError> {
        match (&self.lambda, &self.w) {
            (Some(_), Some(_)) => Err(invalid("give either --lambda or -w, not both")),
            (Some(text), None) => highest_from_json("lambda", text),
            (None, Some(w)) => {
                let n = self.rank()?;
                Ok(weights_from_dims(n.get(), w, &vec![0; n.get()])?.0)
            }
            (None, None) => Err(invalid("missing highest weight: pass -n and -w, or --lambda")),
        }
    }

    fn lambda2(&self, n: Rank) -> Result<Option<Weight>, CliError> {
        match (&self.lambda2, &self.w2) {
            (Some(_), Some(_)) => Err(invalid("give either --lambda2 or --w2, not both")),
            (Some(text), None) => Ok(Some(highest_from_json("lambda2", text)?)),
            (None, Some(w)) => Ok(Some(weights_from_dims(n.get(), w, &vec![0; n.get()])?.0)),
            (None, None) => Ok(None),
        }
    }

    /// mu either as JSON or as `base - sum v_i alpha_i`.
    fn mu(&self, base: &Weight) -> Result<Option<Weight>, CliError> {
        match (&self.mu, &self.v) {
            (Some(_), Some(_)) => Err(invalid("give either --mu or -v, not both")),
            (Some(text), None) => Ok(Some(parse_weight("mu", text)?)),
            (None, Some(v)) => Ok(Some(weights_from_dims(base.rank().get(), base.w(), v)?.1)),
            (None, None) => Ok(None),
        }
    }

    pub fn into_query(self, command: CommandKind) -> Result<QuerySpec, CliError> {
        let lambda = self.lambda()?;
        let n = lambda.rank();
        if self.n.is_some_and(|m| m != n.get()) {
            return Err(invalid("-n disagrees with the rank of --lambda"));
        }
        let lambda2 = self.lambda2(n)?;
        if lambda2.as_ref().is_some_and(|l| l.rank() != n) {
            return Err(invalid("tensor factors must share the rank"));
        }
        let mu_base = match (&lambda2, command) {
            (Some(l2), CommandKind::Tensor) => {
                let w = lambda.w().iter().zip(l2.w()).map(|(a, b)| a + b).collect();
                Weight::highest(n, w)?
            }
            _ => lambda.clone(),
        };
        let mu = self.mu(&mu_base)?;
        if mu.as_ref().is_some_and(|m| m.rank() != n) {
            return Err(invalid("mu has the wrong rank"));
        }
        let budget = match (&self.budget, self.depth) {
            (Some(_), Some(_)) => return Err(invalid("give either --budget or --depth, not both")),
            (Some(b), None) => Some(b.clone()),
            (None, Some(d)) => Some(vec![d; n.get()]),
            (None, None) => None,
        };
        if let Some(b) = &budget {
            if b.len() != n.get() || b.iter().any(|&x| x < 0) {
                return Err(invalid(format!("budget must be {} nonnegative integers", n.get())));
            }
        }
        if let Some(i) = self.i {
            if i >= n.get() {
                return Err(invalid(format!("-i must be below n = {}", n.get())));
            }
        }
        let format = match self.format.as_str() {
            "json" => Format::Json,
            "dot" => Format::Dot,
            "tsv" => Format::Tsv,
            other => return Err(invalid(format!("unknown format {other:?}"))),
        };
        let allowed = match command {
            CommandKind::Crystal => format != Format::Tsv,
            CommandKind::Branch => format != Format::Dot,
            _ => format == Format::Json,
        };
        if !allowed {
            return Err(invalid(format!("format {:?} is not available for this command", self.format)));
        }
        match command {
            CommandKind::Mult | CommandKind::Leaves | CommandKind::Fixed if mu.is_none() => {
                return Err(invalid("this command needs mu: pass -v or --mu"));
            }
            CommandKind::Branch if mu.is_none() || self.i.is_none() => {
                return Err(invalid("branch needs mu (-v or --mu) and -i"));
            }
            CommandKind::Tensor if lambda2.is_none() => {
                return Err(invalid("tensor needs a second factor: pass --w2 or --lambda2"));
            }
            CommandKind::Tensor if budget.is_none() && mu.is_none() => {
                return Err(invalid("tensor needs --budget, --depth or mu"));
            }
            CommandKind::Crystal | CommandKind::Check if budget.is_none() && mu.is_none() => {
                return Err(invalid("this command needs --budget, --depth or -v"));
            }
            _ => {}
        }
        if self.threads == Some(0) {
            return Err(invalid("--threads must be positive"));
        }
        Ok(QuerySpec {
            command,
            lambda,
            lambda2,
            mu,
            i: self.i,
            budget,
            include_empty: self.include_empty,
            format,
            cache_dir: self.cache_dir,
            config: GenerationConfig { node_cap: self.node_cap, threads: self.threads },
        })
    }
}

impl Cli {
    pub fn into_query(self) -> Result<QuerySpec, CliError> {
        let (kind, args) = match self.command {
            CommandArgs::Crystal(a) => (CommandKind::Crystal, a),
            CommandArgs::Mult(a) => (CommandKind::Mult, a),
            CommandArgs::Tensor(a) => (CommandKind::Tensor, a),
            CommandArgs::Branch(a) => (CommandKind::Branch, a),
            CommandArgs::Leaves(a) => (CommandKind::Leaves, a),
            CommandArgs::Fixed(a) => (CommandKind::Fixed, a),
            CommandArgs::Check(a) => (CommandKind::Check, a),
        };
        args.into_query(kind)
    }
}

/// Output of one command: the document for stdout plus diagnostics.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: String,
    pub diagnostics: Vec<String>,
    pub code: i32,
}

struct Session {
    cache: Cache,
    config: GenerationConfig,
}

impl Session {
    fn graph(&mut self, lambda: &Weight, budget: &[i64]) -> Result<CrystalGraph, CliError> {
        Ok(self.cache.get_or_build(lambda, budget, &self.config)?.0)
    }
}

/// Lowering of `mu` against `base`; `None` unless `mu` lies in `base - Q_+`.
fn lowering_against(base: &Weight, mu: &Weight) -> Option<Vec<i64>> {
    crate::crystal::lowering_of(base, mu).ok().flatten()
}

fn json_doc<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn execute(q: &QuerySpec, session: &mut Session) -> Result<(String, i32, Vec<String>), CliError> {
    let lambda = &q.lambda;
    let mut notes = Vec::new();
    let doc = match q.command {
        CommandKind::Crystal => {
            let budget = q.budget.clone().or_else(|| q.mu.as_ref().and_then(|m| lowering_against(lambda, m)));
            let budget = budget.ok_or_else(|| invalid("mu is not below lambda; give --budget"))?;
            let graph = session.graph(lambda, &budget)?;
            match q.format {
                Format::Dot => graph.to_dot(),
                _ => {
                    let mut s = graph.canonical_json();
                    s.push('\n');
                    s
                }
            }
        }
        CommandKind::Mult => {
            let mu = q.mu.as_ref().expect("validated");
            let m = match lowering_against(lambda, mu) {
                Some(c) => session.graph(lambda, &c)?.multiplicity(&c),
                None => 0,
            };
            json_doc(&json!({ "lambda": lambda, "mu": mu, "multiplicity": m }))
        }
        CommandKind::Fixed => {
            let mu = q.mu.as_ref().expect("validated");
            let m = match lowering_against(lambda, mu) {
                Some(c) => session.graph(lambda, &c)?.multiplicity(&c),
                None => 0,
            };
            json_doc(&json!({
                "lambda": lambda,
                "mu": mu,
                "fixed_points": u64::from(m > 0),
                "attracting_components": m,
            }))
        }
        CommandKind::Branch => {
            let mu = q.mu.as_ref().expect("validated");
            let i = q.i.expect("validated");
            let (table, rows) = match lowering_against(lambda, mu) {
                Some(c) => {
                    let graph = session.graph(lambda, &c)?;
                    let table = graph.levi_branching(&c, i)?;
                    let rows = sheaf_rows(&lambda.with_lowering(c)?, i, &table)?;
                    (table, rows)
                }
                None => Default::default(),
            };
            match q.format {
                Format::Tsv => sheaf_rows_tsv(&rows),
                _ => json_doc(&json!({
                    "lambda": lambda,
                    "mu": mu,
                    "i": i,
                    "branching": table,
                    "rows": rows,
                })),
            }
        }
        CommandKind::Leaves => {
            let mu = q.mu.as_ref().expect("validated");
            let strata = enumerate_leaves(lambda, mu, q.include_empty)?;
            json_doc(&json!({
                "lambda": lambda,
                "mu": mu,
                "include_empty": q.include_empty,
                "strata": strata,
            }))
        }
        CommandKind::Tensor => {
            let lambda2 = q.lambda2.as_ref().expect("validated");
            let base: Vec<i64> = lambda.w().iter().zip(lambda2.w()).map(|(a, b)| a + b).collect();
            let top = Weight::highest(lambda.rank(), base)?;
            let mu_c = q.mu.as_ref().map(|m| lowering_against(&top, m));
            let budget = match (&q.budget, &mu_c) {
                (Some(b), _) => b.clone(),
                (None, Some(Some(c))) => c.clone(),
                (None, _) => return Err(invalid("mu is not below lambda1 + lambda2; give --budget")),
            };
            let g1 = session.graph(lambda, &budget)?;
            let g2 = session.graph(lambda2, &budget)?;
            let highest: Vec<_> = tensor_highest_weights_from(&g1, &g2)?
                .into_iter()
                .map(|(weight, multiplicity)| json!({ "weight": weight, "multiplicity": multiplicity }))
                .collect();
            let mut doc = json!({
                "lambda1": lambda,
                "lambda2": lambda2,
                "budget": budget,
                "highest_weights": highest,
            });
            if let Some(mu) = &q.mu {
                let (mult, fixed) = match mu_c.flatten() {
                    Some(c) => {
                        let (h1, h2) = (session.graph(lambda, &c)?, session.graph(lambda2, &c)?);
                        let (m1, m2) = (h1.weight_counts(), h2.weight_counts());
                        let mut total = 0u64;
                        let mut fixed = Vec::new();
                        for x in box_below(&c) {
                            let y: Vec<i64> = c.iter().zip(&x).map(|(a, b)| a - b).collect();
                            let (a, b) = (m1.get(&x).copied().unwrap_or(0), m2.get(&y).copied().unwrap_or(0));
                            if a > 0 && b > 0 {
                                total += a * b;
                                fixed.push(json!({
                                    "mu1": lambda.with_lowering(x)?,
                                    "mu2": lambda2.with_lowering(y)?,
                                }));
                            }
                        }
                        (total, fixed)
                    }
                    None => (0, Vec::new()),
                };
                doc["mu"] = json!(mu);
                doc["multiplicity"] = json!(mult);
                doc["fixed_points"] = json!(fixed);
            }
            json_doc(&doc)
        }
        CommandKind::Check => {
            let budget = q.budget.clone().or_else(|| q.mu.as_ref().and_then(|m| lowering_against(lambda, m)));
            let budget = budget.ok_or_else(|| invalid("mu is not below lambda; give --budget"))?;
            let graph = session.graph(lambda, &budget)?;
            let mut oracle = Freudenthal::new(lambda)?;
            let counts = graph.weight_counts();
            let mut mismatches = Vec::new();
            let boxed = box_below(&budget);
            for c in &boxed {
                let crystal = counts.get(c).copied().unwrap_or(0);
                let freudenthal = oracle.lowering_multiplicity(c)?;
                if crystal != freudenthal {
                    mismatches.push(json!({ "c": c, "crystal": crystal, "freudenthal": freudenthal }));
                }
            }
            let violations = graph.axiom_violations();
            let ok = mismatches.is_empty() && violations.is_empty();
            let report = if ok {
                format!("crystal vs Freudenthal: OK ({} weights compared)", boxed.len())
            } else {
                format!(
                    "crystal vs Freudenthal: FAILED ({} of {} weights differ, {} axiom violations)",
                    mismatches.len(),
                    boxed.len(),
                    violations.len()
                )
            };
            notes.push(report.clone());
            let doc = json_doc(&json!({
                "lambda": lambda,
                "budget": budget,
                "status": if ok { "OK" } else { "FAILED" },
                "weights_compared": boxed.len(),
                "nodes": graph.len(),
                "mismatches": mismatches,
                "axiom_violations": violations,
                "report": report,
            }));
            return Ok((doc, if ok { EXIT_OK } else { EXIT_FAILURE }, notes));
        }
    };
    Ok((doc, EXIT_OK, notes))
}

/// Runs a validated query without touching the process streams.
pub fn run_query(q: &QuerySpec) -> Outcome {
    let mut session = Session { cache: Cache::new(q.cache_dir.clone()), config: q.config };
    let result = execute(q, &mut session);
    let mut diagnostics = session.cache.take_warnings();
    match result {
        Ok((document, code, notes)) => {
            diagnostics.extend(notes);
            Outcome { document, diagnostics, code }
        }
        Err(e) => {
            diagnostics.push(format!("error: {e}"));
            Outcome { document: String::new(), diagnostics, code: e.exit_code() }
        }
    }
}

/// Runs a query, writing the document to `out` and diagnostics to `err`.
pub fn run(q: &QuerySpec, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let outcome = run_query(q);
    for line in &outcome.diagnostics {
        let _ = writeln!(err, "{line}");
    }
    if out.write_all(outcome.document.as_bytes()).and_then(|_| out.flush()).is_err() {
        return EXIT_FAILURE;
    }
    outcome.code
}

/// Parses `argv` and runs; returns the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match cli.into_query() {
        Ok(q) => run(&q, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("affsat").chain(args.iter().copied());
        let code = main_with_args(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_out(args: &[&str]) -> serde_json::Value {
        let (code, out, err) = call(args);
        assert_eq!(code, 0, "stderr: {err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn mult_command() {
        let v = json_out(&["mult", "-n", "2", "-w", "1,0", "-v", "2,2"]);
        assert_eq!(v["multiplicity"], 2);
        let v = json_out(&["mult", "-n", "2", "-w", "1,0", "-v", "0,1"]);
        assert_eq!(v["multiplicity"], 0);
        let v = json_out(&["mult", "--lambda", r#"{"n":2,"w":[1,0],"c":[0,0]}"#, "--mu", r#"{"n":2,"w":[1,0],"c":[1,1]}"#]);
        assert_eq!(v["multiplicity"], 1);
    }

    #[test]
    fn leaves_command() {
        let v = json_out(&["leaves", "-n", "2", "-w", "1,0", "-v", "1,1"]);
        assert_eq!(v["strata"].as_array().unwrap().len(), 2);
        let v = json_out(&["leaves", "-n", "2", "-w", "1,0", "-v", "1,1", "--include-empty"]);
        let strata = v["strata"].as_array().unwrap();
        assert_eq!(strata.len(), 3);
        assert_eq!(strata[0], json!({"kappa": {"n":2,"w":[1,0],"c":[0,0]}, "k": [], "regular_locus_empty": true}));
    }

    #[test]
    fn check_command() {
        let (code, out, err) = call(&["check", "-n", "2", "-w", "1,0", "--depth", "4"]);
        assert_eq!(code, 0);
        assert!(err.contains("crystal vs Freudenthal: OK (25 weights compared)"));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["status"], "OK");
        assert_eq!(v["weights_compared"], 25);
    }

    #[test]
    fn other_commands() {
        let v = json_out(&["fixed", "-n", "2", "-w", "1,0", "-v", "0,1"]);
        assert_eq!((v["fixed_points"].clone(), v["attracting_components"].clone()), (json!(0), json!(0)));
        let v = json_out(&["fixed", "-n", "2", "-w", "1,0", "-v", "1,1"]);
        assert_eq!(v["fixed_points"], 1);

        let v = json_out(&["tensor", "-n", "3", "-w", "0,1,0", "--w2", "0,0,1", "-v", "0,1,1"]);
        assert_eq!(v["highest_weights"].as_array().unwrap().len(), 2);
        assert_eq!(v["multiplicity"], 3);
        assert_eq!(v["fixed_points"].as_array().unwrap().len(), 3);

        let v = json_out(&["branch", "-n", "2", "-w", "1,0", "-v", "2,2", "-i", "1"]);
        assert_eq!(v["branching"], json!({"0": 1, "1": 1}));
        let (code, tsv, _) = call(&["branch", "-n", "2", "-w", "1,0", "-v", "2,2", "-i", "1", "--format", "tsv"]);
        assert_eq!(code, 0);
        assert_eq!(tsv, "k\tkappa_w\tkappa_c\tpairing\tmultiplicity\n0\t1,0\t2,2\t0\t1\n1\t1,0\t2,1\t2\t1\n");

        let (code, dot, _) = call(&["crystal", "-n", "2", "-w", "1,0", "--depth", "2", "--format", "dot"]);
        assert_eq!(code, 0);
        assert!(dot.starts_with("digraph"));
        let v = json_out(&["crystal", "-n", "3", "-w", "0,1,1", "--budget", "0,1,1"]);
        assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["mult", "-n", "2", "-w", "1", "-v", "0,0"]).0, EXIT_INVALID);
        assert_eq!(call(&["mult", "-n", "2", "-w", "1,-1", "-v", "0,0"]).0, EXIT_INVALID);
        assert_eq!(call(&["mult", "-n", "2", "-w", "0,0", "-v", "0,0"]).0, EXIT_INVALID);
        assert_eq!(call(&["mult", "-n", "1", "-w", "1", "-v", "0"]).0, EXIT_INVALID);
        assert_eq!(call(&["mult", "-n", "2", "-w", "1,0"]).0, EXIT_INVALID);
        assert_eq!(call(&["crystal", "-n", "2", "-w", "1,0", "--depth", "2", "--format", "xml"]).0, EXIT_INVALID);
        assert_eq!(call(&["mult", "-n", "2", "-w", "1,0", "-v", "1,1", "--format", "dot"]).0, EXIT_INVALID);
        assert_eq!(call(&["bogus"]).0, EXIT_INVALID);
        let (code, out, err) = call(&["crystal", "-n", "2", "-w", "1,0", "--depth", "8", "--node-cap", "20"]);
        assert_eq!(code, EXIT_RESOURCE);
        assert!(out.is_empty());
        assert!(err.contains("node cap of 20"));
    }
}
