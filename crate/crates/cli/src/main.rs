use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hopf_antipode::algebras::psym::hook_conjecture_check;
use hopf_antipode::algebras::ssym::{conjecture_check, SsymConjecture};
use hopf_antipode::algebras::{ConjectureCase, PSym, SSym};
use hopf_antipode::codec::{render, KeyCodec};
use hopf_antipode::graphs::{flats, parse_edges, Graph};
use hopf_antipode::hopf::involution::{graph_flat_signed_set, poly_osp_signed_set, verify_involution};
use hopf_antipode::hopf::Takeuchi;
use hopf_antipode::verify::{self, AlgebraId, MAX_SIZE_ENV};
use hopf_antipode::{Error, Execution, Scalar};

/// Conjecture instances stop at this size unless the environment lowers it.
const CONJECTURE_CAP: usize = 6;
const OSP_CAP: usize = 8;

#[derive(Parser)]
#[command(name = "hopf-antipode", version, about = "Cancellation-free antipodes of combinatorial Hopf algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run every computation on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Antipode of one basis element by Takeuchi's formula and by its closed form.
    Antipode {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        /// Basis key or linear combination, e.g. `2,1` or `123`.
        #[arg(allow_hyphen_values = true)]
        key: String,
        /// Degree cap for the Takeuchi sum; required for mqsym.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Closed form against Takeuchi plus the antipode axiom over all keys up to a size.
    Verify {
        #[arg(value_parser = parse_algebra)]
        algebra: AlgebraId,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Instance-by-instance evidence for a conjectured closed form.
    Conjecture {
        name: ConjectureName,
        #[arg(long)]
        n: usize,
    },
    /// Runs a sign-reversing involution and reports its fixed points.
    Involution {
        name: InvolutionName,
        /// Size of the ground set, for poly-osp.
        #[arg(long)]
        n: Option<usize>,
        /// Graph as `n=K;edges=i-j,...`, for graph-orientation.
        #[arg(long)]
        graph: Option<String>,
        /// Edges of a flat of the graph, e.g. `1-2`; empty for the trivial flat.
        #[arg(long, allow_hyphen_values = true)]
        flat: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureName {
    PsymHook,
    SsymSingleton,
    SsymPair2,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvolutionName {
    PolyOsp,
    GraphOrientation,
}

fn parse_algebra(s: &str) -> Result<AlgebraId, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = AlgebraId::ALL.iter().map(|a| a.name()).collect();
        format!("unknown algebra {s:?}; expected one of {}", names.join(", "))
    })
}

/// What a command produced: the JSON body, a text rendering and whether it passed.
struct Report {
    command: &'static str,
    algebra: Option<String>,
    inputs: Value,
    terms: Vec<(String, Scalar)>,
    agree: Option<bool>,
    extra: Map<String, Value>,
    text: String,
    passed: bool,
}

impl Report {
    fn to_json(&self, elapsed_ms: f64) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(k, c)| json!({"key": k, "coeff": coeff_json(c)})).collect();
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("algebra".into(), json!(self.algebra));
        out.insert("inputs".into(), self.inputs.clone());
        out.insert("terms".into(), Value::Array(terms));
        out.insert("agree".into(), json!(self.agree));
        out.insert("elapsed_ms".into(), json!(elapsed_ms));
        for (k, v) in &self.extra {
            out.insert(k.clone(), v.clone());
        }
        Value::Object(out)
    }
}

/// Small coefficients as JSON numbers, anything wider as a decimal string.
fn coeff_json(c: &Scalar) -> Value {
    i64::try_from(c).map_or_else(|_| json!(c.to_string()), |v| json!(v))
}

fn env_cap(cap: usize) -> usize {
    std::env::var(MAX_SIZE_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(cap, |e| e.min(cap))
}

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<(), Error> {
    let bound = env_cap(cap);
    if size > bound {
        return Err(Error::SizeBound { what, size, bound });
    }
    Ok(())
}

fn cmd_antipode(algebra: AlgebraId, key: &str, max_degree: Option<usize>, exec: Execution) -> Result<Report, Error> {
    let ev = verify::evaluate(algebra, key, max_degree, exec)?;
    let closed = ev.closed.as_deref().unwrap_or("none");
    let agree = ev.agree.map_or("n/a".to_string(), |a| a.to_string());
    let text = format!("takeuchi: {}\nclosed:   {closed}\nagree:    {agree}\n", ev.takeuchi);
    let mut extra = Map::new();
    extra.insert("takeuchi".into(), json!(ev.takeuchi));
    extra.insert("closed".into(), json!(ev.closed));
    Ok(Report {
        command: "antipode",
        algebra: Some(algebra.to_string()),
        inputs: json!({"key": ev.key, "max_degree": max_degree}),
        terms: ev.terms.into_iter().map(|t| (t.key, t.coeff)).collect(),
        passed: ev.agree != Some(false),
        agree: ev.agree,
        extra,
        text,
    })
}

fn cmd_verify(algebra: AlgebraId, max_size: usize, max_degree: Option<usize>, exec: Execution) -> Result<Report, Error> {
    let sweep = verify::verify(algebra, max_size, max_degree, exec)?;
    let passed = sweep.passed();
    let mut text = format!(
        "{algebra}: {} keys checked, {} against a closed form, {}\n",
        sweep.checks.len(),
        sweep.compared(),
        if passed { "pass" } else { "FAIL" }
    );
    for c in sweep.checks.iter().filter(|c| !c.ok()) {
        text.push_str(&format!("  mismatch at {}: agree={:?} axiom={}\n", c.key, c.agree, c.axiom));
    }
    let checks: Vec<Value> =
        sweep.checks.iter().map(|c| json!({"key": c.key, "agree": c.agree, "axiom": c.axiom})).collect();
    let mut extra = Map::new();
    extra.insert("checks".into(), Value::Array(checks));
    Ok(Report {
        command: "verify",
        algebra: Some(algebra.to_string()),
        inputs: json!({"max_size": max_size, "max_degree": max_degree}),
        terms: Vec::new(),
        agree: Some(passed),
        extra,
        text,
        passed,
    })
}

fn cases_report<K, H>(h: &H, name: &str, n: usize, cases: Vec<ConjectureCase<K>>) -> Report
where
    K: hopf_antipode::linear::BasisKey,
    H: KeyCodec<Key = K>,
{
    let passed = cases.iter().all(|c| c.holds);
    let mut text = String::new();
    let mut json_cases = Vec::new();
    for c in &cases {
        let computed = render(h, &c.computed);
        let predicted = c.predicted.as_ref().map(|p| render(h, p));
        text.push_str(&format!("{} {}: {computed}\n", if c.holds { "PASS" } else { "FAIL" }, c.instance));
        if !c.holds {
            match (&predicted, &c.note) {
                (Some(p), _) => text.push_str(&format!("  predicted: {p}\n")),
                (None, Some(note)) => text.push_str(&format!("  no prediction: {note}\n")),
                (None, None) => {}
            }
        }
        json_cases.push(json!({
            "instance": c.instance,
            "holds": c.holds,
            "predicted": predicted,
            "computed": computed,
            "note": c.note,
        }));
    }
    let held = cases.iter().filter(|c| c.holds).count();
    text.push_str(&format!("{held}/{} instances hold\n", cases.len()));
    let mut extra = Map::new();
    extra.insert("conjecture".into(), json!(name));
    extra.insert("cases".into(), Value::Array(json_cases));
    Report {
        command: "conjecture",
        algebra: None,
        inputs: json!({"name": name, "n": n}),
        terms: Vec::new(),
        agree: Some(passed),
        extra,
        text,
        passed,
    }
}

fn cmd_conjecture(name: ConjectureName, n: usize, exec: Execution) -> Result<Report, Error> {
    let tk = Takeuchi::with_execution(&SSym, exec);
    let report = match name {
        ConjectureName::PsymHook => {
            check_cap("psym-hook", n, CONJECTURE_CAP.min(AlgebraId::PSym.bound()))?;
            cases_report(&PSym, "psym-hook", n, hook_conjecture_check(&tk, n))
        }
        ConjectureName::SsymSingleton | ConjectureName::SsymPair2 => {
            let (label, which) = match name {
                ConjectureName::SsymSingleton => ("ssym-singleton", SsymConjecture::Singleton),
                _ => ("ssym-pair2", SsymConjecture::PairWithTwo),
            };
            check_cap(label, n, CONJECTURE_CAP.min(AlgebraId::SSym.bound()))?;
            cases_report(&SSym, label, n, conjecture_check(&tk, which, n as u32))
        }
    };
    Ok(report)
}

fn normalize(edges: Vec<(u32, u32)>) -> BTreeSet<(u32, u32)> {
    edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect()
}

fn cmd_involution(
    name: InvolutionName,
    n: Option<usize>,
    graph: Option<&str>,
    flat: Option<&str>,
) -> Result<Report, Error> {
    let (label, inputs, set) = match name {
        InvolutionName::PolyOsp => {
            let n = n.ok_or_else(|| Error::Precondition("poly-osp needs --n".into()))?;
            check_cap("poly-osp", n, OSP_CAP)?;
            ("poly-osp", json!({"n": n}), poly_osp_signed_set(n))
        }
        InvolutionName::GraphOrientation => {
            let graph_text = graph.ok_or_else(|| Error::Precondition("graph-orientation needs --graph".into()))?;
            let g: Graph = graph_text.parse()?;
            AlgebraId::Graph.check_size(g.vertex_count())?;
            let f = normalize(parse_edges(flat.unwrap_or(""))?);
            if !flats(&g).contains(&f) {
                return Err(Error::Precondition(format!("{:?} is not a flat of the graph", flat.unwrap_or(""))));
            }
            let inputs = json!({"graph": graph_text, "flat": flat.unwrap_or("")});
            ("graph-orientation", inputs, graph_flat_signed_set(&g, &f))
        }
    };
    let report = verify_involution(&set);
    let terms: Vec<(String, Scalar)> =
        report.fixed_points.iter().map(|p| (p.to_string(), Scalar::from(set.sign(p)))).collect();
    let mut text = format!("{label}: involution {}\n", if report.ok { "ok" } else { "BROKEN" });
    if let Some(v) = &report.violation {
        text.push_str(&format!("  {v}\n"));
    }
    text.push_str(&format!("fixed points: {}\n", terms.len()));
    for (k, c) in &terms {
        text.push_str(&format!("  {} {k}\n", if *c > Scalar::from(0) { '+' } else { '-' }));
    }
    text.push_str(&format!("signed sum: {}\n", report.signed_sum));
    let mut extra = Map::new();
    extra.insert("involution".into(), json!(label));
    extra.insert("fixed_points".into(), json!(terms.iter().map(|(k, _)| k.clone()).collect::<Vec<_>>()));
    extra.insert("signed_sum".into(), coeff_json(&report.signed_sum));
    extra.insert("violation".into(), json!(report.violation));
    Ok(Report {
        command: "involution",
        algebra: None,
        inputs,
        terms,
        agree: Some(report.ok),
        extra,
        text,
        passed: report.ok,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Antipode { algebra, key, max_degree } => cmd_antipode(*algebra, key, *max_degree, exec),
        Command::Verify { algebra, max_size, max_degree } => cmd_verify(*algebra, *max_size, *max_degree, exec),
        Command::Conjecture { name, n } => cmd_conjecture(*name, *n, exec),
        Command::Involution { name, n, graph, flat } => cmd_involution(*name, *n, graph.as_deref(), flat.as_deref()),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    match result {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", report.to_json(elapsed_ms)),
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
