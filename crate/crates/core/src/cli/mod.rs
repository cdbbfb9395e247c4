//! The `hkcolor` command line.
//!
//! Exit codes: 0 success, 2 invalid or missing input (or a failed check),
//! 3 an exhaustive computation refused by its cap.

mod report;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fglss::{
    alpha_coloring, good_fraction_curve, mwis_exact, verify_coloring, Coloring, FglssGraph, GoodFractionPoint,
    LabelingScope, MwisJson, DEFAULT_GOOD_CAP, DEFAULT_MWIS_MAX_VERTICES,
};
use crate::label_cover::{
    extend, gen_planted, gen_random, value_exact, GenParams, LabelCoverInstance, Labeling, DEFAULT_VALUE_CAP,
};
use crate::pcp::{
    accept_prob_exact_enum, accept_prob_exact_product, accept_prob_mc, AcceptanceReport, Proof, ProofTable,
    VerifierConfig, DEFAULT_ENUM_CAP,
};
use crate::weights;

pub const ENV_VALUE_CAP: &str = "HKCOLOR_VALUE_CAP";
pub const ENV_ENUM_CAP: &str = "HKCOLOR_ENUM_CAP";
pub const ENV_GOOD_CAP: &str = "HKCOLOR_GOOD_CAP";
pub const ENV_MWIS_MAX_VERTICES: &str = "HKCOLOR_MWIS_MAX_VERTICES";

#[derive(Parser, Debug)]
#[command(
    name = "hkcolor",
    version,
    about = "Label Cover to Hadamard-predicate PCP to FGLSS graphs"
)]
struct Cli {
    /// Worker thread count (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a Label Cover instance.
    GenLc(GenLc),
    /// Exact Label Cover value by enumeration.
    LcValue(LcValue),
    /// Append extension bits to every label.
    Extend(ExtendArgs),
    /// Measure verifier acceptance of a proof.
    Accept(Accept),
    /// Build an FGLSS graph over sampled trials.
    FglssBuild(FglssBuild),
    /// Exact maximum-weight independent set.
    Mwis(Mwis),
    /// Not-good query fraction as a function of t.
    GoodFraction(GoodFraction),
    /// Color a graph by extension index using the planted labeling.
    Color(Color),
    /// Check a coloring against a graph.
    VerifyColoring(VerifyColoring),
    /// Assemble a report from the artifact files.
    Report(report::ReportArgs),
}

#[derive(clap::Args, Debug)]
struct GenLc {
    /// Plant a satisfying labeling (value 1).
    #[arg(long)]
    planted: bool,
    #[arg(long)]
    u: usize,
    #[arg(long)]
    v: usize,
    /// Left label count L.
    #[arg(long)]
    labels: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    edges: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = "instance.json")]
    out: PathBuf,
    #[arg(long, default_value = "labeling.json")]
    labeling_out: PathBuf,
}

#[derive(clap::Args, Debug)]
struct LcValue {
    #[arg(long, default_value = "instance.json")]
    instance: PathBuf,
    #[arg(long, default_value = "value.json")]
    out: PathBuf,
}

#[derive(clap::Args, Debug)]
struct ExtendArgs {
    #[arg(long)]
    t: u32,
    #[arg(long, default_value = "instance.json")]
    instance: PathBuf,
    /// Defaults to `instance_t<t>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Mc,
    ExactEnum,
    ExactProduct,
}

#[derive(clap::Args, Debug)]
struct Accept {
    /// `correct`, `random`, or `table:<file>`.
    #[arg(long)]
    proof: String,
    #[arg(long, value_enum, default_value = "mc")]
    mode: Mode,
    #[arg(long, default_value_t = 2)]
    r: u32,
    /// Noise rate; defaults to 1/K².
    #[arg(long)]
    eta: Option<f64>,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long)]
    seed: u64,
    /// Key of the random proof; defaults to the seed.
    #[arg(long)]
    proof_seed: Option<u64>,
    /// Extension used by the correct proof.
    #[arg(long, default_value_t = 0)]
    alpha: usize,
    #[arg(long, default_value = "instance.json")]
    instance: PathBuf,
    /// Labeling of the unextended instance, for the correct proof.
    #[arg(long, default_value = "labeling.json")]
    labeling: PathBuf,
    #[arg(long, default_value = "accept.json")]
    out: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Json,
    Dimacs,
}

#[derive(clap::Args, Debug)]
struct FglssBuild {
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long)]
    eta: Option<f64>,
    /// Number of sampled trials.
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
    #[arg(long, default_value = "instance.json")]
    instance: PathBuf,
    /// JSON graph (always written; the DIMACS file sits next to it).
    #[arg(long, default_value = "graph.json")]
    out: PathBuf,
}

#[derive(clap::Args, Debug)]
struct Mwis {
    #[arg(long, default_value = "graph.json")]
    graph: PathBuf,
    #[arg(long, default_value = "mwis.json")]
    out: PathBuf,
}

#[derive(clap::Args, Debug)]
struct GoodFraction {
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long)]
    eta: Option<f64>,
    /// Extension widths, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
    t: Vec<u32>,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value = "all")]
    scope: Scope,
    /// Unextended instance.
    #[arg(long, default_value = "instance.json")]
    instance: PathBuf,
    #[arg(long, default_value = "good.json")]
    out: PathBuf,
    #[arg(long, default_value = "good.csv")]
    csv: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scope {
    All,
    Satisfying,
}

#[derive(clap::Args, Debug)]
struct Color {
    #[arg(long, default_value = "graph.json")]
    graph: PathBuf,
    #[arg(long, default_value = "labeling.json")]
    labeling: PathBuf,
    #[arg(long, default_value = "coloring.json")]
    out: PathBuf,
}

#[derive(clap::Args, Debug)]
struct VerifyColoring {
    #[arg(long, default_value = "graph.json")]
    graph: PathBuf,
    #[arg(long, default_value = "coloring.json")]
    coloring: PathBuf,
    #[arg(long, default_value = "verify.json")]
    out: PathBuf,
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match dispatch(cli.command) {
        Ok(summary) => {
            println!("{summary}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::GenLc(a) => gen_lc(a),
        Command::LcValue(a) => lc_value(a),
        Command::Extend(a) => extend_cmd(a),
        Command::Accept(a) => accept(a),
        Command::FglssBuild(a) => fglss_build(a),
        Command::Mwis(a) => mwis(a),
        Command::GoodFraction(a) => good_fraction(a),
        Command::Color(a) => color(a),
        Command::VerifyColoring(a) => verify(a),
        Command::Report(a) => report::report(a),
    }
}

pub(crate) fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

pub(crate) fn write(path: &Path, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    write(path, &serde_json::to_string_pretty(value)?)
}

pub(crate) fn load_instance(path: &Path) -> Result<LabelCoverInstance> {
    let inst =
        LabelCoverInstance::from_json(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let bad = inst.validate();
    if !bad.is_empty() {
        let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
        return Err(Error::Input(format!("{}: {}", path.display(), list.join("; "))));
    }
    Ok(inst)
}

fn load_labeling(path: &Path) -> Result<Labeling> {
    Labeling::from_json(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub(crate) fn load_graph(path: &Path) -> Result<FglssGraph> {
    FglssGraph::from_json(&read(path)?).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn env_cap(name: &str, default: f64) -> Result<f64> {
    match std::env::var(name) {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|c| *c > 0.0)
            .ok_or_else(|| Error::Input(format!("{name}={s:?} is not a positive number"))),
        Err(_) => Ok(default),
    }
}

fn config(r: u32, eta: Option<f64>, seed: u64) -> Result<VerifierConfig> {
    let base = VerifierConfig::new(r, seed);
    let cfg = match eta {
        Some(e) => base.with_eta(e),
        None => base,
    };
    cfg.check()?;
    Ok(cfg)
}

fn gen_lc(a: GenLc) -> Result<String> {
    let params = GenParams {
        u_count: a.u,
        v_count: a.v,
        left_labels: a.labels,
        d: a.d,
        edge_count: a.edges,
    };
    let inst = if a.planted {
        let (inst, lab) = gen_planted(params, a.seed)?;
        write(&a.labeling_out, &lab.to_json())?;
        inst
    } else {
        gen_random(params, a.seed)?
    };
    write(&a.out, &inst.to_json())?;
    Ok(format!(
        "gen-lc: {} instance u={} v={} L={} R={} edges={} -> {}{}",
        if a.planted { "planted" } else { "random" },
        inst.u_count,
        inst.v_count,
        inst.left_labels,
        inst.right_labels,
        inst.edges.len(),
        a.out.display(),
        if a.planted {
            format!(", {}", a.labeling_out.display())
        } else {
            String::new()
        }
    ))
}

#[derive(Serialize)]
struct ValueJson {
    value: String,
    value_f64: f64,
    u_labels: Vec<usize>,
    v_labels: Vec<usize>,
}

fn lc_value(a: LcValue) -> Result<String> {
    let inst = load_instance(&a.instance)?;
    let rep = value_exact(&inst, env_cap(ENV_VALUE_CAP, DEFAULT_VALUE_CAP)?)?;
    let doc = ValueJson {
        value: weights::format(&rep.value),
        value_f64: weights::to_f64(&rep.value),
        u_labels: rep.labeling.u_labels.iter().map(|l| l + 1).collect(),
        v_labels: rep.labeling.v_labels.iter().map(|l| l + 1).collect(),
    };
    write_json(&a.out, &doc)?;
    Ok(format!("lc-value: value = {} -> {}", doc.value, a.out.display()))
}

fn extend_cmd(a: ExtendArgs) -> Result<String> {
    let inst = load_instance(&a.instance)?;
    let ext = extend(&inst, a.t)?;
    let out = a
        .out
        .unwrap_or_else(|| PathBuf::from(format!("instance_t{}.json", a.t)));
    write(&out, &ext.to_json())?;
    Ok(format!(
        "extend: t={} L={} R={} -> {}",
        ext.extension_bits,
        ext.left_labels,
        ext.right_labels,
        out.display()
    ))
}

fn accept(a: Accept) -> Result<String> {
    let inst = load_instance(&a.instance)?;
    let cfg = config(a.r, a.eta, a.seed)?;
    let t = inst.extension_bits;
    let correct = || -> Result<Proof> { Proof::correct(load_labeling(&a.labeling)?, a.alpha, t) };
    let proof = match a.proof.as_str() {
        "correct" => correct()?,
        "random" => Proof::random(a.proof_seed.unwrap_or(a.seed)),
        other => match other.strip_prefix("table:") {
            Some(file) => Proof::Table(ProofTable::from_json(&read(Path::new(file))?, &inst)?),
            None => return Err(Error::Input(format!("unknown proof {other:?}"))),
        },
    };
    let report = match a.mode {
        Mode::Mc => accept_prob_mc(&inst, &cfg, &proof, a.trials)?,
        Mode::ExactEnum => {
            accept_prob_exact_enum(&inst, &cfg, &proof, env_cap(ENV_ENUM_CAP, DEFAULT_ENUM_CAP)?)?.report(&cfg)
        }
        Mode::ExactProduct => {
            let Proof::Correct { labeling, alpha, .. } = &proof else {
                return Err(Error::Precondition(
                    "exact-product applies to the correct proof only".into(),
                ));
            };
            let p = accept_prob_exact_product(&inst, &cfg, labeling, *alpha)?;
            AcceptanceReport {
                estimate: p,
                stderr: 0.0,
                trials: 0,
                seed: cfg.seed,
                eta: cfg.eta,
                r: cfg.r,
                accepted: 0,
                mode: "exact-product".into(),
                exact: None,
            }
        }
    };
    write_json(&a.out, &report)?;
    Ok(format!(
        "accept: {} proof, {}: {:.6} ± {:.6} -> {}",
        a.proof,
        report.mode,
        report.estimate,
        report.stderr,
        a.out.display()
    ))
}

fn fglss_build(a: FglssBuild) -> Result<String> {
    let inst = load_instance(&a.instance)?;
    let cfg = config(a.r, a.eta, a.seed)?;
    let graph = FglssGraph::build_sampled(&inst, &cfg, a.n)?;
    write(&a.out, &graph.to_json())?;
    let mut files = a.out.display().to_string();
    if let GraphFormat::Dimacs = a.format {
        let path = a.out.with_extension("dimacs");
        write(&path, &graph.to_dimacs())?;
        files = format!("{}, {files}", path.display());
    }
    Ok(format!(
        "fglss-build: {} trials, {} vertices, {} edges, total weight {} -> {files}",
        a.n,
        graph.vertex_count(),
        graph.edge_count(),
        weights::format(&graph.total_weight())
    ))
}

fn mwis(a: Mwis) -> Result<String> {
    let graph = load_graph(&a.graph)?;
    let cap = env_cap(ENV_MWIS_MAX_VERTICES, DEFAULT_MWIS_MAX_VERTICES as f64)?;
    let set = mwis_exact(&graph, cap as usize)?;
    let doc = MwisJson::new(&graph, &set)?;
    write_json(&a.out, &doc)?;
    Ok(format!(
        "mwis: weight {} over {} vertices, (K+1)/w = {} -> {}",
        doc.weight,
        set.vertices.len(),
        doc.lower_bound,
        a.out.display()
    ))
}

#[derive(Serialize)]
struct GoodJson {
    r: u32,
    eta: f64,
    seed: u64,
    scope: LabelingScope,
    points: Vec<GoodFractionPoint>,
}

fn good_fraction(a: GoodFraction) -> Result<String> {
    let inst = load_instance(&a.instance)?;
    let cfg = config(a.r, a.eta, a.seed)?;
    let scope = match a.scope {
        Scope::All => LabelingScope::All,
        Scope::Satisfying => LabelingScope::Satisfying,
    };
    let points = good_fraction_curve(&inst, &cfg, &a.t, a.n, scope, env_cap(ENV_GOOD_CAP, DEFAULT_GOOD_CAP)?)?;
    let mut csv = String::from("t,alphas,queries,not_good,not_good_estimate,stderr,p_hit,max_labelings,union_bound\n");
    for p in &points {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            p.t,
            p.alphas,
            p.queries,
            p.not_good,
            p.not_good_estimate,
            p.stderr,
            p.p_hit,
            p.max_labelings,
            p.union_bound
        ));
    }
    write(&a.csv, &csv)?;
    let summary: Vec<String> = points
        .iter()
        .map(|p| format!("2^{}: {:.4}", p.t, p.not_good_estimate))
        .collect();
    write_json(
        &a.out,
        &GoodJson {
            r: cfg.r,
            eta: cfg.eta,
            seed: cfg.seed,
            scope,
            points,
        },
    )?;
    Ok(format!(
        "good-fraction: not-good {} -> {}, {}",
        summary.join(", "),
        a.out.display(),
        a.csv.display()
    ))
}

fn color(a: Color) -> Result<String> {
    let graph = load_graph(&a.graph)?;
    let planted = load_labeling(&a.labeling)?;
    let coloring = alpha_coloring(&graph, &planted)?;
    write(&a.out, &coloring.to_json())?;
    Ok(format!(
        "color: {} colored, {} removed, palette {} of {} -> {}",
        coloring.colors.len(),
        coloring.removed.len(),
        coloring.palette_size(),
        1u64 << graph.instance.extension_bits,
        a.out.display()
    ))
}

#[derive(Serialize)]
struct VerifyJson {
    ok: bool,
    violations: Vec<String>,
}

fn verify(a: VerifyColoring) -> Result<String> {
    let graph = load_graph(&a.graph)?;
    let coloring =
        Coloring::from_json(&read(&a.coloring)?).map_err(|e| Error::Input(format!("{}: {e}", a.coloring.display())))?;
    let violations: Vec<String> = verify_coloring(&graph, &coloring)
        .iter()
        .map(ToString::to_string)
        .collect();
    let n = violations.len();
    write_json(&a.out, &VerifyJson { ok: n == 0, violations })?;
    if n > 0 {
        return Err(Error::Input(format!(
            "{n} coloring violations, see {}",
            a.out.display()
        )));
    }
    Ok(format!("verify-coloring: no violations -> {}", a.out.display()))
}
