use std::path::{Path, PathBuf};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{load_graph, load_instance, read, write_json};
use crate::error::{Error, Result};
use crate::fglss::{verify_coloring, Coloring, GoodFractionPoint, MwisJson};
use crate::pcp::AcceptanceReport;
use crate::weights::{self, Weight};

#[derive(clap::Args, Debug)]
pub(super) struct ReportArgs {
    #[arg(long)]
    r: u32,
    /// Extension bits the graph and coloring were built with.
    #[arg(long, conflicts_with = "auto_t", required_unless_present = "auto_t")]
    t: Option<u32>,
    /// Smallest t with 2^t ≥ K³.
    #[arg(long)]
    auto_t: bool,
    #[arg(long, default_value = "instance.json")]
    instance: PathBuf,
    #[arg(long, default_value = "accept.json")]
    accept: PathBuf,
    #[arg(long, default_value = "graph.json")]
    graph: PathBuf,
    #[arg(long, default_value = "mwis.json")]
    mwis: PathBuf,
    #[arg(long, default_value = "coloring.json")]
    coloring: PathBuf,
    #[arg(long, default_value = "good.json")]
    good: PathBuf,
    #[arg(long, default_value = "report.json")]
    out: PathBuf,
}

#[derive(Deserialize)]
struct GoodFile {
    scope: String,
    points: Vec<GoodFractionPoint>,
}

#[derive(Serialize)]
struct NotGood {
    t: u32,
    alphas: u64,
    queries: u64,
    estimate: f64,
    stderr: f64,
    p_hit: f64,
    union_bound: f64,
}

fn require(path: &Path) -> Result<()> {
    if path.is_file() {
        Ok(())
    } else {
        Err(Error::Input(format!("missing artifact: {}", path.display())))
    }
}

fn mismatch(what: &str, detail: String) -> Error {
    Error::Input(format!("artifacts disagree on {what}: {detail}"))
}

pub(super) fn report(a: ReportArgs) -> Result<String> {
    for p in [&a.instance, &a.accept, &a.graph, &a.mwis, &a.coloring, &a.good] {
        require(p)?;
    }
    if !(1..=crate::predicate::MAX_GENERATORS).contains(&a.r) {
        return Err(Error::Input(format!(
            "r must lie in 1..={}",
            crate::predicate::MAX_GENERATORS
        )));
    }
    let k = (1u64 << a.r) - 1;
    let (t, t_source, c) = match a.t {
        Some(t) => (
            t,
            "given".to_string(),
            json!({ "implied": format!("{}/{}", 1u64 << t, k * k * k), "default": false }),
        ),
        None => {
            let t = (0..).find(|&t| 1u64 << t >= k * k * k).unwrap();
            (
                t,
                "auto: smallest t with 2^t >= K^3".to_string(),
                json!({ "value": 1, "default": true }),
            )
        }
    };

    let inst = load_instance(&a.instance)?;
    let accept: AcceptanceReport =
        serde_json::from_str(&read(&a.accept)?).map_err(|e| Error::Input(format!("{}: {e}", a.accept.display())))?;
    let graph = load_graph(&a.graph)?;
    let mwis: MwisJson =
        serde_json::from_str(&read(&a.mwis)?).map_err(|e| Error::Input(format!("{}: {e}", a.mwis.display())))?;
    let coloring =
        Coloring::from_json(&read(&a.coloring)?).map_err(|e| Error::Input(format!("{}: {e}", a.coloring.display())))?;
    let good: GoodFile =
        serde_json::from_str(&read(&a.good)?).map_err(|e| Error::Input(format!("{}: {e}", a.good.display())))?;

    if graph.r != a.r || accept.r != a.r {
        return Err(mismatch(
            "r",
            format!("--r {}, graph {}, accept {}", a.r, graph.r, accept.r),
        ));
    }
    if graph.instance.extension_bits != t {
        return Err(mismatch(
            "t",
            format!(
                "report uses t = {t}, graph was built with t = {}",
                graph.instance.extension_bits
            ),
        ));
    }

    // recompute every graph-derived number from the graph itself
    let set = mwis.independent_set()?;
    if set.vertices.iter().any(|&v| v >= graph.vertex_count()) || !graph.is_independent(&set.vertices) {
        return Err(mismatch(
            "mwis",
            "stored set is not an independent set of the graph".into(),
        ));
    }
    let set_weight = weights::sum(set.vertices.iter().map(|&v| &graph.vertices[v].weight));
    if set_weight != set.weight || set.weight.is_zero() {
        return Err(mismatch(
            "mwis",
            format!(
                "stored weight {} but vertices sum to {}",
                mwis.weight,
                weights::format(&set_weight)
            ),
        ));
    }
    let total = graph.total_weight();
    let bound = &total / &set.weight;
    let violations = verify_coloring(&graph, &coloring);
    let palette = coloring.palette_size();
    let colors = 1u64 << t;
    let eta = accept.eta;

    let not_good: Vec<NotGood> = good
        .points
        .iter()
        .map(|p| NotGood {
            t: p.t,
            alphas: p.alphas,
            queries: p.queries,
            estimate: p.not_good_estimate,
            stderr: p.stderr,
            p_hit: p.p_hit,
            union_bound: p.union_bound,
        })
        .collect();

    let doc = json!({
        "r": a.r,
        "K": k,
        "t": t,
        "t_source": t_source,
        "C": c,
        "instance": {
            "u_count": inst.u_count,
            "v_count": inst.v_count,
            "L": inst.left_labels,
            "R": inst.right_labels,
            "d": inst.d,
            "t": inst.extension_bits,
            "edges": inst.edges.len(),
        },
        "acceptance": accept,
        "completeness_bound": { "expr": "1 - K^2 eta", "value": 1.0 - (k * k) as f64 * eta },
        "graph": {
            "trials": graph.queries.len(),
            "vertices": graph.vertex_count(),
            "edges": graph.edge_count(),
            "eta": graph.eta,
            "seed": graph.seed,
            "total_weight": weights::format(&total),
            "total_weight_is_K_plus_1": total == Weight::from_integer((k + 1).into()),
        },
        "mwis": {
            "weight": weights::format(&set.weight),
            "weight_f64": weights::to_f64(&set.weight),
            "chromatic_lower_bound": weights::format(&bound),
            "chromatic_lower_bound_f64": weights::to_f64(&bound),
        },
        "coloring": {
            "completeness_colors": colors,
            "palette_size": palette,
            "palette_within_completeness_colors": palette as u64 <= colors,
            "colored": coloring.colors.len(),
            "removed": coloring.removed.len(),
            "violations": violations.len(),
        },
        "not_good": { "scope": good.scope, "points": not_good },
        "target_gap": "K^3 versus 2^K",
        "target_gap_at_r": { "K^3": k * k * k, "2^K": 1u64 << k },
        "symbolic": {
            "status": "symbolic; constants are not instantiated",
            "delta": "delta = poly(K/eta) * sigma^Omega(1)",
            "sigma": "soundness parameter of the Label Cover instance",
            "C": "2^t = C * K^3",
        },
    });
    write_json(&a.out, &doc)?;
    Ok(format!(
        "report: K={k} t={t}, palette {palette} of {colors}, (K+1)/w = {}, {} coloring violations -> {}",
        weights::format(&bound),
        violations.len(),
        a.out.display()
    ))
}
