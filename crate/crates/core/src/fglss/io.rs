//! Graph files: a JSON sidecar carrying the query log, DIMACS-style text,
//! and MWIS results.

use serde::{Deserialize, Serialize};

use super::{FglssGraph, IndependentSet};
use crate::error::{Error, Result};
use crate::label_cover::LabelCoverInstance;
use crate::pcp::{Bundle, QueryBundleSet, VerifierConfig};
use crate::sign::Sign;
use crate::weights::{self, Weight};

#[derive(Serialize, Deserialize)]
struct QueryJson {
    /// 1-based edge ids.
    edges: Vec<usize>,
    weight: String,
    /// `bundles[j][i]` is slot `i` of bundle `j` as a `+`/`-` string.
    bundles: Vec<Vec<String>>,
    pre_noise: Vec<Vec<String>>,
    /// `0`/`1` strings, `1` where the bit was resampled.
    noise_mask: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    query: usize,
    codeword: usize,
    weight: String,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    r: u32,
    eta: f64,
    seed: u64,
    instance: serde_json::Value,
    total_weight: String,
    queries: Vec<QueryJson>,
    vertices: Vec<VertexJson>,
    edges: Vec<[usize; 2]>,
}

fn signs_to_string(s: &[Sign]) -> String {
    s.iter().map(|b| if b.is_minus() { '-' } else { '+' }).collect()
}

fn signs_from_str(s: &str) -> Result<Vec<Sign>> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(Error::Input(format!("graph: bad sign character {c:?}"))),
        })
        .collect()
}

fn bundle_strings(b: &Bundle) -> Vec<String> {
    b.slots.iter().map(|s| signs_to_string(s)).collect()
}

fn bundle_from(strings: &[String]) -> Result<Bundle> {
    Ok(Bundle {
        slots: strings.iter().map(|s| signs_from_str(s)).collect::<Result<_>>()?,
    })
}

impl FglssGraph {
    pub fn to_json(&self) -> String {
        let instance = serde_json::from_str(&self.instance.to_json()).expect("instance JSON");
        let doc = GraphJson {
            r: self.r,
            eta: self.eta,
            seed: self.seed,
            instance,
            total_weight: weights::format(&self.total_weight()),
            queries: self
                .queries
                .iter()
                .map(|lq| QueryJson {
                    edges: lq.query.edge_indices.iter().map(|e| e + 1).collect(),
                    weight: weights::format(&lq.weight),
                    bundles: lq.query.bundles.iter().map(bundle_strings).collect(),
                    pre_noise: lq.query.pre_noise.iter().map(bundle_strings).collect(),
                    noise_mask: lq
                        .query
                        .noise_mask
                        .iter()
                        .map(|b| {
                            b.iter()
                                .map(|s| s.iter().map(|&m| if m { '1' } else { '0' }).collect())
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexJson {
                    id: id + 1,
                    query: v.query + 1,
                    codeword: v.codeword,
                    weight: weights::format(&v.weight),
                })
                .collect(),
            edges: self.edges().map(|(a, b)| [a + 1, b + 1]).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serializes")
    }

    /// Rebuilds the graph from its query log and checks the stored vertices
    /// and edges against the recomputed ones.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text)?;
        let instance = LabelCoverInstance::from_json(&doc.instance.to_string())?;
        instance.ensure_valid()?;
        let cfg = VerifierConfig {
            r: doc.r,
            eta: doc.eta,
            seed: doc.seed,
        };
        let queries = doc
            .queries
            .iter()
            .enumerate()
            .map(|(n, q)| {
                let bad = |msg: String| Error::Input(format!("graph query {}: {msg}", n + 1));
                let edge_indices = q
                    .edges
                    .iter()
                    .map(|&e| {
                        e.checked_sub(1)
                            .filter(|&e| e < instance.edges.len())
                            .ok_or_else(|| bad(format!("edge id {e} out of range")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let bundles = q.bundles.iter().map(|b| bundle_from(b)).collect::<Result<Vec<_>>>()?;
                let pre_noise = q.pre_noise.iter().map(|b| bundle_from(b)).collect::<Result<Vec<_>>>()?;
                let noise_mask = q
                    .noise_mask
                    .iter()
                    .map(|b| b.iter().map(|s| s.chars().map(|c| c == '1').collect()).collect())
                    .collect();
                let k = edge_indices.len();
                for (j, b) in bundles.iter().chain(&pre_noise).enumerate() {
                    let lens: Vec<usize> = b.slots.iter().map(Vec::len).collect();
                    let want: Vec<usize> = (0..k)
                        .map(|i| {
                            if i == j % k {
                                instance.left_labels
                            } else {
                                instance.right_labels
                            }
                        })
                        .collect();
                    if lens != want {
                        return Err(bad(format!(
                            "bundle {} has slot lengths {lens:?}, expected {want:?}",
                            j % k + 1
                        )));
                    }
                }
                if bundles.len() != k || pre_noise.len() != k {
                    return Err(bad("bundle count differs from edge count".into()));
                }
                Ok((
                    QueryBundleSet {
                        edge_indices,
                        bundles,
                        pre_noise,
                        noise_mask,
                    },
                    weights::parse(&q.weight)?,
                ))
            })
            .collect::<Result<Vec<(QueryBundleSet, Weight)>>>()?;
        let graph = FglssGraph::from_queries(instance, &cfg, queries)?;

        let stored_vertices: Vec<(usize, usize, usize)> =
            doc.vertices.iter().map(|v| (v.id, v.query, v.codeword)).collect();
        let vertices: Vec<(usize, usize, usize)> = graph
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| (id + 1, v.query + 1, v.codeword))
            .collect();
        if stored_vertices != vertices {
            return Err(Error::Input(
                "graph: stored vertices disagree with the query log".into(),
            ));
        }
        let edges: Vec<[usize; 2]> = graph.edges().map(|(a, b)| [a + 1, b + 1]).collect();
        if edges != doc.edges {
            return Err(Error::Input("graph: stored edges disagree with the query log".into()));
        }
        Ok(graph)
    }

    /// `p edge n m`, one `n id num den` line per vertex, one `e a b` per edge.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.vertex_count(), self.edge_count());
        for (id, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("n {} {} {}\n", id + 1, v.weight.numer(), v.weight.denom()));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("e {} {}\n", a + 1, b + 1));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MwisJson {
    pub vertex_count: usize,
    /// 1-based ids.
    pub vertices: Vec<usize>,
    pub weight: String,
    pub total_weight: String,
    /// `(total weight) / weight`.
    pub lower_bound: String,
    pub lower_bound_f64: f64,
}

impl MwisJson {
    pub fn new(graph: &FglssGraph, set: &IndependentSet) -> Result<Self> {
        use num_traits::Zero;
        if set.weight.is_zero() {
            return Err(Error::Precondition("maximum independent set has weight 0".into()));
        }
        let total = graph.total_weight();
        let bound = &total / &set.weight;
        Ok(Self {
            vertex_count: graph.vertex_count(),
            vertices: set.vertices.iter().map(|v| v + 1).collect(),
            weight: weights::format(&set.weight),
            total_weight: weights::format(&total),
            lower_bound: weights::format(&bound),
            lower_bound_f64: weights::to_f64(&bound),
        })
    }

    pub fn independent_set(&self) -> Result<IndependentSet> {
        Ok(IndependentSet {
            vertices: self
                .vertices
                .iter()
                .map(|&v| {
                    v.checked_sub(1)
                        .ok_or_else(|| Error::Input("mwis: vertex ids are 1-based".into()))
                })
                .collect::<Result<_>>()?,
            weight: weights::parse(&self.weight)?,
        })
    }
}
