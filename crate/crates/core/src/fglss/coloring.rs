use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::FglssGraph;
use crate::error::{Error, Result};
use crate::label_cover::{extend_labeling, Labeling, Violation};
use crate::pcp::Proof;

/// Vertex colors (an extension `α` each) plus vertices left uncolored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring {
    pub colors: BTreeMap<usize, usize>,
    pub removed: BTreeSet<usize>,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    colors: BTreeMap<String, usize>,
    removed: Vec<usize>,
    palette_size: usize,
}

impl Coloring {
    /// Number of distinct colors in use.
    pub fn palette_size(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    /// Color classes, keyed by color.
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&v, &c) in &self.colors {
            out.entry(c).or_default().push(v);
        }
        out
    }

    pub fn to_json(&self) -> String {
        // keys sorted numerically, not as strings
        let mut text = String::from("{\n  \"colors\": {");
        for (n, (v, c)) in self.colors.iter().enumerate() {
            text.push_str(if n == 0 { "\n" } else { ",\n" });
            text.push_str(&format!("    \"{}\": {}", v + 1, c));
        }
        text.push_str(if self.colors.is_empty() { "},\n" } else { "\n  },\n" });
        let removed: Vec<String> = self.removed.iter().map(|v| (v + 1).to_string()).collect();
        text.push_str(&format!("  \"removed\": [{}],\n", removed.join(", ")));
        text.push_str(&format!("  \"palette_size\": {}\n}}", self.palette_size()));
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ColoringJson = serde_json::from_str(text)?;
        let one_based = |v: usize| {
            v.checked_sub(1)
                .ok_or_else(|| Error::Input("coloring: vertex ids are 1-based, found 0".into()))
        };
        let colors = doc
            .colors
            .iter()
            .map(|(k, &c)| {
                let v: usize = k
                    .parse()
                    .map_err(|_| Error::Input(format!("coloring: vertex id {k:?} is not an integer")))?;
                Ok((one_based(v)?, c))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        let removed = doc
            .removed
            .iter()
            .map(|&v| one_based(v))
            .collect::<Result<BTreeSet<_>>>()?;
        let out = Self { colors, removed };
        if out.palette_size() != doc.palette_size {
            return Err(Error::Input(format!(
                "coloring: palette_size {} but {} colors in use",
                doc.palette_size,
                out.palette_size()
            )));
        }
        Ok(out)
    }
}

/// Colors vertex `(q, z)` with the smallest `α` whose planted proof answers
/// `z` on `q`; vertices no `α` reaches are removed.
///
/// `planted` is a labeling of the unextended instance.
pub fn alpha_coloring(graph: &FglssGraph, planted: &Labeling) -> Result<Coloring> {
    let inst = &graph.instance;
    let t = inst.extension_bits;
    if !inst.satisfies_all(&extend_labeling(planted, t, 0)?)? {
        return Err(Error::Precondition(
            "planted labeling does not satisfy every edge".into(),
        ));
    }
    let pred = graph.predicate();
    let proofs = (0..1usize << t)
        .map(|alpha| Proof::correct(planted.clone(), alpha, t))
        .collect::<Result<Vec<_>>>()?;
    let mut coloring = Coloring::default();
    for (q, lq) in graph.queries.iter().enumerate() {
        for (alpha, proof) in proofs.iter().enumerate() {
            let answers = proof.eval(inst, &lq.query)?;
            if let Some(c) = pred.codeword_index(&answers) {
                coloring.colors.entry(graph.vertex_id(q, c)).or_insert(alpha);
            }
        }
        for c in 0..pred.codeword_count() {
            let v = graph.vertex_id(q, c);
            if !coloring.colors.contains_key(&v) {
                coloring.removed.insert(v);
            }
        }
    }
    Ok(coloring)
}

/// Monochromatic conflict edges, colored removed vertices, and vertices that
/// are neither colored nor removed.
pub fn verify_coloring(graph: &FglssGraph, coloring: &Coloring) -> Vec<Violation> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    for &v in coloring.colors.keys().chain(&coloring.removed) {
        if v >= n {
            out.push(Violation {
                location: format!("vertex {}", v + 1),
                detail: format!("graph has {n} vertices"),
            });
        }
    }
    for &v in &coloring.removed {
        if let Some(c) = coloring.colors.get(&v) {
            out.push(Violation {
                location: format!("vertex {}", v + 1),
                detail: format!("removed but colored {c}"),
            });
        }
    }
    for v in 0..n {
        if !coloring.colors.contains_key(&v) && !coloring.removed.contains(&v) {
            out.push(Violation {
                location: format!("vertex {}", v + 1),
                detail: "neither colored nor removed".into(),
            });
        }
    }
    for (a, b) in graph.edges() {
        if let (Some(ca), Some(cb)) = (coloring.colors.get(&a), coloring.colors.get(&b)) {
            if ca == cb {
                out.push(Violation {
                    location: format!("edge {}-{}", a + 1, b + 1),
                    detail: format!("both endpoints colored {ca}"),
                });
            }
        }
    }
    out
}
