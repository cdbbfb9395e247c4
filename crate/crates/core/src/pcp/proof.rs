//! Proof strategies.
//!
//! Every proof is folded: `f(−x) = −f(x)`. Random and table proofs get this
//! structurally by only ever looking at the canonical representative of
//! `{x, −x}` (first bit +1) and restoring the sign.

use std::collections::BTreeMap;

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use serde::{Deserialize, Serialize};

use super::query::{Bundle, QueryBundleSet, VertexTuple};
use crate::error::{input, Error, Result};
use crate::label_cover::{extended_label, LabelCoverInstance, Labeling};
use crate::sign::{self, Sign};

/// One physical proof bit: a function and a canonical input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QueryKey {
    pub tuple: VertexTuple,
    /// Packed canonical input (see [`crate::sign::pack`]); slots concatenated.
    pub input: Vec<u8>,
}

/// Canonical key for `bundle` and the sign relating the bundle to it.
pub fn canonical_key(tuple: &VertexTuple, bundle: &Bundle) -> (QueryKey, Sign) {
    let flip = bundle.flat().next().unwrap_or(Sign::Plus);
    let canon: Vec<Sign> = bundle.flat().map(|b| b * flip).collect();
    (
        QueryKey {
            tuple: tuple.clone(),
            input: sign::pack(&canon),
        },
        flip,
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ProofTable {
    pub t: u32,
    pub alpha: Option<usize>,
    pub entries: BTreeMap<QueryKey, Sign>,
}

impl ProofTable {
    /// Answer on a canonical key, if tabulated.
    pub fn get(&self, key: &QueryKey) -> Option<Sign> {
        self.entries.get(key).copied()
    }

    /// Answer on an arbitrary bundle, if tabulated.
    pub fn lookup(&self, tuple: &VertexTuple, bundle: &Bundle) -> Option<Sign> {
        let (key, flip) = canonical_key(tuple, bundle);
        self.get(&key).map(|a| a * flip)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proof {
    /// Products of long codes of `labeling` extended by `alpha` under `t` bits.
    Correct {
        labeling: Labeling,
        alpha: usize,
        t: u32,
    },
    /// Folded pseudorandom answers keyed by `seed`.
    Random {
        seed: u64,
    },
    Table(ProofTable),
}

impl Proof {
    pub fn correct(labeling: Labeling, alpha: usize, t: u32) -> Result<Proof> {
        if t > crate::label_cover::MAX_EXTENSION_BITS || alpha >= 1 << t {
            return input(format!("extension α = {alpha} out of range for t = {t}"));
        }
        Ok(Proof::Correct { labeling, alpha, t })
    }

    pub fn random(seed: u64) -> Proof {
        Proof::Random { seed }
    }

    /// Answer of the function on `tuple` at input `bundle`.
    pub fn answer(&self, tuple: &VertexTuple, bundle: &Bundle) -> Result<Sign> {
        match self {
            Proof::Correct { labeling, alpha, t } => {
                let mut acc = Sign::Plus;
                for (i, (&vertex, slot)) in tuple.vertices.iter().zip(&bundle.slots).enumerate() {
                    let labels = if i == tuple.u_pos {
                        &labeling.u_labels
                    } else {
                        &labeling.v_labels
                    };
                    let label = *labels.get(vertex).ok_or_else(|| {
                        Error::Shape(format!("labeling has no vertex {} at position {}", vertex + 1, i + 1))
                    })?;
                    let bit = slot.get(extended_label(label, *t, *alpha)).ok_or_else(|| {
                        Error::Shape(format!("label {} beyond slot of length {}", label + 1, slot.len()))
                    })?;
                    acc *= *bit;
                }
                Ok(acc)
            }
            Proof::Random { seed } => Ok(random_answer(*seed, tuple, bundle)),
            Proof::Table(table) => table.lookup(tuple, bundle).ok_or_else(|| {
                Error::Shape(format!(
                    "table proof undefined on a query to tuple {:?}",
                    tuple.vertices
                ))
            }),
        }
    }

    pub fn extension_bits(&self) -> Option<u32> {
        match self {
            Proof::Correct { t, .. } => Some(*t),
            Proof::Table(table) => Some(table.t),
            Proof::Random { .. } => None,
        }
    }

    /// `f(q) = (f_{v_1}(q_1), …, f_{v_K}(q_K))`.
    pub fn eval(&self, inst: &LabelCoverInstance, qs: &QueryBundleSet) -> Result<Vec<Sign>> {
        if let Some(t) = self.extension_bits() {
            if t != inst.extension_bits {
                return Err(Error::Shape(format!(
                    "proof expects {t} extension bits, instance has {}",
                    inst.extension_bits
                )));
            }
        }
        qs.tuples(inst)
            .iter()
            .zip(&qs.bundles)
            .map(|(tuple, bundle)| self.answer(tuple, bundle))
            .collect()
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn random_answer(seed: u64, tuple: &VertexTuple, bundle: &Bundle) -> Sign {
    let flip = bundle.flat().next().unwrap_or(Sign::Plus);
    let mut h = splitmix(seed ^ 0x5851_f42d_4c95_7f2d);
    let mut absorb = |w: u64| h = splitmix(h ^ w);
    absorb(tuple.u_pos as u64);
    for &v in &tuple.vertices {
        absorb(v as u64);
    }
    for slot in &bundle.slots {
        absorb(slot.len() as u64);
        for chunk in slot.chunks(64) {
            let word = chunk
                .iter()
                .enumerate()
                .fold(0u64, |w, (b, &s)| w | (((s * flip).is_minus() as u64) << b));
            absorb(word);
        }
    }
    Sign::from_minus(h & 1 == 1) * flip
}

/// Tabulates `proof` on every input of every listed function. Slot lengths
/// come from `inst`; the table stores one entry per antipodal pair.
pub fn tabulate(inst: &LabelCoverInstance, proof: &Proof, tuples: &[VertexTuple], cap: f64) -> Result<ProofTable> {
    let mut table = ProofTable {
        t: inst.extension_bits,
        alpha: match proof {
            Proof::Correct { alpha, .. } => Some(*alpha),
            _ => None,
        },
        entries: BTreeMap::new(),
    };
    for tuple in tuples {
        let lens: Vec<usize> = (0..tuple.vertices.len())
            .map(|i| {
                if i == tuple.u_pos {
                    inst.left_labels
                } else {
                    inst.right_labels
                }
            })
            .collect();
        let bits: usize = lens.iter().sum();
        let cost = 2f64.powi(bits as i32 - 1) * tuples.len() as f64;
        if bits == 0 || bits > 40 || cost > cap {
            return Err(Error::CapExceeded {
                what: "proof tabulation",
                cost,
                cap,
            });
        }
        for code in 0u64..1 << (bits - 1) {
            // canonical inputs have their first bit +1
            let mut flat = (0..bits).map(|b| Sign::from_minus(b > 0 && code >> (b - 1) & 1 == 1));
            let bundle = Bundle {
                slots: lens.iter().map(|&n| flat.by_ref().take(n).collect()).collect(),
            };
            let (key, _) = canonical_key(tuple, &bundle);
            table.entries.insert(key, proof.answer(tuple, &bundle)?);
        }
    }
    Ok(table)
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
struct EntryJson {
    tuple: Vec<usize>,
    u_pos: usize,
    input: String,
    answer: Sign,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    t: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<usize>,
    entries: Vec<EntryJson>,
}

impl ProofTable {
    pub fn to_json(&self) -> String {
        let doc = TableJson {
            t: self.t,
            alpha: self.alpha,
            entries: self
                .entries
                .iter()
                .map(|(k, &a)| EntryJson {
                    tuple: k.tuple.vertices.iter().map(|v| v + 1).collect(),
                    u_pos: k.tuple.u_pos + 1,
                    input: BASE64.encode(&k.input),
                    answer: a,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }

    /// Parses a table. Inputs must be canonical (first bit +1) and are
    /// checked against the slot lengths of `inst`.
    pub fn from_json(text: &str, inst: &LabelCoverInstance) -> Result<Self> {
        let doc: TableJson = serde_json::from_str(text)?;
        let mut entries = BTreeMap::new();
        for (n, e) in doc.entries.into_iter().enumerate() {
            let bad = |msg: &str| Error::Input(format!("table entry {}: {msg}", n + 1));
            let k = e.tuple.len();
            if e.u_pos == 0 || e.u_pos > k || e.tuple.contains(&0) {
                return Err(bad("tuple ids and u_pos are 1-based"));
            }
            let tuple = VertexTuple {
                u_pos: e.u_pos - 1,
                vertices: e.tuple.iter().map(|v| v - 1).collect(),
            };
            let bits = inst.left_labels + (k - 1) * inst.right_labels;
            let input = BASE64
                .decode(e.input.as_bytes())
                .map_err(|_| bad("input is not base64"))?;
            match sign::unpack(&input, bits) {
                Some(signs) if signs.first() != Some(&Sign::Minus) => {}
                Some(_) => return Err(bad("input is not canonical (first bit must be +1)")),
                None => return Err(bad(&format!("input does not pack {bits} bits"))),
            }
            entries.insert(QueryKey { tuple, input }, e.answer);
        }
        Ok(Self {
            t: doc.t,
            alpha: doc.alpha,
            entries,
        })
    }
}
