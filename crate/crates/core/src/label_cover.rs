//! Label Cover instances with `d`-to-1 projection constraints.
//!
//! Labels are 0-based in memory and 1-based in the JSON formats. An instance
//! carries the number of extension bits `t` applied to it; extended labels use
//! the block encoding `l · 2^t + α`, so a long-code string over the extended
//! labels is `L` contiguous blocks of `2^t` bits.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::weights::{self, Scaled, Weight};

/// Default budget for [`value_exact`], in labelings enumerated.
pub const DEFAULT_VALUE_CAP: f64 = 1e7;

/// Largest supported number of extension bits.
pub const MAX_EXTENSION_BITS: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Weight,
    /// `projection[r]` is the left label that right label `r` maps to.
    pub projection: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelCoverInstance {
    pub u_count: usize,
    pub v_count: usize,
    pub left_labels: usize,
    pub right_labels: usize,
    pub d: usize,
    /// Extension bits already appended to every label.
    pub extension_bits: u32,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    pub u_labels: Vec<usize>,
    pub v_labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.detail)
    }
}

/// Shape parameters shared by the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub u_count: usize,
    pub v_count: usize,
    pub left_labels: usize,
    pub d: usize,
    pub edge_count: usize,
}

impl GenParams {
    fn check(&self) -> Result<()> {
        let GenParams {
            u_count,
            v_count,
            left_labels,
            d,
            edge_count,
        } = *self;
        if u_count == 0 || v_count == 0 || left_labels == 0 || d == 0 {
            return input("u_count, v_count, L and d must be positive");
        }
        if edge_count == 0 {
            return input("edge_count must be at least 1");
        }
        if edge_count < u_count.max(v_count) {
            return input(format!(
                "{edge_count} edges cannot touch all {u_count} + {v_count} vertices"
            ));
        }
        Ok(())
    }
}

impl LabelCoverInstance {
    /// Left label count before any extension.
    pub fn base_left_labels(&self) -> usize {
        self.left_labels >> self.extension_bits
    }

    pub fn base_right_labels(&self) -> usize {
        self.right_labels >> self.extension_bits
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |location: String, detail: String| out.push(Violation { location, detail });

        if self.right_labels != self.d * self.left_labels {
            push(
                "R".into(),
                format!("R = {} but d·L = {}", self.right_labels, self.d * self.left_labels),
            );
        }
        if self.extension_bits > MAX_EXTENSION_BITS
            || !self
                .left_labels
                .is_multiple_of(1 << self.extension_bits.min(MAX_EXTENSION_BITS))
        {
            push(
                "t".into(),
                format!("{} extension bits do not divide L", self.extension_bits),
            );
        }
        if self.edges.is_empty() {
            push("edges".into(), "no edges".into());
        }
        for (i, e) in self.edges.iter().enumerate() {
            let loc = format!("edge {}", i + 1);
            if e.u >= self.u_count {
                push(loc.clone(), format!("u = {} out of range", e.u + 1));
            }
            if e.v >= self.v_count {
                push(loc.clone(), format!("v = {} out of range", e.v + 1));
            }
            if e.weight < Weight::zero() {
                push(loc.clone(), format!("negative weight {}", e.weight));
            }
            if e.projection.len() != self.right_labels {
                push(
                    loc.clone(),
                    format!(
                        "projection has length {}, expected R = {}",
                        e.projection.len(),
                        self.right_labels
                    ),
                );
                continue;
            }
            let mut fibre = vec![0usize; self.left_labels];
            for (r, &l) in e.projection.iter().enumerate() {
                if l >= self.left_labels {
                    push(loc.clone(), format!("π({}) = {} out of range", r + 1, l + 1));
                } else {
                    fibre[l] += 1;
                }
            }
            for (l, &n) in fibre.iter().enumerate() {
                if n != self.d {
                    push(
                        loc.clone(),
                        format!("left label {} has {n} preimages, expected d = {}", l + 1, self.d),
                    );
                }
            }
        }
        let total = weights::sum(self.edges.iter().map(|e| &e.weight));
        if total != Weight::one() {
            push("weights".into(), format!("edge weights sum to {total}, expected 1"));
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            input(format!("invalid instance: {}", msgs.join("; ")))
        }
    }

    pub fn check_labeling(&self, labeling: &Labeling) -> Result<()> {
        if labeling.u_labels.len() != self.u_count || labeling.v_labels.len() != self.v_count {
            return input(format!(
                "labeling covers {}+{} vertices, instance has {}+{}",
                labeling.u_labels.len(),
                labeling.v_labels.len(),
                self.u_count,
                self.v_count
            ));
        }
        if let Some(l) = labeling.u_labels.iter().find(|&&l| l >= self.left_labels) {
            return input(format!("left label {} out of range 1..={}", l + 1, self.left_labels));
        }
        if let Some(r) = labeling.v_labels.iter().find(|&&r| r >= self.right_labels) {
            return input(format!("right label {} out of range 1..={}", r + 1, self.right_labels));
        }
        Ok(())
    }

    pub fn edge_satisfied(&self, edge: &Edge, labeling: &Labeling) -> bool {
        edge.projection[labeling.v_labels[edge.v]] == labeling.u_labels[edge.u]
    }

    pub fn satisfied_fraction(&self, labeling: &Labeling) -> Result<Weight> {
        self.check_labeling(labeling)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| self.edge_satisfied(e, labeling))
            .fold(Weight::zero(), |acc, e| acc + &e.weight))
    }

    pub fn satisfies_all(&self, labeling: &Labeling) -> Result<bool> {
        self.check_labeling(labeling)?;
        Ok(self.edges.iter().all(|e| self.edge_satisfied(e, labeling)))
    }
}

fn random_projection<R: Rng>(left_labels: usize, d: usize, rng: &mut R) -> Vec<usize> {
    let mut order: Vec<usize> = (0..left_labels * d).collect();
    order.shuffle(rng);
    let mut proj = vec![0; left_labels * d];
    for (k, &r) in order.iter().enumerate() {
        proj[r] = k / d;
    }
    proj
}

fn random_endpoints<R: Rng>(p: &GenParams, rng: &mut R) -> Vec<(usize, usize)> {
    let mut us: Vec<usize> = (0..p.u_count).collect();
    let mut vs: Vec<usize> = (0..p.v_count).collect();
    us.shuffle(rng);
    vs.shuffle(rng);
    let cover = p.u_count.max(p.v_count);
    let mut ends: Vec<(usize, usize)> = (0..cover).map(|i| (us[i % p.u_count], vs[i % p.v_count])).collect();
    for _ in cover..p.edge_count {
        ends.push((rng.random_range(0..p.u_count), rng.random_range(0..p.v_count)));
    }
    ends
}

fn assemble(p: &GenParams, edges: Vec<Edge>) -> LabelCoverInstance {
    LabelCoverInstance {
        u_count: p.u_count,
        v_count: p.v_count,
        left_labels: p.left_labels,
        right_labels: p.left_labels * p.d,
        d: p.d,
        extension_bits: 0,
        edges,
    }
}

/// A value-1 instance together with the labeling planted in it.
pub fn gen_planted(params: GenParams, seed: u64) -> Result<(LabelCoverInstance, Labeling)> {
    params.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let right = params.left_labels * params.d;
    let labeling = Labeling {
        u_labels: (0..params.u_count)
            .map(|_| rng.random_range(0..params.left_labels))
            .collect(),
        v_labels: (0..params.v_count).map(|_| rng.random_range(0..right)).collect(),
    };
    let weight = BigRational::new(1.into(), params.edge_count.into());
    let edges = random_endpoints(&params, &mut rng)
        .into_iter()
        .map(|(u, v)| {
            let mut projection = random_projection(params.left_labels, params.d, &mut rng);
            let (ru, rv) = (labeling.u_labels[u], labeling.v_labels[v]);
            if projection[rv] != ru {
                // swap images with some preimage of the wanted left label
                let donors: Vec<usize> = (0..right).filter(|&r| projection[r] == ru).collect();
                let donor = donors[rng.random_range(0..donors.len())];
                projection.swap(rv, donor);
            }
            Edge {
                u,
                v,
                weight: weight.clone(),
                projection,
            }
        })
        .collect();
    Ok((assemble(&params, edges), labeling))
}

/// An instance with independent uniformly random `d`-to-1 projections.
pub fn gen_random(params: GenParams, seed: u64) -> Result<LabelCoverInstance> {
    params.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weight = BigRational::new(1.into(), params.edge_count.into());
    let edges = random_endpoints(&params, &mut rng)
        .into_iter()
        .map(|(u, v)| Edge {
            u,
            v,
            weight: weight.clone(),
            projection: random_projection(params.left_labels, params.d, &mut rng),
        })
        .collect();
    Ok(assemble(&params, edges))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueReport {
    pub value: Weight,
    /// Lexicographically first labeling attaining `value`.
    pub labeling: Labeling,
}

/// Exact Label Cover value, enumerating all left labelings and choosing each
/// right vertex's best label independently.
pub fn value_exact(inst: &LabelCoverInstance, cap: f64) -> Result<ValueReport> {
    inst.ensure_valid()?;
    let cost =
        (inst.left_labels as f64).powi(inst.u_count as i32) * (inst.right_labels as f64).powi(inst.v_count as i32);
    if cost > cap {
        return Err(Error::CapExceeded {
            what: "label cover value enumeration",
            cost,
            cap,
        });
    }
    let scaled = Scaled::new(&inst.edges.iter().map(|e| e.weight.clone()).collect::<Vec<_>>())?;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); inst.v_count];
    for (i, e) in inst.edges.iter().enumerate() {
        incident[e.v].push(i);
    }

    let left = inst.left_labels;
    let total = left.pow(inst.u_count as u32);
    let decode = |mut code: usize| -> Vec<usize> {
        // first vertex is the most significant digit
        let mut labels = vec![0; inst.u_count];
        for slot in labels.iter_mut().rev() {
            *slot = code % left;
            code /= left;
        }
        labels
    };
    let best_for = |u_labels: &[usize]| -> (u128, Vec<usize>) {
        let mut value = 0u128;
        let v_labels = incident
            .iter()
            .map(|edges| {
                let (best_r, best) = (0..inst.right_labels)
                    .map(|r| {
                        let w: u128 = edges
                            .iter()
                            .filter(|&&i| inst.edges[i].projection[r] == u_labels[inst.edges[i].u])
                            .map(|&i| scaled.numerators[i])
                            .sum();
                        (r, w)
                    })
                    .fold((0, 0u128), |acc, (r, w)| if w > acc.1 { (r, w) } else { acc });
                value += best;
                best_r
            })
            .collect();
        (value, v_labels)
    };

    const CHUNK: usize = 4096;
    let (value, code) = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            (c * CHUNK..((c + 1) * CHUNK).min(total))
                .map(|code| (best_for(&decode(code)).0, code))
                .fold((0u128, usize::MAX), |acc, (v, code)| {
                    if v > acc.0 || acc.1 == usize::MAX {
                        (v, code)
                    } else {
                        acc
                    }
                })
        })
        .reduce(
            || (0u128, usize::MAX),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        );
    let u_labels = decode(code);
    let (_, v_labels) = best_for(&u_labels);
    Ok(ValueReport {
        value: scaled.to_weight(value),
        labeling: Labeling { u_labels, v_labels },
    })
}

/// Index of base label `label` extended by `alpha` under `t` extension bits.
#[inline]
pub fn extended_label(label: usize, t: u32, alpha: usize) -> usize {
    (label << t) | alpha
}

/// Appends `t` bits to every label: `π'(r∘α) = π(r)∘α`.
pub fn extend(inst: &LabelCoverInstance, t: u32) -> Result<LabelCoverInstance> {
    if inst.extension_bits + t > MAX_EXTENSION_BITS {
        return input(format!("at most {MAX_EXTENSION_BITS} extension bits are supported"));
    }
    let width = 1usize << t;
    let edges = inst
        .edges
        .iter()
        .map(|e| Edge {
            u: e.u,
            v: e.v,
            weight: e.weight.clone(),
            projection: (0..inst.right_labels * width)
                .map(|ext| extended_label(e.projection[ext >> t], t, ext & (width - 1)))
                .collect(),
        })
        .collect();
    Ok(LabelCoverInstance {
        left_labels: inst.left_labels * width,
        right_labels: inst.right_labels * width,
        extension_bits: inst.extension_bits + t,
        edges,
        ..inst.clone()
    })
}

pub fn extend_labeling(labeling: &Labeling, t: u32, alpha: usize) -> Result<Labeling> {
    if t > MAX_EXTENSION_BITS || alpha >= 1 << t {
        return input(format!("extension α = {alpha} out of range for t = {t}"));
    }
    let ext = |l: &usize| extended_label(*l, t, alpha);
    Ok(Labeling {
        u_labels: labeling.u_labels.iter().map(ext).collect(),
        v_labels: labeling.v_labels.iter().map(ext).collect(),
    })
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    u: usize,
    v: usize,
    weight: String,
    projection: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct InstanceJson {
    L: usize,
    R: usize,
    d: usize,
    u_count: usize,
    v_count: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    t: u32,
    edges: Vec<EdgeJson>,
}

fn is_zero(t: &u32) -> bool {
    *t == 0
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn zero_based(xs: &[usize], what: &str) -> Result<Vec<usize>> {
    xs.iter()
        .map(|&x| {
            x.checked_sub(1)
                .ok_or_else(|| Error::Input(format!("{what}: indices are 1-based, found 0")))
        })
        .collect()
}

impl LabelCoverInstance {
    pub fn to_json(&self) -> String {
        let doc = InstanceJson {
            L: self.left_labels,
            R: self.right_labels,
            d: self.d,
            u_count: self.u_count,
            v_count: self.v_count,
            t: self.extension_bits,
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    u: e.u + 1,
                    v: e.v + 1,
                    weight: weights::format(&e.weight),
                    projection: one_based(&e.projection),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("instance serializes")
    }

    /// Parses the JSON instance format. Structural problems are errors;
    /// invariant violations are left for [`validate`](Self::validate).
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InstanceJson = serde_json::from_str(text)?;
        let edges = doc
            .edges
            .iter()
            .map(|e| {
                Ok(Edge {
                    u: zero_based(&[e.u], "edge u")?[0],
                    v: zero_based(&[e.v], "edge v")?[0],
                    weight: weights::parse(&e.weight)?,
                    projection: zero_based(&e.projection, "projection")?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            u_count: doc.u_count,
            v_count: doc.v_count,
            left_labels: doc.L,
            right_labels: doc.R,
            d: doc.d,
            extension_bits: doc.t,
            edges,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct LabelingJson {
    u_labels: Vec<usize>,
    v_labels: Vec<usize>,
}

impl Labeling {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&LabelingJson {
            u_labels: one_based(&self.u_labels),
            v_labels: one_based(&self.v_labels),
        })
        .expect("labeling serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LabelingJson = serde_json::from_str(text)?;
        Ok(Self {
            u_labels: zero_based(&doc.u_labels, "u_labels")?,
            v_labels: zero_based(&doc.v_labels, "v_labels")?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TINY: GenParams = GenParams {
        u_count: 2,
        v_count: 3,
        left_labels: 2,
        d: 2,
        edge_count: 4,
    };

    // Independent oracle: full enumeration of U and V labelings.
    fn brute_value(inst: &LabelCoverInstance) -> Weight {
        let mut best = Weight::zero();
        let nu = inst.left_labels.pow(inst.u_count as u32);
        let nv = inst.right_labels.pow(inst.v_count as u32);
        for cu in 0..nu {
            for cv in 0..nv {
                let digits = |mut c: usize, base: usize, n: usize| {
                    (0..n)
                        .map(|_| {
                            let x = c % base;
                            c /= base;
                            x
                        })
                        .collect::<Vec<_>>()
                };
                let lab = Labeling {
                    u_labels: digits(cu, inst.left_labels, inst.u_count),
                    v_labels: digits(cv, inst.right_labels, inst.v_count),
                };
                let v = inst.satisfied_fraction(&lab).unwrap();
                if v > best {
                    best = v;
                }
            }
        }
        best
    }

    #[test]
    fn tiny_planted_shape() {
        let (inst, lab) = gen_planted(TINY, 7).unwrap();
        assert_eq!(inst.right_labels, 4);
        assert_eq!(inst.edges.len(), 4);
        assert!(inst
            .edges
            .iter()
            .all(|e| e.weight == BigRational::new(1.into(), 4.into())));
        assert!(inst.validate().is_empty());
        assert_eq!(inst.satisfied_fraction(&lab).unwrap(), Weight::one());
        for e in &inst.edges {
            for l in 0..2 {
                assert_eq!(e.projection.iter().filter(|&&x| x == l).count(), 2);
            }
        }
        assert_eq!(value_exact(&inst, DEFAULT_VALUE_CAP).unwrap().value, Weight::one());
    }

    #[test]
    fn every_vertex_touched() {
        for seed in 0..20 {
            let (inst, _) = gen_planted(TINY, seed).unwrap();
            for u in 0..2 {
                assert!(inst.edges.iter().any(|e| e.u == u));
            }
            for v in 0..3 {
                assert!(inst.edges.iter().any(|e| e.v == v));
            }
        }
    }

    #[test]
    fn flipping_a_left_label_loses_its_edges() {
        let (inst, lab) = gen_planted(TINY, 7).unwrap();
        let mut bad = lab.clone();
        bad.u_labels[0] ^= 1;
        let lightest = inst
            .edges
            .iter()
            .filter(|e| e.u == 0)
            .map(|e| e.weight.clone())
            .min()
            .unwrap();
        assert!(inst.satisfied_fraction(&bad).unwrap() <= Weight::one() - lightest);
    }

    #[test]
    fn random_instances_are_deterministic_and_valid() {
        for seed in 0..10 {
            let a = gen_random(TINY, seed).unwrap();
            assert_eq!(a, gen_random(TINY, seed).unwrap());
            assert_eq!(a.to_json(), gen_random(TINY, seed).unwrap().to_json());
            assert!(a.validate().is_empty());
            let v = value_exact(&a, DEFAULT_VALUE_CAP).unwrap();
            assert!(v.value >= BigRational::new(1.into(), 2.into()) && v.value <= Weight::one());
            assert_eq!(v.value, brute_value(&a));
            assert_eq!(a.satisfied_fraction(&v.labeling).unwrap(), v.value);
        }
    }

    #[test]
    fn single_edge_has_value_one() {
        let p = GenParams {
            u_count: 1,
            v_count: 1,
            left_labels: 3,
            d: 2,
            edge_count: 1,
        };
        let inst = gen_random(p, 3).unwrap();
        assert_eq!(value_exact(&inst, DEFAULT_VALUE_CAP).unwrap().value, Weight::one());
    }

    #[test]
    fn generator_rejects_bad_params() {
        assert!(gen_planted(GenParams { edge_count: 0, ..TINY }, 1).is_err());
        assert!(gen_planted(GenParams { edge_count: 2, ..TINY }, 1).is_err());
        assert!(gen_random(GenParams { d: 0, ..TINY }, 1).is_err());
    }

    #[test]
    fn value_cap_refuses_with_cost() {
        let (inst, _) = gen_planted(TINY, 7).unwrap();
        match value_exact(&inst, 10.0) {
            Err(Error::CapExceeded { cost, .. }) => assert_eq!(cost, 4.0 * 64.0),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn extension_shapes_and_identity() {
        let (inst, _) = gen_planted(TINY, 7).unwrap();
        let same = extend(&inst, 0).unwrap();
        assert_eq!(same, inst);
        let ext = extend(&inst, 3).unwrap();
        assert_eq!((ext.left_labels, ext.right_labels, ext.d), (16, 32, 2));
        assert!(ext.validate().is_empty());
        // composing extensions agrees with a single extension
        assert_eq!(extend(&extend(&inst, 1).unwrap(), 2).unwrap(), ext);
    }

    #[test]
    fn extended_labelings_preserve_satisfaction() {
        let (inst, lab) = gen_planted(TINY, 7).unwrap();
        let ext = extend(&inst, 2).unwrap();
        let mut flipped = lab.clone();
        flipped.v_labels[1] = (flipped.v_labels[1] + 1) % 4;
        for base in [&lab, &flipped] {
            for alpha in 0..4 {
                let el = extend_labeling(base, 2, alpha).unwrap();
                assert_eq!(
                    ext.satisfied_fraction(&el).unwrap(),
                    inst.satisfied_fraction(base).unwrap()
                );
            }
        }
        let a0 = extend_labeling(&lab, 2, 0).unwrap();
        assert!(a0.u_labels.iter().all(|l| l % 4 == 0));
        let a1 = extend_labeling(&lab, 2, 1).unwrap();
        assert!(a0.u_labels.iter().zip(&a1.u_labels).all(|(x, y)| x != y));
        assert!(a0.v_labels.iter().zip(&a1.v_labels).all(|(x, y)| x != y));
        assert!(extend_labeling(&lab, 2, 4).is_err());
    }

    #[test]
    fn validate_names_the_broken_edge() {
        let (mut inst, _) = gen_planted(TINY, 7).unwrap();
        inst.edges[2].projection = vec![0, 0, 0, 1];
        let v = inst.validate();
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.location == "edge 3"));

        let (mut inst, _) = gen_planted(TINY, 7).unwrap();
        inst.edges[0].weight = BigRational::new(24.into(), 100.into());
        let v = inst.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].location, "weights");
    }

    #[test]
    fn json_round_trip_is_one_based() {
        let (inst, lab) = gen_planted(TINY, 7).unwrap();
        let text = inst.to_json();
        assert!(text.contains("\"weight\": \"1/4\""));
        assert!(!text.contains("\"t\""));
        assert_eq!(LabelCoverInstance::from_json(&text).unwrap(), inst);
        assert_eq!(Labeling::from_json(&lab.to_json()).unwrap(), lab);
        let ext = extend(&inst, 2).unwrap();
        assert_eq!(LabelCoverInstance::from_json(&ext.to_json()).unwrap(), ext);
        assert!(Labeling::from_json(r#"{"u_labels":[0],"v_labels":[]}"#).is_err());
    }
}
