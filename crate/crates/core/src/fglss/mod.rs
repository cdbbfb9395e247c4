//! FGLSS graphs over sampled verifier trials.
//!
//! A vertex is a trial together with one accepting answer tuple; its weight is
//! the trial's weight. Two vertices conflict when they demand different values
//! of the same proof bit. Independent sets are exactly partial proofs, and an
//! independent set's weight is the (empirical) acceptance of that proof.

mod coloring;
mod good;
mod io;
mod mwis;

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

pub use coloring::{alpha_coloring, verify_coloring, Coloring};
pub use good::{
    good_fraction_curve, good_fraction_mc, is_good_query, GoodFractionPoint, GoodQueryReport, LabelingScope, Witness,
    DEFAULT_GOOD_CAP,
};
pub use io::MwisJson;
pub use mwis::{mwis_exact, mwis_masks, DEFAULT_MWIS_MAX_VERTICES};

use crate::error::{Error, Result};
use crate::label_cover::LabelCoverInstance;
use crate::pcp::{
    canonical_key, trial_rng, Proof, ProofTable, QueryBundleSet, QueryKey, Verifier, VerifierConfig, VertexTuple,
};
use crate::predicate::HadamardPredicate;
use crate::sign::Sign;
use crate::weights::{self, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoggedQuery {
    pub query: QueryBundleSet,
    pub tuples: Vec<VertexTuple>,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FglssVertex {
    pub query: usize,
    /// Index into the predicate's accepting set.
    pub codeword: usize,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub weight: Weight,
}

/// Outcome of merging an independent set into a partial proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyReport {
    pub strategy: ProofTable,
    /// Weight of logged trials on which the merged strategy is fully defined
    /// and accepted.
    pub accept_weight: Weight,
}

#[derive(Clone, Debug)]
pub struct FglssGraph {
    pub r: u32,
    pub eta: f64,
    pub seed: u64,
    /// The (possibly extended) instance the trials were sampled on.
    pub instance: LabelCoverInstance,
    pub queries: Vec<LoggedQuery>,
    pub vertices: Vec<FglssVertex>,
    adjacency: Vec<BTreeSet<usize>>,
    pred: HadamardPredicate,
}

impl FglssGraph {
    /// Builds the graph over explicit trials with explicit weights.
    pub fn from_queries(
        instance: LabelCoverInstance,
        cfg: &VerifierConfig,
        queries: Vec<(QueryBundleSet, Weight)>,
    ) -> Result<Self> {
        let pred = cfg.check()?;
        let k = pred.arity();
        let logged: Vec<LoggedQuery> = queries
            .into_iter()
            .map(|(query, weight)| {
                if query.arity() != k {
                    return Err(Error::Shape(format!(
                        "trial has arity {}, predicate {k}",
                        query.arity()
                    )));
                }
                Ok(LoggedQuery {
                    tuples: query.tuples(&instance),
                    query,
                    weight,
                })
            })
            .collect::<Result<_>>()?;
        let vertices: Vec<FglssVertex> = logged
            .iter()
            .enumerate()
            .flat_map(|(q, lq)| {
                (0..=k).map(move |c| FglssVertex {
                    query: q,
                    codeword: c,
                    weight: lq.weight.clone(),
                })
            })
            .collect();

        let mut graph = Self {
            r: cfg.r,
            eta: cfg.eta,
            seed: cfg.seed,
            instance,
            queries: logged,
            adjacency: vec![BTreeSet::new(); vertices.len()],
            vertices,
            pred,
        };
        graph.connect_conflicts();
        Ok(graph)
    }

    /// Samples `n` trials (trial `i` seeded from `(cfg.seed, i)`), each of
    /// weight `1/n`.
    pub fn build_sampled(inst: &LabelCoverInstance, cfg: &VerifierConfig, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("need at least one trial".into()));
        }
        let verifier = Verifier::new(inst, cfg)?;
        let w = Weight::new(1.into(), n.into());
        let queries = (0..n as u64)
            .map(|i| (verifier.sample(&mut trial_rng(cfg.seed, i)), w.clone()))
            .collect();
        Self::from_queries(inst.clone(), cfg, queries)
    }

    pub fn predicate(&self) -> &HadamardPredicate {
        &self.pred
    }

    pub fn vertex_id(&self, query: usize, codeword: usize) -> usize {
        query * self.pred.codeword_count() + codeword
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    /// Conflict edges `(a, b)` with `a < b`, in order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.range(a + 1..).map(move |&b| (a, b)))
    }

    pub fn conflict(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    pub fn total_weight(&self) -> Weight {
        weights::sum(self.vertices.iter().map(|v| &v.weight))
    }

    /// The proof bits vertex `v` pins, as canonical keys with canonical answers.
    pub fn demands(&self, v: usize) -> Vec<(QueryKey, Sign)> {
        let vx = &self.vertices[v];
        let lq = &self.queries[vx.query];
        let cw = self.pred.codeword(vx.codeword);
        lq.tuples
            .iter()
            .zip(&lq.query.bundles)
            .enumerate()
            .map(|(j, (tuple, bundle))| {
                let (key, flip) = canonical_key(tuple, bundle);
                (key, cw.get(j) * flip)
            })
            .collect()
    }

    fn connect_conflicts(&mut self) {
        let mut by_key: HashMap<QueryKey, [Vec<usize>; 2]> = HashMap::new();
        for v in 0..self.vertices.len() {
            for (key, answer) in self.demands(v) {
                by_key.entry(key).or_default()[answer.is_minus() as usize].push(v);
            }
        }
        for [plus, minus] in by_key.values() {
            for &a in plus {
                for &b in minus {
                    if a != b {
                        self.adjacency[a].insert(b);
                        self.adjacency[b].insert(a);
                    }
                }
            }
        }
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.conflict(a, b)))
    }

    /// Vertices selected by a proof: on each trial, the vertex matching the
    /// proof's answers when they are accepted.
    pub fn is_from_proof(&self, proof: &Proof) -> Result<IndependentSet> {
        let mut vertices = Vec::new();
        let mut weight = Weight::zero();
        for (q, lq) in self.queries.iter().enumerate() {
            let answers = lq
                .tuples
                .iter()
                .zip(&lq.query.bundles)
                .map(|(t, b)| proof.answer(t, b))
                .collect::<Result<Vec<Sign>>>()?;
            if let Some(c) = self.pred.codeword_index(&answers) {
                vertices.push(self.vertex_id(q, c));
                weight += &lq.weight;
            }
        }
        Ok(IndependentSet { vertices, weight })
    }

    /// Merges the demands of an independent set into one partial proof.
    ///
    /// For a maximal independent set (in particular any maximum-weight one,
    /// when all weights are positive) the accept weight equals the set's
    /// weight; in general it can only be larger.
    pub fn strategy_from_is(&self, set: &[usize]) -> Result<StrategyReport> {
        let mut strategy = ProofTable {
            t: self.instance.extension_bits,
            alpha: None,
            entries: Default::default(),
        };
        for &v in set {
            if v >= self.vertices.len() {
                return Err(Error::Input(format!("vertex {} out of range", v + 1)));
            }
            for (key, answer) in self.demands(v) {
                if let Some(prev) = strategy.entries.insert(key, answer) {
                    if prev != answer {
                        return Err(Error::Input(format!(
                            "vertex set is not independent: vertex {} contradicts an earlier vertex",
                            v + 1
                        )));
                    }
                }
            }
        }
        let mut accept_weight = Weight::zero();
        for lq in &self.queries {
            let answers: Option<Vec<Sign>> = lq
                .tuples
                .iter()
                .zip(&lq.query.bundles)
                .map(|(t, b)| strategy.lookup(t, b))
                .collect();
            if answers.is_some_and(|a| self.pred.codeword_index(&a).is_some()) {
                accept_weight += &lq.weight;
            }
        }
        Ok(StrategyReport {
            strategy,
            accept_weight,
        })
    }

    /// `(total weight) / (maximum independent set weight)`.
    pub fn chromatic_lower_bound(&self, max_vertices: usize) -> Result<Weight> {
        let best = mwis_exact(self, max_vertices)?;
        if best.weight.is_zero() {
            return Err(Error::Precondition("maximum independent set has weight 0".into()));
        }
        Ok(self.total_weight() / best.weight)
    }
}
