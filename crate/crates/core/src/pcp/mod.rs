//! The Hadamard-predicate verifier over a Label Cover instance.
//!
//! One trial samples `K` edges, builds `K` query bundles (one per queried
//! function), perturbs every bit with probability `η`, reads one answer per
//! bundle and accepts iff the answers form a codeword.

mod acceptance;
mod proof;
mod query;

pub use acceptance::{
    accept_count_range, accept_prob_exact_enum, accept_prob_exact_product, accept_prob_mc, accept_prob_mc_sharded,
    exact_product_closed_form, AcceptanceReport, ExactEnumResult, DEFAULT_ENUM_CAP,
};
pub use proof::{canonical_key, tabulate, Proof, ProofTable, QueryKey};
pub use query::{sample_query, trial_rng, Bundle, QueryBundleSet, Verifier, VertexTuple};

use crate::error::{input, Result};
use crate::predicate::HadamardPredicate;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifierConfig {
    /// Generator count; the predicate arity is `K = 2^r − 1`.
    pub r: u32,
    /// Per-bit resampling probability.
    pub eta: f64,
    pub seed: u64,
}

impl VerifierConfig {
    /// Uses the default noise rate `η = 1/K²`.
    pub fn new(r: u32, seed: u64) -> Self {
        let k = ((1u64 << r) - 1) as f64;
        Self {
            r,
            eta: 1.0 / (k * k),
            seed,
        }
    }

    pub fn with_eta(self, eta: f64) -> Self {
        Self { eta, ..self }
    }

    pub fn check(&self) -> Result<HadamardPredicate> {
        if !(0.0..1.0).contains(&self.eta) {
            return input(format!("noise rate must lie in [0, 1), got {}", self.eta));
        }
        HadamardPredicate::new(self.r)
    }

    pub fn arity(&self) -> usize {
        (1usize << self.r) - 1
    }
}

/// Accept iff the answers satisfy the predicate.
pub fn verdict(pred: &HadamardPredicate, answers: &[crate::Sign]) -> Result<bool> {
    pred.evaluate(answers)
}
