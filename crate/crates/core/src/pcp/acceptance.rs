//! Acceptance probability: Monte Carlo, the closed form for correct proofs
//! under noise, and exhaustive enumeration for noiseless toy instances.

use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::proof::Proof;
use super::query::{trial_rng, Bundle, Verifier, VertexTuple};
use super::VerifierConfig;
use crate::error::{Error, Result};
use crate::label_cover::{extend_labeling, LabelCoverInstance, Labeling};
use crate::predicate::HadamardPredicate;
use crate::sign::Sign;
use crate::weights;

/// Default budget for [`accept_prob_exact_enum`]: outcomes per edge tuple.
pub const DEFAULT_ENUM_CAP: f64 = 1e7;

const MC_BLOCK: u64 = 8192;

/// Acceptance measurement as written to disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AcceptanceReport {
    pub estimate: f64,
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
    pub eta: f64,
    pub r: u32,
    pub accepted: u64,
    pub mode: String,
    /// Exact value as `num/den` where one is available.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl AcceptanceReport {
    fn from_counts(cfg: &VerifierConfig, accepted: u64, trials: u64) -> Self {
        let p = accepted as f64 / trials as f64;
        Self {
            estimate: p,
            stderr: (p * (1.0 - p) / trials as f64).sqrt(),
            trials,
            seed: cfg.seed,
            eta: cfg.eta,
            r: cfg.r,
            accepted,
            mode: "mc".into(),
            exact: None,
        }
    }
}

/// Accepting trials among `trials`, each seeded from `(seed, trial index)`.
pub fn accept_count_range(verifier: &Verifier<'_>, proof: &Proof, seed: u64, trials: Range<u64>) -> Result<u64> {
    let mut accepted = 0;
    for n in trials {
        let qs = verifier.sample(&mut trial_rng(seed, n));
        let answers = proof.eval(verifier.inst, &qs)?;
        accepted += verifier.pred.evaluate(&answers)? as u64;
    }
    Ok(accepted)
}

pub fn accept_prob_mc(
    inst: &LabelCoverInstance,
    cfg: &VerifierConfig,
    proof: &Proof,
    trials: u64,
) -> Result<AcceptanceReport> {
    if trials == 0 {
        return Err(Error::Input("trial count must be at least 1".into()));
    }
    let verifier = Verifier::new(inst, cfg)?;
    let accepted = (0..trials.div_ceil(MC_BLOCK))
        .into_par_iter()
        .map(|b| {
            accept_count_range(
                &verifier,
                proof,
                cfg.seed,
                b * MC_BLOCK..((b + 1) * MC_BLOCK).min(trials),
            )
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(AcceptanceReport::from_counts(cfg, accepted, trials))
}

/// Same estimate computed as `shards` contiguous runs merged by trial count.
pub fn accept_prob_mc_sharded(
    inst: &LabelCoverInstance,
    cfg: &VerifierConfig,
    proof: &Proof,
    trials: u64,
    shards: u64,
) -> Result<AcceptanceReport> {
    if trials == 0 || shards == 0 {
        return Err(Error::Input("trial and shard counts must be positive".into()));
    }
    let verifier = Verifier::new(inst, cfg)?;
    let per = trials.div_ceil(shards);
    let mut accepted = 0;
    for s in 0..shards {
        let range = (s * per).min(trials)..((s + 1) * per).min(trials);
        accepted += accept_count_range(&verifier, proof, cfg.seed, range)?;
    }
    Ok(AcceptanceReport::from_counts(cfg, accepted, trials))
}

/// `Σ_w Π_j (1 + ρ w_j)/2` over codewords `w`, with `ρ = (1 − η)^K`.
///
/// Before noise the correct proof's answers are a uniform codeword. Each
/// answer reads `K` distinct bits, each kept with probability `1 − η` and
/// otherwise resampled, so answer `j` is flipped independently with
/// correlation `ρ`; summing over the group collapses the double sum.
pub fn exact_product_closed_form(pred: &HadamardPredicate, eta: f64) -> f64 {
    let rho = (1.0 - eta).powi(pred.arity() as i32);
    pred.accepting_set()
        .iter()
        .map(|w| {
            w.bits()
                .iter()
                .map(|&b| (1.0 + rho * b.to_i8() as f64) / 2.0)
                .product::<f64>()
        })
        .sum()
}

/// Exact acceptance of the correct proof for `labeling` extended by `alpha`.
/// The labeling must satisfy every edge.
pub fn accept_prob_exact_product(
    inst: &LabelCoverInstance,
    cfg: &VerifierConfig,
    labeling: &Labeling,
    alpha: usize,
) -> Result<f64> {
    let pred = cfg.check()?;
    inst.ensure_valid()?;
    let ext = extend_labeling(labeling, inst.extension_bits, alpha)?;
    if !inst.satisfies_all(&ext)? {
        return Err(Error::Precondition(
            "closed form needs a labeling that satisfies every edge".into(),
        ));
    }
    Ok(exact_product_closed_form(&pred, cfg.eta))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactEnumResult {
    pub probability: BigRational,
    pub support_per_edge_tuple: u64,
    pub edge_tuples: u64,
}

/// Exact noiseless acceptance of an arbitrary proof.
///
/// For each weighted edge tuple, enumerates every joint choice of the
/// left strings and the per-label codewords. Each proof function is
/// tabulated once per edge tuple on all its inputs, and the joint choices are
/// walked on packed integers.
pub fn accept_prob_exact_enum(
    inst: &LabelCoverInstance,
    cfg: &VerifierConfig,
    proof: &Proof,
    cap: f64,
) -> Result<ExactEnumResult> {
    if cfg.eta != 0.0 {
        return Err(Error::Precondition(format!(
            "exact enumeration is limited to η = 0, got {}",
            cfg.eta
        )));
    }
    let pred = cfg.check()?;
    inst.ensure_valid()?;
    let k = pred.arity();
    let (left, right) = (inst.left_labels, inst.right_labels);
    let half = k.div_ceil(2);
    let per_slot = 2f64.powi(left as i32) * (half as f64).powi(right as i32);
    let support = per_slot.powi(k as i32);
    if support > cap {
        return Err(Error::CapExceeded {
            what: "exact acceptance enumeration (outcomes per edge tuple)",
            cost: support,
            cap,
        });
    }
    let bits = left + (k - 1) * right;
    if bits > 24 {
        return Err(Error::CapExceeded {
            what: "exact acceptance enumeration (proof inputs per function)",
            cost: 2f64.powi(bits as i32),
            cap: 2f64.powi(24),
        });
    }
    let choices = per_slot as usize;
    let support = support as u64;

    // chunks[e][i][c][j]: bits of slot i in bundle j when edge e sits at
    // position i and its randomness takes choice c.
    let chunks: Vec<Vec<Vec<Vec<u32>>>> = inst
        .edges
        .iter()
        .map(|edge| {
            (0..k)
                .map(|i| {
                    (0..choices)
                        .map(|c| {
                            let q = c % (1 << left);
                            let mut rest = c >> left;
                            let mut col = vec![0u32; k];
                            col[i] = q as u32;
                            for r in 0..right {
                                let bit = Sign::from_minus(q >> edge.projection[r] & 1 == 1);
                                let cw = pred.codeword(pred.candidates(i, bit)[rest % half]);
                                rest /= half;
                                for (j, word) in col.iter_mut().enumerate() {
                                    if j != i && cw.get(j).is_minus() {
                                        *word |= 1 << r;
                                    }
                                }
                            }
                            col
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    // offsets[j][i]: position of slot i inside bundle j's packed input
    let offsets: Vec<Vec<u32>> = (0..k)
        .map(|j| {
            (0..k)
                .scan(0u32, |acc, i| {
                    let here = *acc;
                    *acc += if i == j { left } else { right } as u32;
                    Some(here)
                })
                .collect()
        })
        .collect();
    let accepting: Vec<bool> = (0u32..1 << k).map(|p| pred.pattern_index(p).is_some()).collect();

    let edge_count = inst.edges.len();
    let edge_tuples = (edge_count as u64).pow(k as u32);
    let counts: Vec<u64> = (0..edge_tuples)
        .into_par_iter()
        .map(|code| {
            let mut es = vec![0usize; k];
            let mut c = code;
            for e in es.iter_mut().rev() {
                *e = (c % edge_count as u64) as usize;
                c /= edge_count as u64;
            }
            let ends: Vec<(usize, usize)> = es.iter().map(|&e| (inst.edges[e].u, inst.edges[e].v)).collect();
            let answers: Vec<Vec<bool>> = (0..k)
                .map(|j| {
                    let tuple = VertexTuple {
                        u_pos: j,
                        vertices: ends
                            .iter()
                            .enumerate()
                            .map(|(i, &(u, v))| if i == j { u } else { v })
                            .collect(),
                    };
                    (0u32..1 << bits)
                        .map(|idx| {
                            let mut flat = (0..bits).map(|b| Sign::from_minus(idx >> b & 1 == 1));
                            let bundle = Bundle {
                                slots: (0..k)
                                    .map(|i| flat.by_ref().take(if i == j { left } else { right }).collect())
                                    .collect(),
                            };
                            proof.answer(&tuple, &bundle).map(Sign::is_minus)
                        })
                        .collect::<Result<Vec<bool>>>()
                })
                .collect::<Result<_>>()?;

            let mut accepted = 0u64;
            let mut partial = vec![vec![0u32; k]; k + 1];
            walk(
                0,
                &es,
                &chunks,
                &offsets,
                &answers,
                &accepting,
                choices,
                &mut partial,
                &mut accepted,
            );
            Ok(accepted)
        })
        .collect::<Result<_>>()?;

    let mut probability = BigRational::zero();
    for (code, &accepted) in counts.iter().enumerate() {
        let mut weight = BigRational::one();
        let mut c = code as u64;
        for _ in 0..k {
            weight *= &inst.edges[(c % edge_count as u64) as usize].weight;
            c /= edge_count as u64;
        }
        probability += weight * BigRational::new(BigInt::from(accepted), BigInt::from(support));
    }
    Ok(ExactEnumResult {
        probability,
        support_per_edge_tuple: support,
        edge_tuples,
    })
}

#[allow(clippy::too_many_arguments)]
fn walk(
    i: usize,
    es: &[usize],
    chunks: &[Vec<Vec<Vec<u32>>>],
    offsets: &[Vec<u32>],
    answers: &[Vec<bool>],
    accepting: &[bool],
    choices: usize,
    partial: &mut [Vec<u32>],
    accepted: &mut u64,
) {
    let k = es.len();
    if i == k {
        let pattern = (0..k).fold(0usize, |p, j| p | ((answers[j][partial[k][j] as usize] as usize) << j));
        *accepted += accepting[pattern] as u64;
        return;
    }
    for c in 0..choices {
        let col = &chunks[es[i]][i][c];
        for j in 0..k {
            partial[i + 1][j] = partial[i][j] | (col[j] << offsets[j][i]);
        }
        walk(
            i + 1,
            es,
            chunks,
            offsets,
            answers,
            accepting,
            choices,
            partial,
            accepted,
        );
    }
}

impl ExactEnumResult {
    pub fn report(&self, cfg: &VerifierConfig) -> AcceptanceReport {
        AcceptanceReport {
            estimate: weights::to_f64(&self.probability),
            stderr: 0.0,
            trials: 0,
            seed: cfg.seed,
            eta: cfg.eta,
            r: cfg.r,
            accepted: 0,
            mode: "exact-enum".into(),
            exact: Some(weights::format(&self.probability)),
        }
    }
}
