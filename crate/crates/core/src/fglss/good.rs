//! Good queries: trials on which, for every labeling of the involved vertices
//! and every accepting answer tuple `z`, some extension `α` makes the
//! correct proof answer exactly `z`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label_cover::{extend, extended_label, LabelCoverInstance};
use crate::pcp::{trial_rng, QueryBundleSet, Verifier, VerifierConfig};
use crate::predicate::HadamardPredicate;

/// Default budget for [`is_good_query`]: labelings · (K+1) · 2^t · K².
pub const DEFAULT_GOOD_CAP: f64 = 1e9;

/// Which labelings of the involved vertices a good query must serve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelingScope {
    /// Every labeling.
    All,
    /// Only labelings satisfying the trial's `K` edges.
    Satisfying,
}

/// A labeling of the involved vertices (base labels) and an accepting tuple
/// that no extension reproduces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// `(vertex, label)` pairs for the involved left vertices.
    pub u_labels: Vec<(usize, usize)>,
    pub v_labels: Vec<(usize, usize)>,
    pub codeword: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodQueryReport {
    pub good: bool,
    pub witness: Option<Witness>,
    /// Labelings in scope.
    pub labelings: u64,
    /// `(labeling, α)` pairs whose answers were accepting; each hits one `z`.
    pub hits: u64,
}

impl GoodQueryReport {
    /// Fraction of `(labeling, z, α)` triples with `f^(α)(q) = z`.
    pub fn hit_rate(&self, k: usize, t: u32) -> f64 {
        let denom = self.labelings as f64 * (k + 1) as f64 * (1u64 << t) as f64;
        if denom == 0.0 {
            0.0
        } else {
            self.hits as f64 / denom
        }
    }
}

pub fn is_good_query(
    inst: &LabelCoverInstance,
    pred: &HadamardPredicate,
    qs: &QueryBundleSet,
    scope: LabelingScope,
    cap: f64,
) -> Result<GoodQueryReport> {
    let k = pred.arity();
    if qs.arity() != k {
        return Err(Error::Shape(format!("trial has arity {}, predicate {k}", qs.arity())));
    }
    let t = inst.extension_bits;
    let width = 1usize << t;
    let (base_left, base_right) = (inst.base_left_labels(), inst.base_right_labels());
    let edges: Vec<_> = qs.edge_indices.iter().map(|&e| &inst.edges[e]).collect();

    let mut us: Vec<usize> = edges.iter().map(|e| e.u).collect();
    let mut vs: Vec<usize> = edges.iter().map(|e| e.v).collect();
    us.sort_unstable();
    us.dedup();
    vs.sort_unstable();
    vs.dedup();
    let total = (base_left as f64).powi(us.len() as i32) * (base_right as f64).powi(vs.len() as i32);
    let cost = total * (k + 1) as f64 * width as f64 * (k * k) as f64;
    if cost > cap {
        return Err(Error::CapExceeded {
            what: "good-query check",
            cost,
            cap,
        });
    }

    // per edge position: (index of u in `us`, index of v in `vs`)
    let slots: Vec<(usize, usize)> = edges
        .iter()
        .map(|e| (us.binary_search(&e.u).unwrap(), vs.binary_search(&e.v).unwrap()))
        .collect();
    let full = if k + 1 == 64 { u64::MAX } else { (1u64 << (k + 1)) - 1 };

    let mut u_lab = vec![0usize; us.len()];
    let mut v_lab = vec![0usize; vs.len()];
    let mut report = GoodQueryReport {
        good: true,
        witness: None,
        labelings: 0,
        hits: 0,
    };
    loop {
        let in_scope = match scope {
            LabelingScope::All => true,
            LabelingScope::Satisfying => edges
                .iter()
                .zip(&slots)
                .all(|(e, &(ui, vi))| e.projection[v_lab[vi] << t] >> t == u_lab[ui]),
        };
        if in_scope {
            report.labelings += 1;
            let mut covered = 0u64;
            for alpha in 0..width {
                let pattern = (0..k).fold(0u32, |p, j| {
                    let bundle = &qs.bundles[j];
                    let minus = (0..k).fold(false, |acc, i| {
                        let (ui, vi) = slots[i];
                        let label = if i == j { u_lab[ui] } else { v_lab[vi] };
                        acc ^ bundle.slots[i][extended_label(label, t, alpha)].is_minus()
                    });
                    p | ((minus as u32) << j)
                });
                if let Some(c) = pred.pattern_index(pattern) {
                    covered |= 1 << c;
                    report.hits += 1;
                }
            }
            if covered != full && report.good {
                report.good = false;
                report.witness = Some(Witness {
                    u_labels: us.iter().copied().zip(u_lab.iter().copied()).collect(),
                    v_labels: vs.iter().copied().zip(v_lab.iter().copied()).collect(),
                    codeword: (!covered & full).trailing_zeros() as usize,
                });
            }
        }
        if !advance(&mut v_lab, base_right) && !advance(&mut u_lab, base_left) {
            break;
        }
    }
    Ok(report)
}

/// Odometer step, last digit fastest; `false` once it wraps to all zeros.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Not-good fraction at one extension width.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoodFractionPoint {
    pub t: u32,
    pub alphas: u64,
    pub queries: u64,
    pub not_good: u64,
    pub not_good_estimate: f64,
    pub stderr: f64,
    /// Measured `Pr[f^(α)(q) = z]`, pooled over trials, labelings in scope,
    /// accepting tuples and extensions.
    pub p_hit: f64,
    /// Largest number of in-scope labelings seen on one trial.
    pub max_labelings: u64,
    /// `max_labelings · (K + 1) · (1 − p_hit)^(2^t)`.
    pub union_bound: f64,
}

/// Not-good fractions for each `t`, using the same trial seeds throughout.
///
/// Trial `i` is seeded from `(cfg.seed, i)` on every extension, and sampling
/// is prefix-coupled in `α`, so per-trial goodness can only improve as `t`
/// grows.
pub fn good_fraction_curve(
    base: &LabelCoverInstance,
    cfg: &VerifierConfig,
    ts: &[u32],
    n: u64,
    scope: LabelingScope,
    cap: f64,
) -> Result<Vec<GoodFractionPoint>> {
    if n == 0 {
        return Err(Error::Input("need at least one trial".into()));
    }
    ts.iter()
        .map(|&t| {
            let ext = extend(base, t)?;
            let verifier = Verifier::new(&ext, cfg)?;
            let k = verifier.arity();
            let reports = (0..n)
                .into_par_iter()
                .map(|i| {
                    let qs = verifier.sample(&mut trial_rng(cfg.seed, i));
                    is_good_query(&ext, &verifier.pred, &qs, scope, cap)
                })
                .collect::<Result<Vec<_>>>()?;
            let not_good = reports.iter().filter(|r| !r.good).count() as u64;
            let estimate = not_good as f64 / n as f64;
            let hits: u64 = reports.iter().map(|r| r.hits).sum();
            let slots: f64 = reports.iter().map(|r| r.labelings as f64).sum::<f64>()
                * (k + 1) as f64
                * (1u64 << ext.extension_bits) as f64;
            let p_hit = if slots > 0.0 { hits as f64 / slots } else { 0.0 };
            let max_labelings = reports.iter().map(|r| r.labelings).max().unwrap_or(0);
            let alphas = 1u64 << ext.extension_bits;
            Ok(GoodFractionPoint {
                t: ext.extension_bits,
                alphas,
                queries: n,
                not_good,
                not_good_estimate: estimate,
                stderr: (estimate * (1.0 - estimate) / n as f64).sqrt(),
                p_hit,
                max_labelings,
                union_bound: max_labelings as f64 * (k + 1) as f64 * (1.0 - p_hit).powf(alphas as f64),
            })
        })
        .collect()
}

pub fn good_fraction_mc(
    base: &LabelCoverInstance,
    cfg: &VerifierConfig,
    t: u32,
    n: u64,
    scope: LabelingScope,
    cap: f64,
) -> Result<GoodFractionPoint> {
    Ok(good_fraction_curve(base, cfg, &[t], n, scope, cap)?.remove(0))
}
