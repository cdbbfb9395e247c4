use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::VerifierConfig;
use crate::error::{Error, Result};
use crate::label_cover::LabelCoverInstance;
use crate::predicate::HadamardPredicate;
use crate::sign::Sign;
use crate::weights::Scaled;

/// The vertices read by one proof function: position `u_pos` holds a left
/// vertex, every other position a right vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexTuple {
    pub u_pos: usize,
    pub vertices: Vec<usize>,
}

/// The input handed to one proof function: `K` slots, slot `u_pos` of length
/// `L` and the rest of length `R` (after extension).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bundle {
    pub slots: Vec<Vec<Sign>>,
}

impl Bundle {
    pub fn negated(&self) -> Bundle {
        Bundle {
            slots: self.slots.iter().map(|s| s.iter().map(|&b| -b).collect()).collect(),
        }
    }

    pub fn bit_len(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    pub fn flat(&self) -> impl Iterator<Item = Sign> + '_ {
        self.slots.iter().flatten().copied()
    }
}

/// One verifier trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryBundleSet {
    pub edge_indices: Vec<usize>,
    /// Post-noise bundles; bundle `j` is the input to the `j`-th function.
    pub bundles: Vec<Bundle>,
    pub pre_noise: Vec<Bundle>,
    /// `noise_mask[j][i][x]` is set iff that bit was resampled.
    pub noise_mask: Vec<Vec<Vec<bool>>>,
}

impl QueryBundleSet {
    /// `tuple_j = (v_1, …, v_{j−1}, u_j, v_{j+1}, …, v_K)`.
    pub fn tuples(&self, inst: &LabelCoverInstance) -> Vec<VertexTuple> {
        let ends: Vec<(usize, usize)> = self
            .edge_indices
            .iter()
            .map(|&e| (inst.edges[e].u, inst.edges[e].v))
            .collect();
        (0..ends.len())
            .map(|j| VertexTuple {
                u_pos: j,
                vertices: ends
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if i == j { u } else { v })
                    .collect(),
            })
            .collect()
    }

    pub fn arity(&self) -> usize {
        self.edge_indices.len()
    }
}

/// Per-trial generator: trial `n` of a run seeded with `seed` always sees the
/// same stream, however trials are sharded.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A verifier bound to one instance.
#[derive(Clone, Debug)]
pub struct Verifier<'a> {
    pub inst: &'a LabelCoverInstance,
    pub pred: HadamardPredicate,
    pub eta: f64,
    edge_dist: WeightedIndex<u128>,
}

impl<'a> Verifier<'a> {
    pub fn new(inst: &'a LabelCoverInstance, cfg: &VerifierConfig) -> Result<Self> {
        let pred = cfg.check()?;
        inst.ensure_valid()?;
        let scaled = Scaled::new(&inst.edges.iter().map(|e| e.weight.clone()).collect::<Vec<_>>())?;
        let edge_dist =
            WeightedIndex::new(&scaled.numerators).map_err(|e| Error::Input(format!("edge weights: {e}")))?;
        Ok(Self {
            inst,
            pred,
            eta: cfg.eta,
            edge_dist,
        })
    }

    pub fn arity(&self) -> usize {
        self.pred.arity()
    }

    /// Samples one trial.
    ///
    /// Edge `i`'s codeword feeds coordinate `j` into bundle `j` at slot `i`.
    /// With that routing the correct proof's answer `j` is the `j`-th
    /// coordinate of the product of the `K` per-edge codewords, so the answer
    /// tuple is itself a codeword (uniform over the group) before noise. Routing
    /// all coordinates of edge `i`'s codeword into bundle `i` instead would
    /// make a correct proof fail even without noise.
    ///
    /// Randomness is drawn one extension block `α` at a time, so a trial on
    /// `extend(inst, t)` is the `α < 2^t` prefix of the same trial on
    /// `extend(inst, t + 1)`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> QueryBundleSet {
        let k = self.arity();
        let inst = self.inst;
        let t = inst.extension_bits;
        let width = 1usize << t;
        let (base_left, base_right) = (inst.base_left_labels(), inst.base_right_labels());

        let edge_indices: Vec<usize> = (0..k).map(|_| self.edge_dist.sample(rng)).collect();
        let slot_len = |j: usize, i: usize| if i == j { inst.left_labels } else { inst.right_labels };
        let mut pre: Vec<Bundle> = (0..k)
            .map(|j| Bundle {
                slots: (0..k).map(|i| vec![Sign::Plus; slot_len(j, i)]).collect(),
            })
            .collect();
        let mut noise_mask: Vec<Vec<Vec<bool>>> = (0..k)
            .map(|j| (0..k).map(|i| vec![false; slot_len(j, i)]).collect())
            .collect();
        let mut resampled: Vec<(usize, usize, usize, Sign)> = Vec::new();

        for alpha in 0..width {
            for (i, bundle) in pre.iter_mut().enumerate() {
                for l in 0..base_left {
                    bundle.slots[i][l * width + alpha] = Sign::from_minus(rng.random());
                }
            }
            for (i, &e) in edge_indices.iter().enumerate() {
                let proj = &inst.edges[e].projection;
                for r0 in 0..base_right {
                    let r = r0 * width + alpha;
                    let fixed = pre[i].slots[i][proj[r]];
                    let cw = self.pred.codeword(self.pred.sample_fixed_coord(i, fixed, rng));
                    for (j, bundle) in pre.iter_mut().enumerate() {
                        if j != i {
                            bundle.slots[i][r] = cw.get(j);
                        }
                    }
                }
            }
            if self.eta > 0.0 {
                #[allow(clippy::needless_range_loop)]
                for j in 0..k {
                    for i in 0..k {
                        let base = if i == j { base_left } else { base_right };
                        for x0 in 0..base {
                            let x = x0 * width + alpha;
                            if rng.random_bool(self.eta) {
                                noise_mask[j][i][x] = true;
                                resampled.push((j, i, x, Sign::from_minus(rng.random())));
                            }
                        }
                    }
                }
            }
        }

        let mut bundles = pre.clone();
        for (j, i, x, s) in resampled {
            bundles[j].slots[i][x] = s;
        }
        QueryBundleSet {
            edge_indices,
            bundles,
            pre_noise: pre,
            noise_mask,
        }
    }
}

pub fn sample_query<R: Rng + ?Sized>(
    inst: &LabelCoverInstance,
    cfg: &VerifierConfig,
    rng: &mut R,
) -> Result<QueryBundleSet> {
    Ok(Verifier::new(inst, cfg)?.sample(rng))
}
