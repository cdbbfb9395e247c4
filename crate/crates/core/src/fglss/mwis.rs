use super::{FglssGraph, IndependentSet};
use crate::error::{Error, Result};
use crate::weights::Scaled;

/// Vertex budget for [`mwis_exact`]; adjacency rows are single `u64` masks.
pub const DEFAULT_MWIS_MAX_VERTICES: usize = 60;

/// Exact maximum-weight independent set by branch and bound.
///
/// Branches on the heaviest candidate (lowest id on ties), include first, and
/// prunes with a greedy clique-cover bound. The returned set is the first
/// optimum met in that order, so results are deterministic.
pub fn mwis_exact(graph: &FglssGraph, max_vertices: usize) -> Result<IndependentSet> {
    let n = graph.vertex_count();
    if n > max_vertices.min(64) {
        return Err(Error::CapExceeded {
            what: "exact maximum-weight independent set (vertices)",
            cost: n as f64,
            cap: max_vertices.min(64) as f64,
        });
    }
    let scaled = Scaled::new(&graph.vertices.iter().map(|v| v.weight.clone()).collect::<Vec<_>>())?;
    let adj: Vec<u64> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let (best, mask) = mwis_masks(&scaled.numerators, &adj);
    Ok(IndependentSet {
        vertices: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
        weight: scaled.to_weight(best),
    })
}

/// Core solver on bitmask adjacency (`adj[v]` excludes `v`). Returns the best
/// weight and its vertex mask.
pub fn mwis_masks(weights: &[u128], adj: &[u64]) -> (u128, u64) {
    assert!(weights.len() <= 64 && weights.len() == adj.len());
    let all = if weights.len() == 64 {
        u64::MAX
    } else {
        (1u64 << weights.len()) - 1
    };
    let mut solver = Solver {
        weights,
        adj,
        best: 0,
        best_mask: 0,
        found: false,
    };
    solver.search(all, 0, 0);
    (solver.best, solver.best_mask)
}

struct Solver<'a> {
    weights: &'a [u128],
    adj: &'a [u64],
    best: u128,
    best_mask: u64,
    found: bool,
}

impl Solver<'_> {
    fn heaviest(&self, set: u64) -> usize {
        let mut best = usize::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if best == usize::MAX || self.weights[v] > self.weights[best] {
                best = v;
            }
        }
        best
    }

    /// Greedy partition of `cands` into cliques; an independent set takes at
    /// most one vertex per clique.
    fn clique_cover_bound(&self, cands: u64) -> u128 {
        let mut rest = cands;
        let mut bound = 0;
        while rest != 0 {
            let v = self.heaviest(rest);
            bound += self.weights[v];
            let mut clique = 1u64 << v;
            let mut common = rest & self.adj[v];
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                clique |= 1 << u;
                common &= self.adj[u];
            }
            rest &= !clique;
        }
        bound
    }

    fn search(&mut self, cands: u64, weight: u128, chosen: u64) {
        if cands == 0 {
            if !self.found || weight > self.best {
                self.best = weight;
                self.best_mask = chosen;
                self.found = true;
            }
            return;
        }
        if self.found && weight + self.clique_cover_bound(cands) <= self.best {
            return;
        }
        let v = self.heaviest(cands);
        let bit = 1u64 << v;
        self.search(cands & !bit & !self.adj[v], weight + self.weights[v], chosen | bit);
        self.search(cands & !bit, weight, chosen);
    }
}
