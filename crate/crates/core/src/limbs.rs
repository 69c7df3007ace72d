//! Limb numbers: `ell[k]` counts pairs `(v, T')` with `T'` a component of
//! `T \ v` of order `k`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{Tree, TreeError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LimbProfile {
    /// `counts[k - 1]` is `ell_k` for `k = 1..n-1`.
    counts: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LimbError {
    #[error("limb index {k} outside 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

impl LimbProfile {
    pub fn from_counts(counts: Vec<usize>) -> Self {
        LimbProfile { counts }
    }

    /// Order of the tree the profile came from.
    pub fn order(&self) -> usize {
        self.counts.len() + 1
    }

    /// `ell_k`, zero outside `1..n-1`.
    pub fn ell(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }

    /// Signed sum `ell_1 - ell_2 + ell_3 - ... - ell_{2k}`.
    pub fn alternating_sum(&self, k: usize) -> i64 {
        (1..=2 * k)
            .map(|j| {
                let term = self.ell(j) as i64;
                if j % 2 == 1 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }
}

/// Computes the limb profile by sizing every `T_{v,w}` with `v ~ w`.
///
/// Subtree sizes come from one rooted pass: for the edge `(parent, child)`
/// the child side has `size[child]` vertices and the parent side the rest.
pub fn limb_profile(tree: &Tree) -> LimbProfile {
    let n = tree.order();
    let mut counts = vec![0; n.saturating_sub(1)];
    if n < 2 {
        return LimbProfile { counts };
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut size = vec![1; n];
    for &u in order.iter().skip(1).rev() {
        size[parent[u]] += size[u];
    }
    for &u in order.iter().skip(1) {
        // (parent, T_{parent,u}) has order size[u]; (u, T_{u,parent}) the rest.
        counts[size[u] - 1] += 1;
        counts[n - size[u] - 1] += 1;
    }
    LimbProfile { counts }
}

/// Closed form for spiders: `sum_i [k <= legs_i] + sum_i [k >= n - legs_i]`.
pub fn spider_limb_formula(legs: &[usize], k: usize) -> Result<usize, LimbError> {
    // Validate the leg list the same way the constructor does.
    if legs.len() < 3 {
        return Err(TreeError::InvalidSpider { legs: legs.len() }.into());
    }
    if legs.contains(&0) {
        return Err(TreeError::ZeroLeg.into());
    }
    let n = 1 + legs.iter().sum::<usize>();
    if k == 0 || k >= n {
        return Err(LimbError::IndexOutOfRange { k, max: n - 1 });
    }
    Ok(legs.iter().filter(|&&l| k <= l).count() + legs.iter().filter(|&&l| k + l >= n).count())
}
