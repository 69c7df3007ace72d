//! Exact game values under the three play models.
//!
//! Every value is a function of the isomorphism class of the candidate
//! subtree, so the recursions are memoized on [`CanonKey`]s. For a guess `v`
//! on a tree of order `n`, the target lies in component `C` of `T \ v` with
//! probability `|C| / n`, and the roles swap on `C`:
//!
//! * optimal vs optimal: `P(T,v) = 1 - (1/n) sum |C| P(C)`, value = max;
//! * optimal first vs random: `P(T,v) = 1/n + (1/n) sum |C| Q(C)`, value = max;
//! * random first vs optimal: `Q(T,v) = (1/n) sum |C| P(C)`, value = mean;
//! * random vs random: `R(T,v) = 1 - (1/n) sum |C| R(C)`, value = mean.

use std::sync::Arc;

use dashmap::DashMap;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, rooted_key, CanonKey};
use crate::prob::Prob;
use crate::tree::{Tree, TreeError};

/// The four class-level values of one isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassValues {
    pub oo: Prob,
    pub p_first: Prob,
    pub q_second: Prob,
    pub rr: Prob,
}

/// Conditional values given the first guess is a particular vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexValues {
    pub oo: Prob,
    pub p_first: Prob,
    pub q_second: Prob,
    pub rr: Prob,
    /// Number of odd-order components of `T \ v`.
    pub odd_components: usize,
}

/// Everything known about one labeled tree. Per-vertex vectors are indexed
/// by vertex label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueBundle {
    pub order: usize,
    pub oo_value: Prob,
    pub oo_moves: Vec<usize>,
    pub oo_by_vertex: Vec<Prob>,
    pub p_first: Prob,
    pub p_first_moves: Vec<usize>,
    pub p_first_by_vertex: Vec<Prob>,
    pub q_second: Prob,
    pub q_second_by_vertex: Vec<Prob>,
    pub rr_value: Prob,
    pub rr_by_vertex: Vec<Prob>,
}

/// Shared memo of per-class results. Safe for concurrent use: values are
/// pure functions of the key, so racing writers insert identical entries.
#[derive(Default)]
pub struct MemoTable {
    classes: DashMap<CanonKey, Arc<ClassValues>>,
    stopping: DashMap<CanonKey, Arc<Vec<Prob>>>,
    expected: DashMap<CanonKey, Prob>,
    fixed: DashMap<CanonKey, Prob>,
}

/// Indices attaining the maximum, in increasing order.
pub fn argmax(values: &[Prob]) -> Vec<usize> {
    let Some(best) = values.iter().max() else {
        return Vec::new();
    };
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == best)
        .map(|(i, _)| i)
        .collect()
}

pub fn mean(values: &[Prob]) -> Prob {
    values.iter().cloned().sum::<Prob>().div_int(values.len())
}

/// Vertices whose removal leaves the fewest odd-order components.
pub fn min_odd_component_moves(tree: &Tree) -> Vec<usize> {
    let odd: Vec<usize> = (0..tree.order())
        .map(|v| {
            tree.component_sizes(v)
                .expect("vertex in range")
                .into_iter()
                .filter(|s| s % 2 == 1)
                .count()
        })
        .collect();
    let best = odd.iter().copied().min().unwrap_or(0);
    (0..tree.order()).filter(|&v| odd[v] == best).collect()
}

/// `1/2 + [n odd] / (2n)`.
pub fn oo_closed_form(n: usize) -> Prob {
    if n % 2 == 1 {
        Prob::half() + Prob::new(1, 2 * n as i64)
    } else {
        Prob::half()
    }
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of cached isomorphism classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_values(&self, tree: &Tree) -> Arc<ClassValues> {
        let key = canonical_key(tree);
        if let Some(hit) = self.classes.get(&key) {
            return Arc::clone(&hit);
        }
        let per_vertex = self.vertex_values(tree);
        let values = Arc::new(aggregate(&per_vertex));
        self.classes.entry(key).or_insert(values).clone()
    }

    /// Conditional values for every first guess on `tree`.
    pub fn vertex_values(&self, tree: &Tree) -> Vec<VertexValues> {
        let n = tree.order();
        (0..n)
            .map(|v| {
                let mut sum_oo = Prob::zero();
                let mut sum_p = Prob::zero();
                let mut sum_q = Prob::zero();
                let mut sum_rr = Prob::zero();
                let mut odd_components = 0;
                for comp in tree.remove_vertex(v).expect("vertex in range") {
                    let size = comp.tree.order();
                    odd_components += size % 2;
                    let c = self.class_values(&comp.tree);
                    sum_oo = sum_oo + c.oo.scale(size);
                    sum_p = sum_p + c.p_first.scale(size);
                    sum_q = sum_q + c.q_second.scale(size);
                    sum_rr = sum_rr + c.rr.scale(size);
                }
                VertexValues {
                    oo: sum_oo.div_int(n).complement(),
                    p_first: (Prob::one() + sum_q).div_int(n),
                    q_second: sum_p.div_int(n),
                    rr: sum_rr.div_int(n).complement(),
                    odd_components,
                }
            })
            .collect()
    }

    /// Optimal-vs-optimal value by recursion, and the min-odd-components
    /// move set.
    pub fn value_oo(&self, tree: &Tree) -> (Prob, Vec<usize>) {
        (self.class_values(tree).oo.clone(), min_odd_component_moves(tree))
    }

    /// Value, argmax set and per-vertex values for the optimal first player
    /// against a random opponent.
    pub fn value_semirandom_first(&self, tree: &Tree) -> (Prob, Vec<usize>, Vec<Prob>) {
        let per: Vec<Prob> = self.vertex_values(tree).into_iter().map(|v| v.p_first).collect();
        let moves = argmax(&per);
        let best = per[moves[0]].clone();
        (best, moves, per)
    }

    /// Value and per-random-move conditional values for the optimal second
    /// player.
    pub fn value_semirandom_second(&self, tree: &Tree) -> (Prob, Vec<Prob>) {
        let per: Vec<Prob> = self.vertex_values(tree).into_iter().map(|v| v.q_second).collect();
        (mean(&per), per)
    }

    pub fn value_random_random(&self, tree: &Tree) -> (Prob, Vec<Prob>) {
        let per: Vec<Prob> = self.vertex_values(tree).into_iter().map(|v| v.rr).collect();
        (mean(&per), per)
    }

    pub fn bundle(&self, tree: &Tree) -> ValueBundle {
        let per = self.vertex_values(tree);
        let oo_by_vertex: Vec<Prob> = per.iter().map(|v| v.oo.clone()).collect();
        let p_first_by_vertex: Vec<Prob> = per.iter().map(|v| v.p_first.clone()).collect();
        let q_second_by_vertex: Vec<Prob> = per.iter().map(|v| v.q_second.clone()).collect();
        let rr_by_vertex: Vec<Prob> = per.iter().map(|v| v.rr.clone()).collect();
        let class = aggregate(&per);
        self.classes
            .entry(canonical_key(tree))
            .or_insert_with(|| Arc::new(class.clone()));
        ValueBundle {
            order: tree.order(),
            oo_value: class.oo,
            oo_moves: min_odd_component_moves(tree),
            oo_by_vertex,
            p_first: class.p_first,
            p_first_moves: argmax(&p_first_by_vertex),
            p_first_by_vertex,
            q_second: class.q_second,
            q_second_by_vertex,
            rr_value: class.rr,
            rr_by_vertex,
        }
    }

    /// Distribution of the number of uniform guesses until the target is
    /// hit; entry `t - 1` is `P(tau = t)`.
    pub fn stopping_distribution(&self, tree: &Tree) -> Arc<Vec<Prob>> {
        let key = canonical_key(tree);
        if let Some(hit) = self.stopping.get(&key) {
            return Arc::clone(&hit);
        }
        let n = tree.order();
        let n2 = n * n;
        // Weighted counts, divided by n^2 at the end.
        let mut acc = vec![Prob::zero(); n];
        acc[0] = Prob::from_integer(n as i64);
        for v in 0..n {
            for comp in tree.remove_vertex(v).expect("vertex in range") {
                let size = comp.tree.order();
                let sub = self.stopping_distribution(&comp.tree);
                for (t, p) in sub.iter().enumerate() {
                    acc[t + 1] = &acc[t + 1] + &p.scale(size);
                }
            }
        }
        let dist: Vec<Prob> = acc.into_iter().map(|p| p.div_int(n2)).collect();
        self.stopping.entry(key).or_insert(Arc::new(dist)).clone()
    }

    /// `E[tau]`, by its own recursion `E = 1 + (1/n^2) sum_v sum_C |C| E(C)`.
    pub fn expected_stopping_time(&self, tree: &Tree) -> Prob {
        let key = canonical_key(tree);
        if let Some(hit) = self.expected.get(&key) {
            return hit.clone();
        }
        let n = tree.order();
        let mut acc = Prob::zero();
        for v in 0..n {
            for comp in tree.remove_vertex(v).expect("vertex in range") {
                let size = comp.tree.order();
                acc = acc + self.expected_stopping_time(&comp.tree).scale(size);
            }
        }
        let e = Prob::one() + acc.div_int(n * n);
        self.expected.entry(key).or_insert(e).clone()
    }

    /// First-player win probability when both guess uniformly among the
    /// candidates and the target is fixed at `target`.
    pub fn fixed_target_value(&self, tree: &Tree, target: usize) -> Result<Prob, TreeError> {
        if target >= tree.order() {
            return Err(TreeError::VertexOutOfRange {
                v: target,
                n: tree.order(),
            });
        }
        Ok(self.fixed_inner(tree, target))
    }

    fn fixed_inner(&self, tree: &Tree, target: usize) -> Prob {
        let key = rooted_key(tree, target);
        if let Some(hit) = self.fixed.get(&key) {
            return hit.clone();
        }
        let n = tree.order();
        let mut acc = Prob::one();
        for v in (0..n).filter(|&v| v != target) {
            let comp = tree
                .component_containing(v, target)
                .expect("vertices in range")
                .expect("v differs from target");
            let sub_target = comp.labels.binary_search(&target).expect("target in component");
            acc = acc + self.fixed_inner(&comp.tree, sub_target).complement();
        }
        let f = acc.div_int(n);
        self.fixed.entry(key).or_insert(f).clone()
    }
}

fn aggregate(per: &[VertexValues]) -> ClassValues {
    let oo = per.iter().map(|v| &v.oo).max().cloned().unwrap_or_default();
    let p_first = per.iter().map(|v| &v.p_first).max().cloned().unwrap_or_default();
    let q: Vec<Prob> = per.iter().map(|v| v.q_second.clone()).collect();
    let rr: Vec<Prob> = per.iter().map(|v| v.rr.clone()).collect();
    ClassValues {
        oo,
        p_first,
        q_second: mean(&q),
        rr: mean(&rr),
    }
}

/// Exact stopping-time distribution with derived statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoppingDist {
    /// `probs[t - 1] = P(tau = t)` for `t = 1..n`.
    pub probs: Vec<Prob>,
}

impl StoppingDist {
    pub fn compute(memo: &MemoTable, tree: &Tree) -> Self {
        StoppingDist {
            probs: memo.stopping_distribution(tree).as_ref().clone(),
        }
    }

    pub fn total(&self) -> Prob {
        self.probs.iter().cloned().sum()
    }

    /// `P(tau odd)`, the first player's win probability under random play.
    pub fn odd_mass(&self) -> Prob {
        self.probs.iter().step_by(2).cloned().sum()
    }

    pub fn expectation(&self) -> Prob {
        self.probs
            .iter()
            .enumerate()
            .map(|(t, p)| p.scale(t + 1))
            .sum()
    }
}
