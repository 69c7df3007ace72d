//! Brute-force reference implementations used as test oracles.
//!
//! Nothing here shares code with the engine beyond the `Tree` and `Prob`
//! types. Game states are bitmasks of candidate vertices and values are
//! averaged target by target, never grouped by component or memoized by
//! isomorphism class.

#![allow(dead_code)]

use std::collections::HashMap;

use arbor::{Prob, Tree};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Mask = u32;

fn bit(v: usize) -> Mask {
    1 << v
}

fn members(mask: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| mask & bit(v) != 0)
}

fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Vertices of `alive` reachable from `start` without leaving `alive`.
pub fn reach(tree: &Tree, alive: Mask, start: usize) -> Mask {
    let mut seen = bit(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in tree.neighbors(u) {
            if alive & bit(w) != 0 && seen & bit(w) == 0 {
                seen |= bit(w);
                stack.push(w);
            }
        }
    }
    seen
}

/// Candidate set after the wrong guess `v` when the target is `t`.
fn after_miss(tree: &Tree, s: Mask, v: usize, t: usize) -> Mask {
    reach(tree, s & !bit(v), t)
}

fn full(tree: &Tree) -> Mask {
    (1u32 << tree.order()) - 1
}

/// Values of a labeled tree computed by direct game-tree search.
#[derive(Debug)]
pub struct BruteValues {
    pub oo: Prob,
    pub oo_by_vertex: Vec<Prob>,
    pub p_first: Prob,
    pub p_first_by_vertex: Vec<Prob>,
    pub q_second: Prob,
    pub q_second_by_vertex: Vec<Prob>,
    pub rr: Prob,
    pub rr_by_vertex: Vec<Prob>,
}

#[derive(Default)]
struct Search<'a> {
    tree: Option<&'a Tree>,
    oo: HashMap<Mask, Prob>,
    strat: HashMap<Mask, Prob>,
    random: HashMap<Mask, Prob>,
    rr: HashMap<Mask, Prob>,
}

impl<'a> Search<'a> {
    fn tree(&self) -> &'a Tree {
        self.tree.unwrap()
    }

    /// Both optimal: the mover's win probability after guessing `v`.
    fn oo_move(&mut self, s: Mask, v: usize) -> Prob {
        let mut acc = Prob::zero();
        for t in members(s) {
            acc = acc + if t == v { Prob::one() } else { self.oo(after_miss(self.tree(), s, v, t)).complement() };
        }
        acc.div_int(size(s))
    }

    fn oo(&mut self, s: Mask) -> Prob {
        if let Some(p) = self.oo.get(&s) {
            return p.clone();
        }
        let best = members(s).map(|v| self.oo_move(s, v)).max().unwrap();
        self.oo.insert(s, best.clone());
        best
    }

    /// Optimal player to move against a random opponent, after guessing `v`.
    fn strat_move(&mut self, s: Mask, v: usize) -> Prob {
        let mut acc = Prob::zero();
        for t in members(s) {
            acc = acc + if t == v { Prob::one() } else { self.random(after_miss(self.tree(), s, v, t)) };
        }
        acc.div_int(size(s))
    }

    fn strat(&mut self, s: Mask) -> Prob {
        if let Some(p) = self.strat.get(&s) {
            return p.clone();
        }
        let best = members(s).map(|v| self.strat_move(s, v)).max().unwrap();
        self.strat.insert(s, best.clone());
        best
    }

    /// Random player to move; the optimal player's win probability after
    /// the random guess `v`.
    fn random_move(&mut self, s: Mask, v: usize) -> Prob {
        let mut acc = Prob::zero();
        for t in members(s) {
            if t != v {
                acc = acc + self.strat(after_miss(self.tree(), s, v, t));
            }
        }
        acc.div_int(size(s))
    }

    fn random(&mut self, s: Mask) -> Prob {
        if let Some(p) = self.random.get(&s) {
            return p.clone();
        }
        let v: Prob = members(s).map(|v| self.random_move(s, v)).sum::<Prob>().div_int(size(s));
        self.random.insert(s, v.clone());
        v
    }

    fn rr_move(&mut self, s: Mask, v: usize) -> Prob {
        let mut acc = Prob::zero();
        for t in members(s) {
            acc = acc + if t == v { Prob::one() } else { self.rr(after_miss(self.tree(), s, v, t)).complement() };
        }
        acc.div_int(size(s))
    }

    fn rr(&mut self, s: Mask) -> Prob {
        if let Some(p) = self.rr.get(&s) {
            return p.clone();
        }
        let v: Prob = members(s).map(|v| self.rr_move(s, v)).sum::<Prob>().div_int(size(s));
        self.rr.insert(s, v.clone());
        v
    }
}

/// Plays out every line of the game on the labeled tree. States are cached
/// only by their exact candidate set.
pub fn brute_values(tree: &Tree) -> BruteValues {
    let mut s = Search {
        tree: Some(tree),
        ..Default::default()
    };
    let all = full(tree);
    let n = tree.order();
    let oo_by_vertex: Vec<Prob> = (0..n).map(|v| s.oo_move(all, v)).collect();
    let p_first_by_vertex: Vec<Prob> = (0..n).map(|v| s.strat_move(all, v)).collect();
    let q_second_by_vertex: Vec<Prob> = (0..n).map(|v| s.random_move(all, v)).collect();
    let rr_by_vertex: Vec<Prob> = (0..n).map(|v| s.rr_move(all, v)).collect();
    BruteValues {
        oo: s.oo(all),
        p_first: s.strat(all),
        q_second: s.random(all),
        rr: s.rr(all),
        oo_by_vertex,
        p_first_by_vertex,
        q_second_by_vertex,
        rr_by_vertex,
    }
}

/// `P(tau = k)` for a fixed target under uniform guessing, by expanding
/// every guess sequence.
fn target_stopping(tree: &Tree, s: Mask, t: usize, out: &mut Vec<Prob>, depth: usize, weight: Prob) {
    let m = size(s);
    if out.len() <= depth {
        out.resize(depth + 1, Prob::zero());
    }
    let each = weight.div_int(m);
    out[depth] = &out[depth] + &each;
    for v in members(s).filter(|&v| v != t) {
        target_stopping(tree, after_miss(tree, s, v, t), t, out, depth + 1, each.clone());
    }
}

/// Distribution of the number of guesses under uniform play with a fixed
/// target; entry `k - 1` is `P(tau = k)`.
pub fn brute_target_stopping(tree: &Tree, target: usize) -> Vec<Prob> {
    let mut out = Vec::new();
    target_stopping(tree, full(tree), target, &mut out, 0, Prob::one());
    out.resize(tree.order(), Prob::zero());
    out
}

/// Stopping distribution with the target drawn uniformly.
pub fn brute_stopping(tree: &Tree) -> Vec<Prob> {
    let n = tree.order();
    let mut total = vec![Prob::zero(); n];
    for t in 0..n {
        for (k, p) in brute_target_stopping(tree, t).into_iter().enumerate() {
            total[k] = &total[k] + &p;
        }
    }
    total.into_iter().map(|p| p.div_int(n)).collect()
}

/// First-player win probability with a fixed target: the odd part of the
/// fixed-target stopping distribution.
pub fn brute_fixed_target(tree: &Tree, target: usize) -> Prob {
    brute_target_stopping(tree, target).into_iter().step_by(2).sum()
}

/// `ell_k` straight from the definition: for each vertex, the orders of the
/// components left after deleting it.
pub fn brute_limbs(tree: &Tree) -> Vec<usize> {
    let n = tree.order();
    let mut counts = vec![0; n.saturating_sub(1)];
    let all = full(tree);
    for v in 0..n {
        let mut left = all & !bit(v);
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = reach(tree, all & !bit(v), start);
            counts[size(comp) - 1] += 1;
            left &= !comp;
        }
    }
    counts
}

/// Decodes a Prüfer sequence into a labeled tree on `seq.len() + 2` vertices.
pub fn from_pruefer(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Tree::new(n, &edges).unwrap()
}

/// Every labeled tree on `n` vertices (Cayley: `n^(n-2)` of them).
pub fn all_labeled_trees(n: usize) -> Vec<Tree> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Tree::path(1)],
        2 => return vec![Tree::path(2)],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            from_pruefer(&seq)
        })
        .collect()
}

/// Backtracking isomorphism test.
pub fn isomorphic(a: &Tree, b: &Tree) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let order = bfs_order(a);
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &order, 0, &mut map, &mut used)
}

fn bfs_order(t: &Tree) -> Vec<usize> {
    let mut order = vec![0];
    let mut seen = vec![false; t.order()];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in t.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

fn extend(a: &Tree, b: &Tree, order: &[usize], i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if i == order.len() {
        return true;
    }
    let u = order[i];
    for x in 0..b.order() {
        if used[x] || a.degree(u) != b.degree(x) {
            continue;
        }
        let consistent = a
            .neighbors(u)
            .iter()
            .filter(|&&w| map[w] != usize::MAX)
            .all(|&w| b.neighbors(x).contains(&map[w]));
        if !consistent {
            continue;
        }
        map[u] = x;
        used[x] = true;
        if extend(a, b, order, i + 1, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[x] = false;
    }
    false
}

/// Isomorphism classes among all labeled trees of order `n`, one
/// representative each.
pub fn brute_classes(n: usize) -> Vec<Tree> {
    let mut buckets: HashMap<Vec<usize>, Vec<Tree>> = HashMap::new();
    for t in all_labeled_trees(n) {
        let mut inv = brute_limbs(&t);
        let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
        deg.sort_unstable();
        inv.extend(deg);
        let reps = buckets.entry(inv).or_default();
        if !reps.iter().any(|r| isomorphic(r, &t)) {
            reps.push(t);
        }
    }
    buckets.into_values().flatten().collect()
}

/// Seeded random relabeling.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    perm
}
