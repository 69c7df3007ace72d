//! Isomorph-free generation of free trees.
//!
//! Trees are produced as level sequences in the Wright–Richmond–Odlyzko–McKay
//! order: rooted level sequences are advanced by the Beyer–Hedetniemi
//! successor, and candidates that are not in canonical centroid-rooted form
//! are skipped in one jump. Each isomorphism class appears exactly once and
//! the amortized cost per tree is constant.

use rayon::prelude::*;

use crate::tree::Tree;

/// Iterator over level sequences of all free trees of order `n`.
#[derive(Clone, Debug)]
pub struct LevelSequences {
    n: usize,
    layout: Option<Vec<usize>>,
}

impl LevelSequences {
    pub fn new(n: usize) -> Self {
        let layout = match n {
            0 => None,
            1 => Some(vec![0]),
            _ => Some((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
        };
        LevelSequences { n, layout }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.layout.take()?;
        if self.n == 1 {
            return Some(candidate);
        }
        let current = next_valid(candidate)?;
        let mut successor = current.clone();
        if next_rooted(&mut successor, None) {
            self.layout = Some(successor);
        }
        Some(current)
    }
}

/// Beyer–Hedetniemi successor, in place. Returns false when `layout` is the
/// last rooted tree of its order.
fn next_rooted(layout: &mut [usize], p: Option<usize>) -> bool {
    let mut p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while layout[q] + 1 != layout[p] {
        q -= 1;
    }
    let shift = p - q;
    while p < layout.len() {
        layout[p] = layout[p - shift];
        p += 1;
    }
    true
}

/// Splits a level sequence at the second vertex of level 1 into the first
/// subtree (re-rooted, levels shifted down by one) and the remainder.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Returns `candidate` if it is canonical, otherwise jumps to the next
/// canonical candidate.
fn next_valid(mut candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
            valid = false;
        }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let deep = candidate[p] > 2;
    if !next_rooted(&mut candidate, Some(p)) {
        return None;
    }
    if deep {
        let (new_left, _) = split(&candidate);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = candidate.len();
        for (offset, level) in (1..=height + 1).enumerate() {
            candidate[len - (height + 1) + offset] = level;
        }
    }
    Some(candidate)
}

/// Parent array of a level sequence: each vertex hangs off the closest
/// preceding vertex one level up.
pub fn parents_of(layout: &[usize]) -> Vec<usize> {
    let mut last_at_level: Vec<usize> = Vec::new();
    let mut parent = vec![0; layout.len()];
    for (i, &level) in layout.iter().enumerate() {
        if level > 0 {
            parent[i] = last_at_level[level - 1];
        }
        last_at_level.truncate(level);
        last_at_level.push(i);
    }
    parent
}

pub fn tree_from_levels(layout: &[usize]) -> Tree {
    Tree::from_parents(&parents_of(layout))
}

/// One representative per isomorphism class of free trees of order `n`.
pub fn enumerate_trees(n: usize) -> impl Iterator<Item = Tree> {
    LevelSequences::new(n).map(|l| tree_from_levels(&l))
}

/// The slice of the enumeration stream owned by worker `part` of `parts`:
/// every tree whose stream index is congruent to `part` modulo `parts`.
pub fn enumerate_partition(n: usize, part: usize, parts: usize) -> impl Iterator<Item = Tree> {
    assert!(parts > 0 && part < parts, "partition {part} of {parts}");
    LevelSequences::new(n)
        .enumerate()
        .filter(move |(i, _)| i % parts == part)
        .map(|(_, l)| tree_from_levels(&l))
}

/// Counts the classes of order `n`, splitting the stream over `threads`
/// partitions. Every generated tree is materialized and validated.
pub fn count_trees(n: usize, threads: usize) -> usize {
    let threads = threads.max(1);
    if threads == 1 {
        return enumerate_trees(n).count();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| {
        (0..threads)
            .into_par_iter()
            .map(|part| enumerate_partition(n, part, threads).count())
            .sum()
    })
}
