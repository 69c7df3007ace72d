//! Seeded simulation of the game, used to cross-check the exact values.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::prob::Prob;
use crate::tree::Tree;
use crate::values::{argmax, MemoTable};

/// Which players guess strategically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlayModel {
    /// Both optimal.
    Oo,
    /// Optimal player moves first against a random opponent.
    SemirandomFirst,
    /// Random player moves first, optimal player second.
    SemirandomSecond,
    /// Both uniform over the candidates.
    RandomRandom,
}

impl PlayModel {
    pub const ALL: [PlayModel; 4] = [
        PlayModel::Oo,
        PlayModel::SemirandomFirst,
        PlayModel::SemirandomSecond,
        PlayModel::RandomRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlayModel::Oo => "oo",
            PlayModel::SemirandomFirst => "semirandom-first",
            PlayModel::SemirandomSecond => "semirandom-second",
            PlayModel::RandomRandom => "random-random",
        }
    }

    /// Whether the player to move on the given turn (0 = first) plays
    /// strategically.
    fn strategic(self, turn: usize) -> bool {
        match self {
            PlayModel::Oo => true,
            PlayModel::SemirandomFirst => turn.is_multiple_of(2),
            PlayModel::SemirandomSecond => turn % 2 == 1,
            PlayModel::RandomRandom => false,
        }
    }

    /// The exact value the simulation estimates.
    pub fn exact(self, memo: &MemoTable, tree: &Tree) -> Prob {
        let c = memo.class_values(tree);
        match self {
            PlayModel::Oo => c.oo.clone(),
            PlayModel::SemirandomFirst => c.p_first.clone(),
            PlayModel::SemirandomSecond => c.q_second.clone(),
            PlayModel::RandomRandom => c.rr.clone(),
        }
    }
}

impl fmt::Display for PlayModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown model {0:?} (expected oo, semirandom-first, semirandom-second or random-random)")]
pub struct UnknownModel(pub String);

impl FromStr for PlayModel {
    type Err = UnknownModel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PlayModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| UnknownModel(s.to_string()))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimulationError {
    #[error("trials must be positive")]
    ZeroTrials,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub estimate: f64,
    pub stderr: f64,
    pub wins: u64,
    pub trials: u64,
}

impl Estimate {
    /// `|estimate - exact| <= k * stderr`. A zero standard error demands an
    /// exact match.
    pub fn within(&self, exact: &Prob, k: f64) -> bool {
        (self.estimate - exact.to_f64()).abs() <= k * self.stderr + 1e-12
    }
}

/// Plays `trials` games and reports the win frequency of the strategic
/// player (the first player for the symmetric models). Strategic moves are
/// argmax moves of the exact per-vertex values, smallest label first.
pub fn monte_carlo(
    tree: &Tree,
    model: PlayModel,
    trials: u64,
    seed: u64,
    memo: &MemoTable,
) -> Result<Estimate, SimulationError> {
    if trials == 0 {
        return Err(SimulationError::ZeroTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sim = Simulator::new(tree, model, memo);
    let mut wins = 0u64;
    for _ in 0..trials {
        let winner_turn_parity = sim.play(&mut rng);
        let strategic_won = match model {
            PlayModel::SemirandomSecond => winner_turn_parity == 1,
            _ => winner_turn_parity == 0,
        };
        wins += u64::from(strategic_won);
    }
    let p = wins as f64 / trials as f64;
    Ok(Estimate {
        estimate: p,
        stderr: (p * (1.0 - p) / trials as f64).sqrt(),
        wins,
        trials,
    })
}

struct Simulator<'a> {
    tree: &'a Tree,
    model: PlayModel,
    memo: &'a MemoTable,
    moves: HashMap<Vec<usize>, usize>,
    mark: Vec<bool>,
}

impl<'a> Simulator<'a> {
    fn new(tree: &'a Tree, model: PlayModel, memo: &'a MemoTable) -> Self {
        Simulator {
            tree,
            model,
            memo,
            moves: HashMap::new(),
            mark: vec![false; tree.order()],
        }
    }

    /// Plays one game and returns the parity (0 = first player) of the
    /// winning turn.
    fn play(&mut self, rng: &mut ChaCha8Rng) -> usize {
        let n = self.tree.order();
        let target = rng.random_range(0..n);
        let mut candidates: Vec<usize> = (0..n).collect();
        let mut turn = 0;
        loop {
            let guess = if self.model.strategic(turn) {
                self.strategic_move(&candidates)
            } else {
                candidates[rng.random_range(0..candidates.len())]
            };
            if guess == target {
                return turn % 2;
            }
            candidates = self.component_of(&candidates, guess, target);
            turn += 1;
        }
    }

    fn strategic_move(&mut self, candidates: &[usize]) -> usize {
        if let Some(&v) = self.moves.get(candidates) {
            return v;
        }
        let sub = self.tree.induced(candidates.to_vec()).tree;
        let per = self.memo.vertex_values(&sub);
        let values: Vec<Prob> = match self.model {
            PlayModel::Oo => per.into_iter().map(|v| v.oo).collect(),
            _ => per.into_iter().map(|v| v.p_first).collect(),
        };
        // Candidates are sorted, so the first argmax index is the smallest
        // original label.
        let choice = candidates[argmax(&values)[0]];
        self.moves.insert(candidates.to_vec(), choice);
        choice
    }

    fn component_of(&mut self, candidates: &[usize], removed: usize, target: usize) -> Vec<usize> {
        for &c in candidates {
            self.mark[c] = true;
        }
        self.mark[removed] = false;
        let mut out = vec![target];
        self.mark[target] = false;
        let mut i = 0;
        while i < out.len() {
            let u = out[i];
            for &w in self.tree.neighbors(u) {
                if self.mark[w] {
                    self.mark[w] = false;
                    out.push(w);
                }
            }
            i += 1;
        }
        for &c in candidates {
            self.mark[c] = false;
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_always_wins() {
        let memo = MemoTable::new();
        let e = monte_carlo(&Tree::path(1), PlayModel::RandomRandom, 50, 3, &memo).unwrap();
        assert_eq!(e.estimate, 1.0);
        assert_eq!(e.stderr, 0.0);
    }

    #[test]
    fn zero_trials_rejected() {
        let memo = MemoTable::new();
        assert_eq!(
            monte_carlo(&Tree::path(3), PlayModel::Oo, 0, 1, &memo),
            Err(SimulationError::ZeroTrials)
        );
    }

    #[test]
    fn deterministic_given_seed() {
        let memo = MemoTable::new();
        let t = Tree::spider(&[2, 1, 1]).unwrap();
        let a = monte_carlo(&t, PlayModel::SemirandomSecond, 2000, 9, &memo).unwrap();
        let b = monte_carlo(&t, PlayModel::SemirandomSecond, 2000, 9, &memo).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn model_names_round_trip() {
        for m in PlayModel::ALL {
            assert_eq!(m.name().parse::<PlayModel>(), Ok(m));
        }
        assert!("optimal".parse::<PlayModel>().is_err());
    }
}
