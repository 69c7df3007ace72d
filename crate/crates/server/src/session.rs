//! The game state machine behind one session.

use arbor::{Component, MemoTable, Tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::ApiError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Actor {
    Human,
    Bot,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BotKind {
    /// Plays the argmax of the optimal-vs-random per-vertex values.
    #[default]
    Optimal,
    Random,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HumanRole {
    #[default]
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameStatus {
    InProgress,
    HumanWon,
    BotWon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GuessOutcome {
    Hit,
    Miss,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub actor: Actor,
    pub vertex: usize,
    pub outcome: GuessOutcome,
    /// Candidates left after the guess (0 once the target is hit).
    pub candidates_after: usize,
}

/// Everything needed to rebuild a session; this is what gets persisted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub id: String,
    pub tree_spec: String,
    pub human_role: HumanRole,
    pub bot_kind: BotKind,
    pub seed: u64,
    pub history: Vec<Move>,
}

#[derive(Clone, Debug)]
pub struct Session {
    id: String,
    tree_spec: String,
    tree: Tree,
    candidates: Component,
    target: usize,
    mover: Actor,
    bot_kind: BotKind,
    human_role: HumanRole,
    history: Vec<Move>,
    seed: u64,
    status: GameStatus,
}

/// RNG for one draw. Stream 0 picks the target; the random bot's move after
/// `k` recorded guesses uses stream `k + 1`, so every draw depends only on
/// the seed and the history length.
fn draw_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

impl Session {
    /// Starts a game. If the bot moves first its opening guess is already
    /// applied.
    pub fn create(
        id: String,
        tree_spec: &str,
        human_role: HumanRole,
        bot_kind: BotKind,
        seed: u64,
        memo: &MemoTable,
    ) -> Result<Session, ApiError> {
        let tree = Tree::parse_spec(tree_spec)?;
        let n = tree.order();
        let target = draw_rng(seed, 0).random_range(0..n);
        let mover = match human_role {
            HumanRole::First => Actor::Human,
            HumanRole::Second => Actor::Bot,
        };
        let mut session = Session {
            id,
            tree_spec: tree_spec.to_string(),
            candidates: Component {
                tree: tree.clone(),
                labels: (0..n).collect(),
            },
            tree,
            target,
            mover,
            bot_kind,
            human_role,
            history: Vec::new(),
            seed,
            status: GameStatus::InProgress,
        };
        if mover == Actor::Bot {
            session.bot_move(memo);
        }
        Ok(session)
    }

    /// Rebuilds a session by replaying the human guesses of a record, and
    /// checks that the bot's replies come out the same.
    pub fn replay(record: &SessionRecord, memo: &MemoTable) -> Result<Session, ApiError> {
        let mut s = Session::create(
            record.id.clone(),
            &record.tree_spec,
            record.human_role,
            record.bot_kind,
            record.seed,
            memo,
        )?;
        for m in record.history.iter().filter(|m| m.actor == Actor::Human) {
            s.guess(m.vertex, memo)?;
        }
        if s.history != record.history {
            return Err(ApiError::ReplayMismatch(record.id.clone()));
        }
        Ok(s)
    }

    pub fn record(&self) -> SessionRecord {
        SessionRecord {
            id: self.id.clone(),
            tree_spec: self.tree_spec.clone(),
            human_role: self.human_role,
            bot_kind: self.bot_kind,
            seed: self.seed,
            history: self.history.clone(),
        }
    }

    /// Applies a human guess (original label) and then the bot's reply.
    pub fn guess(&mut self, vertex: usize, memo: &MemoTable) -> Result<(), ApiError> {
        if self.status != GameStatus::InProgress {
            return Err(ApiError::SessionFinished);
        }
        if self.mover != Actor::Human {
            return Err(ApiError::NotYourTurn);
        }
        if self.candidates.labels.binary_search(&vertex).is_err() {
            return Err(ApiError::NotACandidate(vertex));
        }
        self.apply(Actor::Human, vertex);
        if self.status == GameStatus::InProgress {
            self.bot_move(memo);
        }
        Ok(())
    }

    fn bot_move(&mut self, memo: &MemoTable) {
        let vertex = match self.bot_kind {
            BotKind::Optimal => {
                let (_, moves, _) = memo.value_semirandom_first(&self.candidates.tree);
                self.candidates.labels[moves[0]]
            }
            BotKind::Random => {
                let k = self.candidates.labels.len();
                let i = draw_rng(self.seed, self.history.len() as u64 + 1).random_range(0..k);
                self.candidates.labels[i]
            }
        };
        self.apply(Actor::Bot, vertex);
    }

    fn apply(&mut self, actor: Actor, vertex: usize) {
        let outcome = if vertex == self.target {
            self.status = match actor {
                Actor::Human => GameStatus::HumanWon,
                Actor::Bot => GameStatus::BotWon,
            };
            GuessOutcome::Hit
        } else {
            let local = |labels: &[usize], v: usize| labels.binary_search(&v).expect("candidate vertex");
            let c = &self.candidates;
            let next = c
                .tree
                .component_containing(local(&c.labels, vertex), local(&c.labels, self.target))
                .expect("vertices in range")
                .expect("guess differs from target");
            let labels = next.labels.iter().map(|&i| c.labels[i]).collect();
            self.candidates = Component {
                tree: next.tree,
                labels,
            };
            GuessOutcome::Miss
        };
        let candidates_after = match outcome {
            GuessOutcome::Hit => 0,
            GuessOutcome::Miss => self.candidates.labels.len(),
        };
        self.history.push(Move {
            actor,
            vertex,
            outcome,
            candidates_after,
        });
        self.mover = match actor {
            Actor::Human => Actor::Bot,
            Actor::Bot => Actor::Human,
        };
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn status(&self) -> GameStatus {
        self.status
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// Candidate vertices, as sorted original labels.
    pub fn candidates(&self) -> &[usize] {
        &self.candidates.labels
    }

    /// The candidate subtree, relabeled to `0..k` in label order.
    pub fn candidate_tree(&self) -> &Tree {
        &self.candidates.tree
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn view(&self) -> SessionView {
        let finished = self.status != GameStatus::InProgress;
        let on: Vec<bool> = {
            let mut on = vec![false; self.tree.order()];
            for &v in &self.candidates.labels {
                on[v] = true;
            }
            on
        };
        SessionView {
            id: self.id.clone(),
            tree_spec: self.tree_spec.clone(),
            tree: TreeView::from(&self.tree),
            candidates: self.candidates.labels.clone(),
            eliminated: (0..self.tree.order()).filter(|&v| !on[v]).collect(),
            mover: self.mover,
            bot_kind: self.bot_kind,
            human_role: self.human_role,
            status: self.status,
            history: self.history.clone(),
            target: finished.then_some(self.target),
            seed: finished.then_some(self.seed),
        }
    }

    pub fn summary(&self) -> SessionSummary {
        SessionSummary {
            id: self.id.clone(),
            order: self.tree.order(),
            candidates: self.candidates.labels.len(),
            mover: self.mover,
            bot_kind: self.bot_kind,
            human_role: self.human_role,
            status: self.status,
            moves: self.history.len(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeView {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Tree> for TreeView {
    fn from(t: &Tree) -> Self {
        TreeView {
            order: t.order(),
            edges: t.edges().to_vec(),
        }
    }
}

/// What clients see. The target and the seed (which determines the target)
/// are omitted while the game is in progress.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub tree_spec: String,
    pub tree: TreeView,
    pub candidates: Vec<usize>,
    pub eliminated: Vec<usize>,
    pub mover: Actor,
    pub bot_kind: BotKind,
    pub human_role: HumanRole,
    pub status: GameStatus,
    pub history: Vec<Move>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionSummary {
    pub id: String,
    pub order: usize,
    pub candidates: usize,
    pub mover: Actor,
    pub bot_kind: BotKind,
    pub human_role: HumanRole,
    pub status: GameStatus,
    pub moves: usize,
}
