//! Exact analysis of the tree search game.
//!
//! A target vertex is drawn uniformly from a tree. Two players alternate
//! guessing; a wrong guess `v` shrinks the candidate set to the component of
//! `T - v` that holds the target. The first player to name the target wins.
//! This crate computes exact win probabilities under optimal and uniformly
//! random play, enumerates trees up to isomorphism, and runs exhaustive
//! sweeps over the known bounds and conjectures.
//!
//! ```
//! use arbor::{MemoTable, Tree};
//!
//! let memo = MemoTable::new();
//! let tree: Tree = "P:7".parse().unwrap();
//! let (value, moves, _) = memo.value_semirandom_first(&tree);
//! assert_eq!(value.to_string(), "37/63");
//! assert_eq!(moves, vec![0, 6]);
//! ```

pub mod canon;
pub mod closed_forms;
pub mod enumerate;
pub mod limbs;
pub mod montecarlo;
pub mod prob;
pub mod tree;
pub mod values;
pub mod verifier;

pub use canon::{canonical_key, CanonKey};
pub use enumerate::{count_trees, enumerate_partition, enumerate_trees};
pub use limbs::{limb_profile, LimbProfile};
pub use montecarlo::{monte_carlo, Estimate, PlayModel};
pub use prob::Prob;
pub use tree::{Component, Tree, TreeError};
pub use values::{MemoTable, StoppingDist, ValueBundle};
