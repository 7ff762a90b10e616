//! Two-player games on finite edge-colored arenas: parsing, strategies,
//! lasso plays, an exhaustive positional solver and a bounded verifier for
//! strategies against finite-memory opponents.

mod arena;
mod lifting;
mod play;
mod ramsey;
mod solve;
mod strategy;
mod verify;

use thiserror::Error;

use crate::condition::ConditionError;

pub use arena::{random_arena, Arena, ArenaError, Edge, EdgeId, Node, NodeId, Player};
pub use lifting::{nonzero_cycle_reachable, one_player_lifting_check};
pub use play::{play_lasso, Lasso};
pub use ramsey::ramsey_distinct_check;
pub use solve::{solve_positional, Solution};
pub use strategy::{alternating, MealyStrategy, PositionalStrategy, Strategy};
pub use verify::{verify_against_bob, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error(transparent)]
    Arena(#[from] ArenaError),
    #[error(transparent)]
    Condition(#[from] ConditionError),
    #[error("invalid strategy: {0}")]
    Strategy(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("{0} has no positional strategy winning from all of its winning nodes")]
    NoUniformWitness(Player),
    #[error("search space too large: {0}")]
    TooLarge(String),
}
