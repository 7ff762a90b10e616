//! Energy conditions over totally ordered groups.
//!
//! * [`group`]: computable bi-ordered groups, including free groups under the
//!   Magnus order.
//! * [`condition`]: valuations, energy and union winning conditions, exact
//!   membership for ultimately periodic words, and checkers for the laws these
//!   conditions satisfy.
//! * [`game`]: finite arenas, positional and Mealy strategies, lasso
//!   simulation, an exhaustive positional solver and a bounded verifier for
//!   union conditions.

pub mod condition;
pub mod game;
pub mod group;
pub mod report;

pub use group::{Element, GroupError, GroupSpec};
pub use report::{CheckReport, RunReport};
