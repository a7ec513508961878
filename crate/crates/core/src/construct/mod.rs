//! A compass-and-straightedge engine over the disk model.
//!
//! A [`Script`] names its givens, lists primitive steps (lines, circles,
//! intersections, perpendiculars, bisections, angle transfer) and the
//! properties to check afterwards. [`run`] replays it deterministically: every
//! two-point intersection must say which point it wants.

mod engine;
pub mod recipes;
mod script;
mod state;

use thiserror::Error;

pub use engine::{run, AssertionResult, Report, Run};
pub use script::{parse_angle, Arg, Assertion, Op, Param, ParamKind, Predicate, Script, Selector, Step};
pub use state::{ConstructionState, LineObject, Object};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructError {
    #[error("malformed script at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("given '{name}': {message}")]
    Param { name: String, message: String },
    #[error("step {index} ({op:?}): {message}")]
    Step { index: usize, op: Op, message: String },
    #[error("step {index}: the name '{name}' is already taken")]
    NameCollision { index: usize, name: String },
    #[error("assertion {predicate:?} cannot be evaluated: {message}")]
    Assertion { predicate: Predicate, message: String },
    #[error("{0}")]
    Invalid(String),
}
