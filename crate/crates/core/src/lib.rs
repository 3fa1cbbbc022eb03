//! Fair shortest paths in vertex-colored digraphs.
//!
//! A path is fair when the number of its vertices of each color lies within
//! per-color bounds. Two solvers decide whether a fair `s`-`t` path exists:
//!
//! * [`dp`]: exact, polynomial in `n` for a fixed number of colors, restricted
//!   to shortest paths;
//! * [`fpt`]: randomized one-sided error, fixed-parameter tractable in the
//!   path's vertex count via representative families over a bounds matroid,
//!   for any length budget.
//!
//! [`testkit`] holds brute-force oracles, generators and hardness reductions.
//! Linear algebra is generic over the scalar ([`field::Field`]); the aliases
//! below fix the common choices.

pub mod constraints;
pub mod dp;
pub mod field;
pub mod format;
pub mod fpt;
pub mod graph;
pub mod linalg;
pub mod matroid;
pub mod repfam;
pub mod result;
pub mod testkit;

pub use constraints::{BoundsSpec, ConstraintError, FairnessVariant};
pub use dp::{solve_balance_fair, solve_exact_distance, solve_exact_distance_any};
pub use fpt::{fpt_solve, fpt_solve_with, FptOptions};
pub use graph::{Color, ColorCounts, ColoredDigraph, GraphError, Path, Vertex};
pub use result::{NoReason, SolveError, SolveResult, SolverKind};

/// The prime field used for randomized representations.
pub type Fp = field::Fp61;
/// Matrices over [`Fp`].
pub type FpMatrix = linalg::Matrix<Fp>;
/// Exact rational matrices, used to cross-check [`FpMatrix`] results.
pub type RationalMatrix = linalg::Matrix<num_rational::BigRational>;
