//! Solver outcomes and the errors solvers can raise.

use std::fmt;

use thiserror::Error;

use crate::constraints::ConstraintError;
use crate::graph::{ColorCounts, GraphError, Path, Vertex};
use crate::matroid::MatroidError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Dp,
    Fpt,
    Oracle,
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolverKind::Dp => "dp",
            SolverKind::Fpt => "fpt",
            SolverKind::Oracle => "oracle",
        })
    }
}

/// Why a solver answered no.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoReason {
    Unreachable,
    /// `t` is reachable but only by paths longer than the budget.
    BudgetTooSmall,
    /// The bounds admit no vertex set of the graph's color multiset.
    InfeasibleBounds,
    NoFeasiblePath,
    /// Brute-force enumeration hit a cap; the no is not definitive.
    Truncated,
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoReason::Unreachable => "unreachable",
            NoReason::BudgetTooSmall => "budget-too-small",
            NoReason::InfeasibleBounds => "infeasible-bounds",
            NoReason::NoFeasiblePath => "no-feasible-path",
            NoReason::Truncated => "truncated",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub decision: bool,
    pub witness: Option<Path>,
    pub counts: Option<ColorCounts>,
    pub reason: Option<NoReason>,
    pub solver: SolverKind,
    pub seed: Option<u64>,
    pub epsilon: Option<f64>,
}

impl SolveResult {
    pub fn yes(solver: SolverKind, witness: Path, counts: ColorCounts) -> Self {
        SolveResult {
            decision: true,
            witness: Some(witness),
            counts: Some(counts),
            reason: None,
            solver,
            seed: None,
            epsilon: None,
        }
    }

    pub fn no(solver: SolverKind, reason: NoReason) -> Self {
        SolveResult {
            decision: false,
            witness: None,
            counts: None,
            reason: Some(reason),
            solver,
            seed: None,
            epsilon: None,
        }
    }

    pub fn with_randomness(mut self, seed: u64, epsilon: f64) -> Self {
        self.seed = Some(seed);
        self.epsilon = Some(epsilon);
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("source and target coincide (vertex {0})")]
    SourceEqualsTarget(Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("epsilon {0} must lie in (0, 1)")]
    EpsilonOutOfRange(f64),
    #[error("length budget must be at least 1")]
    ZeroBudget,
    #[error("predecessor chain broken: {0}")]
    CorruptTable(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Constraint(#[from] ConstraintError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

pub(crate) fn check_endpoints(n: usize, s: Vertex, t: Vertex) -> Result<(), SolveError> {
    for v in [s, t] {
        if v >= n {
            return Err(SolveError::UnknownVertex(v));
        }
    }
    if s == t {
        return Err(SolveError::SourceEqualsTarget(s));
    }
    Ok(())
}
