//! The bounds matroid.
//!
//! Ground set: the graph's vertices. A set `X` is independent when no color
//! exceeds its upper bound and `|X| + g_X ≤ k`, where
//! `g_X = Σ_i max(0, α_i - |X ∩ χ^i|)` counts the vertices still owed to
//! unmet lower bounds. Its bases are exactly the `k`-sets meeting every bound.
//!
//! The matroid is a gammoid ([`gammoid`]), which yields a randomized linear
//! representation over `F_p` ([`represent`]).

mod flow;
pub mod gammoid;
pub mod represent;

use thiserror::Error;

use crate::constraints::BoundsSpec;
use crate::graph::{Color, ColoredDigraph, Vertex};

pub use gammoid::{build_gammoid, is_linked, GammoidGraph, GammoidNode};
pub use represent::{columns_independent, represent, represent_in, represent_stream, FieldMatrix};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatroidError {
    #[error("lower bounds sum to {alpha_sum} > rank {k}")]
    InfeasibleBounds { alpha_sum: u64, k: usize },
    #[error("bounds cover {got} colors, the coloring uses {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("epsilon {epsilon} outside ({min_epsilon:e}, 1)")]
    EpsilonOutOfRange { epsilon: f64, min_epsilon: f64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsMatroid {
    colors: Vec<Color>,
    alphas: Vec<u32>,
    betas: Vec<u32>,
    k: usize,
}

impl BoundsMatroid {
    /// `colors[v]` is the color of ground element `v`; colors lie in `0..alphas.len()`.
    pub fn new(colors: Vec<Color>, alphas: Vec<u32>, betas: Vec<u32>, k: usize) -> Result<Self, MatroidError> {
        if alphas.len() != betas.len() {
            return Err(MatroidError::DimensionMismatch {
                expected: alphas.len(),
                got: betas.len(),
            });
        }
        if let Some(&bad) = colors.iter().find(|&&col| col >= alphas.len()) {
            return Err(MatroidError::DimensionMismatch {
                expected: bad + 1,
                got: alphas.len(),
            });
        }
        Ok(BoundsMatroid {
            colors,
            alphas,
            betas,
            k,
        })
    }

    pub fn for_graph(graph: &ColoredDigraph, spec: &BoundsSpec, k: usize) -> Result<Self, MatroidError> {
        if spec.num_colors() != graph.num_colors() {
            return Err(MatroidError::DimensionMismatch {
                expected: graph.num_colors(),
                got: spec.num_colors(),
            });
        }
        Self::new(
            graph.colors().to_vec(),
            spec.alphas().to_vec(),
            spec.betas().to_vec(),
            k,
        )
    }

    pub fn ground_size(&self) -> usize {
        self.colors.len()
    }

    pub fn num_colors(&self) -> usize {
        self.alphas.len()
    }

    pub fn rank_target(&self) -> usize {
        self.k
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn betas(&self) -> &[u32] {
        &self.betas
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn alpha_sum(&self) -> u64 {
        self.alphas.iter().map(|&a| a as u64).sum()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_colors()];
        for &col in &self.colors {
            sizes[col] += 1;
        }
        sizes
    }

    /// `Σα ≤ k`, i.e. the empty set is independent.
    pub fn is_feasible(&self) -> bool {
        self.alpha_sum() <= self.k as u64
    }

    /// Some `k`-subset of the ground set meets every bound.
    pub fn has_basis(&self) -> bool {
        let sizes = self.class_sizes();
        self.is_feasible()
            && self.alphas.iter().zip(&sizes).all(|(&a, &s)| a as usize <= s)
            && self
                .betas
                .iter()
                .zip(&sizes)
                .map(|(&b, &s)| (b as usize).min(s))
                .sum::<usize>()
                >= self.k
    }

    /// Same independent sets, with each `β_i` capped at `max(α_i, min(|χ^i|, k))`
    /// so the gammoid stays polynomial in the ground set.
    pub fn normalized(&self) -> BoundsMatroid {
        let sizes = self.class_sizes();
        let betas = self
            .alphas
            .iter()
            .zip(&self.betas)
            .zip(&sizes)
            .map(|((&a, &b), &s)| b.min(s.min(self.k) as u32).max(a))
            .collect();
        BoundsMatroid { betas, ..self.clone() }
    }

    /// `g_X`: vertices still owed to unmet lower bounds.
    pub fn deficit(&self, x: &[Vertex]) -> u64 {
        let counts = self.counts(x);
        self.alphas
            .iter()
            .zip(&counts)
            .map(|(&a, &n)| (a as u64).saturating_sub(n as u64))
            .sum()
    }

    fn counts(&self, x: &[Vertex]) -> Vec<u32> {
        let mut counts = vec![0u32; self.num_colors()];
        for &v in x {
            counts[self.colors[v]] += 1;
        }
        counts
    }

    /// Direct evaluation of the independence predicate. `x` must not repeat elements.
    pub fn is_independent_direct(&self, x: &[Vertex]) -> bool {
        let counts = self.counts(x);
        if counts.iter().zip(&self.betas).any(|(&n, &b)| n > b) {
            return false;
        }
        x.len() as u64 + self.deficit(x) <= self.k as u64
    }
}
