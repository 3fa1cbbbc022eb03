//! Per-color bound specifications and the fairness variants that compile to them.

use thiserror::Error;

use crate::graph::{Color, ColorCounts, ColoredDigraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstraintError {
    #[error("expected {expected} colors, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("color {color}: lower bound {alpha} exceeds upper bound {beta}")]
    AlphaExceedsBeta { color: Color, alpha: u32, beta: u32 },
    #[error("vertex count {k} outside the bound sums [{min}, {max}]")]
    InfeasibleVertexCount { k: u32, min: u64, max: u64 },
    #[error("invalid slack {0}")]
    InvalidSlack(i64),
    #[error("margin of victory needs at least two colors")]
    NeedTwoColors,
}

/// Lower/upper occurrence bounds per color, optionally with an exact vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundsSpec {
    alphas: Vec<u32>,
    betas: Vec<u32>,
    k: Option<u32>,
}

impl BoundsSpec {
    pub fn new(alphas: Vec<u32>, betas: Vec<u32>, k: Option<u32>) -> Result<Self, ConstraintError> {
        if alphas.len() != betas.len() {
            return Err(ConstraintError::DimensionMismatch {
                expected: alphas.len(),
                got: betas.len(),
            });
        }
        for (color, (&alpha, &beta)) in alphas.iter().zip(&betas).enumerate() {
            if alpha > beta {
                return Err(ConstraintError::AlphaExceedsBeta { color, alpha, beta });
            }
        }
        let spec = BoundsSpec { alphas, betas, k };
        if let Some(k) = k {
            let (min, max) = (spec.alpha_sum(), spec.beta_sum());
            if (k as u64) < min || (k as u64) > max {
                return Err(ConstraintError::InfeasibleVertexCount { k, min, max });
            }
        }
        Ok(spec)
    }

    /// Every color bounded to exactly `value`.
    pub fn uniform(c: usize, value: u32) -> Self {
        BoundsSpec {
            alphas: vec![value; c],
            betas: vec![value; c],
            k: None,
        }
    }

    /// No constraint: `[0, cap]` for every color.
    pub fn unconstrained(c: usize, cap: u32) -> Self {
        BoundsSpec {
            alphas: vec![0; c],
            betas: vec![cap; c],
            k: None,
        }
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    pub fn betas(&self) -> &[u32] {
        &self.betas
    }

    pub fn vertex_count(&self) -> Option<u32> {
        self.k
    }

    pub fn num_colors(&self) -> usize {
        self.alphas.len()
    }

    pub fn alpha_sum(&self) -> u64 {
        self.alphas.iter().map(|&a| a as u64).sum()
    }

    pub fn beta_sum(&self) -> u64 {
        self.betas.iter().map(|&b| b as u64).sum()
    }

    pub fn check_dimension(&self, c: usize) -> Result<(), ConstraintError> {
        if self.alphas.len() == c {
            Ok(())
        } else {
            Err(ConstraintError::DimensionMismatch {
                expected: c,
                got: self.alphas.len(),
            })
        }
    }

    /// Bounds plus the exact vertex count when one is recorded.
    pub fn admits(&self, counts: &ColorCounts) -> bool {
        satisfies_bounds(counts, self).unwrap_or(false) && self.k.is_none_or(|k| counts.total() == k as u64)
    }
}

/// All colors occur equally often.
pub fn is_balance_fair(counts: &ColorCounts) -> bool {
    counts.as_slice().windows(2).all(|w| w[0] == w[1])
}

pub fn satisfies_bounds(counts: &ColorCounts, spec: &BoundsSpec) -> Result<bool, ConstraintError> {
    spec.check_dimension(counts.num_colors())?;
    Ok(counts
        .as_slice()
        .iter()
        .zip(spec.alphas.iter().zip(&spec.betas))
        .all(|(&x, (&a, &b))| a <= x && x <= b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxMinMode {
    /// most frequent minus least frequent ≤ slack
    Difference,
    /// most frequent ≤ slack · least frequent
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FairnessVariant {
    Balance,
    ExplicitBounds(BoundsSpec),
    MaxMin { slack: i64, mode: MaxMinMode },
    Proportional { slack: i64 },
    MarginOfVictory { slack: i64 },
}

impl FairnessVariant {
    /// Compiles the variant into bound vectors, guessing counts in `0..=max_vertices`.
    pub fn compile(&self, graph: &ColoredDigraph, max_vertices: u32) -> Result<Vec<BoundsSpec>, ConstraintError> {
        let c = graph.num_colors();
        match self {
            FairnessVariant::Balance => expand_maxmin(c, 0, MaxMinMode::Difference, 1..=max_vertices / c as u32),
            FairnessVariant::ExplicitBounds(spec) => {
                spec.check_dimension(c)?;
                Ok(vec![spec.clone()])
            }
            FairnessVariant::MaxMin { slack, mode } => expand_maxmin(c, *slack, *mode, 0..=max_vertices),
            FairnessVariant::Proportional { slack } => expand_proportional(graph, *slack, 1..=max_vertices),
            FairnessVariant::MarginOfVictory { slack } => Ok(expand_margin_of_victory(c, *slack, 0..=max_vertices)?
                .into_iter()
                .map(|(spec, _)| spec)
                .collect()),
        }
    }
}

fn check_slack(slack: i64, min: i64) -> Result<u32, ConstraintError> {
    if slack < min || slack > u32::MAX as i64 {
        Err(ConstraintError::InvalidSlack(slack))
    } else {
        Ok(slack as u32)
    }
}

/// One spec per guessed minimum `α`: all colors in `[α, α + slack]` or `[α, α·slack]`.
pub fn expand_maxmin(
    c: usize,
    slack: i64,
    mode: MaxMinMode,
    guesses: impl IntoIterator<Item = u32>,
) -> Result<Vec<BoundsSpec>, ConstraintError> {
    let slack = check_slack(
        slack,
        match mode {
            MaxMinMode::Difference => 0,
            MaxMinMode::Quotient => 1,
        },
    )?;
    Ok(guesses
        .into_iter()
        .map(|alpha| {
            let beta = match mode {
                MaxMinMode::Difference => alpha.saturating_add(slack),
                MaxMinMode::Quotient => alpha.saturating_mul(slack),
            };
            BoundsSpec {
                alphas: vec![alpha; c],
                betas: vec![beta; c],
                k: None,
            }
        })
        .collect())
}

/// One spec per guessed vertex count `k`, bounding each color around its
/// share `k·|χ^i|/n` by `floor - slack` and `ceil + slack`.
pub fn expand_proportional(
    graph: &ColoredDigraph,
    slack: i64,
    guesses: impl IntoIterator<Item = u32>,
) -> Result<Vec<BoundsSpec>, ConstraintError> {
    let slack = check_slack(slack, 0)? as u64;
    let n = graph.n() as u64;
    let sizes = graph.color_class_sizes();
    Ok(guesses
        .into_iter()
        .filter(|&k| k > 0 && n > 0)
        .map(|k| {
            let (alphas, betas) = sizes
                .iter()
                .map(|&size| {
                    let num = k as u64 * size as u64;
                    let floor = num / n;
                    let ceil = num.div_ceil(n);
                    (
                        floor.saturating_sub(slack) as u32,
                        (ceil + slack).min(u32::MAX as u64) as u32,
                    )
                })
                .unzip();
            BoundsSpec {
                alphas,
                betas,
                k: Some(k),
            }
        })
        .collect())
}

/// A margin-of-victory spec with its `(winner, runner-up)` colors.
pub type MarginSpec = (BoundsSpec, (Color, Color));

/// One spec per ordered color pair `(i, j)` and counts `x ≥ y` with
/// `x - y ≤ slack`: color `i` exactly `x`, color `j` exactly `y`, every other
/// color at most `y`.
pub fn expand_margin_of_victory(
    c: usize,
    slack: i64,
    counts: impl IntoIterator<Item = u32> + Clone,
) -> Result<Vec<MarginSpec>, ConstraintError> {
    if c < 2 {
        return Err(ConstraintError::NeedTwoColors);
    }
    let slack = check_slack(slack, 0)?;
    let mut out = Vec::new();
    for i in 0..c {
        for j in (0..c).filter(|&j| j != i) {
            for x in counts.clone() {
                for y in counts.clone() {
                    if y > x || x - y > slack {
                        continue;
                    }
                    let mut alphas = vec![0; c];
                    let mut betas = vec![y; c];
                    alphas[i] = x;
                    betas[i] = x;
                    alphas[j] = y;
                    out.push((BoundsSpec { alphas, betas, k: None }, (i, j)));
                }
            }
        }
    }
    Ok(out)
}
