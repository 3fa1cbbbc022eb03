//! Randomized fixed-parameter solver for short paths under per-color bounds.
//!
//! For each guessed vertex count `k` the bounds matroid of rank `k` is
//! represented over `F_p`, and a table of vertex sets is grown one vertex per
//! level: level `p` at `v` holds `p`-sets `X ∋ s, v` realized by an `s`-`v`
//! path on exactly `X`, independent in the matroid, each with the length of
//! its stored realization. Every cell is pruned to a min-`(k-p)`-representative
//! subfamily, so it never holds more than `C(k, p)` sets. A stored `k`-set at
//! `t` of weight at most `ℓ` is a path meeting every bound.
//!
//! Answers are one-sided: a yes always carries a verified witness, a no may be
//! wrong with probability at most `ε`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::constraints::BoundsSpec;
use crate::field::{Field, Fp61};
use crate::graph::{color_counts, dijkstra_dist, dijkstra_dist_to, ColoredDigraph, Distances, Path, Vertex};
use crate::linalg::Matrix;
use crate::matroid::{build_gammoid, represent_stream, BoundsMatroid};
use crate::repfam::{select_by_span, WedgeExtender};
use crate::result::{check_endpoints, NoReason, SolveError, SolveResult, SolverKind};

/// One stored set with the realization that produced it.
#[derive(Debug, Clone)]
pub struct RepEntry<F> {
    set: Vec<Vertex>,
    weight: u64,
    pred: Option<(Vertex, usize)>,
    wedge: Vec<F>,
}

impl<F> RepEntry<F> {
    /// The vertex set, sorted.
    pub fn set(&self) -> &[Vertex] {
        &self.set
    }

    /// Length of the stored realization.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Previous vertex and the index of the shorter set there; `None` for `{s}`.
    pub fn pred(&self) -> Option<(Vertex, usize)> {
        self.pred
    }
}

/// Discards sets that cannot finish within the length budget.
#[derive(Debug, Clone)]
pub struct Pruning {
    pub ell: u64,
    pub target: Vertex,
    pub to_target: Distances,
}

impl Pruning {
    pub fn new(graph: &ColoredDigraph, t: Vertex, ell: u64) -> Result<Self, SolveError> {
        Ok(Pruning {
            ell,
            target: t,
            to_target: dijkstra_dist_to(graph, t)?,
        })
    }

    fn admits(&self, v: Vertex, weight: u64) -> bool {
        self.to_target
            .get(v)
            .and_then(|d| d.checked_add(weight))
            .is_some_and(|total| total <= self.ell)
    }
}

/// Per-level, per-vertex representative families.
#[derive(Debug, Clone)]
pub struct RepTable<F> {
    source: Vertex,
    k: usize,
    /// `levels[p - 1][v]`
    levels: Vec<Vec<Vec<RepEntry<F>>>>,
}

impl<F: Field + Send + Sync> RepTable<F> {
    /// Fills levels `1..=k`, where `k` is the row count of `matrix`.
    pub fn build(graph: &ColoredDigraph, s: Vertex, matrix: &Matrix<F>, pruning: Option<&Pruning>) -> Self {
        let k = matrix.rows();
        let n = graph.n();
        let mut first = vec![Vec::new(); n];
        let wedge = matrix.column(s);
        if wedge.iter().any(|x| !x.is_zero()) && pruning.is_none_or(|pr| pr.admits(s, 0)) {
            first[s].push(RepEntry {
                set: vec![s],
                weight: 0,
                pred: None,
                wedge,
            });
        }
        let mut levels = vec![first];
        for p in 2..=k {
            let ext = WedgeExtender::new(k, p);
            let prev = levels.last().unwrap();
            let next: Vec<Vec<RepEntry<F>>> = (0..n)
                .into_par_iter()
                .map(|v| build_cell(graph, matrix, &ext, prev, v, p == k, pruning))
                .collect();
            levels.push(next);
        }
        RepTable { source: s, k, levels }
    }
}

impl<F> RepTable<F> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    /// The family stored for `p`-sets ending at `v`.
    pub fn family(&self, p: usize, v: Vertex) -> &[RepEntry<F>] {
        &self.levels[p - 1][v]
    }
}

struct Candidate {
    set: Vec<Vertex>,
    weight: u64,
    pred: (Vertex, usize),
}

fn build_cell<F: Field>(
    graph: &ColoredDigraph,
    matrix: &Matrix<F>,
    ext: &WedgeExtender,
    prev: &[Vec<RepEntry<F>>],
    v: Vertex,
    last_level: bool,
    pruning: Option<&Pruning>,
) -> Vec<RepEntry<F>> {
    if let Some(pr) = pruning {
        // t ends every path, so only the last level needs it and only it
        if (v == pr.target) != last_level {
            return Vec::new();
        }
    }
    let mut index: HashMap<Vec<Vertex>, usize> = HashMap::new();
    let mut cands: Vec<Candidate> = Vec::new();
    for &a in graph.in_arcs(v) {
        let arc = graph.arc(a);
        for (j, entry) in prev[arc.tail].iter().enumerate() {
            let Err(pos) = entry.set.binary_search(&v) else {
                continue;
            };
            let Some(weight) = entry.weight.checked_add(arc.length) else {
                continue;
            };
            if pruning.is_some_and(|pr| !pr.admits(v, weight)) {
                continue;
            }
            let mut set = entry.set.clone();
            set.insert(pos, v);
            match index.get(&set) {
                // earlier candidates win ties
                Some(&i) if cands[i].weight <= weight => {}
                Some(&i) => {
                    cands[i].weight = weight;
                    cands[i].pred = (arc.tail, j);
                }
                None => {
                    index.insert(set.clone(), cands.len());
                    cands.push(Candidate {
                        set,
                        weight,
                        pred: (arc.tail, j),
                    });
                }
            }
        }
    }
    let mut kept_cands = Vec::new();
    let mut wedges = Vec::new();
    let mut weights = Vec::new();
    for cand in cands {
        let (u, j) = cand.pred;
        let wedge = ext.extend(matrix, &prev[u][j].wedge, v);
        // zero wedge vector: the set is dependent
        if wedge.iter().all(|x| x.is_zero()) {
            continue;
        }
        wedges.push(wedge);
        weights.push(cand.weight);
        kept_cands.push(cand);
    }
    let kept = select_by_span(&wedges, &weights, ext.dim());
    let mut wedges: Vec<Option<Vec<F>>> = wedges.into_iter().map(Some).collect();
    kept.into_iter()
        .map(|i| RepEntry {
            set: kept_cands[i].set.clone(),
            weight: kept_cands[i].weight,
            pred: Some(kept_cands[i].pred),
            wedge: wedges[i].take().unwrap(),
        })
        .collect()
}

/// Follows predecessor records from the `index`-th set at `(p, v)` back to `{s}`.
pub fn reconstruct_witness<F>(
    graph: &ColoredDigraph,
    table: &RepTable<F>,
    p: usize,
    v: Vertex,
    index: usize,
) -> Result<Path, SolveError> {
    let corrupt = |msg: String| SolveError::CorruptTable(msg);
    let top = table
        .levels
        .get(p.wrapping_sub(1))
        .and_then(|level| level.get(v))
        .and_then(|cell| cell.get(index))
        .ok_or_else(|| corrupt(format!("no set {index} at level {p}, vertex {v}")))?;
    let mut vertices = vec![v];
    let (mut level, mut at, mut idx) = (p, v, index);
    loop {
        let entry = table.levels[level - 1][at]
            .get(idx)
            .ok_or_else(|| corrupt(format!("no set {idx} at level {level}, vertex {at}")))?;
        match entry.pred {
            Some((u, j)) if level > 1 => {
                vertices.push(u);
                level -= 1;
                at = u;
                idx = j;
            }
            None if level == 1 && at == table.source => break,
            _ => return Err(corrupt(format!("bad predecessor at level {level}, vertex {at}"))),
        }
    }
    vertices.reverse();
    let path = Path::from_vertices(graph, vertices).map_err(|e| corrupt(e.to_string()))?;
    let mut sorted = path.vertices().to_vec();
    sorted.sort_unstable();
    if sorted != top.set || path.length() != top.weight {
        return Err(corrupt(format!(
            "walk disagrees with the set stored at level {p}, vertex {v}"
        )));
    }
    Ok(path)
}

/// Solver parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FptOptions {
    pub ell: u64,
    pub epsilon: f64,
    pub seed: u64,
    /// Drop sets that cannot reach `t` within `ell`.
    pub budget_pruning: bool,
}

impl FptOptions {
    pub fn new(ell: u64, epsilon: f64, seed: u64) -> Self {
        FptOptions {
            ell,
            epsilon,
            seed,
            budget_pruning: true,
        }
    }
}

/// Vertex counts worth trying: at least `max(2, Σα)`, at most `ℓ + 1`, `n`,
/// and `Σ min(β_i, |χ^i|)`, restricted to the spec's exact count if set.
pub fn candidate_vertex_counts(graph: &ColoredDigraph, spec: &BoundsSpec, ell: u64) -> std::ops::RangeInclusive<usize> {
    let sizes = graph.color_class_sizes();
    let cap: u64 = spec
        .betas()
        .iter()
        .zip(&sizes)
        .map(|(&b, &s)| (b as u64).min(s as u64))
        .sum();
    let mut lo = spec.alpha_sum().max(2);
    let mut hi = ell.saturating_add(1).min(cap).min(graph.n() as u64);
    if let Some(k) = spec.vertex_count() {
        lo = lo.max(k as u64);
        hi = hi.min(k as u64);
    }
    lo as usize..=hi as usize
}

/// Is there an `s`-`t` path of length at most `ell` within the bounds of `spec`?
pub fn fpt_solve(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    spec: &BoundsSpec,
    ell: u64,
    epsilon: f64,
    seed: u64,
) -> Result<SolveResult, SolveError> {
    fpt_solve_with(graph, s, t, spec, &FptOptions::new(ell, epsilon, seed))
}

pub fn fpt_solve_with(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    spec: &BoundsSpec,
    opts: &FptOptions,
) -> Result<SolveResult, SolveError> {
    check_endpoints(graph.n(), s, t)?;
    spec.check_dimension(graph.num_colors())?;
    if opts.ell == 0 {
        return Err(SolveError::ZeroBudget);
    }
    if !(opts.epsilon > 0.0 && opts.epsilon < 1.0) {
        return Err(SolveError::EpsilonOutOfRange(opts.epsilon));
    }
    let no = |reason| Ok(SolveResult::no(SolverKind::Fpt, reason).with_randomness(opts.seed, opts.epsilon));
    match dijkstra_dist(graph, s)?.get(t) {
        None => return no(NoReason::Unreachable),
        Some(d) if d > opts.ell => return no(NoReason::BudgetTooSmall),
        Some(_) => {}
    }
    let ks = candidate_vertex_counts(graph, spec, opts.ell);
    if ks.is_empty() {
        return no(NoReason::InfeasibleBounds);
    }
    let per_k = opts.epsilon / ks.clone().count() as f64;
    let pruning = if opts.budget_pruning {
        Some(Pruning::new(graph, t, opts.ell)?)
    } else {
        None
    };
    let mut any_basis = false;
    for k in ks {
        let matroid = BoundsMatroid::for_graph(graph, spec, k)?.normalized();
        if !matroid.has_basis() {
            continue;
        }
        any_basis = true;
        let rep = represent_stream(&build_gammoid(&matroid)?, per_k, opts.seed, k as u64)?;
        let table: RepTable<Fp61> = RepTable::build(graph, s, &rep.matrix, pruning.as_ref());
        let best = table
            .family(k, t)
            .iter()
            .enumerate()
            .filter(|(_, e)| e.weight <= opts.ell)
            .min_by_key(|(i, e)| (e.weight, *i));
        if let Some((index, _)) = best {
            let path = reconstruct_witness(graph, &table, k, t, index)?;
            let counts = color_counts(graph, &path);
            if path.start() != s || path.end() != t || path.length() > opts.ell || !spec.admits(&counts) {
                return Err(SolveError::CorruptTable(format!(
                    "witness {:?} fails the query",
                    path.vertices()
                )));
            }
            return Ok(SolveResult::yes(SolverKind::Fpt, path, counts).with_randomness(opts.seed, opts.epsilon));
        }
    }
    no(if any_basis {
        NoReason::NoFeasiblePath
    } else {
        NoReason::InfeasibleBounds
    })
}
