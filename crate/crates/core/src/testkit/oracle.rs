//! Brute-force path enumeration and the oracles built on it.

use crate::constraints::{is_balance_fair, BoundsSpec};
use crate::graph::{dijkstra_dist, ColorCounts, ColoredDigraph, Path, Vertex};
use crate::result::{check_endpoints, NoReason, SolveError, SolveResult, SolverKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Longest path considered, in vertices.
    pub max_vertices: usize,
    /// Longest path considered, in total arc length.
    pub max_length: Option<u64>,
    /// Stop after this many accepted paths.
    pub max_paths: Option<usize>,
    /// Search steps before giving up; hitting it sets `truncated`.
    pub max_steps: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_vertices: 20,
            max_length: None,
            max_paths: None,
            max_steps: 20_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub paths: Vec<Path>,
    /// The step cap was hit, so `paths` may be incomplete.
    pub truncated: bool,
}

/// Distinct successors of each vertex with the shortest parallel arc.
fn successors(graph: &ColoredDigraph) -> Vec<Vec<(Vertex, u64)>> {
    (0..graph.n())
        .map(|u| {
            let mut out: Vec<(Vertex, u64)> = Vec::new();
            for &a in graph.out_arcs(u) {
                let arc = graph.arc(a);
                match out.iter_mut().find(|(v, _)| *v == arc.head) {
                    Some(entry) => entry.1 = entry.1.min(arc.length),
                    None => out.push((arc.head, arc.length)),
                }
            }
            out.sort_unstable();
            out
        })
        .collect()
}

struct Search<'a, F> {
    graph: &'a ColoredDigraph,
    succ: Vec<Vec<(Vertex, u64)>>,
    target: Vertex,
    opts: &'a EnumerateOptions,
    keep: F,
    on_path: Vec<bool>,
    stack: Vec<Vertex>,
    counts: Vec<u32>,
    steps: u64,
    found: Vec<Path>,
    truncated: bool,
    done: bool,
}

impl<F: FnMut(&Path, &ColorCounts) -> bool> Search<'_, F> {
    fn visit(&mut self, u: Vertex, length: u64) {
        if u == self.target {
            let path = Path::from_vertices(self.graph, self.stack.clone()).expect("search keeps paths simple");
            let counts = ColorCounts(self.counts.clone());
            if (self.keep)(&path, &counts) {
                self.found.push(path);
                if self.opts.max_paths.is_some_and(|cap| self.found.len() >= cap) {
                    self.done = true;
                }
            }
            return;
        }
        if self.stack.len() >= self.opts.max_vertices {
            return;
        }
        for i in 0..self.succ[u].len() {
            if self.done {
                return;
            }
            let (v, w) = self.succ[u][i];
            if self.on_path[v] {
                continue;
            }
            let Some(next) = length.checked_add(w) else { continue };
            if self.opts.max_length.is_some_and(|cap| next > cap) {
                continue;
            }
            self.steps += 1;
            if self.steps > self.opts.max_steps {
                self.truncated = true;
                self.done = true;
                return;
            }
            self.on_path[v] = true;
            self.stack.push(v);
            self.counts[self.graph.color(v)] += 1;
            self.visit(v, next);
            self.counts[self.graph.color(v)] -= 1;
            self.stack.pop();
            self.on_path[v] = false;
        }
    }
}

/// Depth-first enumeration of simple `s`-`t` paths within the caps, keeping
/// those accepted by `keep`. Paths are distinct vertex sequences; parallel
/// arcs contribute their shortest member.
pub fn enumerate_paths(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    opts: &EnumerateOptions,
    keep: impl FnMut(&Path, &ColorCounts) -> bool,
) -> Enumeration {
    let mut counts = vec![0; graph.num_colors()];
    counts[graph.color(s)] += 1;
    let mut on_path = vec![false; graph.n()];
    on_path[s] = true;
    let mut search = Search {
        graph,
        succ: successors(graph),
        target: t,
        opts,
        keep,
        on_path,
        stack: vec![s],
        counts,
        steps: 0,
        found: Vec::new(),
        truncated: false,
        done: false,
    };
    if opts.max_vertices >= 1 {
        search.visit(s, 0);
    }
    Enumeration {
        paths: search.found,
        truncated: search.truncated,
    }
}

/// Number of distinct `s`-`t` vertex sequences in an acyclic graph; `None` on a cycle.
pub fn count_dag_paths(graph: &ColoredDigraph, s: Vertex, t: Vertex) -> Option<u128> {
    let succ = successors(graph);
    let mut indegree = vec![0usize; graph.n()];
    for list in &succ {
        for &(v, _) in list {
            indegree[v] += 1;
        }
    }
    let mut order: Vec<Vertex> = (0..graph.n()).filter(|&v| indegree[v] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &(v, _) in &succ[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                order.push(v);
            }
        }
    }
    if order.len() != graph.n() {
        return None;
    }
    let mut ways = vec![0u128; graph.n()];
    ways[s] = 1;
    for &u in &order {
        for &(v, _) in &succ[u] {
            ways[v] += ways[u];
        }
    }
    Some(ways[t])
}

fn first_accepted(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    max_length: u64,
    mut accept: impl FnMut(&ColorCounts) -> bool,
) -> Enumeration {
    let opts = EnumerateOptions {
        max_vertices: graph.n(),
        max_length: Some(max_length),
        max_paths: Some(1),
        ..EnumerateOptions::default()
    };
    enumerate_paths(graph, s, t, &opts, |_, counts| accept(counts))
}

fn to_result(graph: &ColoredDigraph, found: Enumeration, fallback: NoReason) -> SolveResult {
    match found.paths.into_iter().next() {
        Some(path) => {
            let counts = ColorCounts::of_vertices(graph, path.vertices());
            SolveResult::yes(SolverKind::Oracle, path, counts)
        }
        None if found.truncated => SolveResult::no(SolverKind::Oracle, NoReason::Truncated),
        None => SolveResult::no(SolverKind::Oracle, fallback),
    }
}

/// Brute force: is some `s`-`t` path of length at most `ell` within `spec`?
pub fn oracle_solve(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    spec: &BoundsSpec,
    ell: u64,
) -> Result<SolveResult, SolveError> {
    check_endpoints(graph.n(), s, t)?;
    spec.check_dimension(graph.num_colors())?;
    let reason = match dijkstra_dist(graph, s)?.get(t) {
        None => return Ok(SolveResult::no(SolverKind::Oracle, NoReason::Unreachable)),
        Some(d) if d > ell => return Ok(SolveResult::no(SolverKind::Oracle, NoReason::BudgetTooSmall)),
        Some(_) => NoReason::NoFeasiblePath,
    };
    Ok(to_result(
        graph,
        first_accepted(graph, s, t, ell, |c| spec.admits(c)),
        reason,
    ))
}

fn oracle_shortest(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    accept: impl FnMut(&ColorCounts) -> bool,
) -> Result<SolveResult, SolveError> {
    check_endpoints(graph.n(), s, t)?;
    match dijkstra_dist(graph, s)?.get(t) {
        None => Ok(SolveResult::no(SolverKind::Oracle, NoReason::Unreachable)),
        Some(d) => Ok(to_result(
            graph,
            first_accepted(graph, s, t, d, accept),
            NoReason::NoFeasiblePath,
        )),
    }
}

/// Brute force: is some shortest `s`-`t` path within `spec`?
pub fn oracle_exact_distance(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    spec: &BoundsSpec,
) -> Result<SolveResult, SolveError> {
    spec.check_dimension(graph.num_colors())?;
    oracle_shortest(graph, s, t, |c| spec.admits(c))
}

/// Brute force: is some shortest `s`-`t` path balance-fair?
pub fn oracle_balance_fair(graph: &ColoredDigraph, s: Vertex, t: Vertex) -> Result<SolveResult, SolveError> {
    oracle_shortest(graph, s, t, is_balance_fair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shortest_dag_arcs;
    use crate::testkit::{figure_one, random_instance, GeneratorConfig};

    #[test]
    fn unreachable_target_gives_nothing() {
        let g = ColoredDigraph::new(3, 1, [(0, 1, 1)], vec![0; 3]).unwrap();
        let e = enumerate_paths(&g, 0, 2, &EnumerateOptions::default(), |_, _| true);
        assert!(e.paths.is_empty() && !e.truncated);
    }

    #[test]
    fn figure_one_balanced_shortest_exists() {
        let (g, s, t) = figure_one();
        let r = oracle_balance_fair(&g, s, t).unwrap();
        assert!(r.decision);
        assert_eq!(r.counts.unwrap().as_slice(), &[5, 5]);
    }

    #[test]
    fn step_cap_flags_truncation() {
        let (g, s, t) = figure_one();
        let opts = EnumerateOptions {
            max_steps: 5,
            ..EnumerateOptions::default()
        };
        assert!(enumerate_paths(&g, s, t, &opts, |_, _| true).truncated);
    }

    #[test]
    fn counts_agree_with_dag_dynamic_program() {
        for seed in 0..60 {
            let inst = random_instance(&GeneratorConfig {
                seed,
                n: 9,
                density: 0.3,
                ..GeneratorConfig::default()
            });
            let g = &inst.graph;
            // restrict to the shortest-path DAG, which is acyclic
            let dist = dijkstra_dist(g, inst.source).unwrap();
            let dag_arcs: Vec<_> = shortest_dag_arcs(g, &dist)
                .into_iter()
                .map(|a| {
                    let arc = g.arc(a);
                    (arc.tail, arc.head, arc.length)
                })
                .collect();
            let dag = ColoredDigraph::new(g.n(), g.num_colors(), dag_arcs, g.colors().to_vec()).unwrap();
            for v in 0..g.n() {
                if v == inst.source {
                    continue;
                }
                let all = enumerate_paths(&dag, inst.source, v, &EnumerateOptions::default(), |_, _| true);
                assert_eq!(Some(all.paths.len() as u128), count_dag_paths(&dag, inst.source, v));
            }
        }
    }

    #[test]
    fn enumerated_paths_are_valid_and_minimal_distance_matches() {
        for seed in 0..60 {
            let inst = random_instance(&GeneratorConfig {
                seed,
                n: 8,
                ..GeneratorConfig::default()
            });
            let g = &inst.graph;
            let dist = dijkstra_dist(g, inst.source).unwrap();
            for v in (0..g.n()).filter(|&v| v != inst.source) {
                let all = enumerate_paths(g, inst.source, v, &EnumerateOptions::default(), |_, _| true);
                let best = all.paths.iter().map(Path::length).min();
                assert_eq!(best, dist.get(v));
                for p in &all.paths {
                    assert_eq!((p.start(), p.end()), (inst.source, v));
                }
            }
        }
    }
}
