//! Exact-distance dynamic program over the shortest-path DAG.
//!
//! For every vertex `v` the table records which color-count vectors are
//! realized by some shortest `s`-`v` path. Vertices are settled in
//! nondecreasing distance (ties by id) and only arcs of the shortest-path DAG
//! are relaxed, so a tuple at `v` is extended from tuples at in-neighbors
//! that precede `v` on a shortest path. Tables are sparse maps rather than
//! the dense `n^c` array.

use indexmap::IndexMap;

use crate::constraints::{is_balance_fair, BoundsSpec};
use crate::graph::{dijkstra_dist, shortest_dag_arcs, ColorCounts, ColoredDigraph, Distances, Path, Vertex};
use crate::result::{check_endpoints, NoReason, SolveError, SolveResult, SolverKind};

/// Back-pointer for one tuple: the previous vertex and the index of the
/// tuple there, or `None` at the source.
pub type Pred = Option<(Vertex, usize)>;

#[derive(Debug, Clone)]
pub struct DpTable {
    source: Vertex,
    dist: Distances,
    cells: Vec<IndexMap<Vec<u32>, Pred>>,
}

impl DpTable {
    /// Fills the table for every vertex reachable from `s`.
    pub fn build(graph: &ColoredDigraph, s: Vertex) -> Result<DpTable, SolveError> {
        if s >= graph.n() {
            return Err(SolveError::UnknownVertex(s));
        }
        let dist = dijkstra_dist(graph, s)?;
        let mut in_dag = vec![false; graph.m()];
        for a in shortest_dag_arcs(graph, &dist) {
            in_dag[a] = true;
        }
        let c = graph.num_colors();
        let mut cells: Vec<IndexMap<Vec<u32>, Pred>> = vec![IndexMap::new(); graph.n()];
        let mut root = vec![0u32; c];
        root[graph.color(s)] = 1;
        cells[s].insert(root, None);

        for v in dist.settle_order() {
            if v == s {
                continue;
            }
            let color = graph.color(v);
            let mut cell = IndexMap::new();
            for &a in graph.in_arcs(v) {
                if !in_dag[a] {
                    continue;
                }
                let u = graph.arc(a).tail;
                for (index, tuple) in cells[u].keys().enumerate() {
                    let mut next = tuple.clone();
                    next[color] += 1;
                    // first writer wins
                    cell.entry(next).or_insert(Some((u, index)));
                }
            }
            cells[v] = cell;
        }
        Ok(DpTable { source: s, dist, cells })
    }

    pub fn distances(&self) -> &Distances {
        &self.dist
    }

    /// Count vectors realized by shortest `s`-`v` paths, in insertion order.
    pub fn tuples(&self, v: Vertex) -> impl Iterator<Item = &[u32]> {
        self.cells[v].keys().map(Vec::as_slice)
    }

    pub fn len_at(&self, v: Vertex) -> usize {
        self.cells[v].len()
    }

    pub fn contains(&self, v: Vertex, counts: &[u32]) -> bool {
        self.cells[v].contains_key(counts)
    }

    /// Walks predecessor records from the `index`-th tuple at `v` back to the source.
    pub fn witness(&self, graph: &ColoredDigraph, v: Vertex, index: usize) -> Result<Path, SolveError> {
        let mut vertices = vec![v];
        let (mut at, mut idx) = (v, index);
        loop {
            let (_, pred) = self.cells[at]
                .get_index(idx)
                .ok_or_else(|| SolveError::CorruptTable(format!("no tuple {idx} at vertex {at}")))?;
            match *pred {
                Some((u, j)) => {
                    vertices.push(u);
                    at = u;
                    idx = j;
                }
                None if at == self.source => break,
                None => {
                    return Err(SolveError::CorruptTable(format!(
                        "root marker at non-source vertex {at}"
                    )))
                }
            }
        }
        vertices.reverse();
        Path::from_vertices(graph, vertices).map_err(|e| SolveError::CorruptTable(e.to_string()))
    }

    /// First tuple at `t` accepted by `accept`, with its witness.
    fn find(
        &self,
        graph: &ColoredDigraph,
        t: Vertex,
        mut accept: impl FnMut(&ColorCounts) -> bool,
    ) -> Result<Option<(Path, ColorCounts)>, SolveError> {
        for (index, tuple) in self.cells[t].keys().enumerate() {
            let counts = ColorCounts(tuple.clone());
            if accept(&counts) {
                let path = self.witness(graph, t, index)?;
                return Ok(Some((path, counts)));
            }
        }
        Ok(None)
    }
}

fn answer(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    accept: impl FnMut(&ColorCounts) -> bool,
) -> Result<SolveResult, SolveError> {
    check_endpoints(graph.n(), s, t)?;
    let table = DpTable::build(graph, s)?;
    if table.distances().get(t).is_none() {
        return Ok(SolveResult::no(SolverKind::Dp, NoReason::Unreachable));
    }
    Ok(match table.find(graph, t, accept)? {
        Some((path, counts)) => SolveResult::yes(SolverKind::Dp, path, counts),
        None => SolveResult::no(SolverKind::Dp, NoReason::NoFeasiblePath),
    })
}

/// Is some shortest `s`-`t` path within the bounds of `spec`?
pub fn solve_exact_distance(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    spec: &BoundsSpec,
) -> Result<SolveResult, SolveError> {
    solve_exact_distance_any(graph, s, t, std::slice::from_ref(spec))
}

/// Like [`solve_exact_distance`], accepting a path admitted by any of `specs`.
/// The table is built once.
pub fn solve_exact_distance_any(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    specs: &[BoundsSpec],
) -> Result<SolveResult, SolveError> {
    for spec in specs {
        spec.check_dimension(graph.num_colors())?;
    }
    answer(graph, s, t, |counts| specs.iter().any(|spec| spec.admits(counts)))
}

/// Is some shortest `s`-`t` path balance-fair?
pub fn solve_balance_fair(graph: &ColoredDigraph, s: Vertex, t: Vertex) -> Result<SolveResult, SolveError> {
    answer(graph, s, t, is_balance_fair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::satisfies_bounds;
    use crate::graph::color_counts;
    use crate::testkit::{enumerate_paths, figure_one, random_instance, EnumerateOptions, GeneratorConfig};
    use std::collections::BTreeSet;

    #[test]
    fn figure_one_exact_bounds() {
        let (g, s, t) = figure_one();
        let r = solve_exact_distance(&g, s, t, &BoundsSpec::uniform(2, 5)).unwrap();
        assert!(r.decision);
        let w = r.witness.unwrap();
        assert_eq!(w.length(), 9);
        assert_eq!(color_counts(&g, &w).as_slice(), &[5, 5]);
        assert!(solve_balance_fair(&g, s, t).unwrap().decision);
    }

    #[test]
    fn absent_color_is_no() {
        let g = ColoredDigraph::new(3, 2, [(0, 1, 1), (1, 2, 1)], vec![0; 3]).unwrap();
        let spec = BoundsSpec::new(vec![0, 1], vec![3, 3], None).unwrap();
        let r = solve_exact_distance(&g, 0, 2, &spec).unwrap();
        assert!(!r.decision);
        assert_eq!(r.reason, Some(NoReason::NoFeasiblePath));
    }

    #[test]
    fn two_vertex_same_color_not_balanced() {
        let g = ColoredDigraph::new(2, 2, [(0, 1, 1)], vec![0, 0]).unwrap();
        assert!(!solve_balance_fair(&g, 0, 1).unwrap().decision);
    }

    #[test]
    fn unreachable_and_degenerate_queries() {
        let g = ColoredDigraph::new(2, 1, [], vec![0, 0]).unwrap();
        let r = solve_balance_fair(&g, 0, 1).unwrap();
        assert_eq!(r.reason, Some(NoReason::Unreachable));
        assert_eq!(solve_balance_fair(&g, 1, 1), Err(SolveError::SourceEqualsTarget(1)));
        assert!(matches!(
            solve_exact_distance(&g, 0, 1, &BoundsSpec::uniform(3, 1)),
            Err(SolveError::Constraint(_))
        ));
    }

    #[test]
    fn table_matches_enumerated_shortest_paths() {
        for seed in 0..150u64 {
            let config = GeneratorConfig {
                seed,
                n: 4 + (seed % 9) as usize,
                c: 1 + (seed % 3) as usize,
                density: 0.35,
                max_weight: 2,
                ..GeneratorConfig::default()
            };
            let inst = random_instance(&config);
            let g = &inst.graph;
            let table = DpTable::build(g, inst.source).unwrap();
            for v in 0..g.n() {
                let expected: BTreeSet<Vec<u32>> = match table.distances().get(v) {
                    None => BTreeSet::new(),
                    Some(d) => {
                        let opts = EnumerateOptions {
                            max_vertices: g.n(),
                            max_length: Some(d),
                            ..EnumerateOptions::default()
                        };
                        enumerate_paths(g, inst.source, v, &opts, |_, _| true)
                            .paths
                            .iter()
                            .map(|p| color_counts(g, p).0)
                            .collect()
                    }
                };
                let got: BTreeSet<Vec<u32>> = table.tuples(v).map(<[u32]>::to_vec).collect();
                assert_eq!(got.len(), table.len_at(v));
                assert_eq!(got, expected, "seed {seed} vertex {v}");
                for index in 0..table.len_at(v) {
                    let w = table.witness(g, v, index).unwrap();
                    assert_eq!(Some(w.length()), table.distances().get(v));
                    let tuple = table.tuples(v).nth(index).unwrap();
                    assert_eq!(color_counts(g, &w).as_slice(), tuple);
                }
            }
        }
    }

    #[test]
    fn witnesses_satisfy_query() {
        for seed in 0..100u64 {
            let inst = random_instance(&GeneratorConfig {
                seed,
                n: 10,
                c: 2,
                ..GeneratorConfig::default()
            });
            let r = solve_exact_distance(&inst.graph, inst.source, inst.target, &inst.bounds).unwrap();
            if let Some(w) = &r.witness {
                let dist = dijkstra_dist(&inst.graph, inst.source).unwrap();
                assert_eq!(Some(w.length()), dist.get(inst.target));
                assert!(satisfies_bounds(&color_counts(&inst.graph, w), &inst.bounds).unwrap());
                assert_eq!((w.start(), w.end()), (inst.source, inst.target));
            }
        }
    }
}
