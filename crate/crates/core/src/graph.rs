//! Vertex-colored directed graphs with positive integer arc lengths.
//!
//! Vertices are `0..n` and colors are `0..c` throughout the in-process API;
//! the text formats in [`crate::format`] shift both to 1-based ids.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Color = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("arc {index} ({tail} -> {head}) has length 0; lengths must be positive")]
    ZeroOrNegativeLength { index: usize, tail: Vertex, head: Vertex },
    #[error("vertex {vertex} has color {color}, outside 0..{c}")]
    ColorOutOfRange { vertex: Vertex, color: Color, c: usize },
    #[error("vertex id {id} is not in 0..{n}")]
    DanglingVertexId { id: Vertex, n: usize },
    #[error("expected {n} vertex colors, got {got}")]
    ColorVectorLength { n: usize, got: usize },
    #[error("a graph needs at least one color")]
    NoColors,
    #[error("distance from the source overflows u64")]
    DistanceOverflow,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("a path needs at least one vertex")]
    Empty,
    #[error("vertex {0} repeats on the path")]
    RepeatedVertex(Vertex),
    #[error("no arc {0} -> {1}")]
    MissingArc(Vertex, Vertex),
    #[error("vertex id {0} is out of range")]
    UnknownVertex(Vertex),
    #[error("path length overflows u64")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: Vertex,
    pub head: Vertex,
    pub length: u64,
}

/// Immutable colored digraph with in- and out-adjacency indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDigraph {
    c: usize,
    arcs: Vec<Arc>,
    colors: Vec<Color>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
}

impl ColoredDigraph {
    /// Validates and indexes a graph. `colors[v]` is the color of vertex `v`.
    pub fn new(
        n: usize,
        c: usize,
        arcs: impl IntoIterator<Item = (Vertex, Vertex, u64)>,
        colors: Vec<Color>,
    ) -> Result<Self, GraphError> {
        if c == 0 {
            return Err(GraphError::NoColors);
        }
        if colors.len() != n {
            return Err(GraphError::ColorVectorLength { n, got: colors.len() });
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &col)| col >= c) {
            return Err(GraphError::ColorOutOfRange { vertex, color, c });
        }
        let mut out_arcs = vec![Vec::new(); n];
        let mut in_arcs = vec![Vec::new(); n];
        let mut stored = Vec::new();
        for (index, (tail, head, length)) in arcs.into_iter().enumerate() {
            for id in [tail, head] {
                if id >= n {
                    return Err(GraphError::DanglingVertexId { id, n });
                }
            }
            if length == 0 {
                return Err(GraphError::ZeroOrNegativeLength { index, tail, head });
            }
            out_arcs[tail].push(index);
            in_arcs[head].push(index);
            stored.push(Arc { tail, head, length });
        }
        Ok(ColoredDigraph {
            c,
            arcs: stored,
            colors,
            out_arcs,
            in_arcs,
        })
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn num_colors(&self) -> usize {
        self.c
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Indices of arcs leaving `v`, in insertion order.
    pub fn out_arcs(&self, v: Vertex) -> &[usize] {
        &self.out_arcs[v]
    }

    /// Indices of arcs entering `v`, in insertion order.
    pub fn in_arcs(&self, v: Vertex) -> &[usize] {
        &self.in_arcs[v]
    }

    /// Shortest of the parallel arcs `u -> v`, if any.
    pub fn min_arc_length(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.out_arcs[u]
            .iter()
            .map(|&a| self.arcs[a])
            .filter(|a| a.head == v)
            .map(|a| a.length)
            .min()
    }

    /// `|χ^i|` for every color `i`.
    pub fn color_class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.c];
        for &col in &self.colors {
            sizes[col] += 1;
        }
        sizes
    }
}

/// Single-source distances; `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distances(Vec<Option<u64>>);

impl Distances {
    pub fn get(&self, v: Vertex) -> Option<u64> {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[Option<u64>] {
        &self.0
    }

    /// Reachable vertices in nondecreasing distance, ties by ascending id.
    pub fn settle_order(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..self.0.len()).filter(|&v| self.0[v].is_some()).collect();
        order.sort_by_key(|&v| (self.0[v], v));
        order
    }
}

/// Dijkstra from `s`. Distance sums are overflow-checked.
pub fn dijkstra_dist(graph: &ColoredDigraph, s: Vertex) -> Result<Distances, GraphError> {
    let mut dist: Vec<Option<u64>> = vec![None; graph.n()];
    let mut heap = BinaryHeap::new();
    dist[s] = Some(0);
    heap.push(Reverse((0u64, s)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u] != Some(d) {
            continue;
        }
        for &a in graph.out_arcs(u) {
            let arc = graph.arc(a);
            let nd = d.checked_add(arc.length).ok_or(GraphError::DistanceOverflow)?;
            if dist[arc.head].is_none_or(|old| nd < old) {
                dist[arc.head] = Some(nd);
                heap.push(Reverse((nd, arc.head)));
            }
        }
    }
    Ok(Distances(dist))
}

/// Distances from every vertex to `t` (Dijkstra on reversed arcs).
pub fn dijkstra_dist_to(graph: &ColoredDigraph, t: Vertex) -> Result<Distances, GraphError> {
    let mut dist: Vec<Option<u64>> = vec![None; graph.n()];
    let mut heap = BinaryHeap::new();
    dist[t] = Some(0);
    heap.push(Reverse((0u64, t)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if dist[v] != Some(d) {
            continue;
        }
        for &a in graph.in_arcs(v) {
            let arc = graph.arc(a);
            let nd = d.checked_add(arc.length).ok_or(GraphError::DistanceOverflow)?;
            if dist[arc.tail].is_none_or(|old| nd < old) {
                dist[arc.tail] = Some(nd);
                heap.push(Reverse((nd, arc.tail)));
            }
        }
    }
    Ok(Distances(dist))
}

/// Indices of the arcs `(u, v)` with `dist(s, v) = dist(s, u) + w(u, v)`.
///
/// Arcs touching an unreachable vertex never qualify.
pub fn shortest_dag_arcs(graph: &ColoredDigraph, dist: &Distances) -> Vec<usize> {
    graph
        .arcs()
        .iter()
        .enumerate()
        .filter(|(_, arc)| match (dist.get(arc.tail), dist.get(arc.head)) {
            (Some(du), Some(dv)) => du.checked_add(arc.length) == Some(dv),
            _ => false,
        })
        .map(|(i, _)| i)
        .collect()
}

/// A simple path with its total length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<Vertex>,
    length: u64,
}

impl Path {
    /// Validates a vertex sequence against `graph`. Between consecutive
    /// vertices the shortest parallel arc is used.
    pub fn from_vertices(graph: &ColoredDigraph, vertices: Vec<Vertex>) -> Result<Path, PathError> {
        if vertices.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = vec![false; graph.n()];
        for &v in &vertices {
            if v >= graph.n() {
                return Err(PathError::UnknownVertex(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PathError::RepeatedVertex(v));
            }
        }
        let mut length = 0u64;
        for pair in vertices.windows(2) {
            let w = graph
                .min_arc_length(pair[0], pair[1])
                .ok_or(PathError::MissingArc(pair[0], pair[1]))?;
            length = length.checked_add(w).ok_or(PathError::Overflow)?;
        }
        Ok(Path { vertices, length })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }
}

/// Per-color vertex counts of a path or vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorCounts(pub Vec<u32>);

impl ColorCounts {
    pub fn zeros(c: usize) -> Self {
        ColorCounts(vec![0; c])
    }

    pub fn of_vertices(graph: &ColoredDigraph, vertices: &[Vertex]) -> Self {
        let mut counts = vec![0; graph.num_colors()];
        for &v in vertices {
            counts[graph.color(v)] += 1;
        }
        ColorCounts(counts)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn num_colors(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }
}

impl fmt::Display for ColorCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn color_counts(graph: &ColoredDigraph, path: &Path) -> ColorCounts {
    ColorCounts::of_vertices(graph, path.vertices())
}
