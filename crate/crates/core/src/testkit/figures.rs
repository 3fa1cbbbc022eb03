//! Two small hand-built example instances.

use super::clique::CliqueInstance;
use crate::graph::{ColoredDigraph, Vertex};

const BLUE: usize = 0;
const GREEN: usize = 1;

/// The highlighted balance-fair shortest path of [`figure_one`].
pub const FIGURE_ONE_HIGHLIGHTED: [Vertex; 10] = [0, 1, 2, 11, 12, 13, 6, 15, 8, 17];

/// The two-row layered graph with a balance-fair shortest path, as
/// `(graph, s, t)`. Vertex 0 is `s`, 1..=8 the top row, 9..=16 the bottom
/// row, 17 is `t`; colors are blue (0) and green (1); all arcs have length 1.
pub fn figure_one() -> (ColoredDigraph, Vertex, Vertex) {
    let (b, g) = (BLUE, GREEN);
    let top = [b, g, b, g, b, g, g, b];
    let bottom = [g, b, g, g, b, g, b, g];
    let mut colors = vec![b];
    colors.extend(top);
    colors.extend(bottom);
    colors.push(g);
    // top row p1j = j, bottom row p2j = 8 + j
    let (s, t) = (0, 17);
    let p1 = |j: usize| j;
    let p2 = |j: usize| 8 + j;
    let arcs = [
        (s, p1(1)),
        (s, p2(1)),
        (p1(1), p1(2)),
        (p2(1), p1(2)),
        (p2(1), p2(2)),
        (p1(2), p1(3)),
        (p1(2), p2(3)),
        (p2(2), p1(3)),
        (p2(2), p2(3)),
        (p1(3), p1(4)),
        (p1(3), p2(4)),
        (p2(3), p2(4)),
        (p1(4), p1(5)),
        (p1(4), p2(5)),
        (p2(4), p2(5)),
        (p1(5), p1(6)),
        (p1(5), p2(6)),
        (p2(5), p1(6)),
        (p1(6), p2(7)),
        (p2(6), p1(7)),
        (p1(7), p1(8)),
        (p2(7), p1(8)),
        (p2(7), p2(8)),
        (p1(8), t),
        (p2(8), t),
    ];
    let graph =
        ColoredDigraph::new(18, 2, arcs.iter().map(|&(u, v)| (u, v, 1)), colors).expect("figure one is well formed");
    (graph, s, t)
}

/// The multicolored clique instance with `k = 3` and `η = 4`; it contains
/// the triangle `{v_3^1, v_2^2, v_2^3}` (0-based indices within partitions).
pub fn figure_two() -> CliqueInstance {
    let raw = [
        ((1, 0), (2, 1)),
        ((1, 1), (2, 1)),
        ((1, 2), (2, 0)),
        ((1, 0), (3, 1)),
        ((1, 0), (3, 3)),
        ((1, 2), (3, 0)),
        ((1, 3), (3, 2)),
        ((2, 0), (3, 3)),
        ((2, 1), (3, 0)),
        ((2, 2), (3, 1)),
        ((2, 2), (3, 2)),
        ((1, 1), (3, 3)),
        ((1, 3), (2, 2)),
    ];
    let edges = raw.iter().map(|&((i, a), (j, b))| ((i - 1, a), (j - 1, b)));
    CliqueInstance::new(3, 4, edges).expect("figure two is well formed")
}
