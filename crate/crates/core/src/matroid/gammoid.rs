//! Three-layer gammoid realizing the bounds matroid.
//!
//! Sources are `S_1, …, S_c` (`|S_i| = α_i`) followed by the free sources
//! `S*` (`k - Σα`); buffers are `U_1, …, U_c` (`|U_i| = β_i - α_i`); sinks are
//! the ground set. Arcs run `S* → U_i`, `S_i → χ^i` and `U_i → χ^i`.

use super::flow::FlowNetwork;
use super::{BoundsMatroid, MatroidError};
use crate::graph::{Color, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammoidNode {
    Source(usize),
    Buffer(usize),
    Sink(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammoidGraph {
    /// Color of each source; `None` for the free sources `S*`.
    source_color: Vec<Option<Color>>,
    buffer_color: Vec<Color>,
    /// Sinks grouped by color.
    sinks_by_color: Vec<Vec<Vertex>>,
    sink_color: Vec<Color>,
}

pub fn build_gammoid(matroid: &BoundsMatroid) -> Result<GammoidGraph, MatroidError> {
    if !matroid.is_feasible() {
        return Err(MatroidError::InfeasibleBounds {
            alpha_sum: matroid.alpha_sum(),
            k: matroid.rank_target(),
        });
    }
    let c = matroid.num_colors();
    let mut source_color = Vec::with_capacity(matroid.rank_target());
    for (i, &a) in matroid.alphas().iter().enumerate() {
        source_color.extend(std::iter::repeat_n(Some(i), a as usize));
    }
    let free = matroid.rank_target() - matroid.alpha_sum() as usize;
    source_color.extend(std::iter::repeat_n(None, free));
    let mut buffer_color = Vec::new();
    for (i, (&a, &b)) in matroid.alphas().iter().zip(matroid.betas()).enumerate() {
        buffer_color.extend(std::iter::repeat_n(i, (b - a) as usize));
    }
    let mut sinks_by_color = vec![Vec::new(); c];
    let sink_color: Vec<Color> = (0..matroid.ground_size()).map(|v| matroid.color(v)).collect();
    for (v, &col) in sink_color.iter().enumerate() {
        sinks_by_color[col].push(v);
    }
    Ok(GammoidGraph {
        source_color,
        buffer_color,
        sinks_by_color,
        sink_color,
    })
}

impl GammoidGraph {
    pub fn num_sources(&self) -> usize {
        self.source_color.len()
    }

    pub fn num_buffers(&self) -> usize {
        self.buffer_color.len()
    }

    pub fn num_sinks(&self) -> usize {
        self.sink_color.len()
    }

    pub fn source_color(&self, s: usize) -> Option<Color> {
        self.source_color[s]
    }

    pub fn buffer_color(&self, u: usize) -> Color {
        self.buffer_color[u]
    }

    /// Sizes `(|S_i| per color, |U_i| per color, |S*|)`.
    pub fn group_sizes(&self) -> (Vec<usize>, Vec<usize>, usize) {
        let c = self.sinks_by_color.len();
        let mut s = vec![0; c];
        let mut u = vec![0; c];
        let mut free = 0;
        for col in &self.source_color {
            match col {
                Some(i) => s[*i] += 1,
                None => free += 1,
            }
        }
        for &i in &self.buffer_color {
            u[i] += 1;
        }
        (s, u, free)
    }

    /// Buffers of color `i`.
    pub fn buffers_of(&self, color: Color) -> impl Iterator<Item = usize> + '_ {
        (0..self.buffer_color.len()).filter(move |&u| self.buffer_color[u] == color)
    }

    /// Every arc, in a fixed canonical order: free sources to buffers, then
    /// colored sources to sinks, then buffers to sinks.
    pub fn arcs(&self) -> Vec<(GammoidNode, GammoidNode)> {
        let mut out = Vec::new();
        for (s, col) in self.source_color.iter().enumerate() {
            if col.is_none() {
                for u in 0..self.buffer_color.len() {
                    out.push((GammoidNode::Source(s), GammoidNode::Buffer(u)));
                }
            }
        }
        for (s, col) in self.source_color.iter().enumerate() {
            if let Some(i) = col {
                for &v in &self.sinks_by_color[*i] {
                    out.push((GammoidNode::Source(s), GammoidNode::Sink(v)));
                }
            }
        }
        for (u, &i) in self.buffer_color.iter().enumerate() {
            for &v in &self.sinks_by_color[i] {
                out.push((GammoidNode::Buffer(u), GammoidNode::Sink(v)));
            }
        }
        out
    }

    pub fn sink_color(&self, v: Vertex) -> Color {
        self.sink_color[v]
    }

    pub fn sinks_of(&self, color: Color) -> &[Vertex] {
        &self.sinks_by_color[color]
    }
}

/// Are there `|x|` vertex-disjoint paths from the sources to `x`?
pub fn is_linked(gammoid: &GammoidGraph, x: &[Vertex]) -> bool {
    if x.len() > gammoid.num_sources() {
        return false;
    }
    // super source, sources, buffer in/out, members of x, super sink
    let k = gammoid.num_sources();
    let b = gammoid.num_buffers();
    let source_node = |s: usize| 1 + s;
    let buffer_in = |u: usize| 1 + k + u;
    let buffer_out = |u: usize| 1 + k + b + u;
    let sink_node = |j: usize| 1 + k + 2 * b + j;
    let super_sink = 1 + k + 2 * b + x.len();
    let mut net = FlowNetwork::new(super_sink + 1);
    for s in 0..k {
        net.add_edge(0, source_node(s), 1);
    }
    for u in 0..b {
        net.add_edge(buffer_in(u), buffer_out(u), 1);
    }
    for (j, &v) in x.iter().enumerate() {
        net.add_edge(sink_node(j), super_sink, 1);
        let col = gammoid.sink_color(v);
        for s in 0..k {
            if gammoid.source_color(s) == Some(col) {
                net.add_edge(source_node(s), sink_node(j), 1);
            }
        }
        for u in gammoid.buffers_of(col) {
            net.add_edge(buffer_out(u), sink_node(j), 1);
        }
    }
    let needed: Vec<bool> = (0..b)
        .map(|u| x.iter().any(|&v| gammoid.sink_color(v) == gammoid.buffer_color(u)))
        .collect();
    for s in 0..k {
        if gammoid.source_color(s).is_none() {
            for u in (0..b).filter(|&u| needed[u]) {
                net.add_edge(source_node(s), buffer_in(u), 1);
            }
        }
    }
    net.max_flow(0, super_sink) as usize == x.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tests::random_matroid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_color_shape() {
        let m = BoundsMatroid::new(vec![0, 0, 0], vec![1], vec![2], 2).unwrap();
        let g = build_gammoid(&m).unwrap();
        assert_eq!(g.group_sizes(), (vec![1], vec![1], 1));
        let arcs = g.arcs();
        // S* -> U_1, S_1 -> each sink, U_1 -> each sink
        assert_eq!(arcs.len(), 1 + 3 + 3);
        assert!(arcs.contains(&(GammoidNode::Source(1), GammoidNode::Buffer(0))));
        assert!(arcs.contains(&(GammoidNode::Source(0), GammoidNode::Sink(2))));
        assert!(arcs.contains(&(GammoidNode::Buffer(0), GammoidNode::Sink(0))));
    }

    #[test]
    fn degenerate_groups() {
        let m = BoundsMatroid::new(vec![0, 1, 1], vec![1, 1], vec![1, 1], 4).unwrap();
        let g = build_gammoid(&m).unwrap();
        assert_eq!(g.group_sizes(), (vec![1, 1], vec![0, 0], 2));
        let m = BoundsMatroid::new(vec![0, 1, 1], vec![1, 2], vec![3, 2], 3).unwrap();
        let g = build_gammoid(&m).unwrap();
        assert_eq!(g.group_sizes().2, 0);
        assert_eq!(g.num_sources(), 3);
    }

    #[test]
    fn infeasible_bounds_rejected() {
        let m = BoundsMatroid::new(vec![0, 1], vec![2, 2], vec![2, 2], 3).unwrap();
        assert!(matches!(
            build_gammoid(&m),
            Err(MatroidError::InfeasibleBounds { alpha_sum: 4, k: 3 })
        ));
    }

    #[test]
    fn linkage_matches_direct_predicate_exhaustively() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let n = rng.gen_range(1..=8);
            let m = random_matroid(&mut rng, n);
            let g = build_gammoid(&m).unwrap();
            for mask in 0u32..1 << n {
                let x: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                assert_eq!(is_linked(&g, &x), m.is_independent_direct(&x), "{m:?} {x:?}");
            }
        }
    }

    #[test]
    fn too_many_elements_never_linked() {
        let m = BoundsMatroid::new(vec![0; 5], vec![0], vec![5], 2).unwrap();
        let g = build_gammoid(&m).unwrap();
        assert!(!is_linked(&g, &[0, 1, 2]));
        assert!(is_linked(&g, &[0, 1]));
    }
}
