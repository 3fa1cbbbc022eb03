//! Reductions from multicolored clique to balance-fair shortest path.
//!
//! Both build a spine `u_1 .. u_K` with `K = k + C(k,2) + 1`, one gadget per
//! partition followed by one per partition pair, all arcs of unit length.
//! Every `s`-`t` path is shortest, and a balanced one exists iff the clique
//! instance has a multicolored clique.

use super::clique::{CliqueError, CliqueInstance};
use crate::graph::{Color, ColoredDigraph, Vertex};

/// A reduced instance. `spine[i]` is `u_{i+1}`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: ColoredDigraph,
    pub source: Vertex,
    pub target: Vertex,
    pub spine: Vec<Vertex>,
}

const P: Color = 0;

#[derive(Default)]
struct Builder {
    colors: Vec<Color>,
    arcs: Vec<(Vertex, Vertex, u64)>,
}

impl Builder {
    fn vertex(&mut self, color: Color) -> Vertex {
        self.colors.push(color);
        self.colors.len() - 1
    }

    /// Internal vertices colored by `seq`, joining `from` to `to` (or ending the path if `to` is `None`).
    fn path(&mut self, from: Vertex, seq: &[Color], to: Option<Vertex>) -> Vertex {
        let mut prev = from;
        for &color in seq {
            let v = self.vertex(color);
            self.arcs.push((prev, v, 1));
            prev = v;
        }
        if let Some(to) = to {
            self.arcs.push((prev, to, 1));
            return to;
        }
        prev
    }

    fn finish(self, c: usize) -> ColoredDigraph {
        let n = self.colors.len();
        ColoredDigraph::new(n, c, self.arcs, self.colors).expect("reduction output is well formed")
    }
}

fn repeat(out: &mut Vec<Color>, color: Color, times: usize) {
    out.extend(std::iter::repeat_n(color, times));
}

fn spine_len(k: usize) -> usize {
    k + k * (k - 1) / 2 + 1
}

fn pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j)))
}

/// Parameterized reduction: colors `p` plus `r_{i,j}`, `c̄_{i,j}` per ordered
/// pair `i ≠ j`, giving `2k(k-1) + 1` colors. Requires `k >= 2`.
pub fn reduce_w1(instance: &CliqueInstance) -> Result<Reduction, CliqueError> {
    let (k, eta) = (instance.k(), instance.eta());
    if k < 2 {
        return Err(CliqueError::ParameterTooSmall(format!("k >= 2, got k = {k}")));
    }
    let pair_index = |i: usize, j: usize| i * (k - 1) + if j < i { j } else { j - 1 };
    let r = |i: usize, j: usize| 1 + 2 * pair_index(i, j);
    let cbar = |i: usize, j: usize| 2 + 2 * pair_index(i, j);
    let num_colors = 2 * k * (k - 1) + 1;
    let big_k = spine_len(k);

    let mut b = Builder::default();
    let spine: Vec<Vertex> = (0..big_k).map(|_| b.vertex(P)).collect();

    for i in 0..k {
        for a in 1..=eta {
            let mut seq = Vec::new();
            for j in (0..k).filter(|&j| j != i) {
                repeat(&mut seq, r(i, j), a);
                repeat(&mut seq, cbar(i, j), eta - a);
            }
            b.path(spine[i], &seq, Some(spine[i + 1]));
        }
    }
    for (slot, (i, j)) in pairs(k).enumerate() {
        let d = k + slot;
        for &((pi, ai), (pj, bj)) in instance.edges().iter().filter(|e| (e.0 .0, e.1 .0) == (i, j)) {
            let (a, bb) = (ai + 1, bj + 1);
            let mut seq = Vec::new();
            repeat(&mut seq, r(pi, pj), eta - a);
            repeat(&mut seq, cbar(pi, pj), a);
            repeat(&mut seq, r(pj, pi), eta - bb);
            repeat(&mut seq, cbar(pj, pi), bb);
            b.path(spine[d], &seq, Some(spine[d + 1]));
        }
    }
    // tail pads every color up to max(η, K)
    let mut tail = Vec::new();
    if eta >= big_k {
        repeat(&mut tail, P, eta - big_k);
    } else {
        for color in 1..num_colors {
            repeat(&mut tail, color, big_k - eta);
        }
    }
    let last = spine[big_k - 1];
    let target = b.path(last, &tail, None);
    Ok(Reduction {
        graph: b.finish(num_colors),
        source: spine[0],
        target,
        spine,
    })
}

/// `⌈log2 η⌉`.
fn bit_width(eta: usize) -> u32 {
    if eta <= 1 {
        0
    } else {
        usize::BITS - (eta - 1).leading_zeros()
    }
}

/// Reduction with `2k + 1` colors: `p` plus `r_i`, `c̄_i` per partition.
/// Vertex indices are written in binary with `τ = ⌈log2 η⌉` bits; level `ℓ`
/// of a gadget path carries bit `ℓ` with weight `k^(ℓ-1)`. Requires `k >= 3`
/// and `τ >= 2`.
pub fn reduce_eth(instance: &CliqueInstance) -> Result<Reduction, CliqueError> {
    let (k, eta) = (instance.k(), instance.eta());
    let tau = bit_width(eta);
    if k < 3 || tau < 2 {
        return Err(CliqueError::ParameterTooSmall(format!(
            "k >= 3 and ceil(log2 eta) >= 2, got k = {k}, eta = {eta}"
        )));
    }
    let r = |i: usize| 1 + 2 * i;
    let cbar = |i: usize| 2 + 2 * i;
    let num_colors = 2 * k + 1;
    let big_k = spine_len(k);
    let weight = |level: u32| k.pow(level);
    let bit = |j: usize, level: u32| (j >> level) & 1;
    let level_sum: usize = (0..tau).map(weight).sum();
    let x = (k - 1) * level_sum;

    let mut b = Builder::default();
    let spine: Vec<Vertex> = (0..big_k).map(|_| b.vertex(P)).collect();

    for i in 0..k {
        for j in 0..eta {
            let mut seq = Vec::new();
            for level in 0..tau {
                let color = if bit(j, level) == 0 { r(i) } else { cbar(i) };
                repeat(&mut seq, color, (k - 1) * weight(level));
            }
            b.path(spine[i], &seq, Some(spine[i + 1]));
        }
    }
    for (slot, (i, j)) in pairs(k).enumerate() {
        let d = k + slot;
        for &((pi, a), (pj, bj)) in instance.edges().iter().filter(|e| (e.0 .0, e.1 .0) == (i, j)) {
            let mut seq = Vec::new();
            for level in 0..tau {
                let ci = if bit(a, level) == 0 { cbar(pi) } else { r(pi) };
                let cj = if bit(bj, level) == 0 { cbar(pj) } else { r(pj) };
                repeat(&mut seq, ci, weight(level));
                repeat(&mut seq, cj, weight(level));
            }
            b.path(spine[d], &seq, Some(spine[d + 1]));
        }
    }
    // head of x - K p-vertices ahead of u_1 makes p total x
    let head_len = x.saturating_sub(big_k);
    let source = if head_len == 0 {
        spine[0]
    } else {
        let first = b.vertex(P);
        let rest = vec![P; head_len - 1];
        b.path(first, &rest, Some(spine[0]));
        first
    };
    Ok(Reduction {
        graph: b.finish(num_colors),
        source,
        target: spine[big_k - 1],
        spine,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dijkstra_dist;
    use crate::testkit::{count_dag_paths, figure_two, has_multicolored_clique, oracle_balance_fair, random_clique};

    fn check_equivalence(instance: &CliqueInstance, reduced: &Reduction) {
        let expected = has_multicolored_clique(instance).unwrap();
        let got = oracle_balance_fair(&reduced.graph, reduced.source, reduced.target).unwrap();
        assert_eq!(got.decision, expected, "instance {instance:?}");
    }

    #[test]
    fn w1_on_figure_two() {
        let fig = figure_two();
        let red = reduce_w1(&fig).unwrap();
        assert_eq!(red.graph.num_colors(), 13);
        assert_eq!(red.spine.len(), 7);
        let dist = dijkstra_dist(&red.graph, red.source).unwrap();
        // every s-t path is shortest, so all have the same vertex count
        let d = dist.get(red.target).unwrap();
        let r = oracle_balance_fair(&red.graph, red.source, red.target).unwrap();
        assert!(r.decision);
        let w = r.witness.unwrap();
        assert_eq!(w.length(), d);
        let counts = r.counts.unwrap();
        assert!(counts.as_slice().iter().all(|&x| x as usize == 7));
    }

    #[test]
    fn eth_on_figure_two() {
        let fig = figure_two();
        let red = reduce_eth(&fig).unwrap();
        assert_eq!(red.graph.num_colors(), 7);
        let r = oracle_balance_fair(&red.graph, red.source, red.target).unwrap();
        assert!(r.decision);
        assert!(r.counts.unwrap().as_slice().iter().all(|&x| x == 8));
        // head of 8 - 7 = 1 vertex ahead of u_1
        assert_ne!(red.source, red.spine[0]);
    }

    #[test]
    fn all_paths_have_equal_length() {
        let fig = figure_two();
        for red in [reduce_w1(&fig).unwrap(), reduce_eth(&fig).unwrap()] {
            let dist = dijkstra_dist(&red.graph, red.source).unwrap();
            let d = dist.get(red.target).unwrap();
            let all = crate::testkit::enumerate_paths(
                &red.graph,
                red.source,
                red.target,
                &crate::testkit::EnumerateOptions {
                    max_vertices: red.graph.n(),
                    ..Default::default()
                },
                |_, _| true,
            );
            assert!(!all.truncated);
            assert_eq!(
                Some(all.paths.len() as u128),
                count_dag_paths(&red.graph, red.source, red.target)
            );
            assert!(all.paths.iter().all(|p| p.length() == d));
        }
    }

    #[test]
    fn w1_matches_clique_oracle() {
        for seed in 0..25 {
            for (k, eta) in [(2, 2), (2, 4), (3, 2), (3, 3)] {
                let inst = random_clique(seed, k, eta, 0.45);
                check_equivalence(&inst, &reduce_w1(&inst).unwrap());
            }
        }
    }

    #[test]
    fn eth_matches_clique_oracle() {
        for seed in 0..25 {
            for eta in [3, 4] {
                let inst = random_clique(seed, 3, eta, 0.45);
                check_equivalence(&inst, &reduce_eth(&inst).unwrap());
            }
        }
    }

    #[test]
    fn parameter_checks() {
        let small = random_clique(0, 1, 3, 0.5);
        assert!(matches!(reduce_w1(&small), Err(CliqueError::ParameterTooSmall(_))));
        let two = random_clique(0, 2, 4, 0.5);
        assert!(matches!(reduce_eth(&two), Err(CliqueError::ParameterTooSmall(_))));
        let narrow = random_clique(0, 3, 2, 0.5);
        assert!(matches!(reduce_eth(&narrow), Err(CliqueError::ParameterTooSmall(_))));
        assert_eq!(
            (bit_width(1), bit_width(2), bit_width(3), bit_width(4), bit_width(5)),
            (0, 1, 2, 2, 3)
        );
    }
}
