//! Multicolored clique instances and an exhaustive decision procedure.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// A vertex as `(partition, index within partition)`, both 0-based.
pub type PartVertex = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliqueError {
    #[error("need k >= 1 partitions of size eta >= 1")]
    Empty,
    #[error("vertex {0:?} outside the partitions")]
    VertexOutOfRange(PartVertex),
    #[error("edge {0:?}-{1:?} lies inside one partition")]
    EdgeInsidePartition(PartVertex, PartVertex),
    #[error("search space {needed} exceeds the cap {cap}")]
    CapExceeded { needed: u128, cap: u128 },
    #[error("reduction needs {0}")]
    ParameterTooSmall(String),
}

/// An undirected `k`-partite graph with partitions of equal size `η`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueInstance {
    k: usize,
    eta: usize,
    /// Normalized so the first endpoint has the smaller partition; sorted, deduplicated.
    edges: Vec<(PartVertex, PartVertex)>,
    adjacency: HashSet<(PartVertex, PartVertex)>,
}

impl CliqueInstance {
    pub fn new(
        k: usize,
        eta: usize,
        edges: impl IntoIterator<Item = (PartVertex, PartVertex)>,
    ) -> Result<Self, CliqueError> {
        if k == 0 || eta == 0 {
            return Err(CliqueError::Empty);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v.0 >= k || v.1 >= eta {
                    return Err(CliqueError::VertexOutOfRange(v));
                }
            }
            if a.0 == b.0 {
                return Err(CliqueError::EdgeInsidePartition(a, b));
            }
            list.push(if a.0 < b.0 { (a, b) } else { (b, a) });
        }
        list.sort_unstable();
        list.dedup();
        let adjacency = list.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        Ok(CliqueInstance {
            k,
            eta,
            edges: list,
            adjacency,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn edges(&self) -> &[(PartVertex, PartVertex)] {
        &self.edges
    }

    /// Flat 0-based id: `partition · η + index`.
    pub fn id(&self, v: PartVertex) -> usize {
        v.0 * self.eta + v.1
    }

    pub fn has_edge(&self, a: PartVertex, b: PartVertex) -> bool {
        self.adjacency.contains(&(a, b))
    }
}

/// Each cross-partition pair becomes an edge with probability `density`.
pub fn random_clique(seed: u64, k: usize, eta: usize, density: f64) -> CliqueInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for a in 0..eta {
                for b in 0..eta {
                    if rng.gen_bool(density.clamp(0.0, 1.0)) {
                        edges.push(((i, a), (j, b)));
                    }
                }
            }
        }
    }
    CliqueInstance::new(k, eta, edges).expect("generated edges are valid")
}

/// Exhaustive search over one vertex per partition, capped at `η^k ≤ 10^7`.
pub fn has_multicolored_clique(instance: &CliqueInstance) -> Result<bool, CliqueError> {
    has_multicolored_clique_capped(instance, 10_000_000)
}

pub fn has_multicolored_clique_capped(instance: &CliqueInstance, cap: u128) -> Result<bool, CliqueError> {
    let needed = (instance.eta as u128)
        .checked_pow(instance.k as u32)
        .unwrap_or(u128::MAX);
    if needed > cap {
        return Err(CliqueError::CapExceeded { needed, cap });
    }
    let mut chosen = Vec::with_capacity(instance.k);
    Ok(extend(instance, &mut chosen))
}

fn extend(instance: &CliqueInstance, chosen: &mut Vec<usize>) -> bool {
    let i = chosen.len();
    if i == instance.k {
        return true;
    }
    for a in 0..instance.eta {
        if chosen
            .iter()
            .enumerate()
            .all(|(j, &b)| instance.has_edge((j, b), (i, a)))
        {
            chosen.push(a);
            if extend(instance, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_edgeless() {
        for k in 1..=4 {
            let complete = random_clique(0, k, 3, 1.0);
            assert!(has_multicolored_clique(&complete).unwrap());
            let empty = random_clique(0, k, 3, 0.0);
            assert_eq!(has_multicolored_clique(&empty).unwrap(), k == 1);
        }
    }

    #[test]
    fn validation() {
        assert_eq!(CliqueInstance::new(0, 2, []), Err(CliqueError::Empty));
        assert_eq!(
            CliqueInstance::new(2, 2, [((0, 0), (0, 1))]),
            Err(CliqueError::EdgeInsidePartition((0, 0), (0, 1)))
        );
        assert_eq!(
            CliqueInstance::new(2, 2, [((0, 0), (2, 1))]),
            Err(CliqueError::VertexOutOfRange((2, 1)))
        );
        let inst = CliqueInstance::new(2, 2, [((1, 0), (0, 1)), ((0, 1), (1, 0))]).unwrap();
        assert_eq!(inst.edges(), &[((0, 1), (1, 0))]);
        assert!(inst.has_edge((1, 0), (0, 1)));
    }

    #[test]
    fn cap_is_reported() {
        let inst = random_clique(1, 8, 10, 0.5);
        assert!(matches!(
            has_multicolored_clique(&inst),
            Err(CliqueError::CapExceeded { .. })
        ));
    }

    #[test]
    fn matches_naive_triple_loop() {
        for seed in 0..40 {
            let inst = random_clique(seed, 3, 4, 0.35);
            let mut naive = false;
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        naive |= inst.has_edge((0, a), (1, b))
                            && inst.has_edge((0, a), (2, c))
                            && inst.has_edge((1, b), (2, c));
                    }
                }
            }
            assert_eq!(has_multicolored_clique(&inst).unwrap(), naive);
        }
    }
}
