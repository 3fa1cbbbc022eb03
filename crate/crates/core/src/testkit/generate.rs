//! Seeded random instances with a planted source-target path.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constraints::BoundsSpec;
use crate::graph::{color_counts, ColoredDigraph, Path, Vertex};

/// How bounds relate to the planted path's color counts `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundsProfile {
    /// `α = β = x`.
    Witness,
    /// `[x_i - δ, x_i + δ']` with `δ, δ' ∈ {0, 1}`, and with probability 1/3
    /// one lower bound raised past `x_i`.
    Random,
    /// `[0, n]` for every color.
    Loose,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    pub n: usize,
    pub c: usize,
    /// Probability of each extra ordered arc.
    pub density: f64,
    /// Arc lengths are uniform in `1..=max_weight`.
    pub max_weight: u64,
    /// Most vertices on the planted path.
    pub max_backbone: usize,
    pub profile: BoundsProfile,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            seed: 0,
            n: 10,
            c: 2,
            density: 0.3,
            max_weight: 3,
            max_backbone: 6,
            profile: BoundsProfile::Random,
        }
    }
}

/// A generated query. `ell` is the planted path's length.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: ColoredDigraph,
    pub source: Vertex,
    pub target: Vertex,
    pub bounds: BoundsSpec,
    pub ell: u64,
    pub backbone: Path,
}

/// Random instance fully determined by `config`. Requires `n >= 2` and `c >= 1`.
pub fn random_instance(config: &GeneratorConfig) -> Instance {
    assert!(config.n >= 2 && config.c >= 1, "need n >= 2 and c >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.n;
    let max_weight = config.max_weight.max(1);
    let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..config.c)).collect();
    let len = rng.gen_range(2..=config.max_backbone.clamp(2, n));
    let backbone: Vec<Vertex> = sample(&mut rng, n, len).into_vec();
    let mut arcs = Vec::new();
    for pair in backbone.windows(2) {
        arcs.push((pair[0], pair[1], rng.gen_range(1..=max_weight)));
    }
    let density = config.density.clamp(0.0, 1.0);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                arcs.push((u, v, rng.gen_range(1..=max_weight)));
            }
        }
    }
    let graph = ColoredDigraph::new(n, config.c, arcs, colors).expect("generated graph is valid");
    let planted = Path::from_vertices(&graph, backbone.clone()).expect("backbone is a path");
    let x = color_counts(&graph, &planted).0;
    let (alphas, betas): (Vec<u32>, Vec<u32>) = match config.profile {
        BoundsProfile::Witness => (x.clone(), x),
        BoundsProfile::Loose => (vec![0; config.c], vec![n as u32; config.c]),
        BoundsProfile::Random => {
            let mut alphas: Vec<u32> = x.iter().map(|&xi| xi.saturating_sub(rng.gen_range(0..=1))).collect();
            let mut betas: Vec<u32> = x.iter().map(|&xi| xi + rng.gen_range(0..=1)).collect();
            if rng.gen_ratio(1, 3) {
                let i = rng.gen_range(0..config.c);
                alphas[i] = x[i] + 1;
                betas[i] = betas[i].max(alphas[i]);
            }
            (alphas, betas)
        }
    };
    Instance {
        source: backbone[0],
        target: backbone[len - 1],
        bounds: BoundsSpec::new(alphas, betas, None).expect("alpha <= beta by construction"),
        ell: planted.length(),
        backbone: planted,
        graph,
    }
}
