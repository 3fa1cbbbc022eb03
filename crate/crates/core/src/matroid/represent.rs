//! Randomized linear representation of the gammoid.
//!
//! Each gammoid arc gets an independent uniformly random nonzero weight and
//! entry `(s, v)` is the sum over `s → v` paths of the product of their arc
//! weights. Every path has at most two arcs, so entries are either a single
//! weight (`S_i → v`) or a sum of two-arc products (`S* → U_i → v`).
//!
//! A maximal minor on rows `R` and columns `X` is a signed sum over
//! vertex-disjoint path systems from `R` to `X` (Lindström), so unlinked sets
//! always get dependent columns and linked sets get independent ones except
//! with probability at most `2|X| / (p - 1)` (Schwartz-Zippel).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gammoid::GammoidGraph;
use super::MatroidError;
use crate::field::{Fp61, SampleNonzero, MODULUS};
use crate::graph::Vertex;
use crate::linalg::Matrix;

/// A `k × n` representation over `F_p` with the parameters that produced it.
#[derive(Debug, Clone)]
pub struct FieldMatrix {
    pub matrix: Matrix<Fp61>,
    pub seed: u64,
    pub stream: u64,
    pub epsilon: f64,
}

impl FieldMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Smallest `ε` a single sample over `F_p` guarantees for a `k × n` representation.
pub fn min_epsilon(k: usize, n: usize) -> f64 {
    (k.max(1) as f64 * n.max(1) as f64) / MODULUS as f64
}

/// Path-weight matrix with weights drawn from `rng`, over any field.
#[allow(clippy::needless_range_loop)]
pub fn represent_in<F: SampleNonzero, R: rand::Rng + ?Sized>(gammoid: &GammoidGraph, rng: &mut R) -> Matrix<F> {
    let k = gammoid.num_sources();
    let n = gammoid.num_sinks();
    let b = gammoid.num_buffers();
    let mut m = Matrix::<F>::zeros(k, n);
    // weights drawn in canonical arc order
    let mut free_to_buffer = vec![Vec::new(); k];
    for (s, row) in free_to_buffer.iter_mut().enumerate() {
        if gammoid.source_color(s).is_none() {
            *row = (0..b).map(|_| F::sample_nonzero(rng)).collect();
        }
    }
    for s in 0..k {
        if let Some(i) = gammoid.source_color(s) {
            for &v in gammoid.sinks_of(i) {
                m.set(s, v, F::sample_nonzero(rng));
            }
        }
    }
    let mut buffer_to_sink = vec![vec![F::zero(); n]; b];
    for (u, row) in buffer_to_sink.iter_mut().enumerate() {
        for &v in gammoid.sinks_of(gammoid.buffer_color(u)) {
            row[v] = F::sample_nonzero(rng);
        }
    }
    for s in 0..k {
        if gammoid.source_color(s).is_some() {
            continue;
        }
        for v in 0..n {
            let col = gammoid.sink_color(v);
            let mut acc = F::zero();
            for u in gammoid.buffers_of(col) {
                acc = acc + free_to_buffer[s][u].clone() * buffer_to_sink[u][v].clone();
            }
            m.set(s, v, acc);
        }
    }
    m
}

/// Representation seeded by `seed` on RNG stream 0.
pub fn represent(gammoid: &GammoidGraph, epsilon: f64, seed: u64) -> Result<FieldMatrix, MatroidError> {
    represent_stream(gammoid, epsilon, seed, 0)
}

/// Representation seeded by `(seed, stream)`; distinct streams give independent samples.
pub fn represent_stream(
    gammoid: &GammoidGraph,
    epsilon: f64,
    seed: u64,
    stream: u64,
) -> Result<FieldMatrix, MatroidError> {
    let min = min_epsilon(gammoid.num_sources(), gammoid.num_sinks());
    if !(epsilon > 0.0 && epsilon < 1.0) || epsilon < min {
        return Err(MatroidError::EpsilonOutOfRange {
            epsilon,
            min_epsilon: min,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    Ok(FieldMatrix {
        matrix: represent_in(gammoid, &mut rng),
        seed,
        stream,
        epsilon,
    })
}

pub fn columns_independent(matrix: &FieldMatrix, x: &[Vertex]) -> bool {
    matrix.matrix.columns_independent(x)
}
