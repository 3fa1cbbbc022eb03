//! Weighted min-q-representative families over a linear matroid.
//!
//! A family of `p`-sets is pruned by mapping each set to its wedge vector
//! (all `p × p` minors of its columns) and keeping, in order of weight, every
//! set whose wedge vector is outside the span of those already kept. When the
//! matroid has rank `p + q` this keeps at most `C(p+q, p)` sets and the result
//! represents the family against every extension of size at most `q`.

use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::field::{Field, SampleNonzero};
use crate::graph::Vertex;
use crate::linalg::{IncrementalBasis, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("expected a set of size {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("matrix rank {rank} is below the required {needed}")]
    RankDeficient { rank: usize, needed: usize },
}

/// `C(n, k)`, saturating at `usize::MAX`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// All `p`-subsets of `0..n` in lexicographic order.
pub fn subsets_lex(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..p).rev().find(|&i| cur[i] < n - p + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..p {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All `p × p` minors of the columns `x` (in the given column order), one
/// per row subset in lexicographic order.
pub fn wedge_vector<F: Field>(matrix: &Matrix<F>, x: &[Vertex]) -> Result<Vec<F>, RepError> {
    if x.len() > matrix.rows() {
        return Err(RepError::SizeMismatch {
            expected: matrix.rows(),
            got: x.len(),
        });
    }
    let cols = matrix.select_columns(x);
    Ok(subsets_lex(matrix.rows(), x.len())
        .iter()
        .map(|rows| cols.select_rows(rows).determinant())
        .collect())
}

/// Extends wedge vectors of `(p-1)`-sets by one column via Laplace expansion
/// along the new last column.
#[derive(Debug, Clone)]
pub struct WedgeExtender {
    p: usize,
    /// For each `p`-subset of rows: `(row, index of the remaining (p-1)-subset, negate)`.
    terms: Vec<Vec<(usize, usize, bool)>>,
}

impl WedgeExtender {
    /// Extender producing `p`-set wedge vectors for a matrix with `k` rows.
    pub fn new(k: usize, p: usize) -> Self {
        assert!(p >= 1 && p <= k, "need 1 <= p <= k");
        let mask = |rows: &[usize]| rows.iter().fold(0u128, |m, &r| m | 1 << r);
        let lower: HashMap<u128, usize> = subsets_lex(k, p - 1)
            .iter()
            .enumerate()
            .map(|(i, rows)| (mask(rows), i))
            .collect();
        let terms = subsets_lex(k, p)
            .iter()
            .map(|rows| {
                let full = mask(rows);
                rows.iter()
                    .enumerate()
                    .map(|(a, &r)| (r, lower[&(full & !(1u128 << r))], (a + p - 1) % 2 == 1))
                    .collect()
            })
            .collect();
        WedgeExtender { p, terms }
    }

    pub fn set_size(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.terms.len()
    }

    /// Wedge vector of `X + v` from the wedge vector of `X`.
    pub fn extend<F: Field>(&self, matrix: &Matrix<F>, prev: &[F], v: Vertex) -> Vec<F> {
        self.terms
            .iter()
            .map(|terms| {
                let mut acc = F::zero();
                for &(r, j, negate) in terms {
                    let entry = matrix.get(r, v);
                    if entry.is_zero() || prev[j].is_zero() {
                        continue;
                    }
                    let term = entry.clone() * prev[j].clone();
                    acc = if negate { acc - term } else { acc + term };
                }
                acc
            })
            .collect()
    }
}

/// Indices kept by greedy selection: by nondecreasing weight (ties by
/// index), keep a vector iff it is outside the span of those kept so far.
pub fn select_by_span<F: Field>(vectors: &[Vec<F>], weights: &[u64], dim: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..vectors.len()).collect();
    order.sort_by_key(|&i| (weights[i], i));
    let mut basis = IncrementalBasis::new(dim);
    let mut kept = Vec::new();
    for i in order {
        if basis.is_full() {
            break;
        }
        if basis.insert(&vectors[i]) {
            kept.push(i);
        }
    }
    kept
}

/// A family of equal-size vertex sets with nonnegative weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedFamily {
    p: usize,
    sets: Vec<Vec<Vertex>>,
    weights: Vec<u64>,
}

impl WeightedFamily {
    pub fn new(p: usize) -> Self {
        WeightedFamily {
            p,
            sets: Vec::new(),
            weights: Vec::new(),
        }
    }

    pub fn push(&mut self, set: Vec<Vertex>, weight: u64) -> Result<(), RepError> {
        if set.len() != self.p {
            return Err(RepError::SizeMismatch {
                expected: self.p,
                got: set.len(),
            });
        }
        self.sets.push(set);
        self.weights.push(weight);
        Ok(())
    }

    pub fn from_pairs(p: usize, pairs: impl IntoIterator<Item = (Vec<Vertex>, u64)>) -> Result<Self, RepError> {
        let mut family = WeightedFamily::new(p);
        for (set, weight) in pairs {
            family.push(set, weight)?;
        }
        Ok(family)
    }

    pub fn set_size(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[Vec<Vertex>] {
        &self.sets
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Vertex], u64)> {
        self.sets.iter().map(Vec::as_slice).zip(self.weights.iter().copied())
    }

    /// Members at `indices`, in that order.
    pub fn subfamily(&self, indices: &[usize]) -> WeightedFamily {
        WeightedFamily {
            p: self.p,
            sets: indices.iter().map(|&i| self.sets[i].clone()).collect(),
            weights: indices.iter().map(|&i| self.weights[i]).collect(),
        }
    }
}

/// Indices of a min-`q`-representative subfamily, in selection order.
///
/// When `p + q` is below the matrix's row count the matroid is first
/// truncated to rank `p + q` by a random `(p+q) × k` projection drawn from `rng`.
pub fn representative_indices<F, R>(
    matrix: &Matrix<F>,
    family: &WeightedFamily,
    q: usize,
    rng: &mut R,
) -> Result<Vec<usize>, RepError>
where
    F: SampleNonzero + Send + Sync,
    R: Rng + ?Sized,
{
    let p = family.set_size();
    let r = p + q;
    if r > matrix.rows() {
        return Err(RepError::RankDeficient {
            rank: matrix.rank(),
            needed: r,
        });
    }
    let truncated;
    let working = if r < matrix.rows() {
        truncated = Matrix::<F>::random(r, matrix.rows(), rng).mul(matrix);
        &truncated
    } else {
        matrix
    };
    let rank = working.rank();
    if rank < r {
        return Err(RepError::RankDeficient { rank, needed: r });
    }
    let wedges = family
        .sets()
        .par_iter()
        .map(|set| wedge_vector(working, set))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(select_by_span(&wedges, family.weights(), binomial(r, p)))
}

/// A min-`q`-representative subfamily of size at most `C(p+q, p)`.
pub fn min_q_representative<F, R>(
    matrix: &Matrix<F>,
    family: &WeightedFamily,
    q: usize,
    rng: &mut R,
) -> Result<WeightedFamily, RepError>
where
    F: SampleNonzero + Send + Sync,
    R: Rng + ?Sized,
{
    let kept = representative_indices(matrix, family, q, rng)?;
    Ok(family.subfamily(&kept))
}

/// Calls `f` on every subset of `0..n` with at most `q` elements.
fn for_each_small_subset(n: usize, q: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    for size in 0..=q.min(n) {
        for y in subsets_lex(n, size) {
            if !f(&y) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive check that `candidate` min-`q`-represents `family`: for every
/// `Y` of at most `q` ground elements, if some member `X` is disjoint from
/// `Y` with `X ∪ Y` independent, some candidate does the same at weight ≤ ρ(X).
pub fn check_representative<F: Field>(
    matrix: &Matrix<F>,
    family: &WeightedFamily,
    candidate: &WeightedFamily,
    q: usize,
) -> bool {
    let best_fit = |fam: &WeightedFamily, y: &[usize]| -> Option<u64> {
        fam.iter()
            .filter(|(x, _)| x.iter().all(|v| !y.contains(v)))
            .filter(|(x, _)| {
                let mut xy = x.to_vec();
                xy.extend_from_slice(y);
                matrix.columns_independent(&xy)
            })
            .map(|(_, w)| w)
            .min()
    };
    for_each_small_subset(matrix.cols(), q, |y| match best_fit(family, y) {
        None => true,
        Some(w) => best_fit(candidate, y).is_some_and(|c| c <= w),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp61;
    use crate::matroid::tests::random_matroid;
    use crate::matroid::{build_gammoid, represent};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use rand::seq::index::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fp_rows(rows: &[&[u64]]) -> Matrix<Fp61> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Fp61::new(x)).collect()).collect())
    }

    #[test]
    fn binomials_and_subsets() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(
            subsets_lex(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(subsets_lex(3, 0), vec![Vec::<usize>::new()]);
        for n in 0..7 {
            for p in 0..=n {
                assert_eq!(subsets_lex(n, p).len(), binomial(n, p));
            }
        }
    }

    #[test]
    fn wedge_small_cases() {
        let m = fp_rows(&[&[1, 2, 0], &[3, 4, 0]]);
        assert_eq!(wedge_vector(&m, &[0, 1]).unwrap(), vec![Fp61::from(-2i64)]);
        assert_eq!(wedge_vector(&m, &[1]).unwrap(), m.column(1));
        assert!(wedge_vector(&m, &[2, 0]).unwrap().iter().all(|x| x.value() == 0));
        assert_eq!(
            wedge_vector(&m, &[0, 1, 2]),
            Err(RepError::SizeMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn extension_matches_direct_minors() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for k in 1..=6 {
            let m: Matrix<Fp61> = Matrix::random(k, 9, &mut rng);
            for p in 1..=k {
                let ext = WedgeExtender::new(k, p);
                let x = sample(&mut rng, 9, p).into_vec();
                let prev = wedge_vector(&m, &x[..p - 1]).unwrap();
                assert_eq!(ext.extend(&m, &prev, x[p - 1]), wedge_vector(&m, &x).unwrap());
            }
        }
    }

    #[test]
    fn wedge_nonzero_iff_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..20 {
            let mat = random_matroid(&mut rng, 8);
            let g = build_gammoid(&mat).unwrap();
            let fm = represent(&g, 0.01, 3).unwrap();
            let k = mat.rank_target();
            for p in 0..=k.min(4) {
                for x in subsets_lex(8, p) {
                    let nonzero = wedge_vector(&fm.matrix, &x).unwrap().iter().any(|e| e.value() != 0);
                    assert_eq!(nonzero, fm.matrix.columns_independent(&x));
                }
            }
        }
    }

    #[test]
    fn singleton_family_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m: Matrix<Fp61> = Matrix::random(4, 6, &mut rng);
        let fam = WeightedFamily::from_pairs(2, [(vec![1, 4], 7)]).unwrap();
        assert_eq!(min_q_representative(&m, &fam, 2, &mut rng).unwrap(), fam);
        assert!(check_representative(&m, &fam, &fam, 2));
        assert!(!check_representative(&m, &fam, &WeightedFamily::new(2), 2));
    }

    #[test]
    fn all_subsets_of_a_basis_are_kept() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for k in 2..=6 {
            let m = Matrix::<Fp61>::identity(k);
            for p in 1..k {
                let sets = subsets_lex(k, p);
                let fam = WeightedFamily::from_pairs(p, sets.iter().cloned().map(|s| (s, 1))).unwrap();
                let rep = min_q_representative(&m, &fam, k - p, &mut rng).unwrap();
                assert_eq!(rep.len(), sets.len().min(binomial(k, p)));
                assert!(check_representative(&m, &fam, &rep, k - p));
            }
        }
    }

    #[test]
    fn lighter_sets_preferred() {
        // uniform matroid of rank 2 on 4 elements; p = 1, q = 1: at most 2 kept
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m: Matrix<Fp61> = Matrix::random(2, 4, &mut rng);
        let fam = WeightedFamily::from_pairs(1, [(vec![0], 5), (vec![1], 1), (vec![2], 3), (vec![3], 1)]).unwrap();
        let rep = min_q_representative(&m, &fam, 1, &mut rng).unwrap();
        assert_eq!(rep.sets(), &[vec![1], vec![3]]);
        assert!(check_representative(&m, &fam, &rep, 1));
    }

    #[test]
    fn rank_deficiency_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = fp_rows(&[&[1, 1, 1], &[2, 2, 2], &[0, 0, 0]]);
        let fam = WeightedFamily::from_pairs(1, [(vec![0], 0)]).unwrap();
        assert!(matches!(
            min_q_representative(&m, &fam, 2, &mut rng),
            Err(RepError::RankDeficient { rank: 1, needed: 3 })
        ));
        assert!(matches!(
            min_q_representative(&m, &fam, 5, &mut rng),
            Err(RepError::RankDeficient { needed: 6, .. })
        ));
    }

    #[test]
    fn push_checks_size() {
        let mut fam = WeightedFamily::new(2);
        assert_eq!(
            fam.push(vec![1], 0),
            Err(RepError::SizeMismatch { expected: 2, got: 1 })
        );
    }

    fn random_family(rng: &mut ChaCha8Rng, m: &Matrix<Fp61>, p: usize, size: usize) -> WeightedFamily {
        let mut fam = WeightedFamily::new(p);
        for _ in 0..size * 4 {
            if fam.len() == size {
                break;
            }
            let x = sample(rng, m.cols(), p).into_vec();
            if m.columns_independent(&x) && !fam.sets().contains(&x) {
                fam.push(x, rng.gen_range(0..6)).unwrap();
            }
        }
        fam
    }

    #[test]
    fn idempotent_and_transitive() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..15 {
            let mat = random_matroid(&mut rng, 9);
            let k = mat.rank_target();
            if !mat.has_basis() || k < 2 {
                continue;
            }
            let fm = represent(&build_gammoid(&mat).unwrap(), 0.01, rng.gen()).unwrap();
            let p = rng.gen_range(1..k);
            let q = k - p;
            let fam = random_family(&mut rng, &fm.matrix, p, 25);
            let rep = min_q_representative(&fm.matrix, &fam, q, &mut rng).unwrap();
            assert!(rep.len() <= binomial(k, p));
            assert!(check_representative(&fm.matrix, &fam, &rep, q));
            assert_eq!(min_q_representative(&fm.matrix, &rep, q, &mut rng).unwrap(), rep);
            // representative of a representative still represents the original
            let shuffled = rep.subfamily(&(0..rep.len()).rev().collect::<Vec<_>>());
            let again = min_q_representative(&fm.matrix, &shuffled, q, &mut rng).unwrap();
            assert!(check_representative(&fm.matrix, &fam, &again, q));
        }
    }

    #[test]
    fn truncation_keeps_binomial_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..10 {
            let m: Matrix<Fp61> = Matrix::random(6, 9, &mut rng);
            let fam = random_family(&mut rng, &m, 2, 30);
            let rep = min_q_representative(&m, &fam, 1, &mut rng).unwrap();
            assert!(rep.len() <= binomial(3, 2));
            assert!(check_representative(&m, &fam, &rep, 1));
        }
    }

    /// The same selection over exact rationals and over F_p yields valid
    /// representatives with identical sizes on an integer matrix.
    #[test]
    fn rational_and_prime_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..8 {
            let ints: Vec<Vec<i64>> = (0..4)
                .map(|_| (0..7).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let fp = Matrix::from_rows(
                ints.iter()
                    .map(|r| r.iter().map(|&x| Fp61::from(x)).collect())
                    .collect(),
            );
            let q_mat: Matrix<BigRational> = Matrix::from_rows(
                ints.iter()
                    .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                    .collect(),
            );
            if q_mat.rank() < 4 {
                continue;
            }
            let sets = subsets_lex(7, 2);
            let pairs: Vec<(Vec<usize>, u64)> = sets.into_iter().map(|s| (s, rng.gen_range(0..4))).collect();
            let fam = WeightedFamily::from_pairs(2, pairs).unwrap();
            let wq: Vec<Vec<BigRational>> = fam.sets().iter().map(|s| wedge_vector(&q_mat, s).unwrap()).collect();
            let wp: Vec<Vec<Fp61>> = fam.sets().iter().map(|s| wedge_vector(&fp, s).unwrap()).collect();
            let kq = fam.subfamily(&select_by_span(&wq, fam.weights(), 6));
            let kp = fam.subfamily(&select_by_span(&wp, fam.weights(), 6));
            assert!(check_representative(&q_mat, &fam, &kq, 2));
            assert!(check_representative(&fp, &fam, &kp, 2));
            assert_eq!(kq.len(), kp.len());
        }
    }
}
