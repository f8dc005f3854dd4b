//! Deterministic corpus of pseudo-Euclidean Lie algebras for property suites
//! and fixtures.
//!
//! Random antisymmetric structure constants almost never satisfy Jacobi, so
//! the corpus draws from constructions that are Lie algebras by design:
//! abelian algebras, Heisenberg sums, two-step nilpotent brackets into a
//! central block, almost-abelian semidirect lines, solvable sums and
//! admissible double extensions. Metrics are random congruences of diagonal
//! sign forms. Identical seeds give identical corpora.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dext::DoubleExtensionParams;
use crate::lie::LieAlgebra;
use crate::matrix::{vec_zero, Matrix, Vector};
use crate::metric::PseudoEuclideanLieAlgebra;
use crate::pseudo::MetricTensor;
use crate::scalar::{Rational, Scalar};
use crate::search;

type Q = Rational;

pub fn rational(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    Q::from_ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

fn rational_vec(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector<Q> {
    (0..n).map(|_| rational(rng, bound)).collect()
}

/// Unipotent-upper times unipotent-lower product: invertible with modest
/// entries and determinant one.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix<Q> {
    let mut upper = Matrix::<Q>::identity(n);
    let mut lower = Matrix::<Q>::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            upper[(i, j)] = rational(rng, bound);
            lower[(j, i)] = rational(rng, bound);
        }
    }
    &upper * &lower
}

/// Random nondegenerate metric with `q` negative directions, as a congruence
/// `Pᵀ diag(±1) P`.
pub fn random_metric(rng: &mut ChaCha8Rng, n: usize, q: usize) -> MetricTensor<Q> {
    assert!(q <= n);
    let p = random_invertible(rng, n, 1);
    let mut diag = Matrix::<Q>::identity(n);
    for i in 0..q {
        diag[(i, i)] = Q::from_int(-1);
    }
    let g = &(&p.transpose() * &diag) * &p;
    MetricTensor::new(g).expect("congruence of a sign form is nondegenerate")
}

/// Random Lorentzian metric built around a Witt pair, together with a
/// rational isotropic vector for it.
pub fn random_lorentzian_with_isotropic(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> (MetricTensor<Q>, Vector<Q>) {
    assert!(n >= 2);
    let mut witt = Matrix::<Q>::identity(n);
    witt[(0, 0)] = Q::zero();
    witt[(1, 1)] = Q::zero();
    witt[(0, 1)] = Q::from_int(1);
    witt[(1, 0)] = Q::from_int(1);
    let p = random_invertible(rng, n, 1);
    let g = &(&p.transpose() * &witt) * &p;
    let e = p.inverse().expect("unipotent product is invertible").col(0);
    (MetricTensor::new(g).expect("Witt congruence is nondegenerate"), e)
}

/// Heisenberg algebra `[e1, e2] = e3` padded with central directions.
pub fn heisenberg_sum(dim: usize) -> LieAlgebra<Q> {
    assert!(dim >= 3);
    let mut v = vec_zero::<Q>(dim);
    v[2] = Q::from_int(1);
    LieAlgebra::new(dim, &[(0, 1, v)]).expect("Heisenberg satisfies Jacobi")
}

/// Two-step nilpotent algebra: brackets of the first `v` directions land in
/// the remaining central block.
pub fn two_step_nilpotent(rng: &mut ChaCha8Rng, v: usize, z: usize, bound: i64) -> LieAlgebra<Q> {
    let dim = v + z;
    let mut brackets = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            let mut w = vec_zero::<Q>(dim);
            for entry in w.iter_mut().skip(v) {
                *entry = rational(rng, bound);
            }
            brackets.push((i, j, w));
        }
    }
    LieAlgebra::new(dim, &brackets).expect("two-step brackets satisfy Jacobi")
}

/// Almost-abelian algebra `[e1, v] = Av` on the last `n-1` directions.
pub fn almost_abelian(rng: &mut ChaCha8Rng, n: usize, bound: i64, traceless: bool) -> LieAlgebra<Q> {
    assert!(n >= 2);
    let m = n - 1;
    let mut a = Matrix::<Q>::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            a[(i, j)] = rational(rng, bound);
        }
    }
    if traceless && m > 0 {
        let correction = a.trace() / Q::from_int(m as i64);
        for i in 0..m {
            a[(i, i)] = a[(i, i)].clone() - correction.clone();
        }
    }
    let mut brackets = Vec::new();
    for j in 0..m {
        let mut w = vec_zero::<Q>(n);
        for i in 0..m {
            w[i + 1] = a[(i, j)].clone();
        }
        brackets.push((0, j + 1, w));
    }
    LieAlgebra::new(n, &brackets).expect("semidirect line satisfies Jacobi")
}

/// The solvable line `[e1, e2] = e2` padded with central directions.
pub fn affine_sum(dim: usize) -> LieAlgebra<Q> {
    assert!(dim >= 2);
    let mut v = vec_zero::<Q>(dim);
    v[1] = Q::from_int(1);
    LieAlgebra::new(dim, &[(0, 1, v)]).expect("affine line satisfies Jacobi")
}

/// One deterministic corpus member; families rotate with `index`.
pub fn corpus_member(seed: u64, index: usize, max_dim: usize) -> PseudoEuclideanLieAlgebra<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(
        seed ^ 0xA076_1D64_78BD_642Fu64.wrapping_mul(index as u64 + 1),
    );
    let family = index % 6;
    let max_dim = max_dim.max(3);
    match family {
        0 => {
            let n = rng.gen_range(1..=max_dim);
            let q = rng.gen_range(0..=n);
            PseudoEuclideanLieAlgebra::new(LieAlgebra::abelian(n), random_metric(&mut rng, n, q))
        }
        1 => {
            let n = rng.gen_range(3..=max_dim);
            let q = rng.gen_range(0..=n);
            PseudoEuclideanLieAlgebra::new(heisenberg_sum(n), random_metric(&mut rng, n, q))
        }
        2 => {
            let v = rng.gen_range(2..=(max_dim - 1).max(2));
            let z = rng.gen_range(1..=(max_dim - v).max(1));
            let n = v + z;
            let q = rng.gen_range(0..=n);
            let lie = two_step_nilpotent(&mut rng, v, z, 2);
            PseudoEuclideanLieAlgebra::new(lie, random_metric(&mut rng, n, q))
        }
        3 => {
            let n = rng.gen_range(2..=max_dim);
            let q = rng.gen_range(0..=n);
            let traceless = rng.gen_bool(0.5);
            let lie = almost_abelian(&mut rng, n, 2, traceless);
            PseudoEuclideanLieAlgebra::new(lie, random_metric(&mut rng, n, q))
        }
        4 => {
            let n = rng.gen_range(2..=max_dim);
            let q = rng.gen_range(0..=n);
            PseudoEuclideanLieAlgebra::new(affine_sum(n), random_metric(&mut rng, n, q))
        }
        _ => {
            // admissible double extension over an abelian base, Witt metric
            let base = rng.gen_range(1..=(max_dim.saturating_sub(2)).max(1));
            let scales: Vec<Q> = (0..base / 2).map(|_| rational(&mut rng, 2)).collect();
            let (d, k) = canonical_blocks(&scales, base);
            let b = rational_vec(&mut rng, base, 2);
            let params = DoubleExtensionParams::over_abelian(k, d, Q::zero(), b)
                .expect("canonical blocks are skew");
            Ok(params.build().expect("extension metric is nondegenerate"))
        }
    }
    .expect("corpus member dimensions always match")
}

fn canonical_blocks(scales: &[Q], n: usize) -> (Matrix<Q>, Matrix<Q>) {
    let mut d = Matrix::<Q>::zeros(n, n);
    let mut k = Matrix::<Q>::zeros(n, n);
    for (block, a) in scales.iter().enumerate() {
        let (i, j) = (2 * block, 2 * block + 1);
        if j >= n {
            break;
        }
        d[(i, i)] = a.clone();
        d[(j, j)] = -a.clone();
        let two_a = Q::from_int(2) * a.clone();
        k[(i, j)] = -two_a.clone();
        k[(j, i)] = two_a;
    }
    (d, k)
}

/// Deterministic corpus of `count` algebras with dimensions up to `max_dim`.
pub fn sample_corpus(seed: u64, count: usize, max_dim: usize) -> Vec<PseudoEuclideanLieAlgebra<Q>> {
    (0..count).map(|i| corpus_member(seed, i, max_dim)).collect()
}

/// Random skew-symmetric endomorphism with respect to `g`: `g⁻¹·A` for
/// antisymmetric `A`.
pub fn random_skew(rng: &mut ChaCha8Rng, g: &MetricTensor<Q>, bound: i64) -> Matrix<Q> {
    let n = g.dim();
    let mut a = Matrix::<Q>::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = rational(rng, bound);
            a[(i, j)] = x.clone();
            a[(j, i)] = -x;
        }
    }
    g.inverse_matrix() * &a
}

/// Basis of the skew-symmetric endomorphisms annihilating `e`: solutions of
/// `Σ e = 0` over antisymmetric `Σ`, mapped through `A = g⁻¹Σ`.
pub fn skew_annihilating_basis(g: &MetricTensor<Q>, e: &[Q]) -> Vec<Matrix<Q>> {
    let n = g.dim();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    if pairs.is_empty() {
        return Vec::new();
    }
    // rows of (Σ e) per skew coordinate
    let mut rows: Vec<Vector<Q>> = vec![vec![Q::zero(); pairs.len()]; n];
    for (col, &(i, j)) in pairs.iter().enumerate() {
        rows[i][col] = e[j].clone();
        rows[j][col] = -e[i].clone();
    }
    Matrix::from_rows(rows)
        .kernel()
        .into_iter()
        .map(|coords| {
            let mut sigma = Matrix::<Q>::zeros(n, n);
            for (c, &(i, j)) in coords.iter().zip(&pairs) {
                sigma[(i, j)] = c.clone();
                sigma[(j, i)] = -c.clone();
            }
            g.inverse_matrix() * &sigma
        })
        .collect()
}

/// Random combination of a matrix basis.
pub fn random_combination(
    rng: &mut ChaCha8Rng,
    basis: &[Matrix<Q>],
    bound: i64,
) -> Option<Matrix<Q>> {
    let first = basis.first()?;
    let mut acc = Matrix::<Q>::zeros(first.nrows(), first.ncols());
    for m in basis {
        let c = rational(rng, bound);
        if !c.is_zero() {
            acc = &acc + &m.scale(&c);
        }
    }
    Some(acc)
}

/// Certified Einstein double extensions reused from the search module.
pub fn einstein_examples(seed: u64, count: usize, dim_g0: usize) -> Vec<search::Certificate> {
    let mut config = search::SearchConfig::new(dim_g0, seed, count * 2 + 4);
    config.entry_bound = 2;
    let mut certs = search::generate(&config).certificates;
    certs.truncate(count);
    certs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_members_are_lie_algebras_with_valid_metrics() {
        for (i, p) in sample_corpus(42, 24, 6).iter().enumerate() {
            assert!(p.lie().jacobi_defect().is_zero(), "member {} violates Jacobi", i);
            let (neg, pos) = p.metric().signature();
            assert_eq!(neg + pos, p.dim());
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = sample_corpus(7, 10, 5);
        let b = sample_corpus(7, 10, 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.metric().matrix(), y.metric().matrix());
            assert_eq!(x.lie(), y.lie());
        }
    }

    #[test]
    fn lorentzian_generator_produces_isotropic_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let n = rng.gen_range(2..=6);
            let (g, e) = random_lorentzian_with_isotropic(&mut rng, n);
            assert_eq!(g.signature(), (1, n - 1));
            assert!(g.is_isotropic(&e));
        }
    }

    #[test]
    fn random_skew_is_skew() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let (g, _) = random_lorentzian_with_isotropic(&mut rng, 4);
            let a = random_skew(&mut rng, &g, 3);
            assert!(g.is_skew_symmetric(&a));
        }
    }
}
