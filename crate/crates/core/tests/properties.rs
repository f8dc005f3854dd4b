//! Cross-module property suites: adjoint algebra, Witt completions,
//! signatures, Koszul consistency, structure endomorphisms, Killing-form
//! identities and the Jacobi/admissibility equivalence on random draws.

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lorlie_core::corpus;
use lorlie_core::dext::DoubleExtensionParams;
use lorlie_core::lie::LieAlgebra;
use lorlie_core::matrix::{basis_vec, Matrix, Subspace, Vector};
use lorlie_core::metric::PseudoEuclideanLieAlgebra;
use lorlie_core::pseudo::{complete_witt_basis, signature_of_symmetric, MetricTensor};
use lorlie_core::scalar::{Rational, Scalar};

type Q = Rational;

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix<Q> {
    Matrix::from_fn(n, n, |_, _| corpus::rational(rng, bound))
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector<Q> {
    (0..n).map(|_| corpus::rational(rng, bound)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjoint_is_involutive_antihomomorphism(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q_neg = rng.gen_range(0..=n);
        let g = corpus::random_metric(&mut rng, n, q_neg);
        let f = random_matrix(&mut rng, n, 3);
        let h = random_matrix(&mut rng, n, 3);
        prop_assert_eq!(g.adjoint(&g.adjoint(&f)), f.clone());
        prop_assert_eq!(g.adjoint(&(&f * &h)), &g.adjoint(&h) * &g.adjoint(&f));
        // pairing identity on basis vectors
        let fs = g.adjoint(&f);
        for i in 0..n {
            for j in 0..n {
                let u = basis_vec::<Q>(n, i);
                let v = basis_vec::<Q>(n, j);
                prop_assert_eq!(
                    g.inner(&f.mul_vec(&u), &v),
                    g.inner(&u, &fs.mul_vec(&v))
                );
            }
        }
    }

    #[test]
    fn signature_is_congruence_invariant(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q_neg = rng.gen_range(0..=n);
        let g = corpus::random_metric(&mut rng, n, q_neg);
        prop_assert_eq!(g.signature(), (q_neg, n - q_neg));
        let p = corpus::random_invertible(&mut rng, n, 2);
        let conjugated = &(&p.transpose() * g.matrix()) * &p;
        prop_assert_eq!(signature_of_symmetric(&conjugated).unwrap(), (q_neg, n - q_neg));
    }

    #[test]
    fn witt_completion_satisfies_invariants(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, e) = corpus::random_lorentzian_with_isotropic(&mut rng, n);
        let w = complete_witt_basis(&e, &g).unwrap();
        prop_assert!(w.check(&g).is_ok());
        prop_assert_eq!(w.e.clone(), e);
    }

    #[test]
    fn orthogonal_complement_dimensions(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q_neg = rng.gen_range(0..=n);
        let g = corpus::random_metric(&mut rng, n, q_neg);
        let k = rng.gen_range(0..=n);
        let s = Subspace::span(n, (0..k).map(|_| random_vector(&mut rng, n, 2)).collect());
        let perp = g.orthogonal_complement(&s);
        prop_assert_eq!(s.dim() + perp.dim(), n);
    }

    #[test]
    fn skew_maps_have_skew_adjoint(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, _) = corpus::random_lorentzian_with_isotropic(&mut rng, n);
        let a = corpus::random_skew(&mut rng, &g, 3);
        prop_assert!(g.is_skew_symmetric(&a));
        prop_assert_eq!(g.adjoint(&a), -&a);
    }
}

#[test]
fn koszul_consistency_on_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for p in corpus::sample_corpus(11, 30, 6) {
        let n = p.dim();
        for _ in 0..5 {
            let u = random_vector(&mut rng, n, 2);
            let v = random_vector(&mut rng, n, 2);
            let w = random_vector(&mut rng, n, 2);
            let luv = p.levi_civita(&u, &v);
            let lvu = p.levi_civita(&v, &u);
            assert_eq!(
                lorlie_core::matrix::vec_sub(&luv, &lvu),
                p.lie().bracket(&u, &v),
                "torsion-freeness failed"
            );
            let sym = p.metric().inner(&luv, &w) + p.metric().inner(&v, &p.levi_civita(&u, &w));
            assert!(sym.is_zero(), "metric skewness of L_u failed");
        }
    }
}

#[test]
fn structure_endos_verify_on_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
    for p in corpus::sample_corpus(23, 18, 5) {
        let n = p.dim();
        let se = p.structure_endos(&Matrix::identity(n)).unwrap();
        assert!(se.verify(&p), "reconstruction identity failed");
        // a random basis also reconstructs
        let basis = corpus::random_invertible(&mut rng, n, 1);
        let se = p.structure_endos(&basis).unwrap();
        assert!(se.verify(&p), "reconstruction in a random basis failed");
    }
}

#[test]
fn killing_form_is_derivation_antisymmetric() {
    // B(Du, u) = 0 for every derivation D
    let mut rng = ChaCha8Rng::seed_from_u64(0xFACE);
    for p in corpus::sample_corpus(31, 18, 5) {
        let b = p.lie().killing_form();
        for d in p.lie().derivation_space() {
            for _ in 0..4 {
                let u = random_vector(&mut rng, p.dim(), 2);
                let du = d.mul_vec(&u);
                let bdu = b.mul_vec(&u);
                let val = du
                    .iter()
                    .zip(&bdu)
                    .fold(Q::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
                assert!(val.is_zero(), "B(Du, u) != 0");
            }
        }
    }
}

#[test]
fn jacobi_iff_admissible_quick() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xABCD);
    let mut seen_good = 0;
    let mut seen_bad = 0;
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let g0 = PseudoEuclideanLieAlgebra::new(
            LieAlgebra::<Q>::abelian(n),
            MetricTensor::euclidean(n),
        )
        .unwrap();
        let mut k = Matrix::<Q>::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let x = corpus::rational(&mut rng, 2);
                k[(i, j)] = x.clone();
                k[(j, i)] = -x;
            }
        }
        let d = random_matrix(&mut rng, n, 2);
        let mu = corpus::rational(&mut rng, 2);
        let b = random_vector(&mut rng, n, 2);
        let params = DoubleExtensionParams::new(g0, k, d, mu, b).unwrap();
        let admissible = params.admissibility().admissible;
        let jacobi = params.build().unwrap().lie().jacobi_defect().is_zero();
        assert_eq!(admissible, jacobi);
        if admissible {
            seen_good += 1;
        } else {
            seen_bad += 1;
        }
    }
    assert!(seen_good > 0 && seen_bad > 0, "draws must exercise both outcomes");
}

#[test]
fn flag_certificates_are_sound_on_corpus() {
    for p in corpus::sample_corpus(47, 18, 5) {
        let cs = p.lie().complete_solvability();
        if let Some(flag) = cs.certificate() {
            assert!(lorlie_core::lie::check_flag(p.lie(), flag));
        }
    }
}

#[test]
fn r_operator_decomposes_into_adjoints() {
    // R_u = L_u - ad_u = -½(ad_u + ad_u*) - ½ J_u
    let half = Q::from_ratio(1, 2);
    for p in corpus::sample_corpus(53, 20, 5) {
        let tensor = p.levi_civita_tensor();
        for (i, l_op) in tensor.iter().enumerate() {
            let u = basis_vec::<Q>(p.dim(), i);
            let ad = p.lie().ad_basis(i);
            let r = l_op - &ad;
            let sym = (&ad + &p.metric().adjoint(&ad)).scale(&half);
            let expected = &sym.map(|x| -x.clone()) - &p.j_map(&u).scale(&half);
            assert!(r.eq_tol(&expected), "R decomposition failed");
        }
    }
}

#[test]
fn extension_operator_identities_on_random_draws() {
    // e-components of B̂(ē) and J₂(ē) in the built extension:
    // ⟨B̂(ē), ē⟩ = μ² + tr(D²) and ⟨J₂(ē), ē⟩ = -(2μ² + tr(K²))
    let mut rng = ChaCha8Rng::seed_from_u64(0x1DEA);
    let mut admissible_seen = 0;
    for _ in 0..60 {
        let n = rng.gen_range(1..=3);
        let g0 = PseudoEuclideanLieAlgebra::new(
            LieAlgebra::<Q>::abelian(n),
            MetricTensor::euclidean(n),
        )
        .unwrap();
        let mut k = Matrix::<Q>::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let x = corpus::rational(&mut rng, 2);
                k[(i, j)] = x.clone();
                k[(j, i)] = -x;
            }
        }
        let d = random_matrix(&mut rng, n, 2);
        let mu = corpus::rational(&mut rng, 2);
        let b = random_vector(&mut rng, n, 2);
        let params = DoubleExtensionParams::new(g0, k, d, mu, b).unwrap();
        if !params.admissibility().admissible {
            continue;
        }
        admissible_seen += 1;
        let built = params.build().unwrap();
        let ops = built.operators();
        let dim = built.dim();
        let e_bar = basis_vec::<Q>(dim, dim - 1);
        let b_hat_val = built.metric().inner(&ops.b_hat.mul_vec(&e_bar), &e_bar);
        let j2_val = built.metric().inner(&ops.j2.mul_vec(&e_bar), &e_bar);
        let mu2 = params.mu.clone() * params.mu.clone();
        let tr_d2 = (&params.d * &params.d).trace();
        let tr_k2 = (&params.k * &params.k).trace();
        assert_eq!(b_hat_val, mu2.clone() + tr_d2);
        assert_eq!(j2_val, -(Q::from_int(2) * mu2 + tr_k2));
    }
    assert!(admissible_seen >= 10, "draws must hit admissible parameter sets");
}
