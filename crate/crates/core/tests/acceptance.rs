//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `--nocapture`; cargo's own per-test lines mirror them).
//!
//! The shared corpus is 500 deterministic pseudo-Euclidean Lie algebras of
//! dimension ≤ 6 with exact rational constants. Float-mode comparisons use a
//! relative deviation bound of 1e-8; everything else is exact.

use std::sync::OnceLock;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lorlie_core::corpus;
use lorlie_core::dext::{extract, DoubleExtensionParams, ExtractionMode};
use lorlie_core::lie::{CompleteSolvability, LieAlgebra};
use lorlie_core::matrix::{vec_is_zero, Matrix, Subspace, Vector};
use lorlie_core::metric::PseudoEuclideanLieAlgebra;
use lorlie_core::pseudo::MetricTensor;
use lorlie_core::scalar::{Rational, Scalar};

type Q = Rational;

const CORPUS_SEED: u64 = 2024;
const CORPUS_SIZE: usize = 500;
const FLOAT_REL_TOL: f64 = 1e-8;

fn corpus_500() -> &'static [PseudoEuclideanLieAlgebra<Q>] {
    static CORPUS: OnceLock<Vec<PseudoEuclideanLieAlgebra<Q>>> = OnceLock::new();
    CORPUS.get_or_init(|| corpus::sample_corpus(CORPUS_SEED, CORPUS_SIZE, 6))
}

fn finish(name: &str, started: Instant, ok: bool) {
    println!(
        "{} {} ({:.2}s)",
        if ok { "PASS" } else { "FAIL" },
        name,
        started.elapsed().as_secs_f64()
    );
    assert!(ok, "{name} failed");
}

fn to_float(p: &PseudoEuclideanLieAlgebra<Q>) -> PseudoEuclideanLieAlgebra<f64> {
    let n = p.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = p.lie().basis_bracket(i, j);
            if !vec_is_zero(v) {
                brackets.push((i, j, v.iter().map(Scalar::to_f64).collect::<Vec<f64>>()));
            }
        }
    }
    let lie = LieAlgebra::new_unchecked(n, &brackets);
    let metric = MetricTensor::new(p.metric().matrix().to_f64())
        .expect("corpus metrics stay nondegenerate in f64");
    PseudoEuclideanLieAlgebra::new(lie, metric).expect("dimensions preserved")
}

fn rel_close(a: f64, b: f64) -> bool {
    (a - b).abs() <= FLOAT_REL_TOL * 1f64.max(a.abs()).max(b.abs())
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vector<Q> {
    (0..n).map(|_| corpus::rational(rng, bound)).collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix<Q> {
    Matrix::from_fn(n, n, |_, _| corpus::rational(rng, bound))
}

fn random_skew_plain(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix<Q> {
    let mut k = Matrix::<Q>::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = corpus::rational(rng, bound);
            k[(i, j)] = x.clone();
            k[(j, i)] = -x;
        }
    }
    k
}

// -------------------------------------------------------------------------
// 1. Ricci cross-formula agreement, exact and float

#[test]
fn criterion_01_ricci_cross_formula_agreement() {
    let started = Instant::now();
    let mut ok = true;
    for p in corpus_500() {
        let direct = p.ricci_direct();
        let via_r = p.ricci_via_r();
        let operator = p.ricci_operator_formula();
        if direct.ric != via_r || direct.ric != operator.ric {
            ok = false;
            break;
        }
        // float mode: the three routes stay within 1e-8 relative deviation
        let pf = to_float(p);
        let fd = pf.ricci_direct().ric;
        let fr = pf.ricci_via_r();
        let fo = pf.ricci_operator_formula().ric;
        let n = p.dim();
        for i in 0..n {
            for j in 0..n {
                if !rel_close(fd[(i, j)], fr[(i, j)]) || !rel_close(fd[(i, j)], fo[(i, j)]) {
                    ok = false;
                }
            }
        }
        if !ok {
            break;
        }
    }
    finish("criterion 1: Ricci cross-formula agreement (500 algebras)", started, ok);
}

// -------------------------------------------------------------------------
// 2. J-operator consistency on the same corpus

#[test]
fn criterion_02_j_operator_consistency() {
    let started = Instant::now();
    let ok = corpus_500().iter().all(|p| p.operators().consistent());
    finish("criterion 2: J1/J2 two-route agreement and tr J1 = tr J2", started, ok);
}

// -------------------------------------------------------------------------
// 3. Q-trace identity for random endomorphisms and derivations

#[test]
fn criterion_03_q_trace_identity() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x03);
    let mut ok = true;
    'outer: for p in corpus_500() {
        let n = p.dim();
        let ctx = p.q_trace_context();
        for _ in 0..100 {
            let e = random_matrix(&mut rng, n, 3);
            let (lhs, rhs) = p.trace_q_times_with(&ctx, &e);
            if lhs != rhs {
                ok = false;
                break 'outer;
            }
        }
        for d in p.lie().derivation_space() {
            let (lhs, rhs) = p.trace_q_times_with(&ctx, &d);
            if !lhs.is_zero() || !rhs.is_zero() {
                ok = false;
                break 'outer;
            }
        }
    }
    finish("criterion 3: tr(QE) identity, 100 maps per algebra + derivations", started, ok);
}

// -------------------------------------------------------------------------
// 4. Unimodular mechanism: tr(Ric·D) = 0 and forced λ = 0

#[test]
fn criterion_04_unimodular_ricci_derivation_mechanism() {
    let started = Instant::now();
    let mut ok = true;
    let mut forced_lambda_cases = 0;
    'outer: for p in corpus_500() {
        if !p.lie().is_unimodular() {
            continue;
        }
        let report = p.ricci_operator_formula();
        let derivations = p.lie().derivation_space();
        for d in &derivations {
            if !(&report.ric_operator * d).trace().is_zero() {
                ok = false;
                break 'outer;
            }
        }
        if report.einstein && derivations.iter().any(|d| !d.trace().is_zero()) {
            forced_lambda_cases += 1;
            if report.einstein_lambda != Some(Q::zero()) {
                ok = false;
                break 'outer;
            }
        }
    }
    ok = ok && forced_lambda_cases > 0;
    finish(
        "criterion 4: unimodular tr(Ric D) = 0, nonzero-trace derivation forces lambda = 0",
        started,
        ok,
    );
}

// -------------------------------------------------------------------------
// 5. Jacobi ⇔ admissibility over 500 draws plus the mean-curvature formula

fn extension_draw(rng: &mut ChaCha8Rng, index: usize) -> DoubleExtensionParams<Q> {
    // base rotates over abelian dimensions, the Heisenberg algebra and the
    // affine line plus a flat direction
    let base_kind = index % 4;
    let (g0, der_basis): (PseudoEuclideanLieAlgebra<Q>, Vec<Matrix<Q>>) = match base_kind {
        0 | 1 => {
            let n = rng.gen_range(1..=4);
            let lie = LieAlgebra::<Q>::abelian(n);
            let p = PseudoEuclideanLieAlgebra::new(lie, MetricTensor::euclidean(n)).unwrap();
            let ders = p.lie().derivation_space();
            (p, ders)
        }
        2 => {
            let p = PseudoEuclideanLieAlgebra::new(
                corpus::heisenberg_sum(3),
                MetricTensor::euclidean(3),
            )
            .unwrap();
            let ders = p.lie().derivation_space();
            (p, ders)
        }
        _ => {
            let p = PseudoEuclideanLieAlgebra::new(
                corpus::affine_sum(3),
                MetricTensor::euclidean(3),
            )
            .unwrap();
            let ders = p.lie().derivation_space();
            (p, ders)
        }
    };
    let n = g0.dim();
    // half the draws take a genuine derivation, half a random matrix
    let d = if rng.gen_bool(0.5) {
        let mut acc = Matrix::<Q>::zeros(n, n);
        for m in &der_basis {
            let c = corpus::rational(rng, 2);
            if !c.is_zero() {
                acc = &acc + &m.scale(&c);
            }
        }
        acc
    } else {
        random_matrix(rng, n, 2)
    };
    let k = random_skew_plain(rng, n, 2);
    let mu = corpus::rational(rng, 2);
    let b = random_vector(rng, n, 2);
    DoubleExtensionParams::new(g0, k, d, mu, b).unwrap()
}

#[test]
fn criterion_05_jacobi_iff_admissible_and_mean_curvature() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x05);
    let mut admissible_count = 0;
    let mut broken_count = 0;
    let mut ok = true;
    for index in 0..520 {
        let params = extension_draw(&mut rng, index);
        let admissible = params.admissibility().admissible;
        let built = params.build().unwrap();
        let jacobi = built.lie().jacobi_defect().is_zero();
        if admissible != jacobi {
            ok = false;
            break;
        }
        // H = (μ + tr D) e + H⁰, exactly, Lie algebra or not
        if built.mean_curvature() != params.mean_curvature_formula() {
            ok = false;
            break;
        }
        if admissible {
            admissible_count += 1;
        } else {
            broken_count += 1;
        }
    }
    ok = ok && admissible_count >= 50 && broken_count >= 50;
    finish(
        "criterion 5: Jacobi(build) = 0 iff admissible over 520 draws, H formula exact",
        started,
        ok,
    );
}

// -------------------------------------------------------------------------
// 6. Einstein conditions ⇔ Ricci oracle on admissible draws

#[test]
fn criterion_06_einstein_conditions_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x06);
    let mut ok = true;
    let mut einstein_count = 0;
    let mut non_einstein_count = 0;

    // admissible draws from the same sampler
    let mut checked = 0;
    let mut index = 0;
    while checked < 120 && index < 4000 {
        let params = extension_draw(&mut rng, index);
        index += 1;
        if !params.admissibility().admissible {
            continue;
        }
        checked += 1;
        let conditions = params.einstein_conditions().unwrap();
        let built = params.build().unwrap();
        let oracle = built.einstein_check().map(|l| l.is_zero()).unwrap_or(false);
        if conditions.einstein != oracle {
            ok = false;
            break;
        }
        if conditions.einstein {
            einstein_count += 1;
        } else {
            non_einstein_count += 1;
        }
    }

    // certified Einstein members exercise the positive branch
    for cert in corpus::einstein_examples(CORPUS_SEED, 30, 3) {
        let conditions = cert.params.einstein_conditions().unwrap();
        let built = cert.params.build().unwrap();
        let oracle = built.einstein_check().map(|l| l.is_zero()).unwrap_or(false);
        if !(conditions.einstein && oracle) {
            ok = false;
        }
        einstein_count += 1;
    }

    // the worked example under the literal Ricci trace
    let worked = DoubleExtensionParams::over_abelian(
        Matrix::<Q>::from_int_rows(&[&[0, 2], &[-2, 0]]),
        Matrix::<Q>::from_int_rows(&[&[1, 0], &[0, -1]]),
        Q::zero(),
        vec![Q::zero(), Q::zero()],
    )
    .unwrap();
    let direct = worked.build().unwrap().ricci_direct();
    ok = ok
        && worked.einstein_conditions().unwrap().einstein
        && direct.ric_operator.is_zero()
        && direct.einstein_lambda == Some(Q::zero());
    ok = ok && einstein_count > 0 && non_einstein_count > 0;
    finish(
        "criterion 6: Einstein conditions match the Ricci oracle; worked example Ric = 0",
        started,
        ok,
    );
}

// -------------------------------------------------------------------------
// 7. Extraction round-trip on 100 generated Einstein extensions

#[test]
fn criterion_07_extraction_round_trip() {
    let started = Instant::now();
    let mut certs = Vec::new();
    for dim in 2..=5 {
        certs.extend(corpus::einstein_examples(CORPUS_SEED + dim as u64, 25, dim));
    }
    let mut ok = certs.len() == 100;
    for cert in &certs {
        let built = cert.params.build().unwrap();
        let extraction = match extract(&built, ExtractionMode::DerivedDegenerate) {
            Ok(ex) => ex,
            Err(_) => match extract(&built, ExtractionMode::CenterDegenerate) {
                Ok(ex) => ex,
                Err(_) => {
                    ok = false;
                    break;
                }
            },
        };
        if !extraction.params.g0.lie().is_abelian() {
            ok = false;
            break;
        }
        let mu_ok = match extraction.mode {
            ExtractionMode::DerivedDegenerate => {
                extraction.params.mu == -extraction.params.d.trace()
            }
            ExtractionMode::CenterDegenerate => extraction.params.mu.is_zero(),
        };
        if !mu_ok
            || !extraction.round_trip_matches(&built).unwrap()
            || built.einstein_check() != Some(Q::zero())
        {
            ok = false;
            break;
        }
    }
    finish("criterion 7: 100 Einstein extensions extract and rebuild exactly", started, ok);
}

// -------------------------------------------------------------------------
// 8. The two isotropic lemmas over 1000 draws

/// Skew maps with `A e = 0` and `A(e^⊥) ⊆ ℝe`, solved inside the
/// annihilating space (the equality branch of the kernel-trace lemma).
fn equality_branch_basis(
    g: &MetricTensor<Q>,
    e: &[Q],
    annihilating: &[Matrix<Q>],
) -> Vec<Matrix<Q>> {
    let n = g.dim();
    if annihilating.is_empty() {
        return Vec::new();
    }
    let pivot = (0..n).rev().find(|&i| !e[i].is_zero()).expect("e is nonzero");
    let e_line = Subspace::span(n, vec![e.to_vec()]);
    let e_perp = g.orthogonal_complement(&e_line);
    let mut rows: Vec<Vector<Q>> = Vec::new();
    for w in e_perp.basis() {
        for i in 0..n {
            if i == pivot {
                continue;
            }
            // (A w)_i e_pivot - (A w)_pivot e_i = 0 keeps A w inside ℝe
            let row = annihilating
                .iter()
                .map(|a| {
                    let aw = a.mul_vec(w);
                    aw[i].clone() * e[pivot].clone() - aw[pivot].clone() * e[i].clone()
                })
                .collect();
            rows.push(row);
        }
    }
    Matrix::from_rows(rows)
        .kernel()
        .into_iter()
        .map(|coords| {
            let mut acc = Matrix::<Q>::zeros(n, n);
            for (c, a) in coords.iter().zip(annihilating) {
                if !c.is_zero() {
                    acc = &acc + &a.scale(c);
                }
            }
            acc
        })
        .collect()
}

#[test]
fn criterion_08_isotropic_lemmas() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x08);
    let mut ok = true;
    let mut equality_draws = 0;
    'outer: for draw in 0..1000 {
        let n = rng.gen_range(2..=6);
        let (g, e) = corpus::random_lorentzian_with_isotropic(&mut rng, n);
        let e_line = Subspace::span(n, vec![e.clone()]);
        let annihilating = corpus::skew_annihilating_basis(&g, &e);
        match draw % 3 {
            0 => {
                // generic skew: ⟨Ae, Ae⟩ ≥ 0 with equality iff Ae ∈ ℝe
                let a = corpus::random_skew(&mut rng, &g, 3);
                let ae = a.mul_vec(&e);
                let norm = g.inner(&ae, &ae);
                if norm < Q::zero() || (norm.is_zero() != e_line.contains(&ae)) {
                    ok = false;
                    break 'outer;
                }
            }
            1 => {
                // A e = 0: tr(A²) ≤ 0
                let Some(a) = corpus::random_combination(&mut rng, &annihilating, 3) else {
                    continue;
                };
                let ae = a.mul_vec(&e);
                if !vec_is_zero(&ae) {
                    ok = false;
                    break 'outer;
                }
                let t = (&a * &a).trace();
                if t > Q::zero() {
                    ok = false;
                    break 'outer;
                }
            }
            _ => {
                // equality branch: tr(A²) = 0, A(e^⊥) ⊆ ℝe, tr(AB) = 0
                let branch = equality_branch_basis(&g, &e, &annihilating);
                let Some(a) = corpus::random_combination(&mut rng, &branch, 3) else {
                    continue;
                };
                equality_draws += 1;
                if !(&a * &a).trace().is_zero() {
                    ok = false;
                    break 'outer;
                }
                let e_perp = g.orthogonal_complement(&e_line);
                for w in e_perp.basis() {
                    if !e_line.contains(&a.mul_vec(w)) {
                        ok = false;
                        break 'outer;
                    }
                }
                for _ in 0..4 {
                    let Some(b) = corpus::random_combination(&mut rng, &annihilating, 3)
                    else {
                        break;
                    };
                    if !(&a * &b).trace().is_zero() {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    ok = ok && equality_draws >= 100;
    finish("criterion 8: isotropic-image and isotropic-kernel lemmas, 1000 draws", started, ok);
}

// -------------------------------------------------------------------------
// 9. Killing-form positivity on certified flag algebras

#[test]
fn criterion_09_killing_form_sign() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x09);
    let mut ok = true;
    let mut certified = 0;
    'outer: for p in corpus_500() {
        let CompleteSolvability::Certified { .. } = p.lie().complete_solvability() else {
            continue;
        };
        certified += 1;
        let b = p.lie().killing_form();
        let n = p.dim();
        for i in 0..n {
            if b[(i, i)] < Q::zero() {
                ok = false;
                break 'outer;
            }
        }
        for _ in 0..100 {
            let u = random_vector(&mut rng, n, 3);
            let bu = b.mul_vec(&u);
            let quad =
                u.iter().zip(&bu).fold(Q::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
            if quad < Q::zero() {
                ok = false;
                break 'outer;
            }
        }
    }
    ok = ok && certified >= 100;
    finish(
        "criterion 9: Killing form positive semi-definite on certified members",
        started,
        ok,
    );
}
