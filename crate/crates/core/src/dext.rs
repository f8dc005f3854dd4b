//! Double extensions `g = ℝe ⊕ g₀ ⊕ ℝē` of a Euclidean Lie algebra with
//! parameters `(K, D, μ, b)`:
//!
//! * `build` produces the Lorentzian algebra with `[ē,e] = μe`,
//!   `[ē,u] = D(u) + ⟨b,u⟩₀ e`, `[u,v] = [u,v]₀ + ⟨K(u),v⟩₀ e` and the Witt
//!   metric `⟨e,e⟩ = ⟨ē,ē⟩ = 0`, `⟨e,ē⟩ = 1`;
//! * `admissibility` decides when the bracket satisfies Jacobi
//!   (`D` a derivation, `ω = ⟨K·,·⟩₀` a 2-cocycle, `KD + D*K = μK + J_b⁰`);
//! * `einstein_conditions` evaluates the trace equations that make the
//!   extension Ricci-flat;
//! * `extract` runs the inverse construction on a Lorentzian completely
//!   solvable unimodular Einstein algebra whose derived ideal (mode 1) or
//!   center (mode 2) is degenerate, returning parameters over an abelian
//!   base together with the adapted basis.
//!
//! Matrices act on column vectors throughout; `K` maps `u ↦ K·u`.

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::{basis_vec, vec_scale, vec_sub, vec_zero, Matrix, Subspace, Vector};
use crate::metric::PseudoEuclideanLieAlgebra;
use crate::pseudo::{gram_schmidt, MetricTensor};
use crate::scalar::Scalar;

/// Parameters of a double extension over a Euclidean base.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleExtensionParams<K: Scalar> {
    pub g0: PseudoEuclideanLieAlgebra<K>,
    pub k: Matrix<K>,
    pub d: Matrix<K>,
    pub mu: K,
    pub b: Vector<K>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdmissibilityReport<K: Scalar> {
    pub is_derivation: bool,
    pub is_cocycle: bool,
    /// `KD + D*K − μK − J_b⁰`.
    pub dext0_residual: Matrix<K>,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EinsteinConditionsReport<K: Scalar> {
    pub g0_ricci_flat: bool,
    /// `4 tr(ad_b⁰) + 4μ tr(D) − 2 tr(D²) − 2 tr(DD*) − tr(K²)`.
    pub dext1_residual: K,
    /// `tr(J_u⁰K) + 2 tr((D+D*) ad_u⁰) + 2 tr(ad⁰_{D*(u)}) − 2 tr(ad⁰_{K(u)})`
    /// per base basis vector `u`.
    pub dext2_residuals: Vector<K>,
    pub einstein: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtractionMode {
    /// `[g,g]` degenerate; `e` spans `[g,g] ∩ [g,g]^⊥`.
    DerivedDegenerate,
    /// `Z(g)` nontrivial with an isotropic vector; `e ∈ Z(g)`.
    CenterDegenerate,
}

/// Result of the inverse construction: parameters over an abelian base and
/// the adapted basis `(e, f₁, …, f_n, ē)` as columns in original coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Extraction<K: Scalar> {
    pub params: DoubleExtensionParams<K>,
    pub basis: Matrix<K>,
    pub mode: ExtractionMode,
}

impl<K: Scalar> DoubleExtensionParams<K> {
    pub fn new(
        g0: PseudoEuclideanLieAlgebra<K>,
        k: Matrix<K>,
        d: Matrix<K>,
        mu: K,
        b: Vector<K>,
    ) -> Result<Self> {
        let n = g0.dim();
        if !g0.metric().is_euclidean() {
            return Err(Error::HypothesisFailed("base metric is not Euclidean".into()));
        }
        if k.nrows() != n || k.ncols() != n || d.nrows() != n || d.ncols() != n || b.len() != n {
            return Err(Error::ShapeMismatch { expected: n, got: k.nrows().max(b.len()) });
        }
        if !g0.metric().is_skew_symmetric(&k) {
            return Err(Error::HypothesisFailed("K is not skew-symmetric on the base".into()));
        }
        Ok(DoubleExtensionParams { g0, k, d, mu, b })
    }

    /// Convenience constructor over the abelian base `ℝⁿ` with the identity
    /// metric.
    pub fn over_abelian(k: Matrix<K>, d: Matrix<K>, mu: K, b: Vector<K>) -> Result<Self> {
        let n = d.nrows();
        let g0 =
            PseudoEuclideanLieAlgebra::new(LieAlgebra::abelian(n), MetricTensor::euclidean(n))?;
        Self::new(g0, k, d, mu, b)
    }

    pub fn base_dim(&self) -> usize {
        self.g0.dim()
    }

    fn embed(&self, u: &[K]) -> Vector<K> {
        let n = self.base_dim();
        let mut v = vec_zero::<K>(n + 2);
        for (i, x) in u.iter().enumerate() {
            v[i + 1] = x.clone();
        }
        v
    }

    /// The extension: dimension `n+2` with basis order `(e, u₁, …, uₙ, ē)`.
    /// Admissibility is not required; the result satisfies Jacobi iff the
    /// parameters are admissible.
    pub fn build(&self) -> Result<PseudoEuclideanLieAlgebra<K>> {
        let n = self.base_dim();
        let dim = n + 2;
        let g0m = self.g0.metric();
        let mut brackets: Vec<(usize, usize, Vector<K>)> = Vec::new();
        // [e, ē] = -μ e
        let mut v = vec_zero::<K>(dim);
        v[0] = -self.mu.clone();
        brackets.push((0, dim - 1, v));
        // [u_j, ē] = -(D u_j + ⟨b, u_j⟩₀ e)
        for j in 0..n {
            let uj = basis_vec::<K>(n, j);
            let mut v = self.embed(&self.d.col(j));
            v[0] = v[0].clone() + g0m.inner(&self.b, &uj);
            brackets.push((j + 1, dim - 1, v.iter().map(|x| -x.clone()).collect()));
        }
        // [u_i, u_j] = [u_i, u_j]₀ + ⟨K u_i, u_j⟩₀ e
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.embed(self.g0.lie().basis_bracket(i, j));
                v[0] = v[0].clone() + g0m.inner(&self.k.col(i), &basis_vec::<K>(n, j));
                brackets.push((i + 1, j + 1, v));
            }
        }
        let lie = LieAlgebra::new_unchecked(dim, &brackets);
        let mut g = Matrix::<K>::zeros(dim, dim);
        g[(0, dim - 1)] = K::one();
        g[(dim - 1, 0)] = K::one();
        for i in 0..n {
            for j in 0..n {
                g[(i + 1, j + 1)] = g0m.matrix()[(i, j)].clone();
            }
        }
        PseudoEuclideanLieAlgebra::new(lie, MetricTensor::new(g)?)
    }

    /// `D*`, the adjoint of `D` with respect to the base metric.
    pub fn d_adjoint(&self) -> Matrix<K> {
        self.g0.metric().adjoint(&self.d)
    }

    pub fn admissibility(&self) -> AdmissibilityReport<K> {
        let n = self.base_dim();
        let g0m = self.g0.metric();
        let is_derivation = self.g0.lie().is_derivation(&self.d);
        // dω(u,v,w) = Σ_cyclic ⟨K [u,v]₀, w⟩₀ over basis triples
        let mut is_cocycle = true;
        'outer: for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let (u, v, w) =
                        (basis_vec::<K>(n, i), basis_vec::<K>(n, j), basis_vec::<K>(n, l));
                    let omega = |x: &Vector<K>, y: &Vector<K>| g0m.inner(&self.k.mul_vec(x), y);
                    let s = omega(&self.g0.lie().bracket(&u, &v), &w)
                        + omega(&self.g0.lie().bracket(&v, &w), &u)
                        + omega(&self.g0.lie().bracket(&w, &u), &v);
                    if !s.is_zero_tol() {
                        is_cocycle = false;
                        break 'outer;
                    }
                }
            }
        }
        let d_star = self.d_adjoint();
        let j_b = self.g0.j_map(&self.b);
        let residual =
            &(&(&self.k * &self.d) + &(&d_star * &self.k)) - &(&self.k.scale(&self.mu) + &j_b);
        let admissible = is_derivation && is_cocycle && residual.is_zero();
        AdmissibilityReport { is_derivation, is_cocycle, dext0_residual: residual, admissible }
    }

    /// Mean-curvature vector of the built algebra and the unimodularity
    /// criterion `tr(D) = -μ` (with unimodular base).
    pub fn unimodularity(&self) -> Result<(Vector<K>, bool)> {
        let built = self.build()?;
        let h = built.mean_curvature();
        let unimodular =
            self.g0.lie().is_unimodular() && (self.d.trace() + self.mu.clone()).is_zero_tol();
        Ok((h, unimodular))
    }

    /// Expected mean curvature `(μ + tr D) e + H⁰` in extension coordinates.
    pub fn mean_curvature_formula(&self) -> Vector<K> {
        let mut h = self.embed(&self.g0.mean_curvature());
        h[0] = h[0].clone() + self.mu.clone() + self.d.trace();
        h
    }

    /// The Einstein trace equations plus Ricci-flatness of the base.
    pub fn einstein_conditions(&self) -> Result<EinsteinConditionsReport<K>> {
        if !self.admissibility().admissible {
            return Err(Error::NotAdmissible);
        }
        let n = self.base_dim();
        let two = K::from_int(2);
        let four = K::from_int(4);
        let d_star = self.d_adjoint();
        let g0_ricci_flat = self.g0.ricci_operator_formula().ricci_flat;
        let ad_b = self.g0.lie().ad(&self.b);
        let dext1_residual = four.clone() * ad_b.trace()
            + four * self.mu.clone() * self.d.trace()
            - two.clone() * (&self.d * &self.d).trace()
            - two.clone() * (&self.d * &d_star).trace()
            - (&self.k * &self.k).trace();
        let d_sym = &self.d + &d_star;
        let dext2_residuals: Vector<K> = (0..n)
            .map(|i| {
                let u = basis_vec::<K>(n, i);
                let ad_u = self.g0.lie().ad_basis(i);
                let j_u = self.g0.j_map(&u);
                (&j_u * &self.k).trace()
                    + two.clone() * (&d_sym * &ad_u).trace()
                    + two.clone() * self.g0.lie().ad(&d_star.mul_vec(&u)).trace()
                    - two.clone() * self.g0.lie().ad(&self.k.mul_vec(&u)).trace()
            })
            .collect();
        let einstein = g0_ricci_flat
            && dext1_residual.is_zero_tol()
            && dext2_residuals.iter().all(|x| x.is_zero_tol());
        Ok(EinsteinConditionsReport { g0_ricci_flat, dext1_residual, dext2_residuals, einstein })
    }
}

/// Vectors of `space` extending `seed` to a basis of `space`.
fn complete_inside<K: Scalar>(space: &Subspace<K>, seed: &[Vector<K>]) -> Vec<Vector<K>> {
    let mut chosen: Vec<Vector<K>> = seed.to_vec();
    let mut added = Vec::new();
    for cand in space.basis() {
        if chosen.len() == space.dim() {
            break;
        }
        let mut rows = chosen.clone();
        rows.push(cand.clone());
        if Matrix::from_rows(rows).rank() > chosen.len() {
            chosen.push(cand.clone());
            added.push(cand.clone());
        }
    }
    added
}

/// Inverse of the double extension process, following the constructive proofs
/// for the two degeneracy modes. Exact mode only.
pub fn extract<K: Scalar>(
    p: &PseudoEuclideanLieAlgebra<K>,
    mode: ExtractionMode,
) -> Result<Extraction<K>> {
    if !K::EXACT {
        return Err(Error::ExactModeRequired("extract"));
    }
    let n = p.dim();
    let g = p.metric();
    if !g.is_lorentzian() {
        return Err(Error::HypothesisFailed("metric is not Lorentzian".into()));
    }

    // isotropic pivot e plus a spacelike complement of span(e) inside e^⊥
    let (e, spacelike) = match mode {
        ExtractionMode::DerivedDegenerate => {
            let derived = p.lie().derived_ideal();
            if derived.is_zero() {
                return Err(Error::NondegenerateSubspace("derived ideal (trivial)".into()));
            }
            let perp = g.orthogonal_complement(&derived);
            let radical = derived.intersect(&perp);
            if radical.is_zero() {
                return Err(Error::NondegenerateSubspace("derived ideal".into()));
            }
            let e = radical.basis()[0].clone();
            // f's inside [g,g], then g's inside [g,g]^⊥, as the proof demands
            let fs = complete_inside(&derived, std::slice::from_ref(&e));
            let gs = complete_inside(&perp, std::slice::from_ref(&e));
            let mut spacelike = fs;
            spacelike.extend(gs);
            (e, spacelike)
        }
        ExtractionMode::CenterDegenerate => {
            let center = p.lie().center();
            if center.is_zero() {
                return Err(Error::HypothesisFailed("center is trivial".into()));
            }
            let e = match g.isotropic_vector_in(&center) {
                Some(e) => e,
                None => {
                    if g.restrict(&center).is_degenerate() {
                        return Err(Error::NoRationalIsotropicVector("center".into()));
                    }
                    return Err(Error::NondegenerateSubspace("center".into()));
                }
            };
            let perp = g.orthogonal_complement(&Subspace::span(n, vec![e.clone()]));
            let spacelike = complete_inside(&perp, std::slice::from_ref(&e));
            (e, spacelike)
        }
    };

    if spacelike.len() != n - 2 {
        return Err(Error::HypothesisFailed(
            "adapted spacelike complement has the wrong dimension".into(),
        ));
    }
    let (fs, fnorms) = gram_schmidt(&spacelike, g)?;

    // remaining hypotheses
    match p.lie().complete_solvability().holds() {
        Some(true) => {}
        _ => return Err(Error::HypothesisFailed("algebra is not completely solvable".into())),
    }
    if !p.lie().is_unimodular() {
        return Err(Error::HypothesisFailed("algebra is not unimodular".into()));
    }
    let Some(lambda) = p.einstein_check() else {
        return Err(Error::HypothesisFailed("algebra is not Einstein".into()));
    };
    if !lambda.is_zero_tol() {
        return Err(Error::HypothesisFailed("Einstein constant is not zero".into()));
    }

    // ē: Witt partner of e, made orthogonal to every spacelike vector
    let v = (0..n)
        .map(|i| basis_vec::<K>(n, i))
        .find(|v| !g.inner(&e, v).is_zero_tol())
        .ok_or(Error::DegenerateMetric)?;
    let pairing = g.inner(&e, &v);
    let inv = K::one() / pairing.clone();
    let coef = g.inner(&v, &v) * inv.clone() * inv.clone() / K::from_int(2);
    let mut e_bar = vec_sub(&vec_scale(&inv, &v), &vec_scale(&coef, &e));
    for (f, d) in fs.iter().zip(&fnorms) {
        let c = g.inner(&e_bar, f) / d.clone();
        e_bar = vec_sub(&e_bar, &vec_scale(&c, f));
    }
    let half_norm = g.inner(&e_bar, &e_bar) / K::from_int(2);
    e_bar = vec_sub(&e_bar, &vec_scale(&half_norm, &e));

    let mut cols = vec![e.clone()];
    cols.extend(fs.iter().cloned());
    cols.push(e_bar.clone());
    let basis = Matrix::from_cols(cols);
    let basis_inv = basis.inverse().ok_or(Error::SingularBasis)?;

    let m = n - 2;
    let transported =
        |a: usize, b: usize| basis_inv.mul_vec(&p.lie().bracket(&basis.col(a), &basis.col(b)));

    // proof intermediates: brackets inside e^⊥ land in ℝe, [e, g₀] = 0, and
    // no bracket has an ē-component
    for a in 0..n {
        for b in a + 1..n {
            let c = transported(a, b);
            if !c[n - 1].is_zero_tol() {
                return Err(Error::HypothesisFailed(
                    "proof intermediate failed: bracket has an ē-component".into(),
                ));
            }
            let interior = a >= 1 && b <= n - 2;
            if interior && !(1..n - 1).all(|k| c[k].is_zero_tol()) {
                return Err(Error::HypothesisFailed(
                    "proof intermediate failed: base bracket is not ℝe-valued".into(),
                ));
            }
            if a == 0 && b <= n - 2 && !c.iter().all(|x| x.is_zero_tol()) {
                return Err(Error::HypothesisFailed(
                    "proof intermediate failed: [e, g₀] ≠ 0".into(),
                ));
            }
        }
    }
    // structure endomorphisms of the adapted basis vanish on e and map e^⊥
    // into ℝe at the spacelike positions
    let endos = p.structure_endos(&basis)?;
    let e_line = Subspace::span(n, vec![e.clone()]);
    for s in &endos.endos[1..n - 1] {
        if !crate::matrix::vec_is_zero(&s.mul_vec(&e)) {
            return Err(Error::HypothesisFailed("proof intermediate failed: S_i(e) ≠ 0".into()));
        }
        for x in &fs {
            if !e_line.contains(&s.mul_vec(x)) {
                return Err(Error::HypothesisFailed(
                    "proof intermediate failed: S_i(e^⊥) ⊄ ℝe".into(),
                ));
            }
        }
    }
    match mode {
        ExtractionMode::DerivedDegenerate => {
            // ⟨K̃(u), e⟩ = 0 for u ∈ g₀, with K̃ the e-position endomorphism
            let k_tilde = &endos.endos[0];
            for x in &fs {
                if !g.inner(&k_tilde.mul_vec(x), &e).is_zero_tol() {
                    return Err(Error::HypothesisFailed(
                        "proof intermediate failed: ⟨K(u), e⟩ ≠ 0".into(),
                    ));
                }
            }
        }
        ExtractionMode::CenterDegenerate => {
            // K̄(ē) ∈ ℝe, with K̄ the ē-position endomorphism
            let k_bar = &endos.endos[n - 1];
            if !e_line.contains(&k_bar.mul_vec(&e_bar)) {
                return Err(Error::HypothesisFailed(
                    "proof intermediate failed: K̄(ē) ∉ ℝe".into(),
                ));
            }
        }
    }

    // read off the parameters over the abelian base with Gram matrix diag(fnorms)
    let gram =
        Matrix::from_fn(m, m, |i, j| if i == j { fnorms[i].clone() } else { K::zero() });
    let g0 = PseudoEuclideanLieAlgebra::new(LieAlgebra::abelian(m), MetricTensor::new(gram)?)?;
    let mu = transported(n - 1, 0)[0].clone(); // [ē, e] = μ e
    if mode == ExtractionMode::CenterDegenerate && !mu.is_zero_tol() {
        return Err(Error::HypothesisFailed("μ ≠ 0 with central isotropic e".into()));
    }
    let mut d_cols = Vec::with_capacity(m);
    let mut b_rhs = Vec::with_capacity(m);
    for j in 0..m {
        let c = transported(n - 1, j + 1); // [ē, u_j] = D(u_j) + ⟨b,u_j⟩₀ e
        d_cols.push(c[1..n - 1].to_vec());
        b_rhs.push(c[0].clone());
    }
    let d = Matrix::from_cols(d_cols);
    let b = g0.metric().inverse_matrix().mul_vec(&b_rhs);
    let alpha = Matrix::from_fn(m, m, |i, j| transported(i + 1, j + 1)[0].clone());
    // ⟨K u_i, u_j⟩₀ = α_{ij} gives K = -G₀⁻¹ α for antisymmetric α
    let k = -&(g0.metric().inverse_matrix() * &alpha);
    if mode == ExtractionMode::DerivedDegenerate && !(mu.clone() + d.trace()).is_zero_tol() {
        return Err(Error::HypothesisFailed("μ = -tr(D) violated".into()));
    }
    let params = DoubleExtensionParams::new(g0, k, d, mu, b)?;
    Ok(Extraction { params, basis, mode })
}

impl<K: Scalar> Extraction<K> {
    /// Structure constants and metric of `build(params)` match the original
    /// algebra expressed in the adapted basis.
    pub fn round_trip_matches(&self, original: &PseudoEuclideanLieAlgebra<K>) -> Result<bool> {
        let rebuilt = self.params.build()?;
        let n = original.dim();
        let inv = self.basis.inverse().ok_or(Error::SingularBasis)?;
        for a in 0..n {
            for b in a + 1..n {
                let transported = inv
                    .mul_vec(&original.lie().bracket(&self.basis.col(a), &self.basis.col(b)));
                if !crate::matrix::vec_eq(&transported, rebuilt.lie().basis_bracket(a, b)) {
                    return Ok(false);
                }
            }
        }
        let gram = &(&self.basis.transpose() * original.metric().matrix()) * &self.basis;
        Ok(gram.eq_tol(rebuilt.metric().matrix()))
    }
}
