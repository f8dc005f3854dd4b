//! Pseudo-Euclidean linear algebra: signatures, metric adjoints, isotropic
//! vectors, Witt-basis completion and subspace degeneracy.

use crate::error::{Error, Result};
use crate::matrix::{basis_vec, vec_is_zero, vec_scale, vec_sub, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

/// Sylvester signature `(negatives, positives)` of a symmetric matrix by
/// congruence diagonalization. Degenerate inputs (a surviving zero diagonal
/// entry) are an error.
pub fn signature_of_symmetric<K: Scalar>(g: &Matrix<K>) -> Result<(usize, usize)> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let (_, d) = g.congruence_diagonalize();
    let mut neg = 0;
    let mut pos = 0;
    for x in &d {
        if x.is_zero_tol() {
            return Err(Error::DegenerateMetric);
        } else if x.is_negative() {
            neg += 1;
        } else {
            pos += 1;
        }
    }
    Ok((neg, pos))
}

/// A nondegenerate symmetric bilinear form together with its signature.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricTensor<K: Scalar> {
    g: Matrix<K>,
    g_inv: Matrix<K>,
    signature: (usize, usize),
}

impl<K: Scalar> MetricTensor<K> {
    pub fn new(g: Matrix<K>) -> Result<Self> {
        let signature = signature_of_symmetric(&g)?;
        let g_inv = g.inverse().ok_or(Error::DegenerateMetric)?;
        Ok(MetricTensor { g, g_inv, signature })
    }

    pub fn euclidean(dim: usize) -> Self {
        Self::new(Matrix::identity(dim)).expect("identity metric is nondegenerate")
    }

    /// Standard Minkowski form `diag(-1, 1, …, 1)`.
    pub fn minkowski(dim: usize) -> Self {
        assert!(dim >= 1);
        let mut m = Matrix::identity(dim);
        m[(0, 0)] = -K::one();
        Self::new(m).expect("Minkowski metric is nondegenerate")
    }

    pub fn dim(&self) -> usize {
        self.g.nrows()
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.g
    }

    pub fn inverse_matrix(&self) -> &Matrix<K> {
        &self.g_inv
    }

    /// `(q, n-q)`: number of negative then positive directions.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn is_euclidean(&self) -> bool {
        self.signature.0 == 0
    }

    pub fn is_lorentzian(&self) -> bool {
        self.signature.0 == 1
    }

    pub fn inner(&self, u: &[K], v: &[K]) -> K {
        let gu = self.g.mul_vec(v);
        u.iter().zip(&gu).fold(K::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Metric adjoint `F* = g⁻¹ Fᵀ g`, so `⟨Fu, v⟩ = ⟨u, F*v⟩`.
    pub fn adjoint(&self, f: &Matrix<K>) -> Matrix<K> {
        &(&self.g_inv * &f.transpose()) * &self.g
    }

    /// True iff `F* = -F` under the mode's equality.
    pub fn is_skew_symmetric(&self, f: &Matrix<K>) -> bool {
        self.adjoint(f).eq_tol(&-f)
    }

    /// Isotropy test; float mode scales the tolerance by the squared
    /// coordinate norm.
    pub fn is_isotropic(&self, v: &[K]) -> bool {
        if vec_is_zero(v) {
            return false;
        }
        let n = self.inner(v, v);
        if K::EXACT {
            n.is_zero_tol()
        } else {
            let scale =
                v.iter().fold(K::zero(), |acc, x| acc + x.clone() * x.clone()).to_f64().max(1.0);
            n.to_f64().abs() < crate::scalar::float_tolerance() * scale
        }
    }

    /// Gram matrix of the form on the subspace basis, flagged as degenerate
    /// when its determinant vanishes.
    pub fn restrict(&self, s: &Subspace<K>) -> RestrictedMetric<K> {
        let basis = s.basis();
        let gram = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
            self.inner(&basis[i], &basis[j])
        });
        match MetricTensor::new(gram.clone()) {
            Ok(m) => RestrictedMetric::Nondegenerate(m),
            Err(_) => RestrictedMetric::Degenerate { gram },
        }
    }

    /// `S^⊥ = {u : ⟨u, s⟩ = 0 for all s ∈ S}`.
    pub fn orthogonal_complement(&self, s: &Subspace<K>) -> Subspace<K> {
        let n = self.dim();
        if s.is_zero() {
            return Subspace::full(n);
        }
        // rows sᵢᵀ g; kernel is the complement
        let rows: Vec<Vector<K>> = s.basis().iter().map(|b| self.g.mul_vec(b)).collect();
        Subspace::span(n, Matrix::from_rows(rows).kernel())
    }

    /// An orthogonal basis `v₁,…,vₙ` with `⟨vᵢ,vᵢ⟩ = dᵢ ≠ 0`, from congruence
    /// diagonalization. Exact mode keeps the rational scales `dᵢ`; callers
    /// that need unit vectors must fold the scales into their formulas.
    pub fn orthogonal_basis(&self) -> (Vec<Vector<K>>, Vec<K>) {
        let (p, d) = self.g.congruence_diagonalize();
        let basis = (0..self.dim()).map(|j| p.col(j)).collect();
        (basis, d)
    }

    /// Search for an isotropic vector in `S`: first the radical of the
    /// restricted Gram matrix, then (exact mode) pairs of orthogonal
    /// directions with opposite-sign norms and a square ratio.
    pub fn isotropic_vector_in(&self, s: &Subspace<K>) -> Option<Vector<K>> {
        if s.is_zero() {
            return None;
        }
        let basis = s.basis();
        let gram = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
            self.inner(&basis[i], &basis[j])
        });
        if let Some(coeffs) = gram.kernel().into_iter().next() {
            let m = Matrix::from_cols(basis.to_vec());
            return Some(m.mul_vec(&coeffs));
        }
        // nondegenerate restriction: look for a hyperbolic pair with a
        // rational square ratio
        let (p, d) = gram.congruence_diagonalize();
        let m = Matrix::from_cols(basis.to_vec());
        for i in 0..d.len() {
            for j in 0..d.len() {
                if d[i].is_negative() && d[j].is_positive() {
                    let ratio = -(d[i].clone() / d[j].clone());
                    if let Some(t) = ratio.sqrt_exact() {
                        // v_i + t v_j has norm d_i + t² d_j = 0
                        let vi = m.mul_vec(&p.col(i));
                        let vj = m.mul_vec(&p.col(j));
                        let v: Vector<K> = vi
                            .iter()
                            .zip(&vj)
                            .map(|(a, b)| a.clone() + t.clone() * b.clone())
                            .collect();
                        return Some(v);
                    }
                }
            }
        }
        None
    }
}

/// Result of restricting a metric to a subspace.
#[derive(Clone, Debug, PartialEq)]
pub enum RestrictedMetric<K: Scalar> {
    Nondegenerate(MetricTensor<K>),
    Degenerate { gram: Matrix<K> },
}

impl<K: Scalar> RestrictedMetric<K> {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, RestrictedMetric::Degenerate { .. })
    }
}

/// A Witt (Lorentzian) basis `(e, ē, f₁, …, f_{n-2})`: `e, ē` isotropic with
/// `⟨e, ē⟩ = 1`, the `fᵢ` mutually orthogonal, orthogonal to both, with
/// positive norms `dᵢ` (all `dᵢ = 1` whenever the normalization is exact).
#[derive(Clone, Debug, PartialEq)]
pub struct WittBasis<K: Scalar> {
    pub e: Vector<K>,
    pub e_bar: Vector<K>,
    pub spacelike: Vec<Vector<K>>,
    pub spacelike_norms: Vec<K>,
}

impl<K: Scalar> WittBasis<K> {
    pub fn is_orthonormal(&self) -> bool {
        self.spacelike_norms.iter().all(|d| d.eq_tol(&K::one()))
    }

    /// Verify every defining relation against `g`.
    pub fn check(&self, g: &MetricTensor<K>) -> Result<()> {
        let ok = g.inner(&self.e, &self.e).is_zero_tol()
            && g.inner(&self.e_bar, &self.e_bar).is_zero_tol()
            && g.inner(&self.e, &self.e_bar).eq_tol(&K::one())
            && self.spacelike.len() == g.dim() - 2;
        if !ok {
            return Err(Error::HypothesisFailed("Witt pair relations".into()));
        }
        for (i, f) in self.spacelike.iter().enumerate() {
            if !g.inner(f, &self.e).is_zero_tol() || !g.inner(f, &self.e_bar).is_zero_tol() {
                return Err(Error::HypothesisFailed("spacelike not orthogonal to pair".into()));
            }
            for (j, h) in self.spacelike.iter().enumerate() {
                let expect = if i == j { self.spacelike_norms[i].clone() } else { K::zero() };
                if !g.inner(f, h).eq_tol(&expect) {
                    return Err(Error::HypothesisFailed("spacelike Gram mismatch".into()));
                }
            }
            if !self.spacelike_norms[i].is_positive() {
                return Err(Error::HypothesisFailed("spacelike norm not positive".into()));
            }
        }
        // basis check
        let mut cols = vec![self.e.clone(), self.e_bar.clone()];
        cols.extend(self.spacelike.clone());
        if Matrix::from_cols(cols).rank() != g.dim() {
            return Err(Error::SingularBasis);
        }
        Ok(())
    }

    /// Columns `(e, f₁, …, f_{n-2}, ē)` — the order used by double extensions.
    pub fn as_extension_basis(&self) -> Matrix<K> {
        let mut cols = vec![self.e.clone()];
        cols.extend(self.spacelike.clone());
        cols.push(self.e_bar.clone());
        Matrix::from_cols(cols)
    }
}

/// Complete an isotropic `e` to a Witt basis of a Lorentzian space.
///
/// `ē` is cut out of any `v` with `⟨e, v⟩ ≠ 0` by
/// `ē = v/⟨e,v⟩ − (⟨v,v⟩ / 2⟨e,v⟩²) e`; the complement of the pair is
/// positive definite and is orthogonalized by Gram–Schmidt. Exact mode
/// normalizes a spacelike vector only when its norm is a perfect square.
pub fn complete_witt_basis<K: Scalar>(e: &[K], g: &MetricTensor<K>) -> Result<WittBasis<K>> {
    if !g.is_lorentzian() {
        return Err(Error::NotLorentzian);
    }
    if !g.is_isotropic(e) {
        return Err(Error::NotIsotropic);
    }
    let n = g.dim();
    let v = (0..n)
        .map(|i| basis_vec::<K>(n, i))
        .max_by(|a, b| {
            let pa = g.inner(e, a).abs();
            let pb = g.inner(e, b).abs();
            pa.partial_cmp(&pb).unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("dim >= 1");
    let pairing = g.inner(e, &v);
    if pairing.is_zero_tol() {
        return Err(Error::DegenerateMetric);
    }
    let vv = g.inner(&v, &v);
    let inv = K::one() / pairing.clone();
    let coef = vv * inv.clone() * inv.clone() / K::from_int(2);
    let e_bar = vec_sub(&vec_scale(&inv, &v), &vec_scale(&coef, e));

    let pair = Subspace::span(n, vec![e.to_vec(), e_bar.clone()]);
    let complement = g.orthogonal_complement(&pair);
    let (spacelike, spacelike_norms) = gram_schmidt(complement.basis(), g)?;
    Ok(WittBasis { e: e.to_vec(), e_bar, spacelike, spacelike_norms })
}

/// Gram–Schmidt on a positive-definite subspace: orthogonal vectors plus
/// their norms, normalized whenever the norm has an exact square root.
pub fn gram_schmidt<K: Scalar>(
    vectors: &[Vector<K>],
    g: &MetricTensor<K>,
) -> Result<(Vec<Vector<K>>, Vec<K>)> {
    let mut out: Vec<Vector<K>> = Vec::new();
    let mut norms: Vec<K> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for (f, d) in out.iter().zip(&norms) {
            let c = g.inner(&w, f) / d.clone();
            w = vec_sub(&w, &vec_scale(&c, f));
        }
        let mut d = g.inner(&w, &w);
        if !d.is_positive() {
            return Err(Error::HypothesisFailed("subspace not positive definite".into()));
        }
        if let Some(r) = d.sqrt_exact() {
            w = vec_scale(&(K::one() / r), &w);
            d = K::one();
        }
        out.push(w);
        norms.push(d);
    }
    Ok((out, norms))
}
