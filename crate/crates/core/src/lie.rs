//! Metric-free Lie algebra structure: brackets, the Jacobi identity, adjoint
//! maps, Killing form, solvability ladders, derivations, center and derived
//! ideal.
//!
//! Complete solvability is decided constructively in exact mode: the algebra
//! is completely solvable iff it is solvable and every basis adjoint map has
//! an all-real spectrum (Sturm sequences). A full flag of rational ideals is
//! produced whenever one exists; over ℚ the predicate can hold while every
//! flag needs irrational eigendirections, and that outcome is reported
//! separately. Float mode refuses the predicate outright.

use crate::error::{Error, Result};
use crate::matrix::{
    basis_vec, vec_add, vec_is_zero, vec_scale, vec_zero, Matrix, Subspace, Vector,
};
use crate::poly::{all_roots_real, char_poly, rational_roots};
use crate::scalar::{Rational, Scalar};

/// A finite-dimensional real Lie algebra presented by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<K: Scalar> {
    dim: usize,
    /// `table[i][j] = [e_i, e_j]`; antisymmetry is enforced structurally.
    table: Vec<Vec<Vector<K>>>,
}

impl<K: Scalar> LieAlgebra<K> {
    /// Build from the brackets `[e_i, e_j]` for `i < j`; omitted pairs vanish.
    /// Fails with the offending triple when the Jacobi identity does not hold.
    pub fn new(dim: usize, brackets: &[(usize, usize, Vector<K>)]) -> Result<Self> {
        let l = Self::new_unchecked(dim, brackets);
        if let Some((i, j, k)) = l.jacobi_witness() {
            return Err(Error::JacobiFailed { i, j, k });
        }
        Ok(l)
    }

    /// Build without the Jacobi check; meant for defect reporting only.
    pub fn new_unchecked(dim: usize, brackets: &[(usize, usize, Vector<K>)]) -> Self {
        let mut table = vec![vec![vec_zero(dim); dim]; dim];
        for (i, j, v) in brackets {
            assert!(*i < dim && *j < dim && i != j, "bad bracket indices");
            assert_eq!(v.len(), dim, "bracket value has wrong dimension");
            table[*i][*j] = v.clone();
            table[*j][*i] = v.iter().map(|x| -x.clone()).collect();
        }
        LieAlgebra { dim, table }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new_unchecked(dim, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Vector<K> {
        &self.table[i][j]
    }

    /// Bilinear extension of the bracket to arbitrary coordinates.
    pub fn bracket(&self, u: &[K], v: &[K]) -> Vector<K> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec_zero(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero_tol() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if j == i || vj.is_zero_tol() {
                    continue;
                }
                let c = ui.clone() * vj.clone();
                out = vec_add(&out, &vec_scale(&c, &self.table[i][j]));
            }
        }
        out
    }

    fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vector<K> {
        let a = self.bracket(&self.table[i][j], &basis_vec(self.dim, k));
        let b = self.bracket(&self.table[j][k], &basis_vec(self.dim, i));
        let c = self.bracket(&self.table[k][i], &basis_vec(self.dim, j));
        vec_add(&vec_add(&a, &b), &c)
    }

    /// First basis triple violating Jacobi, if any.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    if !vec_is_zero(&self.jacobi_sum(i, j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Max-norm of the cyclic Jacobi sum over all basis triples; zero iff the
    /// structure constants define a Lie algebra.
    pub fn jacobi_defect(&self) -> K {
        let mut worst = K::zero();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    for x in self.jacobi_sum(i, j, k) {
                        let a = x.abs();
                        if a > worst {
                            worst = a;
                        }
                    }
                }
            }
        }
        worst
    }

    /// Matrix of `ad_u : v ↦ [u, v]`.
    pub fn ad(&self, u: &[K]) -> Matrix<K> {
        Matrix::from_cols(
            (0..self.dim).map(|j| self.bracket(u, &basis_vec(self.dim, j))).collect(),
        )
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<K> {
        Matrix::from_cols((0..self.dim).map(|j| self.table[i][j].clone()).collect())
    }

    /// Killing form `B(u, v) = tr(ad_u ∘ ad_v)` on the basis.
    pub fn killing_form(&self) -> Matrix<K> {
        let ads: Vec<Matrix<K>> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| (&ads[i] * &ads[j]).trace())
    }

    /// Span of all `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_subspace(&self, a: &Subspace<K>, b: &Subspace<K>) -> Subspace<K> {
        let mut gens = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                gens.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim, gens)
    }

    /// `D⁰ = g ⊇ D¹ = [g,g] ⊇ D² = [D¹,D¹] ⊇ …` until stabilization.
    pub fn derived_series(&self) -> Vec<Subspace<K>> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("series nonempty");
            let next = self.bracket_subspace(last, last);
            if &next == last {
                break;
            }
            series.push(next);
            if series.last().expect("series nonempty").is_zero() {
                break;
            }
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().expect("series nonempty").is_zero()
    }

    /// `C¹ = g ⊇ C² = [g, g] ⊇ C³ = [g, C²] ⊇ …` until stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace<K>> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("series nonempty");
            let next = self.bracket_subspace(&full, last);
            if &next == last {
                break;
            }
            series.push(next);
            if series.last().expect("series nonempty").is_zero() {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().expect("series nonempty").is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_ideal().is_zero()
    }

    /// `tr(ad_u) = 0` for every `u` (checked on the basis, by linearity).
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| self.ad_basis(i).trace().is_zero_tol())
    }

    /// `Z(g) = ∩ ker ad_{e_i}`.
    pub fn center(&self) -> Subspace<K> {
        let rows: Vec<Vector<K>> = (0..self.dim)
            .flat_map(|i| {
                let ad = self.ad_basis(i);
                (0..self.dim).map(move |r| ad.row(r)).collect::<Vec<_>>()
            })
            .collect();
        Subspace::span(self.dim, Matrix::from_rows(rows).kernel())
    }

    /// `[g, g]`, the span of all basis brackets.
    pub fn derived_ideal(&self) -> Subspace<K> {
        let mut gens = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                gens.push(self.table[i][j].clone());
            }
        }
        Subspace::span(self.dim, gens)
    }

    /// Leibniz check `D[u,v] = [Du,v] + [u,Dv]` on all basis pairs.
    pub fn is_derivation(&self, d: &Matrix<K>) -> bool {
        if d.nrows() != self.dim || d.ncols() != self.dim {
            return false;
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = d.mul_vec(&self.table[i][j]);
                let rhs = vec_add(
                    &self.bracket(&d.col(i), &basis_vec(self.dim, j)),
                    &self.bracket(&basis_vec(self.dim, i), &d.col(j)),
                );
                if !crate::matrix::vec_eq(&lhs, &rhs) {
                    return false;
                }
            }
        }
        true
    }

    /// Basis of the space of derivations, solved as the kernel of the
    /// linearized Leibniz rule in the n² matrix entries.
    pub fn derivation_space(&self) -> Vec<Matrix<K>> {
        let n = self.dim;
        let unknowns = n * n; // D_{ij} at index i*n + j
        let mut rows: Vec<Vector<K>> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let w = &self.table[a][b];
                for k in 0..n {
                    let mut row = vec_zero::<K>(unknowns);
                    // D[e_a,e_b] contributes D_{kj} w_j
                    for j in 0..n {
                        row[k * n + j] = row[k * n + j].clone() + w[j].clone();
                    }
                    // -[D e_a, e_b] - [e_a, D e_b] contribute through the
                    // structure constants
                    for m in 0..n {
                        if m != b {
                            row[m * n + a] = row[m * n + a].clone() - self.table[m][b][k].clone();
                        }
                        if m != a {
                            row[m * n + b] = row[m * n + b].clone() - self.table[a][m][k].clone();
                        }
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return (0..unknowns)
                .map(|idx| {
                    Matrix::from_fn(n, n, |i, j| if i * n + j == idx { K::one() } else { K::zero() })
                })
                .collect();
        }
        Matrix::from_rows(rows)
            .kernel()
            .into_iter()
            .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
            .collect()
    }

    /// True iff `[g, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace<K>) -> bool {
        for i in 0..self.dim {
            for v in s.basis() {
                if !s.contains(&self.bracket(&basis_vec(self.dim, i), v)) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by an ideal: the quotient algebra together with the lift
    /// matrix whose columns express the quotient basis in ambient
    /// coordinates (structure constants are projected along the ideal).
    pub fn quotient(&self, ideal: &Subspace<K>) -> (LieAlgebra<K>, Matrix<K>) {
        assert!(self.is_ideal(ideal), "quotient requires an ideal");
        let k = ideal.dim();
        let m = self.dim - k;
        let complement = ideal.complement_basis();
        assert_eq!(complement.len(), m);
        let mut cols: Vec<Vector<K>> = ideal.basis().to_vec();
        cols.extend(complement.clone());
        let t = Matrix::from_cols(cols);
        let t_inv = t.inverse().expect("ideal basis plus complement is a basis");
        let mut brackets = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let w = self.bracket(&complement[a], &complement[b]);
                let coords = t_inv.mul_vec(&w);
                brackets.push((a, b, coords[k..].to_vec()));
            }
        }
        (LieAlgebra::new_unchecked(m, &brackets), Matrix::from_cols(complement))
    }

    pub fn to_exact(&self) -> Option<LieAlgebra<Rational>> {
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let mut v = Vec::with_capacity(self.dim);
                for x in &self.table[i][j] {
                    v.push(x.to_rational()?);
                }
                brackets.push((i, j, v));
            }
        }
        Some(LieAlgebra::new_unchecked(self.dim, &brackets))
    }

    /// Decide complete solvability; see the module docs for the exact /
    /// float split and the rational-certificate caveat.
    pub fn complete_solvability(&self) -> CompleteSolvability<K> {
        if !K::EXACT {
            return CompleteSolvability::Indeterminate;
        }
        let Some(exact) = self.to_exact() else {
            return CompleteSolvability::Indeterminate;
        };
        match complete_solvability_exact(&exact) {
            CompleteSolvability::Certified { flag_basis } => CompleteSolvability::Certified {
                flag_basis: flag_basis
                    .into_iter()
                    .map(|v| v.iter().map(K::from_rational).collect())
                    .collect(),
            },
            CompleteSolvability::HoldsWithoutRationalFlag => {
                CompleteSolvability::HoldsWithoutRationalFlag
            }
            CompleteSolvability::No { witness } => CompleteSolvability::No { witness },
            CompleteSolvability::Indeterminate => CompleteSolvability::Indeterminate,
        }
    }

    /// All classification predicates in one report.
    pub fn classify(&self) -> ClassificationFlags {
        let derived = self.derived_series();
        let lower = self.lower_central_series();
        ClassificationFlags {
            abelian: self.is_abelian(),
            nilpotent: lower.last().expect("series nonempty").is_zero(),
            solvable: derived.last().expect("series nonempty").is_zero(),
            completely_solvable: self.complete_solvability().holds(),
            unimodular: self.is_unimodular(),
            derived_series_length: derived.len() - 1,
            lower_central_length: lower.len() - 1,
        }
    }
}

/// Outcome of the complete-solvability decision.
#[derive(Clone, Debug, PartialEq)]
pub enum CompleteSolvability<K: Scalar> {
    /// Constructive certificate: `I_k = span(flag_basis[..k])` is an ideal of
    /// dimension `k` for every `k`.
    Certified { flag_basis: Vec<Vector<K>> },
    /// The predicate holds (solvable, all adjoint spectra real) but every
    /// full flag of ideals needs irrational eigendirections.
    HoldsWithoutRationalFlag,
    /// Disproved; the witness names the failing condition.
    No { witness: String },
    /// Float mode refuses this predicate: real-rootedness is not ε-robust.
    Indeterminate,
}

impl<K: Scalar> CompleteSolvability<K> {
    pub fn holds(&self) -> Option<bool> {
        match self {
            CompleteSolvability::Certified { .. }
            | CompleteSolvability::HoldsWithoutRationalFlag => Some(true),
            CompleteSolvability::No { .. } => Some(false),
            CompleteSolvability::Indeterminate => None,
        }
    }

    pub fn certificate(&self) -> Option<&[Vector<K>]> {
        match self {
            CompleteSolvability::Certified { flag_basis } => Some(flag_basis),
            _ => None,
        }
    }
}

fn complete_solvability_exact(l: &LieAlgebra<Rational>) -> CompleteSolvability<Rational> {
    if !l.is_solvable() {
        return CompleteSolvability::No { witness: "not solvable".into() };
    }
    for i in 0..l.dim() {
        let p = char_poly(&l.ad_basis(i));
        if !all_roots_real(&p) {
            return CompleteSolvability::No {
                witness: format!("ad of basis vector {} has non-real eigenvalues", i + 1),
            };
        }
    }
    match flag_search(l) {
        Some(flag_basis) => CompleteSolvability::Certified { flag_basis },
        None => CompleteSolvability::HoldsWithoutRationalFlag,
    }
}

/// Candidate lines spanned by simultaneous rational eigenvectors of `ops`,
/// found by backtracking over rational eigenvalue tuples.
fn common_eigenlines(ops: &[Matrix<Rational>], dim: usize) -> Vec<Vector<Rational>> {
    fn recurse(
        ops: &[Matrix<Rational>],
        idx: usize,
        space: &Subspace<Rational>,
        out: &mut Vec<Vector<Rational>>,
    ) {
        if space.is_zero() {
            return;
        }
        if idx == ops.len() {
            out.extend(space.basis().iter().cloned());
            return;
        }
        let mut lambdas = rational_roots(&char_poly(&ops[idx]));
        lambdas.dedup();
        for lam in lambdas {
            let n = ops[idx].nrows();
            let shifted = &ops[idx] - &Matrix::identity(n).scale(&lam);
            let eig = Subspace::span(n, shifted.kernel());
            recurse(ops, idx + 1, &space.intersect(&eig), out);
        }
    }
    let mut out = Vec::new();
    recurse(ops, 0, &Subspace::full(dim), &mut out);
    let mut uniq: Vec<Vector<Rational>> = Vec::new();
    for v in out {
        if !uniq.contains(&v) {
            uniq.push(v);
        }
    }
    uniq
}

fn flag_search(l: &LieAlgebra<Rational>) -> Option<Vec<Vector<Rational>>> {
    if l.dim() == 0 {
        return Some(Vec::new());
    }
    let ops: Vec<Matrix<Rational>> = (0..l.dim()).map(|i| l.ad_basis(i)).collect();
    for line in common_eigenlines(&ops, l.dim()) {
        let ideal = Subspace::span(l.dim(), vec![line.clone()]);
        let (quotient, lift) = l.quotient(&ideal);
        if let Some(sub) = flag_search(&quotient) {
            let mut flag = vec![line];
            flag.extend(sub.into_iter().map(|v| lift.mul_vec(&v)));
            return Some(flag);
        }
    }
    None
}

/// Soundness check for a flag certificate: each prefix spans an ideal of the
/// right dimension.
pub fn check_flag<K: Scalar>(l: &LieAlgebra<K>, flag: &[Vector<K>]) -> bool {
    if flag.len() != l.dim() {
        return false;
    }
    for k in 1..=flag.len() {
        let s = Subspace::span(l.dim(), flag[..k].to_vec());
        if s.dim() != k || !l.is_ideal(&s) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationFlags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    /// `None` when the mode refuses the predicate (float).
    pub completely_solvable: Option<bool>,
    pub unimodular: bool,
    pub derived_series_length: usize,
    pub lower_central_length: usize,
}
