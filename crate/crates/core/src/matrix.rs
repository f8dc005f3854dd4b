//! Dense matrices and subspaces over a [`Scalar`] field.
//!
//! Dimensions here are tiny (algebras of dimension ≤ 12), so everything is
//! plain Gaussian elimination: exact mode pivots on any nonzero entry, float
//! mode on the entry of largest magnitude against the global tolerance.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::Scalar;

pub type Vector<K> = Vec<K>;

pub fn vec_zero<K: Scalar>(n: usize) -> Vector<K> {
    vec![K::zero(); n]
}

pub fn vec_add<K: Scalar>(a: &[K], b: &[K]) -> Vector<K> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn vec_sub<K: Scalar>(a: &[K], b: &[K]) -> Vector<K> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_scale<K: Scalar>(c: &K, a: &[K]) -> Vector<K> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

pub fn vec_neg<K: Scalar>(a: &[K]) -> Vector<K> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn vec_is_zero<K: Scalar>(a: &[K]) -> bool {
    a.iter().all(|x| x.is_zero_tol())
}

pub fn vec_eq<K: Scalar>(a: &[K], b: &[K]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.eq_tol(y))
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vec<K: Scalar>(n: usize, i: usize) -> Vector<K> {
    let mut v = vec_zero(n);
    v[i] = K::one();
    v
}

#[derive(Clone, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vector<K>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    /// Convenience constructor from integer entries.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| K::from_int(x)).collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vector<K> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vector<K> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[K]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i].clone();
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|x| x.to_f64())
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn mul_vec(&self, v: &[K]) -> Vector<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(K::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    pub fn trace(&self) -> K {
        assert!(self.is_square());
        (0..self.rows).fold(K::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_tol())
    }

    pub fn eq_tol(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.eq_tol(b))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.eq_tol(&self.transpose())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = self.pick_pivot_row(r, c) else { continue };
            self.swap_rows(r, p);
            let inv = K::one() / self[(r, c)].clone();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero_tol() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        self[(i, j)] = self[(i, j)].clone() - f.clone() * self[(r, j)].clone();
                    }
                }
                if i != r {
                    self[(i, c)] = K::zero();
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn pick_pivot_row(&self, from_row: usize, col: usize) -> Option<usize> {
        if K::EXACT {
            (from_row..self.rows).find(|&i| !self[(i, col)].is_zero_tol())
        } else {
            let best = (from_row..self.rows)
                .max_by(|&a, &b| {
                    self[(a, col)]
                        .abs()
                        .partial_cmp(&self[(b, col)].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })?;
            (!self[(best, col)].is_zero_tol()).then_some(best)
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn determinant(&self) -> K {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for c in 0..n {
            let Some(p) = m.pick_pivot_row(c, c) else { return K::zero() };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..n {
                if !m[(i, c)].is_zero_tol() {
                    let f = m[(i, c)].clone() / pivot.clone();
                    for j in c..n {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    }
                }
            }
        }
        det
    }

    /// Solve `self * x = b` for one right-hand side.
    pub fn solve(&self, b: &[K]) -> Option<Vector<K>> {
        let sol = self.solve_matrix(&Matrix::from_cols(vec![b.to_vec()]))?;
        Some(sol.col(0))
    }

    /// Solve `self * X = B`; `None` when the system is inconsistent or the
    /// solution is not unique.
    pub fn solve_matrix(&self, b: &Matrix<K>) -> Option<Matrix<K>> {
        assert_eq!(self.rows, b.rows);
        let mut aug = Matrix::from_fn(self.rows, self.cols + b.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { b[(i, j - self.cols)].clone() }
        });
        let pivots = aug.rref_in_place();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None; // inconsistent
        }
        if pivots.len() < self.cols {
            return None; // underdetermined
        }
        Some(Matrix::from_fn(self.cols, b.cols, |i, j| aug[(i, self.cols + j)].clone()))
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        self.solve_matrix(&Matrix::identity(self.rows))
    }

    /// Basis of the kernel `{x : self x = 0}`.
    pub fn kernel(&self) -> Vec<Vector<K>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec_zero(self.cols);
                v[fc] = K::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m[(r, fc)].clone();
                }
                v
            })
            .collect()
    }

    /// Symmetric congruence diagonalization: returns `(P, d)` with `P`
    /// invertible and `Pᵀ · self · P = diag(d)`.
    pub fn congruence_diagonalize(&self) -> (Matrix<K>, Vector<K>) {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut p = Matrix::identity(n);

        // col_i += c * col_j paired with the same row operation
        let sym_add = |m: &mut Matrix<K>, p: &mut Matrix<K>, i: usize, j: usize, c: &K| {
            for r in 0..n {
                let t = m[(r, j)].clone() * c.clone();
                m[(r, i)] = m[(r, i)].clone() + t;
            }
            for cidx in 0..n {
                let t = m[(j, cidx)].clone() * c.clone();
                m[(i, cidx)] = m[(i, cidx)].clone() + t;
            }
            for r in 0..n {
                let t = p[(r, j)].clone() * c.clone();
                p[(r, i)] = p[(r, i)].clone() + t;
            }
        };
        let sym_swap = |m: &mut Matrix<K>, p: &mut Matrix<K>, i: usize, j: usize| {
            if i == j {
                return;
            }
            for r in 0..n {
                m.data.swap(r * n + i, r * n + j);
            }
            m.swap_rows(i, j);
            for r in 0..n {
                p.data.swap(r * n + i, r * n + j);
            }
        };

        for k in 0..n {
            if m[(k, k)].is_zero_tol() {
                // bring a nonzero diagonal entry to position k, creating one
                // from an off-diagonal entry when necessary
                let diag = if K::EXACT {
                    (k + 1..n).find(|&j| !m[(j, j)].is_zero_tol())
                } else {
                    (k..n)
                        .max_by(|&a, &b| {
                            m[(a, a)]
                                .abs()
                                .partial_cmp(&m[(b, b)].abs())
                                .unwrap_or(std::cmp::Ordering::Equal)
                        })
                        .filter(|&j| !m[(j, j)].is_zero_tol())
                };
                if let Some(j) = diag {
                    sym_swap(&mut m, &mut p, k, j);
                } else {
                    let off = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !m[(i, j)].is_zero_tol());
                    match off {
                        Some((i, j)) => {
                            // a_ii = a_jj = 0, a_ij ≠ 0: col_i += col_j makes a_ii = 2 a_ij
                            sym_add(&mut m, &mut p, i, j, &K::one());
                            sym_swap(&mut m, &mut p, k, i);
                        }
                        None => break, // remaining block is zero
                    }
                }
            }
            let pivot = m[(k, k)].clone();
            if pivot.is_zero_tol() {
                continue;
            }
            for i in k + 1..n {
                if !m[(i, k)].is_zero_tol() {
                    let c = -(m[(i, k)].clone() / pivot.clone());
                    sym_add(&mut m, &mut p, i, k, &c);
                }
            }
        }
        let d = (0..n).map(|i| m[(i, i)].clone()).collect();
        (p, d)
    }
}

impl<K: Scalar> Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<K: Scalar> IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<K: Scalar> Add for &Matrix<K> {
    type Output = Matrix<K>;
    fn add(self, rhs: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + rhs[(i, j)].clone())
    }
}

impl<K: Scalar> Sub for &Matrix<K> {
    type Output = Matrix<K>;
    fn sub(self, rhs: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - rhs[(i, j)].clone())
    }
}

impl<K: Scalar> Neg for &Matrix<K> {
    type Output = Matrix<K>;
    fn neg(self) -> Matrix<K> {
        self.map(|x| -x.clone())
    }
}

impl<K: Scalar> Mul for &Matrix<K> {
    type Output = Matrix<K>;
    fn mul(self, rhs: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, rhs.rows);
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .fold(K::zero(), |acc, k| acc + self[(i, k)].clone() * rhs[(k, j)].clone())
        })
    }
}

impl<K: Scalar> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `K^n`, stored with its basis in reduced row echelon
/// form so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<K> {
    ambient_dim: usize,
    basis: Vec<Vector<K>>,
}

impl<K: Scalar> Subspace<K> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(ambient_dim, (0..ambient_dim).map(|i| basis_vec(ambient_dim, i)).collect())
    }

    pub fn span(ambient_dim: usize, vectors: Vec<Vector<K>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient_dim));
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let mut m = Matrix::from_rows(vectors);
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|i| m.row(i)).collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector<K>] {
        &self.basis
    }

    pub fn contains(&self, v: &[K]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.clone());
        Subspace::span(self.ambient_dim, vs)
    }

    pub fn intersect(&self, other: &Subspace<K>) -> Subspace<K> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient_dim);
        }
        // columns of [A | -B] in the kernel give coefficients with Aa = Bb
        let a = Matrix::from_cols(self.basis.clone());
        let b = Matrix::from_cols(other.basis.clone());
        let stacked = Matrix::from_fn(self.ambient_dim, self.dim() + other.dim(), |i, j| {
            if j < self.dim() { a[(i, j)].clone() } else { -b[(i, j - self.dim())].clone() }
        });
        let vectors = stacked
            .kernel()
            .into_iter()
            .map(|coef| a.mul_vec(&coef[..self.dim()]))
            .collect();
        Subspace::span(self.ambient_dim, vectors)
    }

    /// Extend this subspace's basis to a basis of the ambient space; returns
    /// the added vectors (drawn from the standard basis).
    pub fn complement_basis(&self) -> Vec<Vector<K>> {
        let mut current = self.basis.clone();
        let mut added = Vec::new();
        for i in 0..self.ambient_dim {
            if current.len() == self.ambient_dim {
                break;
            }
            let cand = basis_vec(self.ambient_dim, i);
            let mut rows = current.clone();
            rows.push(cand.clone());
            if Matrix::from_rows(rows).rank() > current.len() {
                current.push(cand.clone());
                added.push(cand);
            }
        }
        added
    }
}
