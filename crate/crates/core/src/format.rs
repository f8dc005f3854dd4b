//! JSON file formats for algebras, double-extension parameters, reports and
//! search certificates.
//!
//! One self-describing layout serves both modes: exact files carry rationals
//! as strings `"p/q"` (or `"p"`), float files carry plain numbers. Emission
//! is canonical — parse then emit is the identity on canonicalized files,
//! byte for byte. Bracket indices are 1-based with `i < j`; omitted pairs
//! vanish.

use serde::{Deserialize, Serialize};

use crate::dext::DoubleExtensionParams;
use crate::error::{Error, Result};
use crate::lie::{ClassificationFlags, LieAlgebra};
use crate::matrix::{Matrix, Vector};
use crate::metric::PseudoEuclideanLieAlgebra;
use crate::pseudo::MetricTensor;
use crate::scalar::{parse_rational, rational_to_string, Rational, Scalar};
use crate::search::{Certificate, CertificateChecks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// A scalar as stored on disk: a rational string in exact mode, a number in
/// float mode (integers are accepted everywhere on input).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Float(f64),
    Str(String),
}

impl Num {
    fn from_scalar<K: Scalar>(x: &K) -> Num {
        match x.to_rational() {
            Some(q) => Num::Str(rational_to_string(&q)),
            None => Num::Float(x.to_f64()),
        }
    }

    fn to_exact(&self) -> Result<Rational> {
        match self {
            Num::Int(n) => Ok(Rational::from_int(*n)),
            Num::Str(s) => {
                parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational '{}'", s)))
            }
            Num::Float(_) => {
                Err(Error::Parse("float literal in an exact-mode file".into()))
            }
        }
    }

    fn to_float(&self) -> Result<f64> {
        match self {
            Num::Int(n) => Ok(*n as f64),
            Num::Float(x) => Ok(*x),
            Num::Str(s) => parse_rational(s)
                .map(|q| Scalar::to_f64(&q))
                .ok_or_else(|| Error::Parse(format!("bad number '{}'", s))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub mode: Mode,
    pub metric: Vec<Vec<Num>>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsFile {
    pub mode: Mode,
    pub dim_g0: usize,
    pub g0: AlgebraFile,
    pub k: Vec<Vec<Num>>,
    pub d: Vec<Vec<Num>>,
    pub mu: Num,
    pub b: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagsFile {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub completely_solvable: Option<bool>,
    pub unimodular: bool,
    pub derived_series_length: usize,
    pub lower_central_length: usize,
}

impl From<ClassificationFlags> for FlagsFile {
    fn from(f: ClassificationFlags) -> Self {
        FlagsFile {
            abelian: f.abelian,
            nilpotent: f.nilpotent,
            solvable: f.solvable,
            completely_solvable: f.completely_solvable,
            unimodular: f.unimodular,
            derived_series_length: f.derived_series_length,
            lower_central_length: f.lower_central_length,
        }
    }
}

/// Named intermediate values a report exposes so every claim can be
/// recomputed.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_curvature: Option<Vec<Num>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tr_j1: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tr_j2: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag_of_ideals: Option<Vec<Vec<Num>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extraction_basis: Option<Vec<Vec<Num>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub flags: FlagsFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ricci: Option<Vec<Vec<Num>>>,
    pub einstein_lambda: Option<Num>,
    pub witnesses: Witnesses,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChecksFile {
    pub jacobi_zero: bool,
    pub unimodular: bool,
    pub einstein_conditions: bool,
    pub ricci_operator_zero: bool,
    pub lambda_zero: bool,
    pub completely_solvable: Option<bool>,
    pub has_nonzero_trace_derivation: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub algebra: AlgebraFile,
    pub params: ParamsFile,
    pub checks: ChecksFile,
}

/// Extraction output: parameters plus the adapted basis (isometry data).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtractionFile {
    pub mode: String,
    pub params: ParamsFile,
    /// Columns `(e, f₁, …, f_n, ē)` of the adapted basis in the coordinates
    /// of the input algebra.
    pub basis: Vec<Vec<Num>>,
}

impl ExtractionFile {
    pub fn from_extraction<K: Scalar>(ex: &crate::dext::Extraction<K>) -> Self {
        ExtractionFile {
            mode: match ex.mode {
                crate::dext::ExtractionMode::DerivedDegenerate => "derived_degenerate".into(),
                crate::dext::ExtractionMode::CenterDegenerate => "center_degenerate".into(),
            },
            params: params_to_file(&ex.params),
            basis: matrix_to_nums(&ex.basis),
        }
    }
}

/// An algebra parsed from disk, in whichever scalar domain the file declares.
#[derive(Clone, Debug)]
pub enum ParsedAlgebra {
    Exact(PseudoEuclideanLieAlgebra<Rational>),
    Float(PseudoEuclideanLieAlgebra<f64>),
}

#[derive(Clone, Debug)]
pub enum ParsedParams {
    Exact(DoubleExtensionParams<Rational>),
    Float(DoubleExtensionParams<f64>),
}

pub fn matrix_to_nums<K: Scalar>(m: &Matrix<K>) -> Vec<Vec<Num>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| Num::from_scalar(&m[(i, j)])).collect())
        .collect()
}

pub fn vector_to_nums<K: Scalar>(v: &[K]) -> Vec<Num> {
    v.iter().map(Num::from_scalar).collect()
}

fn nums_to_matrix<K: Scalar>(
    rows: &[Vec<Num>],
    conv: impl Fn(&Num) -> Result<K>,
) -> Result<Matrix<K>> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.len());
    if rows.iter().any(|row| row.len() != c) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    let mut out = Vec::with_capacity(r);
    for row in rows {
        let mut v = Vec::with_capacity(c);
        for x in row {
            v.push(conv(x)?);
        }
        out.push(v);
    }
    Ok(Matrix::from_rows(out))
}

pub fn algebra_to_file<K: Scalar>(p: &PseudoEuclideanLieAlgebra<K>) -> AlgebraFile {
    let n = p.dim();
    let mode = if K::EXACT { Mode::Exact } else { Mode::Float };
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = p.lie().basis_bracket(i, j);
            if !crate::matrix::vec_is_zero(v) {
                brackets.push(BracketEntry { i: i + 1, j: j + 1, coeffs: vector_to_nums(v) });
            }
        }
    }
    AlgebraFile { dim: n, mode, metric: matrix_to_nums(p.metric().matrix()), brackets }
}

fn algebra_from_file_with<K: Scalar>(
    f: &AlgebraFile,
    conv: &impl Fn(&Num) -> Result<K>,
) -> Result<PseudoEuclideanLieAlgebra<K>> {
    let n = f.dim;
    let metric = nums_to_matrix(&f.metric, conv)?;
    if metric.nrows() != n || metric.ncols() != n {
        return Err(Error::Parse(format!("metric is not {n}×{n}")));
    }
    let mut brackets = Vec::new();
    for entry in &f.brackets {
        if entry.i == 0 || entry.j == 0 || entry.i >= entry.j || entry.j > n {
            return Err(Error::Parse(format!(
                "bracket indices ({}, {}) must satisfy 1 ≤ i < j ≤ {}",
                entry.i, entry.j, n
            )));
        }
        if entry.coeffs.len() != n {
            return Err(Error::Parse(format!(
                "bracket ({}, {}) has {} coefficients, expected {}",
                entry.i,
                entry.j,
                entry.coeffs.len(),
                n
            )));
        }
        let mut v: Vector<K> = Vec::with_capacity(n);
        for x in &entry.coeffs {
            v.push(conv(x)?);
        }
        brackets.push((entry.i - 1, entry.j - 1, v));
    }
    // Jacobi is deliberately not checked here: callers report defects
    let lie = LieAlgebra::new_unchecked(n, &brackets);
    PseudoEuclideanLieAlgebra::new(lie, MetricTensor::new(metric)?)
}

pub fn algebra_from_file(f: &AlgebraFile) -> Result<ParsedAlgebra> {
    match f.mode {
        Mode::Exact => Ok(ParsedAlgebra::Exact(algebra_from_file_with(f, &Num::to_exact)?)),
        Mode::Float => Ok(ParsedAlgebra::Float(algebra_from_file_with(f, &Num::to_float)?)),
    }
}

pub fn params_to_file<K: Scalar>(p: &DoubleExtensionParams<K>) -> ParamsFile {
    ParamsFile {
        mode: if K::EXACT { Mode::Exact } else { Mode::Float },
        dim_g0: p.base_dim(),
        g0: algebra_to_file(&p.g0),
        k: matrix_to_nums(&p.k),
        d: matrix_to_nums(&p.d),
        mu: Num::from_scalar(&p.mu),
        b: vector_to_nums(&p.b),
    }
}

fn params_from_file_with<K: Scalar>(
    f: &ParamsFile,
    conv: &impl Fn(&Num) -> Result<K>,
) -> Result<DoubleExtensionParams<K>> {
    let g0 = algebra_from_file_with(&f.g0, conv)?;
    if g0.dim() != f.dim_g0 {
        return Err(Error::Parse("dim_g0 does not match the base algebra".into()));
    }
    let k = nums_to_matrix(&f.k, conv)?;
    let d = nums_to_matrix(&f.d, conv)?;
    let mu = conv(&f.mu)?;
    let mut b = Vec::with_capacity(f.b.len());
    for x in &f.b {
        b.push(conv(x)?);
    }
    DoubleExtensionParams::new(g0, k, d, mu, b)
}

pub fn params_from_file(f: &ParamsFile) -> Result<ParsedParams> {
    match f.mode {
        Mode::Exact => Ok(ParsedParams::Exact(params_from_file_with(f, &Num::to_exact)?)),
        Mode::Float => Ok(ParsedParams::Float(params_from_file_with(f, &Num::to_float)?)),
    }
}

pub fn certificate_to_file(c: &Certificate) -> Result<CertificateFile> {
    let built = c.params.build()?;
    Ok(CertificateFile {
        algebra: algebra_to_file(&built),
        params: params_to_file(&c.params),
        checks: checks_to_file(&c.checks),
    })
}

pub fn checks_to_file(c: &CertificateChecks) -> ChecksFile {
    ChecksFile {
        jacobi_zero: c.jacobi_zero,
        unimodular: c.unimodular,
        einstein_conditions: c.einstein_conditions,
        ricci_operator_zero: c.ricci_operator_zero,
        lambda_zero: c.lambda_zero,
        completely_solvable: c.completely_solvable,
        has_nonzero_trace_derivation: c.has_nonzero_trace_derivation,
    }
}

/// Canonical textual form used for all emitted files.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}
