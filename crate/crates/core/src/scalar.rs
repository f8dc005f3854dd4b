//! Scalar domains: exact rationals and tolerance-based floating point.
//!
//! Every algorithm in the crate is generic over [`Scalar`]. The exact
//! instantiation is [`Rational`] (arbitrary-precision `p/q`, never rounds);
//! the float instantiation is `f64`, where all zero tests go through a single
//! global tolerance `ε` (default `1e-9`, see [`set_float_tolerance`]).

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

static FLOAT_TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E112E0BE826D695); // 1e-9

/// Global tolerance used by all float-mode comparisons.
pub fn float_tolerance() -> f64 {
    f64::from_bits(FLOAT_TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Replace the global float-mode tolerance. Must be positive.
pub fn set_float_tolerance(eps: f64) {
    assert!(eps > 0.0, "tolerance must be positive");
    FLOAT_TOLERANCE_BITS.store(eps.to_bits(), Ordering::Relaxed);
}

/// Field of coefficients for all linear algebra in the crate.
pub trait Scalar:
    Signed + Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// True for domains where `==` is exact and pivoting may use any nonzero.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Mode equality with zero: literal in exact mode, `|x| ≤ ε` in float mode.
    fn is_zero_tol(&self) -> bool;

    fn eq_tol(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero_tol()
    }

    fn to_f64(&self) -> f64;

    /// Exact rational view. `None` in float mode: predicates that are not
    /// ε-robust (complete solvability, extraction) refuse to run there.
    fn to_rational(&self) -> Option<Rational>;

    fn from_rational(q: &Rational) -> Self;

    /// Square root inside the domain: exact mode only succeeds on perfect
    /// squares, float mode on any nonnegative value.
    fn sqrt_exact(&self) -> Option<Self>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_zero_tol(&self) -> bool {
        self.is_zero()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let num = self.numer().sqrt();
        let den = self.denom().sqrt();
        if &(&num * &num) == self.numer() && &(&den * &den) == self.denom() {
            Some(Rational::new(num, den))
        } else {
            None
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_zero_tol(&self) -> bool {
        self.abs() <= float_tolerance()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_rational(&self) -> Option<Rational> {
        None
    }

    fn from_rational(q: &Rational) -> Self {
        Scalar::to_f64(q)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }
}

/// Parse a canonical rational string: `p` or `p/q` with `q > 0`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(num))
        }
    }
}

/// Canonical string form of a rational: reduced, `p` when the denominator is
/// one, `p/q` with positive `q` otherwise.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Best-effort rational from an `f64` (used only for diagnostics).
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_f64(x)
}
