//! Univariate polynomials over the rationals: characteristic polynomials,
//! Sturm-sequence real-root counting and rational root extraction.
//!
//! Exact mode decides "all eigenvalues real" through Sturm sequences on the
//! square-free part, never through floating approximations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// Polynomial with coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::new(vec![Rational::zero()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("poly has at least one coefficient")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * Rational::from_int(i as i64))
                .collect(),
        )
    }

    /// Make the polynomial monic (no-op on the zero polynomial).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading().clone();
        Poly::new(self.coeffs.iter().map(|c| c.clone() / lc.clone()).collect())
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let lc = divisor.leading().clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() / lc.clone();
            if !c.is_zero() {
                quot[k - dd] = c.clone();
                for i in 0..=dd {
                    rem[k - dd + i] = rem[k - dd + i].clone() - c.clone() * divisor.coeffs[i].clone();
                }
            }
        }
        (Poly::new(quot), Poly::new(rem[..dd.max(1)].to_vec()))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic(); // keep coefficient growth in check
        }
        a.monic()
    }

    /// Radical of the polynomial: same roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_variations(signs: &[i32]) -> usize {
    let nonzero: Vec<i32> = signs.iter().copied().filter(|s| *s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` (Sturm's theorem over all of ℝ).
pub fn count_real_roots(p: &Poly) -> usize {
    let p = p.squarefree_part();
    if p.degree() == 0 {
        return 0;
    }
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().expect("chain nonempty").is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(Poly::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
    }
    chain.pop();
    // signs at -∞ and +∞ from leading coefficients and degree parity
    let at_minus: Vec<i32> = chain
        .iter()
        .map(|q| {
            let s = sign(q.leading());
            if q.degree() % 2 == 0 { s } else { -s }
        })
        .collect();
    let at_plus: Vec<i32> = chain.iter().map(|q| sign(q.leading())).collect();
    sign_variations(&at_minus) - sign_variations(&at_plus)
}

/// True iff every complex root of `p` is real (multiplicities immaterial).
pub fn all_roots_real(p: &Poly) -> bool {
    let q = p.squarefree_part();
    count_real_roots(&q) == q.degree()
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if n.is_multiple_of(&i) {
            small.push(i.clone());
            let q = &n / &i;
            if q != i {
                large.push(q);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All rational roots of `p`, each repeated with its multiplicity.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    if p.is_zero() {
        return roots;
    }
    // strip roots at zero
    while p.degree() >= 1 && p.coeffs[0].is_zero() {
        roots.push(Rational::zero());
        p = Poly::new(p.coeffs[1..].to_vec());
    }
    if p.degree() == 0 {
        return roots;
    }
    // primitive integer polynomial with the same roots
    let denom_lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let int_coeffs: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let a0 = int_coeffs[0].clone();
    let an = int_coeffs.last().expect("nonzero degree").clone();
    let mut candidates: Vec<Rational> = Vec::new();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            let c = Rational::new(num.clone(), den.clone());
            if !candidates.contains(&c) {
                candidates.push(c);
            }
        }
    }
    let mut with_neg = candidates.clone();
    with_neg.extend(candidates.iter().map(|c| -c.clone()));
    for cand in with_neg {
        while p.degree() >= 1 && p.eval(&cand).is_zero() {
            roots.push(cand.clone());
            // deflate by (x - cand)
            let lin = Poly::new(vec![-cand.clone(), Rational::one()]);
            p = p.div_rem(&lin).0;
        }
    }
    roots
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier scheme.
pub fn char_poly(a: &Matrix<Rational>) -> Poly {
    assert!(a.is_square());
    let n = a.nrows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        let am = a * &m;
        let c = -(am.trace() / Rational::from_int(k as i64));
        coeffs[n - k] = c.clone();
        m = &am + &Matrix::identity(n).scale(&c);
    }
    Poly::new(coeffs)
}
