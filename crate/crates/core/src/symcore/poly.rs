//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are packed into a `u64`, one byte of exponent per variable, with
//! the first variable in the most significant byte. This caps charts at
//! [`MAX_VARS`] coordinates and single exponents at 255.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout.
pub type Rational = BigRational;

/// Largest supported chart dimension.
pub const MAX_VARS: usize = 8;

/// Build a rational from a small integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Build the rational `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A monomial `x_1^{e_1} ... x_n^{e_n}` packed one byte per exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(i: usize) -> u32 {
        assert!(i < MAX_VARS, "variable index {i} exceeds the supported chart size");
        (8 * (MAX_VARS - 1 - i)) as u32
    }

    /// The monomial `x_i`.
    pub fn var(i: usize) -> Monomial {
        Monomial(1u64 << Self::shift(i))
    }

    /// Build from an exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Monomial {
        let mut m = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e < 256, "exponent {e} too large");
            m |= (e as u64) << Self::shift(i);
        }
        Monomial(m)
    }

    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> Self::shift(i)) & 0xff) as u32
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    /// Product of monomials; panics if an exponent overflows a byte.
    pub fn times(self, other: Monomial) -> Monomial {
        for i in 0..MAX_VARS {
            assert!(self.exponent(i) + other.exponent(i) < 256, "monomial exponent overflow");
        }
        Monomial(self.0 + other.0)
    }

    /// Lower the exponent of `x_i` by one. The caller checks it is positive.
    fn lower(self, i: usize) -> Monomial {
        Monomial(self.0 - (1u64 << Self::shift(i)))
    }

    /// Highest variable index with a nonzero exponent.
    fn support_bound(self) -> usize {
        (0..MAX_VARS).rev().find(|&i| self.exponent(i) > 0).map_or(0, |i| i + 1)
    }
}

/// A polynomial in `nvars` commuting variables with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        assert!(nvars <= MAX_VARS, "chart dimension {nvars} exceeds {MAX_VARS}");
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, Rational::one())
    }

    pub fn from_int(nvars: usize, c: i64) -> Poly {
        Poly::constant(nvars, rat(c))
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Poly {
        assert!(i < nvars, "variable {i} out of range for {nvars} coordinates");
        Poly::monomial(nvars, Monomial::var(i), Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Poly {
        assert!(m.support_bound() <= nvars, "monomial uses variables outside the chart");
        let mut p = Poly::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::ONE).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        if i >= self.nvars {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(m.lower(i), c * rat(e as i64));
            }
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point has the wrong length");
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    fn check_same(&self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "chart dimension mismatch between polynomials");
    }

    /// Terms sorted by descending degree then lexicographic exponents, for display.
    pub(crate) fn display_terms(&self) -> Vec<(Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(&a.0)));
        v
    }

    /// True when the leading displayed coefficient is negative.
    pub(crate) fn leading_negative(&self) -> bool {
        self.display_terms().first().is_some_and(|(_, c)| c.is_negative())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        self.check_same(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        self.check_same(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_same(rhs);
        let mut out = Poly::zero(self.nvars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let x = Poly::var(2, 0);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).num_terms(), 0);
    }

    #[test]
    fn product_and_derivative() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &(&x * &x) * &y; // x^2 y
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.derivative(0), &(&x * &y).scale(&rat(2)) + &Poly::zero(2));
        assert_eq!(p.derivative(1), &x * &x);
    }

    #[test]
    fn evaluation() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = &(&x * &y) + &Poly::constant(2, ratio(1, 2));
        assert_eq!(p.eval(&[rat(3), rat(-2)]), ratio(-11, 2));
    }

    #[test]
    #[should_panic(expected = "chart dimension mismatch")]
    fn mismatched_charts_panic() {
        let _ = &Poly::var(2, 0) + &Poly::var(3, 0);
    }
}
