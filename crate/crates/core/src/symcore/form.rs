//! Polynomial differential forms on a coordinate chart.
//!
//! A form is stored as a map from basis subsets `I` (bitmask, bit `i` is
//! `dx_i`) to polynomial coefficients, always in increasing index order.
//! Every reordering sign is produced by [`merge_sign`].

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use super::poly::{Poly, Rational};
use super::vector_field::VectorField;
use crate::error::{Error, Result};

/// Sign of `dx_I ∧ dx_J` relative to `dx_{I ∪ J}`; zero when they overlap.
pub fn merge_sign(i: u32, j: u32) -> i32 {
    if i & j != 0 {
        return 0;
    }
    let mut inversions = 0u32;
    let mut rest = j;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inversions += (i >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Indices of a basis mask in increasing order.
pub fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).collect()
}

/// All masks of `p` elements out of `n`, in lexicographic order of indices.
pub fn masks_of_degree(n: usize, p: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..(1u32 << n)).filter(|m| m.count_ones() as usize == p).collect();
    out.sort_by_key(|m| mask_indices(*m));
    out
}

/// A differential form with polynomial coefficients on an `n`-dimensional chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    comps: BTreeMap<u32, Poly>,
}

impl Form {
    pub fn zero(n: usize) -> Form {
        Form { n, comps: BTreeMap::new() }
    }

    /// The 0-form given by a function.
    pub fn function(f: Poly) -> Form {
        Form::term(f, 0)
    }

    pub fn constant(n: usize, c: Rational) -> Form {
        Form::function(Poly::constant(n, c))
    }

    pub fn one(n: usize) -> Form {
        Form::function(Poly::one(n))
    }

    /// `f dx_I`.
    pub fn term(f: Poly, mask: u32) -> Form {
        let n = f.nvars();
        assert!(mask >> n == 0, "basis mask outside the chart");
        let mut out = Form::zero(n);
        out.add_component(mask, &f);
        out
    }

    /// `dx_I` with unit coefficient.
    pub fn basis(n: usize, mask: u32) -> Form {
        Form::term(Poly::one(n), mask)
    }

    /// `dx_i`.
    pub fn dx(n: usize, i: usize) -> Form {
        Form::basis(n, 1 << i)
    }

    pub fn chart_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (u32, &Poly)> {
        self.comps.iter().map(|(m, p)| (*m, p))
    }

    /// Coefficient of `dx_I`.
    pub fn coefficient(&self, mask: u32) -> Poly {
        self.comps.get(&mask).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    /// Add `f dx_I` in place.
    pub fn add_component(&mut self, mask: u32, f: &Poly) {
        if f.is_zero() {
            return;
        }
        let n = self.n;
        let entry = self.comps.entry(mask).or_insert_with(|| Poly::zero(n));
        *entry += f;
        if entry.is_zero() {
            self.comps.remove(&mask);
        }
    }

    /// Sorted list of the degrees that occur.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.comps.keys().map(|m| m.count_ones() as usize).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Degree if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Whether the form is zero or homogeneous of degree `p`.
    pub fn is_of_degree(&self, p: usize) -> bool {
        self.comps.keys().all(|m| m.count_ones() as usize == p)
    }

    /// Degree `p` component.
    pub fn part(&self, p: usize) -> Form {
        Form {
            n: self.n,
            comps: self
                .comps
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == p)
                .map(|(m, f)| (*m, f.clone()))
                .collect(),
        }
    }

    /// Homogeneous components, lowest degree first.
    pub fn homogeneous_parts(&self) -> Vec<(usize, Form)> {
        self.degrees().into_iter().map(|p| (p, self.part(p))).collect()
    }

    /// Degree 0 coefficient.
    pub fn function_part(&self) -> Poly {
        self.coefficient(0)
    }

    pub fn scale(&self, c: &Rational) -> Form {
        let mut out = Form::zero(self.n);
        for (m, f) in &self.comps {
            out.add_component(*m, &f.scale(c));
        }
        out
    }

    /// Multiply by a function.
    pub fn mul_poly(&self, f: &Poly) -> Form {
        let mut out = Form::zero(self.n);
        for (m, g) in &self.comps {
            out.add_component(*m, &(g * f));
        }
        out
    }

    /// `(-1)^p` applied to the degree `p` part.
    pub fn parity_twist(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (m, g) in &self.comps {
            if m.count_ones() % 2 == 0 {
                out.add_component(*m, g);
            } else {
                out.add_component(*m, &-g);
            }
        }
        out
    }

    fn check_same(&self, other: &Form) {
        assert_eq!(self.n, other.n, "chart dimension mismatch between forms");
    }

    fn check_field(&self, xi: &VectorField) {
        assert_eq!(self.n, xi.chart_dim(), "chart dimension mismatch between form and field");
    }

    /// Exterior product; panics on a chart mismatch (see [`Form::try_wedge`]).
    pub fn wedge(&self, other: &Form) -> Form {
        self.check_same(other);
        let mut out = Form::zero(self.n);
        for (i, f) in &self.comps {
            for (j, g) in &other.comps {
                match merge_sign(*i, *j) {
                    0 => {}
                    1 => out.add_component(i | j, &(f * g)),
                    _ => out.add_component(i | j, &-(f * g)),
                }
            }
        }
        out
    }

    pub fn try_wedge(&self, other: &Form) -> Result<Form> {
        if self.n != other.n {
            return Err(Error::ChartMismatch { left: self.n, right: other.n });
        }
        Ok(self.wedge(other))
    }

    /// Exterior derivative.
    pub fn d(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (m, f) in &self.comps {
            for j in 0..self.n {
                if m & (1 << j) != 0 {
                    continue;
                }
                let df = f.derivative(j);
                if df.is_zero() {
                    continue;
                }
                if merge_sign(1 << j, *m) == 1 {
                    out.add_component(m | (1 << j), &df);
                } else {
                    out.add_component(m | (1 << j), &-df);
                }
            }
        }
        out
    }

    /// Contraction with a vector field in the first slot.
    pub fn interior(&self, xi: &VectorField) -> Form {
        self.check_field(xi);
        let mut out = Form::zero(self.n);
        for (m, f) in &self.comps {
            for (pos, i) in mask_indices(*m).into_iter().enumerate() {
                let c = xi.component(i);
                if c.is_zero() {
                    continue;
                }
                let term = c * f;
                if pos % 2 == 0 {
                    out.add_component(m & !(1 << i), &term);
                } else {
                    out.add_component(m & !(1 << i), &-term);
                }
            }
        }
        out
    }

    pub fn try_interior(&self, xi: &VectorField) -> Result<Form> {
        if self.n != xi.chart_dim() {
            return Err(Error::ChartMismatch { left: self.n, right: xi.chart_dim() });
        }
        Ok(self.interior(xi))
    }

    /// Lie derivative by Cartan's formula `d ι + ι d`.
    pub fn lie_derivative(&self, xi: &VectorField) -> Form {
        &self.interior(xi).d() + &self.d().interior(xi)
    }

    pub fn try_lie_derivative(&self, xi: &VectorField) -> Result<Form> {
        if self.n != xi.chart_dim() {
            return Err(Error::ChartMismatch { left: self.n, right: xi.chart_dim() });
        }
        Ok(self.lie_derivative(xi))
    }

    /// Contraction with several fields, the first one inserted first.
    pub fn interior_many(&self, fields: &[&VectorField]) -> Form {
        fields.iter().fold(self.clone(), |acc, xi| acc.interior(xi))
    }
}

impl AddAssign<&Form> for Form {
    fn add_assign(&mut self, rhs: &Form) {
        self.check_same(rhs);
        for (m, f) in &rhs.comps {
            self.add_component(*m, f);
        }
    }
}

impl SubAssign<&Form> for Form {
    fn sub_assign(&mut self, rhs: &Form) {
        self.check_same(rhs);
        for (m, f) in &rhs.comps {
            self.add_component(*m, &-f);
        }
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, rhs: Form) -> Form {
        self += &rhs;
        self
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(mut self, rhs: Form) -> Form {
        self -= &rhs;
        self
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form { n: self.n, comps: self.comps.iter().map(|(m, f)| (*m, -f)).collect() }
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

/// `(-1)^k` as a rational-free sign helper.
pub fn sign(k: i64) -> i32 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Multiply a form by a sign.
pub fn signed(s: i32, f: &Form) -> Form {
    if s >= 0 {
        f.clone()
    } else {
        -f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::poly::rat;

    #[test]
    fn merge_sign_table() {
        assert_eq!(merge_sign(0b01, 0b10), 1);
        assert_eq!(merge_sign(0b10, 0b01), -1);
        assert_eq!(merge_sign(0b100, 0b011), 1);
        assert_eq!(merge_sign(0b010, 0b101), -1);
        assert_eq!(merge_sign(0b11, 0b01), 0);
    }

    #[test]
    fn wedge_of_one_forms() {
        // (x dy) ∧ (y dx) = -xy dx∧dy
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let a = Form::term(x.clone(), 0b10);
        let b = Form::term(y.clone(), 0b01);
        assert_eq!(a.wedge(&b), Form::term(-(&x * &y), 0b11));
    }

    #[test]
    fn interior_inserts_in_first_slot() {
        // ι_{x ∂_y}(dx∧dy) = -x dx
        let x = Poly::var(2, 0);
        let xi = VectorField::new(vec![Poly::zero(2), x.clone()]);
        assert_eq!(Form::basis(2, 0b11).interior(&xi), Form::term(-x, 0b01));
    }

    #[test]
    fn exterior_derivative_of_one_form() {
        // d(xy dx + x^2 dy) = (2x - x) dx∧dy = x dx∧dy
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let a = &Form::term(&x * &y, 0b01) + &Form::term(&x * &x, 0b10);
        assert_eq!(a.d(), Form::term(x, 0b11));
    }

    #[test]
    fn parts_and_degrees() {
        let f = &Form::constant(3, rat(2)) + &Form::basis(3, 0b101);
        assert_eq!(f.degrees(), vec![0, 2]);
        assert_eq!(f.homogeneous_degree(), None);
        assert_eq!(f.part(2), Form::basis(3, 0b101));
    }

    #[test]
    fn try_wedge_reports_mismatch() {
        let err = Form::dx(2, 0).try_wedge(&Form::dx(3, 0)).unwrap_err();
        assert_eq!(err, Error::ChartMismatch { left: 2, right: 3 });
    }

    #[test]
    fn masks_are_listed_lexicographically() {
        assert_eq!(masks_of_degree(3, 2), vec![0b011, 0b101, 0b110]);
        assert_eq!(masks_of_degree(3, 4), Vec::<u32>::new());
    }
}
