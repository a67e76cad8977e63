//! Functions on the space of odd paths and the module `pr_* ev^* E` for a
//! free bundle `E`.
//!
//! A [`SuperFunc`] is `even + odd·ε` with `ε` of degree -1 written on the
//! right. A [`PrEvElement`] is the normal form `Σ β_i ⊗ e_i + Σ α_i ε ⊗ e_i`
//! over a frame `e_1 .. e_r`, with forms as coefficients.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::symcore::{Form, Poly};

/// Element `even + odd·ε` of `Ω_X[ε]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperFunc {
    pub even: Form,
    pub odd: Form,
}

impl SuperFunc {
    pub fn new(even: Form, odd: Form) -> SuperFunc {
        assert_eq!(even.chart_dim(), odd.chart_dim(), "chart dimension mismatch in super function");
        SuperFunc { even, odd }
    }

    pub fn zero(n: usize) -> SuperFunc {
        SuperFunc::new(Form::zero(n), Form::zero(n))
    }

    /// `ω` with no `ε` part.
    pub fn even(even: Form) -> SuperFunc {
        let n = even.chart_dim();
        SuperFunc::new(even, Form::zero(n))
    }

    /// `γ·ε`.
    pub fn odd(odd: Form) -> SuperFunc {
        let n = odd.chart_dim();
        SuperFunc::new(Form::zero(n), odd)
    }

    pub fn chart_dim(&self) -> usize {
        self.even.chart_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Total degree if homogeneous (`ε` counts -1).
    pub fn degree(&self) -> Option<i64> {
        let e = self.even.homogeneous_degree().map(|d| d as i64);
        let o = self.odd.homogeneous_degree().map(|d| d as i64 - 1);
        match (self.even.is_zero(), self.odd.is_zero()) {
            (true, true) => None,
            (false, true) => e,
            (true, false) => o,
            (false, false) => e.filter(|d| Some(*d) == o),
        }
    }

    /// Product in `Ω_X[ε]`.
    pub fn mul(&self, other: &SuperFunc) -> SuperFunc {
        let even = self.even.wedge(&other.even);
        // (a1 ε) b0 = (-1)^{|b0|} a1 b0 ε
        let odd = &self.even.wedge(&other.odd) + &self.odd.wedge(&other.even.parity_twist());
        SuperFunc::new(even, odd)
    }

    /// The differential `d + ∂_ε`, with `∂(γ ε) = dγ ε + (-1)^{|γ|} γ`.
    pub fn diff(&self) -> SuperFunc {
        SuperFunc::new(&self.even.d() + &self.odd.parity_twist(), self.odd.d())
    }

    /// Left multiplication by a form.
    pub fn scale(&self, psi: &Form) -> SuperFunc {
        SuperFunc::new(psi.wedge(&self.even), psi.wedge(&self.odd))
    }
}

impl Add for &SuperFunc {
    type Output = SuperFunc;
    fn add(self, rhs: &SuperFunc) -> SuperFunc {
        SuperFunc::new(&self.even + &rhs.even, &self.odd + &rhs.odd)
    }
}

impl Sub for &SuperFunc {
    type Output = SuperFunc;
    fn sub(self, rhs: &SuperFunc) -> SuperFunc {
        SuperFunc::new(&self.even - &rhs.even, &self.odd - &rhs.odd)
    }
}

impl fmt::Display for SuperFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})·ε", self.even, self.odd)
    }
}

/// Pullback of a function along evaluation: `f + df·ε`.
pub fn ev_pullback(f: &Poly) -> SuperFunc {
    let f = Form::function(f.clone());
    let df = f.d();
    SuperFunc::new(f, df)
}

/// Product of super functions.
pub fn super_mul(a: &SuperFunc, b: &SuperFunc) -> SuperFunc {
    a.mul(b)
}

/// Differential of a super function.
pub fn super_diff(a: &SuperFunc) -> SuperFunc {
    a.diff()
}

/// Fibre integration `(β + γ ε) ⊗ ω ↦ β ∧ dω + γ ∧ ω`.
pub fn integrate(a: &SuperFunc, omega: &Form) -> Result<Form> {
    if a.chart_dim() != omega.chart_dim() {
        return Err(Error::ChartMismatch { left: a.chart_dim(), right: omega.chart_dim() });
    }
    Ok(&a.even.wedge(&omega.d()) + &a.odd.wedge(omega))
}

/// Normal form `Σ one_i ⊗ e_i + Σ eps_i ε ⊗ e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrEvElement {
    pub one: Vec<Form>,
    pub eps: Vec<Form>,
}

impl PrEvElement {
    pub fn zero(n: usize, rank: usize) -> PrEvElement {
        PrEvElement { one: vec![Form::zero(n); rank], eps: vec![Form::zero(n); rank] }
    }

    pub fn rank(&self) -> usize {
        self.one.len()
    }

    pub fn chart_dim(&self) -> usize {
        self.one.first().map_or(0, Form::chart_dim)
    }

    pub fn is_zero(&self) -> bool {
        self.one.iter().chain(&self.eps).all(Form::is_zero)
    }

    /// `ω ⊗ e_i`.
    pub fn one_term(n: usize, rank: usize, i: usize, omega: Form) -> PrEvElement {
        let mut z = PrEvElement::zero(n, rank);
        z.one[i] = omega;
        z
    }

    /// `α ε ⊗ e_i`.
    pub fn eps_term(n: usize, rank: usize, i: usize, alpha: Form) -> PrEvElement {
        let mut z = PrEvElement::zero(n, rank);
        z.eps[i] = alpha;
        z
    }

    /// Left multiplication by a form.
    pub fn scale(&self, psi: &Form) -> PrEvElement {
        PrEvElement {
            one: self.one.iter().map(|b| psi.wedge(b)).collect(),
            eps: self.eps.iter().map(|a| psi.wedge(a)).collect(),
        }
    }

    /// Differential `∂(β⊗e) = dβ⊗e`, `∂(α ε⊗e) = dα ε⊗e + (-1)^{|α|} α⊗e`.
    pub fn diff(&self) -> PrEvElement {
        PrEvElement {
            one: self.one.iter().zip(&self.eps).map(|(b, a)| &b.d() + &a.parity_twist()).collect(),
            eps: self.eps.iter().map(Form::d).collect(),
        }
    }

    /// Total degree if homogeneous: `β⊗e` has `|β|`, `α ε⊗e` has `|α| - 1`.
    pub fn degree(&self) -> Option<i64> {
        let mut degs: Vec<i64> = Vec::new();
        for b in &self.one {
            degs.extend(b.degrees().into_iter().map(|d| d as i64));
        }
        for a in &self.eps {
            degs.extend(a.degrees().into_iter().map(|d| d as i64 - 1));
        }
        degs.sort_unstable();
        degs.dedup();
        match degs.as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Component of total degree `d`.
    pub fn part(&self, d: i64) -> PrEvElement {
        let n = self.chart_dim();
        let pick = |f: &Form, p: i64| if p >= 0 { f.part(p as usize) } else { Form::zero(n) };
        PrEvElement {
            one: self.one.iter().map(|b| pick(b, d)).collect(),
            eps: self.eps.iter().map(|a| pick(a, d + 1)).collect(),
        }
    }

    /// Homogeneous components in increasing degree.
    pub fn homogeneous_parts(&self) -> Vec<(i64, PrEvElement)> {
        let n = self.chart_dim() as i64;
        (-1..=n).map(|d| (d, self.part(d))).filter(|(_, p)| !p.is_zero()).collect()
    }

    /// Unreduced presentation as a list of super function times frame element.
    pub fn to_raw(&self) -> Vec<(SuperFunc, Vec<Poly>)> {
        let n = self.chart_dim();
        let r = self.rank();
        let unit = |i: usize| (0..r).map(|j| if i == j { Poly::one(n) } else { Poly::zero(n) }).collect::<Vec<_>>();
        let mut out = Vec::new();
        for i in 0..r {
            out.push((SuperFunc::new(self.one[i].clone(), self.eps[i].clone()), unit(i)));
        }
        out
    }
}

impl Add for &PrEvElement {
    type Output = PrEvElement;
    fn add(self, rhs: &PrEvElement) -> PrEvElement {
        assert_eq!(self.rank(), rhs.rank(), "rank mismatch");
        PrEvElement {
            one: self.one.iter().zip(&rhs.one).map(|(a, b)| a + b).collect(),
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PrEvElement {
    type Output = PrEvElement;
    fn sub(self, rhs: &PrEvElement) -> PrEvElement {
        self + &(-rhs)
    }
}

impl Neg for &PrEvElement {
    type Output = PrEvElement;
    fn neg(self) -> PrEvElement {
        PrEvElement { one: self.one.iter().map(|a| -a).collect(), eps: self.eps.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for PrEvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one: Vec<String> = self.one.iter().map(|x| x.to_string()).collect();
        let eps: Vec<String> = self.eps.iter().map(|x| x.to_string()).collect();
        write!(f, "one: [{}] | eps: [{}]", one.join(", "), eps.join(", "))
    }
}

/// Balance functions across the tensor product to reach the normal form.
///
/// Each input pair `(A, s)` is `A ⊗ Σ s_i e_i`. Balancing uses
/// `A ⊗ f e = A·ev^*(f) ⊗ e`.
pub fn prev_normalize(terms: &[(SuperFunc, Vec<Poly>)], n: usize, rank: usize) -> Result<PrEvElement> {
    let mut out = PrEvElement::zero(n, rank);
    for (a, s) in terms {
        if s.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: s.len() });
        }
        if a.chart_dim() != n {
            return Err(Error::ChartMismatch { left: n, right: a.chart_dim() });
        }
        for (i, f) in s.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let b = a.mul(&ev_pullback(f));
            out.one[i] += &b.even;
            out.eps[i] += &b.odd;
        }
    }
    Ok(out)
}

/// `A ⊗ s` in normal form.
pub fn tensor(a: &SuperFunc, s: &[Poly]) -> PrEvElement {
    prev_normalize(&[(a.clone(), s.to_vec())], a.chart_dim(), s.len()).expect("consistent shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::parse_form;

    fn f(s: &str) -> Form {
        parse_form(2, s).unwrap()
    }

    #[test]
    fn ev_of_function_is_closed() {
        let p = crate::symcore::parse_poly(2, "x^2*y + 3").unwrap();
        assert!(ev_pullback(&p).diff().is_zero());
    }

    #[test]
    fn diff_of_odd_generator() {
        // ∂(dx ε) = -dx
        let a = SuperFunc::odd(f("dx"));
        assert_eq!(a.diff(), SuperFunc::even(f("-1 dx")));
    }

    #[test]
    fn normalization_moves_functions_left() {
        // 1 ⊗ x e = x ⊗ e + dx ε ⊗ e
        let x = crate::symcore::Poly::var(2, 0);
        let t = tensor(&SuperFunc::even(Form::one(2)), &[x]);
        assert_eq!(t.one[0], f("x"));
        assert_eq!(t.eps[0], f("dx"));
    }

    #[test]
    fn integration_of_pure_terms() {
        let a = SuperFunc::new(f("y"), f("x"));
        assert_eq!(integrate(&a, &f("x dy")).unwrap(), f("x^2 dy + y dx^dy"));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let err = prev_normalize(&[(SuperFunc::zero(2), vec![])], 2, 1).unwrap_err();
        assert_eq!(err, Error::RankMismatch { expected: 1, found: 0 });
    }
}
