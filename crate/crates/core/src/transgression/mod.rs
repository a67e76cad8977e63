//! The transgression `τQ` of a Courant algebroid: a marked DG Lie algebroid
//! over the shifted tangent bundle.
//!
//! With `Q = Ω^m ⊕ F` and frame `b_1 .. b_r` of `F`, the normal form is
//!
//! ```text
//! θ·c + Σ α_i ε⊗b_i + Σ β_i ⊗b_i
//! ```
//!
//! where `c` has degree `-k` with `k = m + 1`. Coanchor terms are absorbed
//! into `θ` by `αε⊗π†γ ≡ α∧γ` and `β⊗π†γ ≡ β∧dγ`; functions move left by
//! `ε⊗fq ≡ fε⊗q` and `1⊗fq ≡ f⊗q + df ε⊗q`.

pub mod cour;
pub mod ctl;
pub mod model;
pub mod raw;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::Rng;

use crate::courant::{CourantElement, CourantStructure};
use crate::error::{Error, Result};
use crate::leibniz::{leibniz_act, leibniz_bracket, GeneratorAlgebra};
use crate::liealgebroid::{LieAlgebroidStructure, MarkedAlgebroid, SharpAlgebroid};
use crate::oddpath::{prev_normalize, PrEvElement, SuperFunc};
use crate::sample::Sampler;
use crate::symcore::form::masks_of_degree;
use crate::symcore::{Form, Poly, VectorField};

pub use cour::DerivedCourant;
pub use ctl::{ctl_pullback, initial_ctl, universal_extend, CtlMorphism, UniversalExtension};
pub use model::{ModelElement, QuadraticModel};
pub use raw::{KData, KGenerator, RawGen, RawTau};

/// Normal-form element of `τQ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TauElement {
    pub theta: Form,
    pub eps: Vec<Form>,
    pub one: Vec<Form>,
}

impl TauElement {
    pub fn zero(n: usize, r: usize) -> Self {
        TauElement { theta: Form::zero(n), eps: vec![Form::zero(n); r], one: vec![Form::zero(n); r] }
    }

    pub fn chart_dim(&self) -> usize {
        self.theta.chart_dim()
    }

    pub fn rank(&self) -> usize {
        self.eps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.theta.is_zero() && self.eps.iter().chain(&self.one).all(Form::is_zero)
    }

    /// `θ·c`.
    pub fn marked(theta: Form, r: usize) -> Self {
        let n = theta.chart_dim();
        TauElement { theta, ..TauElement::zero(n, r) }
    }

    /// Left multiplication by a form.
    pub fn scale(&self, psi: &Form) -> Self {
        TauElement {
            theta: psi.wedge(&self.theta),
            eps: self.eps.iter().map(|a| psi.wedge(a)).collect(),
            one: self.one.iter().map(|b| psi.wedge(b)).collect(),
        }
    }

    /// The set of degrees present, with the marking in degree `-k`.
    pub fn degrees(&self, k: usize) -> Vec<i64> {
        let mut d: Vec<i64> = self.theta.degrees().into_iter().map(|p| p as i64 - k as i64).collect();
        for a in &self.eps {
            d.extend(a.degrees().into_iter().map(|p| p as i64 - 1));
        }
        for b in &self.one {
            d.extend(b.degrees().into_iter().map(|p| p as i64));
        }
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn degree(&self, k: usize) -> Option<i64> {
        match self.degrees(k).as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// Degree `d` component.
    pub fn part(&self, k: usize, d: i64) -> Self {
        let pick = |f: &Form, p: i64| if p >= 0 { f.part(p as usize) } else { Form::zero(f.chart_dim()) };
        TauElement {
            theta: pick(&self.theta, d + k as i64),
            eps: self.eps.iter().map(|a| pick(a, d + 1)).collect(),
            one: self.one.iter().map(|b| pick(b, d)).collect(),
        }
    }
}

impl Add for &TauElement {
    type Output = TauElement;
    fn add(self, rhs: &TauElement) -> TauElement {
        TauElement {
            theta: &self.theta + &rhs.theta,
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
            one: self.one.iter().zip(&rhs.one).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TauElement {
    type Output = TauElement;
    fn sub(self, rhs: &TauElement) -> TauElement {
        self + &(-rhs)
    }
}

impl Neg for &TauElement {
    type Output = TauElement;
    fn neg(self) -> TauElement {
        TauElement {
            theta: -&self.theta,
            eps: self.eps.iter().map(|a| -a).collect(),
            one: self.one.iter().map(|b| -b).collect(),
        }
    }
}

impl fmt::Display for TauElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Form]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{} | eps: [{}] | one: [{}]", self.theta, list(&self.eps), list(&self.one))
    }
}

/// Generators of the normal form: `c`, `ε⊗b_i`, `1⊗b_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauGen {
    Mark,
    Eps(usize),
    One(usize),
}

/// Sample shapes: which slot a homogeneous sample is built in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauShape {
    Theta,
    Eps,
    One,
}

impl TauShape {
    pub const ALL: [TauShape; 3] = [TauShape::Theta, TauShape::Eps, TauShape::One];

    pub fn letter(self) -> char {
        match self {
            TauShape::Theta => 'c',
            TauShape::Eps => 'e',
            TauShape::One => 'o',
        }
    }
}

/// `τQ` with its generator table.
#[derive(Clone, Debug)]
pub struct TauAlgebroid {
    q: CourantStructure,
    k: usize,
    fields: Vec<VectorField>,
    pair: Vec<Vec<Form>>,
    /// `reduce(ε⊗{b_i, b_j})`.
    eps_bracket: Vec<Vec<TauElement>>,
    /// `reduce(1⊗{b_i, b_j})`.
    one_bracket: Vec<Vec<TauElement>>,
}

impl TauAlgebroid {
    /// Build `τQ`. Every in-scope family has a free complement, so this only
    /// fails on structures without one.
    pub fn build(q: &CourantStructure) -> Result<Self> {
        let r = q.fiber_rank();
        let k = q.dimension_k() + 1;
        let fields = (0..r).map(|i| q.anchor(&q.basis(i))).collect();
        let mut tau = TauAlgebroid {
            q: q.clone(),
            k,
            fields,
            pair: Vec::new(),
            eps_bracket: Vec::new(),
            one_bracket: Vec::new(),
        };
        for i in 0..r {
            let mut p = Vec::new();
            let mut e = Vec::new();
            let mut o = Vec::new();
            for j in 0..r {
                let (bi, bj) = (q.basis(i), q.basis(j));
                p.push(q.pairing(&bi, &bj));
                let br = q.dorfman(&bi, &bj);
                e.push(tau.reduce_eps(&Form::one(q.chart_dim()), &br));
                o.push(tau.reduce_one(&Form::one(q.chart_dim()), &br));
            }
            tau.pair.push(p);
            tau.eps_bracket.push(e);
            tau.one_bracket.push(o);
        }
        Ok(tau)
    }

    pub fn courant(&self) -> &CourantStructure {
        &self.q
    }

    /// Degree of the marking is `-k`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn chart_dim(&self) -> usize {
        self.q.chart_dim()
    }

    pub fn rank(&self) -> usize {
        self.q.fiber_rank()
    }

    pub fn zero(&self) -> TauElement {
        TauElement::zero(self.chart_dim(), self.rank())
    }

    pub fn marking(&self) -> TauElement {
        TauElement::marked(Form::one(self.chart_dim()), self.rank())
    }

    /// `ψ ε⊗q` in normal form.
    pub fn reduce_eps(&self, psi: &Form, q: &CourantElement) -> TauElement {
        let mut out = self.zero();
        out.theta = psi.wedge(&q.form);
        for (i, f) in q.fiber.iter().enumerate() {
            out.eps[i] = psi.mul_poly(f);
        }
        out
    }

    /// `ψ ⊗q` in normal form.
    pub fn reduce_one(&self, psi: &Form, q: &CourantElement) -> TauElement {
        let mut out = self.zero();
        out.theta = psi.wedge(&q.form.d());
        for (i, f) in q.fiber.iter().enumerate() {
            out.one[i] = psi.mul_poly(f);
            out.eps[i] = psi.wedge(&Form::function(f.clone()).d());
        }
        out
    }

    /// The image of `q` under the initial map, `ε⊗q`.
    pub fn phi(&self, q: &CourantElement) -> TauElement {
        self.reduce_eps(&Form::one(self.chart_dim()), q)
    }

    /// Inverse of [`TauAlgebroid::phi`] on degree -1.
    pub fn to_courant(&self, a: &TauElement) -> Result<CourantElement> {
        if a.degrees(self.k).iter().any(|d| *d != -1) {
            return Err(Error::DegreeMismatch { expected: 1, found: format!("{:?}", a.degrees(self.k)) });
        }
        let fiber = a.eps.iter().map(Form::function_part).collect();
        self.q.element(a.theta.clone(), fiber)
    }

    fn terms(&self, a: &TauElement) -> Vec<(Form, TauGen)> {
        let mut out = Vec::new();
        if !a.theta.is_zero() {
            out.push((a.theta.clone(), TauGen::Mark));
        }
        for i in 0..self.rank() {
            if !a.eps[i].is_zero() {
                out.push((a.eps[i].clone(), TauGen::Eps(i)));
            }
            if !a.one[i].is_zero() {
                out.push((a.one[i].clone(), TauGen::One(i)));
            }
        }
        out
    }

    fn collect(&self, terms: Vec<(Form, TauGen)>) -> TauElement {
        let mut out = self.zero();
        for (f, g) in terms {
            match g {
                TauGen::Mark => out.theta += &f,
                TauGen::Eps(i) => out.eps[i] += &f,
                TauGen::One(i) => out.one[i] += &f,
            }
        }
        out
    }

    fn as_terms(&self, a: &TauElement) -> Vec<(Form, TauGen)> {
        self.terms(a)
    }

    pub fn bracket(&self, a: &TauElement, b: &TauElement) -> TauElement {
        self.collect(leibniz_bracket(self, &self.terms(a), &self.terms(b)))
    }

    /// `∂θ = dθ`, `∂(αε⊗b) = dα ε⊗b + (-1)^{|α|} α⊗b`, `∂(β⊗b) = dβ⊗b`.
    pub fn diff(&self, a: &TauElement) -> TauElement {
        TauElement {
            theta: a.theta.d(),
            eps: a.eps.iter().map(Form::d).collect(),
            one: a.one.iter().zip(&a.eps).map(|(b, al)| &b.d() + &al.parity_twist()).collect(),
        }
    }

    /// Anchor as an element of the derived tangent algebroid.
    pub fn anchor(&self, a: &TauElement) -> PrEvElement {
        let n = self.chart_dim();
        let raw: Vec<(SuperFunc, Vec<Poly>)> = (0..self.rank())
            .map(|i| (SuperFunc::new(a.one[i].clone(), a.eps[i].clone()), self.fields[i].components().to_vec()))
            .collect();
        prev_normalize(&raw, n, n).expect("fields live on the chart")
    }

    pub fn anchor_act(&self, a: &TauElement, form: &Form) -> Form {
        leibniz_act(self, &self.terms(a), form)
    }

    /// Rank over `O_X` of the degree `i` part of the normal form.
    pub fn degree_rank(&self, i: i64) -> usize {
        let n = self.chart_dim();
        let count = |p: i64| if p < 0 { 0 } else { masks_of_degree(n, p as usize).len() };
        count(i + self.k as i64) + self.rank() * (count(i + 1) + count(i))
    }

    /// Sample a homogeneous element of the given shape and a random
    /// admissible degree.
    pub fn sample<R: Rng>(&self, s: &Sampler, shape: TauShape, rng: &mut R) -> TauElement {
        let n = self.chart_dim();
        match shape {
            TauShape::Theta => {
                let lo = 0usize;
                let hi = n;
                let p = rng.gen_range(lo..=hi);
                TauElement::marked(s.form(p, rng), self.rank())
            }
            TauShape::Eps => {
                let (_, alpha) = s.any_form(rng);
                self.reduce_eps(&alpha, &s.courant(&self.q, rng))
            }
            TauShape::One => {
                let (_, beta) = s.any_form(rng);
                self.reduce_one(&beta, &s.courant(&self.q, rng))
            }
        }
    }

    /// Sample a homogeneous element of a prescribed degree; `None` when the
    /// shape has no elements in that degree.
    pub fn sample_in_degree<R: Rng>(
        &self,
        s: &Sampler,
        shape: TauShape,
        degree: i64,
        rng: &mut R,
    ) -> Option<TauElement> {
        let n = self.chart_dim() as i64;
        let p = match shape {
            TauShape::Theta => degree + self.k as i64,
            TauShape::Eps => degree + 1,
            TauShape::One => degree,
        };
        if p < 0 || p > n {
            return None;
        }
        let f = s.form(p as usize, rng);
        Some(match shape {
            TauShape::Theta => TauElement::marked(f, self.rank()),
            TauShape::Eps => self.reduce_eps(&f, &s.courant(&self.q, rng)),
            TauShape::One => self.reduce_one(&f, &s.courant(&self.q, rng)),
        })
    }

    /// The derived tangent algebroid, target of the anchor.
    pub fn tangent_sharp(&self) -> SharpAlgebroid {
        SharpAlgebroid::new(LieAlgebroidStructure::tangent(self.chart_dim()))
    }

    #[doc(hidden)]
    pub fn terms_of(&self, a: &TauElement) -> Vec<(Form, TauGen)> {
        self.as_terms(a)
    }
}

impl GeneratorAlgebra for TauAlgebroid {
    type Gen = TauGen;

    fn gen_degree(&self, g: &TauGen) -> i64 {
        match g {
            TauGen::Mark => -(self.k as i64),
            TauGen::Eps(_) => -1,
            TauGen::One(_) => 0,
        }
    }

    fn gen_bracket(&self, g1: &TauGen, g2: &TauGen) -> Vec<(Form, TauGen)> {
        match (*g1, *g2) {
            (TauGen::Mark, _) | (_, TauGen::Mark) => Vec::new(),
            (TauGen::Eps(i), TauGen::Eps(j)) => vec![(self.pair[i][j].clone(), TauGen::Mark)],
            (TauGen::One(i), TauGen::Eps(j)) => self.terms(&self.eps_bracket[i][j]),
            (TauGen::Eps(i), TauGen::One(j)) => {
                let mut t = self.terms(&self.eps_bracket[i][j]);
                t.push((-self.pair[i][j].d(), TauGen::Mark));
                t
            }
            (TauGen::One(i), TauGen::One(j)) => self.terms(&self.one_bracket[i][j]),
        }
    }

    fn gen_act(&self, g: &TauGen, form: &Form) -> Form {
        match *g {
            TauGen::Mark => Form::zero(form.chart_dim()),
            TauGen::Eps(i) => form.interior(&self.fields[i]),
            TauGen::One(i) => form.lie_derivative(&self.fields[i]),
        }
    }
}

impl MarkedAlgebroid for TauAlgebroid {
    type Elem = TauElement;

    fn chart_dim(&self) -> usize {
        self.q.chart_dim()
    }

    fn zero(&self) -> TauElement {
        TauAlgebroid::zero(self)
    }

    fn marking(&self) -> TauElement {
        TauAlgebroid::marking(self)
    }

    fn add(&self, a: &TauElement, b: &TauElement) -> TauElement {
        a + b
    }

    fn scale(&self, psi: &Form, a: &TauElement) -> TauElement {
        a.scale(psi)
    }

    fn bracket(&self, a: &TauElement, b: &TauElement) -> TauElement {
        TauAlgebroid::bracket(self, a, b)
    }

    fn differential(&self, a: &TauElement) -> TauElement {
        self.diff(a)
    }

    fn anchor_act(&self, a: &TauElement, form: &Form) -> Form {
        TauAlgebroid::anchor_act(self, a, form)
    }

    fn marking_coefficient(&self, a: &TauElement) -> Option<Form> {
        a.eps.iter().chain(&a.one).all(Form::is_zero).then(|| a.theta.clone())
    }

    fn degree(&self, a: &TauElement) -> Option<i64> {
        a.degree(self.k)
    }

    fn is_zero(&self, a: &TauElement) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::parse_form;

    fn std2() -> TauAlgebroid {
        TauAlgebroid::build(&CourantStructure::standard(2, 1).unwrap()).unwrap()
    }

    #[test]
    fn eps_brackets_give_the_pairing() {
        // [ε⊗(dx ⊕ 0), ε⊗(0 ⊕ ∂x)] = ⟨⟩ c = 1·c
        let tau = std2();
        let q = tau.courant();
        let a = tau.phi(&q.coanchor(&Form::dx(2, 0)).unwrap());
        let b = tau.phi(&q.basis(0));
        assert_eq!(tau.bracket(&a, &b), tau.marking());
    }

    #[test]
    fn coanchor_terms_are_absorbed() {
        let tau = std2();
        let q = tau.courant();
        let alpha = parse_form(2, "x*y dy").unwrap();
        let pa = q.coanchor(&alpha).unwrap();
        assert_eq!(tau.phi(&pa), TauElement::marked(alpha.clone(), 2));
        assert_eq!(tau.reduce_one(&Form::one(2), &pa), TauElement::marked(alpha.d(), 2));
    }

    #[test]
    fn functions_move_left() {
        // 1⊗(x b_1) = x⊗b_1 + dx ε⊗b_1
        let tau = std2();
        let q = tau.courant();
        let xb = q.basis(0).scale(&Poly::var(2, 0));
        let t = tau.reduce_one(&Form::one(2), &xb);
        assert_eq!(t.one[0], parse_form(2, "x").unwrap());
        assert_eq!(t.eps[0], Form::dx(2, 0));
    }

    #[test]
    fn diff_of_eps_generator() {
        let tau = std2();
        let e = tau.phi(&tau.courant().basis(1));
        let o = tau.reduce_one(&Form::one(2), &tau.courant().basis(1));
        assert_eq!(tau.diff(&e), o);
        assert!(tau.diff(&tau.marking()).is_zero());
    }

    #[test]
    fn low_degrees_are_forms_times_marking() {
        let tau = TauAlgebroid::build(&CourantStructure::standard(3, 2).unwrap()).unwrap();
        assert_eq!(tau.k(), 3);
        for i in -3..=-2 {
            assert_eq!(tau.degree_rank(i), masks_of_degree(3, (i + 3) as usize).len());
        }
    }
}
