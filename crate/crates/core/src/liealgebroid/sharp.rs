//! The derived Lie algebroid `A♯ = pr_* ev^* A` over the shifted tangent bundle.
//!
//! Generators are `1⊗a` in degree 0 and `ε⊗a` in degree -1, with
//! `[1⊗a, 1⊗b] = 1⊗[a,b]`, `[1⊗a, ε⊗b] = [ε⊗a, 1⊗b] = ε⊗[a,b]`,
//! `[ε⊗a, ε⊗b] = 0`, and anchors `L_{σa}` and `ι_{σa}`.

use super::{LieAlgebroidStructure, Section};
use crate::leibniz::{leibniz_act, leibniz_bracket, GeneratorAlgebra};
use crate::oddpath::{prev_normalize, PrEvElement, SuperFunc};
use crate::symcore::{Form, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SharpSlot {
    /// `1 ⊗ a`, degree 0.
    One,
    /// `ε ⊗ a`, degree -1.
    Eps,
}

/// Unreduced term `ω ⊗ slot ⊗ a` with an arbitrary section `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct RawSharpTerm {
    pub coeff: Form,
    pub slot: SharpSlot,
    pub section: Section,
}

impl RawSharpTerm {
    pub fn new(coeff: Form, slot: SharpSlot, section: Section) -> Self {
        RawSharpTerm { coeff, slot, section }
    }
}

#[derive(Clone, Debug)]
pub struct SharpAlgebroid {
    base: LieAlgebroidStructure,
}

type Gen = (SharpSlot, Section);

impl GeneratorAlgebra for SharpAlgebroid {
    type Gen = Gen;

    fn gen_degree(&self, g: &Gen) -> i64 {
        match g.0 {
            SharpSlot::One => 0,
            SharpSlot::Eps => -1,
        }
    }

    fn gen_bracket(&self, g1: &Gen, g2: &Gen) -> Vec<(Form, Gen)> {
        let slot = match (g1.0, g2.0) {
            (SharpSlot::One, SharpSlot::One) => SharpSlot::One,
            (SharpSlot::Eps, SharpSlot::Eps) => return Vec::new(),
            _ => SharpSlot::Eps,
        };
        vec![(Form::one(self.base.chart_dim()), (slot, self.base.bracket(&g1.1, &g2.1)))]
    }

    fn gen_act(&self, g: &Gen, form: &Form) -> Form {
        let v = self.base.anchor(&g.1);
        match g.0 {
            SharpSlot::One => form.lie_derivative(&v),
            SharpSlot::Eps => form.interior(&v),
        }
    }
}

impl SharpAlgebroid {
    pub fn new(base: LieAlgebroidStructure) -> Self {
        SharpAlgebroid { base }
    }

    pub fn base(&self) -> &LieAlgebroidStructure {
        &self.base
    }

    pub fn chart_dim(&self) -> usize {
        self.base.chart_dim()
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn zero(&self) -> PrEvElement {
        PrEvElement::zero(self.chart_dim(), self.rank())
    }

    fn terms(&self, a: &PrEvElement) -> Vec<(Form, Gen)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            if !a.one[i].is_zero() {
                out.push((a.one[i].clone(), (SharpSlot::One, self.base.unit(i))));
            }
            if !a.eps[i].is_zero() {
                out.push((a.eps[i].clone(), (SharpSlot::Eps, self.base.unit(i))));
            }
        }
        out
    }

    fn raw_terms(raw: &[RawSharpTerm]) -> Vec<(Form, Gen)> {
        raw.iter().map(|t| (t.coeff.clone(), (t.slot, t.section.clone()))).collect()
    }

    fn normalize_terms(&self, terms: &[(Form, Gen)], rank: usize) -> PrEvElement {
        let raw: Vec<(SuperFunc, Vec<Poly>)> = terms
            .iter()
            .map(|(f, (slot, s))| {
                let sf = match slot {
                    SharpSlot::One => SuperFunc::even(f.clone()),
                    SharpSlot::Eps => SuperFunc::odd(f.clone()),
                };
                (sf, s.clone())
            })
            .collect();
        prev_normalize(&raw, self.chart_dim(), rank).expect("sections have the frame rank")
    }

    /// Normal form of an unreduced sum.
    pub fn normalize(&self, raw: &[RawSharpTerm]) -> PrEvElement {
        self.normalize_terms(&Self::raw_terms(raw), self.rank())
    }

    /// Bracket of normal forms.
    pub fn bracket(&self, a: &PrEvElement, b: &PrEvElement) -> PrEvElement {
        let out = leibniz_bracket(self, &self.terms(a), &self.terms(b));
        self.normalize_terms(&out, self.rank())
    }

    /// Bracket computed directly on unreduced representatives.
    pub fn raw_bracket(&self, a: &[RawSharpTerm], b: &[RawSharpTerm]) -> PrEvElement {
        let out = leibniz_bracket(self, &Self::raw_terms(a), &Self::raw_terms(b));
        self.normalize_terms(&out, self.rank())
    }

    /// Anchor as an element of the derived tangent algebroid.
    pub fn anchor(&self, a: &PrEvElement) -> PrEvElement {
        let n = self.chart_dim();
        let terms: Vec<(Form, Gen)> = self
            .terms(a)
            .into_iter()
            .map(|(f, (slot, s))| (f, (slot, self.base.anchor(&s).components().to_vec())))
            .collect();
        self.normalize_terms(&terms, n)
    }

    /// Anchor acting on a form.
    pub fn anchor_act(&self, a: &PrEvElement, form: &Form) -> Form {
        leibniz_act(self, &self.terms(a), form)
    }

    /// Anchor of an unreduced sum acting on a form.
    pub fn raw_anchor_act(&self, raw: &[RawSharpTerm], form: &Form) -> Form {
        leibniz_act(self, &Self::raw_terms(raw), form)
    }
}

/// Action of an element of the derived tangent algebroid on a form.
pub fn tangent_sharp_act(a: &PrEvElement, form: &Form) -> Form {
    SharpAlgebroid::new(LieAlgebroidStructure::tangent(form.chart_dim())).anchor_act(a, form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{parse_form, VectorField};

    #[test]
    fn degree_minus_one_generators_act_by_contraction() {
        let t = SharpAlgebroid::new(LieAlgebroidStructure::tangent(2));
        let e = PrEvElement::eps_term(2, 2, 1, Form::one(2));
        let w = parse_form(2, "x dx^dy").unwrap();
        assert_eq!(t.anchor_act(&e, &w), w.interior(&VectorField::coordinate(2, 1)));
    }

    #[test]
    fn eps_generators_commute() {
        let t = SharpAlgebroid::new(LieAlgebroidStructure::rotation_action());
        let a = PrEvElement::eps_term(3, 3, 0, Form::one(3));
        let b = PrEvElement::eps_term(3, 3, 1, Form::one(3));
        assert!(t.bracket(&a, &b).is_zero());
    }

    #[test]
    fn mixed_generators_bracket_into_eps() {
        let t = SharpAlgebroid::new(LieAlgebroidStructure::polynomial_frame());
        let o = PrEvElement::one_term(3, 3, 0, Form::one(3));
        let e = PrEvElement::eps_term(3, 3, 1, Form::one(3));
        // [1⊗a1, ε⊗a2] = ε⊗2x a3 = 2x ε⊗a3
        let expected = PrEvElement::eps_term(3, 3, 2, parse_form(3, "2*x").unwrap());
        assert_eq!(t.bracket(&o, &e), expected);
    }
}
