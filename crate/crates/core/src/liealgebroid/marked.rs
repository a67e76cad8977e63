//! Marked DG Lie algebroids: a DG Lie algebroid over the shifted tangent
//! bundle with a distinguished central element `c` killed by the anchor.

use std::fmt::Display;

use super::sharp::SharpAlgebroid;
use crate::check::{check_property, expect_eq, Counterexample, PropertyOutcome, SampleRng};
use crate::oddpath::PrEvElement;
use crate::symcore::Form;

/// Operations a marked algebroid exposes to the generic checks.
pub trait MarkedAlgebroid: Sync {
    type Elem: Clone + PartialEq + Display + Send + Sync;

    fn chart_dim(&self) -> usize;
    fn zero(&self) -> Self::Elem;
    fn marking(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Left multiplication by a form.
    fn scale(&self, psi: &Form, a: &Self::Elem) -> Self::Elem;
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The differential `δ`.
    fn differential(&self, a: &Self::Elem) -> Self::Elem;
    /// Anchor of `a` acting on a form.
    fn anchor_act(&self, a: &Self::Elem, form: &Form) -> Form;
    /// `Some(θ)` when `a = θ·c`.
    fn marking_coefficient(&self, a: &Self::Elem) -> Option<Form>;
    /// Homogeneous degree, `None` for zero or mixed elements.
    fn degree(&self, a: &Self::Elem) -> Option<i64>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let m1 = Form::constant(self.chart_dim(), crate::symcore::rat(-1));
        self.add(a, &self.scale(&m1, b))
    }
}

/// Check that the marking is central, anchor-trivial and that `O·c` is an
/// ideal on which the anchor vanishes.
pub fn check_marked<M, E, F>(m: &M, seed: u64, samples: usize, sample_elem: E, sample_form: F) -> Vec<PropertyOutcome>
where
    M: MarkedAlgebroid,
    E: Fn(&mut SampleRng) -> M::Elem + Sync,
    F: Fn(&mut SampleRng) -> Form + Sync,
{
    let c = m.marking();
    let mut out = Vec::new();
    out.push(check_property("marking-central", "[c, a] = 0 = [a, c]", seed, samples, |rng| {
        let a = sample_elem(rng);
        expect_eq(&m.bracket(&c, &a), &m.zero(), || vec![("a", a.to_string()), ("side", "left".into())])?;
        expect_eq(&m.bracket(&a, &c), &m.zero(), || vec![("a", a.to_string()), ("side", "right".into())])
    }));
    out.push(check_property("marking-anchor", "σ(c) = 0", seed, samples, |rng| {
        let w = sample_form(rng);
        expect_eq(&m.anchor_act(&c, &w), &Form::zero(m.chart_dim()), || vec![("form", w.to_string())])
    }));
    out.push(check_property("marking-ideal", "[a, θc] and [θc, a] lie in O·c", seed, samples, |rng| {
        let a = sample_elem(rng);
        let th = sample_form(rng);
        let tc = m.scale(&th, &c);
        for (side, v) in [("left", m.bracket(&a, &tc)), ("right", m.bracket(&tc, &a))] {
            if m.marking_coefficient(&v).is_none() {
                return Err(Box::new(Counterexample::new(
                    vec![("a", a.to_string()), ("theta", th.to_string()), ("side", side.into())],
                    v,
                    "an element of O·c",
                )));
            }
        }
        Ok(())
    }));
    out.push(check_property("marking-ideal-anchor", "σ(θc) = 0", seed, samples, |rng| {
        let th = sample_form(rng);
        let w = sample_form(rng);
        let tc = m.scale(&th, &c);
        expect_eq(&m.anchor_act(&tc, &w), &Form::zero(m.chart_dim()), || {
            vec![("theta", th.to_string()), ("form", w.to_string())]
        })
    }));
    out
}

/// Which element of the derived algebroid serves as the marking.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkingSlot {
    Zero,
    /// `1 ⊗ a_i`.
    One(usize),
    /// `ε ⊗ a_i`.
    Eps(usize),
}

/// A derived algebroid with a chosen candidate marking, for negative controls.
pub struct MarkedSharp {
    pub sharp: SharpAlgebroid,
    pub slot: MarkingSlot,
}

impl MarkedAlgebroid for MarkedSharp {
    type Elem = PrEvElement;

    fn chart_dim(&self) -> usize {
        self.sharp.chart_dim()
    }

    fn zero(&self) -> PrEvElement {
        self.sharp.zero()
    }

    fn marking(&self) -> PrEvElement {
        let (n, r) = (self.sharp.chart_dim(), self.sharp.rank());
        match self.slot {
            MarkingSlot::Zero => self.zero(),
            MarkingSlot::One(i) => PrEvElement::one_term(n, r, i, Form::one(n)),
            MarkingSlot::Eps(i) => PrEvElement::eps_term(n, r, i, Form::one(n)),
        }
    }

    fn add(&self, a: &PrEvElement, b: &PrEvElement) -> PrEvElement {
        a + b
    }

    fn scale(&self, psi: &Form, a: &PrEvElement) -> PrEvElement {
        a.scale(psi)
    }

    fn bracket(&self, a: &PrEvElement, b: &PrEvElement) -> PrEvElement {
        self.sharp.bracket(a, b)
    }

    fn differential(&self, a: &PrEvElement) -> PrEvElement {
        a.diff()
    }

    fn anchor_act(&self, a: &PrEvElement, form: &Form) -> Form {
        self.sharp.anchor_act(a, form)
    }

    fn marking_coefficient(&self, a: &PrEvElement) -> Option<Form> {
        let n = self.chart_dim();
        let (slot_one, idx) = match self.slot {
            MarkingSlot::Zero => return a.is_zero().then(|| Form::zero(n)),
            MarkingSlot::One(i) => (true, i),
            MarkingSlot::Eps(i) => (false, i),
        };
        let others_zero = (0..a.rank())
            .all(|j| (a.one[j].is_zero() || (slot_one && j == idx)) && (a.eps[j].is_zero() || (!slot_one && j == idx)));
        others_zero.then(|| if slot_one { a.one[idx].clone() } else { a.eps[idx].clone() })
    }

    fn degree(&self, a: &PrEvElement) -> Option<i64> {
        a.degree()
    }
}
