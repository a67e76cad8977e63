//! The Courant algebroid recovered from a marked algebroid: degree -1
//! elements with
//!
//! ```text
//! π(a) = σ(a) on functions    π†α = α c    ⟨a, b⟩ c = [a, b]    {a, b} = [δa, b]
//! ```

use super::TauAlgebroid;
use crate::check::{check_property, expect_eq, PropertyOutcome};
use crate::error::{Error, Result};
use crate::liealgebroid::MarkedAlgebroid;
use crate::symcore::{Form, VectorField};

/// Derived Courant structure of dimension `k` on a marked algebroid whose
/// marking sits in degree `-(k + 1)`.
pub struct DerivedCourant<'a, T: MarkedAlgebroid> {
    pub target: &'a T,
    pub k: usize,
}

impl<'a, T: MarkedAlgebroid> DerivedCourant<'a, T> {
    pub fn new(target: &'a T) -> Result<Self> {
        match target.degree(&target.marking()) {
            Some(d) if d <= -2 => Ok(DerivedCourant { target, k: (-d - 1) as usize }),
            d => Err(Error::Hypothesis(format!("marking has degree {d:?}, need at most -2"))),
        }
    }

    fn require_degree(&self, a: &T::Elem) -> Result<()> {
        let t = self.target;
        if t.is_zero(a) || t.degree(a) == Some(-1) {
            Ok(())
        } else {
            Err(Error::DegreeMismatch { expected: 1, found: format!("{:?}", t.degree(a)) })
        }
    }

    pub fn anchor(&self, a: &T::Elem) -> Result<VectorField> {
        self.require_degree(a)?;
        let n = self.target.chart_dim();
        let mut comps = Vec::with_capacity(n);
        for j in 0..n {
            let v = self.target.anchor_act(a, &Form::dx(n, j));
            if !v.is_of_degree(0) && !v.is_zero() {
                return Err(Error::Hypothesis(format!("anchor of a degree -1 element sends dx_{j} to {v}")));
            }
            comps.push(v.function_part());
        }
        Ok(VectorField::new(comps))
    }

    pub fn coanchor(&self, alpha: &Form) -> T::Elem {
        self.target.scale(alpha, &self.target.marking())
    }

    pub fn pairing(&self, a: &T::Elem, b: &T::Elem) -> Result<Form> {
        self.require_degree(a)?;
        self.require_degree(b)?;
        let br = self.target.bracket(a, b);
        self.target
            .marking_coefficient(&br)
            .ok_or_else(|| Error::Hypothesis(format!("[a, b] = {br} is not a multiple of the marking")))
    }

    pub fn bracket(&self, a: &T::Elem, b: &T::Elem) -> Result<T::Elem> {
        self.require_degree(a)?;
        self.require_degree(b)?;
        Ok(self.target.bracket(&self.target.differential(a), b))
    }
}

/// `cour(τQ) ≅ Q` through `q ↦ ε⊗q`, on seeded samples.
pub fn check_round_trip(tau: &TauAlgebroid, seed: u64, samples: usize, max_degree: u32) -> Vec<PropertyOutcome> {
    let q = tau.courant();
    let s = q.sampler(max_degree);
    let cour = DerivedCourant::new(tau).expect("τQ marking has degree -(k+1)");
    let show = |x: &crate::courant::CourantElement| x.to_string();
    let mut out = vec![check_property("roundtrip-dimension", "cour(τQ) has the dimension of Q", seed, 1, |_| {
        expect_eq(&cour.k, &q.dimension_k(), Vec::new)
    })];
    out.push(check_property("roundtrip-element", "ε⊗q recovers q", seed, samples, |rng| {
        let a = s.courant(q, rng);
        let back = tau.to_courant(&tau.phi(&a)).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
        expect_eq(&back, &show(&a), || vec![("q", show(&a))])
    }));
    out.push(check_property("roundtrip-anchor", "π(ε⊗q) = πq", seed, samples, |rng| {
        let a = s.courant(q, rng);
        let lhs = cour.anchor(&tau.phi(&a)).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
        expect_eq(&lhs, &q.anchor(&a).to_string(), || vec![("q", show(&a))])
    }));
    out.push(check_property("roundtrip-coanchor", "π†α = α c", seed, samples, |rng| {
        let alpha = s.form(q.dimension_k(), rng);
        let lhs = tau.to_courant(&cour.coanchor(&alpha)).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
        expect_eq(&lhs, &show(&q.coanchor(&alpha).expect("degree k")), || vec![("alpha", alpha.to_string())])
    }));
    out.push(check_property("roundtrip-pairing", "⟨ε⊗q1, ε⊗q2⟩ = ⟨q1,q2⟩", seed, samples, |rng| {
        let (a, b) = (s.courant(q, rng), s.courant(q, rng));
        let lhs = cour.pairing(&tau.phi(&a), &tau.phi(&b)).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string());
        expect_eq(&lhs, &q.pairing(&a, &b).to_string(), || vec![("q1", show(&a)), ("q2", show(&b))])
    }));
    out.push(check_property("roundtrip-bracket", "{ε⊗q1, ε⊗q2} = ε⊗{q1,q2}", seed, samples, |rng| {
        let (a, b) = (s.courant(q, rng), s.courant(q, rng));
        let lhs = cour
            .bracket(&tau.phi(&a), &tau.phi(&b))
            .and_then(|x| tau.to_courant(&x))
            .map(|x| x.to_string())
            .unwrap_or_else(|e| e.to_string());
        expect_eq(&lhs, &show(&q.dorfman(&a, &b)), || vec![("q1", show(&a)), ("q2", show(&b))])
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::courant::{CourantStructure, LieAlgebra};
    use crate::symcore::parse_form;

    #[test]
    fn exact_round_trip() {
        let q = CourantStructure::twisted(3, 1, parse_form(3, "x*z dy^dz").unwrap()).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        for o in check_round_trip(&tau, 4, 10, 2) {
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn quadratic_round_trip() {
        let g = LieAlgebra::so3();
        let q = CourantStructure::quadratic(g.clone(), g.killing_form()).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        for o in check_round_trip(&tau, 4, 10, 2) {
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn model_marking_gives_dimension_one() {
        let g = LieAlgebra::so3();
        let m = super::super::QuadraticModel::new(g.clone(), g.killing_form()).unwrap();
        assert_eq!(DerivedCourant::new(&m).unwrap().k, 1);
    }
}
