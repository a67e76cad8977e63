//! Morphisms of Courant algebroids: `O_X`-linear maps of Leibniz algebras
//! compatible with anchors and coanchors.

use super::{CourantElement, CourantStructure};
use crate::check::{check_property, expect_eq, PropertyOutcome};
use crate::error::{Error, Result};
use crate::symcore::{Form, VectorField};

/// Stored by the images of the frame `b_i`; the coanchor summand maps by
/// `π^†_1 α ↦ π^†_2 α`.
#[derive(Clone, Debug)]
pub struct CourantMorphism {
    pub source: CourantStructure,
    pub target: CourantStructure,
    pub images: Vec<CourantElement>,
}

impl CourantMorphism {
    /// Build and check anchor compatibility on the frame.
    pub fn new(source: CourantStructure, target: CourantStructure, images: Vec<CourantElement>) -> Result<Self> {
        if source.chart_dim() != target.chart_dim() {
            return Err(Error::ChartMismatch { left: source.chart_dim(), right: target.chart_dim() });
        }
        if source.dimension_k() != target.dimension_k() {
            return Err(Error::InvalidStructure("source and target have different dimensions".into()));
        }
        if images.len() != source.fiber_rank() {
            return Err(Error::RankMismatch { expected: source.fiber_rank(), found: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if img.fiber.len() != target.fiber_rank() || !img.form.is_of_degree(target.dimension_k()) {
                return Err(Error::InvalidStructure(format!("image {i} is not an element of the target")));
            }
            if target.anchor(img) != source.anchor(&source.basis(i)) {
                return Err(Error::InvalidStructure(format!(
                    "morphism does not commute with anchors on frame element {i}"
                )));
            }
        }
        Ok(CourantMorphism { source, target, images })
    }

    pub fn identity(q: &CourantStructure) -> Self {
        let images = (0..q.fiber_rank()).map(|i| q.basis(i)).collect();
        CourantMorphism::new(q.clone(), q.clone(), images).expect("identity is a morphism")
    }

    /// The re-splitting `α ⊕ ξ ↦ (α + ι_ξ ω) ⊕ ξ` from an exact structure
    /// with twist `H` onto the one with twist `H - dω`.
    pub fn b_transform(source: &CourantStructure, omega: &Form) -> Result<Self> {
        let h = source.twist().ok_or_else(|| Error::Unsupported("re-splitting needs an exact structure".into()))?;
        let (n, k) = (source.chart_dim(), source.dimension_k());
        if !omega.is_of_degree(k + 1) {
            return Err(Error::DegreeMismatch { expected: k + 1, found: format!("{:?}", omega.degrees()) });
        }
        let target = CourantStructure::twisted_closed(n, k, h - &omega.d())?;
        let images = (0..n)
            .map(|i| {
                let xi = VectorField::coordinate(n, i);
                CourantElement::new(omega.interior(&xi), xi.components().to_vec())
            })
            .collect();
        CourantMorphism::new(source.clone(), target, images)
    }

    pub fn apply(&self, q: &CourantElement) -> CourantElement {
        let mut out = self.target.coanchor(&q.form).expect("source element has degree k");
        for (f, img) in q.fiber.iter().zip(&self.images) {
            if !f.is_zero() {
                out = &out + &img.scale(f);
            }
        }
        out
    }

    /// Sampled checks of bracket and pairing preservation.
    pub fn check(&self, seed: u64, samples: usize, max_degree: u32) -> Vec<PropertyOutcome> {
        let s = self.source.sampler(max_degree);
        let (q1s, q2s) = (&self.source, &self.target);
        vec![
            check_property("morphism-bracket", "ψ{q1,q2} = {ψq1,ψq2}", seed, samples, |rng| {
                let (a, b) = (s.courant(q1s, rng), s.courant(q1s, rng));
                let lhs = self.apply(&q1s.dorfman(&a, &b));
                let rhs = q2s.dorfman(&self.apply(&a), &self.apply(&b));
                expect_eq(&lhs, &rhs, || vec![("q1", a.to_string()), ("q2", b.to_string())])
            }),
            check_property("morphism-pairing", "⟨ψq1,ψq2⟩ = ⟨q1,q2⟩", seed, samples, |rng| {
                let (a, b) = (s.courant(q1s, rng), s.courant(q1s, rng));
                let lhs = q2s.pairing(&self.apply(&a), &self.apply(&b));
                expect_eq(&lhs, &q1s.pairing(&a, &b), || vec![("q1", a.to_string()), ("q2", b.to_string())])
            }),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::parse_form;

    #[test]
    fn re_splitting_preserves_structure() {
        let q = CourantStructure::twisted(3, 1, parse_form(3, "x*y dy^dz").unwrap()).unwrap();
        let psi = CourantMorphism::b_transform(&q, &parse_form(3, "z dx^dy + x^2 dy^dz").unwrap()).unwrap();
        for o in psi.check(3, 10, 2) {
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn anchor_breaking_map_is_rejected() {
        let q = CourantStructure::standard(2, 1).unwrap();
        let images = vec![q.basis(1), q.basis(0)];
        assert!(CourantMorphism::new(q.clone(), q, images).is_err());
    }
}
