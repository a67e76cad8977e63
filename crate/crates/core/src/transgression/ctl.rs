//! Courant-to-Lie maps: `O_X`-linear maps `φ: Q → L` of degree -1 into a
//! marked algebroid, compatible with anchors, coanchors, pairings and
//! brackets in the sense of the four squares
//!
//! ```text
//! σ(φq) = ι_{πq}       φ(π†α) = α c       [φq1, φq2] = ⟨q1,q2⟩ c       [δφq1, φq2] = φ{q1,q2}
//! ```

use super::TauAlgebroid;
use crate::check::{check_property, expect_eq, Counterexample, PropertyOutcome};
use crate::courant::{CourantElement, CourantMorphism, CourantStructure};
use crate::error::{Error, Result};
use crate::liealgebroid::MarkedAlgebroid;
use crate::sample::Sampler;
use crate::symcore::{masks_of_degree, Form};

/// A linear map `Q → L`, stored on the frame `dx_I ⊕ 0` and `0 ⊕ b_i`.
pub struct CtlMorphism<'a, T: MarkedAlgebroid> {
    pub source: CourantStructure,
    pub target: &'a T,
    /// Images of `π†dx_I` for the degree-`k` masks, in increasing mask order.
    pub coanchor_images: Vec<(u32, T::Elem)>,
    pub fiber_images: Vec<T::Elem>,
}

impl<T: MarkedAlgebroid> Clone for CtlMorphism<'_, T> {
    fn clone(&self) -> Self {
        CtlMorphism {
            source: self.source.clone(),
            target: self.target,
            coanchor_images: self.coanchor_images.clone(),
            fiber_images: self.fiber_images.clone(),
        }
    }
}

impl<'a, T: MarkedAlgebroid> CtlMorphism<'a, T> {
    /// A map sending `π†α` to `α c` and `b_i` to the given images.
    pub fn new(source: CourantStructure, target: &'a T, fiber_images: Vec<T::Elem>) -> Result<Self> {
        if source.chart_dim() != target.chart_dim() {
            return Err(Error::ChartMismatch { left: source.chart_dim(), right: target.chart_dim() });
        }
        if fiber_images.len() != source.fiber_rank() {
            return Err(Error::RankMismatch { expected: source.fiber_rank(), found: fiber_images.len() });
        }
        let n = source.chart_dim();
        let c = target.marking();
        let coanchor_images = masks_of_degree(n, source.dimension_k())
            .into_iter()
            .map(|m| (m, target.scale(&Form::basis(n, m), &c)))
            .collect();
        Ok(CtlMorphism { source, target, coanchor_images, fiber_images })
    }

    pub fn apply(&self, q: &CourantElement) -> T::Elem {
        let t = self.target;
        let mut out = t.zero();
        for (m, img) in &self.coanchor_images {
            let f = q.form.coefficient(*m);
            if !f.is_zero() {
                out = t.add(&out, &t.scale(&Form::function(f), img));
            }
        }
        for (f, img) in q.fiber.iter().zip(&self.fiber_images) {
            if !f.is_zero() {
                out = t.add(&out, &t.scale(&Form::function(f.clone()), img));
            }
        }
        out
    }

    /// The four squares plus the degree condition, on seeded samples.
    pub fn check(&self, seed: u64, samples: usize, max_degree: u32) -> Vec<PropertyOutcome> {
        let q = &self.source;
        let t = self.target;
        let s = Sampler::new(q.chart_dim(), max_degree);
        let c = t.marking();
        let show = |x: &CourantElement| x.to_string();
        vec![
            check_property("ctl-degree", "φq has degree -1", seed, samples, |rng| {
                let a = s.courant(q, rng);
                let img = self.apply(&a);
                let d = t.degree(&img);
                if t.is_zero(&img) || d == Some(-1) {
                    Ok(())
                } else {
                    Err(Box::new(Counterexample::new(vec![("q", show(&a))], format!("{d:?}"), "Some(-1)")))
                }
            }),
            check_property("ctl-anchor", "σ(φq) = ι_{πq}", seed, samples, |rng| {
                let a = s.courant(q, rng);
                let (_, w) = s.any_form(rng);
                expect_eq(&t.anchor_act(&self.apply(&a), &w), &w.interior(&q.anchor(&a)), || {
                    vec![("q", show(&a)), ("form", w.to_string())]
                })
            }),
            check_property("ctl-coanchor", "φ(π†α) = α c", seed, samples, |rng| {
                let alpha = s.form(q.dimension_k(), rng);
                let lhs = self.apply(&q.coanchor(&alpha).expect("degree k"));
                expect_eq(&lhs, &t.scale(&alpha, &c), || vec![("alpha", alpha.to_string())])
            }),
            check_property("ctl-pairing", "[φq1, φq2] = ⟨q1,q2⟩ c", seed, samples, |rng| {
                let (a, b) = (s.courant(q, rng), s.courant(q, rng));
                let lhs = t.bracket(&self.apply(&a), &self.apply(&b));
                expect_eq(&lhs, &t.scale(&q.pairing(&a, &b), &c), || vec![("q1", show(&a)), ("q2", show(&b))])
            }),
            check_property("ctl-bracket", "[δφq1, φq2] = φ{q1,q2}", seed, samples, |rng| {
                let (a, b) = (s.courant(q, rng), s.courant(q, rng));
                let lhs = t.bracket(&t.differential(&self.apply(&a)), &self.apply(&b));
                expect_eq(&lhs, &self.apply(&q.dorfman(&a, &b)), || vec![("q1", show(&a)), ("q2", show(&b))])
            }),
        ]
    }
}

/// The canonical map `q ↦ ε⊗q` into `τQ`.
pub fn initial_ctl(tau: &TauAlgebroid) -> CtlMorphism<'_, TauAlgebroid> {
    let q = tau.courant();
    let images = (0..q.fiber_rank()).map(|i| tau.phi(&q.basis(i))).collect();
    CtlMorphism::new(q.clone(), tau, images).expect("the canonical map has matching shapes")
}

/// Precompose with a Courant morphism `ψ: Q' → Q`.
pub fn ctl_pullback<'a, T: MarkedAlgebroid>(
    psi: &CourantMorphism,
    phi: &CtlMorphism<'a, T>,
) -> Result<CtlMorphism<'a, T>> {
    if psi.target.chart_dim() != phi.source.chart_dim() || psi.target.dimension_k() != phi.source.dimension_k() {
        return Err(Error::InvalidStructure("morphism target is not the source of the map".into()));
    }
    let images = psi.images.iter().map(|img| phi.apply(img)).collect();
    let mut out = CtlMorphism::new(psi.source.clone(), phi.target, images)?;
    out.coanchor_images = phi.coanchor_images.clone();
    Ok(out)
}

/// The extension `τQ → L` of a Courant-to-Lie map:
/// `θc + Σ α_i ε⊗b_i + Σ β_i⊗b_i ↦ θ c_L + Σ α_i φ(b_i) + Σ β_i δφ(b_i)`.
pub struct UniversalExtension<'a, 'b, T: MarkedAlgebroid> {
    pub tau: &'b TauAlgebroid,
    pub phi: CtlMorphism<'a, T>,
    lifted: Vec<T::Elem>,
}

/// Extend `φ` along the canonical map of `τQ`.
pub fn universal_extend<'a, 'b, T: MarkedAlgebroid>(
    tau: &'b TauAlgebroid,
    phi: CtlMorphism<'a, T>,
) -> Result<UniversalExtension<'a, 'b, T>> {
    let same = tau.courant().chart_dim() == phi.source.chart_dim()
        && tau.courant().dimension_k() == phi.source.dimension_k()
        && tau.rank() == phi.source.fiber_rank();
    if !same {
        return Err(Error::InvalidStructure("map does not start at the transgressed structure".into()));
    }
    let lifted = phi.fiber_images.iter().map(|x| phi.target.differential(x)).collect();
    Ok(UniversalExtension { tau, phi, lifted })
}

impl<T: MarkedAlgebroid> UniversalExtension<'_, '_, T> {
    pub fn apply(&self, a: &super::TauElement) -> T::Elem {
        let t = self.phi.target;
        let mut out = t.scale(&a.theta, &t.marking());
        for i in 0..a.rank() {
            out = t.add(&out, &t.scale(&a.eps[i], &self.phi.fiber_images[i]));
            out = t.add(&out, &t.scale(&a.one[i], &self.lifted[i]));
        }
        out
    }

    /// Morphism properties on seeded `τQ` samples of every shape.
    pub fn check(&self, seed: u64, samples: usize, max_degree: u32) -> Vec<PropertyOutcome> {
        let tau = self.tau;
        let t = self.phi.target;
        let s = tau.courant().sampler(max_degree);
        let pick = |rng: &mut crate::check::SampleRng| {
            let shape = super::TauShape::ALL[rand::Rng::gen_range(rng, 0..3)];
            tau.sample(&s, shape, rng)
        };
        vec![
            check_property("extension-bracket", "φ̃[a,b] = [φ̃a, φ̃b]", seed, samples, |rng| {
                let (a, b) = (pick(rng), pick(rng));
                let lhs = self.apply(&tau.bracket(&a, &b));
                expect_eq(&lhs, &t.bracket(&self.apply(&a), &self.apply(&b)), || {
                    vec![("a", a.to_string()), ("b", b.to_string())]
                })
            }),
            check_property("extension-differential", "φ̃∂a = δφ̃a", seed, samples, |rng| {
                let a = pick(rng);
                expect_eq(&self.apply(&tau.diff(&a)), &t.differential(&self.apply(&a)), || vec![("a", a.to_string())])
            }),
            check_property("extension-anchor", "σ_L(φ̃a) = σ(a)", seed, samples, |rng| {
                let a = pick(rng);
                let (_, w) = s.any_form(rng);
                expect_eq(&t.anchor_act(&self.apply(&a), &w), &tau.anchor_act(&a, &w), || {
                    vec![("a", a.to_string()), ("form", w.to_string())]
                })
            }),
            check_property("extension-marking", "φ̃c = c_L", seed, 1, |_| {
                expect_eq(&self.apply(&tau.marking()), &t.marking(), Vec::new)
            }),
            check_property("extension-restriction", "φ̃(ε⊗q) = φq", seed, samples, |rng| {
                let q = s.courant(tau.courant(), rng);
                expect_eq(&self.apply(&tau.phi(&q)), &self.phi.apply(&q), || vec![("q", q.to_string())])
            }),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::parse_form;

    #[test]
    fn initial_map_satisfies_the_squares() {
        let q = CourantStructure::twisted(2, 1, parse_form(2, "x^2*y dx^dy").unwrap()).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        for o in initial_ctl(&tau).check(11, 12, 2) {
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn wrong_image_breaks_a_square() {
        let q = CourantStructure::standard(2, 1).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        let mut images: Vec<_> = (0..2).map(|i| tau.phi(&q.basis(i))).collect();
        images.swap(0, 1);
        let phi = CtlMorphism::new(q, &tau, images).unwrap();
        assert!(phi.check(2, 12, 2).iter().any(|o| !o.passed));
    }
}
