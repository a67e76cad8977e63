//! Higher Courant algebroids on a chart: a module `Q` with a Leibniz
//! bracket, an anchor to vector fields, a coanchor from `k`-forms and a
//! pairing with values in `(k-1)`-forms.
//!
//! Every family is stored in split form `Q = Ω^k ⊕ F` with `F` free. The
//! coanchor is the inclusion of the first summand.

pub mod connection;
pub mod lie_algebra;
pub mod morphism;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::check::{check_property, expect_eq, PropertyOutcome, SampleRng};
use crate::error::{Error, Result};
use crate::liealgebroid::LieAlgebroidStructure;
use crate::sample::Sampler;
use crate::symcore::{Form, Poly, Rational, VectorField, MAX_VARS};

pub use connection::{curvature, isotropic_from_splitting, torsor_act, Connection};
pub use lie_algebra::LieAlgebra;
pub use morphism::CourantMorphism;

/// Structure-specific data.
#[derive(Clone, Debug, PartialEq)]
pub enum CourantFamily {
    /// `Ω^k ⊕ T_X` with the Dorfman bracket twisted by a closed form `H`
    /// (zero for the untwisted structure).
    Exact { twist: Form, potential: Option<Form> },
    /// A Lie algebra with an invariant pairing over a point.
    Quadratic { algebra: LieAlgebra, gram: Vec<Vec<Rational>> },
    /// `Ω^k` with identity coanchor and everything else zero.
    Commutative,
}

/// Element `α ⊕ Σ f_i b_i` of the split module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CourantElement {
    pub form: Form,
    pub fiber: Vec<Poly>,
}

impl CourantElement {
    pub fn new(form: Form, fiber: Vec<Poly>) -> Self {
        CourantElement { form, fiber }
    }

    /// Multiply by a function.
    pub fn scale(&self, f: &Poly) -> Self {
        CourantElement { form: self.form.mul_poly(f), fiber: self.fiber.iter().map(|g| g * f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero() && self.fiber.iter().all(Poly::is_zero)
    }
}

impl Add for &CourantElement {
    type Output = CourantElement;
    fn add(self, rhs: &CourantElement) -> CourantElement {
        CourantElement {
            form: &self.form + &rhs.form,
            fiber: self.fiber.iter().zip(&rhs.fiber).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CourantElement {
    type Output = CourantElement;
    fn sub(self, rhs: &CourantElement) -> CourantElement {
        self + &(-rhs)
    }
}

impl Neg for &CourantElement {
    type Output = CourantElement;
    fn neg(self) -> CourantElement {
        CourantElement { form: -&self.form, fiber: self.fiber.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for CourantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fib: Vec<String> = self.fiber.iter().map(|p| p.to_string()).collect();
        write!(f, "{} ⊕ ({})", self.form, fib.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CourantStructure {
    n: usize,
    k: usize,
    family: CourantFamily,
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if n > MAX_VARS {
        return Err(Error::Unsupported(format!("chart dimension {n} exceeds {MAX_VARS}")));
    }
    if k == 0 {
        return Err(Error::Unsupported("Courant dimension must be at least 1".into()));
    }
    Ok(())
}

impl CourantStructure {
    /// `Ω^k ⊕ T_X` with the untwisted bracket.
    pub fn standard(n: usize, k: usize) -> Result<Self> {
        check_dims(n, k)?;
        Ok(CourantStructure { n, k, family: CourantFamily::Exact { twist: Form::zero(n), potential: None } })
    }

    /// Twist by `H = dB` for a potential `B` of degree `k + 1`.
    pub fn twisted(n: usize, k: usize, potential: Form) -> Result<Self> {
        check_dims(n, k)?;
        if potential.chart_dim() != n {
            return Err(Error::ChartMismatch { left: n, right: potential.chart_dim() });
        }
        if !potential.is_of_degree(k + 1) {
            return Err(Error::DegreeMismatch { expected: k + 1, found: format!("{:?}", potential.degrees()) });
        }
        let twist = potential.d();
        Ok(CourantStructure { n, k, family: CourantFamily::Exact { twist, potential: Some(potential) } })
    }

    /// Twist by a closed form `H` of degree `k + 2`.
    pub fn twisted_closed(n: usize, k: usize, h: Form) -> Result<Self> {
        let q = Self::twisted_unchecked(n, k, h)?;
        if !q.twist().is_some_and(|h| h.d().is_zero()) {
            return Err(Error::InvalidStructure("twisting form is not closed".into()));
        }
        Ok(q)
    }

    /// Twist by any form of degree `k + 2`; used for negative controls.
    pub fn twisted_unchecked(n: usize, k: usize, h: Form) -> Result<Self> {
        check_dims(n, k)?;
        if h.chart_dim() != n {
            return Err(Error::ChartMismatch { left: n, right: h.chart_dim() });
        }
        if !h.is_of_degree(k + 2) {
            return Err(Error::DegreeMismatch { expected: k + 2, found: format!("{:?}", h.degrees()) });
        }
        Ok(CourantStructure { n, k, family: CourantFamily::Exact { twist: h, potential: None } })
    }

    /// A quadratic Lie algebra viewed as a one-dimensional Courant
    /// algebroid over a point.
    pub fn quadratic(algebra: LieAlgebra, gram: Vec<Vec<Rational>>) -> Result<Self> {
        algebra.check_invariant_form(&gram)?;
        Ok(CourantStructure { n: 0, k: 1, family: CourantFamily::Quadratic { algebra, gram } })
    }

    /// `Ω^k` with trivial bracket, anchor and pairing.
    pub fn commutative(n: usize, k: usize) -> Result<Self> {
        check_dims(n, k)?;
        Ok(CourantStructure { n, k, family: CourantFamily::Commutative })
    }

    pub fn chart_dim(&self) -> usize {
        self.n
    }

    /// The integer `k`: the coanchor starts at `Ω^k`.
    pub fn dimension_k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> &CourantFamily {
        &self.family
    }

    pub fn family_name(&self) -> &'static str {
        match &self.family {
            CourantFamily::Exact { twist, .. } if twist.is_zero() => "standard",
            CourantFamily::Exact { .. } => "twisted",
            CourantFamily::Quadratic { .. } => "quadratic",
            CourantFamily::Commutative => "commutative",
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.family, CourantFamily::Exact { .. })
    }

    /// The twisting form of an exact structure.
    pub fn twist(&self) -> Option<&Form> {
        match &self.family {
            CourantFamily::Exact { twist, .. } => Some(twist),
            _ => None,
        }
    }

    /// The chosen splitting `Q ≅ Ω^k ⊕ F` and frame of `F`, as text.
    pub fn splitting(&self) -> String {
        let k = self.k;
        match &self.family {
            CourantFamily::Exact { .. } => format!("Ω^{k} ⊕ T_X, frame ∂_1..∂_{}", self.n),
            CourantFamily::Quadratic { algebra, .. } => format!("g, frame e_1..e_{}", algebra.dim()),
            CourantFamily::Commutative => format!("Ω^{k}, no complement"),
        }
    }

    /// Rank of the free complement `F`.
    pub fn fiber_rank(&self) -> usize {
        match &self.family {
            CourantFamily::Exact { .. } => self.n,
            CourantFamily::Quadratic { algebra, .. } => algebra.dim(),
            CourantFamily::Commutative => 0,
        }
    }

    pub fn zero(&self) -> CourantElement {
        CourantElement::new(Form::zero(self.n), vec![Poly::zero(self.n); self.fiber_rank()])
    }

    /// The frame element `0 ⊕ b_i`.
    pub fn basis(&self, i: usize) -> CourantElement {
        let mut z = self.zero();
        z.fiber[i] = Poly::one(self.n);
        z
    }

    /// `0 ⊕ ξ` in an exact structure.
    pub fn lift_field(&self, xi: &VectorField) -> CourantElement {
        assert!(self.is_exact(), "vector field lifts need an exact structure");
        CourantElement::new(Form::zero(self.n), xi.components().to_vec())
    }

    fn check_element(&self, q: &CourantElement) -> Result<()> {
        if q.form.chart_dim() != self.n {
            return Err(Error::ChartMismatch { left: self.n, right: q.form.chart_dim() });
        }
        if q.fiber.len() != self.fiber_rank() {
            return Err(Error::RankMismatch { expected: self.fiber_rank(), found: q.fiber.len() });
        }
        if !q.form.is_of_degree(self.k) {
            return Err(Error::DegreeMismatch { expected: self.k, found: format!("{:?}", q.form.degrees()) });
        }
        Ok(())
    }

    /// Validate an element built by hand.
    pub fn element(&self, form: Form, fiber: Vec<Poly>) -> Result<CourantElement> {
        let q = CourantElement::new(form, fiber);
        self.check_element(&q)?;
        Ok(q)
    }

    /// `π(q)`.
    pub fn anchor(&self, q: &CourantElement) -> VectorField {
        match &self.family {
            CourantFamily::Exact { .. } => VectorField::new(q.fiber.clone()),
            _ => VectorField::zero(self.n),
        }
    }

    /// `π^†(α)` for a `k`-form `α`.
    pub fn coanchor(&self, alpha: &Form) -> Result<CourantElement> {
        if alpha.chart_dim() != self.n {
            return Err(Error::ChartMismatch { left: self.n, right: alpha.chart_dim() });
        }
        if !alpha.is_of_degree(self.k) {
            return Err(Error::DegreeMismatch { expected: self.k, found: format!("{:?}", alpha.degrees()) });
        }
        Ok(match &self.family {
            CourantFamily::Quadratic { .. } => self.zero(),
            _ => CourantElement::new(alpha.clone(), vec![Poly::zero(self.n); self.fiber_rank()]),
        })
    }

    /// `⟨q1, q2⟩`, a `(k-1)`-form.
    pub fn pairing(&self, q1: &CourantElement, q2: &CourantElement) -> Form {
        match &self.family {
            CourantFamily::Exact { .. } => &q2.form.interior(&self.anchor(q1)) + &q1.form.interior(&self.anchor(q2)),
            CourantFamily::Quadratic { gram, .. } => {
                let mut s = Rational::zero();
                for (i, a) in q1.fiber.iter().enumerate() {
                    for (j, b) in q2.fiber.iter().enumerate() {
                        s += a.constant_term() * &gram[i][j] * b.constant_term();
                    }
                }
                Form::constant(0, s)
            }
            CourantFamily::Commutative => Form::zero(self.n),
        }
    }

    /// The Leibniz bracket `{q1, q2}`.
    pub fn dorfman(&self, q1: &CourantElement, q2: &CourantElement) -> CourantElement {
        match &self.family {
            CourantFamily::Exact { twist, .. } => {
                let (xi, eta) = (self.anchor(q1), self.anchor(q2));
                let mut form = &q2.form.lie_derivative(&xi) - &q1.form.d().interior(&eta);
                if !twist.is_zero() {
                    form += &twist.interior_many(&[&xi, &eta]);
                }
                CourantElement::new(form, xi.bracket(&eta).components().to_vec())
            }
            CourantFamily::Quadratic { algebra, .. } => {
                let u: Vec<Rational> = q1.fiber.iter().map(Poly::constant_term).collect();
                let v: Vec<Rational> = q2.fiber.iter().map(Poly::constant_term).collect();
                let w = algebra.bracket(&u, &v);
                CourantElement::new(Form::zero(0), w.into_iter().map(|c| Poly::constant(0, c)).collect())
            }
            CourantFamily::Commutative => self.zero(),
        }
    }

    /// The Lie algebroid `Q / π^†(Ω^k)` in the chosen frame.
    pub fn associated_lie(&self) -> LieAlgebroidStructure {
        let r = self.fiber_rank();
        let n = self.n;
        let anchor: Vec<VectorField> = (0..r).map(|i| self.anchor(&self.basis(i))).collect();
        let structure: Vec<Vec<Vec<Poly>>> =
            (0..r).map(|i| (0..r).map(|j| self.dorfman(&self.basis(i), &self.basis(j)).fiber).collect()).collect();
        LieAlgebroidStructure::new(self.family_name(), n, anchor, structure)
            .expect("the quotient bracket of a Courant algebroid is skew on the frame")
    }

    /// Sample generator matching this structure's chart.
    pub fn sampler(&self, max_degree: u32) -> Sampler {
        Sampler::new(self.n, max_degree)
    }

    /// Evaluate the defining identities, plus the Leibniz-algebra Jacobi
    /// identity and the anchor morphism property, on seeded samples.
    pub fn verify_axioms(&self, seed: u64, samples: usize, max_degree: u32) -> Vec<PropertyOutcome> {
        let s = self.sampler(max_degree);
        let n = self.n;
        let k = self.k;
        let q3 = |rng: &mut SampleRng| (s.courant(self, rng), s.courant(self, rng), s.courant(self, rng));
        let show = |q: &CourantElement| q.to_string();
        let mut out = Vec::new();

        out.push(check_property("complex", "π ∘ π† = 0", seed, samples, |rng| {
            let a = s.form(k, rng);
            let v = self.anchor(&self.coanchor(&a).expect("sampled k-form"));
            expect_eq(&v, &VectorField::zero(n), || vec![("alpha", a.to_string())])
        }));
        out.push(check_property("leibniz", "{q1, f q2} = f {q1, q2} + π(q1)(f) q2", seed, samples, |rng| {
            let (q1, q2, _) = q3(rng);
            let f = s.poly(rng);
            let lhs = self.dorfman(&q1, &q2.scale(&f));
            let rhs = &self.dorfman(&q1, &q2).scale(&f) + &q2.scale(&self.anchor(&q1).apply(&f));
            expect_eq(&lhs, &rhs, || vec![("q1", show(&q1)), ("q2", show(&q2)), ("f", f.to_string())])
        }));
        out.push(check_property(
            "ip-invariance",
            "⟨{q,q1},q2⟩ + ⟨q1,{q,q2}⟩ = L_π(q) ⟨q1,q2⟩",
            seed,
            samples,
            |rng| {
                let (q, q1, q2) = q3(rng);
                let lhs = &self.pairing(&self.dorfman(&q, &q1), &q2) + &self.pairing(&q1, &self.dorfman(&q, &q2));
                let rhs = self.pairing(&q1, &q2).lie_derivative(&self.anchor(&q));
                expect_eq(&lhs, &rhs, || vec![("q", show(&q)), ("q1", show(&q1)), ("q2", show(&q2))])
            },
        ));
        out.push(check_property(
            "ip-jacobi",
            "ι_π(q)⟨q1,q2⟩ + ι_π(q1)⟨q,q2⟩ + ι_π(q2)⟨q,q1⟩ = 0",
            seed,
            samples,
            |rng| {
                let (q, q1, q2) = q3(rng);
                let lhs = &(&self.pairing(&q1, &q2).interior(&self.anchor(&q))
                    + &self.pairing(&q, &q2).interior(&self.anchor(&q1)))
                    + &self.pairing(&q, &q1).interior(&self.anchor(&q2));
                expect_eq(&lhs, &Form::zero(n), || vec![("q", show(&q)), ("q1", show(&q1)), ("q2", show(&q2))])
            },
        ));
        out.push(check_property("forms-left-ideal", "{q, π†α} = π†(L_π(q) α)", seed, samples, |rng| {
            let q = s.courant(self, rng);
            let a = s.form(k, rng);
            let lhs = self.dorfman(&q, &self.coanchor(&a).expect("k-form"));
            let rhs = self.coanchor(&a.lie_derivative(&self.anchor(&q))).expect("k-form");
            expect_eq(&lhs, &rhs, || vec![("q", show(&q)), ("alpha", a.to_string())])
        }));
        out.push(check_property("adjunction", "⟨q, π†α⟩ = ι_π(q) α", seed, samples, |rng| {
            let q = s.courant(self, rng);
            let a = s.form(k, rng);
            let lhs = self.pairing(&q, &self.coanchor(&a).expect("k-form"));
            let rhs = a.interior(&self.anchor(&q));
            expect_eq(&lhs, &rhs, || vec![("q", show(&q)), ("alpha", a.to_string())])
        }));
        out.push(check_property("symmetrizer", "{q1,q2} + {q2,q1} = π†(d⟨q1,q2⟩)", seed, samples, |rng| {
            let (q1, q2, _) = q3(rng);
            let lhs = &self.dorfman(&q1, &q2) + &self.dorfman(&q2, &q1);
            let rhs = self.coanchor(&self.pairing(&q1, &q2).d()).expect("k-form");
            expect_eq(&lhs, &rhs, || vec![("q1", show(&q1)), ("q2", show(&q2))])
        }));
        out.push(check_property("leibniz-algebra", "{q,{q1,q2}} = {{q,q1},q2} + {q1,{q,q2}}", seed, samples, |rng| {
            let (q, q1, q2) = q3(rng);
            let lhs = self.dorfman(&q, &self.dorfman(&q1, &q2));
            let rhs = &self.dorfman(&self.dorfman(&q, &q1), &q2) + &self.dorfman(&q1, &self.dorfman(&q, &q2));
            expect_eq(&lhs, &rhs, || vec![("q", show(&q)), ("q1", show(&q1)), ("q2", show(&q2))])
        }));
        out.push(check_property("anchor-morphism", "π{q1,q2} = [π q1, π q2]", seed, samples, |rng| {
            let (q1, q2, _) = q3(rng);
            let lhs = self.anchor(&self.dorfman(&q1, &q2));
            let rhs = self.anchor(&q1).bracket(&self.anchor(&q2));
            expect_eq(&lhs, &rhs, || vec![("q1", show(&q1)), ("q2", show(&q2))])
        }));
        out.push(check_property("pairing-symmetric", "⟨q1,q2⟩ = ⟨q2,q1⟩", seed, samples, |rng| {
            let (q1, q2, _) = q3(rng);
            expect_eq(&self.pairing(&q1, &q2), &self.pairing(&q2, &q1), || vec![("q1", show(&q1)), ("q2", show(&q2))])
        }));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{parse_form, rat};

    #[test]
    fn pairing_of_dx_with_dx_field() {
        let q = CourantStructure::standard(2, 1).unwrap();
        let a = q.coanchor(&Form::dx(2, 0)).unwrap();
        assert_eq!(q.pairing(&a, &q.basis(0)), Form::one(2));
    }

    #[test]
    fn twisted_bracket_of_coordinate_fields() {
        let b = parse_form(3, "x dy^dz").unwrap();
        let q = CourantStructure::twisted(3, 1, b).unwrap();
        let h = q.twist().unwrap().clone();
        assert_eq!(h, Form::basis(3, 0b111));
        let br = q.dorfman(&q.basis(0), &q.basis(1));
        let expected = h.interior_many(&[&VectorField::coordinate(3, 0), &VectorField::coordinate(3, 1)]);
        assert_eq!(br, q.coanchor(&expected).unwrap());
        assert_eq!(expected, Form::dx(3, 2));
    }

    #[test]
    fn coanchor_rejects_wrong_degree() {
        let q = CourantStructure::standard(2, 1).unwrap();
        assert!(matches!(q.coanchor(&Form::basis(2, 0b11)), Err(Error::DegreeMismatch { expected: 1, .. })));
        assert!(CourantStructure::twisted(3, 1, Form::dx(3, 0)).is_err());
    }

    #[test]
    fn quadratic_pairing_is_the_gram_form() {
        let g = LieAlgebra::so3();
        let q = CourantStructure::quadratic(g.clone(), g.killing_form()).unwrap();
        assert_eq!(q.pairing(&q.basis(1), &q.basis(1)), Form::constant(0, rat(-2)));
        let br = q.dorfman(&q.basis(0), &q.basis(1));
        assert_eq!(br, q.basis(2));
    }

    #[test]
    fn associated_lie_algebroids() {
        let t = CourantStructure::twisted(3, 1, parse_form(3, "x dy^dz").unwrap()).unwrap().associated_lie();
        let tangent = LieAlgebroidStructure::tangent(3);
        for i in 0..3 {
            assert_eq!(t.anchor_of_basis(i), tangent.anchor_of_basis(i));
            for j in 0..3 {
                assert!((0..3).all(|m| t.structure_function(i, j, m).is_zero()));
            }
        }
        let g =
            CourantStructure::quadratic(LieAlgebra::so3(), LieAlgebra::so3().killing_form()).unwrap().associated_lie();
        assert_eq!(g.structure_function(0, 1, 2), &Poly::one(0));
    }

    #[test]
    fn axioms_hold_for_every_family() {
        let families = [
            CourantStructure::standard(2, 1).unwrap(),
            CourantStructure::standard(3, 2).unwrap(),
            CourantStructure::twisted(3, 1, parse_form(3, "x*y dy^dz - z dx^dy").unwrap()).unwrap(),
            CourantStructure::quadratic(LieAlgebra::so3(), LieAlgebra::so3().killing_form()).unwrap(),
            CourantStructure::commutative(3, 2).unwrap(),
        ];
        for q in families {
            for o in q.verify_axioms(11, 8, 2) {
                assert!(o.passed, "{} {:?}", q.family_name(), o);
            }
        }
    }

    #[test]
    fn non_closed_twist_breaks_the_leibniz_algebra() {
        let q = CourantStructure::twisted_unchecked(4, 1, parse_form(4, "w dx^dy^dz").unwrap()).unwrap();
        let failed: Vec<String> = q.verify_axioms(5, 20, 2).into_iter().filter(|o| !o.passed).map(|o| o.name).collect();
        assert_eq!(failed, vec!["leibniz-algebra".to_string()]);
    }
}
