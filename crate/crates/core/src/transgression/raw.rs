//! The presentation of `τQ` before taking the quotient: forms times the
//! generators `c`, `ε⊗q` and `1⊗q` for arbitrary `q`, and the generators of
//! the ideal that the normal form divides out.

use super::{TauAlgebroid, TauElement};
use crate::courant::CourantElement;
use crate::leibniz::{leibniz_bracket, GeneratorAlgebra};
use crate::symcore::{Form, Poly};

/// A raw generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawGen {
    Mark,
    Eps(CourantElement),
    One(CourantElement),
}

/// The raw algebra over a built `τQ`.
#[derive(Clone, Copy, Debug)]
pub struct RawTau<'a> {
    pub tau: &'a TauAlgebroid,
}

/// Which relation a generator of the ideal encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KGenerator {
    /// `α - ε⊗π†α`
    Coanchor,
    /// `dα - 1⊗π†α`
    ExactCoanchor,
    /// `β∧α - βε⊗π†α`
    ScaledCoanchor,
    /// `ε⊗fq - f ε⊗q`
    EpsLinear,
    /// `1⊗fq - f⊗q - df ε⊗q`
    OneLinear,
}

impl KGenerator {
    pub const ALL: [KGenerator; 5] = [
        KGenerator::Coanchor,
        KGenerator::ExactCoanchor,
        KGenerator::ScaledCoanchor,
        KGenerator::EpsLinear,
        KGenerator::OneLinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KGenerator::Coanchor => "coanchor",
            KGenerator::ExactCoanchor => "exact-coanchor",
            KGenerator::ScaledCoanchor => "scaled-coanchor",
            KGenerator::EpsLinear => "eps-linear",
            KGenerator::OneLinear => "one-linear",
        }
    }
}

pub type RawElement = Vec<(Form, RawGen)>;

/// Data a generator of the ideal is built from.
#[derive(Clone, Debug)]
pub struct KData {
    pub beta: Form,
    /// Of the coanchor degree.
    pub alpha: Form,
    pub f: Poly,
    pub q: CourantElement,
}

impl<'a> RawTau<'a> {
    pub fn new(tau: &'a TauAlgebroid) -> Self {
        RawTau { tau }
    }

    /// Normal form of a raw sum.
    pub fn reduce(&self, terms: &[(Form, RawGen)]) -> TauElement {
        let mut out = self.tau.zero();
        for (psi, g) in terms {
            let t = match g {
                RawGen::Mark => TauElement::marked(psi.clone(), self.tau.rank()),
                RawGen::Eps(q) => self.tau.reduce_eps(psi, q),
                RawGen::One(q) => self.tau.reduce_one(psi, q),
            };
            out = &out + &t;
        }
        out
    }

    /// A normal-form element as a raw sum over the frame.
    pub fn lift(&self, a: &TauElement) -> RawElement {
        let q = self.tau.courant();
        let mut out = vec![(a.theta.clone(), RawGen::Mark)];
        for i in 0..a.rank() {
            out.push((a.eps[i].clone(), RawGen::Eps(q.basis(i))));
            out.push((a.one[i].clone(), RawGen::One(q.basis(i))));
        }
        out.retain(|(f, _)| !f.is_zero());
        out
    }

    pub fn bracket(&self, a: &[(Form, RawGen)], b: &[(Form, RawGen)]) -> RawElement {
        leibniz_bracket(self, a, b)
    }

    /// `∂(ψ c) = dψ c`, `∂(ψ ε⊗q) = dψ ε⊗q + (-1)^{|ψ|} ψ⊗q`, `∂(ψ⊗q) = dψ⊗q`.
    pub fn diff(&self, a: &[(Form, RawGen)]) -> RawElement {
        let mut out = Vec::new();
        for (psi, g) in a {
            out.push((psi.d(), g.clone()));
            if let RawGen::Eps(q) = g {
                out.push((psi.parity_twist(), RawGen::One(q.clone())));
            }
        }
        out
    }

    /// `ψ` times a generator of the ideal.
    pub fn k_generator(&self, kind: KGenerator, psi: &Form, data: &KData) -> RawElement {
        let KData { beta, alpha, f, q } = data;
        let qs = self.tau.courant();
        let pa = || qs.coanchor(alpha).expect("alpha has the coanchor degree");
        let neg = |x: &Form| -x;
        let fq = q.scale(f);
        let ff = Form::function(f.clone());
        match kind {
            KGenerator::Coanchor => vec![(psi.wedge(alpha), RawGen::Mark), (neg(psi), RawGen::Eps(pa()))],
            KGenerator::ExactCoanchor => vec![(psi.wedge(&alpha.d()), RawGen::Mark), (neg(psi), RawGen::One(pa()))],
            KGenerator::ScaledCoanchor => {
                let pb = psi.wedge(beta);
                vec![(pb.wedge(alpha), RawGen::Mark), (neg(&pb), RawGen::Eps(pa()))]
            }
            KGenerator::EpsLinear => {
                vec![(psi.clone(), RawGen::Eps(fq)), (neg(&psi.wedge(&ff)), RawGen::Eps(q.clone()))]
            }
            KGenerator::OneLinear => vec![
                (psi.clone(), RawGen::One(fq)),
                (neg(&psi.wedge(&ff)), RawGen::One(q.clone())),
                (neg(&psi.wedge(&ff.d())), RawGen::Eps(q.clone())),
            ],
        }
    }
}

impl GeneratorAlgebra for RawTau<'_> {
    type Gen = RawGen;

    fn gen_degree(&self, g: &RawGen) -> i64 {
        match g {
            RawGen::Mark => -(self.tau.k() as i64),
            RawGen::Eps(_) => -1,
            RawGen::One(_) => 0,
        }
    }

    fn gen_bracket(&self, g1: &RawGen, g2: &RawGen) -> Vec<(Form, RawGen)> {
        let q = self.tau.courant();
        let n = q.chart_dim();
        match (g1, g2) {
            (RawGen::Mark, _) | (_, RawGen::Mark) => Vec::new(),
            (RawGen::Eps(a), RawGen::Eps(b)) => vec![(q.pairing(a, b), RawGen::Mark)],
            (RawGen::One(a), RawGen::Eps(b)) => vec![(Form::one(n), RawGen::Eps(q.dorfman(a, b)))],
            (RawGen::Eps(a), RawGen::One(b)) => {
                vec![(-&q.pairing(a, b).d(), RawGen::Mark), (Form::one(n), RawGen::Eps(q.dorfman(a, b)))]
            }
            (RawGen::One(a), RawGen::One(b)) => vec![(Form::one(n), RawGen::One(q.dorfman(a, b)))],
        }
    }

    fn gen_act(&self, g: &RawGen, form: &Form) -> Form {
        let q = self.tau.courant();
        match g {
            RawGen::Mark => Form::zero(form.chart_dim()),
            RawGen::Eps(a) => form.interior(&q.anchor(a)),
            RawGen::One(a) => form.lie_derivative(&q.anchor(a)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::sample_rng;
    use crate::courant::CourantStructure;
    use crate::symcore::parse_form;

    #[test]
    fn ideal_generators_reduce_to_zero() {
        let q = CourantStructure::twisted(2, 1, parse_form(2, "x*y dx^dy").unwrap()).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        let raw = RawTau::new(&tau);
        let s = q.sampler(2);
        let mut rng = sample_rng(5, "k", 0);
        for kind in KGenerator::ALL {
            let (_, psi) = s.any_form(&mut rng);
            let data = KData {
                beta: s.any_form(&mut rng).1,
                alpha: s.form(1, &mut rng),
                f: s.poly(&mut rng),
                q: s.courant(&q, &mut rng),
            };
            let g = raw.k_generator(kind, &psi, &data);
            assert!(raw.reduce(&g).is_zero(), "{}", kind.name());
        }
    }

    #[test]
    fn lift_then_reduce_is_identity() {
        let q = CourantStructure::standard(2, 1).unwrap();
        let tau = TauAlgebroid::build(&q).unwrap();
        let raw = RawTau::new(&tau);
        let s = q.sampler(2);
        let mut rng = sample_rng(6, "lift", 0);
        let a = tau.reduce_one(&s.form(1, &mut rng), &s.courant(&q, &mut rng));
        assert_eq!(raw.reduce(&raw.lift(&a)), a);
    }
}
