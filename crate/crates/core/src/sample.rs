//! Seeded random samples: small integer coefficients on monomials of
//! bounded total degree.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::courant::{CourantElement, CourantStructure};
use crate::symcore::form::masks_of_degree;
use crate::symcore::{rat, Form, Monomial, Poly, VectorField};

/// Sampling bounds on a chart of dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampler {
    pub n: usize,
    pub max_degree: u32,
    /// Upper bound on the number of terms in a sampled polynomial.
    pub max_terms: usize,
}

impl Sampler {
    pub fn new(n: usize, max_degree: u32) -> Self {
        Sampler { n, max_degree, max_terms: 2 }
    }

    fn coefficient<R: Rng>(rng: &mut R) -> i64 {
        let c: i64 = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            -c
        } else {
            c
        }
    }

    fn monomial<R: Rng>(&self, rng: &mut R) -> Monomial {
        let mut exps = vec![0u32; self.n];
        if self.n > 0 {
            let d = rng.gen_range(0..=self.max_degree);
            for _ in 0..d {
                exps[rng.gen_range(0..self.n)] += 1;
            }
        }
        Monomial::from_exponents(&exps)
    }

    /// A nonzero polynomial with 1 to `max_terms` terms.
    pub fn poly<R: Rng>(&self, rng: &mut R) -> Poly {
        loop {
            let mut p = Poly::zero(self.n);
            for _ in 0..rng.gen_range(1..=self.max_terms) {
                p.add_term(self.monomial(rng), rat(Self::coefficient(rng)));
            }
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A homogeneous `p`-form; zero when `p` exceeds the chart dimension.
    pub fn form<R: Rng>(&self, p: usize, rng: &mut R) -> Form {
        let masks = masks_of_degree(self.n, p);
        let mut out = Form::zero(self.n);
        if masks.is_empty() {
            return out;
        }
        let forced = *masks.choose(rng).expect("nonempty");
        for m in masks {
            if m == forced || rng.gen_bool(0.4) {
                out.add_component(m, &self.poly(rng));
            }
        }
        out
    }

    /// A form with random components in several degrees.
    pub fn mixed_form<R: Rng>(&self, rng: &mut R) -> Form {
        let mut out = Form::zero(self.n);
        for p in 0..=self.n {
            if rng.gen_bool(0.5) {
                out += &self.form(p, rng);
            }
        }
        out
    }

    /// A homogeneous form of a random degree in `0..=n`.
    pub fn any_form<R: Rng>(&self, rng: &mut R) -> (usize, Form) {
        let p = rng.gen_range(0..=self.n);
        (p, self.form(p, rng))
    }

    pub fn vector_field<R: Rng>(&self, rng: &mut R) -> VectorField {
        VectorField::new((0..self.n).map(|_| self.maybe_poly(rng)).collect())
    }

    /// Zero with probability one third, otherwise a sampled polynomial.
    pub fn maybe_poly<R: Rng>(&self, rng: &mut R) -> Poly {
        if rng.gen_bool(1.0 / 3.0) {
            Poly::zero(self.n)
        } else {
            self.poly(rng)
        }
    }

    /// Section of a free module of rank `r`.
    pub fn section<R: Rng>(&self, r: usize, rng: &mut R) -> Vec<Poly> {
        (0..r).map(|_| self.maybe_poly(rng)).collect()
    }

    /// An element of the split module of a Courant structure.
    pub fn courant<R: Rng>(&self, q: &CourantStructure, rng: &mut R) -> CourantElement {
        assert_eq!(self.n, q.chart_dim(), "sampler and structure live on different charts");
        let form = if rng.gen_bool(0.75) { self.form(q.dimension_k(), rng) } else { Form::zero(self.n) };
        CourantElement::new(form, self.section(q.fiber_rank(), rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn over_top_degree_is_zero() {
        let s = Sampler::new(3, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(s.form(4, &mut rng).is_zero());
    }

    #[test]
    fn same_seed_same_sample() {
        let s = Sampler::new(3, 2);
        let a = s.form(2, &mut ChaCha8Rng::seed_from_u64(9));
        let b = s.form(2, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
        assert!(a.is_of_degree(2) && !a.is_zero());
    }

    #[test]
    fn degree_bound_is_respected() {
        let s = Sampler::new(2, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            assert!(s.poly(&mut rng).degree().unwrap() <= 2);
        }
    }
}
