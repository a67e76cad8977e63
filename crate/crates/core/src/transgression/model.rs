//! The finite-dimensional model `ℂ[2] ⊕ g[1] ⊕ g` of the transgression of a
//! quadratic Lie algebra: `c` in degree -2, `g[1]` in degree -1, `g` in
//! degree 0, with
//!
//! ```text
//! [u, u'] = ⟨u, u'⟩ c    [v, u] = [v, u]_g in g[1]    [v, v'] = [v, v']_g
//! δ u = u in g
//! ```

use std::fmt;

use num_traits::{One, Zero};

use crate::courant::{CourantFamily, CourantStructure, LieAlgebra};
use crate::error::{Error, Result};
use crate::liealgebroid::MarkedAlgebroid;
use crate::symcore::{Form, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModelElement {
    pub scalar: Rational,
    pub shifted: Vec<Rational>,
    pub base: Vec<Rational>,
}

impl fmt::Display for ModelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "{} c + [{}] + [{}]", self.scalar, list(&self.shifted), list(&self.base))
    }
}

/// `ℂ[2] ⊕ g[1] ⊕ g` for a Lie algebra with an invariant form.
#[derive(Clone, Debug)]
pub struct QuadraticModel {
    algebra: LieAlgebra,
    gram: Vec<Vec<Rational>>,
}

fn combine(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl QuadraticModel {
    pub fn new(algebra: LieAlgebra, gram: Vec<Vec<Rational>>) -> Result<Self> {
        algebra.check_invariant_form(&gram)?;
        Ok(QuadraticModel { algebra, gram })
    }

    pub fn from_courant(q: &CourantStructure) -> Result<Self> {
        match q.family() {
            CourantFamily::Quadratic { algebra, gram } => Self::new(algebra.clone(), gram.clone()),
            _ => Err(Error::Unsupported(format!("no finite model for the {} family", q.family_name()))),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn element(&self, scalar: Rational, shifted: Vec<Rational>, base: Vec<Rational>) -> ModelElement {
        ModelElement { scalar, shifted, base }
    }

    pub fn shifted_unit(&self, i: usize) -> ModelElement {
        ModelElement { shifted: self.algebra.unit(i), ..MarkedAlgebroid::zero(self) }
    }

    pub fn base_unit(&self, i: usize) -> ModelElement {
        ModelElement { base: self.algebra.unit(i), ..MarkedAlgebroid::zero(self) }
    }

    /// `c, u_1 .. u_d, v_1 .. v_d`.
    pub fn basis(&self) -> Vec<ModelElement> {
        let mut out = vec![MarkedAlgebroid::marking(self)];
        out.extend((0..self.dim()).map(|i| self.shifted_unit(i)));
        out.extend((0..self.dim()).map(|i| self.base_unit(i)));
        out
    }

    fn pair(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, a) in u.iter().enumerate() {
            for (j, b) in v.iter().enumerate() {
                s += a * &self.gram[i][j] * b;
            }
        }
        s
    }
}

impl MarkedAlgebroid for QuadraticModel {
    type Elem = ModelElement;

    fn chart_dim(&self) -> usize {
        0
    }

    fn zero(&self) -> ModelElement {
        let z = vec![Rational::zero(); self.dim()];
        ModelElement { scalar: Rational::zero(), shifted: z.clone(), base: z }
    }

    fn marking(&self) -> ModelElement {
        ModelElement { scalar: Rational::one(), ..MarkedAlgebroid::zero(self) }
    }

    fn add(&self, a: &ModelElement, b: &ModelElement) -> ModelElement {
        ModelElement {
            scalar: &a.scalar + &b.scalar,
            shifted: combine(&a.shifted, &b.shifted),
            base: combine(&a.base, &b.base),
        }
    }

    /// Forms on a point are constants.
    fn scale(&self, psi: &Form, a: &ModelElement) -> ModelElement {
        let c = psi.function_part().constant_term();
        let mul = |v: &[Rational]| v.iter().map(|x| x * &c).collect();
        ModelElement { scalar: &a.scalar * &c, shifted: mul(&a.shifted), base: mul(&a.base) }
    }

    fn bracket(&self, a: &ModelElement, b: &ModelElement) -> ModelElement {
        let g = &self.algebra;
        ModelElement {
            scalar: self.pair(&a.shifted, &b.shifted),
            shifted: combine(&g.bracket(&a.base, &b.shifted), &g.bracket(&a.shifted, &b.base)),
            base: g.bracket(&a.base, &b.base),
        }
    }

    fn differential(&self, a: &ModelElement) -> ModelElement {
        ModelElement { base: a.shifted.clone(), ..MarkedAlgebroid::zero(self) }
    }

    fn anchor_act(&self, _a: &ModelElement, _form: &Form) -> Form {
        Form::zero(0)
    }

    fn marking_coefficient(&self, a: &ModelElement) -> Option<Form> {
        (a.shifted.iter().chain(&a.base).all(Zero::is_zero)).then(|| Form::constant(0, a.scalar.clone()))
    }

    fn degree(&self, a: &ModelElement) -> Option<i64> {
        let parts = [
            (!a.scalar.is_zero(), -2),
            (a.shifted.iter().any(|x| !x.is_zero()), -1),
            (a.base.iter().any(|x| !x.is_zero()), 0),
        ];
        let mut present = parts.iter().filter(|(p, _)| *p).map(|(_, d)| *d);
        match (present.next(), present.next()) {
            (Some(d), None) => Some(d),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_brackets_use_the_form() {
        let g = LieAlgebra::so3();
        let m = QuadraticModel::new(g.clone(), g.killing_form()).unwrap();
        let u = m.shifted_unit(0);
        let b = MarkedAlgebroid::bracket(&m, &u, &u);
        assert_eq!(m.marking_coefficient(&b), Some(Form::constant(0, crate::symcore::rat(-2))));
        assert_eq!(m.differential(&u), m.base_unit(0));
    }
}
