//! Polynomial vector fields `Σ ξ_i ∂_i`.

use std::ops::{Add, Neg, Sub};

use super::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorField {
    n: usize,
    comps: Vec<Poly>,
}

impl VectorField {
    pub fn new(comps: Vec<Poly>) -> VectorField {
        let n = comps.len();
        assert!(comps.iter().all(|c| c.nvars() == n), "field components live on another chart");
        VectorField { n, comps }
    }

    pub fn zero(n: usize) -> VectorField {
        VectorField { n, comps: vec![Poly::zero(n); n] }
    }

    /// The coordinate field `∂_i`.
    pub fn coordinate(n: usize, i: usize) -> VectorField {
        let mut v = VectorField::zero(n);
        v.comps[i] = Poly::one(n);
        v
    }

    pub fn chart_dim(&self) -> usize {
        self.n
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    /// Derivation action on a function.
    pub fn apply(&self, f: &Poly) -> Poly {
        assert_eq!(self.n, f.nvars(), "chart dimension mismatch between field and function");
        let mut out = Poly::zero(self.n);
        for (i, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                out += &(c * &f.derivative(i));
            }
        }
        out
    }

    /// Commutator `[ξ, η]`.
    pub fn bracket(&self, other: &VectorField) -> VectorField {
        VectorField::new((0..self.n).map(|j| &self.apply(&other.comps[j]) - &other.apply(&self.comps[j])).collect())
    }

    pub fn mul_poly(&self, f: &Poly) -> VectorField {
        VectorField::new(self.comps.iter().map(|c| c * f).collect())
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        assert_eq!(self.n, rhs.n, "chart dimension mismatch between fields");
        VectorField::new(self.comps.iter().zip(&rhs.comps).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        assert_eq!(self.n, rhs.n, "chart dimension mismatch between fields");
        VectorField::new(self.comps.iter().zip(&rhs.comps).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::new(self.comps.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_of_coordinate_and_linear_field() {
        // [x ∂_y, ∂_x] = -∂_y
        let x = Poly::var(2, 0);
        let a = VectorField::new(vec![Poly::zero(2), x]);
        let b = VectorField::coordinate(2, 0);
        assert_eq!(a.bracket(&b), -&VectorField::coordinate(2, 1));
    }
}
