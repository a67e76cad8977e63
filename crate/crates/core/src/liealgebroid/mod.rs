//! Lie algebroids over a chart, given by a global frame, plus the derived
//! algebroid on the shifted tangent bundle and Atiyah operators.

pub mod atiyah;
pub mod marked;
pub mod sharp;

use crate::error::{Error, Result};
use crate::symcore::{rat, Poly, VectorField};

pub use atiyah::{atiyah_action, d_tilde, iota_tilde, AtiyahOperator};
pub use marked::{check_marked, MarkedAlgebroid, MarkedSharp, MarkingSlot};
pub use sharp::{RawSharpTerm, SharpAlgebroid, SharpSlot};

/// Section of a framed algebroid: coefficients on the frame.
pub type Section = Vec<Poly>;

/// A Lie algebroid on a free module with frame `a_1 .. a_r`.
///
/// `structure[i][j][k]` is the coefficient of `a_k` in `[a_i, a_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebroidStructure {
    pub name: String,
    n: usize,
    anchor: Vec<VectorField>,
    structure: Vec<Vec<Vec<Poly>>>,
}

impl LieAlgebroidStructure {
    /// Build from anchors and structure functions; checks shapes and
    /// skew-symmetry on the frame.
    pub fn new(name: &str, n: usize, anchor: Vec<VectorField>, structure: Vec<Vec<Vec<Poly>>>) -> Result<Self> {
        let r = anchor.len();
        if anchor.iter().any(|v| v.chart_dim() != n) {
            return Err(Error::InvalidStructure("anchor fields live on another chart".into()));
        }
        if structure.len() != r || structure.iter().any(|row| row.len() != r || row.iter().any(|c| c.len() != r)) {
            return Err(Error::RankMismatch { expected: r, found: structure.len() });
        }
        if structure.iter().flatten().flatten().any(|p| p.nvars() != n) {
            return Err(Error::InvalidStructure("structure functions live on another chart".into()));
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if structure[i][j][k] != -&structure[j][i][k] {
                        return Err(Error::InvalidStructure(format!("bracket of frame elements {i},{j} is not skew")));
                    }
                }
            }
        }
        Ok(LieAlgebroidStructure { name: name.into(), n, anchor, structure })
    }

    pub fn chart_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.anchor.len()
    }

    pub fn anchor_of_basis(&self, i: usize) -> &VectorField {
        &self.anchor[i]
    }

    pub fn structure_function(&self, i: usize, j: usize, k: usize) -> &Poly {
        &self.structure[i][j][k]
    }

    pub fn unit(&self, i: usize) -> Section {
        (0..self.rank()).map(|j| if i == j { Poly::one(self.n) } else { Poly::zero(self.n) }).collect()
    }

    /// Anchor of a section.
    pub fn anchor(&self, s: &[Poly]) -> VectorField {
        let mut v = VectorField::zero(self.n);
        for (i, f) in s.iter().enumerate() {
            if !f.is_zero() {
                v = &v + &self.anchor[i].mul_poly(f);
            }
        }
        v
    }

    /// Bracket of sections, extended from the frame by the Leibniz rule.
    pub fn bracket(&self, s: &[Poly], t: &[Poly]) -> Section {
        let r = self.rank();
        let mut out = vec![Poly::zero(self.n); r];
        for i in 0..r {
            if s[i].is_zero() {
                continue;
            }
            let ai = &self.anchor[i];
            for j in 0..r {
                if t[j].is_zero() {
                    continue;
                }
                let st = &s[i] * &t[j];
                for k in 0..r {
                    let c = &self.structure[i][j][k];
                    if !c.is_zero() {
                        out[k] += &(&st * c);
                    }
                }
            }
            for (j, tj) in t.iter().enumerate() {
                out[j] += &(&s[i] * &ai.apply(tj));
            }
        }
        for j in 0..r {
            if t[j].is_zero() {
                continue;
            }
            let aj = &self.anchor[j];
            for (i, si) in s.iter().enumerate() {
                out[i] -= &(&t[j] * &aj.apply(si));
            }
        }
        out
    }

    /// Exact check of the anchor morphism and Jacobi identity on the frame.
    pub fn validate(&self) -> Result<()> {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                let lhs = self.anchor(&self.bracket(&self.unit(i), &self.unit(j)));
                let rhs = self.anchor[i].bracket(&self.anchor[j]);
                if lhs != rhs {
                    return Err(Error::InvalidStructure(format!("anchor is not a morphism on frame elements {i},{j}")));
                }
                for k in 0..r {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&self.bracket(&a, &b), &c);
                    let t3 = self.bracket(&b, &self.bracket(&a, &c));
                    if (0..r).any(|m| t1[m] != &t2[m] + &t3[m]) {
                        return Err(Error::InvalidStructure(format!("Jacobi fails on frame elements {i},{j},{k}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The tangent algebroid with the coordinate frame.
    pub fn tangent(n: usize) -> Self {
        let anchor = (0..n).map(|i| VectorField::coordinate(n, i)).collect();
        let structure = vec![vec![vec![Poly::zero(n); n]; n]; n];
        Self::new("tangent", n, anchor, structure).expect("tangent algebroid is well formed")
    }

    /// The action algebroid of rotations acting on three-space.
    ///
    /// Frame `L_1, L_2, L_3` maps to the rotation fields `y∂z - z∂y`,
    /// `z∂x - x∂z`, `x∂y - y∂x`, which satisfy `[ρ_i, ρ_j] = -ε_{ijk} ρ_k`.
    pub fn rotation_action() -> Self {
        let n = 3;
        let v = |i| Poly::var(n, i);
        let z = || Poly::zero(n);
        let anchor = vec![
            VectorField::new(vec![z(), -v(2), v(1)]),
            VectorField::new(vec![v(2), z(), -v(0)]),
            VectorField::new(vec![-v(1), v(0), z()]),
        ];
        let mut structure = vec![vec![vec![Poly::zero(n); 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            structure[i][j][k] = Poly::from_int(n, -1);
            structure[j][i][k] = Poly::from_int(n, 1);
        }
        Self::new("rotation-action", n, anchor, structure).expect("rotation action is well formed")
    }

    /// A non-holonomic frame of the tangent bundle of three-space with a
    /// polynomial structure function: `∂x`, `∂y + x^2 ∂z`, `∂z`, where
    /// `[a_1, a_2] = 2x a_3`.
    pub fn polynomial_frame() -> Self {
        let n = 3;
        let z = || Poly::zero(n);
        let x = Poly::var(n, 0);
        let anchor = vec![
            VectorField::coordinate(n, 0),
            VectorField::new(vec![z(), Poly::one(n), &x * &x]),
            VectorField::coordinate(n, 2),
        ];
        let mut structure = vec![vec![vec![Poly::zero(n); 3]; 3]; 3];
        structure[0][1][2] = x.scale(&rat(2));
        structure[1][0][2] = x.scale(&rat(-2));
        Self::new("polynomial-frame", n, anchor, structure).expect("polynomial frame is well formed")
    }

    /// Atiyah algebroid of the trivial bundle of rank `r` on an `n`-chart.
    ///
    /// Frame: `∂_1 .. ∂_n`, then the matrix units `E_{ab}` at index
    /// `n + a r + b`.
    pub fn atiyah(n: usize, r: usize) -> Self {
        let rank = n + r * r;
        let mut anchor: Vec<VectorField> = (0..n).map(|i| VectorField::coordinate(n, i)).collect();
        anchor.extend((0..r * r).map(|_| VectorField::zero(n)));
        let mut structure = vec![vec![vec![Poly::zero(n); rank]; rank]; rank];
        let idx = |a: usize, b: usize| n + a * r + b;
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        // [E_ab, E_cd] = δ_bc E_ad - δ_da E_cb
                        let slot = &mut structure[idx(a, b)][idx(c, d)];
                        if b == c {
                            slot[idx(a, d)] += &Poly::one(n);
                        }
                        if d == a {
                            slot[idx(c, b)] -= &Poly::one(n);
                        }
                    }
                }
            }
        }
        Self::new("atiyah", n, anchor, structure).expect("Atiyah algebroid is well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_validate() {
        LieAlgebroidStructure::tangent(3).validate().unwrap();
        LieAlgebroidStructure::rotation_action().validate().unwrap();
        LieAlgebroidStructure::polynomial_frame().validate().unwrap();
        LieAlgebroidStructure::atiyah(2, 2).validate().unwrap();
    }

    #[test]
    fn broken_structure_is_rejected() {
        let t = LieAlgebroidStructure::tangent(2);
        let mut s = vec![vec![vec![Poly::zero(2); 2]; 2]; 2];
        s[0][1][0] = Poly::one(2);
        s[1][0][0] = -Poly::one(2);
        let bad =
            LieAlgebroidStructure::new("bad", 2, (0..2).map(|i| t.anchor_of_basis(i).clone()).collect(), s).unwrap();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn frame_bracket_is_polynomial() {
        let f = LieAlgebroidStructure::polynomial_frame();
        let b = f.bracket(&f.unit(0), &f.unit(1));
        assert_eq!(b[2], Poly::var(3, 0).scale(&rat(2)));
    }
}
