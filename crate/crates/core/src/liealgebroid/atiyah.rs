//! First-order operators on a free bundle and their lifts to `pr_* ev^* E`.
//!
//! `D = (ξ, M)` acts by `D(Σ s_j e_j) = Σ (ξ(s_i) + Σ_j M_ij s_j) e_i`.
//! The lift `ι̃_D` is the degree -1 derivation with symbol `ι_ξ` on
//! coefficients, `ι̃(1⊗e) = ε⊗De` and `ι̃(ε⊗e) = 0`; `D̃ = [∂, ι̃_D]`.

use std::fmt;

use super::LieAlgebroidStructure;
use crate::oddpath::PrEvElement;
use crate::symcore::form::signed;
use crate::symcore::{Poly, VectorField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtiyahOperator {
    pub symbol: VectorField,
    /// `matrix[i][j]` is the coefficient of `e_i` in `D(e_j)`.
    pub matrix: Vec<Vec<Poly>>,
}

impl AtiyahOperator {
    pub fn new(symbol: VectorField, matrix: Vec<Vec<Poly>>) -> Self {
        let r = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == r), "connection matrix must be square");
        AtiyahOperator { symbol, matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn chart_dim(&self) -> usize {
        self.symbol.chart_dim()
    }

    /// Operator attached to frame element `i` of [`LieAlgebroidStructure::atiyah`].
    pub fn atiyah_basis(n: usize, r: usize, i: usize) -> Self {
        let mut m = vec![vec![Poly::zero(n); r]; r];
        if i < n {
            return AtiyahOperator::new(VectorField::coordinate(n, i), m);
        }
        let (a, b) = ((i - n) / r, (i - n) % r);
        m[a][b] = Poly::one(n);
        AtiyahOperator::new(VectorField::zero(n), m)
    }

    /// Action on a section.
    pub fn apply(&self, s: &[Poly]) -> Vec<Poly> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                let mut v = self.symbol.apply(&s[i]);
                for (j, sj) in s.iter().enumerate() {
                    v += &(&self.matrix[i][j] * sj);
                }
                v
            })
            .collect()
    }

    /// Commutator of operators.
    pub fn bracket(&self, other: &AtiyahOperator) -> AtiyahOperator {
        let r = self.rank();
        let n = self.chart_dim();
        let mut m = vec![vec![Poly::zero(n); r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let mut v = &self.symbol.apply(&other.matrix[i][j]) - &other.symbol.apply(&self.matrix[i][j]);
                for k in 0..r {
                    v += &(&self.matrix[i][k] * &other.matrix[k][j]);
                    v -= &(&other.matrix[i][k] * &self.matrix[k][j]);
                }
                *entry = v;
            }
        }
        AtiyahOperator::new(self.symbol.bracket(&other.symbol), m)
    }
}

impl fmt::Display for AtiyahOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "({}; [{}])", self.symbol, rows.join(", "))
    }
}

/// The degree -1 lift `ι̃_D`.
pub fn iota_tilde(d: &AtiyahOperator, m: &PrEvElement) -> PrEvElement {
    let n = d.chart_dim();
    let r = d.rank();
    let mut out = PrEvElement::zero(n, r);
    for j in 0..r {
        // β ⊗ e_j: ι_ξβ ⊗ e_j + (-1)^{|β|} β ε⊗De_j
        out.one[j] += &m.one[j].interior(&d.symbol);
        let twisted = m.one[j].parity_twist();
        for i in 0..r {
            let c = &d.matrix[i][j];
            if !c.is_zero() {
                out.eps[i] += &twisted.mul_poly(c);
            }
        }
        // α ε⊗e_j: ι_ξα ε⊗e_j
        out.eps[j] += &m.eps[j].interior(&d.symbol);
    }
    out
}

/// The degree 0 lift `D̃ = ∂ι̃ + ι̃∂`.
pub fn d_tilde(d: &AtiyahOperator, m: &PrEvElement) -> PrEvElement {
    &iota_tilde(d, m).diff() + &iota_tilde(d, &m.diff())
}

/// Action of the derived Atiyah algebroid of a rank `r` free bundle on
/// `pr_* ev^* E`: `ω⊗1⊗D ↦ ω·D̃` and `γ ε⊗D ↦ γ·ι̃_D`.
pub fn atiyah_action(atiyah: &LieAlgebroidStructure, r: usize, x: &PrEvElement, m: &PrEvElement) -> PrEvElement {
    let n = atiyah.chart_dim();
    let mut out = PrEvElement::zero(n, r);
    for i in 0..atiyah.rank() {
        if x.one[i].is_zero() && x.eps[i].is_zero() {
            continue;
        }
        let d = AtiyahOperator::atiyah_basis(n, r, i);
        if !x.one[i].is_zero() {
            out = &out + &d_tilde(&d, m).scale(&x.one[i]);
        }
        if !x.eps[i].is_zero() {
            out = &out + &iota_tilde(&d, m).scale(&x.eps[i]);
        }
    }
    out
}

/// Sign helper for graded commutators of operators of degrees `p`, `q`.
pub fn commutator_sign(p: i64, q: i64) -> i32 {
    crate::symcore::form::sign(p * q)
}

/// Graded commutator `[P, Q](m) = P(Q m) - (-1)^{pq} Q(P m)`.
pub fn graded_commutator(
    p: impl Fn(&PrEvElement) -> PrEvElement,
    dp: i64,
    q: impl Fn(&PrEvElement) -> PrEvElement,
    dq: i64,
    m: &PrEvElement,
) -> PrEvElement {
    let pq = p(&q(m));
    let qp = q(&p(m));
    let mut out = pq;
    for i in 0..out.rank() {
        out.one[i] -= &signed(commutator_sign(dp, dq), &qp.one[i]);
        out.eps[i] -= &signed(commutator_sign(dp, dq), &qp.eps[i]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oddpath::{tensor, SuperFunc};
    use crate::symcore::parse_form;

    fn op() -> AtiyahOperator {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        AtiyahOperator::new(
            VectorField::new(vec![y.clone(), Poly::one(2)]),
            vec![vec![x.clone(), Poly::zero(2)], vec![Poly::one(2), &x * &y]],
        )
    }

    #[test]
    fn lift_acts_by_lie_derivative_plus_operator() {
        // D̃(A⊗e_1) for A = x dy: L_ξA ⊗ e_1 + A ⊗ De_1
        let d = op();
        let a = parse_form(2, "x dy").unwrap();
        let m = PrEvElement::one_term(2, 2, 0, a.clone());
        let de = d.apply(&[Poly::one(2), Poly::zero(2)]);
        let expected = &PrEvElement::one_term(2, 2, 0, a.lie_derivative(&d.symbol)) + &tensor(&SuperFunc::even(a), &de);
        assert_eq!(d_tilde(&d, &m), expected);
    }

    #[test]
    fn contraction_lift_squares_to_zero() {
        let d = op();
        let m = PrEvElement::one_term(2, 2, 1, parse_form(2, "x*y dx^dy").unwrap());
        assert!(iota_tilde(&d, &iota_tilde(&d, &m)).is_zero());
    }
}
