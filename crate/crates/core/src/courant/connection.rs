//! Isotropic splittings of exact Courant algebroids, their curvature and
//! the action of `(k+1)`-forms.
//!
//! A connection is stored as its offset `ω` from the canonical splitting:
//! `∇(ξ) = ι_ξ ω ⊕ ξ`. Such a splitting is isotropic because
//! `ι_ξ ι_η ω + ι_η ι_ξ ω = 0`.

use super::{CourantElement, CourantStructure};
use crate::error::{Error, Result};
use crate::symcore::{ratio, Form, VectorField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    pub offset: Form,
}

impl Connection {
    /// The canonical splitting `ξ ↦ 0 ⊕ ξ`.
    pub fn canonical(q: &CourantStructure) -> Result<Self> {
        require_exact(q)?;
        Ok(Connection { offset: Form::zero(q.chart_dim()) })
    }

    /// `∇(ξ)`.
    pub fn apply(&self, xi: &VectorField) -> CourantElement {
        CourantElement::new(self.offset.interior(xi), xi.components().to_vec())
    }

    /// Difference `∇ - ∇'` as a `(k+1)`-form.
    pub fn difference(&self, other: &Connection) -> Form {
        &self.offset - &other.offset
    }
}

fn require_exact(q: &CourantStructure) -> Result<()> {
    if q.is_exact() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("connections need an exact structure, got {}", q.family_name())))
    }
}

/// `∇ + ω`: `(∇ + ω)(ξ) = ∇(ξ) + π^†(ι_ξ ω)`.
pub fn torsor_act(nabla: &Connection, omega: &Form) -> Result<Connection> {
    let k1 = omega.homogeneous_degree();
    if !omega.is_zero() && nabla.offset.homogeneous_degree().is_some_and(|d| Some(d) != k1) {
        return Err(Error::DegreeMismatch {
            expected: nabla.offset.homogeneous_degree().unwrap_or(0),
            found: format!("{:?}", omega.degrees()),
        });
    }
    Ok(Connection { offset: &nabla.offset + omega })
}

/// Correct a splitting `s(∂_i) = φ_i ⊕ ∂_i` to an isotropic one.
///
/// The result has offset `ω = (1/(k+1)) Σ dx_i ∧ φ_i`. For `k = 1` this is
/// `∇ = s + π^† φ` with `ι_η φ(ξ) = -½⟨sξ, sη⟩`; for larger `k` that
/// equation is not solvable in general and the projection above is the
/// natural replacement. An already isotropic `s` is returned unchanged.
pub fn isotropic_from_splitting(q: &CourantStructure, images: &[CourantElement]) -> Result<Connection> {
    require_exact(q)?;
    let n = q.chart_dim();
    if images.len() != n {
        return Err(Error::RankMismatch { expected: n, found: images.len() });
    }
    for (i, s) in images.iter().enumerate() {
        if q.anchor(s) != VectorField::coordinate(n, i) {
            return Err(Error::NotASection { index: i });
        }
        if !s.form.is_of_degree(q.dimension_k()) {
            return Err(Error::DegreeMismatch { expected: q.dimension_k(), found: format!("{:?}", s.form.degrees()) });
        }
    }
    let mut omega = Form::zero(n);
    for (i, s) in images.iter().enumerate() {
        omega += &Form::dx(n, i).wedge(&s.form);
    }
    let nabla = Connection { offset: omega.scale(&ratio(1, q.dimension_k() as i64 + 1)) };
    for i in 0..n {
        for j in 0..n {
            let a = nabla.apply(&VectorField::coordinate(n, i));
            let b = nabla.apply(&VectorField::coordinate(n, j));
            if !q.pairing(&a, &b).is_zero() {
                return Err(Error::InvalidStructure("corrected splitting is not isotropic".into()));
            }
        }
    }
    Ok(nabla)
}

/// The curvature `(k+2)`-form, assembled from
/// `ι_{∂_j} ι_{∂_i} c = {∇∂_i, ∇∂_j} - ∇[∂_i, ∂_j]` and checked for total
/// skew-symmetry and closedness.
pub fn curvature(q: &CourantStructure, nabla: &Connection) -> Result<Form> {
    require_exact(q)?;
    let n = q.chart_dim();
    let k = q.dimension_k() as i64;
    let field = |i| VectorField::coordinate(n, i);
    let c = |i: usize, j: usize| -> Result<Form> {
        let b = q.dorfman(&nabla.apply(&field(i)), &nabla.apply(&field(j)));
        if q.anchor(&b) != VectorField::zero(n) {
            return Err(Error::InvalidStructure("anchor is not a bracket morphism on coordinate fields".into()));
        }
        Ok(b.form)
    };
    let mut table = vec![vec![Form::zero(n); n]; n];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = c(i, j)?;
        }
    }
    let mut total = Form::zero(n);
    for (i, row) in table.iter().enumerate() {
        let mut gamma = Form::zero(n);
        for (j, cij) in row.iter().enumerate() {
            gamma += &Form::dx(n, j).wedge(cij);
        }
        total += &Form::dx(n, i).wedge(&gamma.scale(&ratio(1, k + 1)));
    }
    let total = total.scale(&ratio(1, k + 2));
    for (i, row) in table.iter().enumerate() {
        for (j, cij) in row.iter().enumerate() {
            if total.interior_many(&[&field(i), &field(j)]) != *cij {
                return Err(Error::InvalidStructure(format!("curvature is not skew-symmetric at ({i}, {j})")));
            }
        }
    }
    if !total.d().is_zero() {
        return Err(Error::InvalidStructure("curvature is not closed".into()));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::parse_form;

    #[test]
    fn canonical_curvature_is_the_twist() {
        let q = CourantStructure::twisted(3, 1, parse_form(3, "x*y dy^dz + z^2 dx^dy").unwrap()).unwrap();
        let c = curvature(&q, &Connection::canonical(&q).unwrap()).unwrap();
        assert_eq!(&c, q.twist().unwrap());
    }

    #[test]
    fn flat_structure_has_zero_curvature() {
        let q = CourantStructure::standard(2, 1).unwrap();
        assert!(curvature(&q, &Connection::canonical(&q).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn non_closed_twist_is_detected() {
        let h = parse_form(4, "w dx^dy^dz").unwrap();
        let q = CourantStructure::twisted_unchecked(4, 1, h).unwrap();
        assert!(curvature(&q, &Connection::canonical(&q).unwrap()).is_err());
    }

    #[test]
    fn isotropic_input_is_unchanged() {
        let q = CourantStructure::standard(3, 2).unwrap();
        let nabla = Connection { offset: parse_form(3, "x dx^dy^dz").unwrap() };
        let images: Vec<_> = (0..3).map(|i| nabla.apply(&VectorField::coordinate(3, i))).collect();
        assert_eq!(isotropic_from_splitting(&q, &images).unwrap(), nabla);
    }

    #[test]
    fn non_section_is_rejected() {
        let q = CourantStructure::standard(2, 1).unwrap();
        let images = vec![q.basis(1), q.basis(1)];
        assert_eq!(isotropic_from_splitting(&q, &images), Err(Error::NotASection { index: 0 }));
    }
}
