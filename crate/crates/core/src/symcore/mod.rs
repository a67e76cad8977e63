//! Exact symbolic Cartan calculus on a polynomial coordinate chart.

pub mod form;
pub mod poly;
pub mod text;
pub mod vector_field;

pub use form::{mask_indices, masks_of_degree, merge_sign, Form};
pub use poly::{rat, ratio, Monomial, Poly, Rational, MAX_VARS};
pub use text::{parse_form, parse_poly, var_name};
pub use vector_field::VectorField;
