//! Brackets extended from generators by the graded Leibniz rule.
//!
//! An element is a finite sum `Σ ψ·u` of forms times generators. For
//! homogeneous `A = ψ1 u1`, `B = ψ2 u2`
//!
//! ```text
//! [A,B] = ψ1 σ(u1)(ψ2) u2 + (-1)^{|u1||ψ2|} ψ1 ψ2 [u1,u2] - (-1)^{|A||B|} ψ2 σ(u2)(ψ1) u1
//! ```

use crate::symcore::form::{sign, signed};
use crate::symcore::Form;

/// Generators with brackets and anchor actions.
pub trait GeneratorAlgebra {
    type Gen: Clone;

    fn gen_degree(&self, g: &Self::Gen) -> i64;

    /// `[g1, g2]` written as a sum of forms times generators.
    fn gen_bracket(&self, g1: &Self::Gen, g2: &Self::Gen) -> Vec<(Form, Self::Gen)>;

    /// The anchor of `g` acting on a form.
    fn gen_act(&self, g: &Self::Gen, form: &Form) -> Form;
}

/// Bracket of two sums of terms; coefficients may be inhomogeneous.
pub fn leibniz_bracket<G: GeneratorAlgebra>(
    alg: &G,
    a: &[(Form, G::Gen)],
    b: &[(Form, G::Gen)],
) -> Vec<(Form, G::Gen)> {
    let mut out = Vec::new();
    for (psi1_full, u1) in a {
        let du1 = alg.gen_degree(u1);
        for (p1, psi1) in psi1_full.homogeneous_parts() {
            let da = p1 as i64 + du1;
            for (psi2_full, u2) in b {
                let du2 = alg.gen_degree(u2);
                for (p2, psi2) in psi2_full.homogeneous_parts() {
                    let db = p2 as i64 + du2;
                    let t1 = psi1.wedge(&alg.gen_act(u1, &psi2));
                    if !t1.is_zero() {
                        out.push((t1, u2.clone()));
                    }
                    let br = alg.gen_bracket(u1, u2);
                    if !br.is_empty() {
                        let s = sign(du1 * p2 as i64);
                        let pp = psi1.wedge(&psi2);
                        for (phi, g) in br {
                            let t = signed(s, &pp.wedge(&phi));
                            if !t.is_zero() {
                                out.push((t, g));
                            }
                        }
                    }
                    let t3 = psi2.wedge(&alg.gen_act(u2, &psi1));
                    if !t3.is_zero() {
                        out.push((signed(-sign(da * db), &t3), u1.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Anchor action of a sum of terms on a form.
pub fn leibniz_act<G: GeneratorAlgebra>(alg: &G, a: &[(Form, G::Gen)], form: &Form) -> Form {
    let mut out = Form::zero(form.chart_dim());
    for (psi, u) in a {
        out += &psi.wedge(&alg.gen_act(u, form));
    }
    out
}
