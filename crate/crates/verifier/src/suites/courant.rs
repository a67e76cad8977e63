//! Courant axioms, connections and morphisms.

use courant_core::check::{check_property, expect_eq, negative_control, Counterexample, PropertyOutcome};
use courant_core::courant::{
    curvature, isotropic_from_splitting, torsor_act, Connection, CourantElement, CourantMorphism, CourantStructure,
};
use courant_core::symcore::{parse_form, rat, Form, VectorField};

use super::Context;

pub fn axioms(ctx: &Context) -> Vec<PropertyOutcome> {
    ctx.courant.verify_axioms(ctx.seed(), ctx.samples(), ctx.degree())
}

/// `w dx∧dy∧dz` on a 4-chart is not closed, so the bracket loses the Jacobi
/// identity. The control passes when the verifier notices.
pub fn negative(ctx: &Context) -> Vec<PropertyOutcome> {
    let h = parse_form(4, "w dx^dy^dz").expect("literal parses");
    let q = CourantStructure::twisted_unchecked(4, 1, h).expect("degrees match");
    let inner = q.verify_axioms(ctx.seed(), ctx.samples(), ctx.degree());
    let curv = match curvature(&q, &Connection::canonical(&q).expect("exact")) {
        Err(e) => PropertyOutcome::fail(
            "curvature-closed",
            "the curvature of the canonical splitting is closed",
            1,
            Counterexample::new(vec![("twist", q.twist().expect("exact").to_string())], e, "a closed curvature"),
        ),
        Ok(_) => PropertyOutcome::pass("curvature-closed", "the curvature of the canonical splitting is closed", 1),
    };
    vec![
        negative_control("non-closed-twist", "a non-closed twist breaks the Courant axioms", &inner),
        negative_control("non-closed-curvature", "a non-closed twist has no closed curvature", &[curv]),
    ]
}

fn show(c: &Connection) -> String {
    c.offset.to_string()
}

fn err_text<T: ToString, E: ToString>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {}", e.to_string()),
    }
}

pub fn connection(ctx: &Context) -> Vec<PropertyOutcome> {
    let q = &ctx.courant;
    let (n, k) = (q.chart_dim(), q.dimension_k());
    let s = ctx.sampler();
    let (seed, m) = (ctx.seed(), ctx.samples());
    let twist = q.twist().cloned().unwrap_or_else(|| Form::zero(n));
    let random_connection = |rng: &mut courant_core::check::SampleRng| Connection { offset: s.form(k + 1, rng) };
    vec![
        check_property("isotropic-correction", "the corrected splitting is isotropic", seed, m, |rng| {
            let images: Vec<CourantElement> = (0..n)
                .map(|i| CourantElement::new(s.form(k, rng), VectorField::coordinate(n, i).components().to_vec()))
                .collect();
            let shown = || vec![("splitting", images.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; "))];
            let nabla = match isotropic_from_splitting(q, &images) {
                Ok(c) => c,
                Err(e) => return Err(Box::new(Counterexample::new(shown(), e, "an isotropic splitting"))),
            };
            let (xi, eta) = (s.vector_field(rng), s.vector_field(rng));
            expect_eq(&q.pairing(&nabla.apply(&xi), &nabla.apply(&eta)), &Form::zero(n), shown)
        }),
        check_property("canonical-curvature", "c(∇₀) = H", seed, 1, |_| {
            let c = err_text(curvature(q, &Connection::canonical(q).expect("exact")));
            expect_eq(&c, &twist.to_string(), || vec![("twist", twist.to_string())])
        }),
        check_property("torsor-curvature", "c(∇ + ω) = c(∇) + dω", seed, m, |rng| {
            let nabla = random_connection(rng);
            let omega = s.form(k + 1, rng);
            let moved = torsor_act(&nabla, &omega).expect("degrees match");
            let lhs = err_text(curvature(q, &moved));
            let rhs = err_text(curvature(q, &nabla).map(|c| &c + &omega.d()));
            expect_eq(&lhs, &rhs, || vec![("connection", show(&nabla)), ("omega", omega.to_string())])
        }),
        check_property("curvature-closed", "dc(∇) = 0", seed, m, |rng| {
            let nabla = random_connection(rng);
            let c = err_text(curvature(q, &nabla).map(|c| c.d()));
            expect_eq(&c, &Form::zero(n).to_string(), || vec![("connection", show(&nabla))])
        }),
        check_property("torsor-associative", "(∇ + ω) + ω' = ∇ + (ω + ω')", seed, m, |rng| {
            let nabla = random_connection(rng);
            let (a, b) = (s.form(k + 1, rng), s.form(k + 1, rng));
            let lhs = torsor_act(&torsor_act(&nabla, &a).expect("degree"), &b).expect("degree");
            let rhs = torsor_act(&nabla, &(&a + &b)).expect("degree");
            expect_eq(&show(&lhs), &show(&rhs), || {
                vec![("connection", show(&nabla)), ("omega", a.to_string()), ("omega'", b.to_string())]
            })
        }),
        check_property("torsor-difference", "(∇ + ω) - ∇ = ω", seed, m, |rng| {
            let nabla = random_connection(rng);
            let a = s.form(k + 1, rng);
            let moved = torsor_act(&nabla, &a).expect("degree");
            expect_eq(&moved.difference(&nabla), &a, || vec![("connection", show(&nabla)), ("omega", a.to_string())])
        }),
        check_property("canonical-lift", "{ξ, η} on lifted fields is [ξ, η] ⊕ ι_η ι_ξ H", seed, m, |rng| {
            let (xi, eta) = (s.vector_field(rng), s.vector_field(rng));
            let lift = |v: &VectorField| CourantElement::new(Form::zero(n), v.components().to_vec());
            let lhs = q.dorfman(&lift(&xi), &lift(&eta));
            let rhs = CourantElement::new(twist.interior_many(&[&xi, &eta]), xi.bracket(&eta).components().to_vec());
            expect_eq(&lhs, &rhs, || vec![("xi", xi.to_string()), ("eta", eta.to_string())])
        }),
    ]
}

pub fn morphism(ctx: &Context) -> Vec<PropertyOutcome> {
    let q = &ctx.courant;
    let k = q.dimension_k();
    let s = ctx.sampler();
    let (seed, m, deg) = (ctx.seed(), ctx.samples(), ctx.degree());
    let mut rng = courant_core::check::sample_rng(seed, "morphism-omega", 0);
    let omega = s.form(k + 1, &mut rng);
    let mut out: Vec<PropertyOutcome> = CourantMorphism::identity(q)
        .check(seed, m, deg)
        .into_iter()
        .map(|mut o| {
            o.name = format!("identity/{}", o.name);
            o
        })
        .collect();
    match CourantMorphism::b_transform(q, &omega) {
        Ok(psi) => out.extend(psi.check(seed, m, deg).into_iter().map(|mut o| {
            o.name = format!("re-splitting/{}", o.name);
            o
        })),
        Err(e) => out.push(PropertyOutcome::fail(
            "re-splitting/construct",
            "re-splitting by a (k+1)-form is a morphism",
            1,
            Counterexample::new(vec![("omega", omega.to_string())], e, "a morphism"),
        )),
    }
    let mut images: Vec<CourantElement> = (0..q.fiber_rank()).map(|i| q.basis(i)).collect();
    images[0] = images[0].scale(&courant_core::symcore::Poly::constant(q.chart_dim(), rat(2)));
    let rejected = CourantMorphism::new(q.clone(), q.clone(), images).is_err();
    out.push(if rejected {
        PropertyOutcome::pass("anchor-breaking-rejected", "maps not commuting with anchors are rejected", 1)
    } else {
        PropertyOutcome::fail(
            "anchor-breaking-rejected",
            "maps not commuting with anchors are rejected",
            1,
            Counterexample::new(vec![("image", "2 b_1".into())], "accepted", "rejected"),
        )
    });
    out
}
