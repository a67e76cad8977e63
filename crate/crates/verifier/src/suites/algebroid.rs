//! The derived algebroid `A♯`, lifted Atiyah operators and a marking
//! negative control.

use courant_core::check::{check_property, expect_eq, negative_control, PropertyOutcome, SampleRng};
use courant_core::liealgebroid::{
    atiyah::graded_commutator, atiyah_action, check_marked, d_tilde, iota_tilde, sharp::tangent_sharp_act,
    AtiyahOperator, LieAlgebroidStructure, MarkedSharp, MarkingSlot, RawSharpTerm, SharpAlgebroid, SharpSlot,
};
use courant_core::oddpath::{tensor, PrEvElement, SuperFunc};
use courant_core::sample::Sampler;
use courant_core::symcore::form::{sign, signed};
use courant_core::symcore::{Form, Poly};
use rand::Rng;

use super::Context;

fn raw_term(s: &Sampler, rank: usize, rng: &mut SampleRng) -> RawSharpTerm {
    let (_, coeff) = s.any_form(rng);
    let slot = if rng.gen_bool(0.5) { SharpSlot::One } else { SharpSlot::Eps };
    RawSharpTerm::new(coeff, slot, s.section(rank, rng))
}

/// Homogeneous element of `A♯` and its degree.
fn element(alg: &SharpAlgebroid, s: &Sampler, rng: &mut SampleRng) -> (i64, PrEvElement) {
    loop {
        let a = alg.normalize(&[raw_term(s, alg.rank(), rng)]);
        if let Some(d) = a.degree() {
            return (d, a);
        }
    }
}

fn show_raw(t: &[RawSharpTerm]) -> String {
    t.iter()
        .map(|x| {
            let sec = x.section.iter().map(Poly::to_string).collect::<Vec<_>>().join(", ");
            let slot = if x.slot == SharpSlot::One { "1" } else { "ε" };
            format!("({}) {slot}⊗({sec})", x.coeff)
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn signed_elem(s: i32, a: &PrEvElement) -> PrEvElement {
    if s > 0 {
        a.clone()
    } else {
        -a
    }
}

/// Properties of `A♯` for one base algebroid; names carry the base prefix.
fn sharp_for(base: LieAlgebroidStructure, tag: &str, seed: u64, m: usize, degree: u32) -> Vec<PropertyOutcome> {
    let n = base.chart_dim();
    let r = base.rank();
    let alg = SharpAlgebroid::new(base);
    let s = Sampler::new(n, degree);
    let name = |p: &str| format!("{tag}/{p}");
    let show = |a: &PrEvElement| a.to_string();

    // `ω 1⊗fa ≡ ωf 1⊗a + ω∧df ε⊗a` and `ω ε⊗fa ≡ ωf ε⊗a`.
    let balanced = |rng: &mut SampleRng, slot: SharpSlot| -> (Vec<RawSharpTerm>, Vec<RawSharpTerm>) {
        let (_, w) = s.any_form(rng);
        let f = s.poly(rng);
        let a = s.section(r, rng);
        let fa: Vec<Poly> = a.iter().map(|x| &f * x).collect();
        let lhs = vec![RawSharpTerm::new(w.clone(), slot, fa)];
        let mut rhs = vec![RawSharpTerm::new(w.mul_poly(&f), slot, a.clone())];
        if slot == SharpSlot::One {
            rhs.push(RawSharpTerm::new(w.wedge(&Form::function(f).d()), SharpSlot::Eps, a));
        }
        (lhs, rhs)
    };
    let mut out = Vec::new();
    for (label, slot) in [("one", SharpSlot::One), ("eps", SharpSlot::Eps)] {
        out.push(check_property(
            &name(&format!("balance-{label}-left")),
            "[x, b] is independent of balancing x",
            seed,
            m,
            |rng| {
                let (x, y) = balanced(rng, slot);
                let b = vec![raw_term(&s, r, rng)];
                expect_eq(&alg.raw_bracket(&x, &b), &alg.raw_bracket(&y, &b), || {
                    vec![("x", show_raw(&x)), ("x'", show_raw(&y)), ("b", show_raw(&b))]
                })
            },
        ));
        out.push(check_property(
            &name(&format!("balance-{label}-right")),
            "[a, x] is independent of balancing x",
            seed,
            m,
            |rng| {
                let (x, y) = balanced(rng, slot);
                let a = vec![raw_term(&s, r, rng)];
                expect_eq(&alg.raw_bracket(&a, &x), &alg.raw_bracket(&a, &y), || {
                    vec![("a", show_raw(&a)), ("x", show_raw(&x)), ("x'", show_raw(&y))]
                })
            },
        ));
    }
    out.push(check_property(&name("balance-anchor"), "σ(1⊗fa) = σ(f⊗a + df ε⊗a)", seed, m, |rng| {
        let (x, y) = balanced(rng, SharpSlot::One);
        let (_, w) = s.any_form(rng);
        expect_eq(&alg.raw_anchor_act(&x, &w), &alg.raw_anchor_act(&y, &w), || {
            vec![("x", show_raw(&x)), ("form", w.to_string())]
        })
    }));
    out.push(check_property(&name("skew"), "[a,b] = -(-1)^{|a||b|}[b,a]", seed, m, |rng| {
        let ((p, a), (q, b)) = (element(&alg, &s, rng), element(&alg, &s, rng));
        let rhs = signed_elem(-sign(p * q), &alg.bracket(&b, &a));
        expect_eq(&alg.bracket(&a, &b), &rhs, || vec![("a", show(&a)), ("b", show(&b))])
    }));
    out.push(check_property(&name("jacobi"), "[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]", seed, m, |rng| {
        let ((p, a), (q, b), (_, c)) = (element(&alg, &s, rng), element(&alg, &s, rng), element(&alg, &s, rng));
        let lhs = alg.bracket(&a, &alg.bracket(&b, &c));
        let rhs =
            &alg.bracket(&alg.bracket(&a, &b), &c) + &signed_elem(sign(p * q), &alg.bracket(&b, &alg.bracket(&a, &c)));
        expect_eq(&lhs, &rhs, || vec![("a", show(&a)), ("b", show(&b)), ("c", show(&c))])
    }));
    out.push(check_property(&name("leibniz"), "[a, ψb] = σ(a)(ψ) b + (-1)^{|a||ψ|} ψ[a,b]", seed, m, |rng| {
        let ((p, a), (_, b)) = (element(&alg, &s, rng), element(&alg, &s, rng));
        let (k, psi) = s.any_form(rng);
        let lhs = alg.bracket(&a, &b.scale(&psi));
        let rhs =
            &b.scale(&alg.anchor_act(&a, &psi)) + &signed_elem(sign(p * k as i64), &alg.bracket(&a, &b).scale(&psi));
        expect_eq(&lhs, &rhs, || vec![("a", show(&a)), ("b", show(&b)), ("psi", psi.to_string())])
    }));
    out.push(check_property(&name("anchor-morphism"), "σ[a,b] = σa σb - (-1)^{|a||b|} σb σa", seed, m, |rng| {
        let ((p, a), (q, b)) = (element(&alg, &s, rng), element(&alg, &s, rng));
        let w = s.mixed_form(rng);
        let lhs = alg.anchor_act(&alg.bracket(&a, &b), &w);
        let rhs = &alg.anchor_act(&a, &alg.anchor_act(&b, &w))
            - &signed(sign(p * q), &alg.anchor_act(&b, &alg.anchor_act(&a, &w)));
        expect_eq(&lhs, &rhs, || vec![("a", show(&a)), ("b", show(&b)), ("form", w.to_string())])
    }));
    out.push(check_property(
        &name("anchor-tangent"),
        "the anchor factors through the derived tangent algebroid",
        seed,
        m,
        |rng| {
            let (_, a) = element(&alg, &s, rng);
            let w = s.mixed_form(rng);
            expect_eq(&tangent_sharp_act(&alg.anchor(&a), &w), &alg.anchor_act(&a, &w), || {
                vec![("a", show(&a)), ("form", w.to_string())]
            })
        },
    ));
    out
}

pub fn sharp(ctx: &Context) -> Vec<PropertyOutcome> {
    let (seed, m, deg) = (ctx.seed(), ctx.samples(), ctx.degree());
    let mut out = sharp_for(LieAlgebroidStructure::tangent(ctx.config.chart_dim), "tangent", seed, m, deg);
    out.extend(sharp_for(LieAlgebroidStructure::rotation_action(), "rotation", seed, m, deg));
    out.extend(sharp_for(LieAlgebroidStructure::polynomial_frame(), "polynomial-frame", seed, m, deg));
    out
}

fn operator(s: &Sampler, r: usize, rng: &mut SampleRng) -> AtiyahOperator {
    let matrix = (0..r).map(|_| s.section(r, rng)).collect();
    AtiyahOperator::new(s.vector_field(rng), matrix)
}

fn module_element(s: &Sampler, r: usize, rng: &mut SampleRng) -> PrEvElement {
    let mut out = PrEvElement::zero(s.n, r);
    for _ in 0..rng.gen_range(1..=2) {
        let a = SuperFunc::new(s.mixed_form(rng), s.mixed_form(rng));
        out = &out + &tensor(&a, &s.section(r, rng));
    }
    out
}

pub fn atiyah(ctx: &Context) -> Vec<PropertyOutcome> {
    let (seed, m) = (ctx.seed(), ctx.samples());
    let (n, r) = (ctx.config.chart_dim, ctx.config.rank);
    let s = ctx.sampler();
    let base = LieAlgebroidStructure::atiyah(n, r);
    let sharp = SharpAlgebroid::new(base.clone());
    let show = |a: &PrEvElement| a.to_string();
    vec![
        check_property("lift-symbol", "D̃(A⊗e) = L_{σD}A⊗e + A⊗De", seed, m, |rng| {
            let d = operator(&s, r, rng);
            let a = SuperFunc::new(s.mixed_form(rng), s.mixed_form(rng));
            let e = s.section(r, rng);
            let la = SuperFunc::new(a.even.lie_derivative(&d.symbol), a.odd.lie_derivative(&d.symbol));
            let rhs = &tensor(&la, &e) + &tensor(&a, &d.apply(&e));
            expect_eq(&d_tilde(&d, &tensor(&a, &e)), &rhs, || {
                vec![("D", d.to_string()), ("A", format!("{} + ({})ε", a.even, a.odd))]
            })
        }),
        check_property("lift-bracket", "[D̃1, D̃2] = [D1, D2]~", seed, m, |rng| {
            let (d1, d2) = (operator(&s, r, rng), operator(&s, r, rng));
            let x = module_element(&s, r, rng);
            let lhs = graded_commutator(|v| d_tilde(&d1, v), 0, |v| d_tilde(&d2, v), 0, &x);
            expect_eq(&lhs, &d_tilde(&d1.bracket(&d2), &x), || {
                vec![("D1", d1.to_string()), ("D2", d2.to_string()), ("m", show(&x))]
            })
        }),
        check_property("lift-contraction", "[D̃, ι̃_{D'}] = ι̃_{[D,D']}", seed, m, |rng| {
            let (d1, d2) = (operator(&s, r, rng), operator(&s, r, rng));
            let x = module_element(&s, r, rng);
            let lhs = graded_commutator(|v| d_tilde(&d1, v), 0, |v| iota_tilde(&d2, v), -1, &x);
            expect_eq(&lhs, &iota_tilde(&d1.bracket(&d2), &x), || {
                vec![("D", d1.to_string()), ("D'", d2.to_string()), ("m", show(&x))]
            })
        }),
        check_property("contractions-anticommute", "[ι̃_D, ι̃_{D'}] = 0", seed, m, |rng| {
            let (d1, d2) = (operator(&s, r, rng), operator(&s, r, rng));
            let x = module_element(&s, r, rng);
            let lhs = graded_commutator(|v| iota_tilde(&d1, v), -1, |v| iota_tilde(&d2, v), -1, &x);
            expect_eq(&lhs, &PrEvElement::zero(n, r), || {
                vec![("D", d1.to_string()), ("D'", d2.to_string()), ("m", show(&x))]
            })
        }),
        check_property("action-morphism", "the Atiyah action preserves brackets", seed, m, |rng| {
            let ((p, a), (q, b)) = (element(&sharp, &s, rng), element(&sharp, &s, rng));
            let x = module_element(&s, r, rng);
            let lhs = atiyah_action(&base, r, &sharp.bracket(&a, &b), &x);
            let rhs =
                graded_commutator(|v| atiyah_action(&base, r, &a, v), p, |v| atiyah_action(&base, r, &b, v), q, &x);
            expect_eq(&lhs, &rhs, || vec![("a", show(&a)), ("b", show(&b)), ("m", show(&x))])
        }),
        check_property("action-anchor", "the symbol of D̃ acts as L_{σD}", seed, m, |rng| {
            let d = operator(&s, r, rng);
            let w = s.mixed_form(rng);
            let e = s.section(r, rng);
            let lhs = d_tilde(&d, &tensor(&SuperFunc::even(w.clone()), &e));
            let rhs = &tensor(&SuperFunc::even(w.lie_derivative(&d.symbol)), &e)
                + &tensor(&SuperFunc::even(w.clone()), &d.apply(&e));
            expect_eq(&lhs, &rhs, || vec![("D", d.to_string()), ("form", w.to_string())])
        }),
    ]
}

/// The rotation action algebroid has no central frame element, so marking
/// `1⊗a_1` must fail the centrality check.
pub fn marked_negative(ctx: &Context) -> Vec<PropertyOutcome> {
    let (seed, m, deg) = (ctx.seed(), ctx.samples(), ctx.degree());
    let marked =
        MarkedSharp { sharp: SharpAlgebroid::new(LieAlgebroidStructure::rotation_action()), slot: MarkingSlot::One(0) };
    let s = Sampler::new(3, deg);
    let inner = check_marked(&marked, seed, m, |rng| element(&marked.sharp, &s, rng).1, |rng| s.mixed_form(rng));
    let zero =
        MarkedSharp { sharp: SharpAlgebroid::new(LieAlgebroidStructure::rotation_action()), slot: MarkingSlot::Zero };
    let mut out = vec![negative_control("non-central-marking", "a non-central marking is rejected", &inner)];
    out.extend(
        check_marked(&zero, seed, m, |rng| element(&zero.sharp, &s, rng).1, |rng| s.mixed_form(rng)).into_iter().map(
            |mut o| {
                o.name = format!("zero-marking/{}", o.name);
                o
            },
        ),
    );
    out
}
