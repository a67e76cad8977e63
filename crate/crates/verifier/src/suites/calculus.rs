//! Cartan calculus on forms and the odd-path algebra.

use courant_core::check::{check_property, expect_eq, PropertyOutcome, SampleRng};
use courant_core::oddpath::{ev_pullback, integrate, prev_normalize, super_diff, super_mul, SuperFunc};
use courant_core::symcore::form::{sign, signed};
use courant_core::symcore::{parse_form, rat, Form, Poly};
use rand::Rng;

use super::Context;

pub fn cartan(ctx: &Context) -> Vec<PropertyOutcome> {
    let s = ctx.sampler();
    let n = ctx.config.chart_dim;
    let (seed, m) = (ctx.seed(), ctx.samples());
    let show = |f: &Form| f.to_string();
    vec![
        check_property("d-squared", "d(dω) = 0", seed, m, |rng| {
            let w = s.mixed_form(rng);
            expect_eq(&w.d().d(), &Form::zero(n), || vec![("omega", show(&w))])
        }),
        check_property("d-leibniz", "d(a∧b) = da∧b + (-1)^|a| a∧db", seed, m, |rng| {
            let (p, a) = s.any_form(rng);
            let b = s.mixed_form(rng);
            let rhs = &a.d().wedge(&b) + &signed(sign(p as i64), &a.wedge(&b.d()));
            expect_eq(&a.wedge(&b).d(), &rhs, || vec![("a", show(&a)), ("b", show(&b))])
        }),
        check_property("lie-on-generators", "L_ξ f = ξ(f) and L_ξ dx_i = dξ_i", seed, m, |rng| {
            let xi = s.vector_field(rng);
            let f = s.poly(rng);
            expect_eq(&Form::function(f.clone()).lie_derivative(&xi), &Form::function(xi.apply(&f)), || {
                vec![("xi", xi.to_string()), ("f", f.to_string())]
            })?;
            let i = rng.gen_range(0..n);
            let lhs = Form::dx(n, i).lie_derivative(&xi);
            expect_eq(&lhs, &Form::function(xi.component(i).clone()).d(), || vec![("xi", xi.to_string())])
        }),
        check_property("lie-commutes-with-d", "L_ξ d = d L_ξ", seed, m, |rng| {
            let (xi, w) = (s.vector_field(rng), s.mixed_form(rng));
            expect_eq(&w.d().lie_derivative(&xi), &w.lie_derivative(&xi).d(), || {
                vec![("xi", xi.to_string()), ("omega", show(&w))]
            })
        }),
        check_property("lie-function-linear", "L_{fξ}ω = f L_ξω + df∧ι_ξω", seed, m, |rng| {
            let (xi, w, f) = (s.vector_field(rng), s.mixed_form(rng), s.poly(rng));
            let lhs = w.lie_derivative(&xi.mul_poly(&f));
            let df = Form::function(f.clone()).d();
            let rhs = &w.lie_derivative(&xi).mul_poly(&f) + &df.wedge(&w.interior(&xi));
            expect_eq(&lhs, &rhs, || vec![("xi", xi.to_string()), ("omega", show(&w)), ("f", f.to_string())])
        }),
        check_property("interior-commutator", "ι_[ξ,η] = L_ξ ι_η - ι_η L_ξ", seed, m, |rng| {
            let (xi, eta, w) = (s.vector_field(rng), s.vector_field(rng), s.mixed_form(rng));
            let rhs = &w.interior(&eta).lie_derivative(&xi) - &w.lie_derivative(&xi).interior(&eta);
            expect_eq(&w.interior(&xi.bracket(&eta)), &rhs, || {
                vec![("xi", xi.to_string()), ("eta", eta.to_string()), ("omega", show(&w))]
            })
        }),
        check_property("lie-commutator", "L_[ξ,η] = L_ξ L_η - L_η L_ξ", seed, m, |rng| {
            let (xi, eta, w) = (s.vector_field(rng), s.vector_field(rng), s.mixed_form(rng));
            let rhs = &w.lie_derivative(&eta).lie_derivative(&xi) - &w.lie_derivative(&xi).lie_derivative(&eta);
            expect_eq(&w.lie_derivative(&xi.bracket(&eta)), &rhs, || {
                vec![("xi", xi.to_string()), ("eta", eta.to_string()), ("omega", show(&w))]
            })
        }),
        check_property("interior-anticommute", "ι_ξ ι_η + ι_η ι_ξ = 0", seed, m, |rng| {
            let (xi, eta, w) = (s.vector_field(rng), s.vector_field(rng), s.mixed_form(rng));
            let lhs = &w.interior(&eta).interior(&xi) + &w.interior(&xi).interior(&eta);
            expect_eq(&lhs, &Form::zero(n), || {
                vec![("xi", xi.to_string()), ("eta", eta.to_string()), ("omega", show(&w))]
            })
        }),
        check_property("text-roundtrip", "parse(print(ω)) = ω", seed, m, |rng| {
            let w = s.mixed_form(rng);
            let back = parse_form(n, &w.to_string()).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string());
            expect_eq(&back, &w.to_string(), || vec![("omega", show(&w))])
        }),
    ]
}

/// Homogeneous super function of degree `p`: even part in `Ω^p`, odd part in
/// `Ω^{p+1}`.
fn super_func(s: &courant_core::sample::Sampler, rng: &mut SampleRng) -> (i64, SuperFunc) {
    let n = s.n as i64;
    let p = rng.gen_range(-1..=n);
    let even = if p >= 0 { s.form(p as usize, rng) } else { Form::zero(s.n) };
    let odd = if p < n { s.form((p + 1) as usize, rng) } else { Form::zero(s.n) };
    (p, SuperFunc::new(even, odd))
}

pub fn oddpath(ctx: &Context) -> Vec<PropertyOutcome> {
    let s = ctx.sampler();
    let n = ctx.config.chart_dim;
    let (seed, m) = (ctx.seed(), ctx.samples());
    let rank = ctx.config.rank;
    let show = |a: &SuperFunc| format!("{} + ({})ε", a.even, a.odd);
    let raw = |rng: &mut SampleRng| -> Vec<(SuperFunc, Vec<Poly>)> {
        (0..rng.gen_range(1..=2)).map(|_| (super_func(&s, rng).1, s.section(rank, rng))).collect()
    };
    let show_raw = |t: &[(SuperFunc, Vec<Poly>)]| {
        t.iter()
            .map(|(a, sec)| {
                format!("({}) ⊗ ({})", show(a), sec.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    vec![
        check_property("ev-multiplicative", "ev*(fg) = ev*(f) ev*(g)", seed, m, |rng| {
            let (f, g) = (s.poly(rng), s.poly(rng));
            let lhs = ev_pullback(&(&f * &g));
            let rhs = super_mul(&ev_pullback(&f), &ev_pullback(&g));
            expect_eq(&show(&lhs), &show(&rhs), || vec![("f", f.to_string()), ("g", g.to_string())])
        }),
        check_property("ev-chain-map", "∂ ev*(f) = 0", seed, m, |rng| {
            let f = s.poly(rng);
            expect_eq(&super_diff(&ev_pullback(&f)).is_zero(), &true, || vec![("f", f.to_string())])
        }),
        check_property("super-diff-squared", "∂² = 0", seed, m, |rng| {
            let (_, a) = super_func(&s, rng);
            expect_eq(&super_diff(&super_diff(&a)).is_zero(), &true, || vec![("a", show(&a))])
        }),
        check_property("super-leibniz", "∂(ab) = ∂a b + (-1)^|a| a ∂b", seed, m, |rng| {
            let ((p, a), (_, b)) = (super_func(&s, rng), super_func(&s, rng));
            let lhs = super_diff(&super_mul(&a, &b));
            let second = super_mul(&a, &super_diff(&b)).scale(&Form::constant(n, rat(sign(p) as i64)));
            let rhs = &super_mul(&super_diff(&a), &b) + &second;
            expect_eq(&show(&lhs), &show(&rhs), || vec![("a", show(&a)), ("b", show(&b))])
        }),
        check_property("integrate-ev", "∫ ev*(f)⊗ω = d(fω)", seed, m, |rng| {
            let f = s.poly(rng);
            let (_, w) = s.any_form(rng);
            let lhs = integrate(&ev_pullback(&f), &w).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
            expect_eq(&lhs, &w.mul_poly(&f).d().to_string(), || vec![("f", f.to_string()), ("omega", w.to_string())])
        }),
        check_property("integrate-balanced", "∫ a·ev*(f)⊗ω = ∫ a⊗fω", seed, m, |rng| {
            let (_, a) = super_func(&s, rng);
            let f = s.poly(rng);
            let (_, w) = s.any_form(rng);
            let lhs = integrate(&super_mul(&a, &ev_pullback(&f)), &w)
                .map(|x| x.to_string())
                .unwrap_or_else(|e| e.to_string());
            let rhs = integrate(&a, &w.mul_poly(&f)).map(|x| x.to_string()).unwrap_or_else(|e| e.to_string());
            expect_eq(&lhs, &rhs, || vec![("a", show(&a)), ("f", f.to_string()), ("omega", w.to_string())])
        }),
        check_property("normalize-idempotent", "normalize ∘ normalize = normalize", seed, m, |rng| {
            let t = raw(rng);
            let once = prev_normalize(&t, n, rank).expect("shapes agree");
            let twice = prev_normalize(&once.to_raw(), n, rank).expect("shapes agree");
            expect_eq(&twice, &once, || vec![("terms", show_raw(&t))])
        }),
        check_property("normalize-additive", "normalize(s + t) = normalize(s) + normalize(t)", seed, m, |rng| {
            let (a, b) = (raw(rng), raw(rng));
            let joined: Vec<_> = a.iter().chain(&b).cloned().collect();
            let lhs = prev_normalize(&joined, n, rank).expect("shapes agree");
            let rhs = &prev_normalize(&a, n, rank).expect("shapes agree")
                + &prev_normalize(&b, n, rank).expect("shapes agree");
            expect_eq(&lhs, &rhs, || vec![("s", show_raw(&a)), ("t", show_raw(&b))])
        }),
        check_property("normalize-balanced", "a⊗fs = a·ev*(f)⊗s", seed, m, |rng| {
            let (_, a) = super_func(&s, rng);
            let f = s.poly(rng);
            let sec = s.section(rank, rng);
            let fs: Vec<Poly> = sec.iter().map(|p| &f * p).collect();
            let lhs = prev_normalize(&[(a.clone(), fs)], n, rank).expect("shapes agree");
            let rhs = prev_normalize(&[(super_mul(&a, &ev_pullback(&f)), sec.clone())], n, rank).expect("shapes agree");
            expect_eq(&lhs, &rhs, || vec![("a", show(&a)), ("f", f.to_string())])
        }),
    ]
}
