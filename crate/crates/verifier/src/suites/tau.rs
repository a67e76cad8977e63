//! Properties of the transgression `τQ`.

use courant_core::check::{check_property, expect_eq, Counterexample, PropertyOutcome, SampleRng};
use courant_core::courant::{CourantElement, CourantFamily, CourantMorphism, CourantStructure};
use courant_core::liealgebroid::{check_marked, MarkedAlgebroid};
use courant_core::sample::Sampler;
use courant_core::symcore::form::{sign, signed};
use courant_core::symcore::{masks_of_degree, Form};
use courant_core::transgression::cour::check_round_trip;
use courant_core::transgression::raw::RawElement;
use courant_core::transgression::{
    ctl_pullback, initial_ctl, universal_extend, CtlMorphism, DerivedCourant, KData, KGenerator, QuadraticModel,
    RawGen, RawTau, TauAlgebroid, TauElement, TauShape,
};
use rand::Rng;

use super::Context;

fn build(ctx: &Context) -> Result<(TauAlgebroid, Sampler), Box<PropertyOutcome>> {
    let q = &ctx.courant;
    TauAlgebroid::build(q).map(|t| (t, q.sampler(ctx.degree()))).map_err(|e| {
        Box::new(PropertyOutcome::fail(
            "build",
            "τQ exists for the configured structure",
            1,
            Counterexample::new(vec![("family", q.family_name().into())], e, "a transgression"),
        ))
    })
}

macro_rules! with_tau {
    ($ctx:expr, $tau:ident, $s:ident) => {
        let ($tau, $s) = match build($ctx) {
            Ok(x) => x,
            Err(o) => return vec![*o],
        };
    };
}

fn deg(tau: &TauAlgebroid, a: &TauElement) -> i64 {
    a.degree(tau.k()).unwrap_or(0)
}

fn signed_tau(s: i32, a: &TauElement) -> TauElement {
    if s > 0 {
        a.clone()
    } else {
        -a
    }
}

fn any_shape(rng: &mut SampleRng) -> TauShape {
    TauShape::ALL[rng.gen_range(0..3)]
}

fn raw_sum(tau: &TauAlgebroid, s: &Sampler, rng: &mut SampleRng) -> RawElement {
    (0..rng.gen_range(1..=2))
        .map(|_| {
            let (_, psi) = s.any_form(rng);
            let q = s.courant(tau.courant(), rng);
            let g = match rng.gen_range(0..3) {
                0 => RawGen::Mark,
                1 => RawGen::Eps(q),
                _ => RawGen::One(q),
            };
            (psi, g)
        })
        .collect()
}

fn show_raw(t: &[(Form, RawGen)]) -> String {
    t.iter()
        .map(|(f, g)| match g {
            RawGen::Mark => format!("({f}) c"),
            RawGen::Eps(q) => format!("({f}) ε⊗({q})"),
            RawGen::One(q) => format!("({f}) 1⊗({q})"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn k_data(tau: &TauAlgebroid, s: &Sampler, rng: &mut SampleRng) -> KData {
    KData {
        beta: s.any_form(rng).1,
        alpha: s.form(tau.courant().dimension_k(), rng),
        f: s.poly(rng),
        q: s.courant(tau.courant(), rng),
    }
}

pub fn ideal(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let raw = RawTau::new(&tau);
    let (seed, m) = (ctx.seed(), ctx.samples());
    let mut out = vec![
        check_property("reduce-idempotent", "reducing a normal form changes nothing", seed, m, |rng| {
            let x = raw_sum(&tau, &s, rng);
            let once = raw.reduce(&x);
            expect_eq(&raw.reduce(&raw.lift(&once)), &once, || vec![("x", show_raw(&x))])
        }),
        check_property("reduce-additive", "reduce(x + y) = reduce(x) + reduce(y)", seed, m, |rng| {
            let (x, y) = (raw_sum(&tau, &s, rng), raw_sum(&tau, &s, rng));
            let joined: Vec<_> = x.iter().chain(&y).cloned().collect();
            expect_eq(&raw.reduce(&joined), &(&raw.reduce(&x) + &raw.reduce(&y)), || {
                vec![("x", show_raw(&x)), ("y", show_raw(&y))]
            })
        }),
        check_property("bracket-on-representatives", "reduce[x, y] = [reduce x, reduce y]", seed, m, |rng| {
            let (x, y) = (raw_sum(&tau, &s, rng), raw_sum(&tau, &s, rng));
            expect_eq(&raw.reduce(&raw.bracket(&x, &y)), &tau.bracket(&raw.reduce(&x), &raw.reduce(&y)), || {
                vec![("x", show_raw(&x)), ("y", show_raw(&y))]
            })
        }),
    ];
    for kind in KGenerator::ALL {
        out.push(check_property(
            &format!("ideal-{}", kind.name()),
            "generators of the ideal reduce to zero",
            seed,
            m,
            |rng| {
                let (_, psi) = s.any_form(rng);
                let g = raw.k_generator(kind, &psi, &k_data(&tau, &s, rng));
                expect_eq(&raw.reduce(&g), &tau.zero(), || vec![("generator", show_raw(&g))])
            },
        ));
        out.push(check_property(
            &format!("independence-{}", kind.name()),
            "brackets do not depend on the representative",
            seed,
            m,
            |rng| {
                let x = raw_sum(&tau, &s, rng);
                let y = raw_sum(&tau, &s, rng);
                let (_, psi) = s.any_form(rng);
                let g = raw.k_generator(kind, &psi, &k_data(&tau, &s, rng));
                let yg: Vec<_> = y.iter().chain(&g).cloned().collect();
                let inputs = || vec![("x", show_raw(&x)), ("y", show_raw(&y)), ("generator", show_raw(&g))];
                expect_eq(&raw.reduce(&raw.bracket(&x, &yg)), &raw.reduce(&raw.bracket(&x, &y)), inputs)?;
                expect_eq(&raw.reduce(&raw.bracket(&yg, &x)), &raw.reduce(&raw.bracket(&y, &x)), inputs)
            },
        ));
    }
    out
}

pub fn skew(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let (seed, m) = (ctx.seed(), ctx.samples());
    let mut out = Vec::new();
    for (i, &sa) in TauShape::ALL.iter().enumerate() {
        for &sb in &TauShape::ALL[i..] {
            let name = format!("skew-{}{}", sa.letter(), sb.letter());
            out.push(check_property(&name, "[a,b] + (-1)^{|a||b|}[b,a] = 0", seed, m, |rng| {
                let (a, b) = (tau.sample(&s, sa, rng), tau.sample(&s, sb, rng));
                let lhs = &tau.bracket(&a, &b) + &signed_tau(sign(deg(&tau, &a) * deg(&tau, &b)), &tau.bracket(&b, &a));
                expect_eq(&lhs, &tau.zero(), || vec![("a", a.to_string()), ("b", b.to_string())])
            }));
        }
    }
    out
}

fn jacobi_property(
    tau: &TauAlgebroid,
    s: &Sampler,
    shapes: [Option<TauShape>; 3],
    name: &str,
    seed: u64,
    m: usize,
) -> PropertyOutcome {
    check_property(name, "[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]", seed, m, |rng| {
        let mut pick = |sh: Option<TauShape>| {
            let sh = sh.unwrap_or_else(|| any_shape(rng));
            tau.sample(s, sh, rng)
        };
        let (a, b, c) = (pick(shapes[0]), pick(shapes[1]), pick(shapes[2]));
        let lhs = tau.bracket(&a, &tau.bracket(&b, &c));
        let swapped = tau.bracket(&b, &tau.bracket(&a, &c));
        let rhs = &tau.bracket(&tau.bracket(&a, &b), &c) + &signed_tau(sign(deg(tau, &a) * deg(tau, &b)), &swapped);
        expect_eq(&lhs, &rhs, || vec![("a", a.to_string()), ("b", b.to_string()), ("c", c.to_string())])
    })
}

pub fn jacobi(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let (seed, m) = (ctx.seed(), ctx.samples());
    let mut out = Vec::new();
    let eo = [TauShape::Eps, TauShape::One];
    for a in eo {
        for b in eo {
            for c in eo {
                let name = format!("jacobi-{}{}{}", a.letter(), b.letter(), c.letter());
                out.push(jacobi_property(&tau, &s, [Some(a), Some(b), Some(c)], &name, seed, m));
            }
        }
    }
    out.push(jacobi_property(&tau, &s, [None, None, None], "jacobi-any", seed, m));
    out
}

pub fn leibniz(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let (seed, m) = (ctx.seed(), ctx.samples());
    TauShape::ALL
        .iter()
        .map(|&sa| {
            check_property(
                &format!("leibniz-{}", sa.letter()),
                "[a, ψb] = σ(a)(ψ) b + (-1)^{|a||ψ|} ψ[a,b]",
                seed,
                m,
                |rng| {
                    let a = tau.sample(&s, sa, rng);
                    let b = tau.sample(&s, any_shape(rng), rng);
                    let (p, psi) = s.any_form(rng);
                    let lhs = tau.bracket(&a, &b.scale(&psi));
                    let second = signed_tau(sign(deg(&tau, &a) * p as i64), &tau.bracket(&a, &b).scale(&psi));
                    let rhs = &b.scale(&tau.anchor_act(&a, &psi)) + &second;
                    expect_eq(&lhs, &rhs, || vec![("a", a.to_string()), ("b", b.to_string()), ("psi", psi.to_string())])
                },
            )
        })
        .collect()
}

pub fn diff(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let raw = RawTau::new(&tau);
    let (seed, m) = (ctx.seed(), ctx.samples());
    let mut out = vec![
        check_property("diff-squared", "∂² = 0", seed, m, |rng| {
            let a = tau.sample(&s, any_shape(rng), rng);
            expect_eq(&tau.diff(&tau.diff(&a)), &tau.zero(), || vec![("a", a.to_string())])
        }),
        check_property("diff-derivation", "∂[a,b] = [∂a,b] + (-1)^|a| [a,∂b]", seed, m, |rng| {
            let (a, b) = (tau.sample(&s, any_shape(rng), rng), tau.sample(&s, any_shape(rng), rng));
            let rhs =
                &tau.bracket(&tau.diff(&a), &b) + &signed_tau(sign(deg(&tau, &a)), &tau.bracket(&a, &tau.diff(&b)));
            expect_eq(&tau.diff(&tau.bracket(&a, &b)), &rhs, || vec![("a", a.to_string()), ("b", b.to_string())])
        }),
        check_property("diff-generator", "∂(ε⊗q) = 1⊗q", seed, m, |rng| {
            let q = s.courant(tau.courant(), rng);
            expect_eq(&tau.diff(&tau.phi(&q)), &tau.reduce_one(&Form::one(tau.chart_dim()), &q), || {
                vec![("q", q.to_string())]
            })
        }),
        check_property("diff-marking", "∂c = 0", seed, 1, |_| {
            expect_eq(&tau.diff(&tau.marking()), &tau.zero(), Vec::new)
        }),
        check_property("diff-on-representatives", "reduce ∂x = ∂ reduce x", seed, m, |rng| {
            let x = raw_sum(&tau, &s, rng);
            expect_eq(&raw.reduce(&raw.diff(&x)), &tau.diff(&raw.reduce(&x)), || vec![("x", show_raw(&x))])
        }),
    ];
    for kind in KGenerator::ALL {
        out.push(check_property(
            &format!("diff-ideal-{}", kind.name()),
            "∂ maps the ideal into itself",
            seed,
            m,
            |rng| {
                let (_, psi) = s.any_form(rng);
                let g = raw.k_generator(kind, &psi, &k_data(&tau, &s, rng));
                expect_eq(&raw.reduce(&raw.diff(&g)), &tau.zero(), || vec![("generator", show_raw(&g))])
            },
        ));
    }
    out
}

pub fn anchor(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let tx = tau.tangent_sharp();
    let (seed, m) = (ctx.seed(), ctx.samples());
    let n = tau.chart_dim();
    vec![
        check_property("anchor-morphism", "σ[a,b] = [σa, σb]", seed, m, |rng| {
            let (a, b) = (tau.sample(&s, any_shape(rng), rng), tau.sample(&s, any_shape(rng), rng));
            expect_eq(&tau.anchor(&tau.bracket(&a, &b)), &tx.bracket(&tau.anchor(&a), &tau.anchor(&b)), || {
                vec![("a", a.to_string()), ("b", b.to_string())]
            })
        }),
        check_property("anchor-action", "σ(a) acts on forms through the derived tangent algebroid", seed, m, |rng| {
            let a = tau.sample(&s, any_shape(rng), rng);
            let w = s.mixed_form(rng);
            expect_eq(&tx.anchor_act(&tau.anchor(&a), &w), &tau.anchor_act(&a, &w), || {
                vec![("a", a.to_string()), ("form", w.to_string())]
            })
        }),
        check_property("anchor-differential", "σ(∂a) = d σ(a) - (-1)^|a| σ(a) d", seed, m, |rng| {
            let a = tau.sample(&s, any_shape(rng), rng);
            let w = s.mixed_form(rng);
            let rhs = &tau.anchor_act(&a, &w).d() - &signed(sign(deg(&tau, &a)), &tau.anchor_act(&a, &w.d()));
            expect_eq(&tau.anchor_act(&tau.diff(&a), &w), &rhs, || vec![("a", a.to_string()), ("form", w.to_string())])
        }),
        check_property("anchor-marking", "σ(c) = 0", seed, 1, |_| {
            expect_eq(&tau.anchor(&tau.marking()).is_zero(), &true, || vec![("chart", n.to_string())])
        }),
    ]
}

/// `C(n, p)`, zero outside `0..=n`.
fn form_rank(n: usize, p: i64) -> usize {
    if p < 0 || p as usize > n {
        0
    } else {
        masks_of_degree(n, p as usize).len()
    }
}

pub fn marking(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let (seed, m) = (ctx.seed(), ctx.samples());
    let (n, k, r) = (tau.chart_dim(), tau.k() as i64, tau.rank());
    let mut out = check_marked(&tau, seed, m, |rng| tau.sample(&s, any_shape(rng), rng), |rng| s.mixed_form(rng));
    out.push(check_property("marking-degree", "c has degree -k", seed, 1, |_| {
        expect_eq(&format!("{:?}", tau.marking().degree(tau.k())), &format!("{:?}", Some(-k)), Vec::new)
    }));
    out.push(check_property("grading-count", "rank τQ^i = rank Ω^{i+k} for i ≤ -2", seed, 1, |_| {
        for i in -k - 1..=1 {
            let expected = form_rank(n, i + k) + if i >= -1 { r * (form_rank(n, i + 1) + form_rank(n, i)) } else { 0 };
            expect_eq(&tau.degree_rank(i), &expected, || vec![("degree", i.to_string())])?;
        }
        Ok(())
    }));
    out.push(check_property("low-degree-forms", "τQ^i = Ω^{i+k}·c for i ≤ -2", seed, m, |rng| {
        let i = rng.gen_range(-k..=-1).min(-2);
        for shape in TauShape::ALL {
            if let Some(a) = tau.sample_in_degree(&s, shape, i, rng) {
                if MarkedAlgebroid::marking_coefficient(&tau, &a).is_none() {
                    return Err(Box::new(Counterexample::new(vec![("degree", i.to_string())], a, "a multiple of c")));
                }
            }
        }
        Ok(())
    }));
    out
}

fn prefixed(prefix: &str, v: Vec<PropertyOutcome>) -> Vec<PropertyOutcome> {
    v.into_iter()
        .map(|mut o| {
            o.name = format!("{prefix}/{}", o.name);
            o
        })
        .collect()
}

pub fn ctl(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, s);
    let (seed, m, deg) = (ctx.seed(), ctx.samples(), ctx.degree());
    let q = tau.courant().clone();
    let phi = initial_ctl(&tau);
    let mut out = prefixed("initial", phi.check(seed, m, deg));

    let id = CourantMorphism::identity(&q);
    match ctl_pullback(&id, &phi) {
        Ok(p) => {
            out.push(check_property(
                "pullback-identity/unchanged",
                "pulling back along the identity changes nothing",
                seed,
                m,
                |rng| {
                    let x = s.courant(&q, rng);
                    expect_eq(&p.apply(&x), &phi.apply(&x), || vec![("q", x.to_string())])
                },
            ));
            out.extend(prefixed("pullback-identity", p.check(seed, m, deg)));
        }
        Err(e) => out.push(construct_failure("pullback-identity/construct", e)),
    }

    let ext = universal_extend(&tau, initial_ctl(&tau)).expect("initial map starts at τQ");
    out.push(check_property("extension-of-initial", "extending ε⊗q ↦ ε⊗q gives the identity", seed, m, |rng| {
        let a = tau.sample(&s, any_shape(rng), rng);
        expect_eq(&ext.apply(&a), &a, || vec![("a", a.to_string())])
    }));
    out.push(check_property("extension-theta", "θc ↦ θ c_L", seed, m, |rng| {
        let a = tau.sample(&s, TauShape::Theta, rng);
        expect_eq(&ext.apply(&a), &tau.marking().scale(&a.theta), || vec![("a", a.to_string())])
    }));

    if let Some(h) = q.twist() {
        let mut rng = courant_core::check::sample_rng(seed, "ctl-omega", 0);
        let omega = s.form(q.dimension_k() + 1, &mut rng);
        // Pull back along Q' → Q where Q' has twist H + dω.
        let pulled = CourantStructure::twisted_closed(q.chart_dim(), q.dimension_k(), h + &omega.d())
            .and_then(|q1| CourantMorphism::b_transform(&q1, &omega))
            .and_then(|psi| ctl_pullback(&psi, &phi));
        match pulled {
            Ok(p) => out.extend(prefixed("pullback-resplit", p.check(seed, m, deg))),
            Err(e) => out.push(construct_failure("pullback-resplit/construct", e)),
        }
        // Extend a map Q → τQ'' obtained from Q → Q''.
        match CourantMorphism::b_transform(&q, &omega) {
            Ok(psi) => {
                let target = TauAlgebroid::build(&psi.target).expect("exact structures transgress");
                let phi2 = ctl_pullback(&psi, &initial_ctl(&target)).expect("shapes agree");
                out.extend(prefixed("pushforward", phi2.check(seed, m, deg)));
                let ext2 = universal_extend(&tau, phi2).expect("source is Q");
                out.extend(prefixed("pushforward", ext2.check(seed, m, deg)));
            }
            Err(e) => out.push(construct_failure("pushforward/construct", e)),
        }
    }

    let mut images: Vec<CourantElement> = (0..q.fiber_rank()).map(|i| q.basis(i)).collect();
    if let Some(first) = images.first_mut() {
        *first = CourantElement::new(
            first.form.clone(),
            vec![courant_core::symcore::Poly::zero(q.chart_dim()); q.fiber_rank()],
        );
    }
    let breaks_anchor = (0..q.fiber_rank()).any(|i| q.anchor(&images[i]) != q.anchor(&q.basis(i)));
    if breaks_anchor {
        let ok = CourantMorphism::new(q.clone(), q.clone(), images).is_err();
        out.push(if ok {
            PropertyOutcome::pass(
                "pullback-rejects-non-morphism",
                "maps not commuting with anchors cannot be pulled back along",
                1,
            )
        } else {
            construct_failure("pullback-rejects-non-morphism", "constructor accepted an anchor-breaking map")
        });
    }
    out
}

fn construct_failure(name: &str, e: impl std::fmt::Display) -> PropertyOutcome {
    PropertyOutcome::fail(name, "construction succeeds", 1, Counterexample::new(Vec::new(), e, "success"))
}

pub fn roundtrip(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, _s);
    let (seed, m, deg) = (ctx.seed(), ctx.samples(), ctx.degree());
    let q = tau.courant();
    let mut out = check_round_trip(&tau, seed, m, deg);
    let cour = DerivedCourant::new(&tau).expect("marking degree is -(k+1)");
    out.push(check_property("roundtrip-basis", "every structure map agrees on the frame", seed, 1, |_| {
        let n = q.chart_dim();
        let mut frame: Vec<CourantElement> = (0..q.fiber_rank()).map(|i| q.basis(i)).collect();
        frame.extend(
            masks_of_degree(n, q.dimension_k())
                .into_iter()
                .map(|mm| q.coanchor(&Form::basis(n, mm)).expect("degree k")),
        );
        for a in &frame {
            let pa = tau.phi(a);
            let anchor = cour.anchor(&pa).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string());
            expect_eq(&anchor, &q.anchor(a).to_string(), || vec![("q", a.to_string())])?;
            for b in &frame {
                let pb = tau.phi(b);
                let pairing = cour.pairing(&pa, &pb).map(|f| f.to_string()).unwrap_or_else(|e| e.to_string());
                expect_eq(&pairing, &q.pairing(a, b).to_string(), || {
                    vec![("q1", a.to_string()), ("q2", b.to_string())]
                })?;
                let br = cour
                    .bracket(&pa, &pb)
                    .and_then(|x| tau.to_courant(&x))
                    .map(|x| x.to_string())
                    .unwrap_or_else(|e| e.to_string());
                expect_eq(&br, &q.dorfman(a, b).to_string(), || vec![("q1", a.to_string()), ("q2", b.to_string())])?;
            }
        }
        Ok(())
    }));
    out
}

pub fn quadratic_model(ctx: &Context) -> Vec<PropertyOutcome> {
    with_tau!(ctx, tau, _s);
    let (seed, m, deg) = (ctx.seed(), ctx.samples(), ctx.degree());
    let q = tau.courant();
    if !matches!(q.family(), CourantFamily::Quadratic { .. }) {
        return vec![construct_failure("model", "the model needs a quadratic structure")];
    }
    let model = QuadraticModel::from_courant(q).expect("quadratic family");
    let phi = CtlMorphism::new(q.clone(), &model, (0..model.dim()).map(|i| model.shifted_unit(i)).collect())
        .expect("shapes agree");
    let mut out = prefixed("model-ctl", phi.check(seed, m, deg));
    let ext = universal_extend(&tau, phi).expect("source is the quadratic structure");
    out.extend(prefixed("model-extension", ext.check(seed, m, deg)));

    let d = model.dim();
    let mut basis = vec![tau.marking()];
    basis.extend((0..d).map(|i| tau.phi(&q.basis(i))));
    basis.extend((0..d).map(|i| tau.diff(&tau.phi(&q.basis(i)))));
    out.push(check_property("model-basis", "the extension sends c, e_i, o_i to c, u_i, v_i", seed, 1, |_| {
        let images: Vec<String> = basis.iter().map(|x| ext.apply(x).to_string()).collect();
        let expected: Vec<String> = model.basis().iter().map(|x| x.to_string()).collect();
        expect_eq(&images.join("; "), &expected.join("; "), Vec::new)
    }));
    out.push(check_property(
        "model-structure-constants",
        "φ̃[x, y] = [φ̃x, φ̃y] on all basis pairs",
        seed,
        1,
        |_| {
            for x in &basis {
                for y in &basis {
                    let lhs = ext.apply(&tau.bracket(x, y));
                    let rhs = MarkedAlgebroid::bracket(&model, &ext.apply(x), &ext.apply(y));
                    expect_eq(&lhs, &rhs, || vec![("x", x.to_string()), ("y", y.to_string())])?;
                }
            }
            Ok(())
        },
    ));
    out.push(check_property(
        "model-differential",
        "φ̃∂x = δφ̃x, with δ the identity g[1] → g",
        seed,
        1,
        |_| {
            for x in &basis {
                expect_eq(&ext.apply(&tau.diff(x)), &model.differential(&ext.apply(x)), || vec![("x", x.to_string())])?;
            }
            Ok(())
        },
    ));
    out.push(check_property("model-pairing", "[u_i, u_j] = ⟨u_i, u_j⟩ c", seed, 1, |_| {
        for i in 0..d {
            for j in 0..d {
                let br = MarkedAlgebroid::bracket(&model, &model.shifted_unit(i), &model.shifted_unit(j));
                let want = tau.bracket(&basis[1 + i], &basis[1 + j]);
                let got = model.marking_coefficient(&br).map(|f| f.to_string()).unwrap_or_else(|| br.to_string());
                expect_eq(&got, &want.theta.to_string(), || vec![("i", i.to_string()), ("j", j.to_string())])?;
            }
        }
        Ok(())
    }));
    out
}
