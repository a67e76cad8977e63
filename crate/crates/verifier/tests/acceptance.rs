//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails. All comparisons are exact.

use std::process::{Command, ExitCode};

use courant_verify::config::{AlgebraSpec, Family, GramSpec, Potential, SuiteConfig};
use courant_verify::report::VerificationReport;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn cfg(family: Family, n: usize, k: usize, samples: usize, suites: &[&str]) -> SuiteConfig {
    SuiteConfig {
        chart_dim: n,
        courant_k: k,
        family,
        seed: 2024,
        samples,
        suites: suites.iter().map(|s| s.to_string()).collect(),
        ..SuiteConfig::default()
    }
}

fn twisted() -> Family {
    Family::Twisted { potential: Potential::Random }
}

fn so3() -> Family {
    Family::Quadratic { algebra: AlgebraSpec::So3, gram: GramSpec::Killing }
}

/// Structures every family-independent suite runs on.
fn all_families(samples: usize, suites: &[&str]) -> Vec<SuiteConfig> {
    vec![
        cfg(Family::Standard, 2, 1, samples, suites),
        cfg(Family::Standard, 3, 2, samples, suites),
        cfg(twisted(), 3, 1, samples, suites),
        cfg(so3(), 2, 1, samples, suites),
        cfg(Family::Commutative, 3, 2, samples, suites),
    ]
}

fn run(c: &SuiteConfig) -> Result<VerificationReport, String> {
    courant_verify::run(c).map_err(|e| format!("{c}: {e}"))
}

/// Every selected suite passed and each name in `required` was checked.
fn require(c: &SuiteConfig, required: &[&str]) -> Result<usize, String> {
    let report = run(c)?;
    if let Some((s, p)) = report.failures().next() {
        let cex = p.counterexample.as_ref().map(|x| format!(": {} ≠ {}", x.lhs, x.rhs)).unwrap_or_default();
        return Err(format!("{c}: {}::{} failed{cex}", s.id, p.name));
    }
    for want in required {
        let found = report.suites.iter().flat_map(|s| &s.properties).any(|p| p.name == *want);
        if !found {
            return Err(format!("{c}: property {want} was not checked"));
        }
    }
    for s in &report.suites {
        if let Some(p) = s.properties.iter().find(|p| p.samples < c.samples && p.samples != 1) {
            return Err(format!("{c}: {}::{} ran {} samples", s.id, p.name, p.samples));
        }
    }
    Ok(report.property_count())
}

fn require_all(configs: &[SuiteConfig], required: &[&str]) -> Verdict {
    let mut total = 0;
    for c in configs {
        total += require(c, required)?;
    }
    Ok(format!("{total} properties over {} structures", configs.len()))
}

fn cartan() -> Verdict {
    let req = [
        "d-squared",
        "d-leibniz",
        "lie-commutes-with-d",
        "interior-commutator",
        "lie-commutator",
        "interior-anticommute",
    ];
    require_all(&[cfg(Family::Standard, 2, 1, 50, &["cartan"]), cfg(Family::Standard, 3, 1, 50, &["cartan"])], &req)
}

fn oddpath() -> Verdict {
    let req = ["ev-multiplicative", "ev-chain-map", "super-leibniz", "integrate-ev"];
    require_all(&[cfg(Family::Standard, 2, 1, 50, &["oddpath"]), cfg(Family::Standard, 3, 1, 50, &["oddpath"])], &req)
}

fn sharp() -> Verdict {
    let mut req = Vec::new();
    for base in ["tangent", "rotation", "polynomial-frame"] {
        for p in [
            "balance-one-left",
            "balance-one-right",
            "balance-eps-left",
            "balance-eps-right",
            "skew",
            "jacobi",
            "leibniz",
        ] {
            req.push(format!("{base}/{p}"));
        }
    }
    let req: Vec<&str> = req.iter().map(String::as_str).collect();
    require_all(&[cfg(Family::Standard, 3, 1, 25, &["sharp"])], &req)
}

fn atiyah() -> Verdict {
    let req = ["lift-symbol", "lift-bracket", "lift-contraction", "contractions-anticommute"];
    let mut configs = Vec::new();
    for rank in 1..=3 {
        configs.push(SuiteConfig { rank, ..cfg(Family::Standard, 2, 1, 25, &["atiyah"]) });
    }
    require_all(&configs, &req)
}

fn courant() -> Verdict {
    let s = &["courant-axioms"];
    let configs = [
        cfg(Family::Standard, 2, 1, 50, s),
        cfg(Family::Standard, 3, 1, 50, s),
        cfg(Family::Standard, 2, 2, 50, s),
        cfg(Family::Standard, 3, 2, 50, s),
        cfg(twisted(), 3, 1, 50, s),
        cfg(twisted(), 3, 2, 50, s),
        cfg(so3(), 2, 1, 50, s),
        cfg(Family::Commutative, 3, 2, 50, s),
        cfg(Family::Standard, 2, 1, 50, &["courant-negative"]),
    ];
    let detail = require_all(&configs, &[])?;
    // The negative control passes only when the failure carries a witness.
    let report = run(&configs[8])?;
    let control = &report.suites[0].properties[0];
    if control.name != "non-closed-twist" || control.witness.is_none() {
        return Err("non-closed twist was not caught".into());
    }
    Ok(format!("{detail}; non-closed twist caught"))
}

fn connection() -> Verdict {
    let req = ["isotropic-correction", "canonical-curvature", "torsor-curvature", "curvature-closed"];
    let s = &["connection"];
    require_all(&[cfg(Family::Standard, 3, 1, 50, s), cfg(twisted(), 3, 1, 50, s), cfg(twisted(), 3, 2, 50, s)], &req)
}

fn tau_core() -> Verdict {
    let suites = &["tau-ideal", "tau-skew", "tau-jacobi", "tau-leibniz", "tau-diff"];
    let mut req: Vec<String> = ["reduce-idempotent", "diff-squared", "diff-derivation", "leibniz-e", "leibniz-o"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for kind in ["coanchor", "exact-coanchor", "scaled-coanchor", "eps-linear", "one-linear"] {
        req.push(format!("independence-{kind}"));
    }
    for pair in ["ee", "eo", "oo", "ce", "co"] {
        req.push(format!("skew-{pair}"));
    }
    for a in ['e', 'o'] {
        for b in ['e', 'o'] {
            for c in ['e', 'o'] {
                req.push(format!("jacobi-{a}{b}{c}"));
            }
        }
    }
    let req: Vec<&str> = req.iter().map(String::as_str).collect();
    require_all(&all_families(25, suites), &req)
}

fn marking() -> Verdict {
    require_all(
        &all_families(25, &["marking", "tau-anchor"]),
        &["marking-degree", "grading-count", "low-degree-forms", "anchor-marking"],
    )
}

fn ctl() -> Verdict {
    let req = [
        "initial/ctl-anchor",
        "initial/ctl-coanchor",
        "initial/ctl-pairing",
        "initial/ctl-bracket",
        "pullback-identity/ctl-bracket",
    ];
    let mut detail = require_all(&all_families(25, &["ctl"]), &req)?;
    let exact = [cfg(twisted(), 3, 1, 25, &["ctl"]), cfg(Family::Standard, 3, 2, 25, &["ctl"])];
    detail += "; ";
    detail += &require_all(&exact, &["pullback-resplit/ctl-bracket", "pushforward/extension-bracket"])?;
    Ok(detail)
}

fn roundtrip() -> Verdict {
    let req = ["roundtrip-anchor", "roundtrip-coanchor", "roundtrip-pairing", "roundtrip-bracket", "roundtrip-basis"];
    require_all(&all_families(50, &["roundtrip"]), &req)
}

fn quadratic_model() -> Verdict {
    let req = ["model-basis", "model-structure-constants", "model-differential", "model-pairing"];
    require_all(&[cfg(so3(), 2, 1, 25, &["quadratic-model"])], &req)
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = dir.path().join("run.cfg");
    std::fs::write(&config, "family = twisted\nchart_dim = 3\npotential = random\nseed = 11\n")
        .map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let json = dir.path().join(format!("report{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_courant-verify"))
            .arg("--config")
            .arg(&config)
            .arg("--json")
            .arg(&json)
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if !status.success() {
            return Err(format!("run {i} exited with {status}"));
        }
        outputs.push(std::fs::read(&json).map_err(|e| e.to_string())?);
    }
    if outputs[0] != outputs[1] {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", outputs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("cartan", cartan),
        ("oddpath", oddpath),
        ("sharp", sharp),
        ("atiyah", atiyah),
        ("courant", courant),
        ("connection", connection),
        ("tau-core", tau_core),
        ("marking", marking),
        ("ctl", ctl),
        ("roundtrip", roundtrip),
        ("quadratic-model", quadratic_model),
        ("determinism", determinism),
    ];
    let results: Vec<Verdict> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|(_, f)| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err("panicked".into()))).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), r)) in criteria.iter().zip(results).enumerate() {
        match r {
            Ok(d) => println!("PASS {:>2} {name}: {d}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
