//! Deterministic sampled property checks.
//!
//! Each sample draws from its own ChaCha stream, seeded from the run seed,
//! the property name and the sample index. Results therefore do not depend
//! on thread scheduling.

use std::fmt::Display;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Random source handed to sample generators.
pub type SampleRng = ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

/// A failing sample: its inputs and the two sides that disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub sample: usize,
    pub inputs: Vec<NamedValue>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(inputs: Vec<(&str, String)>, lhs: impl Display, rhs: impl Display) -> Counterexample {
        Counterexample {
            sample: 0,
            inputs: inputs.into_iter().map(|(n, v)| NamedValue { name: n.to_string(), value: v }).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one sampled property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    /// The identity being checked, in words.
    pub anchor: String,
    pub samples: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// For negative controls: the failure that was detected.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Counterexample>,
}

impl PropertyOutcome {
    pub fn pass(name: &str, anchor: &str, samples: usize) -> PropertyOutcome {
        PropertyOutcome {
            name: name.into(),
            anchor: anchor.into(),
            samples,
            passed: true,
            counterexample: None,
            witness: None,
        }
    }

    pub fn fail(name: &str, anchor: &str, samples: usize, cex: Counterexample) -> PropertyOutcome {
        PropertyOutcome {
            name: name.into(),
            anchor: anchor.into(),
            samples,
            passed: false,
            counterexample: Some(cex),
            witness: None,
        }
    }
}

/// Per-sample outcome.
pub type SampleResult = Result<(), Box<Counterexample>>;

/// Succeed when `lhs == rhs`, otherwise build a counterexample.
pub fn expect_eq<T: PartialEq + Display>(
    lhs: &T,
    rhs: &T,
    inputs: impl FnOnce() -> Vec<(&'static str, String)>,
) -> SampleResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Box::new(Counterexample::new(inputs(), lhs, rhs)))
    }
}

/// Stable 64-bit mixing of the run seed, a tag and an index.
pub fn derive_seed(seed: u64, tag: &str, index: usize) -> u64 {
    // FNV-1a over the tag, then splitmix64 finalisation.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    let mut z = h ^ seed.rotate_left(17) ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Random stream for sample `index` of property `tag`.
pub fn sample_rng(seed: u64, tag: &str, index: usize) -> SampleRng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag, index))
}

/// Run `samples` independent samples of a property in parallel and keep the
/// first failure by sample index.
pub fn check_property<F>(name: &str, anchor: &str, seed: u64, samples: usize, f: F) -> PropertyOutcome
where
    F: Fn(&mut SampleRng) -> SampleResult + Sync,
{
    let results: Vec<SampleResult> = (0..samples).into_par_iter().map(|i| f(&mut sample_rng(seed, name, i))).collect();
    match results.into_iter().enumerate().find_map(|(i, r)| r.err().map(|c| (i, c))) {
        None => PropertyOutcome::pass(name, anchor, samples),
        Some((i, mut c)) => {
            c.sample = i;
            PropertyOutcome::fail(name, anchor, samples, *c)
        }
    }
}

/// Wrap checks of a deliberately broken structure: the control passes when
/// at least one of the inner properties fails.
pub fn negative_control(name: &str, anchor: &str, inner: &[PropertyOutcome]) -> PropertyOutcome {
    let samples = inner.iter().map(|o| o.samples).sum();
    match inner.iter().find(|o| !o.passed) {
        Some(o) => {
            let mut out = PropertyOutcome::pass(name, anchor, samples);
            let mut w = o.counterexample.clone().expect("failures carry counterexamples");
            w.inputs.insert(0, NamedValue { name: "detected-by".into(), value: o.name.clone() });
            out.witness = Some(w);
            out
        }
        None => PropertyOutcome::fail(
            name,
            anchor,
            samples,
            Counterexample::new(
                vec![("checked", inner.iter().map(|o| o.name.clone()).collect::<Vec<_>>().join(", "))],
                "every inner property passed",
                "at least one inner property fails",
            ),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn seeds_are_stable_and_distinct() {
        assert_eq!(derive_seed(1, "a", 0), derive_seed(1, "a", 0));
        assert_ne!(derive_seed(1, "a", 0), derive_seed(1, "a", 1));
        assert_ne!(derive_seed(1, "a", 0), derive_seed(1, "b", 0));
        assert_ne!(derive_seed(1, "a", 0), derive_seed(2, "a", 0));
    }

    #[test]
    fn first_failure_is_reported() {
        let out = check_property("odd", "values are even", 7, 20, |rng| {
            let v: u32 = rng.gen_range(0..10);
            expect_eq(&(v % 2), &0, || vec![("v", v.to_string())])
        });
        assert!(!out.passed);
        let again = check_property("odd", "values are even", 7, 20, |rng| {
            let v: u32 = rng.gen_range(0..10);
            expect_eq(&(v % 2), &0, || vec![("v", v.to_string())])
        });
        assert_eq!(out, again);
    }

    #[test]
    fn negative_control_inverts() {
        let ok = PropertyOutcome::pass("p", "a", 1);
        assert!(!negative_control("n", "a", std::slice::from_ref(&ok)).passed);
        let bad = PropertyOutcome::fail("q", "a", 1, Counterexample::new(vec![], 1, 2));
        let n = negative_control("n", "a", &[ok, bad]);
        assert!(n.passed);
        assert_eq!(n.witness.unwrap().inputs[0].value, "q");
    }
}
