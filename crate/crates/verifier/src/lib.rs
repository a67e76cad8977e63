//! Batch driver: reads a configuration, builds the Courant structure it
//! describes and runs the selected property suites.

pub mod config;
pub mod report;
pub mod suites;

use thiserror::Error;

use config::SuiteConfig;
use report::{SuiteReport, VerificationReport};
use suites::{Context, Suite, SUITES};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("unknown suite {0:?}; see --list-suites")]
    UnknownSuite(String),
    #[error("suite {suite:?} does not apply to the {family} family")]
    Inapplicable { suite: String, family: &'static str },
    #[error("cannot build the structure: {0}")]
    Structure(String),
}

/// The suites a configuration selects, in registry order.
pub fn select(cfg: &SuiteConfig) -> Result<Vec<&'static Suite>, RunError> {
    if cfg.suites.is_empty() {
        return Ok(SUITES.iter().filter(|s| s.applies.accepts(&cfg.family)).collect());
    }
    let mut out = Vec::new();
    for id in &cfg.suites {
        let s = suites::find(id).ok_or_else(|| RunError::UnknownSuite(id.clone()))?;
        if !s.applies.accepts(&cfg.family) {
            return Err(RunError::Inapplicable { suite: id.clone(), family: cfg.family.name() });
        }
        if !out.iter().any(|t: &&Suite| t.id == s.id) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| SUITES.iter().position(|t| t.id == s.id));
    Ok(out)
}

pub fn run(cfg: &SuiteConfig) -> Result<VerificationReport, RunError> {
    let chosen = select(cfg)?;
    let courant = config::build_structure(cfg).map_err(RunError::Structure)?;
    let structure = courant.family_name().to_string();
    let splitting = courant.splitting();
    let ctx = Context { config: cfg, courant };
    let suites: Vec<SuiteReport> = chosen
        .into_iter()
        .map(|s| {
            let properties = (s.run)(&ctx);
            SuiteReport {
                id: s.id.to_string(),
                module: s.module.to_string(),
                structure: structure.clone(),
                splitting: splitting.clone(),
                passed: properties.iter().all(|p| p.passed),
                properties,
            }
        })
        .collect();
    Ok(VerificationReport::new(cfg.clone(), suites))
}
