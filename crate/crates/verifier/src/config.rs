//! Line-oriented `key = value` configuration.
//!
//! Blank lines and lines starting with `#` are ignored. Errors carry the
//! 1-based line and column of the offending text.

use std::fmt;

use courant_core::courant::{CourantStructure, LieAlgebra};
use courant_core::symcore::{parse_form, Form, Rational, MAX_VARS};
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ConfigError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ConfigError { line, column, message: message.into() }
    }
}

/// Twist potential: a literal form or one drawn from the run seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Potential {
    Random,
    Literal(String),
}

/// Lie algebra of the quadratic family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraSpec {
    So3,
    /// Dimension and entries `(i, j, k, c)` meaning `[e_i, e_j]` has
    /// `e_k`-coefficient `c`; the skew partner is implied.
    Custom {
        dim: usize,
        entries: Vec<(usize, usize, usize, String)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GramSpec {
    Killing,
    Rows(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Family {
    Standard,
    Twisted { potential: Potential },
    Quadratic { algebra: AlgebraSpec, gram: GramSpec },
    Commutative,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Standard => "standard",
            Family::Twisted { .. } => "twisted",
            Family::Quadratic { .. } => "quadratic",
            Family::Commutative => "commutative",
        }
    }
}

/// A validated configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Dimension of the coordinate chart. The quadratic family lives on a
    /// point; there this only sizes the geometric suites.
    pub chart_dim: usize,
    pub courant_k: usize,
    pub family: Family,
    pub seed: u64,
    pub samples: usize,
    pub max_poly_degree: u32,
    /// Rank of the free module for the Atiyah suite.
    pub rank: usize,
    /// Empty selects every suite that applies to the family.
    pub suites: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            chart_dim: 2,
            courant_k: 1,
            family: Family::Standard,
            seed: 0,
            samples: 50,
            max_poly_degree: 2,
            rank: 2,
            suites: Vec::new(),
        }
    }
}

impl fmt::Display for SuiteConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "family={} n={} k={} seed={} samples={} degree<={}",
            self.family.name(),
            self.chart_dim,
            self.courant_k,
            self.seed,
            self.samples,
            self.max_poly_degree
        )
    }
}

/// Where a key's value sits in the source, for late validation errors.
#[derive(Debug, Clone, Copy, Default)]
struct Pos {
    line: usize,
    column: usize,
}

fn parse_number<T: std::str::FromStr>(v: &str, pos: Pos, what: &str) -> Result<T, ConfigError> {
    v.parse()
        .map_err(|_| ConfigError::at(pos.line, pos.column, format!("{what} must be a non-negative integer, got {v:?}")))
}

fn parse_rational(v: &str, line: usize, column: usize) -> Result<Rational, ConfigError> {
    v.parse::<Rational>().map_err(|_| ConfigError::at(line, column, format!("not a rational number: {v:?}")))
}

/// Split `src` on `sep`, yielding trimmed pieces with their column offsets.
fn pieces(src: &str, sep: char, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in src.split(sep) {
        let lead = part.len() - part.trim_start().len();
        out.push((base + start + lead, part.trim()));
        start += part.len() + sep.len_utf8();
    }
    out
}

pub fn parse_config(src: &str) -> Result<SuiteConfig, ConfigError> {
    let mut cfg = SuiteConfig::default();
    let mut family: Option<(String, Pos)> = None;
    let mut potential: Option<(String, Pos)> = None;
    let mut algebra: Option<(String, Pos)> = None;
    let mut lie_dim: Option<(usize, Pos)> = None;
    let mut structure: Option<(String, Pos)> = None;
    let mut gram: Option<(String, Pos)> = None;
    let mut k_pos: Option<Pos> = None;
    let mut n_pos = Pos::default();
    let mut samples_pos = Pos::default();
    let mut rank_pos = Pos::default();

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some(eq) = raw.find('=') else {
            return Err(ConfigError::at(line, raw.len() - trimmed.len() + 1, "expected `key = value`"));
        };
        let key = raw[..eq].trim();
        let after = &raw[eq + 1..];
        let value = after.trim();
        let pos = Pos { line, column: eq + 2 + (after.len() - after.trim_start().len()) };
        let key_col = raw.len() - trimmed.len() + 1;
        match key {
            "family" => family = Some((value.to_string(), pos)),
            "chart_dim" => {
                cfg.chart_dim = parse_number(value, pos, key)?;
                n_pos = pos;
            }
            "courant_k" => {
                cfg.courant_k = parse_number(value, pos, key)?;
                k_pos = Some(pos);
            }
            "seed" => cfg.seed = parse_number(value, pos, key)?,
            "samples" => {
                cfg.samples = parse_number(value, pos, key)?;
                samples_pos = pos;
            }
            "max_poly_degree" => cfg.max_poly_degree = parse_number(value, pos, key)?,
            "rank" => {
                cfg.rank = parse_number(value, pos, key)?;
                rank_pos = pos;
            }
            "potential" => potential = Some((value.to_string(), pos)),
            "lie_algebra" => algebra = Some((value.to_string(), pos)),
            "lie_dim" => lie_dim = Some((parse_number(value, pos, key)?, pos)),
            "structure" => structure = Some((value.to_string(), pos)),
            "gram" => gram = Some((value.to_string(), pos)),
            "suites" => {
                cfg.suites = pieces(value, ',', pos.column)
                    .into_iter()
                    .map(|(_, s)| s.to_string())
                    .filter(|s| !s.is_empty())
                    .collect();
            }
            _ => return Err(ConfigError::at(line, key_col, format!("unknown key {key:?}"))),
        }
    }

    if cfg.samples == 0 {
        return Err(ConfigError::at(samples_pos.line, samples_pos.column, "samples must be at least 1"));
    }
    if cfg.chart_dim == 0 || cfg.chart_dim > MAX_VARS {
        return Err(ConfigError::at(n_pos.line, n_pos.column, format!("chart_dim must be in 1..={MAX_VARS}")));
    }
    if !(1..=3).contains(&cfg.rank) {
        return Err(ConfigError::at(rank_pos.line, rank_pos.column, "rank must be in 1..=3"));
    }

    let (fname, fpos) = family.unwrap_or_else(|| ("standard".into(), Pos::default()));
    cfg.family = match fname.as_str() {
        "standard" => Family::Standard,
        "commutative" => Family::Commutative,
        "twisted" => {
            let (p, ppos) = potential
                .ok_or_else(|| ConfigError::at(fpos.line, fpos.column, "twisted family needs a `potential`"))?;
            if p == "random" {
                Family::Twisted { potential: Potential::Random }
            } else {
                let form = parse_form(cfg.chart_dim, &p).map_err(|e| located(e, ppos))?;
                if !form.is_of_degree(cfg.courant_k + 1) {
                    return Err(ConfigError::at(
                        ppos.line,
                        ppos.column,
                        format!("potential must be a {}-form, got degrees {:?}", cfg.courant_k + 1, form.degrees()),
                    ));
                }
                Family::Twisted { potential: Potential::Literal(form.to_string()) }
            }
        }
        "quadratic" => {
            if cfg.courant_k != 1 {
                let p = k_pos.unwrap_or_default();
                return Err(ConfigError::at(p.line, p.column, "the quadratic family has courant_k = 1"));
            }
            let algebra = match algebra {
                None => AlgebraSpec::So3,
                Some((a, _)) if a == "so3" => AlgebraSpec::So3,
                Some((a, apos)) if a == "custom" => {
                    let (dim, _) = lie_dim
                        .ok_or_else(|| ConfigError::at(apos.line, apos.column, "custom algebra needs `lie_dim`"))?;
                    let (s, spos) = structure
                        .ok_or_else(|| ConfigError::at(apos.line, apos.column, "custom algebra needs `structure`"))?;
                    AlgebraSpec::Custom { dim, entries: parse_structure(&s, spos, dim)? }
                }
                Some((a, apos)) => {
                    return Err(ConfigError::at(apos.line, apos.column, format!("unknown lie_algebra {a:?}")))
                }
            };
            let gram = match gram {
                None => GramSpec::Killing,
                Some((g, _)) if g == "killing" => GramSpec::Killing,
                Some((g, gpos)) => GramSpec::Rows(parse_rows(&g, gpos)?),
            };
            let cfg_family = Family::Quadratic { algebra, gram };
            build_quadratic(&cfg_family).map_err(|m| ConfigError::at(fpos.line, fpos.column, m))?;
            cfg_family
        }
        other => return Err(ConfigError::at(fpos.line, fpos.column, format!("unknown family {other:?}"))),
    };
    if !matches!(cfg.family, Family::Quadratic { .. }) && cfg.courant_k == 0 {
        let p = k_pos.unwrap_or_default();
        return Err(ConfigError::at(p.line, p.column, "courant_k must be at least 1"));
    }
    Ok(cfg)
}

fn located(e: courant_core::Error, pos: Pos) -> ConfigError {
    match e {
        courant_core::Error::Parse { column, message } => ConfigError::at(pos.line, pos.column + column - 1, message),
        other => ConfigError::at(pos.line, pos.column, other.to_string()),
    }
}

fn parse_structure(s: &str, pos: Pos, dim: usize) -> Result<Vec<(usize, usize, usize, String)>, ConfigError> {
    let mut out = Vec::new();
    for (col, entry) in pieces(s, ';', pos.column) {
        if entry.is_empty() {
            continue;
        }
        let fields = pieces(entry, ',', col);
        if fields.len() != 4 {
            return Err(ConfigError::at(pos.line, col, "structure entries are `i, j, k, value`"));
        }
        let mut idx = [0usize; 3];
        for (slot, (c, f)) in idx.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| ConfigError::at(pos.line, *c, format!("bad index {f:?}")))?;
            if *slot >= dim {
                return Err(ConfigError::at(pos.line, *c, format!("index {slot} out of range for lie_dim {dim}")));
            }
        }
        let (vc, v) = fields[3];
        parse_rational(v, pos.line, vc)?;
        out.push((idx[0], idx[1], idx[2], v.to_string()));
    }
    Ok(out)
}

fn parse_rows(s: &str, pos: Pos) -> Result<Vec<Vec<String>>, ConfigError> {
    let mut rows = Vec::new();
    for (col, row) in pieces(s, ';', pos.column) {
        let mut r = Vec::new();
        for (c, v) in pieces(row, ',', col) {
            parse_rational(v, pos.line, c)?;
            r.push(v.to_string());
        }
        rows.push(r);
    }
    Ok(rows)
}

/// The Lie algebra and Gram matrix of a quadratic family.
pub fn build_quadratic(family: &Family) -> Result<(LieAlgebra, Vec<Vec<Rational>>), String> {
    let Family::Quadratic { algebra, gram } = family else {
        return Err("not a quadratic family".into());
    };
    let g = match algebra {
        AlgebraSpec::So3 => LieAlgebra::so3(),
        AlgebraSpec::Custom { dim, entries } => {
            let mut c = vec![vec![vec![Rational::zero(); *dim]; *dim]; *dim];
            for (i, j, k, v) in entries {
                let v: Rational = v.parse().map_err(|_| format!("bad constant {v:?}"))?;
                c[*i][*j][*k] = v.clone();
                c[*j][*i][*k] = -v;
            }
            LieAlgebra::new("custom", c).map_err(|e| e.to_string())?
        }
    };
    let gm = match gram {
        GramSpec::Killing => g.killing_form(),
        GramSpec::Rows(rows) => {
            if rows.len() != g.dim() || rows.iter().any(|r| r.len() != g.dim()) {
                return Err(format!("gram must be a {0}x{0} matrix", g.dim()));
            }
            rows.iter().map(|r| r.iter().map(|v| v.parse().expect("validated")).collect()).collect()
        }
    };
    g.check_invariant_form(&gm).map_err(|e| e.to_string())?;
    Ok((g, gm))
}

/// The Courant structure a configuration describes. A random potential is
/// drawn from `seed`.
pub fn build_structure(cfg: &SuiteConfig) -> Result<CourantStructure, String> {
    let (n, k) = (cfg.chart_dim, cfg.courant_k);
    let q = match &cfg.family {
        Family::Standard => CourantStructure::standard(n, k),
        Family::Commutative => CourantStructure::commutative(n, k),
        Family::Twisted { potential } => {
            let b = match potential {
                Potential::Literal(s) => parse_form(n, s).map_err(|e| e.to_string())?,
                Potential::Random => random_potential(cfg),
            };
            CourantStructure::twisted(n, k, b)
        }
        Family::Quadratic { .. } => {
            let (g, gm) = build_quadratic(&cfg.family)?;
            CourantStructure::quadratic(g, gm)
        }
    };
    q.map_err(|e| e.to_string())
}

/// A nonzero `(k+1)`-form drawn from the run seed; zero on charts too
/// small to carry one.
pub fn random_potential(cfg: &SuiteConfig) -> Form {
    let s = courant_core::sample::Sampler::new(cfg.chart_dim, cfg.max_poly_degree);
    let mut rng = courant_core::check::sample_rng(cfg.seed, "potential", 0);
    s.form(cfg.courant_k + 1, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_when_empty() {
        assert_eq!(parse_config("# nothing\n\n").unwrap(), SuiteConfig::default());
    }

    #[test]
    fn twisted_literal_is_canonicalized() {
        let c = parse_config("family = twisted\nchart_dim = 3\npotential = y*x dz^dx\n").unwrap();
        assert_eq!(c.family, Family::Twisted { potential: Potential::Literal("-x*y dx^dz".into()) });
    }

    #[test]
    fn wrong_degree_potential_points_at_value() {
        let e = parse_config("family = twisted\npotential = x dy\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 13));
    }

    #[test]
    fn parse_error_column_is_absolute() {
        let e = parse_config("family = twisted\npotential = x dy^^dx\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.column > 13, "{e}");
    }

    #[test]
    fn unknown_key_is_reported() {
        let e = parse_config("seed = 1\n  colour = red\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }

    #[test]
    fn custom_algebra_round_trips() {
        let src = "family = quadratic\nlie_algebra = custom\nlie_dim = 3\n\
                   structure = 0,1,2,-1; 1,2,0,-1; 2,0,1,-1\ngram = -2,0,0; 0,-2,0; 0,0,-2\n";
        let c = parse_config(src).unwrap();
        let (g, _) = build_quadratic(&c.family).unwrap();
        assert_eq!(g.dim(), 3);
    }

    #[test]
    fn non_invariant_gram_is_rejected() {
        assert!(parse_config("family = quadratic\ngram = 1,0,0; 0,2,0; 0,0,3\n").is_err());
    }
}
