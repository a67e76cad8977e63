//! Registry of property suites. Each suite checks the properties of one
//! module on the structure a configuration describes.

mod algebroid;
mod calculus;
mod courant;
mod tau;

use courant_core::check::PropertyOutcome;
use courant_core::courant::CourantStructure;
use courant_core::sample::Sampler;

use crate::config::{Family, SuiteConfig};

/// What a suite runs against.
pub struct Context<'a> {
    pub config: &'a SuiteConfig,
    pub courant: CourantStructure,
}

impl Context<'_> {
    pub fn seed(&self) -> u64 {
        self.config.seed
    }

    pub fn samples(&self) -> usize {
        self.config.samples
    }

    pub fn degree(&self) -> u32 {
        self.config.max_poly_degree
    }

    /// Sampler on the configured chart.
    pub fn sampler(&self) -> Sampler {
        Sampler::new(self.config.chart_dim, self.config.max_poly_degree)
    }
}

/// Which families a suite runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Applies {
    Any,
    Exact,
    Quadratic,
}

impl Applies {
    pub fn accepts(self, f: &Family) -> bool {
        match self {
            Applies::Any => true,
            Applies::Exact => matches!(f, Family::Standard | Family::Twisted { .. }),
            Applies::Quadratic => matches!(f, Family::Quadratic { .. }),
        }
    }
}

pub type SuiteFn = fn(&Context) -> Vec<PropertyOutcome>;

pub struct Suite {
    pub id: &'static str,
    /// Module whose properties the suite checks.
    pub module: &'static str,
    pub summary: &'static str,
    pub applies: Applies,
    pub run: SuiteFn,
}

pub const SUITES: &[Suite] = &[
    Suite {
        id: "cartan",
        module: "symcore",
        summary: "d² = 0, Cartan identities and text round trip",
        applies: Applies::Any,
        run: calculus::cartan,
    },
    Suite {
        id: "oddpath",
        module: "oddpath",
        summary: "ev* is a DGA morphism, integration and normalization",
        applies: Applies::Any,
        run: calculus::oddpath,
    },
    Suite {
        id: "sharp",
        module: "liealgebroid",
        summary: "the derived algebroid A♯ is well defined and a Lie algebroid",
        applies: Applies::Any,
        run: algebroid::sharp,
    },
    Suite {
        id: "atiyah",
        module: "liealgebroid",
        summary: "lifted Atiyah operators form a Lie algebra action",
        applies: Applies::Any,
        run: algebroid::atiyah,
    },
    Suite {
        id: "marked-negative",
        module: "liealgebroid",
        summary: "negative control: a non-central marking is detected",
        applies: Applies::Any,
        run: algebroid::marked_negative,
    },
    Suite {
        id: "courant-axioms",
        module: "courant",
        summary: "the Courant axioms on the configured structure",
        applies: Applies::Any,
        run: courant::axioms,
    },
    Suite {
        id: "courant-negative",
        module: "courant",
        summary: "negative control: a non-closed twist is detected",
        applies: Applies::Any,
        run: courant::negative,
    },
    Suite {
        id: "connection",
        module: "courant",
        summary: "isotropic splittings, curvature and the torsor action",
        applies: Applies::Exact,
        run: courant::connection,
    },
    Suite {
        id: "morphism",
        module: "courant",
        summary: "re-splitting morphisms preserve the structure",
        applies: Applies::Exact,
        run: courant::morphism,
    },
    Suite {
        id: "tau-ideal",
        module: "transgression",
        summary: "normal form and independence of representatives",
        applies: Applies::Any,
        run: tau::ideal,
    },
    Suite {
        id: "tau-skew",
        module: "transgression",
        summary: "graded skew-symmetry of the τQ bracket",
        applies: Applies::Any,
        run: tau::skew,
    },
    Suite {
        id: "tau-jacobi",
        module: "transgression",
        summary: "graded Jacobi identity of the τQ bracket",
        applies: Applies::Any,
        run: tau::jacobi,
    },
    Suite {
        id: "tau-leibniz",
        module: "transgression",
        summary: "Leibniz rule of the τQ bracket",
        applies: Applies::Any,
        run: tau::leibniz,
    },
    Suite {
        id: "tau-diff",
        module: "transgression",
        summary: "the differential squares to zero and derives the bracket",
        applies: Applies::Any,
        run: tau::diff,
    },
    Suite {
        id: "tau-anchor",
        module: "transgression",
        summary: "the anchor of τQ is a bracket morphism",
        applies: Applies::Any,
        run: tau::anchor,
    },
    Suite {
        id: "marking",
        module: "transgression",
        summary: "the marking is central, anchor-free and low degrees are forms",
        applies: Applies::Any,
        run: tau::marking,
    },
    Suite {
        id: "ctl",
        module: "transgression",
        summary: "Courant-to-Lie squares, pullback and universal extension",
        applies: Applies::Any,
        run: tau::ctl,
    },
    Suite {
        id: "roundtrip",
        module: "transgression",
        summary: "the derived Courant structure of τQ is Q",
        applies: Applies::Any,
        run: tau::roundtrip,
    },
    Suite {
        id: "quadratic-model",
        module: "transgression",
        summary: "τg matches the explicit ℂ[2] ⊕ g[1] ⊕ g model",
        applies: Applies::Quadratic,
        run: tau::quadratic_model,
    },
];

pub fn find(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id)
}
