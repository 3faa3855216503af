use std::fmt;
use std::str::FromStr;

use crate::buchberger::{strong_buchberger, GroebnerBasis};
use crate::error::{Error, Result};
use crate::ideal::GeneratorSet;
use crate::split_lift::{naive_strong_gb, strong_gb_over_zn, strong_gb_over_zn_parallel};

/// The three ways of computing a strong basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    /// Field-style computation with modulus splitting.
    #[default]
    Split,
    /// Trial factorization into prime powers, then recombination.
    Naive,
    /// Full ring Buchberger directly over `Z/nZ`.
    Classic,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Split, Engine::Naive, Engine::Classic];

    pub fn name(&self) -> &'static str {
        match self {
            Engine::Split => "split",
            Engine::Naive => "naive",
            Engine::Classic => "classic",
        }
    }

    pub fn run(&self, gens: &GeneratorSet) -> Result<GroebnerBasis> {
        match self {
            Engine::Split => Ok(strong_gb_over_zn(gens)?.0),
            Engine::Naive => naive_strong_gb(gens),
            Engine::Classic => Ok(strong_buchberger(gens)),
        }
    }

    /// As [`Engine::run`]; the splitting engine runs branches on threads.
    pub fn run_parallel(&self, gens: &GeneratorSet) -> Result<GroebnerBasis> {
        match self {
            Engine::Split => Ok(strong_gb_over_zn_parallel(gens)?.0),
            other => other.run(gens),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Engine::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown engine '{s}'")))
    }
}
