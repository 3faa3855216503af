//! Strong Gröbner bases over `Z/nZ`.
//!
//! The main entry point is [`strong_gb_over_zn`], which runs a field-style
//! Buchberger and splits the modulus whenever a lead coefficient turns out
//! to be a zero divisor. [`naive_strong_gb`] and [`strong_buchberger`] are
//! the alternatives it is compared against, and [`verify`] holds an
//! independent linear-algebra check.

pub mod bench;
pub mod buchberger;
pub mod engine;
pub mod error;
pub mod ideal;
pub mod pairs;
pub mod parse;
pub mod polynomial;
pub mod reduction;
pub mod residue;
pub mod split_lift;
pub mod verify;

pub use buchberger::{field_mode, strong_buchberger, FieldModeOutcome, GroebnerBasis};
pub use engine::Engine;
pub use error::{Error, Result};
pub use ideal::GeneratorSet;
pub use parse::{parse_ideal_file, parse_polynomial, read_ideal_file, IdealFile};
pub use polynomial::{Monomial, MonomialOrder, Polynomial, Term};
pub use residue::{ResidueElement, ResidueRing};
pub use split_lift::{naive_strong_gb, strong_gb_over_zn, strong_gb_over_zn_parallel, SplitTree};
