//! Exact q-series arithmetic and Virasoro minimal-model data.
//!
//! The crate is organised bottom-up:
//!
//! - [`qseries`]: truncated q-expansions with a rational leading exponent and
//!   exact rational coefficients, Euler products, partition numbers and powers
//!   of the Dedekind eta function.
//! - [`minimal_models`]: central charges `c_{p,q}`, Kac tables, effective
//!   central charges and the recognizer for rational central charges.
//! - [`characters`]: Virasoro characters, the modular S-matrix and numerical
//!   checks of the S-transformation.
//! - [`growth`]: polynomial versus superpolynomial coefficient growth.
//! - [`extensions`]: the extension scanner and the classification verdict for
//!   rational vertex operator algebras with `c = c̃ < 1`.
//! - [`cli`]: the `qvir` command-line front end.
//!
//! With the default `parallel` feature the data-parallel loops (series
//! products, per-label character construction, sweeps) run on rayon; without
//! it the same code runs sequentially.

pub mod characters;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod growth;
pub mod minimal_models;
pub mod par;
pub mod qseries;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
