//! Exact-arithmetic construction and verification of BiHom algebras,
//! their bimodules, matched pairs and O-operators.
//!
//! Everything is finite dimensional over the rationals and described by
//! structure constants. Every identity check is exhaustive over basis
//! tuples and reports exact residuals.

pub mod algebra;
pub mod check;
pub mod constructions;
pub mod error;
pub mod identity;
pub mod io;
pub mod linalg;
pub mod matched;
pub mod modules;
pub mod ooperator;
pub mod seeds;

pub use error::{Error, Result};
