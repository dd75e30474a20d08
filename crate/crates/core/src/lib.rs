//! Exact rational computations with Lie algebras given by structure
//! constants: iterated brackets and their values, very nilpotent bases,
//! sl2-triples and gradings, and common Borel / nilradical membership of
//! tuples.

pub mod borel;
pub mod bracket;
pub mod cli;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod sample;
pub mod semisimple;

pub use error::{Error, Result};
