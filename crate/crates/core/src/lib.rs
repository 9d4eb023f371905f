//! Graphical major indices and inversion numbers on words over `[r]`.
//!
//! A relation `U` on the alphabet gives `inv'_U` (pairs `i < j` with
//! `x_i U x_j`) and `maj'_U` (positions `i` with `x_i U x_{i+1}`, weighted by
//! `i`). Sums `maj'_U + inv'_V` are maj-inv statistics. This crate evaluates
//! them, computes their distributions over rearrangement classes, implements
//! the generalized second fundamental transformation, and verifies the
//! equidistribution and classification results exhaustively for small `r`.

pub mod cli;
pub mod error;
pub mod mahonian;
pub mod qseries;
pub mod relations;
pub mod statistics;
pub mod transform;
pub mod words;

pub use error::{Error, Result};
pub use qseries::{distribution, q_factorial, q_multinomial, QPolynomial};
pub use relations::{Bipartition, GMap, Relation, SetAlphabet, Threshold};
pub use statistics::{MajInvStatistic, StatSpec};
pub use words::{Alphabet, Composition, Letter, Word};
