//! Greedy regular convolutions of arithmetical functions.
//!
//! * [`greedy`] builds the greedy partition of the positive integers into
//!   arithmetic progressions of bounded length and answers
//!   primitivity, rank, height and type queries; [`matrix`] is an
//!   independent column-sieve construction of the same partition.
//! * [`sift`] implements selective sifting and closed-form membership
//!   oracles for it.
//! * [`ring`] is the truncated function ring under a homogeneous regular
//!   convolution: divisor sets, convolution, Möbius inversion and an
//!   axiom checker.
//! * [`density`] gives exact valuation-class densities and empirical
//!   estimates.
//! * [`experiments`], [`tables`] and [`bfile`] reproduce the published
//!   tables and computations; [`suite`] runs the acceptance checks.

pub mod arith;
pub mod bfile;
pub mod density;
pub mod error;
pub mod experiments;
pub mod greedy;
pub mod matrix;
pub mod reference;
pub mod ring;
pub mod sift;
pub mod suite;
pub mod tables;

pub use error::{Error, Result};
pub use greedy::{GreedyTable, Part, RankReport};
pub use ring::{ArithFn, Convolution, ConvolutionRule};
pub use sift::{ssift, SiftResult};
