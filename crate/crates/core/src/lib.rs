//! Spectral and Turán-type extremal computations for graphs without an odd
//! wheel `W_{2k+1}` (a hub joined to every vertex of a cycle `C_{2k}`).
//!
//! The crate is `no_std` with `alloc`. It provides:
//!
//! * [`graph`]: bitset graphs, joins, unions, induced subgraphs, triangle
//!   counting and exact max-cut, plus [`graph6`] serialization;
//! * [`detect`]: exact cycle, path, star and odd-wheel detection with verified
//!   witnesses;
//! * [`spectral`]: certified spectral radius, quotient matrices and the cubic
//!   characteristic polynomials of the extremal candidates;
//! * [`constructions`]: the extremal and near-extremal graph families;
//! * [`bounds`]: closed-form Turán numbers and executable inequalities;
//! * [`search`]: exhaustive small-`n` oracles and spectral local search.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod detect;
pub mod graph;
pub mod graph6;
pub mod half;
pub mod search;
pub mod spectral;

/// Exact rational used for quotient-matrix and polynomial arithmetic.
pub type Rational = num_rational::Ratio<i128>;

pub use graph::{Cut, Graph, GraphError};
pub use half::HalfInt;
