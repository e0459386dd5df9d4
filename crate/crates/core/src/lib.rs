//! Exact computations on the boundary of the moduli space of stable
//! hyperelliptic curves.
//!
//! The crate computes, in exact rational arithmetic throughout:
//!
//! * intersection numbers of boundary divisor classes with vital curves, and
//!   exhaustive nef/extremal-ray scans ([`divisors`]);
//! * the wall-and-chamber structure of the log minimal model program for
//!   these moduli: wall coefficients, critical parameter values, discrepancy
//!   classes, and the correspondence between the log-canonical parameter and
//!   the Hilbert-point degree ([`walls`]);
//! * Hilbert–Mumford stability indices of bicanonical curves with cuspidal
//!   tails and nodal bridges, validated against a brute-force
//!   standard-monomial oracle ([`hilbert`]).
//!
//! There is no floating-point arithmetic anywhere; every value is an
//! arbitrary-precision rational, polynomial, or rational function over the
//! rationals ([`rat`], [`poly`], [`ratfunc`]).

pub mod divisors;
mod error;
pub mod hilbert;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod walls;

pub use error::Error;
pub use rat::{parse_rat, rat, rat_int, Rat};

pub type Result<T> = std::result::Result<T, Error>;
