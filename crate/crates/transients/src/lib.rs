//! Transient algebra for gate circuits.
//!
//! Binary signals that change over time are modelled as *transients*:
//! alternating 0/1 words recording a start value and a number of
//! changes. Extending a Boolean function to transient inputs — the
//! worst-case output waveform over all interleavings of the input
//! changes — makes hazards of a combinational circuit computable by
//! simulation in this algebra.
//!
//! The crate provides:
//! - the algebra itself ([`transient`]): contraction, composition,
//!   prefix order, transient vectors;
//! - Boolean function machinery ([`boolfn`]): packed truth tables, NPN
//!   classification, and decomposition over complemented OR/XOR;
//! - three evaluation routes for extensions ([`digraph`]): brute-force
//!   path enumeration, a shortest-path dynamic program over the prefix
//!   digraph, and closed formulas where they apply;
//! - the hypercube view ([`cube`]): walks, live edges, foci, and the
//!   walk/path correspondence;
//! - a semi-decision procedure for *convenient* functions
//!   ([`convenience`]): those whose cost depends only on the
//!   characteristic vector of the input;
//! - netlist-level hazard analysis ([`circuit`]).
//!
//! Runnable examples under `examples/` demonstrate each capability; the
//! `transients` binary exposes the same operations as subcommands.

pub mod boolfn;
pub mod circuit;
pub mod cli;
pub mod convenience;
pub mod cube;
pub mod digraph;
pub mod error;
pub mod expr;
pub mod transient;

pub use boolfn::TruthTable;
pub use circuit::{classify, HazardClass, Netlist};
pub use convenience::{decide_convenience, ConvenienceReport, ConvenienceVerdict};
pub use cube::{FunctionCube, Walk};
pub use digraph::{extension_bruteforce, extension_dp, EvalBudget};
pub use error::{Error, Result};
pub use expr::parse_function;
pub use transient::{Transient, TransientVector};
