//! Degree-weighted lower bounds on the independence number of subcubic graphs.
//!
//! The crate evaluates inequalities of the form
//! `alpha(G) >= c1*|V1| + c2*|V2| + c3*|V3| - d` in exact rational arithmetic,
//! generates the graph families on which they are tight, extracts
//! certificate-producing algorithms from their inductive proofs, and sweeps
//! exhaustively enumerated connected subcubic graphs to check, census and audit
//! every claim.
//!
//! Runnable walkthroughs live in `examples/`; the `subcubic` binary exposes the
//! same functionality on the command line.

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod constructive;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod report;

pub use graph::{Graph, GraphError, GraphOptions};
pub use rational::{q, Rational};
