//! Approximate coloring of 3-colorable graphs without long induced paths.
//!
//! Given a graph and a path length `t`, [`driver::approx_color`] returns a
//! proper coloring whose size depends only on `t` (when the graph is
//! 3-colorable and has no induced `P_t`), an induced `P_t`, or a checkable
//! certificate that the graph is not 3-colorable.

pub mod certificate;
pub mod closure;
pub mod driver;
pub mod finish;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod report;
pub mod seed;
pub mod start;
pub mod twosat;

pub use certificate::Refutation;
pub use driver::{approx_color, bound, DriverResult, RootPolicy};
pub use graph::{Coloring, Graph, PathWitness, TriangleWitness};
