//! Exact graphical r-cycle polynomials: graphs, polynomials, a brute-force
//! oracle, a subset-DP engine, a registry of closed-form claims, and
//! moment/shape statistics.

pub mod corpus;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod roots;
pub mod stats;

pub use error::{Error, Result};
pub use graph::{Family, FamilySpec, LabeledGraph};
pub use poly::{CyclePolynomial, Rational};
