//! Recognition and editing of unit interval graphs.
//!
//! A graph is a unit interval graph exactly when it contains no claw, no
//! tent (`S3`), no net (`S3`-complement), and no hole. This crate decides
//! membership with certificates (a proper interval model on YES, a forbidden
//! induced subgraph on NO) and solves the associated modification problems:
//! vertex deletion, edge deletion, and mixed editing under componentwise
//! budgets. The workhorses are proper Helly circular-arc models: point
//! cliques and directed cuts of such a model characterize the optimal
//! deletions, so the solvers reduce to linear scans over the `2n` probe
//! points of a canonical model, with bounded search trees on top to dispose
//! of the finite obstructions.
//!
//! Module map:
//! - [`graph`]: adjacency-set graphs, chordality with certificates, twin
//!   classes, connectivity.
//! - [`arc`]: circular-arc and interval models, canonicalization, point
//!   cliques, directed cuts, model verification.
//! - [`recognition`]: certifying recognition of proper Helly circular-arc
//!   graphs, the claw/tent/net/C4-free trichotomy, unit interval membership.
//! - [`holes`]: shortest holes on arc models, minimal circle covers.
//! - [`solvers`]: exact scan solvers on models plus the fat-W5 closed forms.
//! - [`fpt`]: bounded search trees for vertex deletion, edge deletion and
//!   general editing; the factor-6 approximation.
//! - [`oracle`]: brute-force ground truth and instance generators for tests.

pub mod arc;
pub mod error;
pub mod fpt;
pub mod graph;
pub mod holes;
pub mod oracle;
pub mod recognition;
pub mod solvers;

mod construct;
mod forbidden;
mod sweep;

pub use error::{Error, Result};
