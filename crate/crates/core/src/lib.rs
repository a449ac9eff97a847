//! Exact structure-constant computations for finite-dimensional Leibniz and
//! ternary Leibniz algebras.
//!
//! Everything is expressed in coordinates over a fixed basis and evaluated
//! with exact rational arithmetic, so every identity check is a finite,
//! complete computation over basis tuples.
//!
//! Layout:
//! - [`scalar`], [`poly`], [`tensor`], [`matrix`], [`linalg`]: exact numeric layer.
//! - [`algebra`]: binary/ternary algebras, their identity checkers and constructions.
//! - [`catalog`]: named small algebras and random valid-instance generators.
//! - [`operators`]: operator identities (Rota-Baxter, Nijenhuis, averaging, ...).
//! - [`modrep`]: bimodules, representations, cocycles, semidirect products, O-operators.
//! - [`deform`]: one-parameter infinitesimal deformations and Nijenhuis pairs.

pub mod algebra;
pub mod catalog;
pub mod deform;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod modrep;
pub mod operators;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::PolyScalar;
pub use report::{CheckReport, Verdict, Violation};
pub use scalar::Scalar;
pub use tensor::Tensor;
