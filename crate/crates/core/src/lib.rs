//! Concrete Tits buildings at desk scale.

pub mod arrangement;
pub mod artifact;
pub mod bruhat;
pub mod building;
pub mod chamber;
pub mod complex;
pub mod coxeter;
pub mod error;
pub mod ff;
pub mod flag;
pub mod graph;
pub mod permutation;
pub mod report;
pub mod symplectic;
pub mod tree;

pub use building::{ApartmentEmbedding, WMetricBuilding};
pub use chamber::{ChamberSystem, Gallery, SimplicialComplex};
pub use complex::CoxeterComplex;
pub use coxeter::{CoxeterElement, CoxeterMatrix, CoxeterSystem, Word};
pub use error::{Error, Result};
pub use ff::{FpMatrix, FpScalar, Subspace};
pub use permutation::Permutation;
pub use report::Report;
