//! Exact computation of dynamical Lie algebras generated by QAOA-MaxCut
//! mixers and cost Hamiltonians, with closed forms for cycle and complete
//! graphs.

pub mod closure;
pub mod complete;
pub mod cycle;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod pauli;
pub mod purity;
pub mod suite;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use pauli::{Pauli, PauliString, PauliType, PauliVector};
