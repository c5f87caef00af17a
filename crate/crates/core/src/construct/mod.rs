//! Fixture constructors, perturbations and the ansatz search.

pub mod algebras;
pub mod fixtures;
pub mod search;

pub use fixtures::{identity_orbit_pairs, lr_pair, perturb, zero_pair, Fixture, MapSelector};
pub use search::{ansatz_search, AnsatzSpace, SearchDiagnostics, SearchOptions, SearchResult, Solution, Strategy};
