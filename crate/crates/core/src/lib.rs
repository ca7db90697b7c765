//! Verification workbench for monotone determined spaces.
//!
//! Everything a finite T0 space can say about the order-theoretic topology it
//! carries — specialization, directed-set convergence, the d-way-below
//! relation, approximation operators, one-step closure, ideal convergence in
//! six modes, and the induced convergence topologies — computed exactly from
//! the definitions and cross-checked against the closed forms the theory
//! predicts. A witness catalogue of finitely-presented countable spaces
//! covers the distinctions no finite space can exhibit.

pub mod classify;
pub mod closure;
mod ctx;
pub mod dsl;
pub mod enumerate;
pub mod ideal;
pub mod maps;
pub mod point_set;
pub mod poset;
pub mod report;
pub mod rudin;
pub mod space;
pub mod suites;
pub mod waybelow;
pub mod witness;

pub use classify::{classify, Classification};
pub use closure::{closure_suite, ClosureSuite};
pub use point_set::PointSet;
pub use poset::FinitePoset;
pub use report::{Counterexample, Format, Report, SuiteReport};
pub use space::FiniteSpace;
