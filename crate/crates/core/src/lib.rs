//! Exact computations around typical separating invariants: Helly dimension
//! and subgroup-lattice statistics of finite groups, orbit separation for
//! finite group actions, monomial invariants of tori, and root-multiplicity
//! predicates for binary forms.

pub mod binary;
pub mod bitset;
pub mod cache;
pub mod error;
pub mod finite_field;
pub mod group;
pub mod helly;
pub mod lattice;
pub mod orbit;
pub mod poly;
pub mod quaternion;
pub mod torus;
pub mod zoo;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use group::{Elem, GroupSpec, GroupTable, PolyhedralTag, Provenance};
pub use helly::{coset_intersection, kappa_exact, kappa_oracle, Coset, HellyWitness, KappaResult};
pub use lattice::{enumerate_subgroups, SubgroupId, SubgroupLattice};
