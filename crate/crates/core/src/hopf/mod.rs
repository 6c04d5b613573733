//! Hopf superalgebras from structure tables; exterior algebras and their
//! automorphisms.

pub mod algebra;
pub mod automorphism;
pub mod element;
pub mod exterior;
pub mod group_algebra;

pub use algebra::{super_permutation_sign, AxiomCheck, AxiomReport, HopfSuperAlgebra};
pub use automorphism::{r_of, HopfAutomorphism};
pub use element::{Element, Tensor};
pub use exterior::{exterior_algebra, integral_scales_by_det, lambda_extend, twist_by_homology};
pub use group_algebra::cyclic_group_algebra;
