//! Exact-arithmetic calculus for almost iota-complexes over F₂[U].
//!
//! An almost iota-complex is a finitely generated free graded chain complex
//! over F₂[U] (deg U = −2) with rank-one localized homology, carrying a
//! grading-preserving endomorphism ω = 1 + ῑ that commutes with the
//! differential and squares to zero only modulo U. Up to local equivalence
//! these complexes form a totally ordered abelian group; every class is
//! represented by a unique *standard complex* described by a finite symbol
//! sequence.
//!
//! This crate computes that representative for any input complex, decides
//! the total order, and evaluates the integer homomorphisms: the signed
//! tower counts `phi_n`, the shift maps `sh_n`, and the pivot `P`.

pub mod catalog;
pub mod complexes;
pub mod error;
pub mod fu;
pub mod gf2;
pub mod morphisms;
pub mod representative;
pub mod schema;
pub mod standard;

pub use complexes::AlmostIotaComplex;
pub use error::{Error, Result};
pub use fu::{Element, GradedBasis, Generator, ModuleMap};
pub use morphisms::{Morphism, ShortMapKind};
pub use representative::RepresentativeTrace;
pub use standard::{AugmentedParams, StandardParams};
