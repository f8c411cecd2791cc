//! Exact computations for schemes of associative algebras at desk scale.
//!
//! Everything works over the rationals with structure-constant algebras:
//! radicals and Wedderburn blocks, simple modules and `Ext^1`, order-by-order
//! hulls of families of simple modules, their endomorphism completions and
//! local-function rings, the `aSpec` topology, and the structure presheaf
//! with its sheafifications and stalks.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod completion;
pub mod error;
pub mod fixtures;
pub mod hull;
pub mod json;
pub mod linalg;
pub mod module;
pub mod pointed;
pub mod poly;
pub mod scalar;
pub mod sheaf;
pub mod topology;
pub mod verify;

pub use algebra::{Algebra, AlgebraMorphism, Ideal};
pub use completion::{EndoCompletion, LocalFunctionRing};
pub use error::{AspecError, Result};
pub use fixtures::FixtureCatalog;
pub use hull::{DeformationMap, MatricPresentation};
pub use linalg::{Matrix, Subspace, Vector};
pub use module::ModuleRep;
pub use pointed::{AugmentedAlgebra, TruncationTower};
pub use poly::{Polynomial, Presentation};
pub use scalar::Scalar;
pub use sheaf::{PresheafData, SheafData, Variant};
pub use topology::{FiniteTopology, PointSet};
pub use verify::VerificationReport;
