//! Exact computations around the infinitesimal period map of plane curves
//! and complete intersections.
//!
//! The core is exact linear algebra over the rationals and prime fields
//! ([`linalg`]), homogeneous polynomials and graded slices ([`poly`]), the
//! Jacobian ring with cached ideal slices ([`jacobian`]), conditions
//! imposed by singular points ([`singularities`]) and the period-map kernel
//! against the trivial deformations ([`torelli`]). The [`cli`] module drives
//! all of these from TOML configuration files.

pub mod cli;
pub mod error;
pub mod field;
pub mod generate;
pub mod jacobian;
pub mod linalg;
pub mod poly;
pub mod singularities;
pub mod torelli;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use jacobian::{JacobianModel, PolySystem, SlpReport, SocleReport};
pub use linalg::Matrix;
pub use poly::{GradedSubspace, HomogeneousPoly, Monomial};
pub use singularities::{SingType, SingularPoint, WeightedScheme};
pub use torelli::{Domain, TorelliReport, Verdict};
