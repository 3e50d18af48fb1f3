//! Decision procedures for finite soft generalized topological spaces.
//!
//! The crate builds finite soft generalized topologies over an explicit
//! universe and parameter set, computes interior/closure operators and
//! regular sets, decides near-compactness questions by exact search,
//! projects soft spaces to per-parameter classical generalized topologies,
//! constructs trace subspaces, and certifies unbounded minimal-subcover
//! growth over truncation families.
//!
//! Everything is exact: soft sets are per-parameter bit vectors, families
//! are kept in canonical order, and all searches are deterministic.

pub mod cover;
pub mod error;
pub mod gt;
pub mod laws;
pub mod search;
pub mod sgt;
pub mod soft;
pub mod witness;

pub use cover::{
    fip_check, is_soft_n_mu_compact_finite, validate_cover, CompactnessReport, CoverReport,
    FipReport, SoftCover,
};
pub use error::{Error, Result};
pub use gt::{GtSpace, SetFamily};
pub use sgt::{SoftBasis, SoftSpace};
pub use soft::{Frame, ParamSet, PointSet, SoftSet, Universe};
pub use witness::{
    builtin_families, growth_certificate, lookup_family, FamilyInstance, GrowthCertificate,
    GrowthFamily,
};
