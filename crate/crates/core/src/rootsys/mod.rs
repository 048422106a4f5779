//! Root systems, Weyl groups, equal-rank subsystems and minimal coset
//! representatives.

mod cartan;
mod system;
mod weyl;

pub use cartan::{CartanType, Series, SimpleType};
pub use system::{Limits, RootSubsystem, RootSystem, WeylSystem};
pub(crate) use system::{system_key, weyl_orbit};
pub(crate) use weyl::dominant_weight;
pub use weyl::{coset_representatives, dominant_conjugate, enumerate_weyl, WeylElement};

/// Builds a root system with default limits.
pub fn build_root_system(cartan_type: &CartanType) -> crate::Result<RootSystem> {
    RootSystem::new(cartan_type)
}

/// Validates subsystem simple roots given in simple-root coordinates of `rs`.
pub fn validate_subsystem(rs: &RootSystem, simple_roots: &[Vec<i64>]) -> crate::Result<RootSubsystem> {
    RootSubsystem::validate(rs, simple_roots)
}
