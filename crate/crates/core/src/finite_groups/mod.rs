//! Exact finite groups: multiplication tables, unit-quaternion closures,
//! coset enumeration, and structural checks.

mod coset;
mod iso;
mod models;
mod quaternion;
mod structure;
mod subgroups;
mod table;

use thiserror::Error;

pub use coset::{coset_enumerate, Presentation, DEFAULT_MAX_COSETS};
pub use iso::{isomorphism_type, IsoType};
pub use models::{
    binary_polyhedral_generators, coset_model, find_triangle_generators, quaternion_model, rotation_quaternion,
    GroupName, QuaternionModel, QUATERNION_CLOSURE_CAP,
};
pub use quaternion::{position, quaternion_closure, Quaternion};
pub use structure::{
    center, conjugacy_classes, involutions, p2_condition, structure_checks, two_p_condition, StructureReport,
};
pub use subgroups::{all_subgroups, covering_pairs, is_normal, lattice_dot, subgroup_classes, Subgroup};
pub use table::{all_permutations, is_even_permutation, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("invalid presentation: {0}")]
    BadPresentation(String),
    #[error("coset table did not close within {max} cosets")]
    CosetLimitExceeded { max: usize },
    #[error("quaternion closure exceeded {cap} elements")]
    ClosureExplosion { cap: usize },
    #[error("generator {0} is not a unit quaternion")]
    NotUnit(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
}
