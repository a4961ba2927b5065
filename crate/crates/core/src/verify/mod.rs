//! Induced-structure enumeration and the theorem checks built on it.

mod checks;
mod induced;
pub mod report;

pub use checks::{
    check_cycle_bound, check_diameter_bound, check_divisibility, check_p5_forbidden,
    check_pair_properties, check_path_structure, check_simple_edge_positions, diameter_bound_for,
    diameter_summary, recheck, verify_all, verify_with, VerifyOptions,
};
pub use induced::{enumerate_induced_cycles, enumerate_induced_paths, InducedCycle, InducedPath};
pub use report::{Check, CheckResult, Status, VerificationReport, Witness};
