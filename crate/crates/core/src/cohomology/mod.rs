//! `RO(C_pq)`-graded cohomology with Burnside coefficients: of a point, of
//! orbits and of representation spheres, as functions of fixed-point dimensions.

pub mod checks;
pub mod rep;
pub mod tables;

pub use checks::{compare_entries, les_check, phi_compat, recurrence_check, ClauseResult, LesReport, Shift, Verdict};
pub use rep::{fold_exponent, realizable, FixedDims, VirtualRep};
pub use tables::{
    classify_point, cohomology_orbit, cohomology_point, cohomology_sphere, entry_groups, level_groups, lewis_entry,
    lewis_table, orbit_entry, realize_entry, sphere_entry, CohomologyAnswer, PointInput, TableEntry,
};
