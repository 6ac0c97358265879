//! Homological algebra of Mackey functors.

pub mod exact;
pub mod hom;
pub mod resolution;

pub use exact::{cokernel_mackey, kernel_mackey};
pub use hom::{
    ext1, ext1_with, hom_mackey, hom_mackey_direct, hom_mackey_with, homology, invariants, iso_search, IsoVerdict,
    MackeyHomGroup,
};
pub use resolution::{projective_cover_step, resolution, Cover, CoverOrder, FreeFunctor, ProjectiveResolution};
