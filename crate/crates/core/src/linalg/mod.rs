//! Exact integer linear algebra.

pub mod group;
pub mod matrix;
pub mod smith;

pub use group::{
    cokernel_hom, direct_sum, hom_group, image_hom, iso_groups, kernel_hom, tensor_group, tensor_hom, DirectSum,
    FgGroup, GroupHom, HomGroup, Presentation, Tensor,
};
pub use matrix::{ints, IntMatrix};
pub use smith::{image_basis, kernel_basis, smith, smith_normal_form, solve, Smith};
