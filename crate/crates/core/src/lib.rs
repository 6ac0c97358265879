//! Mackey functors over the cyclic groups `C_p` and `C_pq`.
//!
//! The crate is organised bottom up:
//!
//! * [`linalg`] exact integer matrices, Smith form and finitely generated abelian groups;
//! * [`mackey`] the functors themselves, the standard catalog and Burnside spans;
//! * [`homological`] kernels, cokernels, projective resolutions, `Hom` and `Ext^1`;
//! * [`cohomology`] the `RO(C_pq)`-graded cohomology of a point, orbits and spheres;
//! * [`freeness`] the `≪` order and free decompositions of even cell complexes.

pub mod cohomology;
pub mod error;
pub mod freeness;
pub mod homological;
pub mod linalg;
pub mod mackey;

pub use error::{Error, Result};
