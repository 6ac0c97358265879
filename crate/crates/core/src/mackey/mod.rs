//! Mackey functors over `C_p` and `C_pq`.

pub mod burnside;
pub mod catalog;
pub mod diagram;
pub mod expr;
pub mod functor;
pub mod json;
pub mod lattice;

pub use burnside::{basis, compose, identity_class, representable, span_action, yoneda_hom, Span, SpanSum};
pub use catalog::{lift, phi_restrict, rho_restrict, tensor_external, Lift, Side};
pub use functor::{direct_sum, direct_sum_all, MackeyFunctor, MackeyHom, MackeySum, Violation};
pub use json::{functor_from_json, functor_to_json, hom_from_json, hom_to_json};
pub use lattice::{Lattice, Level, CP, CPQ, CQ, E};
