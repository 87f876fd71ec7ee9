//! The computable Abelian category of finitely presented graded modules:
//! kernels, images, cokernels, lifts, pullbacks, pushouts, intersections,
//! truncation, graded Hom modules, Hilbert functions, and decidable
//! membership in the subcategory of finite-length modules.

mod hom;
mod morphism;
mod ops;
mod presentation;

pub use hom::{hom_group_basis, hom_module, transpose_action, twisted_sum, HomModule, TwistedSum};
pub use morphism::GradedMorphism;
pub use ops::{intersect, preimage, pullback, pushout, ImageCokernel, Pullback, Pushout};
pub use presentation::{direct_sum, DirectSum, Presentation};

pub(crate) use ops::{minimal_generators, sum_injections, sum_projections};
