//! Exact computation of Hom and Ext groups in Serre quotient categories of
//! graded module categories, specialized to coherent sheaves on projective
//! space presented as finitely presented graded modules modulo finite-length
//! modules.
//!
//! The layers, bottom up:
//! - [`ring`]: exact fields, monomials, homogeneous polynomials, twisted
//!   free modules;
//! - [`groebner`]: module Gröbner bases, normal forms, Schreyer syzygies,
//!   submodule membership — the decidability substrate;
//! - [`abcat`]: the computable Abelian category of finitely presented graded
//!   modules (kernels, images, pullbacks, truncation, graded Hom, torsion);
//! - [`homres`]: free resolutions, Betti tables, regularity, Ext modules;
//! - [`serre`]: the quotient layer — saturation monad, quotient Hom both by
//!   adjunction and by colimit, quotient Ext via the stabilizing colimit,
//!   sheaf cohomology tables;
//! - [`yoneda`]: extension complexes, Yoneda composition, pullback/pushout
//!   actions, Baer sums, cocycle coordinates, and the constructive
//!   image/preimage machinery for the quotient-Ext isomorphism.

pub mod abcat;
pub mod error;
pub mod groebner;
pub mod homres;
pub mod ring;
pub mod serre;
pub mod yoneda;

pub use error::{Error, Result};
