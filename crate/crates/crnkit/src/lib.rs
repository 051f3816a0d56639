//! Exact-arithmetic toolkit for chemical reaction networks (CRNs).
//!
//! The crate models a CRN as a species set together with a pointed set of
//! reactions and their source/target coefficient vectors, derives the
//! stoichiometric matrix over exact rationals, and provides the machinery
//! built on top of it:
//!
//! - [`linalg`]: dense rational matrices with row reduction, kernels,
//!   cokernels, solving and subspace-containment tests;
//! - [`crn`]: networks, morphisms with commuting-square validation,
//!   subnetworks and the reduction-morphism predicate;
//! - [`arrow`]: the stoichiometric arrow of a network as an object of the
//!   arrow category of vector spaces, with homology and induced maps;
//! - [`schur`]: block decomposition along a subnetwork, the buffering
//!   index, (generalized) Schur complements, the L/R congruence and the
//!   reduction of a network along a buffering structure;
//! - [`recon`]: the reconstruction functor back from labeled arrows to
//!   networks and the hom-set bijection against the stoichiometric functor.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share and send between threads.

pub mod arrow;
pub mod crn;
pub mod linalg;
pub mod rational;
pub mod recon;
pub mod schur;

pub use rational::Rational;
