//! Partial group (co)homology with exact arithmetic.
//!
//! The crate computes in Exel's semigroup `S(G)` and the partial group algebra `K_par G`,
//! validates partial representations and partial actions on free modules, builds the
//! universal globalization `Λ(M) = KG ⊗_{G_par} M`, and compares partial (co)homology with
//! ordinary group (co)homology of the globalization.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exactalg;
pub mod glob;
pub mod group;
pub mod homology;
pub mod parmod;
pub mod parsemigroup;

pub use error::Error;
