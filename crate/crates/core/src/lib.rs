//! Geometric phase of two-mode mixed squeezed-coherent states under cyclic
//! SU(2) evolution.
//!
//! The crate exposes closed-form phase formulas for three rank-2 mixture
//! families alongside an independent truncated-Fock-space evaluation route,
//! so each result can be cross-checked numerically.

pub mod error;
pub mod fock;
pub mod states;
pub mod evolution;
pub mod phase;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
