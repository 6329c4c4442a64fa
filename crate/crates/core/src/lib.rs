//! Dual Artin groups from Coxeter systems, computationally.
//!
//! This crate builds Coxeter groups in their geometric representation over
//! exact cyclotomic-real scalars, runs the Hurwitz action of braid groups
//! on reflection tuples, constructs the noncrossing partition interval
//! [1,h]_T with both presentations of the dual Artin group Art*(W,T,h),
//! decides equality in Art(W,S) for spherical systems and free products of
//! them via Garside normal forms, and verifies the well-stabilized and
//! pan-transitive conditions (and their behavior under free, direct and
//! graph products) at desk scale.
//!
//! Everything is exact: no floating point anywhere. All value types are
//! immutable after construction and all operations are pure, so concurrent
//! evaluation needs no coordination.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod artin;
pub mod braid;
pub mod coxeter;
pub mod error;
pub mod exact;
pub mod free;
pub mod hurwitz;
pub mod interval;
pub mod products;

// compile-check the README examples
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;

pub use artin::{ArtinContext, ArtinElement, GarsideElement, WellStabilized};
pub use braid::BraidWord;
pub use coxeter::{CoxeterEntry, CoxeterMatrix, CoxeterSystem, Enumeration, GroupElement, Side};
pub use error::{Error, Result};
pub use free::{FreeGroup, FreeWord, NcCertificate};
pub use hurwitz::{hurwitz_apply, hurwitz_orbit, schreier_stabilizer, GroupOps, OrbitGraph};
pub use interval::{build_interval, IntervalPoset, PanVerdict, Presentation, PresentationStyle};
pub use products::{ProductKind, ProductSystem, ProductTree, TheoremReport, VerifyCaps};
