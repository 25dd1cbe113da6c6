//! Exact arithmetic for quantum cluster structures on quantum unipotent
//! coordinate rings: Cartan data and Weyl groups, the initial seed attached
//! to a reduced word, quantum minors realised as functionals on `U_q^+`,
//! quantum tori with seed mutation, and identity checks tying them together.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod aqn;
pub mod cartan;
pub mod error;
pub mod laurent;
pub mod linalg;
pub mod rational;
pub mod seed;
pub mod torus;
pub mod uq;
pub mod verify;
pub mod weyl;

pub use cartan::{CartanDatum, Weight, WeylWord};
pub use error::{Error, Result};
pub use laurent::Laurent;
pub use rational::RationalQ;
pub use uq::MinorSpec;
pub use aqn::{AqnElement, ProductConvention};
pub use seed::{QuantumSeed, ReducedWordData};
pub use torus::{MutationState, TorusElement};
