//! Root systems of types E6, E7, E8, F4, G2 and D_n in Bourbaki numbering.
//!
//! Roots are integer vectors over the simple roots, weights are exact
//! rational vectors over the fundamental weights. Nothing in this crate
//! touches floating point.

#![forbid(unsafe_code)]

mod error;
pub mod linalg;
mod rational;
mod system;
mod vector;

pub use error::RootSysError;
pub use rational::{format_vec, parse_rational, parse_rational_list, q, qr, Q};
pub use system::{RootSystem, Series};
pub use vector::{Root, Weight};
