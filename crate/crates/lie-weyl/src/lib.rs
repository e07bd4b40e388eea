//! Weyl group words acting on exact weights and roots.
//!
//! Words act right to left: `s6s2s4` applies `s4` first. Group elements are
//! compared through their action on the root lattice, never by spelling.
//! Every operation is available both for the simple reflections of the
//! ambient system and for the reflections in an explicit basis of a root
//! subsystem.

#![forbid(unsafe_code)]

mod coxeter;
mod error;
mod word;

pub use coxeter::{
    apply_word, descent_set, dominant_representative, dot_action, length_of, star_op, Coxeter,
};
pub use error::WeylError;
pub use word::WeylWord;
