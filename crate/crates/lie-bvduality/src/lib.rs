//! Robinson–Schensted shapes and the Barbasch–Vogan algorithm in type `D`.
//!
//! Given the ε-coordinates of a weight of `so(2n)`, the algorithm inserts
//! the doubled sequence, reads off the row shape, and transforms it through
//! the `r`, `s`, `t` lists into the partition labelling an orbit of the
//! dual group. Every intermediate list is kept in [`BvTrace`].

#![forbid(unsafe_code)]

mod partition;
mod rs;

pub use partition::{orth_centralizer_dim, transpose, BvError, Partition};
pub use rs::{bv_type_d, rs_shape, BvTrace, Letter};
