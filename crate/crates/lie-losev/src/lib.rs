//! Checkable fragments of the rigidity criteria for a primitive ideal.
//!
//! Condition (C) is a comparison of α-coefficients with `ρ_e`, Condition (A)
//! a scan over the positive roots of the pinned Levi. The integral root
//! system of a weight is computed exhaustively and classified by Dynkin
//! diagram. Dimensions of associated varieties come from strong dominance
//! or from recorded orbit data.

#![forbid(unsafe_code)]

mod cartan_type;
mod conditions;
mod error;
mod integral;

pub use cartan_type::{CartanType, Component};
pub use conditions::{
    condition_a, condition_a_simple, condition_c, joseph_dimension, lo2_dimension,
    special_half_check, ConditionA, ConditionC, Pinning,
};
pub use error::LosevError;
pub use integral::{integral_root_system, IntegralSubsystem};
