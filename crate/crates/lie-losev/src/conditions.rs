use std::collections::BTreeSet;

use lie_grading::{rho_e, Cocharacter};
use lie_rootsys::{q, Root, RootSystem, Weight, Q};
use num_traits::{Signed, Zero};

use crate::{integral_root_system, LosevError};

/// The pinned simple roots `Π_0 = {α_i : i ∈ I}`, numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pinning {
    indices: BTreeSet<usize>,
}

impl Pinning {
    pub fn new(rs: &RootSystem, indices: &[usize]) -> Result<Self, LosevError> {
        if let Some(&i) = indices.iter().find(|&&i| i == 0 || i > rs.rank()) {
            return Err(LosevError::InvalidPinning(format!(
                "index {i} outside 1..={}",
                rs.rank()
            )));
        }
        Ok(Pinning {
            indices: indices.iter().copied().collect(),
        })
    }

    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    /// `Φ₀⁺`: positive roots supported on `I`.
    pub fn positive_roots(&self, rs: &RootSystem) -> Vec<Root> {
        let zero_based: Vec<usize> = self.indices.iter().map(|i| i - 1).collect();
        rs.positive_roots()
            .iter()
            .filter(|r| r.supported_on(&zero_based))
            .cloned()
            .collect()
    }
}

/// Outcome of Condition (C).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionC {
    pub holds: bool,
    /// α-coefficients of `λ+ρ` minus those of `ρ_e`, for every index.
    pub residual: Vec<Q>,
    /// Unpinned indices (from 1) where the coefficients differ.
    pub mismatches: Vec<usize>,
}

/// `(λ+ρ)|_{t_e} = ρ_e|_{t_e}`: the α-coefficients agree off the pinning,
/// since `t_e` is annihilated exactly by the span of `Π_0`.
pub fn condition_c(
    rs: &RootSystem,
    pinning: &Pinning,
    tau: &Cocharacter,
    lam_rho: &Weight,
) -> ConditionC {
    let lhs = rs.to_alpha_basis(lam_rho);
    let rhs = rho_e(rs, tau);
    let residual: Vec<Q> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
    let mismatches: Vec<usize> = (1..=rs.rank())
        .filter(|&i| !pinning.contains(i) && !residual[i - 1].is_zero())
        .collect();
    ConditionC {
        holds: mismatches.is_empty(),
        residual,
        mismatches,
    }
}

/// Outcome of Condition (A).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionA {
    pub holds: bool,
    /// First root of `Φ₀⁺` with a positive integral pairing.
    pub witness: Option<Root>,
}

fn scan_a(rs: &RootSystem, roots: &[Root], lam_rho: &Weight) -> ConditionA {
    let witness = roots
        .iter()
        .find(|b| {
            let p = rs.pairing(lam_rho, b);
            p.is_integer() && p.is_positive()
        })
        .cloned();
    ConditionA {
        holds: witness.is_none(),
        witness,
    }
}

/// `⟨λ+ρ, β∨⟩ ∉ ℤ_{>0}` for every `β ∈ Φ₀⁺`.
///
/// Only meaningful when `e` is regular in the standard Levi attached to the
/// pinning; other cases are rejected.
pub fn condition_a(
    rs: &RootSystem,
    pinning: &Pinning,
    lam_rho: &Weight,
    standard_levi: bool,
) -> Result<ConditionA, LosevError> {
    if !standard_levi {
        return Err(LosevError::UnsupportedRoute(
            "Condition (A) needs a standard Levi pinning".into(),
        ));
    }
    Ok(scan_a(rs, &pinning.positive_roots(rs), lam_rho))
}

/// The weaker form over the pinned simple roots only.
pub fn condition_a_simple(rs: &RootSystem, pinning: &Pinning, lam_rho: &Weight) -> ConditionA {
    let simple: Vec<Root> = pinning
        .indices()
        .iter()
        .map(|&i| rs.simple_root(i - 1))
        .collect();
    scan_a(rs, &simple, lam_rho)
}

/// `2(|Φ⁺| − |Φ_λ⁺|)`, valid when `λ+ρ` pairs to a positive integer with
/// every root of `Φ_λ⁺`.
pub fn joseph_dimension(rs: &RootSystem, lam_rho: &Weight) -> Result<usize, LosevError> {
    let sub = integral_root_system(rs, lam_rho);
    for b in &sub.positive {
        let p = rs.pairing(lam_rho, b);
        if !p.is_positive() {
            return Err(LosevError::NotStronglyDominant {
                root: b.clone(),
                pairing: p,
            });
        }
    }
    Ok(2 * (rs.positive_roots().len() - sub.positive.len()))
}

/// `dim g − dim g(λ) + dim 𝒪_λ`.
pub fn lo2_dimension(dim_g: usize, dim_g_lambda: usize, dim_orbit: usize) -> i64 {
    dim_g as i64 - dim_g_lambda as i64 + dim_orbit as i64
}

/// Every simple pairing of `½h∨` lies in `{0, 1}`.
pub fn special_half_check(half_hvee: &Weight) -> bool {
    half_hvee.iter().all(|c| c.is_zero() || *c == q(1))
}
