//! Gradings of a root system by a cocharacter `τ`.
//!
//! A cocharacter is recorded by its values `α_i(τ)` on the simple roots, and
//! grades each root additively. The 0-roots and 1-roots among `Φ⁺` determine
//! `ρ_e`, the half-sum the rigidity checks compare against.

#![forbid(unsafe_code)]

use std::fmt;

use lie_rootsys::{q, Root, RootSysError, RootSystem, Q};

/// Values `α_i(τ)` in Bourbaki order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cocharacter {
    values: Vec<i64>,
}

impl Cocharacter {
    /// Checks the length against the rank of `rs`.
    pub fn new(rs: &RootSystem, values: Vec<i64>) -> Result<Self, RootSysError> {
        if values.len() != rs.rank() {
            return Err(RootSysError::RankMismatch {
                expected: rs.rank(),
                found: values.len(),
            });
        }
        Ok(Cocharacter { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `β(τ) = Σ_i c_i α_i(τ)`.
    pub fn grade(&self, beta: &Root) -> i64 {
        beta.iter().zip(&self.values).map(|(c, v)| c * v).sum()
    }

    /// Pinned indices (1-based) whose value is not 2.
    pub fn unpinned_values(&self, pinned: &[usize]) -> Vec<usize> {
        pinned
            .iter()
            .copied()
            .filter(|&i| self.values.get(i.wrapping_sub(1)) != Some(&2))
            .collect()
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&lie_rootsys::format_vec(&self.values))
    }
}

/// `β(τ)`.
pub fn grade_root(tau: &Cocharacter, beta: &Root) -> i64 {
    tau.grade(beta)
}

/// `{β ∈ Φ⁺ : β(τ) = k}` in the order of `Φ⁺`.
pub fn graded_positive_roots(rs: &RootSystem, tau: &Cocharacter, k: i64) -> Vec<Root> {
    rs.positive_roots()
        .iter()
        .filter(|b| tau.grade(b) == k)
        .cloned()
        .collect()
}

/// `Φ⁺(0)` and `Φ⁺(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRootSets {
    pub zero_roots: Vec<Root>,
    pub one_roots: Vec<Root>,
}

impl GradedRootSets {
    pub fn new(rs: &RootSystem, tau: &Cocharacter) -> Self {
        GradedRootSets {
            zero_roots: graded_positive_roots(rs, tau, 0),
            one_roots: graded_positive_roots(rs, tau, 1),
        }
    }

    pub fn counts(&self) -> (usize, usize) {
        (self.zero_roots.len(), self.one_roots.len())
    }

    /// `|Φ⁺(0)| + |Φ⁺(1)|`.
    pub fn total(&self) -> usize {
        self.zero_roots.len() + self.one_roots.len()
    }
}

/// `|Φ⁺(0)| + |Φ⁺(1)| = (dim g_e − rk g) / 2`, tested without division.
pub fn check_count_formula(rs: &RootSystem, tau: &Cocharacter, dim_centralizer: usize) -> bool {
    2 * GradedRootSets::new(rs, tau).total() + rs.rank() == dim_centralizer
}

/// Sum of the α-coefficient vectors of `roots`.
pub fn contribution(rank: usize, roots: &[Root]) -> Vec<i64> {
    let mut acc = vec![0; rank];
    for r in roots {
        for (a, c) in acc.iter_mut().zip(r.iter()) {
            *a += c;
        }
    }
    acc
}

/// `2ρ_e` in the α-basis: the contributions of the 0-roots and 1-roots.
pub fn two_rho_e(rs: &RootSystem, tau: &Cocharacter) -> Vec<i64> {
    let sets = GradedRootSets::new(rs, tau);
    let zero = contribution(rs.rank(), &sets.zero_roots);
    let one = contribution(rs.rank(), &sets.one_roots);
    zero.iter().zip(&one).map(|(a, b)| a + b).collect()
}

/// `ρ_e` in the α-basis, the "total contribution" per simple root.
pub fn rho_e(rs: &RootSystem, tau: &Cocharacter) -> Vec<Q> {
    two_rho_e(rs, tau)
        .into_iter()
        .map(|c| q(c) / q(2))
        .collect()
}
