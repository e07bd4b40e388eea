use std::collections::HashSet;

use lie_rootsys::{Root, RootSystem, Weight};

use crate::cartan_type::{classify_component, CartanType, Component};

/// `Φ_λ = {α ∈ Φ : ⟨λ+ρ, α∨⟩ ∈ ℤ}` with its simple system and type.
///
/// For `F4` and `G2` the subsystem is regarded inside `Φ∨`: the type is that
/// of the coroots `α∨`, so long and short are exchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSubsystem {
    /// `Φ_λ ∩ Φ⁺` in the order of `Φ⁺`.
    pub positive: Vec<Root>,
    /// Indecomposable elements of `Φ_λ ∩ Φ⁺`.
    pub simple_basis: Vec<Root>,
    pub cartan_type: CartanType,
}

impl IntegralSubsystem {
    /// All of `Φ_λ`, positive roots first.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|r| -r.clone()));
        out
    }

    /// `|Φ_λ|`.
    pub fn root_count(&self) -> usize {
        2 * self.positive.len()
    }

    /// `dim g(λ) = |Φ_λ| + rk g`.
    pub fn dim_algebra(&self, rs: &RootSystem) -> usize {
        self.root_count() + rs.rank()
    }
}

/// Exhaustive scan of `Φ⁺` followed by diagram classification.
pub fn integral_root_system(rs: &RootSystem, lam_rho: &Weight) -> IntegralSubsystem {
    let positive: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|b| rs.pairing(lam_rho, b).is_integer())
        .cloned()
        .collect();
    let simple_basis = simple_system(rs, &positive);
    let cartan_type = classify(rs, &simple_basis);
    IntegralSubsystem {
        positive,
        simple_basis,
        cartan_type,
    }
}

/// `β` is simple exactly when `s_β` permutes the other positive roots.
fn simple_system(rs: &RootSystem, positive: &[Root]) -> Vec<Root> {
    let set: HashSet<&Root> = positive.iter().collect();
    positive
        .iter()
        .filter(|b| {
            positive
                .iter()
                .filter(|g| g != b)
                .all(|g| set.contains(&rs.reflect_root_by(g, b)))
        })
        .cloned()
        .collect()
}

fn classify(rs: &RootSystem, basis: &[Root]) -> CartanType {
    let n = basis.len();
    let cartan = rs.cartan_of(basis);
    let dual = rs.series().is_multiply_laced();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < nodes.len() {
            let i = nodes[k];
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
            k += 1;
        }
        nodes.sort_unstable();
        let sub: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let root_long: Vec<bool> = nodes.iter().map(|&i| rs.is_long(&basis[i])).collect();
        // Coroots of long roots are short.
        let long: Vec<bool> = root_long.iter().map(|&l| l != dual).collect();
        let (letter, rank) = classify_component(&sub, &long)
            .expect("integral subsystems of a finite root system have finite type");
        let tilde = dual && "ADE".contains(letter) && root_long.iter().all(|&l| l);
        comps.push(Component {
            letter,
            rank,
            tilde,
        });
    }
    CartanType::new(comps)
}
