use std::collections::{BTreeSet, HashSet};

use lie_rootsys::{linalg, q, Root, RootSystem, Weight};
use num_traits::Signed;

use crate::{WeylError, WeylWord};

/// The Weyl group of `Φ` or of a subsystem, presented by the reflections in
/// an ordered simple system.
///
/// Letter `k` of a word denotes the reflection in the `k`-th basis root.
#[derive(Debug, Clone)]
pub struct Coxeter<'a> {
    rs: &'a RootSystem,
    basis: Vec<Root>,
    ambient: bool,
    positive: Vec<Root>,
}

impl<'a> Coxeter<'a> {
    /// The ambient Weyl group with generators `s_1, …, s_n`.
    pub fn simple(rs: &'a RootSystem) -> Self {
        let n = rs.rank();
        Coxeter {
            rs,
            basis: (0..n).map(|i| rs.simple_root(i)).collect(),
            ambient: true,
            positive: rs.positive_roots().to_vec(),
        }
    }

    /// The reflection subgroup generated by `basis`.
    ///
    /// The roots must be positive, linearly independent and pairwise
    /// non-acute; such a set is a simple system of the subsystem it spans,
    /// and its positive roots are positive in `Φ`.
    pub fn subsystem(rs: &'a RootSystem, basis: &[Root]) -> Result<Self, WeylError> {
        let n = rs.rank();
        if basis.is_empty() {
            return Err(WeylError::InvalidBasis("empty basis".into()));
        }
        for b in basis {
            if b.len() != n || !rs.is_root(b) {
                return Err(WeylError::InvalidBasis(format!("{b} is not a root")));
            }
            if !b.is_positive() {
                return Err(WeylError::InvalidBasis(format!("{b} is not positive")));
            }
        }
        let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.0.clone()).collect();
        if linalg::rank_of(&rows) != basis.len() {
            return Err(WeylError::InvalidBasis(
                "roots are linearly dependent".into(),
            ));
        }
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if rs.root_pairing(a, b) > 0 {
                    return Err(WeylError::InvalidBasis(format!(
                        "{a} and {b} form an acute angle"
                    )));
                }
            }
        }
        let positive = closure(rs, basis)
            .into_iter()
            .filter(|r| r.is_positive())
            .collect();
        let ambient = basis.len() == n
            && basis
                .iter()
                .enumerate()
                .all(|(i, b)| *b == rs.simple_root(i));
        Ok(Coxeter {
            rs,
            basis: basis.to_vec(),
            ambient,
            positive,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn basis(&self) -> &[Root] {
        &self.basis
    }

    /// Positive roots of the subsystem, in `Φ⁺` order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn generators(&self) -> usize {
        self.basis.len()
    }

    pub fn check(&self, w: &WeylWord) -> Result<(), WeylError> {
        match w.letters().iter().find(|&&l| l > self.generators()) {
            Some(&letter) => Err(WeylError::LetterOutOfRange {
                letter,
                generators: self.generators(),
            }),
            None => Ok(()),
        }
    }

    fn reflect_weight(&self, mu: &Weight, k: usize) -> Weight {
        if self.ambient {
            self.rs.reflect_weight(mu, k - 1)
        } else {
            self.rs.reflect_weight_by(mu, &self.basis[k - 1])
        }
    }

    fn reflect_root(&self, r: &Root, k: usize) -> Root {
        if self.ambient {
            self.rs.reflect_root(r, k - 1)
        } else {
            self.rs.reflect_root_by(r, &self.basis[k - 1])
        }
    }

    /// `w(μ)`, rightmost letter first.
    pub fn apply(&self, w: &WeylWord, mu: &Weight) -> Result<Weight, WeylError> {
        self.check(w)?;
        Ok(w.letters()
            .iter()
            .rev()
            .fold(mu.clone(), |acc, &k| self.reflect_weight(&acc, k)))
    }

    /// `w(r)` for a root-lattice vector.
    pub fn apply_root(&self, w: &WeylWord, r: &Root) -> Result<Root, WeylError> {
        self.check(w)?;
        Ok(w.letters()
            .iter()
            .rev()
            .fold(r.clone(), |acc, &k| self.reflect_root(&acc, k)))
    }

    /// `w·μ = w(μ + ρ) − ρ` with the ambient `ρ`.
    pub fn dot(&self, w: &WeylWord, mu: &Weight) -> Result<Weight, WeylError> {
        let rho = self.rs.rho();
        Ok(&self.apply(w, &(mu + &rho))? - &rho)
    }

    /// Images of `α_1, …, α_n`; two words name the same element exactly
    /// when these agree.
    pub fn action_matrix(&self, w: &WeylWord) -> Result<Vec<Root>, WeylError> {
        (0..self.rs.rank())
            .map(|i| self.apply_root(w, &self.rs.simple_root(i)))
            .collect()
    }

    pub fn equal(&self, a: &WeylWord, b: &WeylWord) -> Result<bool, WeylError> {
        Ok(self.action_matrix(a)? == self.action_matrix(b)?)
    }

    /// Number of positive roots of the subsystem sent to negative roots.
    pub fn length(&self, w: &WeylWord) -> Result<usize, WeylError> {
        self.check(w)?;
        Ok(self
            .positive
            .iter()
            .filter(|b| {
                self.apply_root(w, b)
                    .map(|r| r.is_negative())
                    .unwrap_or(false)
            })
            .count())
    }

    /// `𝓛(w) = {s : ℓ(sw) < ℓ(w)}`, decided by the sign of `w⁻¹(β_s)`.
    pub fn left_descents(&self, w: &WeylWord) -> Result<BTreeSet<usize>, WeylError> {
        self.descents_of(&w.inverse())
    }

    /// `{s : w(β_s) < 0}`, the right descents of `w`.
    pub fn right_descents(&self, w: &WeylWord) -> Result<BTreeSet<usize>, WeylError> {
        self.descents_of(w)
    }

    fn descents_of(&self, w: &WeylWord) -> Result<BTreeSet<usize>, WeylError> {
        let mut out = BTreeSet::new();
        for (k, b) in self.basis.iter().enumerate() {
            if self.apply_root(w, b)?.is_negative() {
                out.insert(k + 1);
            }
        }
        Ok(out)
    }

    /// True when `s_s s_t` has order 3.
    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        let ok = |k: usize| (1..=self.generators()).contains(&k);
        if !ok(s) || !ok(t) || s == t {
            return false;
        }
        let (a, b) = (&self.basis[s - 1], &self.basis[t - 1]);
        self.rs.root_pairing(a, b) * self.rs.root_pairing(b, a) == 1
    }

    fn star(&self, w: &WeylWord, s: usize, t: usize, left: bool) -> Result<WeylWord, WeylError> {
        self.check(w)?;
        if !self.adjacent(s, t) {
            return Err(WeylError::NotAdjacent { s, t });
        }
        let in_domain = |x: &WeylWord| -> Result<bool, WeylError> {
            let d = if left {
                self.left_descents(x)?
            } else {
                self.right_descents(x)?
            };
            Ok(d.contains(&s) != d.contains(&t))
        };
        if !in_domain(w)? {
            return Err(WeylError::NotInDomain {
                word: w.to_string(),
                s,
                t,
            });
        }
        let mut found = Vec::new();
        for g in [s, t] {
            let x = if left { w.prepend(g) } else { w.append(g) };
            if in_domain(&x)? {
                found.push(x);
            }
        }
        debug_assert_eq!(found.len(), 1, "exactly one neighbour lies in the domain");
        Ok(found.swap_remove(0))
    }

    /// Left star operation on `𝒟_L(s,t)`: the one of `sw`, `tw` whose left
    /// descent set meets `{s,t}` in exactly one element.
    pub fn left_star(&self, w: &WeylWord, s: usize, t: usize) -> Result<WeylWord, WeylError> {
        self.star(w, s, t, true)
    }

    /// Right star operation on `𝒟_R(s,t)`, using `ws`, `wt`.
    pub fn right_star(&self, w: &WeylWord, s: usize, t: usize) -> Result<WeylWord, WeylError> {
        self.star(w, s, t, false)
    }
}

/// Orbit of `basis` under the group it generates.
fn closure(rs: &RootSystem, basis: &[Root]) -> Vec<Root> {
    let mut seen: HashSet<Root> = basis.iter().cloned().collect();
    let mut frontier: Vec<Root> = basis.to_vec();
    let mut out = frontier.clone();
    while let Some(r) = frontier.pop() {
        for b in basis {
            let img = rs.reflect_root_by(&r, b);
            if seen.insert(img.clone()) {
                out.push(img.clone());
                frontier.push(img);
            }
        }
    }
    out.sort_by(|a, b| {
        let ia = rs.positive_index(&a.abs());
        let ib = rs.positive_index(&b.abs());
        ia.cmp(&ib).then(b.is_positive().cmp(&a.is_positive()))
    });
    out
}

/// `w(μ)` in the ambient Weyl group.
pub fn apply_word(rs: &RootSystem, w: &WeylWord, mu: &Weight) -> Result<Weight, WeylError> {
    Coxeter::simple(rs).apply(w, mu)
}

/// `w(μ + ρ) − ρ` in the ambient Weyl group.
pub fn dot_action(rs: &RootSystem, w: &WeylWord, mu: &Weight) -> Result<Weight, WeylError> {
    Coxeter::simple(rs).dot(w, mu)
}

/// Inversion count over `Φ⁺`.
pub fn length_of(rs: &RootSystem, w: &WeylWord) -> Result<usize, WeylError> {
    Coxeter::simple(rs).length(w)
}

/// Left descents for `Π`; for an explicit simple system, the basis
/// positions `k` with `w(β_k) ∈ −Φ⁺`.
pub fn descent_set(
    rs: &RootSystem,
    w: &WeylWord,
    simple_system: Option<&[Root]>,
) -> Result<BTreeSet<usize>, WeylError> {
    match simple_system {
        None => Coxeter::simple(rs).left_descents(w),
        Some(basis) => {
            Coxeter::subsystem(rs, basis)?;
            let ambient = Coxeter::simple(rs);
            let mut out = BTreeSet::new();
            for (k, b) in basis.iter().enumerate() {
                if ambient.apply_root(w, b)?.is_negative() {
                    out.insert(k + 1);
                }
            }
            Ok(out)
        }
    }
}

/// Left star operation for the ambient simple reflections.
pub fn star_op(rs: &RootSystem, w: &WeylWord, s: usize, t: usize) -> Result<WeylWord, WeylError> {
    Coxeter::simple(rs).left_star(w, s, t)
}

/// The dominant weight in the `W`-orbit of `μ` and a word `w` with
/// `w(μ)` dominant.
pub fn dominant_representative(rs: &RootSystem, mu: &Weight) -> (Weight, WeylWord) {
    let mut cur = mu.clone();
    let mut letters = Vec::new();
    while let Some(i) = (0..rs.rank()).find(|&i| cur[i].is_negative()) {
        cur = rs.reflect_weight(&cur, i);
        letters.push(i + 1);
    }
    letters.reverse();
    debug_assert!(cur.iter().all(|c| *c >= q(0)));
    (cur, WeylWord::new(letters))
}
