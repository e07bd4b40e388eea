use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::linalg::{self, Matrix};
use crate::rational::{q, qr, Q};
use crate::vector::{Root, Weight};
use crate::RootSysError;

/// Supported Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    E6,
    E7,
    E8,
    F4,
    G2,
    /// `D_n` with `n >= 4`.
    D(usize),
}

impl Series {
    pub fn rank(self) -> usize {
        match self {
            Series::E6 => 6,
            Series::E7 => 7,
            Series::E8 => 8,
            Series::F4 => 4,
            Series::G2 => 2,
            Series::D(n) => n,
        }
    }

    /// True for the doubly and triply laced types.
    pub fn is_multiply_laced(self) -> bool {
        matches!(self, Series::F4 | Series::G2)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::E6 => f.write_str("E6"),
            Series::E7 => f.write_str("E7"),
            Series::E8 => f.write_str("E8"),
            Series::F4 => f.write_str("F4"),
            Series::G2 => f.write_str("G2"),
            Series::D(n) => write!(f, "D{n}"),
        }
    }
}

impl FromStr for Series {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "E6" => Ok(Series::E6),
            "E7" => Ok(Series::E7),
            "E8" => Ok(Series::E8),
            "F4" => Ok(Series::F4),
            "G2" => Ok(Series::G2),
            _ => match t.strip_prefix('D').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if (4..=16).contains(&n) => Ok(Series::D(n)),
                _ => Err(RootSysError::UnsupportedSeries(t.to_string())),
            },
        }
    }
}

/// Cartan matrix, positive roots and weight coordinate maps of one system.
///
/// `cartan[i][j] = ⟨α_i, α_j∨⟩`, so F4 has `cartan[1][2] = -2` and G2 has
/// `cartan[1][0] = -3`. Squared root lengths are normalised to 2 for long
/// roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    series: Series,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<Q>,
    /// Six times the Gram matrix of the simple roots; integral in all types.
    gram: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    inv_cartan: Matrix,
    epsilon: Option<Matrix>,
}

impl RootSystem {
    /// Builds the system and enumerates its positive roots by closing the
    /// simple roots under simple reflections.
    pub fn build(series: Series) -> Result<Self, RootSysError> {
        if let Series::D(n) = series {
            if !(4..=16).contains(&n) {
                return Err(RootSysError::UnsupportedSeries(series.to_string()));
            }
        }
        let cartan = cartan_matrix(series);
        let n = cartan.len();
        let lengths: Vec<Q> = match series {
            Series::F4 => vec![q(2), q(2), q(1), q(1)],
            Series::G2 => vec![qr(2, 3), q(2)],
            _ => vec![q(2); n],
        };
        let cartan_q: Matrix = cartan
            .iter()
            .map(|row| row.iter().map(|&x| q(x)).collect())
            .collect();
        let inv_cartan = linalg::invert(&cartan_q).expect("Cartan matrices are invertible");
        let epsilon = epsilon_matrix(series);
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(3 * cartan[i][j]) * &lengths[j];
                        debug_assert!(v.is_integer());
                        v.to_integer().try_into().expect("small Gram entry")
                    })
                    .collect()
            })
            .collect();

        let mut sys = RootSystem {
            series,
            cartan,
            lengths,
            gram,
            positive: Vec::new(),
            index: HashMap::new(),
            inv_cartan,
            epsilon,
        };
        sys.enumerate_positive_roots();
        Ok(sys)
    }

    fn enumerate_positive_roots(&mut self) {
        let n = self.rank();
        let mut found: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in &frontier {
                for i in 0..n {
                    let s = self.reflect_root(r, i);
                    if s.is_positive() && !found.contains(&s) {
                        found.push(s.clone());
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        found.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        self.index = found
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        self.positive = found;
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Row `i` is the α-expansion of `ϖ_i`.
    pub fn inv_cartan(&self) -> &[Vec<Q>] {
        &self.inv_cartan
    }

    /// Row `i` is the ε-expansion of `ϖ_i` (D_n, F4, G2 only).
    pub fn epsilon_map(&self) -> Option<&[Vec<Q>]> {
        self.epsilon.as_deref()
    }

    /// Squared length `(α_i|α_i)` of each simple root.
    pub fn simple_lengths(&self) -> &[Q] {
        &self.lengths
    }

    /// `dim g = 2|Φ⁺| + rank`.
    pub fn dim_algebra(&self) -> usize {
        2 * self.positive.len() + self.rank()
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("non-empty root system")
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn positive_index(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &Root) -> bool {
        r.len() == self.rank() && self.index.contains_key(&r.abs())
    }

    /// `(a|b)` for two root-lattice vectors.
    pub fn inner_roots(&self, a: &[i64], b: &[i64]) -> Q {
        qr(self.gram_form(a, b), 6)
    }

    /// `6(a|b)`, exact in machine integers.
    fn gram_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                acc += x * y * self.gram[i][j];
            }
        }
        acc
    }

    /// `(β|β)`.
    pub fn length2(&self, r: &[i64]) -> Q {
        self.inner_roots(r, r)
    }

    /// True when `r` has maximal length (every root in simply laced types).
    pub fn is_long(&self, r: &Root) -> bool {
        self.gram_form(r, r) == 12
    }

    /// `⟨r, α_i∨⟩` for a root-lattice vector `r`.
    pub fn simple_pairing(&self, r: &[i64], i: usize) -> i64 {
        r.iter().zip(&self.cartan).map(|(c, row)| c * row[i]).sum()
    }

    /// `⟨a, b∨⟩ = 2(a|b)/(b|b)` for roots; always an integer.
    pub fn root_pairing(&self, a: &Root, b: &Root) -> i64 {
        let num = 2 * self.gram_form(a, b);
        let den = self.gram_form(b, b);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `⟨μ, β∨⟩ = 2(μ|β)/(β|β)` with `μ` in ϖ-coordinates.
    pub fn pairing(&self, mu: &Weight, beta: &Root) -> Q {
        let mut num = Q::zero();
        for i in 0..self.rank() {
            if beta[i] != 0 {
                num += &mu[i] * q(beta[i]) * &self.lengths[i];
            }
        }
        num / self.length2(beta)
    }

    /// `s_i(r)` for a root-lattice vector.
    pub fn reflect_root(&self, r: &Root, i: usize) -> Root {
        let c = self.simple_pairing(r, i);
        let mut v = r.clone();
        v.0[i] -= c;
        v
    }

    /// `s_β(r) = r - ⟨r, β∨⟩β`.
    pub fn reflect_root_by(&self, r: &Root, beta: &Root) -> Root {
        let c = self.root_pairing(r, beta);
        Root(r.iter().zip(beta.iter()).map(|(x, b)| x - c * b).collect())
    }

    /// ϖ-coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, r: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| q((0..n).map(|i| r[i] * self.cartan[i][j]).sum()))
                .collect(),
        )
    }

    /// `s_i(μ) = μ - ⟨μ, α_i∨⟩α_i`.
    pub fn reflect_weight(&self, mu: &Weight, i: usize) -> Weight {
        let c = mu[i].clone();
        if c.is_zero() {
            return mu.clone();
        }
        Weight(
            mu.iter()
                .zip(&self.cartan[i])
                .map(|(x, &a)| x - &c * q(a))
                .collect(),
        )
    }

    /// `s_β(μ) = μ - ⟨μ, β∨⟩β`.
    pub fn reflect_weight_by(&self, mu: &Weight, beta: &Root) -> Weight {
        let c = self.pairing(mu, beta);
        if c.is_zero() {
            return mu.clone();
        }
        let b = self.root_to_weight(beta);
        Weight(mu.iter().zip(b.iter()).map(|(x, y)| x - &c * y).collect())
    }

    /// α-coordinates `c` with `μ = Σ c_i α_i`.
    pub fn to_alpha_basis(&self, mu: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|k| {
                let mut acc = Q::zero();
                for i in 0..n {
                    if !mu[i].is_zero() {
                        acc += &mu[i] * &self.inv_cartan[i][k];
                    }
                }
                acc
            })
            .collect()
    }

    /// Inverse of [`Self::to_alpha_basis`].
    pub fn from_alpha_basis(&self, c: &[Q]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| {
                    let mut acc = Q::zero();
                    for (ci, row) in c.iter().zip(&self.cartan) {
                        acc += ci * q(row[j]);
                    }
                    acc
                })
                .collect(),
        )
    }

    /// W-invariant form `(μ|ν)` on weights.
    pub fn inner_weights(&self, mu: &Weight, nu: &Weight) -> Q {
        let c = self.to_alpha_basis(mu);
        let mut acc = Q::zero();
        for i in 0..self.rank() {
            acc += &c[i] * &nu[i] * &self.lengths[i] / q(2);
        }
        acc
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank())
    }

    /// ε-coordinates of a weight (D_n, F4, G2 only).
    pub fn epsilon_coords(&self, mu: &Weight) -> Option<Vec<Q>> {
        let e = self.epsilon.as_ref()?;
        let dim = e[0].len();
        Some(
            (0..dim)
                .map(|k| {
                    let mut acc = Q::zero();
                    for (i, row) in e.iter().enumerate() {
                        acc += &mu[i] * &row[k];
                    }
                    acc
                })
                .collect(),
        )
    }

    /// ε-coordinates of a root (D_n, F4, G2 only).
    pub fn root_epsilon_coords(&self, r: &Root) -> Option<Vec<Q>> {
        self.epsilon_coords(&self.root_to_weight(r))
    }

    /// Matrix of `⟨β_i, β_j∨⟩` for an ordered list of roots.
    pub fn cartan_of(&self, basis: &[Root]) -> Vec<Vec<i64>> {
        basis
            .iter()
            .map(|a| basis.iter().map(|b| self.root_pairing(a, b)).collect())
            .collect()
    }

    /// Weight `μ` with `⟨μ, β_i∨⟩ = b_i` for a basis of the full rank.
    pub fn weight_from_pairings(&self, basis: &[Root], b: &[Q]) -> Result<Weight, RootSysError> {
        let n = self.rank();
        if basis.len() != n || b.len() != n {
            return Err(RootSysError::RankMismatch {
                expected: n,
                found: basis.len().min(b.len()),
            });
        }
        let rows: Matrix = basis
            .iter()
            .map(|beta| {
                let l = self.length2(beta);
                (0..n).map(|k| q(beta[k]) * &self.lengths[k] / &l).collect()
            })
            .collect();
        linalg::solve(&rows, b).map(Weight).ok_or_else(|| {
            RootSysError::InvalidSubsystem("basis is not linearly independent".into())
        })
    }

    /// ε-coordinates of `μ` restricted to a type D_n subsystem.
    ///
    /// `basis` must be ordered as in Bourbaki Planche IV: a chain
    /// `β_1 - … - β_{n-2}` with `β_{n-1}` and `β_n` both attached to
    /// `β_{n-2}`.
    pub fn subsystem_epsilon_coords(
        &self,
        mu: &Weight,
        basis: &[Root],
    ) -> Result<Vec<Q>, RootSysError> {
        let n = basis.len();
        if n < 4 {
            return Err(RootSysError::InvalidSubsystem(format!(
                "a D_n basis needs at least 4 roots, got {n}"
            )));
        }
        if let Some(bad) = basis.iter().find(|b| !self.is_root(b)) {
            return Err(RootSysError::InvalidSubsystem(format!(
                "{bad} is not a root"
            )));
        }
        let expected = cartan_matrix(Series::D(n));
        let found = self.cartan_of(basis);
        if found != expected {
            return Err(RootSysError::InvalidSubsystem(format!(
                "Cartan matrix of the basis is not of type D{n}"
            )));
        }
        let b: Vec<Q> = basis.iter().map(|beta| self.pairing(mu, beta)).collect();
        let e = epsilon_matrix(Series::D(n)).expect("D_n has an ε-map");
        Ok((0..n)
            .map(|k| {
                let mut acc = Q::zero();
                for i in 0..n {
                    acc += &b[i] * &e[i][k];
                }
                acc
            })
            .collect())
    }
}

fn cartan_matrix(series: Series) -> Vec<Vec<i64>> {
    let n = series.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match series {
        Series::E6 | Series::E7 | Series::E8 => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for k in 4..n {
                link(k, k + 1);
            }
        }
        Series::D(_) => {
            for k in 1..n - 1 {
                link(k, k + 1);
            }
            link(n - 2, n);
        }
        Series::F4 => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
            a[1][2] = -2;
        }
        Series::G2 => {
            link(1, 2);
            a[1][0] = -3;
        }
    }
    a
}

fn epsilon_matrix(series: Series) -> Option<Matrix> {
    let half = qr(1, 2);
    match series {
        Series::F4 => Some(vec![
            vec![q(1), q(1), q(0), q(0)],
            vec![q(2), q(1), q(1), q(0)],
            vec![qr(3, 2), half.clone(), half.clone(), half],
            vec![q(1), q(0), q(0), q(0)],
        ]),
        Series::G2 => Some(vec![vec![q(0), q(-1), q(1)], vec![q(-1), q(-1), q(2)]]),
        Series::D(n) => {
            let mut m = vec![vec![Q::zero(); n]; n];
            for (i, row) in m.iter_mut().enumerate().take(n - 2) {
                for x in row.iter_mut().take(i + 1) {
                    *x = Q::one();
                }
            }
            m[n - 2].fill(half.clone());
            m[n - 1].fill(half.clone());
            m[n - 2][n - 1] = -half;
            Some(m)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for (s, n) in [
            (Series::E6, 36),
            (Series::E7, 63),
            (Series::E8, 120),
            (Series::F4, 24),
            (Series::G2, 6),
            (Series::D(8), 56),
        ] {
            assert_eq!(
                RootSystem::build(s).unwrap().positive_roots().len(),
                n,
                "{s}"
            );
        }
    }

    #[test]
    fn highest_roots() {
        let e8 = RootSystem::build(Series::E8).unwrap();
        assert_eq!(e8.highest_root(), &Root(vec![2, 3, 4, 6, 5, 4, 3, 2]));
        let g2 = RootSystem::build(Series::G2).unwrap();
        assert_eq!(g2.highest_root(), &Root(vec![3, 2]));
    }

    #[test]
    fn rejects_unknown_series() {
        assert!("E9".parse::<Series>().is_err());
        assert!("D3".parse::<Series>().is_err());
        assert_eq!("D8".parse::<Series>().unwrap(), Series::D(8));
    }
}
