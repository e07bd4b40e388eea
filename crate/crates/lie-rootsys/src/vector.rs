use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{format_vec, q, Q};

/// Integer coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    /// The simple root `α_i` (0-based index).
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// True when every coefficient is non-negative and one is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    /// Positive representative of `±self`.
    pub fn abs(&self) -> Root {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// True when the support lies inside `indices` (0-based).
    pub fn supported_on(&self, indices: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || indices.contains(&i))
    }
}

impl Deref for Root {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Exact rational coordinates over the fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    /// The fundamental weight `ϖ_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = Q::one();
        w
    }

    /// `ρ`, the sum of the fundamental weights.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![Q::one(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| q(x)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// True when every coordinate is non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }
}

impl Deref for Weight {
    type Target = [Q];
    fn deref(&self) -> &[Q] {
        &self.0
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vec(&self.0))
    }
}
