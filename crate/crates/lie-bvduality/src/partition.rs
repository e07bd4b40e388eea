use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::BvTrace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BvError {
    #[error("cannot parse partition `{0}`")]
    Parse(String),

    #[error("not the partition of a nilpotent orbit in so(N): {0}")]
    Malformed(String),

    #[error("shape {} does not yield an orthogonal partition (got {})", .0.rs_shape, .0.output)]
    Unbalanced(Box<BvTrace>),
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts in ascending order.
    pub fn ascending(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Every even part occurs with even multiplicity.
    pub fn is_orthogonal(&self) -> bool {
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.multiplicity(p);
            if p % 2 == 0 && m % 2 == 1 {
                return false;
            }
            i += m;
        }
        true
    }

    pub fn transpose(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition::new(
            (1..=first)
                .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
                .collect(),
        )
    }
}

/// Exponential notation, largest part first: `(2^4, 1^8)`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.multiplicity(p);
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
            i += m;
        }
        f.write_str(")")
    }
}

/// Accepts `2,2,1,1`, `2^4,1^8` and bracketed forms.
impl FromStr for Partition {
    type Err = BvError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BvError::Parse(s.to_string());
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for tok in body.split([',', ' ']).filter(|t| !t.trim().is_empty()) {
            let tok = tok.trim();
            let (p, m) = match tok.split_once('^') {
                Some((p, m)) => (p, m.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let p: usize = p.parse().map_err(|_| bad())?;
            if p == 0 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat(p).take(m));
        }
        Ok(Partition::new(parts))
    }
}

pub fn transpose(p: &Partition) -> Partition {
    p.transpose()
}

/// `dim` of the centralizer in `so(N)` of a nilpotent with Jordan type `p`:
/// `½(Σ r_i² − #odd parts)` with `r` the transpose.
pub fn orth_centralizer_dim(p: &Partition) -> Result<usize, BvError> {
    if !p.is_orthogonal() {
        return Err(BvError::Malformed(format!(
            "{p} has an even part of odd multiplicity"
        )));
    }
    let squares: usize = p.transpose().parts().iter().map(|r| r * r).sum();
    let odd = p.parts().iter().filter(|&&x| x % 2 == 1).count();
    let twice = squares - odd;
    if twice % 2 == 1 {
        return Err(BvError::Malformed(format!("{p} gives an odd count")));
    }
    Ok(twice / 2)
}
