use std::cmp::Ordering;
use std::fmt;

use lie_rootsys::Q;
use num_traits::Zero;

use crate::{BvError, Partition};

/// An entry of the insertion sequence; `0̂` is a zero ordered just above 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub value: Q,
    pub hat: bool,
}

impl Letter {
    pub fn plain(value: Q) -> Self {
        Letter { value, hat: false }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value).then(self.hat.cmp(&other.hat))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hat {
            f.write_str("0^")
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Row lengths of the insertion tableau. Each value bumps the leftmost
/// entry strictly greater than it.
pub fn rs_shape<T: Ord + Clone>(seq: &[T]) -> Partition {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for x in seq {
        let mut cur = x.clone();
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![cur]);
                break;
            }
            let row = &mut rows[r];
            match row.iter().position(|y| *y > cur) {
                Some(k) => {
                    cur = std::mem::replace(&mut row[k], cur);
                    r += 1;
                }
                None => {
                    row.push(cur);
                    break;
                }
            }
        }
    }
    Partition::new(rows.iter().map(Vec::len).collect())
}

/// Every stage of the type `D` algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BvTrace {
    pub input_sequence: Vec<Letter>,
    pub rs_shape: Partition,
    /// Row shape in ascending order, padded by a leading 0 to even length.
    pub q: Vec<usize>,
    /// `r_i = q_i + (i − 1)`.
    pub r: Vec<usize>,
    pub evens: Vec<usize>,
    pub odds: Vec<usize>,
    /// `evens = 2s`.
    pub s: Vec<usize>,
    /// `odds = 2t + 1`.
    pub t: Vec<usize>,
    pub merged: Vec<usize>,
    /// Entries of `merged` in odd positions.
    pub s_prime: Vec<usize>,
    /// Entries of `merged` in even positions.
    pub t_prime: Vec<usize>,
    /// `(2s′ + 1) ∪ 2t′`, sorted.
    pub r_prime: Vec<usize>,
    /// `q′_i = r′_i − (i − 1)`, ascending.
    pub q_prime: Vec<usize>,
    pub output: Partition,
}

/// Runs the algorithm on ε-coordinates `(a_1, …, a_n)`.
///
/// The sequence `(a_1, …, a_n, −a_n, …, −a_1)` is inserted with its first
/// zero read as `0̂`. Some inputs with repeated `|a_i|` produce a shape for
/// which the `s`, `t` bookkeeping does not return an orthogonal partition
/// of `2n`; those are reported as [`BvError::Unbalanced`] with the trace.
pub fn bv_type_d(eps: &[Q]) -> Result<BvTrace, BvError> {
    let mut input_sequence: Vec<Letter> = eps
        .iter()
        .cloned()
        .chain(eps.iter().rev().map(|a| -a))
        .map(Letter::plain)
        .collect();
    if let Some(z) = input_sequence.iter_mut().find(|l| l.value.is_zero()) {
        z.hat = true;
    }
    let shape = rs_shape(&input_sequence);
    let mut qv = shape.ascending();
    // The r, s, t bookkeeping needs an even number of parts.
    if qv.len() % 2 == 1 {
        qv.insert(0, 0);
    }
    let r: Vec<usize> = qv.iter().enumerate().map(|(i, x)| x + i).collect();
    let evens: Vec<usize> = r.iter().copied().filter(|x| x % 2 == 0).collect();
    let odds: Vec<usize> = r.iter().copied().filter(|x| x % 2 == 1).collect();
    let s: Vec<usize> = evens.iter().map(|x| x / 2).collect();
    let t: Vec<usize> = odds.iter().map(|x| (x - 1) / 2).collect();
    let mut merged: Vec<usize> = s.iter().chain(&t).copied().collect();
    merged.sort_unstable();
    let s_prime: Vec<usize> = merged.iter().copied().step_by(2).collect();
    let t_prime: Vec<usize> = merged.iter().copied().skip(1).step_by(2).collect();
    let mut r_prime: Vec<usize> = s_prime
        .iter()
        .map(|x| 2 * x + 1)
        .chain(t_prime.iter().map(|x| 2 * x))
        .collect();
    r_prime.sort_unstable();
    let q_prime: Vec<usize> = r_prime
        .iter()
        .enumerate()
        .map(|(i, x)| x.checked_sub(i).expect("r′ is strictly increasing"))
        .collect();
    let output = Partition::new(q_prime.clone());
    let trace = BvTrace {
        input_sequence,
        rs_shape: shape,
        q: qv,
        r,
        evens,
        odds,
        s,
        t,
        merged,
        s_prime,
        t_prime,
        r_prime,
        q_prime,
        output,
    };
    if trace.output.size() != 2 * eps.len() || !trace.output.is_orthogonal() {
        return Err(BvError::Unbalanced(Box::new(trace)));
    }
    Ok(trace)
}
