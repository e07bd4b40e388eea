//! Gauss-Jordan elimination over exact rationals for the small dense
//! matrices that occur here (at most 8x8).

use num_traits::{One, Zero};

use crate::rational::Q;

/// Dense row-major matrix.
pub type Matrix = Vec<Vec<Q>>;

/// Inverse of a square matrix, or `None` when it is singular.
pub fn invert(m: &[Vec<Q>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    eliminate(&mut aug, n)?;
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `m x = b` for square non-singular `m`.
pub fn solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    eliminate(&mut aug, n)?;
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

/// Reduces the left `n` columns of `aug` to the identity.
fn eliminate(aug: &mut Matrix, n: usize) -> Option<()> {
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (x, p) in aug[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    Some(())
}

/// Rank of a (not necessarily square) integer matrix.
pub fn rank_of(rows: &[Vec<i64>]) -> usize {
    let mut m: Matrix = rows
        .iter()
        .map(|r| r.iter().map(|&x| crate::q(x)).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                let pivot_row = m[rank].clone();
                for (x, pv) in m[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * pv;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{q, qr};

    #[test]
    fn inverts_two_by_two() {
        let m = vec![vec![q(2), q(-1)], vec![q(-1), q(2)]];
        let inv = invert(&m).unwrap();
        assert_eq!(
            inv,
            vec![vec![qr(2, 3), qr(1, 3)], vec![qr(1, 3), qr(2, 3)]]
        );
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank_of(&[vec![1, 0, 1], vec![2, 0, 2], vec![0, 1, 0]]), 2);
    }
}
