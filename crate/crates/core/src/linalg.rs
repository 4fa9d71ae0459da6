//! Exact kernels by fraction-free (Bareiss) elimination.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::rational::{denominator_lcm, Q};

/// Fraction-free row echelon form of an integer matrix.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

/// Clears the denominators of each row, leaving an integer matrix with the same kernel.
pub fn integer_rows(matrix: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    matrix
        .iter()
        .map(|row| {
            let l = denominator_lcm(row);
            row.iter()
                .map(|v| (v * Q::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect()
}

/// Bareiss elimination: every intermediate division is exact.
pub fn echelon(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..cols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    // rows below r are identically zero; drop them
    rows.truncate(r);
    Echelon { rows, pivots, cols }
}

pub fn rank(matrix: &[Vec<Q>], cols: usize) -> usize {
    echelon(integer_rows(matrix), cols).pivots.len()
}

/// Basis of { v : matrix * v = 0 }, each vector scaled to a primitive integer vector.
///
/// One vector per free column, with a positive entry in that column.
pub fn nullspace(matrix: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let ech = echelon(integer_rows(matrix), cols);
    let is_pivot: Vec<bool> = (0..cols).map(|c| ech.pivots.contains(&c)).collect();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Q::zero(); cols];
        x[free] = Q::one();
        for (i, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[i];
            let mut acc = Q::zero();
            for j in (pc + 1)..cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc += Q::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -acc / Q::from_integer(row[pc].clone());
        }
        basis.push(primitive(x));
    }
    basis
}

/// Scales a rational vector to coprime integers, keeping the sign of the vector.
pub fn primitive(v: Vec<Q>) -> Vec<Q> {
    let l = denominator_lcm(&v);
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter()
        .map(|x| Q::from_integer(x / &g))
        .collect()
}

pub fn mat_vec(matrix: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn is_zero_vector(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs_max(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vector(&mat_vec(&m, v)));
        }
        assert_eq!(rank(&m, 3), 1);
    }

    #[test]
    fn rational_entries() {
        let m = vec![vec![qf(1, 2), qf(-1, 3)], vec![q(3), q(-2)]];
        let ns = nullspace(&m, 2);
        assert_eq!(ns, vec![vec![q(2), q(3)]]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        assert!(nullspace(&m, 2).is_empty());
    }

    #[test]
    fn zero_columns_are_free() {
        let m = vec![vec![q(0), q(1), q(0)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns, vec![vec![q(1), q(0), q(0)], vec![q(0), q(0), q(1)]]);
    }

    #[test]
    fn bareiss_against_brute_force_rank() {
        // 4x5 integer matrix of rank 3 (row 4 = row1 + 2 row2 - row3)
        let r1 = [1, 0, 2, -1, 3];
        let r2 = [0, 1, 1, 4, -2];
        let r3 = [2, -1, 0, 1, 1];
        let r4: Vec<i64> = (0..5).map(|i| r1[i] + 2 * r2[i] - r3[i]).collect();
        let m: Vec<Vec<Q>> = [r1.to_vec(), r2.to_vec(), r3.to_vec(), r4]
            .iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect();
        assert_eq!(rank(&m, 5), 3);
        let ns = nullspace(&m, 5);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vector(&mat_vec(&m, v)));
        }
    }
}
