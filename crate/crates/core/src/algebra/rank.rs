use num_bigint::BigInt;
use num_traits::Zero;

use super::Scalar;

/// Rank over the field `F` (fraction-free for the rationals).
pub fn rank<F: Scalar>(rows: Vec<Vec<F>>) -> usize {
    F::rank(rows)
}

/// Rank by ordinary Gaussian elimination over a field.
pub fn gaussian_rank<F: Scalar>(mut rows: Vec<Vec<F>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().expect("pivot is nonzero");
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone() * inv.clone();
            for j in col..cols {
                let delta = factor.clone() * rows[r][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so each division is exact.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            for j in col + 1..cols {
                let v = &rows[r][col] * &rows[i][j] - &rows[i][col] * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[r][col].clone();
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
