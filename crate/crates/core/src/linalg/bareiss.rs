//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactMatrix;
use crate::error::{QueensError, Result};

/// Largest dimension accepted by [`rank_exact_bareiss`]. Intermediate
/// entries are minors of the input and grow roughly linearly in bit length
/// with the step count.
pub const BAREISS_MAX_DIM: usize = 150;

/// Rank over ℚ. Square inputs are limited to [`BAREISS_MAX_DIM`]; for
/// rectangular inputs the limit applies to the shorter side.
pub fn rank_exact_bareiss(m: &ExactMatrix) -> Result<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows.min(cols) > BAREISS_MAX_DIM {
        return Err(QueensError::Guard(format!(
            "Bareiss elimination limited to dimension {BAREISS_MAX_DIM}, got {rows}x{cols}; use the modular rank"
        )));
    }
    // Work on the orientation with fewer rows: same rank, fewer updates.
    let (r, c, data): (usize, usize, Vec<BigInt>) = if rows <= cols {
        (rows, cols, m.data().iter().map(|&x| BigInt::from(x)).collect())
    } else {
        let t = (0..cols)
            .flat_map(|j| (0..rows).map(move |i| (i, j)))
            .map(|(i, j)| BigInt::from(m.get(i, j)))
            .collect();
        (cols, rows, t)
    };
    Ok(bareiss_rank(data, r, c))
}

fn bareiss_rank(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        let pv = &pivot_row[col];
        for row in tail.chunks_exact_mut(cols) {
            let lead = std::mem::take(&mut row[col]);
            for c in col + 1..cols {
                // exact: every entry here is a minor of the input
                let num = pv * &row[c] - &lead * &pivot_row[c];
                row[c] = num / &prev;
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}
