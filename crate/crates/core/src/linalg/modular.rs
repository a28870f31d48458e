//! Prime-field arithmetic and row reduction over GF(p) for 64-bit primes.

use rand::Rng;

use crate::error::{input_err, Result};

/// Lower end of the default modulus range, 2^61.
pub const PRIME_LO: u64 = 1 << 61;
/// Upper end (exclusive) of the default modulus range, 2^62.
pub const PRIME_HI: u64 = 1 << 62;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by Fermat; `a` must be nonzero mod the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform random prime in `[lo, hi)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R, lo: u64, hi: u64) -> u64 {
    loop {
        let candidate = rng.gen_range(lo..hi) | 1;
        if candidate < hi && is_prime(candidate) {
            return candidate;
        }
    }
}

/// Reduces a signed integer into `[0, p)`.
#[inline]
pub fn reduce_i64(x: i64, p: u64) -> u64 {
    let r = (x as i128).rem_euclid(p as i128);
    r as u64
}

/// Rank of a row-major `rows × cols` matrix already reduced mod `p`.
///
/// Gaussian elimination; the pivot is the first nonzero entry in the
/// current column at or below the current row. The matrix is consumed.
pub fn rank_reduced(mut data: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    debug_assert_eq!(data.len(), rows * cols);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                data.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = inv_mod(data[rank * cols + col], p);
        for c in col..cols {
            let idx = rank * cols + c;
            data[idx] = mul_mod(data[idx], inv, p);
        }
        let (head, tail) = data.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        for row in tail.chunks_exact_mut(cols) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for c in col..cols {
                if pivot_row[c] != 0 {
                    let v = row[c] as u128 + neg as u128 * pivot_row[c] as u128;
                    row[c] = (v % p as u128) as u64;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        input_err(format!("modulus {p} is not prime"))
    }
}
