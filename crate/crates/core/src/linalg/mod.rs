//! Exact linear algebra on the queens graph.
//!
//! Multiplicities are pinned by a sandwich: the number of verified,
//! independent eigenvectors is a lower bound, and the nullity of `A - λI`
//! over a prime field is an upper bound (a minor that vanishes over ℚ
//! vanishes mod every prime, so modular rank never exceeds rational rank).

mod bareiss;
mod modular;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

pub use bareiss::{rank_exact_bareiss, BAREISS_MAX_DIM};
pub use modular::{is_prime, random_prime, PRIME_HI, PRIME_LO};

use crate::board::QueensGraph;
use crate::error::{input_err, QueensError, Result};
use crate::vector::BoardVector;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Self::zeros(m, m);
        for i in 0..m {
            out.data[i * m + i] = 1;
        }
        out
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return input_err("ragged rows");
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// `A - λI` for Q(n).
    pub fn shifted_adjacency(g: &QueensGraph, lambda: i64) -> Self {
        let m = g.vertex_count();
        let mut out = Self::zeros(m, m);
        for (u, nbrs) in g.adjacency().iter().enumerate() {
            for &v in nbrs {
                out.data[u * m + v] = 1;
            }
            out.data[u * m + u] = -lambda;
        }
        out
    }

    /// One vector per row.
    pub fn from_vectors(vectors: &[BoardVector]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return input_err("empty vector list");
        };
        let n = first.n();
        if vectors.iter().any(|v| v.n() != n) {
            return input_err("vectors on different board sizes");
        }
        Ok(Self {
            rows: vectors.len(),
            cols: n * n,
            data: vectors.iter().flat_map(|v| v.entries().iter().copied()).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub(crate) fn data(&self) -> &[i64] {
        &self.data
    }
}

/// Rank over GF(p).
pub fn rank_mod_p(m: &ExactMatrix, p: u64) -> Result<usize> {
    modular::check_prime(p)?;
    let reduced = m.data.iter().map(|&x| modular::reduce_i64(x, p)).collect();
    Ok(modular::rank_reduced(reduced, m.rows, m.cols, p))
}

/// Nullity of `A - λI` over GF(p), materializing the shifted rows straight
/// from the neighbor lists.
pub fn shifted_nullity_mod_p(g: &QueensGraph, lambda: i64, p: u64) -> Result<usize> {
    modular::check_prime(p)?;
    let m = g.vertex_count();
    let diag = modular::reduce_i64(-lambda, p);
    let mut data = vec![0u64; m * m];
    for (u, nbrs) in g.adjacency().iter().enumerate() {
        let row = &mut data[u * m..(u + 1) * m];
        for &v in nbrs {
            row[v] = 1;
        }
        row[u] = diag;
    }
    Ok(m - modular::rank_reduced(data, m, m, p))
}

/// `A v` via line sums: the neighbor sum at (p,q) is the total over its row,
/// column, diagonal and antidiagonal, less four copies of `v(p,q)`.
pub fn apply_adjacency(g: &QueensGraph, v: &BoardVector) -> Result<BoardVector> {
    let n = g.n();
    if v.n() != n {
        return input_err(format!("vector on a {}-board, graph on a {n}-board", v.n()));
    }
    let mut rows = vec![0i64; n];
    let mut cols = vec![0i64; n];
    // diagonal i-j+n-1 and antidiagonal i+j (0-based) both span 0..2n-1
    let mut diag = vec![0i64; 2 * n - 1];
    let mut anti = vec![0i64; 2 * n - 1];
    for i in 0..n {
        for j in 0..n {
            let x = v.entries()[i * n + j];
            rows[i] += x;
            cols[j] += x;
            diag[i + n - 1 - j] += x;
            anti[i + j] += x;
        }
    }
    Ok(BoardVector::from_fn(n, |i, j| {
        let (i, j) = (i - 1, j - 1);
        rows[i] + cols[j] + diag[i + n - 1 - j] + anti[i + j] - 4 * v.entries()[i * n + j]
    }))
}

/// `A v` by summing over each vertex's neighbor list.
pub fn apply_adjacency_direct(g: &QueensGraph, v: &BoardVector) -> Result<BoardVector> {
    if v.n() != g.n() {
        return input_err("board size mismatch");
    }
    let sums = g
        .adjacency()
        .iter()
        .map(|nbrs| nbrs.iter().map(|&u| v.entries()[u]).sum())
        .collect();
    BoardVector::from_entries(g.n(), sums)
}

/// Exact check of `A v = λ v`. The zero vector is rejected as an error: it
/// signals a degenerate family member, not a failed eigenvector.
pub fn is_eigenvector(g: &QueensGraph, v: &BoardVector, lambda: i64) -> Result<bool> {
    if v.is_zero() {
        return input_err("zero vector cannot be an eigenvector");
    }
    Ok(apply_adjacency(g, v)? == v.scaled(lambda)?)
}

/// Full column rank of the vectors, using the default moduli.
pub fn is_linearly_independent(vectors: &[BoardVector]) -> Result<bool> {
    Certifier::default().is_linearly_independent(vectors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertStatus {
    /// Lower bound meets upper bound.
    Certified,
    /// Gap between lower and upper bound.
    Bounded,
    /// `A - λI` is nonsingular: λ is not an eigenvalue.
    Zero,
}

/// Bounds on the multiplicity of the integer λ as an eigenvalue of Q(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityCertificate {
    pub n: usize,
    pub lambda: i64,
    /// Number of verified independent eigenvectors supplied.
    pub lower: usize,
    /// Least nullity over the moduli tried.
    pub upper: usize,
    pub primes: Vec<u64>,
    pub status: CertStatus,
}

impl MultiplicityCertificate {
    /// The multiplicity when pinned exactly.
    pub fn multiplicity(&self) -> Option<usize> {
        match self.status {
            CertStatus::Certified | CertStatus::Zero => Some(self.upper),
            CertStatus::Bounded => None,
        }
    }

    pub fn is_eigenvalue(&self) -> bool {
        self.upper > 0
    }
}

impl fmt::Display for MultiplicityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} lambda={} lower={} upper={} {:?}",
            self.n, self.lambda, self.lower, self.upper, self.status
        )
    }
}

pub const DEFAULT_SEED: u64 = 0x5155_4545_4e53; // "QUEENS"

/// Holds the moduli drawn for one run and produces certificates.
///
/// Moduli are drawn once from the seed, so results do not depend on the
/// order in which work items execute.
#[derive(Debug, Clone)]
pub struct Certifier {
    primes: [u64; 3],
    bareiss_crosscheck: bool,
}

impl Default for Certifier {
    fn default() -> Self {
        Self::from_seed(DEFAULT_SEED)
    }
}

impl Certifier {
    /// Three distinct random primes in `[2^61, 2^62)`.
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut primes = [0u64; 3];
        for k in 0..3 {
            primes[k] = loop {
                let p = random_prime(&mut rng, PRIME_LO, PRIME_HI);
                if !primes[..k].contains(&p) {
                    break p;
                }
            };
        }
        Self { primes, bareiss_crosscheck: true }
    }

    /// Explicit moduli; all must be distinct primes.
    pub fn with_primes(primes: [u64; 3]) -> Result<Self> {
        for p in primes {
            modular::check_prime(p)?;
        }
        if primes[0] == primes[1] || primes[1] == primes[2] || primes[0] == primes[2] {
            return input_err("moduli must be distinct");
        }
        Ok(Self { primes, bareiss_crosscheck: true })
    }

    /// Toggle the rational-rank cross-check on dimensions up to
    /// [`BAREISS_MAX_DIM`].
    pub fn with_bareiss_crosscheck(mut self, on: bool) -> Self {
        self.bareiss_crosscheck = on;
        self
    }

    pub fn primes(&self) -> &[u64; 3] {
        &self.primes
    }

    /// Upper bound on the multiplicity of λ: nullity over the first two
    /// moduli, plus the third when they disagree; returns the minimum and
    /// the moduli used.
    pub fn modular_nullity(&self, g: &QueensGraph, lambda: i64) -> Result<(usize, Vec<u64>)> {
        let a = shifted_nullity_mod_p(g, lambda, self.primes[0])?;
        let b = shifted_nullity_mod_p(g, lambda, self.primes[1])?;
        if a == b {
            return Ok((a, self.primes[..2].to_vec()));
        }
        let c = shifted_nullity_mod_p(g, lambda, self.primes[2])?;
        Ok((a.min(b).min(c), self.primes.to_vec()))
    }

    /// Full row rank of the vectors. A full modular rank proves
    /// independence; a deficient one is confirmed by a second modulus and,
    /// when small enough, by exact elimination.
    pub fn is_linearly_independent(&self, vectors: &[BoardVector]) -> Result<bool> {
        let m = ExactMatrix::from_vectors(vectors)?;
        let k = m.rows();
        if rank_mod_p(&m, self.primes[0])? == k || rank_mod_p(&m, self.primes[1])? == k {
            return Ok(true);
        }
        if k.min(m.cols()) <= BAREISS_MAX_DIM {
            return Ok(rank_exact_bareiss(&m)? == k);
        }
        Ok(false)
    }

    /// Multiplicity certificate for λ given eigenvectors already known.
    ///
    /// Each known vector is checked against `A v = λ v` and the set is
    /// checked for independence; a failure is reported as a family error.
    pub fn nullity_certified(
        &self,
        g: &QueensGraph,
        lambda: i64,
        known: &[BoardVector],
    ) -> Result<MultiplicityCertificate> {
        for (idx, v) in known.iter().enumerate() {
            if v.n() != g.n() {
                return input_err(format!("known vector {idx} is on a {}-board", v.n()));
            }
            let ok = is_eigenvector(g, v, lambda)
                .map_err(|e| QueensError::Family(format!("known vector {idx} for lambda={lambda}: {e}")))?;
            if !ok {
                return Err(QueensError::Family(format!(
                    "known vector {idx} fails A v = {lambda} v on Q({})",
                    g.n()
                )));
            }
        }
        if !known.is_empty() && !self.is_linearly_independent(known)? {
            return Err(QueensError::Family(format!(
                "known vectors for lambda={lambda} on Q({}) are dependent",
                g.n()
            )));
        }

        let (mut upper, primes) = self.modular_nullity(g, lambda)?;
        let dim = g.vertex_count();
        if self.bareiss_crosscheck && dim <= BAREISS_MAX_DIM {
            let rational = dim - rank_exact_bareiss(&ExactMatrix::shifted_adjacency(g, lambda))?;
            if rational > upper {
                return Err(QueensError::Invariant(format!(
                    "rational nullity {rational} exceeds modular nullity {upper} (n={}, lambda={lambda})",
                    g.n()
                )));
            }
            upper = rational;
        }

        let lower = known.len();
        if lower > upper {
            return Err(QueensError::Invariant(format!(
                "{lower} independent eigenvectors but nullity bound {upper} (n={}, lambda={lambda})",
                g.n()
            )));
        }
        let status = if upper == 0 {
            CertStatus::Zero
        } else if lower == upper {
            CertStatus::Certified
        } else {
            CertStatus::Bounded
        };
        Ok(MultiplicityCertificate { n: g.n(), lambda, lower, upper, primes, status })
    }
}
