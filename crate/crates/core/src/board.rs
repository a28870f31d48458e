//! Board squares and the queens graph.
//!
//! Squares are labelled `(i, j)` with 1-based row `i` (top to bottom) and
//! column `j` (left to right). Vertices are numbered row-major, so square
//! `(i, j)` of an `n`-board is vertex `(i - 1) * n + (j - 1)`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{input_err, Result};

/// A square of the board, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoardCoord {
    pub i: usize,
    pub j: usize,
}

impl BoardCoord {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    /// Checks `1 <= i, j <= n`.
    pub fn is_valid(&self, n: usize) -> bool {
        (1..=n).contains(&self.i) && (1..=n).contains(&self.j)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            input_err(format!("square {self} is off the {n}x{n} board"))
        }
    }

    /// Inverse of [`vertex_index`]. `index` must be below `n * n`.
    pub fn from_index(index: usize, n: usize) -> Self {
        Self {
            i: index / n + 1,
            j: index % n + 1,
        }
    }
}

impl fmt::Display for BoardCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Row-major flat index of a square.
pub fn vertex_index(c: BoardCoord, n: usize) -> Result<usize> {
    c.validate(n)?;
    Ok((c.i - 1) * n + (c.j - 1))
}

/// Queen-move adjacency between two distinct squares.
pub fn coords_adjacent(u: BoardCoord, v: BoardCoord) -> bool {
    if u == v {
        return false;
    }
    let (ui, uj, vi, vj) = (u.i as i64, u.j as i64, v.i as i64, v.j as i64);
    ui == vi || uj == vj || ui - uj == vi - vj || ui + uj == vi + vj
}

/// Closed-form degree of square `c` on an `n`-board:
/// `2(n-1)` for its row and column, plus the two diagonal lines minus itself.
pub fn degree_formula(n: usize, c: BoardCoord) -> usize {
    let (n, i, j) = (n as i64, c.i as i64, c.j as i64);
    let diag = n - (i - j).abs() - 1;
    let anti = n - (i + j - (n + 1)).abs() - 1;
    (2 * (n - 1) + diag + anti) as usize
}

/// The n-Queens graph, immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueensGraph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

impl QueensGraph {
    /// Builds Q(n). Every `n >= 1` is accepted.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return input_err("board size must be at least 1");
        }
        let mut adjacency = Vec::with_capacity(n * n);
        for idx in 0..n * n {
            let c = BoardCoord::from_index(idx, n);
            let mut nbrs = Vec::with_capacity(degree_formula(n, c));
            for i in 1..=n {
                for j in 1..=n {
                    let d = BoardCoord::new(i, j);
                    if coords_adjacent(c, d) {
                        nbrs.push((i - 1) * n + (j - 1));
                    }
                }
            }
            adjacency.push(nbrs);
        }
        Ok(Self { n, adjacency })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n * self.n
    }

    /// Sorted neighbor lists indexed by flat vertex index.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, c: BoardCoord) -> Result<usize> {
        let v = vertex_index(c, self.n)?;
        Ok(self.adjacency[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Matrix Market coordinate text for the adjacency pattern. Each edge is
    /// listed once in the lower triangle with 1-based indices.
    pub fn to_matrix_market(&self) -> String {
        let m = self.vertex_count();
        let mut out = String::new();
        out.push_str("%%MatrixMarket matrix coordinate pattern symmetric\n");
        let _ = writeln!(out, "% queens graph Q({}), row-major squares", self.n);
        let _ = writeln!(out, "{m} {m} {}", self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v < u) {
                let _ = writeln!(out, "{} {}", u + 1, v + 1);
            }
        }
        out
    }
}

/// A symmetric pattern read back from Matrix Market text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePattern {
    pub dim: usize,
    /// Sorted neighbor lists, both directions filled in.
    pub neighbors: Vec<Vec<usize>>,
}

impl SparsePattern {
    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// Parses a square symmetric (or general) coordinate pattern. Explicit
/// diagonal entries are rejected since the graphs here have no loops.
pub fn read_matrix_market(text: &str) -> Result<SparsePattern> {
    let mut lines = text.lines();
    let header = match lines.next() {
        Some(h) => h.to_ascii_lowercase(),
        None => return input_err("empty Matrix Market input"),
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() < 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" || fields[2] != "coordinate" {
        return input_err(format!("unsupported Matrix Market header: {header}"));
    }
    let symmetric = match fields[4] {
        "symmetric" => true,
        "general" => false,
        other => return input_err(format!("unsupported symmetry '{other}'")),
    };

    let mut body = lines.map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('%'));
    let size_line = match body.next() {
        Some(l) => l,
        None => return input_err("missing size line"),
    };
    let dims = parse_usizes(size_line)?;
    if dims.len() != 3 || dims[0] != dims[1] {
        return input_err(format!("expected square 'rows cols nnz', got '{size_line}'"));
    }
    let (dim, nnz) = (dims[0], dims[2]);

    let mut neighbors = vec![Vec::new(); dim];
    let mut seen = 0usize;
    for line in body {
        let vals = parse_usizes(line)?;
        if vals.len() < 2 {
            return input_err(format!("malformed entry '{line}'"));
        }
        let (r, c) = (vals[0], vals[1]);
        if r == 0 || c == 0 || r > dim || c > dim {
            return input_err(format!("entry '{line}' out of range 1..={dim}"));
        }
        if r == c {
            return input_err(format!("diagonal entry '{line}' in a loopless pattern"));
        }
        seen += 1;
        neighbors[r - 1].push(c - 1);
        if symmetric {
            neighbors[c - 1].push(r - 1);
        }
    }
    if seen != nnz {
        return input_err(format!("size line declares {nnz} entries, found {seen}"));
    }
    for list in &mut neighbors {
        list.sort_unstable();
        list.dedup();
    }
    Ok(SparsePattern { dim, neighbors })
}

fn parse_usizes(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().or_else(|_| input_err(format!("bad integer '{t}'"))))
        .collect()
}
