//! Integer vectors indexed by board squares.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::board::BoardCoord;
use crate::error::{input_err, Result};

/// An exact integer vector with one entry per square, stored row-major.
///
/// Entries are `i64`. Every family vector has entries bounded by `n` in
/// absolute value and the adjacency action multiplies that by at most `4n`,
/// so no operation in this crate comes close to overflow for boards of
/// desk-scale size; the scalar multiply is still checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoardVector {
    n: usize,
    entries: Vec<i64>,
}

impl BoardVector {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Builds a vector by evaluating `f(i, j)` on every square (1-based).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_entries(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != n * n {
            return input_err(format!("expected {} entries for n={n}, got {}", n * n, entries.len()));
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry at 1-based `(i, j)`. Panics off the board.
    pub fn at(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "({i},{j}) off board");
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn get(&self, c: BoardCoord) -> Result<i64> {
        c.validate(self.n)?;
        Ok(self.at(c.i, c.j))
    }

    pub fn set(&mut self, c: BoardCoord, value: i64) -> Result<()> {
        c.validate(self.n)?;
        self.entries[(c.i - 1) * self.n + (c.j - 1)] = value;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|&&x| x != 0).count()
    }

    /// Nonzero entries as `(square, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (BoardCoord, i64)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(move |(idx, &x)| (BoardCoord::from_index(idx, self.n), x))
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|&x| x.checked_mul(factor).ok_or(()))
            .collect::<std::result::Result<Vec<_>, _>>();
        match entries {
            Ok(entries) => Ok(Self { n: self.n, entries }),
            Err(()) => input_err(format!("overflow scaling by {factor}")),
        }
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        (1..=self.n).map(|j| self.at(i, j)).sum()
    }

    pub fn col_sum(&self, j: usize) -> i64 {
        (1..=self.n).map(|i| self.at(i, j)).sum()
    }

    /// Sum over squares with `i - j == d`.
    pub fn diag_sum(&self, d: i64) -> i64 {
        self.nonzeros()
            .filter(|(c, _)| c.i as i64 - c.j as i64 == d)
            .map(|(_, x)| x)
            .sum()
    }

    /// Sum over squares with `i + j == s`.
    pub fn anti_diag_sum(&self, s: usize) -> i64 {
        self.nonzeros().filter(|(c, _)| c.i + c.j == s).map(|(_, x)| x).sum()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.n, other.n, "board vectors of different sizes");
    }

    /// Text grid in the style of a chessboard diagram, zeros left blank.
    pub fn render_grid(&self) -> String {
        let width = self
            .entries
            .iter()
            .filter(|&&x| x != 0)
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let sep = format!("+{}\n", vec!["-".repeat(width + 2); self.n].join("+") + "+");
        let mut out = sep.clone();
        for i in 1..=self.n {
            out.push('|');
            for j in 1..=self.n {
                let x = self.at(i, j);
                let cell = if x == 0 { String::new() } else { x.to_string() };
                out.push_str(&format!(" {cell:>width$} |"));
            }
            out.push('\n');
            out.push_str(&sep);
        }
        out
    }
}

impl Add for &BoardVector {
    type Output = BoardVector;

    fn add(self, rhs: &BoardVector) -> BoardVector {
        self.check_same(rhs);
        BoardVector {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &BoardVector {
    type Output = BoardVector;

    fn sub(self, rhs: &BoardVector) -> BoardVector {
        self.check_same(rhs);
        BoardVector {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &BoardVector {
    type Output = BoardVector;

    fn neg(self) -> BoardVector {
        BoardVector {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for BoardVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_grid())
    }
}

#[derive(Serialize, Deserialize)]
struct SparseForm {
    n: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl Serialize for BoardVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SparseForm {
            n: self.n,
            entries: self.nonzeros().map(|(c, x)| (c.i, c.j, x)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoardVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let sparse = SparseForm::deserialize(deserializer)?;
        let mut v = BoardVector::zeros(sparse.n);
        for (i, j, x) in sparse.entries {
            v.set(BoardCoord::new(i, j), x).map_err(D::Error::custom)?;
        }
        Ok(v)
    }
}
