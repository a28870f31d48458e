//! Closed-form integer vector families on the board.
//!
//! * X-blocks: a fixed 4×4 sign pattern translated to offset `(a, b)`;
//!   the `(n-3)^2` translates span the eigenspace of `-4`.
//! * P/Q/E: for odd `n` and `1 <= λ+4 <= n`, `E = P + Q` satisfies
//!   `A E = λ E` (and vanishes for two values of λ).
//! * C/R/F: paired-column and paired-row indicators; `F = C + R` is an
//!   eigenvector for `n - 4` on every board with `n >= 3`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::board::BoardCoord;
use crate::error::{input_err, Result};
use crate::vector::BoardVector;

/// The 4×4 block pattern, row-major.
pub const X4_PATTERN: [[i64; 4]; 4] = [
    [0, 1, -1, 0],
    [-1, 0, 0, 1],
    [1, 0, 0, -1],
    [0, -1, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    XBlock,
    P,
    Q,
    E,
    C,
    R,
    F,
}

/// Parameters selecting a member of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyParams {
    Offset { a: usize, b: usize },
    Lambda(i64),
    Line(usize),
}

/// One family member: enough to rebuild the vector and to know what
/// eigenvalue (if any) it is claimed to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub n: usize,
    pub params: FamilyParams,
}

impl FamilyDescriptor {
    pub fn x_block(n: usize, a: usize, b: usize) -> Self {
        Self { kind: FamilyKind::XBlock, n, params: FamilyParams::Offset { a, b } }
    }

    pub fn lambda(kind: FamilyKind, n: usize, lambda: i64) -> Self {
        Self { kind, n, params: FamilyParams::Lambda(lambda) }
    }

    pub fn line(kind: FamilyKind, n: usize, ell: usize) -> Self {
        Self { kind, n, params: FamilyParams::Line(ell) }
    }

    /// `-4` for X-blocks, `λ` for E, `n - 4` for F; P, Q, C, R alone are
    /// not eigenvectors.
    pub fn claimed_eigenvalue(&self) -> Option<i64> {
        match (self.kind, self.params) {
            (FamilyKind::XBlock, _) => Some(-4),
            (FamilyKind::E, FamilyParams::Lambda(l)) => Some(l),
            (FamilyKind::F, _) => Some(self.n as i64 - 4),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<BoardVector> {
        let n = self.n;
        match (self.kind, self.params) {
            (FamilyKind::XBlock, FamilyParams::Offset { a, b }) => x_block_vector(n, a, b),
            (FamilyKind::P, FamilyParams::Lambda(l)) => p_vector(n, l),
            (FamilyKind::Q, FamilyParams::Lambda(l)) => q_vector(n, l),
            (FamilyKind::E, FamilyParams::Lambda(l)) => e_vector(n, l),
            (FamilyKind::C, FamilyParams::Line(l)) => c_vector(n, l),
            (FamilyKind::R, FamilyParams::Line(l)) => r_vector(n, l),
            (FamilyKind::F, FamilyParams::Line(l)) => f_vector(n, l),
            (kind, params) => input_err(format!("{kind:?} does not take parameters {params:?}")),
        }
    }
}

impl std::fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.n;
        match self.params {
            FamilyParams::Offset { a, b } => write!(f, "X_{n}^({a},{b})"),
            FamilyParams::Lambda(l) => write!(f, "{:?}_{{{n},{l}}}", self.kind),
            FamilyParams::Line(l) => write!(f, "{:?}_{{{n},{l}}}", self.kind),
        }
    }
}

/// The 4×4 block with its top-left corner at `(a, b)`.
pub fn x_block_vector(n: usize, a: usize, b: usize) -> Result<BoardVector> {
    if n < 4 {
        return input_err(format!("X-blocks need n >= 4, got {n}"));
    }
    if !(1..=n - 3).contains(&a) || !(1..=n - 3).contains(&b) {
        return input_err(format!("offset ({a},{b}) outside [1, {}]^2", n - 3));
    }
    Ok(BoardVector::from_fn(n, |i, j| {
        if (a..a + 4).contains(&i) && (b..b + 4).contains(&j) {
            X4_PATTERN[i - a][j - b]
        } else {
            0
        }
    }))
}

/// All `(n-3)^2` X-blocks, offsets in lexicographic order.
pub fn basis_minus4(n: usize) -> Result<Vec<BoardVector>> {
    if n < 4 {
        return input_err(format!("the -4 basis needs n >= 4, got {n}"));
    }
    let mut out = Vec::with_capacity((n - 3) * (n - 3));
    for a in 1..=n - 3 {
        for b in 1..=n - 3 {
            out.push(x_block_vector(n, a, b)?);
        }
    }
    Ok(out)
}

/// Distance `|i - j|` from the main-diagonal direction.
pub fn ominus(i: usize, j: usize) -> usize {
    i.abs_diff(j)
}

/// Distance `|i + j - (n + 1)|` from the main-antidiagonal direction.
pub fn oplus(i: usize, j: usize, n: usize) -> usize {
    (i + j).abs_diff(n + 1)
}

fn check_lambda(n: usize, lambda: i64) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return input_err(format!("P/Q/E vectors need odd n >= 3, got {n}"));
    }
    let shifted = lambda + 4;
    if shifted < 1 || shifted > n as i64 {
        return input_err(format!("lambda={lambda} outside 1 <= lambda+4 <= {n}"));
    }
    Ok(())
}

/// `k = (λ + 4) - (n - 1) / 2`, the weight on the outer band of P.
pub fn k_param(n: usize, lambda: i64) -> Result<i64> {
    check_lambda(n, lambda)?;
    Ok(lambda + 4 - (n as i64 - 1) / 2)
}

// Shared piecewise rule: `band` is the distance measured against the outer
// band n-(λ+4), `cross` the distance bounded by λ+4.
fn pq_entry(band: usize, cross: usize, outer: usize, shifted: usize, k: i64) -> i64 {
    if band == outer {
        k
    } else if band < outer && cross < shifted && band % 2 == outer % 2 {
        1
    } else {
        0
    }
}

pub fn p_vector(n: usize, lambda: i64) -> Result<BoardVector> {
    let k = k_param(n, lambda)?;
    let shifted = (lambda + 4) as usize;
    let outer = n - shifted;
    Ok(BoardVector::from_fn(n, |i, j| {
        pq_entry(ominus(i, j), oplus(i, j, n), outer, shifted, k)
    }))
}

/// Q built from its own piecewise rule (⊖ and ⊕ exchanged, sign flipped).
pub fn q_vector(n: usize, lambda: i64) -> Result<BoardVector> {
    let k = k_param(n, lambda)?;
    let shifted = (lambda + 4) as usize;
    let outer = n - shifted;
    Ok(BoardVector::from_fn(n, |i, j| {
        -pq_entry(oplus(i, j, n), ominus(i, j), outer, shifted, k)
    }))
}

/// `E = P + Q`.
pub fn e_vector(n: usize, lambda: i64) -> Result<BoardVector> {
    Ok(&p_vector(n, lambda)? + &q_vector(n, lambda)?)
}

/// The two values of λ for which E vanishes identically, `(n-9)/2` and
/// `(n-7)/2`. Only meaningful for odd `n`.
pub fn degenerate_lambdas(n: usize) -> [i64; 2] {
    let n = n as i64;
    [(n - 9) / 2, (n - 7) / 2]
}

fn check_line(n: usize, ell: usize) -> Result<()> {
    if n < 3 {
        return input_err(format!("C/R/F vectors need n >= 3, got {n}"));
    }
    if !(1..=n).contains(&ell) {
        return input_err(format!("line {ell} outside [1, {n}]"));
    }
    Ok(())
}

/// `1` on columns `ℓ` and `n + 1 - ℓ`.
pub fn c_vector(n: usize, ell: usize) -> Result<BoardVector> {
    check_line(n, ell)?;
    Ok(BoardVector::from_fn(n, |_, j| i64::from(j == ell || j == n + 1 - ell)))
}

/// `-1` on rows `ℓ` and `n + 1 - ℓ`.
pub fn r_vector(n: usize, ell: usize) -> Result<BoardVector> {
    check_line(n, ell)?;
    Ok(BoardVector::from_fn(n, |i, _| -i64::from(i == ell || i == n + 1 - ell)))
}

/// `F = C + R`.
pub fn f_vector(n: usize, ell: usize) -> Result<BoardVector> {
    Ok(&c_vector(n, ell)? + &r_vector(n, ell)?)
}

/// Descriptors of the independent `n - 4` eigenvectors: `F_1..F_{(n-2)/2}`
/// for even `n`; `E_{n,n-4}, F_1..F_{(n-1)/2}` for odd `n`.
pub fn n_minus_4_descriptors(n: usize) -> Result<Vec<FamilyDescriptor>> {
    if n < 3 {
        return input_err(format!("the n-4 family needs n >= 3, got {n}"));
    }
    let mut out = Vec::new();
    let last = if n % 2 == 0 {
        (n - 2) / 2
    } else {
        out.push(FamilyDescriptor::lambda(FamilyKind::E, n, n as i64 - 4));
        (n - 1) / 2
    };
    out.extend((1..=last).map(|ell| FamilyDescriptor::line(FamilyKind::F, n, ell)));
    Ok(out)
}

pub fn n_minus_4_family(n: usize) -> Result<Vec<BoardVector>> {
    n_minus_4_descriptors(n)?.iter().map(FamilyDescriptor::build).collect()
}

/// Integers known to be eigenvalues of Q(n), `n >= 4`:
/// `{-4, n-4}` for even n, `{-4} ∪ {-3..=n-4}` minus the two degenerate
/// values for odd n.
pub fn predicted_integer_spectrum(n: usize) -> Result<BTreeSet<i64>> {
    if n < 4 {
        return input_err(format!("predicted integer spectrum needs n >= 4, got {n}"));
    }
    let top = n as i64 - 4;
    if n % 2 == 0 {
        return Ok(BTreeSet::from([-4, top]));
    }
    let gap = degenerate_lambdas(n);
    let mut set: BTreeSet<i64> = (-3..=top).filter(|l| !gap.contains(l)).collect();
    set.insert(-4);
    Ok(set)
}

/// The five quantities whose balance `α = β + γ + δ + ε` expresses
/// `(A + 4I) E = (λ + 4) E` at one square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalSums {
    /// `(λ + 4) E(p,q)`
    pub alpha: i64,
    /// P over the antidiagonal through (p,q)
    pub beta: i64,
    /// P over the diagonal through (p,q)
    pub gamma: i64,
    /// Q over the antidiagonal
    pub delta: i64,
    /// Q over the diagonal
    pub epsilon: i64,
}

impl DiagonalSums {
    pub fn balanced(&self) -> bool {
        self.alpha == self.beta + self.gamma + self.delta + self.epsilon
    }
}

pub fn diagonal_sum_breakdown(n: usize, lambda: i64, p: usize, q: usize) -> Result<DiagonalSums> {
    let at = BoardCoord::new(p, q);
    at.validate(n)?;
    let pv = p_vector(n, lambda)?;
    let qv = q_vector(n, lambda)?;
    Ok(breakdown_from(&pv, &qv, lambda, at))
}

/// Same as [`diagonal_sum_breakdown`] for already-built P and Q.
pub fn breakdown_from(pv: &BoardVector, qv: &BoardVector, lambda: i64, at: BoardCoord) -> DiagonalSums {
    let (p, q) = (at.i, at.j);
    let diag = p as i64 - q as i64;
    DiagonalSums {
        alpha: (lambda + 4) * (pv.at(p, q) + qv.at(p, q)),
        beta: pv.anti_diag_sum(p + q),
        gamma: pv.diag_sum(diag),
        delta: qv.anti_diag_sum(p + q),
        epsilon: qv.diag_sum(diag),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(v: &BoardVector) -> Vec<Vec<i64>> {
        (1..=v.n()).map(|i| (1..=v.n()).map(|j| v.at(i, j)).collect()).collect()
    }

    #[test]
    fn x4_block_pattern() {
        let x = x_block_vector(4, 1, 1).unwrap();
        let expected = [
            ((1, 2), 1),
            ((1, 3), -1),
            ((2, 1), -1),
            ((2, 4), 1),
            ((3, 1), 1),
            ((3, 4), -1),
            ((4, 2), -1),
            ((4, 3), 1),
        ];
        assert_eq!(x.nonzero_count(), 8);
        for ((i, j), val) in expected {
            assert_eq!(x.at(i, j), val);
        }
    }

    #[test]
    fn x5_blocks_on_five_board() {
        let x22 = x_block_vector(5, 2, 2).unwrap();
        assert_eq!(
            grid(&x22),
            vec![
                vec![0, 0, 0, 0, 0],
                vec![0, 0, 1, -1, 0],
                vec![0, -1, 0, 0, 1],
                vec![0, 1, 0, 0, -1],
                vec![0, 0, -1, 1, 0],
            ]
        );
        let x11 = x_block_vector(5, 1, 1).unwrap();
        let x4 = x_block_vector(4, 1, 1).unwrap();
        for i in 1..=5 {
            for j in 1..=5 {
                let want = if i <= 4 && j <= 4 { x4.at(i, j) } else { 0 };
                assert_eq!(x11.at(i, j), want);
            }
        }
    }

    #[test]
    fn x_block_rejects_bad_offsets() {
        assert!(x_block_vector(5, 0, 1).is_err());
        assert!(x_block_vector(5, 3, 1).is_err());
        assert!(x_block_vector(3, 1, 1).is_err());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(basis_minus4(4).unwrap().len(), 1);
        assert_eq!(basis_minus4(5).unwrap().len(), 4);
        assert_eq!(basis_minus4(7).unwrap().len(), 16);
        assert!(basis_minus4(3).is_err());
        for v in basis_minus4(6).unwrap() {
            assert_eq!(v.nonzero_count(), 8);
            assert_eq!(v.entries().iter().filter(|&&x| x == 1).count(), 4);
        }
    }

    #[test]
    fn ominus_oplus_examples() {
        assert_eq!(ominus(3, 3), 0);
        assert_eq!(oplus(1, 1, 11), 10);
        assert_eq!(oplus(6, 6, 11), 0);
    }

    #[test]
    fn k_examples() {
        assert_eq!(k_param(11, -1).unwrap(), -2);
        assert_eq!(k_param(11, 7).unwrap(), 6);
        assert_eq!(k_param(3, -1).unwrap(), 2);
        assert!(k_param(10, 0).is_err());
        assert!(k_param(11, -4).is_err());
        assert!(k_param(11, 8).is_err());
    }

    #[test]
    fn p_and_q_n11_lambda_minus1() {
        let p = p_vector(11, -1).unwrap();
        let q = q_vector(11, -1).unwrap();
        // outer band of P: -2 at i⊖j = 8
        for (i, j) in [(1, 9), (2, 10), (3, 11), (9, 1), (10, 2), (11, 3)] {
            assert_eq!(p.at(i, j), -2);
        }
        // rows of P: 1s on the interior checkered triangle
        let row6: Vec<i64> = (1..=11).map(|j| p.at(6, j)).collect();
        assert_eq!(row6, vec![0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0]);
        let row9: Vec<i64> = (1..=11).map(|j| p.at(9, j)).collect();
        assert_eq!(row9, vec![-2, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(p.nonzero_count(), 6 + 21);
        // Q: +2 on its outer band, -1 inside
        assert_eq!(q.at(11, 9), 2);
        assert_eq!(q.at(1, 3), 2);
        let qrow2: Vec<i64> = (1..=11).map(|j| q.at(2, j)).collect();
        assert_eq!(qrow2, vec![0, 2, 0, -1, 0, 0, 0, 0, 0, 0, 0]);
        let qrow6: Vec<i64> = (1..=11).map(|j| q.at(6, j)).collect();
        assert_eq!(qrow6, vec![0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0]);
    }

    #[test]
    fn p_n11_lambda1_has_zero_outer_band() {
        let p = p_vector(11, 1).unwrap();
        assert_eq!(k_param(11, 1).unwrap(), 0);
        for (c, x) in p.nonzeros() {
            assert_eq!(x, 1);
            assert!(ominus(c.i, c.j) < 6);
        }
        let row6: Vec<i64> = (1..=11).map(|j| p.at(6, j)).collect();
        assert_eq!(row6, vec![0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn p_n11_lambda7_is_constant_on_main_diagonal() {
        let p = p_vector(11, 7).unwrap();
        for (c, x) in p.nonzeros() {
            assert_eq!(c.i, c.j);
            assert_eq!(x, 6);
        }
        assert_eq!(p.nonzero_count(), 11);
    }

    #[test]
    fn q_is_reflected_negated_p() {
        for n in (3..=19).step_by(2) {
            for lambda in -3..=n as i64 - 4 {
                let p = p_vector(n, lambda).unwrap();
                let q = q_vector(n, lambda).unwrap();
                for i in 1..=n {
                    for j in 1..=n {
                        assert_eq!(q.at(i, j), -p.at(n + 1 - i, j));
                        assert_eq!(q.at(i, j), -p.at(i, n + 1 - j));
                    }
                }
            }
        }
    }

    #[test]
    fn e_examples_n11() {
        let e = e_vector(11, -3).unwrap();
        // corners carry ±4
        assert_eq!(e.at(1, 11).abs(), 4);
        assert_eq!(e.at(11, 1).abs(), 4);
        assert_eq!(e.at(1, 1), -e.at(1, 11));
        assert!(e.entries().iter().all(|x| [-4, -1, 0, 1, 4].contains(x)));
        assert!(e_vector(11, 1).unwrap().is_zero());
        assert!(e_vector(11, 2).unwrap().is_zero());
        let e7 = e_vector(11, 7).unwrap();
        for (c, x) in e7.nonzeros() {
            let on_main = c.i == c.j;
            let on_anti = c.i + c.j == 12;
            assert!(on_main ^ on_anti, "center cancels");
            assert_eq!(x, if on_main { 6 } else { -6 });
        }
        assert_eq!(e7.nonzero_count(), 20);
    }

    #[test]
    fn e_vanishes_exactly_on_degenerate_lambdas() {
        for n in (3..=19).step_by(2) {
            let gap = degenerate_lambdas(n);
            for lambda in -3..=n as i64 - 4 {
                let zero = e_vector(n, lambda).unwrap().is_zero();
                assert_eq!(zero, gap.contains(&lambda), "n={n} lambda={lambda}");
            }
        }
    }

    #[test]
    fn e_rows_and_columns_sum_to_zero() {
        for n in (3..=19).step_by(2) {
            for lambda in -3..=n as i64 - 4 {
                let e = e_vector(n, lambda).unwrap();
                for l in 1..=n {
                    assert_eq!(e.row_sum(l), 0);
                    assert_eq!(e.col_sum(l), 0);
                }
            }
        }
    }

    #[test]
    fn pqe_reject_even_or_out_of_range() {
        assert!(p_vector(10, 0).is_err());
        assert!(q_vector(11, -4).is_err());
        assert!(e_vector(11, 8).is_err());
        assert!(e_vector(1, -3).is_err());
    }

    #[test]
    fn f_5_2_pattern() {
        let f = f_vector(5, 2).unwrap();
        assert_eq!(
            grid(&f),
            vec![
                vec![0, 1, 0, 1, 0],
                vec![-1, 0, -1, 0, -1],
                vec![0, 1, 0, 1, 0],
                vec![-1, 0, -1, 0, -1],
                vec![0, 1, 0, 1, 0],
            ]
        );
        assert_eq!(c_vector(5, 2).unwrap().nonzero_count(), 10);
        assert_eq!(r_vector(5, 2).unwrap().nonzero_count(), 10);
    }

    #[test]
    fn f_symmetry_and_vanishing_sum() {
        for n in 3..=15 {
            for ell in 1..=n {
                assert_eq!(f_vector(n, ell).unwrap(), f_vector(n, n + 1 - ell).unwrap());
            }
            let mut total = BoardVector::zeros(n);
            for ell in 1..=n.div_ceil(2) {
                total = &total + &f_vector(n, ell).unwrap();
            }
            assert!(total.is_zero(), "n={n}");
        }
        assert!(f_vector(2, 1).is_err());
        assert!(f_vector(5, 6).is_err());
    }

    #[test]
    fn f_line_sum_table() {
        // Row/column sums of C and R, and the four-case value of
        // (row sum of F) + (column sum of F) used to show (A+4I)F = nF.
        for n in 3..=15usize {
            let ni = n as i64;
            for ell in 1..=n {
                let pair = |x: usize| x == ell || x == n + 1 - ell;
                // the middle line of an odd board pairs with itself
                let width = if 2 * ell == n + 1 { 1 } else { 2 };
                let c = c_vector(n, ell).unwrap();
                let r = r_vector(n, ell).unwrap();
                let f = f_vector(n, ell).unwrap();
                for t in 1..=n {
                    assert_eq!(c.row_sum(t), width);
                    assert_eq!(r.col_sum(t), -width);
                    assert_eq!(c.col_sum(t), if pair(t) { ni } else { 0 });
                    assert_eq!(r.row_sum(t), if pair(t) { -ni } else { 0 });
                }
                for p in 1..=n {
                    for q in 1..=n {
                        let lines = f.col_sum(q) + f.row_sum(p);
                        let want = match (pair(p), pair(q)) {
                            (true, true) => 0,
                            (true, false) => -ni,
                            (false, true) => ni,
                            (false, false) => 0,
                        };
                        assert_eq!(lines, want);
                        assert_eq!(lines, ni * f.at(p, q));
                        assert_eq!(f.diag_sum(p as i64 - q as i64), 0);
                        assert_eq!(f.anti_diag_sum(p + q), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn n_minus_4_family_sizes() {
        assert_eq!(n_minus_4_family(4).unwrap().len(), 1);
        assert_eq!(n_minus_4_family(11).unwrap().len(), 6);
        let d3 = n_minus_4_descriptors(3).unwrap();
        assert_eq!(d3.len(), 2);
        assert_eq!(d3[0], FamilyDescriptor::lambda(FamilyKind::E, 3, -1));
        assert!(n_minus_4_family(2).is_err());
    }

    #[test]
    fn predicted_sets() {
        let v = |n| predicted_integer_spectrum(n).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(v(11), vec![-4, -3, -2, -1, 0, 3, 4, 5, 6, 7]);
        assert_eq!(v(6), vec![-4, 2]);
        assert_eq!(v(5), vec![-4, -3, 0, 1]);
        assert_eq!(v(4), vec![-4, 0]);
        assert!(predicted_integer_spectrum(3).is_err());
    }

    #[test]
    fn breakdown_examples_n11_lambda7() {
        let k = 6;
        // p+q even, p⊖q = 0, p⊕q > 0
        let s = diagonal_sum_breakdown(11, 7, 1, 1).unwrap();
        assert_eq!(s, DiagonalSums { alpha: 11 * k, beta: k, gamma: 11 * k, delta: 0, epsilon: -k });
        // p+q even, p⊖q = 0, p⊕q = 0
        let s = diagonal_sum_breakdown(11, 7, 6, 6).unwrap();
        assert_eq!(s, DiagonalSums { alpha: 0, beta: k, gamma: 11 * k, delta: -11 * k, epsilon: -k });
        // p+q even, both > 0
        let s = diagonal_sum_breakdown(11, 7, 2, 4).unwrap();
        assert_eq!(s, DiagonalSums { alpha: 0, beta: k, gamma: 0, delta: 0, epsilon: -k });
        for (p, q) in [(1, 2), (5, 8), (11, 10)] {
            let s = diagonal_sum_breakdown(11, 7, p, q).unwrap();
            assert_eq!(s, DiagonalSums { alpha: 0, beta: 0, gamma: 0, delta: 0, epsilon: 0 });
        }
    }

    #[test]
    fn breakdown_balances_everywhere() {
        for n in (3..=15).step_by(2) {
            for lambda in -3..=n as i64 - 4 {
                let pv = p_vector(n, lambda).unwrap();
                let qv = q_vector(n, lambda).unwrap();
                for p in 1..=n {
                    for q in 1..=n {
                        let s = breakdown_from(&pv, &qv, lambda, BoardCoord::new(p, q));
                        assert!(s.balanced(), "n={n} lambda={lambda} ({p},{q}): {s:?}");
                    }
                }
            }
        }
        assert!(diagonal_sum_breakdown(11, 7, 0, 1).is_err());
        assert!(diagonal_sum_breakdown(10, 6, 1, 1).is_err());
    }

    #[test]
    fn descriptors_build_and_claim() {
        let d = FamilyDescriptor::x_block(5, 2, 1);
        assert_eq!(d.claimed_eigenvalue(), Some(-4));
        assert_eq!(d.build().unwrap(), x_block_vector(5, 2, 1).unwrap());
        assert_eq!(FamilyDescriptor::lambda(FamilyKind::P, 11, 3).claimed_eigenvalue(), None);
        assert_eq!(FamilyDescriptor::line(FamilyKind::F, 9, 2).claimed_eigenvalue(), Some(5));
        let bad = FamilyDescriptor { kind: FamilyKind::F, n: 5, params: FamilyParams::Lambda(1) };
        assert!(bad.build().is_err());
    }
}
