//! Approximate spectra by cyclic Jacobi rotations.
//!
//! Only used to bound the integer scan and to cross-check exact results;
//! nothing here is trusted as a proof.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::board::QueensGraph;
use crate::error::{input_err, QueensError, Result};

/// Largest board accepted by [`dense_spectrum`] (1024 vertices).
pub const MAX_FLOAT_N: usize = 32;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_WINDOW: f64 = 1e-5;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub n: usize,
    pub tol: f64,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Sum of squared eigenvalues, i.e. `trace(A^2) = 2|E|`.
    pub fn second_moment(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Integers within `window` of some eigenvalue.
    pub fn integer_candidates(&self, window: f64) -> Result<BTreeSet<i64>> {
        check_window(window)?;
        Ok(self
            .eigenvalues
            .iter()
            .filter(|x| (*x - x.round()).abs() <= window)
            .map(|x| x.round() as i64)
            .collect())
    }

    /// Number of eigenvalues within `window` of `z`.
    pub fn cluster_count(&self, z: i64, window: f64) -> Result<usize> {
        check_window(window)?;
        let z = z as f64;
        Ok(self.eigenvalues.iter().filter(|x| (*x - z).abs() <= window).count())
    }
}

fn check_window(window: f64) -> Result<()> {
    if window > 0.0 && window < 0.5 {
        Ok(())
    } else {
        input_err(format!("window {window} outside (0, 0.5)"))
    }
}

/// All eigenvalues of the adjacency matrix of Q(n).
pub fn dense_spectrum(g: &QueensGraph, tol: f64) -> Result<Spectrum> {
    if g.n() > MAX_FLOAT_N {
        return Err(QueensError::Guard(format!(
            "dense spectra limited to n <= {MAX_FLOAT_N}, got {}",
            g.n()
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return input_err(format!("tolerance must be positive, got {tol}"));
    }
    let m = g.vertex_count();
    let mut a = vec![0.0f64; m * m];
    for (u, nbrs) in g.adjacency().iter().enumerate() {
        for &v in nbrs {
            a[u * m + v] = 1.0;
        }
    }
    let mut eigenvalues = jacobi_eigenvalues(&mut a, m, tol)?;
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { n: g.n(), tol, eigenvalues })
}

fn off_diagonal_mass(a: &[f64], m: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            s += a[i * m + j] * a[i * m + j];
        }
    }
    (2.0 * s).sqrt()
}

/// Cyclic Jacobi on a full symmetric row-major matrix. Each sweep visits
/// the strict upper triangle in row-major order. Returns the diagonal once
/// the off-diagonal Frobenius norm falls below `tol`.
pub fn jacobi_eigenvalues(a: &mut [f64], m: usize, tol: f64) -> Result<Vec<f64>> {
    assert_eq!(a.len(), m * m);
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(a, m);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(QueensError::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * m + p], a[q * m + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * m + p] = app - t * apq;
                a[q * m + q] = aqq + t * apq;
                a[p * m + q] = 0.0;
                a[q * m + p] = 0.0;
                for r in 0..m {
                    if r == p || r == q {
                        continue;
                    }
                    let g = a[r * m + p];
                    let h = a[r * m + q];
                    let gp = g - s * (h + g * tau);
                    let hq = h + s * (g - h * tau);
                    a[r * m + p] = gp;
                    a[p * m + r] = gp;
                    a[r * m + q] = hq;
                    a[q * m + r] = hq;
                }
            }
        }
    }
    Ok((0..m).map(|i| a[i * m + i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spectrum(n: usize) -> Spectrum {
        dense_spectrum(&QueensGraph::new(n).unwrap(), DEFAULT_TOL).unwrap()
    }

    #[test]
    fn tiny_boards() {
        assert_eq!(spectrum(1).eigenvalues, vec![0.0]);
        let k4 = spectrum(2);
        let want = [-1.0, -1.0, -1.0, 3.0];
        for (got, want) in k4.eigenvalues.iter().zip(want) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn q5_least_eigenvalue_cluster() {
        let s = spectrum(5);
        assert!((s.min().unwrap() + 4.0).abs() < 1e-8);
        assert_eq!(s.cluster_count(-4, 1e-8).unwrap(), 4);
    }

    #[test]
    fn q4_zero_is_simple() {
        assert_eq!(spectrum(4).cluster_count(0, 1e-9).unwrap(), 1);
    }

    #[test]
    fn candidates_cover_known_integers() {
        let s11 = spectrum(11);
        let c = s11.integer_candidates(1e-6).unwrap();
        for z in [-4, -3, -2, -1, 0, 3, 4, 5, 6, 7] {
            assert!(c.contains(&z), "{z}");
        }
        assert_eq!(s11.cluster_count(7, DEFAULT_WINDOW).unwrap(), 6);
        let c6 = spectrum(6).integer_candidates(1e-6).unwrap();
        assert!(c6.contains(&-4) && c6.contains(&2));
        let empty = Spectrum { n: 0, tol: DEFAULT_TOL, eigenvalues: vec![] };
        assert!(empty.integer_candidates(1e-6).unwrap().is_empty());
    }

    #[test]
    fn moments_and_lower_bound() {
        for n in 1..=12 {
            let g = QueensGraph::new(n).unwrap();
            let s = dense_spectrum(&g, DEFAULT_TOL).unwrap();
            assert_eq!(s.eigenvalues.len(), n * n);
            assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
            let n2 = (n * n) as f64;
            assert!(s.trace().abs() < 1e-6 * n2);
            if n > 1 {
                let two_e = 2.0 * g.edge_count() as f64;
                assert!((s.second_moment() - two_e).abs() / two_e < 1e-8);
            }
            if n >= 4 {
                assert!(s.min().unwrap() >= -4.0 - 1e-6);
            }
        }
    }

    #[test]
    fn guards() {
        let s = spectrum(3);
        assert!(s.integer_candidates(0.0).is_err());
        assert!(s.cluster_count(0, 0.5).is_err());
        assert!(dense_spectrum(&QueensGraph::new(3).unwrap(), 0.0).is_err());
        assert!(matches!(
            dense_spectrum(&QueensGraph::new(33).unwrap(), DEFAULT_TOL),
            Err(QueensError::Guard(_))
        ));
    }

    #[test]
    fn json_shape() {
        let s = spectrum(1);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"n":1,"tol":1e-10,"eigenvalues":[0.0]}"#);
    }
}
