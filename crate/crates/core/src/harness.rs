//! Verification runs over one board or a range of boards.
//!
//! Conjecture flags are findings: a report can carry `false` without the run
//! failing. Only a containment failure (a known eigenvalue not found) means
//! the code itself is broken.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::board::QueensGraph;
use crate::error::{input_err, QueensError, Result};
use crate::families::{
    basis_minus4, degenerate_lambdas, e_vector, n_minus_4_descriptors, predicted_integer_spectrum,
    FamilyDescriptor, FamilyKind,
};
use crate::linalg::{is_eigenvector, Certifier, CertStatus, MultiplicityCertificate};
use crate::spectra::{dense_spectrum, DEFAULT_TOL};
use crate::vector::BoardVector;

/// Largest board for exact scans and conjecture checks.
pub const MAX_EXACT_N: usize = 32;

/// Outcome for a single family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberCheck {
    pub member: String,
    pub descriptor: FamilyDescriptor,
    pub eigenvalue: i64,
    pub nonzero: bool,
    /// `None` when the member is identically zero and was skipped.
    pub eigen_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCheck {
    pub family: String,
    pub members: Vec<MemberCheck>,
    /// Independence of the nonzero members; `None` when there are none.
    pub independent: Option<bool>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub n: usize,
    pub groups: Vec<GroupCheck>,
    /// Families that do not apply on this board, with the reason.
    pub skipped: Vec<String>,
    pub ok: bool,
}

fn check_group(
    g: &QueensGraph,
    certifier: &Certifier,
    family: &str,
    members: Vec<(FamilyDescriptor, BoardVector)>,
) -> Result<GroupCheck> {
    let mut checks = Vec::with_capacity(members.len());
    let mut live = Vec::new();
    for (desc, v) in members {
        let eigenvalue = desc.claimed_eigenvalue().expect("eigenvector families only");
        let nonzero = !v.is_zero();
        let eigen_ok = if nonzero { Some(is_eigenvector(g, &v, eigenvalue)?) } else { None };
        checks.push(MemberCheck { member: desc.to_string(), descriptor: desc, eigenvalue, nonzero, eigen_ok });
        if nonzero {
            live.push(v);
        }
    }
    let independent = if live.is_empty() {
        None
    } else {
        Some(certifier.is_linearly_independent(&live)?)
    };
    let ok = checks.iter().all(|c| c.eigen_ok != Some(false)) && independent != Some(false);
    Ok(GroupCheck { family: family.to_string(), members: checks, independent, ok })
}

/// Checks every closed-form family that applies to Q(n), `n >= 3`.
pub fn verify_families(n: usize, certifier: &Certifier) -> Result<FamilyReport> {
    if n < 3 {
        return input_err(format!("family verification needs n >= 3, got {n}"));
    }
    let g = QueensGraph::new(n)?;
    let mut groups = Vec::new();
    let mut skipped = Vec::new();

    if n >= 4 {
        let members = (1..=n - 3)
            .flat_map(|a| (1..=n - 3).map(move |b| FamilyDescriptor::x_block(n, a, b)))
            .map(|d| Ok((d, d.build()?)))
            .collect::<Result<Vec<_>>>()?;
        groups.push(check_group(&g, certifier, "x_block", members)?);
    } else {
        skipped.push("x_block: needs n >= 4".to_string());
    }

    if n % 2 == 1 {
        let members = (-3..=n as i64 - 4)
            .map(|l| FamilyDescriptor::lambda(FamilyKind::E, n, l))
            .map(|d| Ok((d, d.build()?)))
            .collect::<Result<Vec<_>>>()?;
        groups.push(check_group(&g, certifier, "e_family", members)?);
    } else {
        skipped.push("e_family: needs odd n".to_string());
    }

    let members = n_minus_4_descriptors(n)?
        .into_iter()
        .map(|d| Ok((d, d.build()?)))
        .collect::<Result<Vec<_>>>()?;
    groups.push(check_group(&g, certifier, "n_minus_4", members)?);

    let ok = groups.iter().all(|grp| grp.ok);
    Ok(FamilyReport { n, groups, skipped, ok })
}

/// Eigenvectors for λ on Q(n) supplied by the closed-form families, in
/// canonical order (E before F).
pub fn known_eigenvectors(n: usize, lambda: i64) -> Result<Vec<BoardVector>> {
    let top = n as i64 - 4;
    if n >= 4 && lambda == -4 {
        return basis_minus4(n);
    }
    if n >= 3 && lambda == top {
        return n_minus_4_descriptors(n)?.iter().map(FamilyDescriptor::build).collect();
    }
    if n >= 3 && n % 2 == 1 && (-3..top).contains(&lambda) && !degenerate_lambdas(n).contains(&lambda) {
        return Ok(vec![e_vector(n, lambda)?]);
    }
    Ok(Vec::new())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerSpectrum {
    pub n: usize,
    /// Inclusive integer interval scanned.
    pub scan_range: (i64, i64),
    /// Certificates for integers with nonzero nullity bound, ascending λ.
    pub entries: Vec<MultiplicityCertificate>,
}

impl IntegerSpectrum {
    pub fn get(&self, lambda: i64) -> Option<&MultiplicityCertificate> {
        self.entries.iter().find(|c| c.lambda == lambda)
    }

    pub fn lambdas(&self) -> BTreeSet<i64> {
        self.entries.iter().map(|c| c.lambda).collect()
    }
}

fn guard_exact(n: usize) -> Result<()> {
    if n == 0 {
        return input_err("board size must be at least 1");
    }
    if n > MAX_EXACT_N {
        return Err(QueensError::Guard(format!("exact runs limited to n <= {MAX_EXACT_N}, got {n}")));
    }
    Ok(())
}

/// Certified integer eigenvalues of Q(n). The scan covers every integer
/// within one of the float spectrum's extremes.
pub fn integer_spectrum_exact(n: usize, certifier: &Certifier) -> Result<IntegerSpectrum> {
    guard_exact(n)?;
    let g = QueensGraph::new(n)?;
    let spectrum = dense_spectrum(&g, DEFAULT_TOL)?;
    let lo = spectrum.min().unwrap_or(0.0).floor() as i64 - 1;
    let hi = spectrum.max().unwrap_or(0.0).ceil() as i64 + 1;
    let certs = (lo..=hi)
        .into_par_iter()
        .map(|lambda| {
            let known = known_eigenvectors(n, lambda)?;
            certifier.nullity_certified(&g, lambda, &known)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerSpectrum {
        n,
        scan_range: (lo, hi),
        entries: certs.into_iter().filter(|c| c.upper > 0).collect(),
    })
}

/// Multiplicity the conjecture assigns to a predicted eigenvalue, `n >= 4`.
pub fn conjectured_multiplicity(n: usize, lambda: i64) -> usize {
    if lambda == -4 {
        (n - 3) * (n - 3)
    } else if lambda == n as i64 - 4 {
        if n % 2 == 1 { (n + 1) / 2 } else { (n - 2) / 2 }
    } else {
        1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub predicted: Vec<i64>,
    pub found: Vec<MultiplicityCertificate>,
    /// Every predicted integer found with at least one verified eigenvector.
    pub containment_ok: bool,
    /// Every predicted integer CERTIFIED at its conjectured multiplicity.
    /// `None` for n = 3, where no multiplicity is claimed.
    pub multiplicity_ok: Option<bool>,
    /// No integer outside the predicted set has a nonzero nullity bound.
    /// `None` for n = 3.
    pub no_extra_integers_ok: Option<bool>,
    pub distinct_integers: usize,
    pub scan_range: (i64, i64),
}

impl ConjectureReport {
    pub fn all_ok(&self) -> bool {
        self.containment_ok
            && self.multiplicity_ok.unwrap_or(true)
            && self.no_extra_integers_ok.unwrap_or(true)
    }
}

/// Compares the exact integer spectrum of Q(n) with the predicted set and
/// conjectured multiplicities. For n = 3 only `-1 = n - 4` is claimed.
pub fn check_conjecture(n: usize, certifier: &Certifier) -> Result<ConjectureReport> {
    if n < 3 {
        return input_err(format!("conjecture checks need n >= 3, got {n}"));
    }
    guard_exact(n)?;
    let spectrum = integer_spectrum_exact(n, certifier)?;
    let special = n == 3;
    let predicted: BTreeSet<i64> = if special { BTreeSet::from([-1]) } else { predicted_integer_spectrum(n)? };

    let containment_ok = predicted
        .iter()
        .all(|&l| spectrum.get(l).is_some_and(|c| c.lower >= 1));
    let multiplicity_ok = (!special).then(|| {
        predicted.iter().all(|&l| {
            spectrum.get(l).is_some_and(|c| {
                c.status == CertStatus::Certified && c.upper == conjectured_multiplicity(n, l)
            })
        })
    });
    let no_extra_integers_ok = (!special).then(|| spectrum.lambdas().is_subset(&predicted));

    Ok(ConjectureReport {
        n,
        predicted: predicted.into_iter().collect(),
        distinct_integers: spectrum.entries.len(),
        found: spectrum.entries,
        containment_ok,
        multiplicity_ok,
        no_extra_integers_ok,
        scan_range: spectrum.scan_range,
    })
}

/// One CSV summary row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub predicted: usize,
    pub all_ok: bool,
    pub wall_seconds: f64,
}

#[derive(Debug, Clone)]
pub struct RunSummary {
    /// Ordered by n.
    pub reports: Vec<ConjectureReport>,
    pub rows: Vec<SummaryRow>,
    pub jsonl_path: Option<PathBuf>,
    pub csv_path: Option<PathBuf>,
}

impl RunSummary {
    pub fn containment_failures(&self) -> Vec<usize> {
        self.reports.iter().filter(|r| !r.containment_ok).map(|r| r.n).collect()
    }
}

/// Where the CSV summary goes for a given JSON-lines path.
pub fn csv_path_for(out: &Path) -> PathBuf {
    let csv = out.with_extension("csv");
    if csv == out {
        let mut s = out.as_os_str().to_owned();
        s.push(".summary.csv");
        PathBuf::from(s)
    } else {
        csv
    }
}

/// Runs [`check_conjecture`] for every n in `n_min..=n_max` on a pool of
/// `jobs` workers. When `out` is given, reports go there as JSON lines and a
/// CSV summary goes next to it; both files are created before any work.
pub fn run_range(
    n_min: usize,
    n_max: usize,
    out: Option<&Path>,
    jobs: usize,
    seed: u64,
) -> Result<RunSummary> {
    if !(3 <= n_min && n_min <= n_max && n_max <= MAX_EXACT_N) {
        return input_err(format!("range {n_min}..={n_max} must satisfy 3 <= from <= to <= {MAX_EXACT_N}"));
    }
    if jobs == 0 {
        return input_err("jobs must be at least 1");
    }
    let files = match out {
        Some(path) => {
            let csv = csv_path_for(path);
            Some((path.to_path_buf(), File::create(path)?, csv.clone(), File::create(&csv)?))
        }
        None => None,
    };

    let certifier = Certifier::from_seed(seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| QueensError::Input(format!("thread pool: {e}")))?;
    let timed: Vec<(ConjectureReport, f64)> = pool.install(|| {
        (n_min..=n_max)
            .into_par_iter()
            .map(|n| {
                let start = Instant::now();
                let report = check_conjecture(n, &certifier)?;
                Ok((report, start.elapsed().as_secs_f64()))
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let rows: Vec<SummaryRow> = timed
        .iter()
        .map(|(r, secs)| SummaryRow { n: r.n, predicted: r.predicted.len(), all_ok: r.all_ok(), wall_seconds: *secs })
        .collect();
    let reports: Vec<ConjectureReport> = timed.into_iter().map(|(r, _)| r).collect();

    let (mut jsonl_path, mut csv_path) = (None, None);
    if let Some((jpath, jfile, cpath, cfile)) = files {
        let mut w = BufWriter::new(jfile);
        for r in &reports {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        w.flush()?;
        let mut cw = csv::Writer::from_writer(cfile);
        for row in &rows {
            cw.serialize(row)?;
        }
        cw.flush()?;
        jsonl_path = Some(jpath);
        csv_path = Some(cpath);
    }
    Ok(RunSummary { reports, rows, jsonl_path, csv_path })
}
