//! Density-of-states indicators: cumulative counts, 1-D wavenumber spacings
//! and the comparison against the non-relativistic quantization `x_l = n_l pi`.
//!
//! The non-relativistic baseline feeds its wavenumbers through the same
//! dispersion relation, so the comparison isolates the quantization-condition
//! difference, not the energy formula.

use crate::box1d::{spectrum_1d, Box1dError};
use crate::box3d::{group_levels, solve_mode, Box3dError, LevelTable, DEFAULT_MAX_SWEEPS, DEFAULT_TOL};
use crate::units::{dispersion, BoxGeometry, QuantumNumbers, WaveVector};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DosError {
    #[error("level table tops out at eps = {table_top}, below the requested grid top {grid_top}")]
    InsufficientSpectrum { table_top: f64, grid_top: f64 },
    #[error(transparent)]
    Solver(#[from] Box3dError),
    #[error(transparent)]
    Solver1d(#[from] Box1dError),
}

/// Cumulative state counts `N(eps)` with the spin factor 2 applied.
#[derive(Debug, Clone)]
pub struct CountingReport {
    pub grid: Vec<(f64, u64)>,
}

/// `N(eps) = 2 * sum of spatial degeneracies of levels with energy <= eps`.
/// The table must cover the whole grid.
pub fn cumulative_count(levels: &LevelTable, eps_grid: &[f64]) -> Result<CountingReport, DosError> {
    let grid_top = eps_grid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if levels.max_epsilon() < grid_top {
        return Err(DosError::InsufficientSpectrum {
            table_top: levels.max_epsilon(),
            grid_top,
        });
    }
    let grid = eps_grid
        .iter()
        .map(|&eps| {
            let n: u64 = levels
                .entries
                .iter()
                .take_while(|lv| lv.epsilon <= eps)
                .map(|lv| 2 * lv.degeneracy as u64)
                .sum();
            (eps, n)
        })
        .collect();
    Ok(CountingReport { grid })
}

/// 1-D spacing series `dx_n = x_{n+1} - x_n`; every entry is below pi and the
/// tail approaches pi (the non-relativistic spacing).
pub fn spacing_series(lambda: f64, n_max: u32) -> Result<Vec<f64>, DosError> {
    assert!(n_max >= 2);
    let modes = spectrum_1d(lambda, n_max)?;
    Ok(modes.windows(2).map(|w| w[1].x - w[0].x).collect())
}

/// Non-relativistic quantization for a triple: `u_l = n_l pi / lambda_l`,
/// energy through the same dispersion relation.
pub fn nr_quantized(geometry: &BoxGeometry, qn: &QuantumNumbers) -> (WaveVector, f64) {
    let lam = geometry.edges();
    let n = qn.as_array();
    let u = WaveVector::new([
        n[0] as f64 * PI / lam[0],
        n[1] as f64 * PI / lam[1],
        n[2] as f64 * PI / lam[2],
    ])
    .unwrap();
    let eps = dispersion(&u).value();
    (u, eps)
}

#[derive(Debug, Clone)]
pub struct LevelPair {
    pub qn: [u32; 3],
    pub eps_rel: f64,
    pub eps_nr: f64,
}

/// Counts of solutions at or below one non-relativistic level energy.
#[derive(Debug, Clone)]
pub struct ThresholdCount {
    pub threshold: f64,
    pub rel_count: u64,
    pub nr_count: u64,
}

#[derive(Debug, Clone)]
pub struct NrComparison {
    pub pairs: Vec<LevelPair>,
    pub thresholds: Vec<ThresholdCount>,
    pub nr_table: LevelTable,
    pub rel_table: LevelTable,
}

/// Solve all triples up to `n_max` both ways and compare: per-triple energy
/// pairs plus cumulative counts below each distinct non-relativistic level.
pub fn nr_comparison(geometry: &BoxGeometry, n_max: u32) -> Result<NrComparison, DosError> {
    let rel_table = crate::box3d::enumerate_spectrum(geometry, n_max)?;

    let mut nr_solutions = Vec::new();
    let mut pairs = Vec::new();
    for a in 1..=n_max {
        for b in 1..=n_max {
            for c in 1..=n_max {
                let qn = QuantumNumbers::new([a, b, c]).unwrap();
                let (u, eps_nr) = nr_quantized(geometry, &qn);
                nr_solutions.push(crate::box3d::ModeSolution {
                    qn,
                    geometry: *geometry,
                    u,
                    epsilon: eps_nr,
                    residuals: [0.0; 3],
                    iterations: 0,
                });
                let eps_rel = solve_mode(geometry, &qn, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?.epsilon;
                pairs.push(LevelPair { qn: [a, b, c], eps_rel, eps_nr });
            }
        }
    }
    let nr_table = group_levels(nr_solutions);

    let slack = |t: f64| t * (1.0 + 1e-12);
    let thresholds = nr_table
        .entries
        .iter()
        .map(|lv| {
            let t = lv.epsilon;
            let rel_count = pairs.iter().filter(|p| p.eps_rel <= slack(t)).count() as u64;
            let nr_count = pairs.iter().filter(|p| p.eps_nr <= slack(t)).count() as u64;
            ThresholdCount { threshold: t, rel_count, nr_count }
        })
        .collect();

    Ok(NrComparison { pairs, thresholds, nr_table, rel_table })
}
