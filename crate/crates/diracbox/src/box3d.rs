//! Coupled 3-D eigenvalue system and spectrum enumeration.
//!
//! Each wavenumber component obeys `tan(u_l lambda_l) = rhs_l(u)` with
//! `rhs_l = 2 u_l (eps + 1)/(u_l^2 - (eps + 1)^2)`, which is strictly negative
//! for `u_l > 0`, confining the n_l-th root of axis l to the phase interval
//! `((n_l - 1/2) pi, n_l pi)`. The system is solved by Gauss-Seidel cyclic
//! relaxation: each sweep re-solves one axis by bracketed bisection with the
//! other components frozen.

use crate::rootfind::{self, Bracket, RootError};
use crate::units::{dispersion, BoxGeometry, QuantumNumbers, WaveVector};
use rayon::prelude::*;
use std::f64::consts::PI;
use thiserror::Error;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_TOL_F: f64 = 1e-9;
pub const DEFAULT_MAX_SWEEPS: u32 = 500;

/// Levels merge when their energies differ by less than this, relative to
/// `max(1, eps)`.
pub const GROUPING_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum Box3dError {
    #[error("mode ({n1},{n2},{n3}) did not converge in {sweeps} sweeps (max update {last_update:.3e}, max residual {last_residual:.3e})")]
    Convergence {
        n1: u32,
        n2: u32,
        n3: u32,
        sweeps: u32,
        last_update: f64,
        last_residual: f64,
    },
    #[error("scalar sub-solve lost its bracket for mode ({n1},{n2},{n3}) axis {axis}: {source}")]
    InvalidBracket {
        n1: u32,
        n2: u32,
        n3: u32,
        axis: usize,
        #[source]
        source: RootError,
    },
}

/// A converged root of the coupled system.
///
/// `residuals[l]` is `|tan(u_l lambda_l) - rhs_l|` scaled by `max(1, |rhs_l|)`.
#[derive(Debug, Clone)]
pub struct ModeSolution {
    pub qn: QuantumNumbers,
    pub geometry: BoxGeometry,
    pub u: WaveVector,
    pub epsilon: f64,
    pub residuals: [f64; 3],
    pub iterations: u32,
}

impl ModeSolution {
    /// Phases `x_l = u_l lambda_l`.
    pub fn phases(&self) -> [f64; 3] {
        let u = self.u.components();
        let lam = self.geometry.edges();
        [u[0] * lam[0], u[1] * lam[1], u[2] * lam[2]]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }
}

/// One distinct energy with its spatial degeneracy. Spin degeneracy is never
/// folded in here.
#[derive(Debug, Clone)]
pub struct Level {
    pub epsilon: f64,
    pub degeneracy: u32,
    pub multiset: [u32; 3],
    pub members: Vec<ModeSolution>,
}

#[derive(Debug, Clone)]
pub struct LevelTable {
    pub entries: Vec<Level>,
}

impl LevelTable {
    pub fn total_solutions(&self) -> usize {
        self.entries.iter().map(|l| l.members.len()).sum()
    }

    pub fn max_epsilon(&self) -> f64 {
        self.entries.last().map_or(f64::NEG_INFINITY, |l| l.epsilon)
    }
}

/// Right side of the l-th eigenvalue equation,
/// `2 u_l (eps + 1)/(u_l^2 - (eps + 1)^2)`.
///
/// Evaluated cancellation-free via `(eps+1)^2 = u^2 + 2(eps+1)`, which turns
/// the denominator into `-(sum of the other squared components) - 2(eps+1)`.
pub fn rhs_coupled(u: &WaveVector, l: usize) -> f64 {
    let c = u.components();
    if c[l] == 0.0 {
        return 0.0;
    }
    let ep1 = dispersion(u).value() + 1.0;
    let others: f64 = (0..3).filter(|&m| m != l).map(|m| c[m] * c[m]).sum();
    -2.0 * c[l] * ep1 / (others + 2.0 * ep1)
}

/// Residual of the dominant-component reduction `tan(x) = -x * L_C/L_l`,
/// i.e. `tan(x) + x * ratio`.
pub fn reduced_dominant_equation(x: f64, ratio: f64) -> f64 {
    x.tan() + x * ratio
}

fn rhs_in_phase(x: [f64; 3], lam: [f64; 3], l: usize) -> f64 {
    let u = WaveVector::new([x[0] / lam[0], x[1] / lam[1], x[2] / lam[2]])
        .expect("phases inside branch brackets give valid components");
    rhs_coupled(&u, l)
}

/// Solve the coupled system for one quantum-number triple.
///
/// Convergence: max phase update over a sweep at most `tol` and every scaled
/// residual at most `DEFAULT_TOL_F`. If the update norm stops decreasing for
/// ten consecutive sweeps the updates are damped by one half.
pub fn solve_mode(
    geometry: &BoxGeometry,
    qn: &QuantumNumbers,
    tol: f64,
    max_sweeps: u32,
) -> Result<ModeSolution, Box3dError> {
    let lam = geometry.edges();
    let n = qn.as_array();
    let brackets: [Bracket; 3] = [
        Bracket::open((n[0] as f64 - 0.5) * PI, n[0] as f64 * PI),
        Bracket::open((n[1] as f64 - 0.5) * PI, n[1] as f64 * PI),
        Bracket::open((n[2] as f64 - 0.5) * PI, n[2] as f64 * PI),
    ];
    // branch midpoints: the right side is negative, so roots sit in the
    // upper half of each branch
    let mut x = [
        (n[0] as f64 - 0.25) * PI,
        (n[1] as f64 - 0.25) * PI,
        (n[2] as f64 - 0.25) * PI,
    ];

    let mut damping = 1.0;
    let mut stall = 0u32;
    let mut prev_update = f64::INFINITY;
    let mut last_update = f64::INFINITY;
    let mut last_residual = f64::INFINITY;

    for sweep in 1..=max_sweeps {
        let mut max_update: f64 = 0.0;
        for l in 0..3 {
            let objective = |p: f64| {
                let mut xs = x;
                xs[l] = p;
                p.tan() - rhs_in_phase(xs, lam, l)
            };
            let report = rootfind::bisect(objective, &brackets[l], 1e-13, 0.0, 200).map_err(
                |source| Box3dError::InvalidBracket {
                    n1: n[0],
                    n2: n[1],
                    n3: n[2],
                    axis: l,
                    source,
                },
            )?;
            let new = x[l] + damping * (report.root - x[l]);
            max_update = max_update.max((new - x[l]).abs());
            x[l] = new;
        }

        let residuals = phase_residuals(x, lam);
        let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
        last_update = max_update;
        last_residual = max_residual;
        if max_update <= tol && max_residual <= DEFAULT_TOL_F {
            let u = WaveVector::new([x[0] / lam[0], x[1] / lam[1], x[2] / lam[2]]).unwrap();
            return Ok(ModeSolution {
                qn: *qn,
                geometry: *geometry,
                u,
                epsilon: dispersion(&u).value(),
                residuals,
                iterations: sweep,
            });
        }

        // oscillation safety net
        if max_update >= prev_update {
            stall += 1;
            if stall >= 10 {
                damping = 0.5;
            }
        } else {
            stall = 0;
        }
        prev_update = max_update;
    }

    Err(Box3dError::Convergence {
        n1: n[0],
        n2: n[1],
        n3: n[2],
        sweeps: max_sweeps,
        last_update,
        last_residual,
    })
}

fn phase_residuals(x: [f64; 3], lam: [f64; 3]) -> [f64; 3] {
    let mut res = [0.0; 3];
    for l in 0..3 {
        let rhs = rhs_in_phase(x, lam, l);
        res[l] = (x[l].tan() - rhs).abs() / rhs.abs().max(1.0);
    }
    res
}

fn permutations() -> [[usize; 3]; 6] {
    [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

/// Solve every triple with `1 <= n_l <= n_max` and group degenerate energies.
///
/// For a cubic box only non-decreasing multisets are solved; the remaining
/// members are generated by permuting the wave-vector components, and each
/// generated member's residuals are re-checked independently.
pub fn enumerate_spectrum(geometry: &BoxGeometry, n_max: u32) -> Result<LevelTable, Box3dError> {
    assert!(n_max >= 1);
    let lam = geometry.edges();

    let solutions: Vec<ModeSolution> = if geometry.is_cubic() {
        let mut multisets = Vec::new();
        for a in 1..=n_max {
            for b in a..=n_max {
                for c in b..=n_max {
                    multisets.push([a, b, c]);
                }
            }
        }
        let solved: Vec<Result<Vec<ModeSolution>, Box3dError>> = multisets
            .par_iter()
            .map(|&ms| {
                let qn = QuantumNumbers::new(ms).unwrap();
                let base = solve_mode(geometry, &qn, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)?;
                let base_u = base.u.components();
                let mut seen = std::collections::BTreeSet::new();
                let mut members = Vec::new();
                for perm in permutations() {
                    let pn = [ms[perm[0]], ms[perm[1]], ms[perm[2]]];
                    if !seen.insert(pn) {
                        continue;
                    }
                    let pu = [base_u[perm[0]], base_u[perm[1]], base_u[perm[2]]];
                    let px = [pu[0] * lam[0], pu[1] * lam[1], pu[2] * lam[2]];
                    let residuals = phase_residuals(px, lam);
                    let u = WaveVector::new(pu).unwrap();
                    members.push(ModeSolution {
                        qn: QuantumNumbers::new(pn).unwrap(),
                        geometry: *geometry,
                        u,
                        epsilon: base.epsilon,
                        residuals,
                        iterations: base.iterations,
                    });
                }
                Ok(members)
            })
            .collect();
        let mut all = Vec::new();
        for group in solved {
            all.extend(group?);
        }
        all
    } else {
        let mut triples = Vec::new();
        for a in 1..=n_max {
            for b in 1..=n_max {
                for c in 1..=n_max {
                    triples.push([a, b, c]);
                }
            }
        }
        triples
            .par_iter()
            .map(|&t| {
                let qn = QuantumNumbers::new(t).unwrap();
                solve_mode(geometry, &qn, DEFAULT_TOL, DEFAULT_MAX_SWEEPS)
            })
            .collect::<Result<Vec<_>, _>>()?
    };

    Ok(group_levels(solutions))
}

/// Sort deterministically and merge solutions into degenerate levels.
pub fn group_levels(mut solutions: Vec<ModeSolution>) -> LevelTable {
    solutions.sort_by(|a, b| {
        a.epsilon
            .partial_cmp(&b.epsilon)
            .unwrap()
            .then(a.qn.as_array().cmp(&b.qn.as_array()))
    });
    let mut entries: Vec<Level> = Vec::new();
    for sol in solutions {
        let merge = entries
            .last()
            .is_some_and(|lv| (sol.epsilon - lv.epsilon).abs() <= GROUPING_TOL * sol.epsilon.abs().max(1.0));
        if merge {
            let lv = entries.last_mut().unwrap();
            lv.degeneracy += 1;
            lv.multiset = lv.multiset.min(sol.qn.multiset());
            lv.members.push(sol);
        } else {
            entries.push(Level {
                epsilon: sol.epsilon,
                degeneracy: 1,
                multiset: sol.qn.multiset(),
                members: vec![sol],
            });
        }
    }
    LevelTable { entries }
}
