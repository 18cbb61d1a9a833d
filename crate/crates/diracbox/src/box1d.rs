//! 1-D MIT-bag spectrum: roots of `tan(x) = -x/lambda` with `x = kL`.
//!
//! The right side is negative for every `k > 0`, so the n-th root lies in
//! `((n - 1/2) pi, n pi)`. Negative-energy levels mirror the positive ones
//! exactly, so they are generated by sign flip rather than re-solved.

use crate::rootfind::{self, Bracket, RootError};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Box1dError {
    #[error("1-D solve failed for n = {n} at lambda = {lambda}: {source}")]
    Convergence {
        n: u32,
        lambda: f64,
        #[source]
        source: RootError,
    },
}

/// One converged 1-D level. `x = kL` is the phase, `u = hbar k/(mc)`.
/// `residual` is `|tan x + x/lambda|` scaled by `max(1, x/lambda)`.
#[derive(Debug, Clone, Copy)]
pub struct Mode1D {
    pub n: u32,
    pub x: f64,
    pub u: f64,
    pub epsilon: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// Branch interval for the n-th root, in the phase variable.
pub fn branch_bracket(n: u32) -> Bracket {
    Bracket::open((n as f64 - 0.5) * PI, n as f64 * PI)
}

/// Solve `tan(x) = -x/lambda` on the n-th branch.
pub fn solve_1d_mode(lambda: f64, n: u32) -> Result<Mode1D, Box1dError> {
    assert!(lambda > 0.0 && lambda.is_finite(), "lambda must be positive");
    assert!(n >= 1, "branch index starts at 1");
    let f = |x: f64| x.tan() + x / lambda;
    let report = rootfind::bisect(
        f,
        &branch_bracket(n),
        rootfind::DEFAULT_TOL_X,
        rootfind::DEFAULT_TOL_F,
        rootfind::DEFAULT_MAX_ITER,
    )
    .map_err(|source| Box1dError::Convergence { n, lambda, source })?;
    let x = report.root;
    let u = x / lambda;
    Ok(Mode1D {
        n,
        x,
        u,
        epsilon: (1.0 + u * u).sqrt(),
        residual: f(x).abs() / (x / lambda).abs().max(1.0),
        iterations: report.iterations,
    })
}

/// Levels `n = 1..=n_max`, sorted by (strictly increasing) energy.
pub fn spectrum_1d(lambda: f64, n_max: u32) -> Result<Vec<Mode1D>, Box1dError> {
    (1..=n_max).map(|n| solve_1d_mode(lambda, n)).collect()
}

/// Signed energies `{-eps_n} U {+eps_n}`, ascending. The negative branch is an
/// exact sign mirror of the positive one.
pub fn mirror_spectrum(modes: &[Mode1D]) -> Vec<f64> {
    let mut out: Vec<f64> = modes.iter().rev().map(|m| -m.epsilon).collect();
    out.extend(modes.iter().map(|m| m.epsilon));
    out
}
