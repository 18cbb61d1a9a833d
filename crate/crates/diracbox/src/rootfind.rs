//! Bracketed scalar root finding.
//!
//! Plain bisection is the contract: robust on every branch interval of the
//! eigenvalue conditions, which each contain exactly one root. Endpoints may
//! be marked open so the objective is never evaluated exactly on a tangent
//! asymptote.

use thiserror::Error;

pub const DEFAULT_TOL_X: f64 = 1e-12;
pub const DEFAULT_TOL_F: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: u32 = 200;

/// An interval known to bracket a sign change. Open endpoints are nudged
/// inward by `1e-12 * (hi - lo)` before evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub open_lo: bool,
    pub open_hi: bool,
}

impl Bracket {
    pub fn closed(lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "bracket requires lo < hi");
        Self { lo, hi, open_lo: false, open_hi: false }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "bracket requires lo < hi");
        Self { lo, hi, open_lo: true, open_hi: true }
    }

    fn effective(&self) -> (f64, f64) {
        let delta = 1e-12 * (self.hi - self.lo);
        let lo = if self.open_lo { self.lo + delta } else { self.lo };
        let hi = if self.open_hi { self.hi - delta } else { self.hi };
        (lo, hi)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveReport {
    pub root: f64,
    pub residual: f64,
    pub iterations: u32,
    pub converged: bool,
}

#[derive(Debug, Error)]
pub enum RootError {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("bisection did not meet tolerance in {iterations} iterations (last root {root}, residual {residual})")]
    MaxIterationsExceeded { root: f64, residual: f64, iterations: u32 },
}

/// Bisect `f` on `bracket` until the interval is narrower than `tol_x` or the
/// midpoint residual falls below `tol_f`.
pub fn bisect<F>(
    f: F,
    bracket: &Bracket,
    tol_x: f64,
    tol_f: f64,
    max_iter: u32,
) -> Result<SolveReport, RootError>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = bracket.effective();
    let f_lo = f(lo);
    let f_hi = f(hi);

    if f_lo == 0.0 {
        return Ok(SolveReport { root: lo, residual: 0.0, iterations: 0, converged: true });
    }
    if f_hi == 0.0 {
        return Ok(SolveReport { root: hi, residual: 0.0, iterations: 0, converged: true });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(RootError::NoSignChange { lo, hi, f_lo, f_hi });
    }

    let mut sign_lo = f_lo.signum();
    let mut mid = 0.5 * (lo + hi);
    let mut f_mid = f(mid);
    for iter in 1..=max_iter {
        if f_mid == 0.0 || f_mid.abs() <= tol_f || (hi - lo) <= tol_x {
            return Ok(SolveReport {
                root: mid,
                residual: f_mid,
                iterations: iter,
                converged: true,
            });
        }
        if f_mid.signum() == sign_lo {
            lo = mid;
            sign_lo = f_mid.signum();
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        f_mid = f(mid);
    }
    Err(RootError::MaxIterationsExceeded {
        root: mid,
        residual: f_mid,
        iterations: max_iter,
    })
}
