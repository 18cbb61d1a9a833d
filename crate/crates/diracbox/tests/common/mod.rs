//! Shared brute-force oracles for the integration suites. Deliberately
//! independent of the production solvers: no bracketed bisection, no cyclic
//! relaxation — just nested grid search over the bracket box.

use diracbox::units::{BoxGeometry, QuantumNumbers};
use std::f64::consts::PI;

/// Right-hand side of the coupled condition for axis `l`, written without the
/// cancelling difference of squares: with eps + 1 = e,
/// tan(u_l lam_l) = -2 u_l e / (sum_{m != l} u_m^2 + 2 e).
fn rhs(u: [f64; 3], l: usize) -> f64 {
    let u2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    let e = (1.0 + u2).sqrt() + 1.0;
    let mut other = 0.0;
    for m in 0..3 {
        if m != l {
            other += u[m] * u[m];
        }
    }
    -2.0 * u[l] * e / (other + 2.0 * e)
}

/// Distance of `x` from the fixed-point map `G_l(x) = n_l pi + atan(rhs_l)`.
/// Zero exactly at a solution of the coupled system on the chosen branches.
fn objective(geometry: &BoxGeometry, qn: &QuantumNumbers, x: [f64; 3]) -> f64 {
    let lam = geometry.edges();
    let n = qn.as_array();
    let u = [x[0] / lam[0], x[1] / lam[1], x[2] / lam[2]];
    let mut s = 0.0;
    for l in 0..3 {
        let g = n[l] as f64 * PI + rhs(u, l).atan();
        s += (x[l] - g) * (x[l] - g);
    }
    s
}

/// Brute-force solve of the coupled system in phase variables: nested 21^3
/// grid search over the branch bracket box, halving the box around the best
/// point each round. Returns the wave-vector components `u_l`.
pub fn brute_force_u(geometry: &BoxGeometry, qn: &QuantumNumbers) -> [f64; 3] {
    let n = qn.as_array();
    let mut center = [0.0; 3];
    let mut half = [0.0; 3];
    for l in 0..3 {
        let lo = (n[l] as f64 - 0.5) * PI;
        let hi = n[l] as f64 * PI;
        center[l] = 0.5 * (lo + hi);
        half[l] = 0.5 * (hi - lo);
    }
    const POINTS: i32 = 10; // 21 samples per axis: -10..=10
    for _ in 0..40 {
        let mut best = f64::INFINITY;
        let mut best_x = center;
        for i in -POINTS..=POINTS {
            for j in -POINTS..=POINTS {
                for k in -POINTS..=POINTS {
                    let x = [
                        center[0] + half[0] * i as f64 / POINTS as f64,
                        center[1] + half[1] * j as f64 / POINTS as f64,
                        center[2] + half[2] * k as f64 / POINTS as f64,
                    ];
                    let v = objective(geometry, qn, x);
                    if v < best {
                        best = v;
                        best_x = x;
                    }
                }
            }
        }
        center = best_x;
        for h in &mut half {
            *h *= 0.5;
        }
        if half[0].max(half[1]).max(half[2]) < 1e-13 {
            break;
        }
    }
    let lam = geometry.edges();
    [center[0] / lam[0], center[1] / lam[1], center[2] / lam[2]]
}
