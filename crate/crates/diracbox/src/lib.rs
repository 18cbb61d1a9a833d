//! Bound states of a relativistic spin-1/2 particle confined in 1-D and 3-D
//! boxes by MIT-bag walls.
//!
//! Everything is computed in dimensionless units: lengths in Compton
//! wavelengths `L_C = hbar/(mc)`, momenta in `mc`, energies in `mc^2`.
//! The 1-D eigenvalue condition is `tan(kL) = -hbar k/(mc)`; in 3-D each
//! wavenumber component satisfies a coupled transcendental equation solved
//! here by cyclic bracketed bisection.

pub mod box1d;
pub mod box3d;
pub mod dos;
pub mod output;
pub mod reference;
pub mod rootfind;
pub mod spinor;
pub mod units;

pub use box1d::{mirror_spectrum, solve_1d_mode, spectrum_1d, Mode1D};
pub use box3d::{
    enumerate_spectrum, reduced_dominant_equation, rhs_coupled, solve_mode, Level, LevelTable,
    ModeSolution,
};
pub use units::{dispersion, r_factor, BoxGeometry, QuantumNumbers, ScaledEnergy, WaveVector};
