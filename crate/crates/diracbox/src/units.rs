//! Dimensionless domain types and the relativistic dispersion relation.
//!
//! Box edges are `lambda_l = L_l/L_C`, momentum components `u_l = hbar k_l/(mc)`
//! and energies `epsilon = E/(mc^2)`, so no absolute constant ever appears.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DomainError {
    #[error("box edge {index} must be positive and finite, got {value}")]
    InvalidEdge { index: usize, value: f64 },
    #[error("quantum number {index} must be >= 1, got {value}")]
    InvalidQuantumNumber { index: usize, value: u32 },
    #[error("wave-vector component {index} must be non-negative and finite, got {value}")]
    InvalidComponent { index: usize, value: f64 },
}

/// Box edge lengths in units of the Compton wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxGeometry {
    lambda: [f64; 3],
}

impl BoxGeometry {
    pub fn new(lambda: [f64; 3]) -> Result<Self, DomainError> {
        for (i, &l) in lambda.iter().enumerate() {
            if !(l.is_finite() && l > 0.0) {
                return Err(DomainError::InvalidEdge { index: i, value: l });
            }
        }
        Ok(Self { lambda })
    }

    pub fn cubic(lambda: f64) -> Result<Self, DomainError> {
        Self::new([lambda; 3])
    }

    pub fn edge(&self, l: usize) -> f64 {
        self.lambda[l]
    }

    pub fn edges(&self) -> [f64; 3] {
        self.lambda
    }

    /// All three edges bitwise equal.
    pub fn is_cubic(&self) -> bool {
        self.lambda[0] == self.lambda[1] && self.lambda[1] == self.lambda[2]
    }
}

/// Triple of positive integers labeling the solution branch along each axis.
/// The `k_l = 0` branch does not exist, so every entry is at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuantumNumbers {
    n: [u32; 3],
}

impl QuantumNumbers {
    pub fn new(n: [u32; 3]) -> Result<Self, DomainError> {
        for (i, &v) in n.iter().enumerate() {
            if v < 1 {
                return Err(DomainError::InvalidQuantumNumber { index: i, value: v });
            }
        }
        Ok(Self { n })
    }

    pub fn get(&self, l: usize) -> u32 {
        self.n[l]
    }

    pub fn as_array(&self) -> [u32; 3] {
        self.n
    }

    /// Sorted copy, i.e. the unordered multiset `{n1, n2, n3}`.
    pub fn multiset(&self) -> [u32; 3] {
        let mut m = self.n;
        m.sort_unstable();
        m
    }
}

/// Momentum components in Compton units, `u_l = hbar k_l/(mc)`, all taken
/// non-negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveVector {
    u: [f64; 3],
}

impl WaveVector {
    pub fn new(u: [f64; 3]) -> Result<Self, DomainError> {
        for (i, &v) in u.iter().enumerate() {
            if !(v.is_finite() && v >= 0.0) {
                return Err(DomainError::InvalidComponent { index: i, value: v });
            }
        }
        Ok(Self { u })
    }

    pub fn component(&self, l: usize) -> f64 {
        self.u[l]
    }

    pub fn components(&self) -> [f64; 3] {
        self.u
    }

    pub fn magnitude(&self) -> f64 {
        self.magnitude_squared().sqrt()
    }

    pub fn magnitude_squared(&self) -> f64 {
        self.u.iter().map(|v| v * v).sum()
    }

    /// Unit components `khat_l = u_l/|u|`. Zero vector maps to zero components.
    pub fn unit_components(&self) -> [f64; 3] {
        let mag = self.magnitude();
        if mag == 0.0 {
            return [0.0; 3];
        }
        [self.u[0] / mag, self.u[1] / mag, self.u[2] / mag]
    }
}

/// Total energy in rest-energy units; at least 1 for any real wave vector.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ScaledEnergy {
    epsilon: f64,
}

impl ScaledEnergy {
    pub fn value(&self) -> f64 {
        self.epsilon
    }
}

/// `epsilon = sqrt(1 + u^2)` from `E^2 = (hbar k c)^2 + (mc^2)^2`.
pub fn dispersion(u: &WaveVector) -> ScaledEnergy {
    ScaledEnergy {
        epsilon: (1.0 + u.magnitude_squared()).sqrt(),
    }
}

/// `r = hbar k c/(E + mc^2) = u/(epsilon + 1)`, in `[0, 1)`.
pub fn r_factor(u: &WaveVector) -> f64 {
    u.magnitude() / (dispersion(u).value() + 1.0)
}
