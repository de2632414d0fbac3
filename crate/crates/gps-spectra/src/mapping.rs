//! Algebraic map from the collocation interval to the radial half-line.
//!
//! The map is
//!
//! ```text
//! r(x) = L (1 + x) / (1 - x + alpha),      alpha = 2 L / r_max,
//! ```
//!
//! which sends x = -1 to r = 0 and x = +1 to r = r_max, clustering grid
//! points at small radius. Its derivatives have closed forms, and it has the
//! special property that the curvature correction
//!
//! ```text
//! v_m(x) = (3 r''^2 - 2 r''' r') / (8 r'^4)
//! ```
//!
//! vanishes identically, so the transformed Hamiltonian keeps a plain
//! potential diagonal. `vm_from_derivatives` is kept general so alternative
//! maps can be tried.

use crate::orthopoly::{self, CollocationSet};
use crate::{GpsError, Result};
use serde::{Deserialize, Serialize};

/// Grid parameters: collocation order and map shape.
///
/// `r_max` and `alpha` are the exposed knobs; the map scale is derived as
/// `L = alpha * r_max / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Collocation order N (N+1 nodes, N-1 interior).
    pub n: usize,
    /// Box radius in a.u.; the wavefunction is pinned to zero there.
    pub r_max: f64,
    /// Mapping parameter; smaller alpha clusters nodes harder at small r.
    pub alpha: f64,
}

impl Default for GridSpec {
    /// The workhorse parameter set: r_max = 200, alpha = 25, N = 300.
    fn default() -> Self {
        GridSpec {
            n: 300,
            r_max: 200.0,
            alpha: 25.0,
        }
    }
}

impl GridSpec {
    pub fn new(n: usize, r_max: f64, alpha: f64) -> Result<Self> {
        let spec = GridSpec { n, r_max, alpha };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 8 {
            return Err(GpsError::InvalidConfig(format!(
                "grid order must be >= 8, got {}",
                self.n
            )));
        }
        if !(self.r_max > 0.0) || !self.r_max.is_finite() {
            return Err(GpsError::InvalidConfig(format!(
                "r_max must be positive and finite, got {}",
                self.r_max
            )));
        }
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(GpsError::InvalidConfig(format!(
                "alpha must be positive and finite, got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    /// Map scale L = alpha * r_max / 2.
    pub fn map_scale(&self) -> f64 {
        0.5 * self.alpha * self.r_max
    }

    /// Map x in [-1, 1] to (r, r', r'', r''').
    ///
    /// r = L(1+x)/(1-x+alpha); the derivatives follow from the quotient rule:
    /// r' = L(2+alpha)/(1-x+alpha)^2, and each further derivative multiplies
    /// by the next integer over (1-x+alpha).
    pub fn map_radial(&self, x: f64) -> MapDerivatives {
        let l = self.map_scale();
        let den = 1.0 - x + self.alpha;
        let c = l * (2.0 + self.alpha);
        MapDerivatives {
            r: l * (1.0 + x) / den,
            r1: c / (den * den),
            r2: 2.0 * c / (den * den * den),
            r3: 6.0 * c / (den * den * den * den),
        }
    }

    /// Inverse map: the x that lands on a given radius in [0, r_max].
    pub fn map_inverse(&self, r: f64) -> f64 {
        let l = self.map_scale();
        (r * (1.0 + self.alpha) - l) / (r + l)
    }

    /// v_m(x) for this map; identically zero up to rounding.
    pub fn vm_term(&self, x: f64) -> f64 {
        let d = self.map_radial(x);
        vm_from_derivatives(d.r1, d.r2, d.r3)
    }
}

/// Radius and the first three map derivatives at one point.
#[derive(Debug, Clone, Copy)]
pub struct MapDerivatives {
    pub r: f64,
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

/// The curvature correction v_m = (3 r''^2 - 2 r''' r') / (8 r'^4) for any
/// map given its derivatives.
pub fn vm_from_derivatives(r1: f64, r2: f64, r3: f64) -> f64 {
    (3.0 * r2 * r2 - 2.0 * r3 * r1) / (8.0 * r1.powi(4))
}

/// A collocation set pushed through the radial map.
#[derive(Debug, Clone)]
pub struct MappedGrid {
    pub spec: GridSpec,
    pub colloc: CollocationSet,
    /// Radii at all N+1 nodes; r[0] = 0, r[N] = r_max.
    pub r: Vec<f64>,
    /// dr/dx at the nodes, strictly positive.
    pub r1: Vec<f64>,
    pub r2: Vec<f64>,
    pub r3: Vec<f64>,
}

impl MappedGrid {
    pub fn build(spec: GridSpec) -> Result<Self> {
        spec.validate()?;
        let colloc = orthopoly::lgl(spec.n)?;
        let mut r = Vec::with_capacity(colloc.len());
        let mut r1 = Vec::with_capacity(colloc.len());
        let mut r2 = Vec::with_capacity(colloc.len());
        let mut r3 = Vec::with_capacity(colloc.len());
        for &x in &colloc.nodes {
            let d = spec.map_radial(x);
            r.push(d.r);
            r1.push(d.r1);
            r2.push(d.r2);
            r3.push(d.r3);
        }
        Ok(MappedGrid {
            spec,
            colloc,
            r,
            r1,
            r2,
            r3,
        })
    }

    /// Number of interior nodes (matrix dimension), N - 1.
    pub fn interior_len(&self) -> usize {
        self.spec.n - 1
    }

    /// Interior radii r_1 .. r_{N-1}.
    pub fn interior_r(&self) -> &[f64] {
        &self.r[1..self.spec.n]
    }

    /// sqrt(w_j r'_j) at interior node j (0-based within the interior).
    ///
    /// This is the scale factor between reduced-wavefunction samples u(r_j)
    /// and the symmetric eigenproblem coordinates: the eigenvector component
    /// is sqrt(w_j r'_j) u(r_j), so a Euclidean-normalized eigenvector is
    /// exactly quadrature-normalized in integral(u^2 dr).
    pub fn weight_scale(&self, j: usize) -> f64 {
        (self.colloc.weights[j + 1] * self.r1[j + 1]).sqrt()
    }
}
