//! Reconstruction of radial wavefunctions from eigenvectors, node counting,
//! expectation values and densities.
//!
//! An eigenvector of the symmetric Hamiltonian carries the scaled amplitudes
//! B_j = sqrt(w_j r'_j) u(r_j); dividing out the scale recovers the reduced
//! radial wavefunction u at the interior nodes, with u(0) = u(r_max) = 0
//! implied by the Dirichlet construction. Because the eigenvector has unit
//! Euclidean norm, u is automatically quadrature-normalized:
//! sum_j w_j r'_j u(r_j)^2 = 1.

use crate::mapping::MappedGrid;
use crate::{GpsError, Result};
use std::sync::Arc;

/// Threshold (relative to max |u|) below which samples are treated as
/// numerical dust when counting nodes or fixing the sign.
const NODE_DUST: f64 = 1e-10;

/// A reconstructed bound state on the grid it was solved on.
#[derive(Debug, Clone)]
pub struct RadialState {
    /// Reported energy (report scale applied).
    pub energy: f64,
    /// Angular momentum of the channel.
    pub l: u32,
    /// Radial node count; equals the state's index within its l channel.
    pub node_count: usize,
    /// Scaled eigenvector amplitudes B_j (unit Euclidean norm).
    pub amplitudes: Vec<f64>,
    /// u(r_j) at the interior nodes.
    pub u: Vec<f64>,
    /// Quadrature norm of u (1 up to rounding).
    pub norm: f64,
    pub grid: Arc<MappedGrid>,
}

/// Rebuild u(r_j) from an eigenvector, normalize, fix the sign so the first
/// rising lobe is positive, and count nodes.
pub fn reconstruct_wavefunction(
    eigvec: &[f64],
    grid: &Arc<MappedGrid>,
    l: u32,
    energy: f64,
) -> RadialState {
    let interior = grid.interior_len();
    assert_eq!(eigvec.len(), interior, "eigenvector/grid mismatch");

    let mut b: Vec<f64> = eigvec.to_vec();
    let norm2: f64 = b.iter().map(|v| v * v).sum();
    let inv = 1.0 / norm2.sqrt();
    for v in &mut b {
        *v *= inv;
    }

    let mut u: Vec<f64> = (0..interior).map(|j| b[j] / grid.weight_scale(j)).collect();

    let max_abs = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let first_sig = u.iter().find(|v| v.abs() > 1e-8 * max_abs);
    if let Some(&v) = first_sig {
        if v < 0.0 {
            for x in u.iter_mut() {
                *x = -*x;
            }
            for x in b.iter_mut() {
                *x = -*x;
            }
        }
    }

    let node_count = count_sign_changes(&u, max_abs);
    let norm: f64 = b.iter().map(|v| v * v).sum::<f64>();

    RadialState {
        energy,
        l,
        node_count,
        amplitudes: b,
        u,
        norm,
        grid: Arc::clone(grid),
    }
}

fn count_sign_changes(u: &[f64], max_abs: f64) -> usize {
    let dust = NODE_DUST * max_abs;
    let mut count = 0;
    let mut last_sign = 0i8;
    for &v in u {
        if v.abs() <= dust {
            continue;
        }
        let sign = if v > 0.0 { 1 } else { -1 };
        if last_sign != 0 && sign != last_sign {
            count += 1;
        }
        last_sign = sign;
    }
    count
}

impl RadialState {
    /// Interior radii of the grid this state lives on.
    pub fn radii(&self) -> &[f64] {
        self.grid.interior_r()
    }

    /// <r^k> by the same Lobatto quadrature that normalizes the state.
    ///
    /// k is limited to [-3, 4]; inverse powers need the centrifugal wall
    /// (k <= -2 requires l >= 1, except k = -2 for an s state whose
    /// integrand demonstrably decays toward the origin, which is allowed
    /// with a warning on stderr).
    pub fn expectation_r_power(&self, k: i32) -> Result<f64> {
        if !(-3..=4).contains(&k) {
            return Err(GpsError::Unsupported(format!(
                "expectation power k = {k} outside [-3, 4]"
            )));
        }
        if k == -3 && self.l == 0 {
            return Err(GpsError::Unsupported(
                "<r^-3> is not integrable for an s state".into(),
            ));
        }
        if k == -2 && self.l == 0 {
            // u ~ r near the origin makes u^2/r^2 integrable in practice but
            // slowly convergent; check the integrand actually decays over
            // the first few nodes before accepting.
            let r = self.radii();
            let head: Vec<f64> = (0..4.min(self.u.len()))
                .map(|j| (self.u[j] / r[j]).powi(2) * r[j])
                .collect();
            let decaying = head.windows(2).all(|w| w[0] <= w[1] * 10.0);
            if !decaying {
                return Err(GpsError::Unsupported(
                    "<r^-2> integrand does not decay toward the origin".into(),
                ));
            }
            eprintln!("warning: <r^-2> for an l=0 state converges slowly");
        }
        let r = self.radii();
        Ok(self
            .amplitudes
            .iter()
            .zip(r)
            .map(|(b, &rj)| b * b * rj.powi(k))
            .sum())
    }

    /// Radial density u^2 at arbitrary radii inside (0, r_max), via cardinal
    /// interpolation of the mapped function f(x) = u/sqrt(r').
    pub fn radial_density(&self, sample_radii: &[f64]) -> Result<Vec<(f64, f64)>> {
        let spec = &self.grid.spec;
        let mut out = Vec::with_capacity(sample_radii.len());
        for &r in sample_radii {
            if !(r > 0.0 && r < spec.r_max) {
                return Err(GpsError::InvalidConfig(format!(
                    "density sample r = {r} outside (0, {})",
                    spec.r_max
                )));
            }
            let mut x = spec.map_inverse(r);
            // Snap to a collocation node when the inverse map lands within
            // rounding distance of one, so the interpolant collapses to the
            // stored sample exactly (cardinal derivatives are O(N^2), which
            // would otherwise amplify the last-bit inversion error).
            let nodes = &self.grid.colloc.nodes;
            let pos = nodes.partition_point(|&xj| xj < x);
            for cand in [pos.saturating_sub(1), pos] {
                if cand < nodes.len() && (nodes[cand] - x).abs() <= 1e-13 {
                    x = nodes[cand];
                }
            }
            let mut f = 0.0;
            for j in 0..self.u.len() {
                let fj = self.u[j] / self.grid.r1[j + 1].sqrt();
                f += fj * self.grid.colloc.cardinal_eval(j + 1, x);
            }
            let u = spec.map_radial(x).r1.sqrt() * f;
            out.push((r, u * u));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::{assemble_hamiltonian, Convention};
    use crate::eigensolver::eigh;
    use crate::mapping::GridSpec;
    use crate::potentials::PotentialSpec;

    fn hydrogen_states(l: u32, count: usize) -> Vec<RadialState> {
        let grid =
            Arc::new(MappedGrid::build(GridSpec::new(300, 200.0, 25.0).unwrap()).unwrap());
        let h = assemble_hamiltonian(
            &grid,
            &PotentialSpec::Coulomb { z: 1.0 },
            l,
            Convention::half(),
        )
        .unwrap();
        let eig = eigh(&h.matrix).unwrap();
        (0..count)
            .map(|k| reconstruct_wavefunction(eig.eigenvector(k), &grid, l, eig.eigenvalues[k]))
            .collect()
    }

    #[test]
    fn hydrogen_ground_state_wavefunction() {
        let state = &hydrogen_states(0, 1)[0];
        // u_1s = 2 r e^{-r}.
        let r = state.radii();
        for j in 0..state.u.len() {
            if r[j] <= 20.0 {
                let expect = 2.0 * r[j] * (-r[j]).exp();
                assert!(
                    (state.u[j] - expect).abs() < 1e-6,
                    "u at r={:.3}: {} vs {expect}",
                    r[j],
                    state.u[j]
                );
            }
        }
        assert_eq!(state.node_count, 0);
        assert!((state.norm - 1.0).abs() < 1e-8);
    }

    #[test]
    fn normalization_identity_against_cardinal_coefficients() {
        // The eigenproblem coefficients A_j = sqrt(r'_j) u_j / P_N(x_j)
        // satisfy sum (2/(N(N+1))) A_j^2 = sum w_j r'_j u_j^2 exactly,
        // because w_j = 2/(N(N+1) P_N(x_j)^2).
        let state = &hydrogen_states(0, 1)[0];
        let g = &state.grid;
        let n = g.spec.n as f64;
        let lhs: f64 = (0..state.u.len())
            .map(|j| {
                let a = g.r1[j + 1].sqrt() * state.u[j] / g.colloc.pn_at_nodes[j + 1];
                2.0 / (n * (n + 1.0)) * a * a
            })
            .sum();
        let rhs: f64 = (0..state.u.len())
            .map(|j| g.colloc.weights[j + 1] * g.r1[j + 1] * state.u[j] * state.u[j])
            .sum();
        assert!((lhs - rhs).abs() < 1e-12, "identity: {lhs} vs {rhs}");
        assert!((rhs - 1.0).abs() < 1e-8, "normalization: {rhs}");
    }

    #[test]
    fn hydrogen_3s_has_two_nodes() {
        let states = hydrogen_states(0, 3);
        assert_eq!(states[2].node_count, 2);
        // Node count increases by one through the channel.
        for (k, s) in states.iter().enumerate() {
            assert_eq!(s.node_count, k, "state {k}");
        }
    }

    #[test]
    fn hydrogen_expectation_values() {
        let state = &hydrogen_states(0, 1)[0];
        let r1 = state.expectation_r_power(1).unwrap();
        assert!((r1 - 1.5).abs() < 1e-7, "<r> = {r1}");
        let rm1 = state.expectation_r_power(-1).unwrap();
        assert!((rm1 - 1.0).abs() < 1e-7, "<1/r> = {rm1}");
        assert!(state.expectation_r_power(-3).is_err());
        assert!(state.expectation_r_power(5).is_err());
    }

    #[test]
    fn harmonic_ground_r_squared() {
        let grid =
            Arc::new(MappedGrid::build(GridSpec::new(300, 200.0, 25.0).unwrap()).unwrap());
        let h = assemble_hamiltonian(
            &grid,
            &PotentialSpec::Harmonic { k: 0.5 },
            0,
            Convention::half(),
        )
        .unwrap();
        let eig = eigh(&h.matrix).unwrap();
        let state = reconstruct_wavefunction(eig.eigenvector(0), &grid, 0, eig.eigenvalues[0]);
        let r2 = state.expectation_r_power(2).unwrap();
        assert!((r2 - 1.5).abs() < 1e-7, "<r^2> = {r2}");
    }

    #[test]
    fn orthogonality_within_channel() {
        let states = hydrogen_states(0, 10);
        for a in 0..10 {
            for b in (a + 1)..10 {
                let overlap: f64 = states[a]
                    .amplitudes
                    .iter()
                    .zip(&states[b].amplitudes)
                    .map(|(x, y)| x * y)
                    .sum();
                assert!(overlap.abs() < 1e-8, "<{a}|{b}> = {overlap:.3e}");
            }
        }
    }

    #[test]
    fn density_matches_nodes_and_peaks_near_bohr_radius() {
        let state = &hydrogen_states(0, 1)[0];
        let r = state.radii().to_vec();
        // At node radii the interpolant collapses to the samples.
        let probe: Vec<f64> = (10..20).map(|j| r[j]).collect();
        let dens = state.radial_density(&probe).unwrap();
        for (k, &(rr, d)) in dens.iter().enumerate() {
            let expect = state.u[10 + k] * state.u[10 + k];
            assert!(
                (d - expect).abs() <= 1e-10 * expect.max(1e-30),
                "density at node r={rr}"
            );
        }
        // The 1s density 4 r^2 e^{-2r} peaks at r = 1.
        let fine: Vec<f64> = (1..400).map(|i| i as f64 * 0.01).collect();
        let dens = state.radial_density(&fine).unwrap();
        let peak = dens
            .iter()
            .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        assert!((peak.0 - 1.0).abs() <= 0.02, "peak at {}", peak.0);

        // Independent quadrature oracle: trapezoid over the interpolated
        // density integrates to one.
        let step = 0.005;
        let xs: Vec<f64> = (1..(40.0 / step) as usize)
            .map(|i| i as f64 * step)
            .collect();
        let dens = state.radial_density(&xs).unwrap();
        let integral: f64 = dens.iter().map(|&(_, d)| d * step).sum();
        assert!((integral - 1.0).abs() < 1e-6, "density integral {integral}");
    }

    #[test]
    fn density_rejects_out_of_range() {
        let state = &hydrogen_states(0, 1)[0];
        assert!(state.radial_density(&[0.0]).is_err());
        assert!(state.radial_density(&[500.0]).is_err());
    }

    #[test]
    fn reconstruction_is_deterministic() {
        let a = hydrogen_states(1, 2);
        let b = hydrogen_states(1, 2);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.u, y.u);
            assert_eq!(x.node_count, y.node_count);
        }
    }
}
