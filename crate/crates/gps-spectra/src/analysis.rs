//! High-level drivers: spectrum solves, parameter sweeps, critical screening
//! constants, level-ordering studies and degeneracy counting.

use crate::discretization::{assemble_hamiltonian, Convention};
use crate::eigensolver::eigh;
use crate::mapping::{GridSpec, MappedGrid};
use crate::observables::{reconstruct_wavefunction, RadialState};
use crate::potentials::PotentialSpec;
use crate::{GpsError, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// One spectrum solve: potential, channel, state count, grid, convention.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumRequest {
    pub potential: PotentialSpec,
    pub l: u32,
    pub n_states: usize,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default)]
    pub convention: Convention,
}

/// Result of a spectrum solve: reported energies ascending, reconstructed
/// states, and solver residual metadata.
#[derive(Debug)]
pub struct SpectrumResult {
    pub energies: Vec<f64>,
    pub states: Vec<RadialState>,
    /// Largest ||H v - lambda v|| over the returned pairs (pre-scale).
    pub max_residual: f64,
    pub grid: Arc<MappedGrid>,
    pub convention: Convention,
    pub l: u32,
}

/// Solve for the lowest `n_states` eigenpairs of the requested Hamiltonian.
pub fn solve_spectrum(request: &SpectrumRequest) -> Result<SpectrumResult> {
    if request.n_states == 0 {
        return Err(GpsError::InvalidConfig("n_states must be >= 1".into()));
    }
    if request.n_states > request.grid.n - 1 {
        return Err(GpsError::InvalidConfig(format!(
            "n_states = {} exceeds the interior dimension {}",
            request.n_states,
            request.grid.n - 1
        )));
    }
    let grid = Arc::new(MappedGrid::build(request.grid)?);
    let ham = assemble_hamiltonian(&grid, &request.potential, request.l, request.convention)?;
    let eig = eigh(&ham.matrix)?;

    let s = request.convention.report_scale;
    let mut energies = Vec::with_capacity(request.n_states);
    let mut states = Vec::with_capacity(request.n_states);
    let mut max_residual = 0.0f64;
    for k in 0..request.n_states {
        let e = s * eig.eigenvalues[k];
        energies.push(e);
        max_residual = max_residual.max(eig.residuals[k]);
        states.push(reconstruct_wavefunction(
            eig.eigenvector(k),
            &grid,
            request.l,
            e,
        ));
    }
    Ok(SpectrumResult {
        energies,
        states,
        max_residual,
        grid,
        convention: request.convention,
        l: request.l,
    })
}

/// Screened-Coulomb families that admit a critical screening constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScreenedFamily {
    Hulthen,
    Yukawa,
}

impl ScreenedFamily {
    fn potential(self, gamma: f64) -> PotentialSpec {
        match self {
            ScreenedFamily::Hulthen => PotentialSpec::Hulthen { z: 1.0, delta: gamma },
            ScreenedFamily::Yukawa => PotentialSpec::Yukawa { z: 1.0, lambda: gamma },
        }
    }
}

/// How bound-state existence is decided during the bisection.
#[derive(Debug, Clone, Copy)]
pub enum ExistenceTest {
    /// Count the nodes of the zero-energy regular solution: the (n_r, l)
    /// state exists iff the count exceeds n_r. Sharp at threshold; the tail
    /// crossing is resolved analytically from the free E = 0 solution.
    ZeroEnergyNodes,
    /// The box criterion: the state exists iff eigenvalue n_r of the boxed
    /// Hamiltonian lies below -eps_bind. Resolution is limited by the box:
    /// the level crosses zero when the scattering length reaches r_max, so
    /// the located gamma is biased low by O(1/r_max).
    BoxEigenvalue { grid: GridSpec, eps_bind: f64 },
}

impl Default for ExistenceTest {
    fn default() -> Self {
        ExistenceTest::ZeroEnergyNodes
    }
}

/// Outcome of a critical-screening bisection.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriticalScreeningResult {
    pub family: ScreenedFamily,
    pub n_r: usize,
    pub l: u32,
    pub gamma_c: f64,
    pub bracket_width: f64,
    pub iterations: usize,
}

/// Does the (n_r, l) state of the unit-charge screened potential exist at
/// screening gamma?
pub fn bound_state_exists(
    family: ScreenedFamily,
    n_r: usize,
    l: u32,
    gamma: f64,
    test: &ExistenceTest,
) -> Result<bool> {
    match *test {
        ExistenceTest::ZeroEnergyNodes => {
            let nodes = zero_energy_node_count(&family.potential(gamma), l, gamma)?;
            Ok(nodes > n_r)
        }
        ExistenceTest::BoxEigenvalue { grid, eps_bind } => {
            let req = SpectrumRequest {
                potential: family.potential(gamma),
                l,
                n_states: n_r + 1,
                grid,
                convention: Convention::half(),
            };
            let res = solve_spectrum(&req)?;
            Ok(res.energies[n_r] < -eps_bind)
        }
    }
}

/// Locate the critical screening constant by bisection on the existence
/// predicate: bound at `lo`, unbound at `hi`.
pub fn critical_screening(
    family: ScreenedFamily,
    n_r: usize,
    l: u32,
    bracket: (f64, f64),
    tol: f64,
    test: &ExistenceTest,
) -> Result<CriticalScreeningResult> {
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo && tol > 0.0) {
        return Err(GpsError::Bracket {
            lo,
            hi,
            reason: "need 0 < lo < hi and tol > 0".into(),
        });
    }
    if !bound_state_exists(family, n_r, l, lo, test)? {
        return Err(GpsError::Bracket {
            lo,
            hi,
            reason: format!("state not bound at the lower edge {lo}"),
        });
    }
    if bound_state_exists(family, n_r, l, hi, test)? {
        return Err(GpsError::Bracket {
            lo,
            hi,
            reason: format!("state still bound at the upper edge {hi}"),
        });
    }
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if bound_state_exists(family, n_r, l, mid, test)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(CriticalScreeningResult {
        family,
        n_r,
        l,
        gamma_c: 0.5 * (lo + hi),
        bracket_width: hi - lo,
        iterations,
    })
}

/// Closed-form estimate of the Hulthen critical screening constant,
/// delta_c = 1/[n/sqrt(2) + 0.1645 l + 0.0983 l/n]^2. Exact at l = 0
/// (reduces to 2/n^2); a percent-level approximation elsewhere. Diagnostic
/// companion to the bisection, not a substitute for it.
pub fn hulthen_critical_estimate(n: u32, l: u32) -> f64 {
    let nf = n as f64;
    let lf = l as f64;
    1.0 / (nf / 2f64.sqrt() + 0.1645 * lf + 0.0983 * lf / nf).powi(2)
}

/// Count the nodes of the regular zero-energy solution of
/// -(1/2) u'' + [V + l(l+1)/(2 r^2)] u = 0, which equals the number of bound
/// states in channel l for short-range potentials.
fn zero_energy_node_count(potential: &PotentialSpec, l: u32, gamma: f64) -> Result<usize> {
    // Integration range: past the screening tail the potential is dead and
    // the solution is exactly A r^{l+1} + B r^{-l}.
    let r_stop = if gamma > 0.0 { (45.0 / gamma).max(50.0) } else { 1e4 };
    let ll1 = (l * (l + 1)) as f64;
    let q = |r: f64| -> Result<f64> { Ok(2.0 * potential.evaluate(r)? + ll1 / (r * r)) };

    // Start on the small-r power law u ~ r^{l+1}.
    let mut r: f64 = 1e-8;
    let mut u = r.powi(l as i32 + 1);
    let mut du = (l as f64 + 1.0) * r.powi(l as i32);
    let mut nodes = 0usize;
    let mut last_sign = if u > 0.0 { 1i8 } else { -1 };

    while r < r_stop {
        // Geometric stepping, capped by the local oscillation scale.
        let qr = q(r)?;
        let mut h = 0.002 * r;
        if qr < 0.0 {
            let wavelength = 2.0 * std::f64::consts::PI / (-qr).sqrt();
            h = h.min(wavelength / 40.0);
        }
        h = h.min(r_stop - r).max(1e-10);

        // RK4 on u'' = q(r) u.
        let f = |r: f64, u: f64, du: f64| -> Result<(f64, f64)> { Ok((du, q(r)? * u)) };
        let (k1u, k1d) = f(r, u, du)?;
        let (k2u, k2d) = f(r + 0.5 * h, u + 0.5 * h * k1u, du + 0.5 * h * k1d)?;
        let (k3u, k3d) = f(r + 0.5 * h, u + 0.5 * h * k2u, du + 0.5 * h * k2d)?;
        let (k4u, k4d) = f(r + h, u + h * k3u, du + h * k3d)?;
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        du += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        r += h;

        let sign = if u > 0.0 {
            1i8
        } else if u < 0.0 {
            -1
        } else {
            0
        };
        if sign != 0 {
            if sign != last_sign {
                nodes += 1;
            }
            last_sign = sign;
        }
        // Rescale to dodge overflow on long classically-forbidden stretches.
        let mag = u.abs().max(du.abs() * r);
        if mag > 1e200 {
            u /= mag;
            du /= mag;
        }
    }

    // Analytic tail: u = A r^{l+1} + B r^{-l} beyond r_stop; one more
    // crossing exists iff the two terms compete at some radius past r_stop.
    let lf = l as f64;
    let a = (lf * u + r * du) / ((2.0 * lf + 1.0) * r.powf(lf + 1.0));
    let b = (u - a * r.powf(lf + 1.0)) * r.powf(lf);
    if a != 0.0 && b != 0.0 && a.signum() != b.signum() {
        let crossing = (-b / a).powf(1.0 / (2.0 * lf + 1.0));
        if crossing > r {
            nodes += 1;
        }
    }
    Ok(nodes)
}

/// A parameter sweep over one numeric field of the potential.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRequest {
    pub base: SpectrumRequest,
    /// JSON-style parameter name to vary ("lambda", "delta", "g", "A", ...).
    pub param: String,
    /// Monotone grid of parameter values.
    pub values: Vec<f64>,
    /// Radial labels (node counts) to track within the request's l channel.
    pub track: Vec<usize>,
}

/// Sweep output: energies per (value, tracked label), identified by node
/// count rather than raw eigenvalue index so level crossings do not swap
/// state identities.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepResult {
    pub param: String,
    pub l: u32,
    pub values: Vec<f64>,
    pub track: Vec<usize>,
    /// energies[i][k] is the level track[k] at values[i].
    pub energies: Vec<Vec<f64>>,
}

/// Cap sweep concurrency from the environment, once.
fn sweep_pool() -> Option<rayon::ThreadPool> {
    let threads: usize = std::env::var("GPS_SPECTRA_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .ok()
}

/// Solve the base request across `values`, tracking states by node count.
///
/// Points are solved concurrently (bounded by GPS_SPECTRA_THREADS if set)
/// and collected in parameter order, so the result is deterministic.
pub fn parameter_sweep(request: &SweepRequest) -> Result<SweepResult> {
    if request.values.is_empty() {
        return Err(GpsError::InvalidConfig("sweep needs at least one value".into()));
    }
    if request.track.is_empty() {
        return Err(GpsError::InvalidConfig("sweep needs at least one tracked label".into()));
    }
    let ascending = request.values.windows(2).all(|w| w[0] < w[1]);
    let descending = request.values.windows(2).all(|w| w[0] > w[1]);
    if !(ascending || descending) {
        return Err(GpsError::InvalidConfig(
            "sweep values must be strictly monotone".into(),
        ));
    }
    let max_track = *request.track.iter().max().expect("nonempty");

    let solve_point = |&value: &f64| -> Result<Vec<f64>> {
        let mut req = request.base.clone();
        req.potential
            .set_param(&request.param, value)
            .map_err(|e| GpsError::InvalidConfig(format!("sweep value {value}: {e}")))?;
        // A few spare states so every tracked node count is present even
        // when levels cross.
        req.n_states = (max_track + 4).min(req.grid.n - 1);
        let res = solve_spectrum(&req)
            .map_err(|e| GpsError::InvalidConfig(format!("sweep aborted at {value}: {e}")))?;
        request
            .track
            .iter()
            .map(|&nr| {
                res.states
                    .iter()
                    .find(|st| st.node_count == nr)
                    .map(|st| st.energy)
                    .ok_or_else(|| {
                        GpsError::InvalidConfig(format!(
                            "sweep aborted at {value}: no state with {nr} nodes among the \
                             lowest {}",
                            req.n_states
                        ))
                    })
            })
            .collect()
    };

    let energies: Result<Vec<Vec<f64>>> = match sweep_pool() {
        Some(pool) => pool.install(|| request.values.par_iter().map(solve_point).collect()),
        None => request.values.par_iter().map(solve_point).collect(),
    };

    Ok(SweepResult {
        param: request.param.clone(),
        l: request.base.l,
        values: request.values.clone(),
        track: request.track.clone(),
        energies: energies?,
    })
}

/// One labeled level for ordering studies.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LevelRecord {
    pub n_r: usize,
    pub l: u32,
    pub energy: f64,
}

/// Energy-ordering report: the sorted spectroscopic sequence, deviations
/// from a reference ordering, and same-n splittings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrderingReport {
    /// Levels sorted by energy.
    pub sequence: Vec<LevelRecord>,
    /// Spectroscopic labels of `sequence` ((n_r+1) then the l letter).
    pub labels: Vec<String>,
    /// Adjacent reference pairs whose energies come out reversed.
    pub violations: Vec<(String, String)>,
    /// (label_a, label_b, E_a - E_b) for pairs sharing n = 2 n_r + l.
    pub splittings: Vec<(String, String, f64)>,
}

/// Spectroscopic letters for l = 0, 1, 2, ...; plain alphabetical run after
/// f (j included).
const L_LETTERS: [&str; 13] = [
    "s", "p", "d", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o",
];

/// Spectroscopic label: level number n_r + 1 followed by the l letter.
pub fn spectroscopic_label(n_r: usize, l: u32) -> String {
    let letter = L_LETTERS
        .get(l as usize)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("[l={l}]"));
    format!("{}{letter}", n_r + 1)
}

/// The commonly observed level ordering for positive coupling:
/// 1s 1p 2s 1d 2p 1f 3s 2d 1g 3p 2f 1h.
pub const ORDERING_POSITIVE: [(usize, u32); 12] = [
    (0, 0),
    (0, 1),
    (1, 0),
    (0, 2),
    (1, 1),
    (0, 3),
    (2, 0),
    (1, 2),
    (0, 4),
    (2, 1),
    (1, 3),
    (0, 5),
];

/// The commonly observed ordering for negative coupling:
/// 1s 1p 1d 2s 1f 2p 1g 2d 3s 1h 2f 3p.
pub const ORDERING_NEGATIVE: [(usize, u32); 12] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (1, 0),
    (0, 3),
    (1, 1),
    (0, 4),
    (1, 2),
    (2, 0),
    (0, 5),
    (1, 3),
    (2, 1),
];

/// Sort labeled levels by energy and compare against a reference ordering.
pub fn level_ordering(levels: &[LevelRecord], reference: &[(usize, u32)]) -> OrderingReport {
    let mut sequence = levels.to_vec();
    sequence.sort_by(|a, b| a.energy.partial_cmp(&b.energy).unwrap());
    let labels: Vec<String> = sequence
        .iter()
        .map(|rec| spectroscopic_label(rec.n_r, rec.l))
        .collect();

    let find = |key: (usize, u32)| -> Option<f64> {
        levels
            .iter()
            .find(|rec| rec.n_r == key.0 && rec.l == key.1)
            .map(|rec| rec.energy)
    };
    let mut violations = Vec::new();
    for pair in reference.windows(2) {
        if let (Some(ea), Some(eb)) = (find(pair[0]), find(pair[1])) {
            if ea > eb {
                violations.push((
                    spectroscopic_label(pair[0].0, pair[0].1),
                    spectroscopic_label(pair[1].0, pair[1].1),
                ));
            }
        }
    }

    let mut splittings = Vec::new();
    for (i, a) in levels.iter().enumerate() {
        for b in levels.iter().skip(i + 1) {
            if 2 * a.n_r + a.l as usize == 2 * b.n_r + b.l as usize {
                splittings.push((
                    spectroscopic_label(a.n_r, a.l),
                    spectroscopic_label(b.n_r, b.l),
                    a.energy - b.energy,
                ));
            }
        }
    }

    OrderingReport {
        sequence,
        labels,
        violations,
        splittings,
    }
}

/// Degeneracy of the l-th level in N spatial dimensions:
/// (2l + N - 2) (l + N - 3)! / (l! (N - 2)!), with 1 for l = 0.
pub fn degeneracy_count(n_dim: u32, l: u32) -> Result<u64> {
    if n_dim < 2 {
        return Err(GpsError::InvalidConfig(format!(
            "dimension must be >= 2, got {n_dim}"
        )));
    }
    if l == 0 {
        return Ok(1);
    }
    // Lambda = (2l + N - 2) * C(l + N - 3, l) / (N - 2), exact in integers.
    let l = l as u128;
    let n = n_dim as u128;
    let binom = binomial(l + n - 3, l).ok_or_else(|| {
        GpsError::InvalidConfig(format!("degeneracy overflows for N={n_dim}, l={l}"))
    })?;
    let num = (2 * l + n - 2) * binom;
    debug_assert_eq!(num % (n - 2).max(1), 0);
    let result = if n == 2 { num } else { num / (n - 2) };
    u64::try_from(result).map_err(|_| {
        GpsError::InvalidConfig(format!("degeneracy overflows u64 for N={n_dim}, l={l}"))
    })
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}
