//! Catalog of central potentials, their small-r classification, closed-form
//! reference energies and asymptotic reference series.
//!
//! Every family is evaluable for all r > 0. The classification follows the
//! limit of r^2 V(r): zero means regular, a finite nonzero constant marks a
//! transition potential, divergence marks a singular one (repulsive or
//! attractive by the sign).
//!
//! Closed forms are collected in [`PotentialSpec::exact_reference`]; they are
//! exact only on specific parameter manifolds (conditionally exact families
//! return `None` off the manifold). The asymptotic expansions in
//! [`PotentialSpec::reference_series`] are diagnostics, not convergent
//! series, and carry no accuracy guarantee.

use crate::discretization::Convention;
use crate::{GpsError, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Tagged union over the supported potential families. Radial coordinate in
/// a.u. throughout; `evaluate` gives the bare V(r) without the centrifugal
/// term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PotentialWire", into = "PotentialWire")]
pub enum PotentialSpec {
    /// V = -Z/r.
    Coulomb { z: f64 },
    /// V = k r^2.
    Harmonic { k: f64 },
    /// V = A sgn(nu) r^nu, A > 0, nu != 0.
    PowerLaw { a: f64, nu: f64 },
    /// V = A ln(r), A > 0.
    Logarithmic { a: f64 },
    /// Spiked oscillator V = r^2 + lambda r^{-alpha}, alpha > 0.
    /// alpha = 1 is the charged oscillator.
    Sho { lambda: f64, alpha: f64 },
    /// V = a r^2 + b / r^4 + c / r^6, a > 0, c > 0.
    SexticSingular { a: f64, b: f64, c: f64 },
    /// Generalized spiked oscillator V = r^2 + A/r^2 + lambda r^{-alpha}.
    Gsho { a: f64, lambda: f64, alpha: f64 },
    /// V = -Z delta e^{-delta r} / (1 - e^{-delta r}), delta > 0.
    Hulthen { z: f64, delta: f64 },
    /// V = -Z e^{-lambda r} / r, lambda >= 0.
    Yukawa { z: f64, lambda: f64 },
    /// Non-polynomial oscillator V = r^2 + lambda r^2 / (1 + g r^2), g > 0.
    Npo { g: f64, lambda: f64 },
}

/// Small-r character of a potential per the r^2 V(r) limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingularityClass {
    Regular,
    Transition,
    SingularRepulsive,
    SingularAttractive,
}

impl PotentialSpec {
    /// Charged harmonic oscillator: the alpha = 1 spiked oscillator.
    pub fn charged_oscillator(lambda: f64) -> Self {
        PotentialSpec::Sho { lambda, alpha: 1.0 }
    }

    /// Check the per-family parameter constraints.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(GpsError::InvalidConfig(msg));
        match *self {
            PotentialSpec::Coulomb { z } => {
                if !z.is_finite() {
                    return fail(format!("coulomb: Z must be finite, got {z}"));
                }
            }
            PotentialSpec::Harmonic { k } => {
                if !(k > 0.0) {
                    return fail(format!("harmonic: k must be > 0, got {k}"));
                }
            }
            PotentialSpec::PowerLaw { a, nu } => {
                if !(a > 0.0) {
                    return fail(format!("power_law: A must be > 0, got {a}"));
                }
                if nu == 0.0 || !nu.is_finite() {
                    return fail(format!("power_law: nu must be nonzero, got {nu}"));
                }
            }
            PotentialSpec::Logarithmic { a } => {
                if !(a > 0.0) {
                    return fail(format!("logarithmic: A must be > 0, got {a}"));
                }
            }
            PotentialSpec::Sho { lambda, alpha } => {
                if !(alpha > 0.0) {
                    return fail(format!("sho: alpha must be > 0, got {alpha}"));
                }
                if !lambda.is_finite() {
                    return fail(format!("sho: lambda must be finite, got {lambda}"));
                }
            }
            PotentialSpec::SexticSingular { a, b, c } => {
                if !(a > 0.0) || !(c > 0.0) {
                    return fail(format!(
                        "sextic_singular: need a > 0 and c > 0, got a={a}, c={c}"
                    ));
                }
                if !b.is_finite() {
                    return fail(format!("sextic_singular: b must be finite, got {b}"));
                }
            }
            PotentialSpec::Gsho { a, lambda, alpha } => {
                if !(a >= 0.0) {
                    return fail(format!("gsho: A must be >= 0, got {a}"));
                }
                if !(alpha > 0.0) {
                    return fail(format!("gsho: alpha must be > 0, got {alpha}"));
                }
                if !lambda.is_finite() {
                    return fail(format!("gsho: lambda must be finite, got {lambda}"));
                }
            }
            PotentialSpec::Hulthen { z, delta } => {
                if !(delta > 0.0) {
                    return fail(format!("hulthen: delta must be > 0, got {delta}"));
                }
                if !z.is_finite() {
                    return fail(format!("hulthen: Z must be finite, got {z}"));
                }
            }
            PotentialSpec::Yukawa { z, lambda } => {
                if !(lambda >= 0.0) {
                    return fail(format!("yukawa: lambda must be >= 0, got {lambda}"));
                }
                if !z.is_finite() {
                    return fail(format!("yukawa: Z must be finite, got {z}"));
                }
            }
            PotentialSpec::Npo { g, lambda } => {
                if !(g > 0.0) {
                    return fail(format!("npo: g must be > 0, got {g}"));
                }
                if !lambda.is_finite() {
                    return fail(format!("npo: lambda must be finite, got {lambda}"));
                }
            }
        }
        Ok(())
    }

    /// Evaluate V(r) for r > 0.
    pub fn evaluate(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(GpsError::InvalidConfig(format!(
                "potential evaluation requires r > 0, got {r}"
            )));
        }
        Ok(match *self {
            PotentialSpec::Coulomb { z } => -z / r,
            PotentialSpec::Harmonic { k } => k * r * r,
            PotentialSpec::PowerLaw { a, nu } => a * nu.signum() * r.powf(nu),
            PotentialSpec::Logarithmic { a } => a * r.ln(),
            PotentialSpec::Sho { lambda, alpha } => r * r + lambda * r.powf(-alpha),
            PotentialSpec::SexticSingular { a, b, c } => {
                let r2 = r * r;
                a * r2 + b / (r2 * r2) + c / (r2 * r2 * r2)
            }
            PotentialSpec::Gsho { a, lambda, alpha } => {
                r * r + a / (r * r) + lambda * r.powf(-alpha)
            }
            // e^{-x}/(1-e^{-x}) = 1/(e^x - 1); exp_m1 keeps the Coulomb head
            // -Z/r accurate down to delta*r at the rounding floor.
            PotentialSpec::Hulthen { z, delta } => -z * delta / (delta * r).exp_m1(),
            PotentialSpec::Yukawa { z, lambda } => -z * (-lambda * r).exp() / r,
            PotentialSpec::Npo { g, lambda } => {
                let r2 = r * r;
                r2 + lambda * r2 / (1.0 + g * r2)
            }
        })
    }

    /// Classify the small-r behavior from the numerical limit of r^2 V(r),
    /// sampled at r = 10^{-k}, k = 2..10.
    pub fn classify(&self) -> SingularityClass {
        let samples: Vec<f64> = (2..=10)
            .map(|k| {
                let r = 10f64.powi(-k);
                r * r * self.evaluate(r).expect("r > 0")
            })
            .collect();
        let last = samples[samples.len() - 1];
        let mid = samples[samples.len() - 3];
        // Log-slope per decade of r over the last two decades; positive means
        // growth as r -> 0 (divergence), negative means decay to zero.
        let slope = if last == 0.0 || mid == 0.0 {
            -1.0
        } else {
            (last.abs().log10() - mid.abs().log10()) / 2.0
        };
        if slope > 0.04 {
            if last > 0.0 {
                SingularityClass::SingularRepulsive
            } else {
                SingularityClass::SingularAttractive
            }
        } else if slope < -0.04 || last.abs() < 1e-9 {
            SingularityClass::Regular
        } else {
            SingularityClass::Transition
        }
    }

    /// Closed-form energy for families and parameter sets that admit one, in
    /// the requested convention (report scale applied). `n_index` counts
    /// radial nodes, starting from 0 for the lowest state of the channel.
    ///
    /// Returns `None` when the family has no closed form, the state is not
    /// covered, or a conditional-solvability constraint is violated.
    pub fn exact_reference(&self, l: u32, n_index: u32, conv: Convention) -> Option<f64> {
        let c = conv.kinetic_prefactor;
        let s = conv.report_scale;
        let lf = l as f64;
        let nr = n_index as f64;
        let energy = match *self {
            PotentialSpec::Coulomb { z } => {
                if z <= 0.0 {
                    return None;
                }
                let n = nr + lf + 1.0;
                Some(-z * z / (4.0 * c * n * n))
            }
            PotentialSpec::Harmonic { k } => Some(2.0 * (k * c).sqrt() * (2.0 * nr + lf + 1.5)),
            PotentialSpec::PowerLaw { a, nu } => {
                if nu == 2.0 {
                    Some(2.0 * (a * c).sqrt() * (2.0 * nr + lf + 1.5))
                } else if nu == -1.0 {
                    let n = nr + lf + 1.0;
                    Some(-a * a / (4.0 * c * n * n))
                } else if nu == 1.0 && l == 0 {
                    // s states of the linear potential sit at the Airy zeros.
                    Some((c * a * a).cbrt() * airy_zero(n_index as usize + 1))
                } else {
                    None
                }
            }
            PotentialSpec::Logarithmic { .. } => None,
            PotentialSpec::Sho { lambda, alpha } => {
                if lambda == 0.0 {
                    Some(2.0 * c.sqrt() * (2.0 * nr + lf + 1.5))
                } else if alpha == 1.0 && l == 0 && n_index == 0 && lambda > 0.0 {
                    // Elementary (conditionally exact) ground states of the
                    // charged oscillator. Rescale to the unit-oscillator
                    // problem, where solutions of the form
                    // p(r) exp(-r^2/2) exist at discrete couplings.
                    let scaled = lambda * c.powf(-0.75);
                    charged_oscillator_elementary(scaled).map(|e1| c.sqrt() * e1)
                } else {
                    None
                }
            }
            PotentialSpec::SexticSingular { a, b, c: c6 } => {
                if n_index != 0 {
                    return None;
                }
                // Constraint and energy for the unit-kinetic form, with the
                // coefficients scaled by 1/c.
                let (sa, sb, sc) = (a / c, b / c, c6 / c);
                let lhs = (2.0 * sc.sqrt() + sb).powi(2);
                let rhs = sc * ((2.0 * lf + 1.0).powi(2) + 8.0 * (sa * sc).sqrt());
                if (lhs - rhs).abs() > 1e-9 * lhs.abs().max(rhs.abs()).max(1.0) {
                    return None;
                }
                Some(c * sa.sqrt() * (4.0 + sb / sc.sqrt()))
            }
            PotentialSpec::Gsho { a, lambda, alpha: _ } => {
                if lambda != 0.0 {
                    return None;
                }
                // lambda = 0 reduces to the exactly solvable r^2 + A/r^2
                // with an effective angular momentum.
                let eff = lf * (lf + 1.0) + a / c;
                let big_l = 0.5 * (-1.0 + (1.0 + 4.0 * eff).sqrt());
                Some(2.0 * c.sqrt() * (2.0 * nr + big_l + 1.5))
            }
            PotentialSpec::Hulthen { z, delta } => {
                if l != 0 {
                    return None;
                }
                let n = nr + 1.0;
                let bracket = z / c - delta * n * n;
                if bracket <= 0.0 {
                    return None;
                }
                Some(-c * bracket * bracket / (4.0 * n * n))
            }
            PotentialSpec::Yukawa { z, lambda } => {
                if lambda == 0.0 && z > 0.0 {
                    let n = nr + lf + 1.0;
                    Some(-z * z / (4.0 * c * n * n))
                } else {
                    None
                }
            }
            PotentialSpec::Npo { g, lambda } => {
                if n_index != 0 {
                    return None;
                }
                // Rescaled coupling for the unit-kinetic unit-oscillator
                // form; exact ground state when lambda sits on the
                // polynomial-solution manifold.
                let gt = g * c.sqrt();
                let expected_lambda = -2.0 * gt * (2.0 + (2.0 * lf + 3.0) * gt);
                if (lambda - expected_lambda).abs() > 1e-9 * lambda.abs().max(1.0) {
                    return None;
                }
                Some(c.sqrt() * (2.0 * lf + 3.0) * (1.0 - 2.0 * gt))
            }
        };
        energy.map(|e| s * e)
    }

    /// Asymptotic / approximate reference expansions, used as diagnostics.
    ///
    /// Each regime is defined in its natural convention: the oscillator
    /// families (`CoulombCoupling`, `StrongCoupling`, spike regimes,
    /// `SmallCouplingRatio`, `LargeG`) in the unit-kinetic convention where
    /// the unperturbed ground state is 3 (or 2n+1 for the 1D forms), the
    /// Ecker-Weizel Hulthen formula in the half-kinetic convention.
    pub fn reference_series(&self, regime: SeriesRegime, order: usize) -> Result<f64> {
        if order == 0 {
            return Err(GpsError::Unsupported("series order must be >= 1".into()));
        }
        match (self, regime) {
            (PotentialSpec::Sho { lambda, alpha }, SeriesRegime::CoulombCoupling)
                if *alpha == 1.0 =>
            {
                // Coulomb-region expansion of the charged oscillator ground
                // state: E = lambda^2 [ -1/4 + 12/lambda^4 - 1032/lambda^8
                //               + 348864/l^12 - 211519200/l^16 + ... ].
                const COEFFS: [f64; 6] = [
                    -0.25,
                    12.0,
                    -1032.0,
                    348_864.0,
                    -211_519_200.0,
                    188_054_861_568.0,
                ];
                if order > COEFFS.len() {
                    return Err(GpsError::Unsupported(format!(
                        "coulomb-coupling series has {} terms",
                        COEFFS.len()
                    )));
                }
                let l2 = lambda * lambda;
                let l4 = l2 * l2;
                let mut acc = 0.0;
                let mut pw = 1.0;
                for &coef in COEFFS.iter().take(order) {
                    acc += coef / pw;
                    pw *= l4;
                }
                Ok(l2 * acc)
            }
            (PotentialSpec::Sho { lambda, alpha }, SeriesRegime::StrongCoupling)
                if *alpha == 1.0 =>
            {
                // Strong-coupling expansion in mu = (2/lambda)^{1/3}.
                let mu = (2.0 / lambda).cbrt();
                let mu2 = mu * mu;
                let terms = [
                    3.0 / mu2,
                    3f64.sqrt(),
                    7.0 * mu2 / 36.0,
                    37.0 * mu2 * mu2 / (432.0 * 3f64.sqrt()),
                    2573.0 * mu2.powi(3) / 139_968.0,
                    168_233.0 * mu2.powi(4) / (2_239_488.0 * 27f64.sqrt()),
                ];
                if order > terms.len() {
                    return Err(GpsError::Unsupported(format!(
                        "strong-coupling series has {} terms",
                        terms.len()
                    )));
                }
                Ok(terms.iter().take(order).sum())
            }
            (PotentialSpec::Sho { lambda, alpha }, SeriesRegime::SpikeWeakCoupling) => {
                spike_weak_coupling(*lambda, *alpha, order)
            }
            (PotentialSpec::Sho { lambda, alpha }, SeriesRegime::SpikeStrongCoupling)
                if *alpha == 2.5 =>
            {
                let terms = [
                    (9.0 / 5.0) * (5.0 * lambda / 4.0).powf(4.0 / 9.0),
                    (9.0f64 / 2.0).sqrt(),
                    (77.0 / 288.0) * (4.0 / (5.0 * lambda)).powf(4.0 / 9.0),
                    -(1967.0 / 27_648.0)
                        * (2.0f64 / 9.0).sqrt()
                        * (4.0 / (5.0 * lambda)).powf(8.0 / 9.0),
                ];
                if order > terms.len() {
                    return Err(GpsError::Unsupported(format!(
                        "spike strong-coupling series has {} terms",
                        terms.len()
                    )));
                }
                Ok(terms.iter().take(order).sum())
            }
            (PotentialSpec::Hulthen { z: _, delta }, SeriesRegime::EckerWeizel { n, l }) => {
                if n < 1 || l >= n {
                    return Err(GpsError::Unsupported(format!(
                        "ecker-weizel needs 1 <= n and l < n, got n={n} l={l}"
                    )));
                }
                Ok(ecker_weizel(*delta, n, l))
            }
            (PotentialSpec::Npo { g, lambda }, SeriesRegime::SmallCouplingRatio { n }) => {
                if n > 20 {
                    return Err(GpsError::Unsupported("n <= 20 for the 1D series".into()));
                }
                let lp = lambda / g;
                let nf = n as f64;
                let norm = PI.sqrt() * 2f64.powi(n as i32) * factorial(n);
                Ok(2.0 * nf + 1.0 + 0.5 * lp - lp * hermite_integral(n, *g) / norm)
            }
            (PotentialSpec::Npo { g, lambda }, SeriesRegime::LargeG { n }) => {
                let lp = lambda / g;
                let sp = PI.sqrt();
                let val = match n {
                    0 => 1.0 + lp * (1.0 - sp / g.sqrt() + 2.5 / g),
                    1 => 3.0 + lp * (1.0 - 1.5 / g + 2.0 * sp / g.powf(1.5)),
                    2 => 5.0 + lp * (1.0 - 0.5 * sp / g.sqrt() + 2.25 / g),
                    3 => 7.0 + lp * (1.0 - 1.5 / g + 1.5 * sp / g.powf(1.5)),
                    _ => {
                        return Err(GpsError::Unsupported(
                            "large-g expansion covers n = 0..3".into(),
                        ))
                    }
                };
                Ok(val)
            }
            _ => Err(GpsError::Unsupported(format!(
                "no series for this (family, regime) pair: {self:?}"
            ))),
        }
    }
}

/// Ground-state weak-coupling asymptotics of the spiked oscillator, split by
/// the strength of the spike exponent. nu = 1/(alpha - 2) throughout.
fn spike_weak_coupling(lambda: f64, alpha: f64, order: usize) -> Result<f64> {
    const EULER: f64 = 0.5772156649;
    if !(lambda > 0.0) {
        return Err(GpsError::Unsupported(
            "weak-coupling spike series needs lambda > 0".into(),
        ));
    }
    if order > 2 || (alpha >= 4.0 && order > 1) {
        return Err(GpsError::Unsupported(
            "spike series truncations: 1 term for alpha >= 4, else 2".into(),
        ));
    }
    let nu = 1.0 / (alpha - 2.0);
    let lead = 4.0 * nu.powf(2.0 * nu) * gamma(1.0 - nu) / (PI.sqrt() * gamma(1.0 + nu));
    if alpha >= 4.0 {
        Ok(3.0 + lead * lambda.powf(nu))
    } else if alpha > 3.0 {
        let mut e = 3.0 + lead * lambda.powf(nu);
        if order >= 2 {
            e -= 4.0 * nu * gamma((3.0 - 1.0 / nu) / 2.0) / ((1.0 - nu) * PI.sqrt()) * lambda;
        }
        Ok(e)
    } else if alpha == 3.0 {
        let mut e = 3.0 - 4.0 / PI.sqrt() * lambda * lambda.ln();
        if order >= 2 {
            e -= 10.0 * EULER / PI.sqrt() * lambda;
        }
        Ok(e)
    } else if alpha > 2.5 {
        let mut e = 3.0 + lead * lambda.powf(nu);
        if order >= 2 {
            e += 2.0 * gamma((3.0 - alpha) / 2.0) / PI.sqrt() * lambda;
        }
        Ok(e)
    } else {
        Err(GpsError::Unsupported(
            "weak-coupling spike series defined for alpha > 5/2".into(),
        ))
    }
}

/// Ecker-Weizel approximation for Hulthen levels (half-kinetic convention,
/// unit charge). Printed-form implementation; diagnostic quality only.
fn ecker_weizel(delta: f64, n: u32, l: u32) -> f64 {
    const B: f64 = 0.0501438;
    let nf = n as f64;
    let ll1 = (l * (l + 1)) as f64;
    -0.5 * (1.0 / nf - nf * delta / 2.0).powi(2)
        + delta * delta / 8.0
            * ll1
            * B
            * (4.0 / (nf * nf * delta) + 2.0 - ll1 * B / (nf * nf))
}

/// Elementary ground-state energies of the unit charged oscillator
/// H = -d^2/dr^2 + r^2 + lambda/r (s wave). A polynomial-times-Gaussian
/// solution of degree m exists when a degree-m condition on lambda holds;
/// the energy is then 2m + 1.
fn charged_oscillator_elementary(lambda: f64) -> Option<f64> {
    if lambda == 0.0 {
        return Some(3.0);
    }
    for m in 2..=40usize {
        let e = (2 * m + 1) as f64;
        // Downward recursion for p(r) = sum c_j r^j from c_m = 1: the
        // coefficient of r^j in (-p'' + 2 r p' + (1 - E) p + lambda p / r)
        // must vanish for j = 0..m-1, and c_0 = 0 closes the system.
        let mut c = vec![0.0; m + 3];
        c[m] = 1.0;
        for j in (0..m).rev() {
            let jf = j as f64;
            c[j] = ((jf + 2.0) * (jf + 1.0) * c[j + 2] - lambda * c[j + 1]) / (2.0 * jf + 1.0 - e);
        }
        let scale = c.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if c[0].abs() <= 1e-9 * scale {
            // Ground state requires a nodeless radial factor.
            if c[1..=m].iter().all(|&v| v >= -1e-9 * scale) {
                return Some(e);
            }
        }
    }
    None
}

/// The series regimes understood by `reference_series`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesRegime {
    /// Charged oscillator, large negative coupling.
    CoulombCoupling,
    /// Charged oscillator, large positive coupling.
    StrongCoupling,
    /// Spiked oscillator weak-coupling asymptotics (banded by alpha).
    SpikeWeakCoupling,
    /// Spiked oscillator alpha = 5/2 large-coupling expansion.
    SpikeStrongCoupling,
    /// Hulthen levels via the Ecker-Weizel approximation.
    EckerWeizel { n: u32, l: u32 },
    /// 1D non-polynomial oscillator, small lambda/g.
    SmallCouplingRatio { n: usize },
    /// 1D non-polynomial oscillator, large g, states n = 0..3.
    LargeG { n: usize },
}

/// I_n(g) = integral_0^inf exp(-x^2) H_n(x)^2 (1 - g x^2)/(1 + g x^2) dx.
///
/// Evaluated through normalized Hermite functions so intermediate values
/// stay order one, then rescaled; panelwise Gauss-Lobatto quadrature.
pub fn hermite_integral(n: usize, g: f64) -> f64 {
    assert!(n <= 20, "hermite_integral supports n <= 20");
    assert!(g > 0.0, "hermite_integral requires g > 0");
    let norm = PI.sqrt() * 2f64.powi(n as i32) * factorial(n);
    norm * hermite_integral_normalized(n, g)
}

/// Same integral divided by sqrt(pi) 2^n n!, i.e. against the normalized
/// Hermite weight (full-line normalization).
fn hermite_integral_normalized(n: usize, g: f64) -> f64 {
    let rule = crate::orthopoly::lgl(24).expect("static order");
    let upper = (2.0 * n as f64 + 1.0).sqrt() + 10.0;
    let panels = (upper.ceil() as usize).max(8);
    let mut total = 0.0;
    for p in 0..panels {
        let a = upper * p as f64 / panels as f64;
        let b = upper * (p + 1) as f64 / panels as f64;
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (i, &t) in rule.nodes.iter().enumerate() {
            let x = mid + half * t;
            let h = normalized_hermite(n, x);
            let f = h * h * (1.0 - g * x * x) / (1.0 + g * x * x);
            total += rule.weights[i] * half * f;
        }
    }
    total
}

/// h_n(x) = H_n(x) e^{-x^2/2} / sqrt(sqrt(pi) 2^n n!), by stable recurrence.
fn normalized_hermite(n: usize, x: f64) -> f64 {
    let mut h0 = PI.powf(-0.25) * (-0.5 * x * x).exp();
    if n == 0 {
        return h0;
    }
    let mut h1 = 2f64.sqrt() * x * h0;
    for k in 1..n {
        let kf = k as f64;
        let h2 = x * (2.0 / (kf + 1.0)).sqrt() * h1 - (kf / (kf + 1.0)).sqrt() * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Lanczos approximation of the Gamma function, adequate over the argument
/// range the asymptotic series needs.
pub fn gamma(x: f64) -> f64 {
    const G: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        PI / ((PI * x).sin() * gamma(1.0 - x))
    } else {
        let x = x - 1.0;
        let mut acc = G[0];
        for (i, &c) in G.iter().enumerate().skip(1) {
            acc += c / (x + i as f64);
        }
        let t = x + 7.5;
        (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * acc
    }
}

/// n-th negative zero of the Airy function Ai (returned as its magnitude),
/// computed by Newton iteration from the standard asymptotic seed.
pub fn airy_zero(n: usize) -> f64 {
    assert!(n >= 1, "airy zeros are 1-indexed");
    let t = 3.0 * PI * (4.0 * n as f64 - 1.0) / 8.0;
    let t2 = t * t;
    // Asymptotic expansion of the zero location.
    let mut z = t.powf(2.0 / 3.0)
        * (1.0 + 5.0 / 48.0 / t2 - 5.0 / 36.0 / (t2 * t2) + 77125.0 / 82944.0 / (t2 * t2 * t2));
    for _ in 0..30 {
        let (ai, dai) = airy_ai(-z);
        // d/dz Ai(-z) = -Ai'(-z)
        let step = ai / (-dai);
        z -= step;
        if step.abs() < 1e-15 * z {
            break;
        }
    }
    z
}

/// Ai(x) and Ai'(x) from the Maclaurin series; accurate for |x| up to ~10,
/// which covers the zeros needed here.
fn airy_ai(x: f64) -> (f64, f64) {
    const C1: f64 = 0.355_028_053_887_817_24; // Ai(0)
    const C2: f64 = 0.258_819_403_792_806_8; // -Ai'(0)
    let x3 = x * x * x;

    // f = sum t_k, t_0 = 1, t_{k+1} = t_k x^3 / ((3k+2)(3k+3))
    // g = sum s_k, s_0 = x, s_{k+1} = s_k x^3 / ((3k+3)(3k+4))
    let mut f = 1.0;
    let mut fp = 0.0;
    let mut g = x;
    let mut gp = 1.0;
    let mut t = 1.0;
    let mut s = x;
    for k in 0..60usize {
        let kf = k as f64;
        t *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        s *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        f += t;
        g += s;
        // Term-by-term derivatives: t_k ~ x^{3k}, s_k ~ x^{3k+1}.
        let p3k = 3.0 * (kf + 1.0);
        if x != 0.0 {
            fp += p3k * t / x;
            gp += (p3k + 1.0) * s / x;
        }
        if t.abs() < 1e-18 * f.abs() && s.abs() < 1e-18 * g.abs().max(1.0) {
            break;
        }
    }
    (C1 * f - C2 * g, C1 * fp - C2 * gp)
}

/// Wire format for potential specs: {"family": ..., "params": {...}}.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PotentialWire {
    family: String,
    #[serde(default)]
    params: serde_json::Map<String, serde_json::Value>,
}

fn wire_get(
    params: &serde_json::Map<String, serde_json::Value>,
    family: &str,
    key: &str,
) -> std::result::Result<f64, String> {
    params
        .get(key)
        .ok_or_else(|| format!("{family}: missing parameter \"{key}\""))?
        .as_f64()
        .ok_or_else(|| format!("{family}: parameter \"{key}\" must be a number"))
}

fn wire_opt(
    params: &serde_json::Map<String, serde_json::Value>,
    family: &str,
    key: &str,
    default: f64,
) -> std::result::Result<f64, String> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => v
            .as_f64()
            .ok_or_else(|| format!("{family}: parameter \"{key}\" must be a number")),
    }
}

fn wire_check_keys(
    params: &serde_json::Map<String, serde_json::Value>,
    family: &str,
    allowed: &[&str],
) -> std::result::Result<(), String> {
    for key in params.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(format!("{family}: unknown parameter \"{key}\""));
        }
    }
    Ok(())
}

impl TryFrom<PotentialWire> for PotentialSpec {
    type Error = String;

    fn try_from(wire: PotentialWire) -> std::result::Result<Self, Self::Error> {
        let p = &wire.params;
        let fam = wire.family.as_str();
        let spec = match fam {
            "coulomb" => {
                wire_check_keys(p, fam, &["Z"])?;
                PotentialSpec::Coulomb {
                    z: wire_get(p, fam, "Z")?,
                }
            }
            "harmonic" => {
                wire_check_keys(p, fam, &["k"])?;
                PotentialSpec::Harmonic {
                    k: wire_get(p, fam, "k")?,
                }
            }
            "power_law" => {
                wire_check_keys(p, fam, &["A", "nu"])?;
                PotentialSpec::PowerLaw {
                    a: wire_get(p, fam, "A")?,
                    nu: wire_get(p, fam, "nu")?,
                }
            }
            "logarithmic" => {
                wire_check_keys(p, fam, &["A"])?;
                PotentialSpec::Logarithmic {
                    a: wire_get(p, fam, "A")?,
                }
            }
            "sho" => {
                wire_check_keys(p, fam, &["lambda", "alpha"])?;
                PotentialSpec::Sho {
                    lambda: wire_get(p, fam, "lambda")?,
                    alpha: wire_get(p, fam, "alpha")?,
                }
            }
            "charged_oscillator" => {
                wire_check_keys(p, fam, &["lambda"])?;
                PotentialSpec::Sho {
                    lambda: wire_get(p, fam, "lambda")?,
                    alpha: 1.0,
                }
            }
            "sextic_singular" => {
                wire_check_keys(p, fam, &["a", "b", "c"])?;
                PotentialSpec::SexticSingular {
                    a: wire_get(p, fam, "a")?,
                    b: wire_get(p, fam, "b")?,
                    c: wire_get(p, fam, "c")?,
                }
            }
            "gsho" => {
                wire_check_keys(p, fam, &["A", "lambda", "alpha"])?;
                PotentialSpec::Gsho {
                    a: wire_get(p, fam, "A")?,
                    lambda: wire_get(p, fam, "lambda")?,
                    alpha: wire_get(p, fam, "alpha")?,
                }
            }
            "hulthen" => {
                wire_check_keys(p, fam, &["Z", "delta"])?;
                PotentialSpec::Hulthen {
                    z: wire_opt(p, fam, "Z", 1.0)?,
                    delta: wire_get(p, fam, "delta")?,
                }
            }
            "yukawa" => {
                wire_check_keys(p, fam, &["Z", "lambda"])?;
                PotentialSpec::Yukawa {
                    z: wire_opt(p, fam, "Z", 1.0)?,
                    lambda: wire_get(p, fam, "lambda")?,
                }
            }
            "npo" => {
                wire_check_keys(p, fam, &["g", "lambda"])?;
                PotentialSpec::Npo {
                    g: wire_get(p, fam, "g")?,
                    lambda: wire_get(p, fam, "lambda")?,
                }
            }
            other => return Err(format!("unknown potential family \"{other}\"")),
        };
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }
}

impl From<PotentialSpec> for PotentialWire {
    fn from(spec: PotentialSpec) -> Self {
        let mut params = serde_json::Map::new();
        let mut put = |k: &str, v: f64| {
            params.insert(k.to_string(), serde_json::json!(v));
        };
        let family = match spec {
            PotentialSpec::Coulomb { z } => {
                put("Z", z);
                "coulomb"
            }
            PotentialSpec::Harmonic { k } => {
                put("k", k);
                "harmonic"
            }
            PotentialSpec::PowerLaw { a, nu } => {
                put("A", a);
                put("nu", nu);
                "power_law"
            }
            PotentialSpec::Logarithmic { a } => {
                put("A", a);
                "logarithmic"
            }
            PotentialSpec::Sho { lambda, alpha } => {
                put("lambda", lambda);
                put("alpha", alpha);
                "sho"
            }
            PotentialSpec::SexticSingular { a, b, c } => {
                put("a", a);
                put("b", b);
                put("c", c);
                "sextic_singular"
            }
            PotentialSpec::Gsho { a, lambda, alpha } => {
                put("A", a);
                put("lambda", lambda);
                put("alpha", alpha);
                "gsho"
            }
            PotentialSpec::Hulthen { z, delta } => {
                put("Z", z);
                put("delta", delta);
                "hulthen"
            }
            PotentialSpec::Yukawa { z, lambda } => {
                put("Z", z);
                put("lambda", lambda);
                "yukawa"
            }
            PotentialSpec::Npo { g, lambda } => {
                put("g", g);
                put("lambda", lambda);
                "npo"
            }
        };
        PotentialWire {
            family: family.to_string(),
            params,
        }
    }
}

impl PotentialSpec {
    /// Read a named numeric parameter; names match the JSON keys.
    pub fn param(&self, name: &str) -> Option<f64> {
        match (self, name) {
            (PotentialSpec::Coulomb { z }, "Z") => Some(*z),
            (PotentialSpec::Harmonic { k }, "k") => Some(*k),
            (PotentialSpec::PowerLaw { a, .. }, "A") => Some(*a),
            (PotentialSpec::PowerLaw { nu, .. }, "nu") => Some(*nu),
            (PotentialSpec::Logarithmic { a }, "A") => Some(*a),
            (PotentialSpec::Sho { lambda, .. }, "lambda") => Some(*lambda),
            (PotentialSpec::Sho { alpha, .. }, "alpha") => Some(*alpha),
            (PotentialSpec::SexticSingular { a, .. }, "a") => Some(*a),
            (PotentialSpec::SexticSingular { b, .. }, "b") => Some(*b),
            (PotentialSpec::SexticSingular { c, .. }, "c") => Some(*c),
            (PotentialSpec::Gsho { a, .. }, "A") => Some(*a),
            (PotentialSpec::Gsho { lambda, .. }, "lambda") => Some(*lambda),
            (PotentialSpec::Gsho { alpha, .. }, "alpha") => Some(*alpha),
            (PotentialSpec::Hulthen { z, .. }, "Z") => Some(*z),
            (PotentialSpec::Hulthen { delta, .. }, "delta") => Some(*delta),
            (PotentialSpec::Yukawa { z, .. }, "Z") => Some(*z),
            (PotentialSpec::Yukawa { lambda, .. }, "lambda") => Some(*lambda),
            (PotentialSpec::Npo { g, .. }, "g") => Some(*g),
            (PotentialSpec::Npo { lambda, .. }, "lambda") => Some(*lambda),
            _ => None,
        }
    }

    /// Write a named numeric parameter; the modified spec is re-validated.
    pub fn set_param(&mut self, name: &str, value: f64) -> Result<()> {
        let mut next = self.clone();
        let slot: Option<&mut f64> = match (&mut next, name) {
            (PotentialSpec::Coulomb { z }, "Z") => Some(z),
            (PotentialSpec::Harmonic { k }, "k") => Some(k),
            (PotentialSpec::PowerLaw { a, .. }, "A") => Some(a),
            (PotentialSpec::PowerLaw { nu, .. }, "nu") => Some(nu),
            (PotentialSpec::Logarithmic { a }, "A") => Some(a),
            (PotentialSpec::Sho { lambda, .. }, "lambda") => Some(lambda),
            (PotentialSpec::Sho { alpha, .. }, "alpha") => Some(alpha),
            (PotentialSpec::SexticSingular { a, .. }, "a") => Some(a),
            (PotentialSpec::SexticSingular { b, .. }, "b") => Some(b),
            (PotentialSpec::SexticSingular { c, .. }, "c") => Some(c),
            (PotentialSpec::Gsho { a, .. }, "A") => Some(a),
            (PotentialSpec::Gsho { lambda, .. }, "lambda") => Some(lambda),
            (PotentialSpec::Gsho { alpha, .. }, "alpha") => Some(alpha),
            (PotentialSpec::Hulthen { z, .. }, "Z") => Some(z),
            (PotentialSpec::Hulthen { delta, .. }, "delta") => Some(delta),
            (PotentialSpec::Yukawa { z, .. }, "Z") => Some(z),
            (PotentialSpec::Yukawa { lambda, .. }, "lambda") => Some(lambda),
            (PotentialSpec::Npo { g, .. }, "g") => Some(g),
            (PotentialSpec::Npo { lambda, .. }, "lambda") => Some(lambda),
            _ => None,
        };
        match slot {
            Some(s) => {
                *s = value;
                next.validate()?;
                *self = next;
                Ok(())
            }
            None => Err(GpsError::InvalidConfig(format!(
                "potential has no parameter \"{name}\""
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::Convention;

    #[test]
    fn yukawa_coulomb_limit_at_zero_screening() {
        let v = PotentialSpec::Yukawa { z: 1.0, lambda: 0.0 };
        assert!((v.evaluate(2.0).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn hulthen_behaves_like_coulomb_at_small_r() {
        let v = PotentialSpec::Hulthen { z: 1.0, delta: 0.2 };
        let r = 1e-6;
        let val = v.evaluate(r).unwrap();
        assert!((r * val + 1.0).abs() < 1e-6, "r V + Z = {}", r * val + 1.0);
    }

    #[test]
    fn npo_harmonic_limit_at_large_g() {
        let v = PotentialSpec::Npo { g: 1e6, lambda: 1.0 };
        let val = v.evaluate(1.0).unwrap();
        assert!((val - (1.0 + 1.0 / (1.0 + 1e6))).abs() < 1e-12);
    }

    #[test]
    fn rejects_nonpositive_radius() {
        let v = PotentialSpec::Coulomb { z: 1.0 };
        assert!(v.evaluate(0.0).is_err());
        assert!(v.evaluate(-1.0).is_err());
    }

    #[test]
    fn classification_of_catalog() {
        use SingularityClass::*;
        let cases: Vec<(PotentialSpec, SingularityClass)> = vec![
            (PotentialSpec::Coulomb { z: 1.0 }, Regular),
            (PotentialSpec::Harmonic { k: 1.0 }, Regular),
            (PotentialSpec::Logarithmic { a: 2.0 }, Regular),
            (PotentialSpec::Npo { g: 0.1, lambda: 5.0 }, Regular),
            (PotentialSpec::Hulthen { z: 1.0, delta: 0.5 }, Regular),
            (PotentialSpec::Yukawa { z: 2.0, lambda: 0.3 }, Regular),
            (
                PotentialSpec::Gsho { a: 5.0, lambda: 0.0, alpha: 4.0 },
                Transition,
            ),
            (PotentialSpec::PowerLaw { a: 3.0, nu: 2.0 }, Regular),
            (
                PotentialSpec::Sho { lambda: 1.0, alpha: 4.0 },
                SingularRepulsive,
            ),
            (PotentialSpec::Sho { lambda: 1.0, alpha: 1.0 }, Regular),
            (
                PotentialSpec::SexticSingular { a: 1.0, b: 1.0, c: 1.0 },
                SingularRepulsive,
            ),
            (PotentialSpec::PowerLaw { a: 1.0, nu: -3.0 }, SingularAttractive),
        ];
        for (spec, expected) in cases {
            assert_eq!(spec.classify(), expected, "classify {spec:?}");
        }
    }

    #[test]
    fn inverse_square_sits_on_the_transition_line() {
        // nu = -2 exactly: r^2 V = -A, finite and nonzero.
        let v = PotentialSpec::PowerLaw { a: 5.0, nu: -2.0 };
        assert_eq!(v.classify(), SingularityClass::Transition);
        let g = PotentialSpec::Gsho { a: 1e-3, lambda: 0.0, alpha: 3.0 };
        assert_eq!(g.classify(), SingularityClass::Transition);
    }

    #[test]
    fn hydrogen_reference_levels() {
        let conv = Convention::half();
        let h = PotentialSpec::Coulomb { z: 1.0 };
        for n in 1..=5u32 {
            for l in 0..n {
                let e = h.exact_reference(l, n - l - 1, conv).unwrap();
                let expect = -0.5 / (n as f64 * n as f64);
                assert!((e - expect).abs() < 1e-15, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn hulthen_exact_s_levels() {
        let conv = Convention::half();
        let v = PotentialSpec::Hulthen { z: 1.0, delta: 1.97 };
        let e = v.exact_reference(0, 0, conv).unwrap();
        assert!((e + 0.0001125).abs() < 1e-15, "1s at delta=1.97: {e}");

        let v17 = PotentialSpec::Hulthen { z: 1.0, delta: 0.005 };
        let e17 = v17.exact_reference(0, 16, conv).unwrap();
        assert!((e17 + 0.0001332288062).abs() < 1e-10, "17s: {e17}");

        // Validity window: no bound 2s at delta = 1.97.
        assert!(v.exact_reference(0, 1, conv).is_none());
        // No closed form off the s channel.
        assert!(v.exact_reference(1, 0, conv).is_none());
    }

    #[test]
    fn linear_potential_airy_reference() {
        let conv = Convention::half();
        let a = 2f64.powf(3.5);
        let v = PotentialSpec::PowerLaw { a, nu: 1.0 };
        let e0 = v.exact_reference(0, 0, conv).unwrap();
        assert!(
            (e0 - 9.352429641).abs() < 1e-7,
            "linear ground from Airy zero: {e0}"
        );
        let e2 = v.exact_reference(0, 2, conv).unwrap();
        assert!((e2 - 22.08223931).abs() < 1e-7, "n=2: {e2}");
    }

    #[test]
    fn sextic_conditionally_exact_ground() {
        let conv = Convention::full();
        let v = PotentialSpec::SexticSingular { a: 1.0, b: 1.0, c: 1.0 };
        let e = v.exact_reference(0, 0, conv).unwrap();
        assert!((e - 5.0).abs() < 1e-12, "constrained sextic ground: {e}");
        // Constraint violated: absent, not an error.
        let off = PotentialSpec::SexticSingular { a: 1.0, b: 1.1, c: 1.0 };
        assert!(off.exact_reference(0, 0, conv).is_none());
    }

    #[test]
    fn charged_oscillator_elementary_ladder() {
        let conv = Convention {
            kinetic_prefactor: 1.0,
            report_scale: 0.5,
        };
        let cases = [
            (0.0, 1.5),
            (2.0, 2.5),
            (20f64.sqrt(), 3.5),
            ((30.0 + 6.0 * 17f64.sqrt()).sqrt(), 4.5),
            ((70.0 + 6.0 * 57f64.sqrt()).sqrt(), 5.5),
            (14.450001026966, 6.5),
        ];
        for (lambda, expect) in cases {
            let v = PotentialSpec::charged_oscillator(lambda);
            let e = v.exact_reference(0, 0, conv);
            assert_eq!(e, Some(expect), "lambda = {lambda}");
        }
        // A generic coupling admits no elementary solution.
        let v = PotentialSpec::charged_oscillator(1.0);
        assert!(v.exact_reference(0, 0, conv).is_none());
    }

    #[test]
    fn npo_conditionally_exact_values() {
        let conv = Convention::full();
        let cases: [(u32, f64, f64, f64); 6] = [
            (0, 0.1, -0.46, 2.4),
            (1, 0.1, -0.5, 4.0),
            (0, 1.0, -10.0, -3.0),
            (1, 0.01, -0.041, 4.9),
            (2, 1.0, -18.0, -7.0),
            (2, 10.0, -1440.0, -133.0),
        ];
        for (l, g, lambda, expect) in cases {
            let v = PotentialSpec::Npo { g, lambda };
            let e = v.exact_reference(l, 0, conv).unwrap();
            assert!(
                (e - expect).abs() < 1e-10,
                "npo l={l} g={g} lambda={lambda}: {e} vs {expect}"
            );
        }
    }

    #[test]
    fn gsho_reduces_to_goldman_krivchenkov() {
        let conv = Convention::full();
        // A = 0, lambda = 0: plain oscillator in the unit-kinetic convention.
        let v = PotentialSpec::Gsho { a: 0.0, lambda: 0.0, alpha: 4.0 };
        assert!((v.exact_reference(0, 0, conv).unwrap() - 3.0).abs() < 1e-12);
        // A = 2 with l = 0: effective angular momentum Lambda = 1.
        let v2 = PotentialSpec::Gsho { a: 2.0, lambda: 0.0, alpha: 4.0 };
        assert!((v2.exact_reference(0, 0, conv).unwrap() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn coulomb_coupling_series_example() {
        let v = PotentialSpec::charged_oscillator(-10.0);
        let e = v
            .reference_series(SeriesRegime::CoulombCoupling, 2)
            .unwrap();
        assert!((e + 24.88).abs() < 1e-10, "two-term value {e}");
    }

    #[test]
    fn ecker_weizel_close_to_reference_level() {
        let v = PotentialSpec::Hulthen { z: 1.0, delta: 0.35 };
        let e = v
            .reference_series(SeriesRegime::EckerWeizel { n: 2, l: 1 }, 1)
            .unwrap();
        // Diagnostic accuracy: within ~1e-3 of the converged -0.00379310.
        assert!((e + 0.00379309814702).abs() < 1e-3, "EW 2p: {e}");
        assert!(e < 0.0);
    }

    #[test]
    fn npo_series_recovers_oscillator_at_small_g() {
        for n in 0..4usize {
            let v = PotentialSpec::Npo { g: 1e-8, lambda: 1e-8 };
            let e = v
                .reference_series(SeriesRegime::SmallCouplingRatio { n }, 1)
                .unwrap();
            assert!(
                (e - (2.0 * n as f64 + 1.0)).abs() < 1e-6,
                "n={n} small-g limit {e}"
            );
        }
    }

    #[test]
    fn unsupported_series_pairs_rejected() {
        let v = PotentialSpec::Coulomb { z: 1.0 };
        assert!(v
            .reference_series(SeriesRegime::CoulombCoupling, 2)
            .is_err());
        let sho = PotentialSpec::Sho { lambda: 1.0, alpha: 4.0 };
        assert!(sho
            .reference_series(SeriesRegime::StrongCoupling, 2)
            .is_err());
    }

    #[test]
    fn hermite_integral_limits() {
        // g -> 0+: I_n -> sqrt(pi) 2^n n! / 2.
        let i0 = hermite_integral(0, 1e-12);
        assert!((i0 - PI.sqrt() / 2.0).abs() < 1e-9, "I_0 = {i0}");
        let i1 = hermite_integral(1, 1e-12);
        assert!((i1 - PI.sqrt()).abs() < 1e-8, "I_1 = {i1}");
    }

    #[test]
    fn hermite_integral_dual_quadrature() {
        // Cross-check the Lobatto-panel value against composite Simpson.
        let n = 0usize;
        let g = 1.0;
        let lobatto = hermite_integral(n, g);
        let upper = 12.0;
        let steps = 48_000;
        let h = upper / steps as f64;
        let f = |x: f64| {
            let e = (-x * x).exp();
            e * (1.0 - g * x * x) / (1.0 + g * x * x)
        };
        let mut simpson = f(0.0) + f(upper);
        for i in 1..steps {
            let x = i as f64 * h;
            simpson += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
        }
        simpson *= h / 3.0;
        assert!(
            (lobatto - simpson).abs() < 1e-10,
            "lobatto {lobatto} vs simpson {simpson}"
        );
    }

    #[test]
    fn airy_zeros_match_reference_values() {
        let reference = [
            2.338107410459767,
            4.087949444130970,
            5.520559828095551,
            6.786708090071759,
            7.944133587120853,
        ];
        for (i, &want) in reference.iter().enumerate() {
            let z = airy_zero(i + 1);
            assert!((z - want).abs() < 1e-10, "zero {}: {z}", i + 1);
            // Residual floor grows with the series cancellation at larger z.
            let (ai, _) = super::airy_ai(-z);
            assert!(ai.abs() < 1e-11, "Ai at zero {}: {ai:.3e}", i + 1);
        }
    }

    #[test]
    fn gamma_spot_values() {
        assert!((gamma(0.5) - PI.sqrt()).abs() < 1e-12);
        assert!((gamma(1.0) - 1.0).abs() < 1e-13);
        assert!((gamma(5.0) - 24.0).abs() < 1e-11);
        assert!((gamma(1.5) - 0.5 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn json_round_trip_and_schema_errors() {
        let spec: PotentialSpec =
            serde_json::from_str(r#"{"family":"hulthen","params":{"Z":1.0,"delta":0.35}}"#)
                .unwrap();
        assert_eq!(spec, PotentialSpec::Hulthen { z: 1.0, delta: 0.35 });
        let text = serde_json::to_string(&spec).unwrap();
        let back: PotentialSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);

        // Charged-oscillator alias lands on the alpha = 1 spike.
        let co: PotentialSpec =
            serde_json::from_str(r#"{"family":"charged_oscillator","params":{"lambda":2.0}}"#)
                .unwrap();
        assert_eq!(co, PotentialSpec::Sho { lambda: 2.0, alpha: 1.0 });

        let missing: std::result::Result<PotentialSpec, _> =
            serde_json::from_str(r#"{"family":"hulthen","params":{"Z":1.0}}"#);
        let msg = format!("{}", missing.unwrap_err());
        assert!(msg.contains("delta"), "error should name the field: {msg}");

        let unknown: std::result::Result<PotentialSpec, _> =
            serde_json::from_str(r#"{"family":"hulthen","params":{"Z":1.0,"delta":0.1,"x":2}}"#);
        assert!(unknown.is_err());

        let nofam: std::result::Result<PotentialSpec, _> =
            serde_json::from_str(r#"{"params":{"Z":1.0}}"#);
        let msg = format!("{}", nofam.unwrap_err());
        assert!(msg.contains("family"), "{msg}");
    }

    #[test]
    fn param_paths() {
        let mut v = PotentialSpec::Npo { g: 0.1, lambda: 1.0 };
        assert_eq!(v.param("g"), Some(0.1));
        v.set_param("lambda", 2.5).unwrap();
        assert_eq!(v.param("lambda"), Some(2.5));
        assert!(v.set_param("delta", 1.0).is_err());
        // Setting a value that violates an invariant is rejected and leaves
        // the spec unchanged.
        assert!(v.set_param("g", -1.0).is_err());
        assert_eq!(v.param("g"), Some(0.1));
    }
}
