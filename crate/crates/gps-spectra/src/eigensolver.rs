//! Full eigendecomposition of dense real symmetric matrices.
//!
//! Householder reduction to tridiagonal form followed by the implicit-shift
//! QL iteration, accumulating the transformations for eigenvectors. This is
//! the classic EISPACK tred2/tql2 pair. Two refinements matter for the
//! Hamiltonians this crate produces:
//!
//! * the matrix is permuted so the diagonal grades upward (small entries
//!   first), the ordering in which QL keeps small eigenvalues accurate when
//!   the diagonal spans many orders of magnitude (spiked potentials reach
//!   1e16 near the origin while the bound states sit at order one);
//! * each eigenvalue is replaced by the Rayleigh quotient of its computed
//!   eigenvector, which removes the eps * ||H|| floor of the QL eigenvalues
//!   for smooth low-lying states.

use crate::matrix::SquareMatrix;
use crate::{GpsError, Result};

/// Result of a symmetric eigendecomposition.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors, one per row, aligned with `eigenvalues`. Unit norm,
    /// sign fixed so the largest-magnitude component is positive.
    vectors: SquareMatrix,
    /// Per-pair residual ||H v - lambda v||_2.
    pub residuals: Vec<f64>,
    /// Frobenius norm of the input, for residual scaling.
    pub h_frobenius: f64,
}

impl EigenDecomposition {
    /// Eigenvector for eigenvalue k as a contiguous slice.
    pub fn eigenvector(&self, k: usize) -> &[f64] {
        self.vectors.row(k)
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// Largest |H_ij - H_ji| tolerated, relative to the largest entry.
const SYMMETRY_TOL: f64 = 1e-12;

/// Eigendecomposition of a finite symmetric matrix.
///
/// Rejects inputs that are non-symmetric beyond 1e-12 relative, or contain
/// non-finite entries. Deterministic: identical input bits give identical
/// output bits.
pub fn eigh(h: &SquareMatrix) -> Result<EigenDecomposition> {
    let n = h.dim();
    if n == 0 {
        return Err(GpsError::Eigensolver("empty matrix".into()));
    }
    let mut max_abs = 0.0_f64;
    for &v in h.as_slice() {
        if !v.is_finite() {
            return Err(GpsError::Eigensolver("non-finite entry".into()));
        }
        max_abs = max_abs.max(v.abs());
    }
    let asym = h.max_asymmetry();
    if asym > SYMMETRY_TOL * max_abs.max(f64::MIN_POSITIVE) {
        return Err(GpsError::Eigensolver(format!(
            "matrix asymmetry {asym:.3e} exceeds tolerance"
        )));
    }

    // Grade the diagonal upward. For well-scaled matrices this is a no-op
    // permutation cost; for strongly graded ones it protects the small
    // eigenvalues through the QL sweeps.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&a, &b| {
        h.get(a, a)
            .abs()
            .partial_cmp(&h.get(b, b).abs())
            .unwrap()
            .then(a.cmp(&b))
    });

    let mut a = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, h.get(perm[i], perm[j]));
        }
    }

    let (mut d, z) = {
        let mut work = a;
        let (d, e) = tred2(&mut work);
        let d = tql2(d, e, &mut work)?;
        (d, work)
    };

    // Sort ascending, carrying eigenvector columns along.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap().then(i.cmp(&j)));
    let sorted_d: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    d = sorted_d;

    // Extract eigenvectors into rows, undoing the grading permutation.
    let mut vectors = SquareMatrix::zeros(n);
    for (k, &col) in order.iter().enumerate() {
        for i in 0..n {
            vectors.set(k, perm[i], z.get(i, col));
        }
    }
    drop(z);

    // Deterministic sign: largest-magnitude component positive.
    for k in 0..n {
        let mut best = 0usize;
        let mut best_abs = 0.0_f64;
        for i in 0..n {
            let v = vectors.get(k, i).abs();
            if v > best_abs {
                best_abs = v;
                best = i;
            }
        }
        if vectors.get(k, best) < 0.0 {
            for i in 0..n {
                let v = vectors.get(k, i);
                vectors.set(k, i, -v);
            }
        }
    }

    // Rayleigh-quotient refinement plus residuals in one matvec per pair.
    let mut residuals = vec![0.0; n];
    for k in 0..n {
        let v = vectors.row(k).to_vec();
        let hv = h.mul_vec(&v);
        let vv: f64 = v.iter().map(|x| x * x).sum();
        let rq: f64 = v.iter().zip(&hv).map(|(x, y)| x * y).sum::<f64>() / vv;
        // Guard: only adopt the Rayleigh quotient when it stays within the
        // QL error ball, so a defective vector cannot move the eigenvalue.
        if (rq - d[k]).abs() <= 1e-8 * max_abs.max(1.0) + 1e-8 * d[k].abs() {
            d[k] = rq;
        }
        let mut res = 0.0;
        for i in 0..n {
            let r = hv[i] - d[k] * v[i];
            res += r * r;
        }
        residuals[k] = res.sqrt();
    }

    // Re-sort in case refinement reordered near-degenerate pairs.
    let mut order2: Vec<usize> = (0..n).collect();
    order2.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap().then(i.cmp(&j)));
    if order2.iter().enumerate().any(|(i, &o)| i != o) {
        let d2: Vec<f64> = order2.iter().map(|&i| d[i]).collect();
        let r2: Vec<f64> = order2.iter().map(|&i| residuals[i]).collect();
        let mut v2 = SquareMatrix::zeros(n);
        for (k, &o) in order2.iter().enumerate() {
            for i in 0..n {
                v2.set(k, i, vectors.get(o, i));
            }
        }
        d = d2;
        residuals = r2;
        vectors = v2;
    }

    Ok(EigenDecomposition {
        eigenvalues: d,
        vectors,
        residuals,
        h_frobenius: h.frobenius_norm(),
    })
}

/// Householder reduction of `a` to tridiagonal form, accumulating the
/// orthogonal transformation in `a`. Returns (diagonal, subdiagonal).
fn tred2(a: &mut SquareMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = a.dim();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let mut scale = 0.0;
            for k in 0..=l {
                scale += a.get(i, k).abs();
            }
            if scale == 0.0 {
                e[i] = a.get(i, l);
            } else {
                for k in 0..=l {
                    let v = a.get(i, k) / scale;
                    a.set(i, k, v);
                    h += v * v;
                }
                let f = a.get(i, l);
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a.set(i, l, f - g);
                let mut f_acc = 0.0;
                for j in 0..=l {
                    a.set(j, i, a.get(i, j) / h);
                    let mut g_acc = 0.0;
                    for k in 0..=j {
                        g_acc += a.get(j, k) * a.get(i, k);
                    }
                    for k in (j + 1)..=l {
                        g_acc += a.get(k, j) * a.get(i, k);
                    }
                    e[j] = g_acc / h;
                    f_acc += e[j] * a.get(i, j);
                }
                let hh = f_acc / (h + h);
                for j in 0..=l {
                    let f = a.get(i, j);
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        let v = a.get(j, k) - (f * e[k] + g * a.get(i, k));
                        a.set(j, k, v);
                    }
                }
            }
        } else {
            e[i] = a.get(i, l);
        }
        d[i] = h;
    }

    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a.get(i, k) * a.get(k, j);
                }
                for k in 0..i {
                    let v = a.get(k, j) - g * a.get(k, i);
                    a.set(k, j, v);
                }
            }
        }
        d[i] = a.get(i, i);
        a.set(i, i, 1.0);
        for j in 0..i {
            a.set(j, i, 0.0);
            a.set(i, j, 0.0);
        }
    }
    (d, e)
}

/// Implicit-shift QL iteration on the tridiagonal (d, e), rotating the
/// eigenvector columns held in `z`. Returns the eigenvalues (unsorted).
fn tql2(mut d: Vec<f64>, mut e: Vec<f64>, z: &mut SquareMatrix) -> Result<Vec<f64>> {
    let n = d.len();
    if n == 1 {
        return Ok(d);
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(GpsError::Eigensolver(format!(
                    "QL failed to converge at index {l}"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    f = z.get(k, i + 1);
                    let zi = z.get(k, i);
                    z.set(k, i + 1, s * zi + c * f);
                    z.set(k, i, c * zi - s * f);
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(d)
}
