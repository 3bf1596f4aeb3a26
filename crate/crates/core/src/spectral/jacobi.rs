use super::{EigenSpectrum, SpectrumSource};
use crate::error::{usage, Error, Result};
use crate::linalg::RealMatrix;

/// Off-diagonal Frobenius norm at which sweeping stops.
pub const DEFAULT_TOL: f64 = 1e-10;

pub const MAX_SWEEPS: usize = 100;

const SYMMETRY_TOL: f64 = 1e-12;

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps run until the off-diagonal Frobenius norm drops below `tol`.
pub fn eig_sym(m: &RealMatrix, tol: f64) -> Result<EigenSpectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(usage(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.order();
    for i in 0..n {
        for j in 0..i {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL {
                return Err(usage(format!(
                    "matrix is not symmetric at ({i}, {j}): {} vs {}",
                    m[(i, j)],
                    m[(j, i)]
                )));
            }
        }
    }
    let mut a = m.clone();
    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numeric {
                method: "jacobi",
                iterations: sweeps,
                residual: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }
    let eigenvalues = (0..n).map(|i| a[(i, i)]).collect();
    Ok(EigenSpectrum::new(
        eigenvalues,
        SpectrumSource::DenseSolve,
        tol,
    ))
}

fn off_norm(a: &RealMatrix) -> f64 {
    let n = a.order();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with one plane rotation.
fn rotate(a: &mut RealMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    if apq == 0.0 {
        return;
    }
    let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    a[(p, p)] -= t * apq;
    a[(q, q)] += t * apq;
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for r in 0..a.order() {
        if r == p || r == q {
            continue;
        }
        let g = a[(r, p)];
        let h = a[(r, q)];
        let rp = g - s * (h + g * tau);
        let rq = h + s * (g - h * tau);
        a[(r, p)] = rp;
        a[(p, r)] = rp;
        a[(r, q)] = rq;
        a[(q, r)] = rq;
    }
}
