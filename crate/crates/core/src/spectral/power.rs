use crate::error::{usage, Error, Result};
use crate::graph::ZdGraph;

/// Largest adjacency eigenvalue by power iteration from the all-ones vector.
///
/// Each step applies `A + I`, which has the same Perron vector and cannot
/// oscillate on bipartite components. Rows are read straight from the bit
/// matrix. Stops once successive Rayleigh quotients differ by less than `tol`.
pub fn spectral_radius_power(g: &ZdGraph, tol: f64, max_iter: usize) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(usage(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.num_vertices();
    if n == 0 {
        return Ok(0.0);
    }
    let adj = g.adjacency();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let mut prev = f64::NAN;
    let mut estimate = 0.0;
    for _ in 0..max_iter {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = adj.ones(i).map(|j| x[j]).sum::<f64>();
        }
        // Rayleigh quotient x'Ax with |x| = 1
        estimate = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        if (estimate - prev).abs() < tol {
            return Ok(estimate);
        }
        prev = estimate;
        let mut norm = 0.0;
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += xi;
            norm += *yi * *yi;
        }
        let norm = norm.sqrt();
        if norm == 0.0 {
            return Ok(0.0);
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::Numeric {
        method: "power iteration",
        iterations: max_iter,
        residual: (estimate - prev).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_brute, build_g2, build_structured, BuildOptions};
    use crate::ring::Modulus;
    use crate::spectral::spectral_radius_closed;

    #[test]
    fn g2_is_three() {
        let r = spectral_radius_power(&build_g2(), 1e-12, 10_000).unwrap();
        assert!((r - 3.0).abs() < 1e-6);
    }

    #[test]
    fn brute_three_matches_closed_form() {
        let g = build_brute(&Modulus::new(3).unwrap(), &BuildOptions::default()).unwrap();
        let r = spectral_radius_power(&g, 1e-12, 10_000).unwrap();
        assert!((r - spectral_radius_closed(3).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn structured_matches_closed_form() {
        for p in [3u32, 5, 7] {
            let g = build_structured(p).unwrap();
            let r = spectral_radius_power(&g, 1e-12, 10_000).unwrap();
            let c = spectral_radius_closed(p).unwrap();
            assert!((r - c).abs() <= 1e-6 * c, "p={p}: {r} vs {c}");
        }
    }

    #[test]
    fn rejects_bad_tolerance_and_reports_nonconvergence() {
        let g = build_g2();
        assert!(matches!(
            spectral_radius_power(&g, 0.0, 10),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            spectral_radius_power(&g, 1e-300, 1),
            Err(Error::Numeric { .. })
        ));
    }
}
