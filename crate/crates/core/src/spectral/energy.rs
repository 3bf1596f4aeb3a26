use serde::Serialize;

use super::{eig_sym, spectral_radius_closed, trace_b_squared, EigenSpectrum, SpectrumSource};
use crate::error::{Error, Result};
use crate::graph::{build_reduced, twin_classes, ZdGraph};
use crate::linalg::RealMatrix;
use crate::spectral::{radius_discriminant, MAX_CHARPOLY_ORDER};

/// Largest vertex count for a dense adjacency eigensolve.
pub const DENSE_EIG_LIMIT: usize = 2500;

/// `E(G_p) = (p+1)(p-2) + E(B_p)` together with the two closed-form lower bounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnergyReport {
    pub p: u32,
    pub num_vertices: u64,
    pub forced_part: u64,
    pub reduced_energy: f64,
    pub total_energy: f64,
    pub bound_quotient: f64,
    pub bound_moment: f64,
    pub complete_graph_energy: u64,
    pub hyperenergetic: bool,
    #[serde(skip)]
    pub reduced_spectrum: EigenSpectrum,
}

pub fn energy_report(p: u32, tol: f64) -> Result<EnergyReport> {
    let model = build_reduced(p)?;
    let order = model.b.order();
    if order > MAX_CHARPOLY_ORDER {
        return Err(Error::Resource {
            what: format!("eigensolve of the reduced matrix for p = {p}"),
            needed: order as u64,
            limit: MAX_CHARPOLY_ORDER as u64,
            hint: "p <= 13",
        });
    }
    let spectrum = eig_sym(&model.b.to_real(), tol)?;
    let q = p as u64;
    let forced = (q + 1) * (q - 2);
    let v = (q + 1) * (q + 1) * (q - 1);
    let reduced = spectrum.energy();
    let total = forced as f64 + reduced;
    let bound_quotient = forced as f64 + (radius_discriminant(p)? as f64).sqrt();
    let bound_moment = forced as f64 + trace_b_squared(p)? as f64 / spectral_radius_closed(p)?;
    let complete = 2 * (v - 1);
    Ok(EnergyReport {
        p,
        num_vertices: v,
        forced_part: forced,
        reduced_energy: reduced,
        total_energy: total,
        bound_quotient,
        bound_moment,
        complete_graph_energy: complete,
        hyperenergetic: total > complete as f64,
        reduced_spectrum: spectrum,
    })
}

/// Sum of absolute adjacency eigenvalues by dense eigensolve.
pub fn energy_direct(g: &ZdGraph, tol: f64) -> Result<f64> {
    Ok(dense_spectrum(g, tol, DENSE_EIG_LIMIT)?.energy())
}

/// Full adjacency spectrum, refused above `limit` vertices.
pub fn dense_spectrum(g: &ZdGraph, tol: f64, limit: usize) -> Result<EigenSpectrum> {
    let n = g.num_vertices();
    if n > limit {
        return Err(Error::Resource {
            what: "dense adjacency eigensolve".into(),
            needed: n as u64,
            limit: limit as u64,
            hint: "a smaller graph, or the factored model for odd primes",
        });
    }
    eig_sym(&g.to_real_matrix(), tol)
}

/// Full adjacency spectrum through the twin quotient.
///
/// With `S` the vertex-to-class indicator and `B` the class adjacency,
/// `A = S B S^T`, so the nonzero spectrum of `A` is that of `D^(1/2) B D^(1/2)`
/// for `D` the class sizes, and the remaining `|V| - k` eigenvalues are 0.
/// Only the `k x k` matrix is diagonalized; `limit` bounds `k`.
pub fn twin_reduced_spectrum(g: &ZdGraph, tol: f64, limit: usize) -> Result<EigenSpectrum> {
    let classes = twin_classes(g);
    let k = classes.len();
    if k > limit {
        return Err(Error::Resource {
            what: "eigensolve of the twin quotient".into(),
            needed: k as u64,
            limit: limit as u64,
            hint: "a smaller graph",
        });
    }
    let mut m = RealMatrix::zeros(k);
    let root: Vec<f64> = classes.sizes.iter().map(|&s| (s as f64).sqrt()).collect();
    for (a, &u) in classes.representatives.iter().enumerate() {
        for (b, &v) in classes.representatives.iter().enumerate() {
            if g.is_adjacent(u, v) {
                m[(a, b)] = root[a] * root[b];
            }
        }
    }
    let reduced = eig_sym(&m, tol)?;
    let mut eig = reduced.eigenvalues;
    eig.extend(std::iter::repeat_n(0.0, g.num_vertices() - k));
    Ok(EigenSpectrum::new(eig, SpectrumSource::TwinQuotient, tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_brute, build_g2, BuildOptions};
    use crate::ring::Modulus;
    use crate::spectral::DEFAULT_TOL;

    fn close4(x: f64, want: f64) -> bool {
        (x - want).abs() < 5e-5
    }

    #[test]
    fn table_rows() {
        let want = [
            (3, 4, 20.5227, 35.6829, 72.7095),
            (5, 18, 66.6724, 161.5800, 364.4303),
            (7, 40, 136.7523, 423.5501, 1016.3064),
        ];
        for (p, forced, lq, lm, total) in want {
            let r = energy_report(p, DEFAULT_TOL).unwrap();
            assert_eq!(r.forced_part, forced);
            assert!(
                close4(r.bound_quotient, lq),
                "p={p} LQ {}",
                r.bound_quotient
            );
            assert!(close4(r.bound_moment, lm), "p={p} LM {}", r.bound_moment);
            assert!(close4(r.total_energy, total), "p={p} E {}", r.total_energy);
            assert!(r.bound_quotient <= r.bound_moment && r.bound_moment <= r.total_energy);
            assert!(r.hyperenergetic);
        }
        assert_eq!(
            energy_report(3, DEFAULT_TOL).unwrap().complete_graph_energy,
            62
        );
    }

    #[test]
    fn direct_energies() {
        let e2 = energy_direct(&build_g2(), DEFAULT_TOL).unwrap();
        assert!((e2 - 10.0).abs() < 1e-9);
        let g3 = build_brute(&Modulus::new(3).unwrap(), &BuildOptions::default()).unwrap();
        let e3 = energy_direct(&g3, DEFAULT_TOL).unwrap();
        let r3 = energy_report(3, DEFAULT_TOL).unwrap();
        assert!((e3 - r3.total_energy).abs() < 1e-6 * e3);
    }

    #[test]
    fn twin_quotient_matches_dense() {
        let graphs = [
            build_brute(&Modulus::new(4).unwrap(), &BuildOptions::default()).unwrap(),
            build_brute(&Modulus::new(3).unwrap(), &BuildOptions::default()).unwrap(),
            crate::graph::build_structured(5).unwrap(),
            build_g2(),
        ];
        for g in &graphs {
            let dense = dense_spectrum(g, DEFAULT_TOL, DENSE_EIG_LIMIT).unwrap();
            let twin = twin_reduced_spectrum(g, DEFAULT_TOL, DENSE_EIG_LIMIT).unwrap();
            assert_eq!(dense.len(), twin.len());
            for (a, b) in dense.eigenvalues.iter().zip(&twin.eigenvalues) {
                assert!((a - b).abs() < 1e-6, "{a} vs {b}");
            }
        }
        assert!(twin_reduced_spectrum(&graphs[0], DEFAULT_TOL, 10).is_err());
    }

    #[test]
    fn budget() {
        let g = build_g2();
        assert!(matches!(
            dense_spectrum(&g, DEFAULT_TOL, 6),
            Err(Error::Resource { .. })
        ));
        assert!(energy_report(17, DEFAULT_TOL).is_err());
    }
}
