//! Eigenvalue-level computations: a dense symmetric eigensolver, exact
//! characteristic polynomials, the odd-prime closed forms and graph energy.

mod charpoly;
mod closed_form;
mod energy;
mod jacobi;
mod poly;
mod power;

pub use charpoly::{
    charpoly_exact, charpoly_factorization, CharPolyFactorization, MAX_CHARPOLY_ORDER,
};
pub use closed_form::{
    nullity_rank_bounds, quotient_matrix, radius_discriminant, spectral_radius_closed,
    trace_b_squared, trace_of_square, two_adic_bounds, two_adic_energy_bound, NullityRankBounds,
    QuotientMatrix, TwoAdicBounds,
};
pub use energy::{
    dense_spectrum, energy_direct, energy_report, twin_reduced_spectrum, EnergyReport,
    DENSE_EIG_LIMIT,
};
pub use jacobi::{eig_sym, DEFAULT_TOL, MAX_SWEEPS};
pub use poly::IntPoly;
pub use power::spectral_radius_power;

use serde::Serialize;

/// Where an eigenvalue multiset came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    DenseSolve,
    FactoredModel,
    /// Dense solve of the twin quotient, padded with zeros.
    TwinQuotient,
    ClosedForm,
}

/// Eigenvalues sorted descending, with the tolerance they were computed to.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenSpectrum {
    pub eigenvalues: Vec<f64>,
    pub source: SpectrumSource,
    pub tolerance: f64,
}

impl EigenSpectrum {
    pub fn new(mut eigenvalues: Vec<f64>, source: SpectrumSource, tolerance: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        EigenSpectrum {
            eigenvalues,
            source,
            tolerance,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }

    /// Sum of absolute eigenvalues.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    /// Eigenvalues within `tol` of `target`.
    pub fn count_near(&self, target: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|x| (*x - target).abs() < tol)
            .count()
    }

    /// Consecutive eigenvalues closer than `tol` merged into `(mean, multiplicity)`.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, Vec<f64>)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((_, members)) if (members[members.len() - 1] - x).abs() < tol => {
                    members.push(x)
                }
                _ => out.push((x, vec![x])),
            }
        }
        out.into_iter()
            .map(|(_, m)| (m.iter().sum::<f64>() / m.len() as f64, m.len()))
            .collect()
    }
}

/// `|a - b| <= rel * max(|a|, |b|)`, or `<= abs` when both are near zero.
pub fn approx_eq(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    let d = (a - b).abs();
    d <= abs || d <= rel * a.abs().max(b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouping_and_counts() {
        let s = EigenSpectrum::new(
            vec![-1.0, 3.0, 1.0 + 1e-9, -1.0 + 1e-9, 1.0, -2.0, -1.0],
            SpectrumSource::DenseSolve,
            1e-10,
        );
        assert_eq!(s.largest(), Some(3.0));
        let g: Vec<usize> = s.grouped(1e-6).iter().map(|x| x.1).collect();
        assert_eq!(g, vec![1, 2, 3, 1]);
        assert_eq!(s.count_near(-1.0, 1e-6), 3);
        assert!((s.energy() - 10.0).abs() < 1e-8);
    }
}
