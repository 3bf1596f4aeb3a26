//! Machine-readable summary of one modulus: build, invariants, spectrum and bounds.
//!
//! Every field that depends on a computation is `null` when that computation
//! did not run; no field is defaulted to zero.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{usage, Result};
use crate::graph::{
    build_brute, build_structured, twin_classes, BuildMethod, BuildOptions, ZdGraph,
};
use crate::invariants::{degree_histogram, diameter, girth, Girth};
use crate::ring::Modulus;
use crate::spectral::{
    charpoly_factorization, dense_spectrum, energy_report, nullity_rank_bounds, quotient_matrix,
    spectral_radius_closed, spectral_radius_power, twin_reduced_spectrum, two_adic_bounds,
    two_adic_energy_bound, EigenSpectrum, EnergyReport, QuotientMatrix, SpectrumSource,
    TwoAdicBounds, DENSE_EIG_LIMIT, MAX_CHARPOLY_ORDER,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Dense eigensolves without `--allow-large` stop at this many rows; larger
/// graphs fall back to the twin quotient under the same limit.
pub const DEFAULT_DENSE_LIMIT: usize = 400;

/// Eigenvalues closer than this are reported as one value with a multiplicity.
pub const GROUPING_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    Auto,
    Brute,
    Structured,
}

impl MethodChoice {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "brute" => Ok(MethodChoice::Brute),
            "structured" => Ok(MethodChoice::Structured),
            other => Err(usage(format!(
                "unknown method {other:?}; expected auto, brute or structured"
            ))),
        }
    }
}

/// Structured for odd primes under `Auto`, brute force otherwise.
pub fn build_graph(n: u32, method: MethodChoice, opts: &BuildOptions) -> Result<ZdGraph> {
    let m = Modulus::new(n)?;
    match method {
        MethodChoice::Structured => {
            if !m.is_odd_prime() {
                return Err(usage(format!(
                    "structured construction needs an odd prime modulus, got {n}"
                )));
            }
            build_structured(n)
        }
        MethodChoice::Auto if m.is_odd_prime() => build_structured(n),
        _ => build_brute(&m, opts),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusMethod {
    ClosedForm,
    DenseSolve,
    PowerIteration,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadiusValue {
    pub value: f64,
    pub method: RadiusMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnergySummary {
    pub value: Option<f64>,
    /// `2 rho`, valid for every graph.
    pub bound_two_rho: Option<f64>,
    /// `2|E| / rho`, valid for every graph.
    pub bound_edges_over_rho: Option<f64>,
    pub bound_quotient: Option<f64>,
    pub bound_moment: Option<f64>,
    pub bound_two_adic: Option<f64>,
    pub hyperenergetic: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OddPrimeExtras {
    pub closed_form_radius: f64,
    pub quotient_matrix: QuotientMatrix,
    pub zero_multiplicity: usize,
    pub minus_one_multiplicity: usize,
    pub reduced_order: usize,
    /// Coefficients of `χ_{B_p}` in ascending degree, as decimal strings.
    pub reduced_charpoly: Option<Vec<String>>,
    pub rank_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub tool_version: String,
    pub n: u32,
    pub method: BuildMethod,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub spectral_radius: Option<RadiusValue>,
    pub spectrum_source: Option<SpectrumSource>,
    pub nullity_bound: Option<u64>,
    pub observed_nullity: Option<usize>,
    pub minus_one_bound: Option<u64>,
    pub observed_minus_one: Option<usize>,
    pub eigenvalues: Option<Vec<EigenGroup>>,
    pub energy: EnergySummary,
    pub diameter: Option<u32>,
    pub girth: Girth,
    pub clique_bound: Option<TwoAdicBounds>,
    pub odd_prime: Option<OddPrimeExtras>,
    /// Excluded from determinism comparisons.
    pub wall_time_ms: f64,
}

impl RunReport {
    /// The report without its timing field, for byte-level comparison.
    pub fn deterministic_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("wall_time_ms");
        }
        v
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SpectrumOptions {
    pub tol: f64,
    pub allow_large: bool,
    pub method: MethodChoice,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            tol: crate::spectral::DEFAULT_TOL,
            allow_large: false,
            method: MethodChoice::Auto,
        }
    }
}

/// Full spectrum of `A_p` from the forced eigenvalues and those of `B_p`.
fn spectrum_from_factorization(p: u32, e: &EnergyReport, tol: f64) -> Result<EigenSpectrum> {
    let nb = nullity_rank_bounds(p)?;
    let mut eig = e.reduced_spectrum.eigenvalues.clone();
    eig.extend(std::iter::repeat_n(0.0, nb.nullity_lb as usize));
    eig.extend(std::iter::repeat_n(-1.0, nb.minus_one_mult_lb as usize));
    Ok(EigenSpectrum::new(eig, SpectrumSource::FactoredModel, tol))
}

pub fn spectrum_report(n: u32, opts: &SpectrumOptions) -> Result<RunReport> {
    let start = Instant::now();
    let modulus = Modulus::new(n)?;
    let build_opts = if opts.allow_large {
        BuildOptions::allow_large()
    } else {
        BuildOptions::default()
    };
    let g = build_graph(n, opts.method, &build_opts)?;
    let dense_limit = if opts.allow_large {
        DENSE_EIG_LIMIT
    } else {
        DEFAULT_DENSE_LIMIT
    };
    let odd_prime = modulus.is_odd_prime();
    let factored = odd_prime && ((n as usize) + 1).pow(2) <= MAX_CHARPOLY_ORDER;

    let reduced = if factored {
        Some(energy_report(n, opts.tol)?)
    } else {
        None
    };
    let spectrum = if let Some(e) = &reduced {
        Some(spectrum_from_factorization(n, e, opts.tol)?)
    } else if g.num_vertices() <= dense_limit {
        Some(dense_spectrum(&g, opts.tol, dense_limit)?)
    } else if twin_classes(&g).len() <= dense_limit {
        Some(twin_reduced_spectrum(&g, opts.tol, dense_limit)?)
    } else {
        None
    };

    let radius = if odd_prime {
        Some(RadiusValue {
            value: spectral_radius_closed(n)?,
            method: RadiusMethod::ClosedForm,
        })
    } else if let Some(s) = spectrum.as_ref().and_then(|s| s.largest()) {
        Some(RadiusValue {
            value: s,
            method: RadiusMethod::DenseSolve,
        })
    } else {
        Some(RadiusValue {
            value: spectral_radius_power(&g, 1e-10, 100_000)?,
            method: RadiusMethod::PowerIteration,
        })
    };

    let mut extras = None;
    let (mut nullity_bound, mut minus_one_bound) = (None, None);
    let (mut observed_nullity, mut observed_minus_one) = (None, None);
    let mut energy = EnergySummary {
        value: spectrum.as_ref().map(|s| s.energy()),
        bound_two_rho: None,
        bound_edges_over_rho: None,
        bound_quotient: None,
        bound_moment: None,
        bound_two_adic: None,
        hyperenergetic: None,
    };
    if let Some(s) = &spectrum {
        observed_nullity = Some(s.count_near(0.0, GROUPING_TOL));
        observed_minus_one = Some(s.count_near(-1.0, GROUPING_TOL));
        let complete = 2.0 * (g.num_vertices() as f64 - 1.0);
        energy.hyperenergetic = Some(s.energy() > complete);
    }
    if let Some(r) = radius.filter(|r| r.value > 0.0) {
        energy.bound_two_rho = Some(2.0 * r.value);
        energy.bound_edges_over_rho = Some(2.0 * g.num_edges() as f64 / r.value);
    }
    if odd_prime {
        let nb = nullity_rank_bounds(n)?;
        nullity_bound = Some(nb.nullity_lb);
        minus_one_bound = Some(nb.minus_one_mult_lb);
        let mut reduced_charpoly = None;
        if let Some(e) = &reduced {
            let f = charpoly_factorization(n)?;
            observed_nullity = Some(f.observed_nullity());
            observed_minus_one = Some(f.observed_minus_one_multiplicity());
            reduced_charpoly = Some(
                f.reduced_charpoly
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            );
            energy.bound_quotient = Some(e.bound_quotient);
            energy.bound_moment = Some(e.bound_moment);
        }
        let pu = n as usize;
        extras = Some(OddPrimeExtras {
            closed_form_radius: spectral_radius_closed(n)?,
            quotient_matrix: quotient_matrix(n)?,
            zero_multiplicity: pu * (pu + 1) * (pu - 2),
            minus_one_multiplicity: (pu + 1) * (pu - 2),
            reduced_order: (pu + 1) * (pu + 1),
            reduced_charpoly,
            rank_bound: nb.rank_ub,
        });
    }
    let clique_bound = match modulus.two_power_exponent() {
        Some(t) if t >= 2 => {
            energy.bound_two_adic = Some(two_adic_energy_bound(t)?);
            Some(two_adic_bounds(t)?)
        }
        _ => None,
    };
    let diam = match diameter(&g) {
        Ok(d) => Some(d),
        Err(crate::Error::Domain(_)) => None,
        Err(e) => return Err(e),
    };

    Ok(RunReport {
        tool_version: TOOL_VERSION.to_string(),
        n,
        method: g.method(),
        num_vertices: g.num_vertices(),
        num_edges: g.num_edges(),
        degree_histogram: degree_histogram(&g),
        spectral_radius: radius,
        spectrum_source: spectrum.as_ref().map(|s| s.source),
        nullity_bound,
        observed_nullity,
        minus_one_bound,
        observed_minus_one,
        eigenvalues: spectrum.as_ref().map(|s| {
            s.grouped(GROUPING_TOL)
                .into_iter()
                .map(|(value, multiplicity)| EigenGroup {
                    value: clean_zero(value),
                    multiplicity,
                })
                .collect()
        }),
        energy,
        diameter: diam,
        girth: girth(&g).girth,
        clique_bound,
        odd_prime: extras,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Maps `-0.0` and round-off residue to `0.0` so output is stable.
fn clean_zero(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_report() {
        let r = spectrum_report(2, &SpectrumOptions::default()).unwrap();
        assert_eq!((r.num_vertices, r.num_edges), (7, 9));
        let groups: Vec<(i64, usize)> = r
            .eigenvalues
            .unwrap()
            .iter()
            .map(|g| (g.value.round() as i64, g.multiplicity))
            .collect();
        assert_eq!(groups, vec![(3, 1), (1, 2), (-1, 3), (-2, 1)]);
        assert!((r.energy.value.unwrap() - 10.0).abs() < 1e-9);
        assert_eq!(r.energy.hyperenergetic, Some(false));
        assert!(r.odd_prime.is_none() && r.nullity_bound.is_none() && r.clique_bound.is_none());
        assert_eq!(r.diameter, Some(2));
    }

    #[test]
    fn p3_report() {
        let r = spectrum_report(3, &SpectrumOptions::default()).unwrap();
        let radius = r.spectral_radius.unwrap();
        assert_eq!(radius.method, RadiusMethod::ClosedForm);
        assert!((radius.value - 13.7614).abs() < 5e-5);
        assert_eq!(r.nullity_bound, Some(12));
        assert_eq!(r.observed_nullity, Some(12));
        assert_eq!(r.observed_minus_one, Some(4));
        let x = r.odd_prime.unwrap();
        assert_eq!(x.quotient_matrix.entries, [[1, 12], [4, 10]]);
        assert_eq!(x.reduced_charpoly.unwrap().len(), 17);
        assert!((r.energy.value.unwrap() - 72.7095).abs() < 5e-5);
    }

    #[test]
    fn p4_report() {
        let r = spectrum_report(4, &SpectrumOptions::default()).unwrap();
        assert_eq!(r.spectrum_source, Some(SpectrumSource::DenseSolve));
        assert!((r.spectral_radius.unwrap().value - 22.8577).abs() < 5e-5);
        assert_eq!(r.clique_bound.unwrap().rho_lb, 14);
        assert_eq!(r.energy.bound_two_adic, Some(28.0));
    }

    #[test]
    fn absent_fields_are_null() {
        let r = spectrum_report(2, &SpectrumOptions::default()).unwrap();
        let v = r.deterministic_json();
        assert!(v["nullity_bound"].is_null());
        assert!(v["odd_prime"].is_null());
        assert!(v.get("wall_time_ms").is_none());
    }

    #[test]
    fn method_validation() {
        assert!(build_graph(6, MethodChoice::Structured, &BuildOptions::default()).is_err());
        assert_eq!(
            build_graph(5, MethodChoice::Auto, &BuildOptions::default())
                .unwrap()
                .method(),
            BuildMethod::Structured
        );
        assert!(MethodChoice::parse("fast").is_err());
    }
}
