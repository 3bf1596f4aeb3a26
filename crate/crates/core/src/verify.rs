//! Cross-validation of the structured construction against brute force for one odd prime.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{usage, Result};
use crate::graph::{build_brute, build_structured, BuildOptions, VertexLabel, ZdGraph};
use crate::invariants::{degree_histogram, diagonal_partition, verify_equitable};
use crate::model::{find_iso_params, phi, type_label};
use crate::ring::Modulus;
use crate::spectral::{
    charpoly_exact, charpoly_factorization, dense_spectrum, energy_report, quotient_matrix,
    spectral_radius_closed, spectral_radius_power, DEFAULT_TOL,
};

/// Tolerance for eigenvalue and radius comparisons.
pub const SPECTRAL_TOL: f64 = 1e-6;

/// Largest `|V|` for the exact characteristic polynomial of the full adjacency matrix.
pub const EXACT_FULL_CHARPOLY_LIMIT: usize = 144;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            detail: detail.into(),
        }
    }

    fn skipped(name: &'static str, detail: impl Into<String>) -> Self {
        CheckResult {
            name,
            status: CheckStatus::Skipped,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub p: u32,
    pub brute_pair_tests: u64,
    pub type_tests: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    /// No check failed; skipped checks do not count against.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub build: BuildOptions,
    /// Largest `|V|` for the dense spectrum comparison.
    pub dense_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            build: BuildOptions::default(),
            dense_limit: crate::report::DEFAULT_DENSE_LIMIT,
        }
    }
}

/// Position in `structured` of each brute-force vertex under `x -> type_label(phi(x))`.
pub fn brute_to_structured(brute: &ZdGraph, structured: &ZdGraph, p: u32) -> Result<Vec<usize>> {
    let params = find_iso_params(p)?;
    let index: HashMap<&VertexLabel, usize> = structured
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l, i))
        .collect();
    brute
        .labels()
        .iter()
        .map(|label| {
            let VertexLabel::Quaternion(x) = label else {
                return Err(usage(format!(
                    "brute-force vertex {label} is not a quaternion"
                )));
            };
            let (class, scalar) = type_label(&phi(x, &params)?)?;
            index
                .get(&VertexLabel::Typed { class, scalar })
                .copied()
                .ok_or_else(|| usage(format!("{x} maps outside the structured vertex set")))
        })
        .collect()
}

fn check_bijection(brute: &ZdGraph, structured: &ZdGraph, p: u32) -> Result<CheckResult> {
    let name = "bijection";
    let pi = brute_to_structured(brute, structured, p)?;
    let mut hit = vec![false; structured.num_vertices()];
    for (v, &w) in pi.iter().enumerate() {
        if std::mem::replace(&mut hit[w], true) {
            return Ok(CheckResult::new(
                name,
                false,
                format!(
                    "two vertices map to {}, one is {}",
                    structured.label(w),
                    brute.label(v)
                ),
            ));
        }
    }
    if brute.num_vertices() != structured.num_vertices() {
        return Ok(CheckResult::new(name, false, "vertex sets differ in size"));
    }
    let n = brute.num_vertices();
    for u in 0..n {
        for v in u + 1..n {
            if brute.is_adjacent(u, v) != structured.is_adjacent(pi[u], pi[v]) {
                return Ok(CheckResult::new(
                    name,
                    false,
                    format!(
                        "{} ~ {} is {} by brute force but {} ~ {} is {} by type",
                        brute.label(u),
                        brute.label(v),
                        brute.is_adjacent(u, v),
                        structured.label(pi[u]),
                        structured.label(pi[v]),
                        structured.is_adjacent(pi[u], pi[v]),
                    ),
                ));
            }
        }
    }
    Ok(CheckResult::new(
        name,
        true,
        format!("{n} vertices, adjacency equal entrywise"),
    ))
}

fn check_degree_laws(brute: &ZdGraph, structured: &ZdGraph, p: u64) -> CheckResult {
    let want_hist = BTreeMap::from([
        ((2 * p * p - p - 2) as usize, ((p + 1) * (p - 1)) as usize),
        (
            (2 * p * p - p - 1) as usize,
            (p * (p + 1) * (p - 1)) as usize,
        ),
    ]);
    let want_edges = ((p * p - 1) * (2 * p * p * p + p * p - 2 * p - 2) / 2) as usize;
    for (which, g) in [("brute", brute), ("structured", structured)] {
        let h = degree_histogram(g);
        if h != want_hist || g.num_edges() != want_edges {
            return CheckResult::new(
                "degree_edge_laws",
                false,
                format!(
                    "{which}: histogram {h:?}, {} edges; expected {want_hist:?}, {want_edges}",
                    g.num_edges()
                ),
            );
        }
    }
    CheckResult::new(
        "degree_edge_laws",
        true,
        format!("histogram {want_hist:?}, {want_edges} edges"),
    )
}

fn check_equitable(g: &ZdGraph, p: u32) -> Result<CheckResult> {
    let name = "equitable_partition";
    let cells = diagonal_partition(g)?;
    let want = quotient_matrix(p)?.to_int_matrix();
    Ok(match verify_equitable(g, &cells)? {
        Ok(q) if q == want => CheckResult::new(
            name,
            true,
            format!("quotient {:?}", quotient_matrix(p)?.entries),
        ),
        Ok(q) => CheckResult::new(name, false, format!("quotient {q:?}, expected {want:?}")),
        Err(v) => CheckResult::new(
            name,
            false,
            format!(
                "vertex {} has {} neighbors in cell {}, its cell's first vertex has {}",
                g.label(v.vertex),
                v.found,
                v.target_cell,
                v.expected
            ),
        ),
    })
}

fn check_spectrum(g: &ZdGraph, p: u32, limit: usize) -> Result<CheckResult> {
    let name = "spectrum_reconstruction";
    if g.num_vertices() > limit {
        return Ok(CheckResult::skipped(
            name,
            format!(
                "{} vertices exceed the dense limit {limit}",
                g.num_vertices()
            ),
        ));
    }
    let dense = dense_spectrum(g, DEFAULT_TOL, limit)?;
    let e = energy_report(p, DEFAULT_TOL)?;
    let f = charpoly_factorization(p)?;
    let mut model = e.reduced_spectrum.eigenvalues.clone();
    model.extend(std::iter::repeat_n(0.0, f.zero_multiplicity));
    model.extend(std::iter::repeat_n(-1.0, f.minus_one_multiplicity));
    model.sort_by(|a, b| b.total_cmp(a));
    let worst = dense
        .eigenvalues
        .iter()
        .zip(&model)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    if dense.len() != model.len() || worst >= SPECTRAL_TOL {
        return Ok(CheckResult::new(
            name,
            false,
            format!("largest eigenvalue deviation {worst:e}"),
        ));
    }
    let mut detail = format!("dense and factored spectra agree to {worst:.1e}");
    if g.num_vertices() <= EXACT_FULL_CHARPOLY_LIMIT {
        let exact = charpoly_exact(&g.to_int_matrix())?;
        if exact != f.full_polynomial() {
            return Ok(CheckResult::new(
                name,
                false,
                "exact characteristic polynomial differs from the factored product",
            ));
        }
        detail.push_str("; exact characteristic polynomials equal");
    }
    Ok(CheckResult::new(name, true, detail))
}

fn check_radius(g: &ZdGraph, p: u32) -> Result<CheckResult> {
    let closed = spectral_radius_closed(p)?;
    let power = spectral_radius_power(g, 1e-12, 100_000)?;
    let ok = (closed - power).abs() <= SPECTRAL_TOL * closed;
    Ok(CheckResult::new(
        "spectral_radius",
        ok,
        format!("closed form {closed:.10}, power iteration {power:.10}"),
    ))
}

/// Runs every check for `p`; a failing check records its first counterexample.
pub fn verify_prime(p: u32, opts: &VerifyOptions) -> Result<VerifyReport> {
    let m = Modulus::odd_prime(p)?;
    let brute = build_brute(&m, &opts.build)?;
    let structured = build_structured(p)?;
    let q = p as u64;
    let n_vertices = (q + 1) * (q + 1) * (q - 1);
    let mut checks = vec![CheckResult::new(
        "vertex_count",
        brute.num_vertices() as u64 == n_vertices && structured.num_vertices() as u64 == n_vertices,
        format!(
            "brute {}, structured {}, expected {n_vertices}",
            brute.num_vertices(),
            structured.num_vertices()
        ),
    )];
    checks.push(check_bijection(&brute, &structured, p)?);
    checks.push(check_degree_laws(&brute, &structured, q));
    checks.push(check_equitable(&structured, p)?);
    checks.push(check_spectrum(&structured, p, opts.dense_limit)?);
    checks.push(check_radius(&structured, p)?);
    let pairs_expected = n_vertices * (n_vertices - 1) / 2;
    let types_expected = (q + 1).pow(4);
    checks.push(CheckResult::new(
        "pair_test_counts",
        brute.decision_tests() == pairs_expected && structured.decision_tests() == types_expected,
        format!(
            "brute {} pair tests, structured {} type tests",
            brute.decision_tests(),
            structured.decision_tests()
        ),
    ));
    Ok(VerifyReport {
        p,
        brute_pair_tests: brute.decision_tests(),
        type_tests: structured.decision_tests(),
        checks,
    })
}
