//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p zdq --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};

use zdq::graph::{
    build_brute, build_g2, build_reduced, build_structured, g2_labels, two_adic_clique,
    BuildOptions, VertexLabel, ZdGraph, G2_MATRIX,
};
use zdq::invariants::{
    degree_histogram, diagonal_partition, diameter, domination_number, girth, locate_quaternions,
    universal_vertex, verify_clique, verify_equitable, Domination, Girth,
};
use zdq::io::{read_graph, write_graph, GraphFormat, MATRIX_MARKET_HEADER};
use zdq::linalg::IntMatrix;
use zdq::model::{find_iso_params, phi, type_label};
use zdq::ring::{count_vertices, Modulus};
use zdq::spectral::{
    charpoly_exact, dense_spectrum, eig_sym, energy_direct, energy_report, quotient_matrix,
    radius_discriminant, spectral_radius_closed, spectral_radius_power, trace_b_squared,
    trace_of_square, two_adic_energy_bound, IntPoly, DEFAULT_TOL,
};
use zdq::verify::{verify_prime, VerifyOptions};

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn modulus(n: u32) -> Modulus {
    Modulus::new(n).expect("valid modulus")
}

fn brute(n: u32) -> ZdGraph {
    build_brute(&modulus(n), &BuildOptions::allow_large()).expect("brute build")
}

fn dp4(x: f64) -> String {
    format!("{x:.4}")
}

fn ac01() -> Outcome {
    for p in [3u64, 5, 7] {
        let want = p * p * p + p * p - p - 1;
        let b = brute(p as u32).num_vertices() as u64;
        let s = build_structured(p as u32)
            .map_err(|e| e.to_string())?
            .num_vertices() as u64;
        ensure!(
            b == want && s == want,
            "p={p}: brute {b}, structured {s}, expected {want}"
        );
    }
    for t in 1..=3u32 {
        let want = (1u64 << (4 * t - 1)) - 1;
        let n = 1u32 << t;
        let b = brute(n).num_vertices() as u64;
        let c = count_vertices(&modulus(n));
        ensure!(
            b == want && c == want,
            "t={t}: brute {b}, count {c}, expected {want}"
        );
    }
    Ok("32 144 384 / 7 127 2047".into())
}

fn ac02() -> Outcome {
    for p in [3u32, 5, 7] {
        let b = brute(p);
        let s = build_structured(p).map_err(|e| e.to_string())?;
        let params = find_iso_params(p).map_err(|e| e.to_string())?;
        let mut map = Vec::with_capacity(b.num_vertices());
        for label in b.labels() {
            let VertexLabel::Quaternion(q) = label else {
                return Err(format!("p={p}: brute label {label} is not a quaternion"));
            };
            let (class, scalar) = type_label(&phi(q, &params).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let target = s
                .position(&VertexLabel::Typed { class, scalar })
                .ok_or_else(|| format!("p={p}: no structured vertex for {q}"))?;
            map.push(target);
        }
        let distinct: HashSet<usize> = map.iter().copied().collect();
        ensure!(
            distinct.len() == s.num_vertices() && map.len() == s.num_vertices(),
            "p={p}: map is not a bijection"
        );
        for u in 0..b.num_vertices() {
            for v in 0..b.num_vertices() {
                ensure!(
                    b.is_adjacent(u, v) == s.is_adjacent(map[u], map[v]),
                    "p={p}: adjacency differs at ({}, {})",
                    b.label(u),
                    b.label(v)
                );
            }
        }
    }
    Ok("p = 3, 5, 7 entrywise equal".into())
}

fn ac03() -> Outcome {
    let mut edges = Vec::new();
    for p in [3u64, 5, 7, 11] {
        let g = build_structured(p as u32).map_err(|e| e.to_string())?;
        let want = BTreeMap::from([
            ((2 * p * p - p - 2) as usize, ((p + 1) * (p - 1)) as usize),
            (
                (2 * p * p - p - 1) as usize,
                (p * (p + 1) * (p - 1)) as usize,
            ),
        ]);
        let got = degree_histogram(&g);
        ensure!(got == want, "p={p}: histogram {got:?}, expected {want:?}");
        let e = (p * p - 1) * (2 * p * p * p + p * p - 2 * p - 2) / 2;
        ensure!(
            g.num_edges() as u64 == e,
            "p={p}: {} edges, expected {e}",
            g.num_edges()
        );
        edges.push(e);
    }
    for (p, e) in [(3u32, 220usize), (5, 3156), (7, 17256)] {
        ensure!(
            brute(p).num_edges() == e,
            "p={p}: brute edge count differs from {e}"
        );
    }
    Ok(format!("edges {edges:?}"))
}

fn ac04() -> Outcome {
    let g = build_structured(3).map_err(|e| e.to_string())?;
    let dense = dense_spectrum(&g, DEFAULT_TOL, 1000).map_err(|e| e.to_string())?;
    let b = build_reduced(3).map_err(|e| e.to_string())?.b;
    let reduced = eig_sym(&b.to_real(), DEFAULT_TOL).map_err(|e| e.to_string())?;
    let mut factored: Vec<f64> = reduced.eigenvalues.clone();
    factored.extend([0.0; 12]);
    factored.extend([-1.0; 4]);
    factored.sort_by(|x, y| y.total_cmp(x));
    ensure!(dense.eigenvalues.len() == factored.len(), "length mismatch");
    let worst = dense
        .eigenvalues
        .iter()
        .zip(&factored)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    ensure!(worst <= 1e-6, "largest eigenvalue gap {worst:e}");
    let chi_a = charpoly_exact(&g.to_int_matrix()).map_err(|e| e.to_string())?;
    let chi_b = charpoly_exact(&b).map_err(|e| e.to_string())?;
    let product = &(&IntPoly::linear(0).pow(12) * &IntPoly::linear(-1).pow(4)) * &chi_b;
    ensure!(chi_a == product, "exact characteristic polynomials differ");
    Ok(format!("max gap {worst:.1e}, exact identity holds"))
}

fn ac05() -> Outcome {
    // Trace and discriminant of the 2x2 quotient are polynomials in p of degree
    // at most 4, so agreement at more than 4 points is an identity.
    for p in [3u32, 5, 7, 11, 13, 17, 19] {
        let q = quotient_matrix(p).map_err(|e| e.to_string())?;
        let x = p as i128;
        let (t, d) = (q.trace() as i128, q.det() as i128);
        ensure!(t == 2 * x * x - 2 * x - 1, "p={p}: trace {t}");
        let disc = radius_discriminant(p).map_err(|e| e.to_string())?;
        ensure!(
            t * t - 4 * d == disc,
            "p={p}: T^2-4D = {} vs {disc}",
            t * t - 4 * d
        );
        ensure!(
            disc == 4 * x.pow(4) - 4 * x * x - 8 * x + 9,
            "p={p}: discriminant {disc}"
        );
    }
    let mut shown = Vec::new();
    for (p, want) in [(3u32, "13.7614"), (5, "43.8362"), (7, "89.8761")] {
        let g = build_structured(p).map_err(|e| e.to_string())?;
        let q = quotient_matrix(p).map_err(|e| e.to_string())?;
        let cells = diagonal_partition(&g).map_err(|e| e.to_string())?;
        let measured = verify_equitable(&g, &cells)
            .map_err(|e| e.to_string())?
            .map_err(|v| format!("p={p}: partition not equitable: {v:?}"))?;
        ensure!(
            measured == q.to_int_matrix(),
            "p={p}: graph quotient differs"
        );
        let closed = spectral_radius_closed(p).map_err(|e| e.to_string())?;
        ensure!(
            (closed - q.larger_root()).abs() <= 1e-12 * closed,
            "p={p}: closed vs root"
        );
        let power = spectral_radius_power(&g, 1e-13, 200_000).map_err(|e| e.to_string())?;
        ensure!(
            (power - closed).abs() <= 1e-6 * closed,
            "p={p}: power {power} vs {closed}"
        );
        ensure!(dp4(closed) == want, "p={p}: {} vs {want}", dp4(closed));
        shown.push(dp4(closed));
    }
    Ok(shown.join(" "))
}

fn ac06() -> Outcome {
    let b = brute(2);
    let labels = g2_labels();
    let idx = locate_quaternions(&b, &labels).map_err(|e| e.to_string())?;
    for i in 0..7 {
        for j in 0..7 {
            ensure!(
                b.is_adjacent(idx[i], idx[j]) == (G2_MATRIX[i][j] == 1),
                "entry ({i},{j}) differs"
            );
        }
    }
    ensure!(
        b.num_vertices() == 7 && b.num_edges() == 9,
        "G_2 has {} vertices",
        b.num_vertices()
    );
    let exact = build_g2();
    for i in 0..7 {
        for j in 0..7 {
            ensure!(
                exact.is_adjacent(i, j) == b.is_adjacent(idx[i], idx[j]),
                "exact G_2 differs"
            );
        }
    }
    let s = dense_spectrum(&b, 1e-14, 100).map_err(|e| e.to_string())?;
    let want = [3.0, 1.0, 1.0, -1.0, -1.0, -1.0, -2.0];
    for (x, y) in s.eigenvalues.iter().zip(want) {
        ensure!((x - y).abs() <= 1e-9, "spectrum {:?}", s.eigenvalues);
    }
    ensure!((s.energy() - 10.0).abs() <= 1e-9, "energy {}", s.energy());
    let u = universal_vertex(&b).ok_or("no universal vertex")?;
    let name = b.label(u).to_string();
    ensure!(name == "1+i+j+k", "universal vertex {name}");
    let d = diameter(&b).map_err(|e| e.to_string())?;
    ensure!(d == 2, "diameter {d}");
    ensure!(girth(&b).girth == Girth::Finite(3), "girth");
    Ok("spectrum {3,1,1,-1,-1,-1,-2}, energy 10, universal 1+i+j+k".into())
}

fn ac07() -> Outcome {
    let mut sizes = Vec::new();
    for t in [2u32, 3, 4] {
        let w = two_adic_clique(t).map_err(|e| e.to_string())?;
        w.verify_algebraic()
            .map_err(|(x, y)| format!("t={t}: {x} * {y} is nonzero"))?;
        sizes.push(w.size());
    }
    ensure!(sizes == [15, 15, 255], "witness sizes {sizes:?}");
    for t in [2u32, 3] {
        let g = brute(1 << t);
        let w = two_adic_clique(t).map_err(|e| e.to_string())?;
        let idx = locate_quaternions(&g, &w.vertex_set).map_err(|e| e.to_string())?;
        let check = verify_clique(&g, &idx).map_err(|e| e.to_string())?;
        ensure!(
            check.is_clique,
            "t={t}: witness is not a clique in the graph"
        );
    }
    let rho = spectral_radius_power(&brute(4), 1e-13, 200_000).map_err(|e| e.to_string())?;
    ensure!(rho >= 14.0, "rho(A_4) = {rho} < 14");
    ensure!(dp4(rho) == "22.8577", "rho(A_4) = {}", dp4(rho));
    Ok(format!("sizes {sizes:?}, rho(A_4) = {}", dp4(rho)))
}

fn ac08() -> Outcome {
    let rows = [
        (3u32, 4u64, "20.5227", "35.6829", "72.7095"),
        (5, 18, "66.6724", "161.5800", "364.4303"),
        (7, 40, "136.7523", "423.5501", "1016.3064"),
    ];
    for (p, forced, lq, lm, total) in rows {
        let r = energy_report(p, DEFAULT_TOL).map_err(|e| e.to_string())?;
        ensure!(r.forced_part == forced, "p={p}: forced {}", r.forced_part);
        ensure!(
            dp4(r.bound_quotient) == lq,
            "p={p}: L^Q {}",
            dp4(r.bound_quotient)
        );
        ensure!(
            dp4(r.bound_moment) == lm,
            "p={p}: L^M {}",
            dp4(r.bound_moment)
        );
        ensure!(
            dp4(r.total_energy) == total,
            "p={p}: total {}",
            dp4(r.total_energy)
        );
        ensure!(r.hyperenergetic, "p={p}: not hyperenergetic");
        if p == 3 {
            ensure!(
                r.complete_graph_energy == 62,
                "K_32 energy {}",
                r.complete_graph_energy
            );
        }
    }
    let e4 = energy_direct(&brute(4), DEFAULT_TOL).map_err(|e| e.to_string())?;
    ensure!(dp4(e4) == "102.8092", "E(G_4) = {}", dp4(e4));
    let bounds = [2u32, 4].map(|t| two_adic_energy_bound(t).unwrap());
    ensure!(bounds == [28.0, 508.0], "two-adic bounds {bounds:?}");
    Ok(format!("E(G_4) = {}, bounds 28 508", dp4(e4)))
}

fn ac09() -> Outcome {
    let mut at3 = 0;
    for p in [3u32, 5, 7, 11] {
        let closed = trace_b_squared(p).map_err(|e| e.to_string())?;
        let b: IntMatrix = build_reduced(p).map_err(|e| e.to_string())?.b;
        let direct = trace_of_square(&b);
        let direct_product = (&b * &b).trace() as i128;
        let q = p as i128;
        let edges = build_structured(p).map_err(|e| e.to_string())?.num_edges() as i128;
        let from_edges = 2 * edges - (q + 1) * (q - 2);
        ensure!(
            closed == direct && direct == direct_product && direct == from_edges,
            "p={p}: {closed} {direct} {direct_product} {from_edges}"
        );
        if p == 3 {
            at3 = closed;
        }
    }
    ensure!(at3 == 436, "p=3 value {at3}");
    Ok("three ways agree, p=3 gives 436".into())
}

fn ac10() -> Outcome {
    let mut diams = Vec::new();
    for n in 2..=12u32 {
        let g = brute(n);
        let d = diameter(&g).map_err(|e| format!("n={n}: {e}"))?;
        let want = if modulus(n).is_prime_power() { 2 } else { 3 };
        ensure!(d == want, "n={n}: diameter {d}, expected {want}");
        ensure!(
            girth(&g).girth == Girth::Finite(3),
            "n={n}: girth {}",
            girth(&g).girth
        );
        let dom_want = match n {
            2 | 4 => Some(1),
            3 => Some(4),
            _ => None,
        };
        if let Some(k) = dom_want {
            let got = domination_number(&g, 8);
            ensure!(
                got == Some(Domination::Exact(k)),
                "n={n}: domination {got:?}, expected {k}"
            );
        }
        diams.push(d);
    }
    Ok(format!(
        "diameters n=2..12 {diams:?}, girth 3, domination 1/4/1"
    ))
}

fn ac11() -> Outcome {
    let mut out = Vec::new();
    for (p, pairs, types) in [(3u32, 496u64, 256u64), (5, 10296, 1296), (7, 73536, 4096)] {
        let r = verify_prime(p, &VerifyOptions::default()).map_err(|e| e.to_string())?;
        ensure!(
            r.brute_pair_tests == pairs && r.type_tests == types,
            "p={p}: {} pair tests, {} type tests",
            r.brute_pair_tests,
            r.type_tests
        );
        if let Some(f) = r.first_failure() {
            return Err(format!("p={p}: check {} failed: {}", f.name, f.detail));
        }
        out.push(format!("{pairs}/{types}"));
    }
    Ok(out.join(" "))
}

fn ac12() -> Outcome {
    for n in [2u32, 3, 4] {
        let g = brute(n);
        for f in [
            GraphFormat::Edgelist,
            GraphFormat::MatrixMarket,
            GraphFormat::Graphml,
        ] {
            let mut buf = Vec::new();
            write_graph(&g, f, &mut buf).map_err(|e| e.to_string())?;
            let back = read_graph(f, buf.as_slice()).map_err(|e| format!("n={n} {f:?}: {e}"))?;
            ensure!(
                back.num_vertices() == g.num_vertices() && back.same_adjacency(&g),
                "n={n} {f:?}: round trip changed the graph"
            );
            if f == GraphFormat::Graphml {
                let names: Vec<String> = back.labels().iter().map(|l| l.to_string()).collect();
                let orig: Vec<String> = g.labels().iter().map(|l| l.to_string()).collect();
                ensure!(names == orig, "n={n}: GraphML labels changed");
            }
            if f == GraphFormat::MatrixMarket {
                let text = String::from_utf8(buf).map_err(|e| e.to_string())?;
                let mut lines = text
                    .lines()
                    .filter(|l| !l.starts_with('%') || l.starts_with("%%"));
                ensure!(lines.next() == Some(MATRIX_MARKET_HEADER), "n={n}: banner");
                let size = lines.next().unwrap_or_default();
                let want = format!("{0} {0} {1}", g.num_vertices(), g.num_edges());
                ensure!(size == want, "n={n}: size line {size:?}, expected {want:?}");
            }
        }
    }
    Ok("edgelist, matrixmarket, graphml on n = 2, 3, 4".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("AC01", "vertex counts", ac01),
        ("AC02", "structured equals brute", ac02),
        ("AC03", "degrees and edges", ac03),
        ("AC04", "spectrum factorization", ac04),
        ("AC05", "spectral radius", ac05),
        ("AC06", "G_2 exactness", ac06),
        ("AC07", "two-adic cliques", ac07),
        ("AC08", "energy", ac08),
        ("AC09", "trace of B^2", ac09),
        ("AC10", "invariant laws", ac10),
        ("AC11", "complexity accounting", ac11),
        ("AC12", "format round trips", ac12),
    ];
    let mut failed = Vec::new();
    for (id, name, check) in criteria {
        let start = std::time::Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} ({ms} ms)"),
            Err(why) => {
                println!("{id} FAIL {name}: {why} ({ms} ms)");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
