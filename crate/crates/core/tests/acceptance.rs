//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use alon_tarsi::algebra::{graph_coefficient, graph_polynomial, IndexFunction, SparsePolynomial};
use alon_tarsi::atn::alon_tarsi_number;
use alon_tarsi::coloring::{choice_number, find_list_coloring, is_proper, random_lists};
use alon_tarsi::eulerian::{eulerian_counts, signed_diff, Orientation};
use alon_tarsi::graph::{generate, PlaneGraph};
use alon_tarsi::planar_cert::{
    case2_audit, certify_at5, chord_product, nice_orientation_observed, verify_certificate, Case1Search,
    Case2Audit, Certificate, Step,
};
use alon_tarsi::Graph;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn forward_of(d: &Orientation) -> Vec<bool> {
    let g = d.graph();
    (0..g.edge_count()).map(|i| d.arc(i) == g.edges()[i]).collect()
}

fn identity_holds(g: &Graph, forward: Vec<bool>) -> bool {
    let d = Orientation::new(g.clone(), forward.clone());
    let eta: Vec<u32> = common::out_degrees(g, &forward);
    let brute = common::brute_coefficient(g, &eta);
    let coefficient = graph_coefficient(g, &IndexFunction::new(eta)).unwrap();
    let signed = signed_diff(&d).unwrap();
    coefficient == BigInt::from(signed) && signed == brute
}

fn identity() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=5 {
        for g in generate::connected_graphs(n).into_iter().filter(|g| g.edge_count() <= 7) {
            let m = g.edge_count();
            for mask in 0u64..1 << m {
                if !identity_holds(&g, (0..m).map(|i| mask >> i & 1 == 1).collect()) {
                    return outcome(false, format!("{:?} mask {mask:#b}", g.edges()));
                }
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(n - 1..=(n * (n - 1) / 2).min(12));
        let g = common::random_connected(&mut rng, n, m);
        let forward = common::random_forward(&mut rng, m);
        if !identity_holds(&g, forward) {
            return outcome(false, format!("random {:?}", g.edges()));
        }
    }
    outcome(true, format!("{exhaustive} exhaustive orientations and 200 random pairs agree"))
}

fn certify_corpus(corpus: &[(String, PlaneGraph)]) -> (Outcome, Vec<Certificate>) {
    let mut certs = Vec::new();
    let mut slowest = Duration::ZERO;
    for (name, pg) in corpus {
        let start = Instant::now();
        let cert = match certify_at5(pg) {
            Ok(c) => c,
            Err(e) => return (outcome(false, format!("{name}: {e}")), certs),
        };
        let report = verify_certificate(&cert);
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        if !report.passed() || cert.max_out_degree > 4 || cert.diff == 0 || elapsed > Duration::from_secs(60) {
            return (outcome(false, format!("{name}: {:?}", report.failures().collect::<Vec<_>>())), certs);
        }
        // Independent recount for instances small enough to enumerate.
        if pg.graph().edge_count() <= 18 {
            let names: Vec<&str> = cert.vertices.iter().map(String::as_str).collect();
            let edges: Vec<(&str, &str)> = cert.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
            let arcs: Vec<(&str, &str)> = cert.arcs.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
            let d = Orientation::from_labeled_arcs(Graph::from_labeled(&names, &edges).unwrap(), &arcs).unwrap();
            let (e, o) = common::brute_counts(d.graph(), &forward_of(&d));
            if e as i64 - o as i64 != cert.diff {
                return (outcome(false, format!("{name}: brute difference {}", e as i64 - o as i64)), certs);
            }
        }
        certs.push(cert);
    }
    let ok = corpus.len() >= 50;
    (
        outcome(ok, format!("{} instances certified and re-verified, slowest {slowest:?}", corpus.len())),
        certs,
    )
}

fn known_values() -> Outcome {
    for n in 3..=8 {
        let g = generate::cycle(n);
        let at = alon_tarsi_number(&g, 6).unwrap().at_number;
        let expected = if n % 2 == 0 { 2 } else { 3 };
        if at != expected || common::brute_at(&g) != expected {
            return outcome(false, format!("C{n}: {at}"));
        }
    }
    for n in 1..=5 {
        let g = generate::complete(n);
        let at = alon_tarsi_number(&g, 6).unwrap().at_number;
        if at != n || common::brute_at(&g) != n {
            return outcome(false, format!("K{n}: {at}"));
        }
    }
    outcome(true, "C3..C8 and K1..K5 match brute force")
}

fn choice_below_at() -> Outcome {
    let mut graphs = 0;
    let mut strict = 0;
    for n in 1..=5 {
        for g in generate::connected_graphs(n) {
            let ch = choice_number(&g, 6).unwrap().choice_number;
            let at = alon_tarsi_number(&g, 6).unwrap().at_number;
            if ch > at {
                return outcome(false, format!("{:?}: ch {ch} > AT {at}", g.edges()));
            }
            strict += usize::from(ch < at);
            graphs += 1;
        }
    }
    outcome(true, format!("{graphs} graphs, {strict} with ch < AT"))
}

fn list_coloring(corpus: &[(String, PlaneGraph)], certs: &[Certificate]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut total = 0;
    for ((name, pg), cert) in corpus.iter().zip(certs) {
        let g = pg.graph();
        let sizes: Vec<usize> = cert.out_degrees().iter().map(|d| d + 1).collect();
        let widest = *sizes.iter().max().unwrap() as u32;
        for trial in 0..1000 {
            let palette = widest + trial % 3;
            let lists = random_lists(&sizes, palette, &mut rng);
            match find_list_coloring(g, &lists) {
                Ok(c) if is_proper(g, &lists, &c) => total += 1,
                _ => return outcome(false, format!("{name} trial {trial}: {:?}", lists.lists())),
            }
        }
    }
    outcome(true, format!("{total} list assignments colored"))
}

fn chord_law(corpus: &[(String, PlaneGraph)]) -> Outcome {
    let mut splits = 0;
    let mut bad = Vec::new();
    for (name, pg) in corpus {
        let (tri, _) = pg.triangulate_interior().unwrap();
        nice_orientation_observed(&tri, Case1Search::default(), &mut |ev| {
            if let Some((a, b)) = ev.parts {
                let p = chord_product(ev.orientation, a, b).unwrap();
                if !p.holds() {
                    bad.push(name.clone());
                }
                splits += 1;
            }
        })
        .unwrap();
    }
    outcome(bad.is_empty() && splits > 0, format!("{splits} chord splits, {} violations", bad.len()))
}

fn case2(corpus: &[(String, PlaneGraph)]) -> Outcome {
    let mut audited = 0;
    let mut cycles = 0;
    for (name, pg) in corpus {
        let (tri, _) = pg.triangulate_interior().unwrap();
        let mut nodes = Vec::new();
        nice_orientation_observed(&tri, Case1Search::default(), &mut |ev| {
            if matches!(ev.step, Some(Step::Case2 { .. })) {
                nodes.push(ev.graph.clone());
            }
        })
        .unwrap();
        for node in nodes {
            match case2_audit(&node) {
                Ok(Case2Audit::Passed(r)) => {
                    audited += 1;
                    cycles += r.cycles.iter().filter(|c| c.cycle.is_some()).count();
                }
                Ok(Case2Audit::NotApplicable { reason }) => {
                    return outcome(false, format!("{name}: Case 2 node not audited ({reason})"))
                }
                Err(e) => return outcome(false, format!("{name}: {e}")),
            }
        }
    }
    outcome(audited > 0, format!("{audited} Case 2 steps audited, {cycles} cycles C_i checked"))
}

const VARS: usize = 5;

fn random_poly(rng: &mut ChaCha8Rng, vars: usize) -> SparsePolynomial {
    let terms = rng.gen_range(0..8);
    SparsePolynomial::from_terms((0..terms).map(|_| {
        let mut e = vec![0u32; VARS];
        for x in e.iter_mut().take(vars) {
            *x = rng.gen_range(0..3);
        }
        (IndexFunction::new(e), BigInt::from(rng.gen_range(-5i64..=5)))
    }))
}

fn random_index(rng: &mut ChaCha8Rng) -> IndexFunction {
    IndexFunction::new((0..VARS).map(|_| rng.gen_range(0..5)).collect())
}

fn algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut violations = Vec::new();
    let zero = BigInt::from(0);
    for t in 0..10_000 {
        let (p, q) = (random_poly(&mut rng, VARS), random_poly(&mut rng, VARS));
        let eta = random_index(&mut rng);
        // 1: linearity.
        let (a, b) = (BigInt::from(rng.gen_range(-4..=4)), BigInt::from(rng.gen_range(-4..=4)));
        let combo = &p.scale(&a) + &q.scale(&b);
        if combo.coefficient(&eta) != &a * p.coefficient(&eta) + &b * q.coefficient(&eta) {
            violations.push((t, 1));
        }
        // 2 and 3: multiplying by a monomial shifts or kills the coefficient.
        let shift = random_index(&mut rng);
        let expected = eta.checked_sub(&shift).map_or(zero.clone(), |rest| p.coefficient(&rest));
        if p.mul_monomial(&shift).coefficient(&eta) != expected {
            violations.push((t, if shift.dominated_by(&eta) { 2 } else { 3 }));
        }
        // 4: a product with P1 in the first two variables only.
        let p1 = random_poly(&mut rng, 2);
        let dummies: Vec<usize> = (0..VARS).filter(|&v| p1.is_dummy(v)).collect();
        if q.terms().all(|(e, _)| dummies.iter().any(|&x| e.get(x) != eta.get(x)))
            && (&p1 * &q).coefficient(&eta) != zero
        {
            violations.push((t, 4));
        }
        // 5: graph polynomials are homogeneous of degree |E|.
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(n - 1..=n * (n - 1) / 2);
        let g = common::random_connected(&mut rng, n, m);
        let eta_g = IndexFunction::new((0..n).map(|_| rng.gen_range(0..=m as u32)).collect());
        if eta_g.total() != m as u64 && graph_coefficient(&g, &eta_g).unwrap() != zero {
            violations.push((t, 5));
        }
        if t % 50 == 0 && !graph_polynomial(&g).unwrap().is_homogeneous_of_degree(m as u64) {
            violations.push((t, 5));
        }
    }
    outcome(violations.is_empty(), format!("10000 triples, violations {violations:?}"))
}

fn tamper(certs: &[Certificate]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut rejected = 0;
    let mut consistent_accepted = 0;
    let mut consistent_rejected = 0;
    for _ in 0..500 {
        let cert = &certs[rng.gen_range(0..certs.len())];
        let i = rng.gen_range(0..cert.arcs.len());
        let mut bad = cert.clone();
        bad.arcs[i].swap(0, 1);
        if !verify_certificate(&bad).passed() {
            rejected += 1;
        }
        // Same flip with every stated field recomputed: accepted only if the
        // new orientation is itself a valid witness.
        let names: Vec<&str> = bad.vertices.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str)> = bad.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let arcs: Vec<(&str, &str)> = bad.arcs.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let d = Orientation::from_labeled_arcs(Graph::from_labeled(&names, &edges).unwrap(), &arcs).unwrap();
        let counts = eulerian_counts(&d).unwrap();
        for (v, label) in bad.vertices.iter().enumerate() {
            bad.out_degree.insert(label.clone(), d.out_degree(v));
        }
        bad.max_out_degree = d.max_out_degree();
        bad.even_count = counts.even;
        bad.odd_count = counts.odd;
        bad.diff = counts.diff();
        bad.signed_diff = signed_diff(&d).unwrap();
        if verify_certificate(&bad).passed() {
            let witness = IndexFunction::new(d.out_degrees().iter().map(|&x| x as u32).collect());
            let genuine = d.max_out_degree() <= 4 && graph_coefficient(d.graph(), &witness).unwrap() != BigInt::from(0);
            if !genuine {
                return outcome(false, "a recomputed tamper was accepted without being a witness");
            }
            consistent_accepted += 1;
        } else {
            consistent_rejected += 1;
        }
    }
    println!(
        "      recomputed-field variant: {consistent_rejected} rejected, {consistent_accepted} accepted (each a genuine witness)"
    );
    outcome(rejected >= 499, format!("{rejected}/500 single-arc tampers rejected"))
}

/// The named corpus plus every triangulation on 5 to 8 vertices with each of
/// its faces as the outer face.
fn extended_corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = generate::corpus();
    for n in 5..=8 {
        for (i, t) in generate::triangulations(n).iter().enumerate() {
            for outer in 1..t.len() {
                out.push((format!("tri{n}-{i}-face{outer}"), generate::triangulation_plane(n, t, outer)));
            }
        }
    }
    out
}

fn report(id: usize, name: &str, start: Instant, o: Outcome, failed: &mut bool) {
    let tag = if o.passed { "PASS" } else { "FAIL" };
    println!("{tag} [{id}] {name}: {} ({:.2?})", o.detail, start.elapsed());
    *failed |= !o.passed;
}

fn main() {
    let mut failed = false;
    let corpus = extended_corpus();

    let t = Instant::now();
    report(1, "identity", t, identity(), &mut failed);
    let t = Instant::now();
    let (o, certs) = certify_corpus(&corpus);
    report(2, "AT <= 5 on the corpus", t, o, &mut failed);
    let t = Instant::now();
    report(3, "known AT values", t, known_values(), &mut failed);
    let t = Instant::now();
    report(4, "ch <= AT", t, choice_below_at(), &mut failed);
    let t = Instant::now();
    let o = if certs.len() == corpus.len() {
        list_coloring(&corpus, &certs)
    } else {
        outcome(false, "corpus certification failed")
    };
    report(5, "list coloring from certificates", t, o, &mut failed);
    let t = Instant::now();
    report(6, "chord product law", t, chord_law(&corpus), &mut failed);
    let t = Instant::now();
    report(7, "Case 2 audit", t, case2(&corpus), &mut failed);
    let t = Instant::now();
    report(8, "polynomial algebra", t, algebra(), &mut failed);
    let t = Instant::now();
    let o = if certs.is_empty() { outcome(false, "no certificates") } else { tamper(&certs) };
    report(9, "certificate tamper detection", t, o, &mut failed);

    if failed {
        std::process::exit(1);
    }
}
