//! Acceptance suite. Each test covers one exit criterion, prints a
//! PASS/FAIL line (visible with `--nocapture`), and asserts it. The
//! connected-graph streams under `tests/data/` are ingested as graph6;
//! `datagen.rs` guards their integrity.

mod common;

use std::io::Cursor;
use std::path::PathBuf;

use deltaconv::alpha::independence_number;
use deltaconv::blocks::is_two_connected;
use deltaconv::chordal::is_chordal;
use deltaconv::closed_form::{check_pair_hull_property, closed_form_block_rank, closed_form_chordal};
use deltaconv::generators::{generate, GeneratorSpec};
use deltaconv::graph::{Graph, VertexSet};
use deltaconv::graph6::{encode_graph6, parse_graph6};
use deltaconv::hull::{delta_hull, is_convex};
use deltaconv::independence::{
    is_caratheodory_independent, is_convexly_independent, is_helly_independent,
    is_radon_independent,
};
use deltaconv::numbers::{caratheodory_number, helly_number, radon_number, rank};
use deltaconv::scan::{
    emit_report, scan_stream, CheckOutcome, OutputFormat, ReportPayload, ScanOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(criterion: &str, ok: bool, detail: &str) {
    println!(
        "[{}] {criterion}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "{criterion}: {detail}");
}

fn stream(name: &str) -> Vec<Graph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read fixture {}: {e}", path.display()));
    text.lines().map(|l| parse_graph6(l).expect("fixture line")).collect()
}

fn connected_up_to_8() -> Vec<Graph> {
    let mut graphs = stream("connected_le7.g6");
    graphs.extend(stream("connected_8.g6"));
    graphs
}

// Known red: the chordal closed form disagrees with the exhaustive
// search (and with the definition-direct oracle) on exactly two of the
// 1968 connected chordal graphs on <= 8 vertices, G?K}EK and G?K}Ec --
// two diamonds joined by a bridge. The criterion demands exact agreement
// on every graph, so it fails honestly on those two; tests/findings.rs
// pins the counterexamples and the oracle confirmation.
#[test]
fn criterion_1_closed_forms_match_brute_force() {
    let mut chordal_checked = 0usize;
    let mut block_checked = 0usize;
    let mut mismatches = Vec::new();
    for g in connected_up_to_8() {
        if !is_chordal(&g) {
            continue;
        }
        let cf = closed_form_chordal(&g).unwrap();
        assert!(cf.applicable);
        let h = helly_number(&g).unwrap().value;
        let r = radon_number(&g).unwrap().value;
        if cf.h_closed != Some(h) || cf.r_closed != Some(r) {
            mismatches.push(encode_graph6(&g).unwrap());
        }
        chordal_checked += 1;

        let rank_cf = closed_form_block_rank(&g).unwrap();
        if rank_cf.applicable {
            let d = rank(&g).unwrap().value;
            if rank_cf.d_closed != Some(d) {
                mismatches.push(encode_graph6(&g).unwrap());
            }
            block_checked += 1;
        }
    }
    verdict(
        "criterion 1 closed-form validation",
        mismatches.is_empty() && chordal_checked > 0 && block_checked > 0,
        &format!(
            "{chordal_checked} chordal graphs (h, r) and {block_checked} block graphs (d) on <=8 \
             vertices, mismatches: {mismatches:?}"
        ),
    );
}

#[test]
fn criterion_2_witness_families() {
    let mut failures = Vec::new();
    for n in 3..=7 {
        let fan = generate(&GeneratorSpec::triangle_fan(n)).unwrap().graph;
        let (h, r, d) = (
            helly_number(&fan).unwrap().value,
            radon_number(&fan).unwrap().value,
            rank(&fan).unwrap().value,
        );
        if (h, r, d) != (n, n, n) {
            failures.push(format!("fan({n}) gave h={h} r={r} d={d}"));
        }
    }
    for (k, paths) in [
        (1usize, vec![]),
        (2, vec![1]),
        (2, vec![2]),
        (3, vec![1, 1]),
        (3, vec![2, 0]),
    ] {
        let m: usize = paths.iter().sum();
        let expected = m + 2 * k;
        let chain = generate(&GeneratorSpec::triangle_chain(k, paths.clone()))
            .unwrap()
            .graph;
        let (h, r, d) = (
            helly_number(&chain).unwrap().value,
            radon_number(&chain).unwrap().value,
            rank(&chain).unwrap().value,
        );
        if (h, r, d) != (expected, expected, expected) {
            failures.push(format!(
                "chain(k={k}, paths={paths:?}) gave h={h} r={r} d={d}, expected {expected}"
            ));
        }
    }
    verdict(
        "criterion 2 witness families",
        failures.is_empty(),
        &format!("fans 3..=7 and four chain shapes; failures: {failures:?}"),
    );
}

#[test]
fn criterion_3_inequality_audit_on_all_small_graphs() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_le7.g6");
    let text = std::fs::read_to_string(path).unwrap();
    let summary = scan_stream(Cursor::new(text), &ScanOptions::default())
        .expect("no proven inequality may fail");
    let violation_count: usize = summary
        .failure_counts
        .iter()
        .filter(|(name, _)| name != "conjecture_h_eq_r" && name != "closed_form_match")
        .map(|(_, c)| c)
        .sum();
    verdict(
        "criterion 3 inequality audit",
        summary.audited == 996 && summary.skipped.is_empty() && violation_count == 0,
        &format!(
            "{} graphs audited, {} inequality violations",
            summary.audited, violation_count
        ),
    );
}

#[test]
fn criterion_4_observations() {
    let mut failures = Vec::new();
    for n in 3..=7 {
        let g = Graph::complete(n);
        let (h, r, d) = (
            helly_number(&g).unwrap().value,
            radon_number(&g).unwrap().value,
            rank(&g).unwrap().value,
        );
        if (h, r, d) != (2, 2, 2) {
            failures.push(format!("K{n} gave h={h} r={r} d={d}"));
        }
    }
    let mut triangle_free = 0usize;
    for g in stream("connected_le7.g6") {
        if !g.is_triangle_free() {
            continue;
        }
        triangle_free += 1;
        let n = g.vertex_count();
        let h = helly_number(&g).unwrap().value;
        let r = radon_number(&g).unwrap().value;
        let d = rank(&g).unwrap().value;
        let c = caratheodory_number(&g).unwrap().value;
        if (h, r, d) != (n, n, n) || c != 1 {
            failures.push(format!(
                "triangle-free {} gave h={h} r={r} d={d} c={c}",
                encode_graph6(&g).unwrap()
            ));
        }
    }
    verdict(
        "criterion 4 complete and triangle-free observations",
        failures.is_empty() && triangle_free > 0,
        &format!("{triangle_free} triangle-free graphs; failures: {failures:?}"),
    );
}

#[test]
fn criterion_5_pair_hull_property_on_two_connected_chordal_graphs() {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for g in connected_up_to_8() {
        if !is_two_connected(&g) || !is_chordal(&g) {
            continue;
        }
        checked += 1;
        if !check_pair_hull_property(&g).unwrap() {
            failures.push(format!("{} missed the pair-hull property", encode_graph6(&g).unwrap()));
            continue;
        }
        let alpha = independence_number(&g).value;
        let expected = alpha.max(2);
        let h = helly_number(&g).unwrap().value;
        let r = radon_number(&g).unwrap().value;
        let d = rank(&g).unwrap().value;
        if (h, r, d) != (expected, expected, expected) {
            failures.push(format!(
                "{} gave h={h} r={r} d={d}, expected max(2, alpha)={expected}",
                encode_graph6(&g).unwrap()
            ));
        }
    }
    verdict(
        "criterion 5 pair hulls on 2-connected chordal graphs",
        failures.is_empty() && checked > 0,
        &format!("{checked} graphs checked; failures: {failures:?}"),
    );
}

#[test]
fn criterion_6_equality_scan_reports_a_count() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_le7.g6");
    let text = std::fs::read_to_string(path).unwrap();
    let summary = scan_stream(Cursor::new(text), &ScanOptions::default())
        .expect("scan completes");
    let (_, differing) = summary
        .failure_counts
        .iter()
        .find(|(name, _)| name == "conjecture_h_eq_r")
        .expect("check is tallied")
        .clone();
    println!(
        "[INFO] criterion 6: {} of {} graphs have h != r",
        differing, summary.audited
    );
    for report in &summary.failing {
        if report.checks.conjecture_h_eq_r == CheckOutcome::Fail {
            println!(
                "[INFO]   counterexample {}: h={} r={} witnesses h={:?} r={:?}",
                report.graph6, report.h, report.r, report.witnesses.helly, report.witnesses.radon
            );
        }
    }
    // a counterexample would be a finding, not a failure; only completion
    // and accounting are asserted
    verdict(
        "criterion 6 equality scan",
        summary.audited == 996 && summary.skipped.is_empty(),
        &format!("scan completed; h != r on {differing} of {} graphs", summary.audited),
    );
}

#[test]
fn criterion_7_property_suites() {
    // randomized closure axioms, >= 1000 cases
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_9701);
    let mut cases = 0usize;
    while cases < 1000 {
        let n = rng.gen_range(1..=10usize);
        let p = rng.gen_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let full = VertexSet::full(n).bits();
        let s = VertexSet::from_bits(rng.gen::<u64>() & full);
        let t = s.union(VertexSet::from_bits(rng.gen::<u64>() & full));
        let hull_s = delta_hull(&g, s).final_set();
        let hull_t = delta_hull(&g, t).final_set();
        assert!(s.is_subset_of(hull_s), "extensivity");
        assert!(hull_s.is_subset_of(hull_t), "monotonicity");
        assert_eq!(delta_hull(&g, hull_s).final_set(), hull_s, "idempotence");
        let other = delta_hull(&g, VertexSet::from_bits(rng.gen::<u64>() & full)).final_set();
        assert!(is_convex(&g, hull_s.intersection(other)), "intersection-closed");
        cases += 1;
    }

    // witness re-verification on random connected graphs
    let mut verified = 0usize;
    while verified < 100 {
        let n = rng.gen_range(2..=8usize);
        let p = rng.gen_range(0.2..0.8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let h = helly_number(&g).unwrap();
        let r = radon_number(&g).unwrap();
        let d = rank(&g).unwrap();
        let c = caratheodory_number(&g).unwrap();
        assert!(is_helly_independent(&g, h.witness).unwrap().independent);
        assert!(is_radon_independent(&g, r.witness).unwrap().independent);
        assert!(is_convexly_independent(&g, d.witness).unwrap().independent);
        assert!(is_caratheodory_independent(&g, c.witness).unwrap().independent);
        verified += 1;
    }

    // graph6 round-trip over every isomorphism class on <= 7 vertices
    let levels = common::enumerate::all_graph_bits_up_to(7);
    let mut round_tripped = 0usize;
    for (n, level) in levels.iter().enumerate() {
        for &bits in level {
            let g = common::enumerate::decode_bits(n, bits);
            assert_eq!(parse_graph6(&encode_graph6(&g).unwrap()).unwrap(), g);
            round_tripped += 1;
        }
    }

    verdict(
        "criterion 7 property suites",
        cases >= 1000 && verified >= 100 && round_tripped == 1253,
        &format!(
            "{cases} closure-axiom cases, {verified} witness re-verifications, \
             {round_tripped} graph6 round trips"
        ),
    );
}

#[test]
fn criterion_8_scan_output_is_deterministic_across_worker_counts() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/connected_le7.g6");
    let text = std::fs::read_to_string(path).unwrap();
    let mut outputs = Vec::new();
    for jobs in [1usize, 4, 7] {
        let options = ScanOptions {
            jobs,
            keep_all: true,
            ..ScanOptions::default()
        };
        let summary = scan_stream(Cursor::new(text.clone()), &options).unwrap();
        outputs.push(emit_report(ReportPayload::Summary(&summary), OutputFormat::Json));
    }
    let identical = outputs.windows(2).all(|w| w[0] == w[1]);
    verdict(
        "criterion 8 determinism",
        identical && outputs[0].len() > 1000,
        &format!(
            "worker counts 1, 4, 7 produced identical JSON ({} bytes)",
            outputs[0].len()
        ),
    );
}
