mod common;

use common::*;
use steinhaus::regularity::{
    brute_force_regular, divisibility_remarks_check, lift_interior, load_resume_state,
    mod4_profile, odd_regular_theorem_check, run_scan, search_regular_mod4, verify_conjecture2_at,
    CheckMethod, Checkpoint, DegreeParity, ResumeState, ScanConfig, SearchReport, Verdict,
    DEFAULT_SEARCH_CAP,
};
use steinhaus::symmetry::{enumerate_ms, is_multi_symmetric, DEFAULT_ENUMERATION_CAP};
use steinhaus::{SteinhausMatrix, Vertex};

#[test]
fn congruences_on_every_multi_symmetric_matrix() {
    for n in 4..=40 {
        for m in enumerate_ms(n, DEFAULT_ENUMERATION_CAP).unwrap() {
            let p = mod4_profile(&m).unwrap();
            assert!(p.agrees(), "n={n} {}", m.sequence());
            if n >= 5 {
                assert_eq!(p.covered(), (1..=n).collect::<Vec<_>>(), "n={n}");
                assert!(divisibility_remarks_check(&m).unwrap());
            }
            let d = m.degrees();
            for i in 1..=n {
                assert_eq!(d.get(i), d.get(n - i + 1));
            }
        }
    }
}

/// Every multi-symmetric graph that is regular modulo 4, by exhaustive
/// filtering of all first rows.
fn regular_mod4_ms_brute(n: usize) -> Vec<String> {
    let mut out: Vec<String> = all_sequences(n)
        .filter(|s| s.iter().eq(s.iter().rev()))
        .map(|s| SteinhausMatrix::from_sequence(&seq(&s)))
        .filter(|m| is_multi_symmetric(m) && m.degrees().is_regular_mod(4))
        .map(|m| m.sequence().to_string())
        .collect();
    out.sort();
    out
}

#[test]
fn search_is_complete_for_small_sizes() {
    for n in 5..=20 {
        let r = search_regular_mod4(n, DEFAULT_SEARCH_CAP).unwrap();
        let got: Vec<String> = r.survivors.iter().map(ToString::to_string).collect();
        assert_eq!(got, regular_mod4_ms_brute(n), "n={n}");
        assert!(r.bound_ok);
    }
}

#[test]
fn search_agrees_with_enumeration() {
    for n in 5..=40 {
        let r = search_regular_mod4(n, DEFAULT_SEARCH_CAP).unwrap();
        let mut expected: Vec<String> = enumerate_ms(n, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .filter(|m| m.degrees().is_regular_mod(4))
            .map(|m| m.sequence().to_string())
            .collect();
        expected.sort();
        let got: Vec<String> = r.survivors.iter().map(ToString::to_string).collect();
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn odd_sizes_only_zero_is_regular() {
    for n in (5..=39).step_by(2) {
        assert!(
            odd_regular_theorem_check(n, CheckMethod::Enumeration, DEFAULT_ENUMERATION_CAP)
                .unwrap()
        );
        assert!(odd_regular_theorem_check(n, CheckMethod::Search, DEFAULT_SEARCH_CAP).unwrap());
    }
}

#[test]
fn odd_degree_finds_have_multi_symmetric_interiors() {
    assert_eq!(
        brute_force_regular(2, DegreeParity::Odd, 30).unwrap(),
        vec!["1".parse().unwrap()]
    );
    for n in (4..=20).step_by(2) {
        for s in brute_force_regular(n, DegreeParity::Odd, 30).unwrap() {
            let g = SteinhausMatrix::from_sequence(&s);
            let inner = g.interior().unwrap();
            assert!(is_multi_symmetric(&inner));
            assert!(inner.degrees().is_regular());
            assert_eq!(inner.degrees().get(1), n / 2 - 1);
            for j in 2..n {
                assert_eq!(g.at(1, j), g.at(1, n - j + 1));
            }
        }
    }
}

#[test]
fn conjecture_pipeline_matches_brute_force() {
    for n in (4..=22).step_by(2) {
        let brute = brute_force_regular(n, DegreeParity::Odd, 30).unwrap();
        let verdict = verify_conjecture2_at(n, DEFAULT_SEARCH_CAP).unwrap();
        assert_eq!(brute.is_empty(), verdict == Verdict::Verified, "N={n}");
    }
}

#[test]
fn every_graph_is_a_lift_of_its_interior() {
    for n in 3..=10 {
        for s in all_sequences(n) {
            let g = SteinhausMatrix::from_sequence(&seq(&s));
            let inner = g
                .delete_vertex(Vertex::First)
                .unwrap()
                .delete_vertex(Vertex::Last)
                .unwrap();
            assert_eq!(inner, g.interior().unwrap());
            assert!(lift_interior(&inner).contains(&g));
        }
    }
}

fn config(range: std::ops::RangeInclusive<usize>, checkpoint: &std::path::Path) -> ScanConfig {
    ScanConfig {
        range,
        cap: DEFAULT_SEARCH_CAP,
        jobs: Some(2),
        timing: false,
        checkpoint: Some(checkpoint.to_path_buf()),
    }
}

#[test]
fn scan_resume_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let cp = dir.path().join("scan.checkpoint");

    let mut reference = Vec::new();
    run_scan(&config(5..=40, &cp), ResumeState::default(), &mut reference).unwrap();
    std::fs::remove_file(&cp).unwrap();

    // An interrupted run: the first lines plus half of the next one.
    let text = String::from_utf8(reference.clone()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let mut partial = lines[..12].join("\n");
    partial.push('\n');
    partial.push_str(&lines[12][..lines[12].len() / 2]);
    std::fs::write(&out, &partial).unwrap();
    Checkpoint {
        completed_through: 14,
        pending: (15..=40).collect(),
    }
    .store(&cp)
    .unwrap();

    let state = load_resume_state(&(5..=40), &out, Some(&cp)).unwrap();
    assert_eq!(state.done, (5..=16).collect());
    let mut file = std::fs::OpenOptions::new().append(true).open(&out).unwrap();
    let summary = run_scan(&config(5..=40, &cp), state, &mut file).unwrap();
    drop(file);
    assert_eq!(summary.computed, (17..=40).collect::<Vec<_>>());
    assert_eq!(summary.resumed, (5..=16).collect::<Vec<_>>());
    assert!(summary.is_clean());
    assert_eq!(std::fs::read(&out).unwrap(), reference);
    assert_eq!(
        Checkpoint::load(&cp).unwrap(),
        Some(Checkpoint {
            completed_through: 40,
            pending: vec![]
        })
    );

    // Resuming a finished scan computes nothing.
    let state = load_resume_state(&(5..=40), &out, Some(&cp)).unwrap();
    let mut sink = Vec::new();
    let summary = run_scan(&config(5..=40, &cp), state, &mut sink).unwrap();
    assert!(summary.computed.is_empty());
    assert!(sink.is_empty());
}

#[test]
fn checkpoint_alone_skips_completed_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing.jsonl");
    let cp = dir.path().join("cp.json");
    Checkpoint {
        completed_through: 9,
        pending: (10..=12).collect(),
    }
    .store(&cp)
    .unwrap();
    let state = load_resume_state(&(5..=12), &out, Some(&cp)).unwrap();
    let mut sink = Vec::new();
    let summary = run_scan(&config(5..=12, &cp), state, &mut sink).unwrap();
    assert_eq!(summary.computed, vec![10, 11, 12]);
    let ns: Vec<usize> = String::from_utf8(sink)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<SearchReport>(l).unwrap().n)
        .collect();
    assert_eq!(ns, vec![10, 11, 12]);
}
