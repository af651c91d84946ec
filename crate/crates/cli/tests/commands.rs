use serde_json::json;
use shv_cli::cache::Cache;
use shv_cli::commands::{char_checks, det_checks, diagram_checks, expected_pattern, relation_checks};
use shv_cli::config::{CommandName, Mode, RunConfig};
use shv_cli::fault::CorruptedBrackets;
use shv_cli::report::{Check, Report, Status};
use shv_core::algebra::{Half, StandardBrackets};
use shv_core::scalars::Rational;
use shv_core::verma::NodeKind;

fn q(n: i64, d: i64) -> Rational {
    Rational::frac(n, d)
}

/// Coefficients of `∏ (1 + q^{k-1/2})² / (1 - q^k)²` in steps of `q^{1/2}`,
/// by plain series multiplication.
fn verma_series(len: usize) -> Vec<i64> {
    let mut s = vec![0i64; len];
    s[0] = 1;
    let mul = |s: &mut Vec<i64>, step: usize, sign: i64| {
        for t in (step..len).rev() {
            s[t] += sign * s[t - step];
        }
    };
    let divide = |s: &mut Vec<i64>, step: usize| {
        for t in step..len {
            s[t] += s[t - step];
        }
    };
    for k in 1..=len {
        if 2 * k - 1 < len {
            mul(&mut s, 2 * k - 1, 1);
            mul(&mut s, 2 * k - 1, 1);
        }
        if 2 * k < len {
            divide(&mut s, 2 * k);
            divide(&mut s, 2 * k);
        }
    }
    s
}

fn simple_series(p: i64, len: usize) -> Vec<i64> {
    let shift = if p % 2 != 0 { p.unsigned_abs() } else { 2 * p.unsigned_abs() } as usize;
    let v = verma_series(len);
    (0..len).map(|t| v[t] - if t >= shift { v[t - shift] } else { 0 }).collect()
}

#[test]
fn series_oracle_sanity() {
    assert_eq!(verma_series(4), vec![1, 2, 3, 6]);
    assert_eq!(simple_series(1, 4), vec![1, 1, 1, 3]);
}

#[test]
fn simple_characters_against_series_oracle() {
    let (cl, cla) = (q(11, 2), q(2, 3));
    for p in [1i64, -1, 2, -2, 3] {
        let c = char_checks(&Cache::disabled(), &cl, &cla, p, &q(1, 3), Half(6), Mode::Specialized);
        assert_eq!(c.status, Status::Pass, "{}", c.details);
        let dims: Vec<String> = simple_series(p, 7).iter().map(|x| x.to_string()).collect();
        assert!(c.details.contains(&format!("simple dims ({})", dims.join(", "))), "p = {p}: {}", c.details);
    }
}

#[test]
fn symbolic_and_specialized_characters_agree_for_generic_r() {
    let (cl, cla) = (q(11, 2), q(2, 3));
    for p in [1i64, 2] {
        let a = char_checks(&Cache::disabled(), &cl, &cla, p, &q(1, 3), Half(4), Mode::Specialized);
        let b = char_checks(&Cache::disabled(), &cl, &cla, p, &q(1, 3), Half(4), Mode::Symbolic);
        assert_eq!(a.status, Status::Pass);
        assert_eq!(b.status, Status::Pass);
        let dims = |s: &str| s.lines().next().unwrap().split(": ").nth(1).unwrap().to_string();
        assert_eq!(dims(&a.details), dims(&b.details));
    }
}

#[test]
fn expected_patterns_match_the_drawn_figures() {
    let shape = |p: Rational, d: i32| {
        let pat = expected_pattern(&p, Half(d));
        (pat.nodes.iter().map(|(l, d, k)| (l.clone(), d.to_string(), *k)).collect::<Vec<_>>(), pat.edges)
    };
    let s = NodeKind::Singular;
    let hw = ("v".to_string(), "0".to_string(), NodeKind::HighestWeight);

    let (nodes, edges) = shape(q(-2, 1), 8);
    assert_eq!(nodes, vec![hw.clone(), ("u^(1)".into(), "2".into(), s), ("u^(2)".into(), "4".into(), s)]);
    assert_eq!(edges, vec![(Half(0), Half(4)), (Half(4), Half(8))]);

    let (nodes, _) = shape(q(-1, 1), 4);
    let labels: Vec<&str> = nodes.iter().map(|n| n.0.as_str()).collect();
    assert_eq!(labels, ["v", "u^(1/2)", "u^(1)", "u^(3/2)", "u^(2)"]);

    let (nodes, edges) = shape(q(1, 1), 4);
    let labels: Vec<&str> = nodes.iter().map(|n| n.0.as_str()).collect();
    assert_eq!(labels, ["v", "u^(0)", "w^(1)", "u^(1)", "w^(2)"]);
    let mut want = vec![
        (Half(0), Half(1)),
        (Half(0), Half(2)),
        (Half(1), Half(3)),
        (Half(2), Half(1)),
        (Half(2), Half(4)),
        (Half(4), Half(3)),
    ];
    want.sort();
    assert_eq!(edges, want);

    for generic in [q(1, 2), q(0, 1), q(-7, 3)] {
        assert_eq!(shape(generic, 8).0, vec![hw.clone()]);
    }
}

#[test]
fn computed_diagrams_match_expected_patterns() {
    let (cl, cla) = (q(11, 2), q(2, 3));
    for (p, d) in [(q(2, 1), 8), (q(-3, 1), 6), (q(3, 1), 6), (q(1, 2), 4)] {
        let c = diagram_checks(&cl, &cla, &p, &q(1, 3), Half(d));
        assert_eq!(c.status, Status::Pass, "{}", c.details);
    }
}

#[test]
fn determinant_reports_cross_reference_singular_vectors() {
    let checks = det_checks(&Cache::disabled(), &q(11, 2), &q(2, 3), &q(1, 3), Half(4));
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c.status == Status::Pass));
    assert!(checks[0].details.contains("p = 1: found a singular vector at degree 1/2"));
    assert!(checks[3].details.contains("p = -2: found a singular vector at degree 2"));
    assert!(checks[1].details.contains("no new roots"));
}

#[test]
fn corrupted_table_fails_only_the_corrupted_way() {
    assert!(relation_checks(4, &StandardBrackets).iter().all(Check::passed));
    let bad = relation_checks(4, &CorruptedBrackets);
    assert_eq!(bad[0].status, Status::Pass);
    assert_eq!(bad[1].status, Status::Fail);
}

#[test]
fn cache_round_trip_and_keys() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(Some(dir.path())).unwrap();
    let a = Cache::key("op", &json!({"x": 1}));
    assert_eq!(a, Cache::key("op", &json!({"x": 1})));
    assert_ne!(a, Cache::key("op", &json!({"x": 2})));
    assert_ne!(a, Cache::key("other", &json!({"x": 1})));
    assert_eq!(a.len(), 64);

    let mut calls = 0;
    let first: Vec<u32> = cache.get_or_compute("op", json!({"x": 1}), || {
        calls += 1;
        vec![1, 2, 3]
    });
    let second: Vec<u32> = cache.get_or_compute("op", json!({"x": 1}), || {
        calls += 1;
        vec![]
    });
    assert_eq!(first, second);
    assert_eq!(calls, 1);
}

#[test]
fn defaults_and_exit_codes() {
    let cfg = RunConfig::defaults(CommandName::Char);
    assert_eq!(cfg.p, q(1, 1));
    assert_eq!(cfg.r, q(1, 3));
    assert_eq!(cfg.max_degree, Half(8));
    let report = |statuses: &[Status]| Report {
        command: "char".into(),
        params: cfg.params(),
        checks: statuses
            .iter()
            .map(|&s| Check { name: "x".into(), paper_ref: "y".into(), status: s, details: String::new() })
            .collect(),
        elapsed_ms: 0,
    };
    assert_eq!(report(&[Status::Pass, Status::Skip, Status::Warn]).exit_code(), 0);
    assert_eq!(report(&[Status::Pass, Status::Fail]).exit_code(), 1);
    assert!(Check::new("x", "y", false, "").non_fatal().passed());
}
