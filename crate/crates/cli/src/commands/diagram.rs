use std::collections::BTreeSet;
use std::fmt::Write;

use shv_core::algebra::Half;
use shv_core::scalars::Rational;
use shv_core::verma::{embedding_diagram, NodeKind};

use super::{anchor, verma};
use crate::config::{ConfigError, RunConfig};
use crate::report::Check;

pub(super) fn run(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    Ok(vec![diagram_checks(&cfg.cl, &cfg.cla, &cfg.p, &cfg.r, cfg.max_degree)])
}

/// The node/arrow structure drawn in the figures, truncated at a degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub figure: &'static str,
    pub nodes: Vec<(String, Half, NodeKind)>,
    /// `(from degree, to degree)`; degrees identify nodes in every pattern.
    pub edges: Vec<(Half, Half)>,
}

impl Pattern {
    fn chain(figure: &'static str, step: Half, label: impl Fn(i32) -> String, max_degree: Half) -> Pattern {
        let mut nodes = vec![("v".to_string(), Half::ZERO, NodeKind::HighestWeight)];
        let mut edges = Vec::new();
        let mut k = 1;
        while Half(k * step.0) <= max_degree {
            nodes.push((label(k), Half(k * step.0), NodeKind::Singular));
            edges.push((Half((k - 1) * step.0), Half(k * step.0)));
            k += 1;
        }
        Pattern { figure, nodes, edges }
    }

    fn odd_positive(p: i32, max_degree: Half) -> Pattern {
        let u = |n: i32| Half((2 * n + 1) * p);
        let w = |n: i32| Half(2 * n * p);
        let mut nodes = vec![("v".to_string(), Half::ZERO, NodeKind::HighestWeight)];
        let mut edges = Vec::new();
        for n in 0.. {
            if u(n) > max_degree && w(n) > max_degree {
                break;
            }
            if n >= 1 && w(n) <= max_degree {
                nodes.push((format!("w^({n})"), w(n), NodeKind::Subsingular));
                edges.push((w(n - 1), w(n)));
                edges.push((w(n), u(n - 1)));
            }
            if u(n) <= max_degree {
                nodes.push((format!("u^({n})"), u(n), NodeKind::Singular));
                if n == 0 {
                    edges.push((Half::ZERO, u(0)));
                } else {
                    edges.push((u(n - 1), u(n)));
                }
            }
        }
        edges.sort();
        Pattern { figure: "two interlaced columns u^(n), w^(n) for odd p > 0", nodes, edges }
    }

    fn node_set(&self) -> BTreeSet<(Half, &'static str)> {
        self.nodes.iter().map(|(_, d, k)| (*d, k.name())).collect()
    }
}

/// The expected diagram of `V[p,r]` up to `max_degree`: a single node for
/// `p ∉ ℤ∖{0}`, a chain of singular vectors spaced `|p|/2` (odd) or `|p|`
/// (even) for `p < 0` and even `p > 0`, and for odd `p > 0` singular `u^(n)`
/// at `(n+1/2)p` with subsingular `w^(n)` at `np`.
pub fn expected_pattern(p: &Rational, max_degree: Half) -> Pattern {
    let generic = !p.is_integer() || p.is_zero();
    if generic {
        return Pattern {
            figure: "single node for p outside the nonzero integers",
            nodes: vec![("v".to_string(), Half::ZERO, NodeKind::HighestWeight)],
            edges: Vec::new(),
        };
    }
    let n = p.to_i64().expect("small p") as i32;
    match (n < 0, n % 2 == 0) {
        (true, true) => {
            Pattern::chain("chain u^(n) at degrees n|p|, p < 0 even", Half(-2 * n), |k| format!("u^({k})"), max_degree)
        }
        (true, false) => Pattern::chain(
            "chain u^(n/2) at degrees n|p|/2, p < 0 odd",
            Half(-n),
            |k| if k % 2 == 0 { format!("u^({})", k / 2) } else { format!("u^({k}/2)") },
            max_degree,
        ),
        (false, true) => {
            Pattern::chain("chain u^(n) at degrees np, p > 0 even", Half(2 * n), |k| format!("u^({k})"), max_degree)
        }
        (false, false) => Pattern::odd_positive(n, max_degree),
    }
}

/// Computed singular/subsingular nodes and arrows of `V[p,r]` against
/// [`expected_pattern`].
pub fn diagram_checks(cl: &Rational, cla: &Rational, p: &Rational, r: &Rational, max_degree: Half) -> Check {
    let m = verma(cl, cla, p, r);
    let expected = expected_pattern(p, max_degree);
    let (ok, computed) = match embedding_diagram(&m, max_degree) {
        Ok(d) => {
            let nodes: BTreeSet<(Half, &'static str)> = d.nodes.iter().map(|n| (n.degree, n.kind.name())).collect();
            let mut edges = d.edge_degrees();
            edges.sort();
            let distinct = nodes.len() == d.nodes.len();
            (distinct && nodes == expected.node_set() && edges == expected.edges, d.to_string())
        }
        Err(e) => (false, format!("diagram failed: {e}\n")),
    };
    let mut details =
        format!("p = {p}, r = {r}, degree <= {max_degree}\ncomputed:\n{computed}expected ({}):\n", expected.figure);
    for (label, d, kind) in &expected.nodes {
        let targets: Vec<&str> = expected
            .edges
            .iter()
            .filter(|(a, _)| a == d)
            .filter_map(|(_, b)| expected.nodes.iter().find(|n| n.1 == *b).map(|n| n.0.as_str()))
            .collect();
        let _ = write!(details, "{} {label:<8} degree {:<4}", kind.symbol(), d.to_string());
        if !targets.is_empty() {
            let _ = write!(details, " -> {}", targets.join(", "));
        }
        details.push('\n');
    }
    Check::new(format!("embedding diagram for p = {p}"), anchor::DIAGRAM, ok, details.trim_end().to_string())
}
