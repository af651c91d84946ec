use std::fmt;

use serde_json::{json, Value};

use super::{
    normalize_leading, refine_representative, singular_vectors, subsingular_vectors, ModuleVector, Submodule,
    VermaError, VermaModule,
};
use crate::algebra::Half;
use crate::scalars::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    HighestWeight,
    Singular,
    Subsingular,
}

impl NodeKind {
    pub fn symbol(self) -> &'static str {
        match self {
            NodeKind::HighestWeight | NodeKind::Singular => "●",
            NodeKind::Subsingular => "○",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NodeKind::HighestWeight => "highest-weight",
            NodeKind::Singular => "singular",
            NodeKind::Subsingular => "subsingular",
        }
    }
}

#[derive(Clone, Debug)]
pub struct DiagramNode<F> {
    pub label: String,
    pub degree: Half,
    pub kind: NodeKind,
    pub vector: ModuleVector<F>,
}

/// `to ∈ ⟨from⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug)]
pub struct Diagram<F> {
    pub max_degree: Half,
    pub nodes: Vec<DiagramNode<F>>,
    pub edges: Vec<DiagramEdge>,
}

impl<F: Field> Diagram<F> {
    /// `(degree, kind)` of every node, in order.
    pub fn shape(&self) -> Vec<(Half, NodeKind)> {
        self.nodes.iter().map(|n| (n.degree, n.kind)).collect()
    }

    /// Edges as `(from degree, to degree)` pairs.
    pub fn edge_degrees(&self) -> Vec<(Half, Half)> {
        self.edges.iter().map(|e| (self.nodes[e.from].degree, self.nodes[e.to].degree)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_degree": self.max_degree.to_string(),
            "nodes": self.nodes.iter().map(|n| json!({
                "label": n.label,
                "degree": n.degree.to_string(),
                "kind": n.kind.name(),
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| json!({
                "from": self.nodes[e.from].label,
                "to": self.nodes[e.to].label,
            })).collect::<Vec<_>>(),
        })
    }
}

impl<F: Field> fmt::Display for Diagram<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.nodes.iter().enumerate() {
            let targets: Vec<&str> =
                self.edges.iter().filter(|e| e.from == i).map(|e| self.nodes[e.to].label.as_str()).collect();
            write!(f, "{} {:<8} degree {:<4}", n.kind.symbol(), n.label, n.degree.to_string())?;
            if !targets.is_empty() {
                write!(f, " -> {}", targets.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Singular and subsingular vectors of `m` up to `max_degree`, with an
/// arrow `a → b` when `⟨b⟩ ⊊ ⟨a⟩` and no node `c` of the same kind as `b`
/// has `⟨b⟩ ⊊ ⟨c⟩ ⊊ ⟨a⟩`.
///
/// At each degree all singular vectors become nodes; subsingular nodes are
/// taken modulo the submodule generated by the singular nodes found so far,
/// with the representative chosen so that its raising images lie in the
/// submodule of the highest-degree singular node possible.
pub fn embedding_diagram<F: Field>(m: &VermaModule<F>, max_degree: Half) -> Result<Diagram<F>, VermaError> {
    let mut nodes = vec![DiagramNode {
        label: "v".to_string(),
        degree: Half::ZERO,
        kind: NodeKind::HighestWeight,
        vector: m.highest_weight_vector(),
    }];
    let mut counts = (0usize, 0usize);
    for t in 1..=max_degree.0 {
        let d = Half(t);
        let sing = singular_vectors(m, d);
        for v in &sing {
            counts.0 += 1;
            nodes.push(DiagramNode {
                label: format!("u{}", counts.0),
                degree: d,
                kind: NodeKind::Singular,
                vector: v.clone(),
            });
        }
        let gens: Vec<ModuleVector<F>> =
            nodes.iter().filter(|n| n.kind == NodeKind::Singular).map(|n| n.vector.clone()).collect();
        let s = Submodule::generated(m, gens, d)?;
        let shifts: Vec<ModuleVector<F>> =
            s.span(d).basis().map(|c| ModuleVector { degree: d, coords: c.clone() }).collect();
        for w in subsingular_vectors(m, d, &s)? {
            // prefer the representative whose raising images reach only the
            // deepest singular node
            let mut best = w.clone();
            let mut lower: Vec<&DiagramNode<F>> =
                nodes.iter().filter(|n| n.kind == NodeKind::Singular && n.degree < d).collect();
            lower.sort_by_key(|n| std::cmp::Reverse(n.degree));
            for u in lower {
                let t = Submodule::generated(m, vec![u.vector.clone()], d)?;
                if let Some(r) = refine_representative(m, &w, &shifts, &t)? {
                    best = normalize_leading(m, &r);
                    break;
                }
            }
            counts.1 += 1;
            nodes.push(DiagramNode {
                label: format!("w{}", counts.1),
                degree: d,
                kind: NodeKind::Subsingular,
                vector: best,
            });
        }
    }
    let subs: Vec<Submodule<F>> =
        nodes.iter().map(|n| Submodule::generated(m, vec![n.vector.clone()], max_degree)).collect::<Result<_, _>>()?;
    let n = nodes.len();
    let contains = |a: usize, b: usize| a == b || subs[a].contains(&nodes[b].vector);
    let strictly = |a: usize, b: usize| contains(a, b) && !contains(b, a);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !strictly(a, b) {
                continue;
            }
            let shortcut =
                (0..n).any(|c| c != a && c != b && nodes[c].kind == nodes[b].kind && strictly(a, c) && strictly(c, b));
            if !shortcut {
                edges.push(DiagramEdge { from: a, to: b });
            }
        }
    }
    Ok(Diagram { max_degree, nodes, edges })
}
