//! The degeneration graph of one catalog, its transitive closure and the
//! structures nothing degenerates to.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use super::cert::{Cert, Method};
use super::verify::{closed_orbit_label, effective_orbit_dim, Checked};
use super::DegenError;
use crate::catalog::Catalog;
use crate::invariants::{closed_set_member, ClosedSet};

/// Generic structures of the trivially graded component at `n = 4`. Edges
/// inside that component are degenerations of ordinary algebras, which are
/// not encoded here, so this list is carried as asserted data.
pub const TRIVIALLY_GRADED_GENERIC: [&str; 5] = ["(1|0)", "(10|0)", "(13|0)", "(17|0)", "(18;λ|0)"];

#[derive(Debug, Clone, Serialize)]
pub struct Node {
    pub label: String,
    pub component: usize,
    pub orbit_dim: usize,
    /// A one-parameter family; its orbits sweep out one more dimension.
    pub family: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Specialization,
    FamilyLimit,
    Scaling,
    Transitive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Edge {
    pub source: String,
    pub target: String,
    pub kind: EdgeKind,
    pub cert: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Obstruction {
    pub source: String,
    pub target: String,
    pub method: Method,
    /// Certificate id, or `None` when derived from invariants.
    pub cert: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Contradiction {
    pub source: String,
    pub target: String,
    pub edge: EdgeKind,
    pub edge_cert: Option<String>,
    pub obstruction_cert: String,
}

impl std::fmt::Display for Contradiction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} -> {}: {:?} edge ({}) against obstruction {}",
            self.source,
            self.target,
            self.edge,
            self.edge_cert.as_deref().unwrap_or("-"),
            self.obstruction_cert
        )
    }
}

/// An ordered pair in one component with no edge and no obstruction.
#[derive(Debug, Clone, Serialize)]
pub struct OpenPair {
    pub source: String,
    pub target: String,
    /// Id of the registering certificate when the pair is known to be open.
    pub registered: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GenericFlag {
    /// Every other structure in the component is shown not to degenerate to it.
    Confirmed,
    /// No incoming edge, and no registered open pair, but some in-pairs are
    /// not settled by the encoded invariants.
    Asserted,
    /// Some registered open pair targets it.
    Undetermined,
    /// Taken from the external algebra-level classification.
    ExternalData,
}

#[derive(Debug, Clone, Serialize)]
pub struct Generic {
    pub label: String,
    pub component: usize,
    pub orbit_dim: usize,
    pub family: bool,
    pub flag: GenericFlag,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegenerationGraph {
    pub n: usize,
    pub nodes: Vec<Node>,
    /// Sorted by (source, target) in node order; includes transitive edges.
    pub edges: Vec<Edge>,
    /// Verified obstruction certificates.
    pub obstructions: Vec<Obstruction>,
    /// Pairs separated by orbit dimension or a closed set.
    pub derived_obstructions: Vec<Obstruction>,
    pub open_pairs: Vec<OpenPair>,
    /// Registered open pairs that the data actually settles.
    pub settled_registered: Vec<OpenPair>,
    pub underlying_table: bool,
    #[serde(skip)]
    index: BTreeMap<String, usize>,
    #[serde(skip)]
    reach: Vec<Vec<bool>>,
}

impl DegenerationGraph {
    pub fn node(&self, label: &str) -> Option<&Node> {
        self.index.get(label).map(|&i| &self.nodes[i])
    }

    /// `source` degenerates to `target` by some edge, possibly transitive.
    pub fn reaches(&self, source: &str, target: &str) -> bool {
        match (self.index.get(source), self.index.get(target)) {
            (Some(&a), Some(&b)) => a == b || self.reach[a][b],
            _ => false,
        }
    }

    pub fn component_nodes(&self, component: usize) -> impl Iterator<Item = &Node> {
        self.nodes.iter().filter(move |n| n.component == component)
    }

    /// Nodes of the component with no incoming edge from another node.
    pub fn sources(&self, component: usize) -> Vec<&Node> {
        self.component_nodes(component)
            .filter(|n| !self.edges.iter().any(|e| e.target == n.label))
            .collect()
    }

    pub fn is_trivially_graded(&self, component: usize) -> bool {
        component == self.n
    }

    fn obstructed(&self, source: &str, target: &str) -> bool {
        self.obstructions
            .iter()
            .chain(&self.derived_obstructions)
            .any(|o| o.source == source && o.target == target)
    }
}

/// Sources of the component, each with its flag. The trivially graded
/// component at `n = 4` reports the asserted list unless an algebra-level
/// table was used to build the graph.
pub fn generic_structures(graph: &DegenerationGraph, component: usize) -> Vec<Generic> {
    if graph.n == 4 && graph.is_trivially_graded(component) && !graph.underlying_table {
        return TRIVIALLY_GRADED_GENERIC
            .iter()
            .filter_map(|l| graph.node(l))
            .map(|n| Generic {
                label: n.label.clone(),
                component,
                orbit_dim: n.orbit_dim,
                family: n.family,
                flag: GenericFlag::ExternalData,
            })
            .collect();
    }
    graph
        .sources(component)
        .into_iter()
        .map(|n| {
            let registered = graph
                .open_pairs
                .iter()
                .any(|p| p.target == n.label && p.registered.is_some());
            let all_blocked = graph
                .component_nodes(component)
                .filter(|m| m.label != n.label)
                .all(|m| graph.obstructed(&m.label, &n.label));
            let flag = if registered {
                GenericFlag::Undetermined
            } else if all_blocked {
                GenericFlag::Confirmed
            } else {
                GenericFlag::Asserted
            };
            Generic {
                label: n.label.clone(),
                component,
                orbit_dim: n.orbit_dim,
                family: n.family,
                flag,
            }
        })
        .collect()
}

/// Assembles the graph from verified certificates. Scaling edges to the
/// closed orbit of each component are added automatically.
pub fn build_graph(catalog: &Catalog, checked: &[Checked]) -> Result<DegenerationGraph, DegenError> {
    for c in checked {
        let ok = c.verdict.is_verified() || matches!(c.cert, Cert::Undetermined(_));
        if !ok {
            return Err(DegenError::Unverified(c.cert.id().to_string()));
        }
    }
    let entries = catalog.entries();
    let n = entries.first().map_or(0, |e| e.n);
    let index: BTreeMap<String, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.label.clone(), i))
        .collect();
    let nodes: Vec<Node> = entries
        .iter()
        .map(|e| Node {
            label: e.label.clone(),
            component: e.component,
            orbit_dim: crate::invariants::orbit_dim(&e.constants),
            family: e.parametric,
        })
        .collect();
    let idx = |l: &str| -> Result<usize, DegenError> {
        index
            .get(l)
            .copied()
            .ok_or_else(|| DegenError::Catalog(crate::catalog::CatalogError::UnknownLabel(l.into())))
    };

    let mut direct: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
    let mut obstructions = Vec::new();
    let mut registered = Vec::new();
    for c in checked {
        match &c.cert {
            Cert::Specialization(s) => {
                let (a, b) = (idx(&s.source)?, idx(&s.target)?);
                if a != b {
                    let kind = if s.is_family_limit() {
                        EdgeKind::FamilyLimit
                    } else {
                        EdgeKind::Specialization
                    };
                    direct.entry((a, b)).or_insert(Edge {
                        source: s.source.clone(),
                        target: s.target.clone(),
                        kind,
                        cert: Some(s.id.clone()),
                    });
                }
            }
            Cert::Obstruction(o) => obstructions.push(Obstruction {
                source: o.source.clone(),
                target: o.target.clone(),
                method: o.method,
                cert: Some(o.id.clone()),
            }),
            Cert::Undetermined(u) => registered.push(u.clone()),
        }
    }
    for (a, e) in entries.iter().enumerate() {
        if let Some(&b) = index.get(&closed_orbit_label(e.n, e.component)) {
            if a != b {
                direct.entry((a, b)).or_insert(Edge {
                    source: e.label.clone(),
                    target: entries[b].label.clone(),
                    kind: EdgeKind::Scaling,
                    cert: None,
                });
            }
        }
    }

    let m = entries.len();
    let mut reach = vec![vec![false; m]; m];
    for &(a, b) in direct.keys() {
        reach[a][b] = true;
    }
    for k in 0..m {
        for i in 0..m {
            if reach[i][k] {
                let row_k = reach[k].clone();
                for (cell, &via) in reach[i].iter_mut().zip(&row_k) {
                    *cell |= via;
                }
            }
        }
    }
    let mut edges: Vec<Edge> = direct.values().cloned().collect();
    for i in 0..m {
        for j in 0..m {
            if i != j && reach[i][j] && !direct.contains_key(&(i, j)) {
                edges.push(Edge {
                    source: entries[i].label.clone(),
                    target: entries[j].label.clone(),
                    kind: EdgeKind::Transitive,
                    cert: None,
                });
            }
        }
    }
    edges.sort_by_key(|e| (index[&e.source], index[&e.target]));

    let mut contradictions = Vec::new();
    for o in &obstructions {
        let (a, b) = (idx(&o.source)?, idx(&o.target)?);
        if a != b && reach[a][b] {
            let e = edges
                .iter()
                .find(|e| e.source == o.source && e.target == o.target)
                .expect("reached pair has an edge");
            contradictions.push(Contradiction {
                source: o.source.clone(),
                target: o.target.clone(),
                edge: e.kind,
                edge_cert: e.cert.clone(),
                obstruction_cert: o.cert.clone().unwrap_or_default(),
            });
        }
    }
    if !contradictions.is_empty() {
        return Err(DegenError::Contradiction(contradictions));
    }

    // invariants per node, computed once
    let sets = [Method::A, Method::B, Method::C, Method::D, Method::E];
    let inv: Vec<(usize, Vec<Option<bool>>)> = entries
        .iter()
        .map(|e| {
            let members = [
                ClosedSet::A,
                ClosedSet::B,
                ClosedSet::C,
                ClosedSet::D,
                ClosedSet::E,
            ]
            .iter()
            .map(|&c| closed_set_member(&e.constants, c).ok())
            .collect();
            (effective_orbit_dim(e), members)
        })
        .collect();
    let mut derived = Vec::new();
    let mut open_pairs = Vec::new();
    for (a, s) in entries.iter().enumerate() {
        for (b, t) in entries.iter().enumerate() {
            if a == b || s.component != t.component || reach[a][b] {
                continue;
            }
            let found = if inv[a].0 <= inv[b].0 {
                Some(Method::Od)
            } else {
                (0..sets.len())
                    .find(|&k| inv[a].1[k] == Some(true) && inv[b].1[k] == Some(false))
                    .map(|k| sets[k])
            };
            if let Some(method) = found {
                derived.push(Obstruction {
                    source: s.label.clone(),
                    target: t.label.clone(),
                    method,
                    cert: None,
                });
            } else if !obstructions
                .iter()
                .any(|o| o.source == s.label && o.target == t.label)
            {
                open_pairs.push(OpenPair {
                    source: s.label.clone(),
                    target: t.label.clone(),
                    registered: registered
                        .iter()
                        .find(|u| u.source == s.label && u.target == t.label)
                        .map(|u| u.id.clone()),
                });
            }
        }
    }
    let settled_registered = registered
        .iter()
        .filter(|u| {
            !open_pairs
                .iter()
                .any(|p| p.source == u.source && p.target == u.target)
        })
        .map(|u| OpenPair {
            source: u.source.clone(),
            target: u.target.clone(),
            registered: Some(u.id.clone()),
        })
        .collect();

    Ok(DegenerationGraph {
        n,
        nodes,
        edges,
        obstructions,
        derived_obstructions: derived,
        open_pairs,
        settled_registered,
        underlying_table: false,
        index,
        reach,
    })
}

/// Builds the graph from the certificates that verified, ignoring the rest.
/// Returns the graph and the ids left out.
pub fn assemble(
    catalog: &Catalog,
    checked: &[Checked],
) -> Result<(DegenerationGraph, Vec<String>), DegenError> {
    let (usable, rejected): (Vec<Checked>, Vec<Checked>) = checked
        .iter()
        .cloned()
        .partition(|c| c.verdict.is_verified() || matches!(c.cert, Cert::Undetermined(_)));
    let graph = build_graph(catalog, &usable)?;
    Ok((graph, rejected.iter().map(|c| c.cert.id().to_string()).collect()))
}

/// Structural properties every graph built from verified data must have.
/// Returns a description of each violation.
pub fn check_properties(graph: &DegenerationGraph) -> Vec<String> {
    let mut out = Vec::new();
    for e in &graph.edges {
        let (s, t) = (graph.node(&e.source).unwrap(), graph.node(&e.target).unwrap());
        if s.component != t.component {
            out.push(format!("edge {} -> {} crosses components", e.source, e.target));
        }
        if !s.family && e.kind != EdgeKind::Transitive && s.orbit_dim <= t.orbit_dim {
            out.push(format!(
                "edge {} -> {} does not lower the orbit dimension ({} -> {})",
                e.source, e.target, s.orbit_dim, t.orbit_dim
            ));
        }
    }
    for node in &graph.nodes {
        let c = closed_orbit_label(graph.n, node.component);
        if graph.node(&c).is_some() && !graph.reaches(&node.label, &c) {
            out.push(format!("{} does not reach {c}", node.label));
        }
    }
    for p in &graph.settled_registered {
        out.push(format!(
            "registered open pair {} -> {} is settled by the data",
            p.source, p.target
        ));
    }
    out
}

/// Pairs of distinct entries on the same underlying algebra, in the same
/// component, joined by an edge. Expected to be empty; reported, not
/// asserted.
pub fn same_underlying_links(graph: &DegenerationGraph) -> Vec<(String, String)> {
    let family = |l: &str| l.rsplit_once('|').map(|(f, _)| f.to_string());
    graph
        .edges
        .iter()
        .filter(|e| {
            let (s, t) = (graph.node(&e.source).unwrap(), graph.node(&e.target).unwrap());
            s.component == t.component && family(&e.source) == family(&e.target)
        })
        .map(|e| (e.source.clone(), e.target.clone()))
        .collect()
}

/// Machine-readable view of one component.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentDiagram {
    pub component: usize,
    pub nodes: Vec<Node>,
    /// Direct edges only; transitive ones are implied.
    pub edges: Vec<Edge>,
    pub undetermined: Vec<OpenPair>,
    pub generic: Vec<Generic>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub banner: Option<String>,
}

impl DegenerationGraph {
    pub fn diagram(&self, component: usize) -> ComponentDiagram {
        let nodes: Vec<Node> = self.component_nodes(component).cloned().collect();
        let in_comp = |l: &str| nodes.iter().any(|n| n.label == l);
        let edges = self
            .edges
            .iter()
            .filter(|e| e.kind != EdgeKind::Transitive && in_comp(&e.source))
            .cloned()
            .collect();
        let undetermined = self
            .open_pairs
            .iter()
            .filter(|p| p.registered.is_some() && in_comp(&p.source))
            .cloned()
            .collect();
        let banner =
            (self.n == 4 && self.is_trivially_graded(component) && !self.underlying_table).then(|| {
                "degenerations between trivially graded structures are degenerations of \
                 ordinary algebras; only scaling edges are shown"
                    .to_string()
            });
        ComponentDiagram {
            component,
            nodes,
            edges,
            undetermined,
            generic: generic_structures(self, component),
            banner,
        }
    }
}

impl ComponentDiagram {
    /// Graphviz text. Solid edges are specializations, dashed edges family
    /// limits, grey edges the universal scaling, dotted edges open pairs.
    /// Nodes of equal orbit dimension share a rank.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph component_{} {{", self.component);
        if let Some(b) = &self.banner {
            let _ = writeln!(s, "  // {b}");
            let _ = writeln!(s, "  label=\"{b}\";");
        }
        let _ = writeln!(s, "  rankdir=TB;");
        let _ = writeln!(s, "  node [shape=box];");
        for n in &self.nodes {
            let fam = if n.family { " + family parameter" } else { "" };
            let style = if self.generic.iter().any(|g| g.label == n.label) {
                ", style=bold"
            } else {
                ""
            };
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{}\\norbit dim {}{}\"{}];",
                n.label, n.label, n.orbit_dim, fam, style
            );
        }
        let mut ranks: BTreeMap<usize, BTreeSet<&str>> = BTreeMap::new();
        for n in &self.nodes {
            ranks.entry(n.orbit_dim).or_default().insert(&n.label);
        }
        for labels in ranks.values().rev() {
            let list: Vec<String> = labels.iter().map(|l| format!("\"{l}\"")).collect();
            let _ = writeln!(s, "  {{ rank=same; {}; }}", list.join("; "));
        }
        for e in &self.edges {
            let attr = match e.kind {
                EdgeKind::Specialization => "",
                EdgeKind::FamilyLimit => " [style=dashed]",
                EdgeKind::Scaling => " [color=gray]",
                EdgeKind::Transitive => continue,
            };
            let _ = writeln!(s, "  \"{}\" -> \"{}\"{};", e.source, e.target, attr);
        }
        for p in &self.undetermined {
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [style=dotted, label=\"?\"];",
                p.source, p.target
            );
        }
        s.push_str("}\n");
        s
    }
}
