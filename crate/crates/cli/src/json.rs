//! Canonical JSON form of a lattice.
//!
//! Bicliques are sorted by their sorted `(x, y)` shores and numbered in that
//! order; covers are `[lower, higher]` pairs of those numbers. Vertex names
//! are the 1-based names of the input. Keys are written in sorted order so
//! equal lattices serialize to equal bytes.

use bdh_core::{
    oracle::{self, BicliqueSet},
    to_explicit, Arborescence, BipartiteGraph, CanonicalLattice, CompactDiagram, HasseDiagram,
    Interval, Shore, VertexId,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub n: usize,
    pub m: usize,
    pub bicliques: Vec<BicliqueJson>,
    pub covers: Vec<[usize; 2]>,
    /// `[vertex, biclique]` sorted by vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub introducers: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arborescences: Option<ArborescencesJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighborhoods: Option<Vec<NeighborhoodJson>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicliqueJson {
    pub id: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `[alpha, beta]` arc ids in the X arborescence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_interval: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_interval: Option<[u32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArborescencesJson {
    pub x: Vec<ArcJson>,
    pub y: Vec<ArcJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcJson {
    pub arc: u32,
    pub parent: Option<u32>,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodJson {
    pub vertex: usize,
    pub alpha: u32,
    pub beta: u32,
}

fn names(vs: &[VertexId]) -> Vec<usize> {
    vs.iter().map(|v| v.one_based()).collect()
}

impl LatticeJson {
    pub fn from_canonical(n: usize, m: usize, c: &CanonicalLattice) -> Self {
        LatticeJson {
            n,
            m,
            bicliques: c
                .bicliques
                .iter()
                .enumerate()
                .map(|(id, (x, y))| BicliqueJson {
                    id,
                    x: names(x),
                    y: names(y),
                    x_interval: None,
                    y_interval: None,
                })
                .collect(),
            covers: c.covers.iter().map(|&(lo, hi)| [lo, hi]).collect(),
            introducers: c
                .introducers
                .as_ref()
                .map(|l| l.iter().map(|&(v, b)| [v.one_based(), b]).collect()),
            arborescences: None,
            neighborhoods: None,
        }
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_pretty(&self) -> String {
        // serde_json's default map is ordered, so a round trip through
        // `Value` sorts every object's keys.
        let value = serde_json::to_value(self).expect("lattice serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }
}

/// Explicit diagram, vertex names mapped through `label`.
pub fn explicit_json(
    d: &HasseDiagram,
    m: usize,
    label: &dyn Fn(VertexId) -> VertexId,
    top_bottom: bool,
) -> LatticeJson {
    let canon = if top_bottom {
        let full = d.add_top_bottom();
        let elements = full
            .elements
            .iter()
            .map(|e| {
                (
                    e.x.iter().map(|&v| label(v)).collect(),
                    e.y.iter().map(|&v| label(v)).collect(),
                )
            })
            .collect();
        // biclique ids coincide with their element positions
        let intro = (0..d.n())
            .map(VertexId::new)
            .map(|v| (label(v), d.introducer(v).expect("vertex in range").index()))
            .collect();
        CanonicalLattice::from_parts(elements, full.covers.iter().copied(), Some(intro))
    } else {
        d.canonical_with(label)
    };
    LatticeJson::from_canonical(d.n(), m, &canon)
}

fn arcs_json(t: &Arborescence, label: &dyn Fn(VertexId) -> VertexId) -> Vec<ArcJson> {
    t.arcs()
        .map(|a| ArcJson {
            arc: a.0,
            parent: t.parent(a).map(|p| p.0),
            vertex: label(t.label(a)).one_based(),
        })
        .collect()
}

fn pair(iv: Interval) -> [u32; 2] {
    [iv.alpha.0, iv.beta.0]
}

/// Compact diagram: the explicit form plus arborescences, per-biclique
/// intervals and per-vertex neighborhood intervals.
pub fn compact_json(
    d: &CompactDiagram,
    m: usize,
    label: &dyn Fn(VertexId) -> VertexId,
    top_bottom: bool,
) -> LatticeJson {
    let explicit = to_explicit(d);
    let mut out = explicit_json(&explicit, m, label, top_bottom);
    for b in explicit.bicliques() {
        let mut key: (Vec<usize>, Vec<usize>) = (
            b.x.iter().map(|&v| label(v).one_based()).collect(),
            b.y.iter().map(|&v| label(v).one_based()).collect(),
        );
        key.0.sort_unstable();
        key.1.sort_unstable();
        let pos = out
            .bicliques
            .binary_search_by(|e| (&e.x, &e.y).cmp(&(&key.0, &key.1)))
            .expect("every biclique appears in the canonical list");
        let entry = &mut out.bicliques[pos];
        entry.x_interval = Some(pair(d.interval(b.id, Shore::X).expect("biclique in range")));
        entry.y_interval = Some(pair(d.interval(b.id, Shore::Y).expect("biclique in range")));
    }
    out.arborescences = Some(ArborescencesJson {
        x: arcs_json(d.t_x(), label),
        y: arcs_json(d.t_y(), label),
    });
    let mut hoods: Vec<NeighborhoodJson> = (0..d.n())
        .map(VertexId::new)
        .map(|v| {
            let iv = d.neighborhood_interval(v).expect("vertex in range");
            NeighborhoodJson {
                vertex: label(v).one_based(),
                alpha: iv.alpha.0,
                beta: iv.beta.0,
            }
        })
        .collect();
    hoods.sort_by_key(|h| h.vertex);
    out.neighborhoods = Some(hoods);
    out
}

/// Brute-force lattice; carries no introducers.
pub fn oracle_json(g: &BipartiteGraph, bs: &BicliqueSet) -> LatticeJson {
    LatticeJson::from_canonical(g.n(), g.m(), &oracle::canonical(bs))
}

