//! Hasse diagram of the biclique lattice with explicit vertex lists.
//!
//! The diagram is built incrementally along a construction sequence. Adding
//! a false twin copies the anchor into every biclique containing the anchor;
//! adding a pending vertex either grows the anchor's introducer or hangs one
//! new biclique off it. Total work is proportional to the summed biclique
//! sizes, which is linear in the number of edges.

use std::fmt;

use crate::bigraph::{ConstructionSequence, ConstructionStep, Shore, StepKind, VertexId};
use crate::canonical::CanonicalLattice;
use crate::error::LatticeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicliqueId(pub u32);

impl BicliqueId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for BicliqueId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.0)
    }
}

/// A maximal biclique and its neighbors in the Hasse diagram.
///
/// Order is by inclusion of the `x` shore: `covered` lists bicliques with a
/// smaller `x`, `covering` those with a larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Biclique {
    pub id: BicliqueId,
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
    pub covered: Vec<BicliqueId>,
    pub covering: Vec<BicliqueId>,
}

impl Biclique {
    pub(crate) fn new(id: BicliqueId, x: Vec<VertexId>, y: Vec<VertexId>) -> Self {
        Biclique {
            id,
            x,
            y,
            covered: Vec::new(),
            covering: Vec::new(),
        }
    }

    pub fn shore(&self, s: Shore) -> &[VertexId] {
        match s {
            Shore::X => &self.x,
            Shore::Y => &self.y,
        }
    }

    fn shore_mut(&mut self, s: Shore) -> &mut Vec<VertexId> {
        match s {
            Shore::X => &mut self.x,
            Shore::Y => &mut self.y,
        }
    }

    /// Neighbors in the direction where bicliques containing a vertex of
    /// shore `s` lie: upward for `X`, downward for `Y`.
    pub(crate) fn towards(&self, s: Shore) -> &[BicliqueId] {
        match s {
            Shore::X => &self.covering,
            Shore::Y => &self.covered,
        }
    }
}

/// Hasse diagram of the lattice of maximal bicliques, bottom and top removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    bicliques: Vec<Biclique>,
    introducer: Vec<BicliqueId>,
    shores: Vec<Shore>,
}

impl HasseDiagram {
    pub(crate) fn from_parts(
        bicliques: Vec<Biclique>,
        introducer: Vec<BicliqueId>,
        shores: Vec<Shore>,
    ) -> Self {
        HasseDiagram {
            bicliques,
            introducer,
            shores,
        }
    }

    pub fn n(&self) -> usize {
        self.shores.len()
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    pub fn biclique(&self, id: BicliqueId) -> Result<&Biclique, LatticeError> {
        self.bicliques
            .get(id.index())
            .ok_or(LatticeError::UnknownBiclique(id.index()))
    }

    pub fn shore_of(&self, v: VertexId) -> Shore {
        self.shores[v.index()]
    }

    pub fn shores(&self) -> &[Shore] {
        &self.shores
    }

    /// Lowest biclique containing `v` for `v` in `X`, highest for `v` in `Y`.
    pub fn introducer(&self, v: VertexId) -> Result<BicliqueId, LatticeError> {
        self.introducer
            .get(v.index())
            .copied()
            .ok_or(LatticeError::UnknownVertex(v))
    }

    /// `(lower, higher)` for every cover pair.
    pub fn cover_pairs(&self) -> impl Iterator<Item = (BicliqueId, BicliqueId)> + '_ {
        self.bicliques
            .iter()
            .flat_map(|b| b.covering.iter().map(move |&up| (b.id, up)))
    }

    /// All bicliques containing `v`, walking the tree from its introducer.
    /// Runs in time proportional to the number returned.
    pub fn bicliques_containing(&self, v: VertexId) -> Result<Vec<BicliqueId>, LatticeError> {
        let start = self.introducer(v)?;
        let dir = self.shore_of(v);
        let mut out = Vec::new();
        let mut stack = vec![start];
        while let Some(b) = stack.pop() {
            out.push(b);
            stack.extend_from_slice(self.bicliques[b.index()].towards(dir));
        }
        Ok(out)
    }

    /// The full lattice view with dummy bottom and top elements.
    ///
    /// The bottom is `(∅, Y)` and the top `(X, ∅)`. A dummy is omitted when
    /// an existing biclique already has the full `Y` (resp. `X`) shore, which
    /// happens exactly when the opposite shore has a universal vertex.
    pub fn add_top_bottom(&self) -> FullLattice {
        let all_x: Vec<_> = (0..self.n())
            .map(VertexId::new)
            .filter(|&v| self.shore_of(v) == Shore::X)
            .collect();
        let all_y: Vec<_> = (0..self.n())
            .map(VertexId::new)
            .filter(|&v| self.shore_of(v) == Shore::Y)
            .collect();
        let mut elements: Vec<LatticeElement> = self
            .bicliques
            .iter()
            .map(|b| LatticeElement {
                kind: ElementKind::Biclique(b.id),
                x: b.x.clone(),
                y: b.y.clone(),
            })
            .collect();
        let mut covers: Vec<(usize, usize)> = self
            .cover_pairs()
            .map(|(lo, hi)| (lo.index(), hi.index()))
            .collect();

        if !self.bicliques.iter().any(|b| b.y.len() == all_y.len()) {
            let bottom = elements.len();
            elements.push(LatticeElement {
                kind: ElementKind::Bottom,
                x: Vec::new(),
                y: all_y,
            });
            for b in self.bicliques.iter().filter(|b| b.covered.is_empty()) {
                covers.push((bottom, b.id.index()));
            }
        }
        if !self.bicliques.iter().any(|b| b.x.len() == all_x.len()) {
            let top = elements.len();
            elements.push(LatticeElement {
                kind: ElementKind::Top,
                x: all_x,
                y: Vec::new(),
            });
            for b in self.bicliques.iter().filter(|b| b.covering.is_empty()) {
                covers.push((b.id.index(), top));
            }
        }
        FullLattice { elements, covers }
    }

    /// Canonical form, with vertices renamed through `label`.
    pub fn canonical_with(&self, label: impl Fn(VertexId) -> VertexId) -> CanonicalLattice {
        let bicliques = self
            .bicliques
            .iter()
            .map(|b| {
                (
                    b.x.iter().map(|&v| label(v)).collect(),
                    b.y.iter().map(|&v| label(v)).collect(),
                )
            })
            .collect();
        let covers = self.cover_pairs().map(|(lo, hi)| (lo.index(), hi.index()));
        let introducers = self
            .introducer
            .iter()
            .enumerate()
            .map(|(v, b)| (label(VertexId::new(v)), b.index()))
            .collect();
        CanonicalLattice::from_parts(bicliques, covers, Some(introducers))
    }

    pub fn canonical(&self) -> CanonicalLattice {
        self.canonical_with(|v| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementKind {
    Bottom,
    Biclique(BicliqueId),
    Top,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeElement {
    pub kind: ElementKind,
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
}

/// Galois lattice including the dummy bottom and top, when present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullLattice {
    pub elements: Vec<LatticeElement>,
    /// `(lower, higher)` indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

impl FullLattice {
    pub fn canonical_with(&self, label: impl Fn(VertexId) -> VertexId) -> CanonicalLattice {
        let elements = self
            .elements
            .iter()
            .map(|e| {
                (
                    e.x.iter().map(|&v| label(v)).collect(),
                    e.y.iter().map(|&v| label(v)).collect(),
                )
            })
            .collect();
        CanonicalLattice::from_parts(elements, self.covers.iter().copied(), None)
    }
}

struct ExplicitBuilder {
    bicliques: Vec<Biclique>,
    introducer: Vec<BicliqueId>,
    shores: Vec<Shore>,
}

impl ExplicitBuilder {
    /// `G_2`: the single biclique `({v1}, {v2})`.
    fn start(first_shore: Shore) -> Self {
        let (v1, v2) = (VertexId(0), VertexId(1));
        let (x, y) = match first_shore {
            Shore::X => (v1, v2),
            Shore::Y => (v2, v1),
        };
        ExplicitBuilder {
            bicliques: vec![Biclique::new(BicliqueId(0), vec![x], vec![y])],
            introducer: vec![BicliqueId(0); 2],
            shores: vec![first_shore, first_shore.opposite()],
        }
    }

    fn push(&mut self, step: &ConstructionStep) {
        let anchor_shore = self.shores[step.anchor.index()];
        let intro = self.introducer[step.anchor.index()];
        match step.kind {
            StepKind::FalseTwin => {
                let side = anchor_shore;
                self.shores.push(side);
                // Bicliques holding the anchor form the subtree above (X) or
                // below (Y) its introducer.
                let mut stack = vec![intro];
                while let Some(b) = stack.pop() {
                    let bc = &mut self.bicliques[b.index()];
                    bc.shore_mut(side).push(step.vertex);
                    stack.extend_from_slice(bc.towards(side));
                }
                self.introducer.push(intro);
            }
            StepKind::Pending => {
                let side = anchor_shore.opposite();
                self.shores.push(side);
                let b = &mut self.bicliques[intro.index()];
                // intro(anchor) = (N(anchor), {anchor}) iff its anchor-side
                // shore is a singleton
                if b.shore(anchor_shore).len() == 1 {
                    b.shore_mut(side).push(step.vertex);
                    self.introducer.push(intro);
                } else {
                    let mut grown = b.shore(side).to_vec();
                    grown.push(step.vertex);
                    let id = BicliqueId(self.bicliques.len() as u32);
                    let mut fresh = Biclique::new(id, Vec::new(), Vec::new());
                    *fresh.shore_mut(side) = grown;
                    fresh.shore_mut(anchor_shore).push(step.anchor);
                    self.bicliques.push(fresh);
                    let (lower, upper) = match side {
                        Shore::X => (intro, id),
                        Shore::Y => (id, intro),
                    };
                    self.bicliques[lower.index()].covering.push(upper);
                    self.bicliques[upper.index()].covered.push(lower);
                    self.introducer[step.anchor.index()] = id;
                    self.introducer.push(id);
                }
            }
        }
    }

    fn finish(self) -> HasseDiagram {
        HasseDiagram::from_parts(self.bicliques, self.introducer, self.shores)
    }
}

/// Computes the Hasse diagram of the biclique lattice of the graph built by
/// `seq`. Requires at least two vertices.
pub fn compute_bdh_diagram(seq: &ConstructionSequence) -> Result<HasseDiagram, LatticeError> {
    seq.validate()?;
    if seq.n() < 2 {
        return Err(LatticeError::TooSmall);
    }
    let mut builder = ExplicitBuilder::start(seq.first_shore);
    for step in &seq.steps[1..] {
        builder.push(step);
    }
    Ok(builder.finish())
}
