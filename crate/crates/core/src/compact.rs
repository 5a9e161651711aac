//! Linear-space encoding of a BDH graph and its biclique lattice.
//!
//! Every vertex is an arc of one of two arborescences, `T_X` for the `X`
//! shore and `T_Y` for `Y`. Each neighborhood and each biclique shore is a
//! directed path `[alpha, beta]` in the opposite (resp. own) arborescence,
//! so a biclique costs O(1) words regardless of its size.
//!
//! Adding a false twin subdivides the anchor's arc, inserting the new arc
//! between the anchor's arc and its parent. Every path that started at the
//! anchor's arc must now start one arc higher. Bicliques therefore refer to
//! their `alpha` through a shared cell (one per distinct arc value) and the
//! whole retarget is a single cell write.

use std::fmt;

use crate::bigraph::{ConstructionSequence, ConstructionStep, Shore, StepKind, VertexId};
use crate::error::LatticeError;
use crate::explicit::{Biclique, BicliqueId, HasseDiagram};

/// Arc of an arborescence. Ids are dense per arborescence and never reused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub u32);

impl ArcId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Rooted tree whose arcs are labeled by the vertices of one shore.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arborescence {
    parent: Vec<Option<ArcId>>,
    label: Vec<VertexId>,
    root: ArcId,
}

impl Arborescence {
    fn with_root(label: VertexId) -> Self {
        Arborescence {
            parent: vec![None],
            label: vec![label],
            root: ArcId(0),
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> ArcId {
        self.root
    }

    pub fn parent(&self, a: ArcId) -> Option<ArcId> {
        self.parent[a.index()]
    }

    pub fn label(&self, a: ArcId) -> VertexId {
        self.label[a.index()]
    }

    pub fn arcs(&self) -> impl Iterator<Item = ArcId> {
        (0..self.parent.len() as u32).map(ArcId)
    }

    fn fresh(&mut self, parent: Option<ArcId>, label: VertexId) -> ArcId {
        let id = ArcId(self.parent.len() as u32);
        self.parent.push(parent);
        self.label.push(label);
        id
    }

    fn append_leaf(&mut self, parent: ArcId, label: VertexId) -> ArcId {
        self.fresh(Some(parent), label)
    }

    /// Subdivides `arc`: the new arc takes its place and `arc` hangs below.
    fn split_above(&mut self, arc: ArcId, label: VertexId) -> ArcId {
        let above = self.fresh(self.parent(arc), label);
        self.parent[arc.index()] = Some(above);
        if self.root == arc {
            self.root = above;
        }
        above
    }
}

/// Directed path from `alpha` (closest to the root) down to `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub alpha: ArcId,
    pub beta: ArcId,
}

/// Labels on the path `iv`, walking parent pointers from `beta` to `alpha`.
pub fn decode_interval(t: &Arborescence, iv: Interval) -> Result<Vec<VertexId>, LatticeError> {
    let corrupted = LatticeError::CorruptedInterval {
        alpha: iv.alpha.index(),
        beta: iv.beta.index(),
    };
    if iv.alpha.index() >= t.len() || iv.beta.index() >= t.len() {
        return Err(corrupted);
    }
    let mut out = Vec::new();
    let mut cur = iv.beta;
    loop {
        out.push(t.label(cur));
        if cur == iv.alpha {
            return Ok(out);
        }
        match t.parent(cur) {
            Some(p) => cur = p,
            None => return Err(corrupted),
        }
    }
}

/// Index of a shared `alpha` cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellId(pub u32);

/// A biclique shore: `alpha` through a shared cell, `beta` stored directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShoreInterval {
    pub alpha: CellId,
    pub beta: ArcId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactBiclique {
    pub id: BicliqueId,
    pub x: ShoreInterval,
    pub y: ShoreInterval,
    pub covered: Vec<BicliqueId>,
    pub covering: Vec<BicliqueId>,
}

impl CompactBiclique {
    fn shore(&self, s: Shore) -> &ShoreInterval {
        match s {
            Shore::X => &self.x,
            Shore::Y => &self.y,
        }
    }

    fn shore_mut(&mut self, s: Shore) -> &mut ShoreInterval {
        match s {
            Shore::X => &mut self.x,
            Shore::Y => &mut self.y,
        }
    }
}

/// Word counts of a [`CompactDiagram`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StorageStats {
    pub arcs: usize,
    pub bicliques: usize,
    pub cover_pairs: usize,
    pub cells: usize,
}

impl StorageStats {
    pub fn total(&self) -> usize {
        self.arcs + self.bicliques + self.cover_pairs + self.cells
    }
}

/// Shared state of the builder and the finished diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Core {
    shores: Vec<Shore>,
    arc_of: Vec<ArcId>,
    trees: [Arborescence; 2],
    cells: [Vec<ArcId>; 2],
    bicliques: Vec<CompactBiclique>,
    introducer: Vec<BicliqueId>,
}

impl Core {
    fn interval(&self, b: BicliqueId, s: Shore) -> Interval {
        let si = self.bicliques[b.index()].shore(s);
        Interval {
            alpha: self.cells[s.idx()][si.alpha.0 as usize],
            beta: si.beta,
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), LatticeError> {
        if v.index() < self.shores.len() {
            Ok(())
        } else {
            Err(LatticeError::UnknownVertex(v))
        }
    }

    fn check_biclique(&self, id: BicliqueId) -> Result<(), LatticeError> {
        if id.index() < self.bicliques.len() {
            Ok(())
        } else {
            Err(LatticeError::UnknownBiclique(id.index()))
        }
    }

    /// `N(v)` is the opposite shore of `v`'s introducer.
    fn neighborhood_interval(&self, v: VertexId) -> Interval {
        self.interval(self.introducer[v.index()], self.shores[v.index()].opposite())
    }

    fn decode_shore(&self, b: BicliqueId, s: Shore) -> Result<Vec<VertexId>, LatticeError> {
        decode_interval(&self.trees[s.idx()], self.interval(b, s))
    }

    fn decode(&self, id: BicliqueId) -> Result<Biclique, LatticeError> {
        self.check_biclique(id)?;
        let cb = &self.bicliques[id.index()];
        let mut b = Biclique::new(id, self.decode_shore(id, Shore::X)?, self.decode_shore(id, Shore::Y)?);
        b.covered = cb.covered.clone();
        b.covering = cb.covering.clone();
        Ok(b)
    }
}

/// Incremental form of the compact construction, one step at a time.
///
/// Exposed so the encoding of every intermediate graph `G_i` can be
/// inspected; [`fast_compute_bdh_diagram`] is the batch entry point.
#[derive(Debug, Clone)]
pub struct CompactBuilder {
    core: Core,
    cell_of_arc: [Vec<Option<CellId>>; 2],
}

impl CompactBuilder {
    /// Encoding of `G_2`: one arc per arborescence, one biclique.
    pub fn start(first_shore: Shore) -> Self {
        let (v1, v2) = (VertexId(0), VertexId(1));
        let (x, y) = match first_shore {
            Shore::X => (v1, v2),
            Shore::Y => (v2, v1),
        };
        let cell = ShoreInterval {
            alpha: CellId(0),
            beta: ArcId(0),
        };
        CompactBuilder {
            core: Core {
                shores: vec![first_shore, first_shore.opposite()],
                arc_of: vec![ArcId(0), ArcId(0)],
                trees: [Arborescence::with_root(x), Arborescence::with_root(y)],
                cells: [vec![ArcId(0)], vec![ArcId(0)]],
                bicliques: vec![CompactBiclique {
                    id: BicliqueId(0),
                    x: cell,
                    y: cell,
                    covered: Vec::new(),
                    covering: Vec::new(),
                }],
                introducer: vec![BicliqueId(0); 2],
            },
            cell_of_arc: [vec![Some(CellId(0))], vec![Some(CellId(0))]],
        }
    }

    /// Number of vertices added so far.
    pub fn n(&self) -> usize {
        self.core.shores.len()
    }

    fn cell_for(&mut self, s: Shore, arc: ArcId) -> CellId {
        if let Some(c) = self.cell_of_arc[s.idx()][arc.index()] {
            return c;
        }
        let cells = &mut self.core.cells[s.idx()];
        let c = CellId(cells.len() as u32);
        cells.push(arc);
        self.cell_of_arc[s.idx()][arc.index()] = Some(c);
        c
    }

    /// Adds the next vertex.
    pub fn push(&mut self, step: &ConstructionStep) -> Result<(), LatticeError> {
        let i = self.n();
        if step.vertex.index() != i {
            return Err(crate::error::GraphError::StepOutOfOrder {
                step: i + 1,
                found: step.vertex,
            }
            .into());
        }
        if step.anchor.index() >= i {
            return Err(crate::error::GraphError::AnchorNotEarlier {
                step: i + 1,
                anchor: step.anchor,
            }
            .into());
        }
        let anchor_shore = self.core.shores[step.anchor.index()];
        let intro = self.core.introducer[step.anchor.index()];
        match step.kind {
            StepKind::FalseTwin => {
                let side = anchor_shore;
                let old = self.core.arc_of[step.anchor.index()];
                let new = self.core.trees[side.idx()].split_above(old, step.vertex);
                self.cell_of_arc[side.idx()].push(None);
                // Paths starting at the anchor's arc now start at the new
                // arc directly above it.
                if let Some(c) = self.cell_of_arc[side.idx()][old.index()].take() {
                    self.core.cells[side.idx()][c.0 as usize] = new;
                    self.cell_of_arc[side.idx()][new.index()] = Some(c);
                }
                self.core.shores.push(side);
                self.core.arc_of.push(new);
                self.core.introducer.push(intro);
            }
            StepKind::Pending => {
                let side = anchor_shore.opposite();
                let grown = self.core.bicliques[intro.index()].shore(side).beta;
                let new = self.core.trees[side.idx()].append_leaf(grown, step.vertex);
                self.cell_of_arc[side.idx()].push(None);
                self.core.shores.push(side);
                self.core.arc_of.push(new);

                let anchor_iv = self.core.interval(intro, anchor_shore);
                if anchor_iv.alpha == anchor_iv.beta {
                    self.core.bicliques[intro.index()].shore_mut(side).beta = new;
                    self.core.introducer.push(intro);
                } else {
                    let id = BicliqueId(self.core.bicliques.len() as u32);
                    let anchor_arc = self.core.arc_of[step.anchor.index()];
                    let anchor_cell = self.cell_for(anchor_shore, anchor_arc);
                    let shared = self.core.bicliques[intro.index()].shore(side).alpha;
                    let mut fresh = CompactBiclique {
                        id,
                        x: ShoreInterval {
                            alpha: shared,
                            beta: new,
                        },
                        y: ShoreInterval {
                            alpha: shared,
                            beta: new,
                        },
                        covered: Vec::new(),
                        covering: Vec::new(),
                    };
                    *fresh.shore_mut(anchor_shore) = ShoreInterval {
                        alpha: anchor_cell,
                        beta: anchor_arc,
                    };
                    self.core.bicliques.push(fresh);
                    let (lower, upper) = match side {
                        Shore::X => (intro, id),
                        Shore::Y => (id, intro),
                    };
                    self.core.bicliques[lower.index()].covering.push(upper);
                    self.core.bicliques[upper.index()].covered.push(lower);
                    self.core.introducer[step.anchor.index()] = id;
                    self.core.introducer.push(id);
                }
            }
        }
        Ok(())
    }

    /// Current `N_i(v)` decoded from the arborescence encoding.
    pub fn decode_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>, LatticeError> {
        self.core.check_vertex(v)?;
        let s = self.core.shores[v.index()].opposite();
        decode_interval(&self.core.trees[s.idx()], self.core.neighborhood_interval(v))
    }

    /// Current shores of a biclique of `G_i`.
    pub fn decode_biclique(&self, id: BicliqueId) -> Result<Biclique, LatticeError> {
        self.core.decode(id)
    }

    pub fn num_bicliques(&self) -> usize {
        self.core.bicliques.len()
    }

    pub fn finish(self) -> CompactDiagram {
        let neighborhood = (0..self.core.shores.len())
            .map(|v| self.core.neighborhood_interval(VertexId::new(v)))
            .collect();
        CompactDiagram {
            core: self.core,
            neighborhood,
        }
    }
}

/// The finished encoding: two arborescences, interval-coded bicliques with
/// their cover lists, introducers and neighborhood intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactDiagram {
    core: Core,
    neighborhood: Vec<Interval>,
}

impl CompactDiagram {
    pub fn n(&self) -> usize {
        self.core.shores.len()
    }

    pub fn len(&self) -> usize {
        self.core.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.bicliques.is_empty()
    }

    pub fn bicliques(&self) -> &[CompactBiclique] {
        &self.core.bicliques
    }

    pub fn shore_of(&self, v: VertexId) -> Shore {
        self.core.shores[v.index()]
    }

    pub fn tree(&self, s: Shore) -> &Arborescence {
        &self.core.trees[s.idx()]
    }

    pub fn t_x(&self) -> &Arborescence {
        self.tree(Shore::X)
    }

    pub fn t_y(&self) -> &Arborescence {
        self.tree(Shore::Y)
    }

    /// The arc representing `v` in its shore's arborescence.
    pub fn arc_of(&self, v: VertexId) -> ArcId {
        self.core.arc_of[v.index()]
    }

    pub fn introducer(&self, v: VertexId) -> Result<BicliqueId, LatticeError> {
        self.core.check_vertex(v)?;
        Ok(self.core.introducer[v.index()])
    }

    /// Resolved interval of shore `s` of biclique `id`.
    pub fn interval(&self, id: BicliqueId, s: Shore) -> Result<Interval, LatticeError> {
        self.core.check_biclique(id)?;
        Ok(self.core.interval(id, s))
    }

    /// `N(v)` as a path in the opposite shore's arborescence.
    pub fn neighborhood_interval(&self, v: VertexId) -> Result<Interval, LatticeError> {
        self.core.check_vertex(v)?;
        Ok(self.neighborhood[v.index()])
    }

    pub fn decode_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>, LatticeError> {
        let iv = self.neighborhood_interval(v)?;
        decode_interval(self.tree(self.shore_of(v).opposite()), iv)
    }

    pub fn cover_pairs(&self) -> impl Iterator<Item = (BicliqueId, BicliqueId)> + '_ {
        self.core
            .bicliques
            .iter()
            .flat_map(|b| b.covering.iter().map(move |&up| (b.id, up)))
    }

    pub fn storage(&self) -> StorageStats {
        StorageStats {
            arcs: self.core.trees.iter().map(Arborescence::len).sum(),
            bicliques: self.core.bicliques.len(),
            cover_pairs: self.cover_pairs().count(),
            cells: self.core.cells.iter().map(Vec::len).sum(),
        }
    }
}

/// Builds the compact encoding in time linear in the number of vertices.
pub fn fast_compute_bdh_diagram(seq: &ConstructionSequence) -> Result<CompactDiagram, LatticeError> {
    seq.validate()?;
    if seq.n() < 2 {
        return Err(LatticeError::TooSmall);
    }
    let mut builder = CompactBuilder::start(seq.first_shore);
    for step in &seq.steps[1..] {
        builder.push(step)?;
    }
    Ok(builder.finish())
}

/// Explicit biclique `id`, in time linear in its size.
pub fn decode_biclique(d: &CompactDiagram, id: BicliqueId) -> Result<Biclique, LatticeError> {
    d.core.decode(id)
}

/// Decodes every biclique into an explicit [`HasseDiagram`] with the same
/// ids, covers and introducers.
pub fn to_explicit(d: &CompactDiagram) -> HasseDiagram {
    let bicliques = (0..d.len())
        .map(|i| {
            d.core
                .decode(BicliqueId(i as u32))
                .expect("intervals of a finished diagram decode")
        })
        .collect();
    HasseDiagram::from_parts(bicliques, d.core.introducer.clone(), d.core.shores.clone())
}
