//! Bipartite graphs and the pending-vertex / false-twin construction.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;

/// Dense vertex index. Stored 0-based; displayed 1-based (`v1`, `v2`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(index as u32)
    }

    /// Vertex `v{k}` for a 1-based name `k >= 1`.
    pub fn from_one_based(k: usize) -> Self {
        assert!(k >= 1, "vertex names are 1-based");
        VertexId((k - 1) as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn one_based(self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.one_based())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shore {
    X,
    Y,
}

impl Shore {
    #[inline]
    pub fn opposite(self) -> Shore {
        match self {
            Shore::X => Shore::Y,
            Shore::Y => Shore::X,
        }
    }

    #[inline]
    pub(crate) fn idx(self) -> usize {
        match self {
            Shore::X => 0,
            Shore::Y => 1,
        }
    }
}

impl fmt::Display for Shore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shore::X => "X",
            Shore::Y => "Y",
        })
    }
}

/// A simple bipartite graph with strictly sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    shore: Vec<Shore>,
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl BipartiteGraph {
    /// Edgeless graph with the given shore assignment.
    pub fn empty(shores: Vec<Shore>) -> Self {
        let n = shores.len();
        BipartiteGraph {
            shore: shores,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an explicit bipartition and an edge list.
    pub fn from_edges(
        shores: Vec<Shore>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let n = shores.len();
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w.index() >= n {
                    return Err(GraphError::VertexOutOfRange(w.one_based()));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if shores[u.index()] == shores[v.index()] {
                return Err(GraphError::SameShore(u, v));
            }
            adj[u.index()].push(v);
            adj[v.index()].push(u);
        }
        let mut m = 0;
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(VertexId::new(i), w[0]));
            }
            m += list.len();
        }
        Ok(BipartiteGraph {
            shore: shores,
            adj,
            m: m / 2,
        })
    }

    /// Builds a graph on `n` vertices, inferring the bipartition by BFS
    /// 2-coloring. In every component the smallest vertex goes to `X`.
    pub fn from_edges_colored(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let edges: Vec<_> = edges.into_iter().collect();
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            for w in [u, v] {
                if w.index() >= n {
                    return Err(GraphError::VertexOutOfRange(w.one_based()));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            nbrs[u.index()].push(v.index());
            nbrs[v.index()].push(u.index());
        }
        let mut color: Vec<Option<Shore>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(Shore::X);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &nbrs[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(cu.opposite());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Err(GraphError::NotBipartite(VertexId::new(w)));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Self::from_edges(color.into_iter().map(Option::unwrap).collect(), edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.shore.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn shore_of(&self, v: VertexId) -> Shore {
        self.shore[v.index()]
    }

    pub fn shores(&self) -> &[Shore] {
        &self.shore
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.index()].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n()).map(VertexId::new)
    }

    pub fn shore_vertices(&self, s: Shore) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.shore_of(v) == s).collect()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u.index()]
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    count += 1;
                    stack.push(w.index());
                }
            }
        }
        count == self.n()
    }

    /// Subgraph induced by `keep`, relabeled densely in the order given.
    pub fn induced(&self, keep: &[VertexId]) -> BipartiteGraph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, v) in keep.iter().enumerate() {
            pos[v.index()] = i;
        }
        let shores = keep.iter().map(|&v| self.shore_of(v)).collect();
        let edges = keep.iter().enumerate().flat_map(|(i, &v)| {
            let pos = &pos;
            self.adj[v.index()]
                .iter()
                .filter(move |w| pos[w.index()] != usize::MAX && pos[w.index()] > i)
                .map(move |w| (VertexId::new(i), VertexId::new(pos[w.index()])))
        });
        BipartiteGraph::from_edges(shores, edges.collect::<Vec<_>>())
            .expect("induced subgraph of a valid graph is valid")
    }

    fn push_vertex(&mut self, step: &ConstructionStep) {
        let v = step.vertex;
        debug_assert_eq!(v.index(), self.n());
        let a = step.anchor;
        match step.kind {
            StepKind::Pending => {
                self.shore.push(self.shore_of(a).opposite());
                self.adj.push(vec![a]);
                // v is the largest index so far, appending keeps lists sorted
                self.adj[a.index()].push(v);
                self.m += 1;
            }
            StepKind::FalseTwin => {
                self.shore.push(self.shore_of(a));
                let nbrs = self.adj[a.index()].clone();
                for &u in &nbrs {
                    self.adj[u.index()].push(v);
                }
                self.m += nbrs.len();
                self.adj.push(nbrs);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Pending,
    FalseTwin,
}

/// One triple `(v_i, kind, v_k)` of a construction sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionStep {
    pub vertex: VertexId,
    pub kind: StepKind,
    pub anchor: VertexId,
}

impl ConstructionStep {
    pub fn pending(vertex: VertexId, anchor: VertexId) -> Self {
        ConstructionStep {
            vertex,
            kind: StepKind::Pending,
            anchor,
        }
    }

    pub fn twin(vertex: VertexId, anchor: VertexId) -> Self {
        ConstructionStep {
            vertex,
            kind: StepKind::FalseTwin,
            anchor,
        }
    }
}

/// Reverse of a pruning sequence: `v1` on `first_shore`, then one step for
/// each of `v2, ..., vn` in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstructionSequence {
    pub first_shore: Shore,
    pub steps: Vec<ConstructionStep>,
}

impl ConstructionSequence {
    pub fn new(first_shore: Shore, steps: Vec<ConstructionStep>) -> Self {
        ConstructionSequence { first_shore, steps }
    }

    /// Builds a sequence from 1-based triples `(i, kind, k)`.
    pub fn from_triples(
        first_shore: Shore,
        triples: impl IntoIterator<Item = (usize, StepKind, usize)>,
    ) -> Self {
        let steps = triples
            .into_iter()
            .map(|(i, kind, k)| ConstructionStep {
                vertex: VertexId::from_one_based(i),
                kind,
                anchor: VertexId::from_one_based(k),
            })
            .collect();
        ConstructionSequence { first_shore, steps }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        for (pos, step) in self.steps.iter().enumerate() {
            let i = pos + 2;
            if step.vertex.one_based() != i {
                return Err(GraphError::StepOutOfOrder {
                    step: i,
                    found: step.vertex,
                });
            }
            if step.anchor >= step.vertex {
                return Err(GraphError::AnchorNotEarlier {
                    step: i,
                    anchor: step.anchor,
                });
            }
            if i == 2 && step.kind != StepKind::Pending {
                return Err(GraphError::BadFirstStep);
            }
        }
        Ok(())
    }

    /// Shore of every vertex, derived from the step kinds.
    pub fn shores(&self) -> Vec<Shore> {
        let mut shores = Vec::with_capacity(self.n());
        shores.push(self.first_shore);
        for step in &self.steps {
            let s = shores[step.anchor.index()];
            shores.push(match step.kind {
                StepKind::Pending => s.opposite(),
                StepKind::FalseTwin => s,
            });
        }
        shores
    }

    /// The sequence building `G_i`, the subgraph induced by `v1..vi`.
    pub fn prefix(&self, i: usize) -> Result<ConstructionSequence, GraphError> {
        if i < 1 || i > self.n() {
            return Err(GraphError::PrefixOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(ConstructionSequence {
            first_shore: self.first_shore,
            steps: self.steps[..i - 1].to_vec(),
        })
    }
}

/// Builds `G_n` from a construction sequence.
pub fn apply_sequence(seq: &ConstructionSequence) -> Result<BipartiteGraph, GraphError> {
    seq.validate()?;
    let mut g = BipartiteGraph::empty(vec![seq.first_shore]);
    for step in &seq.steps {
        g.push_vertex(step);
    }
    Ok(g)
}

/// Builds `G_i` for `1 <= i <= n`.
pub fn intermediate_graph(seq: &ConstructionSequence, i: usize) -> Result<BipartiteGraph, GraphError> {
    apply_sequence(&seq.prefix(i)?)
}

/// Random BDH construction sequence on `n` vertices.
///
/// Uses ChaCha8 seeded through `seed_from_u64`. For `i >= 3` one Bernoulli
/// draw with probability `twin_probability` picks a false twin, then the
/// anchor is drawn uniformly from `v1..v(i-1)`. Every earlier vertex already
/// has degree at least one, so the twin never copies an empty neighborhood.
pub fn generate_random_bdh(
    n: usize,
    twin_probability: f64,
    seed: u64,
) -> Result<ConstructionSequence, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    if !(0.0..=1.0).contains(&twin_probability) {
        return Err(GraphError::BadProbability(twin_probability));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::with_capacity(n - 1);
    steps.push(ConstructionStep::pending(VertexId(1), VertexId(0)));
    for i in 2..n {
        let twin = rng.random_bool(twin_probability);
        let anchor = VertexId::new(rng.random_range(0..i));
        let v = VertexId::new(i);
        steps.push(if twin {
            ConstructionStep::twin(v, anchor)
        } else {
            ConstructionStep::pending(v, anchor)
        });
    }
    Ok(ConstructionSequence::new(Shore::X, steps))
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    fn v(k: usize) -> VertexId {
        VertexId::from_one_based(k)
    }

    fn edge_set(g: &BipartiteGraph) -> Vec<(usize, usize)> {
        g.edges().map(|(a, b)| (a.one_based(), b.one_based())).collect()
    }

    #[test]
    fn single_edge() {
        let g = apply_sequence(&k11()).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(edge_set(&g), vec![(1, 2)]);
        assert_eq!(g.shore_of(v(1)), Shore::X);
        assert_eq!(g.shore_of(v(2)), Shore::Y);
    }

    #[test]
    fn path_on_three_vertices_is_a_star() {
        let g = apply_sequence(&k12()).unwrap();
        assert_eq!(edge_set(&g), vec![(1, 2), (2, 3)]);
        assert_eq!(g.degree(v(2)), 2);
        assert_eq!(g.shore_vertices(Shore::Y), vec![v(2)]);
    }

    #[test]
    fn p4_by_hand() {
        let g = apply_sequence(&p4()).unwrap();
        assert_eq!(edge_set(&g), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(g.shore_vertices(Shore::X), vec![v(1), v(3)]);
        assert_eq!(g.shore_vertices(Shore::Y), vec![v(2), v(4)]);
    }

    #[test]
    fn intermediate_graphs_of_p4() {
        let s = p4();
        assert_eq!(edge_set(&intermediate_graph(&s, 2).unwrap()), vec![(1, 2)]);
        assert_eq!(
            edge_set(&intermediate_graph(&s, 3).unwrap()),
            vec![(1, 2), (2, 3)]
        );
        assert_eq!(
            intermediate_graph(&s, 4).unwrap(),
            apply_sequence(&s).unwrap()
        );
        assert_eq!(intermediate_graph(&s, 1).unwrap().n(), 1);
        assert!(matches!(
            intermediate_graph(&s, 5),
            Err(GraphError::PrefixOutOfRange { index: 5, n: 4 })
        ));
        assert!(intermediate_graph(&s, 0).is_err());
    }

    #[test]
    fn k23_is_complete() {
        let g = apply_sequence(&k23()).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.shore_vertices(Shore::X), vec![v(1), v(5)]);
        for x in [1, 5] {
            for y in [2, 3, 4] {
                assert!(g.has_edge(v(x), v(y)));
            }
        }
    }

    #[test]
    fn malformed_steps_name_the_step() {
        let s = ConstructionSequence::from_triples(
            Shore::X,
            [(2, StepKind::Pending, 1), (3, StepKind::Pending, 3)],
        );
        assert_eq!(
            apply_sequence(&s),
            Err(GraphError::AnchorNotEarlier {
                step: 3,
                anchor: v(3)
            })
        );
        let s = ConstructionSequence::from_triples(Shore::X, [(2, StepKind::FalseTwin, 1)]);
        assert_eq!(apply_sequence(&s), Err(GraphError::BadFirstStep));
        let s = ConstructionSequence::from_triples(
            Shore::X,
            [(2, StepKind::Pending, 1), (4, StepKind::Pending, 1)],
        );
        assert!(matches!(
            s.validate(),
            Err(GraphError::StepOutOfOrder { step: 3, .. })
        ));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        let shores = vec![Shore::X, Shore::Y, Shore::X];
        assert!(matches!(
            BipartiteGraph::from_edges(shores.clone(), [(v(1), v(1))]),
            Err(GraphError::SelfLoop(_))
        ));
        assert!(matches!(
            BipartiteGraph::from_edges(shores.clone(), [(v(1), v(3))]),
            Err(GraphError::SameShore(..))
        ));
        assert!(matches!(
            BipartiteGraph::from_edges(shores.clone(), [(v(1), v(2)), (v(2), v(1))]),
            Err(GraphError::DuplicateEdge(..))
        ));
        assert!(matches!(
            BipartiteGraph::from_edges(shores, [(v(1), v(9))]),
            Err(GraphError::VertexOutOfRange(9))
        ));
    }

    #[test]
    fn two_coloring() {
        let g = BipartiteGraph::from_edges_colored(4, [(v(2), v(1)), (v(3), v(2)), (v(4), v(3))])
            .unwrap();
        assert_eq!(g.shore_vertices(Shore::X), vec![v(1), v(3)]);
        let tri = BipartiteGraph::from_edges_colored(3, [(v(1), v(2)), (v(2), v(3)), (v(3), v(1))]);
        assert!(matches!(tri, Err(GraphError::NotBipartite(_))));
    }

    #[test]
    fn generator_small_cases() {
        for seed in 0..5 {
            assert_eq!(generate_random_bdh(2, 0.7, seed).unwrap(), k11());
        }
        let s = generate_random_bdh(5, 0.0, 1).unwrap();
        assert_eq!(s.steps.len(), 4);
        assert!(s.steps.iter().all(|st| st.kind == StepKind::Pending));
        let g = apply_sequence(&s).unwrap();
        assert_eq!(g.m(), 4);
        assert!(g.is_connected());
        assert_eq!(generate_random_bdh(1, 0.5, 0), Err(GraphError::TooFewVertices(1)));
        assert!(generate_random_bdh(4, 1.5, 0).is_err());
    }

    #[test]
    fn generator_is_reproducible() {
        let a = generate_random_bdh(200, 0.5, 42).unwrap();
        let b = generate_random_bdh(200, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, generate_random_bdh(200, 0.5, 43).unwrap());
    }

    proptest! {
        #[test]
        fn generated_graphs_are_connected_and_bipartite(
            n in 2usize..40, p in 0.0f64..=1.0, seed: u64
        ) {
            let s = generate_random_bdh(n, p, seed).unwrap();
            prop_assert!(s.validate().is_ok());
            let g = apply_sequence(&s).unwrap();
            prop_assert!(g.is_connected());
            for (a, b) in g.edges() {
                prop_assert_ne!(g.shore_of(a), g.shore_of(b));
                prop_assert!(g.has_edge(b, a));
            }
            for u in g.vertices() {
                prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            }
            prop_assert_eq!(g.shores(), &s.shores()[..]);
        }

        #[test]
        fn false_twin_copies_neighborhood(n in 3usize..30, seed: u64) {
            let s = generate_random_bdh(n, 0.6, seed).unwrap();
            for (pos, step) in s.steps.iter().enumerate() {
                if step.kind != StepKind::FalseTwin {
                    continue;
                }
                let gi = intermediate_graph(&s, pos + 2).unwrap();
                prop_assert_eq!(gi.neighbors(step.vertex), gi.neighbors(step.anchor));
                prop_assert!(!gi.has_edge(step.vertex, step.anchor));
            }
        }
    }
}
