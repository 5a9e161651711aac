//! BDH recognition by greedy pruning.
//!
//! Each round removes the lowest-indexed pending vertex; if there is none,
//! it removes the higher-indexed member of the first false-twin pair found
//! in ascending index order. A connected bipartite graph is BDH exactly when
//! this process reaches a single edge. The removals, reversed, form a
//! construction sequence.

use std::collections::{BTreeSet, HashMap};

use crate::bigraph::{
    BipartiteGraph, ConstructionSequence, ConstructionStep, Shore, VertexId,
};
use crate::error::RecognitionError;

/// An accepted graph: a construction sequence over relabeled vertices plus
/// the relabeling itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognized {
    pub sequence: ConstructionSequence,
    /// `relabel[i]` is the input vertex that became `v(i+1)` in the sequence.
    pub relabel: Vec<VertexId>,
}

impl Recognized {
    /// Input vertex for a sequence vertex.
    pub fn original(&self, v: VertexId) -> VertexId {
        self.relabel[v.index()]
    }

    /// Sequence vertex for an input vertex.
    pub fn inverse(&self) -> Vec<VertexId> {
        let mut inv = vec![VertexId(0); self.relabel.len()];
        for (i, &orig) in self.relabel.iter().enumerate() {
            inv[orig.index()] = VertexId::new(i);
        }
        inv
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    Accepted(Recognized),
    /// No pending vertex and no twin pair remained. `remaining` is the
    /// vertex set of the stuck induced subgraph.
    Rejected { remaining: Vec<VertexId> },
}

impl RecognitionResult {
    pub fn is_accepted(&self) -> bool {
        matches!(self, RecognitionResult::Accepted(_))
    }
}

struct Pruner<'g> {
    g: &'g BipartiteGraph,
    adj: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    alive_count: usize,
    pending: BTreeSet<VertexId>,
}

impl<'g> Pruner<'g> {
    fn new(g: &'g BipartiteGraph) -> Self {
        let adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).to_vec()).collect();
        let pending = g.vertices().filter(|&v| adj[v.index()].len() == 1).collect();
        Pruner {
            g,
            adj,
            alive: vec![true; g.n()],
            alive_count: g.n(),
            pending,
        }
    }

    fn remove(&mut self, v: VertexId) {
        self.alive[v.index()] = false;
        self.alive_count -= 1;
        self.pending.remove(&v);
        for u in std::mem::take(&mut self.adj[v.index()]) {
            let list = &mut self.adj[u.index()];
            if let Ok(pos) = list.binary_search(&v) {
                list.remove(pos);
            }
            if list.len() == 1 {
                self.pending.insert(u);
            } else {
                self.pending.remove(&u);
            }
        }
    }

    /// First vertex (ascending) that has an earlier twin, with that twin.
    fn find_twin(&self) -> Option<(VertexId, VertexId)> {
        // The map hashes the sorted list, equality then compares it in full.
        let mut seen: HashMap<(Shore, &[VertexId]), VertexId> = HashMap::new();
        for v in self.g.vertices().filter(|v| self.alive[v.index()]) {
            let key = (self.g.shore_of(v), self.adj[v.index()].as_slice());
            if let Some(&u) = seen.get(&key) {
                return Some((v, u));
            }
            seen.insert(key, v);
        }
        None
    }

    fn next_removal(&self) -> Option<ConstructionStep> {
        if let Some(&v) = self.pending.iter().next() {
            let anchor = self.adj[v.index()][0];
            return Some(ConstructionStep::pending(v, anchor));
        }
        self.find_twin()
            .map(|(v, anchor)| ConstructionStep::twin(v, anchor))
    }
}

/// Recognizes a connected bipartite graph as BDH, returning a construction
/// sequence for it, or the stuck vertex set when it is not BDH.
pub fn extract_pruning_sequence(
    g: &BipartiteGraph,
) -> Result<RecognitionResult, RecognitionError> {
    match g.n() {
        0 => return Err(RecognitionError::Empty),
        1 => return Err(RecognitionError::SingleVertex),
        _ => {}
    }
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }

    let mut pruner = Pruner::new(g);
    let mut removed = Vec::with_capacity(g.n() - 2);
    while pruner.alive_count > 2 {
        match pruner.next_removal() {
            Some(step) => {
                pruner.remove(step.vertex);
                removed.push(step);
            }
            None => {
                let remaining = g.vertices().filter(|v| pruner.alive[v.index()]).collect();
                return Ok(RecognitionResult::Rejected { remaining });
            }
        }
    }

    // The two survivors are adjacent since pruning preserves connectivity.
    let mut last: Vec<VertexId> = g.vertices().filter(|v| pruner.alive[v.index()]).collect();
    last.sort_by_key(|&v| (g.shore_of(v), v));
    let (first, second) = (last[0], last[1]);

    let mut relabel = Vec::with_capacity(g.n());
    relabel.push(first);
    relabel.push(second);
    relabel.extend(removed.iter().rev().map(|s| s.vertex));
    let mut new_id = vec![VertexId(0); g.n()];
    for (i, &orig) in relabel.iter().enumerate() {
        new_id[orig.index()] = VertexId::new(i);
    }

    let mut steps = Vec::with_capacity(g.n() - 1);
    steps.push(ConstructionStep::pending(VertexId(1), VertexId(0)));
    for s in removed.iter().rev() {
        steps.push(ConstructionStep {
            vertex: new_id[s.vertex.index()],
            kind: s.kind,
            anchor: new_id[s.anchor.index()],
        });
    }
    let sequence = ConstructionSequence::new(g.shore_of(first), steps);
    debug_assert!(sequence.validate().is_ok());
    Ok(RecognitionResult::Accepted(Recognized { sequence, relabel }))
}

pub fn is_bdh(g: &BipartiteGraph) -> Result<bool, RecognitionError> {
    Ok(extract_pruning_sequence(g)?.is_accepted())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::{apply_sequence, fixtures, generate_random_bdh};
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::from_edges_colored(
            n,
            edges
                .iter()
                .map(|&(a, b)| (VertexId::from_one_based(a), VertexId::from_one_based(b))),
        )
        .unwrap()
    }

    fn domino() -> BipartiteGraph {
        graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)])
    }

    fn cycle(len: usize) -> BipartiteGraph {
        let edges: Vec<_> = (1..=len).map(|i| (i, i % len + 1)).collect();
        graph(len, &edges)
    }

    fn complete(a: usize, b: usize) -> BipartiteGraph {
        let edges: Vec<_> = (1..=a)
            .flat_map(|x| (a + 1..=a + b).map(move |y| (x, y)))
            .collect();
        graph(a + b, &edges)
    }

    /// Edge set of the rebuilt graph mapped back to input labels.
    fn rebuilt_edges(r: &Recognized) -> Vec<(VertexId, VertexId)> {
        let h = apply_sequence(&r.sequence).unwrap();
        let mut e: Vec<_> = h
            .edges()
            .map(|(a, b)| {
                let (a, b) = (r.original(a), r.original(b));
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort();
        e
    }

    fn accepted(g: &BipartiteGraph) -> Recognized {
        match extract_pruning_sequence(g).unwrap() {
            RecognitionResult::Accepted(r) => r,
            other => panic!("expected acceptance, got {other:?}"),
        }
    }

    #[test]
    fn p4_is_accepted() {
        let g = graph(4, &[(1, 2), (2, 3), (3, 4)]);
        let r = accepted(&g);
        assert_eq!(r.sequence.n(), 4);
        assert_eq!(rebuilt_edges(&r), g.edges().collect::<Vec<_>>());
        assert_eq!(r.sequence.first_shore, Shore::X);
    }

    #[test]
    fn forbidden_graphs_are_rejected() {
        for g in [domino(), cycle(6), cycle(8)] {
            match extract_pruning_sequence(&g).unwrap() {
                RecognitionResult::Rejected { remaining } => assert_eq!(remaining.len(), g.n()),
                other => panic!("expected rejection, got {other:?}"),
            }
        }
    }

    #[test]
    fn stuck_certificate_is_the_hole() {
        // C6 with a pendant path attached: the pendant part prunes away.
        let g = graph(
            8,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 7), (7, 8)],
        );
        match extract_pruning_sequence(&g).unwrap() {
            RecognitionResult::Rejected { remaining } => {
                let names: Vec<_> = remaining.iter().map(|v| v.one_based()).collect();
                assert_eq!(names, vec![1, 2, 3, 4, 5, 6]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complete_bipartite_accepted() {
        for (a, b) in [(1, 1), (3, 3), (2, 5)] {
            let g = complete(a, b);
            let r = accepted(&g);
            assert_eq!(rebuilt_edges(&r), g.edges().collect::<Vec<_>>());
        }
        assert!(is_bdh(&complete(1, 1)).unwrap());
        assert!(!is_bdh(&domino()).unwrap());
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            extract_pruning_sequence(&BipartiteGraph::empty(vec![])),
            Err(RecognitionError::Empty)
        );
        assert_eq!(
            extract_pruning_sequence(&BipartiteGraph::empty(vec![Shore::X])),
            Err(RecognitionError::SingleVertex)
        );
        let g = graph(4, &[(1, 2), (3, 4)]);
        assert_eq!(is_bdh(&g), Err(RecognitionError::Disconnected));
    }

    #[test]
    fn deterministic_output() {
        let g = apply_sequence(&fixtures::k23()).unwrap();
        let a = extract_pruning_sequence(&g).unwrap();
        let b = extract_pruning_sequence(&g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hereditary_on_small_instances() {
        for seed in 0..30 {
            let s = generate_random_bdh(10, 0.5, seed).unwrap();
            let g = apply_sequence(&s).unwrap();
            let r = accepted(&g);
            // every prefix of the produced sequence is itself recognized
            for i in 2..=r.sequence.n() {
                let gi = apply_sequence(&r.sequence.prefix(i).unwrap()).unwrap();
                assert!(is_bdh(&gi).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip(n in 2usize..60, p in 0.0f64..=1.0, seed: u64) {
            let s = generate_random_bdh(n, p, seed).unwrap();
            let g = apply_sequence(&s).unwrap();
            let r = accepted(&g);
            prop_assert!(r.sequence.validate().is_ok());
            prop_assert_eq!(rebuilt_edges(&r), g.edges().collect::<Vec<_>>());
            let inv = r.inverse();
            for v in g.vertices() {
                prop_assert_eq!(r.original(inv[v.index()]), v);
            }
        }
    }
}
