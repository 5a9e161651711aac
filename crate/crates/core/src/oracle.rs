//! Brute-force reference implementations for small graphs.
//!
//! Nothing here is fast. Each routine is the most direct rendering of its
//! definition, and each refuses inputs beyond a fixed size.

use std::collections::BTreeSet;

use crate::bigraph::{BipartiteGraph, Shore, VertexId};
use crate::canonical::CanonicalLattice;
use crate::error::OracleError;

/// Largest smaller-shore size accepted by the biclique enumeration.
pub const MAX_ENUMERATION_SHORE: usize = 20;
/// Largest vertex count accepted by the forbidden-subgraph search.
pub const MAX_FORBIDDEN_SEARCH: usize = 14;

pub type ShorePair = (Vec<VertexId>, Vec<VertexId>);

/// Maximal bicliques as `(X, Y)` pairs of sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BicliqueSet {
    elements: BTreeSet<ShorePair>,
}

impl BicliqueSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in sorted order; indices into this order are used by
    /// [`hasse_bruteforce`].
    pub fn elements(&self) -> impl Iterator<Item = &ShorePair> {
        self.elements.iter()
    }

    pub fn contains(&self, pair: &ShorePair) -> bool {
        self.elements.contains(pair)
    }
}

fn common_neighbors(g: &BipartiteGraph, set: &[VertexId], side: Shore) -> Vec<VertexId> {
    g.vertices()
        .filter(|&u| g.shore_of(u) == side && set.iter().all(|&s| g.has_edge(s, u)))
        .collect()
}

/// All maximal bicliques via closures of subsets of the smaller shore.
pub fn enumerate_maximal_bicliques_bruteforce(
    g: &BipartiteGraph,
) -> Result<BicliqueSet, OracleError> {
    let xs = g.shore_vertices(Shore::X);
    let ys = g.shore_vertices(Shore::Y);
    let (small, small_side) = if xs.len() <= ys.len() {
        (xs, Shore::X)
    } else {
        (ys, Shore::Y)
    };
    if small.len() > MAX_ENUMERATION_SHORE {
        return Err(OracleError::GuardExceeded {
            what: "smaller shore",
            actual: small.len(),
            limit: MAX_ENUMERATION_SHORE,
        });
    }
    let mut elements = BTreeSet::new();
    for mask in 1u32..(1u32 << small.len()) {
        let subset: Vec<VertexId> = small
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        let other = common_neighbors(g, &subset, small_side.opposite());
        if other.is_empty() {
            continue;
        }
        let closed = common_neighbors(g, &other, small_side);
        let pair = match small_side {
            Shore::X => (closed, other),
            Shore::Y => (other, closed),
        };
        elements.insert(pair);
    }
    Ok(BicliqueSet { elements })
}

/// Independent maximality check of a candidate biclique.
pub fn is_maximal_biclique(g: &BipartiteGraph, x: &[VertexId], y: &[VertexId]) -> bool {
    if x.is_empty() || y.is_empty() {
        return false;
    }
    if x.iter().any(|&v| g.shore_of(v) != Shore::X) || y.iter().any(|&v| g.shore_of(v) != Shore::Y)
    {
        return false;
    }
    if !x.iter().all(|&a| y.iter().all(|&b| g.has_edge(a, b))) {
        return false;
    }
    let extendable = g.vertices().any(|u| {
        let (own, opposite) = match g.shore_of(u) {
            Shore::X => (x, y),
            Shore::Y => (y, x),
        };
        !own.contains(&u) && opposite.iter().all(|&w| g.has_edge(u, w))
    });
    !extendable
}

fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Cover pairs `(lower, higher)` of the X-inclusion order, as indices into
/// [`BicliqueSet::elements`].
pub fn hasse_bruteforce(bs: &BicliqueSet) -> BTreeSet<(usize, usize)> {
    let pairs: Vec<ShorePair> = bs.elements().cloned().collect();
    hasse_of_pairs(&pairs)
}

/// Transitive reduction of X-inclusion over arbitrary `(X, Y)` pairs with
/// sorted shores.
pub fn hasse_of_pairs(pairs: &[ShorePair]) -> BTreeSet<(usize, usize)> {
    let xs: Vec<&Vec<VertexId>> = pairs.iter().map(|(x, _)| x).collect();
    let below = |a: usize, b: usize| a != b && is_subset(xs[a], xs[b]) && xs[a] != xs[b];
    let k = xs.len();
    let mut covers = BTreeSet::new();
    for a in 0..k {
        for b in 0..k {
            if below(a, b) && !(0..k).any(|c| below(a, c) && below(c, b)) {
                covers.insert((a, b));
            }
        }
    }
    covers
}

/// Canonical lattice of a brute-force biclique set (no introducers).
pub fn canonical(bs: &BicliqueSet) -> CanonicalLattice {
    CanonicalLattice::from_parts(bs.elements().cloned().collect(), hasse_bruteforce(bs), None)
}

/// True iff every two members are disjoint or nested.
pub fn is_laminar(family: &[Vec<VertexId>]) -> bool {
    let sets: Vec<BTreeSet<VertexId>> = family.iter().map(|f| f.iter().copied().collect()).collect();
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            let disjoint = a.is_disjoint(b);
            let nested = a.is_subset(b) || b.is_subset(a);
            if !disjoint && !nested {
                return false;
            }
        }
    }
    true
}

/// Small pattern graph on bitmask adjacency.
struct Pattern {
    adj: Vec<u32>,
}

impl Pattern {
    fn cycle(len: usize) -> Self {
        let adj = (0..len)
            .map(|i| (1u32 << ((i + 1) % len)) | (1u32 << ((i + len - 1) % len)))
            .collect();
        Pattern { adj }
    }

    /// Hexagon a-b-c-d-e-f with chord b-e.
    fn domino() -> Self {
        let mut p = Pattern::cycle(6);
        p.adj[1] |= 1 << 4;
        p.adj[4] |= 1 << 1;
        p
    }

    fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.adj.iter().map(|a| a.count_ones()).collect();
        d.sort_unstable();
        d
    }
}

/// Is the graph on `verts` (given by bitmask adjacency `adj` restricted to
/// `mask`) isomorphic to `p`? Plain backtracking with degree pruning.
fn isomorphic(adj: &[u32], mask: u32, p: &Pattern) -> bool {
    let verts: Vec<usize> = (0..32).filter(|&i| mask & (1 << i) != 0).collect();
    if verts.len() != p.adj.len() {
        return false;
    }
    let deg = |v: usize| (adj[v] & mask).count_ones();
    let mut hd: Vec<u32> = verts.iter().map(|&v| deg(v)).collect();
    hd.sort_unstable();
    if hd != p.degrees() {
        return false;
    }
    let mut image = vec![usize::MAX; p.adj.len()];
    let mut used = 0u32;
    fn extend(
        i: usize,
        adj: &[u32],
        mask: u32,
        p: &Pattern,
        verts: &[usize],
        image: &mut [usize],
        used: &mut u32,
    ) -> bool {
        if i == p.adj.len() {
            return true;
        }
        let want = p.adj[i].count_ones();
        for &v in verts {
            if *used & (1 << v) != 0 || (adj[v] & mask).count_ones() != want {
                continue;
            }
            let consistent = (0..i).all(|j| {
                let in_pattern = p.adj[i] & (1 << j) != 0;
                let in_graph = adj[v] & (1 << image[j]) != 0;
                in_pattern == in_graph
            });
            if !consistent {
                continue;
            }
            image[i] = v;
            *used |= 1 << v;
            if extend(i + 1, adj, mask, p, verts, image, used) {
                return true;
            }
            *used &= !(1 << v);
        }
        false
    }
    extend(0, adj, mask, p, &verts, &mut image, &mut used)
}

/// BDH test by definition: connected, bipartite, and no induced domino or
/// induced even cycle of length at least six.
pub fn is_bdh_forbidden_subgraph(g: &BipartiteGraph) -> Result<bool, OracleError> {
    let n = g.n();
    if n > MAX_FORBIDDEN_SEARCH {
        return Err(OracleError::GuardExceeded {
            what: "vertices",
            actual: n,
            limit: MAX_FORBIDDEN_SEARCH,
        });
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, w| acc | (1 << w.index())))
        .collect();
    let domino = Pattern::domino();
    let cycles: Vec<Pattern> = (6..=n).step_by(2).map(Pattern::cycle).collect();
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 6 {
            continue;
        }
        if size == 6 && isomorphic(&adj, mask, &domino) {
            return Ok(false);
        }
        if size.is_multiple_of(2) && isomorphic(&adj, mask, &cycles[(size - 6) / 2]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ks: &[usize]) -> Vec<VertexId> {
        ks.iter().map(|&k| VertexId::from_one_based(k)).collect()
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::from_edges_colored(
            n,
            edges
                .iter()
                .map(|&(a, b)| (VertexId::from_one_based(a), VertexId::from_one_based(b))),
        )
        .unwrap()
    }

    fn cycle(len: usize) -> BipartiteGraph {
        let edges: Vec<_> = (1..=len).map(|i| (i, i % len + 1)).collect();
        graph(len, &edges)
    }

    fn p4() -> BipartiteGraph {
        graph(4, &[(1, 2), (2, 3), (3, 4)])
    }

    fn domino() -> BipartiteGraph {
        graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)])
    }

    #[test]
    fn p4_bicliques() {
        let bs = enumerate_maximal_bicliques_bruteforce(&p4()).unwrap();
        let got: Vec<_> = bs.elements().cloned().collect();
        assert_eq!(
            got,
            vec![(vs(&[1, 3]), vs(&[2])), (vs(&[3]), vs(&[2, 4]))]
        );
        // ({3},{2,4}) is index 1, below ({1,3},{2}) at index 0
        assert_eq!(hasse_bruteforce(&bs).into_iter().collect::<Vec<_>>(), vec![(1, 0)]);
    }

    #[test]
    fn complete_bipartite_has_one_biclique() {
        let mut edges = vec![];
        for x in 1..=3 {
            for y in 4..=7 {
                edges.push((x, y));
            }
        }
        let bs = enumerate_maximal_bicliques_bruteforce(&graph(7, &edges)).unwrap();
        assert_eq!(bs.len(), 1);
        assert!(bs.contains(&(vs(&[1, 2, 3]), vs(&[4, 5, 6, 7]))));
        assert!(hasse_bruteforce(&bs).is_empty());
    }

    #[test]
    fn hexagon_is_a_crown() {
        let g = cycle(6);
        let bs = enumerate_maximal_bicliques_bruteforce(&g).unwrap();
        assert_eq!(bs.len(), 6);
        let covers = hasse_bruteforce(&bs);
        assert_eq!(covers.len(), 6);
        let elems: Vec<_> = bs.elements().collect();
        for (i, (x, y)) in elems.iter().enumerate() {
            let degree = covers.iter().filter(|&&(a, b)| a == i || b == i).count();
            assert_eq!(degree, 2);
            assert!(x.len() == 1 || y.len() == 1);
        }
        // 6 nodes, 6 edges: a cycle, not a tree
        assert_ne!(covers.len(), bs.len() - 1);
    }

    #[test]
    fn bicliques_are_maximal() {
        for g in [p4(), cycle(6), cycle(8), domino()] {
            let bs = enumerate_maximal_bicliques_bruteforce(&g).unwrap();
            for (x, y) in bs.elements() {
                assert!(is_maximal_biclique(&g, x, y));
            }
        }
        assert!(!is_maximal_biclique(&p4(), &vs(&[1]), &vs(&[2])));
    }

    #[test]
    fn enumeration_guard() {
        let edges: Vec<_> = (1..=25)
            .flat_map(|x| (26..=50).map(move |y| (x, y)))
            .collect();
        let g = graph(50, &edges);
        assert!(matches!(
            enumerate_maximal_bicliques_bruteforce(&g),
            Err(OracleError::GuardExceeded { actual: 25, .. })
        ));
    }

    #[test]
    fn forbidden_subgraphs() {
        assert!(!is_bdh_forbidden_subgraph(&domino()).unwrap());
        assert!(!is_bdh_forbidden_subgraph(&cycle(6)).unwrap());
        assert!(!is_bdh_forbidden_subgraph(&cycle(8)).unwrap());
        assert!(is_bdh_forbidden_subgraph(&p4()).unwrap());
        // C8 plus a chord cutting off a hexagon
        let mut e: Vec<_> = (1..=8).map(|i| (i, i % 8 + 1)).collect();
        e.push((1, 6));
        assert!(!is_bdh_forbidden_subgraph(&graph(8, &e)).unwrap());
        // 4-cycle with pendant paths is fine
        let g = graph(6, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6)]);
        assert!(is_bdh_forbidden_subgraph(&g).unwrap());
        assert!(!is_bdh_forbidden_subgraph(&graph(4, &[(1, 2), (3, 4)])).unwrap());
        assert!(is_bdh_forbidden_subgraph(&cycle(16)).is_err());
    }

    #[test]
    fn laminarity() {
        assert!(is_laminar(&[vs(&[2]), vs(&[2, 4])]));
        assert!(!is_laminar(&[vs(&[1, 2]), vs(&[2, 3])]));
        assert!(is_laminar(&[]));
        assert!(is_laminar(&[vs(&[1]), vs(&[2]), vs(&[1, 2, 3])]));
    }
}
