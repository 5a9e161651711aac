use crate::bigraph::VertexId;

type Shores = (Vec<VertexId>, Vec<VertexId>);

/// Labeling-independent form of a Hasse diagram: bicliques sorted by their
/// sorted shores, covers as `(lower, higher)` index pairs into that order.
///
/// Two diagrams describe the same lattice iff their canonical forms are
/// equal, regardless of how biclique ids were assigned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLattice {
    pub bicliques: Vec<(Vec<VertexId>, Vec<VertexId>)>,
    pub covers: Vec<(usize, usize)>,
    /// `(vertex, biclique index)` sorted by vertex, when known.
    pub introducers: Option<Vec<(VertexId, usize)>>,
}

impl CanonicalLattice {
    /// Canonicalizes arbitrary parts. `covers` and `introducers` index into
    /// `bicliques` as given.
    pub fn from_parts(
        bicliques: Vec<(Vec<VertexId>, Vec<VertexId>)>,
        covers: impl IntoIterator<Item = (usize, usize)>,
        introducers: Option<Vec<(VertexId, usize)>>,
    ) -> Self {
        let mut keyed: Vec<(usize, Shores)> = bicliques
            .into_iter()
            .map(|(mut x, mut y)| {
                x.sort_unstable();
                y.sort_unstable();
                (x, y)
            })
            .enumerate()
            .collect();
        keyed.sort_by(|a, b| a.1.cmp(&b.1));
        let mut rank = vec![0; keyed.len()];
        for (new, (old, _)) in keyed.iter().enumerate() {
            rank[*old] = new;
        }
        let mut covers: Vec<_> = covers
            .into_iter()
            .map(|(lo, hi)| (rank[lo], rank[hi]))
            .collect();
        covers.sort_unstable();
        covers.dedup();
        let introducers = introducers.map(|list| {
            let mut list: Vec<_> = list.into_iter().map(|(v, b)| (v, rank[b])).collect();
            list.sort_unstable();
            list
        });
        CanonicalLattice {
            bicliques: keyed.into_iter().map(|(_, b)| b).collect(),
            covers,
            introducers,
        }
    }

    /// Renames every vertex through `f` and re-canonicalizes.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        let bicliques = self
            .bicliques
            .iter()
            .map(|(x, y)| (x.iter().map(|&v| f(v)).collect(), y.iter().map(|&v| f(v)).collect()))
            .collect();
        let introducers = self
            .introducers
            .as_ref()
            .map(|l| l.iter().map(|&(v, b)| (f(v), b)).collect());
        Self::from_parts(bicliques, self.covers.iter().copied(), introducers)
    }

    /// Same lattice, introducers dropped.
    pub fn without_introducers(mut self) -> Self {
        self.introducers = None;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ks: &[usize]) -> Vec<VertexId> {
        ks.iter().map(|&k| VertexId::from_one_based(k)).collect()
    }

    #[test]
    fn independent_of_input_order() {
        let a = CanonicalLattice::from_parts(
            vec![(vs(&[3, 1]), vs(&[2])), (vs(&[3]), vs(&[4, 2]))],
            [(1, 0)],
            None,
        );
        let b = CanonicalLattice::from_parts(
            vec![(vs(&[3]), vs(&[2, 4])), (vs(&[1, 3]), vs(&[2]))],
            [(0, 1)],
            None,
        );
        assert_eq!(a, b);
        assert_eq!(a.bicliques[0], (vs(&[1, 3]), vs(&[2])));
        assert_eq!(a.covers, vec![(1, 0)]);
    }
}
