use crate::error::{Error, Result};

/// Undirected graph with non-negative edge weights.
///
/// Each edge is stored in both endpoint lists; adjacency lists are sorted by
/// neighbor id.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    adj: Vec<Vec<(usize, f64)>>,
    weighted_degree: Vec<f64>,
    edge_count: usize,
}

impl WeightedGraph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// are merged by summing their weights.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut list = Vec::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) references a vertex outside [0, {n})"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop on vertex {u}")));
            }
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has invalid weight {w}"
                )));
            }
            list.push((u.min(v), u.max(v), w));
        }
        list.sort_unstable_by_key(|&(u, v, _)| (u, v));

        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        let mut i = 0;
        while i < list.len() {
            let (u, v, mut w) = list[i];
            i += 1;
            while i < list.len() && list[i].0 == u && list[i].1 == v {
                w += list[i].2;
                i += 1;
            }
            adj[u].push((v, w));
            adj[v].push((u, w));
            edge_count += 1;
        }
        for row in &mut adj {
            row.sort_unstable_by_key(|&(v, _)| v);
        }
        let weighted_degree = adj
            .iter()
            .map(|row| row.iter().map(|&(_, w)| w).sum())
            .collect();
        Ok(Self {
            adj,
            weighted_degree,
            edge_count,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[(usize, f64)] {
        &self.adj[u]
    }

    /// Sum of the weights of edges incident to `u`.
    pub fn weighted_degree(&self, u: usize) -> f64 {
        self.weighted_degree[u]
    }

    /// Each undirected edge once, as `(u, v, w)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn total_weight(&self) -> f64 {
        self.edges().map(|(_, _, w)| w).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_duplicates_in_either_orientation() {
        let g = WeightedGraph::from_edges(3, [(0, 1, 0.5), (1, 0, 0.5), (1, 2, 0.25)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(0), &[(1, 1.0)]);
        assert_eq!(g.neighbors(1), &[(0, 1.0), (2, 0.25)]);
        assert_eq!(g.weighted_degree(1), 1.25);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(WeightedGraph::from_edges(2, [(0, 0, 1.0)]).is_err());
        assert!(WeightedGraph::from_edges(2, [(0, 1, -1.0)]).is_err());
        assert!(WeightedGraph::from_edges(2, [(0, 2, 1.0)]).is_err());
        assert!(WeightedGraph::from_edges(2, [(0, 1, f64::NAN)]).is_err());
    }
}
