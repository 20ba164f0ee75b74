//! Graph construction and the combinatorial Laplacian L = D - A.
//!
//! Vertices are 0-based inside the library; the edge-list file format
//! (see [`crate::io`]) is 1-based.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graph family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Complete,
    Star,
    Custom,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// An undirected, connected, simple graph.
///
/// Immutable after construction: connectivity, duplicate edges and
/// self-loops are all checked by the constructors.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>, // 0-based, i < j, sorted, unique
    max_degree: usize,
    family: Family,
}

impl Graph {
    /// Path graph with edges {i, i+1}.
    pub fn path(n: usize) -> Result<Self> {
        check_min_size(n)?;
        let edges = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::finish(n, edges, Family::Path)
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Result<Self> {
        check_min_size(n)?;
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::finish(n, edges, Family::Complete)
    }

    /// Star graph: vertex 0 is the center, joined to all others.
    pub fn star(n: usize) -> Result<Self> {
        check_min_size(n)?;
        let edges = (1..n).map(|j| (0, j)).collect();
        Self::finish(n, edges, Family::Star)
    }

    /// Builds a named family.
    pub fn from_family(family: Family, n: usize) -> Result<Self> {
        match family {
            Family::Path => Self::path(n),
            Family::Complete => Self::complete(n),
            Family::Star => Self::star(n),
            Family::Custom => Err(Error::Parameter(
                "custom family requires an explicit edge list".into(),
            )),
        }
    }

    /// Builds a custom graph from a 0-based edge list.
    ///
    /// Rejects self-loops, out-of-range endpoints, duplicate edges and
    /// disconnected graphs.
    pub fn custom(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_min_size(n)?;
        let mut normalized = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            if i == j {
                return Err(Error::InvalidEdge {
                    i: i + 1,
                    j: j + 1,
                    reason: "self-loop".into(),
                });
            }
            if i >= n || j >= n {
                return Err(Error::InvalidEdge {
                    i: i + 1,
                    j: j + 1,
                    reason: format!("vertex out of range 1..={n}"),
                });
            }
            normalized.push((i.min(j), i.max(j)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge {
                i: w[0].0 + 1,
                j: w[0].1 + 1,
                reason: "duplicate edge".into(),
            });
        }
        Self::finish(n, normalized, Family::Custom)
    }

    fn finish(n: usize, edges: Vec<(usize, usize)>, family: Family) -> Result<Self> {
        let mut degree = vec![0usize; n];
        for &(i, j) in &edges {
            degree[i] += 1;
            degree[j] += 1;
        }
        check_connected(n, &edges)?;
        let max_degree = degree.iter().copied().max().unwrap_or(0);
        Ok(Self {
            n,
            edges,
            max_degree,
            family,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 0-based edges, sorted, with i < j.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Dense combinatorial Laplacian L = D - A.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let mut l = DMatrix::zeros(self.n, self.n);
        for &(i, j) in &self.edges {
            l[(i, i)] += 1.0;
            l[(j, j)] += 1.0;
            l[(i, j)] -= 1.0;
            l[(j, i)] -= 1.0;
        }
        l
    }
}

fn check_min_size(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidSize(format!("need at least 2 vertices, got {n}")))
    } else {
        Ok(())
    }
}

/// Breadth-first connectivity check; on failure names one vertex from each
/// of two different components (1-based, matching the file format).
fn check_connected(n: usize, edges: &[(usize, usize)]) -> Result<()> {
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    match seen.iter().position(|&s| !s) {
        None => Ok(()),
        Some(unreached) => Err(Error::Disconnected {
            a: 1,
            b: unreached + 1,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_3() {
        let g = Graph::path(3).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn complete_3_is_a_triangle() {
        let g = Graph::complete(3).unwrap();
        assert_eq!(g.edges().len(), 3);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn star_4() {
        let g = Graph::star(4).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn rejects_tiny_graphs() {
        assert!(matches!(Graph::path(1), Err(Error::InvalidSize(_))));
        assert!(matches!(Graph::complete(0), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn custom_single_edge() {
        let g = Graph::custom(2, &[(0, 1)]).unwrap();
        assert_eq!(g.max_degree(), 1);
        assert_eq!(g.family(), Family::Custom);
    }

    #[test]
    fn custom_cycle_4() {
        let g = Graph::custom(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.edges().len(), 4);
    }

    #[test]
    fn disconnected_names_a_vertex_in_each_component() {
        let err = Graph::custom(3, &[(0, 1)]).unwrap_err();
        match err {
            Error::Disconnected { a, b } => {
                assert_eq!(a, 1);
                assert_eq!(b, 3); // vertex 3 is isolated
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(matches!(
            Graph::custom(3, &[(0, 0), (0, 1), (1, 2)]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            Graph::custom(3, &[(0, 1), (1, 0), (1, 2)]),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn laplacian_p2() {
        let l = Graph::path(2).unwrap().laplacian();
        assert_eq!(l[(0, 0)], 1.0);
        assert_eq!(l[(0, 1)], -1.0);
        assert_eq!(l[(1, 0)], -1.0);
        assert_eq!(l[(1, 1)], 1.0);
    }

    #[test]
    fn laplacian_k3() {
        let l = Graph::complete(3).unwrap().laplacian();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 2.0 } else { -1.0 };
                assert_eq!(l[(i, j)], want);
            }
        }
    }

    #[test]
    fn laplacian_p3_by_hand() {
        // D - A assembled by hand for the 3-vertex path.
        let l = Graph::path(3).unwrap().laplacian();
        let want = [[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l[(i, j)], want[i][j]);
            }
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let g = Graph::custom(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let l = g.laplacian();
        for i in 0..5 {
            let s: f64 = (0..5).map(|j| l[(i, j)]).sum();
            assert_eq!(s, 0.0);
        }
    }
}
