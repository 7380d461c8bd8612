use serde::Serialize;

use crate::{Error, Result};

/// An undirected multigraph on `0..n`; loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    simple: bool,
    /// Non-loop neighbours of each vertex, repeated by multiplicity.
    neighbours: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

/// Sizes of a vertex set and of its two boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundarySummary {
    pub subset_size: usize,
    pub vertex_boundary: usize,
    pub edge_boundary: usize,
}

impl Multigraph {
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::InvalidInput(format!("edge ({a}, {b}) leaves the vertex range 0..{n}")));
        }
        Ok(Self::from_edges_unchecked(n, edges))
    }

    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let mut neighbours = vec![Vec::new(); n];
        let mut degree = vec![0; n];
        for &(a, b) in &edges {
            degree[a] += 1;
            degree[b] += 1;
            if a != b {
                neighbours[a].push(b);
                neighbours[b].push(a);
            }
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        let simple = sorted.iter().all(|&(a, b)| a != b) && sorted.windows(2).all(|w| w[0] != w[1]);
        Self { n, edges, simple, neighbours, degree }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(a, b)` with `a <= b`, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// No loops and no repeated edges.
    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = *self.degree.first()?;
        self.degree.iter().all(|&k| k == first).then_some(first)
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbours[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Boundary sizes of the vertex set `subset` (duplicates ignored).
    /// Parallel edges count with multiplicity; loops never count.
    pub fn boundary_summary(&self, subset: &[usize]) -> Result<BoundarySummary> {
        let mut inside = vec![false; self.n];
        for &v in subset {
            if v >= self.n {
                return Err(Error::InvalidInput(format!("vertex {v} is outside 0..{}", self.n)));
            }
            inside[v] = true;
        }
        let mut touched = vec![false; self.n];
        let mut edge_boundary = 0;
        for v in (0..self.n).filter(|&v| inside[v]) {
            for &w in &self.neighbours[v] {
                if !inside[w] {
                    edge_boundary += 1;
                    touched[w] = true;
                }
            }
        }
        Ok(BoundarySummary {
            subset_size: inside.iter().filter(|&&b| b).count(),
            vertex_boundary: touched.iter().filter(|&&b| b).count(),
            edge_boundary,
        })
    }
}
