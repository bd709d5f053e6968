//! Simple undirected graphs with bitset adjacency.

use crate::bits::BitWord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph<W: BitWord = u64> {
    adj: Vec<W>,
}

impl<W: BitWord> SimpleGraph<W> {
    pub fn empty(n: usize) -> Result<Self> {
        if n > W::BITS {
            return Err(Error::TooManyVertices { n, max: W::BITS });
        }
        Ok(Self { adj: vec![W::zero(); n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = W::low_mask(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Wraps raw adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_adjacency(adj: Vec<W>) -> Self {
        debug_assert!(adj.len() <= W::BITS);
        debug_assert!((0..adj.len()).all(|v| !adj[v].has(v)));
        Self { adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::BadParameters(format!("loop at {u}")));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn rows(&self) -> &[W] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> W {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].has(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Lowest-numbered vertex of minimum degree, with that degree.
    pub fn min_degree(&self) -> Option<(usize, usize)> {
        (0..self.n()).map(|v| (v, self.degree(v))).min_by_key(|&(v, d)| (d, v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| (self.adj[u] & W::above(u)).ones().map(move |v| (u, v)))
    }

    /// Subgraph induced on `vertices` (in the given order), relabeled to `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut adj = vec![W::zero(); vertices.len()];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                if a != b && self.has_edge(u, v) {
                    adj[a] = adj[a].with(b);
                }
            }
        }
        Self { adj }
    }

    /// Vertices reachable from `start` while staying inside `within`.
    /// `start` itself is included whether or not it lies in `within`.
    pub fn reach(&self, start: usize, within: W) -> W {
        let mut seen = W::bit(start);
        let mut frontier = seen;
        while !frontier.is_zero() {
            let mut next = W::zero();
            for v in frontier.ones() {
                next = next | self.adj[v];
            }
            next = next & within & !seen;
            seen = seen | next;
            frontier = next;
        }
        seen
    }
}
