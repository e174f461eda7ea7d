//! Small labeled simple graphs stored as adjacency bitmasks.
//!
//! Vertices are `0..n` with `1 ≤ n ≤ 64`; row `v` of the adjacency matrix is
//! a `u64` whose bit `u` is set iff `uv` is an edge.

mod closure;
mod connectivity;
mod hamilton;
mod witness;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

pub use closure::closure;
pub use connectivity::{cut_vertices, is_biconnected, is_connected};
pub use hamilton::{circumference, is_hamiltonian};
pub use witness::{build_cnk, build_exception_graph};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of set bits, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    /// Graph with exactly the given edges. Repeated pairs are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// Decodes the upper triangle from `mask`, pairs `(u, v)` with `u < v`
    /// taken in lexicographic order as bits `0, 1, …`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> i & 1 == 1 {
                    g.insert(u, v);
                }
                i += 1;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Adds `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge { u, v, n: self.n });
        }
        let fresh = !self.has_edge(u, v);
        self.insert(u, v);
        Ok(fresh)
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees indexed by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let all = full_mask(self.n);
        (0..self.n).all(|v| self.adj[v] | bit(v) == all)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees()).expect("degrees of a simple graph are < n")
    }

    /// Serializes as `n <count>` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Inverse of [`to_edge_list`](Self::to_edge_list). Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `n <count>` header".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => count
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex count {count:?}")))?,
            _ => return Err(Error::Parse(format!("bad header {header:?}"))),
        };
        let mut g = Self::empty(n)?;
        for line in lines {
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad edge line {line:?}")))
                })
                .collect::<Result<_>>()?;
            match ends.as_slice() {
                &[u, v] => {
                    g.add_edge(u, v)?;
                }
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SimpleGraph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}
