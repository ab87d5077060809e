//! Simple undirected graphs, degree sequences and the named families.

use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`, stored as one adjacency
/// bitset row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder { what: "graph", n });
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set(u, v);
        self.set(v, u);
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v))))
    }

    /// Degrees indexed by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Adds a new vertex adjacent to every vertex whose bit is set in `mask`.
    /// Only valid for orders below 64.
    pub(crate) fn extend_with_mask(&self, mask: u64) -> Graph {
        debug_assert!(self.n < 64);
        let n = self.n + 1;
        let mut g = Graph {
            n,
            words: 1,
            bits: vec![0; n],
        };
        g.bits[..self.n].copy_from_slice(&self.bits);
        for v in 0..self.n {
            if (mask >> v) & 1 == 1 {
                g.set(v, self.n);
                g.set(self.n, v);
            }
        }
        g
    }

    /// True iff the graph has a single connected component.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.n
    }

    /// Threshold test by peeling: repeatedly delete an isolated or a
    /// dominating vertex of the remaining graph.
    pub fn is_threshold(&self) -> bool {
        let mut alive = vec![true; self.n];
        let mut degree = self.degrees();
        let mut remaining = self.n;
        while remaining > 0 {
            let pick = (0..self.n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] == remaining - 1));
            let Some(v) = pick else {
                return false;
            };
            alive[v] = false;
            remaining -= 1;
            for u in self.neighbors(v) {
                if alive[u] {
                    degree[u] -= 1;
                }
            }
        }
        true
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder { what: "path", n });
        }
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidOrder { what: "cycle", n });
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder {
                what: "complete graph",
                n,
            });
        }
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
    }

    /// Star with centre 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder { what: "star", n });
        }
        Graph::from_edges(n, (1..n).map(|v| (0, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex degrees sorted nonincreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Validates a nonincreasing sequence with even sum.
    pub fn new(d: Vec<usize>) -> Result<Self> {
        if d.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "degree sequence {d:?} is not nonincreasing"
            )));
        }
        if d.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::InvalidArgument(format!("degree sequence {d:?} has odd sum")));
        }
        Ok(DegreeSequence(d))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `d*_i = |{j : d_j >= i}|` for `i = 1..=n`, always of length `n`.
    pub fn conjugate(&self) -> ConjugateDegreeSequence {
        ConjugateDegreeSequence(conjugate_of(&self.0))
    }
}

/// Transpose of the Ferrers diagram, truncated or zero-padded to the input length.
pub(crate) fn conjugate_of(d: &[usize]) -> Vec<usize> {
    (1..=d.len()).map(|i| d.iter().filter(|&&dj| dj >= i).count()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugateDegreeSequence(Vec<usize>);

impl ConjugateDegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugating again over the same window recovers the degree sequence.
    pub fn conjugate(&self) -> Vec<usize> {
        conjugate_of(&self.0)
    }
}
