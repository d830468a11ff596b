//! Compact simple-graph representation: one adjacency bit row per vertex.

use crate::error::{Error, Result};

/// Hard capacity: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on at most 64 vertices.
///
/// Row `v` of `adj` holds the open neighborhood N(v) as a bit mask over
/// vertex indices `0..order`. Rows are kept symmetric, loop-free, and zero
/// at positions `>= order`. The null graph (order 0) is admitted as a
/// recursion base case.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                requested: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            order: n,
            adj: vec![0; n],
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let full = low_bits(n);
        for v in 0..n {
            g.adj[v] = full & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Rows must be symmetric,
    /// loop-free and confined to the low `order` bits.
    pub(crate) fn from_rows(order: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), order);
        debug_assert!(adj.iter().all(|&row| row & !low_bits(order) == 0));
        debug_assert!((0..order).all(|v| adj[v] & bit(v) == 0));
        Graph { order, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u != v {
            self.adj[u] |= bit(v);
            self.adj[v] |= bit(u);
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] & bit(v) != 0
    }

    /// Open neighborhood N(v) as a bit mask.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Mask with one bit per vertex of the graph.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        low_bits(self.order)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for v in 0..self.order {
            let mut higher = self.adj[v] & !low_bits(v + 1);
            while higher != 0 {
                let u = higher.trailing_zeros() as usize;
                out.push((v, u));
                higher &= higher - 1;
            }
        }
        out
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            mask: self.adj[v] | bit(v),
            host_order: self.order,
        })
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.order)
            .map(|v| full & !self.adj[v] & !bit(v))
            .collect();
        Graph {
            order: self.order,
            adj,
        }
    }

    /// Disjoint union; vertices of `other` are re-indexed by offset `self.order`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order + other.order;
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                requested: n,
                max: MAX_ORDER,
            });
        }
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|row| row << self.order));
        Ok(Graph { order: n, adj })
    }

    /// Union plus all cross edges between the two vertex groups.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        let left = low_bits(self.order);
        let right = low_bits(g.order) & !left;
        for v in 0..self.order {
            g.adj[v] |= right;
        }
        for v in self.order..g.order {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Induced subgraph on V(G)∖S, survivors compacted to `0..n-|S|`
    /// preserving relative index order.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        if s.host_order != self.order {
            return Err(Error::HostMismatch {
                set_order: s.host_order,
                host_order: self.order,
            });
        }
        Ok(self.induced(self.full_mask() & !s.mask))
    }

    /// Induced subgraph on the vertices of `mask`, compacted in index order.
    pub(crate) fn induced(&self, mask: u64) -> Graph {
        let survivors: Vec<usize> = (0..self.order).filter(|&v| mask & bit(v) != 0).collect();
        let adj = survivors
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                for (new, &old) in survivors.iter().enumerate() {
                    if self.adj[v] & bit(old) != 0 {
                        row |= bit(new);
                    }
                }
                row
            })
            .collect();
        Graph {
            order: survivors.len(),
            adj,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.is_connected() && self.size() == self.order - 1
    }
}

/// A vertex subset of a host graph, as a fixed-width bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    mask: u64,
    host_order: usize,
}

impl VertexSet {
    pub fn new(mask: u64, host_order: usize) -> Result<Self> {
        if mask & !low_bits(host_order) != 0 {
            return Err(Error::InvalidVertexSet { order: host_order });
        }
        Ok(VertexSet { mask, host_order })
    }

    pub fn from_indices(indices: &[usize], host_order: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &v in indices {
            if v >= host_order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: host_order,
                });
            }
            mask |= bit(v);
        }
        Ok(VertexSet { mask, host_order })
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn host_order(&self) -> usize {
        self.host_order
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.host_order && self.mask & bit(v) != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut mask = self.mask;
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
}
