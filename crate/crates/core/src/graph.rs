//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` row per vertex, so vertex sets are plain bit masks
//! and every structural query is a handful of word operations. Graphs are
//! immutable once built; derived graphs (unions, shadows, subdivisions) are
//! new values.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// An undirected edge in canonical `(min, max)` form.
pub type Edge = (usize, usize);

/// Canonical form of an unordered pair.
#[inline]
pub fn canonical(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A set of vertex indices below [`MAX_VERTICES`], stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// The half-open index range `start..end`.
    pub fn range(start: usize, end: usize) -> Self {
        VertexSet(Self::full(end).0 & !Self::full(start.min(end)).0)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds bitset capacity");
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.0 &= !(1 << v);
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the sorted member sequences lexicographically, a proper
    /// prefix ordering first.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        // Whichever side lacks `d` is smaller only if it stops before `d`.
        if self.0 >> d & 1 == 1 {
            if other.0 >> d == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 >> d == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders as `[0,2,5]`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// A simple, loopless, undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    /// Builds a graph from unordered pairs, dropping duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange {
                    index: x,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && v < 64 && self.adj[u] >> v & 1 == 1
    }

    /// Raw adjacency rows, one mask per vertex.
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        self.edges_within(self.vertices())
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// The first edge inside `set`, if any.
    pub fn edge_inside(&self, set: VertexSet) -> Option<Edge> {
        set.iter().find_map(|u| {
            let hit = self.adj[u] & set.0;
            (hit != 0).then(|| canonical(u, hit.trailing_zeros() as usize))
        })
    }

    /// Edges with both endpoints in `set`, sorted by `(min, max)`.
    pub fn edges_within(&self, set: VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in set.iter() {
            let higher = self.adj[u] & set.0 & !VertexSet::full(u + 1).0;
            out.extend(VertexSet(higher).iter().map(|v| (u, v)));
        }
        out
    }

    /// Number of edges with both endpoints in `set`.
    pub fn count_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|u| (self.adj[u] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Places `other` after `self`, shifting its indices by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let offset = self.vertex_count();
        let mut g = Graph::empty(offset + other.vertex_count())?;
        g.adj[..offset].copy_from_slice(&self.adj);
        for (u, v) in other.edges() {
            g.add_edge(u + offset, v + offset)?;
        }
        Ok(g)
    }

    /// Shadow graph: vertex `n + i` is a twin of `i`, joined to the
    /// neighbours of `i`.
    pub fn shadow(&self) -> Result<Graph> {
        let n = self.vertex_count();
        let mut g = Graph::empty(2 * n)?;
        g.adj[..n].copy_from_slice(&self.adj);
        for i in 0..n {
            for j in self.neighbors(i).iter() {
                g.add_edge(n + i, j)?;
            }
        }
        Ok(g)
    }

    /// Replaces each listed edge `(u, v)` by a path `u - w - v` through a
    /// fresh vertex `w`; fresh vertices are numbered from `vertex_count()`
    /// in list order.
    pub fn subdivide_edges(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let e = canonical(u, v);
            if !self.has_edge(e.0, e.1) {
                return Err(Error::EdgeNotFound(e.0, e.1));
            }
            if seen.contains(&e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            seen.push(e);
        }
        let mut g = Graph::empty(n + edges.len())?;
        g.adj[..n].copy_from_slice(&self.adj);
        for (k, &(u, v)) in seen.iter().enumerate() {
            let w = n + k;
            g.adj[u] &= !(1 << v);
            g.adj[v] &= !(1 << u);
            g.add_edge(u, w)?;
            g.add_edge(w, v)?;
        }
        Ok(g)
    }

    /// A 2-colouring if one exists. BFS from the lowest unvisited vertex of
    /// each component; that vertex goes to side 0.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for v in self.neighbors(u).iter() {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side1: VertexSet = (0..n).filter(|&v| colour[v] == Some(true)).collect();
        Some((self.vertices().difference(side1), side1))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Number of triangles containing `v`, i.e. edges among its neighbours.
    pub fn triangles_through(&self, v: usize) -> Result<usize> {
        if v >= self.vertex_count() {
            return Err(Error::IndexOutOfRange {
                index: v,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(self.count_within(self.neighbors(v)))
    }

    /// Subgraph induced by `set`, relabelled to `0..set.len()` in index order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let members = set.to_vec();
        let mut g = Graph {
            adj: vec![0; members.len()],
        };
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Checks the symmetric/loopless/in-range invariants.
    pub fn validate(&self) -> bool {
        let n = self.vertex_count();
        let mask = VertexSet::full(n).0;
        (0..n).all(|u| {
            self.adj[u] & !mask == 0
                && self.adj[u] >> u & 1 == 0
                && self.neighbors(u).iter().all(|v| self.adj[v] >> u & 1 == 1)
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges())
            .finish()
    }
}
