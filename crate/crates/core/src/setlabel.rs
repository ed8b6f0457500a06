//! Sum sets and the set-indexer conditions on explicit labelings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// Largest element an [`IntegerSet`] may hold. Any two elements then sum
/// without overflowing `u64`.
pub const MAX_ELEMENT: u64 = i64::MAX as u64;

/// A finite, non-empty set of non-negative integers, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    /// Builds a set from arbitrary elements, sorting and removing duplicates.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptySet);
        }
        v.sort_unstable();
        v.dedup();
        if let Some(&big) = v.last().filter(|&&x| x > MAX_ELEMENT) {
            return Err(Error::LabelTooLarge(big));
        }
        Ok(IntegerSet(v))
    }

    pub fn singleton(x: u64) -> Result<Self> {
        Self::new([x])
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    /// The set-indexing number.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Debug for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// `A + B = { a + b : a in A, b in B }`.
pub fn sumset(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    let mut sums = Vec::with_capacity(a.len() * b.len());
    for &x in &a.0 {
        for &y in &b.0 {
            sums.push(x + y);
        }
    }
    sums.sort_unstable();
    sums.dedup();
    IntegerSet(sums)
}

/// A vertex labeling `f`. It may be partial until checked against a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labeling {
    labels: BTreeMap<usize, IntegerSet>,
}

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `0..n` from an indexed list.
    pub fn from_vec(labels: Vec<IntegerSet>) -> Self {
        Labeling {
            labels: labels.into_iter().enumerate().collect(),
        }
    }

    pub fn set(&mut self, v: usize, label: IntegerSet) {
        self.labels.insert(v, label);
    }

    pub fn get(&self, v: usize) -> Result<&IntegerSet> {
        self.labels.get(&v).ok_or(Error::MissingLabel(v))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &IntegerSet)> {
        self.labels.iter().map(|(&v, s)| (v, s))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Fails with the lowest unlabelled vertex of `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        match (0..g.vertex_count()).find(|v| !self.labels.contains_key(v)) {
            Some(v) => Err(Error::MissingLabel(v)),
            None => Ok(()),
        }
    }

    /// Vertices whose label has more than one element.
    pub fn non_singleton_vertices(&self) -> VertexSet {
        self.iter()
            .filter(|(_, s)| !s.is_singleton())
            .map(|(v, _)| v)
            .collect()
    }
}

/// `f+` on every edge, keyed by canonical edge.
pub fn induced_edge_labels(g: &Graph, f: &Labeling) -> Result<BTreeMap<Edge, IntegerSet>> {
    f.check_total(g)?;
    g.edges()
        .into_iter()
        .map(|(u, v)| Ok(((u, v), sumset(f.get(u)?, f.get(v)?))))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailureKind {
    VertexCollision,
    EdgeCollision,
    WeakConditionViolated,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::VertexCollision => "VertexCollision",
            FailureKind::EdgeCollision => "EdgeCollision",
            FailureKind::WeakConditionViolated => "WeakConditionViolated",
        })
    }
}

/// One violated condition with the elements involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    VertexCollision(usize, usize),
    EdgeCollision(Edge, Edge),
    WeakConditionViolated(Edge),
}

impl Failure {
    pub fn kind(&self) -> FailureKind {
        match self {
            Failure::VertexCollision(..) => FailureKind::VertexCollision,
            Failure::EdgeCollision(..) => FailureKind::EdgeCollision,
            Failure::WeakConditionViolated(_) => FailureKind::WeakConditionViolated,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::VertexCollision(u, v) => write!(f, "VertexCollision vertices {u} {v}"),
            Failure::EdgeCollision(a, b) => {
                write!(f, "EdgeCollision edges ({},{}) ({},{})", a.0, a.1, b.0, b.1)
            }
            Failure::WeakConditionViolated(e) => {
                write!(f, "WeakConditionViolated edge ({},{})", e.0, e.1)
            }
        }
    }
}

/// Outcome of a labeling check; lists every failure found.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

fn colliding_pairs<K: Copy>(groups: impl IntoIterator<Item = Vec<K>>) -> Vec<(K, K)> {
    let mut out = Vec::new();
    for members in groups {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                out.push((members[i], members[j]));
            }
        }
    }
    out
}

fn group_by_label<'a, K: Copy + Ord>(
    items: impl Iterator<Item = (K, &'a IntegerSet)>,
) -> Vec<Vec<K>> {
    let mut map: HashMap<&IntegerSet, Vec<K>> = HashMap::new();
    for (k, s) in items {
        map.entry(s).or_default().push(k);
    }
    let mut groups: Vec<Vec<K>> = map.into_values().filter(|g| g.len() > 1).collect();
    for g in &mut groups {
        g.sort();
    }
    groups.sort();
    groups
}

fn iasi_failures(
    g: &Graph,
    f: &Labeling,
    edge_labels: &BTreeMap<Edge, IntegerSet>,
) -> Vec<Failure> {
    let vertex_groups = group_by_label((0..g.vertex_count()).map(|v| (v, &f.labels[&v])));
    let edge_groups = group_by_label(edge_labels.iter().map(|(&e, s)| (e, s)));
    colliding_pairs(vertex_groups)
        .into_iter()
        .map(|(u, v)| Failure::VertexCollision(u, v))
        .chain(
            colliding_pairs(edge_groups)
                .into_iter()
                .map(|(a, b)| Failure::EdgeCollision(a, b)),
        )
        .collect()
}

/// Injectivity of `f` on vertices and of `f+` on edges.
pub fn verify_iasi(g: &Graph, f: &Labeling) -> Result<Verdict> {
    let edge_labels = induced_edge_labels(g, f)?;
    Ok(Verdict {
        failures: iasi_failures(g, f, &edge_labels),
    })
}

/// The IASI conditions plus `|f+(uv)| = max(|f(u)|, |f(v)|)` on every edge.
pub fn verify_weak(g: &Graph, f: &Labeling) -> Result<Verdict> {
    let edge_labels = induced_edge_labels(g, f)?;
    let mut failures = iasi_failures(g, f, &edge_labels);
    for (&(u, v), s) in &edge_labels {
        if s.len() != f.labels[&u].len().max(f.labels[&v].len()) {
            failures.push(Failure::WeakConditionViolated((u, v)));
        }
    }
    Ok(Verdict { failures })
}

/// Edges whose induced label is a singleton, in canonical order.
pub fn mono_edges(g: &Graph, f: &Labeling) -> Result<Vec<Edge>> {
    Ok(induced_edge_labels(g, f)?
        .into_iter()
        .filter(|(_, s)| s.is_singleton())
        .map(|(e, _)| e)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> IntegerSet {
        IntegerSet::new(v.iter().copied()).unwrap()
    }

    fn lab(v: &[&[u64]]) -> Labeling {
        Labeling::from_vec(v.iter().map(|x| s(x)).collect())
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn integer_set_normalises() {
        assert_eq!(s(&[5, 1, 5, 3]).elements(), &[1, 3, 5]);
        assert_eq!(IntegerSet::new([]), Err(Error::EmptySet));
        assert_eq!(
            IntegerSet::new([u64::MAX]),
            Err(Error::LabelTooLarge(u64::MAX))
        );
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&s(&[0]), &s(&[2, 5])), s(&[2, 5]));
        assert_eq!(sumset(&s(&[1, 2]), &s(&[3, 4])), s(&[4, 5, 6]));
        assert_eq!(sumset(&s(&[1]), &s(&[3])), s(&[4]));
        assert_eq!(sumset(&s(&[MAX_ELEMENT]), &s(&[MAX_ELEMENT])).len(), 1);
    }

    #[test]
    fn induced_labels() {
        let m = induced_edge_labels(&path(2), &lab(&[&[1], &[2, 3]])).unwrap();
        assert_eq!(m[&(0, 1)], s(&[3, 4]));
        let m = induced_edge_labels(&triangle(), &lab(&[&[1], &[2], &[3]])).unwrap();
        assert_eq!(m[&(0, 1)], s(&[3]));
        assert_eq!(m[&(0, 2)], s(&[4]));
        assert_eq!(m[&(1, 2)], s(&[5]));
        let edgeless = Graph::empty(3).unwrap();
        assert!(induced_edge_labels(&edgeless, &lab(&[&[1], &[2], &[3]]))
            .unwrap()
            .is_empty());
        assert_eq!(
            induced_edge_labels(&triangle(), &lab(&[&[1], &[2]])),
            Err(Error::MissingLabel(2))
        );
    }

    #[test]
    fn iasi_examples() {
        assert!(verify_iasi(&path(2), &lab(&[&[1], &[2]])).unwrap().ok());
        let v = verify_iasi(&path(4), &lab(&[&[1], &[2], &[3], &[0]])).unwrap();
        assert_eq!(v.failures, vec![Failure::EdgeCollision((0, 1), (2, 3))]);
        let v = verify_iasi(&path(2), &lab(&[&[1], &[1]])).unwrap();
        assert_eq!(v.failures, vec![Failure::VertexCollision(0, 1)]);
    }

    #[test]
    fn weak_examples() {
        assert!(verify_weak(&path(2), &lab(&[&[1], &[2, 3]])).unwrap().ok());
        let v = verify_weak(&path(2), &lab(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(v.failures, vec![Failure::WeakConditionViolated((0, 1))]);
        assert_eq!(
            v.failures[0].to_string(),
            "WeakConditionViolated edge (0,1)"
        );
        assert!(verify_weak(&triangle(), &lab(&[&[1], &[2], &[3]]))
            .unwrap()
            .ok());
    }

    #[test]
    fn all_collisions_are_listed() {
        let v = verify_iasi(&Graph::empty(3).unwrap(), &lab(&[&[7], &[7], &[7]])).unwrap();
        assert_eq!(
            v.failures,
            vec![
                Failure::VertexCollision(0, 1),
                Failure::VertexCollision(0, 2),
                Failure::VertexCollision(1, 2)
            ]
        );
    }

    #[test]
    fn mono_examples() {
        assert_eq!(
            mono_edges(&triangle(), &lab(&[&[1], &[2], &[3]])).unwrap(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert!(mono_edges(&path(2), &lab(&[&[1], &[2, 3]]))
            .unwrap()
            .is_empty());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let f = lab(&[&[1], &[2, 4], &[8], &[16, 48]]);
        assert!(verify_weak(&c4, &f).unwrap().ok());
        assert!(mono_edges(&c4, &f).unwrap().is_empty());
    }
}
