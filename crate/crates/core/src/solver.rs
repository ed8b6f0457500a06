//! Exact sparing numbers.
//!
//! In a weak IASI every edge has at least one singleton endpoint, so the
//! vertices carrying non-singleton labels form an independent set `I`, and
//! the mono-indexed edges are exactly the edges inside `V \ I`. Conversely
//! [`construct_witness`] realises any independent set as a weak IASI with
//! precisely those mono-indexed edges. The sparing number is therefore
//!
//! ```text
//! phi(G) = min { |E(G[V \ I])| : I independent in G }
//! ```
//!
//! and both solvers here minimise that quantity. Among optimal sets the
//! reported witness is the lexicographically least sorted index sequence.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::setlabel::{mono_edges, verify_weak, IntegerSet, Labeling};

/// Largest graph [`sparing_bruteforce`] accepts.
pub const BRUTEFORCE_LIMIT: usize = 24;

/// Witness labelings need `|V| < WITNESS_LIMIT` so that `2 * 4^i` fits.
pub const WITNESS_LIMIT: usize = 30;

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// An optimal solution. Equality ignores `stats`.
#[derive(Clone, Debug)]
pub struct SparingResult {
    pub value: usize,
    /// Vertices with non-singleton labels.
    pub witness: VertexSet,
    /// Mono-indexed edges, canonical order.
    pub mono: Vec<Edge>,
    pub stats: SearchStats,
}

impl PartialEq for SparingResult {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.witness == other.witness && self.mono == other.mono
    }
}

impl Eq for SparingResult {}

impl SparingResult {
    fn from_witness(g: &Graph, witness: VertexSet, stats: SearchStats) -> Self {
        let mono = g.edges_within(g.vertices().difference(witness));
        SparingResult {
            value: mono.len(),
            witness,
            mono,
            stats,
        }
    }
}

/// Exhaustive reference: every subset of `V` is tried.
pub fn sparing_bruteforce(g: &Graph) -> Result<SparingResult> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "brute-force enumeration",
            vertex_count: n,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    let start = Instant::now();
    let all = g.vertices();
    let mut best: Option<(usize, VertexSet)> = None;
    for mask in 0..1u64 << n {
        let set = VertexSet::from_bits(mask);
        if !g.is_independent(set) {
            continue;
        }
        let cost = g.count_within(all.difference(set));
        let better = match best {
            None => true,
            Some((c, w)) => cost < c || (cost == c && set.lex_cmp(w).is_lt()),
        };
        if better {
            best = Some((cost, set));
        }
    }
    let (_, witness) = best.expect("the empty set is always independent");
    Ok(SparingResult::from_witness(
        g,
        witness,
        SearchStats {
            nodes: 1 << n,
            elapsed: start.elapsed(),
        },
    ))
}

/// Single-threaded [`Solver`].
pub fn sparing_exact(g: &Graph) -> SparingResult {
    Solver::new().solve(g)
}

/// Branch-and-bound solver. The result does not depend on `threads`.
#[derive(Clone, Debug)]
pub struct Solver {
    threads: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { threads: 1 }
    }
}

impl Solver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Worker threads for the optimisation phase; `0` means one per core.
    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn solve(&self, g: &Graph) -> SparingResult {
        let start = Instant::now();
        let search = Search::new(g);
        let value = search.optimum(self.threads);
        let witness = search.least_witness(value);
        let result = SparingResult::from_witness(
            g,
            witness,
            SearchStats {
                nodes: search.nodes.load(Ordering::Relaxed),
                elapsed: start.elapsed(),
            },
        );
        debug_assert_eq!(result.value, value);
        result
    }
}

#[derive(Clone, Copy, Debug)]
struct Node {
    inside: u64,
    outside: u64,
    cost: usize,
}

enum Step {
    Done,
    Branch(Node, Node),
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    order: Vec<usize>,
    best: AtomicUsize,
    nodes: AtomicU64,
    // Decision mode: stop as soon as a completion reaches `best - 1` or less.
    decision: bool,
    found: AtomicBool,
}

#[inline]
fn ones(x: u64) -> usize {
    x.count_ones() as usize
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let adj = g.rows();
        let mut order: Vec<usize> = (0..adj.len()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(ones(adj[v])), v));
        Search {
            adj,
            all: g.vertices().bits(),
            order,
            best: AtomicUsize::new(usize::MAX),
            nodes: AtomicU64::new(0),
            decision: false,
            found: AtomicBool::new(false),
        }
    }

    /// Places `v` outside, paying for its edges to the current outside.
    #[inline]
    fn put_out(&self, node: &mut Node, v: usize) {
        node.cost += ones(self.adj[v] & node.outside);
        node.outside |= 1 << v;
    }

    /// Node with `inside` fixed and every neighbour of it forced outside.
    fn seeded(&self, inside: u64, outside: u64) -> Node {
        let mut node = Node {
            inside,
            outside: 0,
            cost: 0,
        };
        let mut forced = outside;
        for v in VertexSet::from_bits(inside).iter() {
            forced |= self.adj[v];
        }
        for v in VertexSet::from_bits(forced & !inside).iter() {
            self.put_out(&mut node, v);
        }
        node
    }

    fn greedy_bound(&self) -> usize {
        let mut by_degree: Vec<usize> = self.order.clone();
        by_degree.reverse();
        let mut inside = 0u64;
        for v in by_degree {
            if self.adj[v] & inside == 0 {
                inside |= 1 << v;
            }
        }
        let outside = self.all & !inside;
        VertexSet::from_bits(outside)
            .iter()
            .map(|v| ones(self.adj[v] & outside))
            .sum::<usize>()
            / 2
    }

    /// Lower bound on the cost still to come: undecided vertices are split
    /// greedily into cliques, and all but one member of each clique must end
    /// up outside.
    fn clique_bound(&self, undecided: u64, outside: u64) -> usize {
        let mut rest = undecided;
        let mut bound = 0;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            let mut clique = 1u64 << u;
            let mut cand = self.adj[u] & rest;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                clique |= 1 << w;
                cand &= self.adj[w];
            }
            rest &= !clique;
            let k = ones(clique);
            let (mut sum, mut max) = (0, 0);
            for x in VertexSet::from_bits(clique).iter() {
                let d = ones(self.adj[x] & outside);
                sum += d;
                max = max.max(d);
            }
            bound += (k - 1) * k.saturating_sub(2) / 2 + sum - max;
        }
        bound
    }

    fn step(&self, mut node: Node) -> Step {
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if self.found.load(Ordering::Relaxed) {
            return Step::Done;
        }
        let mut undecided = self.all & !(node.inside | node.outside);
        // An undecided vertex never has a neighbour inside, so one whose
        // neighbours are all decided can join the inside for free.
        let mut free = 0u64;
        for v in VertexSet::from_bits(undecided).iter() {
            if self.adj[v] & undecided == 0 {
                free |= 1 << v;
            }
        }
        node.inside |= free;
        undecided &= !free;

        let best = self.best.load(Ordering::Relaxed);
        if undecided == 0 {
            if node.cost < best {
                self.best.fetch_min(node.cost, Ordering::Relaxed);
                if self.decision {
                    self.found.store(true, Ordering::Relaxed);
                }
            }
            return Step::Done;
        }
        if node.cost + self.clique_bound(undecided, node.outside) >= best {
            return Step::Done;
        }

        let v = *self
            .order
            .iter()
            .find(|&&v| undecided >> v & 1 == 1)
            .expect("undecided is non-empty");
        let mut with = node;
        with.inside |= 1 << v;
        for u in VertexSet::from_bits(self.adj[v] & undecided).iter() {
            self.put_out(&mut with, u);
        }
        let mut without = node;
        self.put_out(&mut without, v);
        Step::Branch(with, without)
    }

    fn dfs(&self, node: Node) {
        if let Step::Branch(a, b) = self.step(node) {
            self.dfs(a);
            self.dfs(b);
        }
    }

    fn optimum(&self, threads: usize) -> usize {
        self.best.store(self.greedy_bound() + 1, Ordering::Relaxed);
        let root = self.seeded(0, 0);
        if threads == 1 {
            self.dfs(root);
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("failed to build solver thread pool");
            let target = pool.current_num_threads() * 8;
            let mut frontier = vec![root];
            for _ in 0..16 {
                if frontier.is_empty() || frontier.len() >= target {
                    break;
                }
                let mut next = Vec::with_capacity(frontier.len() * 2);
                for node in frontier {
                    if let Step::Branch(a, b) = self.step(node) {
                        next.push(a);
                        next.push(b);
                    }
                }
                frontier = next;
            }
            pool.install(|| frontier.into_par_iter().for_each(|node| self.dfs(node)));
        }
        self.best.load(Ordering::Relaxed)
    }

    /// Whether some independent completion of (`inside`, `outside`) has at
    /// most `target` mono edges.
    fn feasible(&self, inside: u64, outside: u64, target: usize) -> bool {
        let probe = Search {
            adj: self.adj,
            all: self.all,
            order: self.order.clone(),
            best: AtomicUsize::new(target + 1),
            nodes: AtomicU64::new(0),
            decision: true,
            found: AtomicBool::new(false),
        };
        probe.dfs(probe.seeded(inside, outside));
        self.nodes
            .fetch_add(probe.nodes.load(Ordering::Relaxed), Ordering::Relaxed);
        probe.found.load(Ordering::Relaxed)
    }

    /// Builds the lexicographically least optimal set one element at a time.
    fn least_witness(&self, value: usize) -> VertexSet {
        let n = self.adj.len();
        let mut prefix = 0u64;
        let mut next = 0;
        loop {
            let outside = self.all & !prefix;
            let cost = VertexSet::from_bits(outside)
                .iter()
                .map(|v| ones(self.adj[v] & outside))
                .sum::<usize>()
                / 2;
            if cost == value {
                return VertexSet::from_bits(prefix);
            }
            let extended = (next..n).find_map(|a| {
                if self.adj[a] & prefix != 0 {
                    return None;
                }
                let inside = prefix | 1 << a;
                let decided = VertexSet::full(a + 1).bits();
                self.feasible(inside, decided & !inside, value)
                    .then_some((inside, a))
            });
            let (inside, a) = extended.expect("an optimal extension of the prefix exists");
            prefix = inside;
            next = a + 1;
        }
    }
}

/// Labels vertex `i` with `{4^i}`, or `{4^i, 2*4^i}` when `i` is in
/// `independent`. The result is a weak IASI whose mono-indexed edges are
/// exactly the edges outside `independent`.
pub fn construct_witness(g: &Graph, independent: VertexSet) -> Result<Labeling> {
    let n = g.vertex_count();
    if n >= WITNESS_LIMIT {
        return Err(Error::TooLarge {
            what: "witness labeling",
            vertex_count: n,
            limit: WITNESS_LIMIT - 1,
        });
    }
    if let Some(bad) = independent.iter().find(|&v| v >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            vertex_count: n,
        });
    }
    if let Some((u, v)) = g.edge_inside(independent) {
        return Err(Error::NotIndependent(u, v));
    }
    let labels = (0..n)
        .map(|i| {
            let base = 1u64 << (2 * i);
            if independent.contains(i) {
                IntegerSet::new([base, 2 * base])
            } else {
                IntegerSet::singleton(base)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Labeling::from_vec(labels))
}

/// Solves, builds the witness labeling and re-checks it from scratch.
pub fn solve_and_certify(g: &Graph) -> Result<(SparingResult, Labeling)> {
    solve_and_certify_with(&Solver::new(), g)
}

pub fn solve_and_certify_with(solver: &Solver, g: &Graph) -> Result<(SparingResult, Labeling)> {
    let n = g.vertex_count();
    if n >= WITNESS_LIMIT {
        return Err(Error::TooLarge {
            what: "witness labeling",
            vertex_count: n,
            limit: WITNESS_LIMIT - 1,
        });
    }
    let result = solver.solve(g);
    let labeling = construct_witness(g, result.witness)?;
    let verdict = verify_weak(g, &labeling)?;
    if !verdict.ok() {
        return Err(Error::CertificationFailed(format!(
            "witness labeling is not a weak IASI: {}",
            verdict.failures[0]
        )));
    }
    let mono = mono_edges(g, &labeling)?;
    if mono != result.mono {
        return Err(Error::CertificationFailed(format!(
            "labeling has {} mono-indexed edges, solver reported {}",
            mono.len(),
            result.value
        )));
    }
    Ok((result, labeling))
}
