//! Generators for the named graph families.
//!
//! Every generator numbers its vertices so that the defining partitions are
//! contiguous index ranges: clique or cycle vertices first, then the
//! independent or apex vertices. The partitions are returned by name
//! alongside the graph.
//!
//! | family | layout | partitions |
//! |---|---|---|
//! | `path(n)` | `0 - 1 - .. - n-1` | `path` |
//! | `cycle(n)` | `0 - 1 - .. - n-1 - 0` | `cycle` |
//! | `complete(n)` | `0..n` | `clique` |
//! | `complete_bipartite(a,b)` | `0..a`, `a..a+b` | `A`, `B` |
//! | `complete_multipartite(p..)` | consecutive blocks | `P0`, `P1`, .. |
//! | `complete_sun(n)` | `u_j = j`, `w_j = n+j ~ u_j, u_{j+1 mod n}` | `U`, `W` |
//! | `split(r,s,adj)` | clique `0..r`, independent `r..r+s` | `clique`, `independent` |
//! | `complete_split(r,s)` | as `split` | `clique`, `independent` |
//! | `bisplit(x,y,z,adj)` | `X`, `Y`, `Z` consecutive | `X`, `Y`, `Z` |
//! | `complete_bisplit(x,y,z)` | as `bisplit` | `X`, `Y`, `Z` |
//! | `block_chain(n_1..)` | clique `i+1` reuses the last vertex of clique `i` | `cut`, `noncut` |
//! | `windmill(n,r)` | centre `0`, blade `k` on `1+k(n-1)..1+(k+1)(n-1)` | `center`, `blades` |
//! | `friendship(r)` | `windmill(3,r)` | `center`, `blades` |
//! | `wheel(m)` | rim cycle `0..m`, hub `m` | `rim`, `hub` |
//! | `cone(m,n)` | cycle `0..m`, apexes `m..m+n` | `cycle`, `apex` |
//! | `cactus_chain(l_1..)` | cycle `i+1` reuses the last vertex of cycle `i` | `cut`, `noncut` |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// A family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    CompleteSun {
        n: usize,
    },
    /// `adjacency` pairs are (clique index, independent index), both 0-based
    /// within their part.
    Split {
        r: usize,
        s: usize,
        adjacency: Vec<(usize, usize)>,
    },
    CompleteSplit {
        r: usize,
        s: usize,
    },
    /// `adjacency` pairs are (X index, index into `Y` followed by `Z`).
    Bisplit {
        x: usize,
        y: usize,
        z: usize,
        adjacency: Vec<(usize, usize)>,
    },
    CompleteBisplit {
        x: usize,
        y: usize,
        z: usize,
    },
    BlockChain {
        cliques: Vec<usize>,
    },
    Windmill {
        n: usize,
        r: usize,
    },
    Friendship {
        r: usize,
    },
    Wheel {
        m: usize,
    },
    Cone {
        m: usize,
        n: usize,
    },
    CactusChain {
        cycles: Vec<usize>,
    },
}

/// A generated graph with its named vertex partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub partitions: BTreeMap<String, VertexSet>,
}

impl LabeledGraph {
    pub fn partition(&self, name: &str) -> Result<VertexSet> {
        self.partitions
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownPartition(name.to_string()))
    }
}

/// Looks up a named partition of a generated graph.
pub fn partition_of(lg: &LabeledGraph, name: &str) -> Result<VertexSet> {
    lg.partition(name)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParam(msg.into())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
    partitions: BTreeMap<String, VertexSet>,
}

impl Builder {
    fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Builder {
            n,
            edges: Vec::new(),
            partitions: BTreeMap::new(),
        })
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn cycle(&mut self, vs: &[usize]) {
        for i in 0..vs.len() {
            self.edge(vs[i], vs[(i + 1) % vs.len()]);
        }
    }

    fn biclique(&mut self, a: VertexSet, b: VertexSet) {
        for u in a.iter() {
            for v in b.iter() {
                self.edge(u, v);
            }
        }
    }

    fn part(mut self, name: &str, set: VertexSet) -> Self {
        self.partitions.insert(name.to_string(), set);
        self
    }

    fn finish(self) -> Result<LabeledGraph> {
        Ok(LabeledGraph {
            graph: Graph::from_edges(self.n, &self.edges)?,
            partitions: self.partitions,
        })
    }
}

fn range(a: usize, b: usize) -> VertexSet {
    VertexSet::range(a, b)
}

/// Checked vertex count, rejecting anything that cannot fit in a [`Graph`].
fn count(parts: &[usize]) -> Result<usize> {
    let total = parts
        .iter()
        .try_fold(0usize, |acc, &p| acc.checked_add(p))
        .unwrap_or(usize::MAX);
    if total > MAX_VERTICES {
        Err(Error::TooManyVertices(total))
    } else {
        Ok(total)
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<LabeledGraph> {
    use FamilySpec::*;
    match spec {
        Path { n } => {
            require(*n >= 1, "path needs n >= 1")?;
            let mut b = Builder::new(*n)?;
            for i in 1..*n {
                b.edge(i - 1, i);
            }
            b.part("path", range(0, *n)).finish()
        }
        Cycle { n } => {
            require(*n >= 3, "cycle needs n >= 3")?;
            let mut b = Builder::new(*n)?;
            b.cycle(&(0..*n).collect::<Vec<_>>());
            b.part("cycle", range(0, *n)).finish()
        }
        Complete { n } => {
            require(*n >= 1, "complete needs n >= 1")?;
            let mut b = Builder::new(*n)?;
            b.clique(&(0..*n).collect::<Vec<_>>());
            b.part("clique", range(0, *n)).finish()
        }
        CompleteBipartite { a, b: bs } => {
            require(*a >= 1 && *bs >= 1, "complete_bipartite needs a, b >= 1")?;
            let total = count(&[*a, *bs])?;
            let mut b = Builder::new(total)?;
            b.biclique(range(0, *a), range(*a, total));
            b.part("A", range(0, *a))
                .part("B", range(*a, total))
                .finish()
        }
        CompleteMultipartite { parts } => {
            require(
                !parts.is_empty() && parts.iter().all(|&p| p >= 1),
                "complete_multipartite needs at least one part, each of size >= 1",
            )?;
            let total = count(parts)?;
            let mut b = Builder::new(total)?;
            let mut sets = Vec::new();
            let mut start = 0;
            for &p in parts {
                sets.push(range(start, start + p));
                start += p;
            }
            for i in 0..sets.len() {
                for j in i + 1..sets.len() {
                    b.biclique(sets[i], sets[j]);
                }
            }
            for (i, s) in sets.into_iter().enumerate() {
                b = b.part(&format!("P{i}"), s);
            }
            b.finish()
        }
        CompleteSun { n } => {
            require(*n >= 3, "complete_sun needs n >= 3")?;
            let n = *n;
            let mut b = Builder::new(count(&[n, n])?)?;
            b.clique(&(0..n).collect::<Vec<_>>());
            for j in 0..n {
                b.edge(n + j, j);
                b.edge(n + j, (j + 1) % n);
            }
            b.part("U", range(0, n)).part("W", range(n, 2 * n)).finish()
        }
        Split { r, s, adjacency } => {
            require(*r >= 1, "split needs r >= 1")?;
            let (r, s) = (*r, *s);
            let mut b = Builder::new(count(&[r, s])?)?;
            b.clique(&(0..r).collect::<Vec<_>>());
            for &(c, i) in adjacency {
                require(c < r && i < s, "split adjacency index out of range")?;
                b.edge(c, r + i);
            }
            b.part("clique", range(0, r))
                .part("independent", range(r, r + s))
                .finish()
        }
        CompleteSplit { r, s } => {
            require(*r >= 1 && *s >= 1, "complete_split needs r, s >= 1")?;
            let (r, s) = (*r, *s);
            let mut b = Builder::new(count(&[r, s])?)?;
            b.clique(&(0..r).collect::<Vec<_>>());
            b.biclique(range(0, r), range(r, r + s));
            b.part("clique", range(0, r))
                .part("independent", range(r, r + s))
                .finish()
        }
        Bisplit { x, y, z, adjacency } => {
            require(*x >= 1 && *y >= 1 && *z >= 1, "bisplit needs x, y, z >= 1")?;
            let (x, y, z) = (*x, *y, *z);
            let total = count(&[x, y, z])?;
            let mut b = Builder::new(total)?;
            b.biclique(range(x, x + y), range(x + y, total));
            for &(i, j) in adjacency {
                require(i < x && j < y + z, "bisplit adjacency index out of range")?;
                b.edge(i, x + j);
            }
            b.part("X", range(0, x))
                .part("Y", range(x, x + y))
                .part("Z", range(x + y, total))
                .finish()
        }
        CompleteBisplit { x, y, z } => {
            require(
                *x >= 1 && *y >= 1 && *z >= 1,
                "complete_bisplit needs x, y, z >= 1",
            )?;
            let (x, y, z) = (*x, *y, *z);
            let total = count(&[x, y, z])?;
            let mut b = Builder::new(total)?;
            let (xs, ys, zs) = (range(0, x), range(x, x + y), range(x + y, total));
            b.biclique(xs, ys);
            b.biclique(xs, zs);
            b.biclique(ys, zs);
            b.part("X", xs).part("Y", ys).part("Z", zs).finish()
        }
        BlockChain { cliques } => {
            require(
                !cliques.is_empty() && cliques.iter().all(|&k| k >= 2),
                "block_chain needs at least one clique, each of order >= 2",
            )?;
            chain(cliques, |b, vs| b.clique(vs))
        }
        CactusChain { cycles } => {
            require(
                !cycles.is_empty() && cycles.iter().all(|&k| k >= 3),
                "cactus_chain needs at least one cycle, each of length >= 3",
            )?;
            chain(cycles, |b, vs| b.cycle(vs))
        }
        Windmill { n, r } => {
            require(*n >= 2 && *r >= 2, "windmill needs n >= 2 and r >= 2")?;
            windmill(*n, *r)
        }
        Friendship { r } => {
            require(*r >= 2, "friendship needs r >= 2")?;
            windmill(3, *r)
        }
        Wheel { m } => {
            require(*m >= 3, "wheel needs m >= 3")?;
            cone(*m, 1, "hub", "rim")
        }
        Cone { m, n } => {
            require(*m >= 3 && *n >= 1, "cone needs m >= 3 and n >= 1")?;
            cone(*m, *n, "apex", "cycle")
        }
    }
}

fn windmill(n: usize, r: usize) -> Result<LabeledGraph> {
    let total = r
        .checked_mul(n - 1)
        .and_then(|x| x.checked_add(1))
        .unwrap_or(usize::MAX);
    let mut b = Builder::new(count(&[total])?)?;
    for k in 0..r {
        let mut blade = vec![0];
        blade.extend(1 + k * (n - 1)..1 + (k + 1) * (n - 1));
        b.clique(&blade);
    }
    b.part("center", range(0, 1))
        .part("blades", range(1, total))
        .finish()
}

fn cone(m: usize, n: usize, apex: &str, cycle: &str) -> Result<LabeledGraph> {
    let total = count(&[m, n])?;
    let mut b = Builder::new(total)?;
    b.cycle(&(0..m).collect::<Vec<_>>());
    b.biclique(range(0, m), range(m, total));
    b.part(cycle, range(0, m))
        .part(apex, range(m, total))
        .finish()
}

/// Blocks along a path; block `i + 1` shares the last vertex of block `i`.
fn chain(orders: &[usize], mut block: impl FnMut(&mut Builder, &[usize])) -> Result<LabeledGraph> {
    let total =
        count(&orders.iter().map(|k| k - 1).collect::<Vec<_>>()).and_then(|t| count(&[t, 1]))?;
    let mut b = Builder::new(total)?;
    let mut cut = VertexSet::EMPTY;
    let mut shared = 0;
    let mut next = 1;
    for (i, &k) in orders.iter().enumerate() {
        let mut vs = vec![shared];
        vs.extend(next..next + k - 1);
        next += k - 1;
        block(&mut b, &vs);
        if i + 1 < orders.len() {
            shared = next - 1;
            cut.insert(shared);
        }
    }
    let noncut = VertexSet::full(total).difference(cut);
    b.part("cut", cut).part("noncut", noncut).finish()
}

impl FamilySpec {
    /// The family's name as used on the command line.
    pub fn name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Complete { .. } => "complete",
            CompleteBipartite { .. } => "complete_bipartite",
            CompleteMultipartite { .. } => "complete_multipartite",
            CompleteSun { .. } => "complete_sun",
            Split { .. } => "split",
            CompleteSplit { .. } => "complete_split",
            Bisplit { .. } => "bisplit",
            CompleteBisplit { .. } => "complete_bisplit",
            BlockChain { .. } => "block_chain",
            Windmill { .. } => "windmill",
            Friendship { .. } => "friendship",
            Wheel { .. } => "wheel",
            Cone { .. } => "cone",
            CactusChain { .. } => "cactus_chain",
        }
    }

    /// Parameters as `k=v` pairs; list values are `:`-separated and
    /// adjacency pairs are written `a-b`.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        use FamilySpec::*;
        fn list(v: &[usize]) -> String {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(":")
        }
        fn pairs(v: &[(usize, usize)]) -> String {
            v.iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(":")
        }
        match self {
            Path { n } | Cycle { n } | Complete { n } | CompleteSun { n } => {
                vec![("n", n.to_string())]
            }
            CompleteBipartite { a, b } => vec![("a", a.to_string()), ("b", b.to_string())],
            CompleteMultipartite { parts } => vec![("parts", list(parts))],
            Split { r, s, adjacency } => vec![
                ("r", r.to_string()),
                ("s", s.to_string()),
                ("adj", pairs(adjacency)),
            ],
            CompleteSplit { r, s } => vec![("r", r.to_string()), ("s", s.to_string())],
            Bisplit { x, y, z, adjacency } => vec![
                ("x", x.to_string()),
                ("y", y.to_string()),
                ("z", z.to_string()),
                ("adj", pairs(adjacency)),
            ],
            CompleteBisplit { x, y, z } => vec![
                ("x", x.to_string()),
                ("y", y.to_string()),
                ("z", z.to_string()),
            ],
            BlockChain { cliques } => vec![("cliques", list(cliques))],
            CactusChain { cycles } => vec![("cycles", list(cycles))],
            Windmill { n, r } => vec![("n", n.to_string()), ("r", r.to_string())],
            Friendship { r } => vec![("r", r.to_string())],
            Wheel { m } => vec![("m", m.to_string())],
            Cone { m, n } => vec![("m", m.to_string()), ("n", n.to_string())],
        }
    }

    /// Parameters joined as `k=v,k=v`.
    pub fn params_string(&self) -> String {
        self.params()
            .into_iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Builds a spec from a family name and raw `k=v` parameters.
    pub fn from_parts(family: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        let get = |k: &str| -> Result<&str> {
            params
                .get(k)
                .map(String::as_str)
                .ok_or_else(|| invalid(format!("{family} needs parameter {k}")))
        };
        let num = |k: &str| -> Result<usize> {
            get(k)?
                .parse()
                .map_err(|_| invalid(format!("parameter {k} must be a non-negative integer")))
        };
        let list = |k: &str| -> Result<Vec<usize>> {
            get(k)?
                .split([':', ','])
                .map(|x| {
                    x.trim()
                        .parse()
                        .map_err(|_| invalid(format!("bad list entry {x:?} for {k}")))
                })
                .collect()
        };
        let pairs = |k: &str| -> Result<Vec<(usize, usize)>> {
            match params.get(k) {
                None => Ok(Vec::new()),
                Some(s) if s.trim().is_empty() => Ok(Vec::new()),
                Some(s) => s
                    .split([':', ','])
                    .map(|p| {
                        let (a, b) = p
                            .split_once('-')
                            .ok_or_else(|| invalid(format!("bad pair {p:?} for {k}")))?;
                        let a = a.trim().parse();
                        let b = b.trim().parse();
                        match (a, b) {
                            (Ok(a), Ok(b)) => Ok((a, b)),
                            _ => Err(invalid(format!("bad pair {p:?} for {k}"))),
                        }
                    })
                    .collect(),
            }
        };
        use FamilySpec::*;
        let spec = match family {
            "path" => Path { n: num("n")? },
            "cycle" => Cycle { n: num("n")? },
            "complete" => Complete { n: num("n")? },
            "complete_bipartite" => CompleteBipartite {
                a: num("a")?,
                b: num("b")?,
            },
            "complete_multipartite" => CompleteMultipartite {
                parts: list("parts")?,
            },
            "complete_sun" => CompleteSun { n: num("n")? },
            "split" => Split {
                r: num("r")?,
                s: num("s")?,
                adjacency: pairs("adj")?,
            },
            "complete_split" => CompleteSplit {
                r: num("r")?,
                s: num("s")?,
            },
            "bisplit" => Bisplit {
                x: num("x")?,
                y: num("y")?,
                z: num("z")?,
                adjacency: pairs("adj")?,
            },
            "complete_bisplit" | "complete_tripartite" => CompleteBisplit {
                x: num("x")?,
                y: num("y")?,
                z: num("z")?,
            },
            "block_chain" => BlockChain {
                cliques: list("cliques")?,
            },
            "windmill" => Windmill {
                n: num("n")?,
                r: num("r")?,
            },
            "friendship" => Friendship { r: num("r")? },
            "wheel" => Wheel { m: num("m")? },
            "cone" => Cone {
                m: num("m")?,
                n: num("n")?,
            },
            "cactus_chain" => CactusChain {
                cycles: list("cycles")?,
            },
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}

/// `family=<name>;params=<k=v,...>`
impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family={};params={}", self.name(), self.params_string())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (fam, rest) = s
            .split_once(';')
            .ok_or_else(|| invalid(format!("expected family=<name>;params=<..>, got {s:?}")))?;
        let name = fam
            .trim()
            .strip_prefix("family=")
            .ok_or_else(|| invalid("missing family="))?;
        let body = rest
            .trim()
            .strip_prefix("params=")
            .ok_or_else(|| invalid("missing params="))?;
        let mut params = BTreeMap::new();
        for kv in body.split(',').filter(|x| !x.is_empty()) {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| invalid(format!("bad parameter {kv:?}")))?;
            params.insert(k.trim().to_string(), v.trim().to_string());
        }
        FamilySpec::from_parts(name, &params)
    }
}
