//! Exact sparing numbers of weak integer additive set-indexed (IASI) graphs.
//!
//! A weak IASI labels each vertex with a finite set of non-negative integers
//! so that vertex labels and edge sum sets are injective and every edge's sum
//! set is only as large as its larger endpoint label. The sparing number is
//! the fewest edges that must carry a singleton label.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs and the structural operations (union, shadow,
//!   subdivision, bipartition, triangle counts).
//! * [`setlabel`]: sum sets and labeling verification.
//! * [`families`]: generators for the named graph families.
//! * [`solver`]: brute-force oracle, branch-and-bound solver and witness
//!   labelings.
//! * [`formulas`]: the catalogue of closed-form claims and a checker that
//!   compares each against the solver.
//! * [`io`]: the text graph format and the JSON labeling format.
//! * [`corpus`]: seeded random graphs and trees for testing.
//!
//! ```
//! use sparing::families::{generate, FamilySpec};
//! use sparing::solver::solve_and_certify;
//!
//! let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap().graph;
//! let (result, labeling) = solve_and_certify(&k5).unwrap();
//! assert_eq!(result.value, 6);
//! assert_eq!(labeling.len(), 5);
//! ```

pub mod corpus;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod setlabel;
pub mod solver;

pub use error::{Error, Result};
pub use families::{generate, FamilySpec, LabeledGraph};
pub use graph::{Edge, Graph, VertexSet};
pub use setlabel::{IntegerSet, Labeling, Verdict};
pub use solver::{sparing_bruteforce, sparing_exact, Solver, SparingResult};
