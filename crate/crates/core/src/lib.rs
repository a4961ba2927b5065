//! Factor multigraphs of split graphs.
//!
//! A split graph `S` with bipartition `(K, I)` has a factor graph `Φ(S)`: a
//! loopless multigraph on `I` with one edge between `u` and `v` for every
//! 2-switch acting on them. Its multiplicities have the closed form
//! `σ_uv = (d_u − η_uv)(d_v − η_uv)` with `η_uv = |N_u ∩ N_v|`.
//!
//! This crate builds `Φ(S)` both from that formula and by enumerating
//! 2-switches, enumerates induced paths and cycles of `Φ(S)`, and checks the
//! structural relations between those and the neighborhoods in `S`:
//!
//! * along an induced path the degree maximum sits at one of the two vertices
//!   nearest an end, and from a maximal end the neighborhoods form inclusion
//!   chains;
//! * induced cycles have length 3 or 4;
//! * a simple edge (multiplicity 1) of an induced path is its first or last;
//! * a connected `Φ(S)` has diameter at most `⌈(deg(S) + 1)/2⌉`, attained by
//!   the [`extremal`] family.
//!
//! ```
//! use splitfactor::{build_by_formula, verify_all, SplitGraph};
//!
//! let s: SplitGraph = "K: x y z t\nI: 1 2 3 4\n1 x\n2 y\n3 x\n3 z\n4 x\n4 y\n4 t\n"
//!     .parse()
//!     .unwrap();
//! let phi = build_by_formula(&s);
//! assert_eq!(phi.to_listing(), "1 2 1\n2 3 2\n3 4 2\n");
//! assert!(verify_all(&s).passed());
//! ```

pub mod corpus;
pub mod error;
pub mod extremal;
pub mod factor;
pub mod graph;
pub mod simple;
pub mod sweep;
pub mod switch;
pub mod verify;

pub use corpus::{exhaustive_corpus, random_corpus, Corpus, CorpusMode, CorpusSpec};
pub use error::{Error, Result};
pub use extremal::{build_extremal, verify_extremal, ExtremalInstance};
pub use factor::{build_by_enumeration, build_by_formula, Diameter, FactorGraph};
pub use graph::{Neighborhood, SplitGraph};
pub use simple::{recognize_split, SimpleGraph, SplitPartition};
pub use sweep::{sweep, SweepOptions, SweepSummary};
pub use switch::{
    apply_two_switch, enumerate_two_switches, two_switch_degree, two_switches, TwoSwitch,
};
pub use verify::{
    enumerate_induced_cycles, enumerate_induced_paths, verify_all, verify_with, Check, CheckResult,
    InducedCycle, InducedPath, Status, VerificationReport, VerifyOptions, Witness,
};
