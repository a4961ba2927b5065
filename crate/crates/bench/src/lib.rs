//! Fixtures shared by the benchmarks.

use splitfactor::{random_corpus, CorpusSpec, SplitGraph};

pub const EXAMPLE: &str = "\
K: x y z t
I: 1 2 3 4
1 x
2 y
3 x
3 z
4 x
4 y
4 t
";

pub fn example() -> SplitGraph {
    EXAMPLE.parse().expect("example parses")
}

/// `count` seeded random instances with `|K| = k` and `|I| = i`.
pub fn random_instances(k: usize, i: usize, count: usize) -> Vec<SplitGraph> {
    random_corpus(&CorpusSpec::random(k, i, count, 0x5eed))
        .expect("valid corpus spec")
        .iter()
        .collect()
}
