//! Exhaustive and seeded random corpora of labelled split graphs.
//!
//! Every instance is addressable by index, so streams can be sharded by
//! index range. Clique vertices are labelled `x1 … xk`, independent vertices
//! `1 … i`.
//!
//! Random instances use ChaCha8 (the `rand_chacha` implementation): the
//! generator is keyed by `seed_from_u64(seed)` and instance `j` reads stream
//! `j`, drawing one `u64` per independent vertex whose low `k` bits are that
//! vertex's neighborhood. The stream depends only on `(seed, k, i, j)`.

use std::ops::Range;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::SplitGraph;

/// Largest `k·i` accepted in exhaustive mode (2^20 instances).
pub const EXHAUSTIVE_BUDGET: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    /// `|K|` of every instance.
    pub k_max: usize,
    /// `|I|` of every instance.
    pub i_max: usize,
    /// Instances in random mode; ignored in exhaustive mode.
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn exhaustive(k: usize, i: usize) -> Self {
        CorpusSpec {
            mode: CorpusMode::Exhaustive,
            k_max: k,
            i_max: i,
            count: 0,
            seed: 0,
        }
    }

    pub fn random(k: usize, i: usize, count: usize, seed: u64) -> Self {
        CorpusSpec {
            mode: CorpusMode::Random,
            k_max: k,
            i_max: i,
            count,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            CorpusMode::Exhaustive => {
                if self.k_max.saturating_mul(self.i_max) > EXHAUSTIVE_BUDGET {
                    return Err(Error::CorpusBudget {
                        k: self.k_max,
                        i: self.i_max,
                    });
                }
            }
            CorpusMode::Random => {
                if self.count == 0 {
                    return Err(Error::InvalidArgument(
                        "random corpus needs count ≥ 1".into(),
                    ));
                }
                if self.k_max > 64 {
                    return Err(Error::InvalidArgument(
                        "random corpus supports |K| ≤ 64".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Corpus {
    spec: CorpusSpec,
    len: usize,
    k_labels: Vec<String>,
    i_labels: Vec<String>,
}

/// All `2^(k·i)` assignments of a `K`-subset to each `I`-vertex. Instance `j`
/// gives vertex `p` the subset encoded by bits `p·k .. (p+1)·k` of `j`.
pub fn exhaustive_corpus(k: usize, i: usize) -> Result<Corpus> {
    Corpus::new(CorpusSpec::exhaustive(k, i))
}

pub fn random_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    if spec.mode != CorpusMode::Random {
        return Err(Error::InvalidArgument(
            "expected a random corpus spec".into(),
        ));
    }
    Corpus::new(spec.clone())
}

impl Corpus {
    pub fn new(spec: CorpusSpec) -> Result<Self> {
        spec.validate()?;
        let len = match spec.mode {
            CorpusMode::Exhaustive => 1usize << (spec.k_max * spec.i_max),
            CorpusMode::Random => spec.count,
        };
        Ok(Corpus {
            k_labels: (1..=spec.k_max).map(|x| format!("x{x}")).collect(),
            i_labels: (1..=spec.i_max).map(|v| v.to_string()).collect(),
            spec,
            len,
        })
    }

    pub fn spec(&self) -> &CorpusSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Neighborhood bit-masks over `K`, one per independent vertex.
    pub fn neighborhood_masks(&self, j: usize) -> Vec<u64> {
        assert!(j < self.len, "instance {j} out of range");
        let k = self.spec.k_max;
        let mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        match self.spec.mode {
            CorpusMode::Exhaustive => (0..self.spec.i_max)
                .map(|p| ((j as u64) >> (p * k)) & mask)
                .collect(),
            CorpusMode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.spec.seed);
                rng.set_stream(j as u64);
                (0..self.spec.i_max)
                    .map(|_| rng.next_u64() & mask)
                    .collect()
            }
        }
    }

    pub fn get(&self, j: usize) -> SplitGraph {
        let masks = self.neighborhood_masks(j);
        let k = self.spec.k_max;
        SplitGraph::from_neighborhoods(
            self.k_labels.clone(),
            self.i_labels.clone(),
            masks
                .into_iter()
                .map(|m| (0..k).filter(move |&x| m >> x & 1 == 1)),
        )
        .expect("generated neighborhoods lie inside K")
    }

    /// Stable identifier of instance `j`.
    pub fn instance_id(&self, j: usize) -> String {
        let s = &self.spec;
        match s.mode {
            CorpusMode::Exhaustive => format!("exhaustive-k{}-i{}#{j}", s.k_max, s.i_max),
            CorpusMode::Random => format!("random-s{}-k{}-i{}#{j}", s.seed, s.k_max, s.i_max),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = SplitGraph> + '_ {
        self.range(0..self.len)
    }

    /// Instances in an index range, for sharding.
    pub fn range(&self, r: Range<usize>) -> impl Iterator<Item = SplitGraph> + '_ {
        r.map(move |j| self.get(j))
    }
}
