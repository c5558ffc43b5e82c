//! Seeded random graph corpora.
//!
//! The generator is PCG XSL RR 128/64 (`Lcg128Xsl64`, the `Pcg64` of the PCG
//! family) constructed with `state = seed` and the PCG default stream
//! `0xa02bdbf7bb3c0a7ac28fa16a64abf96`. Each draw takes one 64-bit output `x`:
//!
//! * vertex count: `n_min + x mod (n_max - n_min + 1)`;
//! * edge `{i, j}` (pairs in graph6 order: `j` ascending, then `i < j`)
//!   is present iff `x * den < num * 2^64`, for probability `num/den`.
//!
//! A pair of graphs is drawn as domain first, then codomain, from one stream.

use std::fmt;
use std::str::FromStr;

use rand_core::Rng;
use rand_pcg::Pcg64;
use thiserror::Error;

use crate::graph::Graph;

pub const PCG_DEFAULT_STREAM: u128 = 0x0a02_bdbf_7bb3_c0a7_ac28_fa16_a64a_bf96;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("invalid probability {0:?}: expected a fraction like 1/2 or a decimal in [0, 1]")]
    BadProbability(String),
    #[error("empty vertex range {min}..={max}")]
    EmptyRange { min: usize, max: usize },
}

/// Exact edge probability `num / den` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability {
    num: u64,
    den: u64,
}

impl Probability {
    pub fn new(num: u64, den: u64) -> Result<Probability, CorpusError> {
        if den == 0 || num > den {
            return Err(CorpusError::BadProbability(format!("{num}/{den}")));
        }
        Ok(Probability { num, den })
    }

    pub fn half() -> Probability {
        Probability { num: 1, den: 2 }
    }

    /// Bernoulli trial on one 64-bit draw.
    fn accepts(self, x: u64) -> bool {
        u128::from(x) * u128::from(self.den) < u128::from(self.num) << 64
    }
}

impl FromStr for Probability {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CorpusError::BadProbability(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad());
        }
        if let Some((n, d)) = s.split_once('/') {
            let num = n.trim().parse().map_err(|_| bad())?;
            let den = d.trim().parse().map_err(|_| bad())?;
            return Probability::new(num, den).map_err(|_| bad());
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let frac_val: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = int
            .checked_mul(den)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(bad)?;
        Probability::new(num, den).map_err(|_| bad())
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parameters of a random corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub edge_probability: Probability,
    pub samples: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.n_min > self.n_max {
            return Err(CorpusError::EmptyRange {
                min: self.n_min,
                max: self.n_max,
            });
        }
        Ok(())
    }

    pub fn generator(&self) -> GraphGenerator {
        GraphGenerator::new(self.seed, self.edge_probability)
    }

    /// The `samples` graphs of this corpus, in order.
    pub fn graphs(&self) -> Result<Vec<Graph>, CorpusError> {
        self.validate()?;
        let mut gen = self.generator();
        Ok((0..self.samples)
            .map(|_| gen.graph(self.n_min, self.n_max))
            .collect())
    }
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            n_min: 0,
            n_max: 5,
            edge_probability: Probability::half(),
            samples: 200,
            seed: 42,
        }
    }
}

pub struct GraphGenerator {
    rng: Pcg64,
    p: Probability,
}

impl GraphGenerator {
    pub fn new(seed: u64, p: Probability) -> Self {
        GraphGenerator {
            rng: Pcg64::new(u128::from(seed), PCG_DEFAULT_STREAM),
            p,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish integer in `lo..=hi` by reduction modulo the range width.
    pub fn in_range(&mut self, lo: usize, hi: usize) -> usize {
        let width = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % width) as usize
    }

    pub fn graph_of_order(&mut self, n: usize) -> Graph {
        let mut pairs = Vec::new();
        for j in 1..n {
            for i in 0..j {
                if self.p.accepts(self.next_u64()) {
                    pairs.push((i, j));
                }
            }
        }
        Graph::new(n, &pairs).expect("generated pairs are distinct")
    }

    pub fn graph(&mut self, n_min: usize, n_max: usize) -> Graph {
        let n = self.in_range(n_min, n_max);
        self.graph_of_order(n)
    }
}
