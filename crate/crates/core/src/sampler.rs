//! A seeded lazy Metropolis walk on the tiling space.
//!
//! Each step proposes one of the `2 |M|` (move, direction) pairs uniformly
//! and applies it when it fits the current tiling, otherwise stays put. The
//! proposal is symmetric, so the uniform distribution on the start tiling's
//! connected component is stationary.
//!
//! Randomness comes from ChaCha8 seeded with `seed`; restart `i` of a
//! multi-run experiment uses stream `i` of the same key, so results do not
//! depend on thread scheduling.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::TilingGraph;
use crate::moves::{move_set, Move, MoveKind};
use crate::tiling::Tiling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SamplerError {
    #[error("start is not a tiling of the region")]
    InvalidStart,
    #[error("at least one sample is required")]
    NoSamples,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConfig {
    pub moves: MoveKind,
    pub steps: u64,
    pub seed: u64,
    pub start: Tiling,
}

/// A running chain.
pub struct Chain {
    moves: Vec<Move>,
    rng: ChaCha8Rng,
    state: Tiling,
}

impl Chain {
    /// Chain on stream `stream` of the configured seed.
    pub fn new(graph: &TilingGraph, cfg: &ChainConfig, stream: u64) -> Result<Chain, SamplerError> {
        if !cfg.start.is_perfect_matching(graph) {
            return Err(SamplerError::InvalidStart);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(stream);
        Ok(Chain {
            moves: move_set(graph, cfg.moves),
            rng,
            state: cfg.start.clone(),
        })
    }

    pub fn state(&self) -> &Tiling {
        &self.state
    }

    /// One proposal; returns whether it was accepted.
    pub fn step(&mut self) -> bool {
        if self.moves.is_empty() {
            return false;
        }
        let pick = self.rng.gen_range(0..2 * self.moves.len());
        let m = &self.moves[pick / 2];
        let m = if pick % 2 == 0 { m.clone() } else { m.reversed() };
        match m.apply(&self.state) {
            Ok(next) => {
                self.state = next;
                true
            }
            Err(_) => false,
        }
    }

    pub fn run(&mut self, steps: u64) {
        for _ in 0..steps {
            self.step();
        }
    }
}

/// The tiling reached after `cfg.steps` steps.
pub fn random_walk(graph: &TilingGraph, cfg: &ChainConfig) -> Result<Tiling, SamplerError> {
    let mut chain = Chain::new(graph, cfg, 0)?;
    chain.run(cfg.steps);
    Ok(chain.state)
}

/// Counts of tilings observed by a sampling experiment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    pub counts: BTreeMap<Tiling, u64>,
    pub total: u64,
}

impl Distribution {
    fn record(&mut self, t: Tiling, k: u64) {
        *self.counts.entry(t).or_default() += k;
        self.total += k;
    }

    fn merge(mut self, other: Distribution) -> Distribution {
        for (t, k) in other.counts {
            self.record(t, k);
        }
        self
    }

    pub fn frequency(&self, t: &Tiling) -> f64 {
        match self.total {
            0 => 0.0,
            n => self.counts.get(t).copied().unwrap_or(0) as f64 / n as f64,
        }
    }

    pub fn support_size(&self) -> usize {
        self.counts.len()
    }

    /// Total variation distance from the uniform distribution on `support`.
    pub fn tv_from_uniform(&self, support: &[Tiling]) -> f64 {
        let p = 1.0 / support.len() as f64;
        let inside: f64 = support.iter().map(|t| (self.frequency(t) - p).abs()).sum();
        let outside: f64 = self
            .counts
            .keys()
            .filter(|t| !support.contains(t))
            .map(|t| self.frequency(t))
            .sum();
        (inside + outside) / 2.0
    }

    /// `tiling<TAB>count<TAB>frequency` lines in tiling order.
    pub fn to_table(&self) -> String {
        self.counts
            .iter()
            .map(|(t, &k)| format!("{t}\t{k}\t{:.6}\n", self.frequency(t)))
            .collect()
    }
}

/// Final states of `samples` independent restarts, each running
/// `burn_in + cfg.steps` steps from `cfg.start`.
pub fn empirical_distribution(
    graph: &TilingGraph,
    cfg: &ChainConfig,
    samples: u64,
    burn_in: u64,
) -> Result<Distribution, SamplerError> {
    if samples == 0 {
        return Err(SamplerError::NoSamples);
    }
    Chain::new(graph, cfg, 0)?;
    Ok((0..samples)
        .into_par_iter()
        .map(|i| {
            let mut chain = Chain::new(graph, cfg, i).expect("start checked");
            chain.run(burn_in + cfg.steps);
            let mut d = Distribution::default();
            d.record(chain.state, 1);
            d
        })
        .reduce(Distribution::default, Distribution::merge))
}

/// States visited after each of the `cfg.steps` steps of `restarts`
/// independent chains, pooled.
pub fn occupation_distribution(
    graph: &TilingGraph,
    cfg: &ChainConfig,
    restarts: u64,
) -> Result<Distribution, SamplerError> {
    if restarts == 0 {
        return Err(SamplerError::NoSamples);
    }
    Chain::new(graph, cfg, 0)?;
    Ok((0..restarts)
        .into_par_iter()
        .map(|i| {
            let mut chain = Chain::new(graph, cfg, i).expect("start checked");
            let mut visits: BTreeMap<Tiling, u64> = BTreeMap::new();
            for _ in 0..cfg.steps {
                chain.step();
                debug_assert!(chain.state.is_perfect_matching(graph));
                *visits.entry(chain.state.clone()).or_default() += 1;
            }
            let mut d = Distribution::default();
            for (t, k) in visits {
                d.record(t, k);
            }
            d
        })
        .reduce(Distribution::default, Distribution::merge))
}
