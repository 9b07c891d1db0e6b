//! Seeded Monte Carlo estimation of expected absorption steps.
//!
//! This is the statistical oracle: it shares nothing with the linear
//! solver beyond the graph itself. Every walk runs on its own RNG
//! substream keyed by (seed, walk index) and the reduction is a plain sum
//! in walk order, so a result is a pure function of the inputs regardless
//! of how the walks would be scheduled.

use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::rng::Xoshiro256StarStar;
use crate::{Rational, TransitionMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkConfig {
    pub start: VertexId,
    pub walk_count: u64,
    pub seed: u64,
    /// Walks that reach this many steps without absorbing are dropped from
    /// the mean and reported in `walks_capped`; truncating them instead
    /// would silently bias the mean low.
    pub step_cap: u64,
}

impl WalkConfig {
    pub fn new(start: VertexId, walk_count: u64, seed: u64) -> Self {
        WalkConfig {
            start,
            walk_count,
            seed,
            step_cap: 1_000_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub walks_completed: u64,
    pub walks_capped: u64,
}

/// `(next, weight)` entries ascending by state, plus the weight total.
type WeightedRow = (Vec<(usize, u64)>, u64);

/// Per-state sampling table, `None` for absorbing states. A draw picks `r`
/// uniform in `0..total` and walks the cumulative weights.
struct SamplingTables {
    rows: Vec<Option<WeightedRow>>,
}

impl SamplingTables {
    fn step(&self, state: usize, rng: &mut Xoshiro256StarStar) -> usize {
        let (entries, total) = self.rows[state]
            .as_ref()
            .expect("stepping from an absorbing state");
        let mut r = rng.gen_range(*total);
        for &(next, w) in entries {
            if r < w {
                return next;
            }
            r -= w;
        }
        unreachable!("weights sum to the sampling total")
    }

    fn is_absorbing(&self, state: usize) -> bool {
        self.rows[state].is_none()
    }
}

fn graph_tables(g: &Graph) -> SamplingTables {
    let adj = g.adjacency();
    let rows = g
        .vertices()
        .map(|v| {
            if g.is_absorbing(v) {
                None
            } else {
                let entries: Vec<(usize, u64)> = adj[v.index()]
                    .iter()
                    .map(|&(u, m)| (u.index(), m))
                    .collect();
                Some((entries, g.degree(v)))
            }
        })
        .collect();
    SamplingTables { rows }
}

fn chain_tables(tm: &TransitionMatrix) -> Result<SamplingTables> {
    let n = tm.order();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let v = VertexId::new(i);
        if tm.is_absorbing(v) {
            rows.push(None);
            continue;
        }
        // scale the row probabilities to integer weights over a common
        // denominator
        let mut denom = num::BigInt::from(1);
        for j in 0..n {
            let p = tm.entry(v, VertexId::new(j));
            if !p.is_zero() {
                denom = num::integer::lcm(denom, p.denom().clone());
            }
        }
        let total = denom
            .to_u64()
            .ok_or_else(|| Error::BadSpec("row denominators exceed u64 range".into()))?;
        let mut entries = Vec::new();
        for j in 0..n {
            let p = tm.entry(v, VertexId::new(j));
            if p.is_zero() {
                continue;
            }
            let w = (p * Rational::from_integer(denom.clone()))
                .to_integer()
                .to_u64()
                .ok_or_else(|| Error::BadSpec("row weights exceed u64 range".into()))?;
            entries.push((j, w));
        }
        rows.push(Some((entries, total)));
    }
    Ok(SamplingTables { rows })
}

fn run(tables: &SamplingTables, cfg: &WalkConfig) -> SimEstimate {
    let mut sum: u128 = 0;
    let mut sum_sq: u128 = 0;
    let mut completed: u64 = 0;
    let mut capped: u64 = 0;

    for walk in 0..cfg.walk_count {
        let mut rng = Xoshiro256StarStar::substream(cfg.seed, walk);
        let mut state = cfg.start.index();
        let mut steps: u64 = 0;
        let finished = loop {
            if tables.is_absorbing(state) {
                break true;
            }
            if steps == cfg.step_cap {
                break false;
            }
            state = tables.step(state, &mut rng);
            steps += 1;
        };
        if finished {
            completed += 1;
            sum += steps as u128;
            sum_sq += (steps as u128) * (steps as u128);
        } else {
            capped += 1;
        }
    }

    let (mean, stderr) = if completed == 0 {
        (0.0, 0.0)
    } else if completed == 1 {
        (sum as f64, 0.0)
    } else {
        let m = completed as u128;
        let mean = sum as f64 / completed as f64;
        // sample variance via the integer moments: (m*sumsq - sum^2) / (m(m-1))
        let numer = m * sum_sq - sum * sum;
        let variance = numer as f64 / (m * (m - 1)) as f64;
        (mean, (variance / completed as f64).sqrt())
    };
    SimEstimate {
        mean,
        stderr,
        walks_completed: completed,
        walks_capped: capped,
    }
}

fn check_start(start: VertexId, count: usize, absorbing: impl Fn(VertexId) -> bool) -> Result<()> {
    if start.index() >= count {
        return Err(Error::IdOutOfRange { id: start, vertex_count: count });
    }
    if absorbing(start) {
        return Err(Error::StartIsAbsorbing(start));
    }
    Ok(())
}

/// Estimates the expected absorption steps of the walk on `g` from
/// `cfg.start`: `cfg.walk_count` independent walks, each stepping to a
/// uniform draw over the neighbor multiset.
pub fn simulate(g: &Graph, cfg: &WalkConfig) -> Result<SimEstimate> {
    assert!(cfg.walk_count >= 1, "walk_count must be >= 1");
    g.validate_reachability()?;
    check_start(cfg.start, g.vertex_count(), |v| g.is_absorbing(v))?;
    Ok(run(&graph_tables(g), cfg))
}

/// Same estimator over a raw chain, for transition matrices that do not
/// come from an undirected graph.
pub fn simulate_chain(tm: &TransitionMatrix, cfg: &WalkConfig) -> Result<SimEstimate> {
    assert!(cfg.walk_count >= 1, "walk_count must be >= 1");
    check_start(cfg.start, tm.order(), |v| tm.is_absorbing(v))?;
    Ok(run(&chain_tables(tm)?, cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cycle, gen_path};
    use crate::graph::vid;

    #[test]
    fn p2_every_walk_takes_one_step() {
        let g = gen_path(2).unwrap();
        let est = simulate(&g, &WalkConfig::new(vid(1), 500, 99)).unwrap();
        assert_eq!(est.mean, 1.0);
        assert_eq!(est.stderr, 0.0);
        assert_eq!(est.walks_completed, 500);
        assert_eq!(est.walks_capped, 0);
    }

    #[test]
    fn identical_seeds_reproduce_bit_for_bit() {
        let g = gen_cycle(6).unwrap();
        let cfg = WalkConfig::new(vid(2), 2_000, 1234);
        let a = simulate(&g, &cfg).unwrap();
        let b = simulate(&g, &cfg).unwrap();
        assert_eq!(a, b);
        let other = simulate(&g, &WalkConfig::new(vid(2), 2_000, 1235)).unwrap();
        assert_ne!(a.mean, other.mean);
    }

    #[test]
    fn estimate_brackets_the_exact_value() {
        // P_5 from v1: exact value 16
        let g = gen_path(5).unwrap();
        let est = simulate(&g, &WalkConfig::new(vid(1), 20_000, 7)).unwrap();
        assert_eq!(est.walks_capped, 0);
        assert!((est.mean - 16.0).abs() <= 4.0 * est.stderr, "mean {} stderr {}", est.mean, est.stderr);
    }

    #[test]
    fn multiplicity_weighted_steps() {
        // v2 steps to v1 with probability 2/3; the exact solve gives
        // t = [6, 5]
        let g = Graph::build(3, &[(vid(1), vid(2), 2), (vid(2), vid(3), 1)], &[vid(3)]).unwrap();
        let exact = crate::solve_graph(&g).unwrap();
        let expected = exact.value_or_zero(vid(2)).to_f64().unwrap();
        let est = simulate(&g, &WalkConfig::new(vid(2), 30_000, 21)).unwrap();
        assert!((est.mean - expected).abs() <= 4.0 * est.stderr);
    }

    #[test]
    fn chain_estimator_matches_graph_estimator_statistically() {
        let g = gen_path(4).unwrap();
        let tm = crate::build_transition(&g).unwrap();
        let cfg = WalkConfig::new(vid(1), 20_000, 5);
        let a = simulate(&g, &cfg).unwrap();
        let b = simulate_chain(&tm, &cfg).unwrap();
        // independent table layouts, same distribution
        assert!((a.mean - b.mean).abs() <= 4.0 * (a.stderr + b.stderr));
    }

    #[test]
    fn start_errors() {
        let g = gen_path(3).unwrap();
        assert_eq!(
            simulate(&g, &WalkConfig::new(vid(3), 10, 0)),
            Err(Error::StartIsAbsorbing(vid(3)))
        );
        assert!(matches!(
            simulate(&g, &WalkConfig::new(vid(9), 10, 0)),
            Err(Error::IdOutOfRange { .. })
        ));
    }

    #[test]
    fn cap_excludes_rather_than_truncates() {
        let g = gen_path(10).unwrap();
        let mut cfg = WalkConfig::new(vid(1), 200, 3);
        cfg.step_cap = 2; // nearly every walk gets capped
        let est = simulate(&g, &cfg).unwrap();
        assert_eq!(est.walks_completed + est.walks_capped, 200);
        assert!(est.walks_capped > 0);
    }
}
