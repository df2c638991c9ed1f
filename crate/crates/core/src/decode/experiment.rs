use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::local::{local_correct, CorrectionConfig, CountingOracle, SliceOracle};
use crate::codes::MonomialCode;
use crate::error::Result;
use crate::gf::{Elem, FiniteField};

/// Outcome of one corrector call against the known codeword.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TrialOutcome {
    Success,
    Wrong,
    Erasure,
}

/// Aggregated Monte-Carlo results. `merge` is associative and commutative,
/// so trials may be reduced in any grouping.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExperimentReport {
    pub trials: u64,
    pub successes: u64,
    pub wrong: u64,
    pub erasures: u64,
    /// Reads per support position.
    pub histogram: Vec<u64>,
}

impl ExperimentReport {
    pub fn new(n: usize) -> Self {
        ExperimentReport {
            histogram: vec![0; n],
            ..Default::default()
        }
    }

    pub fn record(&mut self, outcome: TrialOutcome, queries: &[usize]) {
        self.trials += 1;
        match outcome {
            TrialOutcome::Success => self.successes += 1,
            TrialOutcome::Wrong => self.wrong += 1,
            TrialOutcome::Erasure => self.erasures += 1,
        }
        for &i in queries {
            self.histogram[i] += 1;
        }
    }

    pub fn merge(mut self, other: &ExperimentReport) -> Self {
        if self.histogram.len() < other.histogram.len() {
            self.histogram.resize(other.histogram.len(), 0);
        }
        self.trials += other.trials;
        self.successes += other.successes;
        self.wrong += other.wrong;
        self.erasures += other.erasures;
        for (a, b) in self.histogram.iter_mut().zip(&other.histogram) {
            *a += b;
        }
        self
    }

    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    /// Binomial standard deviation of the success rate at probability `p`.
    pub fn sigma(&self, p: f64) -> f64 {
        libm_sqrt(p * (1.0 - p) / self.trials.max(1) as f64)
    }
}

// no_std: Newton iteration is plenty for a confidence band
fn libm_sqrt(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let mut r = if x > 1.0 { x } else { 1.0 };
    for _ in 0..64 {
        r = 0.5 * (r + x / r);
    }
    r
}

/// Adds a uniform nonzero offset at exactly `count` uniform positions.
pub fn corrupt<R: Rng + ?Sized>(f: &FiniteField, word: &mut [Elem], count: usize, rng: &mut R) {
    let q = f.order();
    for i in sample(rng, word.len(), count.min(word.len())).iter() {
        word[i] = f.add(word[i], Elem::from_index(rng.gen_range(1..q)));
    }
}

/// Trial `index` of the experiment seeded by `cfg.seed`: its randomness is
/// the ChaCha8 substream `index`, so trials are independent of scheduling.
pub fn run_trial(code: &MonomialCode, cfg: &CorrectionConfig, index: u64) -> Result<(TrialOutcome, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    let f = code.field();
    let n = code.len();
    let msg: Vec<Elem> = (0..code.dim())
        .map(|_| Elem::from_index(rng.gen_range(0..code.q())))
        .collect();
    let c = code.encode(&msg)?;
    let mut y = c.clone();
    corrupt(f, &mut y, (cfg.delta * n as f64) as usize, &mut rng);
    let p = rng.gen_range(0..n);
    let word: Vec<Option<Elem>> = y.into_iter().map(Some).collect();
    let mut oracle = CountingOracle::new(SliceOracle(&word));
    let outcome = match local_correct(&mut oracle, code, p, cfg, &mut rng)? {
        Some(x) if x == c[p] => TrialOutcome::Success,
        Some(_) => TrialOutcome::Wrong,
        None => TrialOutcome::Erasure,
    };
    Ok((outcome, oracle.log().to_vec()))
}

/// Runs trials `0..trials` sequentially. Identical to reducing
/// [`run_trial`] over the same indices in any order.
pub fn mc_experiment(code: &MonomialCode, cfg: &CorrectionConfig, trials: u64) -> Result<ExperimentReport> {
    let mut report = ExperimentReport::new(code.len());
    for i in 0..trials {
        let (outcome, queries) = run_trial(code, cfg, i)?;
        report.record(outcome, &queries);
    }
    Ok(report)
}
