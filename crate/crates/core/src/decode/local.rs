use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::prs::prs_decode;
use super::query::query_gen;
use crate::codes::{CodeKind, MonomialCode};
use crate::error::{check_range, Error, Result};
use crate::geometry::{standardize, LineEmbedding, Support};
use crate::gf::{Elem, FiniteField};

/// Coordinate-read access to a received word. `None` is an erased symbol.
pub trait WordOracle {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn read(&mut self, i: usize) -> Option<Elem>;
}

/// A word held in memory.
#[derive(Clone, Copy, Debug)]
pub struct SliceOracle<'a>(pub &'a [Option<Elem>]);

impl WordOracle for SliceOracle<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }

    fn read(&mut self, i: usize) -> Option<Elem> {
        self.0[i]
    }
}

/// Wraps an oracle and logs every coordinate read, in order.
#[derive(Clone, Debug)]
pub struct CountingOracle<O> {
    inner: O,
    log: Vec<usize>,
}

impl<O: WordOracle> CountingOracle<O> {
    pub fn new(inner: O) -> Self {
        CountingOracle {
            inner,
            log: Vec::new(),
        }
    }

    pub fn queries(&self) -> usize {
        self.log.len()
    }

    pub fn log(&self) -> &[usize] {
        &self.log
    }

    pub fn reset(&mut self) {
        self.log.clear();
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}

impl<O: WordOracle> WordOracle for CountingOracle<O> {
    fn len(&self) -> usize {
        self.inner.len()
    }

    fn read(&mut self, i: usize) -> Option<Elem> {
        self.log.push(i);
        self.inner.read(i)
    }
}

/// Parameters of the local corrector for a code whose line restrictions lie
/// in `PRS_q(k)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrectionConfig {
    pub k: u32,
    /// Queries per call, `k + 1 <= s <= q`.
    pub s: usize,
    /// Corrupted fraction used by the experiment harness.
    pub delta: f64,
    pub seed: u64,
    /// Re-parametrize each line so that every weight is one. Same output as
    /// the general path.
    pub unit_weights: bool,
}

impl CorrectionConfig {
    pub fn new(q: u32, k: u32, s: usize) -> Result<Self> {
        check_range("s", s as i64, k as i64 + 1, q as i64)?;
        Ok(CorrectionConfig {
            k,
            s,
            delta: 0.0,
            seed: 0,
            unit_weights: false,
        })
    }

    pub fn with_delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_unit_weights(mut self, on: bool) -> Self {
        self.unit_weights = on;
        self
    }

    /// Errors corrected per line, `floor((s - k - 1) / 2)`.
    pub fn t(&self) -> usize {
        (self.s - self.k as usize - 1) / 2
    }

    /// Largest `delta` covered by the guarantee, `(t + 1) / (2s)`.
    pub fn delta_max(&self) -> f64 {
        (self.t() + 1) as f64 / (2 * self.s) as f64
    }

    /// Guaranteed success probability `1 - delta s / (t + 1)`.
    pub fn success_bound(&self) -> f64 {
        1.0 - self.delta * self.s as f64 / (self.t() + 1) as f64
    }
}

/// Estimates `c_P` for the codeword `c` nearest to the word behind `oracle`
/// by decoding the restriction to a uniform line through `P` at `s` queried
/// points. Returns `Ok(None)` when the line decoder fails.
///
/// Reads exactly `cfg.s` coordinates, each uniform over the support when `P`
/// is uniform.
pub fn local_correct<O, R>(
    oracle: &mut O,
    code: &MonomialCode,
    p: usize,
    cfg: &CorrectionConfig,
    rng: &mut R,
) -> Result<Option<Elem>>
where
    O: WordOracle + ?Sized,
    R: Rng + ?Sized,
{
    let (f, support) = (code.field(), code.support());
    let v = match code.kind() {
        CodeKind::PLift | CodeKind::Prs => code.v().expect("projective") as u64,
        kind => {
            return Err(Error::Unsupported(alloc::format!(
                "local correction of {kind} codes"
            )))
        }
    };
    if cfg.k != code.k() {
        return Err(Error::out_of_range("k", cfg.k as i64, code.k() as i64, code.k() as i64));
    }
    check_range("s", cfg.s as i64, cfg.k as i64 + 1, code.q() as i64)?;
    check_range("P", p as i64, 0, support.len() as i64 - 1)?;
    if oracle.len() != support.len() {
        return Err(Error::LengthMismatch {
            expected: support.len(),
            got: oracle.len(),
        });
    }

    let q = code.q() as usize;
    let line = LineEmbedding::random_through(f, support.point(p), rng);
    let image = line.image(f, support);
    let picks = query_gen(code.q(), support.len(), cfg.s, rng)?;
    let reads: Vec<(usize, Option<Elem>)> = picks
        .iter()
        .map(|&j| (image[j].0, oracle.read(image[j].0)))
        .collect();

    let (frame, target) = if cfg.unit_weights {
        unit_frame(f, support, &line, p)
    } else {
        (line, q)
    };
    let frame_image = if cfg.unit_weights {
        frame.image(f, support)
    } else {
        image
    };
    let mut y: Vec<Option<Elem>> = vec![None; q + 1];
    for (idx, val) in reads {
        let j = frame_image
            .iter()
            .position(|&(i, _)| i == idx)
            .expect("queried point lies on the line");
        let lambda = frame_image[j].1;
        // f(L(x)) = lambda^(-v) f(std L(x))
        y[j] = val.map(|c| f.div(c, f.pow(lambda, v)).expect("nonzero weight"));
    }
    Ok(prs_decode(f, &y, cfg.k).map(|w| w[target]))
}

/// An embedding of the same line under which every point is already a
/// standard representative, with the position of `P`.
///
/// If the line has a point `Q` in an earlier chart than `P`, then
/// `Q + tP` keeps `Q`'s leading one and `(Q, P)` works with `P` at infinity.
/// Otherwise some `Q` lies in a later chart and `(P, Q)` puts `P` at `(1:0)`.
fn unit_frame(
    f: &FiniteField,
    support: &Support,
    line: &LineEmbedding,
    p: usize,
) -> (LineEmbedding, usize) {
    let q = f.order() as usize;
    let pp = support.projective_point(p);
    let chart = pp.chart();
    let others: Vec<_> = (0..q)
        .map(|j| support.projective_point(support.locate(f, &line.apply_at(f, j)).expect("nonzero").0))
        .collect();
    if let Some(earlier) = others.iter().find(|x| x.chart() < chart) {
        let l = LineEmbedding::new(f, earlier.coords().to_vec(), pp.coords().to_vec())
            .expect("distinct points");
        return (l, q);
    }
    let later = match others.iter().find(|x| x.chart() > chart) {
        Some(x) => x.coords().to_vec(),
        None => {
            let diff: Vec<Elem> = others[0]
                .coords()
                .iter()
                .zip(pp.coords())
                .map(|(&a, &b)| f.sub(a, b))
                .collect();
            standardize(f, &diff).expect("distinct points").0.coords().to_vec()
        }
    };
    let l = LineEmbedding::new(f, pp.coords().to_vec(), later).expect("distinct points");
    (l, 0)
}
