use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{check_range, Result};

/// Positions of `P^1` to query along an embedding whose point at infinity
/// (position `q`) is the target. The target enters with probability exactly
/// `s / n`; the remaining slots are a uniform subset of the `q` affine
/// positions. Combined with a uniform embedding through a uniform target,
/// every point of `P^m` is queried with probability `s / n`.
///
/// `s = q + 1` is rejected: it would force the target in with probability one.
pub fn query_gen<R: Rng + ?Sized>(q: u32, n: usize, s: usize, rng: &mut R) -> Result<Vec<usize>> {
    let q = q as usize;
    check_range("s", s as i64, 1, q as i64)?;
    check_range("n", n as i64, q as i64 + 1, i64::MAX)?;
    let with_target = rng.gen_range(0..n) < s;
    let rest = if with_target { s - 1 } else { s };
    let mut out: Vec<usize> = sample(rng, q, rest).into_vec();
    if with_target {
        out.push(q);
    }
    out.sort_unstable();
    Ok(out)
}
