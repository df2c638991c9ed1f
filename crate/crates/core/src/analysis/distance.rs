use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{CodeKind, MonomialCode};
use crate::error::{check_range, Error, Result};
use crate::geometry::theta;
use crate::gf::{Elem, FiniteField};
use crate::matrix::Matrix;

/// Bounds on the minimum distance of `PLift_q(m, k)` in terms of the distance
/// `d = q + 1 - k` of `PRS_q(k)`, and optionally the exact value.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DistanceReport {
    pub prs_distance: usize,
    /// `(d - 1) theta_{m-1} + 1`.
    pub lower: usize,
    /// `theta_m - q^(m-1) (q + 1 - d)`.
    pub upper: usize,
    pub exact: Option<usize>,
}

impl DistanceReport {
    pub fn consistent(&self) -> bool {
        self.lower <= self.upper && self.exact.map_or(true, |e| self.lower <= e && e <= self.upper)
    }
}

pub fn distance_bounds(q: u32, m: usize, k: u32) -> Result<DistanceReport> {
    check_range("m", m as i64, 1, 16)?;
    check_range("k", k as i64, 1, q as i64 - 1)?;
    Ok(bounds(q, m, k))
}

fn bounds(q: u32, m: usize, k: u32) -> DistanceReport {
    let d = (q + 1 - k) as usize;
    DistanceReport {
        prs_distance: d,
        lower: (d - 1) * theta(m - 1, q) + 1,
        upper: theta(m, q) - (q as usize).pow(m as u32 - 1) * (q as usize + 1 - d),
        exact: None,
    }
}

/// Bounds for a `PLift` code plus, when `exact_limit` admits it, the exact
/// minimum distance from [`min_distance`].
pub fn distance_report(code: &MonomialCode, exact_limit: Option<u64>) -> Result<DistanceReport> {
    if !matches!(code.kind(), CodeKind::PLift | CodeKind::Prs) {
        return Err(Error::Unsupported(alloc::format!(
            "distance bounds for {} codes",
            code.kind()
        )));
    }
    // for PRS (m = 1) both bounds collapse to q + 1 - k
    let mut r = bounds(code.q(), code.m(), code.k());
    if let Some(limit) = exact_limit {
        r.exact = min_distance(code.field(), code.generator(), limit)?;
    }
    Ok(r)
}

/// Exact minimum distance of the code spanned by the full-rank rows of `g`,
/// by the cheaper of a Gray-code sweep over all `q^dim` messages and a
/// search for the largest column set of deficient rank. `None` when both
/// exceed `limit` units of work.
pub fn min_distance(f: &FiniteField, g: &Matrix, limit: u64) -> Result<Option<usize>> {
    let k = g.rows();
    if k == 0 {
        return Ok(None);
    }
    if g.rank(f) != k {
        return Err(Error::Singular);
    }
    let sweep = (f.order() as u64).checked_pow(k as u32);
    if sweep.is_some_and(|s| s <= limit) {
        return Ok(gray_min_weight(f, g, 0, 0));
    }
    Ok(subset_min_distance(f, g, limit))
}

/// Number of `F_p` digits of the message space, `dim * t`.
pub fn message_digits(f: &FiniteField, g: &Matrix) -> usize {
    g.rows() * f.degree() as usize
}

/// Minimum nonzero weight over the messages whose top `shard_digits` base-`p`
/// digits spell `shard`. Shards `0..p^shard_digits` partition the message
/// space; the overall minimum is the minimum over shards.
///
/// Inside a shard messages are visited in modular `p`-ary Gray order, so each
/// step adds one basis codeword.
pub fn gray_min_weight(f: &FiniteField, g: &Matrix, shard_digits: usize, shard: u64) -> Option<usize> {
    let p = f.characteristic() as u64;
    let t = f.degree() as usize;
    let n = g.cols();
    let total = message_digits(f, g);
    assert!(shard_digits <= total, "more shard digits than message digits");
    // basis codeword for digit i*t + l is p^l * row_i
    let basis: Vec<Vec<Elem>> = (0..g.rows())
        .flat_map(|i| {
            (0..t).map(move |l| {
                let c = Elem::from_index((p as u32).pow(l as u32));
                g.row(i).iter().map(|&x| f.mul(c, x)).collect::<Vec<Elem>>()
            })
        })
        .collect();
    let free = total - shard_digits;
    let mut word = vec![Elem::ZERO; n];
    let mut s = shard;
    for b in &basis[free..] {
        let digit = s % p;
        s /= p;
        for _ in 0..digit {
            for (w, &x) in word.iter_mut().zip(b) {
                *w = f.add(*w, x);
            }
        }
    }
    let weight = |w: &[Elem]| w.iter().filter(|x| !x.is_zero()).count();
    let mut best = match weight(&word) {
        0 => None,
        w => Some(w),
    };
    let steps = p.pow(free as u32);
    let mut current = weight(&word);
    for step in 1..steps {
        let mut j = 0;
        let mut x = step;
        while x % p == 0 {
            x /= p;
            j += 1;
        }
        for (w, &b) in word.iter_mut().zip(&basis[j]) {
            if !b.is_zero() {
                let before = !w.is_zero();
                *w = f.add(*w, b);
                match (before, !w.is_zero()) {
                    (true, false) => current -= 1,
                    (false, true) => current += 1,
                    _ => {}
                }
            }
        }
        if current > 0 && best.map_or(true, |b| current < b) {
            best = Some(current);
        }
    }
    best
}

/// `n - z + 1` where `z` is the least size such that every `z` columns of
/// `g` have full rank: a nonzero codeword vanishes exactly on a column set of
/// deficient rank. Gives up once `limit` column subsets have been ranked.
pub fn subset_min_distance(f: &FiniteField, g: &Matrix, limit: u64) -> Option<usize> {
    let (k, n) = (g.rows(), g.cols());
    let mut budget = limit;
    for z in k..=n {
        let mut all_full = true;
        let mut idx: Vec<usize> = (0..z).collect();
        loop {
            if budget == 0 {
                return None;
            }
            budget -= 1;
            if g.select_columns(&idx).rank(f) < k {
                all_full = false;
                break;
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        if all_full {
            return Some(n - z + 1);
        }
    }
    None
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let z = idx.len();
    for i in (0..z).rev() {
        if idx[i] < n - z + i {
            idx[i] += 1;
            for j in i + 1..z {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
