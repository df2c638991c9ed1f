//! Exponent tuples, their reductions, and the degree sets of lifted codes.
//!
//! A degree set is the set of reduced exponent tuples whose monomials'
//! evaluations form a basis of a monomial code. Affine sets live in the box
//! `[0, q-1]^m`, projective sets on the sphere `|d| = v` in `N^(m+1)`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{check_range, Result};
use crate::geometry::{Space, Support};
use crate::gf::{Elem, FiniteField};

/// `a <=_p b`: every base-`p` digit of `a` is at most the matching digit of `b`.
pub fn p_adic_leq(mut a: u32, mut b: u32, p: u32) -> bool {
    while a > 0 {
        if a % p > b % p {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// Componentwise [`p_adic_leq`].
pub fn p_adic_leq_tuple(a: &[u32], b: &[u32], p: u32) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(&x, &y)| p_adic_leq(x, y, p))
}

/// `e` itself when `e <= q - 1`, else the representative of `e` modulo
/// `q - 1` in `[1, q - 1]`.
pub fn int_reduce(e: u64, q: u32) -> u64 {
    let q1 = q as u64 - 1;
    if e <= q1 {
        e
    } else {
        (e - 1) % q1 + 1
    }
}

/// A-reduction: each coordinate through [`int_reduce`].
pub fn a_reduce(d: &[u32], q: u32) -> Vec<u32> {
    d.iter().map(|&x| int_reduce(x as u64, q) as u32).collect()
}

/// P-reduction by repeated `tau_ij` (`d_i += q-1`, `d_j -= q-1` for `i < j`,
/// `d_j >= q`, `d_i >= 1`), taking the largest `j` and then the smallest `i`.
pub fn p_reduce(d: &[u32], q: u32) -> Vec<u32> {
    let mut d = d.to_vec();
    let q1 = q - 1;
    loop {
        let lead = match d.iter().position(|&x| x != 0) {
            Some(l) => l,
            None => return d,
        };
        let Some(j) = (lead + 1..d.len()).rev().find(|&j| d[j] >= q) else {
            return d;
        };
        // the leading coordinate is nonzero and left of j, so i exists
        let i = (0..j).find(|&i| d[i] >= 1).expect("lead < j");
        d[i] += q1;
        d[j] -= q1;
    }
}

pub fn is_a_reduced(d: &[u32], q: u32) -> bool {
    d.iter().all(|&x| x < q)
}

pub fn is_p_reduced(d: &[u32], q: u32) -> bool {
    match d.iter().position(|&x| x != 0) {
        None => true,
        Some(l) => d[l + 1..].iter().all(|&x| x < q),
    }
}

/// A sorted set of exponent tuples of fixed arity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSet {
    arity: usize,
    flat: Vec<u32>,
}

impl DegreeSet {
    /// Sorts and deduplicates.
    pub fn from_tuples<T: AsRef<[u32]>>(arity: usize, tuples: impl IntoIterator<Item = T>) -> Self {
        let mut v: Vec<Vec<u32>> = tuples
            .into_iter()
            .map(|t| {
                let t = t.as_ref();
                assert_eq!(t.len(), arity, "tuple arity");
                t.to_vec()
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        DegreeSet {
            arity,
            flat: v.concat(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        if self.arity == 0 {
            0
        } else {
            self.flat.len() / self.arity
        }
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.arity..(i + 1) * self.arity]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + Clone {
        self.flat.chunks_exact(self.arity.max(1))
    }

    pub fn contains(&self, d: &[u32]) -> bool {
        d.len() == self.arity && self.position(d).is_some()
    }

    pub fn position(&self, d: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(d) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn is_subset(&self, other: &DegreeSet) -> bool {
        self.iter().all(|d| other.contains(d))
    }

    pub fn to_vecs(&self) -> Vec<Vec<u32>> {
        self.iter().map(|d| d.to_vec()).collect()
    }
}

/// Bitmasks of residues modulo `q - 1` of the `p`-adic shadows of each
/// single coordinate value `x in [0, q-1]`: `(all e <=_p x, nonzero e <=_p x)`.
struct ShadowMasks {
    modulus: u32,
    full: u64,
    all: Vec<u64>,
    nonzero: Vec<u64>,
}

impl ShadowMasks {
    fn new(q: u32, p: u32) -> Self {
        let modulus = q - 1;
        assert!(modulus <= 64, "residue masks need q <= 65");
        let full = if modulus == 64 { u64::MAX } else { (1u64 << modulus) - 1 };
        let mut all = vec![0u64; q as usize];
        let mut nonzero = vec![0u64; q as usize];
        for x in 0..q {
            for e in 0..=x {
                if p_adic_leq(e, x, p) {
                    let bit = 1u64 << (e % modulus);
                    all[x as usize] |= bit;
                    if e != 0 {
                        nonzero[x as usize] |= bit;
                    }
                }
            }
        }
        ShadowMasks {
            modulus,
            full,
            all,
            nonzero,
        }
    }

    #[inline]
    fn rotate(&self, b: u64, a: u32) -> u64 {
        if a == 0 {
            return b;
        }
        ((b << a) | (b >> (self.modulus - a))) & self.full
    }

    /// Cyclic sumset of residue masks.
    #[inline]
    fn sumset(&self, a: u64, b: u64) -> u64 {
        let mut out = 0;
        let mut rest = a;
        while rest != 0 {
            let s = rest.trailing_zeros();
            out |= self.rotate(b, s);
            rest &= rest - 1;
        }
        out
    }

    /// Residues `r` allowed for a nonzero shadow weight: `int_reduce` of the
    /// weight is `r` (or `q - 1` for `r = 0`), which must be at most `bound`.
    fn allowed(&self, bound: u32) -> u64 {
        let mut m = 0;
        for r in 1..self.modulus.min(bound + 1) {
            m |= 1u64 << r;
        }
        if bound >= self.modulus {
            m |= 1;
            if self.modulus == 1 {
                return 1;
            }
        }
        m
    }
}

/// Enumerates `d in [0, q-1]^m` with every nonzero shadow weight reducing to
/// at most `bound`, in lexicographic order, calling `visit` on each.
///
/// The residues of nonzero shadows of a prefix only grow as coordinates are
/// appended, so a violating prefix prunes its whole subtree.
fn shadow_closed_box(m: usize, q: u32, p: u32, bound: u32, mut visit: impl FnMut(&[u32])) {
    let masks = ShadowMasks::new(q, p);
    let allowed = masks.allowed(bound);
    let mut d = vec![0u32; m];
    fn go(
        i: usize,
        nz: u64,
        d: &mut Vec<u32>,
        masks: &ShadowMasks,
        allowed: u64,
        q: u32,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if i == d.len() {
            visit(d);
            return;
        }
        for x in 0..q {
            let a = masks.all[x as usize];
            let nz2 = masks.sumset(nz, a) | masks.nonzero[x as usize];
            if nz2 & !allowed != 0 {
                continue;
            }
            d[i] = x;
            go(i + 1, nz2, d, masks, allowed, q, visit);
        }
    }
    go(0, 0, &mut d, &masks, allowed, q, &mut visit);
}

fn split_q(q: u32) -> Result<u32> {
    let (p, _) = crate::gf::prime_power(q).ok_or(crate::Error::NotPrimePower(q))?;
    Ok(p)
}

/// `ADeg_q(m, k)`: the degree set of the affine lifted code `Lift_q(m, k)`.
pub fn adeg(m: usize, k: u32, q: u32) -> Result<DegreeSet> {
    check_range("m", m as i64, 1, 16)?;
    let p = split_q(q)?;
    check_range("k", k as i64, 0, q as i64 - 2)?;
    let mut flat = Vec::new();
    shadow_closed_box(m, q, p, k, |d| flat.extend_from_slice(d));
    Ok(DegreeSet { arity: m, flat })
}

/// `|ADeg_q(m, k)|` without materializing the set.
pub fn adeg_count(m: usize, k: u32, q: u32) -> Result<usize> {
    check_range("m", m as i64, 1, 16)?;
    let p = split_q(q)?;
    check_range("k", k as i64, 0, q as i64 - 2)?;
    let mut n = 0;
    shadow_closed_box(m, q, p, k, |_| n += 1);
    Ok(n)
}

/// `v = k + (m - 1)(q - 1)`, the homogeneous degree of `PLift_q(m, k)`.
pub fn plift_degree(m: usize, k: u32, q: u32) -> u32 {
    k + (m as u32 - 1) * (q - 1)
}

/// `PDeg_q(m, k)`, built recursively from `ADeg_q(m, k - 1)` and
/// `PDeg_q(m - 1, k)`.
pub fn pdeg(m: usize, k: u32, q: u32) -> Result<DegreeSet> {
    check_range("m", m as i64, 1, 16)?;
    split_q(q)?;
    check_range("k", k as i64, 1, q as i64 - 1)?;
    if m == 1 {
        return Ok(DegreeSet::from_tuples(2, (0..=k).map(|i| [k - i, i])));
    }
    let v = plift_degree(m, k, q);
    let mut tuples: Vec<Vec<u32>> = Vec::new();
    for d in adeg(m, k - 1, q)?.iter() {
        let w: u32 = d.iter().sum();
        let mut t = Vec::with_capacity(m + 1);
        t.push(v - w);
        t.extend_from_slice(d);
        tuples.push(t);
    }
    for d in pdeg(m - 1, k, q)?.iter() {
        let mut t = Vec::with_capacity(m + 1);
        t.push(0);
        t.extend_from_slice(d);
        let lead = t.iter().position(|&x| x != 0).expect("weight is positive");
        t[lead] += q - 1;
        tuples.push(t);
    }
    Ok(DegreeSet::from_tuples(m + 1, tuples))
}

/// `|PDeg_q(m, k)| = 1 + sum_{j=1..m} |ADeg_q(j, k - 1)|`.
pub fn pdeg_count(m: usize, k: u32, q: u32) -> Result<usize> {
    check_range("m", m as i64, 1, 16)?;
    split_q(q)?;
    check_range("k", k as i64, 1, q as i64 - 1)?;
    let mut n = 1;
    for j in 1..=m {
        n += adeg_count(j, k - 1, q)?;
    }
    Ok(n)
}

/// `PDeg_q(m, k)` by scanning every P-reduced tuple of weight `v` and keeping
/// those whose tail after the leading nonzero coordinate has all shadow
/// weights reducing to at most `k - 1`. Shadows are enumerated explicitly, so
/// this is an independent cross-check of [`pdeg`].
pub fn pdeg_direct(m: usize, k: u32, q: u32) -> Result<DegreeSet> {
    check_range("m", m as i64, 1, 16)?;
    let p = split_q(q)?;
    check_range("k", k as i64, 1, q as i64 - 1)?;
    let v = plift_degree(m, k, q);
    let mut out = Vec::new();
    for lead in 0..=m {
        let tail_len = m - lead;
        let mut tail = vec![0u32; tail_len];
        loop {
            let w: u32 = tail.iter().sum();
            if w < v && shadows_ok(&tail, q, p, k - 1) {
                let mut d = vec![0u32; m + 1];
                d[lead] = v - w;
                d[lead + 1..].copy_from_slice(&tail);
                out.push(d);
            }
            if !odometer(&mut tail, q) {
                break;
            }
        }
    }
    Ok(DegreeSet::from_tuples(m + 1, out))
}

fn shadows_ok(d: &[u32], q: u32, p: u32, bound: u32) -> bool {
    let mut e = vec![0u32; d.len()];
    loop {
        if !odometer(&mut e, q) {
            return true;
        }
        if p_adic_leq_tuple(&e, d, p) {
            let w: u64 = e.iter().map(|&x| x as u64).sum();
            if int_reduce(w, q) > bound as u64 {
                return false;
            }
        }
    }
}

/// Little-endian counter over `[0, q-1]^n`; false once it wraps to zero.
fn odometer(v: &mut [u32], q: u32) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x < q {
            return true;
        }
        *x = 0;
    }
    false
}

/// A-reduction of `B_1^m(k)`: the degree set of `RM_q(m, k)`.
pub fn rm_degrees(m: usize, k: u32, q: u32) -> DegreeSet {
    let mut out = Vec::new();
    let mut d = vec![0u32; m];
    loop {
        if d.iter().sum::<u32>() <= k {
            out.push(d.clone());
        }
        if !odometer_unbounded(&mut d, k) {
            break;
        }
    }
    DegreeSet::from_tuples(m, out.iter().map(|d| a_reduce(d, q)))
}

/// P-reduction of `S^(m+1)(v)`: the degree set of `PRM_q(m, v)`.
pub fn prm_degrees(m: usize, v: u32, q: u32) -> DegreeSet {
    let mut out = Vec::new();
    let mut d = vec![0u32; m];
    loop {
        let w: u32 = d.iter().sum();
        if w <= v {
            let mut t = Vec::with_capacity(m + 1);
            t.push(v - w);
            t.extend_from_slice(&d);
            out.push(p_reduce(&t, q));
        }
        if !odometer_unbounded(&mut d, v) {
            break;
        }
    }
    DegreeSet::from_tuples(m + 1, out)
}

fn odometer_unbounded(v: &mut [u32], max: u32) -> bool {
    for x in v.iter_mut().rev() {
        *x += 1;
        if *x <= max {
            return true;
        }
        *x = 0;
    }
    false
}

/// Value at each `t in F_q` of the affine monomial restricted to the line
/// `a + t b`.
fn affine_line_values(f: &FiniteField, d: &[u32], a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    f.elements()
        .map(|t| {
            d.iter().zip(a.iter().zip(b)).fold(Elem::ONE, |acc, (&e, (&ai, &bi))| {
                f.mul(acc, f.pow(f.add(ai, f.mul(t, bi)), e as u64))
            })
        })
        .collect()
}

/// `sum_t h(t) t^j`; for the interpolant `sum_i c_i T^i` of degree below `q`
/// this is `-c_(q-1-j)` when `0 <= j <= q-2`.
fn moment(f: &FiniteField, h: &[Elem], j: u64) -> Elem {
    f.elements()
        .zip(h)
        .fold(Elem::ZERO, |acc, (t, &y)| f.add(acc, f.mul(y, f.pow(t, j))))
}

/// Whether values on `A^1` (in element order) interpolate to degree `<= k`.
pub fn is_rs_word(f: &FiniteField, h: &[Elem], k: u32) -> bool {
    let q = f.order() as u64;
    (0..q.saturating_sub(1 + k as u64)).all(|j| moment(f, h, j).is_zero())
}

/// Whether a word on `P^1` (`(1:t)` in element order, then `(0:1)`) lies in
/// `PRS_q(k)`: the affine part has degree `<= k` and its `T^k` coefficient
/// is the value at infinity.
pub fn is_prs_word(f: &FiniteField, y: &[Elem], k: u32) -> bool {
    let q = f.order() as usize;
    let (aff, inf) = (&y[..q], y[q]);
    if k as usize > q {
        return false;
    }
    if k as usize == q {
        return true;
    }
    if !is_rs_word(f, aff, k) {
        return false;
    }
    let top = if k == 0 {
        // a constant: every affine value equals the value at infinity
        aff[0]
    } else {
        f.neg(moment(f, aff, (q - 1 - k as usize) as u64))
    };
    top == inf
}

/// Brute-force definitional test of `ev(X^d)` against `Lift_q(m, k)`
/// (affine, `d` of arity `m`) or `PLift_q(m, k)` (projective, `d` of arity
/// `m + 1`), by restricting the monomial to every line.
pub fn monomial_membership_oracle(f: &FiniteField, d: &[u32], k: u32, space: Space) -> bool {
    match space {
        Space::Affine => {
            let m = d.len();
            let pts = Support::new(f, m, Space::Affine).expect("m >= 1");
            if m == 1 {
                let h = affine_line_values(f, d, &[Elem::ZERO], &[Elem::ONE]);
                return is_rs_word(f, &h, k);
            }
            let dirs = Support::new(f, m - 1, Space::Projective).expect("m >= 2");
            let ok = pts.iter().all(|a| {
                dirs.iter()
                    .all(|b| is_rs_word(f, &affine_line_values(f, d, a, b), k))
            });
            ok
        }
        Space::Projective => {
            let m = d.len() - 1;
            let pts = Support::new(f, m, Space::Projective).expect("m >= 1");
            let lines = if m == 1 {
                vec![(0..pts.len()).collect::<Vec<_>>()]
            } else {
                pts.all_lines(f)
            };
            lines.iter().all(|line| {
                let (c0, c1) = (pts.point(line[0]), pts.point(line[1]));
                let y: Vec<Elem> = (0..=f.order() as usize)
                    .map(|j| {
                        let (x, t) = if j == f.order() as usize {
                            (Elem::ZERO, Elem::ONE)
                        } else {
                            (Elem::ONE, Elem::from_index(j as u32))
                        };
                        d.iter().zip(c0.iter().zip(c1)).fold(Elem::ONE, |acc, (&e, (&u, &w))| {
                            let coord = f.add(f.mul(x, u), f.mul(t, w));
                            f.mul(acc, f.pow(coord, e as u64))
                        })
                    })
                    .collect();
                is_prs_word(f, &y, k)
            })
        }
    }
}

/// All P-reduced tuples of weight `v` in `N^(m+1)`, sorted.
pub fn p_reduced_sphere(m: usize, v: u32, q: u32) -> DegreeSet {
    let mut out = Vec::new();
    for lead in 0..=m {
        let mut tail = vec![0u32; m - lead];
        loop {
            let w: u32 = tail.iter().sum();
            if w < v {
                let mut d = vec![0u32; m + 1];
                d[lead] = v - w;
                d[lead + 1..].copy_from_slice(&tail);
                out.push(d);
            }
            if !odometer(&mut tail, q) {
                break;
            }
        }
    }
    DegreeSet::from_tuples(m + 1, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn p_adic_examples() {
        assert!(p_adic_leq(5, 7, 2));
        assert!(!p_adic_leq(2, 5, 2));
        for a in 0..50 {
            assert!(p_adic_leq(a, a, 3));
        }
    }

    #[test]
    fn reductions() {
        assert_eq!(int_reduce(3, 4), 3);
        assert_eq!(int_reduce(4, 4), 1);
        assert_eq!(int_reduce(6, 4), 3);
        assert_eq!(int_reduce(0, 4), 0);
        assert_eq!(a_reduce(&[5, 2], 4), vec![2, 2]);
        assert_eq!(p_reduce(&[1, 6, 0], 4), vec![4, 3, 0]);
        assert_eq!(p_reduce(&[0, 6, 0], 4), vec![0, 6, 0]);
    }

    #[test]
    fn worked_degree_sets() {
        let da = adeg(2, 2, 4).unwrap();
        let expect = DegreeSet::from_tuples(
            2,
            [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2], [2, 2]],
        );
        assert_eq!(da, expect);
        let dl = pdeg(2, 3, 4).unwrap();
        let expect = DegreeSet::from_tuples(
            3,
            [
                [6, 0, 0],
                [5, 1, 0],
                [5, 0, 1],
                [4, 2, 0],
                [4, 1, 1],
                [4, 0, 2],
                [0, 6, 0],
                [0, 5, 1],
                [0, 4, 2],
                [0, 0, 6],
                [2, 2, 2],
            ],
        );
        assert_eq!(dl, expect);
        assert_eq!(pdeg_direct(2, 3, 4).unwrap(), dl);
    }

    #[test]
    fn table_cardinalities() {
        assert_eq!(adeg(2, 6, 8).unwrap().len(), 37);
        assert_eq!(pdeg(2, 7, 8).unwrap().len(), 45);
        assert_eq!(pdeg_direct(3, 3, 4).unwrap().len(), 24);
        assert_eq!(adeg_count(2, 14, 16).unwrap(), 175);
        for q in [2, 3, 4, 5, 8] {
            for k in 0..=q - 2 {
                assert_eq!(adeg(1, k, q).unwrap().len(), k as usize + 1);
            }
            for k in 1..q {
                let s = pdeg(1, k, q).unwrap();
                assert_eq!(s.len(), k as usize + 1);
                assert_eq!(pdeg_direct(1, k, q).unwrap(), s);
            }
        }
    }

    #[test]
    fn recursion_matches_direct_scan() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            for m in 1..=3 {
                for k in 1..q {
                    let a = pdeg(m, k, q).unwrap();
                    assert_eq!(a, pdeg_direct(m, k, q).unwrap(), "q={q} m={m} k={k}");
                    assert_eq!(a.len(), pdeg_count(m, k, q).unwrap());
                    let v = plift_degree(m, k, q);
                    assert!(a.iter().all(|d| is_p_reduced(d, q) && d.iter().sum::<u32>() == v));
                }
            }
        }
    }

    #[test]
    fn dp_matches_explicit_shadows() {
        for q in [2, 3, 4, 8, 9, 16] {
            let (p, _) = crate::gf::prime_power(q).unwrap();
            for m in 1..=2 {
                for k in 0..=q - 2 {
                    let fast = adeg(m, k, q).unwrap();
                    let mut slow = Vec::new();
                    let mut d = vec![0u32; m];
                    loop {
                        if shadows_ok(&d, q, p, k) {
                            slow.push(d.clone());
                        }
                        if !odometer(&mut d, q) {
                            break;
                        }
                    }
                    assert_eq!(fast, DegreeSet::from_tuples(m, slow), "q={q} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let f = FiniteField::with_order(4).unwrap();
        assert!(monomial_membership_oracle(&f, &[2, 2], 2, Space::Affine));
        assert!(!monomial_membership_oracle(&f, &[3, 3], 2, Space::Affine));
        assert!(monomial_membership_oracle(&f, &[2, 2, 2], 3, Space::Projective));
    }

    #[test]
    fn rm_sandwich() {
        for q in [4u32, 8, 9] {
            for m in 1..=3usize {
                for k in 1..q - 1 {
                    assert!(rm_degrees(m, k, q).is_subset(&adeg(m, k, q).unwrap()));
                }
                for k in 1..q {
                    let lifted = DegreeSet::from_tuples(
                        m + 1,
                        prm_degrees(m, k, q).iter().map(|d| {
                            let mut d = d.to_vec();
                            let l = d.iter().position(|&x| x != 0).unwrap();
                            d[l] += (m as u32 - 1) * (q - 1);
                            d
                        }),
                    );
                    assert!(lifted.is_subset(&pdeg(m, k, q).unwrap()), "q={q} m={m} k={k}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn reductions_are_idempotent(d in proptest::collection::vec(0u32..40, 1..5), qi in 0usize..4) {
            let q = [2u32, 3, 4, 8][qi];
            let a = a_reduce(&d, q);
            prop_assert!(is_a_reduced(&a, q));
            prop_assert_eq!(a_reduce(&a, q), a.clone());
            prop_assert_eq!(a == d, is_a_reduced(&d, q));
            let p = p_reduce(&d, q);
            prop_assert!(is_p_reduced(&p, q));
            prop_assert_eq!(p.iter().sum::<u32>(), d.iter().sum::<u32>());
            prop_assert_eq!(p_reduce(&p, q), p);
        }

        #[test]
        fn p_reduction_is_order_independent(
            d in proptest::collection::vec(0u32..30, 2..5),
            choices in proptest::collection::vec(any::<u16>(), 64),
            qi in 0usize..3,
        ) {
            let q = [3u32, 4, 5][qi];
            let mut x = d.clone();
            for c in choices.iter().cycle().take(1000) {
                let moves: Vec<(usize, usize)> = (0..x.len())
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .filter(|&(i, j)| x[j] >= q && x[i] >= 1)
                    .collect();
                if moves.is_empty() {
                    break;
                }
                let (i, j) = moves[*c as usize % moves.len()];
                x[i] += q - 1;
                x[j] -= q - 1;
            }
            prop_assert_eq!(x, p_reduce(&d, q));
        }

        #[test]
        fn a_reduction_preserves_evaluation(d in proptest::collection::vec(0u32..20, 1..3), qi in 0usize..3) {
            let q = [3u32, 4, 5][qi];
            let f = FiniteField::with_order(q).unwrap();
            let pts = Support::new(&f, d.len(), Space::Affine).unwrap();
            let r = a_reduce(&d, q);
            for x in pts.iter() {
                let ev = |e: &[u32]| x.iter().zip(e).fold(Elem::ONE, |acc, (&xi, &ei)| f.mul(acc, f.pow(xi, ei as u64)));
                prop_assert_eq!(ev(&d), ev(&r));
            }
        }

        #[test]
        fn p_reduction_preserves_evaluation(d in proptest::collection::vec(0u32..20, 2..4), qi in 0usize..3) {
            let q = [3u32, 4, 5][qi];
            let f = FiniteField::with_order(q).unwrap();
            let pts = Support::new(&f, d.len() - 1, Space::Projective).unwrap();
            let r = p_reduce(&d, q);
            for x in pts.iter() {
                let ev = |e: &[u32]| x.iter().zip(e).fold(Elem::ONE, |acc, (&xi, &ei)| f.mul(acc, f.pow(xi, ei as u64)));
                prop_assert_eq!(ev(&d), ev(&r));
            }
        }
    }
}
