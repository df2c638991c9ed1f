//! Affine and projective spaces over `GF(q)`, their lines, and line
//! embeddings `P^1 -> P^m`.
//!
//! # Point order
//!
//! Affine points of `A^m` are ordered lexicographically, first coordinate
//! most significant, using the canonical element order. Projective points are
//! grouped in charts by the position of their leading one: first all points
//! `(1 : * : ... : *)`, then `(0 : 1 : * ...)`, down to `(0 : ... : 0 : 1)`,
//! each chart ordered lexicographically. So the first `q^m` positions of
//! `P^m` are the affine points `(1 : a)` in affine order, and the remaining
//! positions are the hyperplane at infinity in the order of `P^(m-1)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, FiniteField};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Space {
    Affine,
    Projective,
}

/// `theta_{m,q} = (q^(m+1) - 1) / (q - 1)`, the number of points of `P^m`.
pub fn theta(m: usize, q: u32) -> usize {
    (0..=m).map(|i| (q as usize).pow(i as u32)).sum()
}

/// A projective point in standard form: its leftmost nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Elem>,
}

impl ProjectivePoint {
    /// Accepts only coordinates already in standard form.
    pub fn new(coords: Vec<Elem>) -> Result<Self> {
        match coords.iter().find(|c| !c.is_zero()) {
            None => Err(Error::ZeroVector),
            Some(&c) if c == Elem::ONE => Ok(ProjectivePoint { coords }),
            Some(_) => Err(Error::Unsupported(
                "leading nonzero coordinate of a standard point must be 1".into(),
            )),
        }
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    /// Position of the leading one.
    pub fn chart(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("nonzero point")
    }

    /// Dimension `m` of the ambient space.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c.raw())?;
        }
        write!(f, ")")
    }
}

/// Returns the standard representative of the projective point spanned by
/// `v` together with the scalar `lambda` such that `point = lambda * v`.
pub fn standardize(f: &FiniteField, v: &[Elem]) -> Result<(ProjectivePoint, Elem)> {
    let lead = v.iter().copied().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
    let lambda = f.inv(lead)?;
    let coords = v.iter().map(|&c| f.mul(lambda, c)).collect();
    Ok((ProjectivePoint { coords }, lambda))
}

/// The ordered evaluation points of `A^m` or `P^m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Support {
    q: u32,
    m: usize,
    space: Space,
    width: usize,
    coords: Vec<Elem>,
}

impl Support {
    pub fn new(f: &FiniteField, m: usize, space: Space) -> Result<Self> {
        if m == 0 {
            return Err(Error::out_of_range("m", 0, 1, i64::MAX));
        }
        let q = f.order();
        let mut coords = Vec::new();
        let width = match space {
            Space::Affine => {
                for idx in 0..(q as usize).pow(m as u32) {
                    push_lex(&mut coords, idx, m, q);
                }
                m
            }
            Space::Projective => {
                for lead in 0..=m {
                    let tail = m - lead;
                    for idx in 0..(q as usize).pow(tail as u32) {
                        coords.extend(core::iter::repeat(Elem::ZERO).take(lead));
                        coords.push(Elem::ONE);
                        push_lex(&mut coords, idx, tail, q);
                    }
                }
                m + 1
            }
        };
        Ok(Support {
            q,
            m,
            space,
            width,
            coords,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Number of coordinates of each point (`m` or `m + 1`).
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[Elem] {
        &self.coords[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Elem]> {
        self.coords.chunks_exact(self.width)
    }

    pub fn projective_point(&self, i: usize) -> ProjectivePoint {
        ProjectivePoint {
            coords: self.point(i).to_vec(),
        }
    }

    /// Position of a point given in the support's own form (standard form for
    /// projective supports).
    pub fn index_of(&self, p: &[Elem]) -> Option<usize> {
        if p.len() != self.width || p.iter().any(|c| c.raw() >= self.q) {
            return None;
        }
        let q = self.q as usize;
        match self.space {
            Space::Affine => Some(lex_index(p, q)),
            Space::Projective => {
                let lead = p.iter().position(|c| !c.is_zero())?;
                if p[lead] != Elem::ONE {
                    return None;
                }
                let offset: usize = (0..lead).map(|i| q.pow((self.m - i) as u32)).sum();
                Some(offset + lex_index(&p[lead + 1..], q))
            }
        }
    }

    /// Position of the projective point spanned by a nonzero vector, with the
    /// standardizing scalar.
    pub fn locate(&self, f: &FiniteField, v: &[Elem]) -> Result<(usize, Elem)> {
        let lead = v.iter().copied().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
        let lambda = f.inv(lead)?;
        let q = self.q as usize;
        let pos = v.iter().position(|c| !c.is_zero()).expect("nonzero");
        let offset: usize = (0..pos).map(|i| q.pow((self.m - i) as u32)).sum();
        let tail = v[pos + 1..]
            .iter()
            .fold(0usize, |acc, &c| acc * q + f.mul(lambda, c).index());
        Ok((offset + tail, lambda))
    }

    /// Positions of the hyperplane at infinity `X_0 = 0` of a projective
    /// support; they form the contiguous range `q^m .. n`.
    pub fn infinity_range(&self) -> core::ops::Range<usize> {
        (self.q as usize).pow(self.m as u32)..self.len()
    }

    /// The `theta_{m-1,q}` lines through point `p`, each as the sorted
    /// positions of its `q + 1` points.
    pub fn lines_through(&self, f: &FiniteField, p: usize) -> Vec<Vec<usize>> {
        assert_eq!(self.space, Space::Projective, "lines are projective");
        let n = self.len();
        let mut covered = vec![false; n];
        covered[p] = true;
        let base = self.point(p).to_vec();
        let mut lines = Vec::new();
        for other in 0..n {
            if covered[other] {
                continue;
            }
            let mut line = vec![p];
            let dir = self.point(other).to_vec();
            for t in f.elements() {
                let v: Vec<Elem> = dir
                    .iter()
                    .zip(&base)
                    .map(|(&d, &b)| f.add(d, f.mul(t, b)))
                    .collect();
                let (idx, _) = self.locate(f, &v).expect("independent points");
                covered[idx] = true;
                line.push(idx);
            }
            line.sort_unstable();
            lines.push(line);
        }
        lines
    }

    /// Every line of the projective space, each as sorted positions, in
    /// lexicographic order.
    pub fn all_lines(&self, f: &FiniteField) -> Vec<Vec<usize>> {
        let mut set = BTreeSet::new();
        for p in 0..self.len() {
            for l in self.lines_through(f, p) {
                if l[0] == p {
                    set.insert(l);
                }
            }
        }
        set.into_iter().collect()
    }
}

fn push_lex(out: &mut Vec<Elem>, mut idx: usize, len: usize, q: u32) {
    let start = out.len();
    out.resize(start + len, Elem::ZERO);
    for j in (0..len).rev() {
        out[start + j] = Elem::from_index((idx % q as usize) as u32);
        idx /= q as usize;
    }
}

fn lex_index(p: &[Elem], q: usize) -> usize {
    p.iter().fold(0, |acc, c| acc * q + c.index())
}

/// A rank-2 linear map `L : F_q^2 -> F_q^(m+1)`, `L(x, y) = x * col0 + y * col1`,
/// viewed as the embedding `P^1 -> P^m`.
///
/// `P^1` is ordered `(1:0), (1:1), ..., (1:w), (0:1)` by the element order of
/// the second coordinate, so position `q` is the point at infinity
/// `(0:1)`, which `L` sends to the span of `col1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LineEmbedding {
    col0: Vec<Elem>,
    col1: Vec<Elem>,
}

impl LineEmbedding {
    pub fn new(f: &FiniteField, col0: Vec<Elem>, col1: Vec<Elem>) -> Result<Self> {
        if col0.len() != col1.len() {
            return Err(Error::LengthMismatch {
                expected: col0.len(),
                got: col1.len(),
            });
        }
        if !independent(f, &col0, &col1) {
            return Err(Error::Singular);
        }
        Ok(LineEmbedding { col0, col1 })
    }

    /// Uniform over embeddings whose second column is exactly `p`: the first
    /// column is drawn uniformly outside `span(p)` by rejection.
    pub fn random_through<R: Rng + ?Sized>(f: &FiniteField, p: &[Elem], rng: &mut R) -> Self {
        loop {
            let col0: Vec<Elem> = (0..p.len())
                .map(|_| Elem::from_index(rng.gen_range(0..f.order())))
                .collect();
            if independent(f, &col0, p) {
                return LineEmbedding {
                    col0,
                    col1: p.to_vec(),
                };
            }
        }
    }

    pub fn columns(&self) -> (&[Elem], &[Elem]) {
        (&self.col0, &self.col1)
    }

    /// `m`, the dimension of the target space.
    pub fn dim(&self) -> usize {
        self.col0.len() - 1
    }

    /// `L(x, y)` as a raw vector.
    pub fn apply(&self, f: &FiniteField, x: Elem, y: Elem) -> Vec<Elem> {
        self.col0
            .iter()
            .zip(&self.col1)
            .map(|(&a, &b)| f.add(f.mul(x, a), f.mul(y, b)))
            .collect()
    }

    /// `L` at position `j` of `P^1`.
    pub fn apply_at(&self, f: &FiniteField, j: usize) -> Vec<Elem> {
        if j == f.order() as usize {
            self.col1.clone()
        } else {
            self.apply(f, Elem::ONE, Elem::from_index(j as u32))
        }
    }

    /// For each position of `P^1`, the support position of its image and the
    /// scalar `lambda` with `std(L(x)) = lambda * L(x)`.
    pub fn image(&self, f: &FiniteField, support: &Support) -> Vec<(usize, Elem)> {
        (0..=f.order() as usize)
            .map(|j| {
                support
                    .locate(f, &self.apply_at(f, j))
                    .expect("rank 2 maps never hit zero")
            })
            .collect()
    }

    /// `w_L^v`: entry `j` is `lambda_j^v`.
    pub fn weight_vector(&self, f: &FiniteField, support: &Support, v: u64) -> Vec<Elem> {
        self.image(f, support)
            .into_iter()
            .map(|(_, l)| f.pow(l, v))
            .collect()
    }
}

fn independent(f: &FiniteField, a: &[Elem], b: &[Elem]) -> bool {
    // rank of the 2-column matrix is 2 iff some 2x2 minor is nonzero
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let det = f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
            if !det.is_zero() {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn e(x: u32) -> Elem {
        Elem::from_index(x)
    }

    #[test]
    fn point_counts() {
        let f3 = FiniteField::with_order(3).unwrap();
        assert_eq!(Support::new(&f3, 2, Space::Projective).unwrap().len(), 13);
        assert_eq!(Support::new(&f3, 1, Space::Projective).unwrap().len(), 4);
        let f4 = FiniteField::with_order(4).unwrap();
        assert_eq!(Support::new(&f4, 2, Space::Affine).unwrap().len(), 16);
        assert_eq!(Support::new(&f4, 3, Space::Projective).unwrap().len(), 85);
        assert_eq!(theta(2, 4), 21);
    }

    #[test]
    fn index_of_inverts_enumeration() {
        for q in [2, 3, 4, 5] {
            let f = FiniteField::with_order(q).unwrap();
            for m in 1..=3 {
                for space in [Space::Affine, Space::Projective] {
                    let s = Support::new(&f, m, space).unwrap();
                    let mut seen = BTreeSet::new();
                    for (i, p) in s.iter().enumerate() {
                        assert_eq!(s.index_of(p), Some(i));
                        assert!(seen.insert(p.to_vec()));
                    }
                }
                let s = Support::new(&f, m, Space::Projective).unwrap();
                let a = Support::new(&f, m, Space::Affine).unwrap();
                for (i, p) in a.iter().enumerate() {
                    assert_eq!(s.point(i)[0], Elem::ONE);
                    assert_eq!(&s.point(i)[1..], p);
                }
                let inf = Support::new(&f, m.max(2) - 1, Space::Projective).unwrap();
                if m >= 2 {
                    for (j, i) in s.infinity_range().enumerate() {
                        assert_eq!(s.point(i)[0], Elem::ZERO);
                        assert_eq!(&s.point(i)[1..], inf.point(j));
                    }
                }
            }
        }
    }

    #[test]
    fn standardize_examples() {
        let f = FiniteField::with_order(3).unwrap();
        let (p, l) = standardize(&f, &[e(2), e(1), e(1)]).unwrap();
        assert_eq!(p.coords(), &[e(1), e(2), e(2)]);
        assert_eq!(l, e(2));
        let (p, l) = standardize(&f, &[e(0), e(2), e(1)]).unwrap();
        assert_eq!(p.coords(), &[e(0), e(1), e(2)]);
        assert_eq!(l, e(2));
        let (p, l) = standardize(&f, &[e(1), e(0), e(0)]).unwrap();
        assert_eq!(p.coords(), &[e(1), e(0), e(0)]);
        assert_eq!(l, Elem::ONE);
        assert_eq!(standardize(&f, &[e(0), e(0)]).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn lines_partition_the_rest() {
        for (q, m) in [(3, 2), (4, 3), (2, 3), (5, 2)] {
            let f = FiniteField::with_order(q).unwrap();
            let s = Support::new(&f, m, Space::Projective).unwrap();
            for p in [0, s.len() / 2, s.len() - 1] {
                let lines = s.lines_through(&f, p);
                assert_eq!(lines.len(), theta(m - 1, q));
                let mut all = BTreeSet::new();
                for l in &lines {
                    assert_eq!(l.len(), q as usize + 1);
                    assert!(l.contains(&p));
                    for &x in l.iter().filter(|&&x| x != p) {
                        assert!(all.insert(x), "lines through p overlap");
                    }
                }
                assert_eq!(all.len(), s.len() - 1);
            }
        }
    }

    #[test]
    fn line_over_f3_matches_hand_listing() {
        let f = FiniteField::with_order(3).unwrap();
        let l = LineEmbedding::new(&f, vec![e(1), e(0), e(1)], vec![e(1), e(1), e(0)]).unwrap();
        let p2 = Support::new(&f, 2, Space::Projective).unwrap();
        // the worked line over F_3, with P^1 listed as (1:1),(1:2),(1:0),(0:1)
        let order = [1usize, 2, 0, 3];
        let img = l.image(&f, &p2);
        let pts: Vec<Vec<Elem>> = order.iter().map(|&j| p2.point(img[j].0).to_vec()).collect();
        assert_eq!(
            pts,
            vec![
                vec![e(1), e(2), e(2)],
                vec![e(0), e(1), e(2)],
                vec![e(1), e(0), e(1)],
                vec![e(1), e(1), e(0)],
            ]
        );
        let w = l.weight_vector(&f, &p2, 1);
        let w: Vec<Elem> = order.iter().map(|&j| w[j]).collect();
        assert_eq!(w, vec![e(2), e(2), e(1), e(1)]);
    }

    #[test]
    fn rank_one_is_rejected() {
        let f = FiniteField::with_order(4).unwrap();
        assert_eq!(
            LineEmbedding::new(&f, vec![e(1), e(2)], vec![e(2), e(3)]).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn random_embedding_ends_at_p() {
        let f = FiniteField::with_order(4).unwrap();
        let s = Support::new(&f, 2, Space::Projective).unwrap();
        let mut rng = rand::rngs::SmallRng::seed_from_u64(3);
        for p in 0..s.len() {
            let l = LineEmbedding::random_through(&f, s.point(p), &mut rng);
            let img = l.image(&f, &s);
            assert_eq!(img[4], (p, Elem::ONE));
            let set: BTreeSet<usize> = img.iter().map(|x| x.0).collect();
            assert_eq!(set.len(), 5);
        }
    }
}
