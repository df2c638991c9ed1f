//! Monomial evaluation codes: Reed-Solomon, Reed-Muller, their projective
//! versions, and affine and projective lifted codes.
//!
//! A code is described by its degree set. Generator rows are the evaluations
//! of the monomials `X^d` (with `0^0 = 1`) over the ordered support, in
//! lexicographic order of `d`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::degrees::{self, DegreeSet};
use crate::error::{check_range, Error, Result};
use crate::geometry::{LineEmbedding, Space, Support};
use crate::gf::{Elem, FiniteField};
use crate::matrix::{Matrix, RowSpace};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CodeKind {
    Rs,
    Prs,
    Rm,
    Prm,
    Lift,
    PLift,
}

impl CodeKind {
    pub const ALL: [CodeKind; 6] = [
        CodeKind::Rs,
        CodeKind::Prs,
        CodeKind::Rm,
        CodeKind::Prm,
        CodeKind::Lift,
        CodeKind::PLift,
    ];

    pub fn space(self) -> Space {
        match self {
            CodeKind::Rs | CodeKind::Rm | CodeKind::Lift => Space::Affine,
            CodeKind::Prs | CodeKind::Prm | CodeKind::PLift => Space::Projective,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CodeKind::Rs => "RS",
            CodeKind::Prs => "PRS",
            CodeKind::Rm => "RM",
            CodeKind::Prm => "PRM",
            CodeKind::Lift => "Lift",
            CodeKind::PLift => "PLift",
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CodeKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(alloc::format!("unknown code kind {s:?}")))
    }
}

/// A word over a support, with optional erasures.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word {
    symbols: Vec<Option<Elem>>,
}

impl Word {
    pub fn new(symbols: Vec<Option<Elem>>) -> Self {
        Word { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Elem> {
        self.symbols[i]
    }

    pub fn set(&mut self, i: usize, x: Option<Elem>) {
        self.symbols[i] = x;
    }

    pub fn symbols(&self) -> &[Option<Elem>] {
        &self.symbols
    }

    pub fn erasures(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_none()).count()
    }

    /// The symbols when nothing is erased.
    pub fn to_elems(&self) -> Option<Vec<Elem>> {
        self.symbols.iter().copied().collect()
    }
}

impl From<Vec<Elem>> for Word {
    fn from(v: Vec<Elem>) -> Self {
        Word {
            symbols: v.into_iter().map(Some).collect(),
        }
    }
}

/// A linear code given by a generator matrix over a field.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FiniteField,
    generator: Matrix,
}

impl LinearCode {
    pub fn new(field: FiniteField, generator: Matrix) -> Self {
        LinearCode { field, generator }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn len(&self) -> usize {
        self.generator.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.generator.cols() == 0
    }

    pub fn dim(&self) -> usize {
        self.generator.rank(&self.field)
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::new(&self.field, &self.generator)
    }

    /// Equality of row spaces.
    pub fn equals(&self, other: &LinearCode) -> bool {
        code_equal(&self.field, &self.generator, &other.generator)
    }
}

/// Row-space equality by ranks: `rank G1 = rank G2 = rank [G1; G2]`.
pub fn code_equal(f: &FiniteField, g1: &Matrix, g2: &Matrix) -> bool {
    if g1.cols() != g2.cols() {
        return false;
    }
    let (r1, r2) = (g1.rank(f), g2.rank(f));
    r1 == r2 && g1.vstack(g2).expect("same width").rank(f) == r1
}

/// A monomial code with its degree set, support and generator matrix.
#[derive(Clone, Debug)]
pub struct MonomialCode {
    kind: CodeKind,
    m: usize,
    k: u32,
    v: Option<u32>,
    field: FiniteField,
    degrees: DegreeSet,
    support: Support,
    generator: Matrix,
}

impl MonomialCode {
    /// Builds `kind` over `field`. Ranges: `RS` and `PRS` need `m = 1` with
    /// `k <= q-1` and `k <= q`; `RM` takes `k <= m(q-1)`, `PRM`
    /// `1 <= k <= m(q-1)`; `Lift` takes `k <= q-2` and `PLift` `1 <= k <= q-1`.
    pub fn new(field: &FiniteField, kind: CodeKind, m: usize, k: u32) -> Result<Self> {
        let q = field.order();
        check_range("m", m as i64, 1, 16)?;
        let mq = m as i64 * (q as i64 - 1);
        let (degrees, v) = match kind {
            CodeKind::Rs => {
                check_range("m", m as i64, 1, 1)?;
                check_range("k", k as i64, 0, q as i64 - 1)?;
                (DegreeSet::from_tuples(1, (0..=k).map(|i| [i])), None)
            }
            CodeKind::Prs => {
                check_range("m", m as i64, 1, 1)?;
                check_range("k", k as i64, 0, q as i64)?;
                (DegreeSet::from_tuples(2, (0..=k).map(|i| [k - i, i])), Some(k))
            }
            CodeKind::Rm => {
                check_range("k", k as i64, 0, mq)?;
                (degrees::rm_degrees(m, k, q), None)
            }
            CodeKind::Prm => {
                check_range("k", k as i64, 1, mq)?;
                (degrees::prm_degrees(m, k, q), Some(k))
            }
            CodeKind::Lift => (degrees::adeg(m, k, q)?, None),
            CodeKind::PLift => (
                degrees::pdeg(m, k, q)?,
                Some(degrees::plift_degree(m, k, q)),
            ),
        };
        let support = Support::new(field, m, kind.space())?;
        let generator = evaluation_matrix(field, &degrees, &support);
        Ok(MonomialCode {
            kind,
            m,
            k,
            v,
            field: field.clone(),
            degrees,
            support,
            generator,
        })
    }

    /// Same as [`new`](Self::new) over the field of order `q` with its
    /// default modulus.
    pub fn with_order(q: u32, kind: CodeKind, m: usize, k: u32) -> Result<Self> {
        Self::new(&FiniteField::with_order(q)?, kind, m, k)
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Homogeneous degree for projective kinds.
    pub fn v(&self) -> Option<u32> {
        self.v
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn degrees(&self) -> &DegreeSet {
        &self.degrees
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn row_space(&self) -> RowSpace {
        RowSpace::new(&self.field, &self.generator)
    }

    pub fn to_linear(&self) -> LinearCode {
        LinearCode::new(self.field.clone(), self.generator.clone())
    }

    /// `msg * G`.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.left_mul(&self.field, msg)
    }

    /// Evaluation of `sum_i msg_i X^(d_i)` at the point at position `i`,
    /// without materializing the codeword.
    pub fn encode_at(&self, msg: &[Elem], i: usize) -> Elem {
        let f = &self.field;
        msg.iter()
            .zip(self.degrees.iter())
            .fold(Elem::ZERO, |acc, (&c, d)| {
                f.add(acc, f.mul(c, monomial(f, d, self.support.point(i))))
            })
    }
}

/// `x^d` with `0^0 = 1`.
pub fn monomial(f: &FiniteField, d: &[u32], x: &[Elem]) -> Elem {
    d.iter()
        .zip(x)
        .fold(Elem::ONE, |acc, (&e, &xi)| f.mul(acc, f.pow(xi, e as u64)))
}

/// One row per degree tuple, one column per support point.
pub fn evaluation_matrix(f: &FiniteField, degrees: &DegreeSet, support: &Support) -> Matrix {
    let mut g = Matrix::zeros(degrees.len(), support.len());
    for (i, d) in degrees.iter().enumerate() {
        let row = g.row_mut(i);
        for (j, x) in support.iter().enumerate() {
            row[j] = monomial(f, d, x);
        }
    }
    g
}

/// `ev_{P^1}(f o L)` from `c = ev_{P^m}(f)` with `f` homogeneous of degree
/// `v`: entry `j` is `lambda_j^(-v) * c[L(x_j)]`.
pub fn restrict_to_line(
    f: &FiniteField,
    support: &Support,
    c: &[Elem],
    l: &LineEmbedding,
    v: u64,
) -> Result<Vec<Elem>> {
    if c.len() != support.len() {
        return Err(Error::LengthMismatch {
            expected: support.len(),
            got: c.len(),
        });
    }
    Ok(l.image(f, support)
        .into_iter()
        .map(|(idx, lambda)| {
            let w = f.pow(lambda, v);
            f.div(c[idx], w).expect("weights are nonzero")
        })
        .collect())
}

/// `{c|A^m : c in C, c = 0 on the hyperplane at infinity}` for a projective
/// code, as a generator matrix over the affine points.
pub fn shorten_at_infinity(code: &MonomialCode) -> Result<LinearCode> {
    if code.kind().space() != Space::Projective {
        return Err(Error::Unsupported(
            "shortening at infinity needs a projective code".into(),
        ));
    }
    let f = code.field();
    let g = code.generator();
    let inf: Vec<usize> = code.support().infinity_range().collect();
    let aff: Vec<usize> = (0..inf[0]).collect();
    let kernel = g.select_columns(&inf).left_nullspace(f);
    let short = kernel.mul(f, &g.select_columns(&aff))?;
    Ok(LinearCode::new(f.clone(), short))
}

/// `{c|Pi_inf : c in C}` for a projective code, as a generator matrix over
/// the points at infinity (ordered like `P^(m-1)`).
pub fn puncture_to_infinity(code: &MonomialCode) -> Result<LinearCode> {
    if code.kind().space() != Space::Projective {
        return Err(Error::Unsupported(
            "puncturing to infinity needs a projective code".into(),
        ));
    }
    let f = code.field();
    let inf: Vec<usize> = code.support().infinity_range().collect();
    let (basis, _) = code.generator().select_columns(&inf).rref(f);
    Ok(LinearCode::new(f.clone(), basis))
}

/// `ev(f o M)` from `c = ev(f)` with `f` homogeneous of degree `v`: entry at
/// `x` is `lambda^(-v) * c[std(Mx)]` where `std(Mx) = lambda * Mx`.
pub fn apply_projective_action(
    f: &FiniteField,
    support: &Support,
    mat: &Matrix,
    c: &[Elem],
    v: u64,
) -> Result<Vec<Elem>> {
    let n = support.width();
    if mat.rows() != n || mat.cols() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: mat.rows(),
        });
    }
    if mat.rank(f) < n {
        return Err(Error::Singular);
    }
    if c.len() != support.len() {
        return Err(Error::LengthMismatch {
            expected: support.len(),
            got: c.len(),
        });
    }
    support
        .iter()
        .map(|x| {
            let y = mat.mul_vec(f, x)?;
            let (idx, lambda) = support.locate(f, &y)?;
            Ok(f.div(c[idx], f.pow(lambda, v))?)
        })
        .collect()
}

/// `ev(f o A)` from `c = ev(f)` for the affine map `x -> Ax + b`.
pub fn apply_affine_map(
    f: &FiniteField,
    support: &Support,
    a: &Matrix,
    b: &[Elem],
    c: &[Elem],
) -> Result<Vec<Elem>> {
    let n = support.width();
    if a.rows() != n || a.cols() != n || b.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: a.rows(),
        });
    }
    if a.rank(f) < n {
        return Err(Error::Singular);
    }
    support
        .iter()
        .map(|x| {
            let y: Vec<Elem> = a
                .mul_vec(f, x)?
                .into_iter()
                .zip(b)
                .map(|(u, &w)| f.add(u, w))
                .collect();
            let idx = support.index_of(&y).expect("affine image is a point");
            Ok(c[idx])
        })
        .collect()
}

/// Code descriptor used by file formats.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Descriptor {
    pub kind: CodeKind,
    pub q: u32,
    pub m: usize,
    pub k: u32,
    pub v: Option<u32>,
    pub dim: usize,
    pub length: usize,
}

impl MonomialCode {
    pub fn descriptor(&self) -> Descriptor {
        Descriptor {
            kind: self.kind,
            q: self.q(),
            m: self.m,
            k: self.k,
            v: self.v,
            dim: self.dim(),
            length: self.len(),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{}({}, {}) [n={}, k={}]",
            self.kind, self.q, self.m, self.k, self.length, self.dim
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degrees::is_prs_word;
    use alloc::vec;
    use rand::{Rng, SeedableRng};

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn e(x: u32) -> Elem {
        Elem::from_index(x)
    }

    #[test]
    fn plift_example_dimensions() {
        let c = MonomialCode::with_order(4, CodeKind::PLift, 2, 3).unwrap();
        assert_eq!((c.len(), c.dim()), (21, 11));
        assert_eq!(c.v(), Some(6));
        let l = MonomialCode::with_order(16, CodeKind::Lift, 2, 14).unwrap();
        assert_eq!(l.dim(), 175);
        for q in [3, 4, 5, 8] {
            for k in 0..=q {
                let c = MonomialCode::with_order(q, CodeKind::Prs, 1, k).unwrap();
                assert_eq!((c.len(), c.dim()), (q as usize + 1, k as usize + 1));
            }
        }
    }

    #[test]
    fn generators_have_full_rank() {
        for q in [2u32, 3, 4, 5] {
            let f = FiniteField::with_order(q).unwrap();
            for m in 1..=3usize {
                for kind in CodeKind::ALL {
                    let range = match kind {
                        CodeKind::Rs | CodeKind::Prs if m > 1 => continue,
                        CodeKind::Rs => 0..=q - 1,
                        CodeKind::Prs => 0..=q,
                        CodeKind::Rm => 0..=m as u32 * (q - 1),
                        CodeKind::Prm => 1..=m as u32 * (q - 1),
                        CodeKind::Lift => 0..=q - 2,
                        CodeKind::PLift => 1..=q - 1,
                    };
                    for k in range {
                        let c = MonomialCode::new(&f, kind, m, k).unwrap();
                        assert_eq!(c.generator().rank(&f), c.dim(), "{kind} q={q} m={m} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn classical_dimension_formulas() {
        for q in [3u32, 4, 5, 7] {
            for m in 1..=3usize {
                for d in 0..q {
                    let rm = MonomialCode::with_order(q, CodeKind::Rm, m, d).unwrap();
                    assert_eq!(rm.dim() as u64, binom(m as u64 + d as u64, m as u64));
                    if d >= 1 {
                        let prm = MonomialCode::with_order(q, CodeKind::Prm, m, d).unwrap();
                        assert_eq!(prm.dim() as u64, binom(m as u64 + d as u64, d as u64));
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_codes_coincide() {
        for q in [3u32, 4, 5] {
            let f = FiniteField::with_order(q).unwrap();
            for k in 0..q {
                let rm = MonomialCode::new(&f, CodeKind::Rm, 1, k).unwrap();
                let rs = MonomialCode::new(&f, CodeKind::Rs, 1, k).unwrap();
                assert!(code_equal(&f, rm.generator(), rs.generator()));
                if k >= 1 {
                    let prm = MonomialCode::new(&f, CodeKind::Prm, 1, k).unwrap();
                    let prs = MonomialCode::new(&f, CodeKind::Prs, 1, k).unwrap();
                    assert!(code_equal(&f, prm.generator(), prs.generator()));
                    let pl = MonomialCode::new(&f, CodeKind::PLift, 1, k).unwrap();
                    assert!(code_equal(&f, pl.generator(), prs.generator()));
                }
            }
        }
    }

    #[test]
    fn rm_inside_lift() {
        for q in [4u32, 8] {
            let f = FiniteField::with_order(q).unwrap();
            for k in 0..=q - 2 {
                let rm = MonomialCode::new(&f, CodeKind::Rm, 2, k).unwrap();
                let lift = MonomialCode::new(&f, CodeKind::Lift, 2, k).unwrap();
                assert!(lift.row_space().contains_space(&f, rm.generator()));
            }
        }
    }

    #[test]
    fn encode_basics() {
        let c = MonomialCode::with_order(4, CodeKind::PLift, 2, 3).unwrap();
        let f = c.field();
        assert!(c.encode(&vec![Elem::ZERO; 11]).unwrap().iter().all(|x| x.is_zero()));
        for i in 0..11 {
            let mut msg = vec![Elem::ZERO; 11];
            msg[i] = Elem::ONE;
            assert_eq!(c.encode(&msg).unwrap(), c.generator().row(i));
        }
        let msg: Vec<Elem> = (0..11).map(|i| e(i % 4)).collect();
        let word = c.encode(&msg).unwrap();
        for (i, &w) in word.iter().enumerate() {
            assert_eq!(c.encode_at(&msg, i), w);
        }
        assert_eq!(
            c.encode(&[Elem::ONE]).unwrap_err(),
            Error::LengthMismatch { expected: 11, got: 1 }
        );
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn small_projective_example() {
        let f = FiniteField::with_order(3).unwrap();
        let c = MonomialCode::new(&f, CodeKind::Prm, 2, 1).unwrap();
        let pos = c.degrees().position(&[0, 1, 0]).unwrap();
        let mut msg = vec![Elem::ZERO; c.dim()];
        msg[pos] = Elem::ONE;
        let word = c.encode(&msg).unwrap();
        // P^2(F_3) in a hand-listed order with the expected values of X_1
        let listed: [([u32; 3], u32); 13] = [
            ([1, 1, 1], 1),
            ([1, 1, 2], 1),
            ([1, 1, 0], 1),
            ([1, 2, 1], 2),
            ([1, 2, 2], 2),
            ([1, 2, 0], 2),
            ([1, 0, 1], 0),
            ([1, 0, 2], 0),
            ([1, 0, 0], 0),
            ([0, 1, 1], 1),
            ([0, 1, 2], 1),
            ([0, 1, 0], 1),
            ([0, 0, 1], 0),
        ];
        for (p, val) in listed {
            let p: Vec<Elem> = p.iter().map(|&x| e(x)).collect();
            let idx = c.support().index_of(&p).unwrap();
            assert_eq!(word[idx], e(val));
        }
        // restriction along the worked line, read back in the listed P^1 order
        let l = LineEmbedding::new(&f, vec![e(1), e(0), e(1)], vec![e(1), e(1), e(0)]).unwrap();
        let r = restrict_to_line(&f, c.support(), &word, &l, 1).unwrap();
        let order = [1usize, 2, 0, 3];
        let got: Vec<Elem> = order.iter().map(|&j| r[j]).collect();
        assert_eq!(got, vec![e(1), e(2), e(0), e(1)]);
        let raw: Vec<Elem> = l.image(&f, c.support()).iter().map(|&(i, _)| word[i]).collect();
        let raw: Vec<Elem> = order.iter().map(|&j| raw[j]).collect();
        assert_eq!(raw, vec![e(2), e(1), e(0), e(1)]);
    }

    #[test]
    fn restrictions_of_plift_rows_are_prs() {
        for q in [3u32, 4, 5, 7, 8] {
            let f = FiniteField::with_order(q).unwrap();
            for k in 1..q {
                let c = MonomialCode::new(&f, CodeKind::PLift, 2, k).unwrap();
                let s = c.support();
                let lines = s.all_lines(&f);
                for row in c.generator().iter_rows() {
                    for line in &lines {
                        let l = LineEmbedding::new(
                            &f,
                            s.point(line[0]).to_vec(),
                            s.point(line[1]).to_vec(),
                        )
                        .unwrap();
                        let r = restrict_to_line(&f, s, row, &l, c.v().unwrap() as u64).unwrap();
                        assert!(is_prs_word(&f, &r, k), "q={q} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_matches_direct_evaluation() {
        let f = FiniteField::with_order(4).unwrap();
        let c = MonomialCode::new(&f, CodeKind::PLift, 2, 3).unwrap();
        let v = c.v().unwrap() as u64;
        let mut rng = rand::rngs::SmallRng::seed_from_u64(11);
        for _ in 0..50 {
            let msg: Vec<Elem> = (0..c.dim()).map(|_| e(rng.gen_range(0..4))).collect();
            let word = c.encode(&msg).unwrap();
            let p = rng.gen_range(0..c.len());
            let l = LineEmbedding::random_through(&f, c.support().point(p), &mut rng);
            let r = restrict_to_line(&f, c.support(), &word, &l, v).unwrap();
            for j in 0..=4 {
                let x = l.apply_at(&f, j);
                let direct = msg
                    .iter()
                    .zip(c.degrees().iter())
                    .fold(Elem::ZERO, |acc, (&m, d)| f.add(acc, f.mul(m, monomial(&f, d, &x))));
                assert_eq!(r[j], direct);
            }
        }
    }

    #[test]
    fn shorten_and_puncture() {
        for q in [3u32, 4, 5] {
            let f = FiniteField::with_order(q).unwrap();
            for m in 1..=2usize {
                for k in 1..q {
                    let c = MonomialCode::new(&f, CodeKind::PLift, m, k).unwrap();
                    let s = shorten_at_infinity(&c).unwrap();
                    let lift = MonomialCode::new(&f, CodeKind::Lift, m, k - 1).unwrap();
                    assert!(s.equals(&lift.to_linear()), "q={q} m={m} k={k}");
                    let p = puncture_to_infinity(&c).unwrap();
                    if m >= 2 {
                        let below = MonomialCode::new(&f, CodeKind::PLift, m - 1, k).unwrap();
                        assert!(p.equals(&below.to_linear()));
                    } else {
                        assert_eq!(p.len(), 1);
                    }
                    assert_eq!(s.dim() + p.dim(), c.dim());
                }
            }
        }
    }

    #[test]
    fn singular_action_is_rejected() {
        let f = FiniteField::with_order(4).unwrap();
        let c = MonomialCode::new(&f, CodeKind::PLift, 2, 3).unwrap();
        let word = c.generator().row(0).to_vec();
        let err = apply_projective_action(&f, c.support(), &Matrix::zeros(3, 3), &word, 6).unwrap_err();
        assert_eq!(err, Error::Singular);
        assert!("plift".parse::<CodeKind>().is_ok());
        assert!("nope".parse::<CodeKind>().is_err());
    }
}
