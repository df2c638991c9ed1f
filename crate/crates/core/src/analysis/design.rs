use crate::codes::{CodeKind, MonomialCode};
use crate::error::Result;
use crate::gf::{prime_power, Elem, FiniteField};
use crate::matrix::{Matrix, RowSpace};

/// Comparison of the code spanned by the point-line incidence matrix of
/// `P^m(F_q)` with the dual of `PLift_q(m, q - 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DesignReport {
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub lines: usize,
    pub plift_dim: usize,
    pub incidence_rank: usize,
    pub dual_dim: usize,
    /// Row space of the incidence matrix equals the dual.
    pub equal: bool,
    /// `(p(p+1)/2)^t + 1`, the known incidence rank for `m = 2`.
    pub predicted_rank: Option<usize>,
}

impl DesignReport {
    pub fn passed(&self) -> bool {
        self.equal
            && self.incidence_rank == self.dual_dim
            && self.predicted_rank.map_or(true, |r| r == self.incidence_rank)
    }
}

/// `(p(p+1)/2)^t + 1`.
pub fn plane_incidence_rank(p: u32, t: u32) -> usize {
    ((p * (p + 1) / 2) as usize).pow(t) + 1
}

/// `dim PLift_{p^t}(2, p^t - 1) = p^(2t) + p^t - (p(p+1)/2)^t`.
pub fn plane_plift_dimension(p: u32, t: u32) -> usize {
    let q = (p as usize).pow(t);
    q * q + q - ((p * (p + 1) / 2) as usize).pow(t)
}

/// One row per line of `P^m`, the indicator vector of its `q + 1` points.
pub fn incidence_matrix(f: &FiniteField, code: &MonomialCode) -> Matrix {
    let lines = code.support().all_lines(f);
    let mut h = Matrix::zeros(lines.len(), code.len());
    for (r, line) in lines.iter().enumerate() {
        let row = h.row_mut(r);
        for &i in line {
            row[i] = Elem::ONE;
        }
    }
    h
}

pub fn design_dual_check(q: u32, m: usize) -> Result<DesignReport> {
    let code = MonomialCode::with_order(q, CodeKind::PLift, m, q - 1)?;
    let f = code.field();
    let h = incidence_matrix(f, &code);
    let dual = code.generator().nullspace(f);
    let hs = RowSpace::new(f, &h);
    let ds = RowSpace::new(f, &dual);
    let (p, t) = prime_power(q).expect("field order");
    Ok(DesignReport {
        q,
        m,
        n: code.len(),
        lines: h.rows(),
        plift_dim: code.dim(),
        incidence_rank: hs.dim(),
        dual_dim: ds.dim(),
        equal: hs.equals(f, &ds),
        predicted_rank: (m == 2).then(|| plane_incidence_rank(p, t)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_formulas() {
        assert_eq!(plane_plift_dimension(2, 1), 3);
        assert_eq!(plane_plift_dimension(2, 2), 11);
        assert_eq!(plane_plift_dimension(2, 3), 45);
        assert_eq!(plane_plift_dimension(3, 1), 6);
        assert_eq!(plane_incidence_rank(2, 2), 10);
    }

    #[test]
    fn duality_small() {
        for (q, m) in [(2u32, 2usize), (3, 2), (4, 2), (2, 3)] {
            let r = design_dual_check(q, m).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.incidence_rank + r.plift_dim, r.n);
        }
    }

    #[test]
    fn q4_plane_numbers() {
        let r = design_dual_check(4, 2).unwrap();
        assert_eq!((r.n, r.plift_dim, r.dual_dim, r.lines), (21, 11, 10, 21));
    }
}
