use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::codes::{CodeKind, MonomialCode};
use crate::degrees::adeg_count;
use crate::error::{check_range, Error, Result};
use crate::gf::{gcd, Elem, ExtensionIso, FiniteField};
use crate::matrix::Matrix;

/// A primitive element `omega` of `GF(q^i)` together with an
/// `F_q`-isomorphism `phi : GF(q^i) -> F_q^i`, realized as polynomial-basis
/// coordinates followed by an invertible `i x i` matrix.
#[derive(Clone, Debug)]
pub struct PrimitiveFrame {
    iso: ExtensionIso,
    omega: Elem,
    phi: Matrix,
}

impl PrimitiveFrame {
    /// The field's own primitive element and the polynomial-basis coordinates.
    pub fn canonical(base: &FiniteField, i: usize) -> Result<Self> {
        let iso = ExtensionIso::new(base, i)?;
        let omega = iso.ext().primitive();
        Ok(PrimitiveFrame {
            iso,
            omega,
            phi: Matrix::identity(i),
        })
    }

    /// Uniform primitive element and uniform isomorphism.
    pub fn random<R: Rng + ?Sized>(base: &FiniteField, i: usize, rng: &mut R) -> Result<Self> {
        let iso = ExtensionIso::new(base, i)?;
        let order = iso.ext().order() as u64 - 1;
        let e = loop {
            let e = rng.gen_range(1..=order);
            if gcd(e, order) == 1 {
                break e;
            }
        };
        let omega = iso.ext().exp(e);
        let q = base.order();
        let phi = loop {
            let rows: Vec<Vec<Elem>> = (0..i)
                .map(|_| (0..i).map(|_| Elem::from_index(rng.gen_range(0..q))).collect())
                .collect();
            let m = Matrix::from_rows(i, rows)?;
            if m.rank(base) == i {
                break m;
            }
        };
        Ok(PrimitiveFrame { iso, omega, phi })
    }

    pub fn omega(&self) -> Elem {
        self.omega
    }

    pub fn dim(&self) -> usize {
        self.iso.dim()
    }

    /// `phi(omega^j)`.
    pub fn point(&self, j: u64) -> Vec<Elem> {
        let x = self.iso.ext().pow(self.omega, j);
        self.phi
            .mul_vec(self.iso.base(), &self.iso.to_coords(x))
            .expect("phi is square of size i")
    }
}

fn affine_k(code: &MonomialCode) -> Result<Option<(bool, u32)>> {
    // (projective, k of the affine lifted code per chart)
    Ok(match code.kind() {
        CodeKind::Lift | CodeKind::Rs => {
            check_range("k", code.k() as i64, 0, code.q() as i64 - 2)?;
            Some((false, code.k()))
        }
        CodeKind::PLift | CodeKind::Prs => {
            check_range("k", code.k() as i64, 1, code.q() as i64 - 1)?;
            Some((true, code.k() - 1))
        }
        _ => None,
    })
}

/// Information set of a lifted code built from one frame per chart.
///
/// Affine `Lift_q(m, k)`, `k <= q - 2`: `{phi(omega), ..., phi(omega^dim)}`.
/// Projective `PLift_q(m, k)`: the point `(0:...:0:1)` together with, for each
/// `i = 1..m`, the affine set of `Lift_q(i, k - 1)` placed in the chart
/// `(0:...:0:1:x_1:...:x_i)`.
///
/// `frame(i)` supplies the frame for `GF(q^i)`.
pub fn information_set_with<F>(code: &MonomialCode, mut frame: F) -> Result<Vec<usize>>
where
    F: FnMut(usize) -> Result<PrimitiveFrame>,
{
    let Some((projective, ak)) = affine_k(code)? else {
        return Err(Error::Unsupported(alloc::format!(
            "information sets of {} codes",
            code.kind()
        )));
    };
    let (q, m, support) = (code.q(), code.m(), code.support());
    let mut out = Vec::with_capacity(code.dim());
    let mut place = |coords: Vec<Elem>| -> Result<()> {
        let idx = support
            .index_of(&coords)
            .ok_or_else(|| Error::Unsupported("frame point outside the support".into()))?;
        out.push(idx);
        Ok(())
    };
    if projective {
        let mut top = vec![Elem::ZERO; m + 1];
        top[m] = Elem::ONE;
        place(top)?;
        for i in 1..=m {
            let fr = frame(i)?;
            for j in 1..=adeg_count(i, ak, q)? as u64 {
                let mut coords = vec![Elem::ZERO; m - i];
                coords.push(Elem::ONE);
                coords.extend(fr.point(j));
                place(coords)?;
            }
        }
    } else {
        let fr = frame(m)?;
        for j in 1..=adeg_count(m, ak, q)? as u64 {
            place(fr.point(j))?;
        }
    }
    Ok(out)
}

/// [`information_set_with`] using canonical frames.
pub fn information_set(code: &MonomialCode) -> Result<Vec<usize>> {
    let base = code.field().clone();
    information_set_with(code, |i| PrimitiveFrame::canonical(&base, i))
}

/// [`information_set_with`] using independently drawn random frames.
pub fn random_information_set<R: Rng + ?Sized>(code: &MonomialCode, rng: &mut R) -> Result<Vec<usize>> {
    let base = code.field().clone();
    information_set_with(code, |i| PrimitiveFrame::random(&base, i, rng))
}

/// `|S| = dim C` and the generator columns at `S` have full rank.
pub fn is_information_set(code: &MonomialCode, set: &[usize]) -> bool {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == code.dim()
        && sorted.iter().all(|&i| i < code.len())
        && code.generator().select_columns(set).rank(code.field()) == code.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lift_4_2_2_has_rank_7() {
        let code = MonomialCode::with_order(4, CodeKind::Lift, 2, 2).unwrap();
        let s = information_set(&code).unwrap();
        assert_eq!(s.len(), 7);
        assert!(is_information_set(&code, &s));
    }

    #[test]
    fn plift_4_2_3_chart_sizes() {
        let code = MonomialCode::with_order(4, CodeKind::PLift, 2, 3).unwrap();
        let s = information_set(&code).unwrap();
        assert_eq!(s.len(), 11);
        assert!(is_information_set(&code, &s));
        // 1 point at (0:0:1), 3 in chart (0:1:x), 7 in the affine chart
        let sup = code.support();
        let charts: Vec<usize> = s.iter().map(|&i| sup.projective_point(i).chart()).collect();
        assert_eq!(charts.iter().filter(|&&c| c == 2).count(), 1);
        assert_eq!(charts.iter().filter(|&&c| c == 1).count(), 3);
        assert_eq!(charts.iter().filter(|&&c| c == 0).count(), 7);
    }

    #[test]
    fn prs_set_is_information_set() {
        for k in 1..8 {
            let code = MonomialCode::with_order(8, CodeKind::Prs, 1, k).unwrap();
            assert!(is_information_set(&code, &information_set(&code).unwrap()));
        }
    }

    #[test]
    fn random_frames_small_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [2u32, 3, 4, 5] {
            for m in 1..=3 {
                for k in 0..=q - 2 {
                    let code = MonomialCode::with_order(q, CodeKind::Lift, m, k).unwrap();
                    let s = random_information_set(&code, &mut rng).unwrap();
                    assert!(is_information_set(&code, &s), "Lift q={q} m={m} k={k}");
                }
                for k in 1..q {
                    let code = MonomialCode::with_order(q, CodeKind::PLift, m, k).unwrap();
                    let s = random_information_set(&code, &mut rng).unwrap();
                    assert!(is_information_set(&code, &s), "PLift q={q} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn non_information_set_is_rejected() {
        let code = MonomialCode::with_order(4, CodeKind::PLift, 2, 3).unwrap();
        let mut s = information_set(&code).unwrap();
        s.pop();
        assert!(!is_information_set(&code, &s));
        s.push(s[0]);
        assert!(!is_information_set(&code, &s));
    }

    #[test]
    fn rejects_other_kinds() {
        let code = MonomialCode::with_order(4, CodeKind::Rm, 2, 2).unwrap();
        assert!(information_set(&code).is_err());
    }
}
