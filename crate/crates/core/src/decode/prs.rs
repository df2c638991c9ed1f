//! Error-and-erasure decoding of `PRS_q(k)` on `P^1`, ordered
//! `(1:t)` for `t` in element order, then `(0:1)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, FiniteField};
use crate::matrix::Matrix;

/// `ev_{P^1}` of the form whose dehomogenization is `sum_i coeffs_i T^i`,
/// homogenized to degree `k = coeffs.len() - 1`.
pub fn prs_encode(f: &FiniteField, coeffs: &[Elem]) -> Vec<Elem> {
    let mut out: Vec<Elem> = f.elements().map(|t| horner(f, coeffs, t)).collect();
    out.push(coeffs.last().copied().unwrap_or(Elem::ZERO));
    out
}

fn horner(f: &FiniteField, coeffs: &[Elem], t: Elem) -> Elem {
    coeffs
        .iter()
        .rev()
        .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, t), c))
}

/// Decodes `y` (length `q + 1`, `None` for erasures) to the unique codeword of
/// `PRS_q(k)` within distance `t = floor((s - k - 1) / 2)` of the `s`
/// received symbols, or `None` when there is none.
///
/// Homogeneous Berlekamp-Welch: find forms `E` of degree `t` and `N` of
/// degree `k + t` with `N(x) = y_x E(x)` at every received `x`. Any nonzero
/// solution has `N = g E` for the codeword form `g`.
pub fn prs_decode(f: &FiniteField, y: &[Option<Elem>], k: u32) -> Option<Vec<Elem>> {
    let q = f.order() as usize;
    assert_eq!(y.len(), q + 1, "PRS words have length q + 1");
    let k = k as usize;
    let received: Vec<usize> = (0..=q).filter(|&j| y[j].is_some()).collect();
    let s = received.len();
    if s < k + 1 || k > q {
        return None;
    }
    let t = (s - k - 1) / 2;
    let (ne, nn) = (t + 1, k + t + 1);
    let mut sys = Matrix::zeros(s, ne + nn);
    for (r, &j) in received.iter().enumerate() {
        let yj = y[j].expect("received");
        let row = sys.row_mut(r);
        if j == q {
            // leading coefficients at (0:1)
            row[t] = f.neg(yj);
            row[ne + k + t] = Elem::ONE;
        } else {
            let x = Elem::from_index(j as u32);
            let mut pw = Elem::ONE;
            for i in 0..nn {
                if i < ne {
                    row[i] = f.neg(f.mul(yj, pw));
                }
                row[ne + i] = pw;
                pw = f.mul(pw, x);
            }
        }
    }
    let ns = sys.nullspace(f);
    if ns.rows() == 0 {
        return None;
    }
    let sol = ns.row(0);
    let (e, n) = (&sol[..ne], &sol[ne..]);
    let quotient = poly_div_exact(f, n, e)?;
    if quotient.len() > k + 1 {
        return None;
    }
    let mut g = quotient;
    g.resize(k + 1, Elem::ZERO);
    let word = prs_encode(f, &g);
    let disagreements = received
        .iter()
        .filter(|&&j| y[j] != Some(word[j]))
        .count();
    (disagreements <= t).then_some(word)
}

/// `n / e` when the division is exact, trimmed of leading zeros.
fn poly_div_exact(f: &FiniteField, n: &[Elem], e: &[Elem]) -> Option<Vec<Elem>> {
    let de = e.iter().rposition(|c| !c.is_zero())?;
    let mut rem = n.to_vec();
    let Some(dn) = rem.iter().rposition(|c| !c.is_zero()) else {
        return Some(Vec::new());
    };
    if dn < de {
        return None;
    }
    let lead_inv = f.inv(e[de]).expect("nonzero");
    let mut quot = vec![Elem::ZERO; dn - de + 1];
    for i in (0..=dn - de).rev() {
        let c = f.mul(rem[i + de], lead_inv);
        quot[i] = c;
        if !c.is_zero() {
            for (j, &ej) in e[..=de].iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, ej));
            }
        }
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}
