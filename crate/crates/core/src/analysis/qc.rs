use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::codes::{CodeKind, MonomialCode};
use crate::error::{Error, Result};
use crate::gf::{gcd, Elem, ExtensionIso};
use crate::matrix::{Matrix, RowSpace};

/// Evidence that `w^v * PLift_q(m, k)`, with coordinates ordered by the
/// representation `U = U_0 | ... | U_{d-1}` of `P^m`, is quasi-cyclic of
/// index `d = gcd(n, q - 1)` under `psi^d`, where `psi` is multiplication by
/// `beta = omega^(q-1)` transported to `F_q^(m+1)`.
#[derive(Clone, Debug)]
pub struct QcCertificate {
    pub n: usize,
    pub d: usize,
    /// `U` in order: entry `i * (n/d) + (j - 1)` is `phi(omega^i beta^(dj))`.
    pub representation: Vec<Vec<Elem>>,
    /// Support position of the standard form of each entry of `U`.
    pub points: Vec<usize>,
    /// `w_u` with `u = w_u * P_u`.
    pub twist: Vec<Elem>,
    /// `psi^d` as a map on positions of `U`.
    pub permutation: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    /// Every permuted generator row of the twisted code lies in its row space.
    pub invariant: bool,
}

impl QcCertificate {
    /// `U` represents `P^m`, `psi^d` is `d` disjoint `(n/d)`-cycles with the
    /// `U_i` as orbits, and the twisted code is invariant.
    pub fn verified(&self) -> bool {
        let block = self.n / self.d;
        let mut seen = vec![false; self.n];
        for &p in &self.points {
            if core::mem::replace(&mut seen[p], true) {
                return false;
            }
        }
        self.invariant
            && self.cycles.len() == self.d
            && self.cycles.iter().all(|c| {
                let i = c[0] / block;
                c.len() == block && c.iter().all(|&x| x / block == i)
            })
    }
}

/// Builds and checks the certificate, or returns `None` when
/// `gcd(n/d, q - 1) != 1` and the construction does not apply.
pub fn qc_certificate(code: &MonomialCode) -> Result<Option<QcCertificate>> {
    if !matches!(code.kind(), CodeKind::PLift | CodeKind::Prs) {
        return Err(Error::Unsupported(alloc::format!(
            "quasi-cyclic certificates for {} codes",
            code.kind()
        )));
    }
    let f = code.field();
    let (q, m, n) = (code.q() as u64, code.m(), code.len());
    let d = gcd(n as u64, q - 1) as usize;
    let block = n / d;
    if gcd(block as u64, q - 1) != 1 {
        return Ok(None);
    }
    let iso = ExtensionIso::new(f, m + 1)?;
    let ext = iso.ext();
    let omega = ext.primitive();
    let beta = ext.pow(omega, q - 1);
    let beta_d = ext.pow(beta, d as u64);

    let mut representation = Vec::with_capacity(n);
    for i in 0..d {
        let mut x = ext.mul(ext.pow(omega, i as u64), beta_d);
        for _ in 0..block {
            representation.push(iso.to_coords(x));
            x = ext.mul(x, beta_d);
        }
    }

    // psi as a matrix: column l is phi(beta * phi^-1(e_l))
    let mut psi = Matrix::zeros(m + 1, m + 1);
    for l in 0..=m {
        let mut e = vec![Elem::ZERO; m + 1];
        e[l] = Elem::ONE;
        let col = iso.to_coords(ext.mul(beta, iso.from_coords(&e)?));
        for (r, c) in col.into_iter().enumerate() {
            psi.row_mut(r)[l] = c;
        }
    }
    let mut psi_d = Matrix::identity(m + 1);
    for _ in 0..d {
        psi_d = psi.mul(f, &psi_d)?;
    }
    let position: BTreeMap<&[Elem], usize> = representation
        .iter()
        .enumerate()
        .map(|(i, u)| (u.as_slice(), i))
        .collect();
    let mut permutation = Vec::with_capacity(n);
    for u in &representation {
        let image = psi_d.mul_vec(f, u)?;
        match position.get(image.as_slice()) {
            Some(&j) => permutation.push(j),
            None => return Err(Error::Unsupported("psi^d does not preserve U".into())),
        }
    }
    let cycles = cycle_decomposition(&permutation);

    let support = code.support();
    let v = code.v().expect("projective") as u64;
    let mut points = Vec::with_capacity(n);
    let mut twist = Vec::with_capacity(n);
    for u in &representation {
        let (idx, lambda) = support.locate(f, u)?;
        points.push(idx);
        twist.push(f.inv(lambda)?);
    }
    // C' = ev_U(Poly(D)): column u is w_u^v times the column of P_u
    let g = code.generator();
    let mut twisted = g.select_columns(&points);
    let scales: Vec<Elem> = twist.iter().map(|&w| f.pow(w, v)).collect();
    for r in 0..twisted.rows() {
        for (x, &s) in twisted.row_mut(r).iter_mut().zip(&scales) {
            *x = f.mul(*x, s);
        }
    }
    let space = RowSpace::new(f, &twisted);
    let invariant = (0..twisted.rows()).all(|r| {
        let row = twisted.row(r);
        let moved: Vec<Elem> = permutation.iter().map(|&j| row[j]).collect();
        space.contains(f, &moved)
    });

    Ok(Some(QcCertificate {
        n,
        d,
        representation,
        points,
        twist,
        permutation,
        cycles,
        invariant,
    }))
}

fn cycle_decomposition(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push(cycle);
    }
    out
}
