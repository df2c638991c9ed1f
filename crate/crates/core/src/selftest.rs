//! A fast pass over the invariant suites of every module, for use as a
//! single smoke check from a binary. The full suites live in the tests.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{
    design_dual_check, distance_report, information_set, is_information_set, qc_certificate,
    random_information_set, rate_table_csv, recursive_identities, TableMode,
};
use crate::codes::{puncture_to_infinity, shorten_at_infinity, CodeKind, MonomialCode};
use crate::decode::{mc_experiment, prs_decode, prs_encode, CorrectionConfig};
use crate::degrees::{
    adeg, monomial_membership_oracle, p_reduced_sphere, pdeg, pdeg_direct,
    plift_degree,
};
use crate::error::Result;
use crate::geometry::Space;
use crate::gf::{Elem, FiniteField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Suite = fn() -> Result<(bool, String)>;

const SUITES: &[(&str, Suite)] = &[
    ("gf.axioms", gf_axioms),
    ("degrees.recursion_matches_direct", degrees_direct),
    ("degrees.oracle_equivalence", degrees_oracle),
    ("codes.shorten_puncture", codes_shorten_puncture),
    ("decode.prs_roundtrip", decode_prs),
    ("decode.local_correction_clean", decode_local),
    ("analysis.information_sets", analysis_infosets),
    ("analysis.quasi_cyclic", analysis_qc),
    ("analysis.distance_sandwich", analysis_distance),
    ("analysis.design_duality", analysis_design),
    ("analysis.table_q4_m2", analysis_table),
];

/// Runs every suite; an `Err` from a suite is reported as a failed check.
pub fn run_all() -> Vec<Check> {
    SUITES
        .iter()
        .map(|&(name, suite)| match suite() {
            Ok((passed, detail)) => Check { name, passed, detail },
            Err(e) => Check {
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}

fn gf_axioms() -> Result<(bool, String)> {
    let mut ok = true;
    for q in [2u32, 4, 9, 16, 25] {
        let f = FiniteField::with_order(q)?;
        for a in f.elements() {
            ok &= f.add(a, f.neg(a)).is_zero();
            if !a.is_zero() {
                ok &= f.mul(a, f.inv(a)?) == Elem::ONE;
                ok &= f.pow(a, q as u64 - 1) == Elem::ONE;
            }
            for b in f.elements() {
                ok &= f.mul(a, b) == f.mul(b, a);
            }
        }
    }
    Ok((ok, String::from("q in {2,4,9,16,25}")))
}

fn degrees_direct() -> Result<(bool, String)> {
    let mut ok = true;
    for q in [3u32, 4, 5] {
        for m in 1..=3 {
            for k in 1..q {
                ok &= pdeg(m, k, q)? == pdeg_direct(m, k, q)?;
            }
        }
    }
    Ok((ok, String::from("q in {3,4,5}, m <= 3")))
}

fn degrees_oracle() -> Result<(bool, String)> {
    let (q, m) = (4u32, 2usize);
    let f = FiniteField::with_order(q)?;
    let mut ok = true;
    let mut tuples = 0;
    for k in 0..=q - 2 {
        let set = adeg(m, k, q)?;
        for a in 0..q {
            for b in 0..q {
                let d = [a, b];
                ok &= set.contains(&d) == monomial_membership_oracle(&f, &d, k, Space::Affine);
                tuples += 1;
            }
        }
    }
    for k in 1..q {
        let set = pdeg(m, k, q)?;
        for d in p_reduced_sphere(m, plift_degree(m, k, q), q).iter() {
            ok &= set.contains(d) == monomial_membership_oracle(&f, d, k, Space::Projective);
            tuples += 1;
        }
    }
    Ok((ok, format!("q=4, m=2, {tuples} tuples")))
}

fn codes_shorten_puncture() -> Result<(bool, String)> {
    let mut ok = true;
    for (q, m) in [(4u32, 2usize), (3, 2), (4, 3)] {
        let f = FiniteField::with_order(q)?;
        for k in 1..q {
            let c = MonomialCode::new(&f, CodeKind::PLift, m, k)?;
            let lift = MonomialCode::new(&f, CodeKind::Lift, m, k - 1)?;
            let lower = MonomialCode::new(&f, CodeKind::PLift, m - 1, k)?;
            ok &= shorten_at_infinity(&c)?.equals(&lift.to_linear());
            ok &= puncture_to_infinity(&c)?.equals(&lower.to_linear());
        }
    }
    Ok((ok, String::from("(q,m) in {(4,2),(3,2),(4,3)}")))
}

fn decode_prs() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut ok = true;
    for q in [5u32, 8, 16] {
        let f = FiniteField::with_order(q)?;
        let n = q as usize + 1;
        for k in 0..q as usize {
            let coeffs: Vec<Elem> = (0..=k).map(|_| Elem::from_index(rng.gen_range(0..q))).collect();
            let w = prs_encode(&f, &coeffs);
            let s = rng.gen_range(k + 1..=n);
            let t = (s - k - 1) / 2;
            let mut y: Vec<Option<Elem>> = w.iter().copied().map(Some).collect();
            let pos = rand::seq::index::sample(&mut rng, n, n - s + t);
            for (i, j) in pos.iter().enumerate() {
                y[j] = if i < n - s {
                    None
                } else {
                    Some(f.add(w[j], Elem::from_index(rng.gen_range(1..q))))
                };
            }
            ok &= prs_decode(&f, &y, k as u32) == Some(w);
        }
    }
    Ok((ok, String::from("q in {5,8,16}, all k, t errors")))
}

fn decode_local() -> Result<(bool, String)> {
    let code = MonomialCode::with_order(8, CodeKind::PLift, 2, 5)?;
    let cfg = CorrectionConfig::new(8, 5, 8)?.with_seed(7);
    let r = mc_experiment(&code, &cfg, 200)?;
    Ok((
        r.successes == r.trials && r.histogram.iter().sum::<u64>() == 8 * r.trials,
        format!("PLift_8(2,5), s=8, delta=0, {} trials", r.trials),
    ))
}

fn analysis_infosets() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ok = true;
    for q in [3u32, 4, 5] {
        for m in 1..=2 {
            for k in 0..=q - 2 {
                let c = MonomialCode::with_order(q, CodeKind::Lift, m, k)?;
                ok &= is_information_set(&c, &information_set(&c)?);
                ok &= is_information_set(&c, &random_information_set(&c, &mut rng)?);
            }
            for k in 1..q {
                let c = MonomialCode::with_order(q, CodeKind::PLift, m, k)?;
                ok &= is_information_set(&c, &information_set(&c)?);
                ok &= is_information_set(&c, &random_information_set(&c, &mut rng)?);
            }
        }
    }
    Ok((ok, String::from("q in {3,4,5}, m <= 2")))
}

fn analysis_qc() -> Result<(bool, String)> {
    let mut ok = true;
    for (m, k, d) in [(2usize, 3u32, 3usize), (3, 2, 1)] {
        let c = MonomialCode::with_order(4, CodeKind::PLift, m, k)?;
        ok &= qc_certificate(&c)?.is_some_and(|cert| cert.verified() && cert.d == d);
    }
    Ok((ok, String::from("q=4: m=2 index 3, m=3 cyclic")))
}

fn analysis_distance() -> Result<(bool, String)> {
    let c = MonomialCode::with_order(3, CodeKind::PLift, 2, 2)?;
    let r = distance_report(&c, Some(1 << 20))?;
    Ok((r.exact.is_some() && r.consistent(), format!("PLift_3(2,2): {r:?}")))
}

fn analysis_design() -> Result<(bool, String)> {
    let mut ok = true;
    for q in [2u32, 3, 4] {
        ok &= design_dual_check(q, 2)?.passed();
    }
    Ok((ok, String::from("PG_1(2,q), q in {2,3,4}")))
}

fn analysis_table() -> Result<(bool, String)> {
    let csv = rate_table_csv(4, 2, TableMode::Both)?;
    let mut ok = csv
        == "k,n_A,dim_A,R_A,n_P,dim_P,R_P,dim_PRM,R_PRM\n\
            1,16,1,0.0625,21,3,0.143,3,0.143\n\
            2,16,3,0.188,21,6,0.286,6,0.286\n\
            3,16,7,0.438,21,11,0.524,10,0.476\n";
    for k in 1..4 {
        ok &= recursive_identities(4, 2, k)?;
    }
    Ok((ok, String::from("rows k=1..3 and recursive identities")))
}
