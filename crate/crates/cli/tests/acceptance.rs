//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//! Run with `cargo test -p liftcode-cli --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use liftcode::analysis::{
    self, design_dual_check, distance_report, is_information_set, plane_incidence_rank, plane_plift_dimension,
    qc_certificate, random_information_set, recursive_identities,
};
use liftcode::codes::{apply_affine_map, apply_projective_action, puncture_to_infinity, shorten_at_infinity};
use liftcode::decode::CorrectionConfig;
use liftcode::degrees::{adeg, monomial_membership_oracle, p_reduced_sphere, pdeg, plift_degree};
use liftcode::{CodeKind, Elem, FiniteField, Matrix, MonomialCode, Space};
use liftcode_cli::commands::run_experiment;
use liftcode_cli::stats::chi_square_uniform;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

const PRIME_POWERS_TO_16: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn cli_table(q: u32, m: usize) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_liftcode"))
        .args(["table", "--q", &q.to_string(), "--m", &m.to_string(), "--format", "csv"])
        .output()
        .expect("run liftcode");
    assert!(out.status.success(), "table exited with {}", out.status);
    String::from_utf8(out.stdout).expect("utf-8")
}

fn reference_table(q: u32, m: usize) -> String {
    std::fs::read_to_string(data_dir().join(format!("table_m{m}_q{q}.csv"))).expect("reference table")
}

fn dimension_tables() -> Verdict {
    let mut bad = Vec::new();
    for m in [2, 3] {
        for q in [4, 8, 16] {
            if cli_table(q, m) != reference_table(q, m) {
                bad.push(format!("m={m} q={q}"));
            }
        }
    }
    let stretch: Vec<String> = [(2, 32), (3, 32), (2, 64), (3, 64)]
        .into_iter()
        .map(|(m, q)| {
            let ok = cli_table(q, m) == reference_table(q, m);
            format!("m={m} q={q} {}", if ok { "match" } else { "differ" })
        })
        .collect();
    verdict(
        bad.is_empty(),
        format!(
            "6 tables byte-identical{}; stretch: {}",
            if bad.is_empty() { String::new() } else { format!(", mismatched {bad:?}") },
            stretch.join(", ")
        ),
    )
}

fn closed_formula() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for (p, t) in [(2u32, 1u32), (2, 2), (2, 3), (3, 1), (2, 4)] {
        let q = p.pow(t);
        let code = MonomialCode::with_order(q, CodeKind::PLift, 2, q - 1).unwrap();
        let rank = code.generator().rank(code.field());
        let expect = plane_plift_dimension(p, t);
        ok &= code.dim() == expect && rank == expect;
        parts.push(format!("q={q}: {}", code.dim()));
    }
    verdict(ok, parts.join(", "))
}

fn table_rows() -> Vec<(u32, usize, u32)> {
    let mut rows = Vec::new();
    for m in [2usize, 3] {
        for q in [4u32, 8, 16] {
            for k in q.saturating_sub(8).max(1)..q {
                rows.push((q, m, k));
            }
        }
    }
    rows
}

fn recursive_dimension_identities() -> Verdict {
    let rows = table_rows();
    let failed: Vec<_> = rows
        .iter()
        .filter(|&&(q, m, k)| !recursive_identities(q, m, k).unwrap())
        .collect();
    verdict(failed.is_empty(), format!("{} table entries, failures {failed:?}", rows.len()))
}

fn shorten_puncture() -> Verdict {
    let cases: Vec<(u32, usize, u32)> = [4u32, 8]
        .into_iter()
        .flat_map(|q| [2usize, 3].into_iter().flat_map(move |m| (1..q).map(move |k| (q, m, k))))
        .collect();
    let failed: Vec<_> = cases
        .par_iter()
        .filter(|&&(q, m, k)| {
            let c = MonomialCode::with_order(q, CodeKind::PLift, m, k).unwrap();
            let lift = MonomialCode::with_order(q, CodeKind::Lift, m, k - 1).unwrap();
            let lower = MonomialCode::with_order(q, CodeKind::PLift, m - 1, k).unwrap();
            !(shorten_at_infinity(&c).unwrap().equals(&lift.to_linear())
                && puncture_to_infinity(&c).unwrap().equals(&lower.to_linear()))
        })
        .collect();
    verdict(failed.is_empty(), format!("{} codes, failures {failed:?}", cases.len()))
}

fn oracle_equivalence() -> Verdict {
    let results: Vec<(u32, usize, usize)> = [4u32, 8, 9]
        .par_iter()
        .map(|&q| {
            let f = FiniteField::with_order(q).unwrap();
            let mut checked = 0;
            let mut disagree = 0;
            for k in 0..=q - 2 {
                let set = adeg(2, k, q).unwrap();
                for a in 0..q {
                    for b in 0..q {
                        let d = [a, b];
                        checked += 1;
                        disagree += (set.contains(&d) != monomial_membership_oracle(&f, &d, k, Space::Affine)) as usize;
                    }
                }
            }
            for k in 1..q {
                let set = pdeg(2, k, q).unwrap();
                for d in p_reduced_sphere(2, plift_degree(2, k, q), q).iter() {
                    checked += 1;
                    disagree += (set.contains(d) != monomial_membership_oracle(&f, d, k, Space::Projective)) as usize;
                }
            }
            (q, checked, disagree)
        })
        .collect();
    let ok = results.iter().all(|r| r.2 == 0);
    let detail: Vec<String> = results
        .iter()
        .map(|(q, c, d)| format!("q={q}: {c} tuples, {d} disagreements"))
        .collect();
    verdict(ok, detail.join(", "))
}

fn local_correction_bound() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    let trials = 10_000;
    for k in [3u32, 5] {
        let code = MonomialCode::with_order(8, CodeKind::PLift, 2, k).unwrap();
        for s in [k as usize + 1, 8] {
            let base = CorrectionConfig::new(8, k, s).unwrap();
            for (label, delta) in [("0", 0.0), ("max/2", base.delta_max() / 2.0), ("max", base.delta_max())] {
                let cfg = base.with_delta(delta).with_seed(0xACCE_55 + (k as u64) * 100 + s as u64);
                let r = run_experiment(&code, &cfg, trials).unwrap();
                let bound = cfg.success_bound();
                let sigma = r.sigma(bound.clamp(0.0, 1.0));
                let pass = r.success_rate() >= bound - 3.0 * sigma;
                ok &= pass;
                lines.push(format!(
                    "k={k} s={s} delta={label}: {:.4} vs {:.4}{}",
                    r.success_rate(),
                    bound,
                    if pass { "" } else { " LOW" }
                ));
            }
        }
    }
    verdict(ok, lines.join("; "))
}

fn smoothness() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for (q, k, s) in [(3u32, 1u32, 2usize), (3, 1, 3), (4, 2, 3), (4, 2, 4)] {
        let code = MonomialCode::with_order(q, CodeKind::PLift, 2, k).unwrap();
        let base = CorrectionConfig::new(q, k, s).unwrap();
        let cfg = base.with_delta(base.delta_max() / 2.0).with_seed(7 + q as u64 * 10 + s as u64);
        let trials = 100_000u64.div_ceil(s as u64);
        let r = run_experiment(&code, &cfg, trials).unwrap();
        let samples: u64 = r.histogram.iter().sum();
        let (_, p) = chi_square_uniform(&r.histogram);
        ok &= p > 1e-3 && samples >= 100_000;
        lines.push(format!("q={q} s={s}: {samples} queries, p={p:.3}"));
    }
    verdict(ok, lines.join("; "))
}

fn random_invertible(f: &FiniteField, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<Elem>> = (0..n).map(|_| (0..n).map(|_| f.random_element(rng)).collect()).collect();
        let m = Matrix::from_rows(n, rows).unwrap();
        if m.rank(f) == n {
            return m;
        }
    }
}

fn automorphisms() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0;
    for (kind, k) in [(CodeKind::PLift, 3u32), (CodeKind::Prm, 2)] {
        let code = MonomialCode::with_order(4, kind, 2, k).unwrap();
        let (f, space, v) = (code.field(), code.row_space(), code.v().unwrap() as u64);
        for _ in 0..100 {
            let m = random_invertible(f, 3, &mut rng);
            for r in 0..code.dim() {
                let moved = apply_projective_action(f, code.support(), &m, code.generator().row(r), v).unwrap();
                failures += !space.contains(f, &moved) as usize;
            }
        }
    }
    let code = MonomialCode::with_order(8, CodeKind::Rm, 2, 3).unwrap();
    let (f, space) = (code.field(), code.row_space());
    for _ in 0..100 {
        let a = random_invertible(f, 2, &mut rng);
        let b: Vec<Elem> = (0..2).map(|_| f.random_element(&mut rng)).collect();
        for r in 0..code.dim() {
            let moved = apply_affine_map(f, code.support(), &a, &b, code.generator().row(r)).unwrap();
            failures += !space.contains(f, &moved) as usize;
        }
    }
    verdict(
        failures == 0,
        format!("300 maps applied to every generator row, {failures} rows left the code"),
    )
}

fn information_sets() -> Verdict {
    let mut cases = Vec::new();
    for q in PRIME_POWERS_TO_16 {
        for m in 1..=3usize {
            for k in 0..=q - 2 {
                cases.push((CodeKind::Lift, q, m, k));
            }
            for k in 1..q {
                cases.push((CodeKind::PLift, q, m, k));
            }
        }
    }
    // largest first so the long ranks start early
    cases.sort_by_key(|&(_, q, m, _)| std::cmp::Reverse((q as usize).pow(m as u32)));
    let failed: Vec<_> = cases
        .par_iter()
        .filter(|&&(kind, q, m, k)| {
            let code = MonomialCode::with_order(q, kind, m, k).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(((q as u64) << 16) | ((m as u64) << 8) | k as u64);
            !(0..3).all(|_| is_information_set(&code, &random_information_set(&code, &mut rng).unwrap()))
        })
        .map(|c| format!("{:?}", c))
        .collect();
    verdict(failed.is_empty(), format!("{} codes x 3 draws, failures {failed:?}", cases.len()))
}

fn quasi_cyclicity() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for (q, m, index) in [(4u32, 2usize, 3usize), (4, 3, 1), (16, 2, 3)] {
        let all = (1..q).all(|k| {
            let code = MonomialCode::with_order(q, CodeKind::PLift, m, k).unwrap();
            qc_certificate(&code)
                .unwrap()
                .is_some_and(|c| c.verified() && c.d == index && c.cycles.len() == index)
        });
        ok &= all;
        lines.push(format!("q={q} m={m} index {index} for k=1..{}: {all}", q - 1));
    }
    verdict(ok, lines.join("; "))
}

fn distance() -> Verdict {
    let code = MonomialCode::with_order(4, CodeKind::PLift, 2, 3).unwrap();
    let exact = liftcode_cli::commands::exact_distance(code.field(), code.generator(), 1 << 24);
    let r = analysis::distance_bounds(4, 2, 3).unwrap();
    let mut ok = exact.is_some_and(|d| r.lower <= d && d <= r.upper) && (r.lower, r.upper) == (6, 9);
    let mut prs_bad = Vec::new();
    for q in PRIME_POWERS_TO_16 {
        for k in 0..=q {
            let c = MonomialCode::with_order(q, CodeKind::Prs, 1, k).unwrap();
            let d = distance_report(&c, Some(1 << 22)).unwrap().exact;
            if d != Some((q + 1 - k) as usize) {
                prs_bad.push((q, k, d));
            }
        }
    }
    ok &= prs_bad.is_empty();
    verdict(
        ok,
        format!(
            "PLift_4(2,3) exact {exact:?} in [{}, {}]; PRS q<=16 all k, mismatches {prs_bad:?}",
            r.lower, r.upper
        ),
    )
}

fn design_duality() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for (q, p, t) in [(2u32, 2u32, 1u32), (3, 3, 1), (4, 2, 2)] {
        let r = design_dual_check(q, 2).unwrap();
        let pass = r.passed() && r.incidence_rank == plane_incidence_rank(p, t);
        ok &= pass;
        lines.push(format!("q={q}: rank {} dual {} equal {}", r.incidence_rank, r.dual_dim, r.equal));
    }
    verdict(ok, lines.join("; "))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Verdict, u64); 12] = [
        (1, "dimension tables", dimension_tables, 120),
        (2, "closed dimension formula", closed_formula, 60),
        (3, "recursive dimension identities", recursive_dimension_identities, 600),
        (4, "shortening and puncturing", shorten_puncture, 300),
        (5, "degree-set oracle equivalence", oracle_equivalence, 600),
        (6, "local correction bound", local_correction_bound, 600),
        (7, "perfect smoothness", smoothness, 600),
        (8, "automorphism invariance", automorphisms, 600),
        (9, "information sets", information_sets, 1800),
        (10, "quasi-cyclicity", quasi_cyclicity, 600),
        (11, "minimum distance", distance, 600),
        (12, "design duality", design_duality, 600),
    ];
    let only: Option<u32> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|s| s.parse().ok());
    let mut failed = 0;
    for (n, title, check, budget) in criteria {
        if only.is_some_and(|o| o != n) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let v = result.unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            verdict(false, format!("panicked: {msg}"))
        });
        let in_time = elapsed <= Duration::from_secs(budget);
        let passed = v.passed && in_time;
        failed += !passed as usize;
        println!(
            "criterion {n:>2} {}: {title} ({}) [{:.1}s of {budget}s]",
            if passed { "PASS" } else { "FAIL" },
            v.detail,
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
