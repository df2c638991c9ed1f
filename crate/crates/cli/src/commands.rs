use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use liftcode::analysis::{
    self, design_dual_check, distance_bounds, information_set, is_information_set, qc_certificate,
    random_information_set, TableMode,
};
use liftcode::codes::{puncture_to_infinity, shorten_at_infinity};
use liftcode::decode::{local_correct, run_trial, CorrectionConfig, CountingOracle, ExperimentReport, SliceOracle};
use liftcode::{CodeKind, Elem, FiniteField, Matrix, MonomialCode};

use crate::cli::{
    AnalyzeArgs, Check, Cli, Command, CorruptArgs, EncodeArgs, ExperimentArgs, Format, LocalCorrectArgs, TableArgs,
    TableModeArg,
};
use crate::error::{CliError, CliResult};
use crate::format::{format_elem, parse_message, parse_point, point_string, read_text, WordFile};
use crate::stats::chi_square_uniform;

/// What a command printed and whether every check it ran passed.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, passed: true }
    }

    fn json(value: &Value, passed: bool) -> Self {
        Outcome {
            output: format!("{}\n", serde_json::to_string_pretty(value).expect("serializable")),
            passed,
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Table(_)) {
        return Err(CliError::usage("--format csv is only available for `table`"));
    }
    match &cli.command {
        Command::Table(a) => table(a, cli.format),
        Command::Encode(a) => encode(a),
        Command::Corrupt(a) => corrupt(a),
        Command::LocalCorrect(a) => local(a),
        Command::Experiment(a) => experiment(a),
        Command::Analyze(a) => analyze(a),
        Command::Selftest => selftest(),
    }
}

fn table(a: &TableArgs, format: Format) -> CliResult<Outcome> {
    let mode = match a.mode {
        TableModeArg::Lift => TableMode::Lift,
        TableModeArg::Rm => TableMode::Rm,
        TableModeArg::Both => TableMode::Both,
    };
    match format {
        Format::Csv => {
            let blocks: Vec<String> = a
                .q
                .iter()
                .map(|&q| analysis::rate_table_csv(q, a.m, mode))
                .collect::<Result<_, _>>()?;
            Ok(Outcome::ok(blocks.join("\n")))
        }
        Format::Json => {
            let mut tables = Vec::new();
            for &q in &a.q {
                let rows: Vec<Value> = analysis::rate_table(q, a.m, mode)?
                    .iter()
                    .map(|r| {
                        let rate = |d: Option<usize>, n: usize| d.map(|d| analysis::format_rate(d as u64, n as u64));
                        json!({
                            "k": r.k,
                            "n_A": r.n_a, "dim_A": r.dim_a, "R_A": rate(r.dim_a, r.n_a),
                            "n_P": r.n_p, "dim_P": r.dim_p, "R_P": rate(r.dim_p, r.n_p),
                            "dim_PRM": r.dim_prm, "R_PRM": rate(r.dim_prm, r.n_p),
                        })
                    })
                    .collect();
                tables.push(json!({"q": q, "m": a.m, "rows": rows}));
            }
            Ok(Outcome::json(&Value::Array(tables), true))
        }
    }
}

fn encode(a: &EncodeArgs) -> CliResult<Outcome> {
    let kind: CodeKind = a.kind.parse()?;
    let code = MonomialCode::with_order(a.code.q, kind, a.code.m, a.code.k)?;
    let f = code.field();
    let msg = match (&a.msg, a.seed) {
        (Some(path), _) => parse_message(f, &read_text(path)?)?,
        (None, Some(seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..code.dim()).map(|_| f.random_element(&mut rng)).collect()
        }
        (None, None) => return Err(CliError::usage("either --msg or --seed is required")),
    };
    if msg.len() != code.dim() {
        return Err(CliError::usage(format!(
            "message has {} symbols, code dimension is {}",
            msg.len(),
            code.dim()
        )));
    }
    let word = WordFile {
        descriptor: code.descriptor().into(),
        symbols: code.encode(&msg)?.into_iter().map(Some).collect(),
    };
    Ok(Outcome::ok(word.render(f)))
}

fn fraction(name: &str, x: f64) -> CliResult<f64> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(CliError::usage(format!("--{name} must lie in [0, 1], got {x}")))
    }
}

fn corrupt(a: &CorruptArgs) -> CliResult<Outcome> {
    let (mut word, code) = WordFile::read(&a.input)?;
    let f = code.field();
    let n = code.len();
    let errors = (fraction("delta", a.delta)? * n as f64) as usize;
    let erasures = (fraction("erase", a.erase)? * n as f64) as usize;
    if errors + erasures > n {
        return Err(CliError::usage("--delta plus --erase exceeds the word length"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let picked = sample(&mut rng, n, errors + erasures).into_vec();
    for (i, &j) in picked.iter().enumerate() {
        word.symbols[j] = if i < errors {
            word.symbols[j].map(|x| f.add(x, f.random_nonzero(&mut rng)))
        } else {
            None
        };
    }
    Ok(Outcome::ok(word.render(f)))
}

fn correction_config(code: &MonomialCode, s: usize, unit_weights: bool) -> CliResult<CorrectionConfig> {
    if !matches!(code.kind(), CodeKind::PLift | CodeKind::Prs) {
        return Err(CliError::usage(format!(
            "local correction needs a PLift or PRS code, got {}",
            code.kind()
        )));
    }
    Ok(CorrectionConfig::new(code.q(), code.k(), s)?.with_unit_weights(unit_weights))
}

fn local(a: &LocalCorrectArgs) -> CliResult<Outcome> {
    let (word, code) = WordFile::read(&a.input)?;
    let f = code.field();
    let target = match (&a.point, a.index) {
        (Some(p), _) => parse_point(f, code.support(), p)?,
        (None, Some(i)) if i < code.len() => i,
        (None, Some(i)) => return Err(CliError::usage(format!("--index {i} is outside 0..{}", code.len()))),
        (None, None) => return Err(CliError::usage("either --point or --index is required")),
    };
    let cfg = correction_config(&code, a.s, a.unit_weights)?.with_seed(a.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut oracle = CountingOracle::new(SliceOracle(&word.symbols));
    let value = local_correct(&mut oracle, &code, target, &cfg, &mut rng)?;
    let symbol = |x: Option<Elem>| x.map_or_else(|| "?".to_string(), |e| format_elem(f, e));
    let queries: Vec<Value> = oracle
        .log()
        .iter()
        .map(|&i| json!({"index": i, "point": point_string(&code, i), "symbol": symbol(word.symbols[i])}))
        .collect();
    let report = json!({
        "code": word.descriptor,
        "target": {"index": target, "point": point_string(&code, target)},
        "s": cfg.s,
        "t": cfg.t(),
        "seed": a.seed,
        "value": value.map(|e| format_elem(f, e)),
        "erasure": value.is_none(),
        "queries": queries,
    });
    Ok(Outcome::json(&report, true))
}

#[derive(Serialize)]
struct ExperimentJson {
    code: crate::format::DescriptorJson,
    s: usize,
    t: usize,
    delta: f64,
    delta_max: f64,
    corrupted: usize,
    seed: u64,
    unit_weights: bool,
    trials: u64,
    successes: u64,
    wrong: u64,
    erasures: u64,
    success_rate: f64,
    bound: f64,
    sigma: f64,
    bound_applies: bool,
    bound_holds: bool,
    chi_square: f64,
    smoothness_p_value: f64,
    histogram: Vec<u64>,
}

/// Runs `trials` seeded trials in parallel; the result does not depend on
/// scheduling because each trial owns its substream and merging commutes.
pub fn run_experiment(code: &MonomialCode, cfg: &CorrectionConfig, trials: u64) -> CliResult<ExperimentReport> {
    let n = code.len();
    (0..trials)
        .into_par_iter()
        .map(|i| run_trial(code, cfg, i))
        .try_fold(
            || ExperimentReport::new(n),
            |mut acc, r| {
                let (outcome, queries) = r?;
                acc.record(outcome, &queries);
                Ok::<_, liftcode::Error>(acc)
            },
        )
        .try_reduce(|| ExperimentReport::new(n), |a, b| Ok(a.merge(&b)))
        .map_err(CliError::from)
}

fn experiment(a: &ExperimentArgs) -> CliResult<Outcome> {
    if a.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let code = MonomialCode::with_order(a.code.q, CodeKind::PLift, a.code.m, a.code.k)?;
    let cfg = correction_config(&code, a.s, a.unit_weights)?
        .with_delta(fraction("delta", a.delta)?)
        .with_seed(a.seed);
    let r = run_experiment(&code, &cfg, a.trials)?;
    let bound = cfg.success_bound();
    let sigma = r.sigma(bound.clamp(0.0, 1.0));
    let bound_applies = cfg.delta <= cfg.delta_max();
    let bound_holds = r.success_rate() >= bound - 3.0 * sigma;
    let (chi, p) = chi_square_uniform(&r.histogram);
    let report = ExperimentJson {
        code: code.descriptor().into(),
        s: cfg.s,
        t: cfg.t(),
        delta: cfg.delta,
        delta_max: cfg.delta_max(),
        corrupted: (cfg.delta * code.len() as f64) as usize,
        seed: a.seed,
        unit_weights: a.unit_weights,
        trials: r.trials,
        successes: r.successes,
        wrong: r.wrong,
        erasures: r.erasures,
        success_rate: r.success_rate(),
        bound,
        sigma,
        bound_applies,
        bound_holds,
        chi_square: chi,
        smoothness_p_value: p,
        histogram: r.histogram.clone(),
    };
    let value = serde_json::to_value(&report).expect("serializable");
    Ok(Outcome::json(&value, !bound_applies || bound_holds))
}

/// Exact minimum distance with the message space split across threads, or
/// the column-subset search when the sweep is over budget.
pub fn exact_distance(f: &FiniteField, g: &Matrix, limit: u64) -> Option<usize> {
    let sweep = (f.order() as u64).checked_pow(g.rows() as u32);
    if !sweep.is_some_and(|s| s <= limit) {
        return analysis::subset_min_distance(f, g, limit);
    }
    let p = f.characteristic() as u64;
    let digits = analysis::message_digits(f, g);
    let mut shard_digits = 0;
    while shard_digits < digits && p.pow(shard_digits as u32) < 64 {
        shard_digits += 1;
    }
    (0..p.pow(shard_digits as u32))
        .into_par_iter()
        .filter_map(|s| analysis::gray_min_weight(f, g, shard_digits, s))
        .min()
}

fn analyze(a: &AnalyzeArgs) -> CliResult<Outcome> {
    let (q, m, k) = (a.code.q, a.code.m, a.code.k);
    let code = MonomialCode::with_order(q, CodeKind::PLift, m, k)?;
    let f = code.field().clone();
    let mut report = serde_json::Map::new();
    report.insert("code".into(), serde_json::to_value(crate::format::DescriptorJson::from(code.descriptor())).expect("serializable"));
    let mut passed = true;
    for check in &a.checks {
        let (name, value, ok) = match check {
            Check::Infoset => {
                let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
                let entry = |c: &MonomialCode, rng: &mut ChaCha8Rng| -> CliResult<Value> {
                    let canonical = is_information_set(c, &information_set(c)?);
                    let random: Vec<bool> = (0..a.draws)
                        .map(|_| Ok(is_information_set(c, &random_information_set(c, rng)?)))
                        .collect::<CliResult<_>>()?;
                    Ok(json!({"code": crate::format::DescriptorJson::from(c.descriptor()), "canonical": canonical, "random": random}))
                };
                let mut entries = vec![entry(&code, &mut rng)?];
                let lift = MonomialCode::with_order(q, CodeKind::Lift, m, k - 1)?;
                entries.push(entry(&lift, &mut rng)?);
                let ok = entries.iter().all(|e| {
                    e["canonical"].as_bool() == Some(true)
                        && e["random"].as_array().is_some_and(|r| r.iter().all(|x| x.as_bool() == Some(true)))
                });
                ("infoset", Value::Array(entries), ok)
            }
            Check::Qc => match qc_certificate(&code)? {
                None => ("qc", json!({"applicable": false}), true),
                Some(c) => {
                    let ok = c.verified();
                    let lengths: Vec<usize> = c.cycles.iter().map(Vec::len).collect();
                    (
                        "qc",
                        json!({"applicable": true, "n": c.n, "index": c.d, "cycle_lengths": lengths,
                               "invariant": c.invariant, "verified": ok}),
                        ok,
                    )
                }
            },
            Check::Distance => {
                let mut r = distance_bounds(q, m, k)?;
                if a.exact_limit > 0 {
                    r.exact = exact_distance(&f, code.generator(), a.exact_limit);
                }
                let ok = r.consistent();
                (
                    "distance",
                    json!({"prs_distance": r.prs_distance, "lower": r.lower, "upper": r.upper,
                           "exact": r.exact, "consistent": ok}),
                    ok,
                )
            }
            Check::Dual => {
                let r = design_dual_check(q, m)?;
                let ok = r.passed();
                (
                    "dual",
                    json!({"q": r.q, "m": r.m, "plift_dim": r.plift_dim, "incidence_rank": r.incidence_rank,
                           "dual_dim": r.dual_dim, "equal": r.equal, "predicted_rank": r.predicted_rank,
                           "passed": ok}),
                    ok,
                )
            }
            Check::ShortenPuncture => {
                let shorten = shorten_at_infinity(&code)?
                    .equals(&MonomialCode::with_order(q, CodeKind::Lift, m, k - 1)?.to_linear());
                let puncture = if m >= 2 {
                    Some(
                        puncture_to_infinity(&code)?
                            .equals(&MonomialCode::with_order(q, CodeKind::PLift, m - 1, k)?.to_linear()),
                    )
                } else {
                    None
                };
                let ok = shorten && puncture != Some(false);
                ("shorten-puncture", json!({"shorten": shorten, "puncture": puncture}), ok)
            }
        };
        passed &= ok;
        report.insert(name.into(), value);
    }
    report.insert("passed".into(), Value::Bool(passed));
    Ok(Outcome::json(&Value::Object(report), passed))
}

fn selftest() -> CliResult<Outcome> {
    let checks = liftcode::selftest::run_all();
    let mut out = String::new();
    for c in &checks {
        out.push_str(&format!("{} {} ({})\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    let passed = checks.iter().all(|c| c.passed);
    out.push_str(&format!(
        "{} of {} suites passed\n",
        checks.iter().filter(|c| c.passed).count(),
        checks.len()
    ));
    Ok(Outcome { output: out, passed })
}
