use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::degrees::{adeg_count, pdeg_count};
use crate::error::{check_range, Result};
use crate::geometry::theta;
use crate::gf::prime_power;

pub const CSV_HEADER: &str = "k,n_A,dim_A,R_A,n_P,dim_P,R_P,dim_PRM,R_PRM";

/// Which families a table row covers. Columns of omitted families are empty.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum TableMode {
    Lift,
    Rm,
    #[default]
    Both,
}

/// One row: `Lift_q(m, k-1)`, `PLift_q(m, k)` and `PRM_q(m, k)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RateRow {
    pub k: u32,
    pub n_a: usize,
    pub dim_a: Option<usize>,
    pub n_p: usize,
    pub dim_p: Option<usize>,
    pub dim_prm: Option<usize>,
}

impl RateRow {
    pub fn to_csv(&self) -> String {
        let cell = |d: Option<usize>, n: usize| match d {
            Some(d) => (format!("{d}"), format_rate(d as u64, n as u64)),
            None => (String::new(), String::new()),
        };
        let (da, ra) = cell(self.dim_a, self.n_a);
        let (dp, rp) = cell(self.dim_p, self.n_p);
        let (dr, rr) = cell(self.dim_prm, self.n_p);
        format!(
            "{},{},{da},{ra},{},{dp},{rp},{dr},{rr}",
            self.k, self.n_a, self.n_p
        )
    }
}

/// `binom(m + k, k)`: all degree-`k` monomials in `m + 1` variables are
/// reduced when `k <= q - 1`.
fn prm_dim(m: usize, k: u32) -> usize {
    (1..=m as u64).fold(1u64, |acc, i| acc * (k as u64 + i) / i) as usize
}

/// Rows `k = max(1, q - 8) ..= q - 1`.
pub fn rate_table(q: u32, m: usize, mode: TableMode) -> Result<Vec<RateRow>> {
    check_range("m", m as i64, 1, 16)?;
    check_range("q", q as i64, 2, 1 << 16)?;
    prime_power(q).ok_or(crate::Error::NotPrimePower(q))?;
    let lift = mode != TableMode::Rm;
    let rm = mode != TableMode::Lift;
    (q.saturating_sub(8).max(1)..q)
        .map(|k| {
            Ok(RateRow {
                k,
                n_a: (q as usize).pow(m as u32),
                dim_a: if lift { Some(adeg_count(m, k - 1, q)?) } else { None },
                n_p: theta(m, q),
                dim_p: if lift { Some(pdeg_count(m, k, q)?) } else { None },
                dim_prm: rm.then(|| prm_dim(m, k)),
            })
        })
        .collect()
}

pub fn rate_table_csv(q: u32, m: usize, mode: TableMode) -> Result<String> {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rate_table(q, m, mode)? {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    Ok(out)
}

/// `num / den` with three significant digits in the style of `%.3g`: the
/// exact rational is rounded half to even, trailing zeros are dropped, and
/// exponents below `-4` switch to scientific notation.
pub fn format_rate(num: u64, den: u64) -> String {
    assert!(den > 0, "zero denominator");
    if num == 0 {
        return String::from("0");
    }
    // find e with 100 <= num * 10^(2-e) / den < 1000, i.e. 10^e <= num/den < 10^(e+1)
    let mut e: i32 = 0;
    let (mut a, mut b) = (num as u128, den as u128);
    while a >= 10 * b {
        b *= 10;
        e += 1;
    }
    while a < b {
        a *= 10;
        e -= 1;
    }
    // now 1 <= a/b < 10; scale to three digits
    let (n3, r, b) = {
        let a = a * 100;
        (a / b, a % b, b)
    };
    let mut digits = n3;
    if 2 * r > b || (2 * r == b && digits % 2 == 1) {
        digits += 1;
    }
    if digits == 1000 {
        digits = 100;
        e += 1;
    }
    let s = format!("{digits}");
    let (int_digits, frac): (String, String) = if e >= 0 {
        let e = e as usize;
        if e >= 2 {
            // num/den <= 1 for rates; only 100+ would land here
            let mut s = s.clone();
            s.extend(core::iter::repeat('0').take(e - 2));
            (s, String::new())
        } else {
            (String::from(&s[..=e]), String::from(&s[e + 1..]))
        }
    } else if e >= -4 {
        let zeros: String = core::iter::repeat('0').take((-e - 1) as usize).collect();
        (String::from("0"), format!("{zeros}{s}"))
    } else {
        let mant = strip(&format!("{}.{}", &s[..1], &s[1..]));
        return format!("{mant}e-{:02}", -e);
    };
    if frac.is_empty() {
        int_digits
    } else {
        strip(&format!("{int_digits}.{frac}"))
    }
}

fn strip(s: &str) -> String {
    let t = s.trim_end_matches('0');
    String::from(t.trim_end_matches('.'))
}

/// `dim PLift_q(m, k) = dim PLift_q(m-1, k) + dim Lift_q(m, k-1)` for `m >= 2`
/// and `dim PLift_q(m, k) = 1 + sum_{j=1..m} dim Lift_q(j, k-1)`, checked on
/// materialized degree sets.
pub fn recursive_identities(q: u32, m: usize, k: u32) -> Result<bool> {
    use crate::degrees::{adeg, pdeg};
    let p = pdeg(m, k, q)?.len();
    let mut sum = 1;
    for j in 1..=m {
        sum += adeg(j, k - 1, q)?.len();
    }
    let step = if m >= 2 {
        p == pdeg(m - 1, k, q)?.len() + adeg(m, k - 1, q)?.len()
    } else {
        p == k as usize + 1
    };
    Ok(step && p == sum)
}
