use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Pearson chi-square statistic and upper-tail p-value of `counts` against
/// the uniform distribution.
pub fn chi_square_uniform(counts: &[u64]) -> (f64, f64) {
    let total: u64 = counts.iter().sum();
    if counts.len() < 2 || total == 0 {
        return (0.0, 1.0);
    }
    let expected = total as f64 / counts.len() as f64;
    let stat: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let dist = ChiSquared::new((counts.len() - 1) as f64).expect("positive degrees of freedom");
    (stat, dist.sf(stat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_counts_have_p_one() {
        let (s, p) = chi_square_uniform(&[10, 10, 10, 10]);
        assert_eq!(s, 0.0);
        assert!((p - 1.0).abs() < 1e-12);
    }

    #[test]
    fn skewed_counts_are_rejected() {
        let (_, p) = chi_square_uniform(&[1000, 10, 10, 10]);
        assert!(p < 1e-6);
    }

    #[test]
    fn known_value() {
        // expected 50 each: stat 4 on 1 degree of freedom
        let (s, p) = chi_square_uniform(&[60, 40]);
        assert!((s - 4.0).abs() < 1e-12);
        assert!((p - 0.0455).abs() < 1e-3);
    }
}
