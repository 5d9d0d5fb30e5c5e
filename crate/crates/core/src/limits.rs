//! Growth-rate analysis: the dominant denominator root and the growth
//! ratio it implies, an independent composition-style dynamic-programming
//! counter for cross-checking, and the ratio sweep across a parameter grid.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::model::{ModelPolynomial, SpawningInfix};
use crate::rational::RationalParam;

/// Reference length at which the empirical ratio w_{n+1}/w_n is sampled.
pub const EMPIRICAL_REFERENCE_N: usize = 200;

/// Growth data for one parameter: β is the unique root in (0,1) of
/// D(x) = 1 − x^{c+d} − P_q(x,x), ratio = 1/β is the asymptotic growth
/// factor of the counts, and empirical_ratio is w_201/w_200 from the
/// dynamic-programming counter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEstimate {
    pub q: RationalParam,
    pub beta: f64,
    pub ratio: f64,
    pub tolerance: f64,
    pub empirical_ratio: f64,
}

/// The exponents of the denominator D(x): the univariate degrees of the
/// model polynomial plus c+d.
fn denominator_lags(q: &RationalParam) -> Vec<u64> {
    let mut lags = ModelPolynomial::new(q).univariate_degrees();
    lags.push(SpawningInfix::new(q).length());
    lags
}

/// Finds β by bisection. The bracket is always valid: D(0) = 1 and
/// D(1) = −c, and D is strictly decreasing on [0,1] because every
/// non-constant term has a negative coefficient, so the root is unique;
/// positivity of the counting coefficients makes it the dominant
/// singularity. The (1−x) factor of the full denominator is excluded on
/// purpose: its root at 1 is strictly dominated by β < 1.
pub fn growth_rate(q: &RationalParam, tolerance: f64) -> GrowthEstimate {
    assert!(tolerance > 0.0, "tolerance must be positive");
    let lags = denominator_lags(q);
    let eval = |x: f64| 1.0 - lags.iter().map(|&j| x.powi(j as i32)).sum::<f64>();
    let mut lo = 0.0f64;
    let mut hi = 1.0f64;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if eval(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let beta = 0.5 * (lo + hi);
    let counts = dp_count(q, EMPIRICAL_REFERENCE_N + 1);
    let empirical_ratio = counts[EMPIRICAL_REFERENCE_N + 1]
        .to_f64()
        .expect("count fits in f64 range")
        / counts[EMPIRICAL_REFERENCE_N].to_f64().expect("count fits in f64 range");
    GrowthEstimate {
        q: *q,
        beta,
        ratio: 1.0 / beta,
        tolerance,
        empirical_ratio,
    }
}

/// Counts members by direct block composition, independently of the
/// recurrence machinery: f(m) counts concatenations of suffix elements
/// (lengths 1+⌊i/q⌋+i) with total length m, and the leading 1-run absorbs
/// the rest, so w_n = Σ_{m ≤ n} f(m). Exact integers throughout.
pub fn dp_count(q: &RationalParam, n_max: usize) -> Vec<BigInt> {
    let mut lengths = Vec::new();
    let mut i = 0u64;
    while q.suffix_len(i) <= n_max as u64 {
        lengths.push(q.suffix_len(i) as usize);
        i += 1;
    }
    let mut f = vec![BigInt::zero(); n_max + 1];
    f[0] = BigInt::one();
    for m in 1..=n_max {
        let mut acc = BigInt::zero();
        for &len in &lengths {
            if len > m {
                break;
            }
            acc += &f[m - len];
        }
        f[m] = acc;
    }
    let mut counts = Vec::with_capacity(n_max + 1);
    let mut running = BigInt::zero();
    for value in f {
        running += value;
        counts.push(running.clone());
    }
    counts
}

/// Growth ratio at every grid point. Positivity of each point is enforced
/// by the parameter type itself, so the sweep cannot fail.
pub fn ratio_sweep(grid: &[RationalParam], tolerance: f64) -> Vec<(RationalParam, f64)> {
    grid.iter()
        .map(|q| (*q, growth_rate(q, tolerance).ratio))
        .collect()
}

/// The grid k/50 for k = 1..=101, covering (0, 2.02] in steps of 0.02.
/// The left endpoint 0 is excluded: the family degenerates there.
pub fn default_grid() -> Vec<RationalParam> {
    (1..=101)
        .map(|k| RationalParam::new(k, 50).expect("grid points are positive"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::derive;

    fn q(text: &str) -> RationalParam {
        text.parse().unwrap()
    }

    fn nums(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    const TOL: f64 = 1e-12;

    #[test]
    fn golden_ratio_for_unit_parameter() {
        let estimate = growth_rate(&q("1"), TOL);
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!((estimate.ratio - golden).abs() < 1e-9, "got {}", estimate.ratio);
    }

    #[test]
    fn tribonacci_ratio_for_q_two() {
        let estimate = growth_rate(&q("2"), TOL);
        let root = 3.0 * 33.0f64.sqrt();
        let tribonacci = (1.0 + (19.0 + root).cbrt() + (19.0 - root).cbrt()) / 3.0;
        assert!((tribonacci - 1.839_286_755_214_161_2).abs() < 1e-12);
        assert!((estimate.ratio - tribonacci).abs() < 1e-9, "got {}", estimate.ratio);
    }

    #[test]
    fn half_parameter_ratio_matches_independent_root() {
        // for q=1/2 the counts satisfy w_n = w_{n-1} + w_{n-3}, so the
        // ratio is the real root of x^3 = x^2 + 1; bisect that directly
        let g = |x: f64| x * x * x - x * x - 1.0;
        let (mut lo, mut hi) = (1.0f64, 2.0f64);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let expected = 0.5 * (lo + hi);
        assert!((expected - 1.465_571_231_876_768_2).abs() < 1e-12);
        let estimate = growth_rate(&q("1/2"), TOL);
        assert!((estimate.ratio - expected).abs() < 1e-9, "got {}", estimate.ratio);
    }

    #[test]
    fn beta_is_a_denominator_root() {
        for text in ["1/5", "2/3", "1", "3/2", "5/2", "5"] {
            let param = q(text);
            let estimate = growth_rate(&param, TOL);
            let lags = denominator_lags(&param);
            let value = 1.0 - lags.iter().map(|&j| estimate.beta.powi(j as i32)).sum::<f64>();
            assert!(value.abs() < 1e-10, "q={param}: D(beta)={value}");
            assert!(estimate.ratio > 1.0 && estimate.ratio < 2.0);
        }
    }

    #[test]
    fn representation_does_not_matter() {
        let a = growth_rate(&q("6/4"), TOL);
        let b = growth_rate(&q("3/2"), TOL);
        assert_eq!(a.ratio, b.ratio);
        assert_eq!(a.q, b.q);
    }

    #[test]
    fn dp_count_table_rows() {
        assert_eq!(
            dp_count(&q("3/2"), 11),
            nums(&[1, 2, 4, 7, 13, 23, 42, 76, 138, 250, 453, 821])
        );
        assert_eq!(
            dp_count(&q("5/3"), 11),
            nums(&[1, 2, 4, 7, 13, 24, 44, 81, 148, 272, 499, 916])
        );
        assert_eq!(dp_count(&q("9/7"), 0), nums(&[1]));
    }

    #[test]
    fn dp_count_agrees_with_recurrence() {
        for text in ["1/4", "3/5", "1", "4/3", "5/2", "4"] {
            let param = q(text);
            assert_eq!(
                dp_count(&param, 80),
                derive(&param).generate(80),
                "q={param}"
            );
        }
    }

    #[test]
    fn empirical_ratio_converges_to_analytic() {
        for text in ["1/2", "1", "8/5", "5/2"] {
            let estimate = growth_rate(&q(text), TOL);
            assert!(
                (estimate.empirical_ratio - estimate.ratio).abs() < 1e-6,
                "q={text}: empirical {} vs {}",
                estimate.empirical_ratio,
                estimate.ratio
            );
        }
    }

    #[test]
    fn default_grid_sweep_shape() {
        let grid = default_grid();
        assert_eq!(grid.len(), 101);
        assert_eq!(grid[49], q("1"));
        assert_eq!(grid[99], q("2"));
        let sweep = ratio_sweep(&grid, TOL);
        for pair in sweep.windows(2) {
            assert!(
                pair[1].1 >= pair[0].1 - 1e-9,
                "ratio dropped between {} and {}",
                pair[0].0,
                pair[1].0
            );
        }
        assert!(sweep[0].1 > 1.0 && sweep[0].1 < 1.1);
        assert!(sweep[100].1 > 1.84);
    }
}
