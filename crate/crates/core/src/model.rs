//! Model polynomial and spawning infix of a rational parameter.

use crate::rational::RationalParam;

/// The word factor 0^d 1^c for q = c/d, the atom whose repeated insertion
/// generates all longer suffix elements. Its exponent pair is (d, c).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpawningInfix {
    zeros: u64,
    ones: u64,
}

impl SpawningInfix {
    pub fn new(q: &RationalParam) -> Self {
        Self {
            zeros: q.denominator(),
            ones: q.numerator(),
        }
    }

    pub fn zeros(&self) -> u64 {
        self.zeros
    }

    pub fn ones(&self) -> u64 {
        self.ones
    }

    /// c + d, the length of the infix word.
    pub fn length(&self) -> u64 {
        self.zeros + self.ones
    }
}

/// The c-term bivariate polynomial Σ_{i=0}^{c-1} z^{1+⌊i/q⌋} y^i whose
/// exponent pairs (zeros, ones) describe the c shortest suffix elements.
/// Its univariate degrees form the lag set of the counting recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelPolynomial {
    terms: Vec<(u64, u64)>,
}

impl ModelPolynomial {
    pub fn new(q: &RationalParam) -> Self {
        let terms = (0..q.numerator())
            .map(|i| (q.suffix_zeros(i), i))
            .collect();
        Self { terms }
    }

    /// Exponent pairs (zeros, ones), ordered by increasing ones-count.
    pub fn terms(&self) -> &[(u64, u64)] {
        &self.terms
    }

    /// Total degrees zeros+ones; strictly increasing, starting at 1.
    pub fn univariate_degrees(&self) -> Vec<u64> {
        self.terms.iter().map(|&(r, i)| r + i).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> RationalParam {
        text.parse().unwrap()
    }

    fn terms(text: &str) -> Vec<(u64, u64)> {
        ModelPolynomial::new(&q(text)).terms().to_vec()
    }

    #[test]
    fn small_parameters() {
        assert_eq!(terms("2/3"), vec![(1, 0), (2, 1)]);
        assert_eq!(terms("3/2"), vec![(1, 0), (1, 1), (2, 2)]);
        assert_eq!(terms("1/5"), vec![(1, 0)]);
        assert_eq!(terms("3/4"), vec![(1, 0), (2, 1), (3, 2)]);
    }

    #[test]
    fn degrees_are_distinct_increasing_and_bounded() {
        for text in [
            "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1", "5/4", "4/3",
            "3/2", "5/3", "2", "5/2", "3", "4", "5", "101/50",
        ] {
            let param = q(text);
            let model = ModelPolynomial::new(&param);
            let c = param.numerator();
            let bound = c + param.denominator();
            assert_eq!(model.terms().len() as u64, c, "{text}");
            assert_eq!(model.terms()[0], (1, 0), "{text}");
            let degrees = model.univariate_degrees();
            assert_eq!(degrees[0], 1, "{text}");
            for pair in degrees.windows(2) {
                assert!(pair[0] < pair[1], "{text}");
            }
            assert!(degrees.iter().all(|&deg| deg < bound), "{text}");
            for (i, &(zeros, ones)) in model.terms().iter().enumerate() {
                assert_eq!(ones, i as u64);
                assert_eq!(zeros, 1 + param.floor_div(i as u64));
            }
        }
    }
}
