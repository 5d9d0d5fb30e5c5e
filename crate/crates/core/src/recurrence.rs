//! The 0-1-coefficient linear recurrence satisfied by the length counts:
//! derivation of its lag set and initial conditions from the model
//! polynomial, exact sequence generation, the suffix-insertion map behind
//! the combinatorial proof, and a reference counter for restricted integer
//! compositions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::model::{ModelPolynomial, SpawningInfix};
use crate::rational::RationalParam;
use crate::words::{validate_member, Word};

/// w_n = Σ_{j ∈ lags} w_{n−j} + w_{n−extra_lag}, with `initial` holding
/// w_0 .. w_{extra_lag−1}. Invariants: lags are the univariate degrees of
/// the model polynomial (sorted, containing 1, exactly c of them, all
/// smaller than extra_lag = c+d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    q: RationalParam,
    lags: Vec<u64>,
    extra_lag: u64,
    initial: Vec<BigInt>,
}

impl RecurrenceSpec {
    pub fn q(&self) -> RationalParam {
        self.q
    }

    pub fn lags(&self) -> &[u64] {
        &self.lags
    }

    pub fn extra_lag(&self) -> u64 {
        self.extra_lag
    }

    pub fn initial(&self) -> &[BigInt] {
        &self.initial
    }

    /// All lags including the extra one, sorted ascending.
    pub fn all_lags(&self) -> Vec<u64> {
        let mut all = self.lags.clone();
        all.push(self.extra_lag);
        all
    }

    /// w_0 .. w_{n_max}, exactly.
    pub fn generate(&self, n_max: usize) -> Vec<BigInt> {
        let mut values: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            if n < self.initial.len() {
                values.push(self.initial[n].clone());
                continue;
            }
            let mut value = BigInt::zero();
            for &j in &self.lags {
                value += &values[n - j as usize];
            }
            value += &values[n - self.extra_lag as usize];
            values.push(value);
        }
        values
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w_n = ")?;
        for (pos, j) in self.all_lags().iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "w_{{n-{j}}}")?;
        }
        Ok(())
    }
}

/// Builds the recurrence for q. The initial conditions come from unrolling
/// the relation itself with an all-zero history and a +1 bonus at every
/// index below extra_lag; the resulting values are not copied from any
/// table, which lets tables serve as test fixtures.
pub fn derive(q: &RationalParam) -> RecurrenceSpec {
    let lags = ModelPolynomial::new(q).univariate_degrees();
    let extra_lag = SpawningInfix::new(q).length();
    let mut initial: Vec<BigInt> = Vec::with_capacity(extra_lag as usize);
    for n in 0..extra_lag as usize {
        let mut value = BigInt::one();
        for &j in &lags {
            if (j as usize) <= n {
                value += &initial[n - j as usize];
            }
        }
        initial.push(value);
    }
    RecurrenceSpec { q: *q, lags, extra_lag, initial }
}

/// The length-increasing injection behind the recurrence proof: all-ones
/// words gain c+d extra ones; any other member receives the spawning infix
/// 0^d 1^c immediately after its rightmost zero. The image is always a
/// member, c+d longer, ending with at least c ones.
pub fn psi(word: &Word, q: &RationalParam) -> Result<Word> {
    validate_member(word, q)?;
    let infix = SpawningInfix::new(q);
    let bits = word.bits();
    let mut out = Vec::with_capacity(bits.len() + infix.length() as usize);
    match bits.iter().rposition(|&b| b == 0) {
        None => {
            out.extend_from_slice(bits);
            out.extend(std::iter::repeat_n(1, infix.length() as usize));
        }
        Some(pos) => {
            out.extend_from_slice(&bits[..=pos]);
            out.extend(std::iter::repeat_n(0, infix.zeros() as usize));
            out.extend(std::iter::repeat_n(1, infix.ones() as usize));
            out.extend_from_slice(&bits[pos + 1..]);
        }
    }
    Ok(Word::from_bits(out))
}

/// Number of compositions (ordered sums) of each n ≤ n_max into the given
/// positive parts, with the standard convention that 0 has one (empty)
/// composition. Parts equal to zero are ignored.
pub fn compositions_reference(parts: &[u64], n_max: usize) -> Vec<BigInt> {
    let mut counts: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut value = if n == 0 { BigInt::one() } else { BigInt::zero() };
        for &p in parts {
            let p = p as usize;
            if p >= 1 && p <= n {
                value += &counts[n - p];
            }
        }
        counts.push(value);
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{enumerate, is_member};

    fn q(text: &str) -> RationalParam {
        text.parse().unwrap()
    }

    fn nums(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn derive_examples() {
        let spec = derive(&q("3/2"));
        assert_eq!(spec.lags(), &[1, 2, 4]);
        assert_eq!(spec.extra_lag(), 5);
        assert_eq!(spec.initial(), &nums(&[1, 2, 4, 7, 13])[..]);

        let spec = derive(&q("1"));
        assert_eq!(spec.lags(), &[1]);
        assert_eq!(spec.extra_lag(), 2);
        assert_eq!(spec.initial(), &nums(&[1, 2])[..]);

        let spec = derive(&q("3/5"));
        assert_eq!(spec.all_lags(), vec![1, 3, 6, 8]);
        assert_eq!(spec.initial(), &nums(&[1, 2, 3, 5, 8, 12, 19, 30])[..]);
    }

    #[test]
    fn derive_lag_shape_across_parameters() {
        for text in ["1/5", "1/4", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1",
                     "5/4", "4/3", "3/2", "5/3", "2", "5/2", "3", "4", "5"] {
            let param = q(text);
            let spec = derive(&param);
            assert_eq!(spec.lags().first(), Some(&1), "q={param}");
            assert_eq!(spec.lags().len() as u64, param.numerator(), "q={param}");
            assert!(spec.lags().iter().all(|&j| j < spec.extra_lag()));
            assert!(!spec.lags().contains(&spec.extra_lag()));
        }
    }

    #[test]
    fn generate_table_rows() {
        assert_eq!(
            derive(&q("2")).generate(11),
            nums(&[1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927])
        );
        assert_eq!(
            derive(&q("4/3")).generate(11),
            nums(&[1, 2, 4, 7, 13, 23, 42, 75, 136, 245, 443, 799])
        );
        assert_eq!(
            derive(&q("1/2")).generate(11),
            nums(&[1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88])
        );
    }

    #[test]
    fn display_uses_lag_notation() {
        assert_eq!(
            derive(&q("3/2")).to_string(),
            "w_n = w_{n-1} + w_{n-2} + w_{n-4} + w_{n-5}"
        );
        assert_eq!(derive(&q("1")).to_string(), "w_n = w_{n-1} + w_{n-2}");
    }

    #[test]
    fn generate_counts_enumerated_words() {
        for text in ["1/2", "2/3", "1", "3/2", "5/2"] {
            let param = q(text);
            let values = derive(&param).generate(10);
            for (n, value) in values.iter().enumerate() {
                let count = enumerate(&param, n).unwrap().len();
                assert_eq!(value, &BigInt::from(count), "q={param}, n={n}");
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&"111".parse().unwrap(), &q("1")).unwrap().to_string(), "11111");
        assert_eq!(psi(&"110".parse().unwrap(), &q("1")).unwrap().to_string(), "11001");
        assert_eq!(psi(&"0".parse().unwrap(), &q("3/2")).unwrap().to_string(), "000111");
    }

    #[test]
    fn psi_rejects_non_members() {
        assert!(psi(&"0110".parse().unwrap(), &q("1")).is_err());
    }

    #[test]
    fn psi_images_are_the_members_with_long_one_tails() {
        for text in ["1", "3/2"] {
            let param = q(text);
            let c = param.numerator() as usize;
            let step = (param.numerator() + param.denominator()) as usize;
            for n in 0..=4 {
                let mut images: Vec<Word> = enumerate(&param, n)
                    .unwrap()
                    .iter()
                    .map(|w| psi(w, &param).unwrap())
                    .collect();
                images.sort();
                for image in &images {
                    assert_eq!(image.len(), n + step);
                    assert!(is_member(image, &param));
                    assert!(image.bits()[n + step - c..].iter().all(|&b| b == 1));
                }
                let expected: Vec<Word> = enumerate(&param, n + step)
                    .unwrap()
                    .into_iter()
                    .filter(|w| w.bits()[n + step - c..].iter().all(|&b| b == 1))
                    .collect();
                assert_eq!(images, expected, "q={param}, n={n}");
            }
        }
    }

    #[test]
    fn compositions_standard_convention() {
        assert_eq!(
            compositions_reference(&[1, 3, 6, 8], 9),
            nums(&[1, 1, 1, 2, 3, 4, 7, 11, 17, 27])
        );
        assert_eq!(compositions_reference(&[1], 6), nums(&[1, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn compositions_shift_matches_single_lag_family() {
        let counts = compositions_reference(&[1, 6], 16);
        let values = derive(&q("1/5")).generate(11);
        assert_eq!(&counts[5..], &values[..]);
    }

    #[test]
    fn compositions_share_recurrence_but_not_initial_values() {
        let spec = derive(&q("3/5"));
        let values = spec.generate(16);
        let counts = compositions_reference(&spec.all_lags(), 16);
        for n in 8..=16 {
            let from_lags: BigInt = spec.all_lags().iter().map(|&j| &counts[n - j as usize]).sum();
            assert_eq!(counts[n], from_lags, "n={n}");
        }
        assert_ne!(&values[..8], &counts[..8]);
    }
}
