//! Exact truncated power-series arithmetic over arbitrary-precision
//! integers, in one variable (length counts) and two variables (zeros and
//! ones counts), plus the closed-form generating functions built on it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{ModelPolynomial, SpawningInfix};
use crate::rational::RationalParam;

/// Default truncation order for CLI-facing series expansions.
pub const DEFAULT_ORDER: usize = 64;

/// Sparse bivariate series truncated at total degree `order`. The key is
/// (r, i) = (zeros exponent, ones exponent); zero coefficients are never
/// stored, so derived equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedBivariateSeries {
    order: usize,
    coefficients: BTreeMap<(usize, usize), BigInt>,
}

impl TruncatedBivariateSeries {
    pub fn zero(order: usize) -> Self {
        Self { order, coefficients: BTreeMap::new() }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 0, 1)
    }

    /// coefficient · z^r y^i, silently dropped when r+i exceeds the order.
    pub fn monomial(order: usize, r: usize, i: usize, coefficient: i64) -> Self {
        let mut series = Self::zero(order);
        if r + i <= order && coefficient != 0 {
            series.coefficients.insert((r, i), BigInt::from(coefficient));
        }
        series
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero for any term that is absent or beyond the truncation order.
    pub fn coefficient(&self, r: usize, i: usize) -> BigInt {
        self.coefficients.get(&(r, i)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as (r, i, coefficient), ordered by (r, i).
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> + '_ {
        self.coefficients.iter().map(|(&(r, i), c)| (r, i, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders must match");
        let mut coefficients = self.coefficients.clone();
        for (&key, value) in &other.coefficients {
            let entry = coefficients.entry(key).or_insert_with(BigInt::zero);
            *entry += value;
        }
        coefficients.retain(|_, v| !v.is_zero());
        Self { order: self.order, coefficients }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders must match");
        let mut coefficients = self.coefficients.clone();
        for (&key, value) in &other.coefficients {
            let entry = coefficients.entry(key).or_insert_with(BigInt::zero);
            *entry -= value;
        }
        coefficients.retain(|_, v| !v.is_zero());
        Self { order: self.order, coefficients }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders must match");
        let mut coefficients: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(ar, ai), a) in &self.coefficients {
            for (&(br, bi), b) in &other.coefficients {
                if ar + br + ai + bi > self.order {
                    continue;
                }
                let entry = coefficients.entry((ar + br, ai + bi)).or_insert_with(BigInt::zero);
                *entry += a * b;
            }
        }
        coefficients.retain(|_, v| !v.is_zero());
        Self { order: self.order, coefficients }
    }

    /// Multiplicative inverse mod total degree order+1, computed layer by
    /// layer: the degree-t coefficients of the inverse depend only on lower
    /// layers. Requires constant term exactly 1.
    pub fn inverse(&self) -> Result<Self> {
        let constant = self.coefficient(0, 0);
        if !constant.is_one() {
            return Err(Error::NonUnitConstantTerm { found: constant.to_string() });
        }
        let mut inv: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        inv.insert((0, 0), BigInt::one());
        for total in 1..=self.order {
            for r in 0..=total {
                let i = total - r;
                let mut acc = BigInt::zero();
                for (&(ar, ai), a) in &self.coefficients {
                    if (ar, ai) == (0, 0) || ar > r || ai > i {
                        continue;
                    }
                    if let Some(b) = inv.get(&(r - ar, i - ai)) {
                        acc += a * b;
                    }
                }
                if !acc.is_zero() {
                    inv.insert((r, i), -acc);
                }
            }
        }
        Ok(Self { order: self.order, coefficients: inv })
    }
}

/// Dense univariate series truncated at degree `order`; index = degree,
/// length always order+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedUnivariateSeries {
    order: usize,
    coefficients: Vec<BigInt>,
}

impl TruncatedUnivariateSeries {
    pub fn zero(order: usize) -> Self {
        Self { order, coefficients: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// coefficient · x^degree, silently dropped when degree exceeds the order.
    pub fn monomial(order: usize, degree: usize, coefficient: i64) -> Self {
        let mut series = Self::zero(order);
        if degree <= order {
            series.coefficients[degree] = BigInt::from(coefficient);
        }
        series
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coefficients[n]
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders must match");
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        Self { order: self.order, coefficients }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders must match");
        let coefficients = self
            .coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a - b)
            .collect();
        Self { order: self.order, coefficients }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders must match");
        let mut coefficients = vec![BigInt::zero(); self.order + 1];
        for (da, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (db, b) in other.coefficients.iter().enumerate() {
                if da + db > self.order {
                    break;
                }
                coefficients[da + db] += a * b;
            }
        }
        Self { order: self.order, coefficients }
    }

    /// Multiplicative inverse mod x^{order+1}; requires constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coefficients[0].is_one() {
            return Err(Error::NonUnitConstantTerm { found: self.coefficients[0].to_string() });
        }
        let mut inv = vec![BigInt::zero(); self.order + 1];
        inv[0] = BigInt::one();
        for n in 1..=self.order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coefficients[k].is_zero() {
                    acc += &self.coefficients[k] * &inv[n - k];
                }
            }
            inv[n] = -acc;
        }
        Ok(Self { order: self.order, coefficients: inv })
    }
}

/// 1 − z^d y^c, the denominator that pumps the spawning infix.
fn infix_complement(q: &RationalParam, order: usize) -> TruncatedBivariateSeries {
    let infix = SpawningInfix::new(q);
    TruncatedBivariateSeries::one(order).sub(&TruncatedBivariateSeries::monomial(
        order,
        infix.zeros() as usize,
        infix.ones() as usize,
        1,
    ))
}

/// The model polynomial P_q as a bivariate series.
fn model_series(q: &RationalParam, order: usize) -> TruncatedBivariateSeries {
    let mut series = TruncatedBivariateSeries::zero(order);
    for &(zeros, ones) in ModelPolynomial::new(q).terms() {
        series = series.add(&TruncatedBivariateSeries::monomial(
            order,
            zeros as usize,
            ones as usize,
            1,
        ));
    }
    series
}

/// Generating series of the suffix set: P_q(y,z) / (1 − z^d y^c). Every
/// coefficient is 0 or 1 because each element is hit exactly once.
pub fn suffix_series(q: &RationalParam, order: usize) -> TruncatedBivariateSeries {
    let pump = infix_complement(q, order)
        .inverse()
        .expect("1 - z^d y^c has constant term 1");
    model_series(q, order).mul(&pump)
}

/// Generating series of the whole family:
/// (1 − z^d y^c) / ((1−y)(1 − z^d y^c − P_q(y,z))).
/// Coefficient (r, i) counts member words with r zeros and i ones.
pub fn word_series(q: &RationalParam, order: usize) -> TruncatedBivariateSeries {
    let numerator = infix_complement(q, order);
    let one_minus_y = TruncatedBivariateSeries::one(order)
        .sub(&TruncatedBivariateSeries::monomial(order, 0, 1, 1));
    let denominator = one_minus_y.mul(&numerator.sub(&model_series(q, order)));
    numerator.mul(&denominator.inverse().expect("denominator has constant term 1"))
}

/// Univariate specialization counting members by length:
/// (1 − x^{c+d}) / ((1−x)(1 − x^{c+d} − P_q(x,x))). Coefficient n = w_n.
pub fn length_series(q: &RationalParam, order: usize) -> TruncatedUnivariateSeries {
    let infix_length = SpawningInfix::new(q).length() as usize;
    let numerator = TruncatedUnivariateSeries::one(order)
        .sub(&TruncatedUnivariateSeries::monomial(order, infix_length, 1));
    let mut model = TruncatedUnivariateSeries::zero(order);
    for &(zeros, ones) in ModelPolynomial::new(q).terms() {
        model = model.add(&TruncatedUnivariateSeries::monomial(
            order,
            (zeros + ones) as usize,
            1,
        ));
    }
    let one_minus_x = TruncatedUnivariateSeries::one(order)
        .sub(&TruncatedUnivariateSeries::monomial(order, 1, 1));
    let denominator = one_minus_x.mul(&numerator.sub(&model));
    numerator.mul(&denominator.inverse().expect("denominator has constant term 1"))
}

/// Coefficient n = total number of zeros across all members of length n,
/// read off the bivariate series as Σ r·w_{r,i} over r+i = n.
pub fn zero_popularity_series(q: &RationalParam, order: usize) -> TruncatedUnivariateSeries {
    let words = word_series(q, order);
    let mut coefficients = vec![BigInt::zero(); order + 1];
    for (r, i, coefficient) in words.terms() {
        coefficients[r + i] += BigInt::from(r as u64) * coefficient;
    }
    TruncatedUnivariateSeries { order, coefficients }
}
