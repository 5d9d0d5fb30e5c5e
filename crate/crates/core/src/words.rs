//! Word-level semantics: membership, maximal-block parsing, suffix
//! factorization, lexicographic enumeration, and the brute-force census
//! used as the independent oracle for every analytic pathway.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::RationalParam;

/// Default length cap for the exponential operations (enumeration and
/// census). Scanning 2^24 words takes about a second; 2^40 is an accident.
pub const DEFAULT_CAP: usize = 24;

/// A finite binary word. The derived ordering is lexicographic with 0 < 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from raw bits. Panics if any value exceeds 1.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Word(bits)
    }

    /// 1^k · 0^d 1^c … style construction: `runs` lists (symbol, count).
    pub fn from_runs(runs: &[(u8, usize)]) -> Self {
        let mut bits = Vec::new();
        for &(symbol, count) in runs {
            assert!(symbol <= 1);
            bits.extend(std::iter::repeat_n(symbol, count));
        }
        Word(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Hamming distance to a word of the same length.
    pub fn hamming(&self, other: &Word) -> usize {
        assert_eq!(self.len(), other.len(), "hamming distance needs equal lengths");
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| a != b)
            .count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidWord { input: s.to_string() }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

/// One maximal factor 0^zeros 1^ones with zeros ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub zeros: usize,
    pub ones: usize,
}

/// The unique parse of a word as 1^k followed by maximal 0^a 1^b blocks.
/// Every block except the last has ones ≥ 1; each block starts at a zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub leading_ones: usize,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn reassemble(&self) -> Word {
        let mut runs = vec![(1u8, self.leading_ones)];
        for block in &self.blocks {
            runs.push((0, block.zeros));
            runs.push((1, block.ones));
        }
        Word::from_runs(&runs)
    }
}

/// Splits a word into its leading 1-run and maximal 0^a 1^b blocks.
pub fn parse_blocks(word: &Word) -> BlockDecomposition {
    let bits = word.bits();
    let leading_ones = bits.iter().take_while(|&&b| b == 1).count();
    let mut blocks = Vec::new();
    let mut pos = leading_ones;
    while pos < bits.len() {
        let zeros = bits[pos..].iter().take_while(|&&b| b == 0).count();
        pos += zeros;
        let ones = bits[pos..].iter().take_while(|&&b| b == 1).count();
        pos += ones;
        blocks.push(Block { zeros, ones });
    }
    BlockDecomposition { leading_ones, blocks }
}

/// Membership test: every maximal block 0^a 1^b with a > 0 must satisfy
/// a·q > b, checked as the integer cross-multiplication a·c > b·d.
pub fn is_member(word: &Word, q: &RationalParam) -> bool {
    validate_member(word, q).is_ok()
}

/// Like [`is_member`] but reports the first offending block on failure.
pub fn validate_member(word: &Word, q: &RationalParam) -> Result<()> {
    let c = q.numerator() as u128;
    let d = q.denominator() as u128;
    for (index, block) in parse_blocks(word).blocks.iter().enumerate() {
        if (block.zeros as u128) * c <= (block.ones as u128) * d {
            return Err(Error::NotAMember {
                index,
                zeros: block.zeros,
                ones: block.ones,
                c: q.numerator(),
                d: q.denominator(),
            });
        }
    }
    Ok(())
}

/// A member word written as 1^k followed by suffix elements; each factor
/// is recorded by its ones-count i and denotes the element 0^{1+⌊i/q⌋} 1^i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixFactorization {
    pub leading_ones: usize,
    pub factors: Vec<u64>,
}

impl SuffixFactorization {
    /// Rebuilds the word the factorization denotes.
    pub fn reassemble(&self, q: &RationalParam) -> Word {
        let mut runs = vec![(1u8, self.leading_ones)];
        for &i in &self.factors {
            runs.push((0, q.suffix_zeros(i) as usize));
            runs.push((1, i as usize));
        }
        Word::from_runs(&runs)
    }

    /// The displayed pieces: the leading 1-run (when present) followed by
    /// one word per suffix element.
    pub fn segments(&self, q: &RationalParam) -> Vec<Word> {
        let mut out = Vec::new();
        if self.leading_ones > 0 {
            out.push(Word::from_runs(&[(1, self.leading_ones)]));
        }
        for &i in &self.factors {
            out.push(suffix_element(q, i));
        }
        out
    }
}

/// The unique factorization of a member word: each maximal block 0^a 1^b
/// splits into a − (1+⌊b/q⌋) lone zeros followed by the element carrying
/// all b ones. Non-members yield the offending block as an error.
pub fn factorize(word: &Word, q: &RationalParam) -> Result<SuffixFactorization> {
    let decomposition = parse_blocks(word);
    let mut factors = Vec::new();
    for (index, block) in decomposition.blocks.iter().enumerate() {
        let needed = q.suffix_zeros(block.ones as u64) as usize;
        if block.zeros < needed {
            return Err(Error::NotAMember {
                index,
                zeros: block.zeros,
                ones: block.ones,
                c: q.numerator(),
                d: q.denominator(),
            });
        }
        factors.extend(std::iter::repeat_n(0, block.zeros - needed));
        factors.push(block.ones as u64);
    }
    Ok(SuffixFactorization {
        leading_ones: decomposition.leading_ones,
        factors,
    })
}

/// The i-th suffix element 0^{1+⌊i/q⌋} 1^i.
pub fn suffix_element(q: &RationalParam, i: u64) -> Word {
    Word::from_runs(&[(0, q.suffix_zeros(i) as usize), (1, i as usize)])
}

/// All suffix elements of length ≤ max_len, in increasing ones-count
/// (equivalently increasing length) order.
pub fn suffix_elements(q: &RationalParam, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut i = 0u64;
    while q.suffix_len(i) <= max_len as u64 {
        out.push(suffix_element(q, i));
        i += 1;
    }
    out
}

/// All members of length n in lexicographic order, generated by
/// prefix-pruned depth-first extension rather than filtering 2^n words.
pub fn enumerate(q: &RationalParam, n: usize) -> Result<Vec<Word>> {
    enumerate_capped(q, n, DEFAULT_CAP)
}

pub fn enumerate_capped(q: &RationalParam, n: usize, cap: usize) -> Result<Vec<Word>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut bits = Vec::with_capacity(n);
    extend(&mut bits, None, n, q, &mut out);
    Ok(out)
}

/// Depth-first extension. `open` is the (zeros, ones) of the final block,
/// or None while still inside the unconstrained leading 1-run. A prefix is
/// viable exactly when its open block still satisfies the constraint: zeros
/// may always follow, but a 1 is allowed only if the block stays legal.
fn extend(
    bits: &mut Vec<u8>,
    open: Option<(u64, u64)>,
    n: usize,
    q: &RationalParam,
    out: &mut Vec<Word>,
) {
    if bits.len() == n {
        out.push(Word(bits.clone()));
        return;
    }
    let c = q.numerator() as u128;
    let d = q.denominator() as u128;

    bits.push(0);
    let next = match open {
        Some((zeros, 0)) => Some((zeros + 1, 0)),
        _ => Some((1, 0)),
    };
    extend(bits, next, n, q, out);
    bits.pop();

    let next = match open {
        None => Some(None),
        Some((zeros, ones)) if (zeros as u128) * c > (ones as u128 + 1) * d => {
            Some(Some((zeros, ones + 1)))
        }
        _ => None,
    };
    if let Some(next) = next {
        bits.push(1);
        extend(bits, next, n, q, out);
        bits.pop();
    }
}

/// Exhaustive counts from the naive 2^n scan: w_n by length, w_{r,i} by
/// (zeros, ones) weight, and the total number of zeros per length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    by_length: Vec<u64>,
    by_weight: BTreeMap<(usize, usize), u64>,
    zero_popularity: Vec<u64>,
}

impl Census {
    pub fn max_len(&self) -> usize {
        self.by_length.len() - 1
    }

    pub fn count(&self, n: usize) -> u64 {
        self.by_length[n]
    }

    pub fn counts(&self) -> &[u64] {
        &self.by_length
    }

    pub fn weight(&self, zeros: usize, ones: usize) -> u64 {
        self.by_weight.get(&(zeros, ones)).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.by_weight
    }

    pub fn zero_popularity(&self) -> &[u64] {
        &self.zero_popularity
    }
}

/// Brute-force census over every word of length ≤ n_max. This is the
/// independent oracle: it filters all 2^n words through the membership
/// predicate and never touches the series or recurrence machinery.
pub fn census(q: &RationalParam, n_max: usize) -> Result<Census> {
    census_capped(q, n_max, DEFAULT_CAP)
}

pub fn census_capped(q: &RationalParam, n_max: usize, cap: usize) -> Result<Census> {
    if n_max > cap {
        return Err(Error::CapExceeded { n: n_max, cap });
    }
    if n_max > 62 {
        return Err(Error::CapExceeded { n: n_max, cap: 62 });
    }
    let mut by_length = Vec::with_capacity(n_max + 1);
    let mut by_weight = BTreeMap::new();
    let mut zero_popularity = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut count = 0u64;
        let mut zeros_total = 0u64;
        for mask in 0u64..(1u64 << n) {
            let bits: Vec<u8> = (0..n).map(|j| ((mask >> (n - 1 - j)) & 1) as u8).collect();
            let word = Word(bits);
            if is_member(&word, q) {
                let ones = word.ones();
                let zeros = n - ones;
                count += 1;
                zeros_total += zeros as u64;
                *by_weight.entry((zeros, ones)).or_insert(0) += 1;
            }
        }
        by_length.push(count);
        zero_popularity.push(zeros_total);
    }
    Ok(Census {
        by_length,
        by_weight,
        zero_popularity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> RationalParam {
        text.parse().unwrap()
    }

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    #[test]
    fn parse_blocks_examples() {
        let parsed = parse_blocks(&w("1100"));
        assert_eq!(parsed.leading_ones, 2);
        assert_eq!(parsed.blocks, vec![Block { zeros: 2, ones: 0 }]);

        let parsed = parse_blocks(&w("0010"));
        assert_eq!(parsed.leading_ones, 0);
        assert_eq!(
            parsed.blocks,
            vec![Block { zeros: 2, ones: 1 }, Block { zeros: 1, ones: 0 }]
        );

        let parsed = parse_blocks(&Word::empty());
        assert_eq!(parsed.leading_ones, 0);
        assert!(parsed.blocks.is_empty());
    }

    #[test]
    fn parse_blocks_reassembles() {
        for text in ["", "0", "1", "0010", "111000010000110010", "0110", "1111"] {
            assert_eq!(parse_blocks(&w(text)).reassemble(), w(text));
        }
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&w("1100"), &q("1")));
        assert!(is_member(&w("111000010000110010"), &q("1")));
        assert!(!is_member(&w("111000010000110010"), &q("1/2")));
        assert!(!is_member(&w("0110"), &q("1")));
        assert!(is_member(&Word::empty(), &q("1/7")));
    }

    #[test]
    fn membership_error_names_offending_block() {
        let err = validate_member(&w("111000010000110010"), &q("1/2")).unwrap_err();
        assert_eq!(
            err,
            Error::NotAMember { index: 1, zeros: 4, ones: 2, c: 1, d: 2 }
        );
    }

    #[test]
    fn factorize_long_example_q1() {
        let word = w("111000010000110010");
        let f = factorize(&word, &q("1")).unwrap();
        assert_eq!(f.leading_ones, 3);
        assert_eq!(f.factors, vec![0, 0, 1, 0, 2, 1, 0]);
        let segments: Vec<String> = f.segments(&q("1")).iter().map(|s| s.to_string()).collect();
        assert_eq!(
            segments,
            vec!["111", "0", "0", "001", "0", "00011", "001", "0"]
        );
        assert_eq!(f.reassemble(&q("1")), word);
    }

    #[test]
    fn factorize_long_example_q2() {
        let word = w("111000010000110010");
        let f = factorize(&word, &q("2")).unwrap();
        assert_eq!(f.leading_ones, 3);
        assert_eq!(f.factors, vec![0, 0, 0, 1, 0, 0, 2, 0, 1, 0]);
        let segments: Vec<String> = f.segments(&q("2")).iter().map(|s| s.to_string()).collect();
        assert_eq!(
            segments,
            vec!["111", "0", "0", "0", "01", "0", "0", "0011", "0", "01", "0"]
        );
        assert_eq!(f.reassemble(&q("2")), word);
    }

    #[test]
    fn factorize_all_ones() {
        let f = factorize(&w("1111"), &q("5/3")).unwrap();
        assert_eq!(f.leading_ones, 4);
        assert!(f.factors.is_empty());
        assert_eq!(f.reassemble(&q("5/3")), w("1111"));
    }

    #[test]
    fn factorize_rejects_non_members() {
        let err = factorize(&w("111000010000110010"), &q("1/2")).unwrap_err();
        assert!(matches!(err, Error::NotAMember { index: 1, .. }));
    }

    #[test]
    fn suffix_elements_examples() {
        let got: Vec<String> = suffix_elements(&q("3/2"), 9).iter().map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["0", "01", "0011", "000111", "0001111", "000011111"]);

        let got: Vec<String> = suffix_elements(&q("1/2"), 7).iter().map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["0", "0001", "0000011"]);

        let got: Vec<String> = suffix_elements(&q("2"), 2).iter().map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["0", "01"]);
    }

    #[test]
    fn suffix_elements_are_members_with_increasing_lengths() {
        for text in ["1/5", "1/2", "2/3", "1", "3/2", "5/2", "5"] {
            let param = q(text);
            let elements = suffix_elements(&param, 40);
            for pair in elements.windows(2) {
                assert!(pair[0].len() < pair[1].len());
            }
            for element in &elements {
                assert!(is_member(element, &param), "{element} for q={param}");
            }
        }
    }

    #[test]
    fn enumerate_matches_known_small_sets() {
        let got: Vec<String> = enumerate(&q("1"), 4).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(
            got,
            vec!["0000", "0001", "0010", "1000", "1001", "1100", "1110", "1111"]
        );

        let got: Vec<String> = enumerate(&q("2"), 3).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["000", "001", "010", "100", "101", "110", "111"]);

        assert_eq!(enumerate(&q("4/7"), 0).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn enumerate_respects_cap() {
        assert_eq!(
            enumerate(&q("1"), 25).unwrap_err(),
            Error::CapExceeded { n: 25, cap: 24 }
        );
        assert!(enumerate_capped(&q("1"), 25, 25).is_ok());
    }

    #[test]
    fn census_examples() {
        let census = census(&q("1"), 4).unwrap();
        assert_eq!(census.counts(), &[1, 2, 3, 5, 8]);
        assert_eq!(census.weight(3, 1), 3);
        assert_eq!(census.weight(2, 2), 2);
        assert_eq!(census.zero_popularity()[3], 8);
        assert_eq!(census.zero_popularity()[4], 18);
        assert_eq!(census.count(0), 1);
        assert_eq!(census.zero_popularity()[0], 0);
    }

    #[test]
    fn census_weights_sum_to_counts() {
        let param = q("2/3");
        let census = census(&param, 9).unwrap();
        for n in 0..=9 {
            let total: u64 = (0..=n).map(|r| census.weight(r, n - r)).sum();
            assert_eq!(total, census.count(n));
        }
    }

    #[test]
    fn word_parsing_rejects_other_symbols() {
        assert!("012".parse::<Word>().is_err());
        assert!("01 0".parse::<Word>().is_err());
    }
}
