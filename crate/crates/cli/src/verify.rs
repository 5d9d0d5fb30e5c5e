//! Cross-module consistency suite behind the `verify` subcommand. Every
//! check pits at least two independent computation routes against each
//! other (or against the embedded fixtures) over the standard parameter
//! grid, so a regression in any one module surfaces as a disagreement.

use std::collections::BTreeSet;

use qwords::graycode::{check_gray, parity_gap, search_1gray, SearchStatus};
use qwords::limits::{default_grid, growth_rate, ratio_sweep};
use qwords::recurrence::{derive, psi};
use qwords::series::{
    length_series, suffix_series, word_series, zero_popularity_series, TruncatedBivariateSeries,
};
use qwords::words::{census, enumerate, factorize, suffix_elements};
use qwords::{RationalParam, Word};

use crate::fixtures::{
    COUNT_TABLE, DECOMPOSED_WORD, DECOMP_SEGMENTS_Q1, DECOMP_SEGMENTS_Q2, GRAY_CODE_Q1_N5, GRID,
    PARITY_EVEN_Q23_N5, PARITY_ODD_Q23_N5, SUFFIX_TABLE,
};

const SEARCH_BUDGET: u64 = 10_000_000;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($arg)+));
        }
    };
}

/// One named consistency check.
pub type Check = fn() -> Result<(), String>;

/// The named checks, in reporting order.
pub fn checks() -> Vec<(&'static str, Check)> {
    vec![
        ("count-table", check_count_table),
        ("four-way-counts", check_four_way_counts),
        ("factorization-fixtures", check_factorization_fixtures),
        ("psi-bijection", check_psi_bijection),
        ("gray-codes", check_gray_codes),
        ("growth-rates", check_growth_rates),
        ("sweep-shape", check_sweep_shape),
        ("series-identities", check_series_identities),
        ("zero-popularity", check_zero_popularity),
    ]
}

fn param(s: &str) -> RationalParam {
    s.parse().expect("fixture parameter")
}

fn word(s: &str) -> Word {
    s.parse().expect("fixture word")
}

fn word_set<'a>(strings: impl IntoIterator<Item = &'a str>) -> BTreeSet<Word> {
    strings.into_iter().map(word).collect()
}

/// Recurrence output (terms, lag set, printed relation) against the
/// embedded reference table, one row per grid parameter.
fn check_count_table() -> Result<(), String> {
    for row in &COUNT_TABLE {
        let q = param(row.q);
        let spec = derive(&q);
        let terms = spec.generate(row.terms.len() - 1);
        for (n, (got, want)) in terms.iter().zip(row.terms.iter()).enumerate() {
            ensure!(
                got.to_string() == want.to_string(),
                "q={q}: w_{n} is {got}, table says {want}"
            );
        }
        let lags = spec.all_lags();
        ensure!(
            lags == row.lags,
            "q={q}: lag set {lags:?} differs from table {:?}",
            row.lags
        );
        let relation = spec.to_string();
        ensure!(
            relation == row.relation,
            "q={q}: relation {relation:?} differs from table {:?}",
            row.relation
        );
    }
    Ok(())
}

/// Brute-force census, pruned enumeration, recurrence, and series must
/// report identical counts for every grid parameter and length <= 14;
/// the bivariate coefficients must match the census weights both ways.
fn check_four_way_counts() -> Result<(), String> {
    const N_MAX: usize = 14;
    for q_str in GRID {
        let q = param(q_str);
        let census = census(&q, N_MAX).map_err(|e| e.to_string())?;
        let recurrence = derive(&q).generate(N_MAX);
        let series = length_series(&q, N_MAX);
        for (n, recurred) in recurrence.iter().enumerate() {
            let scanned = census.count(n);
            let listed = enumerate(&q, n).map_err(|e| e.to_string())?.len();
            ensure!(
                scanned == listed as u64,
                "q={q} n={n}: census {scanned} vs enumeration {listed}"
            );
            ensure!(
                recurred.to_string() == scanned.to_string(),
                "q={q} n={n}: recurrence {recurred} vs census {scanned}"
            );
            ensure!(
                series.coefficient(n).to_string() == scanned.to_string(),
                "q={q} n={n}: series {} vs census {scanned}",
                series.coefficient(n)
            );
        }
        let bivariate = word_series(&q, N_MAX);
        for (r, i, coefficient) in bivariate.terms() {
            ensure!(
                coefficient.to_string() == census.weight(r, i).to_string(),
                "q={q}: series weight ({r},{i}) is {coefficient}, census says {}",
                census.weight(r, i)
            );
        }
        for (&(r, i), &weight) in census.weights() {
            ensure!(
                bivariate.coefficient(r, i).to_string() == weight.to_string(),
                "q={q}: census weight ({r},{i}) is {weight}, series says {}",
                bivariate.coefficient(r, i)
            );
        }
    }
    Ok(())
}

/// Suffix-element columns and the pinned factorizations of the embedded
/// 18-letter word, including the rejection under q=1/2.
fn check_factorization_fixtures() -> Result<(), String> {
    for column in &SUFFIX_TABLE {
        let q = param(column.q);
        let max_len = column.elements.last().unwrap().len();
        let elements: Vec<String> = suffix_elements(&q, max_len)
            .iter()
            .map(ToString::to_string)
            .collect();
        ensure!(
            elements == column.elements,
            "q={q}: suffix elements {elements:?} differ from table {:?}",
            column.elements
        );
    }
    let pinned = word(DECOMPOSED_WORD);
    for (q_str, segments) in [
        ("1", &DECOMP_SEGMENTS_Q1[..]),
        ("2", &DECOMP_SEGMENTS_Q2[..]),
    ] {
        let q = param(q_str);
        let factorization = factorize(&pinned, &q).map_err(|e| e.to_string())?;
        let got: Vec<String> = factorization
            .segments(&q)
            .iter()
            .map(ToString::to_string)
            .collect();
        ensure!(
            got == segments,
            "q={q}: segments {got:?} differ from pinned {segments:?}"
        );
        let reassembled = factorization.reassemble(&q);
        ensure!(
            reassembled == pinned,
            "q={q}: reassembly gives {reassembled} not {pinned}"
        );
    }
    ensure!(
        factorize(&pinned, &param("1/2")).is_err(),
        "the pinned word must not factorize under q=1/2"
    );
    Ok(())
}

/// The infix-insertion map must send the length-n members injectively
/// onto exactly the length-(n+c+d) members ending with at least c ones.
fn check_psi_bijection() -> Result<(), String> {
    for q_str in GRID {
        let q = param(q_str);
        let c = q.numerator() as usize;
        let step = (q.numerator() + q.denominator()) as usize;
        for n in 0..=10 {
            let sources = enumerate(&q, n).map_err(|e| e.to_string())?;
            let images: BTreeSet<Word> = sources
                .iter()
                .map(|w| psi(w, &q))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            ensure!(
                images.len() == sources.len(),
                "q={q} n={n}: {} sources map onto {} images",
                sources.len(),
                images.len()
            );
            let targets: BTreeSet<Word> = enumerate(&q, n + step)
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(|w| trailing_ones(w) >= c)
                .collect();
            ensure!(
                images == targets,
                "q={q} n={n}: image set differs from the length-{} members ending in 1^{c}",
                n + step
            );
        }
    }
    Ok(())
}

fn trailing_ones(w: &Word) -> usize {
    w.bits().iter().rev().take_while(|&&b| b == 1).count()
}

/// The embedded thirteen-word code must validate and cover the q=1
/// length-5 members; q=2/3 at length 5 must be impossible with parity
/// certificate (7,5) matching the embedded parity classes; the search
/// must find codes for q in {2,3,4,5} up to length 5.
fn check_gray_codes() -> Result<(), String> {
    let code: Vec<Word> = GRAY_CODE_Q1_N5.iter().map(|s| word(s)).collect();
    ensure!(
        check_gray(&code, 1).map_err(|e| e.to_string())?,
        "the embedded thirteen-word list is not a 1-Gray code"
    );
    let members: BTreeSet<Word> = enumerate(&param("1"), 5)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure!(
        code.iter().cloned().collect::<BTreeSet<_>>() == members,
        "the embedded code does not cover the q=1 length-5 members"
    );

    let q23 = param("2/3");
    let (odd, even) = parity_gap(&q23, 5).map_err(|e| e.to_string())?;
    ensure!(
        (odd, even) == (7, 5),
        "q=2/3 n=5 parity classes are ({odd},{even}), expected (7,5)"
    );
    let by_parity = |rem: usize| -> Result<BTreeSet<Word>, String> {
        Ok(enumerate(&q23, 5)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|w| w.ones() % 2 == rem)
            .collect())
    };
    ensure!(
        by_parity(1)? == word_set(PARITY_ODD_Q23_N5),
        "q=2/3 n=5 odd-parity members differ from the embedded list"
    );
    ensure!(
        by_parity(0)? == word_set(PARITY_EVEN_Q23_N5),
        "q=2/3 n=5 even-parity members differ from the embedded list"
    );
    let outcome = search_1gray(&q23, 5, SEARCH_BUDGET).map_err(|e| e.to_string())?;
    ensure!(
        outcome.status == SearchStatus::Impossible,
        "q=2/3 n=5 search returned {}, expected impossible",
        outcome.status
    );
    let certificate = outcome
        .certificate
        .map(|c| c.to_string())
        .unwrap_or_default();
    ensure!(
        certificate == "parity gap (7,5)",
        "q=2/3 n=5 certificate is {certificate:?}"
    );

    for q_str in ["2", "3", "4", "5"] {
        let q = param(q_str);
        for n in 0..=5 {
            let outcome = search_1gray(&q, n, SEARCH_BUDGET).map_err(|e| e.to_string())?;
            ensure!(
                outcome.status == SearchStatus::Found,
                "q={q} n={n}: search returned {}",
                outcome.status
            );
            ensure!(
                check_gray(&outcome.path, 1).map_err(|e| e.to_string())?,
                "q={q} n={n}: returned path is not a 1-Gray code"
            );
            let covered: BTreeSet<Word> = outcome.path.iter().cloned().collect();
            let members: BTreeSet<Word> = enumerate(&q, n)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            ensure!(
                covered == members,
                "q={q} n={n}: path does not cover the member set"
            );
        }
    }
    Ok(())
}

/// Dominant-root ratios against closed forms (golden ratio, the
/// Tribonacci radical) and against the empirical ratio w_201/w_200.
fn check_growth_rates() -> Result<(), String> {
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let unit = growth_rate(&param("1"), 1e-12);
    ensure!(
        (unit.ratio - golden).abs() < 1e-9,
        "q=1 ratio {} is not the golden ratio {golden}",
        unit.ratio
    );
    let spread = 3.0 * 33.0_f64.sqrt();
    let tribonacci = (1.0 + (19.0 + spread).cbrt() + (19.0 - spread).cbrt()) / 3.0;
    let doubled = growth_rate(&param("2"), 1e-12);
    ensure!(
        (doubled.ratio - tribonacci).abs() < 1e-9,
        "q=2 ratio {} is not the Tribonacci constant {tribonacci}",
        doubled.ratio
    );
    for q_str in GRID {
        let estimate = growth_rate(&param(q_str), 1e-12);
        ensure!(
            estimate.ratio > 1.0 && estimate.ratio < 2.0,
            "q={q_str}: ratio {} outside (1,2)",
            estimate.ratio
        );
        ensure!(
            (estimate.empirical_ratio - estimate.ratio).abs() < 1e-6,
            "q={q_str}: empirical ratio {} vs root ratio {}",
            estimate.empirical_ratio,
            estimate.ratio
        );
    }
    Ok(())
}

/// The default sweep must cover 101 grid points with ratios
/// non-decreasing from just above 1 to past 1.84.
fn check_sweep_shape() -> Result<(), String> {
    let grid = default_grid();
    ensure!(grid.len() == 101, "default grid has {} points", grid.len());
    let sweep = ratio_sweep(&grid, 1e-12);
    ensure!(sweep.len() == 101, "sweep has {} rows", sweep.len());
    let first = sweep.first().unwrap().1;
    let last = sweep.last().unwrap().1;
    ensure!(
        first > 1.0 && first < 1.1,
        "sweep starts at {first}, expected just above 1"
    );
    ensure!(last > 1.84, "sweep ends at {last}, expected past 1.84");
    for pair in sweep.windows(2) {
        ensure!(
            pair[1].1 >= pair[0].1 - 1e-9,
            "ratio decreases from {} (q={}) to {} (q={})",
            pair[0].1,
            pair[0].0,
            pair[1].1,
            pair[1].0
        );
    }
    Ok(())
}

/// Suffix-series coefficients must be 0 or 1 through order 40, and the
/// product (1 - S) * W * (1 - y) must collapse to 1 at order 32.
fn check_series_identities() -> Result<(), String> {
    for q_str in GRID {
        let q = param(q_str);
        for (r, i, coefficient) in suffix_series(&q, 40).terms() {
            ensure!(
                coefficient.to_string() == "1",
                "q={q}: suffix coefficient ({r},{i}) is {coefficient}"
            );
        }
        let one = TruncatedBivariateSeries::one(32);
        let one_minus_y = one.sub(&TruncatedBivariateSeries::monomial(32, 0, 1, 1));
        let product = one
            .sub(&suffix_series(&q, 32))
            .mul(&word_series(&q, 32))
            .mul(&one_minus_y);
        ensure!(
            product == one,
            "q={q}: (1 - S) * W * (1 - y) is not 1 at order 32"
        );
    }
    Ok(())
}

/// Zero counts summed over all members: the series expansion must match
/// the brute-force census for every grid parameter through length 14.
/// The reference values are produced by the census at run time, never
/// stored, so the oracle stays the ground truth.
fn check_zero_popularity() -> Result<(), String> {
    for q_str in GRID {
        let q = param(q_str);
        let oracle = census(&q, 14).map_err(|e| e.to_string())?;
        let series = zero_popularity_series(&q, 14);
        for (n, scanned) in oracle.zero_popularity().iter().enumerate() {
            let expanded = series.coefficient(n);
            ensure!(
                expanded.to_string() == scanned.to_string(),
                "q={q} n={n}: series zero count {expanded} vs census {scanned}"
            );
        }
    }
    Ok(())
}
