//! Frozen reference data consumed only by tests and the verify suite; the
//! computational paths never read any of it.

/// The standard parameter grid used by cross-checks.
pub const GRID: [&str; 19] = [
    "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1",
    "5/4", "4/3", "3/2", "5/3", "2", "5/2", "3", "4", "5",
];

/// One reference row: the first twelve counts, the full lag set of the
/// recurrence (extra lag included), and the relation as it is printed.
pub struct TableRow {
    pub q: &'static str,
    pub terms: [u64; 12],
    pub lags: &'static [u64],
    pub relation: &'static str,
}

pub const COUNT_TABLE: [TableRow; 19] = [
    TableRow {
        q: "1/5",
        terms: [1, 2, 3, 4, 5, 6, 7, 9, 12, 16, 21, 27],
        lags: &[1, 6],
        relation: "w_n = w_{n-1} + w_{n-6}",
    },
    TableRow {
        q: "1/4",
        terms: [1, 2, 3, 4, 5, 6, 8, 11, 15, 20, 26, 34],
        lags: &[1, 5],
        relation: "w_n = w_{n-1} + w_{n-5}",
    },
    TableRow {
        q: "1/3",
        terms: [1, 2, 3, 4, 5, 7, 10, 14, 19, 26, 36, 50],
        lags: &[1, 4],
        relation: "w_n = w_{n-1} + w_{n-4}",
    },
    TableRow {
        q: "2/5",
        terms: [1, 2, 3, 4, 6, 9, 13, 18, 26, 38, 55, 79],
        lags: &[1, 4, 7],
        relation: "w_n = w_{n-1} + w_{n-4} + w_{n-7}",
    },
    TableRow {
        q: "1/2",
        terms: [1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60, 88],
        lags: &[1, 3],
        relation: "w_n = w_{n-1} + w_{n-3}",
    },
    TableRow {
        q: "3/5",
        terms: [1, 2, 3, 5, 8, 12, 19, 30, 46, 72, 113, 176],
        lags: &[1, 3, 6, 8],
        relation: "w_n = w_{n-1} + w_{n-3} + w_{n-6} + w_{n-8}",
    },
    TableRow {
        q: "2/3",
        terms: [1, 2, 3, 5, 8, 12, 19, 30, 47, 74, 116, 182],
        lags: &[1, 3, 5],
        relation: "w_n = w_{n-1} + w_{n-3} + w_{n-5}",
    },
    TableRow {
        q: "3/4",
        terms: [1, 2, 3, 5, 8, 13, 21, 33, 53, 85, 136, 218],
        lags: &[1, 3, 5, 7],
        relation: "w_n = w_{n-1} + w_{n-3} + w_{n-5} + w_{n-7}",
    },
    TableRow {
        // Distinguished from 3/5 at n=5: 00011 is admissible here
        // (4*3 > 5*2) but not under 3/5, so w_5 = 13.
        q: "4/5",
        terms: [1, 2, 3, 5, 8, 13, 21, 34, 55, 88, 142, 229],
        lags: &[1, 3, 5, 7, 9],
        relation: "w_n = w_{n-1} + w_{n-3} + w_{n-5} + w_{n-7} + w_{n-9}",
    },
    TableRow {
        q: "1",
        terms: [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233],
        lags: &[1, 2],
        relation: "w_n = w_{n-1} + w_{n-2}",
    },
    TableRow {
        q: "5/4",
        terms: [1, 2, 4, 7, 13, 23, 42, 75, 136, 244, 441, 794],
        lags: &[1, 2, 4, 6, 8, 9],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-4} + w_{n-6} + w_{n-8} + w_{n-9}",
    },
    TableRow {
        q: "4/3",
        terms: [1, 2, 4, 7, 13, 23, 42, 75, 136, 245, 443, 799],
        lags: &[1, 2, 4, 6, 7],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-4} + w_{n-6} + w_{n-7}",
    },
    TableRow {
        q: "3/2",
        terms: [1, 2, 4, 7, 13, 23, 42, 76, 138, 250, 453, 821],
        lags: &[1, 2, 4, 5],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-4} + w_{n-5}",
    },
    TableRow {
        q: "5/3",
        terms: [1, 2, 4, 7, 13, 24, 44, 81, 148, 272, 499, 916],
        lags: &[1, 2, 4, 5, 7, 8],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-4} + w_{n-5} + w_{n-7} + w_{n-8}",
    },
    TableRow {
        q: "2",
        terms: [1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927],
        lags: &[1, 2, 3],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-3}",
    },
    TableRow {
        q: "5/2",
        terms: [1, 2, 4, 8, 15, 29, 56, 107, 206, 396, 761, 1463],
        lags: &[1, 2, 3, 5, 6, 7],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-3} + w_{n-5} + w_{n-6} + w_{n-7}",
    },
    TableRow {
        q: "3",
        terms: [1, 2, 4, 8, 15, 29, 56, 108, 208, 401, 773, 1490],
        lags: &[1, 2, 3, 4],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-3} + w_{n-4}",
    },
    TableRow {
        q: "4",
        terms: [1, 2, 4, 8, 16, 31, 61, 120, 236, 464, 912, 1793],
        lags: &[1, 2, 3, 4, 5],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-3} + w_{n-4} + w_{n-5}",
    },
    TableRow {
        q: "5",
        terms: [1, 2, 4, 8, 16, 32, 63, 125, 248, 492, 976, 1936],
        lags: &[1, 2, 3, 4, 5, 6],
        relation: "w_n = w_{n-1} + w_{n-2} + w_{n-3} + w_{n-4} + w_{n-5} + w_{n-6}",
    },
];

/// The six shortest suffix elements for a handful of parameters.
pub struct SuffixColumn {
    pub q: &'static str,
    pub elements: [&'static str; 6],
}

pub const SUFFIX_TABLE: [SuffixColumn; 5] = [
    SuffixColumn {
        q: "1/2",
        elements: [
            "0",
            "0001",
            "0000011",
            "0000000111",
            "0000000001111",
            "0000000000011111",
        ],
    },
    SuffixColumn {
        q: "2/3",
        elements: [
            "0",
            "001",
            "000011",
            "00000111",
            "00000001111",
            "0000000011111",
        ],
    },
    SuffixColumn {
        q: "1",
        elements: ["0", "001", "00011", "0000111", "000001111", "00000011111"],
    },
    SuffixColumn {
        q: "2",
        elements: ["0", "01", "0011", "00111", "0001111", "00011111"],
    },
    SuffixColumn {
        q: "3/2",
        elements: ["0", "01", "0011", "000111", "0001111", "000011111"],
    },
];

/// The length-18 word whose factorizations are pinned below.
pub const DECOMPOSED_WORD: &str = "111000010000110010";

pub const DECOMP_SEGMENTS_Q1: [&str; 8] = ["111", "0", "0", "001", "0", "00011", "001", "0"];

pub const DECOMP_SEGMENTS_Q2: [&str; 11] =
    ["111", "0", "0", "0", "01", "0", "0", "0011", "0", "01", "0"];

/// A known thirteen-word 1-Gray code over the q=1 members of length 5.
pub const GRAY_CODE_Q1_N5: [&str; 13] = [
    "11111", "11110", "11100", "11000", "11001", "10001", "10000",
    "10010", "00010", "00011", "00001", "00000", "00100",
];

/// The q=2/3 members of length 5 split by ones-count parity (7 odd, 5
/// even), certifying that no 1-Gray code exists there.
pub const PARITY_ODD_Q23_N5: [&str; 7] =
    ["00001", "00100", "00010", "10000", "11001", "11100", "11111"];

pub const PARITY_EVEN_Q23_N5: [&str; 5] = ["00000", "10010", "10001", "11000", "11110"];
