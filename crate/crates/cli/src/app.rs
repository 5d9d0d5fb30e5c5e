//! Argument parsing and command dispatch. Exit codes: 0 success (or a
//! found/validated Gray code), 1 domain or validation error, 2 Gray search
//! inconclusive, 3 verify-suite failure.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qwords::graycode::{check_gray, parity_gap_capped, search_1gray_capped, SearchStatus};
use qwords::limits::{default_grid, growth_rate, ratio_sweep};
use qwords::recurrence::derive;
use qwords::series::{
    length_series, suffix_series, word_series, zero_popularity_series,
    TruncatedUnivariateSeries, DEFAULT_ORDER,
};
use qwords::words::{
    census_capped, enumerate_capped, factorize, is_member, suffix_elements, DEFAULT_CAP,
};
use qwords::{RationalParam, Word};

use crate::verify;

/// Environment variable overriding the brute-force length cap; the
/// per-command --max-n flag wins over it.
pub const CAP_ENV_VAR: &str = "QWORDS_MAX_N";

#[derive(Parser)]
#[command(
    name = "qwords",
    version,
    about = "Exact enumeration and analysis of binary-word families restricted by a rational parameter"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// Bivariate series of the suffix elements
    Suffix,
    /// Bivariate series of all members, by (zeros, ones)
    Word,
    /// Univariate series of all members, by length
    Length,
}

#[derive(Subcommand)]
enum Command {
    /// Count the members of one length (add --oracle for a brute-force census)
    Count {
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        n: usize,
        /// Recount by scanning all 2^m words for m <= n and emit the census
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// List the members of one length in lexicographic order
    Enumerate {
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Test one word for membership
    Member {
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Factor a member into its leading 1-run and suffix elements
    Decompose {
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// List the suffix elements up to a length
    Suffixes {
        #[arg(long)]
        q: RationalParam,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Print the recurrence the counts satisfy, with initial values
    Recurrence {
        #[arg(long)]
        q: RationalParam,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Print the first counts w_0, w_1, ...
    Sequence {
        #[arg(long)]
        q: RationalParam,
        /// How many terms (w_0 through w_{terms-1})
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Expand a generating series up to a truncation order
    Series {
        #[arg(long)]
        q: RationalParam,
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Total number of zeros across all members, by length
    Popularity {
        #[arg(long)]
        q: RationalParam,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Search for a 1-Gray code over the length-n members, or validate a list
    Gray {
        #[arg(long)]
        q: Option<RationalParam>,
        #[arg(long)]
        n: Option<usize>,
        /// Node-expansion budget before giving up as inconclusive
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        /// Allowed positions of change between consecutive words
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Validate this comma-separated word list instead of searching
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Growth rate of the counts for one parameter
    Ratio {
        #[arg(long)]
        q: RationalParam,
        #[arg(long, alias = "tol", default_value_t = 1e-12)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Growth rates across a parameter grid, as CSV
    Sweep {
        /// Comma-separated parameters; defaults to k/50 for k = 1..=101
        #[arg(long)]
        points: Option<String>,
        #[arg(long, alias = "tol", default_value_t = 1e-12)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the cross-module consistency suite over the standard grid
    Verify,
}

pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Count { q, n, oracle, max_n, format } => {
            reject_csv(format, "count")?;
            if oracle {
                let census = census_capped(&q, n, cap(max_n)).map_err(stringify)?;
                let counts: Vec<String> = census.counts().iter().map(u64::to_string).collect();
                match format {
                    Format::Lines => println!("{}", counts.join(",")),
                    Format::Json => {
                        let weights: Vec<_> = census
                            .weights()
                            .iter()
                            .map(|(&(r, i), &w)| json!([r, i, w.to_string()]))
                            .collect();
                        let zeros: Vec<String> =
                            census.zero_popularity().iter().map(u64::to_string).collect();
                        println!(
                            "{}",
                            json!({
                                "q": q.to_string(),
                                "counts": counts,
                                "weights": weights,
                                "zero_popularity": zeros,
                            })
                        );
                    }
                    Format::Csv => unreachable!(),
                }
            } else {
                let count = derive(&q).generate(n)[n].to_string();
                match format {
                    Format::Lines => println!("{count}"),
                    Format::Json => {
                        println!("{}", json!({"q": q.to_string(), "n": n, "count": count}))
                    }
                    Format::Csv => unreachable!(),
                }
            }
            Ok(0)
        }
        Command::Enumerate { q, n, max_n, format } => {
            reject_csv(format, "enumerate")?;
            let words = enumerate_capped(&q, n, cap(max_n)).map_err(stringify)?;
            let rendered: Vec<String> = words.iter().map(ToString::to_string).collect();
            match format {
                Format::Lines => {
                    for word in &rendered {
                        println!("{word}");
                    }
                }
                Format::Json => println!("{}", json!(rendered)),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Member { q, word, format } => {
            reject_csv(format, "member")?;
            let word: Word = word.parse().map_err(stringify)?;
            let member = is_member(&word, &q);
            match format {
                Format::Lines => println!("{member}"),
                Format::Json => println!(
                    "{}",
                    json!({"q": q.to_string(), "word": word.to_string(), "member": member})
                ),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Decompose { q, word, format } => {
            reject_csv(format, "decompose")?;
            let word: Word = word.parse().map_err(stringify)?;
            let factorization = factorize(&word, &q).map_err(stringify)?;
            let segments: Vec<String> =
                factorization.segments(&q).iter().map(ToString::to_string).collect();
            match format {
                Format::Lines => println!("{}", segments.join(" ")),
                Format::Json => println!(
                    "{}",
                    json!({
                        "q": q.to_string(),
                        "word": word.to_string(),
                        "leading_ones": factorization.leading_ones,
                        "factors": factorization.factors,
                        "segments": segments,
                    })
                ),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Suffixes { q, max_len, format } => {
            reject_csv(format, "suffixes")?;
            let rendered: Vec<String> =
                suffix_elements(&q, max_len).iter().map(ToString::to_string).collect();
            match format {
                Format::Lines => {
                    for element in &rendered {
                        println!("{element}");
                    }
                }
                Format::Json => println!("{}", json!(rendered)),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Recurrence { q, format } => {
            reject_csv(format, "recurrence")?;
            let spec = derive(&q);
            match format {
                Format::Lines => println!("{spec}"),
                Format::Json => {
                    let initial: Vec<String> =
                        spec.initial().iter().map(ToString::to_string).collect();
                    println!(
                        "{}",
                        json!({
                            "q": q.to_string(),
                            "relation": spec.to_string(),
                            "lags": spec.lags(),
                            "extra_lag": spec.extra_lag(),
                            "initial": initial,
                        })
                    );
                }
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Sequence { q, terms, format } => {
            reject_csv(format, "sequence")?;
            let values = if terms == 0 {
                Vec::new()
            } else {
                derive(&q).generate(terms - 1)
            };
            let rendered: Vec<String> = values.iter().map(ToString::to_string).collect();
            match format {
                Format::Lines => println!("{}", rendered.join(",")),
                Format::Json => println!("{}", json!(rendered)),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Series { q, kind, order, format } => {
            reject_csv(format, "series")?;
            match kind {
                SeriesKind::Suffix | SeriesKind::Word => {
                    let series = match kind {
                        SeriesKind::Suffix => suffix_series(&q, order),
                        _ => word_series(&q, order),
                    };
                    match format {
                        Format::Lines => {
                            for (r, i, coefficient) in series.terms() {
                                println!("{r} {i} {coefficient}");
                            }
                        }
                        Format::Json => {
                            let terms: Vec<_> = series
                                .terms()
                                .map(|(r, i, coefficient)| json!([r, i, coefficient.to_string()]))
                                .collect();
                            println!("{}", json!(terms));
                        }
                        Format::Csv => unreachable!(),
                    }
                }
                SeriesKind::Length => print_univariate(&length_series(&q, order), format),
            }
            Ok(0)
        }
        Command::Popularity { q, order, format } => {
            reject_csv(format, "popularity")?;
            print_univariate(&zero_popularity_series(&q, order), format);
            Ok(0)
        }
        Command::Gray { q, n, budget, k, check, max_n, format } => {
            reject_csv(format, "gray")?;
            if let Some(list) = check {
                let words: Vec<Word> = if list.is_empty() {
                    Vec::new()
                } else {
                    list.split(',')
                        .map(|w| w.trim().parse::<Word>())
                        .collect::<Result<_, _>>()
                        .map_err(stringify)?
                };
                let valid = check_gray(&words, k).map_err(stringify)?;
                let status = if valid { "validated" } else { "invalid" };
                match format {
                    Format::Lines => println!("{status}"),
                    Format::Json => println!(
                        "{}",
                        json!({"status": status, "k": k, "words": words.len()})
                    ),
                    Format::Csv => unreachable!(),
                }
                return Ok(if valid { 0 } else { 1 });
            }
            let q = q.ok_or("--q is required unless --check is given")?;
            let n = n.ok_or("--n is required unless --check is given")?;
            let limit = cap(max_n);
            let outcome = search_1gray_capped(&q, n, budget, limit).map_err(stringify)?;
            let (odd, even) = parity_gap_capped(&q, n, limit).map_err(stringify)?;
            let path: Vec<String> = outcome.path.iter().map(ToString::to_string).collect();
            match format {
                Format::Json => {
                    let mut value = json!({
                        "status": outcome.status.to_string(),
                        "path": path,
                        "odd": odd,
                        "even": even,
                        "nodes": outcome.nodes_expanded,
                    });
                    if let Some(certificate) = outcome.certificate {
                        value["certificate"] = json!(certificate.to_string());
                    }
                    println!("{value}");
                }
                Format::Lines => {
                    println!("status: {}", outcome.status);
                    if let Some(certificate) = outcome.certificate {
                        println!("certificate: {certificate}");
                    }
                    for word in &path {
                        println!("{word}");
                    }
                }
                Format::Csv => unreachable!(),
            }
            Ok(match outcome.status {
                SearchStatus::Found => 0,
                SearchStatus::Impossible => 1,
                SearchStatus::Inconclusive => 2,
            })
        }
        Command::Ratio { q, tolerance, format } => {
            reject_csv(format, "ratio")?;
            if !tolerance.is_finite() || tolerance <= 0.0 {
                return Err("tolerance must be a positive finite number".to_string());
            }
            let estimate = growth_rate(&q, tolerance);
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "q": q.to_string(),
                        "beta": estimate.beta.to_string(),
                        "ratio": estimate.ratio,
                    })
                ),
                Format::Lines => {
                    println!("beta {}", estimate.beta);
                    println!("ratio {}", estimate.ratio);
                }
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Sweep { points, tolerance, format } => {
            if format != Format::Csv {
                return Err("sweep output is csv only".to_string());
            }
            if !tolerance.is_finite() || tolerance <= 0.0 {
                return Err("tolerance must be a positive finite number".to_string());
            }
            let grid: Vec<RationalParam> = match points {
                Some(list) => list
                    .split(',')
                    .map(|p| p.trim().parse::<RationalParam>())
                    .collect::<Result<_, _>>()
                    .map_err(stringify)?,
                None => default_grid(),
            };
            println!("q,ratio");
            for (q, ratio) in ratio_sweep(&grid, tolerance) {
                println!("{q},{ratio:.10}");
            }
            Ok(0)
        }
        Command::Verify => {
            let mut failures = 0;
            for (name, check) in verify::checks() {
                match check() {
                    Ok(()) => println!("PASS {name}"),
                    Err(detail) => {
                        failures += 1;
                        println!("FAIL {name}: {detail}");
                    }
                }
            }
            if failures == 0 {
                Ok(0)
            } else {
                eprintln!("{failures} check(s) failed");
                Ok(3)
            }
        }
    }
}

fn print_univariate(series: &TruncatedUnivariateSeries, format: Format) {
    let rendered: Vec<String> = series.coefficients().iter().map(ToString::to_string).collect();
    match format {
        Format::Lines => println!("{}", rendered.join(",")),
        Format::Json => println!("{}", json!(rendered)),
        Format::Csv => unreachable!(),
    }
}

fn cap(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(CAP_ENV_VAR).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_CAP)
}

fn reject_csv(format: Format, subcommand: &str) -> Result<(), String> {
    if format == Format::Csv {
        Err(format!("csv output is not available for {subcommand}"))
    } else {
        Ok(())
    }
}

fn stringify(err: impl std::fmt::Display) -> String {
    err.to_string()
}
