//! Exact enumeration and analysis of the binary-word families cut out by a
//! rational parameter q = c/d: a word belongs to the family when each of
//! its maximal factors 0^a 1^b either contains no zeros or satisfies
//! a·q > b. Members factor uniquely as a run of 1s followed by elements
//! 0^{1+⌊i/q⌋} 1^i, and everything else follows from that structure.
//!
//! The crate deliberately offers several independent routes to the same
//! numbers so they can police each other: a brute-force census
//! ([`words::census`]), pruned enumeration ([`words::enumerate`]), exact
//! generating-series expansion ([`series`]), a derived linear recurrence
//! ([`recurrence`]), and a composition-style dynamic program
//! ([`limits::dp_count`]). On top sit Gray-code search over the
//! Hamming-distance-1 graph ([`graycode`]) and growth-rate analysis
//! ([`limits`]).

pub mod error;
pub mod graycode;
pub mod limits;
pub mod model;
pub mod rational;
pub mod recurrence;
pub mod series;
pub mod words;

pub use error::{Error, Result};
pub use rational::RationalParam;
pub use words::Word;
