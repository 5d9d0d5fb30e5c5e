//! Gray-code machinery over the Hamming-distance-1 graph on the length-n
//! members: list validation, the bipartite parity obstruction, and an
//! exhaustive budgeted search for Hamiltonian paths (1-Gray codes).

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::RationalParam;
use crate::words::{enumerate_capped, Word, DEFAULT_CAP};

/// The graph whose vertices are the members of length n and whose edges
/// join words at Hamming distance exactly 1. Bipartite by ones-parity.
#[derive(Debug, Clone)]
pub struct GrayGraph {
    vertices: Vec<Word>,
    adjacency: Vec<Vec<usize>>,
}

impl GrayGraph {
    /// Enumerates the family and wires up all distance-1 pairs. Neighbor
    /// lists are sorted by (degree, lexicographic word) so that searches
    /// are deterministic; the build is O(V^2 n).
    pub fn build(q: &RationalParam, n: usize) -> Result<Self> {
        Self::build_capped(q, n, DEFAULT_CAP)
    }

    pub fn build_capped(q: &RationalParam, n: usize, cap: usize) -> Result<Self> {
        let vertices = enumerate_capped(q, n, cap)?;
        let count = vertices.len();
        let mut adjacency = vec![Vec::new(); count];
        for a in 0..count {
            for b in a + 1..count {
                if vertices[a].hamming(&vertices[b]) == 1 {
                    adjacency[a].push(b);
                    adjacency[b].push(a);
                }
            }
        }
        let degrees: Vec<usize> = adjacency.iter().map(Vec::len).collect();
        for neighbors in &mut adjacency {
            neighbors.sort_by_key(|&v| (degrees[v], v));
        }
        Ok(Self { vertices, adjacency })
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &nb in &self.adjacency[v] {
                if !seen[nb] {
                    seen[nb] = true;
                    reached += 1;
                    queue.push_back(nb);
                }
            }
        }
        reached == self.vertices.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    Impossible,
    Inconclusive,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SearchStatus::Found => "found",
            SearchStatus::Impossible => "impossible",
            SearchStatus::Inconclusive => "inconclusive",
        };
        f.write_str(text)
    }
}

/// Why a search concluded that no 1-Gray code exists (or gave up).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Ones-parity classes differ by ≥ 2; a Hamiltonian path in a
    /// bipartite graph alternates classes, so none can exist.
    ParityGap { odd: u64, even: u64 },
    /// The graph is not connected.
    Disconnected,
    /// Every start vertex was tried to exhaustion within budget.
    SearchExhausted,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ParityGap { odd, even } => write!(f, "parity gap ({odd},{even})"),
            Certificate::Disconnected => f.write_str("disconnected"),
            Certificate::SearchExhausted => f.write_str("search exhausted"),
        }
    }
}

/// Result of a 1-Gray-code search. `path` is nonempty only when found;
/// `certificate` is present only when impossible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub path: Vec<Word>,
    pub certificate: Option<Certificate>,
    pub nodes_expanded: u64,
}

/// True iff the list is duplicate-free and consecutive words differ in at
/// most k positions. Lists of length ≤ 1 pass trivially.
pub fn check_gray(words: &[Word], k: usize) -> Result<bool> {
    if let Some(first) = words.first() {
        for word in words {
            if word.len() != first.len() {
                return Err(Error::MixedLengths { left: first.len(), right: word.len() });
            }
        }
    }
    let mut seen = HashSet::new();
    for word in words {
        if !seen.insert(word) {
            return Ok(false);
        }
    }
    Ok(words.windows(2).all(|pair| pair[0].hamming(&pair[1]) <= k))
}

/// Members of length n with an odd ones-count, then with an even one.
/// A gap of 2 or more certifies that no 1-Gray code exists.
pub fn parity_gap(q: &RationalParam, n: usize) -> Result<(u64, u64)> {
    parity_gap_capped(q, n, DEFAULT_CAP)
}

pub fn parity_gap_capped(q: &RationalParam, n: usize, cap: usize) -> Result<(u64, u64)> {
    Ok(parity_counts(&enumerate_capped(q, n, cap)?))
}

fn parity_counts(words: &[Word]) -> (u64, u64) {
    let odd = words.iter().filter(|w| w.ones() % 2 == 1).count() as u64;
    (odd, words.len() as u64 - odd)
}

/// Exhaustive backtracking search for a 1-Gray code over the length-n
/// members. Deterministic: start vertices ascend by (degree, word), and
/// each step follows the pre-sorted neighbor lists. Prunes by the parity
/// obstruction up front, by reachability of all unvisited vertices at each
/// step, and by restricting starts to the majority parity class when the
/// class sizes differ by one. "Impossible" always carries a certificate;
/// budget exhaustion yields "inconclusive".
pub fn search_1gray(q: &RationalParam, n: usize, budget: u64) -> Result<SearchOutcome> {
    search_1gray_capped(q, n, budget, DEFAULT_CAP)
}

pub fn search_1gray_capped(
    q: &RationalParam,
    n: usize,
    budget: u64,
    cap: usize,
) -> Result<SearchOutcome> {
    let graph = GrayGraph::build_capped(q, n, cap)?;
    let (odd, even) = parity_counts(graph.vertices());
    if odd.abs_diff(even) >= 2 {
        return Ok(SearchOutcome {
            status: SearchStatus::Impossible,
            path: Vec::new(),
            certificate: Some(Certificate::ParityGap { odd, even }),
            nodes_expanded: 0,
        });
    }
    let count = graph.vertices().len();
    if count == 1 {
        return Ok(SearchOutcome {
            status: SearchStatus::Found,
            path: graph.vertices().to_vec(),
            certificate: None,
            nodes_expanded: 0,
        });
    }
    if !graph.is_connected() {
        return Ok(SearchOutcome {
            status: SearchStatus::Impossible,
            path: Vec::new(),
            certificate: Some(Certificate::Disconnected),
            nodes_expanded: 0,
        });
    }

    let mut starts: Vec<usize> = (0..count).collect();
    starts.sort_by_key(|&v| (graph.degree(v), v));
    let majority_parity = if odd > even { Some(1) } else if even > odd { Some(0) } else { None };

    let mut nodes_expanded = 0u64;
    for &start in &starts {
        if let Some(parity) = majority_parity {
            if graph.vertices()[start].ones() % 2 != parity {
                continue;
            }
        }
        let mut visited = vec![false; count];
        visited[start] = true;
        let mut path = vec![start];
        match dfs(&graph, &mut path, &mut visited, budget, &mut nodes_expanded) {
            Dfs::Found => {
                let words = path.into_iter().map(|v| graph.vertices()[v].clone()).collect();
                return Ok(SearchOutcome {
                    status: SearchStatus::Found,
                    path: words,
                    certificate: None,
                    nodes_expanded,
                });
            }
            Dfs::Exhausted => {}
            Dfs::OverBudget => {
                return Ok(SearchOutcome {
                    status: SearchStatus::Inconclusive,
                    path: Vec::new(),
                    certificate: None,
                    nodes_expanded,
                });
            }
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::Impossible,
        path: Vec::new(),
        certificate: Some(Certificate::SearchExhausted),
        nodes_expanded,
    })
}

enum Dfs {
    Found,
    Exhausted,
    OverBudget,
}

fn dfs(
    graph: &GrayGraph,
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    budget: u64,
    nodes_expanded: &mut u64,
) -> Dfs {
    *nodes_expanded += 1;
    if *nodes_expanded > budget {
        return Dfs::OverBudget;
    }
    if path.len() == visited.len() {
        return Dfs::Found;
    }
    let current = *path.last().expect("path never empty");
    if !all_unvisited_reachable(graph, visited, current) {
        return Dfs::Exhausted;
    }
    for pos in 0..graph.neighbors(current).len() {
        let next = graph.neighbors(current)[pos];
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(next);
        match dfs(graph, path, visited, budget, nodes_expanded) {
            Dfs::Found => return Dfs::Found,
            Dfs::OverBudget => return Dfs::OverBudget,
            Dfs::Exhausted => {
                path.pop();
                visited[next] = false;
            }
        }
    }
    Dfs::Exhausted
}

/// A Hamiltonian continuation must reach every unvisited vertex from the
/// path head through unvisited vertices only; BFS refutes hopeless states.
fn all_unvisited_reachable(graph: &GrayGraph, visited: &[bool], from: usize) -> bool {
    let remaining = visited.iter().filter(|&&v| !v).count();
    if remaining == 0 {
        return true;
    }
    let mut seen = vec![false; visited.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    let mut reached = 0;
    while let Some(v) = queue.pop_front() {
        for &nb in graph.neighbors(v) {
            if !seen[nb] && !visited[nb] {
                seen[nb] = true;
                reached += 1;
                queue.push_back(nb);
            }
        }
    }
    reached == remaining
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::enumerate;

    fn q(text: &str) -> RationalParam {
        text.parse().unwrap()
    }

    fn words(texts: &[&str]) -> Vec<Word> {
        texts.iter().map(|t| t.parse().unwrap()).collect()
    }

    const KNOWN_CODE_Q1_N5: [&str; 13] = [
        "11111", "11110", "11100", "11000", "11001", "10001", "10000",
        "10010", "00010", "00011", "00001", "00000", "00100",
    ];

    #[test]
    fn check_gray_accepts_known_code() {
        assert!(check_gray(&words(&KNOWN_CODE_Q1_N5), 1).unwrap());
    }

    #[test]
    fn check_gray_rejects_duplicates_and_jumps() {
        let mut list = words(&KNOWN_CODE_Q1_N5);
        list.push(list[0].clone());
        assert!(!check_gray(&list, 1).unwrap());
        assert!(!check_gray(&words(&["00", "11"]), 1).unwrap());
        assert!(check_gray(&words(&["00", "11"]), 2).unwrap());
        assert!(check_gray(&[], 1).unwrap());
    }

    #[test]
    fn check_gray_rejects_mixed_lengths() {
        assert_eq!(
            check_gray(&words(&["00", "1"]), 1).unwrap_err(),
            Error::MixedLengths { left: 2, right: 1 }
        );
    }

    #[test]
    fn parity_gap_examples() {
        assert_eq!(parity_gap(&q("2/3"), 5).unwrap(), (7, 5));
        let (odd, even) = parity_gap(&q("1"), 5).unwrap();
        assert_eq!((odd, even), (7, 6));
        assert_eq!(odd + even, 13);
        assert_eq!(parity_gap(&q("7/2"), 0).unwrap(), (0, 1));
    }

    #[test]
    fn parity_counts_sum_to_family_size() {
        for text in ["1/2", "2/3", "3/2", "3"] {
            let param = q(text);
            for n in 0..=8 {
                let (odd, even) = parity_gap(&param, n).unwrap();
                let total = enumerate(&param, n).unwrap().len() as u64;
                assert_eq!(odd + even, total, "q={param}, n={n}");
            }
        }
    }

    #[test]
    fn graph_is_bipartite_by_parity() {
        let graph = GrayGraph::build(&q("1"), 5).unwrap();
        for v in 0..graph.vertices().len() {
            for &nb in graph.neighbors(v) {
                assert_ne!(
                    graph.vertices()[v].ones() % 2,
                    graph.vertices()[nb].ones() % 2
                );
            }
        }
        assert!(graph.is_connected());
    }

    #[test]
    fn search_reports_parity_obstruction() {
        let outcome = search_1gray(&q("2/3"), 5, 1_000_000).unwrap();
        assert_eq!(outcome.status, SearchStatus::Impossible);
        assert_eq!(outcome.certificate, Some(Certificate::ParityGap { odd: 7, even: 5 }));
        assert!(outcome.path.is_empty());
    }

    #[test]
    fn search_finds_code_for_unit_parameter() {
        let outcome = search_1gray(&q("1"), 5, 1_000_000).unwrap();
        assert_eq!(outcome.status, SearchStatus::Found);
        assert_eq!(outcome.path.len(), 13);
        assert!(check_gray(&outcome.path, 1).unwrap());
        let mut sorted = outcome.path.clone();
        sorted.sort();
        assert_eq!(sorted, enumerate(&q("1"), 5).unwrap());
    }

    #[test]
    fn search_trivial_cases() {
        let outcome = search_1gray(&q("1"), 1, 1000).unwrap();
        assert_eq!(outcome.status, SearchStatus::Found);
        assert_eq!(outcome.path.len(), 2);

        let outcome = search_1gray(&q("4/3"), 0, 1000).unwrap();
        assert_eq!(outcome.status, SearchStatus::Found);
        assert_eq!(outcome.path, vec![Word::empty()]);
    }

    #[test]
    fn search_finds_codes_for_integer_parameters() {
        for c in [2u64, 3, 4, 5] {
            let param = q(&c.to_string());
            for n in 0..=5 {
                let outcome = search_1gray(&param, n, 10_000_000).unwrap();
                assert_eq!(outcome.status, SearchStatus::Found, "q={param}, n={n}");
                assert!(check_gray(&outcome.path, 1).unwrap());
                assert_eq!(
                    outcome.path.len(),
                    enumerate(&param, n).unwrap().len(),
                    "q={param}, n={n}"
                );
            }
        }
    }

    #[test]
    fn search_respects_budget() {
        let outcome = search_1gray(&q("1"), 5, 1).unwrap();
        assert_eq!(outcome.status, SearchStatus::Inconclusive);
        assert!(outcome.certificate.is_none());
        assert!(outcome.nodes_expanded >= 1);
    }
}
