//! Brute-force verification over small words.
//!
//! For a word, every reduction sequence is enumerated and the *move graph*
//! is built: one node per sequence, one edge per applicable move. The graph
//! being connected is exactly the statement that any sequence can be turned
//! into any other by moves. The checkers here also replay the chains
//! produced by [`transform_to`] and [`front_reduction`] against the graph.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::moves::{applicable_moves, Move};
use crate::par::{map_slice, Execution};
use crate::reduction::ReductionSequence;
use crate::syntax::render_positions;
use crate::transform::{front_reduction, transform_chain_bound, transform_to};
use crate::word::Word;

pub const DEFAULT_MAX_LEN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("word of length {len} exceeds the configured cap of {cap}")]
    CapExceeded { len: usize, cap: usize },
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Longest word the oracle will enumerate.
    pub max_len: usize,
    /// Up to this many sequences every ordered pair is checked; above it,
    /// `sampled_pairs` random pairs are.
    pub exhaustive_pair_limit: usize,
    pub sampled_pairs: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_len: DEFAULT_MAX_LEN,
            exhaustive_pair_limit: 200,
            sampled_pairs: 50,
            seed: 0,
            execution: Execution::default(),
        }
    }
}

impl OracleConfig {
    fn check_cap(&self, w: &Word) -> Result<(), OracleError> {
        if w.len() > self.max_len {
            Err(OracleError::CapExceeded {
                len: w.len(),
                cap: self.max_len,
            })
        } else {
            Ok(())
        }
    }
}

/// All reduction sequences of `w`, ordered by ascending first position,
/// then recursively.
pub fn enumerate_sequences(w: &Word, config: &OracleConfig) -> Result<Vec<ReductionSequence>, OracleError> {
    config.check_cap(w)?;
    if w.len() % 2 == 1 {
        return Ok(Vec::new());
    }
    Ok(enumerate_positions(w)
        .into_iter()
        .map(|mut steps| {
            steps.reverse();
            ReductionSequence::from_parts_unchecked(w.clone(), steps)
        })
        .collect())
}

// Position lists come out reversed so each level only pushes.
fn enumerate_positions(w: &Word) -> Vec<Vec<usize>> {
    if w.is_empty() {
        return vec![Vec::with_capacity(0)];
    }
    let mut out = Vec::new();
    for p in w.find_redexes() {
        for mut tail in enumerate_positions(&w.remove_pair_unchecked(p)) {
            tail.push(p);
            out.push(tail);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub mv: Move,
}

/// Reduction sequences of one word, connected by single moves.
#[derive(Debug, Clone)]
pub struct MoveGraph {
    word: Word,
    nodes: Vec<ReductionSequence>,
    index: HashMap<Vec<usize>, usize>,
    adjacency: Vec<Vec<(Move, usize)>>,
}

impl MoveGraph {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn nodes(&self) -> &[ReductionSequence] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_index(&self, steps: &[usize]) -> Option<usize> {
        self.index.get(steps).copied()
    }

    /// Outgoing moves of node `i`.
    pub fn neighbors(&self, i: usize) -> &[(Move, usize)] {
        &self.adjacency[i]
    }

    /// Each undirected edge once, labeled by the move from its lower endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(from, out)| {
                out.iter()
                    .filter(move |(_, to)| from < *to)
                    .map(move |&(mv, to)| Edge { from, to, mv })
            })
            .collect()
    }

    /// Every directed move has its inverse move going back.
    pub fn is_symmetric(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(from, out)| {
            out.iter().all(|&(mv, to)| {
                self.adjacency[to]
                    .iter()
                    .any(|&(back, end)| end == from && back == mv.inverse())
            })
        })
    }

    /// BFS distances from `source`; `None` for unreachable nodes.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &(_, v) in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.nodes.len()];
        let mut count = 0;
        for start in 0..self.nodes.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &(_, v) in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Undirected DOT. Nodes are labeled by position lists, edges by move kind.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph moves {{").unwrap();
        writeln!(out, "  label=\"{}\";", escape(&self.word.to_text_or_nil())).unwrap();
        for (i, node) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"[{}]\"];", render_positions(node.steps())).unwrap();
        }
        for edge in self.edges() {
            writeln!(
                out,
                "  n{} -- n{} [label=\"{}\"];",
                edge.from,
                edge.to,
                edge.mv.kind.label()
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn build_move_graph(w: &Word, config: &OracleConfig) -> Result<MoveGraph, OracleError> {
    let nodes = enumerate_sequences(w, config)?;
    let index: HashMap<Vec<usize>, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, r)| (r.steps().to_vec(), i))
        .collect();
    let adjacency = map_slice(&nodes, config.execution, |r| {
        applicable_moves(r)
            .into_iter()
            .map(|(mv, next)| {
                let to = *index
                    .get(next.steps())
                    .expect("a move yields a valid sequence of the same word");
                (mv, to)
            })
            .collect()
    });
    Ok(MoveGraph {
        word: w.clone(),
        nodes,
        index,
        adjacency,
    })
}

pub fn check_connected(g: &MoveGraph) -> bool {
    g.is_connected()
}

/// True if `w` is irreducible or all of its reduction sequences are
/// connected by moves.
pub fn check_triviality_witness(w: &Word, config: &OracleConfig) -> Result<bool, OracleError> {
    let g = build_move_graph(w, config)?;
    Ok(g.node_count() == 0 || g.is_connected())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: String,
    pub check: &'static str,
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub failing_move: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WordReport {
    pub word: String,
    pub sequences: usize,
    pub edges: usize,
    pub connected: bool,
    pub pairs: usize,
    pub front_checks: usize,
    pub move_checks: usize,
    pub max_chain_len: usize,
    pub max_bfs_distance: usize,
    pub counterexamples: Vec<Counterexample>,
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// The ordered pairs checked for a graph with `n` nodes.
fn select_pairs(n: usize, word: &str, config: &OracleConfig) -> Vec<(usize, usize)> {
    if n == 0 {
        return Vec::new();
    }
    if n <= config.exhaustive_pair_limit {
        return (0..n).flat_map(|r| (0..n).map(move |s| (r, s))).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ fnv1a(word));
    let mut pairs: Vec<(usize, usize)> = (0..config.sampled_pairs)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    pairs.sort_unstable();
    pairs
}

struct PairOutcome {
    chain_len: usize,
    distance: usize,
    failure: Option<Counterexample>,
}

fn check_pair(g: &MoveGraph, word: &str, r: usize, s: usize, distance: usize) -> PairOutcome {
    let (from, to) = (&g.nodes[r], &g.nodes[s]);
    let fail = |failing_move, reason: String| Counterexample {
        word: word.to_owned(),
        check: "transform_to",
        from: from.steps().to_vec(),
        to: to.steps().to_vec(),
        failing_move,
        reason,
    };
    let chain = match transform_to(from, to) {
        Ok(chain) => chain,
        Err(e) => {
            return PairOutcome {
                chain_len: 0,
                distance,
                failure: Some(fail(None, e.to_string())),
            }
        }
    };
    let mut failure = None;
    let mut current = from.clone();
    for (i, mv) in chain.moves().iter().enumerate() {
        match mv.apply(&current) {
            Ok(next) if g.node_index(next.steps()).is_some() => current = next,
            Ok(next) => {
                failure = Some(fail(Some(i), format!("[{next}] is not a node of the move graph")));
                break;
            }
            Err(e) => {
                failure = Some(fail(Some(i), e.to_string()));
                break;
            }
        }
    }
    let bound = transform_chain_bound(g.word.len() / 2);
    if failure.is_none() && &current != to {
        failure = Some(fail(None, format!("chain ends at [{current}]")));
    }
    if failure.is_none() && chain.len() > bound {
        failure = Some(fail(None, format!("chain length {} exceeds {bound}", chain.len())));
    }
    PairOutcome {
        chain_len: chain.len(),
        distance,
        failure,
    }
}

/// Replays [`transform_to`] for the selected ordered pairs of sequences.
pub fn check_transform_chain(w: &Word, config: &OracleConfig) -> Result<WordReport, OracleError> {
    let g = build_move_graph(w, config)?;
    Ok(transform_report(&g, config))
}

fn transform_report(g: &MoveGraph, config: &OracleConfig) -> WordReport {
    let word = g.word.to_string();
    let pairs = select_pairs(g.node_count(), &word, config);

    // one BFS per distinct source
    let mut sources: Vec<usize> = pairs.iter().map(|&(r, _)| r).collect();
    sources.dedup();
    let distances: HashMap<usize, Vec<Option<usize>>> = sources
        .iter()
        .zip(map_slice(&sources, config.execution, |&r| g.distances_from(r)))
        .map(|(&r, d)| (r, d))
        .collect();

    let outcomes = map_slice(&pairs, config.execution, |&(r, s)| {
        let distance = distances[&r][s].unwrap_or(0);
        check_pair(g, &word, r, s, distance)
    });

    let mut report = WordReport {
        word,
        sequences: g.node_count(),
        edges: g.edges().len(),
        connected: g.is_connected(),
        pairs: pairs.len(),
        ..WordReport::default()
    };
    if !report.connected {
        report.counterexamples.push(Counterexample {
            word: report.word.clone(),
            check: "connectivity",
            from: Vec::new(),
            to: Vec::new(),
            failing_move: None,
            reason: format!("{} components", g.component_count()),
        });
    }
    for outcome in outcomes {
        report.max_chain_len = report.max_chain_len.max(outcome.chain_len);
        report.max_bfs_distance = report.max_bfs_distance.max(outcome.distance);
        report.counterexamples.extend(outcome.failure);
    }
    report
}

/// For every sequence and every redex of the word: [`front_reduction`]
/// yields a sequence starting at that redex, reachable by its own chain, in
/// at most as many moves as there are steps.
pub fn check_front_reductions(g: &MoveGraph, execution: Execution) -> (usize, Vec<Counterexample>) {
    let redexes = g.word.find_redexes();
    let word = g.word.to_string();
    let per_node = map_slice(&g.nodes, execution, |r| {
        let mut failures = Vec::new();
        for &p in &redexes {
            let fail = |reason: String| Counterexample {
                word: word.clone(),
                check: "front_reduction",
                from: r.steps().to_vec(),
                to: vec![p],
                failing_move: None,
                reason,
            };
            match front_reduction(r, p) {
                Err(e) => failures.push(fail(e.to_string())),
                Ok((chain, out)) => {
                    let replay = chain.replay(r).map(|mut t| t.pop().unwrap());
                    if out.steps().first() != Some(&p) {
                        failures.push(fail(format!("result [{out}] does not start at {p}")));
                    } else if ReductionSequence::new(out.word().clone(), out.steps().to_vec()).is_err() {
                        failures.push(fail(format!("result [{out}] is not a valid sequence")));
                    } else if replay.as_ref() != Ok(&out) {
                        failures.push(fail("chain does not replay to the result".to_owned()));
                    } else if chain.len() > r.len() {
                        failures.push(fail(format!("chain of {} moves for {} steps", chain.len(), r.len())));
                    }
                }
            }
        }
        failures
    });
    let checks = g.node_count() * redexes.len();
    (checks, per_node.into_iter().flatten().collect())
}

/// Every applicable move is undone by its inverse, and swaps are
/// self-inverse.
pub fn check_move_algebra(g: &MoveGraph, execution: Execution) -> (usize, Vec<Counterexample>) {
    let word = g.word.to_string();
    let per_node = map_slice(&g.nodes, execution, |r| {
        let mut failures = Vec::new();
        let moves = applicable_moves(r);
        for (mv, next) in &moves {
            let back = mv.inverse().apply(next);
            if back.as_ref() != Ok(r) {
                failures.push(Counterexample {
                    word: word.clone(),
                    check: "move_algebra",
                    from: r.steps().to_vec(),
                    to: next.steps().to_vec(),
                    failing_move: Some(mv.at),
                    reason: format!("{} does not undo {mv}", mv.inverse()),
                });
            }
        }
        (moves.len(), failures)
    });
    let mut checks = 0;
    let mut failures = Vec::new();
    for (n, f) in per_node {
        checks += n;
        failures.extend(f);
    }
    (checks, failures)
}

/// All checks on one word.
pub fn check_word(w: &Word, config: &OracleConfig) -> Result<WordReport, OracleError> {
    let g = build_move_graph(w, config)?;
    let mut report = transform_report(&g, config);
    if !g.is_symmetric() {
        report.counterexamples.push(Counterexample {
            word: report.word.clone(),
            check: "edge_symmetry",
            from: Vec::new(),
            to: Vec::new(),
            failing_move: None,
            reason: "a move has no inverse edge".to_owned(),
        });
    }
    let (front_checks, front_failures) = check_front_reductions(&g, config.execution);
    let (move_checks, move_failures) = check_move_algebra(&g, config.execution);
    report.front_checks = front_checks;
    report.move_checks = move_checks;
    report.counterexamples.extend(front_failures);
    report.counterexamples.extend(move_failures);
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub words_checked: usize,
    pub sequences: usize,
    pub edges: usize,
    pub pairs: usize,
    pub front_checks: usize,
    pub move_checks: usize,
    pub max_chain_len: usize,
    pub max_bfs_distance: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn absorb(&mut self, report: WordReport) {
        self.words_checked += 1;
        self.sequences += report.sequences;
        self.edges += report.edges;
        self.pairs += report.pairs;
        self.front_checks += report.front_checks;
        self.move_checks += report.move_checks;
        self.max_chain_len = self.max_chain_len.max(report.max_chain_len);
        self.max_bfs_distance = self.max_bfs_distance.max(report.max_bfs_distance);
        self.counterexamples.extend(report.counterexamples);
    }
}

/// Runs [`check_word`] on every word, fanning out per the configured
/// execution. Per-word reports are returned sorted by word text, so output
/// does not depend on scheduling.
pub fn check_words(words: &[Word], config: &OracleConfig) -> Result<(CheckSummary, Vec<WordReport>), OracleError> {
    for w in words {
        config.check_cap(w)?;
    }
    let mut reports: Vec<WordReport> = map_slice(words, config.execution, |w| check_word(w, config))
        .into_iter()
        .collect::<Result<_, _>>()?;
    reports.sort_by(|a, b| a.word.cmp(&b.word));
    let mut summary = CheckSummary::default();
    for report in reports.iter().cloned() {
        summary.absorb(report);
    }
    Ok((summary, reports))
}
