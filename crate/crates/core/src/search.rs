//! Exhaustive Ramsey search on small complete graphs.
//!
//! Vertices are added one at a time and the edges from the new vertex to
//! earlier ones are colored in order. A forbidden copy that appears must use
//! the newest vertex, so each check is local to it. Two relabelings cut the
//! tree: vertex 0 has maximum red degree, and its red neighbours are a
//! prefix `1..=d`.

use crate::coloring::TwoColoring;
use crate::detect::{contains_family_through, contains_family_with, Budget, DetectionResult};
use crate::family::FamilySpec;
use crate::graph::Graph;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

/// Default cap on search nodes (edge color decisions) per call.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Edge color decisions made.
    pub nodes: u64,
    /// Decisions rejected because they closed a forbidden copy.
    pub pruned: u64,
    /// Decisions skipped by the relabeling rules.
    pub symmetry_pruned: u64,
}

impl SearchStats {
    fn add(&mut self, o: &SearchStats) {
        self.nodes += o.nodes;
        self.pruned += o.pruned;
        self.symmetry_pruned += o.symmetry_pruned;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
    /// Worker threads; `1` runs the plain sequential search.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            node_budget: DEFAULT_NODE_BUDGET,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Existence {
    Found(TwoColoring),
    None,
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct ExistenceOutcome {
    pub result: Existence,
    pub stats: SearchStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    RamseyValue,
    LowerBoundOnly,
    ExhaustedBudget,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::RamseyValue => "ramsey_value",
            SearchStatus::LowerBoundOnly => "lower_bound_only",
            SearchStatus::ExhaustedBudget => "exhausted_budget",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// The Ramsey number for `RamseyValue`; otherwise one more than the
    /// largest order with a known good coloring.
    pub value: usize,
    /// A good coloring on `value - 1` vertices.
    pub witness: Option<TwoColoring>,
    pub stats: SearchStats,
    /// `N=<k> status=<found|none|exhausted> nodes=<count>` per order tried.
    pub transcript: Vec<String>,
}

/// A coloring of `K_order` with no red `red` and no blue `blue`, if any.
pub fn exists_good_coloring(red: FamilySpec, blue: FamilySpec, order: usize) -> ExistenceOutcome {
    exists_good_coloring_with(red, blue, order, &SearchConfig::default())
}

pub fn exists_good_coloring_with(red: FamilySpec, blue: FamilySpec, order: usize, cfg: &SearchConfig) -> ExistenceOutcome {
    assert!(order >= 1, "order must be positive");
    if red.vertex_count() == 1 || blue.vertex_count() == 1 {
        return ExistenceOutcome {
            result: Existence::None,
            stats: SearchStats::default(),
        };
    }
    let root = State::new(red, blue, order);
    if cfg.threads <= 1 {
        let mut s = root;
        let mut left = cfg.node_budget;
        let result = s.run(&mut left, &|| false);
        return ExistenceOutcome { result, stats: s.stats };
    }
    parallel(root, cfg)
}

/// Split at a fixed depth and search subtrees concurrently. The witness is
/// taken from the first subtree in sequential order that has one, so it is
/// the coloring the sequential search returns.
fn parallel(root: State, cfg: &SearchConfig) -> ExistenceOutcome {
    let mut frontier = vec![root];
    let mut stats = SearchStats::default();
    // Expand breadth first until there is enough work to share.
    while frontier.len() < cfg.threads * 8 {
        let mut next = Vec::new();
        let mut grew = false;
        for mut s in frontier {
            match s.children() {
                Some(kids) => {
                    grew = true;
                    stats.add(&s.stats);
                    next.extend(kids);
                }
                None => next.push(s),
            }
        }
        frontier = next;
        if !grew {
            break;
        }
    }
    let best = AtomicUsize::new(usize::MAX);
    let budget = AtomicU64::new(cfg.node_budget.saturating_sub(stats.nodes));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .expect("thread pool");
    let results: Vec<(Existence, SearchStats)> = pool.install(|| {
        frontier
            .into_par_iter()
            .enumerate()
            .map(|(i, mut s)| {
                let stop = || best.load(Ordering::Relaxed) < i;
                if stop() {
                    return (Existence::None, s.stats);
                }
                // Work is drawn from the shared budget in chunks.
                let mut result = Existence::Exhausted;
                loop {
                    let chunk = take(&budget, 1 << 16);
                    if chunk == 0 {
                        break;
                    }
                    let mut left = chunk;
                    match s.run(&mut left, &stop) {
                        Existence::Exhausted if !stop() && left == 0 => continue,
                        r => {
                            budget.fetch_add(left, Ordering::Relaxed);
                            result = r;
                            break;
                        }
                    }
                }
                if matches!(result, Existence::Found(_)) {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                (result, s.stats)
            })
            .collect()
    });
    let mut first_found = None;
    let mut exhausted = false;
    for (i, (r, st)) in results.into_iter().enumerate() {
        stats.add(&st);
        match r {
            Existence::Found(c) if first_found.is_none() => first_found = Some((i, c)),
            // Undecided before any witness leaves the answer open.
            Existence::Exhausted if first_found.is_none() => exhausted = true,
            _ => {}
        }
    }
    let result = match first_found {
        Some((_, c)) if !exhausted => Existence::Found(c),
        None if !exhausted => Existence::None,
        _ => Existence::Exhausted,
    };
    ExistenceOutcome { result, stats }
}

fn take(budget: &AtomicU64, want: u64) -> u64 {
    let mut cur = budget.load(Ordering::Relaxed);
    loop {
        let got = cur.min(want);
        if got == 0 {
            return 0;
        }
        match budget.compare_exchange_weak(cur, cur - got, Ordering::Relaxed, Ordering::Relaxed) {
            Ok(_) => return got,
            Err(now) => cur = now,
        }
    }
}

/// Smallest `N <= n_max` with no good coloring.
pub fn ramsey_number(red: FamilySpec, blue: FamilySpec, n_max: usize) -> SearchOutcome {
    ramsey_number_with(red, blue, n_max, &SearchConfig::default())
}

pub fn ramsey_number_with(red: FamilySpec, blue: FamilySpec, n_max: usize, cfg: &SearchConfig) -> SearchOutcome {
    let mut stats = SearchStats::default();
    let mut transcript = Vec::new();
    let mut witness = None;
    let mut left = cfg.node_budget;
    for order in 1..=n_max {
        let step_cfg = SearchConfig {
            node_budget: left,
            threads: cfg.threads,
        };
        let out = exists_good_coloring_with(red, blue, order, &step_cfg);
        stats.add(&out.stats);
        left = left.saturating_sub(out.stats.nodes);
        let label = match out.result {
            Existence::Found(_) => "found",
            Existence::None => "none",
            Existence::Exhausted => "exhausted",
        };
        transcript.push(format!("N={order} status={label} nodes={}", out.stats.nodes));
        match out.result {
            Existence::Found(c) => witness = Some(c),
            Existence::None => {
                return SearchOutcome {
                    status: SearchStatus::RamseyValue,
                    value: order,
                    witness,
                    stats,
                    transcript,
                }
            }
            Existence::Exhausted => {
                return SearchOutcome {
                    status: SearchStatus::ExhaustedBudget,
                    value: order,
                    witness,
                    stats,
                    transcript,
                }
            }
        }
    }
    SearchOutcome {
        status: SearchStatus::LowerBoundOnly,
        value: n_max + 1,
        witness,
        stats,
        transcript,
    }
}

/// Result of checking a coloring against a pair of forbidden families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub red: DetectionResult,
    pub blue: DetectionResult,
}

impl VerifyReport {
    /// Both searches completed and found nothing.
    pub fn passed(&self) -> bool {
        self.red == DetectionResult::NotFound && self.blue == DetectionResult::NotFound
    }
}

pub fn verify_witness(c: &TwoColoring, red: FamilySpec, blue: FamilySpec) -> VerifyReport {
    VerifyReport {
        red: contains_family_with(c.red(), red, &mut Budget::default().meter()),
        blue: contains_family_with(&c.blue(), blue, &mut Budget::default().meter()),
    }
}

/// Search state: vertices `0..v` fully colored, vertex `v` colored to `0..u`.
#[derive(Clone)]
struct State {
    red_family: FamilySpec,
    blue_family: FamilySpec,
    order: usize,
    red: Graph,
    blue: Graph,
    v: usize,
    u: usize,
    /// Red degree of vertex 0 once its red neighbourhood is closed.
    d0: Option<usize>,
    stats: SearchStats,
    /// Next color to try at each colored-or-pending edge: 0 red, 1 blue, 2 done.
    frames: Vec<u8>,
    started: bool,
}

enum Step {
    Done,
    Branch,
}

impl State {
    fn new(red_family: FamilySpec, blue_family: FamilySpec, order: usize) -> Self {
        Self {
            red_family,
            blue_family,
            order,
            red: Graph::new(order),
            blue: Graph::new(order),
            v: 1,
            u: 0,
            d0: None,
            stats: SearchStats::default(),
            frames: Vec::new(),
            started: false,
        }
    }

    fn position(&self) -> Step {
        if self.v >= self.order {
            Step::Done
        } else {
            Step::Branch
        }
    }

    fn advance(&mut self) {
        self.u += 1;
        if self.u == self.v {
            self.v += 1;
            self.u = 0;
        }
    }

    fn retreat(&mut self) {
        if self.u == 0 {
            self.v -= 1;
            self.u = self.v - 1;
        } else {
            self.u -= 1;
        }
    }

    /// Whether coloring `(u, v)` with `red` is allowed by the relabeling
    /// rules, before any containment check.
    fn symmetric_ok(&self, red: bool) -> bool {
        let (u, v) = (self.u, self.v);
        if u == 0 {
            // Red neighbours of 0 form a prefix.
            if red && v > 1 && !self.red.has_edge(0, v - 1) {
                return false;
            }
            // No vertex may end with red degree above vertex 0's; a vertex
            // outside the prefix fixes it.
            if !red && self.d0.is_none() {
                let d = v - 1;
                if (1..v).any(|w| self.red.degree(w) > d) {
                    return false;
                }
            }
            return true;
        }
        if red {
            let cap = self.d0.unwrap_or(self.order - 1);
            if self.red.degree(u) + 1 > cap || self.red.degree(v) + 1 > cap {
                return false;
            }
        }
        true
    }

    /// Try one color on the current edge; on success the edge stays colored.
    fn try_color(&mut self, red: bool) -> Result<bool, ()> {
        let (u, v) = (self.u, self.v);
        if !self.symmetric_ok(red) {
            self.stats.symmetry_pruned += 1;
            return Ok(false);
        }
        self.stats.nodes += 1;
        let (g, f) = if red {
            (&mut self.red, self.red_family)
        } else {
            (&mut self.blue, self.blue_family)
        };
        g.add_edge(u, v);
        let mut meter = Budget::default().meter();
        match contains_family_through(g, f, v, &mut meter) {
            DetectionResult::NotFound => {}
            DetectionResult::Found(_) => {
                g.remove_edge(u, v);
                self.stats.pruned += 1;
                return Ok(false);
            }
            DetectionResult::BudgetExhausted => {
                g.remove_edge(u, v);
                return Err(());
            }
        }
        if u == 0 && !red && self.d0.is_none() {
            self.d0 = Some(v - 1);
        }
        Ok(true)
    }

    fn uncolor(&mut self) {
        let (u, v) = (self.u, self.v);
        if self.red.has_edge(u, v) {
            self.red.remove_edge(u, v);
        } else {
            self.blue.remove_edge(u, v);
            if u == 0 && self.d0 == Some(v - 1) {
                self.d0 = None;
            }
        }
    }

    /// The states reachable by coloring the current edge, in search order.
    /// `None` at a leaf.
    fn children(&mut self) -> Option<Vec<State>> {
        if let Step::Done = self.position() {
            return None;
        }
        let mut kids = Vec::new();
        for red in [true, false] {
            match self.try_color(red) {
                Ok(true) => {
                    let mut k = self.clone();
                    k.stats = SearchStats::default();
                    k.advance();
                    kids.push(k);
                    self.uncolor();
                }
                Ok(false) => {}
                Err(()) => return None,
            }
        }
        Some(kids)
    }

    /// Depth-first search, resumable: after `Exhausted` a later call with
    /// fresh allowance continues where this one stopped. `stop` aborts early
    /// when another worker has made this subtree irrelevant.
    fn run(&mut self, left: &mut u64, stop: &dyn Fn() -> bool) -> Existence {
        if !self.started {
            self.started = true;
            self.frames.push(0);
        }
        loop {
            if let Step::Done = self.position() {
                return Existence::Found(TwoColoring::from_red(self.red.clone()));
            }
            if stop() {
                return Existence::None;
            }
            let Some(&top) = self.frames.last() else {
                return Existence::None;
            };
            if top == 2 {
                self.frames.pop();
                if self.frames.is_empty() {
                    return Existence::None;
                }
                self.retreat();
                self.uncolor();
                continue;
            }
            if *left == 0 {
                return Existence::Exhausted;
            }
            *left -= 1;
            match self.try_color(top == 0) {
                Ok(true) => {
                    *self.frames.last_mut().expect("frame") += 1;
                    self.advance();
                    self.frames.push(0);
                }
                Ok(false) => *self.frames.last_mut().expect("frame") += 1,
                Err(()) => return Existence::Exhausted,
            }
        }
    }
}
