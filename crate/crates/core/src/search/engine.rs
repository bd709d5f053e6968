//! Level-by-level isomorph-free enumeration of avoiding colorings.
//!
//! Level `n` holds one canonical representative per isomorphism class of
//! `k`-colorings of `K_n` that avoid the forbidden structures. Avoidance is
//! hereditary, so every avoiding coloring on `n` vertices restricts to one on
//! `n - 1`; extending every level-`(n-1)` representative by every color
//! vector for a new last vertex therefore reaches every class at level `n`.
//! Extensions are pruned as soon as a forbidden structure through the new
//! vertex appears, and duplicates are removed by canonical code.

use std::collections::BTreeSet;
use std::env;

use rayon::prelude::*;

use crate::coloring::{pair_index, Color, ColoredCompleteGraph};
use crate::error::{Error, Result};

use super::canon::{canonical_code, Code};

/// What a coloring of `K_n` must avoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidanceProblem {
    pub n: usize,
    pub k: usize,
    /// Forbidden monochromatic cycle order for colors `1..=k`, by index `c - 1`.
    pub forbidden_cycles: Vec<Option<usize>>,
    pub rainbow_triangle_forbidden: bool,
}

impl AvoidanceProblem {
    /// Two colors: no color-1 `C_m`, no color-2 `C_n_cycle`.
    pub fn ramsey(n: usize, m: usize, n_cycle: usize) -> Self {
        Self { n, k: 2, forbidden_cycles: vec![Some(m), Some(n_cycle)], rainbow_triangle_forbidden: false }
    }

    /// `k` colors: no rainbow triangle, no monochromatic `C_m` in any color.
    pub fn gallai_ramsey(n: usize, m: usize, k: usize) -> Self {
        Self { n, k, forbidden_cycles: vec![Some(m); k], rainbow_triangle_forbidden: true }
    }

    /// Every coloring qualifies.
    pub fn unconstrained(n: usize, k: usize) -> Self {
        Self { n, k, forbidden_cycles: vec![None; k], rainbow_triangle_forbidden: false }
    }

    pub fn at_order(&self, n: usize) -> Self {
        Self { n, ..self.clone() }
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 || self.k > Color::MAX as usize {
            return Err(Error::BadParameters(format!("need n >= 1 and 1 <= k <= 255, got n = {}, k = {}", self.n, self.k)));
        }
        if self.forbidden_cycles.len() != self.k {
            return Err(Error::BadParameters("one forbidden-cycle entry per color required".into()));
        }
        if let Some(m) = self.forbidden_cycles.iter().flatten().find(|&&m| m < 3) {
            return Err(Error::BadParameters(format!("cycle order {m} is below 3")));
        }
        Ok(())
    }
}

/// Largest order searched exhaustively for each color count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    by_colors: Vec<(usize, usize)>,
}

pub const LIMITS_ENV: &str = "GALLAI_LAB_LIMITS";

impl Default for SearchLimits {
    fn default() -> Self {
        Self { by_colors: vec![(1, 64), (2, 9), (3, 7), (4, 5)] }
    }
}

impl SearchLimits {
    /// Limit for `k` colors; counts above the last entry reuse it.
    pub fn limit(&self, k: usize) -> usize {
        self.by_colors
            .iter()
            .rev()
            .find(|&&(c, _)| c <= k)
            .map(|&(_, n)| n)
            .unwrap_or(1)
    }

    pub fn set(&mut self, k: usize, n: usize) {
        match self.by_colors.binary_search_by_key(&k, |&(c, _)| c) {
            Ok(i) => self.by_colors[i].1 = n,
            Err(i) => self.by_colors.insert(i, (k, n)),
        }
    }

    /// Parses overrides like `2=10,3=8`.
    pub fn apply_overrides(&mut self, overrides: &str) -> Result<()> {
        for item in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || Error::BadParameters(format!("limit override {item:?} is not k=n"));
            let (k, n) = item.split_once('=').ok_or_else(bad)?;
            let k: usize = k.trim().parse().map_err(|_| bad())?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            self.set(k, n.min(64));
        }
        Ok(())
    }

    /// Defaults raised by `GALLAI_LAB_LIMITS`, if set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Self::default();
        if let Ok(overrides) = env::var(LIMITS_ENV) {
            limits.apply_overrides(&overrides)?;
        }
        Ok(limits)
    }
}

/// Node and class counts accumulated over the levels built so far.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationCounts {
    pub nodes: u64,
    pub canonical: u64,
    pub rejected: u64,
}

/// Canonical representatives of one level, sorted by code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub n: usize,
    pub codes: Vec<Code>,
}

impl Level {
    pub fn coloring(&self, i: usize, k: usize) -> ColoredCompleteGraph<u64> {
        ColoredCompleteGraph::from_lower_triangle(self.n, k, self.codes[i].clone())
            .expect("level codes are complete colorings")
    }
}

pub struct Enumerator {
    problem: AvoidanceProblem,
    threads: usize,
    current: Level,
    counts: EnumerationCounts,
}

struct Extender<'a> {
    problem: &'a AvoidanceProblem,
    n_old: usize,
    colors: &'a [Color],
    /// Old adjacency per color: `adj[c - 1][v]`.
    adj: Vec<Vec<u64>>,
    assigned: Vec<Color>,
    new_nbrs: Vec<u64>,
    nodes: u64,
    out: Vec<Code>,
}

impl Extender<'_> {
    fn color(&self, u: usize, v: usize) -> Color {
        self.colors[pair_index(u, v)]
    }

    /// Does giving `{new, b}` color `c` close a forbidden structure with the
    /// choices already made for vertices below `b`?
    fn conflicts(&self, b: usize, c: Color) -> bool {
        if self.problem.rainbow_triangle_forbidden {
            for a in 0..b {
                let ca = self.assigned[a];
                let cab = self.color(a, b);
                if ca != c && ca != cab && c != cab {
                    return true;
                }
            }
        }
        if let Some(m) = self.problem.forbidden_cycles[c as usize - 1] {
            let others = self.new_nbrs[c as usize - 1];
            if m <= self.n_old + 1 && others != 0 {
                // A C_m through the new vertex using edge {new, b}: a path on
                // m - 1 old vertices from b to another color-c neighbor.
                if path_to_targets(&self.adj[c as usize - 1], b, others, m - 1) {
                    return true;
                }
            }
        }
        false
    }

    fn assign(&mut self, b: usize) {
        self.nodes += 1;
        if b == self.n_old {
            let mut code = self.colors.to_vec();
            code.extend_from_slice(&self.assigned);
            self.out.push(canonical_code(self.n_old + 1, self.problem.k, &code));
            return;
        }
        for c in 1..=self.problem.k as Color {
            if self.conflicts(b, c) {
                self.nodes += 1;
                continue;
            }
            self.assigned[b] = c;
            self.new_nbrs[c as usize - 1] |= 1 << b;
            self.assign(b + 1);
            self.new_nbrs[c as usize - 1] &= !(1 << b);
        }
    }
}

/// Is there a path on exactly `order` vertices from `from` to a vertex of
/// `targets` (other than `from`)?
fn path_to_targets(adj: &[u64], from: usize, targets: u64, order: usize) -> bool {
    fn go(adj: &[u64], end: usize, visited: u64, targets: u64, missing: usize) -> bool {
        if missing == 0 {
            return targets >> end & 1 == 1;
        }
        let mut cand = adj[end] & !visited;
        if missing == 1 {
            cand &= targets;
        }
        while cand != 0 {
            let next = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if go(adj, next, visited | 1 << next, targets, missing - 1) {
                return true;
            }
        }
        false
    }
    let targets = targets & !(1 << from);
    targets != 0 && go(adj, from, 1 << from, targets, order - 1)
}

impl Enumerator {
    pub fn new(problem: &AvoidanceProblem, threads: usize) -> Result<Self> {
        problem.validate()?;
        Ok(Self {
            problem: problem.clone(),
            threads: threads.max(1),
            current: Level { n: 1, codes: vec![Vec::new()] },
            counts: EnumerationCounts { nodes: 1, canonical: 1, rejected: 0 },
        })
    }

    pub fn level(&self) -> &Level {
        &self.current
    }

    pub fn counts(&self) -> EnumerationCounts {
        self.counts
    }

    fn extend_one(&self, code: &Code) -> (Vec<Code>, u64) {
        let n_old = self.current.n;
        let k = self.problem.k;
        let mut adj = vec![vec![0u64; n_old]; k];
        for v in 1..n_old {
            for u in 0..v {
                let c = code[pair_index(u, v)] as usize - 1;
                adj[c][u] |= 1 << v;
                adj[c][v] |= 1 << u;
            }
        }
        let mut ext = Extender {
            problem: &self.problem,
            n_old,
            colors: code,
            adj,
            assigned: vec![0; n_old],
            new_nbrs: vec![0; k],
            nodes: 0,
            out: Vec::new(),
        };
        ext.assign(0);
        (ext.out, ext.nodes)
    }

    /// Builds the next level. Output is independent of the thread count.
    pub fn step(&mut self) {
        let run = |codes: &[Code]| -> Vec<(Vec<Code>, u64)> {
            if self.threads > 1 {
                codes.par_iter().map(|c| self.extend_one(c)).collect()
            } else {
                codes.iter().map(|c| self.extend_one(c)).collect()
            }
        };
        let results = if self.threads > 1 {
            match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
                Ok(pool) => pool.install(|| run(&self.current.codes)),
                Err(_) => run(&self.current.codes),
            }
        } else {
            run(&self.current.codes)
        };
        let mut seen = BTreeSet::new();
        let mut produced = 0u64;
        for (children, nodes) in results {
            self.counts.nodes += nodes;
            produced += children.len() as u64;
            seen.extend(children);
        }
        let codes: Vec<Code> = seen.into_iter().collect();
        self.counts.canonical += codes.len() as u64;
        self.counts.rejected += produced - codes.len() as u64;
        self.current = Level { n: self.current.n + 1, codes };
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(ColoredCompleteGraph<u64>),
    Exhausted,
    BudgetExceeded,
}

/// Decides whether some coloring of `K_n` avoids everything in `p`.
/// `budget` caps expanded nodes; it is checked between levels.
pub fn exists_avoiding(p: &AvoidanceProblem, budget: Option<u64>) -> Result<Outcome> {
    exists_avoiding_with(p, budget, &SearchLimits::default(), 1)
}

pub fn exists_avoiding_with(
    p: &AvoidanceProblem,
    budget: Option<u64>,
    limits: &SearchLimits,
    threads: usize,
) -> Result<Outcome> {
    p.validate()?;
    let limit = limits.limit(p.k);
    if p.n > limit {
        return Err(Error::OverLimit { n: p.n, k: p.k, limit });
    }
    let mut e = Enumerator::new(p, threads)?;
    while e.level().n < p.n {
        if e.level().codes.is_empty() {
            return Ok(Outcome::Exhausted);
        }
        if budget.is_some_and(|b| e.counts().nodes > b) {
            return Ok(Outcome::BudgetExceeded);
        }
        e.step();
    }
    Ok(match e.level().codes.is_empty() {
        true => Outcome::Exhausted,
        false => Outcome::Found(e.level().coloring(0, p.k)),
    })
}
