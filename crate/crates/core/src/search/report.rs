use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, ColoredCompleteGraph};
use crate::constructions::{build_extremal_odd, build_ramsey_cycle_lower, ramsey_formula, random_gallai};
use crate::detect::{find_any_mono_cycle, find_mono_cycle, find_rainbow_triangle};
use crate::error::{Error, Result};
use crate::witness::Witness;

use super::engine::{AvoidanceProblem, Enumerator, SearchLimits};

type Wide = ColoredCompleteGraph<u128>;

/// Random colorings tried per order when extending a lower bound past the
/// exhaustive range.
const RANDOM_TRIES: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Ramsey,
    GallaiRamsey,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub canonical: u64,
    pub rejected: u64,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub family: Family,
    pub params: BTreeMap<String, u64>,
    /// Exact threshold, when the search settled it.
    pub value: Option<usize>,
    /// Certified by `witness`: a coloring on `lower - 1` vertices.
    pub lower: usize,
    pub upper: Option<usize>,
    pub witness_file: Option<String>,
    pub stats: SearchStats,
    #[serde(skip)]
    pub witness: Option<Wide>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadParameters(format!("report JSON: {e}")))
    }

    /// Zeroes wall time so reports compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.stats.ms = 0;
        self
    }

    fn param(&self, key: &str) -> Option<usize> {
        self.params.get(key).map(|&v| v as usize)
    }

    /// Order the witness must have.
    pub fn witness_order(&self) -> usize {
        self.value.unwrap_or(self.lower).saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub n_max: Option<usize>,
    pub budget: Option<u64>,
    pub threads: usize,
    pub seed: u64,
    pub limits: SearchLimits,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { n_max: None, budget: None, threads: 1, seed: 0, limits: SearchLimits::default() }
    }
}

/// Forbidden structures of a report, as a sweep over a candidate witness.
fn sweep(family: Family, params: &BTreeMap<String, u64>, g: &Wide) -> std::result::Result<(), (String, Option<Witness>)> {
    let get = |k: &str| params.get(k).map(|&v| v as usize).ok_or_else(|| (format!("missing parameter {k:?}"), None));
    match family {
        Family::Ramsey => {
            let (m, n) = (get("m")?, get("n")?);
            if g.palette() > 2 && g.colors_used().iter().any(|&c| c > 2) {
                return Err(("witness uses a color above 2".into(), None));
            }
            for (color, len) in [(1, m), (2, n)] {
                if let Some(w) = find_mono_cycle(g, color, len) {
                    return Err((format!("color {color} contains C_{len}"), Some(w)));
                }
            }
        }
        Family::GallaiRamsey => {
            let (m, k) = (get("m")?, get("k")?);
            if g.colors_used().iter().any(|&c| c as usize > k) {
                return Err((format!("witness uses a color above {k}"), None));
            }
            if let Some(w) = find_rainbow_triangle(g) {
                return Err(("rainbow triangle".into(), Some(w)));
            }
            if let Some(w) = find_any_mono_cycle(g, m) {
                return Err((format!("monochromatic C_{m}"), Some(w)));
            }
        }
    }
    Ok(())
}

fn widen(g: &ColoredCompleteGraph<u64>) -> Wide {
    Wide::from_lower_triangle(g.n(), g.palette(), g.lower_triangle().to_vec()).expect("u128 holds every u64 coloring")
}

struct Plan {
    family: Family,
    problem: AvoidanceProblem,
    params: BTreeMap<String, u64>,
}

fn run(plan: Plan, opts: &SearchOptions, constructed: Option<Wide>) -> Result<SearchReport> {
    let start = Instant::now();
    let k = plan.problem.k;
    let limit = opts.limits.limit(k);
    let n_max = opts.n_max.unwrap_or(limit);
    if n_max > limit {
        return Err(Error::OverLimit { n: n_max, k, limit });
    }
    let mut e = Enumerator::new(&plan.problem.at_order(n_max), opts.threads)?;
    let mut last = e.level().clone();
    let mut value = None;
    while e.level().n < n_max {
        if opts.budget.is_some_and(|b| e.counts().nodes > b) {
            break;
        }
        e.step();
        if e.level().codes.is_empty() {
            value = Some(e.level().n);
            break;
        }
        last = e.level().clone();
    }

    let mut witness = widen(&last.coloring(0, k));
    let mut lower = last.n + 1;
    if value.is_none() {
        if let Some(g) = constructed.filter(|g| g.n() >= lower && sweep(plan.family, &plan.params, g).is_ok()) {
            lower = g.n() + 1;
            witness = g;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        'orders: while lower <= 128 {
            for _ in 0..RANDOM_TRIES {
                let g: Wide = match plan.family {
                    Family::Ramsey => Wide::from_fn(lower, 2, |_, _| rng.gen_range(1..=2))?,
                    Family::GallaiRamsey => random_gallai(lower, k, rng.gen())?,
                };
                if sweep(plan.family, &plan.params, &g).is_ok() {
                    witness = g;
                    lower += 1;
                    continue 'orders;
                }
            }
            break;
        }
    }
    let counts = e.counts();
    Ok(SearchReport {
        family: plan.family,
        params: plan.params,
        value,
        lower: value.unwrap_or(lower),
        upper: value,
        witness_file: None,
        stats: SearchStats {
            nodes: counts.nodes,
            canonical: counts.canonical,
            rejected: counts.rejected,
            ms: start.elapsed().as_millis() as u64,
        },
        witness: Some(witness),
    })
}

/// `R(C_m, C_n)`: least `N` with a color-1 `C_m` or color-2 `C_n` in every
/// 2-coloring of `K_N`.
pub fn search_ramsey(m: usize, n: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if m < 3 || n < 3 {
        return Err(Error::BadParameters(format!("cycle orders must be at least 3, got m = {m}, n = {n}")));
    }
    let mut params = BTreeMap::from([("m".to_string(), m as u64), ("n".to_string(), n as u64)]);
    if let Some(f) = ramsey_formula(m, n) {
        params.insert("formula".into(), f as u64);
    }
    let (a, b) = (m.min(n), m.max(n));
    let constructed = match build_ramsey_cycle_lower::<u128>(a, b) {
        Ok((g, _)) if m > n => Some(g.map_colors(2, |_, _, c| 3 - c)?),
        Ok((g, _)) => Some(g),
        Err(_) => None,
    };
    let plan = Plan { family: Family::Ramsey, problem: AvoidanceProblem::ramsey(1, m, n), params };
    run(plan, opts, constructed)
}

/// `gr_k(K_3 : C_m)`: least `N` with a rainbow triangle or monochromatic
/// `C_m` in every `k`-coloring of `K_N`.
pub fn search_gallai_ramsey(m: usize, k: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if m < 3 || k == 0 || k > Color::MAX as usize {
        return Err(Error::BadParameters(format!("need m >= 3 and 1 <= k <= 255, got m = {m}, k = {k}")));
    }
    let params = BTreeMap::from([("m".to_string(), m as u64), ("k".to_string(), k as u64)]);
    let constructed = match m % 2 {
        1 => build_extremal_odd::<u128>((m - 1) / 2, k).ok().map(|(g, _)| g),
        _ => None,
    };
    let plan = Plan { family: Family::GallaiRamsey, problem: AvoidanceProblem::gallai_ramsey(1, m, k), params };
    run(plan, opts, constructed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid { reason: String, witness: Option<Witness> },
}

/// Re-checks the witness and the bound arithmetic. Exhaustion is not re-run.
pub fn verify_certificate(report: &SearchReport) -> Validity {
    let invalid = |reason: String| Validity::Invalid { reason, witness: None };
    let Some(g) = &report.witness else {
        return invalid("no witness attached".into());
    };
    if let Some(v) = report.value {
        if report.lower != v || report.upper != Some(v) {
            return invalid(format!("value {v} disagrees with bounds {} / {:?}", report.lower, report.upper));
        }
    }
    if report.upper.is_some_and(|u| u < report.lower) {
        return invalid(format!("upper bound {:?} below lower bound {}", report.upper, report.lower));
    }
    if g.n() != report.witness_order() {
        return invalid(format!("witness has order {}, expected {}", g.n(), report.witness_order()));
    }
    if report.family == Family::GallaiRamsey && report.param("k").is_none() {
        return invalid("missing parameter \"k\"".into());
    }
    match sweep(report.family, &report.params, g) {
        Ok(()) => Validity::Valid,
        Err((reason, witness)) => Validity::Invalid { reason, witness },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(r: &SearchReport) -> usize {
        assert_eq!(verify_certificate(r), Validity::Valid);
        r.value.expect("exact value")
    }

    #[test]
    fn small_ramsey_values() {
        let o = SearchOptions::default();
        assert_eq!(exact(&search_ramsey(3, 3, &o).unwrap()), 6);
        assert_eq!(exact(&search_ramsey(4, 4, &o).unwrap()), 6);
        let r = search_ramsey(4, 5, &o).unwrap();
        assert_eq!(exact(&r), 7);
        assert_eq!(r.params["formula"], 7);
    }

    #[test]
    fn one_color_gallai_ramsey() {
        let o = SearchOptions::default();
        for m in [5, 7, 9] {
            assert_eq!(exact(&search_gallai_ramsey(m, 1, &o).unwrap()), m);
        }
    }

    #[test]
    fn partial_result_uses_construction() {
        let o = SearchOptions { n_max: Some(6), ..Default::default() };
        let r = search_gallai_ramsey(7, 3, &o).unwrap();
        assert_eq!(r.value, None);
        assert_eq!(r.upper, None);
        assert_eq!(r.lower, 25);
        assert_eq!(verify_certificate(&r), Validity::Valid);
    }

    #[test]
    fn over_limit() {
        let o = SearchOptions { n_max: Some(10), ..Default::default() };
        assert!(matches!(search_ramsey(5, 5, &o), Err(Error::OverLimit { .. })));
    }

    #[test]
    fn tampered_reports_fail() {
        let r = search_ramsey(3, 3, &SearchOptions::default()).unwrap();
        let mut wrong_value = r.clone();
        wrong_value.value = Some(7);
        wrong_value.lower = 7;
        wrong_value.upper = Some(7);
        assert!(matches!(verify_certificate(&wrong_value), Validity::Invalid { .. }));

        let mut mono = r.clone();
        mono.witness = Some(Wide::monochromatic(5, 1, 2).unwrap());
        let Validity::Invalid { witness: Some(w), .. } = verify_certificate(&mono) else {
            panic!("monochromatic K_5 has a triangle");
        };
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn json_field_order() {
        let r = search_ramsey(3, 3, &SearchOptions::default()).unwrap().without_timing();
        let json = serde_json::to_string(&r).unwrap();
        let keys = ["\"family\"", "\"params\"", "\"value\"", "\"lower\"", "\"upper\"", "\"witness_file\"", "\"stats\""];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        let back = SearchReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back.value, Some(6));
    }
}
