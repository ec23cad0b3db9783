//! Exact maximum-family search: the literal backtracking baseline, an
//! optimized branch-and-bound engine with incremental shattering checks,
//! a decision mode for target sizes, and extremal enumeration up to
//! isomorphism.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analysis::{canonical_form, transversal_number};
use crate::error::{Error, Result};
use crate::sets::{all_ksets, Family, GroundSet, KSet};
use crate::shatter::{pattern_index, uniform_vc_at_most, ShatterCache};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SearchMode {
    Maximize,
    Decide { target: usize },
    EnumerateExtremal,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub mode: SearchMode,
    pub time_limit: Option<Duration>,
    pub workers: usize,
    pub symmetry_breaking: bool,
    pub baseline: bool,
    /// Best-remaining-count bound prune (maximize mode).
    pub bound_prune: bool,
    /// Optional family whose extensions are searched first in decide mode.
    pub seed_prefix: Option<Family>,
}

impl SearchConfig {
    pub fn new(n: u32, k: u32, d: u32) -> SearchConfig {
        SearchConfig {
            n,
            k,
            d,
            mode: SearchMode::Maximize,
            time_limit: None,
            workers: 1,
            symmetry_breaking: true,
            baseline: false,
            bound_prune: true,
            seed_prefix: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n > 64 {
            return Err(Error::GroundSetSize(self.n as u64));
        }
        if self.k != self.d + 1 {
            return Err(Error::InvalidParameter(format!(
                "k must equal d+1 (got k = {}, d = {})",
                self.k, self.d
            )));
        }
        if self.n < self.k || self.k == 0 {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= k <= n (got k = {}, n = {})",
                self.k, self.n
            )));
        }
        if self.k > 6 {
            return Err(Error::Capability(format!(
                "search engine supports k <= 6, got {}",
                self.k
            )));
        }
        if let SearchMode::Decide { target } = self.mode {
            if target == 0 {
                return Err(Error::InvalidParameter("decide target must be >= 1".into()));
            }
        }
        Ok(())
    }
}

/// Flag-level echo of the configuration, for JSON reports.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub mode: SearchMode,
    pub time_limit_secs: Option<u64>,
    pub workers: usize,
    pub symmetry_breaking: bool,
    pub baseline: bool,
    pub bound_prune: bool,
    pub seeded: bool,
}

impl From<&SearchConfig> for ConfigEcho {
    fn from(c: &SearchConfig) -> ConfigEcho {
        ConfigEcho {
            n: c.n,
            k: c.k,
            d: c.d,
            mode: c.mode.clone(),
            time_limit_secs: c.time_limit.map(|t| t.as_secs()),
            workers: c.workers,
            symmetry_breaking: c.symmetry_breaking,
            baseline: c.baseline,
            bound_prune: c.bound_prune,
            seeded: c.seed_prefix.is_some(),
        }
    }
}

/// One isomorphism class of extremal families.
#[derive(Debug, Clone)]
pub struct ExtremalClass {
    pub canonical: Vec<u8>,
    pub representative: Family,
    pub tau: usize,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub optimum: usize,
    /// Decision outcome in decide mode; `None` when timed out.
    pub exists: Option<bool>,
    pub certificate: Option<Family>,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
    pub incomplete: bool,
    pub classes: Option<Vec<ExtremalClass>>,
    pub config: ConfigEcho,
}

// ---------------------------------------------------------------------------
// literal published baseline
// ---------------------------------------------------------------------------

/// No (d+1)-subset of [n] is shattered; equivalent to VC-dimension <= d
/// because shattering is downward closed.
fn vc_at_most_naive(members: &[u64], n: u32, d: u32) -> bool {
    let k = d + 1;
    for s in all_ksets(n, k) {
        let full = (1u64 << (1u64 << k)) - 1;
        let mut seen = 0u64;
        for &m in members {
            seen |= 1u64 << pattern_index(m & s.bits(), s.bits());
            if seen == full {
                return false;
            }
        }
    }
    true
}

/// The backtracking algorithm exactly as published: candidates in a fixed
/// order, depth pointer `j`, cursor `l`, running maximum `M`, and a full
/// VC-dimension re-test of the extended family at every step.
fn baseline_search(cfg: &SearchConfig, deadline: Option<Instant>) -> Result<SearchReport> {
    let start = Instant::now();
    let cands = all_ksets(cfg.n, cfg.k);
    let m = cands.len();
    let mut nodes: u64 = 0;
    let mut incomplete = false;

    // i_1 = 1, F = {F_{i_1}}, j = 2, l = i_1, M = 1
    let mut chosen: Vec<usize> = vec![0];
    let mut fam: Vec<u64> = vec![cands[0].bits()];
    let mut j: usize = 2;
    let mut l: usize = 1; // 1-based cursor, l = i_1
    let mut best: usize = 1;
    let mut best_cert: Vec<u64> = fam.clone();

    while j >= 2 {
        l += 1;
        if l > m {
            // record M and backtrack: l = i_{j-1}, j = j - 1
            if j - 1 > best {
                best = j - 1;
                best_cert = fam.clone();
            }
            l = chosen[j - 2] + 1;
            j -= 1;
            chosen.truncate(j - 1);
            fam.truncate(j.saturating_sub(1));
        } else {
            let idx = l - 1; // 0-based candidate index
            fam.push(cands[idx].bits());
            nodes += 1;
            if vc_at_most_naive(&fam, cfg.n, cfg.d) {
                chosen.push(idx);
                if chosen.len() > best {
                    best = chosen.len();
                    best_cert = fam.clone();
                }
                j += 1;
            } else {
                fam.pop();
            }
            if nodes % 4096 == 0 {
                if let Some(dl) = deadline {
                    if Instant::now() >= dl {
                        incomplete = true;
                        break;
                    }
                }
            }
        }
    }

    let ground = GroundSet::new(cfg.n)?;
    let certificate = Family::new(
        ground,
        best_cert.iter().map(|&b| KSet::from_bits(b)).collect(),
    )?;
    verify_certificate(&certificate, cfg.d)?;
    Ok(SearchReport {
        optimum: best,
        exists: None,
        certificate: Some(certificate),
        nodes_expanded: nodes,
        elapsed: start.elapsed(),
        incomplete,
        classes: None,
        config: cfg.into(),
    })
}

// ---------------------------------------------------------------------------
// optimized engine
// ---------------------------------------------------------------------------

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    timed_out: AtomicBool,
    next_task: AtomicUsize,
}

enum Goal {
    Maximize,
    /// Stop at the first family of exactly this size.
    Decide(usize),
    /// Collect every family of exactly this size.
    Enumerate(usize),
}

struct Worker<'a> {
    cands: &'a [u64],
    shared: &'a Shared,
    deadline: Option<Instant>,
    bound_prune: bool,
    goal: Goal,
    cache: ShatterCache,
    chosen: Vec<usize>,
    local_nodes: u64,
    best_cert: Option<(usize, Vec<u64>)>,
    solutions: Vec<Vec<u64>>,
}

impl<'a> Worker<'a> {
    fn current_family(&self, extra_prefix: &[u64]) -> Vec<u64> {
        let mut out = extra_prefix.to_vec();
        out.extend(self.chosen.iter().map(|&i| self.cands[i]));
        out
    }

    fn record_if_best(&mut self, extra_prefix: &[u64]) {
        let size = extra_prefix.len() + self.chosen.len();
        let prev = self.shared.best.fetch_max(size, Ordering::SeqCst);
        if size > prev {
            self.best_cert = Some((size, self.current_family(extra_prefix)));
        }
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes % 4096 == 0 {
            if self.shared.stop.load(Ordering::Relaxed) {
                return false;
            }
            if let Some(dl) = self.deadline {
                if Instant::now() >= dl {
                    self.shared.timed_out.store(true, Ordering::SeqCst);
                    self.shared.stop.store(true, Ordering::SeqCst);
                    return false;
                }
            }
        }
        true
    }

    /// Explores extensions using candidates with index >= start.
    /// `extra_prefix` holds seed members that are not part of the
    /// candidate index space. Returns false when stopped early.
    fn dfs(&mut self, start: usize, extra_prefix: &[u64]) -> bool {
        let m = self.cands.len();
        let size = extra_prefix.len() + self.chosen.len();
        for l in start..m {
            match self.goal {
                Goal::Maximize => {
                    if self.bound_prune
                        && size + (m - l) <= self.shared.best.load(Ordering::Relaxed)
                    {
                        break;
                    }
                }
                Goal::Decide(target) | Goal::Enumerate(target) => {
                    if size + (m - l) < target {
                        break;
                    }
                }
            }
            if !self.tick() {
                return false;
            }
            if self.cache.admits(self.cands[l]) {
                self.cache.push_unchecked(self.cands[l]);
                self.chosen.push(l);
                let new_size = size + 1;
                let mut descend = true;
                match self.goal {
                    Goal::Maximize => self.record_if_best(extra_prefix),
                    Goal::Decide(target) => {
                        if new_size == target {
                            self.solutions.push(self.current_family(extra_prefix));
                            self.shared.stop.store(true, Ordering::SeqCst);
                            return false;
                        }
                    }
                    Goal::Enumerate(target) => {
                        if new_size == target {
                            self.solutions.push(self.current_family(extra_prefix));
                            descend = false; // target is the maximum, nothing extends it
                        }
                    }
                }
                if descend && !self.dfs(l + 1, extra_prefix) {
                    return false;
                }
                self.chosen.pop();
                self.cache.pop();
            }
        }
        true
    }
}

/// Valid prefixes used as parallel tasks: all singletons (or only the
/// colex-first under symmetry breaking) and all valid extensions of one
/// more candidate.
fn make_tasks(cands: &[u64], k: u32, symmetry: bool) -> Vec<Vec<usize>> {
    let firsts: Vec<usize> = if symmetry {
        vec![0]
    } else {
        (0..cands.len()).collect()
    };
    let mut tasks = Vec::new();
    for a in firsts {
        let mut cache = ShatterCache::new(k).expect("k validated");
        cache.push_unchecked(cands[a]);
        let mut extended = false;
        for b in a + 1..cands.len() {
            if cache.admits(cands[b]) {
                tasks.push(vec![a, b]);
                extended = true;
            }
        }
        if !extended {
            tasks.push(vec![a]);
        }
    }
    tasks
}

struct EngineOutcome {
    best: usize,
    best_cert: Option<Vec<u64>>,
    solutions: Vec<Vec<u64>>,
    nodes: u64,
    timed_out: bool,
}

fn run_engine(
    cfg: &SearchConfig,
    cands: &[u64],
    goal_of: impl Fn() -> Goal + Sync,
    extra_prefix: &[u64],
    prefix_cache: &ShatterCache,
    deadline: Option<Instant>,
    initial_best: usize,
) -> Result<EngineOutcome> {
    let shared = Shared {
        best: AtomicUsize::new(initial_best),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        timed_out: AtomicBool::new(false),
        next_task: AtomicUsize::new(0),
    };
    // symmetry breaking assumes the family may be relabeled, which a
    // seed prefix rules out
    let symmetry = cfg.symmetry_breaking && extra_prefix.is_empty();
    let tasks = make_tasks(cands, cfg.k, symmetry);

    // tasks of length 1 or 2 are themselves families; count them toward
    // maximize/enumerate goals
    let mut seed_solutions: Vec<Vec<u64>> = Vec::new();
    let mut seed_best: Option<(usize, Vec<u64>)> = None;
    {
        let base = extra_prefix.len();
        let mut consider = |members: Vec<u64>| {
            let size = members.len();
            match goal_of() {
                Goal::Maximize => {
                    if size > shared.best.load(Ordering::SeqCst) {
                        shared.best.store(size, Ordering::SeqCst);
                        seed_best = Some((size, members));
                    }
                }
                Goal::Decide(t) | Goal::Enumerate(t) => {
                    if size == t {
                        seed_solutions.push(members);
                    }
                }
            }
        };
        if base > 0 {
            consider(extra_prefix.to_vec());
        }
        for t in &tasks {
            for cut in 1..=t.len() {
                let mut fam = extra_prefix.to_vec();
                fam.extend(t[..cut].iter().map(|&i| cands[i]));
                consider(fam);
            }
        }
        // with symmetry breaking, singleton/pair prefixes not containing
        // candidate 0 are isomorphic to ones that do, so the size bound
        // still covers them
    }

    if matches!(goal_of(), Goal::Decide(_)) && !seed_solutions.is_empty() {
        return Ok(EngineOutcome {
            best: shared.best.load(Ordering::SeqCst),
            best_cert: seed_best.map(|(_, f)| f),
            solutions: seed_solutions,
            nodes: 0,
            timed_out: false,
        });
    }

    let workers = cfg.workers.max(1).min(tasks.len().max(1));
    let results: Mutex<Vec<(Option<(usize, Vec<u64>)>, Vec<Vec<u64>>)>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut agg_best: Option<(usize, Vec<u64>)> = None;
                let mut agg_solutions: Vec<Vec<u64>> = Vec::new();
                loop {
                    if shared.stop.load(Ordering::SeqCst) {
                        break;
                    }
                    let t = shared.next_task.fetch_add(1, Ordering::SeqCst);
                    if t >= tasks.len() {
                        break;
                    }
                    let task = &tasks[t];
                    // prefixes at or past the target size were already
                    // counted while seeding
                    if let Goal::Decide(t) | Goal::Enumerate(t) = goal_of() {
                        if extra_prefix.len() + task.len() >= t {
                            continue;
                        }
                    }
                    let mut cache = prefix_cache.clone();
                    for &i in task {
                        cache.push_unchecked(cands[i]);
                    }
                    let mut w = Worker {
                        cands,
                        shared: &shared,
                        deadline,
                        bound_prune: cfg.bound_prune,
                        goal: goal_of(),
                        cache,
                        chosen: task.clone(),
                        local_nodes: 0,
                        best_cert: None,
                        solutions: Vec::new(),
                    };
                    let start = task.last().copied().map_or(0, |i| i + 1);
                    w.dfs(start, extra_prefix);
                    shared.nodes.fetch_add(w.local_nodes, Ordering::SeqCst);
                    if let Some((s, f)) = w.best_cert {
                        if agg_best.as_ref().map_or(true, |(bs, _)| s > *bs) {
                            agg_best = Some((s, f));
                        }
                    }
                    agg_solutions.extend(w.solutions);
                }
                results.lock().unwrap().push((agg_best, agg_solutions));
            });
        }
    });

    let collected = results.into_inner().unwrap();
    let mut best_cert = seed_best;
    let mut solutions = seed_solutions;
    for (b, sols) in collected {
        if let Some((s, f)) = b {
            if best_cert.as_ref().map_or(true, |(bs, _)| s > *bs) {
                best_cert = Some((s, f));
            }
        }
        solutions.extend(sols);
    }
    let timed_out = shared.timed_out.load(Ordering::SeqCst);
    Ok(EngineOutcome {
        best: shared.best.load(Ordering::SeqCst),
        best_cert: best_cert.map(|(_, f)| f),
        solutions,
        nodes: shared.nodes.load(Ordering::SeqCst),
        timed_out,
    })
}

fn to_family(n: u32, masks: &[u64]) -> Result<Family> {
    let ground = GroundSet::new(n)?;
    Family::new(ground, masks.iter().map(|&b| KSet::from_bits(b)).collect())
}

/// Independent non-incremental verification of a returned certificate.
fn verify_certificate(family: &Family, d: u32) -> Result<()> {
    if family.is_empty() || uniform_vc_at_most(family, d)? {
        Ok(())
    } else {
        Err(Error::InvalidParameter(
            "internal error: search produced a certificate failing verification".into(),
        ))
    }
}

/// Exact maximum size of a k-uniform family on [n] with VC-dimension
/// at most d (k = d+1), with a certificate.
pub fn max_family_size(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let deadline = cfg.time_limit.map(|t| Instant::now() + t);
    if cfg.baseline {
        return baseline_search(cfg, deadline);
    }
    let start = Instant::now();
    let cands: Vec<u64> = all_ksets(cfg.n, cfg.k).iter().map(|s| s.bits()).collect();
    let base_cache = ShatterCache::new(cfg.k)?;
    let outcome = run_engine(
        cfg,
        &cands,
        || Goal::Maximize,
        &[],
        &base_cache,
        deadline,
        0,
    )?;
    let certificate = match outcome.best_cert {
        Some(f) => to_family(cfg.n, &f)?,
        None => to_family(cfg.n, &cands[..1])?, // best is at least one member
    };
    verify_certificate(&certificate, cfg.d)?;
    let optimum = outcome.best.max(1.min(cands.len()));
    if certificate.len() != optimum {
        return Err(Error::InvalidParameter(
            "internal error: certificate size disagrees with reported optimum".into(),
        ));
    }
    Ok(SearchReport {
        optimum,
        exists: None,
        certificate: Some(certificate),
        nodes_expanded: outcome.nodes,
        elapsed: start.elapsed(),
        incomplete: outcome.timed_out,
        classes: None,
        config: cfg.into(),
    })
}

/// Finds one family of exactly the target size with VC-dimension <= d,
/// proves none exists by exhaustion, or times out.
pub fn decide_family_exists(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let target = match cfg.mode {
        SearchMode::Decide { target } => target,
        _ => {
            return Err(Error::InvalidParameter(
                "decide_family_exists requires decide mode".into(),
            ))
        }
    };
    let deadline = cfg.time_limit.map(|t| Instant::now() + t);
    let start = Instant::now();
    let all: Vec<u64> = all_ksets(cfg.n, cfg.k).iter().map(|s| s.bits()).collect();

    // phase 1: extensions of the seed only (a hint, not an exhaustion)
    if let Some(seed) = &cfg.seed_prefix {
        if seed.ground().n() != cfg.n || (seed.uniform_k() != Some(cfg.k) && !seed.is_empty()) {
            return Err(Error::InvalidParameter(
                "seed prefix must live on the search ground set with matching k".into(),
            ));
        }
        let seed_masks: Vec<u64> = seed.members().iter().map(|m| m.bits()).collect();
        let remaining: Vec<u64> = all
            .iter()
            .copied()
            .filter(|b| !seed_masks.contains(b))
            .collect();
        let mut prefix_cache = ShatterCache::new(cfg.k)?;
        let mut seed_ok = true;
        for &m in &seed_masks {
            if !prefix_cache.try_push(m) {
                seed_ok = false;
                break;
            }
        }
        if seed_ok && seed_masks.len() <= target {
            let outcome = run_engine(
                cfg,
                &remaining,
                || Goal::Decide(target),
                &seed_masks,
                &prefix_cache,
                deadline,
                0,
            )?;
            if let Some(sol) = outcome.solutions.into_iter().next() {
                let certificate = to_family(cfg.n, &sol)?;
                verify_certificate(&certificate, cfg.d)?;
                return Ok(SearchReport {
                    optimum: target,
                    exists: Some(true),
                    certificate: Some(certificate),
                    nodes_expanded: outcome.nodes,
                    elapsed: start.elapsed(),
                    incomplete: false,
                    classes: None,
                    config: cfg.into(),
                });
            }
            // fall through to the unseeded search
        }
    }

    let base_cache = ShatterCache::new(cfg.k)?;
    let outcome = run_engine(
        cfg,
        &all,
        || Goal::Decide(target),
        &[],
        &base_cache,
        deadline,
        0,
    )?;
    if let Some(sol) = outcome.solutions.into_iter().next() {
        let certificate = to_family(cfg.n, &sol)?;
        verify_certificate(&certificate, cfg.d)?;
        return Ok(SearchReport {
            optimum: target,
            exists: Some(true),
            certificate: Some(certificate),
            nodes_expanded: outcome.nodes,
            elapsed: start.elapsed(),
            incomplete: false,
            classes: None,
            config: cfg.into(),
        });
    }
    let timed_out = outcome.timed_out;
    Ok(SearchReport {
        optimum: 0,
        exists: if timed_out { None } else { Some(false) },
        certificate: None,
        nodes_expanded: outcome.nodes,
        elapsed: start.elapsed(),
        incomplete: timed_out,
        classes: None,
        config: cfg.into(),
    })
}

/// All maximum-size families up to isomorphism. Gated at n <= 7.
pub fn enumerate_extremal(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    if cfg.n > 7 {
        return Err(Error::Capability(format!(
            "extremal enumeration is gated at n <= 7, got n = {}",
            cfg.n
        )));
    }
    let deadline = cfg.time_limit.map(|t| Instant::now() + t);
    let start = Instant::now();

    let max_cfg = SearchConfig {
        mode: SearchMode::Maximize,
        ..cfg.clone()
    };
    let max_report = max_family_size(&max_cfg)?;
    if max_report.incomplete {
        return Err(Error::Capability(
            "time limit exhausted before the optimum was established".into(),
        ));
    }
    let optimum = max_report.optimum;

    let cands: Vec<u64> = all_ksets(cfg.n, cfg.k).iter().map(|s| s.bits()).collect();
    let base_cache = ShatterCache::new(cfg.k)?;
    let outcome = run_engine(
        cfg,
        &cands,
        || Goal::Enumerate(optimum),
        &[],
        &base_cache,
        deadline,
        0,
    )?;
    if outcome.timed_out {
        return Err(Error::Capability(
            "time limit exhausted during extremal enumeration".into(),
        ));
    }

    // dedupe by canonical form; set-union reduction is schedule-independent
    let mut classes: std::collections::BTreeMap<Vec<u8>, Family> = Default::default();
    for sol in &outcome.solutions {
        let fam = to_family(cfg.n, sol)?;
        let canon = canonical_form(&fam)?;
        classes.entry(canon).or_insert(fam);
    }
    let mut out = Vec::new();
    for (canonical, representative) in classes {
        verify_certificate(&representative, cfg.d)?;
        let tau = transversal_number(&representative)?.tau;
        out.push(ExtremalClass {
            canonical,
            representative,
            tau,
        });
    }
    Ok(SearchReport {
        optimum,
        exists: None,
        certificate: max_report.certificate,
        nodes_expanded: max_report.nodes_expanded + outcome.nodes,
        elapsed: start.elapsed(),
        incomplete: false,
        classes: Some(out),
        config: cfg.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u32) -> SearchConfig {
        SearchConfig::new(n, 3, 2)
    }

    #[test]
    fn tiny_cases_match_binomial() {
        for n in 3..=5 {
            let report = max_family_size(&cfg(n)).unwrap();
            assert_eq!(report.optimum as u64, crate::sets::binom(n as u64, 3));
        }
    }

    #[test]
    fn baseline_matches_optimized_small() {
        for n in 4..=5 {
            let base = baseline_search(&cfg(n), None).unwrap();
            let opt = max_family_size(&cfg(n)).unwrap();
            assert_eq!(base.optimum, opt.optimum);
        }
    }

    #[test]
    fn pruning_toggles_do_not_change_optimum() {
        for n in 4..=6 {
            let fast = max_family_size(&cfg(n)).unwrap();
            let slow_cfg = SearchConfig {
                symmetry_breaking: false,
                bound_prune: false,
                ..cfg(n)
            };
            let slow = max_family_size(&slow_cfg).unwrap();
            assert_eq!(fast.optimum, slow.optimum);
            assert!(slow.nodes_expanded >= fast.nodes_expanded);
        }
    }

    #[test]
    fn worker_count_does_not_change_optimum() {
        for workers in [1, 2, 4] {
            let report = max_family_size(&SearchConfig {
                workers,
                ..cfg(6)
            })
            .unwrap();
            assert_eq!(report.optimum, 13);
        }
    }

    #[test]
    fn decide_finds_13_on_6() {
        let report = decide_family_exists(&SearchConfig {
            mode: SearchMode::Decide { target: 13 },
            ..cfg(6)
        })
        .unwrap();
        assert_eq!(report.exists, Some(true));
        assert_eq!(report.certificate.unwrap().len(), 13);
    }

    #[test]
    fn decide_refutes_14_on_6() {
        let report = decide_family_exists(&SearchConfig {
            mode: SearchMode::Decide { target: 14 },
            ..cfg(6)
        })
        .unwrap();
        assert_eq!(report.exists, Some(false));
    }

    #[test]
    fn enumerate_gate() {
        assert!(matches!(
            enumerate_extremal(&SearchConfig {
                mode: SearchMode::EnumerateExtremal,
                ..cfg(8)
            }),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn invalid_configs_rejected() {
        assert!(max_family_size(&SearchConfig::new(6, 3, 3)).is_err());
        assert!(max_family_size(&SearchConfig::new(2, 3, 2)).is_err());
        assert!(decide_family_exists(&SearchConfig {
            mode: SearchMode::Decide { target: 0 },
            ..cfg(6)
        })
        .is_err());
    }
}
