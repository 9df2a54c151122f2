//! Reproduction of the known results on path, cycle, wheel and complete
//! graph positions, with one [`CheckReport`] per check.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::atomic::StarOrder;
use crate::cgt::{Outcome, Relation};
use crate::engine::{Engine, EngineConfig};
use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilySpec};
use crate::graphgames::{canonical_code, variant_moves, Graph, Side, VariantKind};

/// One checked instance. `expected` is `None` for informational rows, which
/// fail only when the oracle disagrees with the engine.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub expected: Option<String>,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub variant: Option<VariantKind>,
    pub family: Option<FamilyKind>,
    pub range: String,
    pub instances: Vec<InstanceResult>,
    pub pass: bool,
    /// Wall time; left out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(check_name: &str, variant: Option<VariantKind>, family: Option<FamilyKind>, range: String) -> Self {
        Self {
            check_name: check_name.to_string(),
            variant,
            family,
            range,
            instances: Vec::new(),
            pass: true,
            elapsed: Duration::ZERO,
        }
    }

    fn push(&mut self, row: InstanceResult) {
        self.pass &= row.pass;
        self.instances.push(row);
    }

    fn assert_row(&mut self, instance: String, expected: String, computed: String) {
        let pass = expected == computed;
        self.push(InstanceResult { instance, expected: Some(expected), computed, oracle: None, pass });
    }

    fn info_row(&mut self, instance: String, computed: String) {
        self.push(InstanceResult { instance, expected: None, computed, oracle: None, pass: true });
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|r| !r.pass)
    }

    /// Header line plus one line per failing row.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {}{}{} [{}]: {} instances, {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check_name,
            self.variant.map(|v| format!(" {v}")).unwrap_or_default(),
            self.family.map(|f| format!(" {f}")).unwrap_or_default(),
            self.range,
            self.instances.len(),
            humantime(self.elapsed),
        );
        for r in self.failures() {
            s.push_str(&format!(
                "\n  {}: expected {}, computed {}{}",
                r.instance,
                r.expected.as_deref().unwrap_or("-"),
                r.computed,
                r.oracle.as_ref().map(|o| format!(", oracle {o}")).unwrap_or_default()
            ));
        }
        s
    }
}

fn humantime(d: Duration) -> String {
    if d.as_secs() >= 1 {
        format!("{:.2}s", d.as_secs_f64())
    } else {
        format!("{}ms", d.as_millis())
    }
}

fn timed(f: impl FnOnce() -> Result<CheckReport>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Expected atomic weight of the mutual-failures path on `n` vertices.
pub fn expected_path_aw(n: usize) -> i64 {
    if n <= 4 {
        0
    } else {
        n.div_ceil(4) as i64 - 1
    }
}

/// Atomic weights of mutual-failures paths `2..=max_n`.
pub fn check_table_aw(engine: &mut Engine, max_n: usize) -> Result<CheckReport> {
    if max_n < 12 {
        return Err(Error::BadParams(format!("table check needs max n of at least 12, got {max_n}")));
    }
    timed(|| {
        let mut report = CheckReport::new("table-aw", Some(VariantKind::MutualFailures), Some(FamilyKind::Path), format!("2..={max_n}"));
        for n in 2..=max_n {
            let g = engine.game_of(&FamilySpec::Path(n).build()?, VariantKind::MutualFailures)?;
            let aw = engine.atomic_weight(g)?;
            let computed = aw.display(&engine.store).to_string();
            report.assert_row(format!("path {n}"), expected_path_aw(n).to_string(), computed);
        }
        Ok(report)
    })
}

/// Range on which a winner result is known, and the winner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WinnerClaim {
    pub from: usize,
    pub except: Option<usize>,
    pub winner: Outcome,
}

impl WinnerClaim {
    pub fn covers(&self, n: usize) -> bool {
        n >= self.from && self.except != Some(n)
    }
}

pub fn winner_claim(variant: VariantKind, family: FamilyKind) -> Option<WinnerClaim> {
    use FamilyKind::*;
    use VariantKind::*;
    let claim = |from, except, winner| Some(WinnerClaim { from, except, winner });
    match (variant, family) {
        (Classic, Path) => claim(5, None, Outcome::LeftWins),
        (Classic, Cycle) | (Classic, Wheel) => claim(3, Some(5), Outcome::LeftWins),
        (Classic, Complete) => claim(3, None, Outcome::LeftWins),
        (ForbiddenLeaf, Path) | (ForbiddenLeaf, Cycle) => claim(8, Some(11), Outcome::RightWins),
        (ForbiddenLeaf, Complete) => claim(5, None, Outcome::LeftWins),
        (MutualFailures, Path) => claim(9, None, Outcome::LeftWins),
        (MutualFailures, Cycle) | (MutualFailures, Wheel) => claim(10, None, Outcome::LeftWins),
        (MutualFailures, Complete) => claim(5, None, Outcome::LeftWins),
        _ => None,
    }
}

/// Default upper end of the winner ranges.
pub fn default_winner_limit(variant: VariantKind, family: FamilyKind) -> usize {
    use FamilyKind::*;
    use VariantKind::*;
    match (variant, family) {
        (_, Path) => 24,
        (Classic, Cycle) => 24,
        (ForbiddenLeaf, Cycle) => 20,
        (MutualFailures, Cycle) => 16,
        (_, Wheel) => 10,
        (_, Complete) => 7,
        _ => 8,
    }
}

/// Outcomes of family members `from..=to`. Members covered by a known
/// result are asserted; the rest are informational. Members within the
/// oracle budget are also solved by the oracle, and any disagreement fails.
pub fn check_winners(
    engine: &mut Engine,
    variant: VariantKind,
    family: FamilyKind,
    from: usize,
    to: usize,
) -> Result<CheckReport> {
    let claim = winner_claim(variant, family);
    let from = from.max(family.min_n());
    timed(|| {
        let mut report = CheckReport::new("winners", Some(variant), Some(family), format!("{from}..={to}"));
        for n in from..=to {
            let spec = FamilySpec::of(family, n);
            let graph = spec.build()?;
            let g = engine.game_of(&graph, variant)?;
            let computed = engine.outcome(g)?;
            let expected = claim.filter(|c| c.covers(n)).map(|c| c.winner);
            let oracle =
                if engine.oracle.within_budget(&graph) { Some(engine.oracle_outcome(&graph, variant)?) } else { None };
            let pass = expected.is_none_or(|e| e == computed) && oracle.is_none_or(|o| o == computed);
            report.push(InstanceResult {
                instance: spec.to_string(),
                expected: expected.map(|e| e.to_string()),
                computed: computed.to_string(),
                oracle: oracle.map(|o| o.to_string()),
                pass,
            });
        }
        Ok(report)
    })
}

/// Classic path values are never below 0; forbidden-leaf path values are
/// never above 0.
pub fn check_path_value_signs(engine: &mut Engine, variant: VariantKind, max_n: usize) -> Result<CheckReport> {
    let forbidden = match variant {
        VariantKind::Classic => Relation::Less,
        VariantKind::ForbiddenLeaf => Relation::Greater,
        VariantKind::MutualFailures => {
            return Err(Error::BadParams("path sign check applies to classic and fl only".into()));
        }
    };
    timed(|| {
        let mut report = CheckReport::new("signs", Some(variant), Some(FamilyKind::Path), format!("1..={max_n}"));
        for n in 1..=max_n {
            let g = engine.game_of(&FamilySpec::Path(n).build()?, variant)?;
            let relation = engine.store.compare(g, engine.store.zero())?;
            let expected = format!("not {}", relation_word(forbidden));
            let computed = if relation == forbidden { relation_word(relation).to_string() } else { expected.clone() };
            report.push(InstanceResult {
                instance: format!("path {n}"),
                expected: Some(expected.clone()),
                computed: format!("{} ({})", relation_word(relation), engine.store.render(g)),
                oracle: None,
                pass: computed == expected,
            });
        }
        Ok(report)
    })
}

fn relation_word(r: Relation) -> &'static str {
    match r {
        Relation::Less => "less",
        Relation::Equal => "equal",
        Relation::Greater => "greater",
        Relation::Confused => "confused",
    }
}

fn star_order_word(o: StarOrder) -> &'static str {
    match o {
        StarOrder::GreaterThanFarStar => "greater",
        StarOrder::LessThanFarStar => "less",
        StarOrder::ConfusedWithFarStar => "confused",
    }
}

/// Mutual-failures paths on at least 5 vertices exceed far star and have
/// atomic weight at least 1. Shorter paths are informational.
pub fn check_farstar_paths(engine: &mut Engine, max_n: usize) -> Result<CheckReport> {
    if max_n < 5 {
        return Err(Error::BadParams(format!("far-star check needs max n of at least 5, got {max_n}")));
    }
    timed(|| {
        let mut report = CheckReport::new("farstar", Some(VariantKind::MutualFailures), Some(FamilyKind::Path), format!("2..={max_n}"));
        for n in 2..=max_n {
            let g = engine.game_of(&FamilySpec::Path(n).build()?, VariantKind::MutualFailures)?;
            let order = engine.remote_star_order(g)?;
            let aw = engine.atomic_weight(g)?;
            let aw_text = aw.display(&engine.store).to_string();
            let computed = format!("{}, aw {aw_text}", star_order_word(order));
            if n >= 5 {
                let ok = order == StarOrder::GreaterThanFarStar && aw.integer_value.is_some_and(|w| w >= 1);
                let expected = "greater, aw >= 1".to_string();
                let shown = if ok { expected.clone() } else { computed };
                report.assert_row(format!("path {n}"), expected, shown);
            } else {
                report.info_row(format!("path {n}"), computed);
            }
        }
        Ok(report)
    })
}

/// Number of connected graphs on `n` vertices up to isomorphism.
pub const CONNECTED_GRAPH_COUNTS: [usize; 10] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

/// All connected graphs on `1..=max_vertices` vertices up to isomorphism,
/// grouped by vertex count. Every connected graph on `n` vertices arises by
/// joining a new vertex to a connected graph on `n - 1` vertices.
pub fn connected_graphs(max_vertices: usize) -> Result<Vec<Vec<Graph>>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_vertices == 0 {
        return Ok(levels);
    }
    levels.push(vec![Graph::empty(1)?]);
    for n in 2..=max_vertices {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &levels[n - 2] {
            for subset in 1u64..(1u64 << (n - 1)) {
                let mut g = Graph::empty(n)?;
                for (u, v) in base.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..n - 1 {
                    if subset >> u & 1 == 1 {
                        g.add_edge(u, n - 1);
                    }
                }
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// On every connected graph: a classic Right move implies a classic Left
/// move, and a forbidden-leaf Left move implies a forbidden-leaf Right move.
pub fn check_bias_props(max_vertices: usize) -> Result<CheckReport> {
    if max_vertices > 8 {
        return Err(Error::TooLarge { vertices: max_vertices, limit: 8 });
    }
    timed(|| {
        let mut report = CheckReport::new("bias", None, None, format!("1..={max_vertices} vertices"));
        for (i, level) in connected_graphs(max_vertices)?.iter().enumerate() {
            let n = i + 1;
            let classic = level
                .iter()
                .filter(|g| {
                    !variant_moves(g, Side::Right, VariantKind::Classic).is_empty()
                        && variant_moves(g, Side::Left, VariantKind::Classic).is_empty()
                })
                .count();
            let fl = level
                .iter()
                .filter(|g| {
                    !variant_moves(g, Side::Left, VariantKind::ForbiddenLeaf).is_empty()
                        && variant_moves(g, Side::Right, VariantKind::ForbiddenLeaf).is_empty()
                })
                .count();
            let expected_count = CONNECTED_GRAPH_COUNTS[i];
            for (variant, bad) in [(VariantKind::Classic, classic), (VariantKind::ForbiddenLeaf, fl)] {
                report.assert_row(
                    format!("{variant} n={n}"),
                    format!("{expected_count} graphs, 0 violations"),
                    format!("{} graphs, {bad} violations", level.len()),
                );
            }
        }
        Ok(report)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    TableAw,
    Winners,
    Signs,
    Farstar,
    Bias,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::TableAw, Suite::Winners, Suite::Signs, Suite::Farstar, Suite::Bias];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TableAw => "table-aw",
            Suite::Winners => "winners",
            Suite::Signs => "signs",
            Suite::Farstar => "farstar",
            Suite::Bias => "bias",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

/// Which checks to run and on what ranges.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub engine: EngineConfig,
    pub suites: Vec<Suite>,
    pub variants: Vec<VariantKind>,
    pub families: Vec<FamilyKind>,
    /// Overrides the start of every winner range.
    pub from: Option<usize>,
    /// Overrides the end of every winner range.
    pub to: Option<usize>,
    pub table_max_n: usize,
    pub signs_max_n: usize,
    pub farstar_max_n: usize,
    pub bias_max_vertices: usize,
    pub jobs: usize,
}

/// Component limit used by the verifier, large enough for paths on 28 vertices.
pub const VERIFY_MAX_COMPONENT: usize = 32;

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            engine: EngineConfig { max_component: VERIFY_MAX_COMPONENT, ..EngineConfig::default() },
            suites: Suite::ALL.to_vec(),
            variants: VariantKind::ALL.to_vec(),
            families: vec![FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Wheel, FamilyKind::Complete],
            from: None,
            to: None,
            table_max_n: 28,
            signs_max_n: 24,
            farstar_max_n: 20,
            bias_max_vertices: 7,
            jobs: 1,
        }
    }
}

type Job<'a> = Box<dyn Fn() -> Result<CheckReport> + Send + Sync + 'a>;

fn jobs(config: &VerifyConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let fresh = move || Engine::new(config.engine);
    for &suite in &config.suites {
        match suite {
            Suite::TableAw => jobs.push(Box::new(move || check_table_aw(&mut fresh(), config.table_max_n))),
            Suite::Winners => {
                for &variant in &config.variants {
                    for &family in &config.families {
                        if winner_claim(variant, family).is_none() {
                            continue;
                        }
                        let from = config.from.unwrap_or(family.min_n());
                        let to = config.to.unwrap_or(default_winner_limit(variant, family));
                        jobs.push(Box::new(move || check_winners(&mut fresh(), variant, family, from, to)));
                    }
                }
            }
            Suite::Signs => {
                for &variant in &config.variants {
                    if variant != VariantKind::MutualFailures {
                        jobs.push(Box::new(move || check_path_value_signs(&mut fresh(), variant, config.signs_max_n)));
                    }
                }
            }
            Suite::Farstar => jobs.push(Box::new(move || check_farstar_paths(&mut fresh(), config.farstar_max_n))),
            Suite::Bias => jobs.push(Box::new(move || check_bias_props(config.bias_max_vertices))),
        }
    }
    jobs
}

/// Runs the configured checks. Reports come back in a fixed order whatever
/// the number of worker threads.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let jobs = jobs(config);
    let workers = config.jobs.clamp(1, jobs.len().max(1));
    if workers == 1 {
        return jobs.iter().map(|job| job()).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<CheckReport>>>> = Mutex::new((0..jobs.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(job) = jobs.get(i) else { break };
                let report = job();
                results.lock().expect("verify worker panicked")[i] = Some(report);
            });
        }
    });
    results.into_inner().expect("verify worker panicked").into_iter().map(|r| r.expect("every job ran")).collect()
}
