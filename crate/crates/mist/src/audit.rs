//! Corpus sweeps that measure the pipeline against the exact oracles.
//!
//! A corpus is a recipe for a stream of named instances; the audit runs the
//! approximation on each, optionally runs the exhaustive solver beside it,
//! and reports every internal-vertex count as an exact integer fraction.
//! Ratios never pass through floating point: the guarantee under test is
//! `3 * optimum <= 4 * approximation`, and integer arithmetic keeps the
//! check sharp at the boundary.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::assemble::{approx_mist, ShortCircuit};
use crate::cover::CoverMode;
use crate::gen::{
    connected_graph_classes, edge_universe, gen_random, gen_tight, graph_from_mask,
    mask_is_connected,
};
use crate::graph::Graph;
use crate::oracle::exact_mist;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// A nonnegative fraction kept in lowest terms, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "ratio denominator must be positive");
        let g = gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        let left = self.num as u128 * other.den as u128;
        let right = other.num as u128 * self.den as u128;
        left.cmp(&right)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = CorpusParseError;

    fn from_str(s: &str) -> Result<Ratio, CorpusParseError> {
        let bad = || CorpusParseError::Malformed(format!("bad ratio {s:?}"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let num = n.parse().map_err(|_| bad())?;
        let den: u64 = d.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Ratio::new(num, den))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusParseError {
    #[error("unusable corpus spec: {0}")]
    Malformed(String),
}

/// A recipe for a deterministic stream of test instances.
///
/// Text forms, one spec per string:
///
/// * `exhaustive:N`: every connected labeled graph on 2..=N vertices, N <= 7
/// * `classes:N`: one representative per isomorphism class, 2..=N, N <= 8
/// * `tight:LO..HI`: the square-chain family for k in LO..=HI
/// * `random:COUNT:n=N,m=M,seed=S`: COUNT seeded connected graphs, one per
///   seed S, S+1, ...
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    Exhaustive { max_n: usize },
    Classes { max_n: usize },
    Tight { lo: usize, hi: usize },
    Random { count: usize, n: usize, m: usize, seed: u64 },
}

impl FromStr for CorpusSpec {
    type Err = CorpusParseError;

    fn from_str(s: &str) -> Result<CorpusSpec, CorpusParseError> {
        let bad = |why: &str| CorpusParseError::Malformed(format!("{why} in {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        match kind {
            "exhaustive" => {
                let max_n: usize = rest.parse().map_err(|_| bad("bad vertex count"))?;
                if !(2..=7).contains(&max_n) {
                    return Err(bad("exhaustive corpora cover 2..=7 vertices"));
                }
                Ok(CorpusSpec::Exhaustive { max_n })
            }
            "classes" => {
                let max_n: usize = rest.parse().map_err(|_| bad("bad vertex count"))?;
                if !(2..=8).contains(&max_n) {
                    return Err(bad("class corpora cover 2..=8 vertices"));
                }
                Ok(CorpusSpec::Classes { max_n })
            }
            "tight" => {
                let (lo, hi) = rest.split_once("..").ok_or_else(|| bad("expected LO..HI"))?;
                let lo: usize = lo.parse().map_err(|_| bad("bad lower bound"))?;
                let hi: usize = hi.parse().map_err(|_| bad("bad upper bound"))?;
                if lo < 1 || hi < lo {
                    return Err(bad("need 1 <= LO <= HI"));
                }
                Ok(CorpusSpec::Tight { lo, hi })
            }
            "random" => {
                let (count, params) = rest.split_once(':').ok_or_else(|| bad("missing params"))?;
                let count: usize = count.parse().map_err(|_| bad("bad instance count"))?;
                let (mut n, mut m, mut seed) = (None, None, None);
                for field in params.split(',') {
                    let (key, value) = field.split_once('=').ok_or_else(|| bad("bad field"))?;
                    match key {
                        "n" => n = Some(value.parse().map_err(|_| bad("bad n"))?),
                        "m" => m = Some(value.parse().map_err(|_| bad("bad m"))?),
                        "seed" => seed = Some(value.parse().map_err(|_| bad("bad seed"))?),
                        _ => return Err(bad("unknown field")),
                    }
                }
                let (n, m): (usize, usize) = match (n, m) {
                    (Some(n), Some(m)) => (n, m),
                    _ => return Err(bad("need n= and m=")),
                };
                let seed = seed.ok_or_else(|| bad("need seed="))?;
                if count == 0 {
                    return Err(bad("need a positive instance count"));
                }
                if n < 2 || m + 1 < n || m > n * (n - 1) / 2 {
                    return Err(bad("infeasible (n, m)"));
                }
                Ok(CorpusSpec::Random { count, n, m, seed })
            }
            _ => Err(bad("unknown corpus kind")),
        }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CorpusSpec::Exhaustive { max_n } => write!(f, "exhaustive:{max_n}"),
            CorpusSpec::Classes { max_n } => write!(f, "classes:{max_n}"),
            CorpusSpec::Tight { lo, hi } => write!(f, "tight:{lo}..{hi}"),
            CorpusSpec::Random { count, n, m, seed } => {
                write!(f, "random:{count}:n={n},m={m},seed={seed}")
            }
        }
    }
}

impl CorpusSpec {
    /// The instance stream, lazily generated so exhaustive corpora never
    /// materialize whole.
    pub fn instances(&self) -> Box<dyn Iterator<Item = (String, Graph)>> {
        match *self {
            CorpusSpec::Exhaustive { max_n } => Box::new((2..=max_n).flat_map(|n| {
                let universe = edge_universe(n);
                (0u64..1 << universe.len()).filter_map(move |mask| {
                    if mask_is_connected(n, &universe, mask) {
                        Some((format!("exh-n{n}-{mask}"), graph_from_mask(n, &universe, mask)))
                    } else {
                        None
                    }
                })
            })),
            CorpusSpec::Classes { max_n } => Box::new((2..=max_n).flat_map(|n| {
                connected_graph_classes(n)
                    .into_iter()
                    .enumerate()
                    .map(move |(i, g)| (format!("cls-n{n}-{i}"), g))
            })),
            CorpusSpec::Tight { lo, hi } => Box::new((lo..=hi).map(|k| {
                (format!("tight-k{k}"), gen_tight(k).expect("bounds checked at parse"))
            })),
            CorpusSpec::Random { count, n, m, seed } => {
                Box::new((0..count as u64).map(move |i| {
                    let g = gen_random(n, m, seed + i)
                        .expect("feasibility checked at parse");
                    (format!("rnd-n{n}-m{m}-s{}", seed + i), g)
                }))
            }
        }
    }
}

/// One instance's audited outcome. `error` is set when either solver
/// refused the instance; the sweep keeps going regardless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub alg_internal: usize,
    pub oracle_internal: Option<usize>,
    pub cover_edges: usize,
    pub unconstrained_edges: usize,
    pub lossy_repairs: usize,
    pub short_circuit: bool,
    pub degraded: bool,
    pub violation: bool,
    pub error: Option<String>,
}

impl AuditRecord {
    /// optimum / approximation, defined once both counts are positive.
    pub fn ratio(&self) -> Option<Ratio> {
        match (self.oracle_internal, self.alg_internal) {
            (Some(opt), alg) if alg > 0 => Some(Ratio::new(opt as u64, alg as u64)),
            _ => None,
        }
    }

    /// One-line rendering; `error=` must stay last, its message may contain
    /// anything.
    pub fn to_line(&self) -> String {
        let oracle = self
            .oracle_internal
            .map_or_else(|| "-".into(), |o| o.to_string());
        let mut line = format!(
            "id={} n={} m={} alg={} oracle={} cover={} twomatch={} lossy={} sc={} degraded={} {}",
            self.id,
            self.n,
            self.m,
            self.alg_internal,
            oracle,
            self.cover_edges,
            self.unconstrained_edges,
            self.lossy_repairs,
            self.short_circuit as u8,
            self.degraded as u8,
            if self.violation { "VIOLATION" } else { "ok" },
        );
        if let Some(e) = &self.error {
            line.push_str(" error=");
            line.push_str(e);
        }
        line
    }

    pub fn from_line(line: &str) -> Result<AuditRecord, CorpusParseError> {
        let bad = |why: &str| CorpusParseError::Malformed(format!("{why} in {line:?}"));
        let (head, error) = match line.split_once(" error=") {
            Some((head, e)) => (head, Some(e.to_string())),
            None => (line, None),
        };
        let mut fields = head.split_whitespace();
        let mut next = |prefix: &str| {
            fields
                .next()
                .and_then(|f| f.strip_prefix(prefix))
                .map(str::to_string)
                .ok_or_else(|| CorpusParseError::Malformed(format!("expected {prefix} in {line:?}")))
        };
        let id = next("id=")?;
        let n = next("n=")?.parse().map_err(|_| bad("bad n"))?;
        let m = next("m=")?.parse().map_err(|_| bad("bad m"))?;
        let alg_internal = next("alg=")?.parse().map_err(|_| bad("bad alg"))?;
        let oracle = next("oracle=")?;
        let oracle_internal = if oracle == "-" {
            None
        } else {
            Some(oracle.parse().map_err(|_| bad("bad oracle"))?)
        };
        let cover_edges = next("cover=")?.parse().map_err(|_| bad("bad cover"))?;
        let unconstrained_edges = next("twomatch=")?.parse().map_err(|_| bad("bad twomatch"))?;
        let lossy_repairs = next("lossy=")?.parse().map_err(|_| bad("bad lossy"))?;
        let short_circuit = next("sc=")? == "1";
        let degraded = next("degraded=")? == "1";
        let violation = match fields.next() {
            Some("VIOLATION") => true,
            Some("ok") => false,
            _ => return Err(bad("missing status")),
        };
        Ok(AuditRecord {
            id,
            n,
            m,
            alg_internal,
            oracle_internal,
            cover_edges,
            unconstrained_edges,
            lossy_repairs,
            short_circuit,
            degraded,
            violation,
            error,
        })
    }
}

/// All records of a sweep plus the headline numbers.
#[derive(Debug, Clone)]
pub struct AuditSummary {
    pub records: Vec<AuditRecord>,
    pub violations: usize,
    pub errors: usize,
    pub max_ratio: Option<Ratio>,
}

impl AuditSummary {
    pub fn summary_line(&self) -> String {
        let ratio = self
            .max_ratio
            .map_or_else(|| "-".into(), |r| r.to_string());
        format!(
            "instances={} violations={} errors={} max_ratio={ratio}",
            self.records.len(),
            self.violations,
            self.errors,
        )
    }
}

/// Runs the pipeline over every instance of every spec, in order, comparing
/// against the exhaustive solver when `oracle_bound` is given. A violated
/// `3 * optimum <= 4 * approximation` marks the record; solver refusals land
/// in `error` and the sweep continues either way.
pub fn ratio_audit(
    specs: &[CorpusSpec],
    mode: CoverMode,
    oracle_bound: Option<usize>,
) -> AuditSummary {
    let mut records = Vec::new();
    for spec in specs {
        for (id, g) in spec.instances() {
            records.push(audit_one(id, &g, mode, oracle_bound));
        }
    }
    let violations = records.iter().filter(|r| r.violation).count();
    let errors = records.iter().filter(|r| r.error.is_some()).count();
    let max_ratio = records.iter().filter_map(AuditRecord::ratio).max();
    AuditSummary { records, violations, errors, max_ratio }
}

fn audit_one(
    id: String,
    g: &Graph,
    mode: CoverMode,
    oracle_bound: Option<usize>,
) -> AuditRecord {
    let mut record = AuditRecord {
        id,
        n: g.n(),
        m: g.m(),
        alg_internal: 0,
        oracle_internal: None,
        cover_edges: 0,
        unconstrained_edges: 0,
        lossy_repairs: 0,
        short_circuit: false,
        degraded: false,
        violation: false,
        error: None,
    };
    match approx_mist(g, mode) {
        Ok((tree, stats)) => {
            record.alg_internal = tree.internal_count();
            record.cover_edges = stats.cover_edges;
            record.unconstrained_edges = stats.unconstrained_cover_edges;
            record.lossy_repairs = stats.lossy_repairs;
            record.short_circuit = stats.short_circuit != ShortCircuit::None;
            record.degraded = stats.degraded;
        }
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    }
    if let Some(bound) = oracle_bound {
        match exact_mist(g, bound) {
            Ok(tree) => {
                let opt = tree.internal_count();
                record.oracle_internal = Some(opt);
                record.violation = 3 * opt > 4 * record.alg_internal;
            }
            Err(e) => record.error = Some(e.to_string()),
        }
    }
    record
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_reduce_and_compare_exactly() {
        assert_eq!(Ratio::new(8, 6), Ratio::new(4, 3));
        assert_eq!(Ratio::new(8, 6).to_string(), "4/3");
        assert!(Ratio::new(98, 75) < Ratio::new(4, 3));
        assert!(Ratio::new(10, 9) < Ratio::new(98, 75));
        assert_eq!("22/18".parse::<Ratio>(), Ok(Ratio::new(11, 9)));
        assert!("7/0".parse::<Ratio>().is_err());
        // Cross multiplication must survive values near the u64 edge.
        let big = u64::MAX - 1;
        assert!(Ratio::new(big - 2, big) < Ratio::new(big, big - 2));
    }

    #[test]
    fn corpus_specs_parse_and_round_trip() {
        let good = [
            "exhaustive:5",
            "classes:8",
            "tight:2..25",
            "random:10:n=8,m=12,seed=7",
        ];
        for text in good {
            let spec: CorpusSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let bad = [
            "exhaustive:9",
            "classes:1",
            "tight:5..2",
            "tight:0..3",
            "random:5:n=4,m=99,seed=0",
            "random:0:n=4,m=3,seed=0",
            "random:5:n=4,m=3",
            "banana",
            "exhaustive",
        ];
        for text in bad {
            assert!(text.parse::<CorpusSpec>().is_err(), "accepted {text:?}");
        }
    }

    #[test]
    fn instance_streams_are_named_and_connected() {
        let spec: CorpusSpec = "random:5:n=8,m=10,seed=3".parse().unwrap();
        let first: Vec<_> = spec.instances().collect();
        let second: Vec<_> = spec.instances().collect();
        assert_eq!(first.len(), 5);
        for ((id, g), (id2, g2)) in first.iter().zip(&second) {
            assert_eq!(id, id2);
            assert_eq!(g.edges(), g2.edges());
            assert!(g.is_connected());
        }
        let ids: Vec<_> = CorpusSpec::Tight { lo: 2, hi: 4 }
            .instances()
            .map(|(id, _)| id)
            .collect();
        assert_eq!(ids, ["tight-k2", "tight-k3", "tight-k4"]);
    }

    #[test]
    fn tight_family_earns_three_per_square() {
        let summary = ratio_audit(
            &[CorpusSpec::Tight { lo: 2, hi: 6 }],
            CoverMode::Heuristic,
            None,
        );
        assert_eq!(summary.errors, 0);
        assert_eq!(summary.violations, 0);
        for (record, k) in summary.records.iter().zip(2usize..) {
            assert_eq!(record.alg_internal, 3 * k, "{}", record.id);
            assert_eq!(record.lossy_repairs, 0);
        }
        let with_oracle = ratio_audit(
            &[CorpusSpec::Tight { lo: 2, hi: 3 }],
            CoverMode::Heuristic,
            Some(12),
        );
        assert_eq!(with_oracle.max_ratio, Some(Ratio::new(10, 9)));
        assert_eq!(with_oracle.violations, 0);
    }

    #[test]
    fn exhaustive_small_sweep_is_clean_and_optimal() {
        let summary = ratio_audit(
            &[CorpusSpec::Exhaustive { max_n: 5 }],
            CoverMode::exact(),
            Some(12),
        );
        assert_eq!(summary.records.len(), 771);
        assert_eq!(summary.violations, 0);
        assert_eq!(summary.errors, 0);
        // Up to five vertices the 4/3 margin leaves no integer room below
        // the optimum, so the pipeline is forced to match it exactly.
        assert_eq!(summary.max_ratio, Some(Ratio::new(1, 1)));
    }

    #[test]
    fn oracle_refusals_are_recorded_not_fatal() {
        let summary = ratio_audit(
            &[CorpusSpec::Tight { lo: 4, hi: 4 }],
            CoverMode::Heuristic,
            Some(12),
        );
        assert_eq!(summary.records.len(), 1);
        assert_eq!(summary.errors, 1);
        let record = &summary.records[0];
        assert_eq!(record.alg_internal, 12);
        assert!(record.error.as_deref().unwrap().contains("16"));
        assert!(summary.summary_line().starts_with("instances=1"));
    }

    #[test]
    fn record_lines_round_trip() {
        let summary = ratio_audit(
            &[
                CorpusSpec::Tight { lo: 2, hi: 4 },
                CorpusSpec::Random { count: 3, n: 7, m: 9, seed: 11 },
            ],
            CoverMode::exact(),
            Some(12),
        );
        for record in &summary.records {
            let parsed = AuditRecord::from_line(&record.to_line()).unwrap();
            assert_eq!(&parsed, record);
        }
        let mut forged = summary.records[0].clone();
        forged.violation = true;
        forged.error = Some("solver said no: n too big".into());
        assert_eq!(AuditRecord::from_line(&forged.to_line()).unwrap(), forged);
    }
}
