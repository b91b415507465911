//! Verification suites, conjecture experiments and text diagrams.

mod conjecture;
mod diagram;
mod shard;
mod theorems;

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dumont::{self, DumontError, DumontKind};
use crate::gfseries::{self, SeriesError};
use crate::patterns::{self, AvoidanceQuery, ClassicalPattern, PatternError};
use crate::perm::Permutation;
use theorems::{Expected, Restrict, Theorem};

pub use conjecture::{
    conjecture1_counts, conjecture2_distribution, Conjecture1Report, Conjecture1Row, Conjecture2Verdict,
    DistributionTable, Relation,
};
pub use diagram::render_diagram;
pub use shard::{run_sharded, Checkpoint, RunOptions, ShardOutcome, THREADS_ENV};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}; expected one of {1}")]
    UnknownSuite(String, String),
    #[error("{what} must be at most {limit}, got {got}")]
    TooLarge { what: &'static str, limit: usize, got: usize },
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Dumont(#[from] DumontError),
    #[error("i/o: {0}")]
    Io(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error("configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    D1Len3,
    D2Len3,
    D2Len4,
    D1Pairs,
    D4Avoid,
    D4Single,
    D1D2Single,
    Genocchi,
    S3,
    All,
}

impl Suite {
    pub const ALL: &'static [Suite] = &[
        Suite::D1Len3,
        Suite::D2Len3,
        Suite::D2Len4,
        Suite::D1Pairs,
        Suite::D4Avoid,
        Suite::D4Single,
        Suite::D1D2Single,
        Suite::Genocchi,
        Suite::S3,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::D1Len3 => "d1_len3",
            Suite::D2Len3 => "d2_len3",
            Suite::D2Len4 => "d2_len4",
            Suite::D1Pairs => "d1_pairs",
            Suite::D4Avoid => "d4_avoid",
            Suite::D4Single => "d4_single",
            Suite::D1D2Single => "d1d2_single",
            Suite::Genocchi => "genocchi",
            Suite::S3 => "s3",
            Suite::All => "all",
        }
    }

    fn theorems(self) -> Vec<Theorem> {
        use theorems::*;
        match self {
            Suite::D1Len3 => D1_LEN3.to_vec(),
            Suite::D2Len3 => D2_LEN3.to_vec(),
            Suite::D2Len4 => D2_LEN4.to_vec(),
            Suite::D1Pairs => D1_PAIRS.to_vec(),
            Suite::D4Avoid => D4_AVOID.to_vec(),
            Suite::D4Single => D4_SINGLE.to_vec(),
            Suite::D1D2Single => D1D2_SINGLE.to_vec(),
            Suite::Genocchi | Suite::S3 => Vec::new(),
            Suite::All => [D1_LEN3, D2_LEN3, D2_LEN4, D1_PAIRS, D4_AVOID, D4_SINGLE, D1D2_SINGLE].concat(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.iter().copied().find(|x| x.name() == s.trim()).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            HarnessError::UnknownSuite(s.to_string(), names.join(", "))
        })
    }
}

/// One theorem checked at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub theorem: String,
    pub n: u64,
    pub enumerated: String,
    pub formula: String,
    pub matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: u64,
    pub rows: Vec<ReportRow>,
    pub overall: bool,
}

impl VerificationReport {
    fn new(suite: &str, max_n: u64, rows: Vec<ReportRow>) -> Self {
        let overall = rows.iter().all(|r| r.matches);
        Self {
            suite: suite.to_string(),
            max_n,
            rows,
            overall,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    /// Drops timing data so two runs compare byte for byte.
    pub fn without_timings(mut self) -> Self {
        for r in &mut self.rows {
            r.elapsed_ms = None;
        }
        self
    }

    /// Aligned plain-text table.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = self.rows.iter().map(|r| r.theorem.len()).max().unwrap_or(0);
        let _ = writeln!(out, "suite {} (n <= {})", self.suite, self.max_n);
        for r in &self.rows {
            let flag = if r.matches { "ok" } else { "MISMATCH" };
            let _ = write!(
                out,
                "{:<w$}  n={:<2}  enumerated={}  formula={}  {}",
                r.theorem, r.n, r.enumerated, r.formula, flag
            );
            if let Some(ms) = r.elapsed_ms {
                let _ = write!(out, "  {ms}ms");
            }
            out.push('\n');
        }
        let verdict = if self.overall { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "overall {verdict} ({} rows, {} mismatches)", self.rows.len(), self.failures().count());
        out
    }
}

fn parse_patterns(pats: &[&str]) -> Vec<ClassicalPattern> {
    pats.iter().map(|p| p.parse().expect("theorem table patterns are valid")).collect()
}

fn query(kind: DumontKind, n: u64, restrict: Restrict) -> Result<AvoidanceQuery, PatternError> {
    let size = 2 * n as usize;
    match restrict {
        Restrict::Avoid(pats) => AvoidanceQuery::avoiding(kind, size, parse_patterns(pats)),
        Restrict::Exactly(pat, r) => AvoidanceQuery::exactly(kind, size, pat.parse()?, r),
    }
}

fn show_set(set: &[Permutation]) -> String {
    if set.len() <= 6 {
        let items: Vec<String> = set.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", items.join(" "))
    } else {
        format!("<{} members>", set.len())
    }
}

fn theorem_range(t: &Theorem, max_n: u64) -> std::ops::RangeInclusive<u64> {
    match t.expected {
        Expected::Closed(id) => {
            let (lo, hi) = id.validity();
            lo..=hi.map_or(max_n, |h| h.min(max_n))
        }
        Expected::Set { min_n, .. } => min_n..=max_n,
        Expected::SameSetAs(_) => 0..=max_n,
    }
}

fn check(t: &Theorem, n: u64) -> Result<ReportRow, HarnessError> {
    let started = Instant::now();
    let q = query(t.kind, n, t.restrict)?;
    let sets = |got: Vec<Permutation>, want: Vec<Permutation>| {
        (show_set(&got), show_set(&want), got == want)
    };
    let (enumerated, formula, matches) = match t.expected {
        Expected::Closed(id) => {
            let e = patterns::count_avoiders(&q)?.to_string();
            let f = gfseries::closed_form(id, n)?.to_string();
            let m = e == f;
            (e, f, m)
        }
        Expected::Set { members, .. } => {
            let mut want = members(n as usize).unwrap_or_default();
            want.sort();
            sets(patterns::generate_avoiders(&q)?, want)
        }
        Expected::SameSetAs(other) => {
            let q2 = query(t.kind, n, Restrict::Avoid(other))?;
            sets(patterns::generate_avoiders(&q)?, patterns::generate_avoiders(&q2)?)
        }
    };
    Ok(ReportRow {
        theorem: t.label.to_string(),
        n,
        enumerated,
        formula,
        matches,
        elapsed_ms: Some(started.elapsed().as_millis() as u64),
    })
}

fn genocchi_rows(max_n: u64) -> Result<Vec<ReportRow>, HarnessError> {
    let g = gfseries::genocchi::genocchi_list(max_n + 1)?;
    let mut rows = Vec::new();
    for kind in DumontKind::ALL {
        for n in 0..=max_n {
            let started = Instant::now();
            let count = dumont::count(kind, 2 * n as usize)?;
            let formula = &g[n as usize];
            rows.push(ReportRow {
                theorem: format!("|{kind}_2n| = G_2n+2"),
                n,
                enumerated: count.to_string(),
                formula: formula.to_string(),
                matches: count.to_string() == formula.to_string(),
                elapsed_ms: Some(started.elapsed().as_millis() as u64),
            });
        }
    }
    Ok(rows)
}

/// Next permutation in lexicographic order, or `false` after the last one.
fn next_permutation(w: &mut [u8]) -> bool {
    let Some(i) = w.windows(2).rposition(|p| p[0] < p[1]) else {
        return false;
    };
    let j = w.iter().rposition(|&x| x > w[i]).expect("a larger entry exists");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// Brute-force `|S_n(t)| = C_n` for every `t` in `S_3` and `n <= n_max`.
pub fn sanity_s3(n_max: u64) -> Result<VerificationReport, HarnessError> {
    if n_max > 9 {
        return Err(HarnessError::TooLarge {
            what: "n for the S3 sanity suite",
            limit: 9,
            got: n_max as usize,
        });
    }
    let taus = ["123", "132", "213", "231", "312", "321"];
    let mut rows = Vec::new();
    for tau in taus {
        let q: ClassicalPattern = tau.parse()?;
        for n in 0..=n_max {
            let started = Instant::now();
            let mut w: Vec<u8> = (1..=n as u8).collect();
            let mut count = 0u64;
            loop {
                if patterns::avoids(&Permutation::from_trusted(&w), &q) {
                    count += 1;
                }
                if !next_permutation(&mut w) {
                    break;
                }
            }
            let formula = gfseries::catalan(n);
            rows.push(ReportRow {
                theorem: format!("S_n({tau})"),
                n,
                enumerated: count.to_string(),
                formula: formula.to_string(),
                matches: formula == count.into(),
                elapsed_ms: Some(started.elapsed().as_millis() as u64),
            });
        }
    }
    Ok(VerificationReport::new("s3", n_max, rows))
}

/// Checks every theorem of `suite` for `n <= max_n`, using default run options.
pub fn run_suite(suite: Suite, max_n: u64) -> Result<VerificationReport, HarnessError> {
    run_suite_with(suite, max_n, &RunOptions::default())
}

pub fn run_suite_with(suite: Suite, max_n: u64, opts: &RunOptions) -> Result<VerificationReport, HarnessError> {
    if max_n > 7 {
        return Err(HarnessError::TooLarge {
            what: "max n for verification suites",
            limit: 7,
            got: max_n as usize,
        });
    }
    let tasks: Vec<(Theorem, u64)> = suite
        .theorems()
        .into_iter()
        .flat_map(|t| theorem_range(&t, max_n).map(move |n| (t, n)))
        .collect();
    let mut rows: Vec<ReportRow> = opts
        .pool()?
        .install(|| tasks.par_iter().map(|(t, n)| check(t, *n)).collect::<Result<_, _>>())?;
    if matches!(suite, Suite::Genocchi | Suite::All) {
        rows.extend(genocchi_rows(max_n.min(6))?);
    }
    if matches!(suite, Suite::S3 | Suite::All) {
        rows.extend(sanity_s3(max_n.min(9))?.rows);
    }
    Ok(VerificationReport::new(suite.name(), max_n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(HarnessError::UnknownSuite(..))));
    }

    #[test]
    fn s3_calibration() {
        let r = sanity_s3(6).unwrap();
        assert!(r.overall);
        let row = r.rows.iter().find(|r| r.theorem == "S_n(123)" && r.n == 5).unwrap();
        assert_eq!(row.enumerated, "42");
        assert!(sanity_s3(10).is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::D1Len3, Suite::D4Avoid, Suite::D1D2Single] {
            let r = run_suite(s, 4).unwrap();
            assert!(r.overall, "{}", r.render_text());
        }
    }

    #[test]
    fn n_zero_rows() {
        let r = run_suite(Suite::All, 0).unwrap();
        assert!(r.overall, "{}", r.render_text());
        assert!(r.rows.iter().all(|row| row.n == 0));
    }
}
