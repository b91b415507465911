//! Prefix-sharded parallel runs with an optional wall-clock budget and a
//! resumable plain-text checkpoint.
//!
//! Checkpoint lines look like `job-name 1,4,3 : 12 0 7`: the job, the shard
//! prefix (`-` when empty), and the shard's partial counts.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::HarnessError;

pub const THREADS_ENV: &str = "DUMONT_THREADS";

/// Knobs shared by every sharded computation.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Worker cap; `None` reads `DUMONT_THREADS`, then falls back to rayon's default.
    pub threads: Option<usize>,
    /// Shards not started before this much time has passed are skipped.
    pub budget: Option<Duration>,
    pub checkpoint: Option<PathBuf>,
}

impl RunOptions {
    pub fn resolved_threads(&self) -> Result<usize, HarnessError> {
        if let Some(t) = self.threads {
            return Ok(t.max(1));
        }
        match std::env::var(THREADS_ENV) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .map(|t| t.max(1))
                .map_err(|_| HarnessError::Config(format!("{THREADS_ENV}={v:?} is not a worker count"))),
            Err(_) => Ok(rayon::current_num_threads()),
        }
    }

    pub(crate) fn pool(&self) -> Result<rayon::ThreadPool, HarnessError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.resolved_threads()?)
            .build()
            .map_err(|e| HarnessError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardOutcome {
    /// Element-wise sum over finished shards.
    pub totals: Vec<u64>,
    pub shards_done: usize,
    pub shards_total: usize,
}

impl ShardOutcome {
    pub fn complete(&self) -> bool {
        self.shards_done == self.shards_total
    }
}

fn prefix_key(prefix: &[u8]) -> String {
    if prefix.is_empty() {
        "-".to_string()
    } else {
        prefix.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn add_into(acc: &mut Vec<u64>, part: &[u64]) {
    if acc.len() < part.len() {
        acc.resize(part.len(), 0);
    }
    for (a, p) in acc.iter_mut().zip(part) {
        *a += p;
    }
}

/// Finished shards recorded in a checkpoint file, keyed by `(job, prefix)`.
#[derive(Debug, Default)]
pub struct Checkpoint {
    done: HashMap<(String, String), Vec<u64>>,
    writer: Option<Mutex<File>>,
}

impl Checkpoint {
    pub fn open(path: Option<&Path>) -> Result<Self, HarnessError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let io = |e: std::io::Error| HarnessError::Io(format!("{}: {e}", path.display()));
        let mut done = HashMap::new();
        if path.exists() {
            for (i, line) in BufReader::new(File::open(path).map_err(io)?).lines().enumerate() {
                let line = line.map_err(io)?;
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let bad = || HarnessError::Checkpoint(format!("{}:{}: malformed line", path.display(), i + 1));
                let (head, counts) = line.split_once(':').ok_or_else(bad)?;
                let mut head = head.split_whitespace();
                let (job, prefix) = (head.next().ok_or_else(bad)?, head.next().ok_or_else(bad)?);
                let counts = counts
                    .split_whitespace()
                    .map(|c| c.parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                done.insert((job.to_string(), prefix.to_string()), counts);
            }
        }
        let fresh = !path.exists();
        let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
        if fresh {
            writeln!(file, "# dumont checkpoint: job prefix : counts").map_err(io)?;
        }
        Ok(Self {
            done,
            writer: Some(Mutex::new(file)),
        })
    }

    fn lookup(&self, job: &str, prefix: &str) -> Option<&Vec<u64>> {
        self.done.get(&(job.to_string(), prefix.to_string()))
    }

    fn record(&self, job: &str, prefix: &str, counts: &[u64]) -> Result<(), HarnessError> {
        let Some(writer) = &self.writer else {
            return Ok(());
        };
        let text: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
        let mut file = writer.lock().expect("checkpoint writer poisoned");
        writeln!(file, "{job} {prefix} : {}", text.join(" "))
            .and_then(|_| file.flush())
            .map_err(|e| HarnessError::Io(e.to_string()))
    }
}

/// Runs `work` on every prefix, reusing and extending the checkpoint.
pub fn run_sharded<F>(
    job: &str,
    prefixes: &[Vec<u8>],
    opts: &RunOptions,
    checkpoint: &Checkpoint,
    started: Instant,
    work: F,
) -> Result<ShardOutcome, HarnessError>
where
    F: Fn(&[u8]) -> Result<Vec<u64>, HarnessError> + Sync,
{
    let pool = opts.pool()?;
    let results: Vec<Option<Vec<u64>>> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let key = prefix_key(prefix);
                if let Some(saved) = checkpoint.lookup(job, &key) {
                    return Ok(Some(saved.clone()));
                }
                if opts.budget.is_some_and(|b| started.elapsed() >= b) {
                    return Ok(None);
                }
                let counts = work(prefix)?;
                checkpoint.record(job, &key, &counts)?;
                Ok(Some(counts))
            })
            .collect::<Result<_, HarnessError>>()
    })?;
    let mut totals = Vec::new();
    let mut shards_done = 0;
    for r in results.iter().flatten() {
        add_into(&mut totals, r);
        shards_done += 1;
    }
    Ok(ShardOutcome {
        totals,
        shards_done,
        shards_total: prefixes.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checkpoint_resume_skips_finished_shards() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.txt");
        let prefixes: Vec<Vec<u8>> = (1..=6).map(|v| vec![v]).collect();
        let opts = RunOptions {
            threads: Some(2),
            ..Default::default()
        };
        let ck = Checkpoint::open(Some(&path)).unwrap();
        let first = run_sharded("job", &prefixes, &opts, &ck, Instant::now(), |p| Ok(vec![p[0] as u64, 1])).unwrap();
        assert_eq!(first.totals, vec![21, 6]);
        drop(ck);

        let ck = Checkpoint::open(Some(&path)).unwrap();
        let again = run_sharded("job", &prefixes, &opts, &ck, Instant::now(), |_| {
            Err(HarnessError::Config("should not rerun".into()))
        })
        .unwrap();
        assert_eq!(again, first);
    }

    #[test]
    fn zero_budget_skips_everything() {
        let opts = RunOptions {
            threads: Some(1),
            budget: Some(Duration::ZERO),
            checkpoint: None,
        };
        let out = run_sharded("j", &[vec![1], vec![2]], &opts, &Checkpoint::default(), Instant::now(), |_| Ok(vec![1])).unwrap();
        assert!(!out.complete());
        assert_eq!(out.shards_done, 0);
    }
}
