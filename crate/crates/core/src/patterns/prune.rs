use crate::dumont::Pruner;

use super::{ClassicalPattern, Matcher};

/// Abandons a prefix as soon as it contains any forbidden pattern.
///
/// Only occurrences ending at the newest entry need checking: anything
/// earlier was already rejected when its own last entry was placed.
#[derive(Debug, Clone)]
pub struct AvoidPruner {
    matchers: Vec<Matcher>,
}

impl AvoidPruner {
    pub fn new(patterns: &[ClassicalPattern]) -> Self {
        Self {
            matchers: patterns.iter().map(ClassicalPattern::matcher).collect(),
        }
    }
}

impl Pruner for AvoidPruner {
    #[inline]
    fn push(&mut self, prefix: &[u8]) -> bool {
        self.matchers.iter().all(|m| !m.occurs_ending_at_last(prefix))
    }

    #[inline]
    fn pop(&mut self) {}
}

/// Keeps prefixes with at most `target` occurrences; accepts leaves with exactly `target`.
#[derive(Debug, Clone)]
pub struct ExactPruner {
    matcher: Matcher,
    target: u64,
    /// Running occurrence count after each placed entry.
    totals: Vec<u64>,
}

impl ExactPruner {
    pub fn new(pattern: &ClassicalPattern, target: u64) -> Self {
        Self {
            matcher: pattern.matcher(),
            target,
            totals: Vec::with_capacity(32),
        }
    }

    fn current(&self) -> u64 {
        self.totals.last().copied().unwrap_or(0)
    }
}

impl Pruner for ExactPruner {
    fn push(&mut self, prefix: &[u8]) -> bool {
        let total = self.current() + self.matcher.count_ending_at_last(prefix);
        self.totals.push(total);
        total <= self.target
    }

    fn pop(&mut self) {
        self.totals.pop();
    }

    fn accept(&self, _perm: &[u8]) -> bool {
        self.current() == self.target
    }
}
