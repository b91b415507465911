//! Classical and vincular pattern containment, and pattern-restricted
//! enumeration of Dumont permutations.

mod matcher;
mod prune;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::dumont::{self, DumontError, DumontKind, NoPrune};
use crate::perm::{PermError, Permutation};

pub(crate) use matcher::Matcher;
pub use prune::{AvoidPruner, ExactPruner};

/// Hosts longer than this are refused for patterns of length 3 or more.
pub const MAX_HOST_LEN: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Dumont(#[from] DumontError),
    #[error("pattern must have at least one letter")]
    EmptyPattern,
    #[error("cannot parse vincular pattern {input:?}: {reason}")]
    Vincular { input: String, reason: String },
    #[error("host of length {host} exceeds the counting envelope ({MAX_HOST_LEN}) for a pattern of length {pattern}")]
    HostTooLong { host: usize, pattern: usize },
    #[error("an avoidance query needs at least one forbidden pattern")]
    NoPatterns,
}

/// A classical pattern: any non-empty permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalPattern(Permutation);

impl ClassicalPattern {
    pub fn new(perm: Permutation) -> Result<Self, PatternError> {
        if perm.is_empty() {
            return Err(PatternError::EmptyPattern);
        }
        Ok(Self(perm))
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn matcher(&self) -> Matcher {
        Matcher::new(self.0.values(), 0)
    }

    /// Parses a list such as `1342,1423`. Commas separate patterns here, so
    /// each list entry must use the digit-string form.
    pub fn parse_list(s: &str) -> Result<Vec<Self>, PatternError> {
        s.split([',', ' ']).filter(|t| !t.is_empty()).map(str::parse).collect()
    }
}

impl FromStr for ClassicalPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(s.parse()?)
    }
}

impl fmt::Display for ClassicalPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for ClassicalPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClassicalPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A pattern whose consecutive letters may be required to be adjacent in the host.
///
/// Text form uses dashes for allowed gaps: in `2-31` the `3` and `1` must be
/// adjacent while `2` may sit anywhere to their left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VincularPattern {
    perm: Permutation,
    /// Bit `j` (0-based) set: letters `j+1` and `j+2` are adjacent.
    adjacent: u64,
}

impl VincularPattern {
    /// `adjacent_pairs` holds 1-based `i` for each required pair `(i, i+1)`.
    pub fn new(perm: Permutation, adjacent_pairs: &[usize]) -> Result<Self, PatternError> {
        if perm.is_empty() {
            return Err(PatternError::EmptyPattern);
        }
        let mut adjacent = 0u64;
        for &i in adjacent_pairs {
            if i == 0 || i >= perm.len() {
                return Err(PatternError::Vincular {
                    input: perm.to_string(),
                    reason: format!("pair ({i}, {}) is not a pair of consecutive letters", i + 1),
                });
            }
            adjacent |= 1 << (i - 1);
        }
        Ok(Self { perm, adjacent })
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// 1-based `i` for each adjacency requirement `(i, i+1)`.
    pub fn adjacent_pairs(&self) -> Vec<usize> {
        (0..self.perm.len().saturating_sub(1))
            .filter(|j| self.adjacent & (1 << j) != 0)
            .map(|j| j + 1)
            .collect()
    }

    pub(crate) fn matcher(&self) -> Matcher {
        Matcher::new(self.perm.values(), self.adjacent)
    }
}

impl From<ClassicalPattern> for VincularPattern {
    fn from(p: ClassicalPattern) -> Self {
        Self {
            perm: p.0,
            adjacent: 0,
        }
    }
}

impl FromStr for VincularPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PatternError::Vincular {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut letters = Vec::new();
        let mut pairs = Vec::new();
        for block in s.trim().split('-') {
            if block.is_empty() {
                return Err(err("empty block between dashes"));
            }
            for (i, c) in block.chars().enumerate() {
                let d = c.to_digit(10).ok_or_else(|| err("letters must be digits"))?;
                if i > 0 {
                    pairs.push(letters.len());
                }
                letters.push(d as usize);
            }
        }
        let perm = Permutation::new(letters)?;
        Self::new(perm, &pairs)
    }
}

impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, v) in self.perm.values().iter().enumerate() {
            if j > 0 && self.adjacent & (1 << (j - 1)) == 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn guard(host: &Permutation, pattern_len: usize) -> Result<(), PatternError> {
    if host.len() > MAX_HOST_LEN && pattern_len >= 3 {
        Err(PatternError::HostTooLong {
            host: host.len(),
            pattern: pattern_len,
        })
    } else {
        Ok(())
    }
}

/// Number of index subsets of `p` order-isomorphic to `q`.
pub fn count_occurrences(p: &Permutation, q: &ClassicalPattern) -> Result<u64, PatternError> {
    guard(p, q.len())?;
    Ok(q.matcher().count(p.values()))
}

/// Whether `p` avoids `q`; stops at the first witness.
pub fn avoids(p: &Permutation, q: &ClassicalPattern) -> bool {
    !q.matcher().occurs(p.values())
}

pub fn avoids_all(p: &Permutation, patterns: &[ClassicalPattern]) -> bool {
    patterns.iter().all(|q| avoids(p, q))
}

/// Number of occurrences of a vincular pattern, honouring adjacency.
pub fn count_vincular(p: &Permutation, q: &VincularPattern) -> Result<u64, PatternError> {
    guard(p, q.perm.len())?;
    Ok(q.matcher().count(p.values()))
}

/// 1-based host positions of the leftmost occurrence of `q` in `p`.
pub fn first_occurrence(p: &Permutation, q: &ClassicalPattern) -> Option<Vec<usize>> {
    q.matcher()
        .first_occurrence(p.values())
        .map(|idx| idx.into_iter().map(|i| i + 1).collect())
}

/// What to count among Dumont permutations of one kind and size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Restriction {
    /// Avoid every listed pattern.
    Avoid(Vec<ClassicalPattern>),
    /// Contain the pattern exactly `occurrences` times.
    Exactly {
        pattern: ClassicalPattern,
        occurrences: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceQuery {
    pub kind: DumontKind,
    pub size: usize,
    pub restriction: Restriction,
}

impl AvoidanceQuery {
    pub fn avoiding(kind: DumontKind, size: usize, patterns: Vec<ClassicalPattern>) -> Result<Self, PatternError> {
        if patterns.is_empty() {
            return Err(PatternError::NoPatterns);
        }
        dumont::check_size(size)?;
        Ok(Self {
            kind,
            size,
            restriction: Restriction::Avoid(patterns),
        })
    }

    pub fn exactly(kind: DumontKind, size: usize, pattern: ClassicalPattern, occurrences: u64) -> Result<Self, PatternError> {
        dumont::check_size(size)?;
        Ok(Self {
            kind,
            size,
            restriction: Restriction::Exactly { pattern, occurrences },
        })
    }

    /// Visits every matching permutation in lexicographic order, starting below `prefix`.
    pub fn visit_from<V: FnMut(&[u8])>(&self, prefix: &[u8], visit: V) -> Result<(), PatternError> {
        match &self.restriction {
            Restriction::Avoid(patterns) => {
                let mut pruner = AvoidPruner::new(patterns);
                dumont::generate_from(self.kind, self.size, prefix, &mut pruner, visit)?;
            }
            Restriction::Exactly { pattern, occurrences } => {
                let mut pruner = ExactPruner::new(pattern, *occurrences);
                dumont::generate_from(self.kind, self.size, prefix, &mut pruner, visit)?;
            }
        }
        Ok(())
    }

    pub fn visit<V: FnMut(&[u8])>(&self, visit: V) -> Result<(), PatternError> {
        self.visit_from(&[], visit)
    }

    /// Prefixes of length `depth` that survive both the Dumont rule and the restriction.
    pub fn shards(&self, depth: usize) -> Result<Vec<Vec<u8>>, PatternError> {
        Ok(match &self.restriction {
            Restriction::Avoid(patterns) => {
                dumont::shard_prefixes(self.kind, self.size, depth, &mut AvoidPruner::new(patterns))?
            }
            Restriction::Exactly { pattern, occurrences } => dumont::shard_prefixes(
                self.kind,
                self.size,
                depth,
                &mut ExactPruner::new(pattern, *occurrences),
            )?,
        })
    }
}

/// Avoiders (or exact-occurrence members) of the query, lexicographically.
pub fn generate_avoiders(query: &AvoidanceQuery) -> Result<Vec<Permutation>, PatternError> {
    let mut out = Vec::new();
    query.visit(|p| out.push(Permutation::from_trusted(p)))?;
    Ok(out)
}

pub fn count_avoiders(query: &AvoidanceQuery) -> Result<u64, PatternError> {
    let mut n = 0u64;
    query.visit(|_| n += 1)?;
    Ok(n)
}

/// `|{p in D^kind_size : p contains q exactly r times}|`.
pub fn count_exact_occurrences(
    kind: DumontKind,
    size: usize,
    q: &ClassicalPattern,
    r: u64,
) -> Result<u64, PatternError> {
    count_avoiders(&AvoidanceQuery::exactly(kind, size, q.clone(), r)?)
}

/// Unpruned membership listing, used where a caller needs every member anyway.
pub fn all_members(kind: DumontKind, size: usize) -> Result<Vec<Permutation>, PatternError> {
    let mut out = Vec::new();
    dumont::generate_from(kind, size, &[], &mut NoPrune, |p| out.push(Permutation::from_trusted(p)))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn q(s: &str) -> ClassicalPattern {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Permutation> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn occurrence_counts() {
        assert_eq!(count_occurrences(&p("26483751"), &q("132")).unwrap(), 13);
        assert_eq!(count_occurrences(&p("26483751"), &q("1234")).unwrap(), 0);
        assert_eq!(count_occurrences(&p("123"), &q("12")).unwrap(), 3);
        let witnesses = [[1usize, 2, 7], [1, 4, 6], [3, 4, 7]]; // 265, 287, 475
        let host = p("26483751");
        for w in witnesses {
            let sub: Vec<u8> = w.iter().map(|&i| host.at(i) as u8).collect();
            assert_eq!(Permutation::standardize(&sub), p("132"));
        }
    }

    #[test]
    fn avoidance() {
        assert!(avoids(&p("2143"), &q("321")));
        assert!(avoids(&p("435621"), &q("132")));
        assert!(!avoids(&p("435621"), &q("321")));
        assert!(avoids(&Permutation::empty(), &q("12")));
        assert!(avoids_all(&p("2143"), &[q("321"), q("123")]));
    }

    #[test]
    fn vincular_grammar_and_counts() {
        let v: VincularPattern = "2-31".parse().unwrap();
        assert_eq!(v.adjacent_pairs(), vec![2]);
        assert_eq!(v.to_string(), "2-31");
        let w: VincularPattern = "13-2".parse().unwrap();
        assert_eq!(w.adjacent_pairs(), vec![1]);
        assert_eq!(count_vincular(&p("3421"), &v).unwrap(), 1);
        assert_eq!(count_vincular(&p("3421"), &w).unwrap(), 0);
        assert_eq!(count_vincular(&p("12345"), &v).unwrap(), 0);
        assert!("2--31".parse::<VincularPattern>().is_err());
        assert!("2-3x".parse::<VincularPattern>().is_err());
        let classical: VincularPattern = "2-3-1".parse().unwrap();
        assert!(classical.adjacent_pairs().is_empty());
    }

    #[test]
    fn host_envelope_guard() {
        let long = Permutation::identity(25);
        assert!(matches!(
            count_occurrences(&long, &q("123")),
            Err(PatternError::HostTooLong { .. })
        ));
        assert_eq!(count_occurrences(&long, &q("12")).unwrap(), 300);
    }

    #[test]
    fn d4_1342_avoiders_of_size_8() {
        let got = generate_avoiders(&AvoidanceQuery::avoiding(DumontKind::D4, 8, vec![q("1342")]).unwrap()).unwrap();
        assert_eq!(got.len(), 8);
        assert!(got.contains(&p("16325478")));
    }

    #[test]
    fn d1_321_avoiders_are_the_pair_swaps() {
        for n in 0..=5 {
            let got = generate_avoiders(&AvoidanceQuery::avoiding(DumontKind::D1, 2 * n, vec![q("321")]).unwrap()).unwrap();
            let expected: Vec<u8> = (1..=n as u8).flat_map(|k| [2 * k, 2 * k - 1]).collect();
            assert_eq!(got, vec![Permutation::new(expected).unwrap()]);
        }
    }

    #[test]
    fn d4_1234_small_sets() {
        // 132654 and 143265 are often listed here, but neither is D4
        assert!(!dumont::is_dumont(DumontKind::D4, &p("132654")).unwrap());
        assert!(!dumont::is_dumont(DumontKind::D4, &p("143265")).unwrap());
        let listed = set(&["", "12", "1342", "1432", "136254", "143652", "153264", "163254"]);
        let mut got = BTreeSet::new();
        for n in 0..=3 {
            let query = AvoidanceQuery::avoiding(DumontKind::D4, 2 * n, vec![q("1234")]).unwrap();
            got.extend(generate_avoiders(&query).unwrap());
        }
        assert_eq!(got, listed);
        let counts: Vec<u64> = (0..=6)
            .map(|n| count_avoiders(&AvoidanceQuery::avoiding(DumontKind::D4, 2 * n, vec![q("1234")]).unwrap()).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 0, 0, 0]);
    }

    #[test]
    fn closed_counts_small_n() {
        for n in 1..=6u64 {
            let size = 2 * n as usize;
            let c1324 = count_avoiders(&AvoidanceQuery::avoiding(DumontKind::D4, size, vec![q("1324")]).unwrap()).unwrap();
            assert_eq!(c1324, n * n - n + 1);
            let c231 = count_avoiders(&AvoidanceQuery::avoiding(DumontKind::D2, size, vec![q("231")]).unwrap()).unwrap();
            assert_eq!(c231, 1 << (n - 1));
        }
    }

    #[test]
    fn exact_occurrences() {
        let witnesses = generate_avoiders(&AvoidanceQuery::exactly(DumontKind::D4, 6, q("321"), 1).unwrap()).unwrap();
        assert!(witnesses.contains(&p("135462")));
        assert!(witnesses.contains(&p("136254")));
        // C6 - 3 C5 - C4 + 3 C3 at n = 3
        assert_eq!(witnesses.len() as u64, 132 + 3 * 5 - 3 * 42 - 14);
        assert_eq!(count_exact_occurrences(DumontKind::D4, 4, &q("321"), 1).unwrap(), 1);
        for n in 0..=6 {
            assert_eq!(count_exact_occurrences(DumontKind::D1, 2 * n, &q("132"), 1).unwrap(), 0);
        }
        // r = 0 coincides with avoidance
        let avoid = count_avoiders(&AvoidanceQuery::avoiding(DumontKind::D1, 8, vec![q("2143")]).unwrap()).unwrap();
        assert_eq!(count_exact_occurrences(DumontKind::D1, 8, &q("2143"), 0).unwrap(), avoid);
    }

    #[test]
    fn query_validation() {
        assert_eq!(
            AvoidanceQuery::avoiding(DumontKind::D1, 4, vec![]),
            Err(PatternError::NoPatterns)
        );
        assert!(matches!(
            AvoidanceQuery::avoiding(DumontKind::D1, 5, vec![q("12")]),
            Err(PatternError::Dumont(DumontError::OddSize(5)))
        ));
    }

    #[test]
    fn pattern_lists() {
        assert_eq!(ClassicalPattern::parse_list("1342,1423").unwrap(), vec![q("1342"), q("1423")]);
        assert!(ClassicalPattern::parse_list("11").is_err());
    }
}
