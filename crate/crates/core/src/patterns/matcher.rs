//! Occurrence search shared by classical and vincular patterns.
//!
//! Letters of the pattern are assigned to host indices left to right; each
//! new assignment is checked against every earlier one, so inconsistent
//! partial matches are cut as early as possible.

/// A pattern compiled for repeated matching.
#[derive(Debug, Clone)]
pub(crate) struct Matcher {
    /// 0-based ranks of the pattern letters.
    letters: Vec<u8>,
    /// Bit `j` set: letters `j` and `j + 1` must occupy adjacent host indices.
    adjacent: u64,
}

impl Matcher {
    pub(crate) fn new(letters: &[u8], adjacent: u64) -> Self {
        debug_assert!(letters.len() <= 64);
        Self {
            letters: letters.iter().map(|&v| v - 1).collect(),
            adjacent,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.letters.len()
    }

    /// Number of occurrences in `host`.
    pub(crate) fn count(&self, host: &[u8]) -> u64 {
        let mut chosen = Vec::with_capacity(self.len());
        self.search(host, false, false, &mut chosen)
    }

    pub(crate) fn occurs(&self, host: &[u8]) -> bool {
        let mut chosen = Vec::with_capacity(self.len());
        self.search(host, false, true, &mut chosen) > 0
    }

    /// Occurrences whose last letter sits at the last host index.
    pub(crate) fn count_ending_at_last(&self, host: &[u8]) -> u64 {
        let mut chosen = Vec::with_capacity(self.len());
        self.search(host, true, false, &mut chosen)
    }

    pub(crate) fn occurs_ending_at_last(&self, host: &[u8]) -> bool {
        let mut chosen = Vec::with_capacity(self.len());
        self.search(host, true, true, &mut chosen) > 0
    }

    /// Host indices of the first occurrence in lexicographic index order.
    pub(crate) fn first_occurrence(&self, host: &[u8]) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(self.len());
        let mut found = None;
        self.walk(host, false, &mut chosen, &mut |c| {
            found = Some(c.to_vec());
            true
        });
        found
    }

    fn search(&self, host: &[u8], pin_last: bool, stop_early: bool, chosen: &mut Vec<usize>) -> u64 {
        let mut total = 0u64;
        self.walk(host, pin_last, chosen, &mut |_| {
            total += 1;
            stop_early
        });
        total
    }

    /// Calls `found` for every occurrence; stops when it returns `true`.
    fn walk<F: FnMut(&[usize]) -> bool>(
        &self,
        host: &[u8],
        pin_last: bool,
        chosen: &mut Vec<usize>,
        found: &mut F,
    ) -> bool {
        let k = self.letters.len();
        let n = host.len();
        if k > n {
            return false;
        }
        if k == 0 {
            return found(chosen);
        }
        self.extend(host, pin_last, chosen, found)
    }

    fn extend<F: FnMut(&[usize]) -> bool>(
        &self,
        host: &[u8],
        pin_last: bool,
        chosen: &mut Vec<usize>,
        found: &mut F,
    ) -> bool {
        let k = self.letters.len();
        let n = host.len();
        let j = chosen.len();
        if j == k {
            return found(chosen);
        }
        let lo = chosen.last().map_or(0, |&prev| prev + 1);
        // leave a host slot for every letter still to come
        let hi = n - 1 - (k - 1 - j);
        let lo = if pin_last && j + 1 == k { lo.max(n - 1) } else { lo };
        let must_touch = j > 0 && self.adjacent & (1 << (j - 1)) != 0;
        let (lo, hi) = if must_touch {
            let forced = chosen[j - 1] + 1;
            if forced < lo || forced > hi {
                return false;
            }
            (forced, forced)
        } else {
            (lo, hi)
        };
        if lo > hi {
            return false;
        }
        let letter = self.letters[j];
        let pinned_value = if pin_last { Some(host[n - 1]) } else { None };
        let last_letter = self.letters[k - 1];
        for h in lo..=hi {
            let value = host[h];
            if !chosen
                .iter()
                .zip(&self.letters)
                .all(|(&c, &l)| (host[c] < value) == (l < letter))
            {
                continue;
            }
            // cheap look-ahead against the pinned final letter
            if let Some(pv) = pinned_value {
                if j + 1 < k && (value < pv) != (letter < last_letter) {
                    continue;
                }
            }
            chosen.push(h);
            let stop = self.extend(host, pin_last, chosen, found);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_counts() {
        let m = Matcher::new(&[1, 3, 2], 0);
        assert_eq!(m.count(&[2, 6, 4, 8, 3, 7, 5, 1]), 13);
        assert_eq!(Matcher::new(&[1, 2], 0).count(&[1, 2, 3]), 3);
        assert_eq!(Matcher::new(&[1, 2, 3, 4], 0).count(&[2, 6, 4, 8, 3, 7, 5, 1]), 0);
    }

    #[test]
    fn pinned_counts_sum_to_total() {
        let host = [3u8, 1, 4, 5, 9, 2, 6, 8, 7];
        let m = Matcher::new(&[2, 1, 3], 0);
        let by_end: u64 = (1..=host.len()).map(|e| m.count_ending_at_last(&host[..e])).sum();
        assert_eq!(by_end, m.count(&host));
    }

    #[test]
    fn vincular_adjacency() {
        // 2-31: letters 3 and 1 adjacent
        let m = Matcher::new(&[2, 3, 1], 0b10);
        assert_eq!(m.count(&[3, 4, 2, 1]), 1);
        let m = Matcher::new(&[1, 3, 2], 0b01);
        assert_eq!(m.count(&[3, 4, 2, 1]), 0);
    }

    #[test]
    fn first_occurrence_is_leftmost() {
        let m = Matcher::new(&[3, 2, 1], 0);
        assert_eq!(m.first_occurrence(&[1, 3, 5, 4, 6, 2]), Some(vec![2, 3, 5]));
        assert_eq!(m.first_occurrence(&[1, 2, 3]), None);
    }
}
