//! Partitions of an initial integer segment into pairs and singletons, and
//! their bijection with canonical adjacent-occurrence words.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{Word, WordClass};

/// A partition of `1..=n+k` into k pairs and n-k singletons.
///
/// ```
/// use spinal::PairPartition;
///
/// let p = PairPartition::new(4, 2, vec![(2, 4), (3, 5)], vec![1, 6]).unwrap();
/// assert_eq!(p.to_word().letters, vec![3, 1, 2, 1, 1, 2, 2, 4, 3, 4]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairPartition {
    /// Alphabet size of the corresponding words.
    pub n: u32,
    /// Number of pairs.
    pub k: u32,
    /// The pairs, each stored as (min, max), sorted by max.
    pub pairs: Vec<(u32, u32)>,
    /// The singletons, sorted ascending.
    pub singletons: Vec<u32>,
}

impl PairPartition {
    /// Builds and checks a partition; pairs and singletons may be given in
    /// any order and orientation.
    pub fn new(
        n: u32,
        k: u32,
        pairs: Vec<(u32, u32)>,
        singletons: Vec<u32>,
    ) -> Result<PairPartition> {
        if k > n {
            return Err(Error::MalformedPartition(format!("k={k} exceeds n={n}")));
        }
        if pairs.len() != k as usize {
            return Err(Error::MalformedPartition(format!(
                "{} pairs instead of k={k}",
                pairs.len()
            )));
        }
        if singletons.len() != (n - k) as usize {
            return Err(Error::MalformedPartition(format!(
                "{} singletons instead of n-k={}",
                singletons.len(),
                n - k
            )));
        }
        let ground = n + k;
        let mut seen = BTreeSet::new();
        let mut insert = |x: u32| -> Result<()> {
            if x == 0 || x > ground {
                return Err(Error::MalformedPartition(format!(
                    "element {x} outside 1..={ground}"
                )));
            }
            if !seen.insert(x) {
                return Err(Error::MalformedPartition(format!("element {x} repeated")));
            }
            Ok(())
        };
        let mut normalized: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            insert(a)?;
            insert(b)?;
            if a == b {
                return Err(Error::MalformedPartition(format!("pair ({a},{b}) repeats an element")));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        let mut singletons = singletons;
        for &s in &singletons {
            insert(s)?;
        }
        normalized.sort_by_key(|&(_, max)| max);
        singletons.sort_unstable();
        Ok(PairPartition { n, k, pairs: normalized, singletons })
    }

    /// The canonical adjacent-occurrence word corresponding to this
    /// partition.
    ///
    /// Pairs sorted by their larger element become the low letters in
    /// order: the smaller element marks the first occurrence, the larger
    /// the adjacent second and third. Singletons in increasing order become
    /// the high letters' body occurrences; the sorted high block is
    /// appended.
    pub fn to_word(&self) -> Word {
        let ground = (self.n + self.k) as usize;
        let mut slot_letters: Vec<Vec<u32>> = vec![Vec::new(); ground + 1];
        for (idx, &(min, max)) in self.pairs.iter().enumerate() {
            let letter = idx as u32 + 1;
            slot_letters[min as usize] = vec![letter];
            slot_letters[max as usize] = vec![letter, letter];
        }
        for (idx, &s) in self.singletons.iter().enumerate() {
            let letter = self.k + 1 + idx as u32;
            slot_letters[s as usize] = vec![letter];
        }
        let mut letters: Vec<u32> = Vec::with_capacity(2 * self.n as usize + self.k as usize);
        for slot in slot_letters.into_iter().skip(1) {
            letters.extend(slot);
        }
        letters.extend(self.k + 1..=self.n);
        Word { n: self.n, k: self.k, letters }
    }
}

impl fmt::Display for PairPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
        parts.extend(self.singletons.iter().map(|s| format!("{{{s}}}")));
        write!(f, "{}", parts.join(" "))
    }
}

impl Word {
    /// The pair partition corresponding to this word under the bijection
    /// with canonical adjacent-occurrence words.
    ///
    /// The word is canonicalized first, so any member of an equivalence
    /// class maps to the same partition.
    ///
    /// # Errors
    ///
    /// Returns [`Error::NotInClass`] unless the word lies in the
    /// adjacent-occurrence class.
    pub fn to_pair_partition(&self) -> Result<PairPartition> {
        self.check_class(WordClass::Adjacent)?;
        let canonical = self.canonicalize_tilde()?;
        let body_len = (self.n + 2 * self.k) as usize;
        let mut first_slot = vec![0u32; self.n as usize + 1];
        let mut double_slot = vec![0u32; self.n as usize + 1];
        let mut slot = 0u32;
        let mut pos = 0usize;
        while pos < body_len {
            let x = canonical.letters[pos];
            slot += 1;
            if first_slot[x as usize] == 0 {
                first_slot[x as usize] = slot;
                pos += 1;
            } else {
                double_slot[x as usize] = slot;
                pos += 2;
            }
        }
        let pairs: Vec<(u32, u32)> =
            (1..=self.k).map(|i| (first_slot[i as usize], double_slot[i as usize])).collect();
        let singletons: Vec<u32> =
            (self.k + 1..=self.n).map(|j| first_slot[j as usize]).collect();
        PairPartition::new(self.n, self.k, pairs, singletons)
    }
}
