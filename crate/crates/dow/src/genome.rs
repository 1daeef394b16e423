//! Scrambled-gene arrangements and their pointer words.
//!
//! A gene scrambled across `k` coding segments is described by a
//! *micronuclear arrangement*: a permutation of the segment indices `1..k`,
//! each carrying a sign (`-1` marks an inverted segment). In text form an
//! arrangement is written with `M<i>` / `-M<i>` tokens, so the Actin I gene
//! of *Oxytricha nova* reads `M3 M4 M6 M5 M7 M9 -M2 M1 M8`.
//!
//! Consecutive segments `i` and `i+1` share pointer `i`, so each segment
//! contributes its flanking pointers in reading order: segment 1 only
//! pointer 1, segment `k` only pointer `k-1`, and an inner segment `i`
//! pointers `(i-1)(i)` when upright or `(i)(i-1)` when inverted. The
//! concatenation over an arrangement, canonicalized, is a double occurrence
//! word of size `k-1`; [`rho`] computes it. A word is *realizable* when it
//! arises this way from some arrangement; [`realize`] decides that by brute
//! force over all `2^k k!` arrangements, which is why it takes a [`Budget`].
//! The shortest non-realizable word is `11233244`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::word::{Dow, Letter};
use crate::{Budget, BudgetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenomeError {
    #[error("malformed arrangement token `{0}`")]
    MalformedToken(String),
    #[error("segment indices are not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("an arrangement needs at least 2 segments to have pointers")]
    TooFewSegments,
    #[error(transparent)]
    Budget(#[from] BudgetError),
}

/// Orientation of one segment within an arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A signed permutation of segment indices `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MicronuclearArrangement {
    entries: Vec<(usize, Sign)>,
}

impl MicronuclearArrangement {
    /// Validates that the indices form a permutation of `1..=k`.
    pub fn new(entries: Vec<(usize, Sign)>) -> Result<Self, GenomeError> {
        let k = entries.len();
        let mut seen = vec![false; k + 1];
        for &(i, _) in &entries {
            if i == 0 || i > k || seen[i] {
                return Err(GenomeError::NotPermutation(k));
            }
            seen[i] = true;
        }
        Ok(MicronuclearArrangement { entries })
    }

    pub fn segment_count(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Sign)] {
        &self.entries
    }

    /// Parses whitespace-separated `M<i>` / `-M<i>` tokens.
    pub fn parse(text: &str) -> Result<Self, GenomeError> {
        let mut entries = Vec::new();
        for tok in text.split_whitespace() {
            let (sign, rest) = match tok.strip_prefix('-') {
                Some(rest) => (Sign::Minus, rest),
                None => (Sign::Plus, tok),
            };
            let index = rest
                .strip_prefix('M')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i > 0)
                .ok_or_else(|| GenomeError::MalformedToken(tok.to_string()))?;
            entries.push((index, sign));
        }
        MicronuclearArrangement::new(entries)
    }
}

impl fmt::Display for MicronuclearArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, &(i, sign)) in self.entries.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            if sign == Sign::Minus {
                f.write_str("-")?;
            }
            write!(f, "M{i}")?;
        }
        Ok(())
    }
}

/// Maps an arrangement of `k >= 2` segments to its pointer word of size
/// `k - 1`: concatenate each entry's pointer pair (see module docs) and
/// canonicalize. Not injective; end-segment signs never matter.
pub fn rho(a: &MicronuclearArrangement) -> Result<Dow, GenomeError> {
    let k = a.segment_count();
    if k < 2 {
        return Err(GenomeError::TooFewSegments);
    }
    let mut pointers: Vec<Letter> = Vec::with_capacity(2 * (k - 1));
    for &(i, sign) in a.entries() {
        if i == 1 {
            pointers.push(1);
        } else if i == k {
            pointers.push((k - 1) as Letter);
        } else {
            let (a, b) = ((i - 1) as Letter, i as Letter);
            match sign {
                Sign::Plus => pointers.extend([a, b]),
                Sign::Minus => pointers.extend([b, a]),
            }
        }
    }
    let word = Dow::new(pointers)
        .expect("each pointer i joins segments i and i+1, giving two occurrences");
    Ok(word.canonicalize())
}

/// Streams all `2^k k!` arrangements of `k` segments exactly once:
/// permutations in lexicographic order, and for each permutation the sign
/// patterns in binary counting order with the last entry flipping fastest.
pub fn enumerate_arrangements(
    k: usize,
    budget: &Budget,
) -> Result<impl Iterator<Item = MicronuclearArrangement>, BudgetError> {
    budget.check_arrangements(k, "arrangement enumeration")?;
    let iter = (1..=k).permutations(k).flat_map(move |perm| {
        (0u64..(1u64 << k)).map(move |mask| {
            let entries = perm
                .iter()
                .enumerate()
                .map(|(j, &i)| {
                    let sign = if mask >> (k - 1 - j) & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    };
                    (i, sign)
                })
                .collect();
            MicronuclearArrangement { entries }
        })
    });
    Ok(iter)
}

/// Searches all arrangements of `size(w) + 1` segments for one whose
/// pointer word is `w`, returning the first witness in enumeration order,
/// or None when `w` is not realizable.
pub fn realize(w: &Dow, budget: &Budget) -> Result<Option<MicronuclearArrangement>, BudgetError> {
    let k = w.size() + 1;
    budget.check_arrangements(k, "realizability search")?;
    let target = w.canonicalize();
    for a in enumerate_arrangements(k, budget)? {
        if rho(&a).expect("k >= 2 because size >= 1") == target {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// `realize` reduced to the yes/no question.
pub fn is_realizable(w: &Dow, budget: &Budget) -> Result<bool, BudgetError> {
    Ok(realize(w, budget)?.is_some())
}

/// The set of all realizable words of size `k - 1`: the image of `rho`
/// over every arrangement of `k` segments. One pass over `2^k k!`
/// arrangements, so bulk scans do not pay the per-word search cost.
pub fn rho_image(k: usize, budget: &Budget) -> Result<BTreeSet<Dow>, BudgetError> {
    if k < 2 {
        return Ok(BTreeSet::new());
    }
    let mut image = BTreeSet::new();
    for a in enumerate_arrangements(k, budget)? {
        image.insert(rho(&a).expect("k >= 2"));
    }
    Ok(image)
}

/// Memoizing wrapper for repeated realizability queries; results are keyed
/// by canonical word.
#[derive(Debug, Default)]
pub struct RealizabilityChecker {
    cache: HashMap<Dow, Option<MicronuclearArrangement>>,
}

impl RealizabilityChecker {
    pub fn new() -> Self {
        RealizabilityChecker::default()
    }

    pub fn realize(
        &mut self,
        w: &Dow,
        budget: &Budget,
    ) -> Result<Option<MicronuclearArrangement>, BudgetError> {
        let key = w.canonicalize();
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let answer = realize(&key, budget)?;
        self.cache.insert(key, answer.clone());
        Ok(answer)
    }

    pub fn is_realizable(&mut self, w: &Dow, budget: &Budget) -> Result<bool, BudgetError> {
        Ok(self.realize(w, budget)?.is_some())
    }
}
