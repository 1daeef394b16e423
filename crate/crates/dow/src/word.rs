//! Double occurrence words: the value type, ascending-order canonical form,
//! reversal, equivalence, palindrome testing, and text parsing/formatting.
//!
//! A double occurrence word (DOW) of size `n` is a word over positive-integer
//! letter ids in which every distinct letter appears exactly twice, so its
//! length is `2n`. A word is *canonical* (in ascending order) when, reading
//! left to right, each new letter equals one plus the number of distinct
//! letters already seen. Two words are *equivalent* when their canonical
//! forms coincide.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Letter identifier; ids are 1-based positive integers.
pub type Letter = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("letter {letter} occurs {count} times, expected exactly 2")]
    LetterCount { letter: Letter, count: usize },
    #[error("compact format requires letter ids <= 9, found {0}")]
    CompactOverflow(Letter),
}

/// Output style for [`Dow::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// Contiguous digits, e.g. `121323`. Only valid when every id is <= 9.
    Compact,
    /// Space-separated decimal ids, e.g. `1 10 1 10`. Always valid.
    Separated,
}

/// An immutable double occurrence word.
///
/// Every constructor validates the double-occurrence invariant; the
/// `canonical` flag is computed once at construction. The empty word
/// (size 0) is a valid `Dow`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dow {
    letters: Vec<Letter>,
    canonical: bool,
}

impl Dow {
    /// Builds a word from raw letters, validating that each distinct letter
    /// occurs exactly twice and that ids are positive.
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        let mut counts: HashMap<Letter, usize> = HashMap::new();
        for &l in &letters {
            if l == 0 {
                return Err(WordError::MalformedToken("0".to_string()));
            }
            *counts.entry(l).or_insert(0) += 1;
        }
        for (&letter, &count) in &counts {
            if count != 2 {
                return Err(WordError::LetterCount { letter, count });
            }
        }
        let canonical = is_ascending_order(&letters);
        Ok(Dow { letters, canonical })
    }

    /// The empty word (size 0).
    pub fn empty() -> Self {
        Dow {
            letters: Vec::new(),
            canonical: true,
        }
    }

    /// Constructor for generated words already known to satisfy the
    /// invariants; validated in debug builds only.
    pub(crate) fn from_canonical_letters(letters: Vec<Letter>) -> Self {
        debug_assert!(is_ascending_order(&letters));
        debug_assert!(Dow::new(letters.clone()).is_ok());
        Dow {
            letters,
            canonical: true,
        }
    }

    /// Number of distinct letters `n`.
    pub fn size(&self) -> usize {
        self.letters.len() / 2
    }

    /// Word length `2n`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// True when the word is in ascending order.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Relabels every letter by the rank of its first occurrence, producing
    /// the unique equivalent word in ascending order. Idempotent.
    pub fn canonicalize(&self) -> Dow {
        if self.canonical {
            return self.clone();
        }
        let mut rank: HashMap<Letter, Letter> = HashMap::new();
        let mut next: Letter = 0;
        let letters = self
            .letters
            .iter()
            .map(|&l| {
                *rank.entry(l).or_insert_with(|| {
                    next += 1;
                    next
                })
            })
            .collect();
        Dow {
            letters,
            canonical: true,
        }
    }

    /// The word with its letters in reversed order, not relabeled.
    pub fn reverse(&self) -> Dow {
        let letters: Vec<Letter> = self.letters.iter().rev().copied().collect();
        let canonical = is_ascending_order(&letters);
        Dow { letters, canonical }
    }

    /// True when both words have the same ascending-order form.
    pub fn equivalent(&self, other: &Dow) -> bool {
        self.canonicalize().letters == other.canonicalize().letters
    }

    /// True when the word is equivalent to its reverse.
    pub fn is_palindrome(&self) -> bool {
        self.equivalent(&self.reverse())
    }

    /// Renders the word in the requested style. `Compact` fails when any
    /// letter id exceeds 9.
    pub fn format(&self, style: Style) -> Result<String, WordError> {
        match style {
            Style::Compact => {
                if let Some(&l) = self.letters.iter().find(|&&l| l > 9) {
                    return Err(WordError::CompactOverflow(l));
                }
                Ok(self.letters.iter().map(|l| l.to_string()).collect())
            }
            Style::Separated => Ok(self
                .letters
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ")),
        }
    }
}

/// Each new letter must equal 1 + number of distinct letters seen so far.
fn is_ascending_order(letters: &[Letter]) -> bool {
    let mut seen: Vec<bool> = vec![false; letters.len() + 1];
    let mut next: Letter = 1;
    for &l in letters {
        if (l as usize) < seen.len() && seen[l as usize] {
            continue;
        }
        if l != next {
            return false;
        }
        seen[l as usize] = true;
        next += 1;
    }
    true
}

impl FromStr for Dow {
    type Err = WordError;

    /// Accepts whitespace/comma-separated decimal ids, or a contiguous digit
    /// string in which each digit is one letter (ids <= 9 only). The empty
    /// string parses as the empty word. Letters are not relabeled.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Dow::empty());
        }
        let letters: Vec<Letter> = if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
            trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<Letter>()
                        .ok()
                        .filter(|&l| l > 0)
                        .ok_or_else(|| WordError::MalformedToken(tok.to_string()))
                })
                .collect::<Result<_, _>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| WordError::MalformedToken(c.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Dow::new(letters)
    }
}

impl fmt::Display for Dow {
    /// Compact digits when every id is <= 9, space-separated otherwise;
    /// both forms round-trip through `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = if self.letters.iter().all(|&l| l <= 9) {
            Style::Compact
        } else {
            Style::Separated
        };
        f.write_str(&self.format(style).expect("style chosen to fit"))
    }
}

impl fmt::Debug for Dow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dow({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dow(s: &str) -> Dow {
        s.parse().unwrap()
    }

    #[test]
    fn parse_compact() {
        let w = dow("121323");
        assert_eq!(w.letters(), &[1, 2, 1, 3, 2, 3]);
        assert!(w.is_canonical());
    }

    #[test]
    fn parse_empty() {
        let w = dow("");
        assert_eq!(w.size(), 0);
        assert!(w.is_empty());
        assert!(w.is_canonical());
    }

    #[test]
    fn parse_separated_large_ids() {
        let w = dow("1,10,1,10");
        assert_eq!(w.letters(), &[1, 10, 1, 10]);
        assert_eq!(dow("1 10 1 10"), w);
    }

    #[test]
    fn parse_rejects_single_occurrence() {
        match "112".parse::<Dow>() {
            Err(WordError::LetterCount {
                letter: 2,
                count: 1,
            }) => {}
            other => panic!("expected letter-count error, got {:?}", other),
        }
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(matches!(
            "1 x 1".parse::<Dow>(),
            Err(WordError::MalformedToken(_))
        ));
        assert!(matches!(
            "102102".parse::<Dow>(),
            Err(WordError::MalformedToken(_))
        ));
        assert!(matches!(
            "0 1 0 1".parse::<Dow>(),
            Err(WordError::MalformedToken(_))
        ));
    }

    #[test]
    fn canonicalize_relabels_by_first_occurrence() {
        let w = Dow::new(vec![3, 1, 3, 2, 2, 1]).unwrap();
        assert!(!w.is_canonical());
        assert_eq!(w.canonicalize().letters(), &[1, 2, 1, 3, 3, 2]);
        assert_eq!(dow("121323").canonicalize(), dow("121323"));
        assert_eq!(
            Dow::new(vec![2, 2, 1, 1]).unwrap().canonicalize(),
            dow("1122")
        );
    }

    #[test]
    fn reverse_does_not_relabel() {
        let w = dow("122313");
        assert_eq!(w.reverse().letters(), &[3, 1, 3, 2, 2, 1]);
        assert_eq!(Dow::empty().reverse(), Dow::empty());
        assert_eq!(w.reverse().reverse(), w);
    }

    #[test]
    fn equivalence_examples() {
        let a = Dow::new(vec![3, 1, 3, 2, 2, 1]).unwrap();
        assert!(a.equivalent(&dow("121332")));
        assert!(!dow("122313").equivalent(&dow("121332")));
        assert!(a.equivalent(&a));
    }

    #[test]
    fn palindrome_examples() {
        assert!(dow("123312").is_palindrome());
        assert!(!dow("122313").is_palindrome());
        // all three size-2 words are palindromes
        for s in ["1122", "1212", "1221"] {
            assert!(dow(s).is_palindrome(), "{s} should be a palindrome");
        }
    }

    #[test]
    fn format_styles() {
        assert_eq!(dow("1212").format(Style::Compact).unwrap(), "1212");
        assert_eq!(
            dow("1 10 1 10").format(Style::Separated).unwrap(),
            "1 10 1 10"
        );
        assert!(matches!(
            dow("1 10 1 10").format(Style::Compact),
            Err(WordError::CompactOverflow(10))
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in ["", "11", "121323", "1 10 1 10"] {
            let w = dow(s);
            assert_eq!(w.to_string().parse::<Dow>().unwrap(), w);
        }
    }
}
