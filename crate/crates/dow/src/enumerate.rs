//! Exhaustive lazy enumeration of canonical double occurrence words.
//!
//! Words of size `n` are in bijection with perfect matchings of positions
//! `1..2n`: each matched pair of positions is one chord, and labeling chords
//! by rank of first occurrence yields a canonical word. The stream therefore
//! never produces duplicates and needs no canonicalization pass.
//!
//! Generation walks positions left to right. At each position the word
//! either closes one of the currently open letters or opens the next fresh
//! letter; trying the open letters in ascending order and the fresh letter
//! last yields words in lexicographic order. A fresh letter is admissible
//! only while `remaining - open >= 2` (the new letter and every open letter
//! still need a closing slot), and under that rule every partial word
//! completes, so the walk has no dead ends.
//!
//! The unfiltered stream has `(2n-1)!!` elements; whole-space scans grow
//! factorially and are guarded by [`Budget`].

use num_bigint::BigInt;

use crate::classify;
use crate::word::{Dow, Letter};
use crate::{Budget, BudgetError};

/// Class predicate applied to each enumerated word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassFilter {
    All,
    Palindrome,
    Irreducible,
    IrreduciblePalindrome,
    StronglyIrreducible,
    StronglyIrreduciblePalindrome,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 6] = [
        ClassFilter::All,
        ClassFilter::Palindrome,
        ClassFilter::Irreducible,
        ClassFilter::IrreduciblePalindrome,
        ClassFilter::StronglyIrreducible,
        ClassFilter::StronglyIrreduciblePalindrome,
    ];

    /// Flag-style name, also accepted by [`ClassFilter::parse`].
    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::All => "all",
            ClassFilter::Palindrome => "palindrome",
            ClassFilter::Irreducible => "irreducible",
            ClassFilter::IrreduciblePalindrome => "irreducible-palindrome",
            ClassFilter::StronglyIrreducible => "strong",
            ClassFilter::StronglyIrreduciblePalindrome => "strong-palindrome",
        }
    }

    pub fn parse(s: &str) -> Option<ClassFilter> {
        ClassFilter::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Whether `w` belongs to the class. The empty word belongs to `all`
    /// only; the other classes are defined for nonempty words.
    pub fn matches(self, w: &Dow) -> bool {
        if w.is_empty() {
            return self == ClassFilter::All;
        }
        match self {
            ClassFilter::All => true,
            ClassFilter::Palindrome => w.is_palindrome(),
            ClassFilter::Irreducible => classify::is_irreducible(w).expect("nonempty"),
            ClassFilter::IrreduciblePalindrome => {
                w.is_palindrome() && classify::is_irreducible(w).expect("nonempty")
            }
            ClassFilter::StronglyIrreducible => {
                classify::is_strongly_irreducible(w).expect("nonempty")
            }
            ClassFilter::StronglyIrreduciblePalindrome => {
                w.is_palindrome() && classify::is_strongly_irreducible(w).expect("nonempty")
            }
        }
    }
}

/// Lazy, resumable stream of all canonical words of one size matching a
/// filter, in lexicographic order. Construct with [`enumerate`].
pub struct DowStream {
    n: usize,
    filter: ClassFilter,
    letters: Vec<Letter>,
    /// Open letters, ascending. New letters are introduced in increasing
    /// order, so pushing a fresh letter preserves sortedness.
    open: Vec<Letter>,
    /// Distinct letters introduced so far; the next fresh letter is `opened + 1`.
    opened: Letter,
    /// Candidate rank chosen at each filled position.
    frames: Vec<usize>,
    /// The last yielded word is still applied and must be unwound first.
    need_advance: bool,
    done: bool,
}

/// Streams the canonical words of size `n` that satisfy `filter`, in
/// lexicographic order. At `n = 0` the stream holds just the empty word
/// under the `all` filter and nothing otherwise.
pub fn enumerate(n: usize, filter: ClassFilter) -> DowStream {
    DowStream {
        n,
        filter,
        letters: Vec::with_capacity(2 * n),
        open: Vec::new(),
        opened: 0,
        frames: Vec::with_capacity(2 * n),
        need_advance: false,
        done: false,
    }
}

impl DowStream {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn filter(&self) -> ClassFilter {
        self.filter
    }

    fn candidate_count(&self) -> usize {
        let remaining = 2 * self.n - self.letters.len();
        let can_open = (self.opened as usize) < self.n && remaining - self.open.len() >= 2;
        self.open.len() + usize::from(can_open)
    }

    /// Applies candidate `rank`: ranks below `open.len()` close that open
    /// letter; the rank just past them opens a fresh one.
    fn apply(&mut self, rank: usize) {
        if rank < self.open.len() {
            let l = self.open.remove(rank);
            self.letters.push(l);
        } else {
            self.opened += 1;
            self.open.push(self.opened);
            self.letters.push(self.opened);
        }
    }

    /// Reverts the most recent `apply`. The last letter was an opening move
    /// iff it is still open (nothing later could have closed it).
    fn undo_last(&mut self) {
        let l = self
            .letters
            .pop()
            .expect("undo is only called with letters applied");
        if self.open.last() == Some(&l) && l == self.opened {
            self.open.pop();
            self.opened -= 1;
        } else {
            let idx = self.open.partition_point(|&o| o < l);
            self.open.insert(idx, l);
        }
    }

    /// Moves to the next unexplored branch, unwinding as needed.
    /// Returns false when the whole tree is exhausted.
    fn advance(&mut self) -> bool {
        while let Some(rank) = self.frames.pop() {
            self.undo_last();
            let next = rank + 1;
            if next < self.candidate_count() {
                self.apply(next);
                self.frames.push(next);
                return true;
            }
        }
        false
    }
}

impl Iterator for DowStream {
    type Item = Dow;

    fn next(&mut self) -> Option<Dow> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            let empty = Dow::empty();
            return self.filter.matches(&empty).then_some(empty);
        }
        loop {
            if self.need_advance {
                self.need_advance = false;
                if !self.advance() {
                    self.done = true;
                    return None;
                }
            }
            // descend first-candidate-first until the word is complete
            while self.letters.len() < 2 * self.n {
                debug_assert!(self.candidate_count() > 0, "the walk has no dead ends");
                self.apply(0);
                self.frames.push(0);
            }
            self.need_advance = true;
            let w = Dow::from_canonical_letters(self.letters.clone());
            if self.filter.matches(&w) {
                return Some(w);
            }
        }
    }
}

/// Exact cardinality of `enumerate(n, filter)`, refusing sizes over the
/// budget so factorial scans cannot hang the caller.
pub fn count_by_enumeration(
    n: usize,
    filter: ClassFilter,
    budget: &Budget,
) -> Result<BigInt, BudgetError> {
    budget.check_enumeration(n, "count by enumeration")?;
    Ok(BigInt::from(enumerate(n, filter).count()))
}
