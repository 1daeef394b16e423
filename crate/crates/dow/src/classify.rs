//! Structural classification of double occurrence words.
//!
//! Three nested classes matter here. A word is *irreducible* when it is not
//! the concatenation of two nonempty DOWs, and *strongly irreducible* when no
//! proper contiguous factor is a nonempty DOW (so strongly irreducible words
//! are irreducible, but not conversely: `12344123` is irreducible yet
//! contains `44`). Strong irreducibility has a second, independent
//! characterization: the word's circle graph (letters as vertices,
//! interleaving pairs as edges) is connected. Both algorithms are exposed;
//! the interval scan is the default and the graph route serves as a
//! cross-check.
//!
//! The module also provides the recursive machinery behind the strongly
//! irreducible counting recurrences: [`find_sir_subword`] locates a strongly
//! irreducible factor inside any word by repeated descent, and
//! [`decompose_sir`]/[`compose_sir`] form a bijection between strongly
//! irreducible words of size `n >= 2` and triples `(u, v, split)` of two
//! smaller strongly irreducible words plus a split point.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::word::{Dow, Letter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("word {0} is not strongly irreducible")]
    NotStronglyIrreducible(Dow),
    #[error("size-1 words are the recursion base and have no decomposition")]
    DecomposeBase,
    #[error("split {split} out of range 1..={max}")]
    SplitOutOfRange { split: usize, max: usize },
}

/// Letters as vertices, with an edge wherever two chords interleave
/// (their occurrences alternate as `a..b..a..b` by position).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleGraph {
    vertices: BTreeSet<Letter>,
    edges: BTreeSet<(Letter, Letter)>,
}

impl CircleGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &BTreeSet<Letter> {
        &self.vertices
    }

    /// Edges as ordered pairs with the smaller letter first.
    pub fn edges(&self) -> &BTreeSet<(Letter, Letter)> {
        &self.edges
    }

    pub fn has_edge(&self, a: Letter, b: Letter) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Breadth-first reachability; the empty graph is vacuously connected.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen: HashSet<Letter> = HashSet::new();
        let mut queue = vec![start];
        seen.insert(start);
        while let Some(v) = queue.pop() {
            for &(a, b) in &self.edges {
                let next = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if seen.insert(next) {
                    queue.push(next);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

/// Builds the circle graph of `w`: one vertex per letter, one edge per
/// interleaving pair of chords. Labels are taken from `w` as-is.
pub fn circle_graph(w: &Dow) -> CircleGraph {
    let letters = w.letters();
    let mut first: std::collections::HashMap<Letter, usize> = std::collections::HashMap::new();
    let mut span: Vec<(Letter, usize, usize)> = Vec::with_capacity(w.size());
    for (i, &l) in letters.iter().enumerate() {
        match first.get(&l) {
            None => {
                first.insert(l, i);
            }
            Some(&f) => span.push((l, f, i)),
        }
    }
    let mut edges = BTreeSet::new();
    for (i, &(a, a1, a2)) in span.iter().enumerate() {
        for &(b, b1, b2) in &span[i + 1..] {
            // chords interleave iff exactly one endpoint of b lies inside a's span
            if (a1 < b1 && b1 < a2) != (a1 < b2 && b2 < a2) {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    CircleGraph {
        vertices: first.keys().copied().collect(),
        edges,
    }
}

/// Splits `w` into its unique left-to-right factorization into irreducible
/// DOWs. A factor boundary falls after each position where no letter is
/// currently open (seen once). Factors are canonicalized individually.
pub fn irreducible_factors(w: &Dow) -> Result<Vec<Dow>, ClassifyError> {
    if w.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    let letters = w.letters();
    let mut factors = Vec::new();
    let mut open: HashSet<Letter> = HashSet::new();
    let mut start = 0;
    for (i, &l) in letters.iter().enumerate() {
        if !open.remove(&l) {
            open.insert(l);
        }
        if open.is_empty() {
            let factor = Dow::new(letters[start..=i].to_vec())
                .expect("every letter opened in the segment closed in it");
            factors.push(factor.canonicalize());
            start = i + 1;
        }
    }
    Ok(factors)
}

/// True iff `w` is not a concatenation of two nonempty DOWs; equivalently,
/// no proper nonempty prefix of `w` is a DOW.
pub fn is_irreducible(w: &Dow) -> Result<bool, ClassifyError> {
    if w.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    let letters = w.letters();
    let mut open: HashSet<Letter> = HashSet::new();
    for &l in &letters[..letters.len() - 1] {
        if !open.remove(&l) {
            open.insert(l);
        }
        if open.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `[s, e)` contains every one of its letters exactly twice.
/// Within a DOW a letter occurs at most twice overall, so it suffices that
/// no letter occurs an odd number of times in the window.
fn interval_is_dow(letters: &[Letter], s: usize, e: usize) -> bool {
    let mut open: HashSet<Letter> = HashSet::new();
    for &l in &letters[s..e] {
        if !open.remove(&l) {
            open.insert(l);
        }
    }
    open.is_empty()
}

/// True iff no proper contiguous factor of `w` is a nonempty DOW.
/// Quadratic scan over window starts, growing each window rightward.
pub fn is_strongly_irreducible(w: &Dow) -> Result<bool, ClassifyError> {
    if w.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    let letters = w.letters();
    let len = letters.len();
    for s in 0..len {
        let mut open: HashSet<Letter> = HashSet::new();
        for (e, &l) in letters.iter().enumerate().skip(s) {
            if !open.remove(&l) {
                open.insert(l);
            }
            if open.is_empty() && !(s == 0 && e == len - 1) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Independent algorithm for the same predicate: a word is strongly
/// irreducible exactly when its circle graph is connected. Used as a
/// cross-check against the interval scan.
pub fn is_strongly_irreducible_via_graph(w: &Dow) -> Result<bool, ClassifyError> {
    if w.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    Ok(circle_graph(w).is_connected())
}

/// Leftmost-then-shortest proper DOW interval of a slice that is itself a
/// DOW, as half-open `(s, e)`, or None when the slice is strongly
/// irreducible.
fn first_proper_dow_interval(letters: &[Letter]) -> Option<(usize, usize)> {
    let len = letters.len();
    for s in 0..len {
        let mut open: HashSet<Letter> = HashSet::new();
        for (i, &l) in letters.iter().enumerate().skip(s) {
            if !open.remove(&l) {
                open.insert(l);
            }
            if open.is_empty() && !(s == 0 && i == len - 1) {
                return Some((s, i + 1));
            }
        }
    }
    None
}

/// Finds a strongly irreducible DOW factor of `w` by repeated descent:
/// while the current window has a proper DOW factor, narrow to the
/// leftmost-then-shortest one. Returns 1-based inclusive positions in `w`.
pub fn find_sir_subword(w: &Dow) -> Result<(usize, usize), ClassifyError> {
    if w.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    let letters = w.letters();
    let (mut lo, mut hi) = (0usize, letters.len());
    while let Some((s, e)) = first_proper_dow_interval(&letters[lo..hi]) {
        hi = lo + e;
        lo += s;
    }
    Ok((lo + 1, hi))
}

/// The size-reducing form of a strongly irreducible word: `w` factors as
/// `1 u1 v1 1 v2 u2` with `u = 1 u1 1 u2` and `v = v1 v2` both strongly
/// irreducible, and `split = |v1|` recording where `v` was cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SirDecomposition {
    pub u: Dow,
    pub v: Dow,
    pub split: usize,
}

/// Smallest-then-leftmost DOW interval of `q` that takes letters from both
/// sides of `boundary`, as half-open `(s, e)`.
fn smallest_straddling_dow_interval(q: &[Letter], boundary: usize) -> Option<(usize, usize)> {
    let len = q.len();
    for l in (2..=len).step_by(2) {
        for s in 0..=(len - l) {
            let e = s + l;
            if s < boundary && e > boundary && interval_is_dow(q, s, e) {
                return Some((s, e));
            }
        }
    }
    None
}

/// Splits a strongly irreducible word of size >= 2 into the unique pair of
/// smaller strongly irreducible words it is built from.
///
/// Deleting both occurrences of letter 1 from `w = 1 p1 1 p2` leaves
/// `q = p1 p2`. Because `w` has no proper DOW factor, every DOW interval of
/// `q` must take letters from both sides of the `p1`/`p2` seam; the smallest
/// such interval (leftmost on ties) is the strongly irreducible `v = v1 v2`,
/// and the remainder re-wrapped around letter 1 is `u = 1 u1 1 u2`.
pub fn decompose_sir(w: &Dow) -> Result<SirDecomposition, ClassifyError> {
    if w.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    if w.size() == 1 {
        return Err(ClassifyError::DecomposeBase);
    }
    let w = w.canonicalize();
    if !is_strongly_irreducible(&w)? {
        return Err(ClassifyError::NotStronglyIrreducible(w));
    }
    let letters = w.letters();
    let b = 1 + letters[1..]
        .iter()
        .position(|&l| l == 1)
        .expect("canonical words start with letter 1, which occurs twice");
    let p1 = &letters[1..b];
    let p2 = &letters[b + 1..];
    let mut q: Vec<Letter> = Vec::with_capacity(p1.len() + p2.len());
    q.extend_from_slice(p1);
    q.extend_from_slice(p2);
    let boundary = p1.len();
    let (s, e) = smallest_straddling_dow_interval(&q, boundary)
        .expect("q itself is a DOW spanning the seam, so a candidate exists");
    let mut u_letters: Vec<Letter> = Vec::with_capacity(q.len() - (e - s) + 2);
    u_letters.push(1);
    u_letters.extend_from_slice(&q[..s]);
    u_letters.push(1);
    u_letters.extend_from_slice(&q[e..]);
    let u = Dow::new(u_letters)
        .expect("removing a DOW interval leaves every remaining letter doubled")
        .canonicalize();
    let v = Dow::new(q[s..e].to_vec())
        .expect("interval verified as a DOW")
        .canonicalize();
    Ok(SirDecomposition {
        u,
        v,
        split: boundary - s,
    })
}

/// Inverse of [`decompose_sir`]: interleaves strongly irreducible `v`, cut
/// after its first `split` letters, into strongly irreducible `u` at the
/// two occurrences of letter 1. `v`'s letters are shifted past `u`'s before
/// the final canonicalization so the two alphabets stay disjoint.
pub fn compose_sir(u: &Dow, v: &Dow, split: usize) -> Result<Dow, ClassifyError> {
    if u.is_empty() || v.is_empty() {
        return Err(ClassifyError::EmptyWord);
    }
    let max = 2 * v.size() - 1;
    if split < 1 || split > max {
        return Err(ClassifyError::SplitOutOfRange { split, max });
    }
    let u = u.canonicalize();
    let v = v.canonicalize();
    let u_letters = u.letters();
    let b = 1 + u_letters[1..]
        .iter()
        .position(|&l| l == 1)
        .expect("canonical words start with letter 1, which occurs twice");
    let offset = u.size() as Letter;
    let shifted: Vec<Letter> = v.letters().iter().map(|&l| l + offset).collect();
    let mut out: Vec<Letter> = Vec::with_capacity(u_letters.len() + shifted.len());
    out.push(1);
    out.extend_from_slice(&u_letters[1..b]);
    out.extend_from_slice(&shifted[..split]);
    out.push(1);
    out.extend_from_slice(&shifted[split..]);
    out.extend_from_slice(&u_letters[b + 1..]);
    Ok(Dow::new(out)
        .expect("disjoint alphabets, each letter doubled")
        .canonicalize())
}
