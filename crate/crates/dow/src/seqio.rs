//! Integer-sequence interchange: b-file parsing and formatting, table
//! emission in several text formats, and cross-checking computed tables
//! against bundled reference data.
//!
//! The b-file format is the OEIS convention: UTF-8 text, one
//! `<index> <value>` pair per line, `#` comment lines and blank lines
//! permitted, indices strictly increasing. Reference columns for each word
//! class ship as bundled fixtures under `fixtures/`; where a sequence has a
//! known OEIS id the fixture carries it (all words A001147, irreducible
//! A000698, strongly irreducible A000699, palindromes A047974, strongly
//! irreducible palindromes A004300), and the rest use `local-` labels.
//!
//! [`cross_check`] compares a computed table against a reference while
//! searching a small window of index shifts, because published sequences
//! often index from 0 or include extra leading terms relative to size-`n`
//! word counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::count::{CountTable, SequenceId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqIoError {
    #[error("line {line_no}: expected `<index> <value>`, got `{content}`")]
    MalformedLine { line_no: usize, content: String },
    #[error("line {line_no}: index {index} does not increase over {previous}")]
    NonMonotoneIndex {
        line_no: usize,
        index: i64,
        previous: i64,
    },
    #[error("no tables given")]
    NoTables,
    #[error("tables cover different index ranges; tabular formats need one shared range")]
    MismatchedRanges,
    #[error("b-file output holds a single sequence; got {0} tables")]
    BfileNeedsSingleTable(usize),
}

/// One integer sequence with a string label and strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub id: String,
    entries: Vec<(i64, BigInt)>,
}

impl SequenceFile {
    /// Validates strictly increasing indices.
    pub fn new(id: impl Into<String>, entries: Vec<(i64, BigInt)>) -> Result<Self, SeqIoError> {
        for (line_no, pair) in entries.windows(2).enumerate() {
            if pair[1].0 <= pair[0].0 {
                return Err(SeqIoError::NonMonotoneIndex {
                    line_no: line_no + 2,
                    index: pair[1].0,
                    previous: pair[0].0,
                });
            }
        }
        Ok(SequenceFile {
            id: id.into(),
            entries,
        })
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }
}

/// Parses b-file text. The label is supplied by the caller because the
/// format itself carries none.
pub fn parse_bfile(id: &str, text: &str) -> Result<SequenceFile, SeqIoError> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || SeqIoError::MalformedLine {
            line_no,
            content: raw.to_string(),
        };
        let mut tokens = line.split_whitespace();
        let index: i64 = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(malformed)?;
        let value: BigInt = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(malformed)?;
        if tokens.next().is_some() {
            return Err(malformed());
        }
        if let Some(&(previous, _)) = entries.last() {
            if index <= previous {
                return Err(SeqIoError::NonMonotoneIndex {
                    line_no,
                    index,
                    previous,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(SequenceFile {
        id: id.to_string(),
        entries,
    })
}

/// Data lines only, one `<index> <value>` per line; output re-parses to the
/// same entries bit-exactly.
pub fn format_bfile(file: &SequenceFile) -> String {
    let mut out = String::new();
    for (index, value) in &file.entries {
        writeln!(out, "{index} {value}").expect("writing to a String cannot fail");
    }
    out
}

/// Bundled reference column for a sequence, or None where no fixture
/// applies (the arrangement count is a textbook product, not table data).
pub fn reference_sequence(id: SequenceId) -> Option<SequenceFile> {
    let (label, text) = match id {
        SequenceId::All => ("A001147", include_str!("../fixtures/counts_all.txt")),
        SequenceId::Palindrome => ("A047974", include_str!("../fixtures/counts_palindrome.txt")),
        SequenceId::Irreducible => (
            "A000698",
            include_str!("../fixtures/counts_irreducible.txt"),
        ),
        SequenceId::IrreduciblePalindrome => (
            "local-J",
            include_str!("../fixtures/counts_irreducible_palindrome.txt"),
        ),
        SequenceId::StronglyIrreducible => {
            ("A000699", include_str!("../fixtures/counts_strong.txt"))
        }
        SequenceId::StronglyIrreduciblePalindrome => (
            "A004300",
            include_str!("../fixtures/counts_strong_palindrome.txt"),
        ),
        SequenceId::DiagramsAll => (
            "local-D",
            include_str!("../fixtures/counts_diagrams_all.txt"),
        ),
        SequenceId::DiagramsIrreducible => (
            "local-Di",
            include_str!("../fixtures/counts_diagrams_irreducible.txt"),
        ),
        SequenceId::DiagramsStronglyIrreducible => (
            "local-Ds",
            include_str!("../fixtures/counts_diagrams_strong.txt"),
        ),
        SequenceId::Arrangements => return None,
    };
    Some(parse_bfile(label, text).expect("bundled fixtures are well-formed"))
}

/// Outcome of aligning a computed table with a reference sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheckReport {
    /// Every overlapping index agrees under `computed(n) = reference(n + shift)`.
    Aligned { shift: i64, overlap: usize },
    /// No shift aligns; the first disagreement at the first shift with any
    /// overlap (shifts are tried in the order 0, 1, -1, 2, -2, ...).
    Mismatch {
        shift: i64,
        index: u64,
        computed: BigInt,
        reference: BigInt,
    },
    /// No shift in the window puts any computed index over a reference one.
    NoOverlap,
}

impl CrossCheckReport {
    pub fn is_aligned(&self) -> bool {
        matches!(self, CrossCheckReport::Aligned { .. })
    }
}

/// Seeks a shift `s` with `|s| <= max_shift` such that
/// `computed(n) = reference(n + s)` over the whole overlap, trying
/// 0, 1, -1, 2, -2, ... and reporting the first that fits.
pub fn cross_check(
    computed: &CountTable,
    reference: &SequenceFile,
    max_shift: i64,
) -> CrossCheckReport {
    let lookup: BTreeMap<i64, &BigInt> = reference.entries.iter().map(|(i, v)| (*i, v)).collect();
    let mut shifts = vec![0i64];
    for s in 1..=max_shift.max(0) {
        shifts.push(s);
        shifts.push(-s);
    }
    let mut first_mismatch: Option<CrossCheckReport> = None;
    for shift in shifts {
        let mut overlap = 0usize;
        let mut mismatch: Option<CrossCheckReport> = None;
        for (&n, value) in &computed.values {
            let Some(&reference_value) = lookup.get(&(n as i64 + shift)) else {
                continue;
            };
            overlap += 1;
            if mismatch.is_none() && value != reference_value {
                mismatch = Some(CrossCheckReport::Mismatch {
                    shift,
                    index: n,
                    computed: value.clone(),
                    reference: reference_value.clone(),
                });
            }
        }
        if overlap == 0 {
            continue;
        }
        match mismatch {
            None => return CrossCheckReport::Aligned { shift, overlap },
            Some(report) => {
                first_mismatch.get_or_insert(report);
            }
        }
    }
    first_mismatch.unwrap_or(CrossCheckReport::NoOverlap)
}

/// Text format for [`emit_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    /// Space-aligned columns with an `n` column and one header per table.
    AlignedText,
    /// Comma-separated with a `n,<name>...` header row.
    Csv,
    /// One JSON object per index, big integers as decimal strings.
    JsonLines,
    /// Plain b-file (single table only).
    Bfile,
}

impl EmitFormat {
    pub const ALL: [EmitFormat; 4] = [
        EmitFormat::AlignedText,
        EmitFormat::Csv,
        EmitFormat::JsonLines,
        EmitFormat::Bfile,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EmitFormat::AlignedText => "aligned",
            EmitFormat::Csv => "csv",
            EmitFormat::JsonLines => "json-lines",
            EmitFormat::Bfile => "bfile",
        }
    }

    pub fn parse(s: &str) -> Option<EmitFormat> {
        EmitFormat::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// The string needs no escaping for the fixed class names used here, but
/// quoting defensively keeps the emitter safe for any id.
fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders one or more tables as deterministic text. Tabular formats
/// require every table to cover the same index set; `Bfile` requires
/// exactly one table.
pub fn emit_table(tables: &[CountTable], format: EmitFormat) -> Result<String, SeqIoError> {
    if tables.is_empty() {
        return Err(SeqIoError::NoTables);
    }
    if format == EmitFormat::Bfile {
        if tables.len() != 1 {
            return Err(SeqIoError::BfileNeedsSingleTable(tables.len()));
        }
        let mut out = String::new();
        for (n, value) in &tables[0].values {
            writeln!(out, "{n} {value}").expect("writing to a String cannot fail");
        }
        return Ok(out);
    }
    let indices: Vec<u64> = tables[0].values.keys().copied().collect();
    for t in &tables[1..] {
        if t.values.keys().copied().collect::<Vec<_>>() != indices {
            return Err(SeqIoError::MismatchedRanges);
        }
    }
    let mut out = String::new();
    match format {
        EmitFormat::AlignedText => {
            let mut columns: Vec<Vec<String>> = Vec::new();
            let mut headers = vec!["n".to_string()];
            headers.extend(tables.iter().map(|t| t.sequence_id.name().to_string()));
            columns.push(indices.iter().map(|n| n.to_string()).collect());
            for t in tables {
                columns.push(t.values.values().map(|v| v.to_string()).collect());
            }
            let widths: Vec<usize> = headers
                .iter()
                .zip(&columns)
                .map(|(h, col)| col.iter().map(String::len).max().unwrap_or(0).max(h.len()))
                .collect();
            for (i, h) in headers.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                let _ = write!(out, "{:>width$}", h, width = widths[i]);
            }
            out.push('\n');
            for row in 0..indices.len() {
                for (i, col) in columns.iter().enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    let _ = write!(out, "{:>width$}", col[row], width = widths[i]);
                }
                out.push('\n');
            }
        }
        EmitFormat::Csv => {
            out.push('n');
            for t in tables {
                let _ = write!(out, ",{}", t.sequence_id.name());
            }
            out.push('\n');
            for &n in &indices {
                let _ = write!(out, "{n}");
                for t in tables {
                    let _ = write!(out, ",{}", t.values[&n]);
                }
                out.push('\n');
            }
        }
        EmitFormat::JsonLines => {
            for &n in &indices {
                let _ = write!(out, "{{\"n\":{n}");
                for t in tables {
                    let _ = write!(
                        out,
                        ",{}:{}",
                        json_string(t.sequence_id.name()),
                        json_string(&t.values[&n].to_string())
                    );
                }
                out.push_str("}\n");
            }
        }
        EmitFormat::Bfile => unreachable!("handled above"),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{Method, Sequences};

    #[test]
    fn parse_basic_and_comments() {
        let f = parse_bfile("t", "1 1\n2 2\n3 10").unwrap();
        assert_eq!(
            f.entries(),
            [
                (1, BigInt::from(1)),
                (2, BigInt::from(2)),
                (3, BigInt::from(10))
            ]
        );
        let f = parse_bfile("t", "# comment\n\n1 1\n").unwrap();
        assert_eq!(f.entries(), [(1, BigInt::from(1))]);
    }

    #[test]
    fn parse_rejects_disorder_and_garbage() {
        assert!(matches!(
            parse_bfile("t", "2 5\n1 3"),
            Err(SeqIoError::NonMonotoneIndex { line_no: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("t", "1 2 3"),
            Err(SeqIoError::MalformedLine { line_no: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("t", "one 1"),
            Err(SeqIoError::MalformedLine { .. })
        ));
    }

    #[test]
    fn bfile_round_trip() {
        let f = SequenceFile::new(
            "trip",
            vec![
                (-3, BigInt::from(-7)),
                (0, BigInt::from(0)),
                (5, "316234143225316234143225".parse().unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(parse_bfile("trip", &format_bfile(&f)).unwrap(), f);
    }

    #[test]
    fn fixtures_parse_with_expected_shape() {
        for id in SequenceId::ALL {
            let Some(f) = reference_sequence(id) else {
                assert_eq!(id, SequenceId::Arrangements);
                continue;
            };
            let expected_len = if f.id.starts_with("local-D") { 6 } else { 12 };
            assert_eq!(f.len(), expected_len, "{:?}", id);
            assert_eq!(f.entries()[0].0, 1);
        }
        assert_eq!(
            reference_sequence(SequenceId::All).unwrap().value(12),
            Some(&"316234143225".parse().unwrap())
        );
    }

    #[test]
    fn cross_check_aligns_computed_tables() {
        let mut seq = Sequences::new();
        let table = seq
            .table(SequenceId::Irreducible, 1, 12, Method::Recurrence)
            .unwrap();
        let reference = reference_sequence(SequenceId::Irreducible).unwrap();
        assert_eq!(
            cross_check(&table, &reference, 3),
            CrossCheckReport::Aligned {
                shift: 0,
                overlap: 12
            }
        );
    }

    #[test]
    fn cross_check_finds_nonzero_shift() {
        let mut seq = Sequences::new();
        let table = seq
            .table(SequenceId::All, 1, 6, Method::Recurrence)
            .unwrap();
        // same values stored one index later: computed(n) = reference(n + 1)
        let shifted = SequenceFile::new(
            "shifted",
            table
                .values
                .iter()
                .map(|(&n, v)| (n as i64 + 1, v.clone()))
                .collect(),
        )
        .unwrap();
        assert_eq!(
            cross_check(&table, &shifted, 3),
            CrossCheckReport::Aligned {
                shift: 1,
                overlap: 6
            }
        );
    }

    #[test]
    fn cross_check_reports_corruption_and_disjoint_ranges() {
        let mut seq = Sequences::new();
        let table = seq
            .table(SequenceId::StronglyIrreducible, 1, 6, Method::Recurrence)
            .unwrap();
        let mut entries: Vec<(i64, BigInt)> = table
            .values
            .iter()
            .map(|(&n, v)| (n as i64, v.clone()))
            .collect();
        entries[3].1 += 1;
        let corrupt = SequenceFile::new("corrupt", entries).unwrap();
        match cross_check(&table, &corrupt, 0) {
            CrossCheckReport::Mismatch {
                shift: 0,
                index: 4,
                computed,
                reference,
            } => {
                assert_eq!(computed, BigInt::from(27));
                assert_eq!(reference, BigInt::from(28));
            }
            other => panic!("expected mismatch at n=4, got {:?}", other),
        }

        let far = SequenceFile::new("far", vec![(100, BigInt::from(1))]).unwrap();
        assert_eq!(cross_check(&table, &far, 3), CrossCheckReport::NoOverlap);
    }

    #[test]
    fn emit_csv_and_aligned() {
        let mut seq = Sequences::new();
        let tables = [
            seq.table(SequenceId::All, 1, 3, Method::Recurrence)
                .unwrap(),
            seq.table(SequenceId::Irreducible, 1, 3, Method::Recurrence)
                .unwrap(),
        ];
        assert_eq!(
            emit_table(&tables, EmitFormat::Csv).unwrap(),
            "n,all,irreducible\n1,1,1\n2,3,2\n3,15,10\n"
        );
        let aligned = emit_table(&tables, EmitFormat::AlignedText).unwrap();
        assert_eq!(aligned.lines().count(), 4);
        assert!(aligned.lines().next().unwrap().contains("irreducible"));
        // deterministic output
        assert_eq!(
            aligned,
            emit_table(&tables, EmitFormat::AlignedText).unwrap()
        );
    }

    #[test]
    fn emit_bfile_round_trips_and_rejects_multi() {
        let mut seq = Sequences::new();
        let table = seq
            .table(SequenceId::Palindrome, 1, 12, Method::ClosedForm)
            .unwrap();
        let text = emit_table(std::slice::from_ref(&table), EmitFormat::Bfile).unwrap();
        let parsed = parse_bfile("L", &text).unwrap();
        assert_eq!(parsed.len(), 12);
        assert_eq!(parsed.value(12), Some(&BigInt::from(3609673)));
        assert!(matches!(
            emit_table(&[table.clone(), table], EmitFormat::Bfile),
            Err(SeqIoError::BfileNeedsSingleTable(2))
        ));
    }

    #[test]
    fn emit_rejects_mismatched_ranges_and_empty() {
        let mut seq = Sequences::new();
        let a = seq
            .table(SequenceId::All, 1, 3, Method::Recurrence)
            .unwrap();
        let b = seq
            .table(SequenceId::All, 1, 4, Method::Recurrence)
            .unwrap();
        assert_eq!(
            emit_table(&[a, b], EmitFormat::Csv),
            Err(SeqIoError::MismatchedRanges)
        );
        assert_eq!(emit_table(&[], EmitFormat::Csv), Err(SeqIoError::NoTables));
    }

    #[test]
    fn json_lines_are_valid_json() {
        let mut seq = Sequences::new();
        let tables = [
            seq.table(SequenceId::All, 1, 2, Method::Recurrence)
                .unwrap(),
            seq.table(SequenceId::Palindrome, 1, 2, Method::Recurrence)
                .unwrap(),
        ];
        let text = emit_table(&tables, EmitFormat::JsonLines).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        let v: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["all"], "3");
        assert_eq!(v["palindrome"], "3");
    }

    #[test]
    fn format_names_round_trip() {
        for f in EmitFormat::ALL {
            assert_eq!(EmitFormat::parse(f.name()), Some(f));
        }
        assert_eq!(EmitFormat::parse("yaml"), None);
    }
}
