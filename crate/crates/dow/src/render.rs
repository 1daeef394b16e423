//! Static SVG drawings of a double occurrence word.
//!
//! Two styles: a *chord diagram* places the `2n` letter occurrences on a
//! circle, read clockwise from a base point marked with a double tick, and
//! joins equal letters with straight chords; a *linked diagram* places them
//! on a horizontal line in word order and joins equal letters with
//! semicircular arcs above the line. Chord crossings and arc crossings are
//! data, not layout accidents (they are exactly the circle-graph edges), so
//! no crossing reduction is attempted.
//!
//! Output is deterministic: fixed element order, coordinates formatted to
//! two decimals. Connectors carry `class="connector"`, letter labels
//! `class="label"`, and the base mark `class="base-mark"`, so consumers can
//! count parts structurally.

use std::f64::consts::PI;
use std::fmt::Write as _;

use thiserror::Error;

use crate::word::Dow;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RenderError {
    #[error("cannot draw the empty word")]
    EmptyWord,
    #[error("geometry values must be positive")]
    BadGeometry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramStyle {
    Chord,
    Linked,
}

impl DiagramStyle {
    pub fn name(self) -> &'static str {
        match self {
            DiagramStyle::Chord => "chord",
            DiagramStyle::Linked => "linked",
        }
    }

    pub fn parse(s: &str) -> Option<DiagramStyle> {
        match s {
            "chord" => Some(DiagramStyle::Chord),
            "linked" => Some(DiagramStyle::Linked),
            _ => None,
        }
    }
}

/// Square canvas of side `canvas`; `span` is the circle radius (chord) or
/// half the baseline length (linked); `font_size` scales labels and the
/// base mark.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    pub canvas: f64,
    pub span: f64,
    pub font_size: f64,
}

impl Default for Geometry {
    fn default() -> Self {
        Geometry {
            canvas: 400.0,
            span: 150.0,
            font_size: 14.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagramSpec {
    pub word: Dow,
    pub style: DiagramStyle,
    pub geometry: Geometry,
    pub base_point_mark: bool,
}

impl DiagramSpec {
    pub fn new(word: Dow, style: DiagramStyle) -> Self {
        DiagramSpec {
            word,
            style,
            geometry: Geometry::default(),
            base_point_mark: true,
        }
    }
}

/// Pairs each position with the other occurrence of its letter, first
/// occurrence first.
fn chord_pairs(w: &Dow) -> Vec<(usize, usize)> {
    let letters = w.letters();
    let mut first: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    let mut pairs = Vec::with_capacity(w.size());
    for (i, &l) in letters.iter().enumerate() {
        match first.get(&l) {
            None => {
                first.insert(l, i);
            }
            Some(&f) => pairs.push((f, i)),
        }
    }
    pairs
}

/// Renders the diagram as a standalone SVG 1.1 document.
pub fn render_svg(spec: &DiagramSpec) -> Result<String, RenderError> {
    if spec.word.is_empty() {
        return Err(RenderError::EmptyWord);
    }
    let g = spec.geometry;
    if g.canvas <= 0.0 || g.span <= 0.0 || g.font_size <= 0.0 {
        return Err(RenderError::BadGeometry);
    }
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{c:.2}" height="{c:.2}" viewBox="0 0 {c:.2} {c:.2}">"#,
        c = g.canvas
    );
    match spec.style {
        DiagramStyle::Chord => chord_body(spec, &mut out),
        DiagramStyle::Linked => linked_body(spec, &mut out),
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn chord_body(spec: &DiagramSpec, out: &mut String) {
    let g = spec.geometry;
    let letters = spec.word.letters();
    let m = letters.len();
    let c = g.canvas / 2.0;
    // endpoints sit clockwise from the top, offset half a step so the base
    // point at twelve o'clock falls between the last and first of them
    let point = |i: usize| {
        let theta = -PI / 2.0 + 2.0 * PI * (i as f64 + 0.5) / m as f64;
        (c + g.span * theta.cos(), c + g.span * theta.sin())
    };
    let _ = writeln!(
        out,
        r#"  <circle class="outline" cx="{c:.2}" cy="{c:.2}" r="{r:.2}" fill="none" stroke="black"/>"#,
        r = g.span
    );
    for (a, b) in chord_pairs(&spec.word) {
        let (x1, y1) = point(a);
        let (x2, y2) = point(b);
        let _ = writeln!(
            out,
            r#"  <line class="connector" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black"/>"#
        );
    }
    let label_r = g.span + g.font_size;
    for (i, &l) in letters.iter().enumerate() {
        let theta = -PI / 2.0 + 2.0 * PI * (i as f64 + 0.5) / m as f64;
        let (x, y) = (c + label_r * theta.cos(), c + label_r * theta.sin());
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{x:.2}" y="{y:.2}" font-size="{fs:.2}" text-anchor="middle" dominant-baseline="central">{l}</text>"#,
            fs = g.font_size
        );
    }
    if spec.base_point_mark {
        let half = 0.6 * g.font_size;
        let sep = 0.2 * g.font_size;
        let top = c - g.span;
        let _ = writeln!(out, r#"  <g class="base-mark" stroke="black">"#);
        for x in [c - sep, c + sep] {
            let _ = writeln!(
                out,
                r#"    <line x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{y2:.2}"/>"#,
                y1 = top - half,
                y2 = top + half
            );
        }
        let _ = writeln!(out, "  </g>");
    }
}

fn linked_body(spec: &DiagramSpec, out: &mut String) {
    let g = spec.geometry;
    let letters = spec.word.letters();
    let m = letters.len();
    let c = g.canvas / 2.0;
    let y = 0.6 * g.canvas;
    // m = 2n >= 2, so the spread below never divides by zero
    let x_at = |i: usize| c - g.span + 2.0 * g.span * i as f64 / (m - 1) as f64;
    let _ = writeln!(
        out,
        r#"  <line class="outline" x1="{x1:.2}" y1="{y:.2}" x2="{x2:.2}" y2="{y:.2}" stroke="black"/>"#,
        x1 = c - g.span - g.font_size,
        x2 = c + g.span + g.font_size
    );
    for (a, b) in chord_pairs(&spec.word) {
        let (xa, xb) = (x_at(a), x_at(b));
        let r = (xb - xa) / 2.0;
        let _ = writeln!(
            out,
            r#"  <path class="connector" d="M {xa:.2} {y:.2} A {r:.2} {r:.2} 0 0 1 {xb:.2} {y:.2}" fill="none" stroke="black"/>"#
        );
    }
    for (i, &l) in letters.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{x:.2}" y="{ly:.2}" font-size="{fs:.2}" text-anchor="middle">{l}</text>"#,
            x = x_at(i),
            ly = y + 1.4 * g.font_size,
            fs = g.font_size
        );
    }
    if spec.base_point_mark {
        let half = 0.6 * g.font_size;
        let sep = 0.4 * g.font_size;
        let x0 = c - g.span - g.font_size;
        let _ = writeln!(out, r#"  <g class="base-mark" stroke="black">"#);
        for x in [x0, x0 + sep] {
            let _ = writeln!(
                out,
                r#"    <line x1="{x:.2}" y1="{y1:.2}" x2="{x:.2}" y2="{y2:.2}"/>"#,
                y1 = y - half,
                y2 = y + half
            );
        }
        let _ = writeln!(out, "  </g>");
    }
}
