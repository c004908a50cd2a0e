//! Plain-text point-set files.
//!
//! ```text
//! # comment lines start with '#'
//! dim=3 kind=affine field=Q
//! 1 0 0
//! 0 1/2 3
//! ```
//!
//! Scalars are `a` or `a/b` (`b > 0`) over `Q`, and additionally `a+b*w` /
//! `a-b*w` over `Qw`. Projective points are stored in leading-one form, so
//! writing a parsed set reproduces the canonical text byte for byte.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::field::{Eisenstein, Field, Rational};
use crate::geometry::{Point, PointKind};
use crate::pointset::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing header `dim=<2|3> kind=<affine|projective> field=<Q|Qw>`")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("unknown field tag `{0}`")]
    UnknownField(String),
    #[error("unsupported point type: {0}")]
    Unsupported(String),
    #[error("malformed scalar: {0}")]
    MalformedScalar(String),
    #[error("expected {expected} coordinates, found {found}")]
    WrongCoordinateCount { expected: usize, found: usize },
    #[error("duplicate point (first given on line {first})")]
    DuplicatePoint { first: usize },
    #[error("projective point with all coordinates zero")]
    ZeroProjective,
    #[error("file contains no points")]
    Empty,
}

/// A parse failure with its 1-based line number (0 for whole-file problems).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// A parsed point set over whichever field the header names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPointSet {
    Rational(PointSet<Rational>),
    Eisenstein(PointSet<Eisenstein>),
}

impl AnyPointSet {
    pub fn len(&self) -> usize {
        match self {
            AnyPointSet::Rational(s) => s.len(),
            AnyPointSet::Eisenstein(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn kind(&self) -> PointKind {
        match self {
            AnyPointSet::Rational(s) => s.kind(),
            AnyPointSet::Eisenstein(s) => s.kind(),
        }
    }

    pub fn field_tag(&self) -> &'static str {
        match self {
            AnyPointSet::Rational(_) => Rational::TAG,
            AnyPointSet::Eisenstein(_) => Eisenstein::TAG,
        }
    }

    pub fn write(&self) -> String {
        match self {
            AnyPointSet::Rational(s) => write_pointset(s),
            AnyPointSet::Eisenstein(s) => write_pointset(s),
        }
    }
}

impl From<PointSet<Rational>> for AnyPointSet {
    fn from(s: PointSet<Rational>) -> Self {
        AnyPointSet::Rational(s)
    }
}

impl From<PointSet<Eisenstein>> for AnyPointSet {
    fn from(s: PointSet<Eisenstein>) -> Self {
        AnyPointSet::Eisenstein(s)
    }
}

fn header_for(kind: PointKind, tag: &str) -> String {
    let (dim, k) = match kind {
        PointKind::Affine2 => (2, "affine"),
        PointKind::Projective2 => (2, "projective"),
        PointKind::Affine3 => (3, "affine"),
    };
    format!("dim={dim} kind={k} field={tag}")
}

pub fn write_pointset<F: Field>(set: &PointSet<F>) -> String {
    let mut out = header_for(set.kind(), F::TAG);
    out.push('\n');
    for p in set {
        let mut first = true;
        for c in p.coords() {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{c}").expect("writing to a String cannot fail");
        }
        out.push('\n');
    }
    out
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

struct Header {
    kind: PointKind,
    field: String,
}

fn parse_header(line_no: usize, line: &str) -> Result<Header, ParseError> {
    let mut dim = None;
    let mut kind = None;
    let mut field = None;
    for token in line.split_whitespace() {
        let Some((key, value)) = token.split_once('=') else {
            return err(line_no, ParseErrorKind::MalformedHeader(format!("token `{token}`")));
        };
        let slot = match key {
            "dim" => &mut dim,
            "kind" => &mut kind,
            "field" => &mut field,
            _ => return err(line_no, ParseErrorKind::MalformedHeader(format!("unknown key `{key}`"))),
        };
        if slot.replace(value).is_some() {
            return err(line_no, ParseErrorKind::MalformedHeader(format!("repeated key `{key}`")));
        }
    }
    let (Some(dim), Some(kind), Some(field)) = (dim, kind, field) else {
        return err(line_no, ParseErrorKind::MissingHeader);
    };
    if field != Rational::TAG && field != Eisenstein::TAG {
        return err(line_no, ParseErrorKind::UnknownField(field.to_string()));
    }
    let kind = match (dim, kind) {
        ("2", "affine") => PointKind::Affine2,
        ("2", "projective") => PointKind::Projective2,
        ("3", "affine") => PointKind::Affine3,
        ("3", "projective") => {
            return err(line_no, ParseErrorKind::Unsupported(format!("dim={dim} kind={kind}")))
        }
        _ => {
            return err(
                line_no,
                ParseErrorKind::MalformedHeader(format!("dim={dim} kind={kind}")),
            )
        }
    };
    if kind == PointKind::Affine3 && field == Eisenstein::TAG {
        return err(line_no, ParseErrorKind::Unsupported("3D sets over Qw".into()));
    }
    Ok(Header {
        kind,
        field: field.to_string(),
    })
}

fn parse_points<'a, F: Field>(
    kind: PointKind,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<PointSet<F>, ParseError> {
    let mut points = Vec::new();
    let mut first_seen: HashMap<Point<F>, usize> = HashMap::new();
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != kind.arity() {
            return err(
                line_no,
                ParseErrorKind::WrongCoordinateCount {
                    expected: kind.arity(),
                    found: tokens.len(),
                },
            );
        }
        let coords = tokens
            .iter()
            .map(|t| F::parse_scalar(t))
            .collect::<Result<Vec<F>, _>>()
            .map_err(|e| ParseError {
                line: line_no,
                kind: ParseErrorKind::MalformedScalar(e),
            })?;
        let point = Point::new(kind, coords).map_err(|_| ParseError {
            line: line_no,
            kind: ParseErrorKind::ZeroProjective,
        })?;
        if let Some(&first) = first_seen.get(&point) {
            return err(line_no, ParseErrorKind::DuplicatePoint { first });
        }
        first_seen.insert(point.clone(), line_no);
        points.push(point);
    }
    if points.is_empty() {
        return err(0, ParseErrorKind::Empty);
    }
    Ok(PointSet::new("", points).expect("validated above"))
}

pub fn parse_pointset(text: &str) -> Result<AnyPointSet, ParseError> {
    let mut lines = content_lines(text);
    let Some((header_no, header_line)) = lines.next() else {
        return err(0, ParseErrorKind::MissingHeader);
    };
    let header = parse_header(header_no, header_line)?;
    if header.field == Eisenstein::TAG {
        parse_points(header.kind, lines).map(AnyPointSet::Eisenstein)
    } else {
        parse_points(header.kind, lines).map(AnyPointSet::Rational)
    }
}
