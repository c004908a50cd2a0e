//! Exact-arithmetic incidence geometry for counting ordinary lines.
//!
//! An *ordinary line* of a finite point set is a line containing exactly two of
//! its points. This crate enumerates spanned lines and planes of point sets in
//! the plane and in space over the rationals (and, for planar sets, over the
//! Eisenstein field `Q(ω)`), generates the standard extremal configurations,
//! evaluates the constants of the quadratic lower bound for sets with a
//! coplanarity cap, and searches for sets with few ordinary lines.
//!
//! All arithmetic is exact; there is no floating point in any predicate.

pub mod analysis;
pub mod constructions;
pub mod error;
pub mod field;
pub mod geometry;
pub mod incidence;
pub mod io;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod pointset;
pub mod search;

pub use error::{Error, Result};
pub use field::{Eisenstein, Field, Rational};
pub use geometry::{
    canon_line, canon_plane, collinear, coplanar, incident, CanonLine2, CanonLine3, CanonPlane, Incident, Line,
    Point, PointKind,
};
pub use incidence::{
    image_point_set, kelly_trace, max_collinear, max_coplanar, ordinary_lines, plane_summary, point_degrees,
    project_from, span_summary, spanned_lines, ImageGroup, KellyTraceReport, PlaneSummary, ProjectionImage,
    SpanSummary, SpannedLine, SpannedPlane,
};
pub use io::{parse_pointset, write_pointset, AnyPointSet, ParseError, ParseErrorKind};
pub use pointset::PointSet;
