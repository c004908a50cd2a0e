//! JSON rendering of core results.
//!
//! Every rational is an object `{"exact": "a/b", "approx": <f64>}`. The exact
//! string is authoritative; `approx` is a presentational decimal and is never
//! read back.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use ordlines_core::analysis::{
    AlmostCoplanarReport, BeckReport, BoundConstants, ConcurrentProbe, SkewBoundReport, SmallLineCounts,
    SylvesterGallaiReport,
};
use ordlines_core::constructions::BoroczkyModelSummary;
use ordlines_core::search::SearchResult;
use ordlines_core::{Field, KellyTraceReport, Line, PlaneSummary, Point, PointSet, Rational, SpanSummary};
use serde_json::{json, Map, Value};

/// Exact `a/b` form, with `b = 1` written out.
pub fn exact_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational(r: &Rational) -> Value {
    json!({
        "exact": exact_string(r),
        "approx": r.to_f64(),
    })
}

/// Parses the `exact` member of a rational object back into a rational.
pub fn parse_exact(v: &Value) -> Option<Rational> {
    v.get("exact")?.as_str()?.parse().ok()
}

fn histogram(h: &BTreeMap<usize, usize>) -> Value {
    Value::Object(h.iter().map(|(k, c)| (k.to_string(), json!(c))).collect())
}

pub fn point<F: Field>(p: &Point<F>) -> Value {
    Value::Array(p.coords().iter().map(|c| json!(c.to_string())).collect())
}

pub fn point_set<F: Field>(set: &PointSet<F>) -> Value {
    Value::Array(set.iter().map(point).collect())
}

pub fn line<F: Field>(l: &Line<F>) -> Value {
    Value::Array(l.coefficients().iter().map(|c| json!(c.to_string())).collect())
}

pub fn span_summary(s: &SpanSummary) -> Value {
    json!({
        "n": s.n,
        "num_lines": s.num_lines,
        "ordinary": s.ordinary,
        "max_collinear": s.max_collinear,
        "t": histogram(&s.t),
        "pair_identity_holds": s.pair_identity_holds(),
    })
}

pub fn plane_summary<F: Field>(p: &PlaneSummary<F>, with_members: bool) -> Value {
    let mut v = json!({
        "num_planes": p.planes.len(),
        "max_coplanar": p.max_coplanar,
        "histogram": histogram(&p.histogram()),
    });
    if with_members {
        v["planes"] = p
            .planes
            .iter()
            .map(|pl| {
                json!({
                    "coefficients": pl.plane.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "members": pl.members,
                })
            })
            .collect();
    }
    v
}

pub fn beck(b: &BeckReport) -> Value {
    json!({
        "n": b.n,
        "num_lines": b.num_lines,
        "max_collinear": b.max_collinear,
        "ratio_lines": rational(&b.ratio_lines),
        "ratio_collinear": rational(&b.ratio_collinear),
    })
}

pub fn small_lines(s: &SmallLineCounts) -> Value {
    json!({
        "n": s.n,
        "n_squared": s.n_squared,
        "lines_le3": s.lines_le3,
        "lines_le4": s.lines_le4,
    })
}

pub fn bound_constants(c: &BoundConstants) -> Value {
    let fields: [(&str, &Rational); 13] = [
        ("alpha", &c.alpha),
        ("beta", &c.beta),
        ("gamma", &c.gamma),
        ("alpha0", &c.alpha0),
        ("c_alpha0", &c.c_alpha0),
        ("mu", &c.mu),
        ("nu", &c.nu),
        ("gamma_prime_case1", &c.gamma_prime_case1),
        ("gamma_prime_case2b", &c.gamma_prime_case2b),
        ("d_case1", &c.d_case1),
        ("d_case2a", &c.d_case2a),
        ("d_case2b", &c.d_case2b),
        ("d_alpha", &c.d_alpha),
    ];
    Value::Object(fields.iter().map(|(k, v)| (k.to_string(), rational(v))).collect::<Map<_, _>>())
}

/// `lines` gives, for each found ordinary line, the indices of its two points.
pub fn kelly_trace(r: &KellyTraceReport, lines: &[Vec<usize>]) -> Value {
    json!({
        "center": r.center,
        "q1_size": r.q1_size,
        "q2_size": r.q2_size,
        "l1_size": r.l1_size,
        "found_ordinary": r.found_ordinary.iter().zip(lines).map(|(l, m)| json!({
            "plucker": l.plucker().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "members": m,
        })).collect::<Vec<_>>(),
    })
}

pub fn search_result(r: &SearchResult) -> Value {
    json!({
        "n": r.best.len(),
        "best_count": r.best_count,
        "ratio": rational(&r.ratio),
        "cap": r.cap,
        "max_coplanar": r.max_coplanar,
        "accepted_moves": r.accepted_moves,
        "trace": r.trace.iter().map(|(i, c)| json!({"iteration": i, "count": c})).collect::<Vec<_>>(),
        "plane_stats": r.plane_stats.iter().map(|p| json!({
            "points_on_plane": p.points_on_plane,
            "ordinary_in_plane": p.ordinary_in_plane,
        })).collect::<Vec<_>>(),
        "best": point_set(&r.best),
    })
}

pub fn boroczky(b: &BoroczkyModelSummary) -> Value {
    json!({
        "m": b.m,
        "n": b.n,
        "ordinary": b.ordinary,
        "num_lines": b.num_lines,
        "t": histogram(&b.t),
    })
}

pub fn sylvester_gallai<F: Field>(r: &SylvesterGallaiReport<F>) -> Value {
    json!({
        "holds": r.holds,
        "collinear": r.collinear,
        "ordinary": r.ordinary,
        "witness": r.witness.as_ref().map(line),
    })
}

pub fn skew_bound(r: &SkewBoundReport) -> Value {
    json!({
        "on_first": r.on_first,
        "on_second": r.on_second,
        "ordinary": r.lhs,
        "bound": r.rhs,
        "holds": r.holds,
    })
}

pub fn almost_coplanar(r: &AlmostCoplanarReport) -> Value {
    json!({
        "n": r.n,
        "k": r.k,
        "max_coplanar": r.max_coplanar,
        "ordinary": r.count,
        "bound": rational(&r.bound),
        "holds": r.holds,
        "caveat": r.caveat,
    })
}

pub fn concurrent(r: &ConcurrentProbe) -> Value {
    json!({
        "contained_in": r.contained_in,
        "ordinary_avoiding_apex": r.ordinary_avoiding_apex,
        "guarantee_holds": r.guarantee_holds,
    })
}
