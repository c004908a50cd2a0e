//! Spanned lines and planes, ordinary-line counts, radial projection, and the
//! projection trace that turns image lines into ordinary lines.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::error::{degenerate, usage, Error, Result};
use crate::field::{Field, Rational};
use crate::geometry::{canon_line, canon_plane, collinear, CanonLine3, CanonPlane, Line, Point, PointKind};
use crate::pointset::PointSet;

/// A line spanned by the set, with the sorted indices of the points on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpannedLine<F> {
    pub line: Line<F>,
    pub members: Vec<usize>,
}

/// Multiplicity histogram of spanned lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanSummary {
    pub n: usize,
    /// `t[k]` = number of spanned lines with exactly `k` points.
    pub t: BTreeMap<usize, usize>,
    pub num_lines: usize,
    pub ordinary: usize,
    pub max_collinear: usize,
}

impl SpanSummary {
    pub fn t(&self, k: usize) -> usize {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// `Σ_k C(k,2)·t_k`, which must equal `C(n,2)`.
    pub fn pair_total(&self) -> usize {
        self.t.iter().map(|(&k, &c)| k * (k - 1) / 2 * c).sum()
    }

    pub fn pair_identity_holds(&self) -> bool {
        self.pair_total() == self.n * (self.n - 1) / 2
    }
}

/// A plane spanned by the set, with the sorted indices of the points on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpannedPlane<F> {
    pub plane: CanonPlane<F>,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSummary<F> {
    /// Sorted by canonical plane.
    pub planes: Vec<SpannedPlane<F>>,
    pub max_coplanar: usize,
}

impl<F: Field> PlaneSummary<F> {
    pub fn plane_counts(&self) -> BTreeMap<CanonPlane<F>, usize> {
        self.planes
            .iter()
            .map(|p| (p.plane.clone(), p.members.len()))
            .collect()
    }

    /// `h[k]` = number of spanned planes with exactly `k` points.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for p in &self.planes {
            *h.entry(p.members.len()).or_insert(0) += 1;
        }
        h
    }
}

fn require_pairs<F: Field>(set: &PointSet<F>) -> Result<()> {
    if set.len() < 2 {
        return usage(format!("need at least 2 points, got {}", set.len()));
    }
    Ok(())
}

/// Every spanned line with its members, sorted by canonical line.
///
/// All `C(n,2)` pairs are grouped by canonical key in a hash map.
pub fn spanned_lines<F: Field>(set: &PointSet<F>) -> Result<Vec<SpannedLine<F>>> {
    require_pairs(set)?;
    let pts = set.points();
    let mut groups: HashMap<Line<F>, Vec<usize>> = HashMap::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let members = groups.entry(canon_line(&pts[i], &pts[j])?).or_default();
            members.push(i);
            members.push(j);
        }
    }
    let mut lines: Vec<SpannedLine<F>> = groups
        .into_iter()
        .map(|(line, mut members)| {
            members.sort_unstable();
            members.dedup();
            SpannedLine { line, members }
        })
        .collect();
    lines.sort_by(|a, b| a.line.cmp(&b.line));
    Ok(lines)
}

pub fn summarize_lines<F>(n: usize, lines: &[SpannedLine<F>]) -> SpanSummary {
    let mut t = BTreeMap::new();
    for l in lines {
        *t.entry(l.members.len()).or_insert(0) += 1;
    }
    SpanSummary {
        n,
        num_lines: lines.len(),
        ordinary: t.get(&2).copied().unwrap_or(0),
        max_collinear: t.keys().next_back().copied().unwrap_or(0),
        t,
    }
}

pub fn span_summary<F: Field>(set: &PointSet<F>) -> Result<SpanSummary> {
    Ok(summarize_lines(set.len(), &spanned_lines(set)?))
}

/// Lines with exactly two points of the set, sorted canonically.
pub fn ordinary_lines<F: Field>(set: &PointSet<F>) -> Result<Vec<Line<F>>> {
    Ok(spanned_lines(set)?
        .into_iter()
        .filter(|l| l.members.len() == 2)
        .map(|l| l.line)
        .collect())
}

pub fn max_collinear<F: Field>(set: &PointSet<F>) -> Result<usize> {
    Ok(span_summary(set)?.max_collinear)
}

/// Number of distinct spanned lines through each point.
pub fn point_degrees<F: Field>(set: &PointSet<F>) -> Result<Vec<usize>> {
    let mut degrees = vec![0; set.len()];
    for l in spanned_lines(set)? {
        for m in l.members {
            degrees[m] += 1;
        }
    }
    Ok(degrees)
}

/// Spanned planes from an already computed line list.
///
/// Each plane is generated from a (spanned line, off-line point) pair and
/// deduplicated by its canonical key.
pub fn planes_from_lines<F: Field>(
    set: &PointSet<F>,
    lines: &[SpannedLine<F>],
) -> Result<PlaneSummary<F>> {
    if set.kind() != PointKind::Affine3 {
        return usage(format!("plane enumeration needs affine 3D points, got {}", set.kind()));
    }
    if set.len() < 3 || lines.len() <= 1 {
        return degenerate("all points are collinear; spanned planes are undefined");
    }
    let pts = set.points();
    let mut groups: HashMap<CanonPlane<F>, BTreeSet<usize>> = HashMap::new();
    for l in lines {
        let (a, b) = (&pts[l.members[0]], &pts[l.members[1]]);
        let mut on_line = vec![false; pts.len()];
        for &m in &l.members {
            on_line[m] = true;
        }
        for (k, p) in pts.iter().enumerate() {
            if on_line[k] {
                continue;
            }
            let members = groups.entry(canon_plane(a, b, p)?).or_default();
            members.extend(l.members.iter().copied());
            members.insert(k);
        }
    }
    let mut planes: Vec<SpannedPlane<F>> = groups
        .into_iter()
        .map(|(plane, members)| SpannedPlane {
            plane,
            members: members.into_iter().collect(),
        })
        .collect();
    planes.sort_by(|a, b| a.plane.cmp(&b.plane));
    let max_coplanar = planes.iter().map(|p| p.members.len()).max().unwrap_or(0);
    Ok(PlaneSummary {
        planes,
        max_coplanar,
    })
}

pub fn plane_summary<F: Field>(set: &PointSet<F>) -> Result<PlaneSummary<F>> {
    if set.kind() != PointKind::Affine3 {
        return usage(format!("plane enumeration needs affine 3D points, got {}", set.kind()));
    }
    if set.len() < 2 {
        return usage(format!("need at least 2 points, got {}", set.len()));
    }
    planes_from_lines(set, &spanned_lines(set)?)
}

pub fn max_coplanar<F: Field>(set: &PointSet<F>) -> Result<usize> {
    Ok(plane_summary(set)?.max_coplanar)
}

/// Largest number of points on a plane through `pts[i]`, or `None` when every
/// point is collinear with `pts[i]` and some other point (no plane is spanned).
pub(crate) fn max_coplanar_through<F: Field>(pts: &[Point<F>], i: usize) -> Result<Option<usize>> {
    let mut groups: HashMap<CanonPlane<F>, HashSet<usize>> = HashMap::new();
    for j in 0..pts.len() {
        if j == i {
            continue;
        }
        for k in j + 1..pts.len() {
            if k == i || collinear(&pts[i], &pts[j], &pts[k])? {
                continue;
            }
            let members = groups.entry(canon_plane(&pts[i], &pts[j], &pts[k])?).or_default();
            members.insert(j);
            members.insert(k);
        }
    }
    // Points collinear with pts[i] and a member are picked up through their own
    // non-collinear pairs, unless every other point is on one line through pts[i].
    Ok(groups.values().map(|m| m.len() + 1).max())
}

/// One class of the radial projection: a direction from the center and the
/// source points that map to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageGroup<F> {
    pub direction: Point<F>,
    pub preimages: Vec<usize>,
}

/// Image of `P \ {center}` under projection from the center.
///
/// Images are projective directions of the lines joining each point to the
/// center, so no auxiliary image plane has to be chosen.
#[derive(Clone, Debug)]
pub struct ProjectionImage<'a, F> {
    pub source: &'a PointSet<F>,
    pub center: usize,
    /// In order of first appearance by source index.
    pub groups: Vec<ImageGroup<F>>,
}

pub fn project_from<F: Field>(set: &PointSet<F>, center: usize) -> Result<ProjectionImage<'_, F>> {
    if set.kind() != PointKind::Affine3 {
        return usage(format!("projection needs affine 3D points, got {}", set.kind()));
    }
    if set.len() < 2 {
        return usage("projection needs at least 2 points");
    }
    let c = set.check_index(center)?;
    let mut groups: Vec<ImageGroup<F>> = Vec::new();
    let mut slot: HashMap<Point<F>, usize> = HashMap::new();
    for (i, p) in set.iter().enumerate() {
        if i == center {
            continue;
        }
        let direction = Point::new(PointKind::Projective2, p.minus(c))?;
        match slot.get(&direction) {
            Some(&g) => groups[g].preimages.push(i),
            None => {
                slot.insert(direction.clone(), groups.len());
                groups.push(ImageGroup {
                    direction,
                    preimages: vec![i],
                });
            }
        }
    }
    Ok(ProjectionImage {
        source: set,
        center,
        groups,
    })
}

/// The projected set `Q1` as projective points, and for each point whether it
/// has a unique preimage (membership in `Q2`).
pub fn image_point_set<F: Field>(img: &ProjectionImage<'_, F>) -> Result<(PointSet<F>, Vec<bool>)> {
    let points = img.groups.iter().map(|g| g.direction.clone()).collect();
    let unique = img.groups.iter().map(|g| g.preimages.len() == 1).collect();
    let label = format!("{} projected from point {}", img.source.label(), img.center);
    Ok((PointSet::new(label, points)?, unique))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KellyTraceReport {
    pub center: usize,
    pub q1_size: usize,
    pub q2_size: usize,
    /// Image lines with at least two image points and no unique-preimage point.
    pub l1_size: usize,
    /// One ordinary line of `P` avoiding the center for each line of `L1`.
    pub found_ordinary: Vec<CanonLine3<Rational>>,
}

/// Runs the projection argument from `center` end to end.
///
/// For each image line `ℓ` carrying only multiply-covered image points, the
/// plane through the center and the preimages of `ℓ` is searched exhaustively
/// for an ordinary line that misses the center. Over the rationals such a line
/// always exists; failing to find one, or any output failing re-verification
/// against the full set, is reported as [`Error::InvariantViolation`].
pub fn kelly_trace(set: &PointSet<Rational>, center: usize) -> Result<KellyTraceReport> {
    let img = project_from(set, center)?;
    let (q1, unique) = image_point_set(&img)?;
    let q2_size = unique.iter().filter(|&&u| u).count();
    let mut report = KellyTraceReport {
        center,
        q1_size: q1.len(),
        q2_size,
        l1_size: 0,
        found_ordinary: Vec::new(),
    };
    if q1.len() < 2 {
        return Ok(report);
    }
    let l1: Vec<SpannedLine<Rational>> = spanned_lines(&q1)?
        .into_iter()
        .filter(|l| l.members.iter().all(|&m| !unique[m]))
        .collect();
    report.l1_size = l1.len();

    for image_line in &l1 {
        // center first, so local index 0 is the center
        let mut plane_points = vec![center];
        for &g in &image_line.members {
            plane_points.extend(&img.groups[g].preimages);
        }
        let sub = set.subset(&plane_points)?;
        let found = spanned_lines(&sub)?
            .into_iter()
            .find(|l| l.members.len() == 2 && l.members[0] != 0)
            .and_then(|l| l.line.as_spatial().cloned());
        match found {
            Some(line) => report.found_ordinary.push(line),
            None => {
                return Err(Error::InvariantViolation(format!(
                    "no ordinary line avoiding the center in the plane of image line {:?}",
                    image_line.line
                )))
            }
        }
    }
    verify_trace(set, &report)?;
    Ok(report)
}

fn verify_trace(set: &PointSet<Rational>, report: &KellyTraceReport) -> Result<()> {
    let violation = |msg: String| Err(Error::InvariantViolation(msg));
    let distinct: HashSet<_> = report.found_ordinary.iter().collect();
    if distinct.len() != report.found_ordinary.len() {
        return violation("trace returned a repeated line".into());
    }
    if report.found_ordinary.len() < report.l1_size {
        return violation("fewer ordinary lines than image lines".into());
    }
    let center = &set.points()[report.center];
    for line in &report.found_ordinary {
        if line.contains(center)? {
            return violation(format!("line {:?} passes through the center", line.plucker()));
        }
        let on = set.iter().try_fold(0usize, |acc, p| Ok::<_, Error>(acc + line.contains(p)? as usize))?;
        if on != 2 {
            return violation(format!("line {:?} carries {on} points", line.plucker()));
        }
    }
    Ok(())
}
