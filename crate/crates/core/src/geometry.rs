//! Points, exact incidence predicates, and canonical hashable forms for lines
//! and planes.
//!
//! Homogeneous conventions:
//! * affine plane point `(x, y)` ↦ `(x, y, 1)`; a planar line `(a, b, c)` is
//!   the set `ax + by + c = 0` (same formula for projective points);
//! * affine space point `(x, y, z)` ↦ `(1, x, y, z)`; a spatial line is the
//!   Plücker vector `p_ij = a_i b_j − a_j b_i` ordered
//!   `(p01, p02, p03, p12, p13, p23)`, so `(p01, p02, p03)` is a direction;
//! * a plane `(a, b, c, d)` is the set `ax + by + cz + d = 0`.

use std::fmt;

use crate::error::{degenerate, usage, Result};
use crate::field::{leading_one, Field};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    Affine2,
    Affine3,
    Projective2,
}

impl PointKind {
    /// Number of stored coordinates.
    pub fn arity(self) -> usize {
        match self {
            PointKind::Affine2 => 2,
            PointKind::Affine3 | PointKind::Projective2 => 3,
        }
    }

    pub fn is_planar(self) -> bool {
        !matches!(self, PointKind::Affine3)
    }
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Affine2 => "affine 2D",
            PointKind::Affine3 => "affine 3D",
            PointKind::Projective2 => "projective 2D",
        })
    }
}

/// A point over the field `F`. Projective points are stored with their first
/// nonzero coordinate equal to one, so equality is structural for every kind.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point<F> {
    kind: PointKind,
    coords: Vec<F>,
}

impl<F: Field> Point<F> {
    pub fn new(kind: PointKind, mut coords: Vec<F>) -> Result<Self> {
        if coords.len() != kind.arity() {
            return usage(format!(
                "{kind} point needs {} coordinates, got {}",
                kind.arity(),
                coords.len()
            ));
        }
        if kind == PointKind::Projective2 {
            if coords.iter().all(F::is_zero) {
                return degenerate("projective point with all coordinates zero");
            }
            leading_one(&mut coords);
        }
        Ok(Self { kind, coords })
    }

    pub fn affine2(x: F, y: F) -> Self {
        Self {
            kind: PointKind::Affine2,
            coords: vec![x, y],
        }
    }

    pub fn affine3(x: F, y: F, z: F) -> Self {
        Self {
            kind: PointKind::Affine3,
            coords: vec![x, y, z],
        }
    }

    pub fn projective2(x: F, y: F, z: F) -> Result<Self> {
        Self::new(PointKind::Projective2, vec![x, y, z])
    }

    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// Homogeneous coordinates per the module conventions.
    pub fn homogeneous(&self) -> Vec<F> {
        match self.kind {
            PointKind::Affine2 => {
                vec![self.coords[0].clone(), self.coords[1].clone(), F::one()]
            }
            PointKind::Projective2 => self.coords.clone(),
            PointKind::Affine3 => {
                let mut h = Vec::with_capacity(4);
                h.push(F::one());
                h.extend(self.coords.iter().cloned());
                h
            }
        }
    }

    /// Coordinate-wise difference `self − other` (affine kinds).
    pub(crate) fn minus(&self, other: &Self) -> Vec<F> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.clone() - b.clone())
            .collect()
    }
}

impl<F: Field> fmt::Display for Point<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn det2<F: Field>(a: &F, b: &F, c: &F, d: &F) -> F {
    a.clone() * d.clone() - b.clone() * c.clone()
}

pub(crate) fn cross3<F: Field>(u: &[F], v: &[F]) -> [F; 3] {
    [
        det2(&u[1], &u[2], &v[1], &v[2]),
        det2(&u[2], &u[0], &v[2], &v[0]),
        det2(&u[0], &u[1], &v[0], &v[1]),
    ]
}

pub(crate) fn dot<F: Field>(u: &[F], v: &[F]) -> F {
    u.iter()
        .zip(v)
        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

pub(crate) fn det3<F: Field>(r0: &[F], r1: &[F], r2: &[F]) -> F {
    dot(r0, &cross3(r1, r2))
}

fn same_kind<F: Field>(points: &[&Point<F>]) -> Result<PointKind> {
    let kind = points[0].kind;
    if let Some(p) = points.iter().find(|p| p.kind != kind) {
        return usage(format!("mixed point kinds: {kind} and {}", p.kind));
    }
    Ok(kind)
}

/// True iff the three points lie on a common line.
pub fn collinear<F: Field>(p: &Point<F>, q: &Point<F>, r: &Point<F>) -> Result<bool> {
    Ok(match same_kind(&[p, q, r])? {
        PointKind::Affine2 => {
            let u = q.minus(p);
            let v = r.minus(p);
            det2(&u[0], &u[1], &v[0], &v[1]).is_zero()
        }
        PointKind::Affine3 => cross3(&q.minus(p), &r.minus(p)).iter().all(F::is_zero),
        PointKind::Projective2 => det3(&p.coords, &q.coords, &r.coords).is_zero(),
    })
}

/// True iff the four affine 3D points lie on a common plane.
pub fn coplanar<F: Field>(p: &Point<F>, q: &Point<F>, r: &Point<F>, s: &Point<F>) -> Result<bool> {
    if same_kind(&[p, q, r, s])? != PointKind::Affine3 {
        return usage("coplanarity is defined for affine 3D points only");
    }
    Ok(det3(&q.minus(p), &r.minus(p), &s.minus(p)).is_zero())
}

/// Canonical line in a (projective) plane: primitive integer vector with
/// positive leading entry over `Q`, leading-one vector over `Q(ω)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonLine2<F> {
    coeffs: [F; 3],
}

impl<F: Field> CanonLine2<F> {
    pub fn from_coefficients(coeffs: [F; 3]) -> Result<Self> {
        let mut coeffs = coeffs;
        if coeffs.iter().all(F::is_zero) {
            return degenerate("line coefficients all zero");
        }
        F::canonicalize(&mut coeffs);
        Ok(Self { coeffs })
    }

    pub fn coefficients(&self) -> &[F; 3] {
        &self.coeffs
    }

    pub fn contains(&self, p: &Point<F>) -> Result<bool> {
        if !p.kind.is_planar() {
            return usage(format!("planar line tested against {} point", p.kind));
        }
        Ok(dot(&self.coeffs, &p.homogeneous()).is_zero())
    }
}

/// Canonical spatial line as a Plücker 6-vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonLine3<F> {
    plucker: [F; 6],
}

/// Index into the Plücker array for the pair `i < j` of homogeneous slots.
const fn pl(i: usize, j: usize) -> usize {
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

impl<F: Field> CanonLine3<F> {
    fn through(a: &[F], b: &[F]) -> Result<Self> {
        let mut plucker: [F; 6] = std::array::from_fn(|k| {
            let (i, j) = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)][k];
            det2(&a[i], &a[j], &b[i], &b[j])
        });
        if plucker.iter().all(F::is_zero) {
            return degenerate("line through coincident points");
        }
        F::canonicalize(&mut plucker);
        Ok(Self { plucker })
    }

    /// `(p01, p02, p03, p12, p13, p23)`.
    pub fn plucker(&self) -> &[F; 6] {
        &self.plucker
    }

    fn p(&self, i: usize, j: usize) -> &F {
        &self.plucker[pl(i, j)]
    }

    /// `p01·p23 − p02·p13 + p03·p12`; zero for every genuine line.
    pub fn quadric(&self) -> F {
        let p = &self.plucker;
        p[0].clone() * p[5].clone() - p[1].clone() * p[4].clone() + p[2].clone() * p[3].clone()
    }

    /// Membership via the vanishing of every 3×3 minor of `[a; b; x]`.
    pub fn contains(&self, x: &Point<F>) -> Result<bool> {
        if x.kind != PointKind::Affine3 {
            return usage(format!("spatial line tested against {} point", x.kind));
        }
        let c = x.homogeneous();
        for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            let minor = c[i].clone() * self.p(j, k).clone() - c[j].clone() * self.p(i, k).clone()
                + c[k].clone() * self.p(i, j).clone();
            if !minor.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Reciprocal product; zero iff the two lines lie in a common plane
    /// (meeting or parallel).
    pub fn reciprocal_product(&self, other: &Self) -> F {
        let (p, q) = (&self.plucker, &other.plucker);
        p[0].clone() * q[5].clone() - p[1].clone() * q[4].clone() + p[2].clone() * q[3].clone()
            + p[3].clone() * q[2].clone()
            - p[4].clone() * q[1].clone()
            + p[5].clone() * q[0].clone()
    }

    pub fn is_skew_to(&self, other: &Self) -> bool {
        !self.reciprocal_product(other).is_zero()
    }
}

/// Canonical plane `(a, b, c, d)` in affine space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonPlane<F> {
    coeffs: [F; 4],
}

impl<F: Field> CanonPlane<F> {
    pub fn coefficients(&self) -> &[F; 4] {
        &self.coeffs
    }

    pub fn contains(&self, p: &Point<F>) -> Result<bool> {
        if p.kind != PointKind::Affine3 {
            return usage(format!("plane tested against {} point", p.kind));
        }
        let c = &p.coords;
        let value = self.coeffs[0].clone() * c[0].clone()
            + self.coeffs[1].clone() * c[1].clone()
            + self.coeffs[2].clone() * c[2].clone()
            + self.coeffs[3].clone();
        Ok(value.is_zero())
    }
}

/// A spanned line of either dimension; used as the grouping key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Line<F> {
    Planar(CanonLine2<F>),
    Spatial(CanonLine3<F>),
}

impl<F: Field> Line<F> {
    pub fn contains(&self, p: &Point<F>) -> Result<bool> {
        match self {
            Line::Planar(l) => l.contains(p),
            Line::Spatial(l) => l.contains(p),
        }
    }

    pub fn as_spatial(&self) -> Option<&CanonLine3<F>> {
        match self {
            Line::Spatial(l) => Some(l),
            Line::Planar(_) => None,
        }
    }

    pub fn as_planar(&self) -> Option<&CanonLine2<F>> {
        match self {
            Line::Planar(l) => Some(l),
            Line::Spatial(_) => None,
        }
    }

    /// Raw canonical coordinates (3 for planar, 6 for spatial lines).
    pub fn coefficients(&self) -> &[F] {
        match self {
            Line::Planar(l) => l.coefficients(),
            Line::Spatial(l) => l.plucker(),
        }
    }
}

/// Canonical line through two distinct points.
pub fn canon_line<F: Field>(p: &Point<F>, q: &Point<F>) -> Result<Line<F>> {
    let kind = same_kind(&[p, q])?;
    if p == q {
        return degenerate(format!("line through a repeated point {p}"));
    }
    match kind {
        PointKind::Affine2 | PointKind::Projective2 => {
            let coeffs = cross3(&p.homogeneous(), &q.homogeneous());
            Ok(Line::Planar(CanonLine2::from_coefficients(coeffs)?))
        }
        PointKind::Affine3 => Ok(Line::Spatial(CanonLine3::through(
            &p.homogeneous(),
            &q.homogeneous(),
        )?)),
    }
}

/// Canonical plane through three non-collinear affine 3D points.
pub fn canon_plane<F: Field>(p: &Point<F>, q: &Point<F>, r: &Point<F>) -> Result<CanonPlane<F>> {
    if same_kind(&[p, q, r])? != PointKind::Affine3 {
        return usage("planes are spanned by affine 3D points only");
    }
    let normal = cross3(&q.minus(p), &r.minus(p));
    if normal.iter().all(F::is_zero) {
        return degenerate(format!("collinear triple {p}, {q}, {r}"));
    }
    let d = -dot(&normal, &p.coords);
    let [a, b, c] = normal;
    let mut coeffs = [a, b, c, d];
    F::canonicalize(&mut coeffs);
    Ok(CanonPlane { coeffs })
}

/// Objects that can be tested for incidence with a point.
pub trait Incident<F> {
    fn incident(&self, p: &Point<F>) -> Result<bool>;
}

impl<F: Field> Incident<F> for CanonLine2<F> {
    fn incident(&self, p: &Point<F>) -> Result<bool> {
        self.contains(p)
    }
}

impl<F: Field> Incident<F> for CanonLine3<F> {
    fn incident(&self, p: &Point<F>) -> Result<bool> {
        self.contains(p)
    }
}

impl<F: Field> Incident<F> for CanonPlane<F> {
    fn incident(&self, p: &Point<F>) -> Result<bool> {
        self.contains(p)
    }
}

impl<F: Field> Incident<F> for Line<F> {
    fn incident(&self, p: &Point<F>) -> Result<bool> {
        self.contains(p)
    }
}

pub fn incident<F: Field, O: Incident<F> + ?Sized>(object: &O, p: &Point<F>) -> Result<bool> {
    object.incident(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::field::{integer, rational, Eisenstein, Rational};
    use proptest::prelude::*;

    fn p2(x: i64, y: i64) -> Point<Rational> {
        Point::affine2(integer(x), integer(y))
    }

    fn p3(x: i64, y: i64, z: i64) -> Point<Rational> {
        Point::affine3(integer(x), integer(y), integer(z))
    }

    fn ints(v: &[Rational]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect()
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&p3(0, 0, 0), &p3(1, 1, 1), &p3(2, 2, 2)).unwrap());
        assert!(!collinear(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0)).unwrap());
        let pr = |x, y, z| Point::projective2(integer(x), integer(y), integer(z)).unwrap();
        assert!(collinear(&pr(1, 0, 0), &pr(0, 1, 0), &pr(1, 1, 0)).unwrap());
    }

    #[test]
    fn mixed_kinds_are_a_usage_error() {
        let err = collinear(&p3(0, 0, 0), &p3(1, 1, 1), &p2(2, 2)).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
        assert!(matches!(
            coplanar(&p2(0, 0), &p2(1, 0), &p2(0, 1), &p2(1, 1)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn coplanar_examples() {
        assert!(coplanar(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(1, 1, 0)).unwrap());
        assert!(!coplanar(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(0, 0, 1)).unwrap());
        let odd = Point::affine3(rational(1, 2), rational(1, 3), integer(0));
        assert!(coplanar(&p3(0, 0, 0), &p3(2, 0, 0), &p3(0, 3, 0), &odd).unwrap());
    }

    #[test]
    fn canon_line_examples() {
        let x_axis = canon_line(&p2(0, 0), &p2(1, 0)).unwrap();
        assert_eq!(ints(x_axis.coefficients()), vec![0, 1, 0]);

        let a = canon_line(&p3(0, 0, 0), &p3(2, 0, 0)).unwrap();
        let b = canon_line(&p3(-1, 0, 0), &p3(5, 0, 0)).unwrap();
        assert_eq!(a, b);

        let l = canon_line(&p3(0, 0, 0), &p3(1, 2, 3)).unwrap();
        assert!(l.as_spatial().unwrap().quadric().is_zero());
    }

    #[test]
    fn canon_line_rejects_repeated_point() {
        assert!(matches!(canon_line(&p2(3, 4), &p2(3, 4)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn canon_plane_examples() {
        let z0 = canon_plane(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0)).unwrap();
        assert_eq!(ints(z0.coefficients()), vec![0, 0, 1, 0]);
        let z1 = canon_plane(&p3(0, 0, 1), &p3(1, 0, 1), &p3(0, 1, 1)).unwrap();
        assert_eq!(ints(z1.coefficients()), vec![0, 0, 1, -1]);
        let permuted = canon_plane(&p3(0, 1, 0), &p3(0, 0, 0), &p3(1, 0, 0)).unwrap();
        assert_eq!(z0, permuted);
        assert!(matches!(
            canon_plane(&p3(0, 0, 0), &p3(1, 1, 1), &p3(2, 2, 2)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn incident_examples() {
        let x_axis = canon_line(&p2(0, 0), &p2(1, 0)).unwrap();
        assert!(incident(&x_axis, &p2(7, 0)).unwrap());
        let z0 = canon_plane(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0)).unwrap();
        assert!(!incident(&z0, &p3(0, 0, 1)).unwrap());
        let diag = canon_line(&p3(0, 0, 0), &p3(1, 1, 1)).unwrap();
        let half = Point::affine3(rational(1, 2), rational(1, 2), rational(1, 2));
        assert!(incident(&diag, &half).unwrap());
        assert!(matches!(incident(&diag, &p2(0, 0)), Err(Error::Usage(_))));
        assert!(matches!(incident(&z0, &p2(0, 0)), Err(Error::Usage(_))));
    }

    #[test]
    fn skew_detection() {
        let l = canon_line(&p3(1, 0, 0), &p3(2, 0, 0)).unwrap();
        let m = canon_line(&p3(0, 1, 1), &p3(0, 2, 1)).unwrap();
        let parallel = canon_line(&p3(0, 1, 1), &p3(1, 1, 1)).unwrap();
        let meeting = canon_line(&p3(0, 0, 0), &p3(0, 0, 5)).unwrap();
        let (l, m) = (l.as_spatial().unwrap(), m.as_spatial().unwrap());
        assert!(l.is_skew_to(m));
        assert!(!l.is_skew_to(parallel.as_spatial().unwrap()));
        assert!(!l.is_skew_to(meeting.as_spatial().unwrap()));
    }

    #[test]
    fn eisenstein_projective_points_are_leading_one() {
        let w = Eisenstein::omega();
        let p = Point::projective2(w.clone(), w.clone() * w.clone(), Eisenstein::one()).unwrap();
        assert_eq!(p.coords()[0], Eisenstein::one());
        assert_eq!(p.coords()[1], w);
    }

    fn small_q() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rational(n, d))
    }

    fn q3() -> impl Strategy<Value = Point<Rational>> {
        (small_q(), small_q(), small_q()).prop_map(|(x, y, z)| Point::affine3(x, y, z))
    }

    /// Independent check: solve `r = p + t(q − p)` coordinate-wise.
    fn on_segment_line(p: &Point<Rational>, q: &Point<Rational>, r: &Point<Rational>) -> bool {
        let d = q.minus(p);
        let e = r.minus(p);
        let pivot = d.iter().position(|x| !x.is_zero()).unwrap();
        let t = e[pivot].clone() / d[pivot].clone();
        d.iter().zip(&e).all(|(di, ei)| di.clone() * t.clone() == *ei)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn collinear_matches_parametric_solution(p in q3(), q in q3(), r in q3(), snap in any::<bool>()) {
            prop_assume!(p != q);
            // Half of the cases are forced onto the line to exercise the positive branch.
            let r = if snap {
                let t = rational(3, 7);
                let c: Vec<Rational> = p.coords().iter().zip(q.coords())
                    .map(|(a, b)| a.clone() + t.clone() * (b.clone() - a.clone())).collect();
                Point::affine3(c[0].clone(), c[1].clone(), c[2].clone())
            } else { r };
            prop_assert_eq!(collinear(&p, &q, &r).unwrap(), on_segment_line(&p, &q, &r));
            prop_assert_eq!(collinear(&p, &q, &r).unwrap(), collinear(&r, &p, &q).unwrap());
            prop_assert_eq!(collinear(&p, &q, &r).unwrap(), collinear(&q, &p, &r).unwrap());
        }

        #[test]
        fn line_key_independent_of_spanning_pair(p in q3(), q in q3(), ts in prop::collection::vec(small_q(), 4..=6)) {
            prop_assume!(p != q);
            let mut pts = Vec::new();
            for t in ts {
                let c: Vec<Rational> = p.coords().iter().zip(q.coords())
                    .map(|(a, b)| a.clone() + t.clone() * (b.clone() - a.clone())).collect();
                let x = Point::affine3(c[0].clone(), c[1].clone(), c[2].clone());
                if !pts.contains(&x) { pts.push(x); }
            }
            prop_assume!(pts.len() >= 2);
            let reference = canon_line(&pts[0], &pts[1]).unwrap();
            prop_assert!(reference.as_spatial().unwrap().quadric().is_zero());
            for i in 0..pts.len() {
                for j in 0..pts.len() {
                    if i != j {
                        prop_assert_eq!(&canon_line(&pts[i], &pts[j]).unwrap(), &reference);
                    }
                }
                prop_assert!(reference.contains(&pts[i]).unwrap());
            }
        }

        #[test]
        fn plane_key_independent_of_spanning_triple(
            origin in q3(), u in q3(), v in q3(),
            coeffs in prop::collection::vec((small_q(), small_q()), 4..=6),
        ) {
            let zero = Point::affine3(integer(0), integer(0), integer(0));
            prop_assume!(!collinear(&zero, &u, &v).unwrap());
            let mut pts = Vec::new();
            for (s, t) in coeffs {
                let c: Vec<Rational> = (0..3).map(|k| origin.coords()[k].clone()
                    + s.clone() * u.coords()[k].clone() + t.clone() * v.coords()[k].clone()).collect();
                let x = Point::affine3(c[0].clone(), c[1].clone(), c[2].clone());
                if !pts.contains(&x) { pts.push(x); }
            }
            let mut keys = Vec::new();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    for k in j + 1..pts.len() {
                        if !collinear(&pts[i], &pts[j], &pts[k]).unwrap() {
                            keys.push(canon_plane(&pts[i], &pts[j], &pts[k]).unwrap());
                            keys.push(canon_plane(&pts[k], &pts[i], &pts[j]).unwrap());
                        }
                    }
                }
            }
            prop_assume!(!keys.is_empty());
            prop_assert!(keys.iter().all(|k| k == &keys[0]));
            for x in &pts {
                prop_assert!(keys[0].contains(x).unwrap());
            }
        }

        #[test]
        fn planar_line_membership_matches_collinear(
            a in (small_q(), small_q()), b in (small_q(), small_q()), c in (small_q(), small_q())
        ) {
            let (p, q, r) = (Point::affine2(a.0, a.1), Point::affine2(b.0, b.1), Point::affine2(c.0, c.1));
            prop_assume!(p != q);
            let l = canon_line(&p, &q).unwrap();
            prop_assert_eq!(l.contains(&r).unwrap(), collinear(&p, &q, &r).unwrap());
            prop_assert_eq!(&l, &canon_line(&q, &p).unwrap());
        }
    }
}
