//! Brute-force reference classifiers.
//!
//! These use only the orientation predicates (no canonical keys, no hashing)
//! and are cubic or quartic in `n`; they exist to cross-check the fast paths.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::Rng;

use crate::constructions::{boroczky_lines, random_rational, ModelPoint};
use crate::error::Result;
use crate::field::{integer, Field, Rational};
use crate::geometry::{collinear, coplanar, Point, PointKind};
use crate::pointset::PointSet;

/// Member sets of all spanned lines, found by testing every third point
/// against every pair.
pub fn naive_line_members<F: Field>(set: &PointSet<F>) -> Result<BTreeSet<Vec<usize>>> {
    let pts = set.points();
    let mut out = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let mut members = Vec::new();
            for k in 0..pts.len() {
                if k == i || k == j || collinear(&pts[i], &pts[j], &pts[k])? {
                    members.push(k);
                }
            }
            out.insert(members);
        }
    }
    Ok(out)
}

/// `t[k]` histogram computed from [`naive_line_members`].
pub fn naive_line_histogram<F: Field>(set: &PointSet<F>) -> Result<BTreeMap<usize, usize>> {
    let mut t = BTreeMap::new();
    for m in naive_line_members(set)? {
        *t.entry(m.len()).or_insert(0) += 1;
    }
    Ok(t)
}

/// Member sets of all spanned planes, found by testing every fourth point
/// against every non-collinear triple.
pub fn naive_plane_members<F: Field>(set: &PointSet<F>) -> Result<BTreeSet<Vec<usize>>> {
    let pts = set.points();
    let n = pts.len();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(&pts[i], &pts[j], &pts[k])? {
                    continue;
                }
                let mut members = Vec::new();
                for l in 0..n {
                    if l == i || l == j || l == k || coplanar(&pts[i], &pts[j], &pts[k], &pts[l])? {
                        members.push(l);
                    }
                }
                out.insert(members);
            }
        }
    }
    Ok(out)
}

/// Number of points on the richest plane, or 0 when no plane is spanned.
pub fn naive_max_coplanar<F: Field>(set: &PointSet<F>) -> Result<usize> {
    Ok(naive_plane_members(set)?.iter().map(Vec::len).max().unwrap_or(0))
}

/// Checks the Böröczky model line list pair by pair: every pair of model
/// points lies on exactly one listed line, and the chord through `C_j`, `C_k`
/// carries `D_{(j+k+m/2) mod m}`.
pub fn check_boroczky_pairs(m: usize) -> std::result::Result<(), String> {
    let lines = boroczky_lines(m).map_err(|e| e.to_string())?;
    let n = 2 * m;
    let mut cover: HashMap<(usize, usize), usize> = HashMap::new();
    for l in &lines {
        for (a, p) in l.iter().enumerate() {
            for q in &l[a + 1..] {
                let (i, j) = (p.index(m), q.index(m));
                *cover.entry((i.min(j), i.max(j))).or_insert(0) += 1;
            }
        }
    }
    if cover.len() != n * (n - 1) / 2 {
        return Err(format!("m={m}: {} of {} pairs covered", cover.len(), n * (n - 1) / 2));
    }
    if let Some((pair, c)) = cover.iter().find(|(_, &c)| c != 1) {
        return Err(format!("m={m}: pair {pair:?} lies on {c} lines"));
    }
    for j in 0..m {
        for k in 0..m {
            if j == k {
                continue;
            }
            let through: Vec<_> = lines
                .iter()
                .filter(|l| l.contains(&ModelPoint::Conic(j)) && l.contains(&ModelPoint::Conic(k)))
                .collect();
            if through.len() != 1 || !through[0].contains(&ModelPoint::Line((j + k + m / 2) % m)) {
                return Err(format!("m={m}: chord C{j}C{k} breaks the residue rule"));
            }
        }
    }
    Ok(())
}

/// Vertices of a polygon inscribed in a conic (as projective points) together
/// with the distinct directions of its chords, as points at infinity.
pub fn conic_polygon_with_directions(vertices: &[(i64, i64)]) -> PointSet<Rational> {
    let mut pts: Vec<Point<Rational>> = vertices
        .iter()
        .map(|&(x, y)| Point::projective2(integer(x), integer(y), integer(1)).expect("nonzero"))
        .collect();
    let mut directions = Vec::new();
    for (i, &(x1, y1)) in vertices.iter().enumerate() {
        for &(x2, y2) in &vertices[i + 1..] {
            let d = Point::projective2(integer(x2 - x1), integer(y2 - y1), integer(0)).expect("distinct vertices");
            if !directions.contains(&d) {
                directions.push(d);
            }
        }
    }
    pts.extend(directions);
    PointSet::new("conic polygon with chord directions", pts).expect("distinct points")
}

/// Real Böröczky configuration for `m = 4`: the square on the unit circle.
pub fn boroczky_square() -> PointSet<Rational> {
    conic_polygon_with_directions(&[(1, 0), (0, 1), (-1, 0), (0, -1)])
}

/// Real Böröczky configuration for `m = 6`: an affine image of the regular
/// hexagon, inscribed in `x² + xy + y² = 1`.
pub fn boroczky_hexagon() -> PointSet<Rational> {
    conic_polygon_with_directions(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

/// Random invertible map acting on affine points as `x ↦ Mx + t` (planar
/// points use the upper-left 2×2 block, also invertible) and on projective
/// plane points as `x ↦ Mx`. It preserves every incidence.
pub struct RandomAffineMap {
    pub matrix: [[Rational; 3]; 3],
    pub shift: [Rational; 3],
}

impl RandomAffineMap {
    pub fn new<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let matrix: [[Rational; 3]; 3] =
                std::array::from_fn(|_| std::array::from_fn(|_| random_rational(rng, 4)));
            let minor = matrix[0][0].clone() * matrix[1][1].clone() - matrix[0][1].clone() * matrix[1][0].clone();
            if !Field::is_zero(&det3(&matrix)) && !Field::is_zero(&minor) {
                let shift = std::array::from_fn(|_| random_rational(rng, 6));
                return Self { matrix, shift };
            }
        }
    }

    pub fn apply(&self, p: &Point<Rational>) -> Point<Rational> {
        let c = p.coords();
        let dim = c.len().min(3);
        let linear = |row: usize| -> Rational {
            (0..dim).fold(integer(0), |acc, j| acc + self.matrix[row][j].clone() * c[j].clone())
        };
        match p.kind() {
            PointKind::Affine3 => Point::affine3(
                linear(0) + self.shift[0].clone(),
                linear(1) + self.shift[1].clone(),
                linear(2) + self.shift[2].clone(),
            ),
            PointKind::Affine2 => {
                Point::affine2(linear(0) + self.shift[0].clone(), linear(1) + self.shift[1].clone())
            }
            PointKind::Projective2 => Point::projective2(linear(0), linear(1), linear(2)).expect("invertible"),
        }
    }

    pub fn apply_set(&self, set: &PointSet<Rational>) -> PointSet<Rational> {
        PointSet::new("image", set.iter().map(|p| self.apply(p)).collect()).expect("injective map")
    }
}
