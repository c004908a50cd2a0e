//! Deterministic and seeded generators for the named configurations, plus the
//! combinatorial model of Böröczky's conic-and-line configuration.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{usage, Error, Result};
use crate::field::{integer, rational, Eisenstein, Field, Rational};
use crate::geometry::{Point, PointKind};
use crate::incidence::max_coplanar;
use crate::pointset::PointSet;

/// Regeneration budget for constrained random constructions.
pub const MAX_RETRIES: usize = 100;

/// Coordinate bound used by the constrained generators.
const CONSTRUCTION_BOUND: i64 = 12;

pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform numerator in `[-bound, bound]` over a denominator in `[1, bound]`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    rational(num, den)
}

fn random_nonzero<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let x = random_rational(rng, bound);
        if !Field::is_zero(&x) {
            return x;
        }
    }
}

/// `m` points on each of the skew lines `{(t,0,0)}` and `{(0,t,1)}`, `t = 1..m`.
pub fn gen_two_skew(m: usize) -> Result<PointSet<Rational>> {
    if m < 2 {
        return usage(format!("two-skew construction needs m >= 2, got {m}"));
    }
    let zero = || integer(0);
    let mut pts = Vec::with_capacity(2 * m);
    for t in 1..=m as i64 {
        pts.push(Point::affine3(integer(t), zero(), zero()));
    }
    for t in 1..=m as i64 {
        pts.push(Point::affine3(zero(), integer(t), integer(1)));
    }
    PointSet::new(format!("two-skew m={m}"), pts)
}

/// Ordinary-line count of [`gen_near_coplanar`] output in terms of the
/// ordinary-line count of its planar part.
///
/// Every off-plane/in-plane pair is ordinary except the `k` pairs on the
/// z-axis; the z-axis itself carries `k + 1` points and is ordinary only when
/// `k = 1`.
pub fn near_coplanar_ordinary(n: usize, k: usize, ord_planar: usize) -> usize {
    let axis = usize::from(k == 1);
    k * (n - k) + ord_planar - k + axis
}

/// `n − k` seeded random points in `z = 0` (the first is the origin) followed
/// by the `k` points `(0,0,t)`, `t = 1..k`.
///
/// Regenerates until the plane `z = 0` is the unique heaviest plane count,
/// i.e. the maximum number of coplanar points is exactly `n − k`.
pub fn gen_near_coplanar(n: usize, k: usize, seed: u64) -> Result<PointSet<Rational>> {
    if k < 1 || n < k + 4 {
        return usage(format!("near-coplanar needs k >= 1 and n - k >= 4, got n={n}, k={k}"));
    }
    let mut rng = rng_from_seed(seed);
    let planar = n - k;
    for _ in 0..MAX_RETRIES {
        let mut pts = vec![Point::affine3(integer(0), integer(0), integer(0))];
        let mut seen: HashSet<Point<Rational>> = pts.iter().cloned().collect();
        while pts.len() < planar {
            let p = Point::affine3(
                random_rational(&mut rng, CONSTRUCTION_BOUND),
                random_rational(&mut rng, CONSTRUCTION_BOUND),
                integer(0),
            );
            if seen.insert(p.clone()) {
                pts.push(p);
            }
        }
        for t in 1..=k as i64 {
            pts.push(Point::affine3(integer(0), integer(0), integer(t)));
        }
        let set = PointSet::new(format!("near-coplanar n={n} k={k} seed={seed}"), pts)?;
        if max_coplanar(&set).ok() == Some(planar) {
            return Ok(set);
        }
    }
    Err(Error::Generation(format!(
        "near-coplanar n={n} k={k}: no admissible set in {MAX_RETRIES} attempts"
    )))
}

/// `⌊αn⌋` random points in `z = 0` and the rest random off that plane,
/// regenerated until the maximum number of coplanar points is exactly `⌊αn⌋`.
pub fn gen_coplanar_heavy(n: usize, alpha_num: u64, alpha_den: u64, seed: u64) -> Result<PointSet<Rational>> {
    if alpha_den == 0 {
        return usage("alpha denominator is zero");
    }
    let heavy = (n as u128 * alpha_num as u128 / alpha_den as u128) as usize;
    if heavy < 3 || heavy > n {
        return usage(format!("floor(alpha*n) = {heavy} must lie in [3, n={n}]"));
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..MAX_RETRIES {
        let mut seen = HashSet::new();
        let mut pts = Vec::with_capacity(n);
        while pts.len() < n {
            let z = if pts.len() < heavy {
                integer(0)
            } else {
                random_nonzero(&mut rng, CONSTRUCTION_BOUND)
            };
            let p = Point::affine3(
                random_rational(&mut rng, CONSTRUCTION_BOUND),
                random_rational(&mut rng, CONSTRUCTION_BOUND),
                z,
            );
            if seen.insert(p.clone()) {
                pts.push(p);
            }
        }
        let set = PointSet::new(
            format!("coplanar-heavy n={n} alpha={alpha_num}/{alpha_den} seed={seed}"),
            pts,
        )?;
        if max_coplanar(&set).ok() == Some(heavy) {
            return Ok(set);
        }
    }
    Err(Error::Generation(format!(
        "coplanar-heavy n={n} alpha={alpha_num}/{alpha_den}: no admissible set in {MAX_RETRIES} attempts"
    )))
}

/// `n` distinct random rational points in dimension 2 or 3.
pub fn gen_random(n: usize, dim: usize, bound: i64, seed: u64) -> Result<PointSet<Rational>> {
    if n == 0 || !(2..=3).contains(&dim) || bound < 1 {
        return usage(format!("random set needs n >= 1, dim in {{2,3}}, bound >= 1 (got {n}, {dim}, {bound})"));
    }
    let capacity = (2 * bound as u128 + 1).saturating_pow(dim as u32);
    if (n as u128) > capacity {
        return usage(format!("bound {bound} admits too few distinct points for n={n}"));
    }
    let mut rng = rng_from_seed(seed);
    let mut seen = HashSet::with_capacity(n);
    let mut pts = Vec::with_capacity(n);
    while pts.len() < n {
        let coords: Vec<Rational> = (0..dim).map(|_| random_rational(&mut rng, bound)).collect();
        let kind = if dim == 2 { PointKind::Affine2 } else { PointKind::Affine3 };
        let p = Point::new(kind, coords)?;
        if seen.insert(p.clone()) {
            pts.push(p);
        }
    }
    PointSet::new(format!("random n={n} dim={dim} bound={bound} seed={seed}"), pts)
}

/// Integer grid `{1..a} × {1..b}`.
pub fn gen_grid2d(a: usize, b: usize) -> Result<PointSet<Rational>> {
    if a < 2 || b < 2 {
        return usage(format!("grid needs both sides >= 2, got {a}x{b}"));
    }
    let pts = (1..=a as i64)
        .flat_map(|x| (1..=b as i64).map(move |y| Point::affine2(integer(x), integer(y))))
        .collect();
    PointSet::new(format!("grid {a}x{b}"), pts)
}

/// The nine inflection points of a plane cubic over `Q(ω)`: twelve lines with
/// three points each and no ordinary line.
pub fn gen_hesse() -> PointSet<Eisenstein> {
    let zero = Eisenstein::zero;
    let one = Eisenstein::one;
    let w = Eisenstein::omega;
    let w2 = || w() * w();
    let minus_roots = [-one(), -w(), -w2()];
    let mut pts = Vec::with_capacity(9);
    for r in &minus_roots {
        pts.push([zero(), one(), r.clone()]);
    }
    for r in &minus_roots {
        pts.push([one(), zero(), r.clone()]);
    }
    for r in &minus_roots {
        pts.push([one(), r.clone(), zero()]);
    }
    let pts = pts
        .into_iter()
        .map(|[x, y, z]| Point::projective2(x, y, z).expect("nonzero homogeneous vector"))
        .collect();
    PointSet::new("hesse", pts).expect("the nine Hesse points are distinct")
}

/// A point of the Böröczky model: `Conic(j)` is `C_j`, `Line(i)` is `D_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelPoint {
    Conic(usize),
    Line(usize),
}

impl ModelPoint {
    /// Index in `0..2m`: conic points first.
    pub fn index(self, m: usize) -> usize {
        match self {
            ModelPoint::Conic(j) => j,
            ModelPoint::Line(i) => m + i,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoroczkyModelSummary {
    pub m: usize,
    pub n: usize,
    pub ordinary: usize,
    pub num_lines: usize,
    pub t: BTreeMap<usize, usize>,
}

fn check_boroczky_m(m: usize) -> Result<()> {
    if m < 4 || m % 2 == 1 {
        return usage(format!("Böröczky model needs even m >= 4, got {m}"));
    }
    Ok(())
}

/// All lines of the model with at least two model points.
///
/// Conic points `C_j` and line points `D_i` are indexed mod `m`:
/// * the line at infinity holds exactly `D_0, …, D_{m−1}`;
/// * the chord `C_j C_k` (`j ≠ k`) holds `D_{(j+k+m/2) mod m}` and nothing else;
/// * the tangent at `C_j` holds `C_j` and `D_{(2j+m/2) mod m}` only.
pub fn boroczky_lines(m: usize) -> Result<Vec<Vec<ModelPoint>>> {
    check_boroczky_m(m)?;
    let half = m / 2;
    let mut lines = Vec::with_capacity(1 + m * (m - 1) / 2 + m);
    lines.push((0..m).map(ModelPoint::Line).collect());
    for j in 0..m {
        for k in j + 1..m {
            lines.push(vec![
                ModelPoint::Conic(j),
                ModelPoint::Conic(k),
                ModelPoint::Line((j + k + half) % m),
            ]);
        }
    }
    for j in 0..m {
        lines.push(vec![ModelPoint::Conic(j), ModelPoint::Line((2 * j + half) % m)]);
    }
    Ok(lines)
}

pub fn boroczky_model(m: usize) -> Result<BoroczkyModelSummary> {
    let lines = boroczky_lines(m)?;
    let mut t = BTreeMap::new();
    for l in &lines {
        *t.entry(l.len()).or_insert(0) += 1;
    }
    let n = 2 * m;
    let pairs: usize = t.iter().map(|(&k, &c)| k * (k - 1) / 2 * c).sum();
    if pairs != n * (n - 1) / 2 {
        return Err(Error::InvariantViolation(format!(
            "Böröczky model m={m} covers {pairs} pairs, expected {}",
            n * (n - 1) / 2
        )));
    }
    Ok(BoroczkyModelSummary {
        m,
        n,
        ordinary: t.get(&2).copied().unwrap_or(0),
        num_lines: lines.len(),
        t,
    })
}
