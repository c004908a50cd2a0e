//! Simulated annealing over rational point sets in space, minimising the
//! number of ordinary lines subject to a cap on coplanar points.
//!
//! The engine is float-free: temperatures are fixed-point integers and the
//! acceptance probability `exp(−Δ/T)` comes from a piecewise-linear table, so a
//! seed reproduces the same run on every platform.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::{random_rational, rng_from_seed, MAX_RETRIES};
use crate::error::{usage, Error, Result};
use crate::field::{height, integer, rational, Field, Rational};
use crate::geometry::{collinear, Point};
use crate::incidence::{max_coplanar_through, planes_from_lines, spanned_lines, summarize_lines};
use crate::pointset::PointSet;

/// Fixed-point scale for temperatures and probabilities.
const SCALE: u128 = 1_000_000_000;

/// `exp(−x)·SCALE` at `x = 0, ½, 1, …, 8`; zero beyond.
const EXP_NEG_HALF_STEPS: [u128; 17] = [
    1_000_000_000,
    606_530_660,
    367_879_441,
    223_130_160,
    135_335_283,
    82_084_999,
    49_787_068,
    30_197_383,
    18_315_639,
    11_108_997,
    6_737_947,
    4_086_771,
    2_478_752,
    1_503_439,
    911_882,
    553_084,
    335_463,
];

/// Piecewise-linear `exp(−x)` for `x` given in units of `1/SCALE`.
fn exp_neg_fixed(x: u128) -> u128 {
    let step = SCALE / 2;
    let k = (x / step) as usize;
    if k + 1 >= EXP_NEG_HALF_STEPS.len() {
        return 0;
    }
    let frac = x % step;
    let (hi, lo) = (EXP_NEG_HALF_STEPS[k], EXP_NEG_HALF_STEPS[k + 1]);
    hi - (hi - lo) * frac / step
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveWeights {
    pub perturb: u32,
    pub snap_to_line: u32,
    pub snap_to_plane: u32,
    pub restart_point: u32,
}

impl Default for MoveWeights {
    fn default() -> Self {
        Self {
            perturb: 4,
            snap_to_line: 3,
            snap_to_plane: 2,
            restart_point: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    /// Coplanarity cap: at most `⌊αn⌋` points on any plane.
    pub alpha: Rational,
    pub iterations: u64,
    pub seed: u64,
    /// Random coordinates have numerator in `[-bound, bound]` and denominator in `[1, bound]`.
    pub coordinate_bound: i64,
    pub initial: Option<PointSet<Rational>>,
    pub move_weights: MoveWeights,
    pub initial_temperature: Rational,
    /// Geometric decay factor applied once per iteration, in `(0, 1]`.
    pub cooling: Rational,
}

impl SearchConfig {
    pub fn new(n: usize, alpha: Rational, iterations: u64, seed: u64) -> Self {
        Self {
            n,
            alpha,
            iterations,
            seed,
            coordinate_bound: 10,
            initial: None,
            move_weights: MoveWeights::default(),
            initial_temperature: integer(2),
            cooling: rational(9995, 10000),
        }
    }

    pub fn with_initial(mut self, initial: PointSet<Rational>) -> Self {
        self.n = initial.len();
        self.initial = Some(initial);
        self
    }

    /// `⌊αn⌋`.
    pub fn cap(&self) -> usize {
        (integer(self.n as i64) * self.alpha.clone())
            .floor()
            .to_integer()
            .to_usize()
            .unwrap_or(0)
    }

    /// Largest coordinate height a move may produce.
    fn height_cap(&self) -> BigInt {
        BigInt::from(self.coordinate_bound).pow(3)
    }
}

/// Ordinary-line statistics of one spanned plane of the best set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneOrdinaryStat {
    pub points_on_plane: usize,
    /// Ordinary lines of the set lying in this plane.
    pub ordinary_in_plane: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best: PointSet<Rational>,
    pub best_count: usize,
    /// `best_count / n²`.
    pub ratio: Rational,
    pub cap: usize,
    pub max_coplanar: usize,
    pub accepted_moves: u64,
    /// `(iteration, count)` at every improvement of the incumbent; starts with
    /// the initial configuration at iteration 0.
    pub trace: Vec<(u64, usize)>,
    /// Planes of the best set with at least four points, heaviest first.
    pub plane_stats: Vec<PlaneOrdinaryStat>,
}

fn validate(config: &SearchConfig) -> Result<usize> {
    let cap = config.cap();
    if cap < 3 {
        return usage(format!("coplanarity cap floor(alpha*n) = {cap} is below 3"));
    }
    if config.coordinate_bound < 1 {
        return usage("coordinate bound must be positive");
    }
    let w = config.move_weights;
    if w.perturb + w.snap_to_line + w.snap_to_plane + w.restart_point == 0 {
        return usage("all move weights are zero");
    }
    let zero = integer(0);
    if config.initial_temperature < zero {
        return usage("initial temperature is negative");
    }
    if config.cooling <= zero || config.cooling > integer(1) {
        return usage("cooling factor must lie in (0, 1]");
    }
    if let Some(init) = &config.initial {
        if init.len() != config.n {
            return usage(format!("initial set has {} points, config says {}", init.len(), config.n));
        }
        if init.kind() != crate::geometry::PointKind::Affine3 {
            return usage("initial set must be affine 3D");
        }
    }
    Ok(cap)
}

/// Integer fast path for the annealing loop.
///
/// Points are scaled to integer homogeneous vectors `(w, x, y, z)` and all
/// keys are computed with checked `i128` arithmetic. Every routine returns
/// `None` on overflow and the caller falls back to the rational code, so the
/// results are exact either way.
mod fast {
    use std::collections::{HashMap, HashSet};

    use num_integer::Integer;
    use num_traits::ToPrimitive;

    use crate::field::Rational;
    use crate::geometry::Point;

    pub(super) type Hom = [i128; 4];

    fn primitive<const N: usize>(mut v: [i128; N]) -> Option<[i128; N]> {
        let mut g = 0i128;
        for &x in &v {
            g = g.gcd(&x.checked_abs()?);
        }
        if g == 0 {
            return Some(v);
        }
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            g = -g;
        }
        for x in &mut v {
            *x /= g;
        }
        Some(v)
    }

    pub(super) fn homogeneous(p: &Point<Rational>) -> Option<Hom> {
        let mut w = 1i128;
        for c in p.coords() {
            let d = c.denom().to_i128()?;
            w = (w / w.gcd(&d)).checked_mul(d)?;
        }
        let mut v = [w, 0, 0, 0];
        for (slot, c) in v[1..].iter_mut().zip(p.coords()) {
            *slot = c.numer().to_i128()?.checked_mul(w / c.denom().to_i128()?)?;
        }
        Some(v)
    }

    fn minor(a: &Hom, b: &Hom, i: usize, j: usize) -> Option<i128> {
        a[i].checked_mul(b[j])?.checked_sub(a[j].checked_mul(b[i])?)
    }

    fn line_key(a: &Hom, b: &Hom) -> Option<[i128; 6]> {
        primitive([
            minor(a, b, 0, 1)?,
            minor(a, b, 0, 2)?,
            minor(a, b, 0, 3)?,
            minor(a, b, 1, 2)?,
            minor(a, b, 1, 3)?,
            minor(a, b, 2, 3)?,
        ])
    }

    /// Plane through three points; all zeros when they are collinear.
    fn plane_key(a: &Hom, b: &Hom, c: &Hom) -> Option<[i128; 4]> {
        let det = |p: usize, q: usize, r: usize| -> Option<i128> {
            a[p].checked_mul(minor(b, c, q, r)?)?
                .checked_sub(a[q].checked_mul(minor(b, c, p, r)?)?)?
                .checked_add(a[r].checked_mul(minor(b, c, p, q)?)?)
        };
        primitive([
            det(1, 2, 3)?,
            det(0, 2, 3)?.checked_neg()?,
            det(0, 1, 3)?,
            det(0, 1, 2)?.checked_neg()?,
        ])
    }

    /// Ordinary lines: a line through `k` points is hit by `C(k,2)` pairs,
    /// which is 1 exactly when `k = 2`.
    pub(super) fn ordinary_count(hom: &[Option<Hom>]) -> Option<usize> {
        let n = hom.len();
        let mut pairs: HashMap<[i128; 6], u32> = HashMap::with_capacity(n * n / 2);
        for i in 0..n {
            let a = hom[i].as_ref()?;
            for b in &hom[i + 1..] {
                *pairs.entry(line_key(a, b.as_ref()?)?).or_insert(0) += 1;
            }
        }
        Some(pairs.values().filter(|&&c| c == 1).count())
    }

    /// Same contract as `max_coplanar_through` in the incidence module.
    pub(super) fn max_coplanar_through(hom: &[Option<Hom>], i: usize) -> Option<Option<usize>> {
        let a = hom[i].as_ref()?;
        let mut groups: HashMap<[i128; 4], HashSet<usize>> = HashMap::new();
        for j in 0..hom.len() {
            if j == i {
                continue;
            }
            let b = hom[j].as_ref()?;
            for (k, c) in hom.iter().enumerate().skip(j + 1) {
                if k == i {
                    continue;
                }
                let key = plane_key(a, b, c.as_ref()?)?;
                if key == [0; 4] {
                    continue;
                }
                let members = groups.entry(key).or_default();
                members.insert(j);
                members.insert(k);
            }
        }
        Some(groups.values().map(|m| m.len() + 1).max())
    }
}

fn ordinary_count(pts: &[Point<Rational>]) -> Result<usize> {
    let set = PointSet::new("", pts.to_vec())?;
    Ok(summarize_lines(set.len(), &spanned_lines(&set)?).ordinary)
}

/// `Some(max_coplanar)` or `None` when all points are collinear.
fn full_max_coplanar(set: &PointSet<Rational>) -> Result<Option<usize>> {
    let lines = spanned_lines(set)?;
    match planes_from_lines(set, &lines) {
        Ok(p) => Ok(Some(p.max_coplanar)),
        Err(Error::Degenerate(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn random_point(rng: &mut ChaCha8Rng, bound: i64) -> Point<Rational> {
    Point::affine3(
        random_rational(rng, bound),
        random_rational(rng, bound),
        random_rational(rng, bound),
    )
}

fn random_start(config: &SearchConfig, cap: usize, rng: &mut ChaCha8Rng) -> Result<PointSet<Rational>> {
    for _ in 0..MAX_RETRIES {
        let mut pts: Vec<Point<Rational>> = Vec::with_capacity(config.n);
        while pts.len() < config.n {
            let p = random_point(rng, config.coordinate_bound);
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let set = PointSet::new("search start", pts)?;
        if full_max_coplanar(&set)?.is_some_and(|m| m <= cap) {
            return Ok(set);
        }
    }
    Err(Error::Generation(format!(
        "no random start with at most {cap} coplanar points in {MAX_RETRIES} attempts"
    )))
}

/// Small nonzero step parameter for snap moves.
fn snap_parameter(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let t = rational(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        if !Field::is_zero(&t) {
            return t;
        }
    }
}

fn distinct_others(rng: &mut ChaCha8Rng, n: usize, i: usize, count: usize) -> Option<Vec<usize>> {
    if n < count + 1 {
        return None;
    }
    let mut picked = Vec::with_capacity(count);
    while picked.len() < count {
        let j = rng.gen_range(0..n);
        if j != i && !picked.contains(&j) {
            picked.push(j);
        }
    }
    Some(picked)
}

fn affine_combination(base: &Point<Rational>, steps: &[(Rational, &Point<Rational>)]) -> Point<Rational> {
    let coords: Vec<Rational> = (0..3)
        .map(|c| {
            steps.iter().fold(base.coords()[c].clone(), |acc, (t, p)| {
                acc + t.clone() * (p.coords()[c].clone() - base.coords()[c].clone())
            })
        })
        .collect();
    Point::affine3(coords[0].clone(), coords[1].clone(), coords[2].clone())
}

#[derive(Clone, Copy)]
enum Move {
    Perturb,
    SnapToLine,
    SnapToPlane,
    RestartPoint,
}

const MOVES: [Move; 4] = [Move::Perturb, Move::SnapToLine, Move::SnapToPlane, Move::RestartPoint];

fn propose(
    mv: Move,
    pts: &[Point<Rational>],
    i: usize,
    bound: i64,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Point<Rational>>> {
    let n = pts.len();
    Ok(match mv {
        Move::Perturb => {
            let c = rng.gen_range(0..3);
            let mut coords = pts[i].coords().to_vec();
            coords[c] = random_rational(rng, bound);
            Some(Point::affine3(coords[0].clone(), coords[1].clone(), coords[2].clone()))
        }
        Move::SnapToLine => distinct_others(rng, n, i, 2).and_then(|o| {
            let t = snap_parameter(rng);
            (t != integer(1)).then(|| affine_combination(&pts[o[0]], &[(t, &pts[o[1]])]))
        }),
        Move::SnapToPlane => match distinct_others(rng, n, i, 3) {
            Some(o) if !collinear(&pts[o[0]], &pts[o[1]], &pts[o[2]])? => {
                let s = snap_parameter(rng);
                let t = snap_parameter(rng);
                Some(affine_combination(&pts[o[0]], &[(s, &pts[o[1]]), (t, &pts[o[2]])]))
            }
            _ => None,
        },
        Move::RestartPoint => Some(random_point(rng, bound)),
    })
}

fn plane_stats(best: &PointSet<Rational>) -> Result<Vec<PlaneOrdinaryStat>> {
    let lines = spanned_lines(best)?;
    let planes = planes_from_lines(best, &lines)?;
    let ordinary: Vec<&[usize]> = lines
        .iter()
        .filter(|l| l.members.len() == 2)
        .map(|l| l.members.as_slice())
        .collect();
    let mut stats: Vec<PlaneOrdinaryStat> = planes
        .planes
        .iter()
        .filter(|p| p.members.len() >= 4)
        .map(|p| PlaneOrdinaryStat {
            points_on_plane: p.members.len(),
            ordinary_in_plane: ordinary
                .iter()
                .filter(|pair| pair.iter().all(|m| p.members.binary_search(m).is_ok()))
                .count(),
        })
        .collect();
    stats.sort_by(|a, b| {
        b.points_on_plane
            .cmp(&a.points_on_plane)
            .then(a.ordinary_in_plane.cmp(&b.ordinary_in_plane))
    });
    Ok(stats)
}

/// Anneals towards a set with few ordinary lines and at most `⌊αn⌋` coplanar
/// points. Deterministic given the config.
pub fn minimize_ordinary(config: &SearchConfig) -> Result<SearchResult> {
    let cap = validate(config)?;
    let mut rng = rng_from_seed(config.seed);
    let start = match &config.initial {
        Some(init) => {
            match full_max_coplanar(init)? {
                Some(m) if m <= cap => {}
                Some(m) => return usage(format!("initial set has {m} coplanar points, cap is {cap}")),
                None => return usage("initial set is collinear"),
            }
            init.clone()
        }
        None => random_start(config, cap, &mut rng)?,
    };
    let label = start.label().to_string();
    let w = config.move_weights;
    let chooser = WeightedIndex::new([w.perturb, w.snap_to_line, w.snap_to_plane, w.restart_point])
        .map_err(|e| Error::Usage(format!("move weights: {e}")))?;
    let height_cap = config.height_cap();

    let cool_num = config.cooling.numer().to_u128();
    let cool_den = config.cooling.denom().to_u128();
    let (cool_num, cool_den) = match (cool_num, cool_den) {
        (Some(a), Some(b)) => (a, b),
        _ => return usage("cooling factor numerator/denominator too large"),
    };
    let mut temperature = (config.initial_temperature.clone() * integer(SCALE as i64))
        .floor()
        .to_integer()
        .to_u128()
        .ok_or_else(|| Error::Usage("initial temperature too large".into()))?;

    let mut current = start.into_points();
    let mut hom: Vec<Option<fast::Hom>> = current.iter().map(fast::homogeneous).collect();
    let mut current_count = ordinary_count(&current)?;
    let mut best = current.clone();
    let mut best_count = current_count;
    let mut trace = vec![(0, current_count)];
    let mut accepted_moves = 0;

    for iteration in 1..=config.iterations {
        let mv = MOVES[chooser.sample(&mut rng)];
        let i = rng.gen_range(0..current.len());
        let proposal = propose(mv, &current, i, config.coordinate_bound, &mut rng)?;
        temperature = temperature * cool_num / cool_den;
        let Some(candidate) = proposal else { continue };
        if candidate.coords().iter().any(|c| height(c) > height_cap)
            || current.contains(&candidate)
        {
            continue;
        }
        let previous_hom = std::mem::replace(&mut hom[i], fast::homogeneous(&candidate));
        let previous = std::mem::replace(&mut current[i], candidate);
        // Planes avoiding the moved point can only have lost points.
        let through = match fast::max_coplanar_through(&hom, i) {
            Some(m) => m,
            None => max_coplanar_through(&current, i)?,
        };
        let feasible = through.is_some_and(|m| m <= cap);
        let count = match (feasible, fast::ordinary_count(&hom)) {
            (false, _) => None,
            (true, Some(c)) => Some(c),
            (true, None) => Some(ordinary_count(&current)?),
        };
        let accept = match count {
            None => false,
            Some(c) if c <= current_count => true,
            Some(c) => {
                let delta = (c - current_count) as u128;
                // a frozen schedule (temperature 0) only accepts non-worsening moves
                match (delta * SCALE * SCALE).checked_div(temperature) {
                    Some(x) => rng.gen_range(0..SCALE) < exp_neg_fixed(x),
                    None => false,
                }
            }
        };
        if !accept {
            current[i] = previous;
            hom[i] = previous_hom;
            continue;
        }
        accepted_moves += 1;
        current_count = count.expect("accepted moves are counted");
        if current_count < best_count {
            best_count = current_count;
            best = current.clone();
            trace.push((iteration, best_count));
        }
    }

    let best = PointSet::new(format!("{label} (search best)"), best)?;
    let recount = ordinary_count(best.points())?;
    let max_coplanar = full_max_coplanar(&best)?.unwrap_or(best.len());
    if recount != best_count || max_coplanar > cap {
        return Err(Error::InvariantViolation(format!(
            "search result recount {recount} vs {best_count}, max coplanar {max_coplanar} vs cap {cap}"
        )));
    }
    let n = best.len() as i64;
    Ok(SearchResult {
        ratio: Rational::new((best_count as i64).into(), (n * n).into()),
        plane_stats: plane_stats(&best)?,
        best,
        best_count,
        cap,
        max_coplanar,
        accepted_moves,
        trace,
    })
}
