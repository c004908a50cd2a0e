//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ordlines_core::analysis::{
    almost_coplanar_bound, bound_constants, verify_almost_coplanar, verify_skew_bound, verify_sylvester_gallai,
};
use ordlines_core::constructions::{
    boroczky_model, gen_coplanar_heavy, gen_grid2d, gen_hesse, gen_near_coplanar, gen_random, gen_two_skew,
    near_coplanar_ordinary, random_rational,
};
use ordlines_core::field::{integer, rational};
use ordlines_core::oracle::{
    boroczky_hexagon, boroczky_square, check_boroczky_pairs, naive_line_histogram, naive_line_members,
    naive_max_coplanar, naive_plane_members, RandomAffineMap,
};
use ordlines_core::search::{minimize_ordinary, SearchConfig};
use ordlines_core::{
    canon_line, collinear, coplanar, image_point_set, kelly_trace, plane_summary, point_degrees, project_from,
    span_summary, spanned_lines, Error, Line, Point, PointKind, PointSet, Rational,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn catalogue() -> Vec<PointSet<Rational>> {
    vec![
        gen_two_skew(3).unwrap(),
        gen_two_skew(5).unwrap(),
        gen_near_coplanar(8, 1, 1).unwrap(),
        gen_near_coplanar(10, 2, 2).unwrap(),
        gen_coplanar_heavy(10, 1, 2, 3).unwrap(),
        gen_random(10, 3, 2, 4).unwrap(),
        gen_random(10, 2, 2, 5).unwrap(),
        gen_grid2d(3, 3).unwrap(),
        gen_grid2d(2, 4).unwrap(),
        boroczky_square(),
    ]
}

fn ordlines(args: &[&str]) -> Result<String, String> {
    let o = ok(Command::new(env!("CARGO_BIN_EXE_ordlines")).args(args).output())?;
    if !o.status.success() {
        return Err(format!("ordlines {args:?} failed: {}", String::from_utf8_lossy(&o.stderr)));
    }
    Ok(String::from_utf8_lossy(&o.stdout).into_owned())
}

fn skew_construction() -> Outcome {
    for m in 3..=15 {
        let start = Instant::now();
        let s = ok(span_summary(&ok(gen_two_skew(m))?))?;
        let elapsed = start.elapsed();
        ensure!(s.ordinary == m * m, "m={m}: ordinary {} != {}", s.ordinary, m * m);
        ensure!(elapsed < Duration::from_secs(1), "m={m} took {elapsed:?}");
    }
    let dir = ok(tempfile::tempdir())?;
    let file = dir.path().join("skew.txt");
    let file = file.to_str().unwrap();
    let start = Instant::now();
    ordlines(&["gen", "skew", "--m", "10", "-o", file])?;
    let stats: serde_json::Value = ok(serde_json::from_str(&ordlines(&["stats", file, "--json"])?))?;
    let elapsed = start.elapsed();
    ensure!(stats["lines"]["n"] == 20 && stats["lines"]["ordinary"] == 100, "cli stats: {stats}");
    ensure!(elapsed < Duration::from_secs(1), "cli round trip took {elapsed:?}");
    Ok(format!("ordinary = m^2 for m = 3..15; CLI n=20 gives 100 = n^2/4 in {elapsed:?}"))
}

fn constants() -> Outcome {
    let (beta, gamma) = (rational(2, 3), rational(1, 9));
    let c = ok(bound_constants(&rational(2, 27), &beta, &gamma))?;
    ensure!(c.alpha0 == rational(2, 27), "alpha0 = {}", c.alpha0);
    ensure!(c.c_alpha0 == rational(1, 118098), "c = {}", c.c_alpha0);
    for i in 1..100 {
        let alpha = rational(i, 100);
        let c = ok(bound_constants(&alpha, &beta, &gamma))?;
        ensure!(c.d_alpha > integer(0), "d_alpha <= 0 at {alpha}");
        ensure!(c.mu < alpha && alpha < c.nu, "mu < alpha < nu fails at {alpha}");
    }
    let cli = ordlines(&["constants", "--alpha", "2/27", "--beta", "2/3", "--gamma", "1/9"])?;
    ensure!(cli.contains("c_alpha0 = 1/118098"), "cli output: {cli}");
    Ok("alpha0 = 2/27, c = 1/118098; d_alpha > 0 on the 1/100 grid".into())
}

fn boroczky() -> Outcome {
    for m in (4..=50).step_by(2) {
        let s = ok(boroczky_model(m))?;
        ensure!(s.ordinary == m && 2 * s.ordinary == s.n, "m={m}: ordinary {}", s.ordinary);
        check_boroczky_pairs(m)?;
    }
    for (m, set) in [(4, boroczky_square()), (6, boroczky_hexagon())] {
        let real = ok(span_summary(&set))?;
        let model = ok(boroczky_model(m))?;
        ensure!(real.t == model.t, "m={m}: realised {:?} vs model {:?}", real.t, model.t);
    }
    Ok("ordinary = m = n/2 for even m in 4..50, residue rules pairwise-checked; m=4,6 realised exactly".into())
}

fn hesse_and_sylvester_gallai() -> Outcome {
    let h = gen_hesse();
    let s = ok(span_summary(&h))?;
    let naive = ok(naive_line_histogram(&h))?;
    ensure!(s.ordinary == 0 && s.t(3) == 12, "hesse summary {:?}", s.t);
    ensure!(naive == s.t, "oracle histogram {naive:?}");
    ensure!(ok(point_degrees(&h))? == vec![4; 9], "degrees");
    let mut r = rng(404);
    let mut tested = 0;
    while tested < 200 {
        let set = ok(gen_random(r.gen_range(3..=12), 2, r.gen_range(2..=4), r.gen()))?;
        let rep = ok(verify_sylvester_gallai(&set))?;
        if rep.collinear {
            continue;
        }
        ensure!(rep.ordinary >= 1, "no ordinary line in {set:?}");
        ensure!(ok(naive_line_histogram(&set))?.get(&2).copied() == Some(rep.ordinary), "oracle disagrees");
        tested += 1;
    }
    Ok("Hesse: 0 ordinary, t3 = 12, degrees 4; 200 random rational sets all have an ordinary line".into())
}

fn pair_identity() -> Outcome {
    let mut sets = catalogue();
    for m in 2..=12 {
        sets.push(ok(gen_two_skew(m))?);
    }
    for (n, k, seed) in [(10, 2, 0), (20, 3, 1), (30, 3, 2), (9, 1, 3)] {
        sets.push(ok(gen_near_coplanar(n, k, seed))?);
    }
    for (n, a, b) in [(12, 1, 2), (16, 3, 4), (15, 3, 5)] {
        sets.push(ok(gen_coplanar_heavy(n, a, b, 7))?);
    }
    for (a, b) in [(2, 2), (3, 5), (4, 4), (5, 6)] {
        sets.push(ok(gen_grid2d(a, b))?);
    }
    let mut r = rng(5);
    for _ in 0..20 {
        sets.push(ok(gen_random(r.gen_range(2..=25), r.gen_range(2..=3), r.gen_range(3..=6), r.gen()))?);
    }
    let mut searches = 0;
    for seed in 0..3 {
        sets.push(ok(minimize_ordinary(&SearchConfig::new(10, rational(3, 4), 300, seed)))?.best);
        searches += 1;
    }
    for set in &sets {
        let s = ok(span_summary(set))?;
        ensure!(s.pair_identity_holds(), "{}: {} != C({}, 2)", set.label(), s.pair_total(), s.n);
    }
    ensure!(ok(span_summary(&gen_hesse()))?.pair_identity_holds(), "hesse");
    for m in (4..=50).step_by(2) {
        let b = ok(boroczky_model(m))?;
        let pairs: usize = b.t.iter().map(|(k, c)| k * (k - 1) / 2 * c).sum();
        ensure!(pairs == b.n * (b.n - 1) / 2, "boroczky m={m}");
    }
    Ok(format!("{} generated sets, {searches} search outputs, Hesse and 24 models", sets.len() - searches))
}

fn oracle_equivalence() -> Outcome {
    let mut sets = catalogue();
    let mut r = rng(66);
    for _ in 0..50 {
        sets.push(ok(gen_random(r.gen_range(3..=10), r.gen_range(2..=3), r.gen_range(2..=3), r.gen()))?);
    }
    for set in &sets {
        ensure!(set.len() <= 10, "{} too large for the oracle", set.label());
        let fast: BTreeSet<Vec<usize>> = ok(spanned_lines(set))?.into_iter().map(|l| l.members).collect();
        ensure!(fast == ok(naive_line_members(set))?, "lines of {}", set.label());
        ensure!(ok(span_summary(set))?.t == ok(naive_line_histogram(set))?, "histogram of {}", set.label());
        if set.kind() == PointKind::Affine3 {
            let planes = ok(plane_summary(set))?;
            ensure!(planes.max_coplanar == ok(naive_max_coplanar(set))?, "max coplanar of {}", set.label());
            let fast: BTreeSet<Vec<usize>> = planes.planes.into_iter().map(|p| p.members).collect();
            ensure!(fast == ok(naive_plane_members(set))?, "planes of {}", set.label());
        }
    }
    Ok(format!("{} sets with n <= 10 agree with the naive classifiers", sets.len()))
}

fn projection() -> Outcome {
    let mut r = rng(77);
    let mut triples = 0;
    for _ in 0..50 {
        let n = r.gen_range(4..=12);
        let set = ok(gen_random(n, 3, r.gen_range(1..=3), r.gen()))?;
        let center = r.gen_range(0..n);
        let c = set.point(center).unwrap();
        let img = ok(project_from(&set, center))?;
        let total: usize = img.groups.iter().map(|g| g.preimages.len()).sum();
        ensure!(total == n - 1, "group sizes sum to {total}");
        for g in &img.groups {
            for &i in &g.preimages[1..] {
                ensure!(
                    ok(collinear(c, set.point(g.preimages[0]).unwrap(), set.point(i).unwrap()))?,
                    "group not collinear with center"
                );
            }
        }
        let (q1, _) = ok(image_point_set(&img))?;
        let reps: Vec<_> = img.groups.iter().map(|g| set.point(g.preimages[0]).unwrap()).collect();
        for a in 0..q1.len() {
            for b in a + 1..q1.len() {
                for d in b + 1..q1.len() {
                    let image = ok(collinear(q1.point(a).unwrap(), q1.point(b).unwrap(), q1.point(d).unwrap()))?;
                    let source = ok(coplanar(c, reps[a], reps[b], reps[d]))?;
                    ensure!(image == source, "collinearity/coplanarity mismatch");
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("50 sets, {triples} image triples checked"))
}

fn three_axes() -> PointSet<Rational> {
    let p = |x, y, z| Point::affine3(integer(x), integer(y), integer(z));
    PointSet::new(
        "three axes",
        vec![p(0, 0, 0), p(1, 0, 0), p(2, 0, 0), p(0, 1, 0), p(0, 2, 0), p(0, 0, 1), p(0, 0, 2)],
    )
    .unwrap()
}

fn kelly() -> Outcome {
    let set = three_axes();
    let rep = ok(kelly_trace(&set, 0))?;
    ensure!(rep.l1_size == 3, "l1_size = {}", rep.l1_size);
    let distinct: BTreeSet<_> = rep.found_ordinary.iter().collect();
    ensure!(distinct.len() >= 3, "only {} distinct lines", distinct.len());
    for line in &rep.found_ordinary {
        let on: Vec<usize> = (0..set.len()).filter(|&i| line.contains(set.point(i).unwrap()).unwrap()).collect();
        ensure!(on.len() == 2 && !on.contains(&0), "line through {on:?} is not ordinary avoiding the center");
    }
    let mut r = rng(88);
    let mut found = 0;
    for _ in 0..200 {
        let n = r.gen_range(3..=12);
        let set = ok(gen_random(n, 3, r.gen_range(1..=2), r.gen()))?;
        match kelly_trace(&set, r.gen_range(0..n)) {
            Ok(rep) => found += rep.found_ordinary.len(),
            Err(Error::InvariantViolation(msg)) => return Err(format!("invariant violation: {msg}")),
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("three axes: l1 = 3, 3 distinct ordinary lines; 200 random traces, {found} lines, no violations"))
}

fn skew_bound() -> Outcome {
    let mut r = rng(99);
    let mut tightest = i64::MAX;
    for _ in 0..100 {
        let m = r.gen_range(3..=8);
        let base = ok(gen_two_skew(m))?;
        let spatial = |a: usize, b: usize| match canon_line(base.point(a).unwrap(), base.point(b).unwrap()) {
            Ok(Line::Spatial(l)) => Ok(l),
            other => Err(format!("{other:?}")),
        };
        let (l1, l2) = (spatial(0, 1)?, spatial(m, m + 1)?);
        let mut pts = base.points().to_vec();
        for _ in 0..r.gen_range(1..=6) {
            let p = match r.gen_range(0..4) {
                0 => Point::affine3(random_rational(&mut r, 9), integer(0), integer(0)),
                1 => Point::affine3(integer(0), random_rational(&mut r, 9), integer(1)),
                _ => Point::affine3(random_rational(&mut r, 5), random_rational(&mut r, 5), random_rational(&mut r, 5)),
            };
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        let set = ok(PointSet::new("superset", pts))?;
        let rep = ok(verify_skew_bound(&set, &l1, &l2))?;
        ensure!(rep.holds, "{rep:?}");
        tightest = tightest.min(rep.lhs as i64 - rep.rhs);
    }
    Ok(format!("100 supersets; smallest slack ordinary - (ab - n) = {tightest}"))
}

fn planar_part(set: &PointSet<Rational>, size: usize) -> Result<PointSet<Rational>, String> {
    let pts = set.points()[..size]
        .iter()
        .map(|p| Point::affine2(p.coords()[0].clone(), p.coords()[1].clone()))
        .collect();
    ok(PointSet::new("planar part", pts))
}

fn near_coplanar() -> Outcome {
    let mut reports = Vec::new();
    for (n, k) in [(10, 2), (20, 3), (30, 3)] {
        let set = ok(gen_near_coplanar(n, k, 0))?;
        let ord_planar = ok(span_summary(&planar_part(&set, n - k)?))?.ordinary;
        let count = ok(span_summary(&set))?.ordinary;
        ensure!(count == k * (n - k) + ord_planar - k, "n={n} k={k}: {count}");
        ensure!(count == near_coplanar_ordinary(n, k, ord_planar), "formula helper");
        let rep = ok(verify_almost_coplanar(&set, k))?;
        ensure!(rep.bound == almost_coplanar_bound(n, k), "bound");
        reports.push(format!(
            "({n},{k}): {count} vs {} [{}]",
            rep.bound,
            if rep.holds { "meets" } else { "below, report only" }
        ));
    }
    Ok(reports.join("; "))
}

fn search() -> Outcome {
    let skew = ok(gen_two_skew(10))?;
    let zero = ok(minimize_ordinary(&SearchConfig::new(20, rational(3, 5), 0, 1).with_initial(skew.clone())))?;
    ensure!(zero.best_count == 100 && zero.best.points() == skew.points(), "zero-iteration identity");
    let cfg = SearchConfig::new(20, rational(3, 5), 10_000, 1).with_initial(skew);
    let start = Instant::now();
    let a = ok(minimize_ordinary(&cfg))?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "search took {elapsed:?}");
    ensure!(a.best_count <= 100, "best {}", a.best_count);
    ensure!(ok(span_summary(&a.best))?.ordinary == a.best_count, "recount disagrees");
    let cap_used = ok(plane_summary(&a.best))?.max_coplanar;
    ensure!(cap_used <= 12, "max coplanar {cap_used} > 12");
    let b = ok(minimize_ordinary(&cfg))?;
    ensure!(a == b, "same seed gave different results");
    Ok(format!("best {} <= 100, max coplanar {cap_used} <= 12, reproducible, {elapsed:?}", a.best_count))
}

fn affine_invariance() -> Outcome {
    let mut r = rng(1212);
    let maps: Vec<RandomAffineMap> = (0..50).map(|_| RandomAffineMap::new(&mut r)).collect();
    for set in catalogue() {
        let lines = ok(span_summary(&set))?;
        let planes = if set.kind() == PointKind::Affine3 { Some(ok(plane_summary(&set))?) } else { None };
        for map in &maps {
            let image = map.apply_set(&set);
            ensure!(ok(span_summary(&image))? == lines, "span summary of {}", set.label());
            if let Some(p) = &planes {
                let q = ok(plane_summary(&image))?;
                ensure!(
                    q.max_coplanar == p.max_coplanar && q.histogram() == p.histogram(),
                    "plane summary of {}",
                    set.label()
                );
            }
        }
    }
    Ok("10 catalogue sets x 50 invertible rational maps".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("skew construction", skew_construction),
        ("bound constants", constants),
        ("Böröczky model", boroczky),
        ("Hesse and Sylvester-Gallai", hesse_and_sylvester_gallai),
        ("pair identity", pair_identity),
        ("oracle equivalence", oracle_equivalence),
        ("projection", projection),
        ("projection trace", kelly),
        ("skew-line bound", skew_bound),
        ("near-coplanar count", near_coplanar),
        ("search", search),
        ("affine invariance", affine_invariance),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("AC{:<2} PASS  {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("AC{:<2} FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
