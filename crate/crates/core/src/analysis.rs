//! Exact evaluation of the bound constants and verifiers that compare concrete
//! point sets against the corresponding inequalities.


use crate::error::{usage, Error, Result};
use crate::field::{integer, Field, Rational};
use crate::geometry::{CanonLine3, Line, Point, PointKind};
use crate::incidence::{planes_from_lines, span_summary, spanned_lines, summarize_lines};
use crate::pointset::PointSet;

/// Constants of the quadratic lower bound, all exact.
///
/// `beta`, `gamma` are the constants of the planar spanned-lines bound (at most
/// `βn` collinear implies at least `γn²` lines); `alpha` is the coplanarity cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundConstants {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    /// `β·γ`: below this coplanarity fraction the direct projection argument applies.
    pub alpha0: Rational,
    /// `γ⁵/2`.
    pub c_alpha0: Rational,
    /// `α − ¼·min(α,β,γ)·(1−α)²`.
    pub mu: Rational,
    /// `2μ − α + γ(1−α)²`.
    pub nu: Rational,
    /// `γ'(μ/α)`, used when the heavy plane has few collinear points.
    pub gamma_prime_case1: Rational,
    /// `γ'(α/ν)`, used when one line carries many points of the heavy plane.
    pub gamma_prime_case2b: Rational,
    /// `min(γ'α²(1−α)/4, γ'α²/2)` with `γ' = gamma_prime_case1`.
    pub d_case1: Rational,
    /// `½·μ·β·(1−α)`.
    pub d_case2a: Rational,
    /// `min(αγ'/4, γ'/2)` with `γ' = gamma_prime_case2b`.
    pub d_case2b: Rational,
    /// Minimum of the three case bounds.
    pub d_alpha: Rational,
}

fn min_of(values: impl IntoIterator<Item = Rational>) -> Rational {
    values.into_iter().min().expect("at least one value")
}

fn in_open_unit(name: &str, x: &Rational) -> Result<()> {
    if *x <= integer(0) || *x >= integer(1) {
        return usage(format!("{name} = {x} must lie strictly between 0 and 1"));
    }
    Ok(())
}

/// Spanned-lines constant for point sets with at most `β'n` collinear points:
/// `min(γ, γ(1−β')², β²(1−β')/2)`, the only value valid on every branch.
pub fn gamma_prime(beta_prime: &Rational, beta: &Rational, gamma: &Rational) -> Result<Rational> {
    in_open_unit("beta'", beta_prime)?;
    let rest = integer(1) - beta_prime;
    Ok(min_of([
        gamma.clone(),
        gamma * &rest * &rest,
        beta * beta * &rest / integer(2),
    ]))
}

pub fn bound_constants(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<BoundConstants> {
    in_open_unit("alpha", alpha)?;
    in_open_unit("beta", beta)?;
    in_open_unit("gamma", gamma)?;
    let one = integer(1);
    let co = &one - alpha;
    let co2 = &co * &co;
    let smallest = min_of([alpha.clone(), beta.clone(), gamma.clone()]);

    let alpha0 = beta * gamma;
    let c_alpha0 = gamma * gamma * gamma * gamma * gamma / integer(2);
    let mu = alpha - &smallest * &co2 / integer(4);
    let nu = integer(2) * &mu - alpha + gamma * &co2;
    if nu <= integer(0) {
        return Err(Error::Domain(format!("nu = {nu} is not positive")));
    }
    if mu <= integer(0) || mu >= *alpha {
        return Err(Error::Domain(format!("mu = {mu} is not in (0, alpha)")));
    }
    if nu <= *alpha {
        return Err(Error::Domain(format!("nu = {nu} does not exceed alpha")));
    }

    let gp1 = gamma_prime(&(&mu / alpha), beta, gamma)?;
    let a2 = alpha * alpha;
    let d_case1 = min_of([
        &gp1 * &a2 * &co / integer(4),
        &gp1 * &a2 / integer(2),
    ]);
    let d_case2a = &mu * beta * &co / integer(2);
    let gp2 = gamma_prime(&(alpha / &nu), beta, gamma)?;
    let d_case2b = min_of([alpha * &gp2 / integer(4), &gp2 / integer(2)]);
    let d_alpha = min_of([d_case1.clone(), d_case2a.clone(), d_case2b.clone()]);

    Ok(BoundConstants {
        alpha: alpha.clone(),
        beta: beta.clone(),
        gamma: gamma.clone(),
        alpha0,
        c_alpha0,
        mu,
        nu,
        gamma_prime_case1: gp1,
        gamma_prime_case2b: gp2,
        d_case1,
        d_case2a,
        d_case2b,
        d_alpha,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterGallaiReport<F> {
    pub holds: bool,
    pub collinear: bool,
    pub ordinary: usize,
    pub witness: Option<Line<F>>,
}

/// A non-collinear set of real points (in the plane or in space) must span an
/// ordinary line; over `Q(ω)` this can fail.
pub fn verify_sylvester_gallai<F: Field>(set: &PointSet<F>) -> Result<SylvesterGallaiReport<F>> {
    if set.len() < 3 {
        return usage(format!("need at least 3 points, got {}", set.len()));
    }
    let lines = spanned_lines(set)?;
    let collinear = lines.len() == 1;
    let witness = lines.iter().find(|l| l.members.len() == 2).map(|l| l.line.clone());
    let ordinary = lines.iter().filter(|l| l.members.len() == 2).count();
    Ok(SylvesterGallaiReport {
        holds: collinear || witness.is_some(),
        collinear,
        ordinary,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBoundReport {
    pub on_first: usize,
    pub on_second: usize,
    /// Ordinary-line count of the set.
    pub lhs: usize,
    /// `|P∩ℓ|·|P∩ℓ'| − |P|`, possibly negative.
    pub rhs: i64,
    pub holds: bool,
}

/// Two skew lines carrying `a` and `b` points force at least `ab − n` ordinary lines.
pub fn verify_skew_bound(
    set: &PointSet<Rational>,
    first: &CanonLine3<Rational>,
    second: &CanonLine3<Rational>,
) -> Result<SkewBoundReport> {
    if set.kind() != PointKind::Affine3 {
        return usage(format!("expected affine 3D points, got {}", set.kind()));
    }
    if !first.is_skew_to(second) {
        return usage("the two lines are coplanar, not skew");
    }
    let count_on = |line: &CanonLine3<Rational>| -> Result<usize> {
        set.iter().try_fold(0, |acc, p| Ok(acc + usize::from(line.contains(p)?)))
    };
    let on_first = count_on(first)?;
    let on_second = count_on(second)?;
    let lhs = span_summary(set)?.ordinary;
    let rhs = (on_first * on_second) as i64 - set.len() as i64;
    Ok(SkewBoundReport {
        on_first,
        on_second,
        lhs,
        rhs,
        holds: lhs as i64 >= rhs,
    })
}

/// The pair of mutually skew spanned lines maximising `|P∩ℓ|·|P∩ℓ'|`.
pub fn richest_skew_pair(set: &PointSet<Rational>) -> Result<Option<(CanonLine3<Rational>, CanonLine3<Rational>)>> {
    if set.kind() != PointKind::Affine3 {
        return usage(format!("expected affine 3D points, got {}", set.kind()));
    }
    let mut lines = spanned_lines(set)?;
    lines.sort_by_key(|l| std::cmp::Reverse(l.members.len()));
    let mut best: Option<(usize, usize, usize)> = None;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let score = lines[i].members.len() * lines[j].members.len();
            if best.is_some_and(|(s, _, _)| s >= score) {
                // sorted by size, so later j cannot improve for this i
                break;
            }
            let (a, b) = (lines[i].line.as_spatial(), lines[j].line.as_spatial());
            if let (Some(a), Some(b)) = (a, b) {
                if a.is_skew_to(b) {
                    best = Some((score, i, j));
                }
            }
        }
    }
    Ok(best.map(|(_, i, j)| {
        (
            lines[i].line.as_spatial().cloned().expect("spatial"),
            lines[j].line.as_spatial().cloned().expect("spatial"),
        )
    }))
}

/// Flags that the near-coplanar lower bound is only asserted for `n ≥ n_k`,
/// a threshold with no known value.
pub const ALMOST_COPLANAR_CAVEAT: &str =
    "the lower bound is guaranteed only for n >= n_k, and n_k is not quantified; a failing comparison is a report, not a violation";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostCoplanarReport {
    pub n: usize,
    pub k: usize,
    pub max_coplanar: usize,
    pub count: usize,
    /// `(k + ½)(n − k) − C(k,2)`, kept exact.
    pub bound: Rational,
    pub holds: bool,
    pub caveat: &'static str,
}

pub fn almost_coplanar_bound(n: usize, k: usize) -> Rational {
    let k_r = integer(k as i64);
    let binom = integer((k * k.saturating_sub(1) / 2) as i64);
    (k_r + Rational::new(1.into(), 2.into())) * integer(n as i64 - k as i64) - binom
}

pub fn verify_almost_coplanar(set: &PointSet<Rational>, k: usize) -> Result<AlmostCoplanarReport> {
    let n = set.len();
    if k > n {
        return usage(format!("k = {k} exceeds n = {n}"));
    }
    let lines = spanned_lines(set)?;
    let planes = planes_from_lines(set, &lines).map_err(|e| match e {
        Error::Degenerate(msg) => Error::Usage(format!("precondition fails: {msg}")),
        other => other,
    })?;
    if planes.max_coplanar > n - k {
        let worst = planes
            .planes
            .iter()
            .find(|p| p.members.len() == planes.max_coplanar)
            .expect("max is attained");
        return usage(format!(
            "plane {:?} holds {} > n - k = {} points",
            worst.plane.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
            planes.max_coplanar,
            n - k
        ));
    }
    let count = summarize_lines(n, &lines).ordinary;
    let bound = almost_coplanar_bound(n, k);
    Ok(AlmostCoplanarReport {
        n,
        k,
        max_coplanar: planes.max_coplanar,
        count,
        holds: integer(count as i64) >= bound,
        bound,
        caveat: ALMOST_COPLANAR_CAVEAT,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallLineCounts {
    pub n: usize,
    pub n_squared: usize,
    pub lines_le3: usize,
    pub lines_le4: usize,
}

pub fn small_line_counts<F: Field>(set: &PointSet<F>) -> Result<SmallLineCounts> {
    if !set.kind().is_planar() {
        return usage(format!("expected a planar set, got {}", set.kind()));
    }
    let s = span_summary(set)?;
    let le3 = s.t(2) + s.t(3);
    Ok(SmallLineCounts {
        n: s.n,
        n_squared: s.n * s.n,
        lines_le3: le3,
        lines_le4: le3 + s.t(4),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcurrentProbe {
    /// Number of distinct lines through the apex needed to cover the set.
    pub contained_in: usize,
    /// Ordinary lines of the set that miss the apex.
    pub ordinary_avoiding_apex: usize,
    /// Over the rationals with 3 or 4 covering lines at least one such line
    /// must exist; `None` when no guarantee applies.
    pub guarantee_holds: Option<bool>,
}

/// Covers the set by lines through `apex` and counts ordinary lines avoiding it.
///
/// `apex` may or may not belong to the set; it never contributes a direction.
pub fn concurrent_lines_probe<F: Field>(set: &PointSet<F>, apex: &Point<F>) -> Result<ConcurrentProbe> {
    if !set.kind().is_planar() || apex.kind() != set.kind() {
        return usage(format!(
            "expected a planar set and an apex of the same kind, got {} and {}",
            set.kind(),
            apex.kind()
        ));
    }
    let lines = spanned_lines(set)?;
    if lines.len() == 1 {
        return usage("the set is contained in one line");
    }
    let mut through_apex = std::collections::HashSet::new();
    for p in set.iter().filter(|&p| p != apex) {
        through_apex.insert(crate::geometry::canon_line(apex, p)?);
    }
    let mut avoiding = 0;
    for l in lines.iter().filter(|l| l.members.len() == 2) {
        if !l.line.contains(apex)? {
            avoiding += 1;
        }
    }
    let contained_in = through_apex.len();
    let guarantee_holds = (F::TAG == Rational::TAG && (3..=4).contains(&contained_in))
        .then_some(avoiding >= 1);
    Ok(ConcurrentProbe {
        contained_in,
        ordinary_avoiding_apex: avoiding,
        guarantee_holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BeckReport {
    pub n: usize,
    pub num_lines: usize,
    pub max_collinear: usize,
    /// `num_lines / n²`.
    pub ratio_lines: Rational,
    /// `max_collinear / n`.
    pub ratio_collinear: Rational,
}

pub fn beck_report<F: Field>(set: &PointSet<F>) -> Result<BeckReport> {
    let s = span_summary(set)?;
    let n = s.n as i64;
    Ok(BeckReport {
        n: s.n,
        num_lines: s.num_lines,
        max_collinear: s.max_collinear,
        ratio_lines: Rational::new((s.num_lines as i64).into(), (n * n).into()),
        ratio_collinear: Rational::new((s.max_collinear as i64).into(), n.into()),
    })
}
