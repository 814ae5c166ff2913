//! Checkers for the depth axioms on finite probe sets.
//!
//! A checker never certifies an axiom universally. It reports `Pass` when no
//! probe violates the property, `Fail` with a replayable witness otherwise,
//! and `Inconclusive` when a counterexample search comes back empty.

use crate::depth::{DepthConfig, Method};
use crate::empirical::EmpiricalFrv;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySet, LinearMap, PlaneGrid};
use crate::metrics::Metric;
use crate::sampling;
use rand::Rng;
use serde::Serialize;
use std::fmt;

/// Anything that maps a fuzzy set and an FRV to a depth value.
pub trait DepthFunction: Sync {
    fn depth(&self, a: &FuzzySet, x: &EmpiricalFrv) -> Result<f64>;
    fn label(&self) -> String;
}

impl DepthFunction for DepthConfig {
    fn depth(&self, a: &FuzzySet, x: &EmpiricalFrv) -> Result<f64> {
        self.evaluate(a, x)
    }

    fn label(&self) -> String {
        DepthConfig::label(self)
    }
}

/// A depth function given by a closure.
pub struct FnDepth<F> {
    pub name: String,
    pub f: F,
}

impl<F> DepthFunction for FnDepth<F>
where
    F: Fn(&FuzzySet, &EmpiricalFrv) -> Result<f64> + Sync,
{
    fn depth(&self, a: &FuzzySet, x: &EmpiricalFrv) -> Result<f64> {
        (self.f)(a, x)
    }

    fn label(&self) -> String {
        self.name.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    P1,
    P1Star,
    P2,
    P3a,
    P3b,
    P4a,
    P4b,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::P1 => "P1",
            Axiom::P1Star => "P1*",
            Axiom::P2 => "P2",
            Axiom::P3a => "P3a",
            Axiom::P3b => "P3b",
            Axiom::P4a => "P4a",
            Axiom::P4b => "P4b",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inconclusive => "inconclusive",
        })
    }
}

/// The offending inputs of a failed check and the values they produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub description: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub depth: String,
    pub metric: Option<String>,
    pub outcome: Outcome,
    pub tolerance: f64,
    /// Number of elementary comparisons performed.
    pub checks: usize,
    pub witness: Option<Witness>,
}

impl AxiomVerdict {
    fn new(
        axiom: Axiom,
        depth: &dyn DepthFunction,
        metric: Option<&Metric>,
        tolerance: f64,
    ) -> Self {
        Self {
            axiom,
            depth: depth.label(),
            metric: metric.map(Metric::label),
            outcome: Outcome::Pass,
            tolerance,
            checks: 0,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    fn fail(&mut self, description: String, values: Vec<f64>) {
        if self.witness.is_none() {
            self.outcome = Outcome::Fail;
            self.witness = Some(Witness {
                description,
                values,
            });
        }
    }
}

fn describe_map(m: &LinearMap) -> String {
    match m {
        LinearMap::Scalar(s) => format!("M=({s})"),
        LinearMap::Matrix2(r) => format!("M={r:?}"),
    }
}

/// `D(M·A + V; M·𝒳 + V) = D(A; 𝒳)` for every transform and probe.
pub fn check_p1(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    transforms: &[(LinearMap, FuzzySet)],
    probes: &[FuzzySet],
    tolerance: f64,
) -> Result<AxiomVerdict> {
    invariance(Axiom::P1, depth, x, transforms, probes, tolerance)
}

/// Invariance under rigid motions: orthogonal maps and translations.
pub fn check_p1_star(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    transforms: &[(LinearMap, FuzzySet)],
    probes: &[FuzzySet],
    tolerance: f64,
) -> Result<AxiomVerdict> {
    if let Some((m, _)) = transforms.iter().find(|(m, _)| !m.is_orthogonal(1e-12)) {
        return Err(Error::InvalidConfig(format!(
            "rigid-body check needs orthogonal maps, got {}",
            describe_map(m)
        )));
    }
    invariance(Axiom::P1Star, depth, x, transforms, probes, tolerance)
}

fn invariance(
    axiom: Axiom,
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    transforms: &[(LinearMap, FuzzySet)],
    probes: &[FuzzySet],
    tolerance: f64,
) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new(axiom, depth, None, tolerance);
    let before = probes
        .iter()
        .map(|p| depth.depth(p, x))
        .collect::<Result<Vec<_>>>()?;
    for (m, shift) in transforms {
        let mx = x.transform(m, shift)?;
        for (i, p) in probes.iter().enumerate() {
            let after = depth.depth(&p.matrix_transform(m)?.add(shift)?, &mx)?;
            v.checks += 1;
            if (after - before[i]).abs() > tolerance {
                v.fail(
                    format!("probe {i} under {}: depth before, after", describe_map(m)),
                    vec![before[i], after],
                );
            }
        }
    }
    Ok(v)
}

/// The center of symmetry is at least as deep as every probe.
pub fn check_p2(
    depth: &dyn DepthFunction,
    center: &FuzzySet,
    x: &EmpiricalFrv,
    probes: &[FuzzySet],
    tolerance: f64,
) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new(Axiom::P2, depth, None, tolerance);
    let top = depth.depth(center, x)?;
    for (i, p) in probes.iter().enumerate() {
        let d = depth.depth(p, x)?;
        v.checks += 1;
        if d > top + tolerance {
            v.fail(
                format!("probe {i} deeper than center: center, probe"),
                vec![top, d],
            );
        }
    }
    Ok(v)
}

/// Depth is non-increasing along `λ ↦ (1-λ)·A* + λ·U` for each `U`.
pub fn check_p3a(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    maximizer: &FuzzySet,
    probes: &[FuzzySet],
    lambdas: &[f64],
    tolerance: f64,
) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new(Axiom::P3a, depth, None, tolerance);
    let mut grid = lambdas.to_vec();
    grid.sort_by(f64::total_cmp);
    for (i, u) in probes.iter().enumerate() {
        let mut prev: Option<(f64, f64)> = None;
        for &lambda in &grid {
            let d = depth.depth(&maximizer.convex_combo(u, lambda)?, x)?;
            if let Some((l0, d0)) = prev {
                v.checks += 1;
                if d > d0 + tolerance {
                    v.fail(
                        format!("probe {i}: depth rises between lambda {l0} and {lambda}"),
                        vec![l0, d0, lambda, d],
                    );
                }
            }
            prev = Some((lambda, d));
        }
    }
    Ok(v)
}

/// Triples `(A*, (1-λ)·A* + λ·V, V)` for every target and λ.
pub fn convex_triples(
    maximizer: &FuzzySet,
    targets: &[FuzzySet],
    lambdas: &[f64],
) -> Result<Vec<(FuzzySet, FuzzySet)>> {
    let mut out = Vec::with_capacity(targets.len() * lambdas.len());
    for v in targets {
        for &l in lambdas {
            out.push((maximizer.convex_combo(v, l)?, v.clone()));
        }
    }
    Ok(out)
}

/// `D(A*) ≥ D(U) ≥ D(V)` for metric-collinear `(A*, U, V)`.
///
/// Triples that are not collinear within `tolerance` (relative to
/// `d(A*, V)`) are rejected as a configuration error.
pub fn check_p3b(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    maximizer: &FuzzySet,
    metric: &Metric,
    triples: &[(FuzzySet, FuzzySet)],
    tolerance: f64,
) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new(Axiom::P3b, depth, Some(metric), tolerance);
    let top = depth.depth(maximizer, x)?;
    for (i, (u, w)) in triples.iter().enumerate() {
        let gap = collinearity_gap(metric, maximizer, u, w)?;
        if gap > tolerance {
            return Err(Error::InvalidConfig(format!(
                "triple {i} is not metric-collinear (gap {gap})"
            )));
        }
        let du = depth.depth(u, x)?;
        let dw = depth.depth(w, x)?;
        v.checks += 1;
        if du > top + tolerance || dw > du + tolerance {
            v.fail(format!("triple {i}: depths A*, U, V"), vec![top, du, dw]);
        }
    }
    Ok(v)
}

/// `|d(A,V) - d(A,U) - d(U,V)|` relative to `max(1, d(A,V))`.
fn collinearity_gap(metric: &Metric, a: &FuzzySet, u: &FuzzySet, v: &FuzzySet) -> Result<f64> {
    let av = metric.distance(a, v)?;
    let au = metric.distance(a, u)?;
    let uv = metric.distance(u, v)?;
    Ok((av - au - uv).abs() / av.max(1.0))
}

/// Seeded search for a metric-collinear triple on which depth increases
/// from `U` to `V`, for fuzzy numbers on the line.
///
/// `V` widens one end of `A*` by `2t`; `U` moves that end by `t` and shifts the
/// other end by `w` with `|w| ≤ t`. Under a Hausdorff-type metric every level
/// of `U` lies halfway between those of `A*` and `V`, so the triple is
/// collinear while `U` moves in a direction the sample may barely spread in.
pub fn search_p3b_counterexample(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    maximizer: &FuzzySet,
    metric: &Metric,
    seed: u64,
    attempts: usize,
) -> Result<AxiomVerdict> {
    if maximizer.dim() != 1 {
        return Err(Error::InvalidConfig(
            "the triple search runs on the line".into(),
        ));
    }
    let mut v = AxiomVerdict::new(Axiom::P3b, depth, Some(metric), 1e-9);
    let mut rng = sampling::rng(seed);
    let top = depth.depth(maximizer, x)?;
    for i in 0..attempts {
        let t = rng.gen_range(0.01..1.0) * 2f64.powi(rng.gen_range(-4..=4));
        let w = t * rng.gen_range(0.2..=1.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let upper_side = rng.gen_bool(0.5);
        let (far, mid) = if upper_side {
            (
                FuzzySet::crisp_interval(0.0, 2.0 * t)?,
                FuzzySet::crisp_interval(w.min(t), t)?,
            )
        } else {
            (
                FuzzySet::crisp_interval(-2.0 * t, 0.0)?,
                FuzzySet::crisp_interval(-t, w.max(-t))?,
            )
        };
        let vset = maximizer.add(&far)?;
        let u = maximizer.add(&mid)?;
        if collinearity_gap(metric, maximizer, &u, &vset)? > 1e-9 {
            continue;
        }
        let du = depth.depth(&u, x)?;
        let dv = depth.depth(&vset, x)?;
        v.checks += 1;
        if du > top + v.tolerance || dv > du + v.tolerance {
            let side = if upper_side { "upper" } else { "lower" };
            v.fail(
                format!("attempt {i}: {side} end t={t}, other end w={w}; depths A*, U, V"),
                vec![top, du, dv, t, w],
            );
            return Ok(v);
        }
    }
    v.outcome = Outcome::Inconclusive;
    Ok(v)
}

/// `D(A* + λ·U)` falls below `eps` by the end of `lambdas`.
pub fn check_p4a(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    maximizer: &FuzzySet,
    u: &FuzzySet,
    lambdas: &[f64],
    eps: f64,
) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new(Axiom::P4a, depth, None, eps);
    let mut values = Vec::with_capacity(lambdas.len());
    for &l in lambdas {
        values.push(depth.depth(&maximizer.add(&u.scale(l))?, x)?);
        v.checks += 1;
    }
    match values.last() {
        Some(&last) if last < eps => {}
        Some(&last) => v.fail(
            format!(
                "depth at lambda {} stays at {last}",
                lambdas[lambdas.len() - 1]
            ),
            values,
        ),
        None => return Err(Error::EmptyInput),
    }
    Ok(v)
}

/// `D(A_n) → 0` along a sequence with `d(A_n, A*) → ∞`.
pub fn check_p4b(
    depth: &dyn DepthFunction,
    x: &EmpiricalFrv,
    maximizer: &FuzzySet,
    metric: &Metric,
    sequence: &[FuzzySet],
    eps: f64,
) -> Result<AxiomVerdict> {
    let mut v = AxiomVerdict::new(Axiom::P4b, depth, Some(metric), eps);
    let mut last = None;
    for (i, a) in sequence.iter().enumerate() {
        let dist = metric.distance(a, maximizer)?;
        let d = depth.depth(a, x)?;
        v.checks += 1;
        last = Some((i, dist, d));
    }
    match last {
        Some((_, _, d)) if d < eps => {}
        Some((i, dist, d)) => v.fail(
            format!("element {i} at distance {dist} keeps depth {d}"),
            vec![dist, d],
        ),
        None => return Err(Error::EmptyInput),
    }
    Ok(v)
}

/// Which axiom groups to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    P1,
    P2,
    P3,
    P4,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "p1" => Ok(Suite::P1),
            "p2" => Ok(Suite::P2),
            "p3" => Ok(Suite::P3),
            "p4" => Ok(Suite::P4),
            _ => Err(Error::InvalidConfig(format!("unknown suite '{s}'"))),
        }
    }
}

impl Suite {
    fn includes(&self, axiom: Axiom) -> bool {
        match self {
            Suite::All => true,
            Suite::P1 => matches!(axiom, Axiom::P1 | Axiom::P1Star),
            Suite::P2 => axiom == Axiom::P2,
            Suite::P3 => matches!(axiom, Axiom::P3a | Axiom::P3b),
            Suite::P4 => matches!(axiom, Axiom::P4a | Axiom::P4b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    Fails,
}

/// One entry of the verdict table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteRow {
    pub expected: Expectation,
    pub verdict: AxiomVerdict,
}

impl SuiteRow {
    /// Whether the observed outcome agrees with the expectation. An empty
    /// counterexample search is not held against an expected failure.
    pub fn as_expected(&self) -> bool {
        matches!(
            (self.expected, self.verdict.outcome),
            (Expectation::Holds, Outcome::Pass)
                | (Expectation::Fails, Outcome::Fail | Outcome::Inconclusive)
        )
    }
}

const LAMBDAS: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
const TOL: f64 = 1e-9;
const EPS: f64 = 1e-3;

struct Fixture {
    center: FuzzySet,
    x: EmpiricalFrv,
    probes: Vec<FuzzySet>,
}

fn fixtures(seed: u64, count: usize) -> Vec<Fixture> {
    let mut rng = sampling::rng(seed);
    (0..count)
        .map(|_| {
            let (center, x) = sampling::sign_flip_frv(&mut rng, 3, 1.0, 1.0);
            let mut probes = x.atoms().to_vec();
            probes.extend(sampling::convex_probes(&mut rng, &x, 10));
            Fixture { center, x, probes }
        })
        .collect()
}

fn line_configs() -> Vec<DepthConfig> {
    let c = |m, r, t| DepthConfig::new(m, r, t).expect("valid suite config");
    vec![
        DepthConfig::projection(),
        c(Method::Natural, 1.0, None),
        c(Method::Natural, 2.0, None),
        c(Method::NaturalRaised, 2.0, None),
        c(Method::Location, 1.0, Some(1.0)),
        c(Method::Location, 2.0, Some(5.0)),
        c(Method::LocationRaised, 2.0, Some(1.0)),
    ]
}

fn row(expected: Expectation, verdict: AxiomVerdict) -> SuiteRow {
    SuiteRow { expected, verdict }
}

/// Runs the expected-verdict table on seeded fixtures.
pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<SuiteRow>> {
    use Expectation::{Fails, Holds};
    let fx = fixtures(seed, 3);
    let configs = line_configs();
    let mut rows = Vec::new();

    if suite.includes(Axiom::P1) {
        let shifts = [
            (LinearMap::Scalar(5.0), FuzzySet::crisp_point(0.0)),
            (LinearMap::Scalar(-2.0), FuzzySet::crisp_interval(1.0, 1.5)?),
            (LinearMap::Scalar(1.0), FuzzySet::crisp_point(0.0)),
        ];
        let f = &fx[0];
        for cfg in &configs {
            let v = check_p1(cfg, &f.x, &shifts, &f.probes, 1e-12)?;
            let e = if cfg.method == Method::Projection {
                Holds
            } else {
                Fails
            };
            rows.push(row(e, v));
        }
        let rigid = [
            (LinearMap::Scalar(1.0), FuzzySet::crisp_point(2.5)),
            (LinearMap::Scalar(-1.0), FuzzySet::crisp_point(-1.0)),
        ];
        for cfg in configs.iter().filter(|c| c.method != Method::Projection) {
            rows.push(row(
                Holds,
                check_p1_star(cfg, &f.x, &rigid, &f.probes, TOL)?,
            ));
        }
        let grid = PlaneGrid::new(72, 10)?;
        let x2 = sampling::random_plane_frv(&mut sampling::rng(seed ^ 0x51), grid, 5);
        let planar = [
            (
                LinearMap::rotation_steps(7, 72),
                FuzzySet::crisp_point_2d(grid, [1.0, -0.5]),
            ),
            (
                LinearMap::rotation_steps(36, 72),
                FuzzySet::crisp_point_2d(grid, [0.0, 0.0]),
            ),
        ];
        for cfg in configs.iter().filter(|c| c.method != Method::Projection) {
            rows.push(row(
                Holds,
                check_p1_star(cfg, &x2, &planar, x2.atoms(), TOL)?,
            ));
        }
    }

    if suite.includes(Axiom::P2) {
        for cfg in &configs {
            let mut agg: Option<AxiomVerdict> = None;
            for f in &fx {
                let v = check_p2(cfg, &f.center, &f.x, &f.probes, TOL)?;
                agg = Some(merge(agg, v));
            }
            rows.push(row(Holds, agg.expect("fixtures")));
        }
    }

    if suite.includes(Axiom::P3a) {
        for cfg in &configs {
            let mut agg: Option<AxiomVerdict> = None;
            for f in &fx {
                let v = check_p3a(cfg, &f.x, &f.center, &f.probes, &LAMBDAS, TOL)?;
                agg = Some(merge(agg, v));
            }
            rows.push(row(Holds, agg.expect("fixtures")));
        }
        let metrics = [Metric::support(2.0)?, Metric::mid_spread(2.0, 1.0)?];
        for cfg in &configs {
            let ms: &[Metric] = if cfg.method == Method::Projection {
                &metrics[..1]
            } else {
                &metrics
            };
            for m in ms {
                let mut agg: Option<AxiomVerdict> = None;
                for f in &fx {
                    let triples = convex_triples(&f.center, &f.probes, &LAMBDAS[1..10])?;
                    let v = check_p3b(cfg, &f.x, &f.center, m, &triples, TOL)?;
                    agg = Some(merge(agg, v));
                }
                rows.push(row(Holds, agg.expect("fixtures")));
            }
        }
        // A sample that spreads far more at the upper ends than the lower.
        let (center, x) = sampling::sign_flip_frv(&mut sampling::rng(seed ^ 0xb3), 4, 0.05, 1.0);
        for r in [1.0, 2.0] {
            let v = search_p3b_counterexample(
                &DepthConfig::projection(),
                &x,
                &center,
                &Metric::hausdorff(r)?,
                seed,
                500,
            )?;
            rows.push(row(Fails, v));
        }
    }

    if suite.includes(Axiom::P4a) {
        let schedule = [1.0, 10.0, 1e2, 1e3, 1e4, 1e5];
        let unit = FuzzySet::crisp_interval(0.0, 1.0)?;
        let f = &fx[0];
        for cfg in &configs {
            rows.push(row(
                Holds,
                check_p4a(cfg, &f.x, &f.center, &unit, &schedule, EPS)?,
            ));
        }
        let metrics = [Metric::support(1.0)?, Metric::hausdorff(1.0)?];
        let seq: Vec<FuzzySet> = schedule
            .iter()
            .map(|&n| f.center.add(&FuzzySet::crisp_point(n)))
            .collect::<Result<_>>()?;
        for cfg in &configs {
            let ms: &[Metric] = if cfg.method == Method::Projection {
                &metrics
            } else {
                &metrics[..1]
            };
            for m in ms {
                rows.push(row(Holds, check_p4b(cfg, &f.x, &f.center, m, &seq, EPS)?));
            }
        }
        // Without a spread term the location depths cannot see growth that
        // keeps the midpoint fixed.
        let flat = EmpiricalFrv::degenerate(FuzzySet::crisp_interval(-1.0, 1.0)?);
        let grow: Vec<FuzzySet> = [1.0, 10.0, 1000.0]
            .iter()
            .map(|&n| FuzzySet::crisp_interval(-n, n))
            .collect::<Result<_>>()?;
        let sym = FuzzySet::crisp_interval(-1.0, 1.0)?;
        for method in [Method::Location, Method::LocationRaised] {
            for r in [1.0, 2.0] {
                let cfg = DepthConfig::new(method, r, Some(0.0))?;
                rows.push(row(
                    Fails,
                    check_p4a(&cfg, &flat, &sym, &sym, &[1.0, 1e3, 1e5], EPS)?,
                ));
                rows.push(row(
                    Fails,
                    check_p4b(&cfg, &flat, &sym, &Metric::support(r)?, &grow, EPS)?,
                ));
            }
        }
    }
    Ok(rows)
}

fn merge(acc: Option<AxiomVerdict>, next: AxiomVerdict) -> AxiomVerdict {
    match acc {
        None => next,
        Some(mut a) => {
            a.checks += next.checks;
            if a.witness.is_none() && next.witness.is_some() {
                a.outcome = next.outcome;
                a.witness = next.witness;
            }
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> FuzzySet {
        FuzzySet::crisp_interval(lo, hi).unwrap()
    }

    fn three() -> EmpiricalFrv {
        EmpiricalFrv::new(
            vec![iv(0.0, 1.0), iv(2.0, 3.0), iv(4.0, 5.0)],
            vec![1.0 / 3.0; 3],
        )
        .unwrap()
    }

    #[test]
    fn p1_verdicts() {
        let x = three();
        let probes = x.atoms().to_vec();
        let m5 = [(LinearMap::Scalar(5.0), FuzzySet::crisp_point(0.0))];
        let p = check_p1(&DepthConfig::projection(), &x, &m5, &probes, 1e-12).unwrap();
        assert!(p.passed());
        let d1 = check_p1(&DepthConfig::natural(1.0).unwrap(), &x, &m5, &probes, 1e-12).unwrap();
        assert_eq!(d1.outcome, Outcome::Fail);
        let w = d1.witness.unwrap();
        assert!((w.values[0] - w.values[1]).abs() > 0.01);
        let id = [(LinearMap::identity(1), FuzzySet::crisp_point(0.0))];
        assert!(
            check_p1(&DepthConfig::natural(1.0).unwrap(), &x, &id, &probes, 0.0)
                .unwrap()
                .passed()
        );
        assert!(check_p1_star(&DepthConfig::projection(), &x, &m5, &probes, 1e-9).is_err());
    }

    #[test]
    fn p3a_on_three_atoms() {
        let x = three();
        let v = check_p3a(
            &DepthConfig::projection(),
            &x,
            &iv(2.0, 3.0),
            &[iv(0.0, 1.0)],
            &LAMBDAS,
            1e-9,
        )
        .unwrap();
        assert!(v.passed());
        assert_eq!(v.checks, 10);
    }

    #[test]
    fn p3b_degenerate_triple() {
        let x = three();
        let a = iv(2.0, 3.0);
        let m = Metric::support(2.0).unwrap();
        let v = check_p3b(
            &DepthConfig::projection(),
            &x,
            &a,
            &m,
            &[(a.clone(), a.clone())],
            1e-9,
        )
        .unwrap();
        assert!(v.passed());
        let bent = [(iv(0.0, 1.0), iv(4.0, 5.0))];
        assert!(check_p3b(&DepthConfig::projection(), &x, &a, &m, &bent, 1e-9).is_err());
    }

    #[test]
    fn closures_are_depth_functions() {
        let f = FnDepth {
            name: "const".into(),
            f: |_: &FuzzySet, _: &EmpiricalFrv| Ok(0.5),
        };
        let x = three();
        let v = check_p2(&f, &iv(2.0, 3.0), &x, x.atoms(), 0.0).unwrap();
        assert!(v.passed());
        assert_eq!(v.depth, "const");
    }

    #[test]
    fn theta_zero_counterexample() {
        let flat = EmpiricalFrv::degenerate(iv(-1.0, 1.0));
        let sym = iv(-1.0, 1.0);
        let cfg = DepthConfig::location(2.0, 0.0).unwrap();
        let v = check_p4a(&cfg, &flat, &sym, &sym, &[1.0, 1e5], 1e-3).unwrap();
        assert_eq!(v.outcome, Outcome::Fail);
        assert_eq!(v.witness.unwrap().values, vec![1.0, 1.0]);
    }

    #[test]
    fn suite_matches_expectations() {
        let rows = run_suite(Suite::All, 2024).unwrap();
        for r in &rows {
            assert!(r.as_expected(), "{r:?}");
        }
        let again = run_suite(Suite::All, 2024).unwrap();
        assert_eq!(rows, again);
    }
}
