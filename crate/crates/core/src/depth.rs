//! Projection depth and the L^r-type depths of a fuzzy set with respect to
//! an empirical fuzzy random variable.

use crate::empirical::{median_and_mad, EmpiricalFrv};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySet, Levels, SupportGrid};
use crate::metrics::Metric;
use crate::pwl;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Depth values closer than this share a rank.
const RANK_TIE_TOL: f64 = 1e-12;

/// Deviations below `ULP_GUARD · ε · scale` are treated as exact zeros.
const ULP_GUARD: f64 = 16.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// `D_FP`
    Projection,
    /// `D_r`
    Natural,
    /// `RD_r`
    NaturalRaised,
    /// `D_r^θ`
    Location,
    /// `RD_r^θ`
    LocationRaised,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Projection,
        Method::Natural,
        Method::NaturalRaised,
        Method::Location,
        Method::LocationRaised,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Projection => "projection",
            Method::Natural => "natural",
            Method::NaturalRaised => "natural-raised",
            Method::Location => "location",
            Method::LocationRaised => "location-raised",
        }
    }

    pub fn uses_theta(&self) -> bool {
        matches!(self, Method::Location | Method::LocationRaised)
    }

    pub fn uses_r(&self) -> bool {
        !matches!(self, Method::Projection)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown depth method '{s}'")))
    }
}

/// How a vanishing MAD enters the outlyingness supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MadZeroPolicy {
    /// `0/0 = 0` and `x/0 = ∞` for `x > 0`.
    #[default]
    Standard,
    /// Directions and levels with zero MAD are left out of the supremum.
    IgnoreDegenerate,
}

/// A depth function with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DepthConfig {
    pub method: Method,
    pub r: f64,
    pub theta: Option<f64>,
    /// Uniform α steps added to the knot-induced levels in the outlyingness
    /// supremum on the line. Planar sets use their own grid.
    pub alpha_steps: usize,
    pub mad_zero: MadZeroPolicy,
}

impl DepthConfig {
    pub const DEFAULT_ALPHA_STEPS: usize = 100;

    pub fn new(method: Method, r: f64, theta: Option<f64>) -> Result<Self> {
        let cfg = Self {
            method,
            r,
            theta,
            alpha_steps: Self::DEFAULT_ALPHA_STEPS,
            mad_zero: MadZeroPolicy::Standard,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn projection() -> Self {
        Self {
            method: Method::Projection,
            r: 1.0,
            theta: None,
            alpha_steps: Self::DEFAULT_ALPHA_STEPS,
            mad_zero: MadZeroPolicy::Standard,
        }
    }

    pub fn natural(r: f64) -> Result<Self> {
        Self::new(Method::Natural, r, None)
    }

    pub fn natural_raised(r: f64) -> Result<Self> {
        Self::new(Method::NaturalRaised, r, None)
    }

    pub fn location(r: f64, theta: f64) -> Result<Self> {
        Self::new(Method::Location, r, Some(theta))
    }

    pub fn location_raised(r: f64, theta: f64) -> Result<Self> {
        Self::new(Method::LocationRaised, r, Some(theta))
    }

    pub fn with_alpha_steps(mut self, steps: usize) -> Result<Self> {
        self.alpha_steps = steps;
        self.validate()?;
        Ok(self)
    }

    pub fn with_mad_zero_policy(mut self, policy: MadZeroPolicy) -> Self {
        self.mad_zero = policy;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha_steps == 0 {
            return Err(Error::InvalidConfig(
                "alpha grid needs at least one step".into(),
            ));
        }
        if self.method.uses_r() && !(self.r >= 1.0 && self.r.is_finite()) {
            return Err(Error::OutOfRange {
                what: "r",
                value: self.r,
                range: "[1, inf)",
            });
        }
        match (self.method.uses_theta(), self.theta) {
            (true, None) => Err(Error::InvalidConfig(format!(
                "method {} needs theta",
                self.method
            ))),
            (false, Some(_)) => Err(Error::InvalidConfig(format!(
                "method {} takes no theta",
                self.method
            ))),
            (true, Some(t)) if !(t >= 0.0 && t.is_finite()) => Err(Error::OutOfRange {
                what: "theta",
                value: t,
                range: "[0, inf)",
            }),
            _ => Ok(()),
        }
    }

    /// The metric behind an L^r-type depth.
    pub fn metric(&self) -> Option<Metric> {
        match self.method {
            Method::Projection => None,
            Method::Natural | Method::NaturalRaised => Some(Metric::Support { r: self.r }),
            Method::Location | Method::LocationRaised => Some(Metric::MidSpread {
                r: self.r,
                theta: self.theta.unwrap_or(0.0),
            }),
        }
    }

    /// Short symbol such as `D_FP`, `RD_2` or `D_1^5`.
    pub fn label(&self) -> String {
        let r = self.r;
        match self.method {
            Method::Projection => "D_FP".into(),
            Method::Natural => format!("D_{r}"),
            Method::NaturalRaised => format!("RD_{r}"),
            Method::Location => format!("D_{r}^{}", self.theta.unwrap_or(0.0)),
            Method::LocationRaised => format!("RD_{r}^{}", self.theta.unwrap_or(0.0)),
        }
    }

    pub fn evaluate(&self, a: &FuzzySet, x: &EmpiricalFrv) -> Result<f64> {
        match self.method {
            Method::Projection => {
                let o = outlyingness_with(a, x, self.alpha_steps, self.mad_zero)?;
                Ok(depth_from_outlyingness(o))
            }
            Method::Natural | Method::Location => {
                let m = self.metric().expect("L^r depth has a metric");
                Ok(1.0 / (1.0 + expected(a, x, &m, false)?))
            }
            Method::NaturalRaised | Method::LocationRaised => {
                let m = self.metric().expect("L^r depth has a metric");
                Ok(1.0 / (1.0 + expected(a, x, &m, true)?))
            }
        }
    }
}

fn depth_from_outlyingness(o: f64) -> f64 {
    if o.is_infinite() {
        0.0
    } else {
        1.0 / (1.0 + o)
    }
}

/// `E[d(A, 𝒳)]` or `E[d(A, 𝒳)^r]`, summed in atom order.
fn expected(a: &FuzzySet, x: &EmpiricalFrv, metric: &Metric, powered: bool) -> Result<f64> {
    x.compatible(a)?;
    let mut total = 0.0;
    for (atom, w) in x.atoms().iter().zip(x.weights()) {
        let d = if powered {
            metric.powered(a, atom)?
        } else {
            metric.distance(a, atom)?
        };
        total += w * d;
    }
    Ok(total)
}

/// Standardized deviation of `query` from the sample median.
///
/// `scale` bounds the magnitude of every support value involved; deviations
/// within a few ulps of it are rounding residue and count as zero.
fn standardized(
    query: f64,
    values: &[f64],
    weights: &[f64],
    buf: &mut Vec<(f64, f64)>,
    policy: MadZeroPolicy,
    scale: f64,
) -> f64 {
    let (med, mad) = median_and_mad(values, weights, buf);
    let mut num = (query - med.point).abs();
    if num <= ULP_GUARD * f64::EPSILON * scale {
        num = 0.0;
    }
    if mad > 0.0 {
        num / mad
    } else if num == 0.0 || policy == MadZeroPolicy::IgnoreDegenerate {
        0.0
    } else {
        f64::INFINITY
    }
}

/// α values at which the outlyingness supremum over a line sample is attained.
///
/// Between consecutive returned values the atom supports keep their order,
/// every deviation from the median keeps its sign and the deviations keep
/// their order, so the median and MAD are linear and the standardized
/// deviation is monotone; the supremum sits at an endpoint.
fn line_alphas(query: &Levels, atoms: &[&Levels], weights: &[f64], alpha_steps: usize) -> Vec<f64> {
    let mut base: Vec<f64> = (0..=alpha_steps)
        .map(|j| j as f64 / alpha_steps as f64)
        .collect();
    base = pwl::merge_knots(&base, query.knots());
    for a in atoms {
        base = pwl::merge_knots(&base, a.knots());
    }
    let n = atoms.len();
    let mut out = base.clone();
    let mut buf = Vec::with_capacity(n);
    let mut y0 = vec![0.0; n];
    let mut y1 = vec![0.0; n];
    for positive in [true, false] {
        for seg in base.windows(2) {
            let (a0, a1) = (seg[0], seg[1]);
            for i in 0..n {
                y0[i] = atoms[i].support_sign(positive, a0);
                y1[i] = atoms[i].support_sign(positive, a1);
            }
            let mut cuts = vec![0.0, 1.0];
            for i in 0..n {
                for j in i + 1..n {
                    if let Some(t) = pwl::zero_crossing(y0[i] - y0[j], y1[i] - y1[j]) {
                        cuts.push(t);
                    }
                }
            }
            cuts.sort_by(f64::total_cmp);
            cuts.dedup();
            let at = |v0: f64, v1: f64, t: f64| v0 + t * (v1 - v0);
            let q0 = query.support_sign(positive, a0);
            let q1 = query.support_sign(positive, a1);
            for w in cuts.windows(2) {
                let (t0, t1) = (w[0], w[1]);
                let v0: Vec<f64> = (0..n).map(|i| at(y0[i], y1[i], t0)).collect();
                let v1: Vec<f64> = (0..n).map(|i| at(y0[i], y1[i], t1)).collect();
                let m0 = median_and_mad(&v0, weights, &mut buf).0.point;
                let m1 = median_and_mad(&v1, weights, &mut buf).0.point;
                let mut roots = Vec::new();
                roots.push(pwl::zero_crossing(at(q0, q1, t0) - m0, at(q0, q1, t1) - m1));
                for i in 0..n {
                    roots.push(pwl::zero_crossing(v0[i] - m0, v1[i] - m1));
                    for j in i + 1..n {
                        roots.push(pwl::zero_crossing(
                            v0[i] + v0[j] - 2.0 * m0,
                            v1[i] + v1[j] - 2.0 * m1,
                        ));
                    }
                }
                let to_alpha = |t: f64| a0 + t * (a1 - a0);
                out.push(to_alpha(t0));
                out.extend(
                    roots
                        .into_iter()
                        .flatten()
                        .map(|s| to_alpha(t0 + s * (t1 - t0))),
                );
            }
        }
    }
    out.retain(|a| (0.0..=1.0).contains(a));
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

fn line_outlyingness(
    query: &Levels,
    x: &EmpiricalFrv,
    alpha_steps: usize,
    policy: MadZeroPolicy,
) -> f64 {
    let atoms: Vec<&Levels> = x
        .atoms()
        .iter()
        .map(|a| a.as_levels().expect("compatible line atoms"))
        .collect();
    let alphas = line_alphas(query, &atoms, x.weights(), alpha_steps);
    let scale = atoms
        .iter()
        .chain(std::iter::once(&query))
        .flat_map(|l| l.lower().iter().chain(l.upper()))
        .fold(0.0_f64, |m, v| m.max(v.abs()));
    let mut buf = Vec::with_capacity(atoms.len());
    let mut values = vec![0.0; atoms.len()];
    let mut sup = 0.0_f64;
    for positive in [true, false] {
        for &alpha in &alphas {
            for (v, a) in values.iter_mut().zip(&atoms) {
                *v = a.support_sign(positive, alpha);
            }
            let q = query.support_sign(positive, alpha);
            sup = sup.max(standardized(
                q,
                &values,
                x.weights(),
                &mut buf,
                policy,
                scale,
            ));
            if sup.is_infinite() {
                return sup;
            }
        }
    }
    sup
}

fn plane_outlyingness(query: &SupportGrid, x: &EmpiricalFrv, policy: MadZeroPolicy) -> f64 {
    let atoms: Vec<&SupportGrid> = x
        .atoms()
        .iter()
        .map(|a| a.as_support_grid().expect("compatible planar atoms"))
        .collect();
    let g = query.grid();
    let scale = atoms
        .iter()
        .chain(std::iter::once(&query))
        .flat_map(|a| a.values())
        .fold(0.0_f64, |m, v| m.max(v.abs()));
    let mut buf = Vec::with_capacity(atoms.len());
    let mut values = vec![0.0; atoms.len()];
    let mut sup = 0.0_f64;
    for k in 0..g.directions() {
        for j in 0..g.alpha_nodes() {
            for (v, a) in values.iter_mut().zip(&atoms) {
                *v = a.value(k, j);
            }
            sup = sup.max(standardized(
                query.value(k, j),
                &values,
                x.weights(),
                &mut buf,
                policy,
                scale,
            ));
            if sup.is_infinite() {
                return sup;
            }
        }
    }
    sup
}

/// Outlyingness with explicit α resolution and MAD-zero policy.
pub fn outlyingness_with(
    a: &FuzzySet,
    x: &EmpiricalFrv,
    alpha_steps: usize,
    policy: MadZeroPolicy,
) -> Result<f64> {
    x.compatible(a)?;
    if alpha_steps == 0 {
        return Err(Error::InvalidConfig(
            "alpha grid needs at least one step".into(),
        ));
    }
    Ok(match a {
        FuzzySet::Line(l) => line_outlyingness(l, x, alpha_steps, policy),
        FuzzySet::Plane(s) => plane_outlyingness(s, x, policy),
    })
}

/// `O(A; 𝒳) = sup_{u, α} |s_A(u,α) - med s_𝒳(u,α)| / MAD s_𝒳(u,α)`.
pub fn outlyingness(a: &FuzzySet, x: &EmpiricalFrv) -> Result<f64> {
    outlyingness_with(
        a,
        x,
        DepthConfig::DEFAULT_ALPHA_STEPS,
        MadZeroPolicy::Standard,
    )
}

/// `D_FP(A; 𝒳) = (1 + O(A; 𝒳))^{-1}`, and 0 when the outlyingness is infinite.
pub fn projection_depth(a: &FuzzySet, x: &EmpiricalFrv) -> Result<f64> {
    outlyingness(a, x).map(depth_from_outlyingness)
}

/// `D_r(A; 𝒳) = (1 + E[ρ_r(A, 𝒳)])^{-1}`.
pub fn natural_depth(a: &FuzzySet, x: &EmpiricalFrv, r: f64) -> Result<f64> {
    DepthConfig::natural(r)?.evaluate(a, x)
}

/// `RD_r(A; 𝒳) = (1 + E[ρ_r(A, 𝒳)^r])^{-1}`.
pub fn natural_raised_depth(a: &FuzzySet, x: &EmpiricalFrv, r: f64) -> Result<f64> {
    DepthConfig::natural_raised(r)?.evaluate(a, x)
}

/// `D_r^θ(A; 𝒳) = (1 + E[d_{r,θ}(A, 𝒳)])^{-1}`.
pub fn location_depth(a: &FuzzySet, x: &EmpiricalFrv, r: f64, theta: f64) -> Result<f64> {
    DepthConfig::location(r, theta)?.evaluate(a, x)
}

/// `RD_r^θ(A; 𝒳) = (1 + E[d_{r,θ}(A, 𝒳)^r])^{-1}`.
pub fn location_raised_depth(a: &FuzzySet, x: &EmpiricalFrv, r: f64, theta: f64) -> Result<f64> {
    DepthConfig::location_raised(r, theta)?.evaluate(a, x)
}

/// Depth values of a set of queries, with ranks and method metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DepthReport {
    pub method: Method,
    pub r: Option<f64>,
    pub theta: Option<f64>,
    pub alpha_steps: usize,
    pub depths: Vec<f64>,
    /// Rank 1 is deepest; ties share the average rank.
    pub ranks: Vec<f64>,
}

impl DepthReport {
    /// Indices of the deepest queries.
    pub fn argmax(&self) -> Vec<usize> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(i, _)| (self.depths[*i] - self.max_depth()).abs() <= RANK_TIE_TOL)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn max_depth(&self) -> f64 {
        self.depths
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Descending average ranks; values within 1e-12 of a group's first value tie.
pub fn descending_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let lead = values[order[start]];
        let mut end = start + 1;
        while end < order.len() && (lead - values[order[end]]).abs() <= RANK_TIE_TOL {
            end += 1;
        }
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Depth of every query (the atoms of `x` when `queries` is `None`).
///
/// Queries are evaluated in parallel; each value depends only on its own
/// query, so the report does not depend on scheduling.
pub fn depth_table(
    x: &EmpiricalFrv,
    queries: Option<&[FuzzySet]>,
    config: &DepthConfig,
) -> Result<DepthReport> {
    config.validate()?;
    let queries = queries.unwrap_or(x.atoms());
    let depths = queries
        .par_iter()
        .map(|q| config.evaluate(q, x))
        .collect::<Result<Vec<f64>>>()?;
    Ok(DepthReport {
        method: config.method,
        r: config.method.uses_r().then_some(config.r),
        theta: config.theta,
        alpha_steps: config.alpha_steps,
        ranks: descending_ranks(&depths),
        depths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::PlaneGrid;

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
    fn outlyingness_worked_values() {
        let x = three();
        assert_eq!(outlyingness(&iv(2.0, 3.0), &x).unwrap(), 0.0);
        assert_eq!(outlyingness(&iv(0.0, 1.0), &x).unwrap(), 1.0);
        assert_eq!(projection_depth(&iv(2.0, 3.0), &x).unwrap(), 1.0);
        assert_eq!(projection_depth(&iv(0.0, 1.0), &x).unwrap(), 0.5);
        let t = FuzzySet::trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        let deg = EmpiricalFrv::degenerate(t.clone());
        assert_eq!(outlyingness(&t, &deg).unwrap(), 0.0);
    }

    #[test]
    fn mad_zero_policies() {
        let deg = EmpiricalFrv::degenerate(iv(0.0, 1.0));
        let off = iv(0.0, 2.0);
        assert_eq!(outlyingness(&off, &deg).unwrap(), f64::INFINITY);
        assert_eq!(projection_depth(&off, &deg).unwrap(), 0.0);
        let lenient = outlyingness_with(&off, &deg, 10, MadZeroPolicy::IgnoreDegenerate).unwrap();
        assert_eq!(lenient, 0.0);
    }

    #[test]
    fn crisp_points_reduce_to_multivariate_depth() {
        let x = EmpiricalFrv::new(
            vec![
                FuzzySet::crisp_point(0.0),
                FuzzySet::crisp_point(1.0),
                FuzzySet::crisp_point(2.0),
            ],
            vec![1.0 / 3.0; 3],
        )
        .unwrap();
        assert_eq!(
            projection_depth(&FuzzySet::crisp_point(1.0), &x).unwrap(),
            1.0
        );
        assert_eq!(
            projection_depth(&FuzzySet::crisp_point(0.0), &x).unwrap(),
            0.5
        );
    }

    #[test]
    fn exact_supremum_between_grid_nodes() {
        // The top two upper ends cross at α = 2/3, which moves the MAD.
        let x = EmpiricalFrv::new(
            [(4.0, 10.0), (6.0, 6.0), (3.0, 3.0), (1.0, 1.0), (0.0, 0.0)]
                .iter()
                .map(|&(c, d)| FuzzySet::trapezoid(0.0, 0.0, c, d).unwrap())
                .collect(),
            vec![0.2; 5],
        )
        .unwrap();
        let a = FuzzySet::trapezoid(0.0, 0.0, 3.5, 3.5).unwrap();
        let coarse = outlyingness_with(&a, &x, 1, MadZeroPolicy::Standard).unwrap();
        let fine = outlyingness_with(&a, &x, 1000, MadZeroPolicy::Standard).unwrap();
        // brute force over a dense grid never exceeds the breakpoint supremum
        let mut brute = 0.0_f64;
        let mut buf = Vec::new();
        for i in 0..=30_000 {
            let alpha = i as f64 / 30_000.0;
            for u in [[1.0], [-1.0]] {
                let (v, w) = x.support_marginal(&u, alpha).unwrap();
                let q = a.support(&u, alpha).unwrap();
                brute = brute.max(standardized(
                    q,
                    &v,
                    &w,
                    &mut buf,
                    MadZeroPolicy::Standard,
                    10.0,
                ));
            }
        }
        assert!((coarse - fine).abs() < 1e-12, "{coarse} vs {fine}");
        assert!(brute <= coarse + 1e-12);
        assert!(coarse - brute < 1e-3, "{coarse} vs {brute}");
    }

    #[test]
    fn natural_depth_worked_values() {
        let x = EmpiricalFrv::new(vec![iv(1.0, 2.0), iv(5.0, 7.0)], vec![0.5, 0.5]).unwrap();
        let a = iv(3.0, 4.0);
        assert!((natural_depth(&a, &x, 1.0).unwrap() - 4.0 / 13.0).abs() < 1e-15);
        let d2 = natural_depth(&a, &x, 2.0).unwrap();
        assert!((d2 - 1.0 / (2.0 + 0.5 * 6.5_f64.sqrt())).abs() < 1e-15);
        assert!((natural_raised_depth(&a, &x, 2.0).unwrap() - 0.16).abs() < 1e-15);
        let deg = EmpiricalFrv::degenerate(a.clone());
        assert_eq!(natural_depth(&a, &deg, 3.0).unwrap(), 1.0);
        assert_eq!(natural_raised_depth(&a, &deg, 3.0).unwrap(), 1.0);
    }

    #[test]
    fn location_depth_worked_values() {
        let x = EmpiricalFrv::new(vec![iv(0.0, 2.0), iv(2.0, 3.0)], vec![0.5, 0.5]).unwrap();
        let a = iv(1.0, 2.0);
        assert!((location_depth(&a, &x, 1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        let r = 2.0;
        let theta: f64 = 3.0;
        let closed = 1.0 / (1.0 + 0.5 * (1.0 + (1.0 + theta).powf(1.0 / r) / 2.0));
        assert!((location_depth(&a, &x, r, theta).unwrap() - closed).abs() < 1e-15);
        let raised = 1.0 / (1.0 + 0.5 * (1.0 + (1.0 + theta) / 2.0_f64.powf(r)));
        assert!((location_raised_depth(&a, &x, r, theta).unwrap() - raised).abs() < 1e-15);
        let flat = EmpiricalFrv::degenerate(iv(-1.0, 1.0));
        for n in [1.0, 10.0, 1000.0] {
            assert_eq!(
                location_raised_depth(&iv(-n, n), &flat, 2.0, 0.0).unwrap(),
                1.0
            );
        }
    }

    #[test]
    fn config_validation() {
        assert!(DepthConfig::natural(0.5).is_err());
        assert!(DepthConfig::new(Method::Location, 1.0, None).is_err());
        assert!(DepthConfig::new(Method::Natural, 1.0, Some(1.0)).is_err());
        assert!(DepthConfig::location(1.0, -2.0).is_err());
        assert!(DepthConfig::projection().with_alpha_steps(0).is_err());
        assert_eq!(
            "natural-raised".parse::<Method>().unwrap(),
            Method::NaturalRaised
        );
        assert!("tukey".parse::<Method>().is_err());
        assert_eq!(DepthConfig::location(1.0, 5.0).unwrap().label(), "D_1^5");
    }

    #[test]
    fn grid_mismatch_is_reported() {
        let g = PlaneGrid::new(8, 2).unwrap();
        let h = PlaneGrid::new(12, 2).unwrap();
        let x = EmpiricalFrv::degenerate(FuzzySet::crisp_point_2d(g, [0.0, 0.0]));
        let a = FuzzySet::crisp_point_2d(h, [0.0, 0.0]);
        assert_eq!(projection_depth(&a, &x), Err(Error::GridMismatch));
        assert_eq!(natural_depth(&a, &x, 1.0), Err(Error::GridMismatch));
    }

    #[test]
    fn ranks_average_ties() {
        assert_eq!(
            descending_ranks(&[0.5, 1.0, 0.5, 0.2]),
            vec![2.5, 1.0, 2.5, 4.0]
        );
        assert_eq!(descending_ranks(&[0.3]), vec![1.0]);
    }

    #[test]
    fn table_defaults_to_atoms() {
        let x = three();
        let report = depth_table(&x, None, &DepthConfig::projection()).unwrap();
        assert_eq!(report.depths, vec![0.5, 1.0, 0.5]);
        assert_eq!(report.ranks, vec![2.5, 1.0, 2.5]);
        assert_eq!(report.argmax(), vec![1]);
        assert_eq!(report.r, None);
        let single = EmpiricalFrv::degenerate(iv(0.0, 1.0));
        let report = depth_table(&single, None, &DepthConfig::natural(2.0).unwrap()).unwrap();
        assert_eq!((report.depths[0], report.ranks[0]), (1.0, 1.0));
    }
}
