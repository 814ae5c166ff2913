//! Fuzzy sets whose α-levels are non-empty compact convex sets.
//!
//! Two representations share one type, [`FuzzySet`]:
//!
//! - On the line, levels are held exactly as piecewise-linear endpoint
//!   functions `α ↦ [lo(α), hi(α)]`. Trapezoids, their sums, scalings and
//!   convex combinations stay in this class, so every operation is exact up
//!   to floating-point rounding.
//! - In the plane, the support function `s(u, α)` is sampled on a uniform
//!   direction grid (even size, so `u ↦ -u` is a grid involution) times a
//!   uniform α grid.

use crate::error::{Error, Result};
use crate::pwl;
use std::f64::consts::TAU;

const UNIT_TOL: f64 = 1e-9;
const SNAP_TOL: f64 = 1e-9;
const SINGULAR_TOL: f64 = 1e-12;

/// A closed interval `[lo, hi]` of the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo <= hi) {
            return Err(Error::InvalidLevels(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Hausdorff distance between two intervals.
    pub fn hausdorff(&self, other: &Interval) -> f64 {
        (self.lo - other.lo).abs().max((self.hi - other.hi).abs())
    }
}

/// A continuous piecewise-linear function on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    knots: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseLinear {
    /// Knots must start at 0, end at 1 and increase strictly.
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if knots.len() < 2 || knots.len() != values.len() {
            return Err(Error::InvalidLevels(
                "need at least two knots and one value per knot".into(),
            ));
        }
        if knots[0] != 0.0 || knots[knots.len() - 1] != 1.0 {
            return Err(Error::InvalidLevels("knots must span [0, 1]".into()));
        }
        if knots.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidLevels("knots must increase strictly".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidLevels("values must be finite".into()));
        }
        Ok(Self { knots, values })
    }

    pub fn constant(value: f64) -> Self {
        Self {
            knots: vec![0.0, 1.0],
            values: vec![value, value],
        }
    }

    /// The linear function with `f(0) = at_zero` and `f(1) = at_one`.
    pub fn linear(at_zero: f64, at_one: f64) -> Self {
        Self {
            knots: vec![0.0, 1.0],
            values: vec![at_zero, at_one],
        }
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        pwl::interpolate(&self.knots, &self.values, alpha)
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn resample(&self, onto: &[f64]) -> Vec<f64> {
        pwl::resample(&self.knots, &self.values, onto)
    }
}

/// A trapezoidal fuzzy number `Tra(a, b, c, d)`: support `[a, d]`, core `[b, c]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if !(a <= b && b <= c && c <= d) || ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(Error::OrderViolation { a, b, c, d });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn level(&self, alpha: f64) -> Interval {
        Interval {
            lo: self.a + alpha * (self.b - self.a),
            hi: self.d - alpha * (self.d - self.c),
        }
    }

    /// Membership degree of `x`.
    pub fn membership(&self, x: f64) -> f64 {
        if x < self.a || x > self.d {
            0.0
        } else if x < self.b {
            (x - self.a) / (self.b - self.a)
        } else if x <= self.c {
            1.0
        } else {
            (self.d - x) / (self.d - self.c)
        }
    }

    pub fn to_fuzzy(&self) -> FuzzySet {
        FuzzySet::Line(Levels {
            knots: vec![0.0, 1.0],
            lo: vec![self.a, self.b],
            hi: vec![self.d, self.c],
        })
    }
}

/// Builds the trapezoidal fuzzy number `Tra(a, b, c, d)`.
pub fn make_trapezoid(a: f64, b: f64, c: f64, d: f64) -> Result<FuzzySet> {
    Trapezoid::new(a, b, c, d).map(|t| t.to_fuzzy())
}

/// Exact levels of a fuzzy number: endpoints are linear between `knots`.
#[derive(Debug, Clone, PartialEq)]
pub struct Levels {
    knots: Vec<f64>,
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl Levels {
    fn validate(knots: Vec<f64>, lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        let scale = lo.iter().chain(&hi).fold(1.0_f64, |m, v| m.max(v.abs()));
        let tol = 1e-12 * scale;
        for i in 0..knots.len() {
            if lo[i] > hi[i] + tol {
                return Err(Error::InvalidLevels(format!(
                    "empty level at alpha = {}: [{}, {}]",
                    knots[i], lo[i], hi[i]
                )));
            }
        }
        for w in 0..knots.len() - 1 {
            if lo[w + 1] < lo[w] - tol || hi[w + 1] > hi[w] + tol {
                return Err(Error::InvalidLevels(format!(
                    "levels are not nested between alpha = {} and {}",
                    knots[w],
                    knots[w + 1]
                )));
            }
        }
        Ok(Self { knots, lo, hi })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn lower(&self) -> &[f64] {
        &self.lo
    }

    pub fn upper(&self) -> &[f64] {
        &self.hi
    }

    pub fn level(&self, alpha: f64) -> Interval {
        Interval {
            lo: pwl::interpolate(&self.knots, &self.lo, alpha),
            hi: pwl::interpolate(&self.knots, &self.hi, alpha),
        }
    }

    /// Support value in direction `+1` (`positive = true`) or `-1`.
    pub(crate) fn support_sign(&self, positive: bool, alpha: f64) -> f64 {
        if positive {
            pwl::interpolate(&self.knots, &self.hi, alpha)
        } else {
            -pwl::interpolate(&self.knots, &self.lo, alpha)
        }
    }

    /// Endpoints resampled on a common knot vector.
    pub(crate) fn on_knots(&self, knots: &[f64]) -> (Vec<f64>, Vec<f64>) {
        if knots == self.knots.as_slice() {
            return (self.lo.clone(), self.hi.clone());
        }
        (
            pwl::resample(&self.knots, &self.lo, knots),
            pwl::resample(&self.knots, &self.hi, knots),
        )
    }

    fn zip_with(&self, other: &Levels, f: impl Fn(f64, f64) -> f64) -> Levels {
        let knots = pwl::merge_knots(&self.knots, &other.knots);
        let (alo, ahi) = self.on_knots(&knots);
        let (blo, bhi) = other.on_knots(&knots);
        Levels {
            lo: alo.iter().zip(&blo).map(|(x, y)| f(*x, *y)).collect(),
            hi: ahi.iter().zip(&bhi).map(|(x, y)| f(*x, *y)).collect(),
            knots,
        }
    }

    fn scaled(&self, gamma: f64) -> Levels {
        if gamma >= 0.0 {
            Levels {
                knots: self.knots.clone(),
                lo: self.lo.iter().map(|v| gamma * v).collect(),
                hi: self.hi.iter().map(|v| gamma * v).collect(),
            }
        } else {
            Levels {
                knots: self.knots.clone(),
                lo: self.hi.iter().map(|v| gamma * v).collect(),
                hi: self.lo.iter().map(|v| gamma * v).collect(),
            }
        }
    }
}

/// Uniform grids for planar fuzzy sets: `directions` unit vectors at angles
/// `2πk/directions` and `alpha_steps + 1` α nodes `j/alpha_steps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneGrid {
    directions: usize,
    alpha_steps: usize,
}

impl PlaneGrid {
    pub const DEFAULT_DIRECTIONS: usize = 360;
    pub const DEFAULT_ALPHA_STEPS: usize = 100;

    pub fn new(directions: usize, alpha_steps: usize) -> Result<Self> {
        if directions < 4 || !directions.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "direction grid size must be even and at least 4, got {directions}"
            )));
        }
        if alpha_steps == 0 {
            return Err(Error::InvalidConfig(
                "alpha grid needs at least one step".into(),
            ));
        }
        Ok(Self {
            directions,
            alpha_steps,
        })
    }

    pub fn directions(&self) -> usize {
        self.directions
    }

    pub fn alpha_steps(&self) -> usize {
        self.alpha_steps
    }

    pub fn alpha_nodes(&self) -> usize {
        self.alpha_steps + 1
    }

    pub fn alpha(&self, j: usize) -> f64 {
        j as f64 / self.alpha_steps as f64
    }

    /// Composite trapezoidal weights on the α nodes.
    pub fn alpha_weights(&self) -> Vec<f64> {
        let h = 1.0 / self.alpha_steps as f64;
        (0..=self.alpha_steps)
            .map(|j| {
                if j == 0 || j == self.alpha_steps {
                    0.5 * h
                } else {
                    h
                }
            })
            .collect()
    }

    pub fn direction(&self, k: usize) -> [f64; 2] {
        let n = self.directions;
        let k = k % n;
        // quarter turns land exactly on the axes
        if (4 * k).is_multiple_of(n) {
            return match 4 * k / n {
                0 => [1.0, 0.0],
                1 => [0.0, 1.0],
                2 => [-1.0, 0.0],
                _ => [0.0, -1.0],
            };
        }
        let (s, c) = (TAU * k as f64 / n as f64).sin_cos();
        [c, s]
    }

    pub fn antipode(&self, k: usize) -> usize {
        (k + self.directions / 2) % self.directions
    }

    /// Grid position of the direction with angle `angle`, in units of the grid step.
    fn position(&self, angle: f64) -> f64 {
        let t = angle.rem_euclid(TAU) / TAU * self.directions as f64;
        if t >= self.directions as f64 {
            0.0
        } else {
            t
        }
    }

    /// Index of the grid direction equal to `u` (within 1e-9 in angle units).
    pub fn index_of(&self, u: [f64; 2]) -> Option<usize> {
        let t = self.position(u[1].atan2(u[0]));
        let k = t.round();
        ((t - k).abs() < SNAP_TOL).then(|| k as usize % self.directions)
    }

    /// Index of the α node nearest to `alpha`.
    pub fn snap_alpha(&self, alpha: f64) -> usize {
        (alpha * self.alpha_steps as f64).round() as usize
    }
}

/// The direction set of a fuzzy set's space with its normalized Haar weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectionGrid {
    /// `{+1, -1}` with weights `1/2, 1/2`.
    Line,
    Circle(PlaneGrid),
}

impl DirectionGrid {
    pub fn dim(&self) -> usize {
        match self {
            DirectionGrid::Line => 1,
            DirectionGrid::Circle(_) => 2,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            DirectionGrid::Line => 2,
            DirectionGrid::Circle(g) => g.directions,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weight(&self, _k: usize) -> f64 {
        1.0 / self.len() as f64
    }

    pub fn direction(&self, k: usize) -> Vec<f64> {
        match self {
            DirectionGrid::Line => vec![if k == 0 { 1.0 } else { -1.0 }],
            DirectionGrid::Circle(g) => g.direction(k).to_vec(),
        }
    }

    pub fn antipode(&self, k: usize) -> usize {
        match self {
            DirectionGrid::Line => 1 - k,
            DirectionGrid::Circle(g) => g.antipode(k),
        }
    }
}

/// Support function values `s(u_k, α_j)` of a planar fuzzy set.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportGrid {
    grid: PlaneGrid,
    values: Vec<f64>,
}

impl SupportGrid {
    pub fn grid(&self) -> PlaneGrid {
        self.grid
    }

    #[inline]
    pub fn value(&self, k: usize, j: usize) -> f64 {
        self.values[k * self.grid.alpha_nodes() + j]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn from_fn(grid: PlaneGrid, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let m = grid.alpha_nodes();
        let mut values = Vec::with_capacity(grid.directions * m);
        for k in 0..grid.directions {
            for j in 0..m {
                values.push(f(k, j));
            }
        }
        Self { grid, values }
    }

    fn validate(self) -> Result<Self> {
        let scale = self.values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        let tol = 1e-12 * scale;
        if self.values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidLevels("support values must be finite".into()));
        }
        let m = self.grid.alpha_nodes();
        for k in 0..self.grid.directions {
            for j in 0..m {
                if j + 1 < m && self.value(k, j + 1) > self.value(k, j) + tol {
                    return Err(Error::InvalidLevels(format!(
                        "support is increasing in alpha at direction {k}, node {j}"
                    )));
                }
                if self.value(k, j) + self.value(self.grid.antipode(k), j) < -tol {
                    return Err(Error::InvalidLevels(format!(
                        "negative spread at direction {k}, node {j}"
                    )));
                }
            }
        }
        Ok(self)
    }

    /// Support value at angle `angle` and α node `j`, linearly interpolated
    /// in angle between grid directions.
    fn at_angle(&self, angle: f64, j: usize) -> f64 {
        let n = self.grid.directions;
        let t = self.grid.position(angle);
        let k = t.round();
        if (t - k).abs() < SNAP_TOL {
            return self.value(k as usize % n, j);
        }
        let k0 = t.floor();
        let w = t - k0;
        let k0 = k0 as usize % n;
        let k1 = (k0 + 1) % n;
        (1.0 - w) * self.value(k0, j) + w * self.value(k1, j)
    }

    /// Vertices of the polygon `{x : ⟨u_k, x⟩ ≤ s(u_k, α_j) for all k}`.
    fn polygon(&self, j: usize) -> Vec<[f64; 2]> {
        let n = self.grid.directions;
        let mut out: Vec<[f64; 2]> = Vec::with_capacity(n);
        for k in 0..n {
            let k1 = (k + 1) % n;
            let (u, v) = (self.grid.direction(k), self.grid.direction(k1));
            let (s, t) = (self.value(k, j), self.value(k1, j));
            let det = u[0] * v[1] - u[1] * v[0];
            let p = [(s * v[1] - t * u[1]) / det, (u[0] * t - v[0] * s) / det];
            let scale = 1.0 + p[0].abs().max(p[1].abs());
            if out
                .last()
                .is_none_or(|q| (q[0] - p[0]).abs().max((q[1] - p[1]).abs()) > 1e-12 * scale)
            {
                out.push(p);
            }
        }
        while out.len() > 1 {
            let (p, q) = (out[0], out[out.len() - 1]);
            let scale = 1.0 + p[0].abs().max(p[1].abs());
            if (q[0] - p[0]).abs().max((q[1] - p[1]).abs()) > 1e-12 * scale {
                break;
            }
            out.pop();
        }
        out
    }
}

/// An α-level: an interval on the line, a convex polygon in the plane.
#[derive(Debug, Clone, PartialEq)]
pub enum Level {
    Interval(Interval),
    Polygon(Vec<[f64; 2]>),
}

/// A linear map of `ℝ^p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinearMap {
    Scalar(f64),
    /// Row-major 2×2 matrix.
    Matrix2([[f64; 2]; 2]),
}

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        if dim == 1 {
            LinearMap::Scalar(1.0)
        } else {
            LinearMap::Matrix2([[1.0, 0.0], [0.0, 1.0]])
        }
    }

    /// Counter-clockwise rotation of the plane.
    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        LinearMap::Matrix2([[c, -s], [s, c]])
    }

    /// Rotation by `steps` grid steps of a grid with `directions` directions.
    /// Quarter turns are exact.
    pub fn rotation_steps(steps: usize, directions: usize) -> Self {
        let g = PlaneGrid {
            directions,
            alpha_steps: 1,
        };
        let [c, s] = g.direction(steps);
        LinearMap::Matrix2([[c, -s], [s, c]])
    }

    pub fn dim(&self) -> usize {
        match self {
            LinearMap::Scalar(_) => 1,
            LinearMap::Matrix2(_) => 2,
        }
    }

    pub fn det(&self) -> f64 {
        match self {
            LinearMap::Scalar(m) => *m,
            LinearMap::Matrix2(m) => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        }
    }

    /// `MᵀM = I` entrywise within `tol`.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        match self {
            LinearMap::Scalar(m) => (m.abs() - 1.0).abs() <= tol,
            LinearMap::Matrix2(m) => {
                let g00 = m[0][0] * m[0][0] + m[1][0] * m[1][0];
                let g11 = m[0][1] * m[0][1] + m[1][1] * m[1][1];
                let g01 = m[0][0] * m[0][1] + m[1][0] * m[1][1];
                (g00 - 1.0).abs() <= tol && (g11 - 1.0).abs() <= tol && g01.abs() <= tol
            }
        }
    }

    /// Image of a point.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        match self {
            LinearMap::Scalar(m) => vec![m * x[0]],
            LinearMap::Matrix2(m) => vec![
                m[0][0] * x[0] + m[0][1] * x[1],
                m[1][0] * x[0] + m[1][1] * x[1],
            ],
        }
    }

    fn transpose_apply(m: &[[f64; 2]; 2], u: [f64; 2]) -> [f64; 2] {
        [
            m[0][0] * u[0] + m[1][0] * u[1],
            m[0][1] * u[0] + m[1][1] * u[1],
        ]
    }
}

/// A fuzzy set of `ℝ^p`, `p ∈ {1, 2}`, with non-empty compact convex levels.
#[derive(Debug, Clone, PartialEq)]
pub enum FuzzySet {
    Line(Levels),
    Plane(SupportGrid),
}

impl FuzzySet {
    pub fn trapezoid(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        make_trapezoid(a, b, c, d)
    }

    /// The indicator of the interval `[lo, hi]`.
    pub fn crisp_interval(lo: f64, hi: f64) -> Result<Self> {
        make_trapezoid(lo, lo, hi, hi)
    }

    /// The indicator of `{x}` on the line.
    pub fn crisp_point(x: f64) -> Self {
        Trapezoid {
            a: x,
            b: x,
            c: x,
            d: x,
        }
        .to_fuzzy()
    }

    /// A fuzzy number with arbitrary piecewise-linear level endpoints.
    pub fn from_levels(lo: &PiecewiseLinear, hi: &PiecewiseLinear) -> Result<Self> {
        let knots = pwl::merge_knots(lo.knots(), hi.knots());
        let (l, h) = (lo.resample(&knots), hi.resample(&knots));
        Levels::validate(knots, l, h).map(FuzzySet::Line)
    }

    /// The indicator of `{x}` in the plane.
    pub fn crisp_point_2d(grid: PlaneGrid, x: [f64; 2]) -> Self {
        FuzzySet::Plane(SupportGrid::from_fn(grid, |k, _| {
            let u = grid.direction(k);
            u[0] * x[0] + u[1] * x[1]
        }))
    }

    /// A planar fuzzy set from its support function, sampled on `grid`.
    pub fn from_support_fn(grid: PlaneGrid, f: impl Fn([f64; 2], f64) -> f64) -> Result<Self> {
        SupportGrid::from_fn(grid, |k, j| f(grid.direction(k), grid.alpha(j)))
            .validate()
            .map(FuzzySet::Plane)
    }

    /// Concentric disks: radius `support_radius` at α = 0 shrinking linearly
    /// to `core_radius` at α = 1.
    pub fn disk(
        grid: PlaneGrid,
        center: [f64; 2],
        support_radius: f64,
        core_radius: f64,
    ) -> Result<Self> {
        if !(0.0 <= core_radius && core_radius <= support_radius) {
            return Err(Error::InvalidLevels(format!(
                "disk radii must satisfy 0 <= core <= support, got {core_radius}, {support_radius}"
            )));
        }
        Self::from_support_fn(grid, |u, a| {
            u[0] * center[0] + u[1] * center[1] + (1.0 - a) * support_radius + a * core_radius
        })
    }

    /// Levels `(1-α)·P₀ + α·P₁` for convex hulls `P₀ ⊇ P₁` of the given vertices.
    pub fn polygon(
        grid: PlaneGrid,
        support_vertices: &[[f64; 2]],
        core_vertices: &[[f64; 2]],
    ) -> Result<Self> {
        if support_vertices.is_empty() || core_vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        let h = |vs: &[[f64; 2]], u: [f64; 2]| {
            vs.iter()
                .map(|v| u[0] * v[0] + u[1] * v[1])
                .fold(f64::NEG_INFINITY, f64::max)
        };
        Self::from_support_fn(grid, |u, a| {
            (1.0 - a) * h(support_vertices, u) + a * h(core_vertices, u)
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            FuzzySet::Line(_) => 1,
            FuzzySet::Plane(_) => 2,
        }
    }

    pub fn direction_grid(&self) -> DirectionGrid {
        match self {
            FuzzySet::Line(_) => DirectionGrid::Line,
            FuzzySet::Plane(s) => DirectionGrid::Circle(s.grid),
        }
    }

    pub fn as_levels(&self) -> Option<&Levels> {
        match self {
            FuzzySet::Line(l) => Some(l),
            FuzzySet::Plane(_) => None,
        }
    }

    pub fn as_support_grid(&self) -> Option<&SupportGrid> {
        match self {
            FuzzySet::Line(_) => None,
            FuzzySet::Plane(s) => Some(s),
        }
    }

    /// `I_{0}` in the same space (and on the same grid) as `self`.
    pub fn zero_like(&self) -> Self {
        match self {
            FuzzySet::Line(_) => FuzzySet::crisp_point(0.0),
            FuzzySet::Plane(s) => FuzzySet::crisp_point_2d(s.grid, [0.0, 0.0]),
        }
    }

    fn check_alpha(alpha: f64) -> Result<()> {
        if (0.0..=1.0).contains(&alpha) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                what: "alpha",
                value: alpha,
                range: "[0, 1]",
            })
        }
    }

    /// The α-level. Planar sets snap `alpha` to the nearest grid node.
    pub fn level(&self, alpha: f64) -> Result<Level> {
        Self::check_alpha(alpha)?;
        Ok(match self {
            FuzzySet::Line(l) => Level::Interval(l.level(alpha)),
            FuzzySet::Plane(s) => Level::Polygon(s.polygon(s.grid.snap_alpha(alpha))),
        })
    }

    fn unit(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: u.len(),
            });
        }
        let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm });
        }
        Ok(())
    }

    /// Support function `s(u, α) = sup { ⟨u, x⟩ : x ∈ A_α }`.
    pub fn support(&self, u: &[f64], alpha: f64) -> Result<f64> {
        self.unit(u)?;
        Self::check_alpha(alpha)?;
        Ok(match self {
            FuzzySet::Line(l) => l.support_sign(u[0] > 0.0, alpha),
            FuzzySet::Plane(s) => s.at_angle(u[1].atan2(u[0]), s.grid.snap_alpha(alpha)),
        })
    }

    /// Support value at direction index `k` of [`Self::direction_grid`].
    pub fn support_at(&self, k: usize, alpha: f64) -> f64 {
        match self {
            FuzzySet::Line(l) => l.support_sign(k == 0, alpha),
            FuzzySet::Plane(s) => s.value(k, s.grid.snap_alpha(alpha)),
        }
    }

    fn pair(&self, u: &[f64], alpha: f64) -> Result<(f64, f64)> {
        self.unit(u)?;
        Self::check_alpha(alpha)?;
        match self {
            FuzzySet::Line(l) => Ok((
                l.support_sign(u[0] > 0.0, alpha),
                l.support_sign(u[0] <= 0.0, alpha),
            )),
            FuzzySet::Plane(s) => {
                let k = s.grid.index_of([u[0], u[1]]).ok_or(Error::OffGrid)?;
                let j = s.grid.snap_alpha(alpha);
                Ok((s.value(k, j), s.value(s.grid.antipode(k), j)))
            }
        }
    }

    /// `(s(u, α) - s(-u, α)) / 2`.
    pub fn mid(&self, u: &[f64], alpha: f64) -> Result<f64> {
        self.pair(u, alpha).map(|(p, n)| 0.5 * (p - n))
    }

    /// `(s(u, α) + s(-u, α)) / 2`, never negative.
    pub fn spr(&self, u: &[f64], alpha: f64) -> Result<f64> {
        self.pair(u, alpha).map(|(p, n)| 0.5 * (p + n))
    }

    /// Checks that `other` lives in the same space (and grid) as `self`.
    pub fn compatible(&self, other: &FuzzySet) -> Result<()> {
        match (self, other) {
            (FuzzySet::Line(_), FuzzySet::Line(_)) => Ok(()),
            (FuzzySet::Plane(a), FuzzySet::Plane(b)) if a.grid == b.grid => Ok(()),
            (FuzzySet::Plane(_), FuzzySet::Plane(_)) => Err(Error::GridMismatch),
            _ => Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            }),
        }
    }

    /// Levelwise Minkowski sum.
    pub fn add(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.compatible(other)?;
        Ok(match (self, other) {
            (FuzzySet::Line(a), FuzzySet::Line(b)) => FuzzySet::Line(a.zip_with(b, |x, y| x + y)),
            (FuzzySet::Plane(a), FuzzySet::Plane(b)) => FuzzySet::Plane(SupportGrid {
                grid: a.grid,
                values: a.values.iter().zip(&b.values).map(|(x, y)| x + y).collect(),
            }),
            _ => unreachable!(),
        })
    }

    /// Levelwise product by a scalar; negative scalars reflect.
    pub fn scale(&self, gamma: f64) -> FuzzySet {
        if gamma == 0.0 {
            return self.zero_like();
        }
        match self {
            FuzzySet::Line(l) => FuzzySet::Line(l.scaled(gamma)),
            FuzzySet::Plane(s) => {
                let g = s.grid;
                let m = g.alpha_nodes();
                if gamma > 0.0 {
                    FuzzySet::Plane(SupportGrid {
                        grid: g,
                        values: s.values.iter().map(|v| gamma * v).collect(),
                    })
                } else {
                    let c = -gamma;
                    FuzzySet::Plane(SupportGrid {
                        grid: g,
                        values: (0..g.directions)
                            .flat_map(|k| {
                                let a = g.antipode(k);
                                (0..m).map(move |j| (a, j))
                            })
                            .map(|(a, j)| c * s.value(a, j))
                            .collect(),
                    })
                }
            }
        }
    }

    /// `(1-λ)·self + λ·other`.
    pub fn convex_combo(&self, other: &FuzzySet, lambda: f64) -> Result<FuzzySet> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::OutOfRange {
                what: "lambda",
                value: lambda,
                range: "[0, 1]",
            });
        }
        self.compatible(other)?;
        if lambda == 0.0 {
            return Ok(self.clone());
        }
        if lambda == 1.0 {
            return Ok(other.clone());
        }
        let mu = 1.0 - lambda;
        Ok(match (self, other) {
            (FuzzySet::Line(a), FuzzySet::Line(b)) => {
                FuzzySet::Line(a.zip_with(b, |x, y| mu * x + lambda * y))
            }
            (FuzzySet::Plane(a), FuzzySet::Plane(b)) => FuzzySet::Plane(SupportGrid {
                grid: a.grid,
                values: a
                    .values
                    .iter()
                    .zip(&b.values)
                    .map(|(x, y)| mu * x + lambda * y)
                    .collect(),
            }),
            _ => unreachable!(),
        })
    }

    /// Image `M·A` under a regular linear map.
    ///
    /// In the plane `s_{M·A}(u, α) = ‖Mᵀu‖ · s_A(Mᵀu / ‖Mᵀu‖, α)`; off-grid
    /// directions are interpolated linearly in angle, and orthogonal maps use
    /// `‖Mᵀu‖ = 1`, so rotations by grid multiples permute values exactly.
    pub fn matrix_transform(&self, map: &LinearMap) -> Result<FuzzySet> {
        if map.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: map.dim(),
            });
        }
        let det = map.det();
        if !(det.abs() > SINGULAR_TOL) {
            return Err(Error::SingularMatrix { det });
        }
        match (self, map) {
            (FuzzySet::Line(_), LinearMap::Scalar(m)) => Ok(self.scale(*m)),
            (FuzzySet::Plane(s), LinearMap::Matrix2(m)) => {
                let g = s.grid;
                let orthogonal = map.is_orthogonal(1e-12);
                let m_alpha = g.alpha_nodes();
                let mut values = Vec::with_capacity(s.values.len());
                for k in 0..g.directions {
                    let v = LinearMap::transpose_apply(m, g.direction(k));
                    let norm = if orthogonal {
                        1.0
                    } else {
                        (v[0] * v[0] + v[1] * v[1]).sqrt()
                    };
                    let angle = v[1].atan2(v[0]);
                    for j in 0..m_alpha {
                        values.push(norm * s.at_angle(angle, j));
                    }
                }
                Ok(FuzzySet::Plane(SupportGrid { grid: g, values }))
            }
            _ => unreachable!(),
        }
    }

    /// α values where the level endpoints change slope (line only).
    pub fn knots(&self) -> Vec<f64> {
        match self {
            FuzzySet::Line(l) => l.knots.clone(),
            FuzzySet::Plane(s) => (0..s.grid.alpha_nodes()).map(|j| s.grid.alpha(j)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval(f: &FuzzySet, alpha: f64) -> Interval {
        match f.level(alpha).unwrap() {
            Level::Interval(i) => i,
            Level::Polygon(_) => panic!("expected an interval"),
        }
    }

    #[test]
    fn trapezoid_levels() {
        let t = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        assert_eq!(interval(&t, 0.0), Interval { lo: 0.0, hi: 4.0 });
        assert_eq!(interval(&t, 1.0), Interval { lo: 1.0, hi: 2.0 });
        assert_eq!(interval(&t, 0.5), Interval { lo: 0.5, hi: 3.0 });
        let crisp = make_trapezoid(3.0, 3.0, 4.0, 4.0).unwrap();
        for a in [0.0, 0.3, 1.0] {
            assert_eq!(interval(&crisp, a), Interval { lo: 3.0, hi: 4.0 });
        }
        let zero = make_trapezoid(0.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(interval(&zero, 0.7), Interval::point(0.0));
        let i12 = FuzzySet::crisp_interval(1.0, 2.0).unwrap();
        assert_eq!(interval(&i12, 0.5), Interval { lo: 1.0, hi: 2.0 });
    }

    #[test]
    fn unsorted_knots_are_rejected() {
        assert!(matches!(
            make_trapezoid(3.0, 2.0, 1.0, 0.0),
            Err(Error::OrderViolation { .. })
        ));
    }

    #[test]
    fn alpha_out_of_range() {
        let t = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        assert!(matches!(t.level(1.5), Err(Error::OutOfRange { .. })));
        assert!(matches!(
            t.support(&[1.0], -0.1),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn support_values() {
        let i34 = FuzzySet::crisp_interval(3.0, 4.0).unwrap();
        assert_eq!(i34.support(&[1.0], 0.0).unwrap(), 4.0);
        assert_eq!(i34.support(&[-1.0], 0.0).unwrap(), -3.0);
        assert!(matches!(
            i34.support(&[0.5], 0.0),
            Err(Error::NotUnit { .. })
        ));
        let g = PlaneGrid::new(360, 10).unwrap();
        let p = FuzzySet::crisp_point_2d(g, [2.0, 3.0]);
        assert_eq!(p.support(&[0.0, 1.0], 0.4).unwrap(), 3.0);
    }

    #[test]
    fn addition() {
        let a = FuzzySet::crisp_interval(1.0, 2.0).unwrap();
        let b = FuzzySet::crisp_interval(3.0, 4.0).unwrap();
        assert_eq!(
            a.add(&b).unwrap(),
            FuzzySet::crisp_interval(4.0, 6.0).unwrap()
        );
        let t = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        assert_eq!(t.add(&FuzzySet::crisp_point(0.0)).unwrap(), t);
        let s = make_trapezoid(0.0, 1.0, 1.0, 2.0)
            .unwrap()
            .add(&make_trapezoid(1.0, 2.0, 2.0, 3.0).unwrap())
            .unwrap();
        assert_eq!(s, make_trapezoid(1.0, 3.0, 3.0, 5.0).unwrap());
        let g = PlaneGrid::new(8, 2).unwrap();
        assert!(matches!(
            a.add(&FuzzySet::crisp_point_2d(g, [0.0, 0.0])),
            Err(Error::DimensionMismatch { .. })
        ));
        let h = PlaneGrid::new(16, 2).unwrap();
        assert_eq!(
            FuzzySet::crisp_point_2d(g, [0.0, 0.0]).add(&FuzzySet::crisp_point_2d(h, [0.0, 0.0])),
            Err(Error::GridMismatch)
        );
    }

    #[test]
    fn scaling() {
        let a = FuzzySet::crisp_interval(1.0, 2.0).unwrap();
        assert_eq!(a.scale(5.0), FuzzySet::crisp_interval(5.0, 10.0).unwrap());
        assert_eq!(a.scale(-1.0), FuzzySet::crisp_interval(-2.0, -1.0).unwrap());
        let t = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        assert_eq!(t.scale(0.0), FuzzySet::crisp_point(0.0));
        assert_eq!(
            t.scale(-2.0),
            make_trapezoid(-8.0, -4.0, -2.0, 0.0).unwrap()
        );
    }

    #[test]
    fn convex_combinations() {
        let a = FuzzySet::crisp_interval(0.0, 1.0).unwrap();
        let b = FuzzySet::crisp_interval(2.0, 3.0).unwrap();
        assert_eq!(a.convex_combo(&b, 0.0).unwrap(), a);
        assert_eq!(a.convex_combo(&b, 1.0).unwrap(), b);
        assert_eq!(
            a.convex_combo(&b, 0.5).unwrap(),
            FuzzySet::crisp_interval(1.0, 2.0).unwrap()
        );
        assert!(matches!(
            a.convex_combo(&b, 1.5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn matrix_transforms() {
        let a = FuzzySet::crisp_interval(1.0, 2.0).unwrap();
        assert_eq!(
            a.matrix_transform(&LinearMap::Scalar(5.0)).unwrap(),
            FuzzySet::crisp_interval(5.0, 10.0).unwrap()
        );
        assert!(matches!(
            a.matrix_transform(&LinearMap::Scalar(0.0)),
            Err(Error::SingularMatrix { .. })
        ));
        let g = PlaneGrid::new(360, 4).unwrap();
        let d = FuzzySet::disk(g, [1.0, -2.0], 2.0, 0.5).unwrap();
        assert_eq!(d.matrix_transform(&LinearMap::identity(2)).unwrap(), d);
        let p = FuzzySet::crisp_point_2d(g, [1.0, 0.0]);
        let rotated = p
            .matrix_transform(&LinearMap::rotation_steps(90, 360))
            .unwrap();
        let target = FuzzySet::crisp_point_2d(g, [0.0, 1.0]);
        let (r, t) = (
            rotated.as_support_grid().unwrap(),
            target.as_support_grid().unwrap(),
        );
        let gap = r
            .values()
            .iter()
            .zip(t.values())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(gap < 1e-15, "{gap}");
        assert!(matches!(
            p.matrix_transform(&LinearMap::Matrix2([[1.0, 2.0], [2.0, 4.0]])),
            Err(Error::SingularMatrix { .. })
        ));
    }

    #[test]
    fn grid_rotation_permutes_support_values() {
        let g = PlaneGrid::new(36, 3).unwrap();
        let a = FuzzySet::polygon(
            g,
            &[[0.0, 0.0], [3.0, 0.5], [1.0, 2.0]],
            &[[1.0, 0.7], [1.2, 0.8]],
        )
        .unwrap();
        let r = a
            .matrix_transform(&LinearMap::rotation_steps(5, 36))
            .unwrap();
        let (sa, sr) = (a.as_support_grid().unwrap(), r.as_support_grid().unwrap());
        for k in 0..36 {
            for j in 0..4 {
                assert_eq!(sr.value((k + 5) % 36, j), sa.value(k, j));
            }
        }
    }

    #[test]
    fn general_matrix_on_crisp_point() {
        let g = PlaneGrid::new(720, 1).unwrap();
        let m = LinearMap::Matrix2([[2.0, 1.0], [0.5, 3.0]]);
        let p = FuzzySet::crisp_point_2d(g, [1.0, -1.0]);
        let img = m.apply(&[1.0, -1.0]);
        let expected = FuzzySet::crisp_point_2d(g, [img[0], img[1]]);
        let got = p.matrix_transform(&m).unwrap();
        let (a, b) = (
            got.as_support_grid().unwrap(),
            expected.as_support_grid().unwrap(),
        );
        let err = a
            .values()
            .iter()
            .zip(b.values())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-3, "interpolation error {err}");
    }

    #[test]
    fn mid_and_spread() {
        let a = FuzzySet::crisp_interval(1.0, 2.0).unwrap();
        assert_eq!(a.mid(&[1.0], 0.0).unwrap(), 1.5);
        assert_eq!(a.spr(&[1.0], 0.0).unwrap(), 0.5);
        let b = FuzzySet::crisp_interval(0.0, 2.0).unwrap();
        assert_eq!(b.mid(&[1.0], 0.3).unwrap(), 1.0);
        assert_eq!(b.spr(&[1.0], 0.3).unwrap(), 1.0);
        let g = PlaneGrid::new(8, 2).unwrap();
        let p = FuzzySet::crisp_point_2d(g, [0.5, -1.5]);
        assert_eq!(p.spr(&[0.0, 1.0], 0.0).unwrap(), 0.0);
        let off = [0.3_f64.cos(), 0.3_f64.sin()];
        assert_eq!(p.mid(&off, 0.0), Err(Error::OffGrid));
        assert!(PlaneGrid::new(7, 2).is_err());
    }

    #[test]
    fn polygon_levels_of_a_disk() {
        let g = PlaneGrid::new(64, 2).unwrap();
        let d = FuzzySet::disk(g, [1.0, 1.0], 1.0, 0.0).unwrap();
        let Level::Polygon(vs) = d.level(0.0).unwrap() else {
            panic!()
        };
        assert_eq!(vs.len(), 64);
        let circumradius = 1.0 / (std::f64::consts::PI / 64.0).cos();
        for v in vs {
            let r = ((v[0] - 1.0).powi(2) + (v[1] - 1.0).powi(2)).sqrt();
            assert!((r - circumradius).abs() < 1e-12);
        }
        let Level::Polygon(core) = d.level(1.0).unwrap() else {
            panic!()
        };
        assert_eq!(core.len(), 1);
    }

    #[test]
    fn invalid_support_functions_are_rejected() {
        let g = PlaneGrid::new(8, 2).unwrap();
        assert!(FuzzySet::from_support_fn(g, |_, a| a).is_err());
        assert!(FuzzySet::from_support_fn(g, |_, _| -1.0).is_err());
        assert!(FuzzySet::disk(g, [0.0, 0.0], 0.5, 1.0).is_err());
    }

    #[test]
    fn general_levels_validate_nesting() {
        let lo = PiecewiseLinear::new(vec![0.0, 0.5, 1.0], vec![0.0, 1.0, 1.5]).unwrap();
        let hi = PiecewiseLinear::linear(3.0, 2.0);
        let f = FuzzySet::from_levels(&lo, &hi).unwrap();
        assert_eq!(interval(&f, 0.5), Interval { lo: 1.0, hi: 2.5 });
        let bad = PiecewiseLinear::linear(3.0, 0.0);
        assert!(FuzzySet::from_levels(&lo, &bad).is_err());
        assert!(PiecewiseLinear::new(vec![0.0, 0.5], vec![1.0, 1.0]).is_err());
    }
}
