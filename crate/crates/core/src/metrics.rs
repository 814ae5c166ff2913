//! Distances between fuzzy sets.
//!
//! Between fuzzy numbers on the line, all integrals are evaluated in closed
//! form on the merged α-knots, so values are exact up to rounding. Planar
//! sets use the composite trapezoidal rule in α and the uniform direction
//! weights of their grid.

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySet, Levels, SupportGrid};
use crate::pwl;
use serde::Serialize;

/// One of the three metric families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Metric {
    /// `d_r`: the `L^r` norm over α of the levelwise Hausdorff distance; `r = ∞` allowed.
    Hausdorff { r: f64 },
    /// `ρ_r`: the `L^r` distance between support functions.
    Support { r: f64 },
    /// `d_{r,θ}`: mid and spread components weighted `1 : θ`.
    MidSpread { r: f64, theta: f64 },
}

fn check_order(r: f64, allow_infinite: bool) -> Result<()> {
    let ok = r >= 1.0 && (r.is_finite() || (allow_infinite && r == f64::INFINITY));
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "r",
            value: r,
            range: if allow_infinite {
                "[1, inf]"
            } else {
                "[1, inf)"
            },
        })
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta >= 0.0 && theta.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "theta",
            value: theta,
            range: "[0, inf)",
        })
    }
}

impl Metric {
    pub fn hausdorff(r: f64) -> Result<Self> {
        check_order(r, true)?;
        Ok(Metric::Hausdorff { r })
    }

    pub fn support(r: f64) -> Result<Self> {
        check_order(r, false)?;
        Ok(Metric::Support { r })
    }

    pub fn mid_spread(r: f64, theta: f64) -> Result<Self> {
        check_order(r, false)?;
        check_theta(theta)?;
        Ok(Metric::MidSpread { r, theta })
    }

    pub fn order(&self) -> f64 {
        match *self {
            Metric::Hausdorff { r } | Metric::Support { r } | Metric::MidSpread { r, .. } => r,
        }
    }

    /// `d_{r,0}` ignores spreads and only separates by mid.
    pub fn is_pseudometric(&self) -> bool {
        matches!(self, Metric::MidSpread { theta, .. } if *theta == 0.0)
    }

    pub fn label(&self) -> String {
        match *self {
            Metric::Hausdorff { r } => format!("d_{r}"),
            Metric::Support { r } => format!("rho_{r}"),
            Metric::MidSpread { r, theta } => format!("d_{{{r},{theta}}}"),
        }
    }

    pub fn distance(&self, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
        match *self {
            Metric::Hausdorff { r } => metric_d_r(a, b, r),
            Metric::Support { r } => metric_rho_r(a, b, r),
            Metric::MidSpread { r, theta } => metric_d_r_theta(a, b, r, theta),
        }
    }

    /// `distance^r`, computed without the outer root. `d_∞` returns the distance itself.
    pub fn powered(&self, a: &FuzzySet, b: &FuzzySet) -> Result<f64> {
        match *self {
            Metric::Hausdorff { r } if r.is_infinite() => metric_d_r(a, b, r),
            Metric::Hausdorff { r } => hausdorff_pow(a, b, r),
            Metric::Support { r } => rho_pow(a, b, r),
            Metric::MidSpread { r, theta } => mid_spread_pow(a, b, r, theta),
        }
    }
}

/// Hausdorff distance between the α-levels of two fuzzy sets.
///
/// Planar levels are compared through their support functions on the grid,
/// `sup_u |s_A(u, α) - s_B(u, α)|`, with `alpha` snapped to the grid.
pub fn hausdorff(a: &FuzzySet, b: &FuzzySet, alpha: f64) -> Result<f64> {
    a.compatible(b)?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::OutOfRange {
            what: "alpha",
            value: alpha,
            range: "[0, 1]",
        });
    }
    Ok(match (a, b) {
        (FuzzySet::Line(x), FuzzySet::Line(y)) => x.level(alpha).hausdorff(&y.level(alpha)),
        (FuzzySet::Plane(x), FuzzySet::Plane(y)) => {
            let j = x.grid().snap_alpha(alpha);
            (0..x.grid().directions())
                .map(|k| (x.value(k, j) - y.value(k, j)).abs())
                .fold(0.0, f64::max)
        }
        _ => unreachable!(),
    })
}

/// Endpoint differences `(Δlo, Δhi)` on merged knots.
fn endpoint_gaps(x: &Levels, y: &Levels) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let knots = pwl::merge_knots(x.knots(), y.knots());
    let (xl, xh) = x.on_knots(&knots);
    let (yl, yh) = y.on_knots(&knots);
    let dlo = xl.iter().zip(&yl).map(|(p, q)| p - q).collect();
    let dhi = xh.iter().zip(&yh).map(|(p, q)| p - q).collect();
    (knots, dlo, dhi)
}

/// Fixed-order sum over the grid of `w_u τ_α |f(k, j)|^r`.
fn grid_sum(x: &SupportGrid, f: impl Fn(usize, usize) -> f64) -> f64 {
    let g = x.grid();
    let tau = g.alpha_weights();
    let w = 1.0 / g.directions() as f64;
    let mut total = 0.0;
    for k in 0..g.directions() {
        let mut row = 0.0;
        for (j, t) in tau.iter().enumerate() {
            row += t * f(k, j);
        }
        total += w * row;
    }
    total
}

fn hausdorff_pow(a: &FuzzySet, b: &FuzzySet, r: f64) -> Result<f64> {
    a.compatible(b)?;
    Ok(match (a, b) {
        (FuzzySet::Line(x), FuzzySet::Line(y)) => {
            let (knots, dlo, dhi) = endpoint_gaps(x, y);
            pwl::integrate_max_abs_pow(&knots, &dlo, &dhi, r)
        }
        (FuzzySet::Plane(x), FuzzySet::Plane(y)) => {
            let g = x.grid();
            g.alpha_weights()
                .iter()
                .enumerate()
                .map(|(j, t)| {
                    let h = (0..g.directions())
                        .map(|k| (x.value(k, j) - y.value(k, j)).abs())
                        .fold(0.0, f64::max);
                    t * h.powf(r)
                })
                .sum()
        }
        _ => unreachable!(),
    })
}

/// `d_r(A, B)` for `r ∈ [1, ∞]`.
pub fn metric_d_r(a: &FuzzySet, b: &FuzzySet, r: f64) -> Result<f64> {
    check_order(r, true)?;
    a.compatible(b)?;
    if r.is_infinite() {
        return Ok(match (a, b) {
            (FuzzySet::Line(x), FuzzySet::Line(y)) => {
                let (_, dlo, dhi) = endpoint_gaps(x, y);
                pwl::sup_max_abs(&dlo, &dhi)
            }
            (FuzzySet::Plane(x), FuzzySet::Plane(y)) => x
                .values()
                .iter()
                .zip(y.values())
                .map(|(p, q)| (p - q).abs())
                .fold(0.0, f64::max),
            _ => unreachable!(),
        });
    }
    hausdorff_pow(a, b, r).map(|v| root(v, r))
}

fn rho_pow(a: &FuzzySet, b: &FuzzySet, r: f64) -> Result<f64> {
    a.compatible(b)?;
    Ok(match (a, b) {
        (FuzzySet::Line(x), FuzzySet::Line(y)) => {
            let (knots, dlo, dhi) = endpoint_gaps(x, y);
            0.5 * pwl::integrate_abs_pow(&knots, &dhi, r)
                + 0.5 * pwl::integrate_abs_pow(&knots, &dlo, r)
        }
        (FuzzySet::Plane(x), FuzzySet::Plane(y)) => {
            grid_sum(x, |k, j| (x.value(k, j) - y.value(k, j)).abs().powf(r))
        }
        _ => unreachable!(),
    })
}

/// `ρ_r(A, B)` for `r ∈ [1, ∞)`.
pub fn metric_rho_r(a: &FuzzySet, b: &FuzzySet, r: f64) -> Result<f64> {
    check_order(r, false)?;
    rho_pow(a, b, r).map(|v| root(v, r))
}

fn mid_spread_pow(a: &FuzzySet, b: &FuzzySet, r: f64, theta: f64) -> Result<f64> {
    a.compatible(b)?;
    Ok(match (a, b) {
        (FuzzySet::Line(x), FuzzySet::Line(y)) => {
            // mid(±1) = ±(hi + lo)/2 and spr(±1) = (hi - lo)/2, so both
            // directions contribute the same integrand.
            let (knots, dlo, dhi) = endpoint_gaps(x, y);
            let dmid: Vec<f64> = dhi.iter().zip(&dlo).map(|(h, l)| 0.5 * (h + l)).collect();
            let dspr: Vec<f64> = dhi.iter().zip(&dlo).map(|(h, l)| 0.5 * (h - l)).collect();
            let mid = pwl::integrate_abs_pow(&knots, &dmid, r);
            if theta == 0.0 {
                mid
            } else {
                mid + theta * pwl::integrate_abs_pow(&knots, &dspr, r)
            }
        }
        (FuzzySet::Plane(x), FuzzySet::Plane(y)) => {
            let g = x.grid();
            grid_sum(x, |k, j| {
                let n = g.antipode(k);
                let (xp, xn) = (x.value(k, j), x.value(n, j));
                let (yp, yn) = (y.value(k, j), y.value(n, j));
                let dmid = 0.5 * ((xp - xn) - (yp - yn));
                let dspr = 0.5 * ((xp + xn) - (yp + yn));
                dmid.abs().powf(r) + theta * dspr.abs().powf(r)
            })
        }
        _ => unreachable!(),
    })
}

/// `d_{r,θ}(A, B)` for `r ∈ [1, ∞)`, `θ ≥ 0` (a pseudometric at `θ = 0`).
pub fn metric_d_r_theta(a: &FuzzySet, b: &FuzzySet, r: f64, theta: f64) -> Result<f64> {
    check_order(r, false)?;
    check_theta(theta)?;
    mid_spread_pow(a, b, r, theta).map(|v| root(v, r))
}

pub(crate) fn root(v: f64, r: f64) -> f64 {
    if r == 1.0 {
        v
    } else if r == 2.0 {
        v.sqrt()
    } else {
        v.powf(1.0 / r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::{make_trapezoid, PlaneGrid};

    fn iv(lo: f64, hi: f64) -> FuzzySet {
        FuzzySet::crisp_interval(lo, hi).unwrap()
    }

    #[test]
    fn hausdorff_between_levels() {
        assert_eq!(hausdorff(&iv(1.0, 2.0), &iv(3.0, 4.0), 0.0).unwrap(), 2.0);
        let t = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        assert_eq!(hausdorff(&t, &t, 0.5).unwrap(), 0.0);
        assert_eq!(
            hausdorff(&iv(0.0, 4.0), &FuzzySet::crisp_point(0.0), 0.0).unwrap(),
            4.0
        );
    }

    #[test]
    fn d_r_of_crisp_intervals_is_constant_in_r() {
        for r in [1.0, 1.5, 2.0, 7.0, f64::INFINITY] {
            assert_eq!(metric_d_r(&iv(1.0, 2.0), &iv(3.0, 4.0), r).unwrap(), 2.0);
        }
        let t = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        assert_eq!(metric_d_r(&t, &t, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn d_r_of_trapezoids() {
        // Tra(0,1,2,4) vs Tra(0,0,2,2): Δlo = α, Δhi = 2 - 2α.
        let a = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        let b = make_trapezoid(0.0, 0.0, 2.0, 2.0).unwrap();
        // max(α, 2-2α) switches at α = 2/3.
        let d1 = metric_d_r(&a, &b, 1.0).unwrap();
        let expected = (2.0 * (2.0 / 3.0) - (2.0_f64 / 3.0).powi(2)) + (0.5 - 2.0 / 9.0);
        assert!((d1 - expected).abs() < 1e-14, "{d1} vs {expected}");
        assert_eq!(metric_d_r(&a, &b, f64::INFINITY).unwrap(), 2.0);
    }

    #[test]
    fn rho_matches_worked_values() {
        assert_eq!(
            metric_rho_r(&iv(3.0, 4.0), &iv(1.0, 2.0), 1.0).unwrap(),
            2.0
        );
        let v = metric_rho_r(&iv(3.0, 4.0), &iv(5.0, 7.0), 2.0).unwrap();
        assert!((v - 6.5_f64.sqrt()).abs() < 1e-15);
        for r in [1.0, 1.5, 3.0] {
            let v = metric_rho_r(&iv(3.0, 4.0), &iv(5.0, 7.0), r).unwrap();
            let closed = ((3.0_f64.powf(r) + 2.0_f64.powf(r)) / 2.0).powf(1.0 / r);
            assert!((v - closed).abs() < 1e-14);
        }
    }

    #[test]
    fn rho_in_the_plane_uses_normalized_measure() {
        // ∫|cos t + 4 sin t| dt / 2π = 4√17 / 2π.
        let g = PlaneGrid::new(3600, 1).unwrap();
        let x = FuzzySet::crisp_point_2d(g, [2.0, 3.0]);
        let y = FuzzySet::crisp_point_2d(g, [3.0, 7.0]);
        let v = metric_rho_r(&x, &y, 1.0).unwrap();
        let expected = 2.0 * 17.0_f64.sqrt() / std::f64::consts::PI;
        assert!((v - expected).abs() < 1e-3, "{v} vs {expected}");
    }

    #[test]
    fn mid_spread_matches_worked_values() {
        for r in [1.0, 2.0, 3.0] {
            for theta in [0.0, 1.0, 5.0] {
                let v = metric_d_r_theta(&iv(1.0, 2.0), &iv(0.0, 2.0), r, theta).unwrap();
                let closed = 0.5 * (1.0 + theta).powf(1.0 / r);
                assert!((v - closed).abs() < 1e-14, "{r} {theta}");
                assert_eq!(
                    metric_d_r_theta(&iv(1.0, 2.0), &iv(2.0, 3.0), r, theta).unwrap(),
                    1.0
                );
            }
        }
    }

    #[test]
    fn crisp_points_ignore_theta() {
        let g = PlaneGrid::new(72, 2).unwrap();
        let x = FuzzySet::crisp_point_2d(g, [2.0, 3.0]);
        let y = FuzzySet::crisp_point_2d(g, [3.0, 7.0]);
        let rho = metric_rho_r(&x, &y, 2.0).unwrap();
        for theta in [0.0, 1.0, 10.0] {
            let d = metric_d_r_theta(&x, &y, 2.0, theta).unwrap();
            assert!((d - rho).abs() < 1e-12);
        }
    }

    #[test]
    fn invalid_orders() {
        assert!(Metric::support(0.5).is_err());
        assert!(Metric::support(f64::INFINITY).is_err());
        assert!(Metric::hausdorff(f64::INFINITY).is_ok());
        assert!(Metric::mid_spread(2.0, -1.0).is_err());
        assert!(Metric::mid_spread(2.0, 0.0).unwrap().is_pseudometric());
        assert!(metric_rho_r(&iv(0.0, 1.0), &iv(0.0, 1.0), 0.0).is_err());
    }

    #[test]
    fn powered_agrees_with_distance() {
        let a = make_trapezoid(0.0, 1.0, 2.0, 4.0).unwrap();
        let b = make_trapezoid(-1.0, 0.5, 0.5, 3.0).unwrap();
        for m in [
            Metric::hausdorff(2.5).unwrap(),
            Metric::support(3.0).unwrap(),
            Metric::mid_spread(1.5, 2.0).unwrap(),
        ] {
            let d = m.distance(&a, &b).unwrap();
            let p = m.powered(&a, &b).unwrap();
            assert!((d.powf(m.order()) - p).abs() < 1e-12);
        }
    }
}
