//! Exact integrals of powers of piecewise-linear functions on `[0, 1]`.
//!
//! Every function here takes a sorted knot vector and the function values at
//! those knots; between knots the function is linear.

/// Merges two sorted knot vectors, dropping exact duplicates.
pub(crate) fn merge_knots(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x <= y => {
                i += 1;
                if x == y {
                    j += 1;
                }
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        if out.last() != Some(&next) {
            out.push(next);
        }
    }
    out
}

/// Value at `alpha` of the piecewise-linear interpolant through `(knots, values)`.
pub(crate) fn interpolate(knots: &[f64], values: &[f64], alpha: f64) -> f64 {
    let i = knots.partition_point(|&k| k <= alpha);
    if i == 0 {
        return values[0];
    }
    if i == knots.len() {
        return values[values.len() - 1];
    }
    let seg = i - 1;
    if alpha == knots[seg] {
        return values[seg];
    }
    let t = (alpha - knots[seg]) / (knots[seg + 1] - knots[seg]);
    values[seg] + t * (values[seg + 1] - values[seg])
}

/// Resamples a piecewise-linear function on a finer knot vector.
pub(crate) fn resample(knots: &[f64], values: &[f64], onto: &[f64]) -> Vec<f64> {
    onto.iter()
        .map(|&a| interpolate(knots, values, a))
        .collect()
}

/// Parameter `t ∈ (0, 1)` where the segment from `y0` to `y1` crosses zero.
pub(crate) fn zero_crossing(y0: f64, y1: f64) -> Option<f64> {
    if (y0 > 0.0 && y1 < 0.0) || (y0 < 0.0 && y1 > 0.0) {
        Some(y0 / (y0 - y1))
    } else {
        None
    }
}

/// `∫ |ℓ|^r` over a segment of length `h` where `|ℓ|` goes linearly from `a`
/// to `b` without changing sign.
fn same_sign_segment(a: f64, b: f64, h: f64, r: f64) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if hi == 0.0 {
        return 0.0;
    }
    if lo == 0.0 {
        return h * hi.powf(r) / (r + 1.0);
    }
    let x = (hi - lo) / lo;
    if x == 0.0 {
        return h * lo.powf(r);
    }
    if x > 1.0 {
        return h * (hi.powf(r + 1.0) - lo.powf(r + 1.0)) / ((r + 1.0) * (hi - lo));
    }
    // ((1+x)^{r+1} - 1) / ((r+1) x), free of cancellation for small x.
    h * lo.powf(r) * ((r + 1.0) * x.ln_1p()).exp_m1() / ((r + 1.0) * x)
}

/// `∫ |ℓ|^r` over a segment of length `h` with `ℓ` linear from `y0` to `y1`.
pub(crate) fn segment_abs_pow(y0: f64, y1: f64, h: f64, r: f64) -> f64 {
    match zero_crossing(y0, y1) {
        Some(t) => {
            same_sign_segment(y0.abs(), 0.0, h * t, r)
                + same_sign_segment(0.0, y1.abs(), h * (1.0 - t), r)
        }
        None => same_sign_segment(y0.abs(), y1.abs(), h, r),
    }
}

/// `∫₀¹ |f(α)|^r dα` for piecewise-linear `f`.
pub(crate) fn integrate_abs_pow(knots: &[f64], f: &[f64], r: f64) -> f64 {
    knots
        .windows(2)
        .zip(f.windows(2))
        .map(|(k, v)| segment_abs_pow(v[0], v[1], k[1] - k[0], r))
        .sum()
}

/// `∫₀¹ max(|f(α)|, |g(α)|)^r dα` for piecewise-linear `f` and `g`.
pub(crate) fn integrate_max_abs_pow(knots: &[f64], f: &[f64], g: &[f64], r: f64) -> f64 {
    let mut total = 0.0;
    for s in 0..knots.len() - 1 {
        let h = knots[s + 1] - knots[s];
        let (f0, f1, g0, g1) = (f[s], f[s + 1], g[s], g[s + 1]);
        let mut cuts = vec![0.0, 1.0];
        cuts.extend(
            [
                zero_crossing(f0, f1),
                zero_crossing(g0, g1),
                zero_crossing(f0 - g0, f1 - g1),
                zero_crossing(f0 + g0, f1 + g1),
            ]
            .into_iter()
            .flatten(),
        );
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        for w in cuts.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            if t1 <= t0 {
                continue;
            }
            let at = |y0: f64, y1: f64, t: f64| y0 + t * (y1 - y0);
            let tm = 0.5 * (t0 + t1);
            let hs = h * (t1 - t0);
            total += if at(f0, f1, tm).abs() >= at(g0, g1, tm).abs() {
                segment_abs_pow(at(f0, f1, t0), at(f0, f1, t1), hs, r)
            } else {
                segment_abs_pow(at(g0, g1, t0), at(g0, g1, t1), hs, r)
            };
        }
    }
    total
}

/// `sup_α max(|f(α)|, |g(α)|)`, attained at a knot.
pub(crate) fn sup_max_abs(f: &[f64], g: &[f64]) -> f64 {
    f.iter()
        .zip(g)
        .map(|(a, b)| a.abs().max(b.abs()))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Composite midpoint rule with many panels, used as an independent check.
    fn midpoint_rule(g: impl Fn(f64) -> f64, n: usize) -> f64 {
        let h = 1.0 / n as f64;
        (0..n).map(|i| g((i as f64 + 0.5) * h)).sum::<f64>() * h
    }

    #[test]
    fn merge_drops_duplicates() {
        assert_eq!(
            merge_knots(&[0.0, 0.5, 1.0], &[0.0, 0.25, 0.5, 1.0]),
            vec![0.0, 0.25, 0.5, 1.0]
        );
    }

    #[test]
    fn interpolation_hits_knots_exactly() {
        let k = [0.0, 0.3, 1.0];
        let v = [1.0, 2.0, -1.0];
        assert_eq!(interpolate(&k, &v, 0.3), 2.0);
        assert_eq!(interpolate(&k, &v, 1.0), -1.0);
        assert!((interpolate(&k, &v, 0.15) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn segment_powers_match_quadrature() {
        for &(y0, y1, r) in &[
            (1.0, 3.0, 1.0),
            (1.0, 3.0, 2.5),
            (-2.0, 1.0, 1.0),
            (-2.0, 1.0, 3.0),
            (0.5, 0.5 + 1e-10, 1.7),
            (0.0, 2.0, 1.2),
        ] {
            let exact = segment_abs_pow(y0, y1, 1.0, r);
            let approx = midpoint_rule(|t: f64| (y0 + t * (y1 - y0)).abs().powf(r), 200_000);
            assert!(
                (exact - approx).abs() < 1e-8,
                "{y0} {y1} {r}: {exact} vs {approx}"
            );
        }
    }

    #[test]
    fn max_abs_integral_matches_quadrature() {
        let k = [0.0, 0.4, 1.0];
        let f = [1.0, -0.5, 2.0];
        let g = [-1.5, 0.2, 0.7];
        for r in [1.0, 2.0, 3.3] {
            let exact = integrate_max_abs_pow(&k, &f, &g, r);
            let approx = midpoint_rule(
                |a| {
                    interpolate(&k, &f, a)
                        .abs()
                        .max(interpolate(&k, &g, a).abs())
                        .powf(r)
                },
                400_000,
            );
            assert!((exact - approx).abs() < 1e-8, "{r}: {exact} vs {approx}");
        }
    }
}
