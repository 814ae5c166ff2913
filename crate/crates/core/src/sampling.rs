//! Seeded generators for fuzzy data, probes and FRVs.
//!
//! Every generator draws from a caller-owned [`ChaCha8Rng`], so a seed fixes
//! the whole sample.

use crate::empirical::{sign_flip_symmetric_frv, EmpiricalFrv, Perturbation};
use crate::error::Result;
use crate::fuzzy::{FuzzySet, PiecewiseLinear, PlaneGrid, Trapezoid};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A trapezoid with knots inside `[-range, range]`.
pub fn random_trapezoid(rng: &mut ChaCha8Rng, range: f64) -> FuzzySet {
    let mut k: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-range..=range));
    k.sort_by(f64::total_cmp);
    FuzzySet::trapezoid(k[0], k[1], k[2], k[3]).expect("sorted knots")
}

/// A trapezoid whose consecutive knot gaps lie in `gap`.
pub fn spaced_trapezoid(rng: &mut ChaCha8Rng, start: f64, gap: (f64, f64)) -> FuzzySet {
    let a = start;
    let b = a + rng.gen_range(gap.0..gap.1);
    let c = b + rng.gen_range(gap.0..gap.1);
    let d = c + rng.gen_range(gap.0..gap.1);
    FuzzySet::trapezoid(a, b, c, d).expect("increasing knots")
}

/// Positive weights summing to one.
pub fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..1.0)).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / total).collect()
}

/// An FRV on `n` random trapezoids with random weights.
pub fn random_line_frv(rng: &mut ChaCha8Rng, n: usize, range: f64) -> EmpiricalFrv {
    let atoms = (0..n).map(|_| random_trapezoid(rng, range)).collect();
    let weights = random_weights(rng, n);
    EmpiricalFrv::new(atoms, weights).expect("valid random FRV")
}

/// A perturbation of `center` that keeps both the widened and the narrowed
/// set valid. `lo_scale` and `hi_scale` in `(0, 1]` bound the size of each
/// side relative to the room the trapezoid leaves.
pub fn random_perturbation(
    rng: &mut ChaCha8Rng,
    center: &Trapezoid,
    lo_scale: f64,
    hi_scale: f64,
) -> Perturbation {
    let core = center.c - center.b;
    let left = center.b - center.a;
    let right = center.d - center.c;
    let lo1 = 0.45 * core * lo_scale * rng.gen::<f64>();
    let hi1 = 0.45 * core * hi_scale * rng.gen::<f64>();
    let slope = |rng: &mut ChaCha8Rng, at_one: f64, room: f64, scale: f64| {
        let span = 0.9 * room * scale;
        at_one + rng.gen_range(-at_one.min(span)..=span)
    };
    let lo0 = slope(rng, lo1, left, lo_scale);
    let hi0 = slope(rng, hi1, right, hi_scale);
    Perturbation::new(
        PiecewiseLinear::linear(lo0, lo1),
        PiecewiseLinear::linear(hi0, hi1),
    )
    .expect("non-negative perturbation")
}

/// A sign-flip symmetric FRV about a random trapezoid, returned with its center.
pub fn sign_flip_frv(
    rng: &mut ChaCha8Rng,
    pairs: usize,
    lo_scale: f64,
    hi_scale: f64,
) -> (FuzzySet, EmpiricalFrv) {
    let start = rng.gen_range(-3.0..3.0);
    let center = spaced_trapezoid(rng, start, (0.3, 2.0));
    let t = trapezoid_of(&center);
    let deltas: Vec<Perturbation> = (0..pairs)
        .map(|_| random_perturbation(rng, &t, lo_scale, hi_scale))
        .collect();
    let x = sign_flip_symmetric_frv(&center, &deltas).expect("valid perturbations");
    (center, x)
}

fn trapezoid_of(a: &FuzzySet) -> Trapezoid {
    let l = a.as_levels().expect("line set");
    let (lo, hi) = l.on_knots(&[0.0, 1.0]);
    Trapezoid {
        a: lo[0],
        b: lo[1],
        c: hi[1],
        d: hi[0],
    }
}

/// Random convex combinations of two or three atoms of `x`.
pub fn convex_probes(rng: &mut ChaCha8Rng, x: &EmpiricalFrv, count: usize) -> Vec<FuzzySet> {
    let atoms = x.atoms();
    (0..count)
        .map(|_| {
            let mut p = atoms[rng.gen_range(0..atoms.len())].clone();
            for _ in 0..rng.gen_range(1..=2) {
                let q = &atoms[rng.gen_range(0..atoms.len())];
                p = p
                    .convex_combo(q, rng.gen::<f64>())
                    .expect("compatible atoms");
            }
            p
        })
        .collect()
}

/// A random planar disk or polygon.
pub fn random_plane_set(rng: &mut ChaCha8Rng, grid: PlaneGrid, range: f64) -> FuzzySet {
    let c = [rng.gen_range(-range..range), rng.gen_range(-range..range)];
    if rng.gen_bool(0.5) {
        let support = rng.gen_range(0.2..2.0);
        let core = support * rng.gen::<f64>();
        FuzzySet::disk(grid, c, support, core).expect("ordered radii")
    } else {
        let n = rng.gen_range(3..=7);
        let mut angles: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let outer: Vec<[f64; 2]> = angles
            .iter()
            .map(|t| {
                let r = rng.gen_range(0.3..2.0);
                [c[0] + r * t.cos(), c[1] + r * t.sin()]
            })
            .collect();
        let m = [
            outer.iter().map(|v| v[0]).sum::<f64>() / n as f64,
            outer.iter().map(|v| v[1]).sum::<f64>() / n as f64,
        ];
        let f = rng.gen_range(0.0..0.9);
        let inner: Vec<[f64; 2]> = outer
            .iter()
            .map(|v| [m[0] + f * (v[0] - m[0]), m[1] + f * (v[1] - m[1])])
            .collect();
        FuzzySet::polygon(grid, &outer, &inner).expect("core inside support")
    }
}

/// An FRV on `n` random planar sets.
pub fn random_plane_frv(rng: &mut ChaCha8Rng, grid: PlaneGrid, n: usize) -> EmpiricalFrv {
    let atoms = (0..n).map(|_| random_plane_set(rng, grid, 3.0)).collect();
    let weights = random_weights(rng, n);
    EmpiricalFrv::new(atoms, weights).expect("valid random FRV")
}

/// Crisp points on the line with random weights.
pub fn crisp_line_sample(rng: &mut ChaCha8Rng, n: usize) -> (Vec<f64>, Vec<f64>) {
    let points = (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect();
    (points, random_weights(rng, n))
}

/// Crisp points in the plane with random weights.
pub fn crisp_plane_sample(rng: &mut ChaCha8Rng, n: usize) -> (Vec<[f64; 2]>, Vec<f64>) {
    let points = (0..n)
        .map(|_| [rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)])
        .collect();
    (points, random_weights(rng, n))
}

/// Observation counts of the nine-trapezoid layout of [`symmetric_trees`].
pub const TREES_FREQUENCIES: [u32; 9] = [22, 16, 39, 36, 85, 22, 35, 12, 12];

/// Nine trapezoids on a quality scale, mirror-symmetric about the fifth.
///
/// `T_i` has center `0.5·i + 0.5`, core half-width 0.25 and support
/// half-width `0.5 + 0.05·|i - 5|`.
pub fn symmetric_trees() -> Vec<Trapezoid> {
    (1..=9)
        .map(|i: i32| {
            let c = 0.5 * i as f64 + 0.5;
            let s = 0.5 + 0.05 * (i - 5).abs() as f64;
            Trapezoid::new(c - s, c - 0.25, c + 0.25, c + s).expect("ordered knots")
        })
        .collect()
}

/// [`symmetric_trees`] weighted by [`TREES_FREQUENCIES`].
pub fn symmetric_trees_frv() -> Result<EmpiricalFrv> {
    let atoms = symmetric_trees().iter().map(Trapezoid::to_fuzzy).collect();
    let freq: Vec<f64> = TREES_FREQUENCIES.iter().map(|&f| f as f64).collect();
    EmpiricalFrv::from_frequencies(atoms, &freq)
}
