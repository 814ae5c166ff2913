//! Finitely supported fuzzy random variables and weighted order statistics.

use crate::error::{Error, Result};
use crate::fuzzy::{DirectionGrid, FuzzySet, LinearMap, PiecewiseLinear};
use crate::pwl;

/// Cumulative-weight slack when locating the ½ level, relative to total weight.
const HALF_TOL: f64 = 1e-12;

/// The interval of medians `[lo, hi]` and its midpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedianInterval {
    pub lo: f64,
    pub hi: f64,
    pub point: f64,
}

fn check_sample(values: &[f64], weights: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if values.len() != weights.len() {
        return Err(Error::InvalidWeights(format!(
            "{} values but {} weights",
            values.len(),
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
        return Err(Error::InvalidWeights(format!("weight {w} is not positive")));
    }
    if let Some(v) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::OutOfRange {
            what: "value",
            value: *v,
            range: "finite reals",
        });
    }
    Ok(())
}

/// Median interval of `(value, weight)` pairs; sorts `pairs` in place.
pub(crate) fn median_in_place(pairs: &mut [(f64, f64)]) -> MedianInterval {
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let total: f64 = pairs.iter().map(|p| p.1).sum();
    let half = 0.5 * total - HALF_TOL * total;
    let mut cum = 0.0;
    let mut lo = pairs[pairs.len() - 1].0;
    for &(v, w) in pairs.iter() {
        cum += w;
        if cum >= half {
            lo = v;
            break;
        }
    }
    cum = 0.0;
    let mut hi = pairs[0].0;
    for &(v, w) in pairs.iter().rev() {
        cum += w;
        if cum >= half {
            hi = v;
            break;
        }
    }
    MedianInterval {
        lo,
        hi,
        point: 0.5 * (lo + hi),
    }
}

/// Median interval and MAD of a sample, reusing `buf` as scratch space.
pub(crate) fn median_and_mad(
    values: &[f64],
    weights: &[f64],
    buf: &mut Vec<(f64, f64)>,
) -> (MedianInterval, f64) {
    buf.clear();
    buf.extend(values.iter().copied().zip(weights.iter().copied()));
    let med = median_in_place(buf);
    for p in buf.iter_mut() {
        p.0 = (p.0 - med.point).abs();
    }
    let mad = median_in_place(buf).point;
    (med, mad)
}

/// Weighted median of a real sample.
///
/// `lo = inf{y : P(Y ≤ y) ≥ ½}`, `hi = sup{y : P(Y ≥ y) ≥ ½}`, and `point`
/// is their midpoint. Weights need not be normalized.
pub fn weighted_median(values: &[f64], weights: &[f64]) -> Result<MedianInterval> {
    check_sample(values, weights)?;
    let mut pairs: Vec<(f64, f64)> = values
        .iter()
        .copied()
        .zip(weights.iter().copied())
        .collect();
    Ok(median_in_place(&mut pairs))
}

/// Weighted median absolute deviation about the weighted median.
pub fn weighted_mad(values: &[f64], weights: &[f64]) -> Result<f64> {
    check_sample(values, weights)?;
    let mut buf = Vec::with_capacity(values.len());
    Ok(median_and_mad(values, weights, &mut buf).1)
}

/// A fuzzy random variable with finitely many atoms. Weights are positive
/// and sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalFrv {
    atoms: Vec<FuzzySet>,
    weights: Vec<f64>,
}

impl EmpiricalFrv {
    pub fn new(atoms: Vec<FuzzySet>, weights: Vec<f64>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::EmptySample);
        }
        if atoms.len() != weights.len() {
            return Err(Error::InvalidWeights(format!(
                "{} atoms but {} weights",
                atoms.len(),
                weights.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(**w > 0.0 && w.is_finite())) {
            return Err(Error::InvalidWeights(format!("weight {w} is not positive")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidWeights(format!("weights sum to {total}")));
        }
        for a in &atoms[1..] {
            atoms[0].compatible(a)?;
        }
        Ok(Self { atoms, weights })
    }

    /// Normalizes non-negative frequencies; atoms with frequency zero are dropped.
    pub fn from_frequencies(atoms: Vec<FuzzySet>, frequencies: &[f64]) -> Result<Self> {
        if atoms.len() != frequencies.len() {
            return Err(Error::InvalidWeights(format!(
                "{} atoms but {} frequencies",
                atoms.len(),
                frequencies.len()
            )));
        }
        if let Some(f) = frequencies.iter().find(|f| !(**f >= 0.0 && f.is_finite())) {
            return Err(Error::InvalidWeights(format!("frequency {f} is negative")));
        }
        for a in atoms.iter().skip(1) {
            atoms[0].compatible(a)?;
        }
        let total: f64 = frequencies.iter().sum();
        if !(total > 0.0) {
            return Err(Error::EmptySample);
        }
        let (atoms, weights) = atoms
            .into_iter()
            .zip(frequencies)
            .filter(|(_, f)| **f > 0.0)
            .map(|(a, f)| (a, f / total))
            .unzip();
        Ok(Self { atoms, weights })
    }

    /// The random variable that always takes the value `atom`.
    pub fn degenerate(atom: FuzzySet) -> Self {
        Self {
            atoms: vec![atom],
            weights: vec![1.0],
        }
    }

    pub fn atoms(&self) -> &[FuzzySet] {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.atoms[0].dim()
    }

    pub fn direction_grid(&self) -> DirectionGrid {
        self.atoms[0].direction_grid()
    }

    /// Checks that `a` can be compared with the atoms.
    pub fn compatible(&self, a: &FuzzySet) -> Result<()> {
        self.atoms[0].compatible(a)
    }

    /// The support values `s_atom(u, α)` with their weights.
    pub fn support_marginal(&self, u: &[f64], alpha: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let values = self
            .atoms
            .iter()
            .map(|a| a.support(u, alpha))
            .collect::<Result<Vec<_>>>()?;
        Ok((values, self.weights.clone()))
    }

    /// Applies `f` to every atom, keeping the weights.
    pub fn map_atoms(&self, f: impl Fn(&FuzzySet) -> Result<FuzzySet>) -> Result<Self> {
        let atoms = self.atoms.iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::new(atoms, self.weights.clone())
    }

    /// The image `M·𝒳 + V`.
    pub fn transform(&self, map: &LinearMap, shift: &FuzzySet) -> Result<Self> {
        self.map_atoms(|a| a.matrix_transform(map)?.add(shift))
    }
}

/// A pair of non-negative perturbations of the lower and upper level endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Perturbation {
    lo: PiecewiseLinear,
    hi: PiecewiseLinear,
}

impl Perturbation {
    pub fn new(lo: PiecewiseLinear, hi: PiecewiseLinear) -> Result<Self> {
        if lo.values().iter().chain(hi.values()).any(|v| !(*v >= 0.0)) {
            return Err(Error::InvalidPerturbation(
                "perturbations must be non-negative".into(),
            ));
        }
        Ok(Self { lo, hi })
    }

    pub fn constant(lo: f64, hi: f64) -> Result<Self> {
        Self::new(PiecewiseLinear::constant(lo), PiecewiseLinear::constant(hi))
    }

    pub fn lower(&self) -> &PiecewiseLinear {
        &self.lo
    }

    pub fn upper(&self) -> &PiecewiseLinear {
        &self.hi
    }
}

/// A functionally symmetric random variable about `center`.
///
/// Each perturbation `δ` contributes the widened set
/// `[lo - δ_lo, hi + δ_hi]` and the narrowed set `[lo + δ_lo, hi - δ_hi]`
/// with weight `1/(2·deltas.len())` each, so `s_𝒳 - s_center` and its
/// negation are equal in distribution jointly over all `(u, α)`.
pub fn sign_flip_symmetric_frv(center: &FuzzySet, deltas: &[Perturbation]) -> Result<EmpiricalFrv> {
    let levels = center.as_levels().ok_or_else(|| {
        Error::InvalidPerturbation("sign-flip samples are built on the line".into())
    })?;
    if deltas.is_empty() {
        return Err(Error::EmptySample);
    }
    let w = 1.0 / (2 * deltas.len()) as f64;
    let mut atoms = Vec::with_capacity(2 * deltas.len());
    for delta in deltas {
        let knots = pwl::merge_knots(
            &pwl::merge_knots(levels.knots(), delta.lo.knots()),
            delta.hi.knots(),
        );
        let (lo, hi) = levels.on_knots(&knots);
        let (dlo, dhi) = (delta.lo.resample(&knots), delta.hi.resample(&knots));
        let build = |sign: f64| -> Result<FuzzySet> {
            let l: Vec<f64> = lo.iter().zip(&dlo).map(|(a, d)| a - sign * d).collect();
            let h: Vec<f64> = hi.iter().zip(&dhi).map(|(a, d)| a + sign * d).collect();
            FuzzySet::from_levels(
                &PiecewiseLinear::new(knots.clone(), l)?,
                &PiecewiseLinear::new(knots.clone(), h)?,
            )
            .map_err(|e| Error::InvalidPerturbation(e.to_string()))
        };
        atoms.push(build(1.0)?);
        atoms.push(build(-1.0)?);
    }
    let weights = vec![w; atoms.len()];
    Ok(EmpiricalFrv { atoms, weights })
}
