//! Conley-Zehnder indices of scalar and diagonal unitary paths.
//!
//! A scalar path is `t ↦ exp(iπ·λ·t)` on `[0, T]`. Only positive rotation
//! (`λ > 0`) is indexed. Two independent checks accompany the closed form:
//! a crossing enumeration for scalar paths and a sampled phase-unwrapping of
//! the determinant of a diagonal unitary loop.

use num_complex::Complex;
use num_traits::{Float, FloatConst};

use crate::error::{domain, Error, Result};
use crate::exact_arith::{add, int, mul, ExactInt, Rational};

/// `t ↦ exp(iπ·rate·t)`, `t ∈ [0, duration]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarPath<T> {
    rate: Rational<T>,
    duration: Rational<T>,
}

impl<T: ExactInt> ScalarPath<T> {
    pub fn new(rate: Rational<T>, duration: Rational<T>) -> Result<Self> {
        if !duration.is_positive() {
            return Err(domain(format!("path duration must be positive, got {duration}")));
        }
        if rate.is_zero() {
            return Err(domain("rate 0 is a constant path"));
        }
        Ok(ScalarPath { rate, duration })
    }

    pub fn rate(&self) -> &Rational<T> {
        &self.rate
    }

    pub fn duration(&self) -> &Rational<T> {
        &self.duration
    }
}

/// Direct sum of scalar paths over a common interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalPath<T> {
    components: Vec<ScalarPath<T>>,
}

impl<T: ExactInt> DiagonalPath<T> {
    pub fn new(components: Vec<ScalarPath<T>>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(domain("a diagonal path needs at least one component"));
        };
        if components.iter().any(|c| c.duration != first.duration) {
            return Err(domain("diagonal path components must share one duration"));
        }
        Ok(DiagonalPath { components })
    }

    /// Builds `diag(exp(iπ·r_j·t))` on `[0, duration]`.
    pub fn from_rates(rates: Vec<Rational<T>>, duration: Rational<T>) -> Result<Self> {
        let components = rates
            .into_iter()
            .map(|r| ScalarPath::new(r, duration.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    pub fn components(&self) -> &[ScalarPath<T>] {
        &self.components
    }
}

/// Index of `exp(iπt)` on `[0, T]`: `T` when `T` is an even integer,
/// `2⌊T/2⌋ + 1` otherwise.
pub fn scalar_cz<T: ExactInt>(t: &Rational<T>) -> Result<T> {
    if !t.is_positive() {
        return Err(domain(format!("path length must be positive, got {t}")));
    }
    if let Some(n) = t.to_integer().filter(|n| n.is_even()) {
        return Ok(n);
    }
    let half_floor = t.checked_div(&Rational::from_integer(int(2)))?.floor();
    add(&mul(&int(2), &half_floor, "scalar index")?, &T::one(), "scalar index")
}

/// Index of `exp(iπ·λ·t)` on `[0, T]`, equal to `scalar_cz(λT)`.
pub fn scalar_cz_rated<T: ExactInt>(path: &ScalarPath<T>) -> Result<T> {
    if !path.rate.is_positive() {
        return Err(Error::Unsupported(format!(
            "negative rotation rate {} has no fixed crossing convention",
            path.rate
        )));
    }
    scalar_cz(&path.rate.checked_mul(&path.duration)?)
}

/// Sum of the component indices.
pub fn diagonal_cz<T: ExactInt>(path: &DiagonalPath<T>) -> Result<T> {
    path.components
        .iter()
        .try_fold(T::zero(), |acc, c| add(&acc, &scalar_cz_rated(c)?, "diagonal index"))
}

/// Index of a loop with Maslov index `maslov` composed with the trivial path.
pub fn loop_cz_from_maslov<T: ExactInt>(maslov: &T) -> Result<T> {
    mul(&int(2), maslov, "loop index")
}

/// Crossing-form count for `exp(iπt)` on `[0, T]`.
///
/// Walks the crossing times `t = 0, 2, 4, …` up to `T`; each endpoint
/// crossing contributes 1 (half the signature 2) and each interior crossing
/// contributes 2.
pub fn crossing_oracle_scalar<T: ExactInt>(t: &Rational<T>) -> Result<T> {
    if !t.is_positive() {
        return Err(domain(format!("path length must be positive, got {t}")));
    }
    let two: T = int(2);
    let mut index = T::zero();
    let mut crossing = T::zero();
    loop {
        let at = Rational::from_integer(crossing.clone());
        if at > *t {
            break;
        }
        let endpoint = at.is_zero() || at == *t;
        let contribution = if endpoint { T::one() } else { two.clone() };
        index = add(&index, &contribution, "crossing count")?;
        crossing = add(&crossing, &two, "crossing count")?;
    }
    Ok(index)
}

/// Outcome of [`det_winding`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Winding<F> {
    pub winding: i64,
    /// Distance of the unwrapped phase / 2π from `winding`.
    pub residual: F,
}

/// Minimum sample count accepted by [`det_winding`] for the given rates.
pub fn min_winding_samples(rates: &[i64]) -> usize {
    4 * rates.iter().map(|r| r.unsigned_abs() as usize).sum::<usize>() + 16
}

/// Winding number of `t ↦ Π_j exp(2πi·r_j·t)` on `[0, 1]`, recovered by
/// multiplying the diagonal entries at `samples + 1` uniform points and
/// unwrapping the phase of the product.
pub fn det_winding<F: Float + FloatConst>(rates: &[i64], samples: usize) -> Result<Winding<F>> {
    if rates.is_empty() {
        return Err(domain("winding needs at least one rate"));
    }
    let needed = min_winding_samples(rates);
    if samples < needed {
        return Err(domain(format!(
            "{samples} samples is below the minimum {needed} for these rates"
        )));
    }
    let tau = F::TAU();
    let n = F::from(samples).ok_or_else(|| domain("sample count not representable"))?;
    let rates_f = rates
        .iter()
        .map(|&r| F::from(r).ok_or_else(|| domain("rate not representable")))
        .collect::<Result<Vec<F>>>()?;

    let det_at = |k: usize| -> Complex<F> {
        let t = F::from(k).unwrap() / n;
        rates_f.iter().fold(Complex::new(F::one(), F::zero()), |acc, &r| {
            acc * Complex::from_polar(F::one(), tau * r * t)
        })
    };

    let mut total = F::zero();
    let mut prev = det_at(0).arg();
    for k in 1..=samples {
        let phase = det_at(k).arg();
        let mut step = phase - prev;
        while step > F::PI() {
            step = step - tau;
        }
        while step <= -F::PI() {
            step = step + tau;
        }
        total = total + step;
        prev = phase;
    }

    let turns = total / tau;
    let rounded = turns.round();
    let residual = (turns - rounded).abs();
    let threshold = F::from(0.01).unwrap();
    if residual.is_nan() || residual > threshold {
        return Err(Error::Resolution {
            residual: residual.to_f64().unwrap_or(f64::NAN),
            samples,
        });
    }
    let winding = rounded
        .to_i64()
        .ok_or_else(|| Error::Internal("winding number not representable".into()))?;
    Ok(Winding { winding, residual })
}
