//! Numerical check of the symplectic area of `P(w)`.
//!
//! On the chart `z ↦ [z : 1 : 0 : … : 0]` of `P(w_0, w_1)` the pulled-back
//! form integrates to `−(1/π)∫₀^{2π}∫₀^∞ w₁r/(w₀r² + w₁)² dr dθ = −1/w₀`.
//! The radial integral is computed by adaptive Simpson after compactifying
//! `[0, ∞)` to `[0, 1)` with `u = r/(1+r)`; the θ integral is exact. The
//! remaining bookkeeping (chart group order, degree of the embedding
//! `P(w_0, w_1) → P(w)`) is done in exact rationals.

use num_traits::{Float, FloatConst};

use crate::error::{domain, Error, Result};
use crate::exact_arith::{mul, ExactInt, Rational};
use crate::weights::WeightVector;

/// Default cap on integrand evaluations.
pub const DEFAULT_EVAL_BUDGET: usize = 1_000_000;

const MIN_DEPTH: u32 = 4;
const MAX_DEPTH: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<F> {
    pub value: F,
    pub estimated_error: F,
    pub evaluations: usize,
}

struct Segment<F> {
    a: F,
    b: F,
    fa: F,
    fm: F,
    fb: F,
    whole: F,
    eps: F,
    depth: u32,
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
///
/// A segment is accepted once it is at least `MIN_DEPTH` bisections deep and
/// its two half-panels differ from the whole panel by at most `15·eps`; the Richardson-corrected value is kept and
/// `|Δ|/15` is added to the error estimate. Fails with
/// [`Error::Convergence`] when the budget runs out or the accumulated
/// estimate exceeds `tol`.
pub fn adaptive_simpson<F, G>(f: G, a: F, b: F, tol: F, budget: usize) -> Result<QuadratureResult<F>>
where
    F: Float,
    G: Fn(F) -> F,
{
    let half = F::from(0.5).unwrap();
    let six = F::from(6.0).unwrap();
    let fifteen = F::from(15.0).unwrap();
    let simpson = |a: F, b: F, fa: F, fm: F, fb: F| (b - a) / six * (fa + F::from(4.0).unwrap() * fm + fb);

    let m = (a + b) * half;
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let mut evaluations = 3usize;
    let mut stack = vec![Segment {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
        eps: tol,
        depth: 0,
    }];
    let mut value = F::zero();
    let mut error = F::zero();

    while let Some(seg) = stack.pop() {
        if evaluations + 2 > budget {
            let pending = stack.iter().fold(F::zero(), |acc, s| acc + s.eps);
            return Err(Error::Convergence {
                tol: tol.to_f64().unwrap_or(f64::NAN),
                achieved: (error + pending + seg.eps).to_f64().unwrap_or(f64::NAN),
                evaluations,
            });
        }
        let m = (seg.a + seg.b) * half;
        let lm = (seg.a + m) * half;
        let rm = (m + seg.b) * half;
        let (flm, frm) = (f(lm), f(rm));
        evaluations += 2;
        let left = simpson(seg.a, m, seg.fa, flm, seg.fm);
        let right = simpson(m, seg.b, seg.fm, frm, seg.fb);
        let delta = left + right - seg.whole;
        let settled = seg.depth >= MIN_DEPTH && delta.abs() <= fifteen * seg.eps;
        if settled || seg.depth >= MAX_DEPTH {
            value = value + left + right + delta / fifteen;
            error = error + delta.abs() / fifteen;
        } else {
            let eps = seg.eps * half;
            let depth = seg.depth + 1;
            stack.push(Segment {
                a: m,
                b: seg.b,
                fa: seg.fm,
                fm: frm,
                fb: seg.fb,
                whole: right,
                eps,
                depth,
            });
            stack.push(Segment {
                a: seg.a,
                b: m,
                fa: seg.fa,
                fm: flm,
                fb: seg.fm,
                whole: left,
                eps,
                depth,
            });
        }
    }

    if error.is_nan() || error > tol {
        return Err(Error::Convergence {
            tol: tol.to_f64().unwrap_or(f64::NAN),
            achieved: error.to_f64().unwrap_or(f64::NAN),
            evaluations,
        });
    }
    Ok(QuadratureResult {
        value,
        estimated_error: error,
        evaluations,
    })
}

/// Numerically integrates the pulled-back symplectic form over the chart of
/// `P(w0, w1)`; the exact value is `−1/w0`.
pub fn chart_integral<F>(w0: u64, w1: u64, tol: F, budget: usize) -> Result<QuadratureResult<F>>
where
    F: Float + FloatConst,
{
    if w0 == 0 || w1 == 0 {
        return Err(domain("chart weights must be positive"));
    }
    let max_tol = F::from(1e-4).unwrap();
    if !(tol > F::zero() && tol <= max_tol) {
        return Err(domain("tolerance must lie in (0, 1e-4]"));
    }
    let (a, b) = (F::from(w0).unwrap(), F::from(w1).unwrap());
    // r = u/(1-u), dr = du/(1-u)^2; the transformed integrand vanishes at u = 1.
    let integrand = |u: F| {
        let one_minus = F::one() - u;
        if one_minus <= F::zero() {
            return F::zero();
        }
        let r = u / one_minus;
        let denom = a * r * r + b;
        b * r / (denom * denom) / (one_minus * one_minus)
    };
    // value = -(1/π)·2π·radial = -2·radial
    let two = F::from(2.0).unwrap();
    let radial = adaptive_simpson(integrand, F::zero(), F::one(), tol / F::from(4.0).unwrap(), budget)?;
    Ok(QuadratureResult {
        value: -two * radial.value,
        estimated_error: two * radial.estimated_error,
        evaluations: radial.evaluations,
    })
}

/// Intermediate values of the exact area computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaChain<T> {
    /// `−1/w_0`
    pub chart_value: Rational<T>,
    /// `w_1 / gcd(w_0, w_1)`
    pub chart_group_order: T,
    /// `−gcd(w_0, w_1)/(w_0 w_1)`
    pub line_area: Rational<T>,
    /// `‖w‖·gcd(w_0, w_1)/(w_0 w_1)`
    pub embedding_degree: T,
    /// `−1/‖w‖`
    pub area: Rational<T>,
}

/// Carries the chart value `−1/w_0` through the chart group order and the
/// degree of `P(w_0, w_1) ↪ P(w)` to the class of `[ω]`.
pub fn area_chain_steps<T: ExactInt>(full_w: &WeightVector<T>) -> Result<AreaChain<T>> {
    let ws = full_w.as_slice();
    let (w0, w1) = (ws[0].clone(), ws[1].clone());
    let g = w0.gcd(&w1);
    let chart_value = Rational::new(-T::one(), w0.clone())?;
    let chart_group_order = w1.clone() / g.clone();
    let line_area = chart_value.checked_div(&Rational::from_integer(chart_group_order.clone()))?;
    let embedding_degree = Rational::new(
        mul(&full_w.product()?, &g, "embedding degree")?,
        mul(&w0, &w1, "embedding degree")?,
    )?
    .to_integer()
    .ok_or_else(|| Error::Internal("embedding degree is not an integer".into()))?;
    let area = line_area.checked_div(&Rational::from_integer(embedding_degree.clone()))?;
    Ok(AreaChain {
        chart_value,
        chart_group_order,
        line_area,
        embedding_degree,
        area,
    })
}

/// `⟨[ω], P(w)⟩` via [`area_chain_steps`].
pub fn area_chain<T: ExactInt>(full_w: &WeightVector<T>) -> Result<Rational<T>> {
    Ok(area_chain_steps(full_w)?.area)
}
