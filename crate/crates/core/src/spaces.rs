//! The three space families: weighted projective spaces, weighted complete
//! intersections and Brieskorn orbifolds.

use crate::error::{domain, Error, Result};
use crate::exact_arith::{factorize, int, lcm_all, mul, ord_p, sum, ExactInt};
use crate::weights::WeightVector;

/// Weighted projective space `P(w)` with its quotient orbifold structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPSpace<T> {
    pub weights: WeightVector<T>,
}

impl<T: ExactInt> WPSpace<T> {
    pub fn new(weights: WeightVector<T>) -> Self {
        WPSpace { weights }
    }
}

/// Quasi-smooth weighted complete intersection of multidegree
/// `(m_1, …, m_r)` in `P(w)`, `1 ≤ r ≤ n − 2`.
///
/// Quasi-smoothness itself is not checked; it is a property of the defining
/// polynomials, which are not modelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WCISpace<T> {
    weights: WeightVector<T>,
    degrees: Vec<T>,
}

impl<T: ExactInt> WCISpace<T> {
    pub fn new(weights: WeightVector<T>, degrees: Vec<T>) -> Result<Self> {
        let n = weights.dim();
        let r = degrees.len();
        if r == 0 || r + 2 > n {
            return Err(domain(format!(
                "a complete intersection needs 1 ≤ r ≤ n − 2; got r = {r}, n = {n}"
            )));
        }
        if let Some(bad) = degrees.iter().find(|m| !m.is_positive()) {
            return Err(domain(format!("degrees must be positive, got {bad}")));
        }
        Ok(WCISpace { weights, degrees })
    }

    pub fn weights(&self) -> &WeightVector<T> {
        &self.weights
    }

    pub fn degrees(&self) -> &[T] {
        &self.degrees
    }

    /// Complex dimension `n − r`.
    pub fn dim(&self) -> usize {
        self.weights.dim() - self.degrees.len()
    }
}

/// Either ambient weighted projective space or a complete intersection in one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space<T> {
    Wps(WPSpace<T>),
    Wci(WCISpace<T>),
}

impl<T: ExactInt> Space<T> {
    pub fn weights(&self) -> &WeightVector<T> {
        match self {
            Space::Wps(s) => &s.weights,
            Space::Wci(s) => s.weights(),
        }
    }
}

impl<T> From<WPSpace<T>> for Space<T> {
    fn from(s: WPSpace<T>) -> Self {
        Space::Wps(s)
    }
}

impl<T> From<WCISpace<T>> for Space<T> {
    fn from(s: WCISpace<T>) -> Self {
        Space::Wci(s)
    }
}

/// Exponents of the Brieskorn polynomial `Σ z_j^{a_j}`, `n ≥ 3`, `a_j ≥ 2`,
/// together with `l = lcm a_j` and `l₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrieskornExponents<T> {
    a: Vec<T>,
    l: T,
    l2: T,
}

impl<T: ExactInt> BrieskornExponents<T> {
    pub fn new(a: Vec<T>) -> Result<Self> {
        if a.len() < 4 {
            return Err(domain(format!(
                "Brieskorn exponents need n ≥ 3 (at least four entries), got {}",
                a.len()
            )));
        }
        if let Some(bad) = a.iter().find(|x| **x < int(2)) {
            return Err(domain(format!("Brieskorn exponents must be ≥ 2, got {bad}")));
        }
        let l = lcm_all(&a)?;
        let l2 = compute_l2(&a)?;
        Ok(BrieskornExponents { a, l, l2 })
    }

    pub fn exponents(&self) -> &[T] {
        &self.a
    }

    pub fn l(&self) -> &T {
        &self.l
    }

    pub fn l2(&self) -> &T {
        &self.l2
    }

    /// Weights `l / a_j` of the ambient weighted projective space.
    pub fn weights(&self) -> Vec<T> {
        self.a.iter().map(|aj| self.l.clone() / aj.clone()).collect()
    }
}

/// `l₂ = Π p^{β_p}` over primes `p | lcm(a)`, where `β_p` is the second
/// largest of the `ord_p(a_j)` counted with multiplicity (a repeated maximum
/// is its own runner-up). A single exponent has `β_p = 0`.
pub fn compute_l2<T: ExactInt>(a: &[T]) -> Result<T> {
    let l = lcm_all(a)?;
    let mut l2 = T::one();
    for (p, _) in factorize(&l)?.pairs() {
        let mut orders = a.iter().map(|x| ord_p(x, p)).collect::<Result<Vec<_>>>()?;
        orders.sort_unstable_by(|x, y| y.cmp(x));
        let beta = orders.get(1).copied().unwrap_or(0);
        for _ in 0..beta {
            l2 = mul(&l2, p, "l2")?;
        }
    }
    Ok(l2)
}

/// Views the Brieskorn hypersurface as a degree-`l` hypersurface in
/// `P(l/a_0, …, l/a_n)`.
pub fn brieskorn_to_wci<T: ExactInt>(a: &BrieskornExponents<T>) -> Result<WCISpace<T>> {
    let weights = WeightVector::new(a.weights())
        .map_err(|err| Error::Internal(format!("converted Brieskorn weights are invalid: {err}")))?;
    WCISpace::new(weights, vec![a.l().clone()])
        .map_err(|err| Error::Internal(format!("converted Brieskorn hypersurface is invalid: {err}")))
}

/// Status of one hypothesis of the principal-orbit index theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    Satisfied(String),
    Violated(String),
    Assumed(String),
}

impl Condition {
    pub fn label(&self) -> &'static str {
        match self {
            Condition::Satisfied(_) => "yes",
            Condition::Violated(_) => "no",
            Condition::Assumed(_) => "assumed",
        }
    }

    pub fn reason(&self) -> &str {
        match self {
            Condition::Satisfied(r) | Condition::Violated(r) | Condition::Assumed(r) => r,
        }
    }
}

/// Hypothesis check: `c₁^orb = −b[ω]`, orbifold simple connectivity, and a
/// manifold total space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport<T> {
    pub b_constant: T,
    pub simply_connected: Condition,
    pub manifold_total_space: Condition,
}

/// `b` with `c₁^orb(TZ) = −b[ω]`: `|w|` for `P(w)`, `|w| − Σ m_j` for a
/// complete intersection. Non-positive values are returned unchanged.
pub fn b_constant<T: ExactInt>(space: &Space<T>) -> Result<T> {
    match space {
        Space::Wps(s) => s.weights.sum(),
        Space::Wci(s) => {
            let total = s.weights.sum()?;
            let deg = sum(s.degrees(), "degree sum")?;
            total.checked_sub(&deg).ok_or(Error::Overflow("b constant"))
        }
    }
}

pub fn check_theorem_hypotheses<T: ExactInt>(space: &Space<T>) -> Result<HypothesisReport<T>> {
    let b = b_constant(space)?;
    let simply_connected = match space {
        Space::Wps(_) => {
            Condition::Satisfied("orbifold π₁ of P(w) vanishes by the homotopy sequence of S¹ → S^{2n+1} → P(w)".into())
        }
        Space::Wci(s) => {
            let (n, r) = (s.weights().dim(), s.degrees().len());
            if r + 2 <= n {
                Condition::Satisfied(format!(
                    "link has dimension ≥ 2 (r = {r} ≤ n − 2 = {}), hence simply connected",
                    n - 2
                ))
            } else {
                Condition::Violated(format!("r = {r} exceeds n − 2"))
            }
        }
    };
    let manifold_total_space = Condition::Assumed(match space {
        Space::Wps(_) => "S^{2n+1} is the total space".to_string(),
        Space::Wci(_) => "quasi-smoothness is not decidable from weights and degrees alone".to_string(),
    });
    Ok(HypothesisReport {
        b_constant: b,
        simply_connected,
        manifold_total_space,
    })
}
