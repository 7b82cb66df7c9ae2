//! Orbifold invariants of the teardrop `P(1, m)`: a sphere with one cone
//! point of order `m`.

use std::fmt;

use crate::error::{domain, Result};
use crate::exact_arith::{ExactInt, Rational};

/// A finitely generated abelian group of the three shapes that occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianGroup<T> {
    Trivial,
    Free { rank: u32 },
    Cyclic { order: T },
}

impl<T: ExactInt> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbelianGroup::Trivial => write!(f, "0"),
            AbelianGroup::Free { rank: 1 } => write!(f, "Z"),
            AbelianGroup::Free { rank } => write!(f, "Z^{rank}"),
            AbelianGroup::Cyclic { order } => write!(f, "Z_{order}"),
        }
    }
}

fn singular_order<T: ExactInt>(m: &T) -> Result<()> {
    if *m < crate::exact_arith::int(2) {
        return Err(domain(format!(
            "the teardrop needs a cone point of order m ≥ 2, got {m}"
        )));
    }
    Ok(())
}

/// `H_q^orb(P(1,m))`: `Z` for `q ∈ {0, 2}`, `Z_m` for odd `q > 1`, `0` otherwise.
pub fn teardrop_homology<T: ExactInt>(m: &T, q: u32) -> Result<AbelianGroup<T>> {
    singular_order(m)?;
    Ok(match q {
        0 | 2 => AbelianGroup::Free { rank: 1 },
        1 => AbelianGroup::Trivial,
        q if q % 2 == 1 => AbelianGroup::Cyclic { order: m.clone() },
        _ => AbelianGroup::Trivial,
    })
}

/// `H^q_orb(P(1,m))`: `Z` for `q ∈ {0, 2}`, `Z_m` for even `q > 2`, `0` for odd `q`.
pub fn teardrop_cohomology<T: ExactInt>(m: &T, q: u32) -> Result<AbelianGroup<T>> {
    singular_order(m)?;
    Ok(match q {
        0 | 2 => AbelianGroup::Free { rank: 1 },
        q if q % 2 == 1 => AbelianGroup::Trivial,
        _ => AbelianGroup::Cyclic { order: m.clone() },
    })
}

/// Orbifold Chern number `2 − (1 − 1/m) = 1 + 1/m`.
pub fn teardrop_orbifold_chern<T: ExactInt>(m: &T) -> Result<Rational<T>> {
    if !m.is_positive() {
        return Err(domain(format!("cone order must be positive, got {m}")));
    }
    Rational::one().checked_add(&Rational::new(T::one(), m.clone())?)
}

/// Factor of `p_*: H₂^orb(P(1,m); ℚ) → H₂(P(1,m); ℚ)`: division by `m`.
pub fn p_star_factor<T: ExactInt>(m: &T) -> Result<Rational<T>> {
    if !m.is_positive() {
        return Err(domain(format!("cone order must be positive, got {m}")));
    }
    Rational::new(T::one(), m.clone())
}
