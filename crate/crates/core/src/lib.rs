//! Exact Conley-Zehnder indices of Reeb orbits on circle orbibundles over
//! weighted projective spaces, weighted complete intersections and Brieskorn
//! orbifolds.
//!
//! The integer computations are generic over [`ExactInt`] (`i64`, `i128`,
//! [`num_bigint::BigInt`], …) and the numeric checks over
//! [`num_traits::Float`]. The aliases below fix the common choices.

pub mod cz_indices;
pub mod cz_paths;
pub mod error;
pub mod exact_arith;
pub mod numeric_verify;
pub mod orbifold_topology;
pub mod spaces;
pub mod weights;

pub use cz_indices::{
    brieskorn_principal_value, in_stratum_term, mu_orbit_brieskorn, mu_orbit_wps, mu_principal, mu_principal_brieskorn,
    Branch, CZReport, OrbitSpec,
};
pub use cz_paths::{
    crossing_oracle_scalar, det_winding, diagonal_cz, loop_cz_from_maslov, min_winding_samples, scalar_cz,
    scalar_cz_rated, DiagonalPath, ScalarPath, Winding,
};
pub use error::{Error, Result};
pub use exact_arith::{factorize, gcd_all, int, is_prime, lcm_all, ord_p, ExactInt, Factorization, Rational};
pub use numeric_verify::{
    adaptive_simpson, area_chain, area_chain_steps, chart_integral, AreaChain, QuadratureResult, DEFAULT_EVAL_BUDGET,
};
pub use orbifold_topology::{
    p_star_factor, teardrop_cohomology, teardrop_homology, teardrop_orbifold_chern, AbelianGroup,
};
pub use spaces::{
    b_constant, brieskorn_to_wci, check_theorem_hypotheses, compute_l2, BrieskornExponents, Condition,
    HypothesisReport, Space, WCISpace, WPSpace,
};
pub use weights::{classifying_multiplier, fw_degree, invariants, symplectic_area, WeightInvariants, WeightVector};

pub use num_bigint::BigInt;

/// Default exact integer: wide enough for every product and lcm met in
/// practice, with overflow reported rather than wrapped.
pub type Int = i128;

pub type Rational64 = Rational<i64>;
pub type Rational128 = Rational<i128>;
pub type BigRational = Rational<BigInt>;

pub type Weights = WeightVector<Int>;
pub type BigWeights = WeightVector<BigInt>;
pub type Brieskorn = BrieskornExponents<Int>;
pub type BigBrieskorn = BrieskornExponents<BigInt>;
pub type Report = CZReport<Int>;

/// Double-precision quadrature result.
pub type Quadrature = QuadratureResult<f64>;
