//! Conley-Zehnder indices of Reeb orbits on circle orbibundles over weighted
//! projective spaces, their complete intersections and Brieskorn orbifolds.
//!
//! Principal orbits (trivial isotropy) get `2b` where `c₁^orb = −b[ω]`.
//! A non-principal orbit over the stratum `{z_k = 0 for k ∉ S}` splits into
//! an in-stratum part, indexed as the principal orbit of the stratum, plus
//! one scalar path per transverse coordinate `k ∉ S` of length `w_k / d_S`.

use std::collections::BTreeSet;

use crate::cz_paths::scalar_cz;
use crate::error::{domain, Error, Result};
use crate::exact_arith::{add, gcd_all, int, lcm_all, mul, sum, ExactInt, Rational};
use crate::spaces::{b_constant, brieskorn_to_wci, BrieskornExponents, Space};
use crate::weights::WeightVector;

/// Support `S` of a point (its nonzero coordinates) and the isotropy order
/// `d_S = gcd{w_j : j ∈ S}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSpec<T> {
    support: BTreeSet<usize>,
    isotropy: T,
}

impl<T: ExactInt> OrbitSpec<T> {
    /// Validates the support against `weights` and computes `d_S`.
    pub fn new(weights: &[T], support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let support: BTreeSet<usize> = support.into_iter().collect();
        if support.is_empty() {
            return Err(domain("orbit support must be nonempty"));
        }
        if let Some(&bad) = support.iter().find(|&&j| j >= weights.len()) {
            return Err(domain(format!(
                "support index {bad} out of range for {} coordinates",
                weights.len()
            )));
        }
        let on: Vec<T> = support.iter().map(|&j| weights[j].clone()).collect();
        let isotropy = gcd_all(&on)?;
        Ok(OrbitSpec { support, isotropy })
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn isotropy(&self) -> &T {
        &self.isotropy
    }

    pub fn is_principal(&self) -> bool {
        self.isotropy.is_one()
    }

    fn transverse(&self, len: usize) -> impl Iterator<Item = usize> + '_ {
        (0..len).filter(|k| !self.support.contains(k))
    }
}

/// Which formula produced a [`CZReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    PrincipalWps,
    PrincipalWci,
    PrincipalBrieskorn,
    NonprincipalWps,
    NonprincipalBrieskorn,
    TwoWeightSpecial,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::PrincipalWps => "principal-wps",
            Branch::PrincipalWci => "principal-wci",
            Branch::PrincipalBrieskorn => "principal-brieskorn",
            Branch::NonprincipalWps => "nonprincipal-wps",
            Branch::NonprincipalBrieskorn => "nonprincipal-brieskorn",
            Branch::TwoWeightSpecial => "two-weight-special",
        }
    }

    /// Short description of the formula behind the branch.
    pub fn formula(self) -> &'static str {
        match self {
            Branch::PrincipalWps => "mu_P(P(w)) = 2|w|",
            Branch::PrincipalWci => "mu_P(X) = 2(|w| - sum m_j)",
            Branch::PrincipalBrieskorn => "mu_P = 2 l (sum 1/a_j - 1)",
            Branch::NonprincipalWps => "mu = (2/d_S) sum_{j in S} w_j + sum_{k not in S} (2 floor(w_k/(2 d_S)) + 1)",
            Branch::NonprincipalBrieskorn => "mu = mu_P(a_S) + sum_{k not in S} (2 floor(w_k/(2 d_S)) + 1)",
            Branch::TwoWeightSpecial => "mu = 2 floor((m+n)/(2m)) + 1 on P(m,n)",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An index together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CZReport<T> {
    pub index: T,
    pub b_constant: Option<T>,
    pub branch: Branch,
    /// Set when a case outside the established formulas was evaluated on
    /// request.
    pub extrapolated: bool,
    pub notes: Vec<String>,
}

impl<T: ExactInt> CZReport<T> {
    fn new(index: T, b_constant: Option<T>, branch: Branch) -> Self {
        CZReport {
            index,
            b_constant,
            branch,
            extrapolated: false,
            notes: Vec::new(),
        }
    }
}

/// Principal-orbit index `2b` of `P(w)` or of a complete intersection in it.
pub fn mu_principal<T: ExactInt>(space: &Space<T>) -> Result<CZReport<T>> {
    let b = b_constant(space)?;
    let index = mul(&int(2), &b, "principal index")?;
    let branch = match space {
        Space::Wps(_) => Branch::PrincipalWps,
        Space::Wci(_) => Branch::PrincipalWci,
    };
    let mut report = CZReport::new(index, Some(b.clone()), branch);
    if !b.is_positive() {
        report
            .notes
            .push(format!("b = {b} is not positive; the index is returned as computed"));
    }
    Ok(report)
}

/// `2·l_a·(Σ 1/a_j − 1)` with `l_a = lcm a_j`, evaluated in exact rationals.
/// Accepts any nonempty exponent list; used for sub-polynomials as well.
pub fn brieskorn_principal_value<T: ExactInt>(a: &[T]) -> Result<T> {
    let l = lcm_all(a)?;
    let mut total = Rational::from_integer(-T::one());
    for aj in a {
        total = total.checked_add(&Rational::new(T::one(), aj.clone())?)?;
    }
    let value = total.scale(&mul(&int(2), &l, "Brieskorn index")?)?;
    value
        .to_integer()
        .ok_or_else(|| Error::Internal(format!("Brieskorn principal index {value} is not an integer")))
}

/// Principal-orbit index of the Brieskorn orbifold with exponents `a`.
pub fn mu_principal_brieskorn<T: ExactInt>(a: &BrieskornExponents<T>) -> Result<CZReport<T>> {
    let index = brieskorn_principal_value(a.exponents())?;
    let x = brieskorn_to_wci(a)?;
    let b = b_constant(&Space::Wci(x))?;
    let mut report = CZReport::new(index, Some(b.clone()), Branch::PrincipalBrieskorn);
    if !b.is_positive() {
        report
            .notes
            .push(format!("b = {b} is not positive; the index is returned as computed"));
    }
    Ok(report)
}

/// Index contribution of transverse coordinate `k`: the scalar path of
/// length `w_k / d_S`. Even-integer lengths (a closed transverse loop) are
/// refused unless `allow_extrapolation`.
fn transverse_terms<T: ExactInt>(
    weights: &[T],
    orbit: &OrbitSpec<T>,
    allow_extrapolation: bool,
    report_notes: &mut Vec<String>,
    extrapolated: &mut bool,
) -> Result<T> {
    let mut total = T::zero();
    for k in orbit.transverse(weights.len()) {
        let len = Rational::new(weights[k].clone(), orbit.isotropy.clone())?;
        if len.to_integer().is_some_and(|n| n.is_even()) {
            if !allow_extrapolation {
                return Err(Error::Uncovered(format!(
                    "transverse coordinate {k} has w_{k}/d_S = {len}, an even integer; \
                     pass allow_extrapolation to use the closed-loop value"
                )));
            }
            *extrapolated = true;
            report_notes.push(format!(
                "transverse coordinate {k}: w_k/d_S = {len} is an even integer, used {len} (extrapolated)"
            ));
        }
        total = add(&total, &scalar_cz(&len)?, "transverse index")?;
    }
    Ok(total)
}

/// Index of the Reeb orbit through a point of `P(w)` with support `support`,
/// traversed once.
pub fn mu_orbit_wps<T: ExactInt>(
    w: &WeightVector<T>,
    support: impl IntoIterator<Item = usize>,
    allow_extrapolation: bool,
) -> Result<CZReport<T>> {
    let ws = w.as_slice();
    let orbit = OrbitSpec::new(ws, support)?;
    let b = w.sum()?;

    if orbit.is_principal() {
        return mu_principal(&Space::Wps(crate::spaces::WPSpace::new(w.clone())));
    }

    if ws.len() == 2 {
        // Support is a single coordinate j; the point is [.., z_j, ..] with
        // isotropy Z_m, m = w_j.
        let j = *orbit.support.iter().next().expect("nonempty support");
        let m = ws[j].clone();
        let n = ws[1 - j].clone();
        let two_m = mul(&int(2), &m, "two-weight index")?;
        let q = add(&m, &n, "two-weight index")?.div_floor(&two_m);
        let index = add(&mul(&int(2), &q, "two-weight index")?, &T::one(), "two-weight index")?;
        let mut report = CZReport::new(index.clone(), Some(b), Branch::TwoWeightSpecial);
        let general = add(
            &int(2),
            &scalar_cz(&Rational::new(n.clone(), m.clone())?)?,
            "two-weight index",
        )?;
        if general != index {
            report.notes.push(format!(
                "the stratum-reduction formula would give {general} here; the two-weight formula is used"
            ));
        }
        return Ok(report);
    }

    let mut notes = Vec::new();
    let mut extrapolated = false;
    if orbit.support.len() == 1 {
        if !allow_extrapolation {
            return Err(Error::Uncovered(format!(
                "single-coordinate support with {} ambient weights has no established formula; \
                 pass allow_extrapolation to use the stratum-reduction formula",
                ws.len()
            )));
        }
        extrapolated = true;
        notes.push("single-coordinate support evaluated with the stratum-reduction formula (extrapolated)".into());
    }

    let in_stratum = in_stratum_term(w, &orbit)?;
    let transverse = transverse_terms(ws, &orbit, allow_extrapolation, &mut notes, &mut extrapolated)?;

    Ok(CZReport {
        index: add(&in_stratum, &transverse, "orbit index")?,
        b_constant: Some(b),
        branch: Branch::NonprincipalWps,
        extrapolated,
        notes,
    })
}

/// Index of the Reeb orbit through a point of the Brieskorn orbifold with
/// support `S`, `|S| ≥ 3`, traversed once.
///
/// The isotropy order is taken as the gcd of the ambient weights `l/a_j`
/// over `S`.
pub fn mu_orbit_brieskorn<T: ExactInt>(
    a: &BrieskornExponents<T>,
    support: impl IntoIterator<Item = usize>,
    allow_extrapolation: bool,
) -> Result<CZReport<T>> {
    let ws = a.weights();
    let orbit = OrbitSpec::new(&ws, support)?;
    if orbit.support.len() < 3 {
        return Err(Error::Uncovered(format!(
            "support of size {} leaves fewer than three Brieskorn variables",
            orbit.support.len()
        )));
    }
    let x = brieskorn_to_wci(a)?;
    let b = b_constant(&Space::Wci(x))?;

    if orbit.is_principal() {
        let index = mul(&int(2), &b, "principal index")?;
        return Ok(CZReport::new(index, Some(b), Branch::PrincipalBrieskorn));
    }

    let mut notes = vec![format!(
        "isotropy order d_S = {} taken from the ambient weights",
        orbit.isotropy
    )];
    let mut extrapolated = false;
    let sub_exponents: Vec<T> = orbit.support.iter().map(|&j| a.exponents()[j].clone()).collect();
    let in_stratum = brieskorn_principal_value(&sub_exponents)?;
    let transverse = transverse_terms(&ws, &orbit, allow_extrapolation, &mut notes, &mut extrapolated)?;

    Ok(CZReport {
        index: add(&in_stratum, &transverse, "orbit index")?,
        b_constant: Some(b),
        branch: Branch::NonprincipalBrieskorn,
        extrapolated,
        notes,
    })
}

/// `(2/d_S)·Σ_{j∈S} w_j`, the in-stratum term of [`mu_orbit_wps`].
pub fn in_stratum_term<T: ExactInt>(w: &WeightVector<T>, orbit: &OrbitSpec<T>) -> Result<T> {
    let on: Vec<T> = orbit.support.iter().map(|&j| w.as_slice()[j].clone()).collect();
    let twice = mul(&int(2), &sum(&on, "stratum sum")?, "stratum term")?;
    let (q, r) = twice.div_rem(&orbit.isotropy);
    if !r.is_zero() {
        return Err(Error::Internal("in-stratum term is not an integer".into()));
    }
    Ok(q)
}
