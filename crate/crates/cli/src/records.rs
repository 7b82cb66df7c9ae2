//! Result records as ordered JSON values.
//!
//! Integers that fit in 64 bits are emitted as JSON numbers and wider ones as
//! decimal strings, so every record survives a parse/serialize round trip.

use czorb_core::{
    area_chain_steps, brieskorn_to_wci, chart_integral, check_theorem_hypotheses, crossing_oracle_scalar, det_winding,
    fw_degree, invariants, min_winding_samples, mu_orbit_brieskorn, mu_orbit_wps, mu_principal, mu_principal_brieskorn,
    p_star_factor, scalar_cz, symplectic_area, teardrop_cohomology, teardrop_homology, teardrop_orbifold_chern,
    AbelianGroup, Brieskorn, Condition, Error, HypothesisReport, Int, OrbitSpec, Rational, Report, Space, WCISpace,
    WPSpace, Weights,
};
use serde_json::{json, Map, Value};

use crate::Failure;

/// Longest path accepted by `verify scalar-cz`; the crossing walk is linear in `T`.
pub const MAX_CROSSING_LENGTH: i64 = 1_000_000;

pub fn int(v: &Int) -> Value {
    i64::try_from(*v)
        .map(Value::from)
        .unwrap_or_else(|_| Value::String(v.to_string()))
}

pub fn ints(vs: &[Int]) -> Value {
    Value::Array(vs.iter().map(int).collect())
}

pub fn rational(r: &Rational<Int>) -> Value {
    json!({ "num": int(r.numer()), "den": int(r.denom()) })
}

fn group(g: &AbelianGroup<Int>) -> Value {
    match g {
        AbelianGroup::Trivial => json!({ "kind": "trivial" }),
        AbelianGroup::Free { rank } => json!({ "kind": "free", "rank": rank }),
        AbelianGroup::Cyclic { order } => json!({ "kind": "cyclic", "order": int(order) }),
    }
}

fn condition(c: &Condition) -> Value {
    json!({ "status": c.label(), "reason": c.reason() })
}

fn hypotheses(h: &HypothesisReport<Int>) -> Value {
    json!({
        "simply_connected": condition(&h.simply_connected),
        "manifold_total_space": condition(&h.manifold_total_space),
    })
}

fn weight_vector(ws: &[Int]) -> Result<Weights, Failure> {
    Ok(Weights::new(ws.to_vec())?)
}

fn space_json(space: &Space<Int>) -> Value {
    match space {
        Space::Wps(s) => json!({ "kind": "wps", "weights": ints(s.weights.as_slice()) }),
        Space::Wci(s) => json!({
            "kind": "wci",
            "weights": ints(s.weights().as_slice()),
            "degrees": ints(s.degrees()),
        }),
    }
}

fn brieskorn_json(a: &Brieskorn) -> Value {
    json!({
        "kind": "brieskorn",
        "exponents": ints(a.exponents()),
        "l": int(a.l()),
        "l2": int(a.l2()),
        "weights": ints(&a.weights()),
    })
}

/// Appends the fields shared by every index record.
fn push_report(map: &mut Map<String, Value>, r: &Report) {
    map.insert("index".into(), int(&r.index));
    map.insert(
        "b_constant".into(),
        r.b_constant.as_ref().map(int).unwrap_or(Value::Null),
    );
    map.insert("branch".into(), Value::from(r.branch.as_str()));
    map.insert("paper_ref".into(), Value::from(r.branch.formula()));
    map.insert("extrapolated".into(), Value::from(r.extrapolated));
    map.insert(
        "notes".into(),
        Value::Array(r.notes.iter().map(|n| Value::from(n.as_str())).collect()),
    );
}

pub fn weights_record(ws: &[Int]) -> Result<Value, Failure> {
    let w = weight_vector(ws)?;
    let inv = invariants(&w)?;
    Ok(json!({
        "weights": ints(w.as_slice()),
        "sum": int(&inv.sum),
        "product": int(&inv.product),
        "d": ints(&inv.d),
        "e": ints(&inv.e),
        "a_w": int(&inv.a_w),
        "reduced": ints(inv.reduced.as_slice()),
        "well_formed": inv.well_formed,
        "fw_degree": int(&fw_degree(&w)?),
        "symplectic_area": rational(&symplectic_area(&w)?),
    }))
}

fn principal_record(space: Space<Int>) -> Result<Value, Failure> {
    let report = mu_principal(&space)?;
    let hyp = check_theorem_hypotheses(&space)?;
    let mut map = Map::new();
    map.insert("space".into(), space_json(&space));
    push_report(&mut map, &report);
    map.insert("hypotheses".into(), hypotheses(&hyp));
    Ok(Value::Object(map))
}

pub fn principal_wps(ws: &[Int]) -> Result<Value, Failure> {
    principal_record(Space::Wps(WPSpace::new(weight_vector(ws)?)))
}

pub fn principal_wci(ws: &[Int], degrees: &[Int]) -> Result<Value, Failure> {
    principal_record(Space::Wci(WCISpace::new(weight_vector(ws)?, degrees.to_vec())?))
}

pub fn principal_brieskorn(exponents: &[Int]) -> Result<Value, Failure> {
    let a = Brieskorn::new(exponents.to_vec())?;
    let report = mu_principal_brieskorn(&a)?;
    let hyp = check_theorem_hypotheses(&Space::Wci(brieskorn_to_wci(&a)?))?;
    let mut map = Map::new();
    map.insert("space".into(), brieskorn_json(&a));
    push_report(&mut map, &report);
    map.insert("hypotheses".into(), hypotheses(&hyp));
    Ok(Value::Object(map))
}

fn orbit_record(space: Value, weights: &[Int], support: &[usize], report: Report) -> Result<Value, Failure> {
    let orbit = OrbitSpec::new(weights, support.iter().copied())?;
    let mut map = Map::new();
    map.insert("space".into(), space);
    map.insert(
        "support".into(),
        Value::Array(orbit.support().iter().map(|&j| Value::from(j)).collect()),
    );
    map.insert("isotropy".into(), int(orbit.isotropy()));
    push_report(&mut map, &report);
    Ok(Value::Object(map))
}

pub fn orbit_wps(ws: &[Int], support: &[usize], allow_extrapolation: bool) -> Result<Value, Failure> {
    let w = weight_vector(ws)?;
    let report = mu_orbit_wps(&w, support.iter().copied(), allow_extrapolation)?;
    let space = space_json(&Space::Wps(WPSpace::new(w.clone())));
    orbit_record(space, w.as_slice(), support, report)
}

pub fn orbit_brieskorn(exponents: &[Int], support: &[usize], allow_extrapolation: bool) -> Result<Value, Failure> {
    let a = Brieskorn::new(exponents.to_vec())?;
    let report = mu_orbit_brieskorn(&a, support.iter().copied(), allow_extrapolation)?;
    orbit_record(brieskorn_json(&a), &a.weights(), support, report)
}

/// Teardrop invariants with (co)homology tabulated for degrees `0..=max_degree`.
pub fn teardrop_record(m: &Int, max_degree: u32) -> Result<Value, Failure> {
    let mut homology = Map::new();
    let mut cohomology = Map::new();
    for q in 0..=max_degree {
        homology.insert(q.to_string(), group(&teardrop_homology(m, q)?));
        cohomology.insert(q.to_string(), group(&teardrop_cohomology(m, q)?));
    }
    Ok(json!({
        "m": int(m),
        "homology": homology,
        "cohomology": cohomology,
        "orbifold_chern": rational(&teardrop_orbifold_chern(m)?),
        "p_star_factor": rational(&p_star_factor(m)?),
    }))
}

/// Quadrature of the chart integral against `−1/w0`, plus the exact area
/// chain when `gcd(w0, w1) = 1`.
pub fn chart_record(w0: u64, w1: u64, tol: f64, budget: usize) -> Result<Value, Failure> {
    let q = chart_integral::<f64>(w0, w1, tol, budget)?;
    let expected = -1.0 / w0 as f64;
    let abs_error = (q.value - expected).abs();
    let mut map = Map::new();
    map.insert("w0".into(), Value::from(w0));
    map.insert("w1".into(), Value::from(w1));
    map.insert("tol".into(), Value::from(tol));
    map.insert("budget".into(), Value::from(budget));
    map.insert("value".into(), Value::from(q.value));
    map.insert("expected".into(), rational(&Rational::new(-1, Int::from(w0))?));
    map.insert("abs_error".into(), Value::from(abs_error));
    map.insert("estimated_error".into(), Value::from(q.estimated_error));
    map.insert("evaluations".into(), Value::from(q.evaluations));
    if let Ok(pair) = Weights::new(vec![Int::from(w0), Int::from(w1)]) {
        let steps = area_chain_steps(&pair)?;
        map.insert(
            "area_chain".into(),
            json!({
                "chart_value": rational(&steps.chart_value),
                "chart_group_order": int(&steps.chart_group_order),
                "line_area": rational(&steps.line_area),
                "embedding_degree": int(&steps.embedding_degree),
                "area": rational(&steps.area),
            }),
        );
    }
    map.insert("passed".into(), Value::from(abs_error <= tol));
    if abs_error > tol {
        return Err(Failure::from(Error::Convergence {
            tol,
            achieved: abs_error,
            evaluations: q.evaluations,
        }));
    }
    Ok(Value::Object(map))
}

pub fn winding_record(rates: &[i64]) -> Result<Value, Failure> {
    let samples = min_winding_samples(rates);
    let w = det_winding::<f64>(rates, samples)?;
    let expected: i64 = rates.iter().sum();
    if w.winding != expected {
        return Err(Failure::check(format!(
            "winding {} differs from the rate sum {expected}",
            w.winding
        )));
    }
    Ok(json!({
        "rates": rates,
        "samples": samples,
        "winding": w.winding,
        "residual": w.residual,
        "expected": expected,
        "passed": true,
    }))
}

pub fn scalar_cz_record(t: &Rational<Int>) -> Result<Value, Failure> {
    let closed = scalar_cz(t)?;
    if *t > Rational::from_integer(Int::from(MAX_CROSSING_LENGTH)) {
        return Err(Failure::from(Error::Unsupported(format!(
            "path length {t} exceeds {MAX_CROSSING_LENGTH}, too long for the crossing walk"
        ))));
    }
    let oracle = crossing_oracle_scalar(t)?;
    if closed != oracle {
        return Err(Failure::check(format!(
            "closed form {closed} differs from the crossing count {oracle}"
        )));
    }
    Ok(json!({
        "T": rational(t),
        "scalar_cz": int(&closed),
        "crossing_oracle": int(&oracle),
        "passed": true,
    }))
}
