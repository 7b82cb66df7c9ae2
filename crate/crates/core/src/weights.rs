//! Weight vectors of weighted projective spaces and their invariants.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::exact_arith::{gcd_all, lcm_all, product, sum, ExactInt, Rational};

/// Positive integer weights `(w_0, …, w_n)`, `n ≥ 1`, with overall gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector<T> {
    w: Vec<T>,
}

impl<T: ExactInt> WeightVector<T> {
    pub fn new(raw: Vec<T>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(domain(format!(
                "a weight vector needs at least two entries, got {}",
                raw.len()
            )));
        }
        if let Some(bad) = raw.iter().find(|x| !x.is_positive()) {
            return Err(domain(format!("weights must be positive, got {bad}")));
        }
        let g = gcd_all(&raw)?;
        if !g.is_one() {
            return Err(Error::NotCoprime { gcd: g.to_string() });
        }
        Ok(WeightVector { w: raw })
    }

    pub fn as_slice(&self) -> &[T] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Complex dimension `n` of `P(w)`.
    pub fn dim(&self) -> usize {
        self.w.len() - 1
    }

    /// `|w|`
    pub fn sum(&self) -> Result<T> {
        sum(&self.w, "weight sum")
    }

    /// `‖w‖`
    pub fn product(&self) -> Result<T> {
        product(&self.w, "weight product")
    }

    pub fn into_inner(self) -> Vec<T> {
        self.w
    }
}

impl<T: ExactInt> fmt::Display for WeightVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.w.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All derived quantities of a weight vector, computed together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightInvariants<T> {
    pub sum: T,
    pub product: T,
    /// `d_j`: gcd of all weights except `w_j`.
    pub d: Vec<T>,
    /// `e_j`: lcm of all `d_i` except `d_j`.
    pub e: Vec<T>,
    /// `a_w`: lcm of all `d_j`.
    pub a_w: T,
    /// `w_j / e_j`.
    pub reduced: WeightVector<T>,
    pub well_formed: bool,
}

fn omit<T: Clone>(xs: &[T], j: usize) -> Vec<T> {
    xs.iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, x)| x.clone())
        .collect()
}

/// Computes `|w|`, `‖w‖`, `d_j`, `e_j`, `a_w`, the reduced weights and
/// well-formedness.
///
/// For two weights the "all but one" folds are over a single element, so
/// `d = (w_1, w_0)`. Returns [`Error::Internal`] if some `e_j` fails to divide
/// `w_j` or the reduced vector is not a valid weight vector.
pub fn invariants<T: ExactInt>(w: &WeightVector<T>) -> Result<WeightInvariants<T>> {
    let ws = w.as_slice();
    let d = (0..ws.len())
        .map(|j| gcd_all(&omit(ws, j)))
        .collect::<Result<Vec<_>>>()?;
    let e = (0..ws.len())
        .map(|j| lcm_all(&omit(&d, j)))
        .collect::<Result<Vec<_>>>()?;
    let a_w = lcm_all(&d)?;

    let mut reduced = Vec::with_capacity(ws.len());
    for (j, (wj, ej)) in ws.iter().zip(&e).enumerate() {
        if !wj.is_multiple_of(ej) {
            return Err(Error::Internal(format!(
                "e_{j} = {ej} does not divide w_{j} = {wj} for weights {w}"
            )));
        }
        reduced.push(wj.clone() / ej.clone());
    }
    let reduced = WeightVector::new(reduced)
        .map_err(|err| Error::Internal(format!("reduced weights of {w} are invalid: {err}")))?;

    Ok(WeightInvariants {
        sum: w.sum()?,
        product: w.product()?,
        well_formed: a_w.is_one(),
        d,
        e,
        a_w,
        reduced,
    })
}

/// Class of the symplectic form in `H²(P(w); ℚ) ≅ ℚ`: `−1/‖w‖`.
pub fn symplectic_area<T: ExactInt>(w: &WeightVector<T>) -> Result<Rational<T>> {
    Rational::new(-T::one(), w.product()?)
}

/// Degree of `f_w : P^n → P(w)`, `[z_j] ↦ [z_j^{w_j}]`: `‖w‖ / gcd(w) = ‖w‖`.
pub fn fw_degree<T: ExactInt>(w: &WeightVector<T>) -> Result<T> {
    let g = gcd_all(w.as_slice())?;
    Ok(w.product()? / g)
}

/// Multiplier of `p^*: H²(P(w); ℚ) → H²(BP(w); ℚ)` induced by the
/// classifying-space projection: `‖w‖`.
pub fn classifying_multiplier<T: ExactInt>(w: &WeightVector<T>) -> Result<T> {
    w.product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn wv(xs: &[i64]) -> WeightVector<i64> {
        WeightVector::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(WeightVector::new(vec![4i64, 4, 5, 14]).is_ok());
        assert_eq!(
            WeightVector::new(vec![2i64, 4, 6]),
            Err(Error::NotCoprime { gcd: "2".into() })
        );
        assert!(WeightVector::new(vec![1i64, 7]).is_ok());
        assert!(matches!(WeightVector::new(vec![1i64]), Err(Error::Domain(_))));
        assert!(matches!(WeightVector::new(vec![1i64, 0, 3]), Err(Error::Domain(_))));
        assert!(matches!(WeightVector::new(vec![1i64, -2]), Err(Error::Domain(_))));
    }

    #[test]
    fn invariants_of_4_4_5_14() {
        let inv = invariants(&wv(&[4, 4, 5, 14])).unwrap();
        assert_eq!(inv.sum, 27);
        assert_eq!(inv.product, 1120);
        assert_eq!(inv.d, vec![1, 1, 2, 1]);
        assert_eq!(inv.e, vec![2, 2, 1, 2]);
        assert_eq!(inv.a_w, 2);
        assert_eq!(inv.reduced.as_slice(), &[2, 2, 5, 7]);
        assert!(!inv.well_formed);
    }

    #[test]
    fn invariants_small_cases() {
        let inv = invariants(&wv(&[1, 1, 1])).unwrap();
        assert_eq!(inv.d, vec![1, 1, 1]);
        assert_eq!(inv.a_w, 1);
        assert_eq!(inv.reduced.as_slice(), &[1, 1, 1]);
        assert!(inv.well_formed);

        let inv = invariants(&wv(&[1, 5])).unwrap();
        assert_eq!(inv.d, vec![5, 1]);
        assert_eq!(inv.e, vec![1, 5]);
        assert_eq!(inv.a_w, 5);
        assert_eq!(inv.reduced.as_slice(), &[1, 1]);
        assert!(!inv.well_formed);
    }

    #[test]
    fn area_and_degrees() {
        assert_eq!(symplectic_area(&wv(&[1, 1])).unwrap(), Rational::new(-1, 1).unwrap());
        assert_eq!(
            symplectic_area(&wv(&[4, 4, 5, 14])).unwrap(),
            Rational::new(-1, 1120).unwrap()
        );
        assert_eq!(symplectic_area(&wv(&[1, 3])).unwrap(), Rational::new(-1, 3).unwrap());
        assert_eq!(fw_degree(&wv(&[4, 4, 5, 14])).unwrap(), 1120);
        assert_eq!(fw_degree(&wv(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(fw_degree(&wv(&[2, 3])).unwrap(), 6);
        assert_eq!(classifying_multiplier(&wv(&[1, 4])).unwrap(), 4);
        assert_eq!(classifying_multiplier(&wv(&[1, 4])).unwrap(), 1i64.lcm(&4));
        assert_eq!(classifying_multiplier(&wv(&[1, 1, 1, 1])).unwrap(), 1);
        assert_eq!(classifying_multiplier(&wv(&[5, 5, 5, 2])).unwrap(), 250);
    }

    #[test]
    fn product_overflow_reported() {
        let w = WeightVector::new(vec![i64::MAX / 2, 3, 5]).unwrap();
        assert_eq!(w.product(), Err(Error::Overflow("weight product")));
    }

    fn coprime_weights() -> impl Strategy<Value = WeightVector<i64>> {
        prop::collection::vec(1i64..=200, 2..=8).prop_filter_map("gcd 1", |xs| WeightVector::new(xs).ok())
    }

    proptest! {
        #[test]
        fn invariant_relations(w in coprime_weights()) {
            let inv = invariants(&w).unwrap();
            for (i, di) in inv.d.iter().enumerate() {
                for dj in &inv.d[i + 1..] {
                    prop_assert_eq!(di.gcd(dj), 1);
                }
            }
            prop_assert_eq!(inv.a_w, inv.d.iter().product::<i64>());
            for (wj, ej) in w.as_slice().iter().zip(&inv.e) {
                prop_assert_eq!(wj % ej, 0);
            }
            prop_assert!(invariants(&inv.reduced).unwrap().well_formed);
            prop_assert_eq!(inv.well_formed, inv.d.iter().all(|d| *d == 1));
            let area = symplectic_area(&w).unwrap();
            let deg = Rational::from_integer(fw_degree(&w).unwrap());
            prop_assert_eq!(area.checked_mul(&deg).unwrap(), Rational::from_integer(-1));
        }
    }
}
