//! Exact integer and rational arithmetic.
//!
//! Everything here is generic over [`ExactInt`], which is implemented for the
//! signed primitive integers and for [`num_bigint::BigInt`]. Primitive
//! instantiations use checked arithmetic throughout and report
//! [`Error::Overflow`] instead of wrapping.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Float, FromPrimitive, Signed, ToPrimitive};

use crate::error::{domain, Error, Result};

/// Integer types usable for exact computations.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromStr
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + FromStr
        + Send
        + Sync
        + 'static
{
}

/// Lifts a small constant into `T`.
pub fn int<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("every ExactInt holds an i64 constant")
}

pub(crate) fn add<T: ExactInt>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub<T: ExactInt>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul<T: ExactInt>(a: &T, b: &T, ctx: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sum<'a, T: ExactInt>(xs: impl IntoIterator<Item = &'a T>, ctx: &'static str) -> Result<T> {
    xs.into_iter().try_fold(T::zero(), |acc, x| add(&acc, x, ctx))
}

pub(crate) fn product<'a, T: ExactInt>(xs: impl IntoIterator<Item = &'a T>, ctx: &'static str) -> Result<T> {
    xs.into_iter().try_fold(T::one(), |acc, x| mul(&acc, x, ctx))
}

/// Prime factorization `n = Π p^e`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization<T> {
    pairs: Vec<(T, u32)>,
}

impl<T: ExactInt> Factorization<T> {
    pub fn pairs(&self) -> &[(T, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = &T> {
        self.pairs.iter().map(|(p, _)| p)
    }

    /// Exponent of `p` in the factorization, zero if absent.
    pub fn exponent_of(&self, p: &T) -> u32 {
        self.pairs.iter().find(|(q, _)| q == p).map_or(0, |(_, e)| *e)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Multiplies the factorization back out.
    pub fn product(&self) -> Result<T> {
        let mut acc = T::one();
        for (p, e) in &self.pairs {
            for _ in 0..*e {
                acc = mul(&acc, p, "factorization product")?;
            }
        }
        Ok(acc)
    }
}

/// Iterates trial divisors 2, 3, 5, 7, 11, 13, ... (6k ± 1 wheel).
struct TrialDivisors<T> {
    next: T,
    step_four: bool,
}

impl<T: ExactInt> TrialDivisors<T> {
    fn new() -> Self {
        TrialDivisors {
            next: int(2),
            step_four: false,
        }
    }
}

impl<T: ExactInt> Iterator for TrialDivisors<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let current = self.next.clone();
        let two: T = int(2);
        let three: T = int(3);
        self.next = if current < three {
            current.checked_add(&T::one())?
        } else if current == three {
            int(5)
        } else {
            let step = if self.step_four { int(4) } else { two };
            self.step_four = !self.step_four;
            current.checked_add(&step)?
        };
        Some(current)
    }
}

// d*d > n, treating overflow of d*d as "greater".
fn square_exceeds<T: ExactInt>(d: &T, n: &T) -> bool {
    match d.checked_mul(d) {
        Some(sq) => &sq > n,
        None => true,
    }
}

/// Factorizes a positive integer by trial division.
pub fn factorize<T: ExactInt>(n: &T) -> Result<Factorization<T>> {
    if !n.is_positive() {
        return Err(domain(format!("cannot factorize non-positive integer {n}")));
    }
    let mut rest = n.clone();
    let mut pairs = Vec::new();
    for d in TrialDivisors::<T>::new() {
        if square_exceeds(&d, &rest) {
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&d) {
            rest = rest / d.clone();
            e += 1;
        }
        if e > 0 {
            pairs.push((d, e));
        }
    }
    if rest > T::one() {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime<T: ExactInt>(p: &T) -> bool {
    if *p < int(2) {
        return false;
    }
    for d in TrialDivisors::<T>::new() {
        if square_exceeds(&d, p) {
            return true;
        }
        if p.is_multiple_of(&d) {
            return false;
        }
    }
    true
}

/// p-adic valuation: the largest `e` with `p^e | n`.
pub fn ord_p<T: ExactInt>(n: &T, p: &T) -> Result<u32> {
    if !n.is_positive() {
        return Err(domain(format!("valuation of non-positive integer {n}")));
    }
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    let mut rest = n.clone();
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest = rest / p.clone();
        e += 1;
    }
    Ok(e)
}

fn check_positive_list<T: ExactInt>(xs: &[T], what: &str) -> Result<()> {
    if xs.is_empty() {
        return Err(domain(format!("{what} of an empty list")));
    }
    if let Some(bad) = xs.iter().find(|x| !x.is_positive()) {
        return Err(domain(format!("{what} requires positive entries, got {bad}")));
    }
    Ok(())
}

/// gcd of a nonempty list of positive integers.
pub fn gcd_all<T: ExactInt>(xs: &[T]) -> Result<T> {
    check_positive_list(xs, "gcd")?;
    Ok(xs[1..].iter().fold(xs[0].clone(), |acc, x| acc.gcd(x)))
}

/// lcm of a nonempty list of positive integers.
pub fn lcm_all<T: ExactInt>(xs: &[T]) -> Result<T> {
    check_positive_list(xs, "lcm")?;
    xs[1..].iter().try_fold(xs[0].clone(), |acc, x| {
        let g = acc.gcd(x);
        mul(&(acc / g), x, "lcm")
    })
}

/// A normalized fraction: `gcd(|num|, den) = 1`, `den ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational<T> {
    num: T,
    den: T,
}

impl<T: ExactInt> Rational<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            return Err(domain("rational with zero denominator"));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = sub(&T::zero(), &num, "rational normalization")?;
            den = sub(&T::zero(), &den, "rational normalization")?;
        }
        Ok(Rational { num, den })
    }

    pub fn from_integer(n: T) -> Self {
        Rational { num: n, den: T::one() }
    }

    pub fn zero() -> Self {
        Self::from_integer(T::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(T::one())
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_integer(&self) -> Option<T> {
        self.is_integer().then(|| self.num.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> T {
        self.num.div_floor(&self.den)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Ok(Rational {
            num: sub(&T::zero(), &self.num, "rational negation")?,
            den: self.den.clone(),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let g = self.den.gcd(&other.den);
        let left = mul(&self.num, &(other.den.clone() / g.clone()), "rational add")?;
        let right = mul(&other.num, &(self.den.clone() / g.clone()), "rational add")?;
        let den = mul(&(self.den.clone() / g), &other.den, "rational add")?;
        Self::new(add(&left, &right, "rational add")?, den)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (g1, g2) = (nonzero(g1), nonzero(g2));
        let num = mul(
            &(self.num.clone() / g1.clone()),
            &(other.num.clone() / g2.clone()),
            "rational mul",
        )?;
        let den = mul(&(self.den.clone() / g2), &(other.den.clone() / g1), "rational mul")?;
        Self::new(num, den)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(domain("rational division by zero"));
        }
        self.checked_mul(&other.recip()?)
    }

    pub fn scale(&self, k: &T) -> Result<Self> {
        self.checked_mul(&Self::from_integer(k.clone()))
    }

    pub fn to_float<F: Float>(&self) -> F {
        let n = F::from(self.num.clone()).unwrap_or_else(F::nan);
        let d = F::from(self.den.clone()).unwrap_or_else(F::nan);
        n / d
    }
}

fn nonzero<T: ExactInt>(g: T) -> T {
    if g.is_zero() {
        T::one()
    } else {
        g
    }
}

impl<T: ExactInt> Ord for Rational<T> {
    // Continued-fraction comparison; never forms cross products.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.num.clone(), self.den.clone());
        let (mut c, mut d) = (other.num.clone(), other.den.clone());
        loop {
            let (qa, ra) = a.div_mod_floor(&b);
            let (qc, rc) = c.div_mod_floor(&d);
            let ord = match qa.cmp(&qc) {
                Ordering::Equal => match (ra.is_zero(), rc.is_zero()) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    (false, false) => {
                        // ra/b vs rc/d  <=>  d/rc vs b/ra
                        (a, b, c, d) = (d, rc, b, ra);
                        continue;
                    }
                },
                o => o,
            };
            return ord;
        }
    }
}

impl<T: ExactInt> PartialOrd for Rational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: ExactInt> Display for Rational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{:?}/{:?}", self.num, self.den)
        }
    }
}

impl<T: Debug> Debug for Rational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.num, self.den)
    }
}

impl<T: ExactInt> FromStr for Rational<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str| {
            part.trim()
                .parse::<T>()
                .map_err(|_| domain(format!("invalid rational `{s}`")))
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_integer(parse(s)?)),
        }
    }
}
