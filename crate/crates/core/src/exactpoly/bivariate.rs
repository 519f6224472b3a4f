use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial in two commuting variables `x`, `y` with big-integer
/// coefficients. Exponents are signed so that Laurent classes survive the
/// substitution `L ↦ xy`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// `c · x^p y^q`.
    pub fn monomial(c: impl Into<BigInt>, p: i64, q: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c.into());
        out
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for ((p, q), c) in terms {
            out.add_term(p, q, c.into());
        }
        out
    }

    /// Adds `c · x^p y^q` in place.
    pub fn add_term(&mut self, p: i64, q: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: i64, q: i64) -> BigInt {
        self.terms
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms, sorted by `(p, q)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        Self::from_terms(self.terms().map(|((p, q), c)| ((q, p), c.clone())))
    }

    /// Value at integer `(x, y)`. Negative exponents require `±1` arguments.
    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let pow = |v: &BigInt, e: i64| -> BigInt {
            if e >= 0 {
                v.pow(e as u32)
            } else {
                assert!(v.abs().is_one(), "negative power of a non-unit");
                v.pow((-e) as u32)
            }
        };
        self.terms
            .iter()
            .map(|(&(p, q), c)| c * pow(x, p) * pow(y, q))
            .sum()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((p, q), c)) in self.terms().enumerate() {
            let abs = c.abs();
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if (p, q) == (0, 0) || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            for (var, e) in [("x", p), ("y", q)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for ((p, q), c) in rhs.terms() {
            self.add_term(p, q, c.clone());
        }
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        for ((p, q), c) in rhs.terms() {
            self.add_term(p, q, -c);
        }
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: BiPoly) -> BiPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(p1, q1), a) in &self.terms {
            for (&(p2, q2), b) in &rhs.terms {
                out.add_term(p1 + p2, q1 + q2, a * b);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

/// Serialized as a sorted array of `[[p, q], "coefficient"]` pairs.
impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|((p, q), c)| ([p, q], c.to_string())))
    }
}

impl<'de> Deserialize<'de> for BiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<([i64; 2], String)> = Vec::deserialize(d)?;
        let mut out = BiPoly::zero();
        for ([p, q], c) in raw {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            out.add_term(p, q, c);
        }
        Ok(out)
    }
}
