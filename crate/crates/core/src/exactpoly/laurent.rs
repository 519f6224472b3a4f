use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Univariate Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; both ends of the
/// coefficient vector are nonzero, and the zero polynomial has no
/// coefficients at all. The variable is named by context (`q`, `L` or `t`).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c · v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// The variable raised to `exp`.
    pub fn var_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `Σ coeffs[i] · v^{low + i}`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `v^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Sum of all coefficients, i.e. the value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at an integer point; only meaningful for nonzero `v` when
    /// negative exponents are present.
    pub fn eval(&self, v: &BigInt) -> Result<BigInt> {
        if self.low < 0 && v.is_zero() {
            return Err(Error::Domain("Laurent polynomial evaluated at zero".into()));
        }
        // Horner on the polynomial part, then the shift.
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        if self.low >= 0 {
            Ok(acc * v.pow(self.low as u32))
        } else {
            let den = v.pow((-self.low) as u32);
            let (q, r) = acc.div_rem(&den);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::Domain("value is not an integer".into()))
            }
        }
    }

    /// All coefficients non-negative.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Invariant under `v ↦ v^{-1}` up to the shift that centres it, i.e.
    /// the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Invariant under `v ↦ v^{-1}` exactly.
    pub fn is_symmetric(&self) -> bool {
        self.is_palindromic() && self.min_exponent() == self.max_exponent().map(|e| -e)
    }

    /// Exact quotient `self / den`; fails if the remainder is nonzero.
    pub fn exact_divide(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        if den.is_zero() {
            return Err(Error::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both are v^low times an ordinary polynomial with nonzero constant
        // term; divide those from the top.
        let num = &self.coeffs;
        let d = &den.coeffs;
        if num.len() < d.len() {
            return Err(inexact(self, den));
        }
        let lead = d.last().unwrap();
        let mut rem = num.clone();
        let qlen = num.len() - d.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = &rem[qi + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(inexact(self, den));
            }
            for (j, dc) in d.iter().enumerate() {
                rem[qi + j] -= &c * dc;
            }
            quot[qi] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact(self, den));
        }
        Ok(Self::from_dense(self.low - den.low, quot))
    }

    /// Formats with the given variable name.
    pub fn display(&self, var: &'static str) -> impl fmt::Display + '_ {
        Displayed { poly: self, var }
    }
}

fn inexact(num: &LaurentPoly, den: &LaurentPoly) -> Error {
    Error::InexactDivision(format!("({}) / ({})", num.display("q"), den.display("q")))
}

struct Displayed<'a> {
    poly: &'a LaurentPoly,
    var: &'static str,
}

impl fmt::Display for Displayed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.poly.terms().enumerate() {
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
            let show_coeff = e == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

fn add_into(acc: &mut LaurentPoly, rhs: &LaurentPoly, sign: bool) {
    if rhs.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if sign { rhs.clone() } else { -rhs };
        return;
    }
    let low = acc.low.min(rhs.low);
    let high = acc.max_exponent().unwrap().max(rhs.max_exponent().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (i, c) in std::mem::take(&mut acc.coeffs).into_iter().enumerate() {
        coeffs[(acc.low - low) as usize + i] = c;
    }
    let off = (rhs.low - low) as usize;
    for (i, c) in rhs.coeffs.iter().enumerate() {
        if sign {
            coeffs[off + i] += c;
        } else {
            coeffs[off + i] -= c;
        }
    }
    *acc = LaurentPoly::from_dense(low, coeffs);
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, true);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

/// Serialized as a sorted array of `[exponent, "coefficient"]` pairs.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(e, c)| (e, c.to_string())))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
