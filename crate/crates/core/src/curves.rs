//! Diamonds of the building blocks: curves, their symmetric powers,
//! Jacobians and projective spaces.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{binom_nat, BiPoly};
use crate::hodge::HodgeDiamond;

fn check_nonneg(name: &str, v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::Precondition(format!("{name} = {v} must be >= 0")))
}

fn nat_binom(n: usize, m: usize) -> BigUint {
    binom_nat(n as u64, m as u64).magnitude().clone()
}

/// Genus-`g` curve: `h^{0,0} = h^{1,1} = 1`, `h^{1,0} = h^{0,1} = g`.
pub fn curve_diamond(g: i64) -> Result<HodgeDiamond> {
    let g = BigUint::from(check_nonneg("g", g)?);
    HodgeDiamond::new(vec![
        vec![BigUint::one(), g.clone()],
        vec![g, BigUint::one()],
    ])
}

/// `P^n`: `h^{p,p} = 1`.
pub fn projective_space_diamond(n: i64) -> Result<HodgeDiamond> {
    let n = check_nonneg("n", n)?;
    HodgeDiamond::from_fn(n, |p, q| {
        if p == q {
            BigUint::one()
        } else {
            BigUint::zero()
        }
    })
}

/// Jacobian of a genus-`g` curve: `h^{p,q} = binom(g,p)·binom(g,q)`.
pub fn jacobian_diamond(g: i64) -> Result<HodgeDiamond> {
    let g = check_nonneg("g", g)?;
    HodgeDiamond::from_fn(g, |p, q| nat_binom(g, p) * nat_binom(g, q))
}

/// Power series in `t` with `BiPoly` coefficients, truncated at a fixed order.
#[derive(Clone, Debug, PartialEq)]
struct TSeries {
    coeffs: Vec<BiPoly>,
}

impl TSeries {
    fn new(order: usize) -> Self {
        Self {
            coeffs: vec![BiPoly::zero(); order + 1],
        }
    }

    fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `(1 + u·t)^e`.
    fn binomial_power(u: &BiPoly, e: usize, order: usize) -> Self {
        let mut s = Self::new(order);
        let mut upow = BiPoly::one();
        for a in 0..=order.min(e) {
            s.coeffs[a] = &upow * &BiPoly::monomial(binom_nat(e as u64, a as u64), 0, 0);
            upow = &upow * u;
        }
        s
    }

    /// `1 / (1 - u·t)`.
    fn geometric(u: &BiPoly, order: usize) -> Self {
        let mut s = Self::new(order);
        let mut upow = BiPoly::one();
        for c in s.coeffs.iter_mut() {
            *c = upow.clone();
            upow = &upow * u;
        }
        s
    }

    fn mul(&self, other: &TSeries) -> TSeries {
        let order = self.order().min(other.order());
        let mut out = Self::new(order);
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(order + 1 - a) {
                out.coeffs[a + b] += &(ca * cb);
            }
        }
        out
    }
}

/// `n`-th symmetric power of a genus-`g` curve.
///
/// The Hodge polynomials `Σ h^{p,q}(Sym^n C) x^p y^q` are the coefficients of
/// `t^n` in `(1+xt)^g (1+yt)^g / ((1-t)(1-xyt))`; the series is truncated at
/// `t^n`.
pub fn sym_curve_diamond(g: i64, n: i64) -> Result<HodgeDiamond> {
    let g = check_nonneg("g", g)?;
    let n = check_nonneg("n", n)?;
    let series = TSeries::binomial_power(&BiPoly::x(), g, n)
        .mul(&TSeries::binomial_power(&BiPoly::y(), g, n))
        .mul(&TSeries::geometric(&BiPoly::one(), n))
        .mul(&TSeries::geometric(&(BiPoly::x() * BiPoly::y()), n));
    let hodge_poly = &series.coeffs[n];
    let mut table = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for ((p, q), c) in hodge_poly.terms() {
        if c.is_negative() {
            return Err(Error::Consistency(format!(
                "negative Hodge number h^{{{p},{q}}} = {c} for Sym^{n} of genus {g}"
            )));
        }
        let (Ok(pu), Ok(qu)) = (usize::try_from(p), usize::try_from(q)) else {
            return Err(Error::Consistency(format!(
                "exponent ({p},{q}) out of range"
            )));
        };
        if pu > n || qu > n {
            return Err(Error::Consistency(format!(
                "exponent ({p},{q}) exceeds dimension {n}"
            )));
        }
        table[pu][qu] = c.magnitude().clone();
    }
    HodgeDiamond::new(table)
}

/// The E-polynomial `1 - g x - g y + xy` of a genus-`g` curve.
pub fn curve_e_polynomial(g: i64) -> BiPoly {
    BiPoly::from_terms([
        ((0, 0), BigInt::one()),
        ((1, 0), BigInt::from(-g)),
        ((0, 1), BigInt::from(-g)),
        ((1, 1), BigInt::one()),
    ])
}
