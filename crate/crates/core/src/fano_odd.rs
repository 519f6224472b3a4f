//! Hodge diamonds of `F_k(Q_1 ∩ Q_2)` for `Q_1 ∩ Q_2 ⊂ P^{2g+1}`, the
//! hyperelliptic case.
//!
//! The cohomology in degree `m` decomposes as a sum over `j` of
//! `H^{g-j}(Jac C)`, Tate-twisted into weight `m`, with multiplicity the
//! coefficient of `q^{d-m}` in the kernel returned by [`cvx_kernel`].

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{binom_nat, LaurentPoly};
use crate::hodge::HodgeDiamond;

/// Parameters `(g, k)` with `g >= 2` and `0 <= k <= g - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddFanoParams {
    g: i64,
    k: i64,
}

impl OddFanoParams {
    pub fn new(g: i64, k: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::Precondition(format!("g = {g} must be >= 2")));
        }
        if !(0..=g - 2).contains(&k) {
            return Err(Error::Precondition(format!(
                "k = {k} must lie in 0..={}",
                g - 2
            )));
        }
        Ok(Self { g, k })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// `(k+1)(2g-2k-1)`.
    pub fn dimension(&self) -> i64 {
        (self.k + 1) * (2 * self.g - 2 * self.k - 1)
    }
}

fn one_minus_q(e: i64) -> LaurentPoly {
    &LaurentPoly::one() - &LaurentPoly::var_pow(e)
}

/// The Laurent polynomial
/// `q^{-(b-a+1)(2a-1)} (1-q^{4b}) Π_{l=b-a+2}^{a+b-2}(1-q^{2l}) / Π_{l=1}^{2a-2}(1-q^{2l})`
/// whose coefficients are the multiplicities `N(a, b; c)`.
pub fn cvx_kernel(a: i64, b: i64) -> Result<LaurentPoly> {
    if a < 2 || b < a - 1 {
        return Err(Error::Precondition(format!(
            "kernel N({a},{b};·) needs a >= 2 and b >= a - 1"
        )));
    }
    let num: LaurentPoly = std::iter::once(one_minus_q(4 * b))
        .chain((b - a + 2..=a + b - 2).map(|l| one_minus_q(2 * l)))
        .product();
    let den: LaurentPoly = (1..=2 * a - 2).map(|l| one_minus_q(2 * l)).product();
    let quotient = num.exact_divide(&den)?;
    Ok(quotient.shift(-(b - a + 1) * (2 * a - 1)))
}

/// `N(a, b; c)`: the coefficient of `q^c` in [`cvx_kernel`].
pub fn cvx_multiplicity(a: i64, b: i64, c: i64) -> Result<BigUint> {
    let coeff = cvx_kernel(a, b)?.coeff(c);
    if coeff.is_negative() {
        return Err(Error::Consistency(format!(
            "N({a},{b};{c}) = {coeff} is negative"
        )));
    }
    Ok(coeff.magnitude().clone())
}

/// The Hodge diamond of `F_k(Q_1 ∩ Q_2) ⊂ P^{2g+1}`.
///
/// For each degree `m` and `j ∈ [g-k-1, g]` the multiplicity
/// `N(g-k, j; d-m)` copies of `H^{g-j}(Jac C)` are twisted by
/// `t = (m - (g-j))/2`, contributing `binom(g,p-t)·binom(g,q-t)` to `h^{p,q}`.
pub fn fano_odd_diamond(params: OddFanoParams) -> Result<HodgeDiamond> {
    let (g, k) = (params.g, params.k);
    let d = params.dimension();
    let du = d as usize;
    let mut table = vec![vec![BigUint::zero(); du + 1]; du + 1];
    for j in (g - k - 1)..=g {
        let kernel = cvx_kernel(g - k, j)?;
        let weight = g - j;
        for (c, mult) in kernel.terms() {
            if mult.is_negative() {
                return Err(Error::Consistency(format!(
                    "N({},{j};{c}) = {mult} is negative",
                    g - k
                )));
            }
            let m = d - c;
            if !(0..=2 * d).contains(&m) {
                return Err(Error::Consistency(format!(
                    "N({},{j};{c}) lands in degree {m} outside 0..={}",
                    g - k,
                    2 * d
                )));
            }
            let twice_twist = m - weight;
            if twice_twist < 0 || twice_twist % 2 != 0 {
                return Err(Error::Consistency(format!(
                    "H^{weight}(Jac) cannot be twisted into degree {m} (g={g}, k={k}, j={j})"
                )));
            }
            let t = twice_twist / 2;
            let mult = mult.magnitude();
            for p in (m - d).max(0)..=m.min(d) {
                let q = m - p;
                let (a, b) = (p - t, q - t);
                if a < 0 || b < 0 {
                    continue;
                }
                let h = binom_nat(g as u64, a as u64) * binom_nat(g as u64, b as u64);
                if h.is_zero() {
                    continue;
                }
                table[p as usize][q as usize] += mult * BigInt::magnitude(&h);
            }
        }
    }
    HodgeDiamond::new(table).map_err(|e| Error::Consistency(format!("g={g}, k={k}: {e}")))
}
