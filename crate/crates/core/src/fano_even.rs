//! Hodge diamonds of `F_k(Q_1 ∩ Q_2)` for `Q_1 ∩ Q_2 ⊂ P^{2g}`, the stacky
//! case. The cohomology is Hodge–Tate and concentrated in even degrees.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{binom_nat, gauss_binomial};
use crate::hodge::HodgeDiamond;

/// Parameters `(g, k)` with `g >= 2` and `0 <= k <= g - 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EvenFanoParams {
    g: i64,
    k: i64,
}

impl EvenFanoParams {
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

    /// `(k+1)(2g-2k-2)`.
    pub fn dimension(&self) -> i64 {
        (self.k + 1) * (2 * self.g - 2 * self.k - 2)
    }
}

/// `b_{2p} = Σ_{j=0}^{k+1} binom(2g+1, j) · [q^{p - j(g-k-1)}] [2g-k-j-1, k+1-j]_q`.
pub fn fano_even_betti(params: EvenFanoParams, p: i64) -> BigUint {
    let (g, k) = (params.g, params.k);
    let mut total = BigInt::zero();
    for j in 0..=k + 1 {
        let gauss = gauss_binomial(2 * g - k - j - 1, k + 1 - j)
            .expect("upper index is positive for admissible (g, k)");
        let c = gauss.coeff(p - j * (g - k - 1));
        if !c.is_zero() {
            total += binom_nat((2 * g + 1) as u64, j as u64) * c;
        }
    }
    debug_assert!(!total.is_negative());
    total.magnitude().clone()
}

/// Diagonal diamond with `h^{p,p} = b_{2p}`.
pub fn fano_even_diamond(params: EvenFanoParams) -> Result<HodgeDiamond> {
    let d = params.dimension() as usize;
    HodgeDiamond::from_fn(d, |p, q| {
        if p == q {
            fano_even_betti(params, p as i64)
        } else {
            BigUint::zero()
        }
    })
    .map_err(|e| Error::Consistency(format!("g={}, k={}: {e}", params.g, params.k)))
}

/// `binom(g, k+1) · 4^{k+1}`, for `g >= 2` and `0 <= k <= g - 1`.
///
/// At `k = g - 1` this is the cardinality `4^g` of the finite Fano scheme.
pub fn euler_closed_form(g: i64, k: i64) -> Result<BigInt> {
    if g < 2 || !(0..g).contains(&k) {
        return Err(Error::Precondition(format!(
            "euler_closed_form needs g >= 2 and 0 <= k <= g - 1, got g={g}, k={k}"
        )));
    }
    Ok(binom_nat(g as u64, (k + 1) as u64) * BigInt::from(4).pow((k + 1) as u32))
}
