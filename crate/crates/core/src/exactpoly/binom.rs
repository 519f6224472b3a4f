use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Ordinary binomial coefficient with the conventions used throughout:
/// `0` for `m < 0`, `1` for `m = 0` (any `n`), `0` for `0 <= n < m`.
///
/// `n < 0` with `m >= 1` is rejected.
pub fn binomial(n: i64, m: i64) -> Result<BigInt> {
    if m < 0 {
        return Ok(BigInt::zero());
    }
    if m == 0 {
        return Ok(BigInt::one());
    }
    if n < 0 {
        return Err(Error::Domain(format!("binomial({n}, {m}) with negative n")));
    }
    Ok(binom_nat(n as u64, m as u64))
}

/// `binom(n, m)` for naturals, zero when `m > n`.
pub(crate) fn binom_nat(n: u64, m: u64) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

type Cache = RwLock<HashMap<(i64, i64), LaurentPoly>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Gaussian binomial coefficient `[n, m]_q` as a polynomial in `q`.
///
/// Evaluated by the Pascal recurrence `[n,m] = [n-1,m-1] + q^m [n-1,m]`,
/// memoized process-wide. Conventions match [`binomial`]; `n < 0 <= m - 1`
/// is a domain error.
pub fn gauss_binomial(n: i64, m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Ok(LaurentPoly::zero());
    }
    if m == 0 {
        return Ok(LaurentPoly::one());
    }
    if n < 0 {
        return Err(Error::Domain(format!(
            "gauss_binomial({n}, {m}) with negative n"
        )));
    }
    if n < m {
        return Ok(LaurentPoly::zero());
    }
    Ok(gauss_nat(n, m))
}

/// `[n, m]_q` for `0 <= m <= n`; keyed on the smaller of `m`, `n - m`.
fn gauss_nat(n: i64, m: i64) -> LaurentPoly {
    let m = m.min(n - m);
    if m == 0 {
        return LaurentPoly::one();
    }
    if let Some(hit) = cache().read().unwrap().get(&(n, m)) {
        return hit.clone();
    }
    let left = gauss_nat(n - 1, m - 1);
    let up = gauss_nat(n - 1, m).shift(m);
    let out = &left + &up;
    cache().write().unwrap().insert((n, m), out.clone());
    out
}
