//! Range sweeps of the combinatorial identities, each summarized as a single
//! report whose sides are the number of instances checked and the number
//! that held.

use std::time::Instant;

use num_bigint::BigInt;

use crate::error::Result;
use crate::exactpoly::{binomial, gauss_binomial};
use crate::motivic::{m_at_one, m_polynomial};
use crate::report::{ReportSide, VerificationReport};
use crate::stacky::{chu_vandermonde_check, gessel_identity_check, gessel_series_check};

const MAX_LISTED_FAILURES: usize = 5;

struct Tally {
    checked: u64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn into_report<'a>(
        self,
        identity: &str,
        params: impl IntoIterator<Item = (&'a str, i64)>,
        start: Instant,
    ) -> VerificationReport {
        let held = self.checked - self.failures.len() as u64;
        let mut report = VerificationReport::new(
            identity,
            params,
            ReportSide::Count(BigInt::from(self.checked)),
            ReportSide::Count(BigInt::from(held)),
        );
        for f in self.failures.iter().take(MAX_LISTED_FAILURES) {
            report = report.with_note(format!("fails at {f}"));
        }
        report.with_elapsed(start)
    }
}

/// Symmetry `[n,m] = [n,n-m]`, the limit `[n,m](1) = binom(n,m)`, degree
/// `m(n-m)`, palindromic non-negative coefficients, for `0 <= m <= n <= max_n`.
pub fn verify_q_binomial_laws(max_n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for n in 0..=max_n {
        for m in 0..=n {
            let p = gauss_binomial(n, m)?;
            let ok = p == gauss_binomial(n, n - m)?
                && p.eval_at_one() == binomial(n, m)?
                && p.min_exponent() == Some(0)
                && p.max_exponent() == Some(m * (n - m))
                && p.is_palindromic()
                && p.is_effective();
            tally.record(ok, || format!("n={n} m={m}"));
        }
    }
    Ok(tally.into_report("q-binomial-laws", [("max_n", max_n)], start))
}

/// `M_{g,k,i}(1)` equals the closed binomial form, for `2 <= g <= max_g`.
pub fn verify_multiplicity_reduction(max_g: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for g in 2..=max_g {
        for k in 0..=g - 2 {
            for i in 0..=k + 1 {
                let ok = m_polynomial(g, k, i)?.eval_at_one() == m_at_one(g, k, i)?;
                tally.record(ok, || format!("g={g} k={k} i={i}"));
            }
        }
    }
    Ok(tally.into_report("multiplicity-reduction", [("max_g", max_g)], start))
}

/// Every `M_{g,k,i}` has non-negative coefficients, for `2 <= g <= max_g`.
pub fn verify_effectivity(max_g: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for g in 2..=max_g {
        for k in 0..=g - 2 {
            for i in 0..=k + 1 {
                let ok = m_polynomial(g, k, i)?.is_effective();
                tally.record(ok, || format!("g={g} k={k} i={i}"));
            }
        }
    }
    Ok(tally.into_report("effectivity", [("max_g", max_g)], start))
}

/// Both routes to the Gessel identity for `m <= max_m` and even `a <= max_a`.
pub fn verify_gessel(max_m: i64, max_a: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for a in (0..=max_a).step_by(2) {
        for m in 0..=max_m {
            tally.record(gessel_identity_check(m, a)?, || format!("m={m} a={a}"));
        }
        tally.record(gessel_series_check(a, max_m)?, || format!("series a={a}"));
    }
    Ok(tally.into_report("gessel", [("max_a", max_a), ("max_m", max_m)], start))
}

/// The Chu–Vandermonde variant for all `0 <= j <= k <= n <= max_n`.
pub fn verify_chu_vandermonde(max_n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for n in 0..=max_n {
        for k in 0..=n {
            for j in 0..=k {
                tally.record(chu_vandermonde_check(n, j, k)?, || {
                    format!("n={n} j={j} k={k}")
                });
            }
        }
    }
    Ok(tally.into_report("chu-vandermonde", [("max_n", max_n)], start))
}
