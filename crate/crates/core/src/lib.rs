//! Exact Hodge-theoretic invariants of Fano schemes of linear subspaces on
//! smooth intersections of two quadrics.
//!
//! The crate computes Hodge diamonds of `F_k(Q_1 ∩ Q_2)` in both the
//! hyperelliptic case (`Q_1 ∩ Q_2 ⊂ P^{2g+1}`) and the stacky case
//! (`Q_1 ∩ Q_2 ⊂ P^{2g}`), the motivic multiplicity polynomials `M_{g,k,i}`,
//! and verifies the resulting identities after the E-polynomial and
//! Hochschild measures. Everything is exact: coefficients are arbitrary
//! precision integers and every comparison is equality of polynomials.
//!
//! Module map:
//!
//! * [`exactpoly`]: Laurent polynomials, bivariate polynomials, binomials and
//!   Gaussian binomials.
//! * [`hodge`]: the [`HodgeDiamond`] type and the measures out of it.
//! * [`curves`]: curves, symmetric powers, Jacobians, projective spaces.
//! * [`fano_odd`]: diamonds in the hyperelliptic case.
//! * [`fano_even`]: diamonds in the stacky case.
//! * [`motivic`]: `M_{g,k,i}`, motivic expressions and the verifiers.
//! * [`stacky`]: exceptional-object counts and combinatorial identities.
//! * [`suites`]: range sweeps of the identities, one report per sweep.
//! * [`report`]: the serializable [`VerificationReport`].

pub mod curves;
pub mod error;
pub mod exactpoly;
pub mod fano_even;
pub mod fano_odd;
pub mod hodge;
pub mod motivic;
pub mod report;
pub mod stacky;
pub mod suites;

pub use error::{Error, Result};
pub use exactpoly::{binomial, gauss_binomial, BiPoly, LaurentPoly};
pub use fano_even::EvenFanoParams;
pub use fano_odd::OddFanoParams;
pub use hodge::HodgeDiamond;
pub use motivic::MotivicExpression;
pub use report::{ReportSide, Status, VerificationReport};

pub use num_bigint::{BigInt, BigUint};
