//! Exact reconstruction of the integral points of the modular curve X_ns^+(9).
//!
//! The crate is organized bottom-up:
//!
//! - [`exactalg`]: rationals, the field Q(√−3), polynomials, rational functions,
//!   resultants and small number-theoretic helpers.
//! - [`cartan`]: matrix groups over Z/3Z and Z/9Z, the non-split Cartan
//!   normalizers and the intermediate groups between them.
//! - [`covering`]: cusps, elliptic points, ramification and genus of the
//!   attached modular curves, computed from coset orbits.
//! - [`param`]: the tower of uniformizers ending in the rational parametrization
//!   t(y) of X_ns^+(9) over X_ns^+(3).
//! - [`thue`]: the cubic form m³ − 3mn² + n³ and its bounded solution sets.
//! - [`heegner`]: integral points, class numbers and CM j-invariants.
//! - [`ecurve`]: Weierstrass invariants and point counts for the non-CM point.
//! - [`report`]: named pass/fail checks shared by all verification surfaces.

pub mod cartan;
pub mod covering;
pub mod ecurve;
mod error;
pub mod exactalg;
pub mod heegner;
pub mod param;
pub mod report;
pub mod thue;

pub use error::{Error, Result};
pub use report::{Check, CheckReport};
