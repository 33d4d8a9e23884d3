//! Certified quadrature for Riemann-Stieltjes integrals.
//!
//! The crate models real functions on a closed interval exactly — piecewise
//! polynomials plus isolated point overrides — and on that model provides:
//!
//! - exact Riemann-Stieltjes integration and an independent refining-sum
//!   oracle ([`stieltjes`]);
//! - the companion quadrature family mixing Ostrowski and generalized
//!   trapezoid rules through a weight parameter alpha ([`rules`]);
//! - the three-branch kernel whose integral against df reproduces the
//!   quadrature error ([`kernel`]);
//! - closed-form and kernel-rigorous error bounds for bounded-variation,
//!   Lipschitz and monotone integrands ([`bounds`]);
//! - the composite rule over tagged partitions with global and per-interval
//!   remainder bounds ([`composite`]);
//! - a seeded verification harness that checks every bound against the exact
//!   error and classifies closed-form violations ([`harness`]).
//!
//! All core arithmetic is exact (big rationals); floats appear only at the
//! API boundary and inside the refining oracles.

pub mod bounds;
pub mod cli;
pub mod composite;
pub mod error;
pub mod funcmodel;
pub mod harness;
pub mod kernel;
pub mod poly;
pub mod rational;
pub mod rules;
pub mod stieltjes;

pub use error::{Error, Result};
pub use funcmodel::{PiecewiseFunc, RegularityCertificate, Side};
// re-exported once kernel lands
pub use rational::Rat;
