//! Exact generalized Bernoulli polynomials in Q[a][x], the operators `D`,
//! `Delta` and `Omega`, and exact certification of a family of Bernoulli
//! identities.

pub mod bernoulli;
pub mod error;
pub mod harness;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod text;

pub use bernoulli::{GenBernTable, OmegaOperator};
pub use error::{Error, ParseError, Result};
pub use identities::{verify, AlphaMode, CaseId, IdentityCase, Status, SumSpec, VerificationResult};
pub use poly::{binomial, AlphaScalar, BiPoly, Poly, RatPoly, Ring};
pub use rational::Rational;
