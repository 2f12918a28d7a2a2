//! Exact symbolic verification of the generalized curious binomial identity
//!
//! ```text
//! (x + (m+1)z) Σ_k (-1)^k C(x+y+kz, m-k) C(y+k+kz, k)
//!     = z Σ_{0≤i≤k≤m} (-1)^k C(k,i) C(x+i, m-k) (1+z)^{k+i} (1-z)^{k-i} + (x-m) C(x,m)
//! ```
//!
//! together with every lemma its proof uses: Jensen's convolution, the
//! closed forms of the two inner sums, Chebyshev polynomials of the second
//! kind, and the final telescoping sum.
//!
//! Everything is computed over [`Polynomial`]s with exact [`Rational`]
//! coefficients; two expressions are equal exactly when their canonical
//! forms are.

pub mod binomial;
pub mod error;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod sample;
pub mod verifier;

/// Reported as `engine_version` in machine-readable output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, Result};
pub use poly::{count_ring_ops, Assignment, Polynomial};
pub use rational::{rat, Rational};
pub use ring::{Monomial, Ring};
pub use sample::PointSample;
pub use verifier::IdentityReport;
