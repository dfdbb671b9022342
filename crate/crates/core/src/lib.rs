//! Exact arithmetic for local fields: valuations on Q and F_q(T), Bernoulli
//! numbers, finite-precision p-adic numbers, polynomials over Q_p with Newton
//! polygons and Hensel-type factorization, ramification filtrations and tamely
//! ramified extensions.

pub mod arith;
pub mod bernoulli;
pub mod padic;
pub mod poly;
pub mod ramification;
pub mod error;
pub mod extensions;
pub mod valuations;

mod serde_q;

pub use arith::Q;
pub use error::{Error, Result};
