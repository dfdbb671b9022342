//! Fixtures shared by the benchmarks.

use localarith::arith::{q, qi};
use localarith::poly::QPoly;

/// 1 + T + T^2/2! + ... + T^n/n!
pub fn exp_truncation(n: i64) -> QPoly {
    let mut fact = 1i64;
    let mut c = vec![qi(1)];
    for j in 1..=n {
        fact *= j;
        c.push(q(1, fact));
    }
    QPoly::from_q(c)
}
