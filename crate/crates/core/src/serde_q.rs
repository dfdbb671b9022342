//! Serialization of exact rationals as "num/den" strings.

use serde::Serializer;

use crate::arith::{fmt_q, Q};

pub fn ser<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_q(x))
}

pub fn ser_vec<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(fmt_q))
}
