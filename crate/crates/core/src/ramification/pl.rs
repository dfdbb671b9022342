//! Continuous piecewise-linear functions on [-1, ∞) with exact breakpoints.

use std::fmt;

use num_traits::{One, Signed};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{fmt_q, Q};
use crate::error::{Error, Result};

/// Values `ys` at the increasing breakpoints `xs` (the first is the left end
/// of the domain), linear in between, and of slope `tail_slope` after the
/// last breakpoint.
#[derive(Debug, Clone)]
pub struct PiecewiseLinear {
    xs: Vec<Q>,
    ys: Vec<Q>,
    tail_slope: Q,
}

impl PiecewiseLinear {
    pub fn new(xs: Vec<Q>, ys: Vec<Q>, tail_slope: Q) -> Result<Self> {
        if xs.is_empty() || xs.len() != ys.len() {
            return Err(Error::invalid("breakpoint and value lists must be nonempty and equal in length"));
        }
        if xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("breakpoints must increase"));
        }
        Ok(PiecewiseLinear { xs, ys, tail_slope }.normalized())
    }

    pub fn domain_start(&self) -> &Q {
        &self.xs[0]
    }

    pub fn breakpoints(&self) -> impl Iterator<Item = (&Q, &Q)> {
        self.xs.iter().zip(&self.ys)
    }

    pub fn tail_slope(&self) -> &Q {
        &self.tail_slope
    }

    /// Slope on each segment, the tail slope last.
    pub fn slopes(&self) -> Vec<Q> {
        let mut s: Vec<Q> = self
            .xs
            .windows(2)
            .zip(self.ys.windows(2))
            .map(|(x, y)| (&y[1] - &y[0]) / (&x[1] - &x[0]))
            .collect();
        s.push(self.tail_slope.clone());
        s
    }

    fn normalized(mut self) -> Self {
        let mut i = 1;
        while i < self.xs.len() {
            let left = (&self.ys[i] - &self.ys[i - 1]) / (&self.xs[i] - &self.xs[i - 1]);
            let right = if i + 1 < self.xs.len() {
                (&self.ys[i + 1] - &self.ys[i]) / (&self.xs[i + 1] - &self.xs[i])
            } else {
                self.tail_slope.clone()
            };
            if left == right {
                self.xs.remove(i);
                self.ys.remove(i);
            } else {
                i += 1;
            }
        }
        self
    }

    pub fn eval(&self, u: &Q) -> Result<Q> {
        if u < &self.xs[0] {
            return Err(Error::invalid(format!("{} is left of the domain start {}", fmt_q(u), fmt_q(&self.xs[0]))));
        }
        let i = self.xs.partition_point(|x| x <= u) - 1;
        let slope = if i + 1 < self.xs.len() {
            (&self.ys[i + 1] - &self.ys[i]) / (&self.xs[i + 1] - &self.xs[i])
        } else {
            self.tail_slope.clone()
        };
        Ok(&self.ys[i] + slope * (u - &self.xs[i]))
    }

    pub fn is_increasing(&self) -> bool {
        self.slopes().iter().all(|s| s.is_positive())
    }

    /// The inverse of a strictly increasing function.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_increasing() {
            return Err(Error::invalid("only strictly increasing functions are inverted"));
        }
        PiecewiseLinear::new(self.ys.clone(), self.xs.clone(), self.tail_slope.recip())
    }

    /// `self ∘ inner`, defined where inner lands in the domain of self.
    pub fn compose(&self, inner: &PiecewiseLinear) -> Result<Self> {
        if !inner.is_increasing() {
            return Err(Error::invalid("inner function must be increasing"));
        }
        let start = inner.xs[0].clone();
        if inner.ys[0] < self.xs[0] {
            return Err(Error::invalid("inner function leaves the outer domain"));
        }
        let inv = inner.inverse()?;
        let mut xs: Vec<Q> = inner.xs.clone();
        for x in &self.xs {
            if x >= &inner.ys[0] {
                xs.push(inv.eval(x)?);
            }
        }
        xs.sort();
        xs.dedup();
        let ys = xs.iter().map(|x| self.eval(&inner.eval(x)?)).collect::<Result<Vec<_>>>()?;
        let last = xs.last().unwrap().clone();
        let next = &last + Q::one();
        let tail = self.eval(&inner.eval(&next)?)? - ys.last().unwrap();
        debug_assert!(xs[0] == start);
        PiecewiseLinear::new(xs, ys, tail)
    }
}

impl PartialEq for PiecewiseLinear {
    fn eq(&self, other: &Self) -> bool {
        self.xs == other.xs && self.ys == other.ys && self.tail_slope == other.tail_slope
    }
}

impl Eq for PiecewiseLinear {}

impl fmt::Display for PiecewiseLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.breakpoints().map(|(x, y)| format!("({},{})", fmt_q(x), fmt_q(y))).collect();
        write!(f, "{} then slope {}", pts.join(" "), fmt_q(&self.tail_slope))
    }
}

impl Serialize for PiecewiseLinear {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pts: Vec<(String, String)> = self.breakpoints().map(|(x, y)| (fmt_q(x), fmt_q(y))).collect();
        let mut st = s.serialize_struct("PiecewiseLinear", 2)?;
        st.serialize_field("breakpoints", &pts)?;
        st.serialize_field("tail_slope", &fmt_q(&self.tail_slope))?;
        st.end()
    }
}
