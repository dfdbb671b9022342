//! Finite-precision p-adic numbers.
//!
//! A nonzero value is stored as `u * p^v + O(p^{v+N})` with `u` a unit in
//! `[1, p^N)`. Exact zero and "zero to absolute precision k" are kept apart:
//! the latter arises when a cancellation exhausts every known digit.

mod lift;

pub use lift::{
    is_square, newton_lift, pth_power_on_units, sqrt, square_class_basis, teichmuller,
    unit_filtration_level, Direction, UnitLevel,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{self, Q};
use crate::error::{Error, Result};
use crate::valuations::Valuation;

/// Relative precision used when none is given.
pub const DEFAULT_PREC: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Kind {
    Zero,
    /// Indistinguishable from zero modulo p^k.
    ZeroTo(i64),
    Val { v: i64, u: BigInt, prec: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Padic {
    p: u64,
    kind: Kind,
}

impl Padic {
    pub fn zero(p: u64) -> Self {
        Padic { p, kind: Kind::Zero }
    }

    /// O(p^k).
    pub fn zero_to(p: u64, k: i64) -> Self {
        Padic { p, kind: Kind::ZeroTo(k) }
    }

    pub fn one(p: u64, prec: u32) -> Self {
        Padic { p, kind: Kind::Val { v: 0, u: BigInt::one(), prec } }
    }

    /// `x` with relative precision `prec`; zero stays exact.
    pub fn from_rational(p: u64, x: &Q, prec: u32) -> Result<Self> {
        arith::require_prime(p)?;
        if prec == 0 {
            return Err(Error::invalid("precision must be positive"));
        }
        if x.is_zero() {
            return Ok(Padic::zero(p));
        }
        let v = arith::vp_q(p, x);
        let pv = Q::from_integer(arith::pow_big(p, v.unsigned_abs() as u32));
        let unit = if v >= 0 { x / pv } else { x * pv };
        let m = arith::pow_big(p, prec);
        let u = arith::q_mod(&unit, &m).expect("unit part is p-integral");
        Ok(Padic { p, kind: Kind::Val { v, u, prec } })
    }

    pub fn from_int(p: u64, n: i64, prec: u32) -> Result<Self> {
        Self::from_rational(p, &Q::from_integer(BigInt::from(n)), prec)
    }

    /// The residue class of the integer `n` modulo p^k, as an element known
    /// to absolute precision `k`.
    pub fn from_residue(p: u64, n: &BigInt, k: i64) -> Result<Self> {
        arith::require_prime(p)?;
        if k <= 0 {
            return Ok(Padic::zero_to(p, k));
        }
        let m = arith::pow_big(p, k as u32);
        let n = n.mod_floor(&m);
        if n.is_zero() {
            return Ok(Padic::zero_to(p, k));
        }
        let v = arith::vp_int(p, &n) as i64;
        let u = n / arith::pow_big(p, v as u32);
        Ok(Padic { p, kind: Kind::Val { v, u, prec: (k - v) as u32 } })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.kind, Kind::Zero)
    }

    /// True for exact zero and for O(p^k).
    pub fn is_zero_at_precision(&self) -> bool {
        !matches!(self.kind, Kind::Val { .. })
    }

    /// The valuation; O(p^k) has no certified valuation.
    pub fn valuation(&self) -> Result<Valuation> {
        match &self.kind {
            Kind::Zero => Ok(Valuation::PlusInfinity),
            Kind::ZeroTo(k) => Err(Error::precision(format!("valuation of O({}^{k}) is unknown", self.p))),
            Kind::Val { v, .. } => Ok(Valuation::Finite(*v)),
        }
    }

    /// A certified lower bound for the valuation (`None` for exact zero).
    pub fn valuation_lower_bound(&self) -> Option<i64> {
        match &self.kind {
            Kind::Zero => None,
            Kind::ZeroTo(k) => Some(*k),
            Kind::Val { v, .. } => Some(*v),
        }
    }

    /// Absolute precision `v + N`; `None` for exact zero.
    pub fn abs_prec(&self) -> Option<i64> {
        match &self.kind {
            Kind::Zero => None,
            Kind::ZeroTo(k) => Some(*k),
            Kind::Val { v, prec, .. } => Some(v + *prec as i64),
        }
    }

    /// Relative precision; `None` unless the value is nonzero.
    pub fn rel_prec(&self) -> Option<u32> {
        match &self.kind {
            Kind::Val { prec, .. } => Some(*prec),
            _ => None,
        }
    }

    pub fn unit(&self) -> Option<&BigInt> {
        match &self.kind {
            Kind::Val { u, .. } => Some(u),
            _ => None,
        }
    }

    /// The stored representative `u * p^v` (0 for zero values).
    pub fn representative(&self) -> Q {
        match &self.kind {
            Kind::Val { v, u, .. } => {
                let pv = Q::from_integer(arith::pow_big(self.p, v.unsigned_abs() as u32));
                if *v >= 0 {
                    Q::from_integer(u.clone()) * pv
                } else {
                    Q::from_integer(u.clone()) / pv
                }
            }
            _ => Q::zero(),
        }
    }

    /// Integer representative in [0, p^k) of an integral value known to at
    /// least absolute precision k.
    pub fn residue(&self, k: u32) -> Result<BigInt> {
        let k = k as i64;
        if let Some(a) = self.abs_prec() {
            if a < k {
                return Err(Error::precision(format!("value known only modulo {}^{a}", self.p)));
            }
        }
        match &self.kind {
            Kind::Val { v, .. } if *v < 0 => Err(Error::invalid("value is not integral")),
            Kind::Val { v, u, .. } => {
                let m = arith::pow_big(self.p, k as u32);
                Ok((u * arith::pow_big(self.p, *v as u32)).mod_floor(&m))
            }
            _ => Ok(BigInt::zero()),
        }
    }

    /// Reduces absolute precision to at most `k`; never raises it.
    pub fn truncate_abs(&self, k: i64) -> Self {
        match &self.kind {
            Kind::Zero => Padic::zero_to(self.p, k),
            Kind::ZeroTo(j) => Padic::zero_to(self.p, (*j).min(k)),
            Kind::Val { v, u, prec } => {
                if *v >= k {
                    return Padic::zero_to(self.p, k);
                }
                let np = ((k - v) as u32).min(*prec);
                let u = u.mod_floor(&arith::pow_big(self.p, np));
                Padic { p: self.p, kind: Kind::Val { v: *v, u, prec: np } }
            }
        }
    }

    /// Reduces relative precision to at most `n`.
    pub fn truncate_rel(&self, n: u32) -> Self {
        match &self.kind {
            Kind::Val { v, .. } => self.truncate_abs(v + n as i64),
            _ => self.clone(),
        }
    }

    fn check_same(&self, other: &Padic) -> Result<()> {
        if self.p != other.p {
            return Err(Error::invalid(format!("mixed primes {} and {}", self.p, other.p)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Padic) -> Result<Padic> {
        self.check_same(other)?;
        let p = self.p;
        match (&self.kind, &other.kind) {
            (Kind::Zero, _) => Ok(other.clone()),
            (_, Kind::Zero) => Ok(self.clone()),
            _ => {
                let a = self.abs_prec().unwrap().min(other.abs_prec().unwrap());
                let m = self.valuation_lower_bound().unwrap().min(other.valuation_lower_bound().unwrap());
                if m >= a {
                    return Ok(Padic::zero_to(p, a));
                }
                let shifted = |x: &Padic| -> BigInt {
                    match &x.kind {
                        Kind::Val { v, u, .. } => u * arith::pow_big(p, (v - m) as u32),
                        _ => BigInt::zero(),
                    }
                };
                let s = shifted(self) + shifted(other);
                let mut r = Padic::from_residue(p, &s, a - m)?;
                if let Kind::Val { v, .. } = &mut r.kind {
                    *v += m;
                } else {
                    r = Padic::zero_to(p, a);
                }
                Ok(r)
            }
        }
    }

    pub fn neg(&self) -> Padic {
        match &self.kind {
            Kind::Val { v, u, prec } => {
                let m = arith::pow_big(self.p, *prec);
                Padic { p: self.p, kind: Kind::Val { v: *v, u: (-u).mod_floor(&m), prec: *prec } }
            }
            _ => self.clone(),
        }
    }

    pub fn sub(&self, other: &Padic) -> Result<Padic> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Padic) -> Result<Padic> {
        self.check_same(other)?;
        let p = self.p;
        Ok(match (&self.kind, &other.kind) {
            (Kind::Zero, _) | (_, Kind::Zero) => Padic::zero(p),
            (Kind::ZeroTo(a), Kind::ZeroTo(b)) => Padic::zero_to(p, a + b),
            (Kind::ZeroTo(a), Kind::Val { v, .. }) | (Kind::Val { v, .. }, Kind::ZeroTo(a)) => {
                Padic::zero_to(p, a + v)
            }
            (Kind::Val { v: va, u: ua, prec: pa }, Kind::Val { v: vb, u: ub, prec: pb }) => {
                let prec = (*pa).min(*pb);
                let u = (ua * ub).mod_floor(&arith::pow_big(p, prec));
                Padic { p, kind: Kind::Val { v: va + vb, u, prec } }
            }
        })
    }

    pub fn div(&self, other: &Padic) -> Result<Padic> {
        self.check_same(other)?;
        let p = self.p;
        match (&self.kind, &other.kind) {
            (_, Kind::Zero) => Err(Error::invalid("division by zero")),
            (_, Kind::ZeroTo(k)) => {
                Err(Error::precision(format!("divisor is indistinguishable from 0 modulo {p}^{k}")))
            }
            (Kind::Zero, _) => Ok(Padic::zero(p)),
            (Kind::ZeroTo(a), Kind::Val { v, .. }) => Ok(Padic::zero_to(p, a - v)),
            (Kind::Val { v: va, u: ua, prec: pa }, Kind::Val { v: vb, u: ub, prec: pb }) => {
                let prec = (*pa).min(*pb);
                let m = arith::pow_big(p, prec);
                let inv = arith::inv_mod(ub, &m).expect("units are invertible");
                Ok(Padic { p, kind: Kind::Val { v: va - vb, u: (ua * inv).mod_floor(&m), prec } })
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Result<Padic> {
        let prec = self.rel_prec().unwrap_or(DEFAULT_PREC);
        let mut acc = Padic::one(self.p, prec);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Congruence of the stored representatives modulo p^k.
    pub fn congruent(&self, other: &Padic, k: i64) -> Result<bool> {
        let d = self.sub(other)?;
        match d.valuation_lower_bound() {
            None => Ok(true),
            Some(_) if d.is_zero_at_precision() => {
                if d.abs_prec().unwrap() < k {
                    Err(Error::precision(format!("difference known only modulo {}^{}", self.p, d.abs_prec().unwrap())))
                } else {
                    Ok(true)
                }
            }
            Some(v) => Ok(v >= k),
        }
    }

    /// The first `count` digits in [0, p) starting at the valuation.
    pub fn expansion(&self, count: u32) -> Result<DigitExpansion> {
        match &self.kind {
            Kind::Zero | Kind::ZeroTo(_) => Ok(DigitExpansion {
                p: self.p,
                start: self.valuation_lower_bound().unwrap_or(0),
                digits: Vec::new(),
            }),
            Kind::Val { v, u, prec } => {
                if count > *prec {
                    return Err(Error::invalid(format!("{count} digits requested, only {prec} known")));
                }
                let pb = BigInt::from(self.p);
                let mut x = u.clone();
                let mut digits = Vec::with_capacity(count as usize);
                for _ in 0..count {
                    let (q, r) = x.div_mod_floor(&pb);
                    digits.push(u64::try_from(r).expect("digit below p"));
                    x = q;
                }
                Ok(DigitExpansion { p: self.p, start: *v, digits })
            }
        }
    }
}

impl fmt::Display for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        match &self.kind {
            Kind::Zero => write!(f, "0"),
            Kind::ZeroTo(k) => write!(f, "O({p}^{k})"),
            Kind::Val { v, u, prec } => write!(f, "{u}*{p}^{v} + O({p}^{})", v + *prec as i64),
        }
    }
}

/// Serialized as the stored representative plus its absolute precision
/// (`null` for exact zero).
impl Serialize for Padic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Padic", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("value", &arith::fmt_q(&self.representative()))?;
        st.serialize_field("abs_prec", &self.abs_prec())?;
        st.end()
    }
}

impl Padic {
    /// Inverse of the serialized form: `value + O(p^abs_prec)`.
    pub fn from_value(p: u64, value: &Q, abs_prec: Option<i64>) -> Result<Self> {
        match abs_prec {
            None if value.is_zero() => Ok(Padic::zero(p)),
            None => Err(Error::invalid("a nonzero value needs a precision")),
            Some(k) => {
                if value.is_zero() {
                    return Ok(Padic::zero_to(p, k));
                }
                let v = arith::vp_q(p, value);
                if v >= k {
                    return Ok(Padic::zero_to(p, k));
                }
                Ok(Padic::from_rational(p, value, (k - v) as u32)?)
            }
        }
    }
}

/// `sum_{i} digits[i] * p^{start + i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitExpansion {
    pub p: u64,
    pub start: i64,
    pub digits: Vec<u64>,
}

impl DigitExpansion {
    pub fn reconstruct(&self) -> Q {
        let pq = Q::from_integer(BigInt::from(self.p));
        let base = if self.start >= 0 {
            Q::from_integer(arith::pow_big(self.p, self.start as u32))
        } else {
            Q::from_integer(arith::pow_big(self.p, (-self.start) as u32)).recip()
        };
        let mut acc = Q::zero();
        let mut w = base;
        for &d in &self.digits {
            acc += &w * Q::from_integer(BigInt::from(d));
            w *= &pq;
        }
        acc
    }
}

impl fmt::Display for DigitExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(f, "start {}: {}", self.start, ds.join(","))
    }
}
