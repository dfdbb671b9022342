//! Newton lifting of simple roots and the constructions built on it:
//! Teichmüller representatives, square roots and p-th roots of units.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::Padic;
use crate::arith;
use crate::error::{Error, Result};
use crate::valuations::Valuation;

fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn derivative(f: &[BigInt]) -> Vec<BigInt> {
    f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

fn integral_rep(a0: &Padic) -> Result<BigInt> {
    let r = a0.representative();
    if !r.is_integer() {
        return Err(Error::invalid("starting point must be p-integral"));
    }
    Ok(r.to_integer())
}

/// Lifts an approximate root `a0` of the integer polynomial `f` (low degree
/// first) to a root modulo p^n, given `v(f(a0)) > 2 v(f'(a0))`.
pub fn newton_lift(f: &[BigInt], a0: &Padic, n: u32) -> Result<Padic> {
    let p = a0.p();
    let mut a = integral_rep(a0)?;
    let df = derivative(f);
    let fa = eval(f, &a);
    if fa.is_zero() {
        return Padic::from_residue(p, &a, n as i64);
    }
    let dfa = eval(&df, &a);
    if dfa.is_zero() {
        return Err(Error::hypothesis("f'(a0) = 0, so v(f(a0)) > 2 v(f'(a0)) cannot hold"));
    }
    let vf = arith::vp_int(p, &fa);
    let k = arith::vp_int(p, &dfa);
    if vf <= 2 * k {
        return Err(Error::hypothesis(format!(
            "need v(f(a0)) > 2 v(f'(a0)), have v(f(a0)) = {vf} and v(f'(a0)) = {k}"
        )));
    }
    let pk = arith::pow_big(p, k);
    let work = arith::pow_big(p, n + k);
    let keep = arith::pow_big(p, n + 2 * k + 1);
    for _ in 0..(2 * n + 64) {
        let fa = eval(f, &a);
        if fa.is_zero() || arith::vp_int(p, &fa) >= n + k {
            return Padic::from_residue(p, &a, n as i64);
        }
        let dfa = eval(&df, &a);
        let inv = arith::inv_mod(&(&dfa / &pk), &work).expect("f'(a)/p^k is a unit");
        let t = ((&fa / &pk) * inv).mod_floor(&work);
        a = (a - t).mod_floor(&keep);
    }
    Err(Error::Inconsistency("Newton iteration failed to converge".into()))
}

/// The (p-1)-th root of unity congruent to `residue` mod p, modulo p^n.
pub fn teichmuller(p: u64, residue: i64, n: u32) -> Result<Padic> {
    arith::require_prime(p)?;
    let m = arith::pow_big(p, n);
    let mut y = BigInt::from(residue).mod_floor(&m);
    if (&y % BigInt::from(p)).is_zero() {
        return Err(Error::invalid(format!("residue {residue} is divisible by {p}")));
    }
    let e = BigInt::from(p);
    for _ in 0..=n + 1 {
        let next = y.modpow(&e, &m);
        if next == y {
            return Padic::from_residue(p, &y, n as i64);
        }
        y = next;
    }
    Err(Error::Inconsistency("Teichmüller iteration did not stabilize".into()))
}

fn unit_parts(x: &Padic) -> Result<(i64, BigInt, u32)> {
    if x.is_exact_zero() {
        return Err(Error::invalid("expected a nonzero value"));
    }
    let v = match x.valuation()? {
        Valuation::Finite(v) => v,
        Valuation::PlusInfinity => unreachable!(),
    };
    Ok((v, x.unit().unwrap().clone(), x.rel_prec().unwrap()))
}

/// Squares in Q_p^*: even valuation and a unit that is a square mod p
/// (p odd) or congruent to 1 mod 8 (p = 2).
pub fn is_square(x: &Padic) -> Result<bool> {
    let (v, u, prec) = unit_parts(x)?;
    let p = x.p();
    if v % 2 != 0 {
        return Ok(false);
    }
    if p == 2 {
        if prec < 3 {
            return Err(Error::precision("deciding squares in Q_2 needs the unit modulo 8"));
        }
        return Ok((&u % 8u32) == BigInt::one());
    }
    let r = u64::try_from(&u % BigInt::from(p)).expect("residue below p");
    Ok(arith::pow_mod(r, (p - 1) / 2, p) == 1)
}

/// A square root, to the precision the input determines; for p odd the root
/// is congruent to the least square root mod p of the unit part.
pub fn sqrt(x: &Padic) -> Result<Padic> {
    if !is_square(x)? {
        return Err(Error::NotASquare(format!("{x} is not a square")));
    }
    let (v, u, prec) = unit_parts(x)?;
    let p = x.p();
    let (a0, n) = if p == 2 {
        (1u64, prec - 1)
    } else {
        let r = u64::try_from(&u % BigInt::from(p)).unwrap();
        ((1..p).find(|b| arith::mul_mod(*b, *b, p) == r).unwrap(), prec)
    };
    let f = vec![-u, BigInt::zero(), BigInt::one()];
    let root = newton_lift(&f, &Padic::from_int(p, a0 as i64, n)?, n)?;
    let scale = Padic::from_residue(p, &arith::pow_big(p, (v / 2).unsigned_abs() as u32), (v / 2).abs() + n as i64)?;
    if v >= 0 {
        root.mul(&scale)
    } else {
        root.div(&scale)
    }
}

/// Representatives whose classes form an F_2-basis of Q_p^* / Q_p^*2.
pub fn square_class_basis(p: u64) -> Result<Vec<u64>> {
    arith::require_prime(p)?;
    if p == 2 {
        return Ok(vec![5, 3, 2]);
    }
    let b = (2..p).find(|&b| arith::pow_mod(b, (p - 1) / 2, p) == p - 1).unwrap();
    Ok(vec![b, p])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

/// Position of a unit in the filtration U_0 ⊃ U_1 ⊃ ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitLevel {
    pub level: u32,
    /// False when `u - 1` vanished at the known precision, so the true
    /// level is only bounded below.
    pub exact: bool,
}

pub fn unit_filtration_level(u: &Padic) -> Result<UnitLevel> {
    let (v, _, _) = unit_parts(u)?;
    if v != 0 {
        return Err(Error::invalid(format!("{u} is not a unit")));
    }
    let d = u.sub(&Padic::one(u.p(), u.rel_prec().unwrap()))?;
    match d.valuation_lower_bound() {
        None => Err(Error::Inconsistency("unit minus one is exactly zero".into())),
        Some(k) => Ok(UnitLevel { level: k.max(0) as u32, exact: !d.is_zero_at_precision() }),
    }
}

/// The bijection x -> x^p from U_n onto U_{n+1} (valid for n > 1/(p-1)), or
/// its inverse. The result is truncated to `prec` digits and to what the
/// input determines.
pub fn pth_power_on_units(p: u64, n: u32, dir: Direction, u: &Padic, prec: u32) -> Result<Padic> {
    arith::require_prime(p)?;
    if u.p() != p {
        return Err(Error::invalid("prime mismatch"));
    }
    if n == 0 {
        return Err(Error::invalid("filtration level must be positive"));
    }
    if p == 2 && n == 1 {
        return Err(Error::hypothesis(
            "squaring on U_1 of Q_2 is excluded: its kernel is {±1} and it is not onto U_2",
        ));
    }
    let need = match dir {
        Direction::Forward => n,
        Direction::Inverse => n + 1,
    };
    let lvl = unit_filtration_level(u)?;
    if lvl.level < need {
        return Err(Error::invalid(format!("{u} is not in U_{need}")));
    }
    let rel = u.rel_prec().unwrap();
    let ub = u.residue(rel)?;
    match dir {
        Direction::Forward => {
            let k = prec.min(rel + 1);
            let m = arith::pow_big(p, k);
            Padic::from_residue(p, &ub.modpow(&BigInt::from(p), &m), k as i64)
        }
        Direction::Inverse => {
            let k = prec.min(rel - 1);
            // x = 1 + p^n y with x^p = 1 + p^{n+1} y mod p^{n+2}
            let pn = arith::pow_big(p, n);
            let y0 = ((&ub - BigInt::one()) / (&pn * BigInt::from(p))).mod_floor(&BigInt::from(p));
            let a0 = Padic::from_residue(p, &(BigInt::one() + &pn * y0), (n + 2) as i64)?;
            let mut f = vec![BigInt::zero(); p as usize + 1];
            f[0] = -ub;
            f[p as usize] = BigInt::one();
            newton_lift(&f, &a0, k)
        }
    }
}
