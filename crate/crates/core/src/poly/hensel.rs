//! Lifting coprime factorizations of integral polynomials: the linear
//! scheme from a factorization modulo p^{2α+1}, and the quadratic refinement
//! of an approximate factorization.

use num_traits::Zero;
use serde::Serialize;

use super::QPoly;
use crate::arith::{self, Q};
use crate::error::{Error, Result};

fn require_integral(p: u64, name: &str, f: &QPoly) -> Result<()> {
    if f.coeffs().iter().any(|c| !c.is_zero() && arith::vp_q(p, c) < 0) {
        return Err(Error::invalid(format!("{name} must have p-integral coefficients")));
    }
    Ok(())
}

/// Least valuation of a coefficient; `None` for the zero polynomial.
fn w(p: u64, f: &QPoly) -> Option<i64> {
    f.content_valuation(p)
}

fn vq(p: u64, x: &Q) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(arith::vp_q(p, x))
    }
}

/// Non-leading coefficients reduced into [0, p^k); the leading one is kept.
fn reduce_below_leading(p: u64, f: &QPoly, k: u32) -> QPoly {
    let m = arith::pow_big(p, k);
    let d = f.degree().unwrap_or(0);
    let c = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if i == d { c.clone() } else { Q::from_integer(arith::q_mod(c, &m).expect("p-integral")) })
        .collect();
    QPoly::from_q(c)
}

fn reduce_all(p: u64, f: &QPoly, k: u32) -> QPoly {
    let m = arith::pow_big(p, k);
    QPoly::from_q(f.coeffs().iter().map(|c| Q::from_integer(arith::q_mod(c, &m).expect("p-integral"))).collect())
}

fn same_leading_term(f: &QPoly, g: &QPoly, h: &QPoly) -> bool {
    match (f.degree(), g.degree(), h.degree()) {
        (Some(a), Some(b), Some(c)) => a == b + c && f.leading().unwrap() == &(g.leading().unwrap() * h.leading().unwrap()),
        _ => false,
    }
}

/// Solves g*X + h*Y = rhs with deg X < deg h, deg Y < deg g through the
/// Sylvester system.
fn solve_sylvester(g: &QPoly, h: &QPoly, rhs: &QPoly) -> Result<(QPoly, QPoly)> {
    let m = g.degree().unwrap();
    let n = h.degree().unwrap();
    let size = m + n;
    if rhs.degree().is_some_and(|d| d >= size) {
        return Err(Error::Inconsistency("right-hand side degree too large".into()));
    }
    let mut a = QPoly::sylvester(g, h)?;
    for (i, row) in a.iter_mut().enumerate() {
        row.push(rhs.coeff(size - 1 - i));
    }
    for k in 0..size {
        let piv = (k..size)
            .find(|&i| !a[i][k].is_zero())
            .ok_or_else(|| Error::hypothesis("res(g, h) = 0"))?;
        a.swap(k, piv);
        let pk = a[k][k].clone();
        for j in k..=size {
            a[k][j] = &a[k][j] / &pk;
        }
        for i in 0..size {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in k..=size {
                let t = &factor * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    let x: Vec<Q> = (0..n).rev().map(|i| a[i][size].clone()).collect();
    let y: Vec<Q> = (n..size).rev().map(|i| a[i][size].clone()).collect();
    Ok((QPoly::from_q(x), QPoly::from_q(y)))
}

/// From f ≡ g0 h0 mod p^{2α+1} with v(res(g0, h0)) <= α, finds g ≡ g0 and
/// h ≡ h0 mod p^{α+1}, with the leading terms of g0 and h0, such that
/// f ≡ g h mod p^n.
pub fn hensel_lift_factors(p: u64, f: &QPoly, g0: &QPoly, h0: &QPoly, alpha: u32, n: u32) -> Result<(QPoly, QPoly)> {
    arith::require_prime(p)?;
    for (name, x) in [("f", f), ("g0", g0), ("h0", h0)] {
        require_integral(p, name, x)?;
    }
    if !same_leading_term(f, g0, h0) {
        return Err(Error::hypothesis("f and g0*h0 must have the same leading term"));
    }
    if g0.degree() == Some(0) || h0.degree() == Some(0) {
        return Err(Error::hypothesis("g0 and h0 must both have positive degree"));
    }
    let start = 2 * alpha + 1;
    let d0 = f.sub(&g0.mul(h0));
    if w(p, &d0).is_some_and(|v| v < start as i64) {
        return Err(Error::hypothesis(format!("f ≢ g0*h0 mod p^{start} (2α+1 with α = {alpha})")));
    }
    let res = QPoly::resultant(g0, h0)?;
    match vq(p, &res) {
        Some(v) if v <= alpha as i64 => {}
        _ => return Err(Error::hypothesis(format!("res(g0, h0) ≡ 0 mod p^{} (α+1)", alpha + 1))),
    }
    let pa = Q::from_integer(arith::pow_big(p, alpha));
    let (mut g, mut h) = (g0.clone(), h0.clone());
    let mut i = 0u32;
    while start + i < n {
        let d = f.sub(&g.mul(&h));
        if d.is_zero() {
            break;
        }
        let shift = Q::from_integer(arith::pow_big(p, start + i));
        let big_f = reduce_all(p, &d.scale(&shift.recip()), n);
        let (hh, gg) = solve_sylvester(&g, &h, &big_f.scale(&pa))?;
        let step = Q::from_integer(arith::pow_big(p, alpha + i + 1));
        g = reduce_below_leading(p, &g.add(&reduce_all(p, &gg, n).scale(&step)), n);
        h = reduce_below_leading(p, &h.add(&reduce_all(p, &hh, n).scale(&step)), n);
        i += 1;
    }
    let (g, h) = (reduce_below_leading(p, &g, n), reduce_below_leading(p, &h, n));
    if w(p, &f.sub(&g.mul(&h))).is_some_and(|v| v < n as i64) {
        return Err(Error::Inconsistency("lifted factors fail f ≡ g h".into()));
    }
    Ok((g, h))
}

/// Which inequality certifies the starting factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RefineHypothesis {
    /// w(f - GH) > 2 v(res(G, H))
    Resultant,
    /// w(f - GH) > v(dis(f))
    Discriminant,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Refinement {
    pub g: QPoly,
    pub h: QPoly,
    /// w(f - GH) before each step; `None` once the product is exact.
    pub defects: Vec<Option<i64>>,
}

/// Quadratic refinement G' = G + γ, H' = H + δ with Gδ + Hγ = f - GH.
pub fn refine_factorization(
    p: u64,
    f: &QPoly,
    g: &QPoly,
    h: &QPoly,
    n: u32,
    hyp: RefineHypothesis,
) -> Result<Refinement> {
    arith::require_prime(p)?;
    for (name, x) in [("f", f), ("G", g), ("H", h)] {
        require_integral(p, name, x)?;
    }
    if !same_leading_term(f, g, h) {
        return Err(Error::hypothesis("f and GH must have the same leading term"));
    }
    let d0 = f.sub(&g.mul(h));
    let Some(w0) = w(p, &d0) else {
        return Ok(Refinement { g: g.clone(), h: h.clone(), defects: vec![None] });
    };
    let bound = match hyp {
        RefineHypothesis::Resultant => {
            let r = QPoly::resultant(g, h)?;
            vq(p, &r).map(|v| 2 * v).ok_or_else(|| Error::hypothesis("res(G, H) = 0"))?
        }
        RefineHypothesis::Discriminant => {
            vq(p, &f.discriminant()?).ok_or_else(|| Error::hypothesis("dis(f) = 0"))?
        }
    };
    if w0 <= bound {
        let what = match hyp {
            RefineHypothesis::Resultant => "2 v(res(G, H))",
            RefineHypothesis::Discriminant => "v(dis(f))",
        };
        return Err(Error::hypothesis(format!("need w(f - GH) > {what}, have {w0} <= {bound}")));
    }
    let (mut g, mut h) = (g.clone(), h.clone());
    let mut defects = Vec::new();
    loop {
        let d = f.sub(&g.mul(&h));
        let wd = w(p, &d);
        defects.push(wd);
        match wd {
            None => break,
            Some(v) if v >= n as i64 => break,
            _ => {}
        }
        if defects.len() > 64 {
            return Err(Error::Inconsistency("refinement did not converge".into()));
        }
        let (delta, gamma) = solve_sylvester(&g, &h, &d)?;
        g = reduce_below_leading(p, &g.add(&gamma), n);
        h = reduce_below_leading(p, &h.add(&delta), n);
    }
    Ok(Refinement { g, h, defects })
}
