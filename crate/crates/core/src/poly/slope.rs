//! Splitting a polynomial along the sides of its Newton polygon, and
//! Weierstrass preparation of truncated power series.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::polygon::{gauss_valuation_padic, newton_polygon};
use super::{Coeff, PadicPoly, Poly};
use crate::arith::Q;
use crate::error::{Error, Result};
use crate::padic::{Padic, DEFAULT_PREC};
use crate::valuations::Valuation;

/// A factor that is pure of the given type.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeFactor {
    #[serde(serialize_with = "ser_poly")]
    pub factor: PadicPoly,
    pub length: usize,
    #[serde(serialize_with = "crate::serde_q::ser")]
    pub slope: Q,
}

fn ser_poly<S: serde::Serializer>(f: &PadicPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(f.coeffs().iter())
}

fn qz(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn working_one(f: &PadicPoly) -> Padic {
    let prec = f.coeffs().iter().filter_map(|c| c.rel_prec()).max().unwrap_or(DEFAULT_PREC);
    Padic::one(f.p(), prec)
}

/// Every coefficient of `e` is certified to have valuation >= `target`.
fn vanishes_to(e: &PadicPoly, target: i64) -> bool {
    e.coeffs().iter().all(|c| c.valuation_lower_bound().map_or(true, |v| v >= target))
}

/// Gauss valuation w_C(f) with C = 0, i.e. the least coefficient valuation.
fn content(f: &PadicPoly) -> Option<i64> {
    f.coeffs().iter().filter_map(|c| c.valuation_lower_bound()).min()
}

/// Splits f = G H with deg G = n, where n is the last index attaining the
/// Gauss valuation w_C(f), by iterating f - GH = qG + r, G += r, H += q.
fn split(f: &PadicPoly, c: &Q, n: usize, target: i64) -> Result<(PadicPoly, PadicPoly)> {
    let m = f.degree().unwrap();
    let w = gauss_valuation_padic(f, c).unwrap();
    let tail = Poly::new(
        f.coeffs().iter().enumerate().map(|(j, a)| if j > n { a.clone() } else { a.zero_like() }).collect(),
        f.zero_coeff().clone(),
    );
    let wt = gauss_valuation_padic(&tail, c).ok_or_else(|| Error::invalid("no coefficients beyond the split"))?;
    if wt <= w {
        return Err(Error::precision(format!(
            "cannot certify w(a_j T^j) > w(f) for j > {n} at the known precision"
        )));
    }
    let goal = qz(target) + (qz(m as i64) * c).max(Q::zero());
    let mut g = f.truncate(n);
    let mut h = Poly::constant(working_one(f));
    let mut last: Option<Q> = None;
    for _ in 0..400 {
        let e = f.sub(&g.mul(&h));
        let Some(we) = gauss_valuation_padic(&e, c) else { break };
        if we >= goal || last.as_ref().is_some_and(|l| &we <= l) {
            break;
        }
        last = Some(we);
        let (q, r) = e.divrem(&g)?;
        g = g.add(&r);
        h = h.add(&q);
    }
    Ok((g, h.trim_at_precision()))
}

fn split_all(f: &PadicPoly, target: i64, out: &mut Vec<PadicPoly>) -> Result<()> {
    let np = newton_polygon(f)?;
    if np.sides.len() <= 1 {
        out.push(f.clone());
        return Ok(());
    }
    let c = -np.sides[0].slope.clone();
    let n = np.vertices[1].0;
    let (g, h) = split(f, &c, n, target)?;
    let wg = content(&g).unwrap_or(0);
    out.push(g);
    split_all(&h, target - wg, out)
}

/// Factors f into pure factors, one per side of its Newton polygon, in
/// order of increasing slope. The product of the factors is certified to
/// agree with f modulo p^{n + w(f)}, where w(f) is the least coefficient
/// valuation.
pub fn slope_factorization(f: &PadicPoly, n: u32) -> Result<Vec<SlopeFactor>> {
    let np = newton_polygon(f)?;
    let w0 = content(f).unwrap();
    let target = w0 + n as i64;
    let mut parts = Vec::new();
    split_all(f, target, &mut parts)?;
    let product = parts.iter().skip(1).fold(parts[0].clone(), |acc, g| acc.mul(g));
    if !vanishes_to(&f.sub(&product), target) {
        return Err(Error::precision(format!("product of the factors is not certified modulo p^{target}")));
    }
    let mut out = Vec::new();
    for (g, side) in parts.into_iter().zip(&np.sides) {
        let t = newton_polygon(&g)?;
        if t.sides.len() != 1 || t.sides[0] != *side {
            return Err(Error::precision("a factor's polygon could not be certified pure"));
        }
        out.push(SlopeFactor { factor: g, length: side.length, slope: side.slope.clone() });
    }
    Ok(out)
}

/// c_0 + c_1 T + ... + c_M T^M + (terms of valuation >= tail_bound); a
/// `None` bound means the series is this polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    pub coeffs: PadicPoly,
    pub tail_bound: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Weierstrass {
    pub n_f: usize,
    pub g: PadicPoly,
    pub h: TruncatedSeries,
    /// f ≡ g h modulo p^precision.
    pub precision: i64,
}

/// f = g h with g a polynomial of degree N_f whose leading term carries
/// w(g), and h a series with h(0) = 1 and w(h - 1) > 0. The target is
/// f ≡ g h modulo p^{min(w(f) + n, tail bound)}.
pub fn weierstrass_prepare(f: &TruncatedSeries, n: u32) -> Result<Weierstrass> {
    let poly = &f.coeffs;
    if poly.is_zero() {
        return Err(Error::invalid("Weierstrass preparation of zero"));
    }
    let vals: Vec<(usize, Valuation)> = poly
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(j, c)| c.valuation().ok().map(|v| (j, v)))
        .collect();
    let w = vals
        .iter()
        .filter_map(|(_, v)| v.finite())
        .min()
        .ok_or_else(|| Error::precision("no coefficient has a certified valuation"))?;
    let n_f = vals.iter().filter(|(_, v)| *v == Valuation::Finite(w)).map(|(j, _)| *j).max().unwrap();
    for (j, c) in poly.coeffs().iter().enumerate() {
        if c.is_zero_at_precision() && !c.is_exact_zero() {
            let k = c.valuation_lower_bound().unwrap();
            if k < w || (j > n_f && k <= w) {
                return Err(Error::precision(format!("a_{j} = O(p^{k}) leaves w(f) or N_f undetermined")));
            }
        }
    }
    if let Some(b) = f.tail_bound {
        if b <= w {
            return Err(Error::precision(format!("tail bound {b} does not exceed w(f) = {w}, so N_f is undetermined")));
        }
    }
    let target = match f.tail_bound {
        Some(b) => b.min(w + n as i64),
        None => w + n as i64,
    };
    let zero = Q::zero();
    let mut g = poly.truncate(n_f);
    let mut h = Poly::constant(working_one(poly));
    let mut last: Option<Q> = None;
    for _ in 0..400 {
        let e = poly.sub(&g.mul(&h));
        let Some(we) = gauss_valuation_padic(&e, &zero) else { break };
        if we >= qz(target) || last.as_ref().is_some_and(|l| &we <= l) {
            break;
        }
        last = Some(we);
        let (q, r) = e.divrem(&g)?;
        g = g.add(&r);
        h = h.add(&q);
    }
    let h0 = h.coeff(0);
    let h0inv = working_one(poly).div(&h0)?;
    let g = g.scale(&h0);
    let h = h.scale(&h0inv).trim_at_precision();
    let residual = poly.sub(&g.mul(&h));
    let achieved = residual
        .coeffs()
        .iter()
        .filter_map(|c| c.valuation_lower_bound())
        .min()
        .unwrap_or(i64::MAX)
        .min(f.tail_bound.unwrap_or(i64::MAX));
    if achieved < target {
        return Err(Error::precision(format!("f ≡ g h certified only modulo p^{achieved}, wanted p^{target}")));
    }
    let precision = achieved.min(target);
    let hm1 = h.sub(&Poly::constant(working_one(poly)));
    if hm1.coeffs().iter().any(|c| c.valuation_lower_bound().is_some_and(|v| v <= 0)) || precision - w <= 0 {
        return Err(Error::Inconsistency("w(h - 1) > 0 failed".into()));
    }
    if g.degree() != Some(n_f) {
        return Err(Error::Inconsistency("deg g != N_f".into()));
    }
    Ok(Weierstrass { n_f, g, h: TruncatedSeries { coeffs: h, tail_bound: Some(precision - w) }, precision })
}
