//! Valuations and normalized absolute values on Q and on F_q(T).
//!
//! On Q the places are the primes plus the archimedean place, normalized so
//! that `|x|_p = p^{-v_p(x)}`; the product of all normalized absolute values
//! of a nonzero rational is exactly 1. On F_q(T) absolute values are never
//! materialized: the sum formula is checked additively on `(v, deg)` pairs.

mod function_field;

pub use function_field::{
    ff_valuation, sum_formula_check, FfPlaceKind, FiniteField, FqPoly, FunctionFieldPlace,
    RationalFunction, SumFormulaEntry, SumFormulaReport,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{self, fmt_q, Q};
use crate::error::{Error, Result};

/// An integer valuation, possibly `+∞` (the valuation of zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    PlusInfinity,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::PlusInfinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::PlusInfinity => write!(f, "+inf"),
        }
    }
}

/// A place of Q: a prime or the archimedean place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RationalPlace {
    Finite(u64),
    Infinite,
}

impl RationalPlace {
    pub fn prime(p: u64) -> Result<Self> {
        arith::require_prime(p)?;
        Ok(RationalPlace::Finite(p))
    }
}

impl fmt::Display for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalPlace::Finite(p) => write!(f, "{p}"),
            RationalPlace::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for RationalPlace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// p-adic valuation of a rational; zero maps to `+∞`.
pub fn vp_rational(p: u64, x: &Q) -> Result<Valuation> {
    arith::require_prime(p)?;
    if x.is_zero() {
        return Ok(Valuation::PlusInfinity);
    }
    Ok(Valuation::Finite(arith::vp_q(p, x)))
}

/// Normalized absolute value `|x|_v`.
pub fn abs_at(place: RationalPlace, x: &Q) -> Q {
    match place {
        RationalPlace::Infinite => x.abs(),
        RationalPlace::Finite(p) => {
            if x.is_zero() {
                return Q::zero();
            }
            let v = arith::vp_q(p, x);
            let pv = Q::from_integer(arith::pow_big(p, v.unsigned_abs() as u32));
            if v >= 0 {
                pv.recip()
            } else {
                pv
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaceValue {
    pub place: RationalPlace,
    #[serde(serialize_with = "crate::serde_q::ser")]
    pub abs: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductFormulaReport {
    pub entries: Vec<PlaceValue>,
    #[serde(serialize_with = "crate::serde_q::ser")]
    pub product: Q,
}

impl fmt::Display for ProductFormulaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "|x|_{} = {}", e.place, fmt_q(&e.abs))?;
        }
        write!(f, "product = {}", fmt_q(&self.product))
    }
}

/// Lists the archimedean place and every prime where `|x|_p != 1`, together
/// with the exact product of the listed values.
pub fn product_formula_report(x: &Q) -> Result<ProductFormulaReport> {
    if x.is_zero() {
        return Err(Error::invalid("product formula needs x != 0"));
    }
    let mut entries = vec![PlaceValue { place: RationalPlace::Infinite, abs: x.abs() }];
    let mut primes: Vec<u64> = Vec::new();
    for part in [x.numer().magnitude(), x.denom().magnitude()] {
        for (p, _) in arith::factor_big(part) {
            let p: u64 = p
                .try_into()
                .map_err(|_| Error::Resource("prime factor exceeds 64 bits".into()))?;
            primes.push(p);
        }
    }
    primes.sort_unstable();
    for p in primes {
        entries.push(PlaceValue { place: RationalPlace::Finite(p), abs: abs_at(RationalPlace::Finite(p), x) });
    }
    let product = entries.iter().fold(Q::one(), |acc, e| acc * &e.abs);
    Ok(ProductFormulaReport { entries, product })
}

/// Gauss valuation `w(f) = min_j (j*C + v(a_j))` of a polynomial given by the
/// valuations of its coefficients (`None` for a zero coefficient), together
/// with every index attaining the minimum.
pub fn gauss_valuation(c: &Q, coeff_vals: &[Option<Q>]) -> Result<(Q, Vec<usize>)> {
    let terms: Vec<(usize, Q)> = coeff_vals
        .iter()
        .enumerate()
        .filter_map(|(j, v)| v.as_ref().map(|v| (j, Q::from_integer(BigInt::from(j)) * c + v)))
        .collect();
    let min = terms
        .iter()
        .map(|(_, w)| w)
        .min()
        .cloned()
        .ok_or_else(|| Error::invalid("Gauss valuation of the zero polynomial"))?;
    let attaining = terms.iter().filter(|(_, w)| *w == min).map(|(j, _)| *j).collect();
    Ok((min, attaining))
}

/// One approximation target: place, value to approach, and tolerance.
#[derive(Debug, Clone)]
pub struct ApproxTarget {
    pub place: RationalPlace,
    pub value: Q,
    pub eps: Q,
}

/// Finds a rational `y` with `|x_j - y|_j < eps_j` at every listed place.
///
/// Finite places are handled by CRT on residues modulo `p_j^{n_j}` with
/// `p_j^{-n_j} < eps_j`; an archimedean target is then met by adding a
/// multiple `k/d * M` of the modulus with `d` prime to every listed prime.
pub fn weak_approximation(targets: &[ApproxTarget]) -> Result<Q> {
    if targets.is_empty() {
        return Err(Error::invalid("weak approximation needs at least one place"));
    }
    let mut seen = std::collections::HashSet::new();
    for t in targets {
        if !seen.insert(t.place) {
            return Err(Error::invalid(format!("duplicate place {}", t.place)));
        }
        if !t.eps.is_positive() {
            return Err(Error::invalid(format!("tolerance at {} must be positive", t.place)));
        }
        if let RationalPlace::Finite(p) = t.place {
            arith::require_prime(p)?;
        }
    }
    if targets.len() == 1 {
        return Ok(targets[0].value.clone());
    }
    let finite: Vec<&ApproxTarget> = targets
        .iter()
        .filter(|t| matches!(t.place, RationalPlace::Finite(_)))
        .collect();
    let primes: Vec<u64> = finite
        .iter()
        .map(|t| match t.place {
            RationalPlace::Finite(p) => p,
            RationalPlace::Infinite => unreachable!(),
        })
        .collect();
    for t in &finite {
        for &l in &primes {
            if (t.value.denom() % BigInt::from(l)).is_zero() {
                return Err(Error::invalid(format!(
                    "target {} at place {} has denominator divisible by listed prime {l}",
                    fmt_q(&t.value),
                    t.place
                )));
            }
        }
    }

    // CRT over the finite places.
    let mut y = BigInt::zero();
    let mut modulus = BigInt::one();
    for (t, &p) in finite.iter().zip(&primes) {
        let mut n = 0u32;
        while Q::from_integer(arith::pow_big(p, n)).recip() >= t.eps {
            n += 1;
        }
        let m = arith::pow_big(p, n);
        let r = arith::q_mod(&t.value, &m).expect("denominator prime to p");
        // y' = y + modulus * k with y' = r mod m
        let inv = arith::inv_mod(&modulus, &m).expect("distinct primes");
        let k = ((&r - &y) * inv).mod_floor(&m);
        y += &modulus * k;
        modulus *= m;
    }
    let mut y = Q::from_integer(y);

    if let Some(inf) = targets.iter().find(|t| t.place == RationalPlace::Infinite) {
        if (&y - &inf.value).abs() >= inf.eps {
            let m = Q::from_integer(modulus.clone());
            // smallest d > M / (2 eps) prime to every listed prime
            let bound = (&m / (Q::from_integer(BigInt::from(2)) * &inf.eps)).floor().to_integer();
            let mut d = bound + 1u32;
            while primes.iter().any(|&p| (&d % BigInt::from(p)).is_zero()) {
                d += 1u32;
            }
            let dq = Q::from_integer(d);
            let k = ((&inf.value - &y) * &dq / &m).round();
            y += k * m / dq;
        }
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn vp_examples() {
        assert_eq!(vp_rational(2, &qi(12)).unwrap(), Valuation::Finite(2));
        assert_eq!(vp_rational(13, &q(-691, 2730)).unwrap(), Valuation::Finite(-1));
        assert_eq!(vp_rational(5, &q(-1, 4)).unwrap(), Valuation::Finite(0));
        assert_eq!(vp_rational(5, &qi(0)).unwrap(), Valuation::PlusInfinity);
        assert!(matches!(vp_rational(6, &qi(3)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn product_formula_examples() {
        let r = product_formula_report(&qi(-1)).unwrap();
        assert_eq!(r.entries, vec![PlaceValue { place: RationalPlace::Infinite, abs: qi(1) }]);
        assert_eq!(r.product, qi(1));

        let r = product_formula_report(&qi(12)).unwrap();
        let got: Vec<(RationalPlace, Q)> = r.entries.iter().map(|e| (e.place, e.abs.clone())).collect();
        assert_eq!(
            got,
            vec![
                (RationalPlace::Infinite, qi(12)),
                (RationalPlace::Finite(2), q(1, 4)),
                (RationalPlace::Finite(3), q(1, 3)),
            ]
        );
        assert_eq!(r.product, qi(1));

        for p in [2u64, 3, 101] {
            let r = product_formula_report(&qi(p as i64)).unwrap();
            assert_eq!(r.entries.len(), 2);
            assert_eq!(r.entries[1].abs, q(1, p as i64));
            assert_eq!(r.product, qi(1));
        }
        assert!(product_formula_report(&qi(0)).is_err());
    }

    #[test]
    fn gauss_valuation_examples() {
        let vals = vec![Some(qi(1)), Some(qi(0))];
        assert_eq!(gauss_valuation(&qi(0), &vals).unwrap(), (qi(0), vec![1]));
        assert_eq!(gauss_valuation(&qi(1), &vals).unwrap(), (qi(1), vec![0, 1]));
        assert!(gauss_valuation(&qi(1), &[None, None]).is_err());
    }

    #[test]
    fn gauss_valuation_exponential_truncation() {
        // v_2(1/j!) for j = 0..7
        let vals: Vec<Option<Q>> = [0i64, 0, -1, -1, -3, -3, -4, -4].iter().map(|&v| Some(qi(v))).collect();
        let (_, idx) = gauss_valuation(&q(3, 4), &vals).unwrap();
        assert_eq!(idx, vec![0, 4]);
    }

    fn tgt(place: RationalPlace, value: Q, eps: Q) -> ApproxTarget {
        ApproxTarget { place, value, eps }
    }

    #[test]
    fn weak_approximation_examples() {
        use RationalPlace::*;
        let y = weak_approximation(&[tgt(Finite(2), qi(1), q(1, 7)), tgt(Finite(3), qi(0), q(1, 2))]).unwrap();
        assert_eq!(y, qi(9));
        let y = weak_approximation(&[tgt(Finite(5), q(2, 3), q(1, 125))]).unwrap();
        assert_eq!(y, q(2, 3));
        let y = weak_approximation(&[tgt(Finite(2), qi(1), q(1, 2)), tgt(Infinite, q(1, 2), q(3, 5))]).unwrap();
        assert_eq!(y, qi(1));
    }

    #[test]
    fn weak_approximation_tight_archimedean_window() {
        use RationalPlace::*;
        let ts = vec![
            tgt(Finite(3), qi(2), q(1, 30)),
            tgt(Finite(7), q(1, 2), q(1, 10)),
            tgt(Infinite, q(-5, 3), q(1, 1000)),
        ];
        let y = weak_approximation(&ts).unwrap();
        for t in &ts {
            assert!(abs_at(t.place, &(&t.value - &y)) < t.eps, "{} failed", t.place);
        }
    }

    #[test]
    fn weak_approximation_rejections() {
        use RationalPlace::*;
        assert!(weak_approximation(&[tgt(Finite(2), qi(1), q(1, 2)), tgt(Finite(2), qi(0), q(1, 2))]).is_err());
        assert!(weak_approximation(&[tgt(Finite(2), q(1, 2), q(1, 2)), tgt(Finite(3), qi(0), q(1, 2))]).is_err());
    }
}
