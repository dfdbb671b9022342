//! Polynomials over Q and over Q_p at finite precision.

mod hensel;
mod polygon;
mod slope;

pub use hensel::{hensel_lift_factors, refine_factorization, RefineHypothesis, Refinement};
pub use polygon::{
    eisenstein_test, gauss_valuation_padic, newton_polygon, root_valuations, NewtonPolygon, Side,
};
pub use slope::{slope_factorization, weierstrass_prepare, SlopeFactor, TruncatedSeries, Weierstrass};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, fmt_q, Q};
use crate::error::{Error, Result};
use crate::padic::Padic;

/// Coefficient rings for [`Poly`]. Padic coefficients of one polynomial share
/// a prime, so their operations cannot fail on a prime mismatch.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    /// Exact zero; used for trimming.
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn quotient(&self, o: &Self) -> Result<Self>;
    fn determinant(m: Vec<Vec<Self>>, zero: &Self) -> Result<Self>;
}

impl Coeff for Q {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn int_like(&self, n: i64) -> Self {
        Q::from_integer(BigInt::from(n))
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn quotient(&self, o: &Self) -> Result<Self> {
        if Zero::is_zero(o) {
            return Err(Error::invalid("division by zero"));
        }
        Ok(self / o)
    }
    fn determinant(mut m: Vec<Vec<Self>>, _zero: &Self) -> Result<Self> {
        let n = m.len();
        let mut det = Q::one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| !Zero::is_zero(&m[i][k])) else {
                return Ok(Q::zero());
            };
            if piv != k {
                m.swap(piv, k);
                det = -det;
            }
            let pk = m[k][k].clone();
            det *= &pk;
            for i in k + 1..n {
                if Zero::is_zero(&m[i][k]) {
                    continue;
                }
                let factor = &m[i][k] / &pk;
                for j in k..n {
                    let t = &factor * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }
        Ok(det)
    }
}

impl Coeff for Padic {
    fn is_zero(&self) -> bool {
        self.is_exact_zero()
    }
    fn zero_like(&self) -> Self {
        Padic::zero(self.p())
    }
    fn int_like(&self, n: i64) -> Self {
        let prec = self.rel_prec().unwrap_or(crate::padic::DEFAULT_PREC);
        Padic::from_int(self.p(), n, prec).expect("prime already validated")
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o).expect("shared prime")
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o).expect("shared prime")
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o).expect("shared prime")
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn quotient(&self, o: &Self) -> Result<Self> {
        self.div(o)
    }
    /// Elimination pivoting on the least valuation. When a column is zero at
    /// the known precision the result is O(p^b), with `b` the pivot valuations
    /// so far plus the least valuation bound of each remaining column.
    fn determinant(mut m: Vec<Vec<Self>>, zero: &Self) -> Result<Self> {
        let n = m.len();
        let p = zero.p();
        let mut det: Option<Padic> = None;
        let mut negate = false;
        let mut pivot_vals = 0i64;
        for k in 0..n {
            let piv = (k..n)
                .filter(|&i| !m[i][k].is_zero_at_precision())
                .min_by_key(|&i| m[i][k].valuation_lower_bound().unwrap());
            let Some(piv) = piv else {
                let mut bound = pivot_vals;
                for j in k..n {
                    match (k..n).filter_map(|i| m[i][j].valuation_lower_bound()).min() {
                        Some(b) => bound += b,
                        None => return Ok(Padic::zero(p)),
                    }
                }
                return Ok(Padic::zero_to(p, bound));
            };
            if piv != k {
                m.swap(piv, k);
                negate = !negate;
            }
            let pk = m[k][k].clone();
            pivot_vals += pk.valuation_lower_bound().unwrap();
            det = Some(match det {
                None => pk.clone(),
                Some(d) => d.times(&pk),
            });
            for i in k + 1..n {
                if m[i][k].is_exact_zero() {
                    continue;
                }
                let factor = m[i][k].quotient(&pk)?;
                for j in k..n {
                    let t = factor.times(&m[k][j]);
                    m[i][j] = m[i][j].minus(&t);
                }
            }
        }
        let det = det.unwrap_or_else(|| Padic::one(p, crate::padic::DEFAULT_PREC));
        Ok(if negate { det.negate() } else { det })
    }
}

/// Polynomial with coefficients low degree first and no trailing exact zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
    zero: C,
}

pub type QPoly = Poly<Q>;
pub type PadicPoly = Poly<Padic>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>, zero: C) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs, zero }
    }

    pub fn zero_poly(zero: C) -> Self {
        Poly { coeffs: Vec::new(), zero }
    }

    pub fn constant(c: C) -> Self {
        let zero = c.zero_like();
        Poly::new(vec![c], zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_coeff(&self) -> &C {
        &self.zero
    }

    /// Index of the last coefficient that is not exactly zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).plus(&o.coeff(i))).collect(), self.zero.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).minus(&o.coeff(i))).collect(), self.zero.clone())
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.negate()).collect(), self.zero.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero_poly(self.zero.clone());
        }
        let mut c = vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].plus(&a.times(b));
            }
        }
        Poly::new(c, self.zero.clone())
    }

    pub fn scale(&self, s: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.times(s)).collect(), self.zero.clone())
    }

    /// Keeps the coefficients of degree at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        Poly::new(self.coeffs.iter().take(d + 1).cloned().collect(), self.zero.clone())
    }

    /// Euclidean division by a divisor whose leading coefficient is
    /// invertible at the available precision.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or_else(|| Error::invalid("division by the zero polynomial"))?;
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero_poly(self.zero.clone()), self.clone()));
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = r[k].quotient(&lead)?;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k - dd + i] = r[k - dd + i].minus(&c.times(di));
            }
            r[k] = self.zero.clone();
            q[k - dd] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(q, self.zero.clone()), Poly::new(r, self.zero.clone())))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&c.int_like(i as i64)))
            .collect();
        Poly::new(c, self.zero.clone())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(self.zero.clone(), |acc, c| acc.times(x).plus(c))
    }

    /// f(T + a).
    pub fn shift(&self, a: &C) -> Self {
        let mut out = Poly::zero_poly(self.zero.clone());
        let lin = Poly::new(vec![a.clone(), a.int_like(1)], self.zero.clone());
        for c in self.coeffs.iter().rev() {
            out = out.mul(&lin).add(&Poly::constant(c.clone()));
        }
        out
    }

    pub(crate) fn sylvester(g: &Self, h: &Self) -> Result<Vec<Vec<C>>> {
        let (m, n) = match (g.degree(), h.degree()) {
            (Some(m), Some(n)) if m + n > 0 => (m, n),
            (Some(_), Some(_)) => return Err(Error::invalid("resultant of two constants is undefined")),
            _ => return Err(Error::invalid("resultant of the zero polynomial")),
        };
        let size = m + n;
        let mut s = vec![vec![g.zero.clone(); size]; size];
        // n columns of g's coefficients, then m columns of h's, highest degree at the top
        for j in 0..n {
            for (k, c) in g.coeffs.iter().rev().enumerate() {
                s[j + k][j] = c.clone();
            }
        }
        for j in 0..m {
            for (k, c) in h.coeffs.iter().rev().enumerate() {
                s[j + k][n + j] = c.clone();
            }
        }
        Ok(s)
    }

    /// Sylvester resultant: n = deg h columns of g's coefficients followed
    /// by m = deg g columns of h's, leading coefficients in the top row.
    pub fn resultant(g: &Self, h: &Self) -> Result<C> {
        let s = Self::sylvester(g, h)?;
        C::determinant(s, &g.zero)
    }

    /// dis(g) from res(g, g') = (-1)^{m(m-1)/2} b_m dis(g).
    pub fn discriminant(&self) -> Result<C> {
        let m = self.degree().ok_or_else(|| Error::invalid("discriminant of the zero polynomial"))?;
        if m == 0 {
            return Err(Error::invalid("discriminant of a constant"));
        }
        if m == 1 {
            return Ok(self.zero.int_like(1));
        }
        let r = Self::resultant(self, &self.derivative())?;
        let d = r.quotient(&self.coeffs[m])?;
        Ok(if (m * (m - 1) / 2) % 2 == 1 { d.negate() } else { d })
    }
}

impl QPoly {
    pub fn from_q(coeffs: Vec<Q>) -> Self {
        Poly::new(coeffs, Q::zero())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect(), Q::zero())
    }

    /// Parses `c0 + c1*T + c2*T^2`; terms may come in any order, repeat, and
    /// use `-`. The variable may be written `T` or `S`.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::invalid("empty polynomial"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(i > 0 && compact[..i].ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if i > 0 {
                    return Err(Error::invalid(format!("malformed polynomial '{s}'")));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::invalid(format!("malformed polynomial '{s}'")));
        }
        terms.push((neg, cur));
        let mut coeffs: Vec<Q> = Vec::new();
        for (neg, t) in terms {
            let (c, e) = parse_term(&t).map_err(|_| Error::invalid(format!("malformed term '{t}' in '{s}'")))?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Q::zero());
            }
            coeffs[e] += if neg { -c } else { c };
        }
        Ok(QPoly::from_q(coeffs))
    }

    /// Least valuation of a coefficient (the Gauss valuation with C = 0).
    pub fn content_valuation(&self, p: u64) -> Option<i64> {
        self.coeffs.iter().filter(|c| !Zero::is_zero(*c)).map(|c| arith::vp_q(p, c)).min()
    }

    pub fn to_padic(&self, p: u64, prec: u32) -> Result<PadicPoly> {
        let c = self.coeffs.iter().map(|c| Padic::from_rational(p, c, prec)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(c, Padic::zero(p)))
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_q).collect()
    }
}

impl PadicPoly {
    pub fn p(&self) -> u64 {
        self.zero.p()
    }

    /// Stored representatives as an exact rational polynomial.
    pub fn representative(&self) -> QPoly {
        QPoly::from_q(self.coeffs.iter().map(|c| c.representative()).collect())
    }

    /// Drops leading coefficients that are zero at their precision.
    pub fn trim_at_precision(&self) -> Self {
        let mut c = self.coeffs.clone();
        while c.last().is_some_and(|x| x.is_zero_at_precision()) {
            c.pop();
        }
        Poly::new(c, self.zero.clone())
    }
}

fn parse_term(t: &str) -> std::result::Result<(Q, usize), ()> {
    let (coef, mono) = match t.find(['T', 'S']) {
        None => return arith::parse_q(t).map(|c| (c, 0)).map_err(|_| ()),
        Some(i) => (&t[..i], &t[i..]),
    };
    let c = if coef.is_empty() {
        Q::one()
    } else {
        let coef = coef.strip_suffix('*').ok_or(())?;
        arith::parse_q(coef).map_err(|_| ())?
    };
    let e = match &mono[1..] {
        "" => 1,
        rest => rest.strip_prefix('^').ok_or(())?.parse::<usize>().map_err(|_| ())?,
    };
    Ok((c, e))
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{}", fmt_q(&a))?,
                (1, true) => write!(f, "T")?,
                (1, false) => write!(f, "{}*T", fmt_q(&a))?,
                (_, true) => write!(f, "T^{i}")?,
                (_, false) => write!(f, "{}*T^{i}", fmt_q(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for PadicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_exact_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*T"),
                _ => format!("({c})*T^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Φ_{p^n}(T) = Φ_p(T^{p^{n-1}}).
pub fn cyclotomic(p: u64, n: u32) -> Result<QPoly> {
    arith::require_prime(p)?;
    if n == 0 {
        return Err(Error::invalid("cyclotomic index needs n >= 1"));
    }
    let step = p.checked_pow(n - 1).ok_or_else(|| Error::Resource("p^(n-1) overflows".into()))? as usize;
    let mut c = vec![0i64; step * (p as usize - 1) + 1];
    for k in 0..p as usize {
        c[k * step] = 1;
    }
    Ok(QPoly::from_ints(&c))
}

/// Splits f = gh over Q_p as f = (b^{-1} g)(b h) with both factors integral,
/// where b = p^{w(g)} and w is the least coefficient valuation.
pub fn primitive_rescale(p: u64, f: &QPoly, g: &QPoly, h: &QPoly) -> Result<(Q, QPoly, QPoly)> {
    arith::require_prime(p)?;
    if f.coeffs.iter().any(|c| !Zero::is_zero(c) && arith::vp_q(p, c) < 0) {
        return Err(Error::invalid("f must have p-integral coefficients"));
    }
    if &g.mul(h) != f {
        return Err(Error::invalid("f != g*h"));
    }
    let w = g.content_valuation(p).ok_or_else(|| Error::invalid("g is zero"))?;
    let pw = Q::from_integer(arith::pow_big(p, w.unsigned_abs() as u32));
    let b = if w >= 0 { pw } else { pw.recip() };
    let binv = b.recip();
    Ok((b.clone(), g.scale(&binv), h.scale(&b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};
    use proptest::prelude::*;

    #[test]
    fn parse_and_format_round_trip() {
        let f = QPoly::parse("1 + T + 1/2*T^2 - 3*T^5").unwrap();
        assert_eq!(f.coeffs().len(), 6);
        assert_eq!(f.coeff(2), q(1, 2));
        assert_eq!(f.coeff(5), qi(-3));
        assert_eq!(f.to_string(), "1 + T + 1/2*T^2 - 3*T^5");
        assert_eq!(QPoly::parse(&f.to_string()).unwrap(), f);
        assert_eq!(QPoly::parse("-T^2 + 4").unwrap(), QPoly::from_ints(&[4, 0, -1]));
        assert_eq!(QPoly::parse("S^3 - 2").unwrap(), QPoly::from_ints(&[-2, 0, 0, 1]));
        for bad in ["", "1 +", "T^", "2T", "1 ++ T", "x"] {
            assert!(QPoly::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn resultant_examples() {
        let t = QPoly::from_ints(&[0, 1]);
        assert_eq!(QPoly::resultant(&t, &QPoly::from_ints(&[-1, 1])).unwrap(), qi(-1));
        assert_eq!(QPoly::resultant(&QPoly::from_ints(&[-1, 1]), &QPoly::from_ints(&[-1, 0, 1])).unwrap(), qi(0));
        for u in [-3i64, 2, 5, 7] {
            assert_eq!(QPoly::from_ints(&[-u, 0, 1]).discriminant().unwrap(), qi(4 * u));
        }
        // cubic: dis(T^3 + aT + b) = -4a^3 - 27b^2
        assert_eq!(QPoly::from_ints(&[5, 3, 0, 1]).discriminant().unwrap(), qi(-4 * 27 - 27 * 25));
        assert!(QPoly::resultant(&QPoly::from_ints(&[2]), &QPoly::from_ints(&[3])).is_err());
    }

    #[test]
    fn resultant_matches_root_product() {
        // res(g, h) = lc(g)^n lc(h)^m prod (a_i - b_j) for split g, h
        let roots_g = [1i64, -2];
        let roots_h = [3i64, 0, 5];
        let from_roots = |rs: &[i64], lc: i64| {
            rs.iter().fold(QPoly::from_ints(&[lc]), |acc, &r| acc.mul(&QPoly::from_ints(&[-r, 1])))
        };
        let g = from_roots(&roots_g, 2);
        let h = from_roots(&roots_h, 3);
        let mut prod = qi(2i64.pow(3) * 3i64.pow(2));
        for a in roots_g {
            for b in roots_h {
                prod *= qi(a - b);
            }
        }
        assert_eq!(QPoly::resultant(&g, &h).unwrap(), prod);
    }

    #[test]
    fn padic_resultant_agrees_with_exact() {
        let g = QPoly::parse("3 + 9*T + T^2").unwrap();
        let h = QPoly::parse("1/2 - 6*T + 27*T^3").unwrap();
        let exact = QPoly::resultant(&g, &h).unwrap();
        let r = PadicPoly::resultant(&g.to_padic(3, 30).unwrap(), &h.to_padic(3, 30).unwrap()).unwrap();
        let want = Padic::from_rational(3, &exact, 30).unwrap();
        assert!(r.congruent(&want, 20).unwrap());
    }

    #[test]
    fn padic_determinant_bounds_vanishing_minors() {
        let p = 5;
        let m = vec![
            vec![Padic::from_int(p, 1, 4).unwrap(), Padic::from_int(p, 2, 4).unwrap()],
            vec![Padic::from_int(p, 1, 4).unwrap(), Padic::from_int(p, 2, 4).unwrap()],
        ];
        let d = Padic::determinant(m, &Padic::zero(p)).unwrap();
        assert!(d.is_zero_at_precision() && !d.is_exact_zero());
        assert_eq!(d.abs_prec(), Some(4));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(2, 1).unwrap(), QPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(3, 2).unwrap(), QPoly::from_ints(&[1, 0, 0, 1, 0, 0, 1]));
        let s = cyclotomic(5, 1).unwrap().shift(&qi(1));
        assert_eq!(s, QPoly::from_ints(&[5, 10, 10, 5, 1]));
    }

    #[test]
    fn primitive_rescale_examples() {
        let f = QPoly::from_ints(&[0, 0, 1]);
        let (b, g, h) = primitive_rescale(3, &f, &QPoly::from_q(vec![qi(0), q(1, 3)]), &QPoly::from_ints(&[0, 3])).unwrap();
        assert_eq!(b, q(1, 3));
        assert_eq!((g, h), (QPoly::from_ints(&[0, 1]), QPoly::from_ints(&[0, 1])));
        let g = QPoly::from_ints(&[1, 1]);
        let (b, _, _) = primitive_rescale(3, &g.mul(&g), &g, &g).unwrap();
        assert_eq!(b, qi(1));
        assert!(primitive_rescale(3, &f, &g, &g).is_err());
    }

    fn arb_qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
        proptest::collection::vec((-20i64..20, 1i64..5), 1..=max_deg + 1)
            .prop_map(|cs| QPoly::from_q(cs.into_iter().map(|(a, b)| q(a, b)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]

        #[test]
        fn resultant_is_multiplicative(g in arb_qpoly(3), h1 in arb_qpoly(2), h2 in arb_qpoly(2)) {
            prop_assume!(g.degree().unwrap_or(0) + h1.degree().unwrap_or(0) > 0);
            prop_assume!(g.degree().unwrap_or(0) + h2.degree().unwrap_or(0) > 0);
            prop_assume!(!g.is_zero() && !h1.is_zero() && !h2.is_zero());
            let lhs = QPoly::resultant(&g, &h1.mul(&h2)).unwrap();
            let rhs = QPoly::resultant(&g, &h1).unwrap() * QPoly::resultant(&g, &h2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn discriminant_of_product(g in arb_qpoly(3), h in arb_qpoly(3)) {
            prop_assume!(g.degree().unwrap_or(0) >= 1 && h.degree().unwrap_or(0) >= 1);
            let lhs = g.mul(&h).discriminant().unwrap();
            let r = QPoly::resultant(&g, &h).unwrap();
            let rhs = g.discriminant().unwrap() * h.discriminant().unwrap() * &r * &r;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn divrem_reconstructs(a in arb_qpoly(6), d in arb_qpoly(3)) {
            prop_assume!(!d.is_zero());
            let (qt, r) = a.divrem(&d).unwrap();
            prop_assert_eq!(qt.mul(&d).add(&r), a);
            prop_assert!(r.degree().map_or(true, |rd| rd < d.degree().unwrap()) || d.degree() == Some(0));
        }
    }
}
