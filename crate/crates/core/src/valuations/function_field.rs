//! Finite fields F_q, polynomials over them, and the places of F_q(T).

use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

/// F_q with q = p^m, elements encoded as integers in [0, q) whose base-p
/// digits are the coefficients of a residue modulo a fixed monic irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: u64,
    /// Monic modulus over F_p, low degree first (length m + 1).
    modulus: Vec<u64>,
}

/// Desk-scale cap on q; field elements and trial division are enumerated.
const MAX_Q: u64 = 1 << 16;

impl FiniteField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = arith::prime_power(q)
            .ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::Resource(format!("field size {q} exceeds {MAX_Q}")));
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            let base = FiniteField { p, m: 1, q: p, modulus: vec![0, 1] };
            (0..p.pow(m))
                .map(|i| monic_from_index(&base, m as usize, i).0)
                .find(|f| base.is_irreducible(&FqPoly(f.clone())))
                .expect("an irreducible of every degree exists")
        };
        Ok(FiniteField { p, m, q, modulus })
    }

    pub fn size(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Coefficients of the defining modulus over F_p, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        let mut d = Vec::with_capacity(self.m as usize);
        let mut a = a;
        for _ in 0..self.m {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    fn from_digits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &x| acc * self.p + x)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.m == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let d: Vec<u64> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.m == 1 {
            return arith::mul_mod(a, b, self.p);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &mi) in self.modulus[..m].iter().enumerate() {
                prod[k - m + i] = (prod[k - m + i] + (self.p - mi) * c) % self.p;
            }
        }
        self.from_digits(&prod[..m])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::invalid("inverse of zero in a finite field"));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Monic polynomials of degree d in index order.
    pub fn monic_polys(&self, d: usize) -> impl Iterator<Item = FqPoly> + '_ {
        (0..self.q.pow(d as u32)).map(move |i| FqPoly(monic_from_index(self, d, i).0))
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most half the degree.
    pub fn is_irreducible(&self, f: &FqPoly) -> bool {
        let n = match f.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        for d in 1..=n / 2 {
            for g in self.monic_polys(d) {
                if self.rem(f, &g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn poly_add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.0.len().max(b.0.len());
        let c = (0..n).map(|i| self.add(a.coeff(i), b.coeff(i))).collect();
        FqPoly::new(c)
    }

    pub fn poly_sub(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let n = a.0.len().max(b.0.len());
        let c = (0..n).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect();
        FqPoly::new(c)
    }

    pub fn poly_mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_zero() || b.is_zero() {
            return FqPoly::zero();
        }
        let mut c = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                c[i + j] = self.add(c[i + j], self.mul(x, y));
            }
        }
        FqPoly::new(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
        let db = b.degree().expect("division by the zero polynomial");
        let lead_inv = self.inv(b.0[db]).expect("nonzero leading coefficient");
        let mut r = a.0.clone();
        let mut quot = vec![0u64; a.0.len().saturating_sub(db).max(1)];
        while let Some(dr) = FqPoly::new(r.clone()).degree() {
            if dr < db {
                break;
            }
            let c = self.mul(r[dr], lead_inv);
            quot[dr - db] = c;
            for (i, &bi) in b.0.iter().enumerate() {
                r[dr - db + i] = self.sub(r[dr - db + i], self.mul(c, bi));
            }
            r.truncate(dr);
        }
        (FqPoly::new(quot), FqPoly::new(r))
    }

    pub fn rem(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        self.divrem(a, b).1
    }

    /// Splits `f` into a leading constant and monic irreducible factors with
    /// multiplicities, factors ordered by (degree, index).
    pub fn factor(&self, f: &FqPoly) -> Result<(u64, Vec<(FqPoly, u32)>)> {
        let n = f.degree().ok_or_else(|| Error::invalid("cannot factor the zero polynomial"))?;
        let lead = f.0[n];
        let li = self.inv(lead)?;
        let mut g = FqPoly::new(f.0.iter().map(|&c| self.mul(c, li)).collect());
        let mut out = Vec::new();
        let mut d = 1;
        while g.degree().unwrap_or(0) >= 2 * d {
            for h in self.monic_polys(d) {
                let mut e = 0;
                loop {
                    let (qt, r) = self.divrem(&g, &h);
                    if !r.is_zero() {
                        break;
                    }
                    g = qt;
                    e += 1;
                }
                if e > 0 {
                    out.push((h, e));
                }
            }
            d += 1;
        }
        if g.degree().unwrap_or(0) >= 1 {
            out.push((g, 1));
            out.sort_by_key(|(h, _)| (h.degree(), h.0.iter().rev().copied().collect::<Vec<_>>()));
        }
        Ok((lead, out))
    }
}

fn monic_from_index(k: &FiniteField, d: usize, mut i: u64) -> FqPoly {
    let mut c = Vec::with_capacity(d + 1);
    for _ in 0..d {
        c.push(i % k.q);
        i /= k.q;
    }
    c.push(1);
    FqPoly(c)
}

/// Polynomial over F_q, low degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqPoly(Vec<u64>);

impl FqPoly {
    pub fn new(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        FqPoly(c)
    }

    pub fn zero() -> Self {
        FqPoly(Vec::new())
    }

    pub fn constant(c: u64) -> Self {
        FqPoly::new(vec![c])
    }

    /// The monomial T^n.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        FqPoly(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Field elements other than 0 and 1 print as their integer encoding.
impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 if coef.is_empty() => write!(f, "T")?,
                1 => write!(f, "{coef}*T")?,
                _ if coef.is_empty() => write!(f, "T^{i}")?,
                _ => write!(f, "{coef}*T^{i}")?,
            }
        }
        Ok(())
    }
}

/// A nonzero element num/den of F_q(T).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: FqPoly,
    pub den: FqPoly,
}

impl RationalFunction {
    pub fn new(num: FqPoly, den: FqPoly) -> Result<Self> {
        if num.is_zero() {
            return Err(Error::invalid("rational function must be nonzero"));
        }
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn poly(num: FqPoly) -> Result<Self> {
        Self::new(num, FqPoly::constant(1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FfPlaceKind {
    Finite(FqPoly),
    Infinite,
}

/// A place of F_q(T) trivial on F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionFieldPlace {
    q: u64,
    kind: FfPlaceKind,
}

impl FunctionFieldPlace {
    pub fn finite(field: &FiniteField, f: FqPoly) -> Result<Self> {
        if f.degree().map(|d| f.0[d]) != Some(1) {
            return Err(Error::invalid(format!("place polynomial {f} must be monic")));
        }
        if !field.is_irreducible(&f) {
            return Err(Error::invalid(format!("{f} is not irreducible over F_{}", field.size())));
        }
        Ok(FunctionFieldPlace { q: field.size(), kind: FfPlaceKind::Finite(f) })
    }

    pub fn infinite(field: &FiniteField) -> Self {
        FunctionFieldPlace { q: field.size(), kind: FfPlaceKind::Infinite }
    }

    pub fn kind(&self) -> &FfPlaceKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        match &self.kind {
            FfPlaceKind::Finite(f) => f.degree().unwrap_or(0),
            FfPlaceKind::Infinite => 1,
        }
    }

    pub fn base_size(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for FunctionFieldPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FfPlaceKind::Finite(p) => write!(f, "{p}"),
            FfPlaceKind::Infinite => write!(f, "inf"),
        }
    }
}

fn multiplicity(field: &FiniteField, f: &FqPoly, a: &FqPoly) -> i64 {
    let mut a = a.clone();
    let mut e = 0;
    loop {
        let (qt, r) = field.divrem(&a, f);
        if !r.is_zero() {
            return e;
        }
        a = qt;
        e += 1;
    }
}

pub fn ff_valuation(field: &FiniteField, place: &FunctionFieldPlace, x: &RationalFunction) -> Result<i64> {
    if place.q != field.size() {
        return Err(Error::invalid("place and field disagree on q"));
    }
    let deg = |p: &FqPoly| p.degree().expect("nonzero") as i64;
    Ok(match &place.kind {
        FfPlaceKind::Infinite => deg(&x.den) - deg(&x.num),
        FfPlaceKind::Finite(f) => multiplicity(field, f, &x.num) - multiplicity(field, f, &x.den),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumFormulaEntry {
    pub place: String,
    pub degree: usize,
    pub valuation: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumFormulaReport {
    pub entries: Vec<SumFormulaEntry>,
    pub total: i64,
    pub holds: bool,
}

impl fmt::Display for SumFormulaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "v_{{{}}} = {} (deg {})", e.place, e.valuation, e.degree)?;
        }
        write!(f, "sum = {}", self.total)
    }
}

/// Every place with nonzero valuation, finite ones first, and the total
/// `sum deg(P) * v_P(x)`.
pub fn sum_formula_check(field: &FiniteField, x: &RationalFunction) -> Result<SumFormulaReport> {
    let (_, fn_) = field.factor(&x.num)?;
    let (_, fd) = field.factor(&x.den)?;
    let mut places: Vec<FqPoly> = fn_.into_iter().chain(fd).map(|(h, _)| h).collect();
    places.sort_by_key(|h| (h.degree(), h.0.iter().rev().copied().collect::<Vec<_>>()));
    places.dedup();
    let mut entries = Vec::new();
    for h in places {
        let pl = FunctionFieldPlace { q: field.size(), kind: FfPlaceKind::Finite(h) };
        let v = ff_valuation(field, &pl, x)?;
        if v != 0 {
            entries.push(SumFormulaEntry { place: pl.to_string(), degree: pl.degree(), valuation: v });
        }
    }
    let inf = FunctionFieldPlace::infinite(field);
    let v = ff_valuation(field, &inf, x)?;
    if v != 0 {
        entries.push(SumFormulaEntry { place: inf.to_string(), degree: 1, valuation: v });
    }
    let total = entries.iter().map(|e| e.degree as i64 * e.valuation).sum();
    Ok(SumFormulaReport { entries, total, holds: total == 0 })
}
