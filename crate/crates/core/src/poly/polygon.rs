//! Newton polygons, Gauss valuations and the Eisenstein criterion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::PadicPoly;
use crate::arith::{fmt_q, Q};
use crate::error::{Error, Result};
use crate::valuations::Valuation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Side {
    pub length: usize,
    #[serde(serialize_with = "crate::serde_q::ser")]
    pub slope: Q,
}

/// Lower convex hull of the points (j, v(a_j)); vertices are exactly the
/// points where the slope changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub vertices: Vec<(usize, Q)>,
    pub sides: Vec<Side>,
}

impl NewtonPolygon {
    pub fn is_pure(&self) -> bool {
        self.sides.len() == 1
    }

    /// `(l_1,γ_1);(l_2,γ_2);...`
    pub fn type_string(&self) -> String {
        self.sides
            .iter()
            .map(|s| format!("({},{})", s.length, fmt_q(&s.slope)))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Height of the polygon above x = j.
    pub fn height_at(&self, j: usize) -> Q {
        let w = self.vertices.windows(2).find(|w| w[0].0 <= j && j <= w[1].0);
        match w {
            Some(w) => {
                let (x0, y0) = &w[0];
                let (x1, y1) = &w[1];
                y0 + (y1 - y0) * Q::new(BigInt::from(j - x0), BigInt::from(x1 - x0))
            }
            None => self.vertices[0].1.clone(),
        }
    }
}

impl fmt::Display for NewtonPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.type_string())
    }
}

impl Serialize for NewtonPolygon {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vertices: Vec<(usize, String)> = self.vertices.iter().map(|(j, v)| (*j, fmt_q(v))).collect();
        let mut st = s.serialize_struct("NewtonPolygon", 4)?;
        st.serialize_field("vertices", &vertices)?;
        st.serialize_field("sides", &self.sides)?;
        st.serialize_field("type", &self.type_string())?;
        st.serialize_field("pure", &self.is_pure())?;
        st.end()
    }
}

fn cross(o: &(usize, Q), a: &(usize, Q), b: &(usize, Q)) -> Q {
    let q = |x: usize| Q::from_integer(BigInt::from(x));
    (q(a.0) - q(o.0)) * (&b.1 - &o.1) - (&a.1 - &o.1) * (q(b.0) - q(o.0))
}

pub fn newton_polygon(f: &PadicPoly) -> Result<NewtonPolygon> {
    let m = f.degree().ok_or_else(|| Error::invalid("Newton polygon of the zero polynomial"))?;
    let a0 = f.coeff(0);
    if a0.is_exact_zero() {
        return Err(Error::invalid("a_0 = 0: divide out the power of T first"));
    }
    if a0.is_zero_at_precision() || f.coeffs()[m].is_zero_at_precision() {
        return Err(Error::precision("an endpoint coefficient is zero at the known precision"));
    }
    let mut exact: Vec<(usize, Q)> = Vec::new();
    let mut bounds: Vec<(usize, i64)> = Vec::new();
    for (j, c) in f.coeffs().iter().enumerate() {
        if c.is_exact_zero() {
            continue;
        }
        match c.valuation() {
            Ok(Valuation::Finite(v)) => exact.push((j, Q::from_integer(BigInt::from(v)))),
            _ => bounds.push((j, c.valuation_lower_bound().unwrap())),
        }
    }
    let mut hull: Vec<(usize, Q)> = Vec::new();
    for pt in exact {
        while hull.len() >= 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &pt).is_positive() {
            hull.pop();
        }
        hull.push(pt);
    }
    let sides = hull
        .windows(2)
        .map(|w| {
            let len = w[1].0 - w[0].0;
            Side { length: len, slope: (&w[1].1 - &w[0].1) / Q::from_integer(BigInt::from(len)) }
        })
        .collect();
    let poly = NewtonPolygon { vertices: hull, sides };
    for (j, b) in bounds {
        if Q::from_integer(BigInt::from(b)) < poly.height_at(j) {
            return Err(Error::precision(format!(
                "coefficient a_{j} is only known to be O(p^{b}), below the polygon"
            )));
        }
    }
    Ok(poly)
}

/// min_j (v(a_j) + j*C), using the known lower bound for coefficients that
/// are zero at their precision; `None` for the zero polynomial.
pub fn gauss_valuation_padic(f: &PadicPoly, c: &Q) -> Option<Q> {
    f.coeffs()
        .iter()
        .enumerate()
        .filter_map(|(j, a)| {
            a.valuation_lower_bound().map(|v| Q::from_integer(BigInt::from(v)) + Q::from_integer(BigInt::from(j)) * c)
        })
        .min()
}

/// v(a_0) = 1, v(a_i) >= 1 for 0 < i < m, v(a_m) = 0.
pub fn eisenstein_test(f: &PadicPoly) -> Result<bool> {
    let m = match f.degree() {
        Some(m) if m >= 1 => m,
        _ => return Ok(false),
    };
    let val = |j: usize| -> Result<Valuation> {
        let c = f.coeff(j);
        if c.is_zero_at_precision() && !c.is_exact_zero() {
            if j > 0 && j < m && c.valuation_lower_bound().unwrap() >= 1 {
                return Ok(Valuation::PlusInfinity);
            }
            return Err(Error::precision(format!("coefficient a_{j} is zero at the known precision")));
        }
        c.valuation()
    };
    if val(0)? != Valuation::Finite(1) || val(m)? != Valuation::Finite(0) {
        return Ok(false);
    }
    for j in 1..m {
        if val(j)? < Valuation::Finite(1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Valuations of the roots in an algebraic closure with multiplicities:
/// l_i roots of valuation -γ_i for each side.
pub fn root_valuations(f: &PadicPoly) -> Result<Vec<(Q, usize)>> {
    Ok(newton_polygon(f)?.sides.into_iter().map(|s| (-s.slope, s.length)).collect())
}
