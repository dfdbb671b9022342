//! Unramified and tamely ramified extensions of a local field with residue
//! field of size q: counting, the Galois criterion with an explicit
//! presentation, unit-group structure of Z/p^n, and Eisenstein invariants.
//!
//! A tame extension of type (e, f) is L = K_f(ᵉ√(u^r π)) with u a fixed
//! generator of the residue multiplicative group; two class indices r give
//! the same extension exactly when they lie in one orbit of x ↦ qx mod g,
//! g = gcd(e, q^f - 1).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{self, Q};
use crate::error::{Error, Result};
use crate::poly::{eisenstein_test, root_valuations, QPoly};
use crate::ramification::{FilteredGroup, Ival};

fn residue_char(q: u64) -> Result<u64> {
    arith::prime_power(q)
        .map(|(p, _)| p)
        .ok_or_else(|| Error::invalid(format!("residue field size {q} is not a prime power")))
}

fn require_tame(q: u64, e: u64) -> Result<u64> {
    let p = residue_char(q)?;
    if e == 0 {
        return Err(Error::invalid("ramification index must be positive"));
    }
    if e % p == 0 {
        return Err(Error::invalid(format!(
            "e = {e} is divisible by the residue characteristic {p}: the extension would be wildly ramified"
        )));
    }
    Ok(p)
}

/// q^f - 1, or an error when it overflows.
fn qf_minus_one(q: u64, f: u32) -> Result<u64> {
    q.checked_pow(f)
        .map(|x| x - 1)
        .ok_or_else(|| Error::Resource(format!("{q}^{f} overflows 64 bits")))
}

/// Degree of K(ζ_n) over K: the order of q mod n.
pub fn splitting_degree_of_unity(q: u64, n: u64) -> Result<u64> {
    residue_char(q)?;
    if n == 0 || arith::gcd(q, n) != 1 {
        return Err(Error::invalid(format!("n = {n} must be positive and prime to q = {q}")));
    }
    Ok(arith::mult_order(q, n))
}

/// Σ_{t | g} φ(t) / ord_t(q) with g = gcd(e, q^f - 1).
pub fn count_tame_extensions(q: u64, e: u64, f: u32) -> Result<u64> {
    require_tame(q, e)?;
    if f == 0 {
        return Err(Error::invalid("residual degree must be positive"));
    }
    let g = arith::gcd(e, qf_minus_one(q, f)?);
    Ok(arith::divisors(g).into_iter().map(|t| arith::euler_phi(t) / arith::mult_order(q, t)).sum())
}

/// Orbits of x ↦ qx on Z/g, counted by walking every orbit.
pub fn orbit_count_oracle(g: u64, q: u64) -> Result<u64> {
    if g == 0 || arith::gcd(g, q) != 1 {
        return Err(Error::invalid(format!("g = {g} must be positive and prime to q = {q}")));
    }
    let mut seen = vec![false; g as usize];
    let mut orbits = 0;
    for start in 0..g {
        if seen[start as usize] {
            continue;
        }
        orbits += 1;
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            x = arith::mul_mod(x, q, g);
        }
    }
    Ok(orbits)
}

/// L = K_f(ᵉ√(u^r π)) over a field with residue size q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TameExtensionDescriptor {
    pub q: u64,
    pub e: u64,
    pub f: u32,
    pub r: u64,
}

impl TameExtensionDescriptor {
    pub fn new(q: u64, e: u64, f: u32, r: u64) -> Result<Self> {
        require_tame(q, e)?;
        if f == 0 {
            return Err(Error::invalid("residual degree must be positive"));
        }
        let g = arith::gcd(e, qf_minus_one(q, f)?);
        if r >= g {
            return Err(Error::invalid(format!("class index r = {r} must lie in [0, {g})")));
        }
        Ok(TameExtensionDescriptor { q, e, f, r })
    }

    pub fn g(&self) -> u64 {
        arith::gcd(self.e, self.q.pow(self.f) - 1)
    }

    pub fn degree(&self) -> u64 {
        self.e * self.f as u64
    }

    /// Class indices describing the same extension.
    pub fn orbit(&self) -> Vec<u64> {
        let g = self.g();
        let mut out = BTreeSet::new();
        let mut x = self.r;
        while out.insert(x) {
            x = arith::mul_mod(x, self.q, g);
        }
        out.into_iter().collect()
    }

    /// The residue generator u: the Teichmüller lift of the least primitive
    /// root mod p, reported by that root. Only meaningful for prime q.
    pub fn residue_generator(&self) -> Option<u64> {
        arith::is_prime(self.q).then(|| arith::primitive_root(self.q))
    }
}

pub const ASSOCIATIVITY_CHECK_ORDER: u64 = 64;

/// ⟨σ, τ | τ^e = 1, σ^f = τ^r, στσ⁻¹ = τ^q⟩ with elements in normal form
/// τ^i σ^j, 0 <= i < e, 0 <= j < f.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisPresentation {
    pub e: u64,
    pub f: u32,
    pub r: u64,
    pub q: u64,
    pub order: u64,
    pub relations: Vec<String>,
}

impl GaloisPresentation {
    fn index(&self, i: u64, j: u64) -> usize {
        (i * self.f as u64 + j) as usize
    }

    /// Normal form of (τ^a σ^b)(τ^c σ^d).
    pub fn multiply(&self, (a, b): (u64, u64), (c, d): (u64, u64)) -> (u64, u64) {
        let e = self.e;
        let f = self.f as u64;
        let qb = arith::pow_mod(self.q, b, e.max(1));
        let mut i = (a + qb * c) % e;
        let mut j = b + d;
        if j >= f {
            j -= f;
            i = (i + self.r) % e;
        }
        (i, j)
    }

    pub fn elements(&self) -> Vec<(u64, u64)> {
        (0..self.e).flat_map(|i| (0..self.f as u64).map(move |j| (i, j))).collect()
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        let els = self.elements();
        els.iter()
            .map(|&x| {
                els.iter()
                    .map(|&y| {
                        let (i, j) = self.multiply(x, y);
                        self.index(i, j)
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks that the normal forms number ef and satisfy the three relations;
    /// associativity is checked exhaustively up to order
    /// [`ASSOCIATIVITY_CHECK_ORDER`].
    pub fn verify(&self) -> Result<()> {
        let els = self.elements();
        if els.len() as u64 != self.order {
            return Err(Error::Inconsistency("normal forms do not number ef".into()));
        }
        let exhaustive = if self.order <= ASSOCIATIVITY_CHECK_ORDER { els.as_slice() } else { &[] };
        for &x in exhaustive {
            for &y in exhaustive {
                let xy = self.multiply(x, y);
                for &z in exhaustive {
                    if self.multiply(xy, z) != self.multiply(x, self.multiply(y, z)) {
                        return Err(Error::Inconsistency("presentation multiplication is not associative".into()));
                    }
                }
            }
        }
        let tau = (1 % self.e, 0);
        let sigma = if self.f > 1 { (0, 1) } else { (self.r % self.e, 0) };
        let pow = |x: (u64, u64), k: u64| (0..k).fold((0, 0), |acc, _| self.multiply(acc, x));
        let sigma_inv = els.iter().copied().find(|&y| self.multiply(sigma, y) == (0, 0)).unwrap();
        if pow(tau, self.e) != (0, 0)
            || pow(sigma, self.f as u64) != pow(tau, self.r)
            || self.multiply(self.multiply(sigma, tau), sigma_inv) != pow(tau, self.q % self.e)
        {
            return Err(Error::Inconsistency("presentation relations fail".into()));
        }
        Ok(())
    }

    /// Gal(L|K) with the inertia group ⟨τ⟩ as G_0 and trivial G_1.
    pub fn filtered_group(&self) -> Result<FilteredGroup> {
        let ig = self
            .elements()
            .into_iter()
            .map(|(i, j)| match (i, j) {
                (0, 0) => Ival::Infinite,
                (_, 0) => Ival::Finite(1),
                _ => Ival::Finite(0),
            })
            .collect();
        let labels = self.elements().into_iter().map(|(i, j)| format!("t^{i}s^{j}")).collect();
        FilteredGroup::new(self.cayley_table(), 0, ig, Some(labels))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameClassification {
    pub descriptor: TameExtensionDescriptor,
    pub g: u64,
    pub degree: u64,
    pub galois: bool,
    pub abelian: bool,
    pub presentation: Option<GaloisPresentation>,
}

/// Galois iff e | q^f - 1 and e | r(q - 1); abelian iff moreover e | q - 1.
pub fn classify_tame(d: &TameExtensionDescriptor) -> Result<TameClassification> {
    let (q, e, f, r) = (d.q, d.e, d.f, d.r);
    let qf1 = qf_minus_one(q, f)?;
    let galois = qf1 % e == 0 && ((r as u128 * (q - 1) as u128) % e as u128) == 0;
    let abelian = galois && (q - 1) % e == 0;
    let presentation = if galois {
        let pres = GaloisPresentation {
            e,
            f,
            r,
            q,
            order: e * f as u64,
            relations: vec![format!("t^{e} = 1"), format!("s^{f} = t^{r}"), format!("s t s^-1 = t^{}", q % e)],
        };
        pres.verify()?;
        Some(pres)
    } else {
        None
    };
    Ok(TameClassification { descriptor: *d, g: d.g(), degree: d.degree(), galois, abelian, presentation })
}

/// Number of r in [0, e) with e | r(q - 1).
pub fn galois_census(q: u64, e: u64) -> u64 {
    (0..e).filter(|&r| (r * (q - 1)) % e == 0).count() as u64
}

/// (e, f) of a tower from the invariants of its steps, bottom first.
pub fn tower_invariants(steps: &[(u64, u64)]) -> (u64, u64) {
    steps.iter().fold((1, 1), |(e, f), &(e2, f2)| (e * e2, f * f2))
}

/// (Z/p^n)^× as a product of cyclic groups with chosen generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitGroupStructure {
    pub p: u64,
    pub n: u32,
    pub modulus: u64,
    pub invariants: Vec<u64>,
    pub generators: Vec<u64>,
}

impl UnitGroupStructure {
    /// Checks that each generator has the stated order and that the
    /// products of their powers are pairwise distinct.
    pub fn verify(&self) -> Result<()> {
        let m = self.modulus;
        let mut size = 1u64;
        for (&g, &k) in self.generators.iter().zip(&self.invariants) {
            if arith::mult_order(g, m) != k {
                return Err(Error::Inconsistency(format!("{g} does not have order {k} mod {m}")));
            }
            size *= k;
        }
        let mut seen: BTreeSet<u64> = [1].into_iter().collect();
        for (&g, &k) in self.generators.iter().zip(&self.invariants) {
            let mut next = BTreeSet::new();
            for &x in &seen {
                let mut y = x;
                for _ in 0..k {
                    next.insert(y);
                    y = arith::mul_mod(y, g, m);
                }
            }
            seen = next;
        }
        if seen.len() as u64 != size || size != arith::euler_phi(m) {
            return Err(Error::Inconsistency("generators do not give a direct decomposition".into()));
        }
        Ok(())
    }
}

pub fn unit_group_structure(p: u64, n: u32) -> Result<UnitGroupStructure> {
    arith::require_prime(p)?;
    let m = p
        .checked_pow(n)
        .filter(|&m| m < 1 << 32)
        .ok_or_else(|| Error::Resource(format!("{p}^{n} is too large")))?;
    if m < 3 {
        return Err(Error::invalid(format!("(Z/{m})^× is trivial; need p^n >= 3")));
    }
    let (mut invariants, mut generators) = if p == 2 {
        if n == 2 {
            (vec![2], vec![3])
        } else {
            (vec![2, 1 << (n - 2)], vec![m - 1, 5])
        }
    } else {
        let pn1 = p.pow(n - 1);
        let teich = arith::pow_mod(arith::primitive_root(p), pn1, m);
        (vec![p - 1, pn1], vec![teich, (1 + p) % m])
    };
    while invariants.last() == Some(&1) {
        invariants.pop();
        generators.pop();
    }
    Ok(UnitGroupStructure { p, n, modulus: m, invariants, generators })
}

/// Elementary divisors of (Z/m)^× found from the sizes of its ℓ^k-torsion,
/// as sorted prime powers.
pub fn unit_group_elementary_divisors(m: u64) -> Vec<u64> {
    let units: Vec<u64> = (1..m).filter(|&a| arith::gcd(a, m) == 1).collect();
    let order = units.len() as u64;
    let torsion = |d: u64| units.iter().filter(|&&a| arith::pow_mod(a, d, m) == 1 % m).count() as u64;
    let mut out = Vec::new();
    for (l, _) in arith::factor_u64(order) {
        // number of cyclic ℓ-factors of order >= ℓ^k
        let mut counts = Vec::new();
        let mut prev = 1u64;
        let mut lk = l;
        loop {
            let t = torsion(lk);
            if t == prev {
                break;
            }
            counts.push((t / prev).ilog(l));
            prev = t;
            lk *= l;
        }
        for k in 1..=counts.len() {
            let here = counts[k - 1] - counts.get(k).copied().unwrap_or(0);
            for _ in 0..here {
                out.push(l.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Splits each cyclic factor into its prime-power parts.
pub fn elementary_divisors(invariants: &[u64]) -> Vec<u64> {
    let mut out: Vec<u64> =
        invariants.iter().flat_map(|&k| arith::factor_u64(k).into_iter().map(|(l, a)| l.pow(a))).collect();
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EisensteinInvariants {
    pub p: u64,
    pub e: usize,
    pub f: usize,
    #[serde(serialize_with = "crate::serde_q::ser")]
    pub root_valuation: Q,
    #[serde(serialize_with = "crate::serde_q::ser")]
    pub uniformiser_norm: Q,
}

/// e = deg φ, f = 1, v(root) = 1/e, and N(Π) = (-1)^e a_0 / a_e.
pub fn eisenstein_invariants(p: u64, phi: &QPoly) -> Result<EisensteinInvariants> {
    arith::require_prime(p)?;
    let e = phi.degree().unwrap_or(0);
    let prec = 8 + phi.coeffs().iter().filter(|c| !c.is_zero()).map(|c| arith::vp_q(p, c).unsigned_abs() as u32).max().unwrap_or(0);
    let fp = phi.to_padic(p, prec)?;
    if e == 0 || !eisenstein_test(&fp)? {
        return Err(Error::invalid(
            "not Eisenstein: need v(a_0) = 1, v(a_i) >= 1 for interior i, and a unit leading coefficient",
        ));
    }
    let rv = root_valuations(&fp)?;
    let want = Q::new(BigInt::one(), BigInt::from(e));
    if rv != vec![(want.clone(), e)] {
        return Err(Error::Inconsistency("Newton polygon of an Eisenstein polynomial is not pure of slope -1/e".into()));
    }
    let sign = if e % 2 == 0 { Q::one() } else { -Q::one() };
    let norm = sign * phi.coeff(0) / phi.leading().unwrap();
    Ok(EisensteinInvariants { p, e, f: 1, root_valuation: want, uniformiser_norm: norm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qi;
    use crate::poly::cyclotomic;

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree_of_unity(2, 7).unwrap(), 3);
        assert_eq!(splitting_degree_of_unity(3, 8).unwrap(), 2);
        assert_eq!(splitting_degree_of_unity(7, 6).unwrap(), 1);
        assert!(splitting_degree_of_unity(4, 6).is_err());
        assert!(splitting_degree_of_unity(6, 5).is_err());
    }

    #[test]
    fn counts_and_oracle() {
        assert_eq!(count_tame_extensions(2, 3, 2).unwrap(), 2);
        assert_eq!(count_tame_extensions(3, 4, 1).unwrap(), 2);
        assert_eq!(count_tame_extensions(7, 3, 1).unwrap(), 3);
        assert_eq!(orbit_count_oracle(3, 2).unwrap(), 2);
        assert_eq!(orbit_count_oracle(1, 5).unwrap(), 1);
        // {0}, {4}, {1, 3}, {2, 6}, {5, 7}
        assert_eq!(orbit_count_oracle(8, 3).unwrap(), 5);
        assert_eq!(count_tame_extensions(3, 8, 2).unwrap(), 5);
        assert!(orbit_count_oracle(4, 2).is_err());
        assert!(count_tame_extensions(9, 6, 1).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = classify_tame(&TameExtensionDescriptor::new(2, 3, 2, 0).unwrap()).unwrap();
        assert!(c.galois && !c.abelian);
        let pres = c.presentation.unwrap();
        assert_eq!(pres.order, 6);
        let fg = pres.filtered_group().unwrap();
        assert!(!fg.is_abelian());
        assert_eq!(fg.lower_group_int(0).len(), 3);
        let c = classify_tame(&TameExtensionDescriptor::new(2, 3, 1, 0).unwrap()).unwrap();
        assert!(!c.galois && c.presentation.is_none());
        let c = classify_tame(&TameExtensionDescriptor::new(5, 4, 1, 0).unwrap()).unwrap();
        assert!(c.abelian);
        assert!(c.presentation.unwrap().filtered_group().unwrap().is_abelian());
        assert!(TameExtensionDescriptor::new(2, 3, 2, 3).is_err());
    }

    #[test]
    fn descriptor_orbits() {
        let d = TameExtensionDescriptor::new(2, 3, 2, 1).unwrap();
        assert_eq!(d.orbit(), vec![1, 2]);
    }

    #[test]
    fn unit_groups() {
        let s = unit_group_structure(2, 5).unwrap();
        assert_eq!((s.invariants.clone(), s.generators.clone()), (vec![2, 8], vec![31, 5]));
        s.verify().unwrap();
        let s = unit_group_structure(3, 2).unwrap();
        assert_eq!(s.invariants, vec![2, 3]);
        s.verify().unwrap();
        assert_eq!(unit_group_structure(2, 2).unwrap().invariants, vec![2]);
        assert!(unit_group_structure(2, 1).is_err());
        assert_eq!(unit_group_elementary_divisors(32), vec![2, 8]);
        assert_eq!(unit_group_elementary_divisors(9), vec![2, 3]);
    }

    #[test]
    fn eisenstein() {
        let f = QPoly::from_ints(&[-5, 0, 0, 1]);
        let inv = eisenstein_invariants(5, &f).unwrap();
        assert_eq!((inv.e, inv.uniformiser_norm.clone()), (3, qi(5)));
        for (p, n) in [(3u64, 1u32), (2, 3), (5, 2)] {
            let phi = cyclotomic(p, n).unwrap().shift(&qi(1));
            let inv = eisenstein_invariants(p, &phi).unwrap();
            assert_eq!(inv.e as u64, p.pow(n) - p.pow(n - 1));
            assert_eq!(inv.uniformiser_norm, qi(p as i64));
        }
        assert!(eisenstein_invariants(2, &QPoly::from_ints(&[1, 0, 1])).is_err());
    }

    #[test]
    fn towers() {
        assert_eq!(tower_invariants(&[(2, 1), (3, 2)]), (6, 2));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn formula_matches_orbits(qi in 0usize..7, e in 1u64..60, f in 1u32..6) {
                let q = [2u64, 3, 4, 5, 7, 8, 9][qi];
                let p = arith::prime_power(q).unwrap().0;
                prop_assume!(e % p != 0);
                let g = arith::gcd(e, q.pow(f) - 1);
                prop_assert_eq!(count_tame_extensions(q, e, f).unwrap(), orbit_count_oracle(g, q).unwrap());
            }

            #[test]
            fn galois_presentations_have_order_ef(qi in 0usize..5, e in 1u64..13, f in 1u32..4, r in 0u64..13) {
                let q = [2u64, 3, 5, 7, 9][qi];
                let Ok(d) = TameExtensionDescriptor::new(q, e, f, r) else { return Ok(()) };
                let c = classify_tame(&d).unwrap();
                if let Some(pres) = c.presentation {
                    let fg = pres.filtered_group().unwrap();
                    prop_assert_eq!(fg.order() as u64, e * f as u64);
                    prop_assert_eq!(fg.lower_group_int(0).len() as u64, e);
                    prop_assert_eq!(fg.is_abelian(), c.abelian);
                }
            }
        }
    }
}
