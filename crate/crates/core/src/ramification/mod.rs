//! Ramification filtrations on explicit finite groups.
//!
//! A [`FilteredGroup`] is a Cayley table together with the integer i_G(σ)
//! of each element; the lower groups are G_u = {σ : i_G(σ) >= ⌈u⌉ + 1}.

mod pl;

pub use pl::PiecewiseLinear;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{self, fmt_q, Q};
use crate::error::{Error, Result};

/// i_G(σ): a non-negative integer, or +∞ for the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ival {
    Finite(u64),
    Infinite,
}

impl Ival {
    fn at_least(self, n: i64) -> bool {
        match self {
            Ival::Infinite => true,
            Ival::Finite(k) => k as i64 >= n,
        }
    }
}

impl fmt::Display for Ival {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ival::Finite(k) => write!(f, "{k}"),
            Ival::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Ival {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ival::Finite(k) => s.serialize_u64(*k),
            Ival::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Groups up to this order have associativity checked on construction.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    ig: Vec<Ival>,
    labels: Vec<String>,
}

/// An element set, sorted.
pub type Subgroup = Vec<usize>;

impl FilteredGroup {
    /// Validates the group axioms and that i_G is a class function,
    /// inverse-invariant, infinite exactly at the identity, and cuts out
    /// subgroups at every level.
    pub fn new(table: Vec<Vec<usize>>, identity: usize, ig: Vec<Ival>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::invalid("multiplication table must be square with entries in range"));
        }
        if identity >= n || ig.len() != n {
            return Err(Error::invalid("identity index or i_G list out of range"));
        }
        for x in 0..n {
            if table[identity][x] != x || table[x][identity] != x {
                return Err(Error::invalid("identity element does not act trivially"));
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == identity) {
                Some(y) if table[y][x] == identity => inverse[x] = y,
                _ => return Err(Error::invalid(format!("element {x} has no two-sided inverse"))),
            }
        }
        if n <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a][b];
                    for c in 0..n {
                        if table[ab][c] != table[a][table[b][c]] {
                            return Err(Error::invalid("multiplication is not associative"));
                        }
                    }
                }
            }
        }
        for x in 0..n {
            if (ig[x] == Ival::Infinite) != (x == identity) {
                return Err(Error::invalid("i_G must be +∞ exactly at the identity"));
            }
            if ig[inverse[x]] != ig[x] {
                return Err(Error::invalid(format!("i_G(σ^-1) != i_G(σ) for element {x}")));
            }
            for g in 0..n {
                if ig[table[table[g][x]][inverse[g]]] != ig[x] {
                    return Err(Error::invalid("i_G is not a class function"));
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::invalid("label list has the wrong length"));
        }
        let grp = FilteredGroup { table, identity, inverse, ig, labels };
        let mut levels: Vec<u64> = grp.ig.iter().filter_map(|v| match v {
            Ival::Finite(k) => Some(*k),
            Ival::Infinite => None,
        }).collect();
        levels.sort_unstable();
        levels.dedup();
        for k in levels {
            let s: Subgroup = (0..n).filter(|&x| grp.ig[x].at_least(k as i64)).collect();
            if !grp.is_subgroup(&s) {
                return Err(Error::invalid(format!("{{σ : i_G(σ) >= {k}}} is not a subgroup")));
            }
        }
        Ok(grp)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn ig(&self, a: usize) -> Ival {
        self.ig[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        set.contains(&self.identity)
            && s.iter().all(|&a| set.contains(&self.inverse[a]) && s.iter().all(|&b| set.contains(&self.table[a][b])))
    }

    pub fn is_normal(&self, s: &[usize]) -> bool {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        self.is_subgroup(s)
            && (0..self.order()).all(|g| s.iter().all(|&h| set.contains(&self.table[self.table[g][h]][self.inverse[g]])))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// G_n for an integer n >= -1.
    pub fn lower_group_int(&self, n: i64) -> Subgroup {
        (0..self.order()).filter(|&x| self.ig[x].at_least(n + 1)).collect()
    }

    /// G_u = G_{⌈u⌉} for real u >= -1.
    pub fn lower_group(&self, u: &Q) -> Result<Subgroup> {
        if u < &-Q::one() {
            return Err(Error::invalid("lower numbering starts at -1"));
        }
        let c = u.ceil().to_integer();
        Ok(self.lower_group_int(i64::try_from(c).map_err(|_| Error::invalid("index too large"))?))
    }

    /// (n, G_n) from n = -1 until the first trivial group.
    pub fn lower_filtration(&self) -> Vec<(i64, Subgroup)> {
        let mut out = Vec::new();
        let mut n = -1;
        loop {
            let g = self.lower_group_int(n);
            let done = g.len() == 1;
            out.push((n, g));
            if done {
                return out;
            }
            n += 1;
        }
    }

    /// Integers u >= -1 with G_u != G_{u+1}.
    pub fn lower_jumps(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self
            .ig
            .iter()
            .filter_map(|v| match v {
                Ival::Finite(k) => Some(*k as i64 - 1),
                Ival::Infinite => None,
            })
            .collect();
        set.into_iter().collect()
    }

    fn g0(&self) -> usize {
        self.lower_group_int(0).len()
    }

    /// φ(u) = ∫_0^u dt / (G_0 : G_t): slope 1 on [-1, 0] and |G_{m+1}|/|G_0|
    /// on [m, m+1].
    pub fn phi(&self) -> PiecewiseLinear {
        let g0 = Q::from_integer(BigInt::from(self.g0()));
        let mut xs = vec![-Q::one(), Q::zero()];
        let mut ys = vec![-Q::one(), Q::zero()];
        let jumps: Vec<i64> = self.lower_jumps().into_iter().filter(|&j| j >= 0).collect();
        let mut x = 0i64;
        let mut y = Q::zero();
        for j in jumps {
            if j > x {
                // constant slope on (x, j]
                let slope = Q::from_integer(BigInt::from(self.lower_group_int(x + 1).len())) / &g0;
                y += slope * Q::from_integer(BigInt::from(j - x));
                x = j;
                xs.push(Q::from_integer(BigInt::from(x)));
                ys.push(y.clone());
            }
        }
        let tail = Q::from_integer(BigInt::from(self.lower_group_int(x + 1).len())) / &g0;
        PiecewiseLinear::new(xs, ys, tail).expect("increasing breakpoints")
    }

    pub fn psi(&self) -> PiecewiseLinear {
        self.phi().inverse().expect("φ is increasing")
    }

    /// φ(u) = (1/g_0) Σ_σ min(i_G(σ), u + 1) - 1.
    pub fn phi_via_infimum(&self, u: &Q) -> Result<Q> {
        if u < &-Q::one() {
            return Err(Error::invalid("φ is defined for u >= -1"));
        }
        let u1 = u + Q::one();
        let s = self.ig.iter().fold(Q::zero(), |acc, v| {
            acc + match v {
                Ival::Infinite => u1.clone(),
                Ival::Finite(k) => Q::from_integer(BigInt::from(*k)).min(u1.clone()),
            }
        });
        Ok(s / Q::from_integer(BigInt::from(self.g0())) - Q::one())
    }

    /// G^v = G_{ψ(v)}.
    pub fn upper_group(&self, v: &Q) -> Result<Subgroup> {
        self.lower_group(&self.psi().eval(v)?)
    }

    pub fn upper_jumps(&self) -> Vec<Q> {
        let phi = self.phi();
        self.lower_jumps().iter().map(|&u| phi.eval(&Q::from_integer(BigInt::from(u))).unwrap()).collect()
    }

    /// Σ_{σ≠1} i_G(σ), cross-checked against Σ_{n>=0} (|G_n| - 1).
    pub fn different_exponent(&self) -> Result<u64> {
        let direct: u64 = self
            .ig
            .iter()
            .filter_map(|v| match v {
                Ival::Finite(k) => Some(*k),
                Ival::Infinite => None,
            })
            .sum();
        let layered: u64 = self.lower_filtration().iter().filter(|(n, _)| *n >= 0).map(|(_, g)| g.len() as u64 - 1).sum();
        if direct != layered {
            return Err(Error::Inconsistency(format!("Σ i_G = {direct} but Σ(|G_n| - 1) = {layered}")));
        }
        Ok(direct)
    }

    /// The subgroup H with the restricted filtration.
    pub fn restrict(&self, h: &[usize]) -> Result<FilteredGroup> {
        if !self.is_subgroup(h) {
            return Err(Error::invalid("not a subgroup"));
        }
        let idx: HashMap<usize, usize> = h.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let table = h.iter().map(|&a| h.iter().map(|&b| idx[&self.table[a][b]]).collect()).collect();
        let ig = h.iter().map(|&a| self.ig[a]).collect();
        let labels = h.iter().map(|&a| self.labels[a].clone()).collect();
        FilteredGroup::new(table, idx[&self.identity], ig, Some(labels))
    }

    /// G/H with i_{G/H}(s) = (1/|H_0|) Σ_{σ ↦ s} i_G(σ), checked against
    /// i_{G/H}(s) - 1 = φ_H(j(s) - 1) with j(s) the largest i_G on the coset.
    /// Returns the quotient and the projection G -> G/H.
    pub fn quotient(&self, h: &[usize]) -> Result<(FilteredGroup, Vec<usize>)> {
        if !self.is_normal(h) {
            return Err(Error::invalid("H is not a normal subgroup"));
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &y in h {
                coset_of[self.table[x][y]] = c;
            }
        }
        let k = reps.len();
        let table: Vec<Vec<usize>> =
            (0..k).map(|a| (0..k).map(|b| coset_of[self.table[reps[a]][reps[b]]]).collect()).collect();
        let sub = self.restrict(h)?;
        let e_h = sub.g0() as u64;
        let phi_h = sub.phi();
        let id = coset_of[self.identity];
        let mut ig = vec![Ival::Infinite; k];
        for c in 0..k {
            if c == id {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&x| coset_of[x] == c).collect();
            let total: u64 = members.iter().map(|&x| match self.ig[x] {
                Ival::Finite(v) => v,
                Ival::Infinite => unreachable!("identity lies in H"),
            }).sum();
            let (q, r) = total.div_rem(&e_h);
            if r != 0 {
                return Err(Error::Inconsistency(format!(
                    "coset average {total}/{e_h} of i_G is not an integer"
                )));
            }
            let j = members.iter().map(|&x| self.ig[x]).max().unwrap();
            let Ival::Finite(j) = j else { unreachable!() };
            let via_phi = phi_h.eval(&Q::from_integer(BigInt::from(j as i64 - 1)))? + Q::one();
            if via_phi != Q::from_integer(BigInt::from(q)) {
                return Err(Error::Inconsistency(format!(
                    "averaged i_G/H = {q} disagrees with φ_H(j - 1) + 1 = {}",
                    fmt_q(&via_phi)
                )));
            }
            ig[c] = Ival::Finite(q);
        }
        let labels = reps.iter().map(|&r| format!("{}H", self.labels[r])).collect();
        Ok((FilteredGroup::new(table, id, ig, Some(labels))?, coset_of))
    }

    fn normal_closure(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = gens.clone();
        set.insert(self.identity);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for &b in &set {
                    next.insert(self.table[a][b]);
                }
                for g in 0..self.order() {
                    next.insert(self.table[self.table[g][a]][self.inverse[g]]);
                }
            }
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    /// Every normal subgroup, smallest first.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let trivial: BTreeSet<usize> = [self.identity].into_iter().collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(trivial.iter().copied().collect());
        let mut frontier = vec![trivial];
        while let Some(nsub) = frontier.pop() {
            for x in 0..self.order() {
                if nsub.contains(&x) {
                    continue;
                }
                let mut gens = nsub.clone();
                gens.insert(x);
                let c = self.normal_closure(&gens);
                let v: Vec<usize> = c.iter().copied().collect();
                if found.insert(v) {
                    frontier.push(c);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }

    pub fn report(&self, f: u64) -> Result<RamificationReport> {
        if f == 0 {
            return Err(Error::invalid("residual degree must be positive"));
        }
        let s = self.different_exponent()?;
        Ok(RamificationReport {
            lower_jumps: self.lower_jumps(),
            upper_jumps: self.upper_jumps(),
            group_orders: self.lower_filtration().into_iter().map(|(n, g)| (n, g.len())).collect(),
            different_exponent: s,
            discriminant_exponent: s * f,
        })
    }
}

/// Jumps, the orders |G_n|, and the exponents of the different and of the
/// discriminant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationReport {
    pub lower_jumps: Vec<i64>,
    #[serde(serialize_with = "crate::serde_q::ser_vec")]
    pub upper_jumps: Vec<Q>,
    pub group_orders: Vec<(i64, usize)>,
    pub different_exponent: u64,
    pub discriminant_exponent: u64,
}

impl fmt::Display for RamificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lj: Vec<String> = self.lower_jumps.iter().map(|j| j.to_string()).collect();
        let uj: Vec<String> = self.upper_jumps.iter().map(fmt_q).collect();
        let go: Vec<String> = self.group_orders.iter().map(|(n, g)| format!("|G_{n}|={g}")).collect();
        writeln!(f, "lower jumps: {}", lj.join(", "))?;
        writeln!(f, "upper jumps: {}", uj.join(", "))?;
        writeln!(f, "orders: {}", go.join(" "))?;
        writeln!(f, "different exponent: {}", self.different_exponent)?;
        write!(f, "discriminant exponent: {}", self.discriminant_exponent)
    }
}

pub fn different_discriminant(g: &FilteredGroup, f: u64) -> Result<RamificationReport> {
    g.report(f)
}

/// Default cap on p^n for [`cyclotomic_group`].
pub const CYCLOTOMIC_BOUND: u64 = 1 << 10;

/// Gal(Q_p(ζ_{p^n})|Q_p) = (Z/p^n)^× with i_G(σ_a) = p^{v_p(a-1)}; elements
/// are the residues in increasing order.
pub fn cyclotomic_group(p: u64, n: u32) -> Result<FilteredGroup> {
    cyclotomic_group_bounded(p, n, CYCLOTOMIC_BOUND)
}

pub fn cyclotomic_group_bounded(p: u64, n: u32, bound: u64) -> Result<FilteredGroup> {
    arith::require_prime(p)?;
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let m = p.checked_pow(n).filter(|&m| m <= bound).ok_or_else(|| {
        Error::Resource(format!("{p}^{n} exceeds the group size bound {bound}"))
    })?;
    let units: Vec<u64> = (1..m).filter(|&a| a % p != 0).collect();
    let idx: HashMap<u64, usize> = units.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let table = units.iter().map(|&a| units.iter().map(|&b| idx[&(a * b % m)]).collect()).collect();
    let ig = units
        .iter()
        .map(|&a| {
            if a == 1 {
                Ival::Infinite
            } else {
                Ival::Finite(p.pow(arith::vp_int(p, &BigInt::from(a - 1))))
            }
        })
        .collect();
    let labels = units.iter().map(|a| a.to_string()).collect();
    FilteredGroup::new(table, idx[&1], ig, Some(labels))
}

/// G(m): the residues a ≡ 1 mod p^m, as indices into [`cyclotomic_group`].
pub fn cyclotomic_unit_kernel(p: u64, n: u32, m: u32) -> Vec<usize> {
    let pn = p.pow(n);
    let pm = p.pow(m);
    (1..pn).filter(|&a| a % p != 0).enumerate().filter(|(_, a)| (a - 1) % pm == 0).map(|(i, _)| i).collect()
}

/// Image of a subgroup under a projection.
pub fn image(proj: &[usize], s: &[usize]) -> Subgroup {
    let set: BTreeSet<usize> = s.iter().map(|&x| proj[x]).collect();
    set.into_iter().collect()
}

/// Rationals at which to compare filtrations: each breakpoint, midpoints
/// between consecutive ones, and points beyond the last.
pub fn probe_points(marks: &[Q]) -> Vec<Q> {
    let mut m: Vec<Q> = marks.to_vec();
    m.push(-Q::one());
    m.push(Q::zero());
    m.sort();
    m.dedup();
    let mut out = m.clone();
    for w in m.windows(2) {
        out.push((&w[0] + &w[1]) / Q::from_integer(BigInt::from(2)));
    }
    let last = m.last().unwrap().clone();
    out.push(&last + Q::new(BigInt::one(), BigInt::from(2)));
    out.push(last + Q::one());
    out.sort();
    out
}

/// Herbrand: the image of G_u in G/H is (G/H)_{φ_H(u)}.
pub fn check_herbrand(g: &FilteredGroup, h: &[usize]) -> Result<()> {
    let (quot, proj) = g.quotient(h)?;
    let phi_h = g.restrict(h)?.phi();
    let marks: Vec<Q> = g.lower_jumps().iter().map(|&j| Q::from_integer(BigInt::from(j))).collect();
    for u in probe_points(&marks) {
        let lhs = image(&proj, &g.lower_group(&u)?);
        let rhs = quot.lower_group(&phi_h.eval(&u)?)?;
        if lhs != rhs {
            return Err(Error::Inconsistency(format!("G_u H/H != (G/H)_φ_H(u) at u = {}", fmt_q(&u))));
        }
    }
    Ok(())
}

/// φ_G = φ_{G/H} ∘ φ_H.
pub fn check_transitivity(g: &FilteredGroup, h: &[usize]) -> Result<()> {
    let (quot, _) = g.quotient(h)?;
    let composed = quot.phi().compose(&g.restrict(h)?.phi())?;
    if composed != g.phi() {
        return Err(Error::Inconsistency(format!("φ_G = {} but φ_G/H ∘ φ_H = {composed}", g.phi())));
    }
    Ok(())
}

/// Upper numbering passes to quotients: G^v H/H = (G/H)^v.
pub fn check_upper_quotient(g: &FilteredGroup, h: &[usize]) -> Result<()> {
    let (quot, proj) = g.quotient(h)?;
    let mut marks = g.upper_jumps();
    marks.extend(quot.upper_jumps());
    for v in probe_points(&marks) {
        let lhs = image(&proj, &g.upper_group(&v)?);
        let rhs = quot.upper_group(&v)?;
        if lhs != rhs {
            return Err(Error::Inconsistency(format!("G^v H/H != (G/H)^v at v = {}", fmt_q(&v))));
        }
    }
    Ok(())
}
