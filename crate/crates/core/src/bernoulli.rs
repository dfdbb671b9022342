//! Bernoulli numbers, power sums and the von Staudt–Clausen integer.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, Q};
use crate::error::{Error, Result};

/// Memo table of B_0, B_1, ... extended on demand.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Q>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable { values: vec![Q::one()] }
    }

    /// B_k with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0.
    pub fn get(&mut self, k: usize) -> Q {
        while self.values.len() <= k {
            let n = self.values.len();
            if n > 1 && n % 2 == 1 {
                self.values.push(Q::zero());
                continue;
            }
            let row = binomial_row(n + 1);
            let s = self
                .values
                .iter()
                .enumerate()
                .fold(Q::zero(), |acc, (j, b)| acc + b * Q::from_integer(row[j].clone()));
            self.values.push(-s / Q::from_integer(row[n].clone()));
        }
        self.values[k].clone()
    }
}

pub fn bernoulli(k: usize) -> Q {
    BernoulliTable::new().get(k)
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 0..n {
        let next = row[i].clone() * BigInt::from(n - i) / BigInt::from(i + 1);
        row.push(next);
    }
    row
}

/// S_k(n) = 1^k + 2^k + ... + (n-1)^k by direct summation.
pub fn power_sum(k: u32, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::invalid("power sum needs n >= 1"));
    }
    Ok((1..n).map(|j| num_traits::pow(BigInt::from(j), k as usize)).sum())
}

/// sum_{m=0}^{k} C(k, m) B_m n^{k+1-m} / (k+1-m).
///
/// For k = 0 the m = 0 term gives n rather than S_0(n) = n - 1, since the
/// empty sum starts at 1 while this form counts 0^0.
pub fn faulhaber(table: &mut BernoulliTable, k: u32, n: u64) -> Q {
    let k = k as usize;
    let row = binomial_row(k);
    let n = BigInt::from(n);
    (0..=k).fold(Q::zero(), |acc, m| {
        let e = k + 1 - m;
        acc + table.get(m) * Q::from_integer(&row[m] * num_traits::pow(n.clone(), e)) / Q::from_integer(BigInt::from(e))
    })
}

/// Primes l with l - 1 | k, their product, and the integer B_k + sum 1/l.
pub fn staudt_clausen(table: &mut BernoulliTable, k: u64) -> Result<(BigInt, BigInt, Vec<u64>)> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::invalid(format!("k = {k} must be positive and even")));
    }
    let primes: Vec<u64> = arith::divisors(k).into_iter().map(|d| d + 1).filter(|&l| arith::is_prime(l)).collect();
    let denominator: BigInt = primes.iter().map(|&l| BigInt::from(l)).product();
    let w = primes.iter().fold(table.get(k as usize), |acc, &l| acc + Q::new(BigInt::one(), BigInt::from(l)));
    if !w.is_integer() {
        return Err(Error::Inconsistency(format!("B_{k} + sum 1/l is not an integer")));
    }
    Ok((w.to_integer(), denominator, primes))
}
