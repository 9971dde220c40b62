//! Posets made of `m` disjoint diamonds and the numbers `K^m_{a,b}`.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::binom;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polarity::ChainPartition;

fn check(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::OutOfRange(format!("diamonds need m >= 2, got {m}")));
    }
    Ok(())
}

/// Cyclic successor of block `i` in `1..=m`.
fn next(i: usize, m: usize) -> usize {
    if i == m {
        1
    } else {
        i + 1
    }
}

/// Flat index of `x_{ij}` in the squarefree diamond ring (`j` in `1..=4`).
pub fn diamond_var(i: usize, j: usize) -> usize {
    4 * (i - 1) + j
}

/// Flat index of `x_{ij}` in the depolarized ring (`j` in `1..=2`).
pub fn diamond_depolarized_var(i: usize, j: usize) -> usize {
    2 * (i - 1) + j
}

/// The squarefree ideal whose support poset is `m` disjoint diamonds, on `4m`
/// variables.
pub fn diamonds_squarefree(m: usize) -> Result<MonomialIdeal> {
    check(m)?;
    let nv = 4 * m;
    let mono = |vars: [usize; 4]| {
        let pairs: Vec<(usize, u32)> = vars.iter().map(|&v| (v, 1)).collect();
        Monomial::from_pairs(nv, &pairs).expect("in range")
    };
    let mut gens = Vec::with_capacity(2 * m);
    for i in 1..=m {
        gens.push(mono([1, 2, 3, 4].map(|j| diamond_var(i, j))));
    }
    for i in 1..=m {
        let k = next(i, m);
        gens.push(mono([
            diamond_var(i, 1),
            diamond_var(i, 2),
            diamond_var(k, 1),
            diamond_var(k, 3),
        ]));
    }
    MonomialIdeal::new(nv, gens)
}

/// The generators `A_1..A_m, B_1..B_m` of the depolarized diamond ideal `I_m`,
/// in pivot order.
pub fn diamonds_generators_in_standard_order(m: usize) -> Result<Vec<Monomial>> {
    check(m)?;
    let nv = 2 * m;
    let v = diamond_depolarized_var;
    let mut gens = Vec::with_capacity(2 * m);
    for i in 1..=m {
        gens.push(Monomial::from_pairs(nv, &[(v(i, 1), 3), (v(i, 2), 1)])?);
    }
    for i in 1..=m {
        let k = next(i, m);
        gens.push(Monomial::from_pairs(nv, &[(v(i, 1), 2), (v(k, 1), 1), (v(k, 2), 1)])?);
    }
    Ok(gens)
}

/// `I_m` on the `2m` variables `x_{11}, x_{12}, ..., x_{m1}, x_{m2}`.
pub fn diamonds_depolarized(m: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::new(2 * m, diamonds_generators_in_standard_order(m)?)
}

/// Blocks `{i1, i2, i4}` and `{i3}` for each diamond, listed so that the
/// depolarized variables come out as `x_{i1}, x_{i2}`.
pub fn diamonds_chain_partition(m: usize) -> ChainPartition {
    let mut blocks = Vec::with_capacity(2 * m);
    for i in 1..=m {
        blocks.push(vec![diamond_var(i, 1), diamond_var(i, 2), diamond_var(i, 4)]);
        blocks.push(vec![diamond_var(i, 3)]);
    }
    ChainPartition::new(blocks)
}

/// Memoized values of `K^m_{a,b}` for a fixed `m`.
#[derive(Clone, Debug)]
pub struct KTable {
    m: u64,
    memo: HashMap<(u64, u64), BigUint>,
}

impl KTable {
    pub fn new(m: usize) -> Self {
        KTable {
            m: m as u64,
            memo: HashMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// `K^m_{a,b}` from the recurrence and its base cases.
    pub fn get(&mut self, a: i64, b: i64) -> Result<BigUint> {
        if a < 0 || b < 0 {
            return Err(Error::OutOfRange(format!(
                "K^{}_{{{a},{b}}} has a negative index",
                self.m
            )));
        }
        Ok(self.value(a as u64, b as u64))
    }

    fn value(&mut self, a: u64, b: u64) -> BigUint {
        if let Some(v) = self.memo.get(&(a, b)) {
            return v.clone();
        }
        let m = self.m;
        let v = if b == 0 {
            BigUint::from(m + a)
        } else if a == 0 {
            binom(m, b + 1)
        } else if a == 1 {
            binom(m, b) + binom(m, b + 1)
        } else {
            self.value(a - 2, b - 1) + self.value(a - 1, b)
        };
        self.memo.insert((a, b), v.clone());
        v
    }
}

/// `K^m_{a,b}` through the recurrence.
pub fn k_value(m: usize, a: i64, b: i64) -> Result<BigUint> {
    KTable::new(m).get(a, b)
}

/// `K^m_{a,b} = sum_t C(a+1-t, t) C(m, b+1-t)`.
pub fn k_closed_form(m: usize, a: i64, b: i64) -> Result<BigUint> {
    if a < 0 || b < 0 {
        return Err(Error::OutOfRange(format!("K^{m}_{{{a},{b}}} has a negative index")));
    }
    let (a, b, m) = (a as u64, b as u64, m as u64);
    let mut total = BigUint::from(0u32);
    for t in 0..=(b + 1) {
        if 2 * t > a + 1 {
            break;
        }
        total += binom(a + 1 - t, t) * binom(m, b + 1 - t);
    }
    Ok(total)
}

/// Total Betti number `beta_i(I_m)` for `m >= 3`.
pub fn diamonds_betti_formula(m: usize, i: usize) -> Result<BigUint> {
    if m < 3 {
        return Err(Error::OutOfRange(format!(
            "the diamond Betti formula needs m >= 3 (it would read K^{m}_{{-1,.}})"
        )));
    }
    if i == 0 {
        return Ok(BigUint::from(2 * m as u64));
    }
    let mut k = KTable::new(m);
    let (m, i) = (m as i64, i as i64);
    Ok(BigUint::from(2u32) * k.get(m - 3, i - 1)? + k.get(m - 2, i)?)
}

pub fn diamonds_regularity(m: usize) -> usize {
    2 * m
}

pub fn diamonds_projdim(m: usize) -> usize {
    m / 2 + m - 1
}
