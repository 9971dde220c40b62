//! Posets made of `n` disjoint chains of length `m`.

use num_bigint::BigUint;

use super::binom;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::polarity::ChainPartition;

fn check(n: usize, m: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("lines need n >= 2, got {n}")));
    }
    if m < 1 {
        return Err(Error::OutOfRange(format!("lines need m >= 1, got {m}")));
    }
    Ok(())
}

/// The squarefree ideal `I_{n,m}` on `n*m` variables; block `i` holds the
/// variables `(i-1)m+1 ..= im`.
pub fn lines_squarefree(n: usize, m: usize) -> Result<MonomialIdeal> {
    check(n, m)?;
    let nv = n * m;
    let mono = |vars: Vec<usize>| {
        let pairs: Vec<(usize, u32)> = vars.into_iter().map(|v| (v, 1)).collect();
        Monomial::from_pairs(nv, &pairs).expect("indices in range")
    };
    let mut gens = vec![mono((1..=m).collect())];
    for i in 2..=n {
        let base = (i - 1) * m;
        gens.push(mono((base + 1..=base + m).collect()));
        for k in 1..m {
            let mut vars: Vec<usize> = (1..=m - k).collect();
            vars.extend(base + 1..=base + k);
            gens.push(mono(vars));
        }
    }
    MonomialIdeal::new(nv, gens)
}

/// The zero-dimensional ideal `J_{n,m}` in `y_1..y_n`.
pub fn lines_depolarized(n: usize, m: usize) -> Result<MonomialIdeal> {
    check(n, m)?;
    MonomialIdeal::new(n, lines_generators_in_standard_order(n, m)?)
}

/// Generators of `J_{n,m}` in the order used to build its Mayer-Vietoris tree:
/// the pure powers, then the rows `y_1^{m-k} y_j^k` for `k = m-1` down to 1.
pub fn lines_generators_in_standard_order(n: usize, m: usize) -> Result<Vec<Monomial>> {
    check(n, m)?;
    let mu = m as u32;
    let mut gens: Vec<Monomial> = (1..=n)
        .map(|i| Monomial::power(n, i, mu).expect("in range"))
        .collect();
    for k in (1..mu).rev() {
        for j in 2..=n {
            gens.push(Monomial::from_pairs(n, &[(1, mu - k), (j, k)]).expect("in range"));
        }
    }
    Ok(gens)
}

/// The chain partition `A_1 | ... | A_n` of `I_{n,m}` whose depolarization is `J_{n,m}`.
pub fn lines_chain_partition(n: usize, m: usize) -> ChainPartition {
    ChainPartition::new(
        (0..n)
            .map(|i| (i * m + 1..=(i + 1) * m).collect())
            .collect(),
    )
}

/// Closed form for the total Betti number `beta_i(J_{n,m})`; zero outside `0..n`.
pub fn lines_betti_formula(n: usize, m: usize, i: usize) -> BigUint {
    let (n64, m64, i64_) = (n as u64, m as u64, i as u64);
    if n < 2 || m < 1 || i >= n {
        return BigUint::from(0u32);
    }
    if i == 0 {
        return BigUint::from(n64 + (n64 - 1) * (m64 - 1));
    }
    let mut total = binom(n64 - 1, i64_) + binom(n64 - 1, i64_ + 1);
    for j in 2..=n64 {
        total += BigUint::from(m64 - 1) * binom(1 + n64 - j, i64_);
    }
    total
}

pub fn lines_projdim(n: usize) -> usize {
    n - 1
}

pub fn lines_regularity(n: usize, m: usize) -> usize {
    (n - 1) * (m - 1)
}
