//! Multigraded Betti numbers from the homology of upper Koszul complexes.
//!
//! `beta_{d,mu}(I) = dim H~_{d-1}(K^mu; Q)` where `K^mu` is the complex of
//! squarefree `tau` inside `supp(mu)` with `x^(mu - tau)` in `I`. Only lcms of
//! generator subsets can carry nonzero Betti numbers, so those are the
//! candidates. `K^mu` is the union of the simplices
//! `T_g = { i : g_i < mu_i }` over generators `g` dividing `mu`.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;

use super::betti::BettiTable;
use super::linalg::{rank, SparseRow};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Default cap on the number of distinct subset lcms.
pub const DEFAULT_MAX_SUBSETS: usize = 1 << 20;

/// Cap on the number of faces of a single complex.
const MAX_FACES: usize = 1 << 22;

/// The lcm cap, overridable through `SUPPOS_MAX_SUBSETS`.
pub fn oracle_cap() -> usize {
    std::env::var("SUPPOS_MAX_SUBSETS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_SUBSETS)
}

pub fn betti_oracle(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_oracle_with_cap(ideal, oracle_cap())
}

pub fn betti_oracle_with_cap(ideal: &MonomialIdeal, cap: usize) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let candidates = lcm_closure(ideal.generators(), cap)?;
    let gens = ideal.generators();
    let per_mu: Vec<Result<Vec<(usize, u64)>>> = candidates
        .par_iter()
        .map(|mu| betti_at(gens, mu))
        .collect();
    let mut table = BettiTable::new();
    for (mu, res) in candidates.iter().zip(per_mu) {
        for (d, c) in res? {
            table.add(d, mu.clone(), c);
        }
    }
    Ok(table)
}

/// All distinct lcms of nonempty generator subsets, sorted.
fn lcm_closure(gens: &[Monomial], cap: usize) -> Result<Vec<Monomial>> {
    let mut all: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let l = f.lcm_same(g);
                if !all.contains(&l) {
                    all.insert(l.clone());
                    next.push(l);
                    if all.len() > cap {
                        return Err(Error::ScaleCap {
                            what: "distinct lcms of generator subsets",
                            actual: all.len(),
                            cap,
                        });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = all.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Nonzero `(d, beta_{d,mu})` pairs at one multidegree.
fn betti_at(gens: &[Monomial], mu: &Monomial) -> Result<Vec<(usize, u64)>> {
    let support: Vec<usize> = (0..mu.ambient()).filter(|&i| mu.exponents()[i] > 0).collect();
    if support.len() > 64 {
        return Err(Error::ScaleCap {
            what: "variables in a multidegree support",
            actual: support.len(),
            cap: 64,
        });
    }
    let mut facets: Vec<u64> = gens
        .iter()
        .filter(|g| g.divides_same(mu))
        .map(|g| {
            support.iter().enumerate().fold(0u64, |acc, (bit, &i)| {
                if g.exponents()[i] < mu.exponents()[i] {
                    acc | (1 << bit)
                } else {
                    acc
                }
            })
        })
        .collect();
    facets.sort_unstable();
    facets.dedup();
    let maximal: Vec<u64> = facets
        .iter()
        .copied()
        .filter(|&f| !facets.iter().any(|&o| o != f && o & f == f))
        .collect();
    if maximal.is_empty() {
        return Ok(Vec::new());
    }
    // a nonempty common vertex makes the complex a cone
    if maximal.iter().fold(u64::MAX, |acc, &f| acc & f) != 0 {
        return Ok(Vec::new());
    }
    let homology = reduced_homology(&maximal)?;
    Ok(homology
        .into_iter()
        .enumerate()
        .filter(|&(_, h)| h > 0)
        .collect())
}

/// Reduced Betti numbers of the complex generated by `facets`, as a vector
/// indexed by `k + 1` for `H~_k`, `k >= -1`.
pub(crate) fn reduced_homology(facets: &[u64]) -> Result<Vec<u64>> {
    let mut faces: HashSet<u64> = HashSet::new();
    for &f in facets {
        // every subset of f, including the empty face
        let mut sub = f;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f;
        }
        if faces.len() > MAX_FACES {
            return Err(Error::ScaleCap {
                what: "faces in an upper Koszul complex",
                actual: faces.len(),
                cap: MAX_FACES,
            });
        }
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] holds faces with s vertices (dimension s - 1)
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in &faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter_mut()
        .map(|v| {
            v.sort_unstable();
            v.iter().enumerate().map(|(i, &f)| (f, i)).collect()
        })
        .collect();
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<SparseRow> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row: Vec<(usize, i64)> = Vec::with_capacity(s);
                let mut sign = 1i64;
                let mut bits = f;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    row.push((index[s - 1][&(f & !low)], sign));
                    sign = -sign;
                    bits &= bits - 1;
                }
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[s] = rank(&rows);
    }
    Ok((0..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect())
}

/// Multidegrees at which the oracle table is nonzero, grouped by degree.
pub fn support_by_degree(table: &BettiTable) -> Vec<BTreeSet<Monomial>> {
    let mut out: Vec<BTreeSet<Monomial>> = vec![BTreeSet::new(); table.totals().len()];
    for (d, mu, _) in table.iter() {
        out[d].insert(mu.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn homology_of_small_complexes() {
        // the empty complex {∅}
        assert_eq!(reduced_homology(&[0]).unwrap(), vec![1]);
        // two points
        assert_eq!(reduced_homology(&[0b01, 0b10]).unwrap(), vec![0, 1]);
        // hollow triangle
        assert_eq!(reduced_homology(&[0b011, 0b110, 0b101]).unwrap(), vec![0, 0, 1, 0][..3].to_vec());
        // solid edge
        assert_eq!(reduced_homology(&[0b11]).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn principal_ideal() {
        let t = betti_oracle(&ideal("vars: 2\nx1*x2")).unwrap();
        assert_eq!(t.totals(), vec![1]);
    }

    #[test]
    fn koszul_complexes() {
        for n in 1..=5u64 {
            let gens: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            let t = betti_oracle(&ideal(&format!("vars: {n}\n{}", gens.join(",")))).unwrap();
            let expect: Vec<u64> = (0..n).map(|i| binomial(n, i + 1)).collect();
            assert_eq!(t.totals(), expect);
        }
    }

    #[test]
    fn non_taylor_example() {
        // <x1x2, x2x3, x1x3>: beta = (3, 2)
        let t = betti_oracle(&ideal("vars: 3\nx1*x2, x2*x3, x1*x3")).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
    }

    #[test]
    fn lines_two_two() {
        let t = betti_oracle(&ideal("vars: 2\nx1^2, x1*x2, x2^2")).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
    }

    #[test]
    fn zero_ideal_and_cap() {
        assert_eq!(betti_oracle(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        let i = ideal("vars: 4\nx1, x2, x3, x4");
        assert!(matches!(
            betti_oracle_with_cap(&i, 5),
            Err(Error::ScaleCap { cap: 5, .. })
        ));
        assert!(betti_oracle_with_cap(&i, 15).is_ok());
    }
}
