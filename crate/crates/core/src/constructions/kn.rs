//! k-out-of-n ideals and consecutive k-out-of-n ideals.

use crate::error::{Error, Result};
use crate::monomial::{IndexSet, Monomial, MonomialIdeal};
use crate::polarity::{depolarize_by_chains, ChainPartition};
use crate::support::SupportFamily;

fn check(k: usize, n: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    Ok(())
}

/// `J_{k,n}`: all windows of `k` consecutive variables.
pub fn consecutive_kn(k: usize, n: usize) -> Result<MonomialIdeal> {
    check(k, n)?;
    let gens = (1..=n - k + 1)
        .map(|s| Monomial::from_support(n, &(s..s + k).collect()))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

/// The support family of `J_{k,n}` in closed form.
pub fn kn_support_family(k: usize, n: usize) -> Result<SupportFamily> {
    check(k, n)?;
    let range = |a: usize, b: usize| -> IndexSet { (a..=b).collect() };
    let top = n - k + 1;
    let sets = (1..=n)
        .map(|i| {
            if k < top {
                if i <= k {
                    range(i, k)
                } else if i < top {
                    IndexSet::singleton(i)
                } else {
                    range(top, i)
                }
            } else if i < top {
                range(i, k)
            } else if i <= k {
                range(top, k)
            } else {
                range(top, i)
            }
        })
        .collect();
    SupportFamily::new(n, sets)
}

/// All squarefree products of `k` of the `n` variables.
pub fn k_out_of_n(k: usize, n: usize) -> Result<MonomialIdeal> {
    check(k, n)?;
    let mut gens = Vec::new();
    let mut pick: Vec<usize> = (1..=k).collect();
    loop {
        gens.push(Monomial::from_support(n, &pick.iter().copied().collect())?);
        // next k-subset in lexicographic order
        let Some(pos) = (0..k).rev().find(|&p| pick[p] < n - (k - 1 - p)) else {
            break;
        };
        pick[pos] += 1;
        for q in pos + 1..k {
            pick[q] = pick[q - 1] + 1;
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Chain partition of `J_{k,n}` giving the copolar ideal in few variables:
/// `a = {1..k}, b = {k+1..n}` when `k >= n-k+1`, and otherwise
/// `a = {1..k}`, singletons `b_j = {k+j}`, `c = {n-k+1..n}`.
pub fn copolar_kn_partition(k: usize, n: usize) -> Result<ChainPartition> {
    check(k, n)?;
    let top = n - k + 1;
    let a: Vec<usize> = (1..=k).collect();
    let blocks = if k >= top {
        let b: Vec<usize> = (k + 1..=n).collect();
        if b.is_empty() {
            vec![a]
        } else {
            vec![a, b]
        }
    } else {
        let mut blocks = vec![a];
        blocks.extend((k + 1..top).map(|v| vec![v]));
        blocks.push((top..=n).collect());
        blocks
    };
    Ok(ChainPartition::new(blocks))
}

/// An ideal copolar to `J_{k,n}` in 2 variables (`k >= n-k+1`) or in
/// `2 + n - 2k` variables (`k < n-k+1`), for `k >= 2`.
pub fn copolar_kn(k: usize, n: usize) -> Result<MonomialIdeal> {
    check(k, n)?;
    if k < 2 {
        return Err(Error::OutOfRange(format!("copolar ideal needs k >= 2, got {k}")));
    }
    depolarize_by_chains(&consecutive_kn(k, n)?, &copolar_kn_partition(k, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarity::are_copolar;
    use crate::support::support_family;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    #[test]
    fn windows() {
        assert_eq!(consecutive_kn(2, 3).unwrap(), ideal("vars: 3\nx1*x2, x2*x3"));
        assert_eq!(consecutive_kn(3, 4).unwrap(), ideal("vars: 4\nx1*x2*x3, x2*x3*x4"));
        assert_eq!(consecutive_kn(3, 3).unwrap(), ideal("vars: 3\nx1*x2*x3"));
        assert!(consecutive_kn(0, 3).is_err());
        assert!(consecutive_kn(4, 3).is_err());
    }

    #[test]
    fn closed_form_family_examples() {
        let f = kn_support_family(2, 5).unwrap();
        assert_eq!(f.set(3).unwrap(), &IndexSet::singleton(3));
        let g = kn_support_family(3, 4).unwrap();
        assert_eq!(g.set(2).unwrap(), &IndexSet::from_iter([2, 3]));
        assert_eq!(g.set(3).unwrap(), &IndexSet::from_iter([2, 3]));
        let h = kn_support_family(1, 4).unwrap();
        assert!(h.iter().all(|(i, c)| c == &IndexSet::singleton(i)));
    }

    #[test]
    fn closed_form_matches_computed_family() {
        for n in 1..=8 {
            for k in 1..=n {
                assert_eq!(
                    kn_support_family(k, n).unwrap(),
                    support_family(&consecutive_kn(k, n).unwrap()).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn all_products() {
        assert_eq!(k_out_of_n(2, 3).unwrap(), ideal("vars: 3\nx1*x2, x1*x3, x2*x3"));
        assert_eq!(k_out_of_n(4, 4).unwrap(), ideal("vars: 4\nx1*x2*x3*x4"));
        assert_eq!(k_out_of_n(3, 6).unwrap().len(), 20);
    }

    #[test]
    fn copolar_two_variable_case() {
        // k >= n-k+1: a^{k-t} b^t for t = 0..n-k
        for (k, n) in [(3, 4), (2, 3), (4, 6), (5, 7), (3, 3)] {
            let got = copolar_kn(k, n).unwrap();
            let nv = if n > k { 2 } else { 1 };
            let gens: Vec<Monomial> = (0..=(n - k) as u32)
                .map(|t| {
                    let mut e = vec![k as u32 - t];
                    if nv == 2 {
                        e.push(t);
                    }
                    Monomial::new(e)
                })
                .collect();
            assert_eq!(got, MonomialIdeal::new(nv, gens).unwrap(), "k={k} n={n}");
        }
    }

    #[test]
    fn copolar_many_variable_case() {
        // k=2, n=5: a={1,2}, b_1={3}, c={4,5}
        let got = copolar_kn(2, 5).unwrap();
        assert_eq!(got, ideal("vars: 3\nx1^2, x1*x2, x2*x3, x3^2"));
        for n in 2..=7 {
            for k in 2..=n {
                let j = copolar_kn(k, n).unwrap();
                let expected_vars = if k > n - k { 2.min(n - k + 1) } else { 2 + n - 2 * k };
                assert_eq!(j.ambient(), expected_vars, "k={k} n={n}");
                assert!(are_copolar(&j, &consecutive_kn(k, n).unwrap()));
            }
        }
        assert!(copolar_kn(1, 3).is_err());
    }
}
