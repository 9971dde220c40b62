//! Minimality of the Taylor resolution.
//!
//! The Taylor complex is minimal iff removing any generator from any subset
//! shrinks the subset lcm. Since `lcm(S - g)` divides `lcm(G - g)`, this holds
//! for all subsets at once exactly when no generator divides the lcm of all the
//! others.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Largest generator count accepted.
pub const TAYLOR_MAX_GENERATORS: usize = 20;

pub fn taylor_is_minimal(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    taylor_is_minimal_list(ideal.generators())
}

/// The same test on an arbitrary generator list. Non-minimal lists (one
/// generator dividing another) are never Taylor-minimal.
pub fn taylor_is_minimal_list(gens: &[Monomial]) -> Result<bool> {
    if gens.len() > TAYLOR_MAX_GENERATORS {
        return Err(Error::ScaleCap {
            what: "generators for the Taylor check",
            actual: gens.len(),
            cap: TAYLOR_MAX_GENERATORS,
        });
    }
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    let n = first.ambient();
    if let Some(bad) = gens.iter().find(|g| g.ambient() != n) {
        return Err(Error::AmbientMismatch { left: n, right: bad.ambient() });
    }
    for (k, g) in gens.iter().enumerate() {
        let others = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(Monomial::one(n), |acc, (_, h)| acc.lcm_same(h));
        if g.divides_same(&others) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(s: &str) -> Vec<Monomial> {
        let i: MonomialIdeal = s.parse().unwrap();
        i.generators().to_vec()
    }

    /// Walks every subset and every removal, literally.
    fn subset_walk(g: &[Monomial]) -> bool {
        let n = g[0].ambient();
        let lcm_of = |mask: u32| {
            (0..g.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(Monomial::one(n), |a, i| a.lcm_same(&g[i]))
        };
        for mask in 1u32..(1 << g.len()) {
            let full = lcm_of(mask);
            for i in 0..g.len() {
                if mask >> i & 1 == 1 && lcm_of(mask & !(1 << i)) == full {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn examples() {
        assert!(taylor_is_minimal_list(&gens("vars: 3\nx1, x2, x3")).unwrap());
        assert!(!taylor_is_minimal_list(&gens("vars: 3\nx1*x2, x2*x3, x1*x3")).unwrap());
        let nonmin = vec![Monomial::new(vec![1, 0]), Monomial::new(vec![1, 1])];
        assert!(!taylor_is_minimal_list(&nonmin).unwrap());
        assert!(taylor_is_minimal_list(&[]).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let many: Vec<Monomial> = (1..=21).map(|i| Monomial::variable(21, i).unwrap()).collect();
        assert!(matches!(taylor_is_minimal_list(&many), Err(Error::ScaleCap { actual: 21, .. })));
    }

    #[test]
    fn agrees_with_subset_walk() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=6);
            let g: Vec<Monomial> = (0..k)
                .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=2)).collect()))
                .collect();
            assert_eq!(taylor_is_minimal_list(&g).unwrap(), subset_walk(&g), "{g:?}");
        }
    }
}
