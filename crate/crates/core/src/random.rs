//! Seeded samplers for property tests and randomized CLI checks.
//!
//! Every sampler draws from a caller-supplied `ChaCha8Rng`, so a failure
//! replays from its seed.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::constructions::SpExpr;
use crate::monomial::{IndexSet, Monomial, MonomialIdeal};
use crate::poset::Forest;
use crate::support::{SigmaCollection, SupportFamily};

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonzero ideal in `n` variables from up to `max_gens` non-unit
/// monomials with exponents in `0..=max_exp`.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    assert!(n >= 1 && max_gens >= 1 && max_exp >= 1);
    let k = rng.gen_range(1..=max_gens);
    let mut gens = Vec::with_capacity(k);
    while gens.len() < k {
        let m = Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        if !m.is_one() {
            gens.push(m);
        }
    }
    MonomialIdeal::minimalize(n, gens).expect("non-unit generators of one ambient")
}

/// A random valid full family on `1..=n`.
///
/// The indices are put in a random order and each earlier index points to each
/// later one with probability `density`. `C_j` is the set of indices that
/// reach `j`, which contains `j` and is closed in the required sense.
pub fn random_support_family(rng: &mut ChaCha8Rng, n: usize, density: f64) -> SupportFamily {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut sets: BTreeMap<usize, IndexSet> = BTreeMap::new();
    for (pos, &j) in order.iter().enumerate() {
        let mut c = IndexSet::singleton(j);
        for &i in &order[..pos] {
            if rng.gen_bool(density) {
                c = c.union(&sets[&i]);
            }
        }
        sets.insert(j, c);
    }
    SupportFamily::with_domain(n, sets).expect("reachability sets form a valid family")
}

/// Between 1 and `max_sets` random nonempty subsets of `1..=n`.
pub fn random_sigma(rng: &mut ChaCha8Rng, n: usize, max_sets: usize) -> SigmaCollection {
    let k = rng.gen_range(1..=max_sets);
    let sets = (0..k)
        .map(|_| loop {
            let s: IndexSet = (1..=n).filter(|_| rng.gen_bool(0.4)).collect();
            if !s.is_empty() {
                break s;
            }
        })
        .collect();
    SigmaCollection::new(sets).expect("nonempty members")
}

/// A random forest on labels `1..=k`, `k` uniform in `1..=max_nodes`. Node `i`
/// of the construction order is a root or hangs under an earlier node, each
/// choice equally likely; the labels are then shuffled.
pub fn random_forest(rng: &mut ChaCha8Rng, max_nodes: usize) -> Forest {
    let k = rng.gen_range(1..=max_nodes);
    let raw: Vec<Option<usize>> = (0..k)
        .map(|i| {
            let c = rng.gen_range(0..=i);
            if c == 0 {
                None
            } else {
                Some(c)
            }
        })
        .collect();
    let mut perm: Vec<usize> = (1..=k).collect();
    perm.shuffle(rng);
    let mut parents = vec![None; k];
    for (i, p) in raw.iter().enumerate() {
        parents[perm[i] - 1] = p.map(|p| perm[p - 1]);
    }
    Forest::from_parents(&parents).expect("parents precede children")
}

fn catalan(n: usize) -> u128 {
    let mut c = 1u128;
    for i in 0..n {
        c = c * 2 * (2 * i as u128 + 1) / (i as u128 + 2);
    }
    c
}

/// A random series-parallel expression on variables `1..=k`, `k` uniform in
/// `1..=max_vars`. The binary shape is uniform among shapes with `k` leaves,
/// variables are assigned left to right and each inner node is a sum or an
/// intersection with equal probability.
pub fn random_sp_expr(rng: &mut ChaCha8Rng, max_vars: usize) -> SpExpr {
    assert!((1..=60).contains(&max_vars));
    let k = rng.gen_range(1..=max_vars);
    let mut next = 1;
    shape(rng, k, &mut next)
}

fn shape(rng: &mut ChaCha8Rng, leaves: usize, next: &mut usize) -> SpExpr {
    if leaves == 1 {
        *next += 1;
        return SpExpr::Var(*next - 1);
    }
    // left subtree size l has weight Cat(l-1) Cat(leaves-l-1)
    let total = catalan(leaves - 1);
    let mut pick = rng.gen_range(0..total);
    let mut l = 1;
    loop {
        let w = catalan(l - 1) * catalan(leaves - l - 1);
        if pick < w {
            break;
        }
        pick -= w;
        l += 1;
    }
    let sum = rng.gen_bool(0.5);
    let a = shape(rng, l, next);
    let b = shape(rng, leaves - l, next);
    if sum {
        SpExpr::sum(a, b)
    } else {
        SpExpr::inter(a, b)
    }
}
