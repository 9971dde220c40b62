use proptest::prelude::*;
use rand::seq::SliceRandom;

use suppos_core::constructions::*;
use suppos_core::polarity::flatten_multidegree;
use suppos_core::random::{self, random_forest, random_sigma, random_support_family};
use suppos_core::resolution::*;
use suppos_core::support::polarized_support_family;
use suppos_core::*;

fn monomials(n: usize, max_exp: u32, max_len: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_len).prop_map(|vs| {
        vs.into_iter()
            .map(Monomial::new)
            .filter(|m| !m.is_one())
            .collect::<Vec<_>>()
    })
}

fn ideal_in(n: usize, max_exp: u32, max_len: usize) -> impl Strategy<Value = MonomialIdeal> {
    monomials(n, max_exp, max_len)
        .prop_filter("needs a non-unit generator", |g| !g.is_empty())
        .prop_map(move |g| MonomialIdeal::minimalize(n, g).unwrap())
}

fn ideal_up_to(max_n: usize, max_exp: u32, max_len: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| ideal_in(n, max_exp, max_len))
}

fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (1..=5usize).prop_flat_map(|n| (ideal_in(n, 3, 5), ideal_in(n, 3, 5), ideal_in(n, 3, 5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimalize_is_idempotent_and_order_free(
        (n, gens, seed) in (1..=5usize).prop_flat_map(|n| (Just(n), monomials(n, 3, 8), any::<u64>()))
    ) {
        prop_assume!(!gens.is_empty());
        let a = MonomialIdeal::minimalize(n, gens.clone()).unwrap();
        let again = MonomialIdeal::minimalize(n, a.generators().to_vec()).unwrap();
        prop_assert_eq!(&a, &again);
        let mut shuffled = gens;
        shuffled.shuffle(&mut random::rng(seed));
        prop_assert_eq!(a, MonomialIdeal::minimalize(n, shuffled).unwrap());
    }

    #[test]
    fn intersection_matches_membership((a, b, _) in ideal_pair(), seed in any::<u64>()) {
        let n = a.ambient();
        let meet = a.intersection(&b).unwrap();
        let mut rng = random::rng(seed);
        for _ in 0..40 {
            use rand::Rng;
            // random monomial of total degree at most 6
            let mut e = vec![0u32; n];
            for _ in 0..rng.gen_range(0..=6) {
                e[rng.gen_range(0..n)] += 1;
            }
            let w = Monomial::new(e);
            prop_assert_eq!(
                meet.contains(&w).unwrap(),
                a.contains(&w).unwrap() && b.contains(&w).unwrap()
            );
        }
    }

    #[test]
    fn sum_and_intersection_laws((a, b, c) in ideal_pair()) {
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersection(&b).unwrap().intersection(&c).unwrap(),
            a.intersection(&b.intersection(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn isomorphism_search_is_symmetric((a, b, _) in ideal_pair(), seed in any::<u64>()) {
        let n = a.ambient();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut random::rng(seed));
        let renamed = MonomialIdeal::minimalize(
            n,
            a.generators().iter().map(|g| Monomial::new((0..n).map(|i| g.exponents()[perm[i]]).collect())),
        )
        .unwrap();
        prop_assert!(find_variable_isomorphism(&a, &renamed).is_some());
        prop_assert!(find_variable_isomorphism(&renamed, &a).is_some());
        prop_assert_eq!(
            find_variable_isomorphism(&a, &b).is_some(),
            find_variable_isomorphism(&b, &a).is_some()
        );
    }

    #[test]
    fn polarization_is_idempotent_up_to_renaming(i in ideal_up_to(4, 3, 5)) {
        let p = polarize(&i).ideal;
        let pp = polarize(&p).ideal;
        prop_assert!(pp.is_squarefree());
        prop_assert!(find_variable_isomorphism(&p, &pp).is_some());
    }

    #[test]
    fn support_poset_agrees_with_polarization(i in ideal_up_to(5, 3, 5)) {
        let pol = polarize(&i);
        prop_assert_eq!(polarized_support_family(&i), support_family(&pol.ideal).unwrap());
        if !i.is_squarefree() {
            prop_assert_eq!(support_poset(&i), support_poset(&pol.ideal));
        }
    }

    #[test]
    fn oracle_matches_polarized_oracle(i in ideal_up_to(4, 3, 5)) {
        let pol = polarize(&i);
        let direct = betti_oracle(&i).unwrap();
        let flattened = direct.map_multidegrees(|m| flatten_multidegree(&pol.map, m)).unwrap();
        prop_assert_eq!(flattened, betti_oracle(&pol.ideal).unwrap());
    }

    #[test]
    fn oracle_counts_generators(i in ideal_up_to(5, 2, 7)) {
        let t = betti_oracle(&i).unwrap();
        prop_assert_eq!(t.totals()[0] as usize, i.len());
        for g in i.generators() {
            prop_assert_eq!(t.get(0, g), 1);
        }
    }

    #[test]
    fn trees_sandwich_the_oracle(i in ideal_up_to(5, 2, 7), seed in any::<u64>()) {
        let oracle = betti_oracle(&i).unwrap();
        for order in [PivotOrder::Canonical, PivotOrder::Reversed, PivotOrder::Seeded(seed)] {
            let tree = mvt_build(&i, &order).unwrap();
            let counts = mvt_counts(&tree);
            let zero: Vec<_> = counts.full.iter().filter(|e| e.0 == 0).collect();
            prop_assert_eq!(zero.len(), i.len());
            prop_assert!(zero.iter().all(|e| e.2 == 1));
            let b = mvt_bounds(&i, &order).unwrap();
            prop_assert!(b.lower.le(&oracle));
            prop_assert!(oracle.le(&b.upper));
            if counts.once == counts.full {
                prop_assert_eq!(counts.full.euler_characteristic(), oracle.euler_characteristic());
            }
        }
    }

    #[test]
    fn taylor_minimal_means_binomial_totals(i in ideal_up_to(5, 2, 6)) {
        if taylor_is_minimal(&i).unwrap() {
            let g = i.len() as u64;
            let expect: Vec<u64> = (0..g).map(|k| num_integer::binomial(g, k + 1)).collect();
            prop_assert_eq!(betti_oracle(&i).unwrap().totals(), expect);
        }
    }
}

#[test]
fn prop_3_1_on_random_families() {
    let mut rng = random::rng(31);
    let mut checked = 0;
    for _ in 0..2000 {
        use rand::Rng;
        let n = rng.gen_range(1..=6);
        let fam = random_support_family(&mut rng, n, 0.3);
        let sigma = random_sigma(&mut rng, n, 5);
        if sigma_conditions_hold(&fam, &sigma) {
            checked += 1;
            let i = ideal_from_sigma(&fam, &sigma).unwrap();
            assert_eq!(support_family(&i).unwrap(), fam, "sigma {sigma:?}");
        }
    }
    assert!(checked >= 50, "only {checked} families satisfied the conditions");
}

#[test]
fn support_families_are_valid() {
    let mut rng = random::rng(32);
    for _ in 0..300 {
        use rand::Rng;
        let n = rng.gen_range(1..=6);
        let i = random::random_ideal(&mut rng, n, 6, 1);
        // parsing the JSON revalidates membership and transitivity
        let fam = support_family(&i).unwrap();
        let json = fam.to_json();
        assert_eq!(SupportFamily::from_json(&json).unwrap(), fam);
    }
}

#[test]
fn ordered_poset_refines_support_poset() {
    let mut rng = random::rng(33);
    for _ in 0..300 {
        use rand::Rng;
        let n = rng.gen_range(1..=7);
        let fam = random_support_family(&mut rng, n, 0.35);
        let ordered = ordered_support_poset(&fam, &[]).unwrap();
        let sp = SupportPoset::from_family(&fam);
        let distinct = sp.classes.len() == n;
        assert_eq!(distinct, ordered.is_isomorphic(&sp.poset) && ordered.len() == sp.poset.len());
        if distinct {
            assert_eq!(ordered.cover_labels(), sp.poset.cover_labels());
        }
        // the refinement contains the strict inclusions
        for (i, ci) in fam.iter() {
            for (j, cj) in fam.iter() {
                if ci != cj && ci.is_subset(cj) {
                    let a = ordered.index_of(&i.to_string()).unwrap();
                    let b = ordered.index_of(&j.to_string()).unwrap();
                    assert!(ordered.lt(a, b));
                }
            }
        }
    }
}

#[test]
fn covers_generate_the_order() {
    let mut rng = random::rng(34);
    for _ in 0..200 {
        let fam = random_support_family(&mut rng, 7, 0.3);
        let p = SupportPoset::from_family(&fam).poset;
        let labels = p.labels().to_vec();
        let rebuilt = Poset::from_covers(labels, p.covers().iter().copied()).unwrap();
        assert_eq!(rebuilt, p);
    }
}

#[test]
fn forest_closure_under_disjoint_union() {
    let mut rng = random::rng(35);
    for _ in 0..200 {
        let a = SupportPoset::from_family(&random_support_family(&mut rng, 5, 0.4)).poset;
        let b = random_forest(&mut rng, 6).into_poset();
        let c = SupportPoset::from_family(&random_support_family(&mut rng, 4, 0.5)).poset;
        for (x, y) in [(&a, &b), (&a, &c), (&b, &c), (&b, &b)] {
            let u = x.disjoint_union(y).poset;
            assert_eq!(u.is_forest(), x.is_forest() && y.is_forest());
        }
    }
}

#[test]
fn trunk_is_a_chain_below_everything_else() {
    let mut rng = random::rng(36);
    let mut trees = 0;
    while trees < 150 {
        let f = random_forest(&mut rng, 10);
        let Ok(trunk) = f.trunk() else {
            assert!(f.roots().len() > 1);
            continue;
        };
        trees += 1;
        for w in trunk.windows(2) {
            assert!(f.lt(w[0], w[1]));
        }
        for v in 0..f.len() {
            if !trunk.contains(&v) {
                assert!(trunk.iter().all(|&t| f.lt(t, v)));
            }
        }
    }
}

#[test]
fn depolarize_then_polarize_recovers_input() {
    for (n, m) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        let sq = lines_squarefree(n, m).unwrap();
        let dep = depolarize_by_chains(&sq, &lines_chain_partition(n, m)).unwrap();
        assert!(find_variable_isomorphism(&polarize(&dep).ideal, &sq).is_some());
        assert!(are_copolar(&dep, &sq));
    }
}

#[test]
fn leaf_ideal_of_consecutive_support_poset_differs() {
    let mut witnessed = false;
    for n in 2..=7 {
        for k in 1..=n {
            let j = consecutive_kn(k, n).unwrap();
            let f = ordered_support_poset(&support_family(&j).unwrap(), &[]).unwrap();
            if f.is_forest() {
                let li = leaf_ideal(&f).unwrap();
                let back = ordered_support_poset(&support_family(&li).unwrap(), &[]).unwrap();
                assert!(back.is_isomorphic(&f));
                witnessed |= li != j;
            }
        }
    }
    assert!(witnessed);
}

#[test]
fn random_forests_are_realized_by_leaf_ideals() {
    let mut rng = random::rng(37);
    for _ in 0..200 {
        let f = random_forest(&mut rng, 12);
        let li = leaf_ideal(f.poset()).unwrap();
        assert!(taylor_is_minimal(&li).unwrap());
        assert_eq!(li.len(), f.leaves().len());
        let ordered = ordered_support_poset(&support_family(&li).unwrap(), &[]).unwrap();
        assert!(ordered.is_isomorphic(f.poset()));
        assert!(support_poset(&li).poset.is_forest());
    }
}
