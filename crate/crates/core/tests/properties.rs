use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use posat::search::{digraph_lower_bound_check, DigraphBoundVerdict};
use posat::verify::{random_separating_family, random_tc_free_with_cycle};
use posat::{
    catalog_up_to, greedy_saturate, legs_witness_map, Digraph, Pattern, Poset, SatStarResult,
    SearchConfig, SetFamily, SetOrder, SetOrdering,
};

fn poset_strategy(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|p| {
        prop::collection::vec(any::<bool>(), p * (p - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..p)
                .flat_map(|a| ((a + 1)..p).map(move |b| (a, b)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Poset::from_cover_relations(p, &pairs).unwrap()
        })
    })
}

fn family_strategy(max_n: usize) -> impl Strategy<Value = SetFamily> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::btree_set(0..(1u64 << n), 0..=(1usize << n).min(12))
            .prop_map(move |s| SetFamily::new(n, s).unwrap())
    })
}

fn small_catalog() -> Vec<Poset> {
    catalog_up_to(5)
}

/// Existence of an induced copy by trying every injective map.
fn brute_embeds(pattern: &Poset, host: &Poset) -> bool {
    fn rec(pattern: &Poset, host: &Poset, map: &mut Vec<usize>) -> bool {
        let x = map.len();
        if x == pattern.size() {
            return true;
        }
        for y in 0..host.size() {
            if map.contains(&y) {
                continue;
            }
            let ok = (0..x).all(|a| {
                pattern.less(a, x) == host.less(map[a], y)
                    && pattern.less(x, a) == host.less(y, map[a])
            });
            if ok {
                map.push(y);
                if rec(pattern, host, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(pattern, host, &mut Vec::new())
}

/// Legs by definition: incomparable `l1, l2` below `h`, every other element above `h`.
fn brute_has_legs(p: &Poset) -> bool {
    let s = p.size();
    (0..s).any(|l1| {
        (0..s).any(|l2| {
            (0..s).any(|h| {
                l1 != l2
                    && p.incomparable(l1, l2)
                    && p.less(l1, h)
                    && p.less(l2, h)
                    && (0..s).all(|z| z == l1 || z == l2 || z == h || p.less(h, z))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn dual_is_an_involution(p in poset_strategy(7)) {
        let twice = p.dual().dual();
        prop_assert_eq!(twice.below(), p.below());
        prop_assert_eq!(p.dual().covers().len(), p.covers().len());
    }

    #[test]
    fn dot_extension_adds_a_top(p in poset_strategy(6)) {
        let d = p.dot_extension();
        prop_assert_eq!(d.size(), p.size() + 1);
        prop_assert_eq!(d.maximal_elements(), vec![p.size()]);
        prop_assert!(p.is_induced_subposet(&d).is_some());
    }

    #[test]
    fn poset_text_round_trips(p in poset_strategy(7)) {
        let back = Poset::from_text(&p.to_text()).unwrap();
        prop_assert_eq!(back.below(), p.below());
    }

    #[test]
    fn embedding_agrees_with_brute_force(pattern in poset_strategy(4), host in poset_strategy(7)) {
        let found = pattern.is_induced_subposet(&host);
        prop_assert_eq!(found.is_some(), brute_embeds(&pattern, &host));
        if let Some(w) = found {
            prop_assert!(w.is_valid(&pattern, &host));
        }
    }

    #[test]
    fn legs_agree_with_definition(p in poset_strategy(7)) {
        let w = p.has_legs();
        prop_assert_eq!(w.is_some(), brute_has_legs(&p));
        if let Some(w) = w {
            prop_assert!(w.is_valid_for(&p));
        }
    }

    #[test]
    fn family_text_round_trips(f in family_strategy(8)) {
        prop_assert_eq!(SetFamily::from_text(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn complement_swaps_saturation_with_dual(f in family_strategy(3), which in 0usize..17) {
        let all = small_catalog();
        let p = &all[which % all.len()];
        let direct = f.is_induced_saturated(std::slice::from_ref(p)).unwrap().saturated;
        let mirrored = f
            .complement_family()
            .is_induced_saturated(&[p.dual()])
            .unwrap()
            .saturated;
        prop_assert_eq!(direct, mirrored);
        prop_assert_eq!(f.complement_family().complement_family(), f);
    }

    #[test]
    fn parallel_saturation_check_agrees(f in family_strategy(4), which in 0usize..17) {
        let all = small_catalog();
        let p = std::slice::from_ref(&all[which % all.len()]);
        prop_assert_eq!(
            f.is_induced_saturated(p).unwrap(),
            f.is_induced_saturated_parallel(p).unwrap()
        );
    }

    #[test]
    fn greedy_output_is_saturated(n in 1usize..=4, which in 0usize..17, seed in any::<u64>()) {
        let all = small_catalog();
        let p = std::slice::from_ref(&all[which % all.len()]);
        for ordering in [SetOrdering::Lex, SetOrdering::ByCardinality, SetOrdering::Random { seed: Some(seed) }] {
            let cfg = SearchConfig { ordering, ..SearchConfig::default() };
            let g = greedy_saturate(n, p, &SetFamily::empty(n).unwrap(), &cfg).unwrap();
            prop_assert!(g.is_induced_saturated(p).unwrap().saturated);
        }
    }

    #[test]
    fn greedy_keeps_a_free_start(f in family_strategy(4), which in 0usize..17) {
        let all = small_catalog();
        let p = std::slice::from_ref(&all[which % all.len()]);
        let pattern = Pattern::new(&p[0]);
        let free = pattern.find(&SetOrder(&f.bits())).is_none();
        let g = greedy_saturate(f.n(), p, &f, &SearchConfig::default());
        prop_assert_eq!(g.is_ok(), free);
        if let Ok(g) = g {
            prop_assert!(f.members().iter().all(|s| g.contains(s)));
        }
    }

    #[test]
    fn blow_up_preserves_inclusions(f in family_strategy(6), i in 1usize..=6) {
        prop_assume!(i <= f.n());
        let g = f.blow_up(i).unwrap();
        prop_assert_eq!(g.len(), f.len());
        prop_assert_eq!(g.n(), f.n() + 1);
        let bit = 1u64 << (i - 1);
        let lift = |a: u64| if a & bit != 0 { a | 1 << f.n() } else { a };
        for a in f.bits() {
            prop_assert!(g.contains_bits(lift(a)));
            for b in f.bits() {
                prop_assert_eq!(a & !b == 0, lift(a) & !lift(b) == 0);
            }
        }
    }

    #[test]
    fn separating_families_obey_the_size_bound(n in 3usize..=30, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_separating_family(&mut rng, n);
        match digraph_lower_bound_check(&f).unwrap() {
            DigraphBoundVerdict::HypothesisHolds { size, aux, .. } => {
                prop_assert!(size * size >= 4 * (n - 2));
                prop_assert!(aux.has_transitive_cycle().is_none());
                prop_assert_eq!(aux.edge_count(), n);
            }
            DigraphBoundVerdict::Missing(i) => prop_assert!(false, "{} unseparated", i),
        }
    }

    #[test]
    fn contraction_removes_exactly_the_cycle_edges(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_tc_free_with_cycle(&mut rng);
        let cycle = d.find_induced_oriented_cycle().unwrap();
        prop_assert!(d.is_induced_oriented_cycle(&cycle));
        let c = d.contract_cycle(&cycle).unwrap();
        prop_assert_eq!(c.digraph.edge_count() + cycle.len(), d.edge_count());
        prop_assert!(c.digraph.has_transitive_cycle().is_none());
        for v in 0..d.vertex_count() {
            if !cycle.contains(&v) {
                let (to, from) = d.attachment(v, &cycle);
                prop_assert!(to <= 1 && from <= 1);
            }
        }
    }

    #[test]
    fn digraph_text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_tc_free_with_cycle(&mut rng);
        prop_assert_eq!(Digraph::from_text(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn transitive_cycles_found_are_real(n in 3usize..=7, edges in prop::collection::btree_set((0usize..7, 0usize..7), 0..20)) {
        let edges: Vec<(usize, usize)> = edges.into_iter().filter(|&(u, v)| u != v && u < n && v < n).collect();
        let d = Digraph::new(n, &edges).unwrap();
        if let Some(tc) = d.has_transitive_cycle() {
            prop_assert!(tc.is_valid_in(&d));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn legs_maps_hold_on_greedy_families(n in 3usize..=4, seed in any::<u64>(), which in 0usize..3) {
        let p = ["Yinv", "X", "wedge:3"][which];
        let p = posat::catalog_spec(p).unwrap();
        let cfg = SearchConfig { ordering: SetOrdering::Random { seed: Some(seed) }, ..SearchConfig::default() };
        let f = greedy_saturate(n, std::slice::from_ref(&p), &SetFamily::empty(n).unwrap(), &cfg).unwrap();
        let m = legs_witness_map(&f, &p).unwrap();
        prop_assert!(m.is_injective());
        prop_assert!(m.images().iter().all(|s| !s.is_empty()));
    }

    #[test]
    fn exact_results_round_trip(n in 1usize..=3, which in 0usize..17) {
        let all = small_catalog();
        let p = std::slice::from_ref(&all[which % all.len()]);
        let r = posat::exact_sat_star(n, p, &SearchConfig::for_n(n)).unwrap();
        r.verify().unwrap();
        let back = SatStarResult::from_text(&r.to_text()).unwrap();
        prop_assert_eq!(back.upper, r.upper);
        prop_assert_eq!(&back.lower, &r.lower);
        prop_assert_eq!(&back.witness, &r.witness);
        prop_assert!(back.forbidden[0].is_isomorphic(&r.forbidden[0]));
    }

    #[test]
    fn exact_value_is_dual_invariant(n in 1usize..=4, which in 0usize..17) {
        let all = small_catalog();
        let p = &all[which % all.len()];
        let a = posat::exact_sat_star(n, std::slice::from_ref(p), &SearchConfig::for_n(n)).unwrap();
        let b = posat::exact_sat_star(n, &[p.dual()], &SearchConfig::for_n(n)).unwrap();
        prop_assert_eq!(a.upper, b.upper);
    }
}
