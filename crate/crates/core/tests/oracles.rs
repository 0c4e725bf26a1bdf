//! Independent brute-force oracles for the exact search and the digraph
//! enumeration. Nothing here uses the embedding search or branch and bound.

use posat::{
    catalog_spec, catalog_up_to, exact_sat_star, max_tc_free_edges_bruteforce, Poset, SearchConfig,
};

/// All permutations of `0..k`.
fn perms(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(k - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

/// Whether the sets listed are, under inclusion, isomorphic to `p`.
fn is_copy(sets: &[u64], p: &Poset, all_perms: &[Vec<usize>]) -> bool {
    let sub = |a: u64, b: u64| a != b && a & !b == 0;
    all_perms.iter().any(|perm| {
        (0..sets.len()).all(|a| {
            (0..sets.len()).all(|b| a == b || p.less(a, b) == sub(sets[perm[a]], sets[perm[b]]))
        })
    })
}

/// `sat*(n, p)` by dynamic programming over all `2^(2^n)` families: a family
/// is free iff every one-smaller subfamily is free and it is not itself a
/// copy; it is saturated iff it is free and no one-larger family is.
fn oracle_sat_star(n: usize, p: &Poset) -> usize {
    let m = 1usize << n;
    let total = 1usize << m;
    let all_perms = perms(p.size());
    let mut free = vec![true; total];
    for fam in 1..total {
        let size = fam.count_ones() as usize;
        let mut ok = (0..m)
            .filter(|x| fam >> x & 1 == 1)
            .all(|x| free[fam & !(1 << x)]);
        if ok && size == p.size() {
            let sets: Vec<u64> = (0..m)
                .filter(|x| fam >> x & 1 == 1)
                .map(|x| x as u64)
                .collect();
            ok = !is_copy(&sets, p, &all_perms);
        }
        free[fam] = ok;
    }
    (0..total)
        .filter(|&fam| free[fam] && (0..m).all(|x| fam >> x & 1 == 1 || !free[fam | 1 << x]))
        .map(|fam| fam.count_ones() as usize)
        .min()
        .expect("a maximal free family exists")
}

#[test]
fn exact_search_matches_full_enumeration_up_to_three() {
    for p in catalog_up_to(5) {
        for n in 1..=3 {
            let r = exact_sat_star(n, std::slice::from_ref(&p), &SearchConfig::for_n(n)).unwrap();
            assert_eq!(r.upper, oracle_sat_star(n, &p), "{p} at n={n}");
            assert!(r.exact);
        }
    }
}

#[test]
fn exact_search_matches_full_enumeration_at_four() {
    for p in catalog_up_to(5) {
        let r = exact_sat_star(4, std::slice::from_ref(&p), &SearchConfig::for_n(4)).unwrap();
        assert_eq!(r.upper, oracle_sat_star(4, &p), "{p} at n=4");
    }
}

#[test]
fn exact_search_without_symmetry_agrees() {
    for name in ["N", "X", "diamond", "Y"] {
        let p = catalog_spec(name).unwrap();
        let plain = SearchConfig {
            symmetry_reduction: false,
            ..SearchConfig::for_n(4)
        };
        let a = exact_sat_star(4, std::slice::from_ref(&p), &plain).unwrap();
        let b = exact_sat_star(4, std::slice::from_ref(&p), &SearchConfig::for_n(4)).unwrap();
        assert_eq!(a.upper, b.upper, "{name}");
    }
}

/// Some `v1 -> ... -> vk` path with `k >= 3` plus the edge `v1 -> vk`,
/// found by trying every ordered vertex sequence.
fn naive_has_tc(n: usize, adj: &[Vec<bool>]) -> bool {
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let last = *path.last().unwrap();
        if path.len() >= 3 && adj[path[0]][last] {
            return true;
        }
        for v in 0..adj.len() {
            if !used[v] && adj[last][v] {
                used[v] = true;
                path.push(v);
                if extend(adj, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    (0..n).any(|s| {
        let mut used = vec![false; n];
        used[s] = true;
        extend(adj, &mut vec![s], &mut used)
    })
}

fn naive_max_tc_free(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut best = 0;
    for mask in 0u64..(1 << pairs.len()) {
        let edges = mask.count_ones() as usize;
        if edges <= best {
            continue;
        }
        let mut adj = vec![vec![false; n]; n];
        for (j, &(u, v)) in pairs.iter().enumerate() {
            adj[u][v] = mask >> j & 1 == 1;
        }
        if !naive_has_tc(n, &adj) {
            best = edges;
        }
    }
    best
}

#[test]
fn tc_free_maximum_matches_naive_enumeration() {
    for n in 1..=4 {
        assert_eq!(
            max_tc_free_edges_bruteforce(n, false).unwrap().max_edges,
            naive_max_tc_free(n),
            "n={n}"
        );
    }
}

#[test]
fn tc_free_maximum_at_five_matches_naive_enumeration() {
    let fast = max_tc_free_edges_bruteforce(5, false).unwrap();
    assert_eq!(fast.max_edges, naive_max_tc_free(5));
    assert!(fast.witness.has_transitive_cycle().is_none());
    assert_eq!(fast.witness.edge_count(), fast.max_edges);
}
