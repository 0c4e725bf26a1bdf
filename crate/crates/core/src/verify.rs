//! The acceptance suite: every published small-case value, construction and
//! invariant, re-checked end to end with a runtime budget per item.
//!
//! Shared by the `verify-paper` subcommand and the `acceptance` test target.
//! All randomness is seeded, so two runs report identical details.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{
    auxiliary_digraph, max_tc_free_edges_bruteforce, turan_bipartite, turan_bound, Digraph,
};
use crate::error::Result;
use crate::family::{
    block_residue_family, wedge_upper_family, x_upper_family, xell_upper_family, y_upper_family,
    SetFamily,
};
use crate::poset::{catalog, catalog_spec, catalog_up_to, Poset};
use crate::search::{
    boundedness_witness_check, certified_lower_bound, digraph_lower_bound_check,
    double_legs_images, exact_sat_star, greedy_saturate, legs_witness_map, saturated_families,
    DigraphBoundVerdict, LegsMap, SearchConfig, SetOrdering,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SuiteOptions {
    /// Include the `n = 5` digraph enumeration.
    pub slow: bool,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {} ({:.2}s of {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

pub const CRITERIA: usize = 10;

const TITLES: [&str; CRITERIA] = [
    "exact values for Y and X",
    "exact values for the fork",
    "upper-bound constructions are saturated",
    "block/residue family and its auxiliary digraph",
    "singleton-difference size bound on random families",
    "transitive-cycle-free edge maximum",
    "contracting induced cycles",
    "blow-up of families with a missing singleton difference",
    "legs verdicts and legs witness maps",
    "consistency of bounds and dual invariance",
];

const BUDGETS: [u64; CRITERIA] = [300, 300, 120, 1, 60, 600, 60, 120, 60, 600];

/// Outcome of one criterion body: `Ok(detail)` or `Err(first violation)`.
type Check = std::result::Result<String, String>;

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs one criterion by number (1-based).
pub fn run_criterion(id: usize, opts: &SuiteOptions) -> CriterionReport {
    assert!(
        (1..=CRITERIA).contains(&id),
        "criterion {id} does not exist"
    );
    let started = Instant::now();
    let outcome = match id {
        1 => exact_y_and_x(),
        2 => exact_fork(),
        3 => constructions(),
        4 => block_residue(),
        5 => size_bound_property(),
        6 => tc_free_maximum(opts),
        7 => contraction_property(),
        8 => blow_up_property(),
        9 => legs_machinery(),
        _ => consistency_web(),
    };
    let elapsed = started.elapsed();
    let budget = Duration::from_secs(BUDGETS[id - 1]);
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > budget {
        passed = false;
        detail = format!("over budget; {detail}");
    }
    CriterionReport {
        id,
        title: TITLES[id - 1],
        passed,
        detail,
        elapsed,
        budget,
    }
}

/// Runs every criterion in order, reporting each as soon as it finishes.
pub fn run_suite(
    opts: &SuiteOptions,
    mut on_report: impl FnMut(&CriterionReport),
) -> Vec<CriterionReport> {
    (1..=CRITERIA)
        .map(|id| {
            let r = run_criterion(id, opts);
            on_report(&r);
            r
        })
        .collect()
}

fn named(name: &str) -> Poset {
    catalog_spec(name).expect("catalog entry")
}

fn exact_value(n: usize, p: &Poset) -> std::result::Result<usize, String> {
    let r = lib(exact_sat_star(
        n,
        std::slice::from_ref(p),
        &SearchConfig::for_n(n),
    ))?;
    if !r.exact {
        return fail(format!("search for {} at n={n} did not finish", p));
    }
    lib(r.verify())?;
    Ok(r.upper)
}

fn expect_exact(n: usize, p: &Poset, want: usize, budget: Duration) -> Check {
    let started = Instant::now();
    let got = exact_value(n, p)?;
    let took = started.elapsed();
    if got != want {
        return fail(format!("sat*({n}, {p}) = {got}, expected {want}"));
    }
    if took > budget {
        return fail(format!("sat*({n}, {p}) took {took:?}, budget {budget:?}"));
    }
    Ok(format!("sat*({n},{p})={got}"))
}

fn exact_y_and_x() -> Check {
    let yinv = named("Yinv");
    let x = named("X");
    let one_second = Duration::from_secs(1);
    let parts = [
        expect_exact(3, &yinv, 5, one_second)?,
        expect_exact(4, &yinv, 6, Duration::from_secs(300))?,
        expect_exact(3, &x, 8, one_second)?,
    ];
    Ok(parts.join(", "))
}

fn exact_fork() -> Check {
    let fork = named("fork");
    let budget = Duration::from_secs(300);
    let parts = [
        expect_exact(3, &fork, 4, budget)?,
        expect_exact(4, &fork, 5, budget)?,
    ];
    Ok(parts.join(", "))
}

fn expect_saturated(
    f: &SetFamily,
    p: &Poset,
    size: usize,
    what: &str,
) -> std::result::Result<(), String> {
    if f.len() != size {
        return fail(format!("{what}: size {} instead of {size}", f.len()));
    }
    let report = lib(f.is_induced_saturated(std::slice::from_ref(p)))?;
    if !report.saturated {
        let why = report.violation.map(|v| v.to_string()).unwrap_or_default();
        let completed = match lib(greedy_saturate(
            f.n(),
            std::slice::from_ref(p),
            f,
            &SearchConfig::default(),
        )) {
            Ok(g) => format!("; greedy completion has {} members", g.len()),
            Err(_) => String::new(),
        };
        return fail(format!("{what} is not saturated for {p}: {why}{completed}"));
    }
    Ok(())
}

fn constructions() -> Check {
    let (y, x) = (named("Y"), named("X"));
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut record = |r: std::result::Result<(), String>| match r {
        Ok(()) => checked += 1,
        Err(e) => violations.push(e),
    };
    for n in 3..=6 {
        record(
            lib(y_upper_family(n))
                .and_then(|f| expect_saturated(&f, &y, n + 2, &format!("Y family n={n}"))),
        );
        record(
            lib(x_upper_family(n))
                .and_then(|f| expect_saturated(&f, &x, 2 * n + 2, &format!("X family n={n}"))),
        );
    }
    for (n, l) in [(5, 2), (6, 2), (7, 3)] {
        let wedge = lib(catalog("wedge", Some(l + 1)))?;
        let xell = lib(catalog("Xell", Some(l)))?;
        record(lib(wedge_upper_family(n, l)).and_then(|f| {
            expect_saturated(
                &f,
                &wedge,
                n + (1 << (l + 1)) - l - 1,
                &format!("wedge family n={n} l={l}"),
            )
        }));
        record(lib(xell_upper_family(n, l)).and_then(|f| {
            expect_saturated(
                &f,
                &xell,
                2 * n + (1 << (l + 1)) - 2 * l,
                &format!("Xell family n={n} l={l}"),
            )
        }));
    }
    if violations.is_empty() {
        Ok(format!(
            "{checked} families saturated with the stated sizes"
        ))
    } else {
        Err(format!(
            "{checked} families pass; {}",
            violations.join("; ")
        ))
    }
}

fn block_residue() -> Check {
    let mut notes = Vec::new();
    let mut violations = Vec::new();
    for n in [4usize, 9, 16, 25] {
        let r = (n as f64).sqrt() as usize;
        let f = lib(block_residue_family(n))?;
        if f.len() != 2 * r {
            violations.push(format!("n={n}: {} members", f.len()));
        }
        let multiple: Vec<usize> = (1..=n)
            .filter(|&i| f.singleton_difference_pairs(i).len() != 1)
            .collect();
        if !multiple.is_empty() {
            violations.push(format!(
                "n={n}: elements {multiple:?} have {} ordered pairs with that singleton difference, not exactly one",
                f.singleton_difference_pairs(multiple[0]).len()
            ));
        }
        let aux = lib(auxiliary_digraph(&f))?;
        let blocks: BTreeSet<usize> = (0..r)
            .map(|s| {
                f.index_of(&crate::family::Subset::new(((1u64 << r) - 1) << (s * r), n).unwrap())
                    .unwrap()
            })
            .collect();
        let bipartite = aux.edge_count() == n
            && aux
                .edges()
                .iter()
                .all(|(a, b)| blocks.contains(a) && !blocks.contains(b));
        if !bipartite {
            violations.push(format!(
                "n={n}: auxiliary digraph is not the complete bipartite orientation"
            ));
        }
        if aux.has_transitive_cycle().is_some() {
            violations.push(format!("n={n}: auxiliary digraph has a transitive cycle"));
        }
        notes.push(format!(
            "n={n}: {} members, {} edges",
            f.len(),
            aux.edge_count()
        ));
    }
    if violations.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(violations.join("; "))
    }
}

/// A random family over `[n]` in which every `i` is some `A \ B`.
pub fn random_separating_family(rng: &mut impl Rng, n: usize) -> SetFamily {
    let mask = crate::family::ground_mask(n);
    let mut sets: BTreeSet<u64> = (0..rng.gen_range(0..4))
        .map(|_| rng.gen::<u64>() & mask)
        .collect();
    for i in 0..n {
        let bit = 1u64 << i;
        let current: Vec<u64> = sets.iter().copied().collect();
        let separated = current
            .iter()
            .any(|&a| current.iter().any(|&b| a & !b == bit));
        if separated {
            continue;
        }
        let a = (rng.gen::<u64>() & mask) | bit;
        let b = (a & !bit) | (rng.gen::<u64>() & mask & !bit);
        sets.insert(a);
        sets.insert(b);
    }
    SetFamily::new(n, sets).expect("distinct sets over [n]")
}

fn size_bound_property() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let sizes = [9usize, 16, 25];
    let mut smallest = usize::MAX;
    for trial in 0..1000 {
        let n = sizes[trial % sizes.len()];
        let f = random_separating_family(&mut rng, n);
        match lib(digraph_lower_bound_check(&f))? {
            DigraphBoundVerdict::HypothesisHolds { size, aux, .. } => {
                if size * size < 4 * (n - 2) {
                    return fail(format!("trial {trial}: {size} members over n={n}"));
                }
                if aux.has_transitive_cycle().is_some() {
                    return fail(format!(
                        "trial {trial}: auxiliary digraph has a transitive cycle"
                    ));
                }
                smallest = smallest.min(size);
            }
            DigraphBoundVerdict::Missing(i) => {
                return fail(format!("trial {trial}: generator left {i} unseparated"))
            }
        }
    }
    Ok(format!("1000 families, smallest has {smallest} members"))
}

fn tc_free_maximum(opts: &SuiteOptions) -> Check {
    let top = if opts.slow { 5 } else { 4 };
    let mut found = Vec::new();
    for n in 1..=top {
        let m = lib(max_tc_free_edges_bruteforce(n, false))?;
        if m.max_edges > turan_bound(n) || m.witness.has_transitive_cycle().is_some() {
            return fail(format!(
                "n={n}: maximum {} exceeds {}",
                m.max_edges,
                turan_bound(n)
            ));
        }
        found.push(format!("{n}:{}", m.max_edges));
    }
    for n in 1..=20 {
        let d = turan_bipartite(n);
        if d.edge_count() != n * n / 4 || d.has_transitive_cycle().is_some() {
            return fail(format!("bipartite orientation on {n} vertices fails"));
        }
    }
    let skipped = if opts.slow {
        ""
    } else {
        "; n=5 skipped without --slow"
    };
    Ok(format!(
        "maxima {}; bipartite orientations n<=20 ok{skipped}",
        found.join(" ")
    ))
}

/// A random oriented digraph with no transitive cycle that contains a
/// directed cycle of length at least 3.
pub fn random_tc_free_with_cycle(rng: &mut impl Rng) -> Digraph {
    let n = rng.gen_range(3..=10);
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let k = rng.gen_range(3..=n);
    let mut edges: BTreeSet<(usize, usize)> = (0..k)
        .map(|j| (vertices[j], vertices[(j + 1) % k]))
        .collect();
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    candidates.shuffle(rng);
    let density = rng.gen_range(0.0..1.0);
    for (u, v) in candidates {
        if edges.contains(&(u, v)) || edges.contains(&(v, u)) || !rng.gen_bool(density) {
            continue;
        }
        edges.insert((u, v));
        let d = Digraph::new(n, &edges.iter().copied().collect::<Vec<_>>()).expect("simple");
        if d.has_transitive_cycle().is_some() {
            edges.remove(&(u, v));
        }
    }
    Digraph::new(n, &edges.into_iter().collect::<Vec<_>>()).expect("simple")
}

fn contraction_property() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut longest = 0;
    for trial in 0..500 {
        let d = random_tc_free_with_cycle(&mut rng);
        let Some(cycle) = d.find_induced_oriented_cycle() else {
            return fail(format!(
                "trial {trial}: no induced cycle in a cyclic digraph"
            ));
        };
        let c = lib(d.contract_cycle(&cycle))?;
        if c.digraph.edge_count() + cycle.len() != d.edge_count() {
            return fail(format!(
                "trial {trial}: {} edges became {} after contracting {} vertices",
                d.edge_count(),
                c.digraph.edge_count(),
                cycle.len()
            ));
        }
        if c.digraph.has_transitive_cycle().is_some() {
            return fail(format!(
                "trial {trial}: contraction created a transitive cycle"
            ));
        }
        longest = longest.max(cycle.len());
    }
    Ok(format!("500 digraphs, longest contracted cycle {longest}"))
}

fn blow_up_property() -> Check {
    let mut witnesses = 0;
    let mut posets = 0;
    for p in catalog_up_to(5) {
        let forbidden = std::slice::from_ref(&p);
        let mut any = false;
        for f in lib(saturated_families(3, forbidden))? {
            let Some(w) = lib(boundedness_witness_check(&f, forbidden))? else {
                continue;
            };
            any = true;
            witnesses += 1;
            let g = &w.blown_up;
            if g.len() != f.len() || g.n() != 4 {
                return fail(format!(
                    "{p}: blow-up of {} changed size",
                    f.to_text().replace('\n', " ")
                ));
            }
            let report = lib(g.is_induced_saturated(forbidden))?;
            if !report.saturated {
                return fail(format!("{p}: blow-up at {} is not saturated", w.i));
            }
            let bit = 1u64 << (w.i - 1);
            let lift = |a: u64| if a & bit != 0 { a | 1 << 3 } else { a };
            for a in f.bits() {
                if !g.contains_bits(lift(a)) {
                    return fail(format!("{p}: lifted set missing"));
                }
                for b in f.bits() {
                    if (a & !b == 0) != (lift(a) & !lift(b) == 0) {
                        return fail(format!("{p}: inclusion not preserved"));
                    }
                }
            }
        }
        posets += usize::from(any);
    }
    if witnesses == 0 {
        return fail("no saturated family at n=3 has a boundedness witness");
    }
    Ok(format!(
        "{witnesses} families over {posets} posets lifted to n=4"
    ))
}

fn check_legs_map(m: &LegsMap, what: &str) -> std::result::Result<(), String> {
    if !m.is_injective() || m.images().iter().any(|s| s.is_empty()) {
        return fail(format!(
            "{what}: map is not injective or hits the empty set"
        ));
    }
    for e in &m.entries {
        if let Some(c) = &e.copy {
            if c.hip.bits() != c.other_leg.bits() | 1 << (e.i - 1) {
                return fail(format!("{what}: hip is not the other leg plus {}", e.i));
            }
        }
    }
    Ok(())
}

fn minimizers(n: usize, p: &Poset) -> std::result::Result<Vec<SetFamily>, String> {
    let all = lib(saturated_families(n, std::slice::from_ref(p)))?;
    let least = all.iter().map(SetFamily::len).min().unwrap_or(0);
    Ok(all.into_iter().filter(|f| f.len() == least).collect())
}

fn legs_machinery() -> Check {
    let mut with_legs = vec![named("X"), named("Yinv")];
    for l in 1..=4 {
        with_legs.push(lib(catalog("wedge", Some(l)))?);
        let xell = lib(catalog("Xell", Some(l)))?;
        with_legs.push(xell.dual());
        with_legs.push(xell);
    }
    for p in &with_legs {
        if p.has_legs().is_none() {
            return fail(format!("{p} should have legs"));
        }
    }
    for name in ["diamond", "Y", "N"] {
        if named(name).has_legs().is_some() {
            return fail(format!("{name} should not have legs"));
        }
    }
    let mut maps = 0;
    let mut copies = 0;
    // fork minimizers have no legs map: the fork has no legs
    for (n, name) in [(3, "Yinv"), (4, "Yinv"), (3, "X")] {
        let p = named(name);
        for f in minimizers(n, &p)? {
            let m = lib(legs_witness_map(&f, &p))?;
            check_legs_map(&m, &format!("{name} n={n}"))?;
            copies += m.entries.iter().filter(|e| e.copy.is_some()).count();
            maps += 1;
        }
    }
    // beyond the minimizers: every saturated family at n=3, where most
    // singletons are missing and the map has to build copies
    for name in ["Yinv", "X", "wedge:2", "wedge:3"] {
        let p = named(name);
        for f in lib(saturated_families(3, std::slice::from_ref(&p)))? {
            let m = lib(legs_witness_map(&f, &p))?;
            check_legs_map(&m, &format!("{name} n=3"))?;
            copies += m.entries.iter().filter(|e| e.copy.is_some()).count();
            maps += 1;
        }
    }
    let x = named("X");
    for f in minimizers(3, &x)? {
        let d = lib(double_legs_images(&f, &x))?;
        if !d.is_disjoint_and_proper() {
            return fail("X n=3: direct and transported legs images overlap");
        }
    }
    Ok(format!(
        "{} legged posets, 3 unlegged; {maps} maps, {copies} constructed copies",
        with_legs.len()
    ))
}

fn consistency_web() -> Check {
    let mut checked = 0;
    for p in catalog_up_to(5) {
        let forbidden = std::slice::from_ref(&p);
        let dual = p.dual();
        for n in 1..=4 {
            let exact = exact_value(n, &p)?;
            let lower = certified_lower_bound(n, forbidden);
            if lower.value > exact {
                return fail(format!(
                    "{p} n={n}: {} bound {} above exact {exact}",
                    lower.certificate.kind(),
                    lower.value
                ));
            }
            let empty = lib(SetFamily::empty(n))?;
            let orderings = [SetOrdering::Lex, SetOrdering::ByCardinality]
                .into_iter()
                .chain((0..4).map(|s| SetOrdering::Random { seed: Some(s) }));
            for ordering in orderings {
                let cfg = SearchConfig {
                    ordering,
                    ..SearchConfig::for_n(n)
                };
                let g = lib(greedy_saturate(n, forbidden, &empty, &cfg))?;
                if g.len() < exact {
                    return fail(format!(
                        "{p} n={n}: greedy {:?} found {} < {exact}",
                        ordering,
                        g.len()
                    ));
                }
            }
            let dual_exact = exact_value(n, &dual)?;
            if dual_exact != exact {
                return fail(format!(
                    "{p} n={n}: dual gives {dual_exact}, poset gives {exact}"
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (poset, n) pairs consistent"))
}
