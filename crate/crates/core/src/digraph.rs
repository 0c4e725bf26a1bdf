//! Directed graphs without loops: the auxiliary digraph of a set family,
//! transitive-cycle detection, induced-cycle contraction, the balanced
//! bipartite orientation, and an exhaustive search for the largest digraph
//! with no transitive cycle.
//!
//! A transitive cycle on `k >= 3` vertices is a directed path `v1 -> ... -> vk`
//! on distinct vertices together with the chord `v1 -> vk`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::SetFamily;

#[derive(Debug, Clone)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// Structural equality; labels are presentation only.
impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.out == other.out
    }
}

impl Eq for Digraph {}

/// Path `vertices[0] -> ... -> vertices[k-1]` plus the chord `vertices[0] -> vertices[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitiveCycle {
    pub vertices: Vec<usize>,
}

impl TransitiveCycle {
    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_valid_in(&self, d: &Digraph) -> bool {
        let v = &self.vertices;
        if v.len() < 3 || v.iter().any(|&x| x >= d.n) {
            return false;
        }
        let distinct: BTreeSet<_> = v.iter().collect();
        distinct.len() == v.len()
            && v.windows(2).all(|w| d.has_edge(w[0], w[1]))
            && d.has_edge(v[0], v[v.len() - 1])
    }
}

/// Result of contracting an induced oriented cycle to a single vertex.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub digraph: Digraph,
    /// New index of each old vertex; cycle vertices map to `contracted`.
    pub vertex_map: Vec<usize>,
    pub contracted: usize,
}

/// `⌊n²/4⌋ + 2`, the edge bound for digraphs without transitive cycles.
pub fn turan_bound(n: usize) -> usize {
    n * n / 4 + 2
}

impl Digraph {
    /// Digraph on `0..n`; rejects loops, repeated ordered pairs and bad indices.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadDigraph(format!(
                    "edge {} -> {} outside {n} vertices",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::BadDigraph(format!("loop at {}", u + 1)));
            }
            out[u].push(v);
        }
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::BadDigraph(format!(
                    "repeated edge {} -> {}",
                    u + 1,
                    w[0] + 1
                )));
            }
        }
        Ok(Digraph {
            n,
            out,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    /// Shortest path from `from` to `to` avoiding the direct edge and never
    /// revisiting `from`.
    fn detour(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[from] = from;
        let mut queue = VecDeque::new();
        for &x in &self.out[from] {
            if x != to {
                parent[x] = from;
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.out[x] {
                if parent[y] != usize::MAX {
                    continue;
                }
                parent[y] = x;
                if y == to {
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
        None
    }

    /// A transitive cycle, found by testing for every edge `u -> w` whether
    /// `w` is reachable from `u` without that edge. Edges are tried in
    /// lexicographic order and the detour is a shortest one.
    pub fn has_transitive_cycle(&self) -> Option<TransitiveCycle> {
        for (u, w) in self.edges() {
            if let Some(path) = self.detour(u, w) {
                return Some(TransitiveCycle { vertices: path });
            }
        }
        None
    }

    /// Whether `cycle` is an oriented cycle whose vertex set induces no other edge.
    pub fn is_induced_oriented_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 2 || cycle.iter().any(|&v| v >= self.n) {
            return false;
        }
        let set: BTreeSet<_> = cycle.iter().copied().collect();
        if set.len() != k {
            return false;
        }
        let around = (0..k).all(|j| self.has_edge(cycle[j], cycle[(j + 1) % k]));
        let induced = cycle
            .iter()
            .map(|&u| self.out[u].iter().filter(|v| set.contains(v)).count())
            .sum::<usize>();
        around && induced == k
    }

    /// A shortest directed cycle, which is always induced. Returns `None`
    /// exactly when the digraph is acyclic.
    pub fn find_induced_oriented_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut closing: Option<usize> = None;
            'bfs: while let Some(x) = queue.pop_front() {
                if best.as_ref().is_some_and(|b| dist[x] + 1 >= b.len()) {
                    break;
                }
                for &y in &self.out[x] {
                    if y == s {
                        closing = Some(x);
                        break 'bfs;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if let Some(mut x) = closing {
                let mut cycle = vec![x];
                while x != s {
                    x = parent[x];
                    cycle.push(x);
                }
                cycle.reverse();
                if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                    best = Some(cycle);
                }
            }
        }
        if let Some(c) = &best {
            debug_assert!(self.is_induced_oriented_cycle(c));
        }
        best
    }

    /// Replaces the induced cycle `cycle` by one new vertex `c` (the last
    /// index). Outside edges keep their endpoints; `x -> y` with `y` on the
    /// cycle becomes `x -> c` and `y -> x` becomes `c -> x`.
    pub fn contract_cycle(&self, cycle: &[usize]) -> Result<Contraction> {
        if !self.is_induced_oriented_cycle(cycle) {
            return Err(Error::NotAnInducedCycle(
                cycle
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ));
        }
        let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
        let kept: Vec<usize> = (0..self.n).filter(|v| !on_cycle.contains(v)).collect();
        let c = kept.len();
        let mut vertex_map = vec![c; self.n];
        for (new, &old) in kept.iter().enumerate() {
            vertex_map[old] = new;
        }
        let mut edges = BTreeSet::new();
        for (u, v) in self.edges() {
            match (on_cycle.contains(&u), on_cycle.contains(&v)) {
                (true, true) => {}
                _ => {
                    edges.insert((vertex_map[u], vertex_map[v]));
                }
            }
        }
        let edges: Vec<_> = edges.into_iter().collect();
        let mut digraph = Digraph::new(c + 1, &edges)?;
        if let Some(labels) = &self.labels {
            let mut l: Vec<String> = kept.iter().map(|&v| labels[v].clone()).collect();
            l.push(format!(
                "c[{}]",
                cycle
                    .iter()
                    .map(|&v| labels[v].as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            digraph = digraph.with_labels(l);
        }
        Ok(Contraction {
            digraph,
            vertex_map,
            contracted: c,
        })
    }

    /// Number of edges from `v` into `cycle` and from `cycle` into `v`.
    pub fn attachment(&self, v: usize, cycle: &[usize]) -> (usize, usize) {
        let to = cycle.iter().filter(|&&y| self.has_edge(v, y)).count();
        let from = cycle.iter().filter(|&&y| self.has_edge(y, v)).count();
        (to, from)
    }

    /// Digraph text format: `vertices=<n>` then `u -> v` per line, 1-based.
    /// Labels, if any, are written as comments.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices={}\n", self.n);
        if let Some(labels) = &self.labels {
            for (v, l) in labels.iter().enumerate() {
                s.push_str(&format!("# {} = {}\n", v + 1, l));
            }
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("{} -> {}\n", u + 1, v + 1));
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Digraph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut labels: Vec<(usize, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((v, label)) = comment.split_once('=') {
                    if let Ok(v) = v.trim().parse::<usize>() {
                        labels.push((v, label.trim().to_string()));
                    }
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let Some(count) = n else {
                n = Some(
                    line.strip_prefix("vertices=")
                        .and_then(|v| v.trim().parse().ok())
                        .ok_or_else(|| Error::parse(line_no, "expected `vertices=<n>`"))?,
                );
                continue;
            };
            let (a, b) = line
                .split_once("->")
                .ok_or_else(|| Error::parse(line_no, format!("expected `u -> v`, got `{line}`")))?;
            let vertex = |s: &str| -> Result<usize> {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad vertex `{}`", s.trim())))?;
                if v == 0 || v > count {
                    return Err(Error::parse(
                        line_no,
                        format!("vertex {v} not in [1, {count}]"),
                    ));
                }
                Ok(v - 1)
            };
            edges.push((vertex(a)?, vertex(b)?));
        }
        let n = n.ok_or_else(|| Error::parse(1, "missing `vertices=<n>` line"))?;
        let d = Digraph::new(n, &edges)?;
        // labels are kept only when every vertex has exactly one, in order
        let complete =
            labels.len() == n && labels.iter().enumerate().all(|(j, (v, _))| *v == j + 1);
        Ok(if complete {
            d.with_labels(labels.into_iter().map(|(_, l)| l).collect())
        } else {
            d
        })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph D {\n");
        for v in 0..self.n {
            match &self.labels {
                Some(l) => s.push_str(&format!(
                    "  {} [label=\"{}\"];\n",
                    v + 1,
                    crate::poset::escape(&l[v])
                )),
                None => s.push_str(&format!("  {};\n", v + 1)),
            }
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {} -> {};\n", u + 1, v + 1));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{}->{}", u + 1, v + 1))
            .collect();
        write!(f, "D[{}]{{{}}}", self.n, edges.join(" "))
    }
}

/// One edge `A -> B` per ground element `i`, where `(A, B)` is the
/// lexicographically first ordered member pair with `A \ B = {i}`. Vertices
/// are member indices, labelled by the member sets.
pub fn auxiliary_digraph(family: &SetFamily) -> Result<Digraph> {
    let mut edges = Vec::with_capacity(family.n());
    for i in 1..=family.n() {
        let pair = family
            .singleton_difference_pairs(i)
            .into_iter()
            .next()
            .ok_or(Error::HypothesisFails(i))?;
        edges.push(pair);
    }
    let labels = family.members().iter().map(|s| s.to_string()).collect();
    Ok(Digraph::new(family.len(), &edges)?.with_labels(labels))
}

/// All edges from the first `⌊n/2⌋` vertices to the remaining `⌈n/2⌉`.
pub fn turan_bipartite(n: usize) -> Digraph {
    let half = n / 2;
    let edges: Vec<_> = (0..half)
        .flat_map(|a| (half..n).map(move |b| (a, b)))
        .collect();
    Digraph::new(n, &edges).expect("bipartite orientation is simple")
}

/// Maximum over all digraphs on `n` vertices with no transitive cycle.
#[derive(Debug, Clone)]
pub struct TuranMax {
    pub n: usize,
    pub max_edges: usize,
    /// Lexicographically smallest sorted edge list among maximizers.
    pub witness: Digraph,
    /// Digraphs without transitive cycles visited by the search.
    pub visited: u64,
}

pub const BRUTE_FORCE_LIMIT: usize = 5;
pub const BRUTE_FORCE_LIMIT_EXTENDED: usize = 6;

/// Adjacency as bitmasks, for `n <= 8`.
#[derive(Clone, Copy)]
struct SmallDigraph {
    out: [u8; 8],
}

impl SmallDigraph {
    fn has_tc(&self, n: usize) -> bool {
        for u in 0..n {
            let mut outs = self.out[u];
            while outs != 0 {
                let w = outs.trailing_zeros() as usize;
                outs &= outs - 1;
                // reachability from u without the edge u -> w, never re-entering u
                let mut seen: u8 = 1 << u;
                let mut frontier = self.out[u] & !(1 << w);
                while frontier != 0 {
                    seen |= frontier;
                    if seen >> w & 1 == 1 {
                        return true;
                    }
                    let mut next = 0u8;
                    let mut f = frontier;
                    while f != 0 {
                        let x = f.trailing_zeros() as usize;
                        f &= f - 1;
                        next |= self.out[x];
                    }
                    frontier = next & !seen;
                }
            }
        }
        false
    }
}

struct BranchAndBound<'a> {
    n: usize,
    pairs: &'a [(usize, usize)],
    global: &'a AtomicUsize,
    best: usize,
    best_edges: Option<Vec<usize>>,
    chosen: Vec<usize>,
    visited: u64,
}

impl BranchAndBound<'_> {
    fn dfs(&mut self, g: &mut SmallDigraph, idx: usize) {
        let count = self.chosen.len();
        let remaining = self.pairs.len() - idx;
        // Within a subtree only strict improvements matter; across subtrees a
        // tie in an earlier subtree must survive, so compare strictly there.
        if self.best_edges.is_some() && count + remaining <= self.best {
            return;
        }
        if count + remaining < self.global.load(Ordering::Relaxed) {
            return;
        }
        if idx == self.pairs.len() {
            if self.best_edges.is_none() || count > self.best {
                self.best = count;
                self.best_edges = Some(self.chosen.clone());
                self.global.fetch_max(count, Ordering::Relaxed);
            }
            return;
        }
        let (u, v) = self.pairs[idx];
        g.out[u] |= 1 << v;
        if !g.has_tc(self.n) {
            self.visited += 1;
            self.chosen.push(idx);
            self.dfs(g, idx + 1);
            self.chosen.pop();
        }
        g.out[u] &= !(1 << v);
        self.dfs(g, idx + 1);
    }
}

/// Exhaustive branch-and-bound over all `2^(n(n-1))` digraphs on `n`
/// vertices, adding edges in lexicographic order and pruning as soon as a
/// transitive cycle appears (the property is closed under deleting edges).
///
/// The first few edge decisions split the search into subtrees that run on
/// the rayon pool; the reported witness does not depend on scheduling.
pub fn max_tc_free_edges_bruteforce(n: usize, allow_extended: bool) -> Result<TuranMax> {
    let limit = if allow_extended {
        BRUTE_FORCE_LIMIT_EXTENDED
    } else {
        BRUTE_FORCE_LIMIT
    };
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    // best edge count and its edge indices, per prefix
    type Best = Option<(usize, Vec<usize>)>;
    let split = pairs.len().min(6);
    let global = AtomicUsize::new(0);
    // include-first order of the prefixes matches the sequential DFS order
    let prefixes: Vec<u32> = (0..1u32 << split)
        .map(|p| !p & ((1 << split) - 1))
        .collect();
    let results: Vec<(Best, u64)> = prefixes
        .par_iter()
        .map(|&prefix| {
            let mut g = SmallDigraph { out: [0; 8] };
            let mut chosen = Vec::new();
            for (bit, &(u, v)) in pairs.iter().take(split).enumerate() {
                if prefix >> (split - 1 - bit) & 1 == 1 {
                    g.out[u] |= 1 << v;
                    chosen.push(bit);
                }
            }
            if g.has_tc(n) {
                return (None, 0);
            }
            let mut bb = BranchAndBound {
                n,
                pairs: &pairs,
                global: &global,
                best: 0,
                best_edges: None,
                chosen,
                visited: 1,
            };
            bb.dfs(&mut g, split);
            (bb.best_edges.map(|e| (bb.best, e)), bb.visited)
        })
        .collect();
    let visited = results.iter().map(|r| r.1).sum();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (r, _) in results {
        if let Some((count, edges)) = r {
            if best.as_ref().is_none_or(|(b, _)| count > *b) {
                best = Some((count, edges));
            }
        }
    }
    let (max_edges, idxs) = best.expect("the empty digraph is always admissible");
    let edges: Vec<_> = idxs.iter().map(|&i| pairs[i]).collect();
    Ok(TuranMax {
        n,
        max_edges,
        witness: Digraph::new(n, &edges)?,
        visited,
    })
}
