//! Backtracking search for induced embeddings of a small pattern poset into a
//! target order.
//!
//! A target is anything that can answer strict-order queries between its
//! elements: an abstract [`Poset`] or a slice of bitmask sets ordered by
//! proper inclusion. Pattern elements are placed in a fixed linear extension;
//! a candidate image must dominate the pattern element's (down, up,
//! incomparable) degree signature and agree with every earlier placement on
//! the three-way relation.

use crate::poset::Poset;

/// An injective map from a pattern poset into a target that preserves and
/// reflects the strict order. `map[x]` is the target index of pattern element `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddingWitness {
    pub map: Vec<usize>,
}

impl EmbeddingWitness {
    /// Re-verifies the witness against the pattern and target.
    pub fn is_valid<T: Order + ?Sized>(&self, pattern: &Poset, target: &T) -> bool {
        let p = pattern.size();
        if self.map.len() != p || self.map.iter().any(|&y| y >= target.len()) {
            return false;
        }
        for a in 0..p {
            for b in 0..p {
                if a == b {
                    continue;
                }
                if self.map[a] == self.map[b] {
                    return false;
                }
                if pattern.less(a, b) != target.less(self.map[a], self.map[b]) {
                    return false;
                }
            }
        }
        true
    }

    /// Composes `self: P -> Q` with `next: Q -> R`.
    pub fn then(&self, next: &EmbeddingWitness) -> EmbeddingWitness {
        EmbeddingWitness {
            map: self.map.iter().map(|&y| next.map[y]).collect(),
        }
    }
}

/// Strict order on `0..len()`.
pub trait Order {
    fn len(&self) -> usize;
    fn less(&self, a: usize, b: usize) -> bool;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Order for Poset {
    fn len(&self) -> usize {
        self.size()
    }
    fn less(&self, a: usize, b: usize) -> bool {
        Poset::less(self, a, b)
    }
}

/// Bitmask sets ordered by proper inclusion.
#[derive(Debug, Clone, Copy)]
pub struct SetOrder<'a>(pub &'a [u64]);

impl Order for SetOrder<'_> {
    fn len(&self) -> usize {
        self.0.len()
    }
    #[inline]
    fn less(&self, a: usize, b: usize) -> bool {
        let (x, y) = (self.0[a], self.0[b]);
        x != y && x & !y == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Less,
    Greater,
    Incomparable,
}

#[inline]
fn rel<T: Order + ?Sized>(t: &T, a: usize, b: usize) -> Rel {
    if t.less(a, b) {
        Rel::Less
    } else if t.less(b, a) {
        Rel::Greater
    } else {
        Rel::Incomparable
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Signature {
    down: usize,
    up: usize,
    inc: usize,
}

impl Signature {
    fn admits(&self, need: &Signature) -> bool {
        self.down >= need.down && self.up >= need.up && self.inc >= need.inc
    }
}

fn signatures<T: Order + ?Sized>(t: &T) -> Vec<Signature> {
    let m = t.len();
    let mut sig = vec![Signature::default(); m];
    for a in 0..m {
        for b in (a + 1)..m {
            match rel(t, a, b) {
                Rel::Less => {
                    sig[a].up += 1;
                    sig[b].down += 1;
                }
                Rel::Greater => {
                    sig[a].down += 1;
                    sig[b].up += 1;
                }
                Rel::Incomparable => {
                    sig[a].inc += 1;
                    sig[b].inc += 1;
                }
            }
        }
    }
    sig
}

/// A pattern poset prepared for repeated embedding searches.
#[derive(Debug, Clone)]
pub struct Pattern<'p> {
    poset: &'p Poset,
    extension: Vec<usize>,
    rel: Vec<Vec<Rel>>,
    sig: Vec<Signature>,
}

/// Target-side data shared by every search against the same target.
struct Prepared<'t, T: ?Sized> {
    target: &'t T,
    sig: Vec<Signature>,
}

struct State {
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'p> Pattern<'p> {
    pub fn new(poset: &'p Poset) -> Self {
        let p = poset.size();
        let rel_matrix: Vec<Vec<Rel>> = (0..p)
            .map(|a| (0..p).map(|b| rel(poset, a, b)).collect())
            .collect();
        Pattern {
            poset,
            extension: poset.linear_extension(),
            rel: rel_matrix,
            sig: signatures(poset),
        }
    }

    pub fn poset(&self) -> &Poset {
        self.poset
    }

    /// First embedding in search order, if any.
    pub fn find<T: Order + ?Sized>(&self, target: &T) -> Option<EmbeddingWitness> {
        self.find_pinned(target, &[])
    }

    /// First embedding honoring every `(pattern element, target index)` pin.
    pub fn find_pinned<T: Order + ?Sized>(
        &self,
        target: &T,
        pins: &[(usize, usize)],
    ) -> Option<EmbeddingWitness> {
        let prepared = Prepared {
            target,
            sig: signatures(target),
        };
        let mut found = None;
        self.run(&prepared, pins, &mut |map| {
            found = Some(EmbeddingWitness { map: map.to_vec() });
            false
        });
        found
    }

    /// First embedding whose image contains target element `required`.
    pub fn find_through<T: Order + ?Sized>(
        &self,
        target: &T,
        required: usize,
    ) -> Option<EmbeddingWitness> {
        let prepared = Prepared {
            target,
            sig: signatures(target),
        };
        for &x in &self.extension {
            let mut found = None;
            self.run(&prepared, &[(x, required)], &mut |map| {
                found = Some(EmbeddingWitness { map: map.to_vec() });
                false
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Whether some embedding has `required` in its image.
    pub fn exists_through<T: Order + ?Sized>(&self, target: &T, required: usize) -> bool {
        self.find_through(target, required).is_some()
    }

    /// Calls `visit` on every embedding honoring `pins` until it returns `false`.
    pub fn for_each_pinned<T: Order + ?Sized>(
        &self,
        target: &T,
        pins: &[(usize, usize)],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        let prepared = Prepared {
            target,
            sig: signatures(target),
        };
        self.run(&prepared, pins, visit);
    }

    fn run<T: Order + ?Sized>(
        &self,
        t: &Prepared<'_, T>,
        pins: &[(usize, usize)],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        let p = self.poset.size();
        let m = t.target.len();
        if p > m {
            return;
        }
        let mut state = State {
            map: vec![usize::MAX; p],
            used: vec![false; m],
        };
        let mut order = Vec::with_capacity(p);
        for &(x, y) in pins {
            if x >= p || y >= m || state.map[x] != usize::MAX || state.used[y] {
                return;
            }
            if !t.sig[y].admits(&self.sig[x]) || !self.consistent(t, &order, &state.map, x, y) {
                return;
            }
            state.map[x] = y;
            state.used[y] = true;
            order.push(x);
        }
        let depth = order.len();
        order.extend(
            self.extension
                .iter()
                .copied()
                .filter(|&x| state.map[x] == usize::MAX),
        );
        self.extend(t, &order, depth, &mut state, visit);
    }

    #[inline]
    fn consistent<T: Order + ?Sized>(
        &self,
        t: &Prepared<'_, T>,
        placed: &[usize],
        map: &[usize],
        x: usize,
        y: usize,
    ) -> bool {
        placed
            .iter()
            .all(|&x2| self.rel[x2][x] == rel(t.target, map[x2], y))
    }

    /// Returns `false` once `visit` asks to stop.
    fn extend<T: Order + ?Sized>(
        &self,
        t: &Prepared<'_, T>,
        order: &[usize],
        depth: usize,
        state: &mut State,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == order.len() {
            return visit(&state.map);
        }
        let x = order[depth];
        for y in 0..t.target.len() {
            if state.used[y] || !t.sig[y].admits(&self.sig[x]) {
                continue;
            }
            if !self.consistent(t, &order[..depth], &state.map, x, y) {
                continue;
            }
            state.map[x] = y;
            state.used[y] = true;
            let go_on = self.extend(t, order, depth + 1, state, visit);
            state.used[y] = false;
            state.map[x] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}
