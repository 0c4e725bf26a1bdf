//! Families of subsets of `[n]` stored as bitmasks, induced-copy detection,
//! saturation checking, complements, the blow-up map, and the explicit
//! extremal constructions.
//!
//! A subset `S` of `[n]` is a `u64` with bit `i - 1` set iff `i ∈ S`, so the
//! ground set is capped at 64 elements. Families keep their members sorted by
//! ascending bitmask and free of duplicates.

use std::fmt;

use rayon::prelude::*;

use crate::embed::{EmbeddingWitness, Pattern, SetOrder};
use crate::error::{Error, Result};
use crate::poset::Poset;

pub const MAX_GROUND: usize = 64;

#[inline]
pub(crate) fn ground_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn new(bits: u64, n: usize) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        if bits & !ground_mask(n) != 0 {
            return Err(Error::SetOutOfRange {
                set: format_bits(bits),
                n,
            });
        }
        Ok(Subset { bits, n: n as u8 })
    }

    /// From 1-based elements.
    pub fn from_elements(elements: &[usize], n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for &i in elements {
            if i == 0 || i > n.min(MAX_GROUND) {
                return Err(Error::BadIndex { i, n });
            }
            bits |= 1 << (i - 1);
        }
        Subset::new(bits, n)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Subset::new(0, n)
    }

    pub fn full(n: usize) -> Result<Self> {
        Subset::new(ground_mask(n), n)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// 1-based membership.
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.bits >> (i - 1) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> Subset {
        Subset {
            bits: !self.bits & ground_mask(self.n()),
            n: self.n,
        }
    }

    /// 1-based elements in ascending order.
    pub fn elements(&self) -> Vec<usize> {
        (0..64)
            .filter(|b| self.bits >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }
}

pub(crate) fn format_bits(bits: u64) -> String {
    let items: Vec<String> = (0..64)
        .filter(|b| bits >> b & 1 == 1)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_bits(self.bits))
    }
}

/// Parses `{}` or `{1,3,4}` over ground set `[n]`.
pub fn parse_subset(text: &str, n: usize) -> std::result::Result<Subset, String> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| format!("expected `{{...}}`, got `{t}`"))?;
    let mut elements = Vec::new();
    if !inner.trim().is_empty() {
        for part in inner.split(',') {
            let v: usize = part
                .trim()
                .parse()
                .map_err(|_| format!("bad element `{}`", part.trim()))?;
            elements.push(v);
        }
    }
    let mut sorted = elements.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != elements.len() {
        return Err(format!("repeated element in `{t}`"));
    }
    Subset::from_elements(&elements, n).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<Subset>,
}

/// Outcome of an induced saturation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub saturated: bool,
    pub violation: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The family already contains an induced copy of `forbidden[poset]`.
    ContainsCopy { poset: usize, copy: Vec<Subset> },
    /// The smallest set (by bitmask) that can be added without creating a copy.
    Addable(Subset),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ContainsCopy { poset, copy } => {
                let sets: Vec<String> = copy.iter().map(|s| s.to_string()).collect();
                write!(
                    f,
                    "contains copy of forbidden poset #{} at [{}]",
                    poset + 1,
                    sets.join(" ")
                )
            }
            Violation::Addable(s) => write!(f, "{s} can be added freely"),
        }
    }
}

pub(crate) fn check_forbidden(forbidden: &[Poset]) -> Result<()> {
    if forbidden.is_empty() || forbidden.iter().any(|p| p.size() < 2) {
        return Err(Error::DegenerateForbidden);
    }
    Ok(())
}

/// True if some forbidden pattern has an induced copy in `sets` whose image
/// contains `sets[required]`.
pub(crate) fn copy_through(patterns: &[Pattern<'_>], sets: &[u64], required: usize) -> bool {
    patterns
        .iter()
        .any(|p| p.exists_through(&SetOrder(sets), required))
}

/// Inserts `s` into the sorted slice, returning the extended vector and its index.
pub(crate) fn with_member(sorted: &[u64], s: u64) -> (Vec<u64>, usize) {
    let idx = sorted.partition_point(|&x| x < s);
    let mut v = Vec::with_capacity(sorted.len() + 1);
    v.extend_from_slice(&sorted[..idx]);
    v.push(s);
    v.extend_from_slice(&sorted[idx..]);
    (v, idx)
}

impl SetFamily {
    /// Builds a family from bitmasks; members are sorted, duplicates rejected.
    pub fn new(n: usize, bits: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut members = bits
            .into_iter()
            .map(|b| Subset::new(b, n))
            .collect::<Result<Vec<_>>>()?;
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember(w[0].to_string()));
        }
        Ok(SetFamily { n, members })
    }

    /// Like [`SetFamily::new`] but silently drops duplicates.
    pub fn from_bits_dedup(n: usize, bits: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = bits.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        SetFamily::new(n, v)
    }

    pub fn empty(n: usize) -> Result<Self> {
        SetFamily::new(n, [])
    }

    /// All of `2^[n]`.
    pub fn boolean_lattice(n: usize) -> Result<Self> {
        if n > 20 {
            return Err(Error::GroundSetTooLarge(n));
        }
        SetFamily::new(n, 0..(1u64 << n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn bits(&self) -> Vec<u64> {
        self.members.iter().map(|s| s.bits).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &Subset) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.index_of(s).is_some()
    }

    pub fn contains_bits(&self, bits: u64) -> bool {
        self.members.binary_search_by_key(&bits, |s| s.bits).is_ok()
    }

    /// Family with `s` added (unchanged if already present).
    pub fn with(&self, s: Subset) -> Result<SetFamily> {
        if s.n() != self.n {
            return Err(Error::SetOutOfRange {
                set: s.to_string(),
                n: self.n,
            });
        }
        let mut bits = self.bits();
        bits.push(s.bits);
        SetFamily::from_bits_dedup(self.n, bits)
    }

    /// Poset on member indices ordered by proper inclusion, plus the index-to-set map.
    pub fn inclusion_poset(&self) -> (Poset, Vec<Subset>) {
        let m = self.members.len();
        let below = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| a != b && self.members[a].is_subset_of(&self.members[b]))
                    .collect()
            })
            .collect();
        let p = Poset::from_relation(below, None).expect("inclusion is a partial order");
        (p, self.members.clone())
    }

    /// Every member replaced by its complement in `[n]`.
    pub fn complement_family(&self) -> SetFamily {
        let mask = ground_mask(self.n);
        SetFamily::new(self.n, self.members.iter().map(|s| !s.bits & mask))
            .expect("complementation is injective")
    }

    /// Family members forming the image of `w`.
    pub fn witness_sets(&self, w: &EmbeddingWitness) -> Vec<Subset> {
        w.map.iter().map(|&i| self.members[i]).collect()
    }

    /// An induced copy of `p` among the members; if `required` is given the
    /// copy must use it.
    pub fn contains_induced_copy(
        &self,
        p: &Poset,
        required: Option<&Subset>,
    ) -> Result<Option<EmbeddingWitness>> {
        let bits = self.bits();
        let pattern = Pattern::new(p);
        let order = SetOrder(&bits);
        match required {
            None => Ok(pattern.find(&order)),
            Some(s) => {
                let idx = self
                    .index_of(s)
                    .ok_or_else(|| Error::RequiredNotMember(s.to_string()))?;
                Ok(pattern.find_through(&order, idx))
            }
        }
    }

    fn first_copy(&self, patterns: &[Pattern<'_>]) -> Option<Violation> {
        let bits = self.bits();
        patterns.iter().enumerate().find_map(|(k, pat)| {
            pat.find(&SetOrder(&bits)).map(|w| Violation::ContainsCopy {
                poset: k,
                copy: self.witness_sets(&w),
            })
        })
    }

    fn closes_copy(&self, patterns: &[Pattern<'_>], s: u64) -> bool {
        let (sets, idx) = with_member(&self.bits(), s);
        copy_through(patterns, &sets, idx)
    }

    /// Induced saturation for the forbidden posets: no member subfamily is a
    /// copy of any of them, and adding any missing set creates a copy of
    /// one of them.
    pub fn is_induced_saturated(&self, forbidden: &[Poset]) -> Result<SaturationReport> {
        self.saturation_impl(forbidden, false)
    }

    /// As [`SetFamily::is_induced_saturated`], evaluating missing sets on the
    /// rayon pool. The reported addable set is the smallest one either way.
    pub fn is_induced_saturated_parallel(&self, forbidden: &[Poset]) -> Result<SaturationReport> {
        self.saturation_impl(forbidden, true)
    }

    fn saturation_impl(&self, forbidden: &[Poset], parallel: bool) -> Result<SaturationReport> {
        check_forbidden(forbidden)?;
        if self.n > 30 {
            return Err(Error::GroundSetTooLarge(self.n));
        }
        let patterns: Vec<Pattern<'_>> = forbidden.iter().map(Pattern::new).collect();
        if let Some(v) = self.first_copy(&patterns) {
            return Ok(SaturationReport {
                saturated: false,
                violation: Some(v),
            });
        }
        // F is free, so any copy in F ∪ {S} must use S.
        let total = 1u64 << self.n;
        let addable = |s: u64| !self.contains_bits(s) && !self.closes_copy(&patterns, s);
        let free = if parallel {
            (0..total).into_par_iter().find_first(|&s| addable(s))
        } else {
            (0..total).find(|&s| addable(s))
        };
        Ok(match free {
            Some(s) => SaturationReport {
                saturated: false,
                violation: Some(Violation::Addable(Subset::new(s, self.n)?)),
            },
            None => SaturationReport {
                saturated: true,
                violation: None,
            },
        })
    }

    /// Ordered member pairs `(A, B)` (as indices) with `A \ B = {i}`, lexicographic.
    pub fn singleton_difference_pairs(&self, i: usize) -> Vec<(usize, usize)> {
        if i == 0 || i > self.n {
            return Vec::new();
        }
        let target = 1u64 << (i - 1);
        let m = self.members.len();
        let mut out = Vec::new();
        for a in 0..m {
            if self.members[a].bits & target == 0 {
                continue;
            }
            for b in 0..m {
                if self.members[a].bits & !self.members[b].bits == target {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Smallest `i` such that no ordered member pair has `A \ B = {i}`.
    pub fn missing_singleton_difference(&self) -> Option<usize> {
        (1..=self.n).find(|&i| self.singleton_difference_pairs(i).is_empty())
    }

    /// Lifts the family to `[n + 1]`, making `n + 1` a copy of ground element `i`.
    pub fn blow_up(&self, i: usize) -> Result<SetFamily> {
        if i == 0 || i > self.n {
            return Err(Error::BadIndex { i, n: self.n });
        }
        if self.n + 1 > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(self.n + 1));
        }
        let n = self.n;
        SetFamily::new(
            n + 1,
            self.members.iter().map(|s| {
                if s.bits >> (i - 1) & 1 == 1 {
                    s.bits | 1 << n
                } else {
                    s.bits
                }
            }),
        )
    }

    /// Family text format: `n=<int>` then one member per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for m in &self.members {
            s.push_str(&m.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<SetFamily> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        let (first_no, first) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "empty family file"))?;
        let n: usize = first
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::parse(first_no + 1, "expected `n=<int>`"))?;
        if n > MAX_GROUND {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bits = Vec::new();
        for (no, line) in lines {
            let s = parse_subset(line, n).map_err(|msg| Error::parse(no + 1, msg))?;
            bits.push(s.bits);
        }
        SetFamily::new(n, bits)
    }

    /// Graphviz rendering of the inclusion Hasse diagram with set labels.
    pub fn to_dot(&self) -> String {
        let (p, sets) = self.inclusion_poset();
        let mut s = format!(
            "digraph family {{\n  rankdir=BT;\n  label=\"n={}\";\n",
            self.n
        );
        for (k, set) in sets.iter().enumerate() {
            s.push_str(&format!("  {} [label=\"{}\"];\n", k + 1, set));
        }
        for (a, b) in p.covers() {
            s.push_str(&format!("  {} -> {};\n", a + 1, b + 1));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(|s| s.to_string()).collect();
        write!(f, "[n={}] {{{}}}", self.n, items.join(", "))
    }
}

/// Integer square root when `n` is a perfect square.
fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// The family of `2√n` sets in which every ground element is realized by
/// an ordered member pair with a singleton difference (exactly one pair
/// once `n >= 9`).
///
/// With `r = √n`, `A_s` is the block `{sr + 1, ..., sr + r}` for `0 <= s < r`
/// and `B_t` is `[n]` minus the residue class `{t, t + r, ..., t + (r - 1)r}`
/// for `1 <= t <= r`; then `A_s \ B_t = {sr + t}`.
pub fn block_residue_family(n: usize) -> Result<SetFamily> {
    let r = match exact_sqrt(n) {
        Some(r) if (4..=MAX_GROUND).contains(&n) => r,
        _ => return Err(Error::NotPerfectSquare(n)),
    };
    let mask = ground_mask(n);
    let blocks = (0..r).map(|s| ((1u64 << r) - 1) << (s * r));
    let classes = (1..=r).map(|t| {
        let class = (0..r).fold(0u64, |acc, j| acc | 1 << (t - 1 + j * r));
        mask & !class
    });
    let family = SetFamily::new(n, blocks.chain(classes).collect::<Vec<_>>())?;
    debug_assert_eq!(family.len(), 2 * r);
    Ok(family)
}

/// `{F : |F| >= n - 1 or F = ∅}`, of size `n + 2`.
pub fn y_upper_family(n: usize) -> Result<SetFamily> {
    layered(n, |k| k + 1 >= n || k == 0, n + 2)
}

/// `{F : |F| >= n - 1 or |F| <= 1}`, of size `2n + 2`.
pub fn x_upper_family(n: usize) -> Result<SetFamily> {
    layered(n, |k| k + 1 >= n || k <= 1, 2 * n + 2)
}

fn layered(n: usize, keep: impl Fn(usize) -> bool, expected: usize) -> Result<SetFamily> {
    if n < 3 {
        return Err(Error::BadN(n));
    }
    if n > 20 {
        return Err(Error::GroundSetTooLarge(n));
    }
    let family = SetFamily::new(
        n,
        (0..(1u64 << n)).filter(|s| keep(s.count_ones() as usize)),
    )?;
    assert_eq!(family.len(), expected, "layer sizes");
    Ok(family)
}

fn check_wedge_params(n: usize, l: usize) -> Result<()> {
    if l < 2 || n <= l + 1 {
        return Err(Error::BadParams { n, l });
    }
    if n > MAX_GROUND {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

/// `∅`, every singleton, every subset of `[l]`, and every proper superset of
/// `[n] \ [l]`; size `n + 2^(l+1) - l - 1`.
pub fn wedge_upper_family(n: usize, l: usize) -> Result<SetFamily> {
    check_wedge_params(n, l)?;
    let low = (1u64 << l) - 1;
    let high = ground_mask(n) & !low;
    let mut bits = vec![0u64];
    bits.extend((0..n).map(|i| 1u64 << i));
    bits.extend(0..=low);
    bits.extend((1..=low).map(|t| high | t));
    let family = SetFamily::from_bits_dedup(n, bits)?;
    assert_eq!(
        family.len(),
        n + (1 << (l + 1)) - l - 1,
        "wedge family size"
    );
    Ok(family)
}

/// The wedge family together with its complement family; size
/// `2n + 2^(l+1) - 2l`.
pub fn xell_upper_family(n: usize, l: usize) -> Result<SetFamily> {
    let f = wedge_upper_family(n, l)?;
    let bits = f.bits().into_iter().chain(f.complement_family().bits());
    let family = SetFamily::from_bits_dedup(n, bits)?;
    assert_eq!(
        family.len(),
        2 * n + (1 << (l + 1)) - 2 * l,
        "x family size"
    );
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::catalog;

    fn fam(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(
            n,
            sets.iter()
                .map(|s| Subset::from_elements(s, n).unwrap().bits())
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn subset_basics() {
        let s = Subset::from_elements(&[1, 3, 4], 5).unwrap();
        assert_eq!(s.to_string(), "{1,3,4}");
        assert_eq!(s.bits(), 0b1101);
        assert!(s.contains(3) && !s.contains(2) && !s.contains(0));
        assert_eq!(s.complement().to_string(), "{2,5}");
        assert!(Subset::new(0b100, 2).is_err());
        assert!(Subset::from_elements(&[0], 3).is_err());
        assert_eq!(parse_subset("{ }", 3).unwrap().bits(), 0);
        assert!(parse_subset("{1,1}", 3).is_err());
        assert!(parse_subset("1,2", 3).is_err());
    }

    #[test]
    fn new_rejects_duplicates() {
        assert!(matches!(
            SetFamily::new(2, [1, 1]),
            Err(Error::DuplicateMember(_))
        ));
        assert_eq!(SetFamily::new(2, [3, 0, 1]).unwrap().bits(), vec![0, 1, 3]);
    }

    #[test]
    fn inclusion_poset_examples() {
        let b2 = SetFamily::boolean_lattice(2).unwrap();
        assert!(b2
            .inclusion_poset()
            .0
            .is_isomorphic(&catalog("diamond", None).unwrap()));
        let singles = fam(2, &[&[1], &[2]]);
        assert!(singles
            .inclusion_poset()
            .0
            .is_isomorphic(&Poset::antichain(2)));
        let q = x_upper_family(3).unwrap();
        let (p, sets) = q.inclusion_poset();
        assert_eq!(p.size(), 8);
        assert_eq!(sets.len(), 8);
        // 3^3 - 2^3 = 19 strict inclusions in B_3
        let strict = (0..8)
            .flat_map(|a| (0..8).map(move |b| (a, b)))
            .filter(|&(a, b)| p.less(a, b))
            .count();
        assert_eq!(strict, 19);
    }

    #[test]
    fn complement_examples() {
        let f = fam(3, &[&[]]);
        assert_eq!(f.complement_family(), fam(3, &[&[1, 2, 3]]));
        let star = block_residue_family(9).unwrap();
        let c = star.complement_family();
        assert_eq!(c.len(), 6);
        assert_eq!(c.complement_family(), star);
        // complements of the residue-class sets are the classes themselves
        assert!(c.contains(&Subset::from_elements(&[2, 5, 8], 9).unwrap()));
        assert!(c.contains(&Subset::from_elements(&[1, 2, 3, 7, 8, 9], 9).unwrap()));
    }

    #[test]
    fn contains_induced_copy_examples() {
        let b2 = SetFamily::boolean_lattice(2).unwrap();
        let diamond = catalog("diamond", None).unwrap();
        assert!(b2.contains_induced_copy(&diamond, None).unwrap().is_some());
        let py = y_upper_family(4).unwrap();
        assert!(py
            .contains_induced_copy(&catalog("Y", None).unwrap(), None)
            .unwrap()
            .is_none());
        let f = fam(2, &[&[], &[1], &[2]]);
        let fork = catalog("fork", None).unwrap();
        let w = f.contains_induced_copy(&fork, None).unwrap().unwrap();
        assert_eq!(f.witness_sets(&w)[0].bits(), 0);
        let outsider = Subset::from_elements(&[1, 2], 2).unwrap();
        assert!(matches!(
            f.contains_induced_copy(&fork, Some(&outsider)),
            Err(Error::RequiredNotMember(_))
        ));
        let one = Subset::from_elements(&[1], 2).unwrap();
        assert!(f
            .contains_induced_copy(&fork, Some(&one))
            .unwrap()
            .is_some());
    }

    #[test]
    fn saturation_examples() {
        let x = catalog("X", None).unwrap();
        let q = x_upper_family(3).unwrap();
        assert!(q.is_induced_saturated(&[x]).unwrap().saturated);

        let chain = fam(3, &[&[], &[1], &[1, 2], &[1, 2, 3]]);
        assert!(
            chain
                .is_induced_saturated(&[Poset::antichain(2)])
                .unwrap()
                .saturated
        );

        let b2 = SetFamily::boolean_lattice(2).unwrap();
        let r = b2
            .is_induced_saturated(&[catalog("diamond", None).unwrap()])
            .unwrap();
        assert!(!r.saturated);
        assert!(matches!(
            r.violation,
            Some(Violation::ContainsCopy { poset: 0, .. })
        ));

        let empty = SetFamily::empty(2).unwrap();
        let r = empty
            .is_induced_saturated(&[catalog("diamond", None).unwrap()])
            .unwrap();
        assert_eq!(
            r.violation,
            Some(Violation::Addable(Subset::new(0, 2).unwrap()))
        );

        assert_eq!(
            empty.is_induced_saturated(&[]),
            Err(Error::DegenerateForbidden)
        );
        assert_eq!(
            empty.is_induced_saturated(&[Poset::chain(1)]),
            Err(Error::DegenerateForbidden)
        );
    }

    #[test]
    fn parallel_saturation_agrees() {
        let diamond = catalog("diamond", None).unwrap();
        for f in [
            SetFamily::empty(3).unwrap(),
            fam(3, &[&[], &[1], &[2], &[3]]),
            y_upper_family(4).unwrap(),
        ] {
            assert_eq!(
                f.is_induced_saturated(std::slice::from_ref(&diamond))
                    .unwrap(),
                f.is_induced_saturated_parallel(std::slice::from_ref(&diamond))
                    .unwrap()
            );
        }
    }

    #[test]
    fn blow_up_examples() {
        let f = fam(1, &[&[], &[1]]);
        assert_eq!(f.blow_up(1).unwrap(), fam(2, &[&[], &[1, 2]]));
        assert_eq!(f.blow_up(2), Err(Error::BadIndex { i: 2, n: 1 }));
        assert_eq!(f.blow_up(0), Err(Error::BadIndex { i: 0, n: 1 }));

        let g = fam(3, &[&[], &[1, 2], &[1, 2, 3], &[3]]);
        assert_eq!(g.missing_singleton_difference(), Some(1));
        let h = g.blow_up(1).unwrap();
        assert_eq!(h.len(), g.len());
        assert!(h.singleton_difference_pairs(1).is_empty());
        assert!(h.singleton_difference_pairs(4).is_empty());
    }

    #[test]
    fn block_residue_examples() {
        let f9 = block_residue_family(9).unwrap();
        assert_eq!(f9.len(), 6);
        let a1 = Subset::from_elements(&[4, 5, 6], 9).unwrap();
        let b2 = Subset::from_elements(&[1, 3, 4, 6, 7, 9], 9).unwrap();
        assert!(f9.contains(&a1) && f9.contains(&b2));
        assert_eq!(
            a1.bits() & !b2.bits(),
            Subset::from_elements(&[5], 9).unwrap().bits()
        );
        assert_eq!(block_residue_family(4).unwrap().len(), 4);
        for n in [9, 16, 25, 36, 49, 64] {
            let f = block_residue_family(n).unwrap();
            for i in 1..=n {
                assert_eq!(f.singleton_difference_pairs(i).len(), 1, "n={n} i={i}");
            }
        }
        // at n = 4 the classes are blocks too, so each i is realized twice
        let f4 = block_residue_family(4).unwrap();
        assert!((1..=4).all(|i| f4.singleton_difference_pairs(i).len() == 2));
        assert_eq!(block_residue_family(10), Err(Error::NotPerfectSquare(10)));
        assert_eq!(block_residue_family(1), Err(Error::NotPerfectSquare(1)));
    }

    #[test]
    fn layered_sizes() {
        assert_eq!(y_upper_family(3).unwrap().len(), 5);
        assert_eq!(x_upper_family(3).unwrap().len(), 8);
        assert_eq!(y_upper_family(4).unwrap().len(), 6);
        assert_eq!(y_upper_family(2), Err(Error::BadN(2)));
    }

    #[test]
    fn wedge_sizes_and_saturation() {
        assert_eq!(wedge_upper_family(6, 2).unwrap().len(), 11);
        assert_eq!(xell_upper_family(6, 2).unwrap().len(), 16);
        assert_eq!(
            wedge_upper_family(3, 2),
            Err(Error::BadParams { n: 3, l: 2 })
        );
        assert_eq!(
            wedge_upper_family(6, 1),
            Err(Error::BadParams { n: 6, l: 1 })
        );
        let w3 = catalog("wedge", Some(3)).unwrap();
        assert!(
            wedge_upper_family(6, 2)
                .unwrap()
                .is_induced_saturated(&[w3])
                .unwrap()
                .saturated
        );
    }

    #[test]
    fn text_format_is_bit_exact() {
        let text = "n=3\n{}\n{1}\n{2}\n{1,2,3}\n";
        let f = SetFamily::from_text(text).unwrap();
        assert_eq!(f.to_text(), text);
        let messy = "# comment\nn=3\n{1, 2,3}\n\n{}\n";
        assert_eq!(
            SetFamily::from_text(messy).unwrap().to_text(),
            "n=3\n{}\n{1,2,3}\n"
        );
        assert!(matches!(
            SetFamily::from_text("n=2\n{3}\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            SetFamily::from_text("{1}\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(SetFamily::from_text("n=2\n{1}\n{1}\n").is_err());
    }
}
