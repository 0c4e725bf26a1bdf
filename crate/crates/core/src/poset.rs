//! Finite strict partial orders, the named catalog, and order transforms.
//!
//! Posets are stored abstractly as a relation matrix on `0..size`; two
//! posets are interchangeable whenever they are isomorphic. A concrete set
//! representation is recovered from a family with
//! [`SetFamily::inclusion_poset`](crate::family::SetFamily::inclusion_poset).
//!
//! Element indices are 0-based in the API. The text format and DOT export
//! use 1-based labels.

use std::fmt;

use crate::embed::{EmbeddingWitness, Pattern};
use crate::error::{Error, Result};

/// Largest parameter accepted by the parameterized catalog entries.
pub const MAX_CATALOG_PARAM: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    below: Vec<Vec<bool>>,
    name: Option<String>,
}

/// Two incomparable legs below a hip that lies below every other element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LegsWitness {
    pub leg1: usize,
    pub leg2: usize,
    pub hip: usize,
}

impl LegsWitness {
    /// Checks the three defining conditions directly on the relation matrix.
    pub fn is_valid_for(&self, p: &Poset) -> bool {
        let LegsWitness { leg1, leg2, hip } = *self;
        let n = p.size();
        if leg1 >= n || leg2 >= n || hip >= n {
            return false;
        }
        if leg1 == leg2 || leg1 == hip || leg2 == hip {
            return false;
        }
        if !p.incomparable(leg1, leg2) || !p.less(leg1, hip) || !p.less(leg2, hip) {
            return false;
        }
        (0..n)
            .filter(|&a| a != leg1 && a != leg2 && a != hip)
            .all(|a| p.less(hip, a))
    }
}

impl Poset {
    /// Builds a poset from a full strict-order matrix, checking the order axioms.
    pub fn from_relation(below: Vec<Vec<bool>>, name: Option<String>) -> Result<Self> {
        let size = below.len();
        if below.iter().any(|row| row.len() != size) {
            return Err(Error::NotAnOrder("relation matrix is not square".into()));
        }
        let p = Poset { size, below, name };
        p.check_axioms()?;
        Ok(p)
    }

    /// Transitive closure of `covers`, given as 0-based `(lower, upper)` pairs.
    pub fn from_cover_relations(p: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut below = vec![vec![false; p]; p];
        for &(a, b) in covers {
            for index in [a, b] {
                if index >= p {
                    return Err(Error::IndexOutOfRange { index, size: p });
                }
            }
            below[a][b] = true;
        }
        for k in 0..p {
            let through = below[k].clone();
            for row in below.iter_mut().filter(|row| row[k]) {
                for (cell, &t) in row.iter_mut().zip(&through) {
                    *cell |= t;
                }
            }
        }
        if let Some(a) = (0..p).find(|&a| below[a][a]) {
            return Err(Error::CycleInCovers(a));
        }
        Ok(Poset {
            size: p,
            below,
            name: None,
        })
    }

    pub fn chain(k: usize) -> Self {
        let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_cover_relations(k, &covers)
            .expect("chain covers are acyclic")
            .named(format!("chain:{k}"))
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_cover_relations(k, &[])
            .expect("empty relation")
            .named(format!("antichain:{k}"))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn below(&self) -> &[Vec<bool>] {
        &self.below
    }

    /// `a < b` in the strict order.
    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.below[a][b] || self.below[b][a]
    }

    pub fn incomparable(&self, a: usize, b: usize) -> bool {
        a != b && !self.comparable(a, b)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn unnamed(mut self) -> Self {
        self.name = None;
        self
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            if self.below[a][a] {
                return Err(Error::NotAnOrder(format!("element {} below itself", a + 1)));
            }
            for b in 0..n {
                if self.below[a][b] && self.below[b][a] {
                    return Err(Error::NotAnOrder(format!(
                        "elements {} and {} below each other",
                        a + 1,
                        b + 1
                    )));
                }
                if !self.below[a][b] {
                    continue;
                }
                for c in 0..n {
                    if self.below[b][c] && !self.below[a][c] {
                        return Err(Error::NotAnOrder(format!(
                            "{} < {} < {} but not {} < {}",
                            a + 1,
                            b + 1,
                            c + 1,
                            a + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.below[a][b] && !(0..n).any(|c| self.below[a][c] && self.below[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Elements sorted by number of predecessors; a linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&a| ((0..self.size).filter(|&b| self.below[b][a]).count(), a));
        order
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| !(0..self.size).any(|b| self.below[b][a]))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&a| !(0..self.size).any(|b| self.below[a][b]))
            .collect()
    }

    /// Order-reversed poset.
    pub fn dual(&self) -> Poset {
        let n = self.size;
        let below = (0..n)
            .map(|a| (0..n).map(|b| self.below[b][a]).collect())
            .collect();
        Poset {
            size: n,
            below,
            name: self.name.as_ref().map(|s| format!("dual({s})")),
        }
    }

    /// Adds one new element strictly above every existing element.
    pub fn dot_extension(&self) -> Poset {
        let n = self.size;
        let mut below: Vec<Vec<bool>> = self
            .below
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(true);
                r
            })
            .collect();
        below.push(vec![false; n + 1]);
        Poset {
            size: n + 1,
            below,
            name: self.name.as_ref().map(|s| format!("dot({s})")),
        }
    }

    /// Lexicographically smallest `(leg1, leg2, hip)` with `leg1 < leg2`, if any.
    pub fn has_legs(&self) -> Option<LegsWitness> {
        let n = self.size;
        for leg1 in 0..n {
            for leg2 in (leg1 + 1)..n {
                if !self.incomparable(leg1, leg2) {
                    continue;
                }
                for hip in 0..n {
                    let w = LegsWitness { leg1, leg2, hip };
                    if w.is_valid_for(self) {
                        return Some(w);
                    }
                }
            }
        }
        None
    }

    /// An induced embedding of `self` into `host`, if one exists.
    pub fn is_induced_subposet(&self, host: &Poset) -> Option<EmbeddingWitness> {
        Pattern::new(self).find(host)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.size == other.size && self.is_induced_subposet(other).is_some()
    }

    /// Serializes to the poset text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("elements={}\n", self.size);
        if let Some(name) = &self.name {
            s.push_str(&format!("name={name}\n"));
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("{} < {}\n", a + 1, b + 1));
        }
        s
    }

    /// Parses the poset text format.
    ///
    /// Cover lines define the order and any `name=` line becomes a label. A
    /// file with a `name=` line and no cover lines is resolved through the
    /// catalog when the name is a catalog entry.
    pub fn from_text(text: &str) -> Result<Poset> {
        let mut size: Option<usize> = None;
        let mut name: Option<String> = None;
        let mut covers = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if size.is_none() {
                let v = line
                    .strip_prefix("elements=")
                    .ok_or_else(|| Error::parse(line_no, "expected `elements=<p>`"))?;
                size = Some(
                    v.trim()
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("bad element count `{v}`")))?,
                );
                continue;
            }
            if let Some(v) = line.strip_prefix("name=") {
                if name.is_some() {
                    return Err(Error::parse(line_no, "duplicate name line"));
                }
                name = Some(v.trim().to_string());
                continue;
            }
            let (a, b) = line.split_once('<').ok_or_else(|| {
                Error::parse(line_no, format!("expected `<a> < <b>`, got `{line}`"))
            })?;
            let parse_elem = |s: &str| -> Result<usize> {
                let v: usize = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad element `{}`", s.trim())))?;
                if v == 0 {
                    return Err(Error::parse(line_no, "elements are 1-based"));
                }
                Ok(v - 1)
            };
            covers.push((parse_elem(a)?, parse_elem(b)?));
        }
        let size = size.ok_or_else(|| Error::parse(1, "missing `elements=<p>` line"))?;
        if covers.is_empty() {
            if let Some(spec) = &name {
                if let Ok(p) = catalog_spec(spec) {
                    if p.size() != size {
                        return Err(Error::parse(
                            1,
                            format!(
                                "catalog poset `{spec}` has {} elements, file says {size}",
                                p.size()
                            ),
                        ));
                    }
                    return Ok(p);
                }
            }
        }
        let p = Poset::from_cover_relations(size, &covers)?;
        Ok(match name {
            Some(n) => p.named(n),
            None => p,
        })
    }

    /// Graphviz rendering of the Hasse diagram, edges pointing upward.
    pub fn to_dot(&self) -> String {
        let title = self.name.as_deref().unwrap_or("poset");
        let mut s = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(title));
        for a in 0..self.size {
            s.push_str(&format!("  {};\n", a + 1));
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("  {} -> {};\n", a + 1, b + 1));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "poset[{}]", self.size),
        }
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Catalog names understood by [`catalog`].
pub const CATALOG_NAMES: &[&str] = &[
    "chain",
    "antichain",
    "fork",
    "diamond",
    "N",
    "Y",
    "Yinv",
    "X",
    "wedge",
    "vee",
    "Xell",
];

fn needs_param(name: &str) -> bool {
    matches!(name, "chain" | "antichain" | "wedge" | "vee" | "Xell")
}

fn canonical_name(name: &str) -> Option<&'static str> {
    let found = CATALOG_NAMES.iter().find(|c| **c == name).copied();
    found.or(match name.to_ascii_lowercase().as_str() {
        "chain" => Some("chain"),
        "antichain" => Some("antichain"),
        "fork" | "v" => Some("fork"),
        "diamond" | "b2" => Some("diamond"),
        "n" => Some("N"),
        "y" => Some("Y"),
        "yinv" | "y-inverse" => Some("Yinv"),
        "x" => Some("X"),
        "wedge" => Some("wedge"),
        "vee" => Some("vee"),
        "xell" => Some("Xell"),
        _ => None,
    })
}

/// Named posets.
///
/// * `chain(k)`, `antichain(k)`
/// * `fork`: one minimum below two incomparable maxima
/// * `diamond`, `N`, `Y`, `Yinv`, `X`
/// * `wedge(l)`: legs below a chain `H1 < ... < Hl`
/// * `vee(l)`: the dual of `wedge(l)`
/// * `Xell(l)`: legs below a copy of `vee(l)`
pub fn catalog(name: &str, param: Option<usize>) -> Result<Poset> {
    let canon = canonical_name(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let bad = |reason: &str| Error::BadParam {
        name: canon.to_string(),
        reason: reason.to_string(),
    };
    let param = match (needs_param(canon), param) {
        (true, None) => return Err(bad("parameter required")),
        (false, Some(_)) => return Err(bad("takes no parameter")),
        (true, Some(0)) => return Err(bad("parameter must be >= 1")),
        (true, Some(l)) if l > MAX_CATALOG_PARAM => {
            return Err(bad(&format!("parameter must be <= {MAX_CATALOG_PARAM}")))
        }
        (_, p) => p,
    };
    let label = match param {
        Some(l) => format!("{canon}:{l}"),
        None => canon.to_string(),
    };
    let build = |p: usize, covers: &[(usize, usize)]| {
        Poset::from_cover_relations(p, covers)
            .expect("catalog covers are acyclic")
            .named(label.clone())
    };
    let poset = match canon {
        "chain" => Poset::chain(param.unwrap_or(1)),
        "antichain" => Poset::antichain(param.unwrap_or(1)),
        "fork" => build(3, &[(0, 1), (0, 2)]),
        "diamond" => build(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
        "N" => build(4, &[(0, 2), (1, 2), (1, 3)]),
        "Y" => build(4, &[(0, 1), (1, 2), (1, 3)]),
        "Yinv" => build(4, &[(0, 2), (1, 2), (2, 3)]),
        "X" => build(5, &[(0, 2), (1, 2), (2, 3), (2, 4)]),
        "wedge" => {
            let l = param.unwrap_or(1);
            let mut covers = vec![(0, 2), (1, 2)];
            covers.extend((2..l + 1).map(|h| (h, h + 1)));
            build(l + 2, &covers)
        }
        "vee" => {
            let l = param.unwrap_or(1);
            let mut covers: Vec<_> = (1..l).map(|h| (h - 1, h)).collect();
            covers.extend([(l - 1, l), (l - 1, l + 1)]);
            build(l + 2, &covers)
        }
        "Xell" => {
            let l = param.unwrap_or(1);
            let mut covers = vec![(0, 2), (1, 2)];
            covers.extend((2..l + 1).map(|h| (h, h + 1)));
            covers.extend([(l + 1, l + 2), (l + 1, l + 3)]);
            build(l + 4, &covers)
        }
        _ => unreachable!("canonical names are exhaustive"),
    };
    Ok(poset)
}

/// Parses `name` or `name:param`, optionally prefixed by `name=`.
pub fn catalog_spec(spec: &str) -> Result<Poset> {
    let spec = spec.trim();
    let spec = spec.strip_prefix("name=").unwrap_or(spec);
    match spec.split_once(':') {
        Some((name, param)) => {
            let l: usize = param.trim().parse().map_err(|_| Error::BadParam {
                name: name.to_string(),
                reason: format!("`{param}` is not a non-negative integer"),
            })?;
            catalog(name.trim(), Some(l))
        }
        None => catalog(spec, None),
    }
}

/// Every catalog poset with between 2 and `max_size` elements, deduplicated
/// up to isomorphism (first name wins).
pub fn catalog_up_to(max_size: usize) -> Vec<Poset> {
    let mut candidates = Vec::new();
    for k in 2..=max_size {
        candidates.push(Poset::chain(k));
        candidates.push(Poset::antichain(k));
    }
    for name in ["fork", "diamond", "N", "Y", "Yinv", "X"] {
        candidates.push(catalog(name, None).expect("fixed catalog entry"));
    }
    for l in 1..=max_size {
        for name in ["wedge", "vee", "Xell"] {
            candidates.push(catalog(name, Some(l)).expect("valid parameter"));
        }
    }
    let mut out: Vec<Poset> = Vec::new();
    for p in candidates {
        if p.size() > max_size || p.size() < 2 {
            continue;
        }
        if out.iter().any(|q| q.is_isomorphic(&p)) {
            continue;
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_embedding_exists(p: &Poset, q: &Poset) -> bool {
        fn rec(p: &Poset, q: &Poset, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let x = map.len();
            if x == p.size() {
                return true;
            }
            for y in 0..q.size() {
                if used[y] {
                    continue;
                }
                if (0..x).all(|x2| {
                    p.less(x2, x) == q.less(map[x2], y) && p.less(x, x2) == q.less(y, map[x2])
                }) {
                    used[y] = true;
                    map.push(y);
                    if rec(p, q, map, used) {
                        return true;
                    }
                    map.pop();
                    used[y] = false;
                }
            }
            false
        }
        rec(p, q, &mut Vec::new(), &mut vec![false; q.size()])
    }

    #[test]
    fn cover_relations_examples() {
        let c2 = Poset::from_cover_relations(2, &[(0, 1)]).unwrap();
        assert!(c2.less(0, 1) && !c2.less(1, 0));
        let d = Poset::from_cover_relations(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert!(d.is_isomorphic(&catalog("diamond", None).unwrap()));
        assert!(d.less(0, 3));
        let a = Poset::from_cover_relations(3, &[]).unwrap();
        assert!(a.is_isomorphic(&Poset::antichain(3)));
    }

    #[test]
    fn cover_relation_errors() {
        assert_eq!(
            Poset::from_cover_relations(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::CycleInCovers(0))
        );
        assert!(matches!(
            Poset::from_cover_relations(2, &[(0, 1), (1, 1)]),
            Err(Error::CycleInCovers(_))
        ));
        assert_eq!(
            Poset::from_cover_relations(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
    }

    #[test]
    fn from_relation_rejects_non_orders() {
        let not_transitive = vec![
            vec![false, true, false],
            vec![false, false, true],
            vec![false, false, false],
        ];
        assert!(Poset::from_relation(not_transitive, None).is_err());
        assert!(Poset::from_relation(vec![vec![true]], None).is_err());
    }

    #[test]
    fn diamond_shape() {
        let d = catalog("diamond", None).unwrap();
        assert_eq!(d.size(), 4);
        assert_eq!(d.minimal_elements().len(), 1);
        assert_eq!(d.maximal_elements().len(), 1);
        let middles: Vec<_> = (0..4)
            .filter(|&a| !d.minimal_elements().contains(&a) && !d.maximal_elements().contains(&a))
            .collect();
        assert_eq!(middles.len(), 2);
        assert!(d.incomparable(middles[0], middles[1]));
    }

    #[test]
    fn catalog_identities() {
        let yinv = catalog("Yinv", None).unwrap();
        assert!(catalog("wedge", Some(2)).unwrap().is_isomorphic(&yinv));
        assert!(catalog("Xell", Some(1))
            .unwrap()
            .is_isomorphic(&catalog("X", None).unwrap()));
        assert!(catalog("vee", Some(2))
            .unwrap()
            .is_isomorphic(&catalog("Y", None).unwrap()));
        for l in 1..5 {
            let w = catalog("wedge", Some(l)).unwrap();
            let v = catalog("vee", Some(l)).unwrap();
            assert!(w.dual().is_isomorphic(&v));
        }
    }

    #[test]
    fn catalog_errors() {
        assert!(matches!(
            catalog("pentagon", None),
            Err(Error::UnknownName(_))
        ));
        assert!(matches!(
            catalog("wedge", Some(0)),
            Err(Error::BadParam { .. })
        ));
        assert!(matches!(
            catalog("wedge", None),
            Err(Error::BadParam { .. })
        ));
        assert!(matches!(catalog("X", Some(2)), Err(Error::BadParam { .. })));
        assert!(catalog_spec("chain:x").is_err());
        assert_eq!(catalog_spec("name=chain:3").unwrap().size(), 3);
    }

    #[test]
    fn catalog_posets_are_orders() {
        for p in catalog_up_to(8) {
            p.check_axioms().unwrap();
        }
    }

    #[test]
    fn dual_examples() {
        let y = catalog("Y", None).unwrap();
        assert!(y.dual().is_isomorphic(&catalog("Yinv", None).unwrap()));
        let x = catalog("X", None).unwrap();
        assert!(x.dual().is_isomorphic(&x));
        assert!(Poset::antichain(3)
            .dual()
            .is_isomorphic(&Poset::antichain(3)));
    }

    #[test]
    fn dot_extension_examples() {
        let fork = catalog("fork", None).unwrap();
        let dotted = Poset::antichain(2).dot_extension();
        assert_eq!(dotted.size(), 3);
        assert!(dotted.is_isomorphic(&fork.dual()));
        assert!(Poset::chain(2)
            .dot_extension()
            .is_isomorphic(&Poset::chain(3)));
        let dfork = fork.dot_extension();
        assert_eq!(dfork.size(), 4);
        assert_eq!(dfork.maximal_elements(), vec![3]);
    }

    #[test]
    fn legs_examples() {
        let x = catalog("X", None).unwrap();
        let w = x.has_legs().unwrap();
        assert!(w.is_valid_for(&x));
        assert_eq!(
            w,
            LegsWitness {
                leg1: 0,
                leg2: 1,
                hip: 2
            }
        );
        assert!(catalog("diamond", None).unwrap().has_legs().is_none());
        assert!(catalog("Yinv", None).unwrap().has_legs().is_some());
        assert!(catalog("Y", None).unwrap().has_legs().is_none());
        assert!(catalog("N", None).unwrap().has_legs().is_none());
        // three-element wedge: the "every other element" clause is vacuous
        assert!(catalog("wedge", Some(1)).unwrap().has_legs().is_some());
    }

    #[test]
    fn embedding_examples() {
        let diamond = catalog("diamond", None).unwrap();
        assert!(Poset::chain(2).is_induced_subposet(&diamond).is_some());
        let fork = catalog("fork", None).unwrap();
        assert!(fork.is_induced_subposet(&Poset::chain(3)).is_none());
        let n = catalog("N", None).unwrap();
        assert!(n.is_induced_subposet(&diamond).is_none());
        assert!(!brute_embedding_exists(&n, &diamond));
    }

    #[test]
    fn embedding_matches_brute_force_on_catalog() {
        let all = catalog_up_to(6);
        for p in all.iter().filter(|p| p.size() <= 5) {
            for q in &all {
                let found = p.is_induced_subposet(q);
                assert_eq!(
                    found.is_some(),
                    brute_embedding_exists(p, q),
                    "{p} into {q}"
                );
                if let Some(w) = found {
                    assert!(w.is_valid(p, q));
                }
            }
        }
    }

    #[test]
    fn text_round_trip_and_catalog_reference() {
        let x = catalog("X", None).unwrap();
        let text = x.to_text();
        assert_eq!(text, "elements=5\nname=X\n1 < 3\n2 < 3\n3 < 4\n3 < 5\n");
        let back = Poset::from_text(&text).unwrap();
        assert_eq!(back, x);
        let by_name = Poset::from_text("# wedge\nelements=4\nname=wedge:2\n").unwrap();
        assert!(by_name.is_isomorphic(&catalog("Yinv", None).unwrap()));
        assert!(Poset::from_text("elements=3\nname=wedge:2\n").is_err());
        assert!(matches!(
            Poset::from_text("elements=2\n1 < 0\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Poset::from_text("2 < 1\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn dot_export_uses_covers_only() {
        let c3 = Poset::chain(3);
        let dot = c3.to_dot();
        assert!(dot.contains("1 -> 2;"));
        assert!(dot.contains("2 -> 3;"));
        assert!(!dot.contains("1 -> 3;"));
    }
}
