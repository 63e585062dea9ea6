//! Finite posets and monotone maps.
//!
//! Elements are identified by position. Labels are carried along for
//! display only and never take part in equality.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    /// `up[x]` holds every `y` with `x <= y`.
    up: Vec<FixedBitSet>,
    /// `down[y]` holds every `x` with `x <= y`.
    down: Vec<FixedBitSet>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> =
            self.covers().into_iter().map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b])).collect();
        write!(f, "Poset(n={}; {})", self.len(), covers.join(" "))
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl Poset {
    /// Builds a poset from a full relation given as up-set rows.
    /// The rows must already be reflexive, antisymmetric and transitive.
    pub fn from_up_rows(labels: Vec<String>, up: Vec<FixedBitSet>) -> Result<Poset> {
        let n = up.len();
        if labels.len() != n {
            return Err(Error::MalformedMap(format!("{} labels for {} elements", labels.len(), n)));
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedMap("relation row has wrong width".into()));
            }
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAPoset(format!("relation is not reflexive at {x}")));
            }
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotAPoset(format!("{x} and {y} form a cycle")));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::NotAPoset(format!("not transitive through {x} <= {y}")));
                }
            }
        }
        Ok(Poset { labels, up, down })
    }

    /// Reflexive-transitive closure of a generating relation on `0..n`.
    pub fn from_index_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        Self::from_index_covers_labeled(default_labels(n), covers)
    }

    pub fn from_index_covers_labeled(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b), bound: n });
            }
            if a == b {
                return Err(Error::ReflexiveCover(labels[a].clone()));
            }
            up[a].insert(b);
        }
        transitive_closure(&mut up);
        for x in 0..n {
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::CycleError(labels[x].clone()));
                }
            }
        }
        Self::from_up_rows(labels, up)
    }

    /// Label-based constructor used by the text format.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Poset> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.to_string()));
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::from_index_covers_labeled(labels, &pairs)
    }

    pub fn empty() -> Poset {
        Poset { labels: vec![], up: vec![], down: vec![] }
    }

    pub fn point() -> Poset {
        Self::antichain(1)
    }

    pub fn antichain(n: usize) -> Poset {
        Self::from_index_covers(n, &[]).expect("antichain")
    }

    /// The ordinal `[n] = {0 < 1 < ... < n}`.
    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (0..n).map(|i| (i, i + 1)).collect();
        Self::from_index_covers(n + 1, &covers).expect("chain")
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Poset {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_row(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_row(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn down_set(&self, x: usize) -> Vec<usize> {
        self.down[x].ones().collect()
    }

    pub fn up_set(&self, x: usize) -> Vec<usize> {
        self.up[x].ones().collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].count_ones(..) == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].count_ones(..) == 1).collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.down[x].count_ones(..) == 1
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.up[x].count_ones(..) == 1
    }

    /// Cover pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].ones() {
                if a != b && self.is_cover(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        if !self.lt(a, b) {
            return false;
        }
        let mut between = self.up[a].clone();
        between.intersect_with(&self.down[b]);
        between.count_ones(..) == 2
    }

    pub fn lower_covers(&self, b: usize) -> Vec<usize> {
        self.down[b].ones().filter(|&a| self.is_cover(a, b)).collect()
    }

    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        self.up[a].ones().filter(|&b| self.is_cover(a, b)).collect()
    }

    pub fn opposite(&self) -> Poset {
        Poset { labels: self.labels.clone(), up: self.down.clone(), down: self.up.clone() }
    }

    /// Full subposet on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let n = keep.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                if self.leq(x, y) {
                    up[i].insert(j);
                }
            }
        }
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        Poset::from_up_rows(labels, up).expect("induced subposet")
    }

    /// The poset obtained by moving element `perm[i]` to position `i`.
    pub fn reorder(&self, perm: &[usize]) -> Poset {
        self.induced(perm)
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.up[x].ones().chain(self.down[x].ones()) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Number of pairs `x <= y` with `x != y`.
    pub fn strict_relation_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..)).sum::<usize>() - self.len()
    }
}

pub(crate) fn transitive_closure(up: &mut [FixedBitSet]) {
    let n = up.len();
    for k in 0..n {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
}

/// Disjoint union with its injections.
pub fn coproduct(ps: &[Arc<Poset>]) -> (Arc<Poset>, Vec<MonotoneMap>) {
    let total: usize = ps.iter().map(|p| p.len()).sum();
    let mut up = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    let mut offset = 0;
    for (k, p) in ps.iter().enumerate() {
        for x in 0..p.len() {
            let mut row = FixedBitSet::with_capacity(total);
            for y in p.up[x].ones() {
                row.insert(offset + y);
            }
            up.push(row);
            labels.push(if ps.len() > 1 { format!("{}_{}", p.labels[x], k) } else { p.labels[x].clone() });
        }
        offset += p.len();
    }
    let sum = Arc::new(Poset::from_up_rows(labels, up).expect("coproduct"));
    let mut injections = Vec::with_capacity(ps.len());
    let mut offset = 0;
    for p in ps {
        let image = (offset..offset + p.len()).collect();
        injections.push(MonotoneMap::raw(p.clone(), sum.clone(), image));
        offset += p.len();
    }
    (sum, injections)
}

#[derive(Clone)]
pub struct MonotoneMap {
    pub source: Arc<Poset>,
    pub target: Arc<Poset>,
    pub image: Vec<usize>,
}

impl PartialEq for MonotoneMap {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image && same_poset(&self.source, &other.source) && same_poset(&self.target, &other.target)
    }
}

impl Eq for MonotoneMap {}

impl fmt::Debug for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Map({} -> {}; {:?})", self.source.len(), self.target.len(), self.image)
    }
}

pub fn same_poset(a: &Arc<Poset>, b: &Arc<Poset>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl MonotoneMap {
    /// Checked constructor: image must be in range and order-preserving.
    pub fn new(source: Arc<Poset>, target: Arc<Poset>, image: Vec<usize>) -> Result<MonotoneMap> {
        let f = MonotoneMap { source, target, image };
        f.check_shape()?;
        if !is_monotone(&f) {
            return Err(Error::NotMonotone(format!("{f:?}")));
        }
        Ok(f)
    }

    /// Unchecked constructor. Callers that need guarantees run `is_monotone`.
    pub fn raw(source: Arc<Poset>, target: Arc<Poset>, image: Vec<usize>) -> MonotoneMap {
        MonotoneMap { source, target, image }
    }

    pub fn identity(p: Arc<Poset>) -> MonotoneMap {
        let image = (0..p.len()).collect();
        MonotoneMap { source: p.clone(), target: p, image }
    }

    /// The unique map out of the empty poset.
    pub fn from_empty(target: Arc<Poset>) -> MonotoneMap {
        MonotoneMap { source: Arc::new(Poset::empty()), target, image: vec![] }
    }

    /// The map from the one-point poset picking `x`.
    pub fn point(target: Arc<Poset>, x: usize) -> MonotoneMap {
        MonotoneMap { source: Arc::new(Poset::point()), target, image: vec![x] }
    }

    /// Inclusion of a full subposet given by `keep`.
    pub fn inclusion(target: Arc<Poset>, keep: &[usize]) -> MonotoneMap {
        let source = Arc::new(target.induced(keep));
        MonotoneMap { source, target, image: keep.to_vec() }
    }

    pub fn check_shape(&self) -> Result<()> {
        if self.image.len() != self.source.len() {
            return Err(Error::MalformedMap(format!(
                "image has {} entries for a source of {} elements",
                self.image.len(),
                self.source.len()
            )));
        }
        if let Some(&bad) = self.image.iter().find(|&&y| y >= self.target.len()) {
            return Err(Error::IndexOutOfRange { index: bad, bound: self.target.len() });
        }
        Ok(())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.target.len());
        self.image.iter().all(|&y| !seen.put(y))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.target.len());
        for &y in &self.image {
            seen.insert(y);
        }
        seen.count_ones(..) == self.target.len()
    }

    /// Injective and order-reflecting.
    pub fn is_order_embedding(&self) -> bool {
        let n = self.source.len();
        self.is_injective()
            && (0..n).all(|x| (0..n).all(|y| self.source.leq(x, y) == self.target.leq(self.image[x], self.image[y])))
    }

    pub fn is_identity(&self) -> bool {
        same_poset(&self.source, &self.target) && self.image.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// Bijective with monotone inverse.
    pub fn is_isomorphism(&self) -> bool {
        self.source.len() == self.target.len() && is_monotone(self) && self.is_order_embedding()
    }

    pub fn inverse(&self) -> Option<MonotoneMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Some(MonotoneMap::raw(self.target.clone(), self.source.clone(), inv))
    }

    /// Same function, read between the opposite posets.
    pub fn opposite(&self) -> MonotoneMap {
        MonotoneMap::raw(Arc::new(self.source.opposite()), Arc::new(self.target.opposite()), self.image.clone())
    }

    pub fn with_target(&self, target: Arc<Poset>) -> MonotoneMap {
        MonotoneMap::raw(self.source.clone(), target, self.image.clone())
    }
}

pub fn is_monotone(f: &MonotoneMap) -> bool {
    if f.check_shape().is_err() {
        return false;
    }
    (0..f.source.len()).all(|x| f.source.up_row(x).ones().all(|y| f.target.leq(f.image[x], f.image[y])))
}

/// `g ∘ f`; requires `f.target` to equal `g.source` element for element.
pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if !same_poset(&f.target, &g.source) {
        return Err(Error::CompositionMismatch(format!(
            "middle posets differ ({} vs {} elements)",
            f.target.len(),
            g.source.len()
        )));
    }
    if f.image.iter().any(|&y| y >= g.image.len()) {
        return Err(Error::CompositionMismatch("inner map leaves the middle poset".into()));
    }
    let image = f.image.iter().map(|&y| g.image[y]).collect();
    Ok(MonotoneMap::raw(f.source.clone(), g.target.clone(), image))
}

/// Composes a list of maps in diagram order: `fs[k-1] ∘ ... ∘ fs[0]`.
pub fn compose_all(fs: &[MonotoneMap]) -> Result<MonotoneMap> {
    let (first, rest) = fs.split_first().ok_or_else(|| Error::CompositionMismatch("empty composite".into()))?;
    let mut acc = first.clone();
    for f in rest {
        acc = compose(f, &acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Poset {
        Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap()
    }

    #[test]
    fn singleton_and_arrow() {
        let p = Poset::from_covers::<&str>(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        let d = Poset::from_covers(&["x", "y"], &[("x", "y")]).unwrap();
        assert!(d.leq(0, 1) && !d.leq(1, 0));
    }

    #[test]
    fn cycle_rejected() {
        let r = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert!(matches!(r, Err(Error::CycleError(_))));
        let r = Poset::from_covers(&["a"], &[("a", "z")]);
        assert!(matches!(r, Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn monotone_checks() {
        let c = Arc::new(Poset::chain(1));
        assert!(is_monotone(&MonotoneMap::identity(Arc::new(Poset::chain(2)))));
        assert!(!is_monotone(&MonotoneMap::raw(c.clone(), c, vec![1, 0])));
    }

    #[test]
    fn composition_mismatch() {
        let a = Arc::new(Poset::chain(1));
        let b = Arc::new(Poset::chain(2));
        let f = MonotoneMap::identity(a);
        let g = MonotoneMap::identity(b);
        assert!(matches!(compose(&g, &f), Err(Error::CompositionMismatch(_))));
    }

    #[test]
    fn coproduct_examples() {
        let (s, inj) = coproduct(&[Arc::new(Poset::point()), Arc::new(Poset::point())]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.strict_relation_count(), 0);
        assert_eq!(inj.len(), 2);
        let (e, _) = coproduct(&[]);
        assert!(e.is_empty());
        let c = Arc::new(Poset::chain(1));
        let (s, _) = coproduct(&[c.clone(), c]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.strict_relation_count(), 2);
    }

    #[test]
    fn opposite_and_down_sets() {
        let lam = v().opposite();
        assert_eq!(lam.maximal_elements(), vec![0]);
        assert_eq!(lam.minimal_elements(), vec![1, 2]);
        let c = Poset::chain(2);
        assert_eq!(c.down_set(2).len(), 3);
        assert_eq!(c.down_set(0), vec![0]);
        let z = Poset::from_index_covers(3, &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(z.down_set(1), vec![0, 1, 2]);
    }

    #[test]
    fn components() {
        assert_eq!(Poset::antichain(3).connected_components().len(), 3);
        let (s, _) = coproduct(&[Arc::new(Poset::chain(1)), Arc::new(v())]);
        let sizes: Vec<_> = s.connected_components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert!(Poset::chain(3).is_connected());
    }

    #[test]
    fn covers_of_diamond() {
        let d = Poset::from_index_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).unwrap();
        assert_eq!(d.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }
}
