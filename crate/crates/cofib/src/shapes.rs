//! Structural recognizers: semilattices, chains, zigzags, trees, and the
//! named small posets.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::functors::sd2_simplex;
use crate::poset::Poset;

/// Least upper bound of `a` and `b`, if any.
pub fn join(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let mut ub = p.up_row(a).clone();
    ub.intersect_with(p.up_row(b));
    ub.ones().find(|&u| ub.is_subset(p.up_row(u)))
}

pub fn meet(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let mut lb = p.down_row(a).clone();
    lb.intersect_with(p.down_row(b));
    lb.ones().find(|&l| lb.is_subset(p.down_row(l)))
}

/// Join of a nonempty set in a join-semilattice.
pub fn join_all(p: &Poset, xs: &[usize]) -> Option<usize> {
    let (&first, rest) = xs.split_first()?;
    rest.iter().try_fold(first, |acc, &x| join(p, acc, x))
}

pub fn meet_all(p: &Poset, xs: &[usize]) -> Option<usize> {
    let (&first, rest) = xs.split_first()?;
    rest.iter().try_fold(first, |acc, &x| meet(p, acc, x))
}

pub fn is_join_semilattice(p: &Poset) -> bool {
    let n = p.len();
    (0..n).all(|a| (a + 1..n).all(|b| join(p, a, b).is_some()))
}

pub fn is_meet_semilattice(p: &Poset) -> bool {
    let n = p.len();
    (0..n).all(|a| (a + 1..n).all(|b| meet(p, a, b).is_some()))
}

pub fn is_semilattice(p: &Poset) -> bool {
    is_join_semilattice(p) || is_meet_semilattice(p)
}

pub fn is_chain(p: &Poset) -> bool {
    let n = p.len();
    (0..n).all(|a| (a + 1..n).all(|b| p.comparable(a, b)))
}

/// Elements of a chain from bottom to top.
pub fn chain_order(p: &Poset) -> Result<Vec<usize>> {
    if !is_chain(p) {
        return Err(Error::NotAChain);
    }
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| p.down_row(x).count_ones(..));
    Ok(order)
}

/// The Hasse path of a zigzag, starting from its lower-indexed endpoint.
pub fn zigzag_path(p: &Poset) -> Option<Vec<usize>> {
    let n = p.len();
    if n == 0 {
        return Some(vec![]);
    }
    let covers = p.covers();
    if covers.len() != n - 1 || !p.is_connected() {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &covers {
        adj[a].push(b);
        adj[b].push(a);
    }
    if adj.iter().any(|v| v.len() > 2) {
        return None;
    }
    let start = (0..n).find(|&x| adj[x].len() <= 1)?;
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&y| y != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    (path.len() == n).then_some(path)
}

pub fn is_zigzag(p: &Poset) -> bool {
    zigzag_path(p).is_some()
}

pub fn is_tree_poset(p: &Poset) -> bool {
    if p.is_empty() {
        return true;
    }
    p.minimal_elements().len() == 1
        && (0..p.len()).all(|x| {
            let d = p.down_set(x);
            d.iter().all(|&a| d.iter().all(|&b| p.comparable(a, b)))
        })
}

pub fn rank(p: &Poset) -> Result<Vec<usize>> {
    if !is_tree_poset(p) {
        return Err(Error::NotATree);
    }
    Ok((0..p.len()).map(|x| p.down_row(x).count_ones(..) - 1).collect())
}

/// Named posets that the dispatcher and the catalog refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogId {
    /// The four-element N shape.
    FourN,
    /// The complete bipartite poset with two minima under two maxima.
    FourK22,
    /// Twice-subdivided 1-simplex, the five-element W fence.
    Sd2Delta1,
    /// The nine five-element hand constructions.
    P(u8),
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::FourN => write!(f, "N4"),
            CatalogId::FourK22 => write!(f, "K22"),
            CatalogId::Sd2Delta1 => write!(f, "sd2D1"),
            CatalogId::P(k) => write!(f, "P{k}"),
        }
    }
}

fn named(labels: &str, covers: &str) -> Poset {
    let labels: Vec<&str> = labels.split_whitespace().collect();
    let pairs: Vec<(&str, &str)> =
        covers.split_whitespace().map(|c| c.split_once('<').expect("cover written a<b")).collect();
    Poset::from_covers(&labels, &pairs).expect("catalog poset")
}

/// Representative of a catalog entry with the labels used by the builders.
pub fn catalog_poset(id: CatalogId) -> Poset {
    match id {
        CatalogId::FourN => named("x1 x2 y1 y2", "x1<y1 x2<y1 x2<y2"),
        CatalogId::FourK22 => named("a1 a2 b1 b2", "a1<b1 a1<b2 a2<b1 a2<b2"),
        CatalogId::Sd2Delta1 => (*sd2_simplex(1).expect("sd2 of an edge")).clone(),
        CatalogId::P(1) => named("x1 x2 x3 y1 y2", "x1<y1 x2<y1 x3<y1 x2<y2 x3<y2"),
        CatalogId::P(2) => named("x1 x2 x3 y1 y2", "x1<y1 x2<y1 x3<y1 x1<y2 x2<y2 x3<y2"),
        CatalogId::P(3) => named("x1 x2 y1 y2 z", "x1<y1 y1<z x2<z x1<y2 x2<y2"),
        CatalogId::P(4) => named("x y1 y2 z1 z2", "x<y1 y1<z1 y1<z2 y2<z1 y2<z2"),
        CatalogId::P(5) => named("x1 x2 y z1 z2", "x1<y x2<y y<z1 y<z2"),
        CatalogId::P(6) => named("y1 y2 x1 x2 x3", "y1<x1 y1<x2 y1<x3 y2<x1 y2<x2 y2<x3"),
        CatalogId::P(7) => named("x1 x2 y1 y2 z", "x1<y1 x1<y2 x2<y1 x2<y2 y1<z y2<z"),
        CatalogId::P(8) => named("x y1 y2 z1 z2", "x<y1 x<y2 y1<z1 y1<z2 y2<z1 y2<z2"),
        CatalogId::P(9) => named("x1 x2 y1 y2 z", "x1<y1 x2<y1 y1<z x1<y2 x2<y2"),
        CatalogId::P(k) => panic!("no catalog poset P{k}"),
    }
}

pub fn catalog_ids() -> Vec<CatalogId> {
    let mut ids = vec![CatalogId::FourN, CatalogId::FourK22, CatalogId::Sd2Delta1];
    ids.extend((1..=9).map(CatalogId::P));
    ids
}

fn catalog_keys() -> &'static Vec<(CanonicalForm, CatalogId)> {
    static KEYS: OnceLock<Vec<(CanonicalForm, CatalogId)>> = OnceLock::new();
    KEYS.get_or_init(|| {
        catalog_ids().into_iter().map(|id| (canonical_form(&catalog_poset(id)).expect("small"), id)).collect()
    })
}

pub fn catalog_id(p: &Poset) -> Option<CatalogId> {
    if p.is_empty() || p.len() > 5 || !p.is_connected() {
        return None;
    }
    let k = canonical_form(p).ok()?;
    catalog_keys().iter().find(|(c, _)| *c == k).map(|&(_, id)| id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    JoinSemilattice,
    MeetSemilattice,
    Chain,
    Zigzag,
    Tree,
    Connected,
    Disconnected,
    SmallCatalog(CatalogId),
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::JoinSemilattice => write!(f, "join_semilattice"),
            Tag::MeetSemilattice => write!(f, "meet_semilattice"),
            Tag::Chain => write!(f, "chain"),
            Tag::Zigzag => write!(f, "zigzag"),
            Tag::Tree => write!(f, "tree"),
            Tag::Connected => write!(f, "connected"),
            Tag::Disconnected => write!(f, "disconnected"),
            Tag::SmallCatalog(id) => write!(f, "small_catalog({id})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub tags: BTreeSet<Tag>,
}

impl Classification {
    pub fn has(&self, t: Tag) -> bool {
        self.tags.contains(&t)
    }

    pub fn is_semilattice(&self) -> bool {
        self.has(Tag::JoinSemilattice) || self.has(Tag::MeetSemilattice)
    }

    pub fn catalog(&self) -> Option<CatalogId> {
        self.tags.iter().find_map(|t| match t {
            Tag::SmallCatalog(id) => Some(*id),
            _ => None,
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tags.iter().map(|t| t.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn classify(p: &Poset) -> Classification {
    let mut tags = BTreeSet::new();
    let checks: [(bool, Tag); 5] = [
        (is_join_semilattice(p), Tag::JoinSemilattice),
        (is_meet_semilattice(p), Tag::MeetSemilattice),
        (is_chain(p), Tag::Chain),
        (is_zigzag(p), Tag::Zigzag),
        (is_tree_poset(p), Tag::Tree),
    ];
    tags.extend(checks.into_iter().filter(|(ok, _)| *ok).map(|(_, t)| t));
    match p.connected_components().len() {
        0 => {}
        1 => {
            tags.insert(Tag::Connected);
        }
        _ => {
            tags.insert(Tag::Disconnected);
        }
    }
    if let Some(id) = catalog_id(p) {
        tags.insert(Tag::SmallCatalog(id));
    }
    Classification { tags }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Poset {
        Poset::from_index_covers(3, &[(0, 1), (0, 2)]).unwrap()
    }

    #[test]
    fn semilattice_examples() {
        let c = Poset::chain(3);
        assert!(is_join_semilattice(&c) && is_meet_semilattice(&c));
        assert!(!is_join_semilattice(&v()) && is_meet_semilattice(&v()));
        let p1 = catalog_poset(CatalogId::P(1));
        assert!(!is_semilattice(&p1));
    }

    #[test]
    fn chain_examples() {
        assert!(is_chain(&Poset::chain(2)));
        assert!(!is_chain(&v()));
        assert!(is_chain(&Poset::empty()));
    }

    #[test]
    fn zigzag_examples() {
        let z = Poset::from_index_covers(3, &[(0, 1), (2, 1)]).unwrap();
        assert!(is_zigzag(&z));
        assert!(is_zigzag(&Poset::chain(2)));
        let y = Poset::from_index_covers(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        assert!(is_zigzag(&y));
        let branch = Poset::from_index_covers(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(!is_zigzag(&branch));
    }

    #[test]
    fn tree_examples() {
        assert!(is_tree_poset(&Poset::chain(3)));
        let y = Poset::from_index_covers(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(is_tree_poset(&y));
        assert_eq!(rank(&y).unwrap(), vec![0, 1, 2, 2]);
        assert!(!is_tree_poset(&v().opposite()));
        assert_eq!(rank(&Poset::chain(3)).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&Poset::chain(4));
        for t in [Tag::Chain, Tag::JoinSemilattice, Tag::MeetSemilattice, Tag::Tree, Tag::Zigzag, Tag::Connected] {
            assert!(c.has(t));
        }
        assert_eq!(c.tags.len(), 6);
        let p8 = classify(&catalog_poset(CatalogId::P(8)));
        let want: BTreeSet<Tag> = [Tag::Connected, Tag::SmallCatalog(CatalogId::P(8))].into_iter().collect();
        assert_eq!(p8.tags, want);
        assert!(classify(&Poset::antichain(2)).has(Tag::Disconnected));
    }

    #[test]
    fn catalog_is_non_semilattice_and_distinct() {
        let mut keys = BTreeSet::new();
        for id in catalog_ids() {
            let p = catalog_poset(id);
            assert!(p.is_connected());
            assert!(!is_semilattice(&p), "{id}");
            assert!(keys.insert(canonical_form(&p).unwrap()));
        }
    }
}
