//! Posets up to isomorphism on a handful of elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::shapes::{classify, is_semilattice, Classification, Tag};
use crate::witness::{analyze, Category, WitnessReport};

pub const ENUMERATION_LIMIT: usize = 6;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub canonical: CanonicalForm,
    pub representative: Arc<Poset>,
    pub classification: Classification,
    pub witness: Option<WitnessReport>,
}

/// Classes of `n`-element posets ordered by canonical key. Every poset
/// arises from a smaller one by adding a maximal element over a
/// down-closed set.
pub fn enumerate(n: usize) -> Result<Vec<CatalogEntry>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimit(format!("enumeration stops at {ENUMERATION_LIMIT} elements")));
    }
    let mut level: BTreeMap<CanonicalForm, Poset> = BTreeMap::new();
    level.insert(canonical_form(&Poset::empty())?, Poset::empty());
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for p in level.values() {
            for down in down_closed_sets(p) {
                let q = extend(p, &down)?;
                let key = canonical_form(&q)?;
                next.entry(key).or_insert(q);
            }
        }
        level = next;
    }
    level
        .into_keys()
        .map(|key| {
            let rep =
                Arc::new(key.decode().ok_or_else(|| Error::MalformedMap("canonical key does not decode".into()))?);
            Ok(CatalogEntry { canonical: key, classification: classify(&rep), representative: rep, witness: None })
        })
        .collect()
}

fn down_closed_sets(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    (0u32..1 << n)
        .filter(|mask| {
            (0..n).filter(|&x| mask >> x & 1 == 1).all(|x| p.down_set(x).iter().all(|&y| mask >> y & 1 == 1))
        })
        .map(|mask| (0..n).filter(|&x| mask >> x & 1 == 1).collect())
        .collect()
}

fn extend(p: &Poset, below: &[usize]) -> Result<Poset> {
    let n = p.len();
    let mut pairs = p.covers();
    pairs.extend(below.iter().map(|&x| (x, n)));
    Poset::from_index_covers(n + 1, &pairs)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountsRow {
    pub n: usize,
    pub total: usize,
    pub connected: usize,
    /// Connected classes with all binary joins or all binary meets.
    pub semilattices: usize,
    pub join: usize,
    pub meet: usize,
    pub chains: usize,
    pub zigzags: usize,
    pub trees: usize,
    /// Connected non-semilattices with a maximal element over a single cover.
    pub gluable: usize,
    /// Classes the dispatcher certifies by gluing; only computed up to 5.
    pub glued: Option<usize>,
}

/// Connected, not a semilattice, and some maximal element has exactly one
/// lower cover.
pub fn is_gluable(p: &Poset) -> bool {
    p.is_connected() && !is_semilattice(p) && (0..p.len()).any(|y| p.is_maximal(y) && p.lower_covers(y).len() == 1)
}

pub fn counts_table(max_n: usize) -> Result<Vec<CountsRow>> {
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let entries = enumerate(n)?;
        let mut row = CountsRow { n, total: entries.len(), ..Default::default() };
        for e in &entries {
            let c = &e.classification;
            if !c.has(Tag::Connected) {
                continue;
            }
            row.connected += 1;
            row.semilattices += c.is_semilattice() as usize;
            row.join += c.has(Tag::JoinSemilattice) as usize;
            row.meet += c.has(Tag::MeetSemilattice) as usize;
            row.chains += c.has(Tag::Chain) as usize;
            row.zigzags += c.has(Tag::Zigzag) as usize;
            row.trees += c.has(Tag::Tree) as usize;
            row.gluable += is_gluable(&e.representative) as usize;
        }
        if n <= 5 {
            let mut glued = 0;
            for e in entries.iter().filter(|e| e.classification.has(Tag::Connected)) {
                glued += (analyze(&e.representative)?.report.category == Category::Glued) as usize;
            }
            row.glued = Some(glued);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Every class with exactly `n` elements, each with a checked witness.
pub fn certify_all(n: usize) -> Result<Vec<CatalogEntry>> {
    if n > 5 {
        return Err(Error::SizeLimit("certification covers at most five elements".into()));
    }
    let mut entries = enumerate(n)?;
    for e in &mut entries {
        let a = analyze(&e.representative)
            .map_err(|err| Error::NoWitness(format!("class {}: {err}", e.canonical.to_hex())))?;
        a.report.check()?;
        e.witness = Some(a.report);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let totals: Vec<usize> = (1..=4).map(|n| enumerate(n).unwrap().len()).collect();
        assert_eq!(totals, vec![1, 2, 5, 16]);
        let three = enumerate(3).unwrap();
        assert_eq!(three.iter().filter(|e| e.representative.is_connected()).count(), 3);
    }

    #[test]
    fn representatives_match_keys() {
        for e in enumerate(4).unwrap() {
            assert_eq!(canonical_form(&e.representative).unwrap(), e.canonical);
        }
    }

    #[test]
    fn four_element_classes_certify() {
        let entries = certify_all(4).unwrap();
        assert_eq!(entries.len(), 16);
        assert!(entries.iter().all(|e| e.witness.is_some()));
    }

    #[test]
    fn too_large() {
        assert!(enumerate(7).is_err());
    }
}
