//! Canonical forms of finite posets.
//!
//! Elements are first split into isomorphism-invariant color classes by
//! iterated refinement over down-set and up-set color multisets. A
//! depth-first search then places elements class by class, keeping only
//! the orderings whose relation matrix is lexicographically smallest.
//! Twins (same strict up-set and down-set) are interchangeable and only
//! one of them is tried at each step.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest poset accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 160;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub key: Vec<u8>,
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl CanonicalForm {
    pub fn to_hex(&self) -> String {
        self.key.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalForm> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        let key = (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()?;
        Some(CanonicalForm { key })
    }

    /// Rebuilds the canonically ordered representative.
    pub fn decode(&self) -> Option<Poset> {
        if self.key.len() < 2 {
            return None;
        }
        let n = u16::from_be_bytes([self.key[0], self.key[1]]) as usize;
        let bits = &self.key[2..];
        let bit = |i: usize| bits.get(i / 8).map(|b| b >> (7 - i % 8) & 1 == 1);
        let mut covers = Vec::new();
        let mut pos = 0;
        for k in 0..n {
            for j in 0..k {
                if bit(pos)? {
                    covers.push((k, j));
                }
                pos += 1;
            }
            for j in 0..k {
                if bit(pos)? {
                    covers.push((j, k));
                }
                pos += 1;
            }
        }
        let p = Poset::from_index_covers(n, &covers).ok()?;
        (canonical_form(&p).ok()? == *self).then_some(p)
    }
}

/// The canonical key together with the ordering that realises it:
/// `order[k]` is the element placed at canonical position `k`.
pub fn canonical_labeling(p: &Poset) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = p.len();
    if n > CANONICAL_LIMIT {
        return Err(Error::SizeLimit(format!("canonical form supports at most {CANONICAL_LIMIT} elements, got {n}")));
    }
    let colors = refine_colors(p);
    let mut search = Search {
        p,
        colors: &colors,
        best: None,
        order: Vec::with_capacity(n),
        placed: vec![false; n],
        bits: Vec::new(),
    };
    search.run();
    let (bits, order) = search.best.unwrap_or_default();
    let mut key = Vec::with_capacity(2 + bits.len() / 8 + 1);
    key.extend_from_slice(&(n as u16).to_be_bytes());
    for chunk in bits.chunks(8) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (7 - i);
            }
        }
        key.push(byte);
    }
    Ok((CanonicalForm { key }, order))
}

pub fn canonical_form(p: &Poset) -> Result<CanonicalForm> {
    canonical_labeling(p).map(|(k, _)| k)
}

pub fn is_isomorphic(a: &Poset, b: &Poset) -> Result<bool> {
    if a.len() != b.len() || a.strict_relation_count() != b.strict_relation_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// An isomorphism `a -> b` as an image vector, if one exists.
pub fn find_isomorphism(a: &Poset, b: &Poset) -> Result<Option<Vec<usize>>> {
    if a.len() != b.len() {
        return Ok(None);
    }
    let (ka, oa) = canonical_labeling(a)?;
    let (kb, ob) = canonical_labeling(b)?;
    if ka != kb {
        return Ok(None);
    }
    let mut image = vec![0; a.len()];
    for k in 0..a.len() {
        image[oa[k]] = ob[k];
    }
    Ok(Some(image))
}

fn refine_colors(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let mut colors = vec![0usize; n];
    let mut classes = if n == 0 { 0 } else { 1 };
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let mut d: Vec<usize> = p.down_row(x).ones().filter(|&y| y != x).map(|y| colors[y]).collect();
                let mut u: Vec<usize> = p.up_row(x).ones().filter(|&y| y != x).map(|y| colors[y]).collect();
                d.sort_unstable();
                u.sort_unstable();
                (colors[x], d, u)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.drain(..).map(|s| distinct.binary_search(&s).expect("signature present")).collect();
        let count = distinct.len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

struct Search<'a> {
    p: &'a Poset,
    colors: &'a [usize],
    best: Option<(Vec<bool>, Vec<usize>)>,
    order: Vec<usize>,
    placed: Vec<bool>,
    bits: Vec<bool>,
}

impl Search<'_> {
    fn block(&self, v: usize) -> Vec<bool> {
        let mut b = Vec::with_capacity(2 * self.order.len());
        b.extend(self.order.iter().map(|&w| self.p.leq(v, w)));
        b.extend(self.order.iter().map(|&w| self.p.leq(w, v)));
        b
    }

    fn twins(&self, x: usize, y: usize) -> bool {
        let mut ux = self.p.up_row(x).clone();
        let mut uy = self.p.up_row(y).clone();
        ux.set(x, false);
        uy.set(y, false);
        let mut dx = self.p.down_row(x).clone();
        let mut dy = self.p.down_row(y).clone();
        dx.set(x, false);
        dy.set(y, false);
        ux == uy && dx == dy
    }

    fn worse_than_best(&self, extra: &[bool]) -> bool {
        let Some((best, _)) = &self.best else {
            return false;
        };
        let len = self.bits.len();
        let head = &best[..len];
        match self.bits.as_slice().cmp(head) {
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => extra > &best[len..len + extra.len()],
        }
    }

    fn run(&mut self) {
        let n = self.p.len();
        let k = self.order.len();
        if k == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => self.bits < *b,
            };
            if better {
                self.best = Some((self.bits.clone(), self.order.clone()));
            }
            return;
        }
        let Some(class) = (0..n).filter(|&x| !self.placed[x]).map(|x| self.colors[x]).min() else {
            return;
        };
        let candidates: Vec<usize> = (0..n).filter(|&x| !self.placed[x] && self.colors[x] == class).collect();
        let blocks: Vec<Vec<bool>> = candidates.iter().map(|&v| self.block(v)).collect();
        let Some(min_block) = blocks.iter().min().cloned() else {
            return;
        };
        let start = self.bits.len();
        let mut tried: Vec<usize> = Vec::new();
        for (v, blk) in candidates.into_iter().zip(blocks) {
            if blk != min_block || tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            if self.worse_than_best(&blk) {
                return;
            }
            tried.push(v);
            self.placed[v] = true;
            self.order.push(v);
            self.bits.extend_from_slice(&blk);
            self.run();
            self.bits.truncate(start);
            self.order.pop();
            self.placed[v] = false;
        }
    }
}
