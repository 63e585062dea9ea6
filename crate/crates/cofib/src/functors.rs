//! The chain-poset functor, power-set lattices and subdivided simplices.
//!
//! Chains and subsets are both listed in lexicographic order of their
//! sorted index lists, so `sd_simplex(n)` and `chains_poset([n])` agree
//! position for position.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, Poset};

/// Largest number of chains [`chains_poset`] will materialize.
pub const CHAIN_LIMIT: usize = 20_000;
/// Largest ground set accepted by [`power_lattice`].
pub const GROUND_LIMIT: usize = 12;

#[derive(Clone, Debug)]
pub struct ChainPoset {
    pub base: Arc<Poset>,
    pub chains: Vec<Vec<usize>>,
    pub poset: Arc<Poset>,
    index: HashMap<Vec<usize>, usize>,
}

impl ChainPoset {
    /// Position of a chain given by its elements in any order.
    pub fn index_of(&self, elems: &[usize]) -> Option<usize> {
        let mut key = elems.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied()
    }
}

/// Number of nonempty chains, without building them.
pub fn chain_count(p: &Poset) -> u128 {
    // ending[x] = chains whose largest element is x
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| p.down_row(x).count_ones(..));
    let mut ending = vec![0u128; n];
    for &x in &order {
        ending[x] = 1 + p.down_row(x).ones().filter(|&y| y != x).map(|y| ending[y]).sum::<u128>();
    }
    ending.iter().sum()
}

pub fn chains_poset(p: &Arc<Poset>) -> Result<ChainPoset> {
    let count = chain_count(p);
    if count > CHAIN_LIMIT as u128 {
        return Err(Error::SizeLimit(format!("{count} chains exceed the limit of {CHAIN_LIMIT}")));
    }
    let n = p.len();
    let mut chains = Vec::with_capacity(count as usize);
    let mut stack = Vec::new();
    for x in 0..n {
        stack.push(x);
        extend_chains(p, &mut stack, &mut chains);
        stack.pop();
    }
    let labels = chains
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().map(|&x| p.label(x)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let poset = Arc::new(inclusion_poset(n, &chains, labels));
    let index = chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    Ok(ChainPoset { base: p.clone(), chains, poset, index })
}

fn extend_chains(p: &Poset, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(stack.clone());
    let last = *stack.last().expect("nonempty chain");
    for y in last + 1..p.len() {
        if stack.iter().all(|&s| p.comparable(s, y)) {
            stack.push(y);
            extend_chains(p, stack, out);
            stack.pop();
        }
    }
}

/// Family of subsets of `0..ground` ordered by inclusion.
fn inclusion_poset(ground: usize, sets: &[Vec<usize>], labels: Vec<String>) -> Poset {
    let m = sets.len();
    // containing[e] = sets that contain e
    let mut containing = vec![FixedBitSet::with_capacity(m); ground];
    for (i, s) in sets.iter().enumerate() {
        for &e in s {
            containing[e].insert(i);
        }
    }
    let mut all = FixedBitSet::with_capacity(m);
    all.insert_range(..);
    let up = sets
        .iter()
        .map(|s| {
            let mut row = all.clone();
            for &e in s {
                row.intersect_with(&containing[e]);
            }
            row
        })
        .collect();
    Poset::from_up_rows(labels, up).expect("inclusion order is a partial order")
}

pub fn chains_map(f: &MonotoneMap) -> Result<MonotoneMap> {
    let src = chains_poset(&f.source)?;
    let tgt = chains_poset(&f.target)?;
    chains_map_between(f, &src, &tgt)
}

/// `chains_map` with both chain posets supplied by the caller.
pub fn chains_map_between(f: &MonotoneMap, src: &ChainPoset, tgt: &ChainPoset) -> Result<MonotoneMap> {
    f.check_shape()?;
    let mut image = Vec::with_capacity(src.chains.len());
    for c in &src.chains {
        let mapped: Vec<usize> = c.iter().map(|&x| f.image[x]).collect();
        let j = tgt.index_of(&mapped).ok_or_else(|| Error::NotMonotone("image of a chain is not a chain".into()))?;
        image.push(j);
    }
    Ok(MonotoneMap::raw(src.poset.clone(), tgt.poset.clone(), image))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Nonempty,
    ProperNonempty,
    MinusTop,
}

#[derive(Clone, Debug)]
pub struct SubsetPoset {
    pub ground: usize,
    pub selection: Selection,
    pub members: Vec<Vec<usize>>,
    pub poset: Arc<Poset>,
    index: HashMap<Vec<usize>, usize>,
}

impl SubsetPoset {
    pub fn index_of(&self, elems: &[usize]) -> Option<usize> {
        let mut key = elems.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied()
    }
}

pub fn power_lattice(ground: usize, selection: Selection) -> Result<SubsetPoset> {
    if ground > GROUND_LIMIT {
        return Err(Error::SizeLimit(format!("ground set of {ground} exceeds {GROUND_LIMIT}")));
    }
    let mut nonempty = Vec::new();
    let mut stack = Vec::new();
    fn rec(ground: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(stack.clone());
        let next = stack.last().map_or(0, |&l| l + 1);
        for y in next..ground {
            stack.push(y);
            rec(ground, stack, out);
            stack.pop();
        }
    }
    for x in 0..ground {
        stack.push(x);
        rec(ground, &mut stack, &mut nonempty);
        stack.pop();
    }
    let mut members = Vec::new();
    if matches!(selection, Selection::All | Selection::MinusTop) {
        members.push(vec![]);
    }
    for s in nonempty {
        let full = s.len() == ground;
        if full && matches!(selection, Selection::ProperNonempty | Selection::MinusTop) {
            continue;
        }
        members.push(s);
    }
    let labels = members
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let poset = Arc::new(inclusion_poset(ground, &members, labels));
    let index = members.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    Ok(SubsetPoset { ground, selection, members, poset, index })
}

/// The face poset of the `n`-simplex.
pub fn sd_simplex(n: usize) -> Result<Arc<Poset>> {
    Ok(power_lattice(n + 1, Selection::Nonempty)?.poset)
}

/// Proper faces of the `n`-simplex and their inclusion into all faces.
pub fn sd_boundary(n: usize) -> Result<(Arc<Poset>, MonotoneMap)> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 1 });
    }
    let whole = power_lattice(n + 1, Selection::Nonempty)?;
    let proper = power_lattice(n + 1, Selection::ProperNonempty)?;
    let image = proper.members.iter().map(|s| whole.index_of(s).expect("proper face is a face")).collect();
    let inc = MonotoneMap::raw(proper.poset.clone(), whole.poset.clone(), image);
    Ok((proper.poset, inc))
}

pub fn sd2_simplex(n: usize) -> Result<Arc<Poset>> {
    if n > 2 {
        return Err(Error::SizeLimit(format!("sd2_simplex({n}) is beyond desk scale")));
    }
    Ok(chains_poset(&sd_simplex(n)?)?.poset)
}

pub fn sd2_boundary(n: usize) -> Result<(Arc<Poset>, MonotoneMap)> {
    if n > 2 {
        return Err(Error::SizeLimit(format!("sd2_boundary({n}) is beyond desk scale")));
    }
    let (_, inc) = sd_boundary(n)?;
    let m = chains_map(&inc)?;
    Ok((m.source.clone(), m))
}

pub fn vertex_inclusion(n: usize, k: usize) -> Result<MonotoneMap> {
    if k > n {
        return Err(Error::IndexOutOfRange { index: k, bound: n + 1 });
    }
    let pl = power_lattice(n + 1, Selection::Nonempty)?;
    let at = pl.index_of(&[k]).expect("vertex present");
    Ok(MonotoneMap::point(pl.poset, at))
}
