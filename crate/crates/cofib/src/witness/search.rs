//! Backtracking searches for retractions, order embeddings and
//! isomorphisms with pinned values.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::{is_monotone, MonotoneMap, Poset};

#[derive(Clone, Debug)]
pub struct RetractionQuery {
    pub ambient: Arc<Poset>,
    /// `(ambient element, subobject element)` pairs the retraction must honour.
    pub pinned: Vec<(usize, usize)>,
    /// The embedding `i` to be split.
    pub subobject: MonotoneMap,
}

/// Finds monotone `p` with `p ∘ i = id` extending the pins. Elements are
/// assigned in ascending order and candidates tried in ascending order,
/// so the answer is the lexicographically least valid image vector.
pub fn retraction_search(q: &RetractionQuery) -> Result<MonotoneMap> {
    let i = &q.subobject;
    let amb = &q.ambient;
    if i.check_shape().is_err() || !crate::poset::same_poset(&i.target, amb) {
        return Err(Error::IllFormedQuery("subobject does not land in the ambient poset".into()));
    }
    if !is_monotone(i) || !i.is_order_embedding() {
        return Err(Error::IllFormedQuery("subobject is not an order embedding".into()));
    }
    let n = amb.len();
    let m = i.source.len();
    let mut fixed: Vec<Option<usize>> = vec![None; n];
    for (s, &a) in i.image.iter().enumerate() {
        fixed[a] = Some(s);
    }
    for &(a, s) in &q.pinned {
        if a >= n || s >= m {
            return Err(Error::IllFormedQuery(format!("pin {a}->{s} out of range")));
        }
        match fixed[a] {
            Some(t) if t != s => {
                return Err(Error::IllFormedQuery(format!("pin {a}->{s} contradicts the embedding")));
            }
            _ => fixed[a] = Some(s),
        }
    }
    let sub = &i.source;
    // fixed values must be mutually consistent
    for a in 0..n {
        for b in 0..n {
            if let (Some(x), Some(y)) = (fixed[a], fixed[b]) {
                if amb.leq(a, b) && !sub.leq(x, y) {
                    return Err(Error::NoRetraction);
                }
            }
        }
    }
    let mut assign: Vec<Option<usize>> = fixed.clone();
    let free: Vec<usize> = (0..n).filter(|&a| fixed[a].is_none()).collect();
    if extend(amb, sub, &free, 0, &mut assign) {
        let image = assign.into_iter().map(|v| v.expect("complete")).collect();
        Ok(MonotoneMap::raw(amb.clone(), sub.clone(), image))
    } else {
        Err(Error::NoRetraction)
    }
}

fn compatible(amb: &Poset, sub: &Poset, assign: &[Option<usize>], a: usize, t: usize) -> bool {
    amb.down_row(a).ones().all(|b| assign[b].is_none_or(|v| sub.leq(v, t)))
        && amb.up_row(a).ones().all(|b| assign[b].is_none_or(|v| sub.leq(t, v)))
}

fn extend(amb: &Poset, sub: &Poset, free: &[usize], k: usize, assign: &mut Vec<Option<usize>>) -> bool {
    let Some(&a) = free.get(k) else {
        return true;
    };
    for t in 0..sub.len() {
        if compatible(amb, sub, assign, a, t) {
            assign[a] = Some(t);
            if extend(amb, sub, free, k + 1, assign) {
                return true;
            }
            assign[a] = None;
        }
    }
    false
}

/// Order embeddings `sub -> amb` honouring `pins` (sub element, ambient
/// element), in lexicographic order; `visit` returns true to stop.
pub fn for_each_embedding<F: FnMut(&[usize]) -> bool>(sub: &Poset, amb: &Poset, pins: &[(usize, usize)], mut visit: F) {
    let m = sub.len();
    let mut pinned = vec![None; m];
    for &(s, a) in pins {
        pinned[s] = Some(a);
    }
    let mut image = vec![usize::MAX; m];
    let mut used = vec![false; amb.len()];
    fn rec<F: FnMut(&[usize]) -> bool>(
        sub: &Poset,
        amb: &Poset,
        pinned: &[Option<usize>],
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut F,
    ) -> bool {
        if k == sub.len() {
            return visit(image);
        }
        let cands: Vec<usize> = match pinned[k] {
            Some(a) => vec![a],
            None => (0..amb.len()).collect(),
        };
        for a in cands {
            if used[a] {
                continue;
            }
            let ok = (0..k).all(|t| sub.leq(t, k) == amb.leq(image[t], a) && sub.leq(k, t) == amb.leq(a, image[t]));
            if ok {
                image[k] = a;
                used[a] = true;
                if rec(sub, amb, pinned, k + 1, image, used, visit) {
                    return true;
                }
                used[a] = false;
            }
        }
        false
    }
    rec(sub, amb, &pinned, 0, &mut image, &mut used, &mut visit);
}

/// First order embedding `i: sub -> amb` (with `i_pins`) that admits a
/// retraction (with `p_pins`, given as ambient element to sub element).
pub fn search_retract(
    sub: &Arc<Poset>,
    amb: &Arc<Poset>,
    i_pins: &[(usize, usize)],
    p_pins: &[(usize, usize)],
) -> Result<(MonotoneMap, MonotoneMap)> {
    let mut found = None;
    for_each_embedding(sub, amb, i_pins, |image| {
        let i = MonotoneMap::raw(sub.clone(), amb.clone(), image.to_vec());
        let q = RetractionQuery { ambient: amb.clone(), pinned: p_pins.to_vec(), subobject: i.clone() };
        match retraction_search(&q) {
            Ok(p) => {
                found = Some((i, p));
                true
            }
            Err(_) => false,
        }
    });
    found.ok_or(Error::NoRetraction)
}

/// An isomorphism `a -> b` extending `pins` (element of `a`, element of `b`).
pub fn find_iso_pinned(a: &Poset, b: &Poset, pins: &[(usize, usize)]) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.strict_relation_count() != b.strict_relation_count() {
        return None;
    }
    let deg = |p: &Poset, x: usize| (p.down_row(x).count_ones(..), p.up_row(x).count_ones(..));
    let mut result = None;
    let mut pinned = vec![None; a.len()];
    for &(x, y) in pins {
        pinned[x] = Some(y);
    }
    let mut image = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: &Poset,
        b: &Poset,
        pinned: &[Option<usize>],
        deg: &dyn Fn(&Poset, usize) -> (usize, usize),
        k: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Option<Vec<usize>>,
    ) -> bool {
        if k == a.len() {
            *out = Some(image.clone());
            return true;
        }
        let cands: Vec<usize> = match pinned[k] {
            Some(y) => vec![y],
            None => (0..b.len()).collect(),
        };
        for y in cands {
            if used[y] || deg(a, k) != deg(b, y) {
                continue;
            }
            if (0..k).all(|t| a.leq(t, k) == b.leq(image[t], y) && a.leq(k, t) == b.leq(y, image[t])) {
                image[k] = y;
                used[y] = true;
                if rec(a, b, pinned, deg, k + 1, image, used, out) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    rec(a, b, &pinned, &deg, 0, &mut image, &mut used, &mut result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn retracts_onto_one_arm() {
        let v = Arc::new(Poset::from_index_covers(3, &[(0, 1), (0, 2)]).unwrap());
        let i = MonotoneMap::inclusion(v.clone(), &[0, 1]);
        let q = RetractionQuery { ambient: v.clone(), pinned: vec![], subobject: i.clone() };
        // the other arm may drop to the bottom; that is the least solution
        assert_eq!(retraction_search(&q).unwrap().image, vec![0, 1, 0]);
        let q = RetractionQuery { ambient: v, pinned: vec![(2, 1)], subobject: i };
        assert_eq!(retraction_search(&q).unwrap().image, vec![0, 1, 1]);
    }

    #[test]
    fn non_reflecting_embedding_is_ill_formed() {
        let two = Arc::new(Poset::antichain(2));
        let c = Arc::new(Poset::chain(1));
        let i = MonotoneMap::raw(two, c.clone(), vec![0, 1]);
        let r = retraction_search(&RetractionQuery { ambient: c, pinned: vec![], subobject: i });
        assert!(matches!(r, Err(Error::IllFormedQuery(_))));
    }

    #[test]
    fn pinned_automorphism() {
        let k = Poset::from_index_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let s = find_iso_pinned(&k, &k, &[(0, 1)]).unwrap();
        assert_eq!(s[0], 1);
        assert!(find_iso_pinned(&k, &k, &[(0, 2)]).is_none());
    }
}
