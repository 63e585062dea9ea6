//! Pushouts, coproducts of maps and finite sequential colimits.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::poset::{compose, coproduct, is_monotone, same_poset, transitive_closure, MonotoneMap, Poset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub apex: Arc<Poset>,
    pub left: MonotoneMap,
    pub right: MonotoneMap,
}

impl Span {
    pub fn new(left: MonotoneMap, right: MonotoneMap) -> Result<Span> {
        if !same_poset(&left.source, &right.source) {
            return Err(Error::CompositionMismatch("span legs have different sources".into()));
        }
        Ok(Span { apex: left.source.clone(), left, right })
    }
}

#[derive(Clone, Debug)]
pub struct PushoutResult {
    pub span: Span,
    pub object: Arc<Poset>,
    pub from_left: MonotoneMap,
    pub from_right: MonotoneMap,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Pushout of `A <- apex -> B`. The result lists the classes of `A ⊔ B`
/// ordered by their least member, so an injective right leg keeps `A`'s
/// numbering as a prefix.
pub fn pushout(s: &Span) -> Result<PushoutResult> {
    let (a, b) = (&s.left.target, &s.right.target);
    for leg in [&s.left, &s.right] {
        leg.check_shape()?;
        if !same_poset(&leg.source, &s.apex) {
            return Err(Error::CompositionMismatch("span leg does not start at the apex".into()));
        }
    }
    let na = a.len();
    let total = na + b.len();
    let mut parent: Vec<usize> = (0..total).collect();
    for x in 0..s.apex.len() {
        let ra = find(&mut parent, s.left.image[x]);
        let rb = find(&mut parent, na + s.right.image[x]);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent[hi] = lo;
        }
    }
    let mut class_of = vec![usize::MAX; total];
    let mut reps = Vec::new();
    for u in 0..total {
        let r = find(&mut parent, u);
        if class_of[r] == usize::MAX {
            class_of[r] = reps.len();
            reps.push(u);
        }
        class_of[u] = class_of[r];
    }
    let m = reps.len();
    let mut up = vec![FixedBitSet::with_capacity(m); m];
    for (c, row) in up.iter_mut().enumerate() {
        row.insert(c);
    }
    for x in 0..na {
        for y in a.up_row(x).ones() {
            up[class_of[x]].insert(class_of[y]);
        }
    }
    for x in 0..b.len() {
        for y in b.up_row(x).ones() {
            up[class_of[na + x]].insert(class_of[na + y]);
        }
    }
    transitive_closure(&mut up);
    for c in 0..m {
        for d in up[c].ones() {
            if d != c && up[d].contains(c) {
                return Err(Error::NotAPoset(format!("classes {c} and {d} are identified by the preorder")));
            }
        }
    }
    let labels =
        reps.iter().map(|&u| if u < na { a.label(u).to_string() } else { b.label(u - na).to_string() }).collect();
    let object = Arc::new(Poset::from_up_rows(labels, up)?);
    let from_left = MonotoneMap::raw(a.clone(), object.clone(), class_of[..na].to_vec());
    let from_right = MonotoneMap::raw(b.clone(), object.clone(), class_of[na..].to_vec());
    Ok(PushoutResult { span: s.clone(), object, from_left, from_right })
}

/// The unique `u` out of the pushout with `u ∘ from_left = cocone_left`
/// and `u ∘ from_right = cocone_right`.
pub fn mediating_map(r: &PushoutResult, cocone_left: &MonotoneMap, cocone_right: &MonotoneMap) -> Result<MonotoneMap> {
    if !same_poset(&cocone_left.source, &r.from_left.source)
        || !same_poset(&cocone_right.source, &r.from_right.source)
        || !same_poset(&cocone_left.target, &cocone_right.target)
    {
        return Err(Error::NotACocone("cocone legs have the wrong shape".into()));
    }
    if compose(cocone_left, &r.span.left)? != compose(cocone_right, &r.span.right)? {
        return Err(Error::NotACocone("cocone does not commute over the span".into()));
    }
    let mut image = vec![usize::MAX; r.object.len()];
    for (leg, cocone) in [(&r.from_left, cocone_left), (&r.from_right, cocone_right)] {
        for (x, &c) in leg.image.iter().enumerate() {
            let want = cocone.image[x];
            if image[c] != usize::MAX && image[c] != want {
                return Err(Error::NotACocone(format!("class {c} has two images")));
            }
            image[c] = want;
        }
    }
    let u = MonotoneMap::raw(r.object.clone(), cocone_left.target.clone(), image);
    if !is_monotone(&u) {
        return Err(Error::NotMonotone("mediating map".into()));
    }
    Ok(u)
}

/// The induced map between coproducts of sources and targets.
pub fn coproduct_of_maps(fs: &[MonotoneMap]) -> MonotoneMap {
    let sources: Vec<_> = fs.iter().map(|f| f.source.clone()).collect();
    let targets: Vec<_> = fs.iter().map(|f| f.target.clone()).collect();
    let (src, _) = coproduct(&sources);
    let (tgt, _) = coproduct(&targets);
    let mut image = Vec::with_capacity(src.len());
    let mut offset = 0;
    for f in fs {
        image.extend(f.image.iter().map(|&y| offset + y));
        offset += f.target.len();
    }
    MonotoneMap::raw(src, tgt, image)
}

/// Colimit of `X_0 -> X_1 -> ... -> X_N` given by its stage maps; returns
/// `X_N` with the insertions of every `X_k`.
pub fn sequential_colimit(stages: &[MonotoneMap]) -> Result<(Arc<Poset>, Vec<MonotoneMap>)> {
    let last = stages.last().ok_or_else(|| Error::CompositionMismatch("sequential colimit of no stages".into()))?;
    for w in stages.windows(2) {
        if !same_poset(&w[0].target, &w[1].source) {
            return Err(Error::CompositionMismatch("consecutive stages do not compose".into()));
        }
    }
    let top = last.target.clone();
    let mut insertions = vec![MonotoneMap::identity(top.clone())];
    for f in stages.iter().rev() {
        let next = compose(insertions.last().expect("nonempty"), f)?;
        insertions.push(next);
    }
    insertions.reverse();
    Ok((top, insertions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt() -> Arc<Poset> {
        Arc::new(Poset::point())
    }

    #[test]
    fn wedge_of_two_arrows() {
        let d = Arc::new(Poset::chain(1));
        let s = Span::new(MonotoneMap::point(d.clone(), 0), MonotoneMap::point(d, 0)).unwrap();
        let r = pushout(&s).unwrap();
        assert_eq!(r.object.len(), 3);
        assert_eq!(r.object.minimal_elements().len(), 1);
        assert_eq!(r.object.maximal_elements().len(), 2);
    }

    #[test]
    fn cycle_is_rejected() {
        // identify the two minima of x0 < x1 > x2 with 1 and 0 of [1]
        let z = Arc::new(Poset::from_index_covers(3, &[(0, 1), (2, 1)]).unwrap());
        let two = Arc::new(Poset::antichain(2));
        let c = Arc::new(Poset::chain(1));
        let left = MonotoneMap::raw(two.clone(), z, vec![0, 1]);
        let right = MonotoneMap::raw(two, c, vec![1, 0]);
        let r = pushout(&Span::new(left, right).unwrap());
        assert!(matches!(r, Err(Error::NotAPoset(_))));
    }

    #[test]
    fn own_legs_mediate_to_identity() {
        let d = Arc::new(Poset::chain(1));
        let s = Span::new(MonotoneMap::point(d.clone(), 1), MonotoneMap::point(d, 0)).unwrap();
        let r = pushout(&s).unwrap();
        let u = mediating_map(&r, &r.from_left, &r.from_right).unwrap();
        assert!(u.is_identity());
        let bad = MonotoneMap::raw(r.from_right.source.clone(), r.object.clone(), vec![2, 2]);
        assert!(matches!(mediating_map(&r, &r.from_left, &bad), Err(Error::NotACocone(_))));
    }

    #[test]
    fn coproduct_of_maps_examples() {
        let d = Arc::new(Poset::chain(1));
        let f = MonotoneMap::point(d, 0);
        let g = coproduct_of_maps(&[f.clone(), f]);
        assert_eq!(g.source.len(), 2);
        assert_eq!(g.image, vec![0, 2]);
        let e = coproduct_of_maps(&[]);
        assert!(e.source.is_empty() && e.target.is_empty());
        let _ = pt();
    }

    #[test]
    fn sequential_examples() {
        assert!(sequential_colimit(&[]).is_err());
        let f = MonotoneMap::point(Arc::new(Poset::chain(1)), 0);
        let (top, ins) = sequential_colimit(std::slice::from_ref(&f)).unwrap();
        assert_eq!(top.len(), 2);
        assert_eq!(ins[0], f);
    }
}
