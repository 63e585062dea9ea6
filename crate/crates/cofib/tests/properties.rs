use std::sync::Arc;

use proptest::prelude::*;

use cofib::canonical::canonical_form;
use cofib::colimit::{coproduct_of_maps, pushout, Span};
use cofib::functors::{chains_map, chains_poset, power_lattice, sd_simplex, Selection};
use cofib::shapes::{is_chain, is_join_semilattice, is_meet_semilattice, is_tree_poset, is_zigzag};
use cofib::witness::{
    retraction_search, semilattice_witness, tree_colimit, tree_witness, zigzag_witness, RetractionQuery,
};
use cofib::{compose, is_monotone, MonotoneMap, Poset};

fn order_axioms(p: &Poset) -> bool {
    let n = p.len();
    (0..n).all(|a| p.leq(a, a))
        && (0..n).all(|a| (0..n).all(|b| a == b || !(p.leq(a, b) && p.leq(b, a))))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(p.leq(a, b) && p.leq(b, c)) || p.leq(a, c))))
}

/// A random poset: a random DAG along a shuffled order.
fn poset(max: usize) -> impl Strategy<Value = Arc<Poset>> {
    (1..=max)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, perm)| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let covers: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Arc::new(Poset::from_index_covers(n, &covers).unwrap().reorder(&perm))
        })
}

/// Monotone map `s -> t` found by backtracking, with candidate values
/// tried in an order rotated by the seed. Constant maps always exist.
fn monotone(s: &Arc<Poset>, t: &Arc<Poset>, seed: &[usize]) -> MonotoneMap {
    fn go(s: &Poset, t: &Poset, seed: &[usize], k: usize, img: &mut Vec<usize>) -> bool {
        if k == s.len() {
            return true;
        }
        let start = seed[k % seed.len()];
        for j in 0..t.len() {
            let c = (start + j) % t.len();
            if (0..k).all(|y| (!s.leq(y, k) || t.leq(img[y], c)) && (!s.leq(k, y) || t.leq(c, img[y]))) {
                img.push(c);
                if go(s, t, seed, k + 1, img) {
                    return true;
                }
                img.pop();
            }
        }
        false
    }
    let mut img = Vec::new();
    assert!(go(s, t, seed, 0, &mut img));
    MonotoneMap::raw(s.clone(), t.clone(), img)
}

fn seeds() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 8)
}

fn tree(max: usize) -> impl Strategy<Value = Arc<Poset>> {
    (1..=max)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<prop::sample::Index>(), n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, parents, perm)| {
            let covers: Vec<(usize, usize)> = (1..n).map(|k| (perm[parents[k].index(k)], perm[k])).collect();
            Arc::new(Poset::from_index_covers(n, &covers).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructions_are_posets(p in poset(6)) {
        prop_assert!(order_axioms(&p));
        prop_assert!(order_axioms(&p.opposite()));
        let keep: Vec<usize> = (0..p.len()).step_by(2).collect();
        prop_assert!(order_axioms(&p.induced(&keep)));
        prop_assert!(order_axioms(&chains_poset(&p).unwrap().poset));
    }

    #[test]
    fn canonical_form_ignores_numbering(p in poset(6), perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let perm: Vec<usize> = perm.into_iter().filter(|&x| x < p.len()).collect();
        prop_assert_eq!(canonical_form(&p.reorder(&perm)).unwrap(), canonical_form(&p).unwrap());
    }

    #[test]
    fn canonical_form_separates(a in poset(5), b in poset(5)) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        let iso = cofib::canonical::find_isomorphism(&a, &b).unwrap().is_some();
        prop_assert_eq!(same, iso);
    }

    #[test]
    fn composition_laws(a in poset(5), b in poset(5), c in poset(5), d in poset(5), s in seeds()) {
        let f = monotone(&a, &b, &s);
        let g = monotone(&b, &c, &s[1..]);
        let h = monotone(&c, &d, &s[2..]);
        prop_assert!(is_monotone(&f) && is_monotone(&g) && is_monotone(&h));
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose(&MonotoneMap::identity(b.clone()), &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&f, &MonotoneMap::identity(a.clone())).unwrap(), f);
    }

    #[test]
    fn opposite_is_an_involution(p in poset(6)) {
        let op = p.opposite();
        prop_assert_eq!(&op.opposite(), &*p);
        for x in 0..p.len() {
            prop_assert_eq!(op.down_set(x), p.up_set(x));
        }
    }

    #[test]
    fn chains_map_is_functorial(a in poset(5), b in poset(5), c in poset(5), s in seeds()) {
        let f = monotone(&a, &b, &s);
        let g = monotone(&b, &c, &s[3..]);
        let whole = chains_map(&compose(&g, &f).unwrap()).unwrap();
        let parts = compose(&chains_map(&g).unwrap(), &chains_map(&f).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn pushout_square(apex in poset(4), a in poset(5), b in poset(5), s in seeds()) {
        let l = monotone(&apex, &a, &s);
        let r = monotone(&apex, &b, &s[2..]);
        let span = Span::new(l.clone(), r.clone()).unwrap();
        if let Ok(po) = pushout(&span) {
            prop_assert!(order_axioms(&po.object));
            prop_assert_eq!(compose(&po.from_left, &l).unwrap(), compose(&po.from_right, &r).unwrap());
            let mut hit = vec![false; po.object.len()];
            po.from_left.image.iter().chain(&po.from_right.image).for_each(|&c| hit[c] = true);
            prop_assert!(hit.into_iter().all(|h| h));
        }
    }

    #[test]
    fn pushout_keeps_the_far_side(apex in poset(3), a in poset(5), b in poset(5)) {
        // an injective left leg into a: the pushout contains a copy of b
        let mut img = None;
        cofib::witness::for_each_embedding(&apex, &a, &[], |e| { img = Some(e.to_vec()); true });
        prop_assume!(img.is_some());
        let l = MonotoneMap::raw(apex.clone(), a.clone(), img.unwrap());
        let r = monotone(&apex, &b, &[0, 3, 1, 4]);
        if let Ok(po) = pushout(&Span::new(l, r).unwrap()) {
            prop_assert!(po.from_right.is_injective());
            let copy = po.object.induced(&po.from_right.image);
            prop_assert_eq!(canonical_form(&copy).unwrap(), canonical_form(&b).unwrap());
        }
    }

    #[test]
    fn coproducts_of_maps_compose(a in poset(3), b in poset(3), c in poset(3), x in poset(3), y in poset(3), z in poset(3), s in seeds()) {
        let (f1, g1) = (monotone(&a, &b, &s), monotone(&b, &c, &s[1..]));
        let (f2, g2) = (monotone(&x, &y, &s[2..]), monotone(&y, &z, &s[3..]));
        let whole = coproduct_of_maps(&[compose(&g1, &f1).unwrap(), compose(&g2, &f2).unwrap()]);
        let g = coproduct_of_maps(&[g1, g2]);
        let f = coproduct_of_maps(&[f1, f2]).with_target(g.source.clone());
        prop_assert_eq!(whole, compose(&g, &f).unwrap());
    }

    #[test]
    fn shape_implications(p in poset(6)) {
        if is_chain(&p) {
            prop_assert!(is_join_semilattice(&p) && is_meet_semilattice(&p) && is_tree_poset(&p) && is_zigzag(&p));
        }
        if is_tree_poset(&p) {
            prop_assert_eq!(p.covers().len(), p.len() - 1);
        }
    }

    #[test]
    fn retraction_search_is_sound(amb in poset(7), sub in poset(4)) {
        let mut img = None;
        cofib::witness::for_each_embedding(&sub, &amb, &[], |e| { img = Some(e.to_vec()); true });
        prop_assume!(img.is_some());
        let i = MonotoneMap::raw(sub.clone(), amb.clone(), img.unwrap());
        let q = RetractionQuery { ambient: amb.clone(), pinned: vec![], subobject: i.clone() };
        if let Ok(p) = retraction_search(&q) {
            prop_assert!(is_monotone(&p));
            prop_assert!(compose(&p, &i).unwrap().is_identity());
        }
    }

    #[test]
    fn trees_rebuild(t in tree(15)) {
        prop_assert_eq!(canonical_form(&tree_colimit(&t).unwrap()).unwrap(), canonical_form(&t).unwrap());
        prop_assert!(tree_witness(&t).unwrap().check().is_ok());
    }

    #[test]
    fn chains_agree_across_routes(n in 1usize..7) {
        let c = Arc::new(Poset::chain(n - 1));
        let z = zigzag_witness(&c).unwrap();
        let s = semilattice_witness(&c).unwrap();
        prop_assert!(z.check().is_ok() && s.check().is_ok());
        let target = |r: &cofib::witness::WitnessReport| canonical_form(&r.minimum_certificates.values().next().unwrap().conclusion.target).unwrap();
        prop_assert_eq!(target(&z), target(&s));
    }
}

#[test]
fn simplex_subdivisions() {
    for n in 0..=4 {
        let s = sd_simplex(n).unwrap();
        let c = chains_poset(&Arc::new(Poset::chain(n))).unwrap();
        assert_eq!(canonical_form(&s).unwrap(), canonical_form(&c.poset).unwrap());
        assert_eq!(s.minimal_elements().len(), n + 1);
        assert_eq!(s.maximal_elements().len(), 1);
        assert!(s.minimal_elements().iter().all(|&m| s.down_set(m).len() == 1));
    }
}

#[test]
fn complement_dualizes_subsets() {
    for n in 1..=5 {
        let top = power_lattice(n, Selection::MinusTop).unwrap();
        let ne = power_lattice(n, Selection::Nonempty).unwrap();
        let image: Vec<usize> = top
            .members
            .iter()
            .map(|a| ne.index_of(&(0..n).filter(|x| !a.contains(x)).collect::<Vec<_>>()).unwrap())
            .collect();
        let op = Arc::new(ne.poset.opposite());
        let f = MonotoneMap::raw(top.poset.clone(), op, image);
        assert!(f.is_isomorphism());
    }
}
