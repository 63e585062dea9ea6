//! Checks against independent brute-force computations.

use std::collections::BTreeSet;
use std::sync::Arc;

use cofib::canonical::canonical_form;
use cofib::certfile::{deserialize, serialize, serialize_cofibrant, CertificateFile};
use cofib::certificate::{verify, verify_cofibrant};
use cofib::enumerate::{certify_all, enumerate};
use cofib::functors::{chains_poset, power_lattice, sd_simplex, Selection};
use cofib::shapes::{is_join_semilattice, is_meet_semilattice};
use cofib::witness::{retraction_search, RetractionQuery};
use cofib::{MonotoneMap, Poset};

/// Every permutation of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Labeled partial orders on `n` points as bit matrices of the strict
/// relation.
fn labeled_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut lt = vec![vec![false; n]; n];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            lt[a][b] = mask >> k & 1 == 1;
        }
        let antisym = (0..n).all(|a| (0..n).all(|b| !(lt[a][b] && lt[b][a])));
        let trans = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(lt[a][b] && lt[b][c]) || lt[a][c])));
        if antisym && trans {
            out.push(lt);
        }
    }
    out
}

fn orbit_key(lt: &[Vec<bool>], perms: &[Vec<usize>]) -> Vec<bool> {
    let n = lt.len();
    perms
        .iter()
        .map(|p| (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| lt[p[a]][p[b]]).collect::<Vec<bool>>())
        .min()
        .unwrap_or_default()
}

fn connected(lt: &[Vec<bool>]) -> bool {
    let n = lt.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(a) = stack.pop() {
        for b in 0..n {
            if !seen[b] && (lt[a][b] || lt[b][a]) {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn to_poset(lt: &[Vec<bool>]) -> Poset {
    let n = lt.len();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| lt[a][b]).map(move |b| (a, b))).collect();
    Poset::from_index_covers(n, &pairs).unwrap()
}

#[test]
fn enumeration_matches_labeled_brute_force() {
    let labeled_counts = [1, 3, 19, 219];
    for n in 1..=4 {
        let orders = labeled_orders(n);
        assert_eq!(orders.len(), labeled_counts[n - 1]);
        let perms = permutations(n);
        let mut classes = BTreeSet::new();
        let mut conn = BTreeSet::new();
        let mut keys = BTreeSet::new();
        for lt in &orders {
            let k = orbit_key(lt, &perms);
            if connected(lt) {
                conn.insert(k.clone());
            }
            if classes.insert(k) {
                keys.insert(canonical_form(&to_poset(lt)).unwrap());
            }
        }
        let ours = enumerate(n).unwrap();
        assert_eq!(ours.len(), classes.len(), "classes of size {n}");
        assert_eq!(ours.iter().filter(|e| e.representative.is_connected()).count(), conn.len());
        let our_keys: BTreeSet<_> = ours.iter().map(|e| e.canonical.clone()).collect();
        assert_eq!(our_keys, keys);
    }
}

/// Orbit-counting check beyond the brute-force range: the labeled orders
/// on `n` points are the sum of `n!/|Aut|` over the classes.
#[test]
fn orbit_sums_give_labeled_counts() {
    let labeled: [u64; 6] = [1, 3, 19, 219, 4231, 130023];
    for n in 1..=6 {
        let perms = permutations(n);
        let fact = perms.len() as u64;
        let mut sum = 0;
        for e in enumerate(n).unwrap() {
            let p = &e.representative;
            let aut = perms.iter().filter(|s| (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == p.leq(s[a], s[b])))).count()
                as u64;
            sum += fact / aut;
        }
        assert_eq!(sum, labeled[n - 1], "labeled orders on {n} points");
    }
}

#[test]
fn six_element_counts() {
    let entries = enumerate(6).unwrap();
    assert_eq!(entries.len(), 318);
    assert_eq!(entries.iter().filter(|e| e.representative.is_connected()).count(), 238);
}

#[test]
fn enumeration_is_duplicate_free() {
    for n in 1..=5 {
        let entries = enumerate(n).unwrap();
        let keys: BTreeSet<_> = entries.iter().map(|e| &e.canonical).collect();
        assert_eq!(keys.len(), entries.len());
    }
}

#[test]
fn canonical_form_is_permutation_invariant() {
    for n in 1..=6 {
        let perms = permutations(n);
        for e in enumerate(n).unwrap() {
            for s in &perms {
                assert_eq!(canonical_form(&e.representative.reorder(s)).unwrap(), e.canonical);
            }
        }
    }
}

/// Chains counted as subsets whose elements are pairwise comparable.
fn brute_chain_count(p: &Poset) -> usize {
    let n = p.len();
    (1u32..1 << n)
        .filter(|m| {
            let xs: Vec<usize> = (0..n).filter(|&x| m >> x & 1 == 1).collect();
            xs.iter().all(|&a| xs.iter().all(|&b| p.comparable(a, b)))
        })
        .count()
}

#[test]
fn chain_posets_match_subset_count() {
    for n in 1..=5 {
        for e in enumerate(n).unwrap() {
            assert_eq!(chains_poset(&e.representative).unwrap().poset.len(), brute_chain_count(&e.representative));
        }
    }
}

fn brute_join(p: &Poset, a: usize, b: usize) -> Option<usize> {
    let ups: Vec<usize> = (0..p.len()).filter(|&u| p.leq(a, u) && p.leq(b, u)).collect();
    ups.iter().copied().find(|&u| ups.iter().all(|&v| p.leq(u, v)))
}

#[test]
fn semilattice_predicates_match_definition() {
    for n in 1..=5 {
        for e in enumerate(n).unwrap() {
            let p = &e.representative;
            let op = p.opposite();
            let joins = (0..n).all(|a| (0..n).all(|b| brute_join(p, a, b).is_some()));
            let meets = (0..n).all(|a| (0..n).all(|b| brute_join(&op, a, b).is_some()));
            assert_eq!(is_join_semilattice(p), joins);
            assert_eq!(is_meet_semilattice(p), meets);
        }
    }
}

#[test]
fn subdivided_simplex_is_nonempty_faces() {
    for n in 0..=4 {
        let s = sd_simplex(n).unwrap();
        let faces = power_lattice(n + 1, Selection::Nonempty).unwrap();
        assert_eq!(canonical_form(&s).unwrap(), canonical_form(&faces.poset).unwrap());
    }
}

/// All monotone retractions of `i`, by running through every function on
/// the ambient poset.
fn all_retractions(amb: &Poset, sub: &Poset, i: &[usize]) -> Vec<Vec<usize>> {
    let n = amb.len();
    let mut img = vec![0; n];
    let mut out = Vec::new();
    loop {
        let splits = i.iter().enumerate().all(|(s, &a)| img[a] == s);
        if splits && (0..n).all(|a| (0..n).all(|b| !amb.leq(a, b) || sub.leq(img[a], img[b]))) {
            out.push(img.clone());
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            img[k] += 1;
            if img[k] < sub.len() {
                break;
            }
            img[k] = 0;
        }
    }
}

#[test]
fn retraction_search_on_small_ambients() {
    let mut checked = 0;
    for n in 3..=5 {
        for amb in enumerate(n).unwrap().into_iter().map(|e| e.representative) {
            for m in 2..n {
                for sub in enumerate(m).unwrap().into_iter().map(|e| e.representative) {
                    let mut found = None;
                    cofib::witness::for_each_embedding(&sub, &amb, &[], |img| {
                        found = Some(img.to_vec());
                        true
                    });
                    let Some(img) = found else { continue };
                    let i = MonotoneMap::raw(sub.clone(), amb.clone(), img.clone());
                    let q = RetractionQuery { ambient: amb.clone(), pinned: vec![], subobject: i };
                    let all = all_retractions(&amb, &sub, &img);
                    match retraction_search(&q) {
                        Ok(p) => assert_eq!(Some(&p.image), all.first()),
                        Err(_) => assert!(all.is_empty()),
                    }
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, 601);
}

#[test]
fn certificate_files_round_trip() {
    for n in 1..=4 {
        for e in certify_all(n).unwrap() {
            let w = e.witness.unwrap();
            let text = serialize_cofibrant(&w.certificate);
            match deserialize(&text).unwrap() {
                CertificateFile::Cofibrant { cert, key } => {
                    assert_eq!(cert, w.certificate);
                    assert_eq!(key, Some(e.canonical.clone()));
                    assert!(verify_cofibrant(&cert).passed());
                }
                other => panic!("wrong kind {other:?}"),
            }
            for c in w.minimum_certificates.values() {
                let text = serialize(c);
                assert_eq!(deserialize(&text).unwrap(), CertificateFile::Cofibration(c.clone()));
                assert_eq!(serialize(c), text);
                assert!(verify(c).passed());
            }
        }
    }
}

#[test]
fn diamond_route() {
    let d = Arc::new(Poset::from_index_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap());
    let a = cofib::witness::analyze(&d).unwrap();
    assert_eq!(a.report.route, "sliscof(join)");
    assert_eq!(a.report.minimum_certificates.len(), 1);
}
