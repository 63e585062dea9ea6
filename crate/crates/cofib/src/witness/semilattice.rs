//! Finite semilattices as retracts of power-set lattices.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Category, Theorem, WitnessReport};
use crate::certificate::{CofibrantCertificate, CofibrationCertificate, Via};
use crate::error::{Error, Result};
use crate::functors::{chains_poset, power_lattice, Selection};
use crate::poset::{is_monotone, MonotoneMap, Poset};
use crate::shapes::{is_join_semilattice, is_meet_semilattice, join_all, meet_all};

/// Largest `n` accepted by [`bool_minus_top_witness`].
pub const BOOL_MINUS_TOP_LIMIT: usize = 4;

/// `i: P -> P(P)∖∅` (principal down-sets) and `p = ⋁` for a join semilattice.
fn join_retraction(p: &Arc<Poset>) -> Result<(MonotoneMap, MonotoneMap)> {
    let s = power_lattice(p.len(), Selection::Nonempty)?;
    let i: Vec<usize> = (0..p.len()).map(|x| s.index_of(&p.down_set(x)).expect("nonempty")).collect();
    let mut back = Vec::with_capacity(s.members.len());
    for a in &s.members {
        back.push(join_all(p, a).ok_or(Error::NotASemilattice)?);
    }
    let i = MonotoneMap::raw(p.clone(), s.poset.clone(), i);
    let pr = MonotoneMap::raw(s.poset, p.clone(), back);
    assert_retraction(&i, &pr);
    Ok((i, pr))
}

/// `i(x) = P ∖ ↑x` into `P(P)∖P` and `p(A) = ⋀(P ∖ A)`, the complement
/// form of the dual construction.
fn meet_retraction(p: &Arc<Poset>) -> Result<(MonotoneMap, MonotoneMap)> {
    let n = p.len();
    let t = power_lattice(n, Selection::MinusTop)?;
    let complement = |a: &[usize]| -> Vec<usize> { (0..n).filter(|x| !a.contains(x)).collect() };
    let i: Vec<usize> = (0..n).map(|x| t.index_of(&complement(&p.up_set(x))).expect("proper subset")).collect();
    let mut back = Vec::with_capacity(t.members.len());
    for a in &t.members {
        back.push(meet_all(p, &complement(a)).ok_or(Error::NotASemilattice)?);
    }
    let i = MonotoneMap::raw(p.clone(), t.poset.clone(), i);
    let pr = MonotoneMap::raw(t.poset, p.clone(), back);
    assert_retraction(&i, &pr);
    Ok((i, pr))
}

fn assert_retraction(i: &MonotoneMap, p: &MonotoneMap) {
    assert!(is_monotone(i) && is_monotone(p), "semilattice retraction maps are monotone");
    assert!(i.is_order_embedding());
    assert!((0..i.source.len()).all(|x| p.image[i.image[x]] == x), "p ∘ i = id");
}

pub fn semilattice_witness(p: &Arc<Poset>) -> Result<WitnessReport> {
    if p.is_empty() {
        return Err(Error::NotASemilattice);
    }
    if p.len() == 1 {
        let id = CofibrationCertificate::iso(MonotoneMap::identity(p.clone()));
        let mut minima = BTreeMap::new();
        minima.insert(0, id.clone());
        return Ok(WitnessReport {
            theorem: Theorem::Sliscof,
            route: "sliscof(point)".into(),
            category: Category::Semilattice,
            certificate: CofibrantCertificate { object: p.clone(), via: Via::FromTerminal(id) },
            minimum_certificates: minima,
            notes: vec![],
        });
    }
    if is_join_semilattice(p) {
        return join_witness(p);
    }
    if is_meet_semilattice(p) {
        return meet_witness(p);
    }
    Err(Error::NotASemilattice)
}

fn join_witness(p: &Arc<Poset>) -> Result<WitnessReport> {
    let (i, pr) = join_retraction(p)?;
    let dim = p.len() - 1;
    let to_simplex = CofibrationCertificate::then(
        CofibrationCertificate::empty_to_point(),
        CofibrationCertificate::sd_vertex(dim, 0)?,
    )?;
    let cof = CofibrationCertificate::retract_same_source(to_simplex, i.clone(), pr.clone())?;
    let mut minima = BTreeMap::new();
    for m in p.minimal_elements() {
        let c = CofibrationCertificate::retract_same_source(
            CofibrationCertificate::sd_vertex(dim, m)?,
            i.clone(),
            pr.clone(),
        )?;
        minima.insert(m, c);
    }
    let report = WitnessReport {
        theorem: Theorem::Sliscof,
        route: "sliscof(join)".into(),
        category: Category::Semilattice,
        certificate: CofibrantCertificate { object: p.clone(), via: Via::FromInitial(cof) },
        minimum_certificates: minima,
        notes: vec![],
    };
    report.check()?;
    Ok(report)
}

/// The meet case goes through `P(P)∖P` and its minimum inclusion, so it
/// inherits whatever [`bool_minus_top_witness`] delivers.
fn meet_witness(p: &Arc<Poset>) -> Result<WitnessReport> {
    let (i, pr) = meet_retraction(p)?;
    let n = p.len();
    if n - 1 > BOOL_MINUS_TOP_LIMIT {
        return Err(Error::SizeLimit(format!("meet semilattice of {n} elements needs P([{}])∖[{}]", n - 1, n - 1)));
    }
    let base = bool_minus_top_witness(n - 1)?;
    let at_empty = base.minimum_certificates[&0].clone();
    let bottom = CofibrationCertificate::retract_same_source(at_empty, i, pr)?;
    let m = bottom.conclusion.image[0];
    let mut minima = BTreeMap::new();
    minima.insert(m, bottom.clone());
    let report = WitnessReport {
        theorem: Theorem::Slinccof,
        route: "sliscof(meet)".into(),
        category: Category::Semilattice,
        certificate: CofibrantCertificate { object: p.clone(), via: Via::FromTerminal(bottom) },
        minimum_certificates: minima,
        notes: vec![],
    };
    report.check()?;
    Ok(report)
}

/// The prefix-chain map `i: T -> ξ(T)` and the union map `p: ξ(T) -> T`
/// for `T = P([n])∖[n]`, exactly as written. `i` is returned unchecked.
pub fn bopcof_maps(n: usize) -> Result<(MonotoneMap, MonotoneMap)> {
    if n > BOOL_MINUS_TOP_LIMIT {
        return Err(Error::SizeLimit(format!("P([{n}])∖[{n}] is beyond desk scale")));
    }
    let t = power_lattice(n + 1, Selection::MinusTop)?;
    let xi = chains_poset(&t.poset)?;
    let mut i = Vec::with_capacity(t.members.len());
    for a in &t.members {
        let chain: Vec<usize> = (0..=a.len()).map(|k| t.index_of(&a[..k]).expect("prefix is proper")).collect();
        i.push(xi.index_of(&chain).expect("prefixes form a chain"));
    }
    let mut p = Vec::with_capacity(xi.chains.len());
    for c in &xi.chains {
        let mut u: Vec<usize> = c.iter().flat_map(|&s| t.members[s].iter().copied()).collect();
        u.sort_unstable();
        u.dedup();
        p.push(t.index_of(&u).expect("a chain's union is its largest member"));
    }
    Ok((MonotoneMap::raw(t.poset.clone(), xi.poset.clone(), i), MonotoneMap::raw(xi.poset.clone(), t.poset, p)))
}

/// Certificate for `⊤̂ -> P([n])∖[n]` at `∅`: a retract of the single
/// subdivision of that inclusion. The report is not checked here; for
/// `n ≥ 2` the prefix-chain map is not monotone and verification fails.
pub fn bool_minus_top_witness(n: usize) -> Result<WitnessReport> {
    let (i, p) = bopcof_maps(n)?;
    let t = i.source.clone();
    let base = MonotoneMap::point(t.clone(), 0);
    let c = CofibrationCertificate::retract_same_source(CofibrationCertificate::sd_mono(base)?, i, p)?;
    let mut minima = BTreeMap::new();
    minima.insert(0, c.clone());
    Ok(WitnessReport {
        theorem: Theorem::Bopcof,
        route: "bopcof".into(),
        category: Category::Structural,
        certificate: CofibrantCertificate { object: t, via: Via::FromTerminal(c) },
        minimum_certificates: minima,
        notes: vec![],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_cofibrant, Status};

    fn diamond() -> Arc<Poset> {
        Arc::new(Poset::from_index_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap())
    }

    #[test]
    fn diamond_verifies() {
        let r = semilattice_witness(&diamond()).unwrap();
        assert_eq!(r.route, "sliscof(join)");
        assert!(verify_cofibrant(&r.certificate).passed());
        assert_eq!(r.minimum_certificates.len(), 1);
    }

    #[test]
    fn bottom_goes_to_a_singleton() {
        let (i, _) = join_retraction(&diamond()).unwrap();
        let s = power_lattice(4, Selection::Nonempty).unwrap();
        assert_eq!(s.members[i.image[0]], vec![0]);
    }

    #[test]
    fn prefix_chain_example() {
        let (i, p) = bopcof_maps(2).unwrap();
        assert_eq!(i.source.len(), 7);
        let t = power_lattice(3, Selection::MinusTop).unwrap();
        let xi = chains_poset(&t.poset).unwrap();
        let a = t.index_of(&[0, 2]).unwrap();
        let want: Vec<usize> = [&[][..], &[0], &[0, 2]].iter().map(|s| t.index_of(s).unwrap()).collect();
        assert_eq!(xi.index_of(&want), Some(i.image[a]));
        assert!((0..7).all(|x| p.image[i.image[x]] == x));
    }

    #[test]
    fn bool_minus_top_of_one() {
        let r = bool_minus_top_witness(1).unwrap();
        assert!(r.check().is_ok());
        assert_eq!(r.statuses(true).0, Status::Conditional);
        // the meet route on the same poset needs the ground set of size 3
        let lambda = r.object().clone();
        assert!(matches!(semilattice_witness(&lambda), Err(Error::Unverified(_))));
    }

    #[test]
    fn prefix_chain_is_not_monotone_from_two_on() {
        let (i, _) = bopcof_maps(2).unwrap();
        assert!(!is_monotone(&i));
        assert!(bool_minus_top_witness(2).unwrap().check().is_err());
    }
}
