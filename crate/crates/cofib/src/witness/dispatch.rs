//! Whole-poset analysis: classification plus the first route that yields
//! a verified witness.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::small::semilattice_route;
use super::{
    from_initial, positional_iso, small_poset_witness, tree_witness, zigzag_witness, Category, Theorem, WitnessReport,
};
use crate::certificate::{CofibrantCertificate, CofibrationCertificate, Via};
use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, Poset};
use crate::shapes::{classify, is_semilattice, is_tree_poset, is_zigzag, Classification};

#[derive(Clone, Debug)]
pub struct Analysis {
    pub classification: Classification,
    pub report: WitnessReport,
}

pub fn analyze(p: &Arc<Poset>) -> Result<Analysis> {
    let classification = classify(p);
    let report = witness(p)?;
    Ok(Analysis { classification, report })
}

fn witness(p: &Arc<Poset>) -> Result<WitnessReport> {
    if p.is_empty() {
        let id = CofibrationCertificate::iso(MonotoneMap::identity(p.clone()));
        return Ok(WitnessReport {
            theorem: Theorem::Coproduct,
            route: "empty".into(),
            category: Category::Coproduct,
            certificate: CofibrantCertificate { object: p.clone(), via: Via::FromInitial(id) },
            minimum_certificates: BTreeMap::new(),
            notes: vec![],
        });
    }
    if !p.is_connected() {
        return coproduct_witness(p);
    }
    if p.len() <= 5 {
        return small_poset_witness(p);
    }
    if is_semilattice(p) {
        if let Ok(r) = semilattice_route(p) {
            return Ok(r);
        }
    }
    if is_zigzag(p) {
        return zigzag_witness(p);
    }
    if is_tree_poset(p) {
        return tree_witness(p);
    }
    Err(Error::NoWitness(format!("{} elements outside the structural classes", p.len())))
}

/// Components certified separately and combined by the coproduct rule.
fn coproduct_witness(p: &Arc<Poset>) -> Result<WitnessReport> {
    let comps = p.connected_components();
    let mut parts = Vec::with_capacity(comps.len());
    for keep in &comps {
        let c = Arc::new(p.induced(keep));
        parts.push(witness(&c)?);
    }
    let image: Vec<usize> = comps.iter().flatten().copied().collect();
    let initials: Vec<CofibrationCertificate> =
        parts.iter().map(|r| from_initial(&r.certificate)).collect::<Result<_>>()?;
    let sum = CofibrationCertificate::coproduct(initials.clone());
    let iso = positional_iso(&sum.conclusion.target, p, image)?;
    let cof = sum.then_iso(iso.clone())?;
    let mut minima = BTreeMap::new();
    for (j, part) in parts.iter().enumerate() {
        let mut pieces = initials.clone();
        pieces[j] = CofibrationCertificate::iso(MonotoneMap::identity(part.object().clone()));
        let injection = CofibrationCertificate::coproduct(pieces);
        for (&m, c) in &part.minimum_certificates {
            let c = CofibrationCertificate::then(c.clone(), injection.clone())?.then_iso(iso.clone())?;
            minima.insert(comps[j][m], c);
        }
    }
    let routes: Vec<&str> = parts.iter().map(|r| r.route.as_str()).collect();
    let report = WitnessReport {
        theorem: Theorem::Coproduct,
        route: format!("coproduct({})", routes.join(", ")),
        category: Category::Coproduct,
        certificate: CofibrantCertificate { object: p.clone(), via: Via::FromInitial(cof) },
        minimum_certificates: minima,
        notes: vec![],
    };
    report.check()?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antichain_by_coproduct() {
        let a = analyze(&Arc::new(Poset::antichain(3))).unwrap();
        assert_eq!(a.report.category, Category::Coproduct);
        assert_eq!(a.report.minimum_certificates.len(), 3);
    }

    #[test]
    fn empty_poset() {
        let a = analyze(&Arc::new(Poset::empty())).unwrap();
        assert!(a.report.check().is_ok());
    }

    #[test]
    fn long_fence_goes_structural() {
        let z = Arc::new(Poset::from_index_covers(7, &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (6, 5)]).unwrap());
        assert_eq!(analyze(&z).unwrap().report.theorem, Theorem::Zziscof);
    }

    #[test]
    fn crown_has_no_route() {
        // six-element crown: every minimum below two of three maxima
        let c = Arc::new(Poset::from_index_covers(6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)]).unwrap());
        assert!(matches!(analyze(&c), Err(Error::NoWitness(_))));
    }
}
