//! Witness builders: each turns a recognised shape into certificates for
//! cofibrancy and for every minimum inclusion.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::certificate::{verify, verify_cofibrant, CofibrantCertificate, CofibrationCertificate, Status, Via};
use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, Poset};
use crate::shapes::CatalogId;

mod chains;
mod dispatch;
mod search;
mod semilattice;
mod small;
mod tree;
mod zigzag;

pub use chains::{chain_witness, omega_prefix};
pub use dispatch::{analyze, Analysis};
pub use search::{find_iso_pinned, for_each_embedding, retraction_search, search_retract, RetractionQuery};
pub use semilattice::{bool_minus_top_witness, bopcof_maps, semilattice_witness};
pub use small::{construction_posets, glue_witness, hand_witness, lemma_retpush, small_poset_witness, RetpushResult};
pub use tree::{tree_colimit, tree_witness};
pub use zigzag::{chaincof_maps, zigzag_witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    Sliscof,
    Slinccof,
    Bopcof,
    Cacof,
    Chaincof,
    Zziscof,
    Tree,
    Retpush,
    Hand(CatalogId),
    Sd2Delta1,
    Lt3el,
    Posf,
    Coproduct,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem::Sliscof => write!(f, "sliscof"),
            Theorem::Slinccof => write!(f, "slinccof"),
            Theorem::Bopcof => write!(f, "bopcof"),
            Theorem::Cacof => write!(f, "cacof"),
            Theorem::Chaincof => write!(f, "chaincof"),
            Theorem::Zziscof => write!(f, "zziscof"),
            Theorem::Tree => write!(f, "tree"),
            Theorem::Retpush => write!(f, "retpush"),
            Theorem::Hand(id) => write!(f, "{id}"),
            Theorem::Sd2Delta1 => write!(f, "sd2-simplex"),
            Theorem::Lt3el => write!(f, "lt3el"),
            Theorem::Posf => write!(f, "posf"),
            Theorem::Coproduct => write!(f, "coproduct"),
        }
    }
}

/// The dispatcher's case split for small connected posets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Semilattice,
    Glued,
    Sd2Delta1,
    Hand,
    Structural,
    Coproduct,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Semilattice => "semilattice",
            Category::Glued => "glued",
            Category::Sd2Delta1 => "sd2D1",
            Category::Hand => "hand",
            Category::Structural => "structural",
            Category::Coproduct => "coproduct",
        })
    }
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub theorem: Theorem,
    /// Human-readable route, e.g. `sliscof(join)`.
    pub route: String,
    pub category: Category,
    pub certificate: CofibrantCertificate,
    /// Minimal element to a certificate for the inclusion `⊤̂ -> P` at it.
    pub minimum_certificates: BTreeMap<usize, CofibrationCertificate>,
    /// Deviations from the preferred route, in plain words.
    pub notes: Vec<String>,
}

impl WitnessReport {
    pub fn object(&self) -> &Arc<Poset> {
        &self.certificate.object
    }

    /// Status of the cofibrancy certificate and of every minimum inclusion.
    pub fn statuses(&self, strict: bool) -> (Status, Vec<(usize, Status)>) {
        let cof = verify_cofibrant(&self.certificate).status(strict);
        let mins = self.minimum_certificates.iter().map(|(&m, c)| (m, verify(c).status(strict))).collect();
        (cof, mins)
    }

    /// Checks everything and that every minimal element is covered.
    pub fn check(&self) -> Result<()> {
        let r = verify_cofibrant(&self.certificate);
        if let Some(f) = r.first_failure() {
            return Err(Error::Unverified(format!("cofibrancy: {f}")));
        }
        let p = self.object();
        for m in p.minimal_elements() {
            let c = self
                .minimum_certificates
                .get(&m)
                .ok_or_else(|| Error::Unverified(format!("no certificate for minimum {}", p.label(m))))?;
            if c.conclusion.image != vec![m] || !crate::poset::same_poset(&c.conclusion.target, p) {
                return Err(Error::Unverified(format!("certificate for {} has the wrong conclusion", p.label(m))));
            }
            if let Some(f) = verify(c).first_failure() {
                return Err(Error::Unverified(format!("minimum {}: {f}", p.label(m))));
            }
        }
        Ok(())
    }
}

pub(crate) fn point() -> Arc<Poset> {
    Arc::new(Poset::point())
}

/// `∅ -> P` from either form of cofibrancy certificate.
pub(crate) fn from_initial(c: &CofibrantCertificate) -> Result<CofibrationCertificate> {
    match &c.via {
        Via::FromInitial(p) => Ok(p.clone()),
        Via::FromTerminal(p) => CofibrationCertificate::then(CofibrationCertificate::empty_to_point(), p.clone()),
    }
}

/// Moves a partial witness on `x` along an isomorphism `x -> p`, then
/// covers any minima still missing by automorphisms of `p`.
pub(crate) fn transport(
    p: &Arc<Poset>,
    iso: &MonotoneMap,
    minima: &BTreeMap<usize, CofibrationCertificate>,
) -> Result<BTreeMap<usize, CofibrationCertificate>> {
    let iso = iso.with_target(p.clone());
    let mut out = BTreeMap::new();
    for (&m, c) in minima {
        out.insert(iso.image[m], c.clone().then_iso(iso.clone())?);
    }
    fill_by_symmetry(p, &mut out)?;
    Ok(out)
}

pub(crate) fn fill_by_symmetry(p: &Arc<Poset>, minima: &mut BTreeMap<usize, CofibrationCertificate>) -> Result<()> {
    for m in p.minimal_elements() {
        if minima.contains_key(&m) {
            continue;
        }
        let mut done = false;
        let known: Vec<usize> = minima.keys().copied().collect();
        for k in known {
            if let Some(sigma) = find_iso_pinned(p, p, &[(k, m)]) {
                let s = MonotoneMap::raw(p.clone(), p.clone(), sigma);
                let c = minima[&k].clone().then_iso(s)?;
                minima.insert(m, c);
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::NoWitness(format!("no certificate for the minimum {}", p.label(m))));
        }
    }
    Ok(())
}

/// A report whose cofibrancy comes from one of its minimum inclusions.
pub(crate) fn report_from_minima(
    p: &Arc<Poset>,
    theorem: Theorem,
    route: impl Into<String>,
    category: Category,
    minima: BTreeMap<usize, CofibrationCertificate>,
) -> Result<WitnessReport> {
    let first =
        minima.values().next().cloned().ok_or_else(|| Error::NoWitness("no minimum inclusion to start from".into()))?;
    let report = WitnessReport {
        theorem,
        route: route.into(),
        category,
        certificate: CofibrantCertificate { object: p.clone(), via: Via::FromTerminal(first) },
        minimum_certificates: minima,
        notes: vec![],
    };
    report.check()?;
    Ok(report)
}

/// The identity isomorphism `x -> p` read positionally, after checking it
/// really is one.
pub(crate) fn positional_iso(x: &Arc<Poset>, p: &Arc<Poset>, image: Vec<usize>) -> Result<MonotoneMap> {
    let f = MonotoneMap::raw(x.clone(), p.clone(), image);
    if !f.is_isomorphism() {
        return Err(Error::Unverified("constructed poset is not isomorphic to the input".into()));
    }
    Ok(f)
}

/// Any isomorphism `x -> p`.
pub(crate) fn some_iso(x: &Arc<Poset>, p: &Arc<Poset>) -> Result<MonotoneMap> {
    let image = crate::canonical::find_isomorphism(x, p)?
        .ok_or_else(|| Error::Unverified("constructed poset is not isomorphic to the input".into()))?;
    Ok(MonotoneMap::raw(x.clone(), p.clone(), image))
}
