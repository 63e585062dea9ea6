//! Chains by staged pushouts of `⊤̂ -> D` along top inclusions.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{point, positional_iso, report_from_minima, semilattice_witness, Category, Theorem, WitnessReport};
use crate::certificate::{CofibrationCertificate, Leg};
use crate::colimit::Span;
use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, Poset};
use crate::shapes::{chain_order, is_chain};

/// A finite truncation of the staged construction: `⊤̂ -> [stages]`.
#[derive(Clone, Debug)]
pub struct StagedChain {
    pub stages: usize,
    pub object: Arc<Poset>,
    /// One pushout certificate per stage, `X_k -> X_{k+1}`.
    pub steps: Vec<CofibrationCertificate>,
    /// The insertion of the first stage.
    pub insertion: CofibrationCertificate,
}

/// `⊤̂ -> D` at the minimum of the two-element chain.
pub(crate) fn arrow_minimum() -> CofibrationCertificate {
    let d = Arc::new(Poset::chain(1));
    semilattice_witness(&d).expect("two-element chain").minimum_certificates[&0].clone()
}

/// The first `stages` stages of the construction of ℕ.
pub fn omega_prefix(stages: usize) -> Result<StagedChain> {
    let d_min = arrow_minimum();
    let d = d_min.conclusion.target.clone();
    let mut x = point();
    let mut steps = Vec::with_capacity(stages);
    for k in 0..stages {
        let span = Span::new(MonotoneMap::point(x.clone(), k), MonotoneMap::point(d.clone(), 0))?;
        let (c, r) = CofibrationCertificate::pushout(d_min.clone(), span, Leg::Right)?;
        x = r.object;
        steps.push(c);
    }
    let insertion = if steps.is_empty() {
        CofibrationCertificate::iso(MonotoneMap::identity(x.clone()))
    } else {
        CofibrationCertificate::seq_compose(steps.clone())?
    };
    Ok(StagedChain { stages, object: x, steps, insertion })
}

/// Certificate for a finite chain through the staged construction; the
/// requested stage count may not exceed the number of covers.
pub fn chain_witness(p: &Arc<Poset>, stages: Option<usize>) -> Result<(WitnessReport, StagedChain)> {
    if !is_chain(p) || p.is_empty() {
        return Err(Error::NotAChain);
    }
    let full = p.len() - 1;
    let k = stages.unwrap_or(full);
    if k > full {
        return Err(Error::SizeLimit(format!("{k} stages requested for a chain with {} elements", p.len())));
    }
    let whole = omega_prefix(full)?;
    let order = chain_order(p)?;
    let iso = positional_iso(&whole.object, p, order)?;
    let c = whole.insertion.clone().then_iso(iso)?;
    let mut minima = BTreeMap::new();
    minima.insert(c.conclusion.image[0], c);
    let report = report_from_minima(p, Theorem::Cacof, "cacof(staged)", Category::Structural, minima)?;
    let truncated = if k == full { whole } else { omega_prefix(k)? };
    Ok((report, truncated))
}
