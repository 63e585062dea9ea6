//! Tree posets built layer by layer from the root.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::chains::arrow_minimum;
use super::{point, positional_iso, report_from_minima, Category, Theorem, WitnessReport};
use crate::certificate::{CofibrationCertificate, Leg};
use crate::colimit::Span;
use crate::error::{Error, Result};
use crate::poset::{MonotoneMap, Poset};
use crate::shapes::rank;

struct Layered {
    object: Arc<Poset>,
    layers: Vec<CofibrationCertificate>,
    /// Position of each tree element in `object`.
    pos: Vec<usize>,
}

/// Rank-layered construction. Layer `i` attaches, for every `j` of rank
/// `i`, one copy of `⊤̂ -> D` per element of rank `i+1` above `j`.
fn layered(t: &Arc<Poset>) -> Result<Layered> {
    if t.is_empty() {
        return Err(Error::NotATree);
    }
    let rk = rank(t)?;
    let root = t.minimal_elements()[0];
    let d_min = arrow_minimum();
    // where each tree element sits in the current stage
    let mut pos: Vec<Option<usize>> = vec![None; t.len()];
    pos[root] = Some(0);
    let mut x = point();
    let mut layers = Vec::new();
    for i in 0.. {
        let mut copies = Vec::new();
        for j in (0..t.len()).filter(|&j| rk[j] == i) {
            for k in (0..t.len()).filter(|&k| rk[k] == i + 1 && t.leq(j, k)) {
                copies.push((j, k));
            }
        }
        if copies.is_empty() {
            break;
        }
        let right = CofibrationCertificate::coproduct(vec![d_min.clone(); copies.len()]);
        let apex = right.conclusion.source.clone();
        let h = MonotoneMap::raw(apex, x.clone(), copies.iter().map(|&(j, _)| pos[j].expect("placed")).collect());
        let span = Span::new(h, right.conclusion.clone())?;
        let (c, r) = CofibrationCertificate::pushout(right, span, Leg::Right)?;
        for (n, &(_, k)) in copies.iter().enumerate() {
            pos[k] = Some(r.from_right.image[2 * n + 1]);
        }
        x = r.object;
        layers.push(c);
    }
    let pos = pos.into_iter().collect::<Option<Vec<usize>>>().ok_or(Error::NotATree)?;
    Ok(Layered { object: x, layers, pos })
}

/// The colimit of the layered construction, in its own numbering.
pub fn tree_colimit(t: &Arc<Poset>) -> Result<Arc<Poset>> {
    Ok(layered(t)?.object)
}

pub fn tree_witness(t: &Arc<Poset>) -> Result<WitnessReport> {
    let Layered { object: x, layers, pos } = layered(t)?;
    let root = t.minimal_elements()[0];
    let insertion = if layers.is_empty() {
        CofibrationCertificate::iso(MonotoneMap::identity(x.clone()))
    } else {
        CofibrationCertificate::seq_compose(layers)?
    };
    let mut image = vec![0; t.len()];
    for (e, &p) in pos.iter().enumerate() {
        image[p] = e;
    }
    let iso = positional_iso(&x, t, image)?;
    let mut minima = BTreeMap::new();
    minima.insert(root, insertion.then_iso(iso)?);
    report_from_minima(t, Theorem::Tree, "tree", Category::Structural, minima)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Rule;

    #[test]
    fn chain_has_two_layers() {
        let r = tree_witness(&Arc::new(Poset::chain(2))).unwrap();
        let c = &r.minimum_certificates[&0];
        let seq = if c.rule == Rule::SeqCompose { c } else { &c.premises[0] };
        assert_eq!(seq.premises.len(), 2);
    }

    #[test]
    fn root_with_three_children() {
        let t = Arc::new(Poset::from_index_covers(4, &[(0, 1), (0, 2), (0, 3)]).unwrap());
        let r = tree_witness(&t).unwrap();
        assert!(r.check().is_ok());
    }

    #[test]
    fn root_need_not_be_first() {
        let t = Arc::new(Poset::from_index_covers(5, &[(3, 0), (3, 4), (4, 1), (4, 2)]).unwrap());
        let r = tree_witness(&t).unwrap();
        assert!(r.minimum_certificates.contains_key(&3));
    }

    #[test]
    fn rejects_two_roots() {
        let v = Arc::new(Poset::from_index_covers(3, &[(0, 2), (1, 2)]).unwrap());
        assert!(matches!(tree_witness(&v), Err(Error::NotATree)));
    }
}
