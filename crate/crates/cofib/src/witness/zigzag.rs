//! Finite zigzags: single-maximum pieces as retracts of subdivided
//! simplices, glued at their local minima.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{positional_iso, report_from_minima, semilattice_witness, Category, Theorem, WitnessReport};
use crate::certificate::{CofibrationCertificate, Leg};
use crate::colimit::Span;
use crate::error::{Error, Result};
use crate::functors::{power_lattice, Selection};
use crate::poset::{is_monotone, MonotoneMap, Poset};
use crate::shapes::{is_chain, zigzag_path};

/// Retraction data for a zigzag with a global maximum strictly inside
/// its path.
#[derive(Clone, Debug)]
pub struct ChaincofMaps {
    /// `path[k]` is the element written `x_k`, after any reflection.
    pub path: Vec<usize>,
    pub apex: usize,
    pub reflected: bool,
    pub i: MonotoneMap,
    pub p: MonotoneMap,
}

pub fn chaincof_maps(z: &Arc<Poset>) -> Result<ChaincofMaps> {
    let mut path = zigzag_path(z).ok_or(Error::NotAZigzag)?;
    let maxima = z.maximal_elements();
    if maxima.len() != 1 || z.len() < 3 {
        return Err(Error::NotAZigzag);
    }
    let n = z.len() - 2;
    let mut apex = path.iter().position(|&x| x == maxima[0]).expect("on the path");
    if apex == 0 || apex == n + 1 {
        return Err(Error::NotAZigzag);
    }
    let reflected = 2 * apex <= n;
    if reflected {
        path.reverse();
        apex = n + 1 - apex;
    }
    let s = power_lattice(n + 1, Selection::Nonempty)?;
    let mut i = vec![0; z.len()];
    for (k, &x) in path.iter().enumerate() {
        let face: Vec<usize> = if k < apex {
            (0..=k).collect()
        } else if k == apex {
            (0..=n).collect()
        } else {
            (k - 1..=n).collect()
        };
        i[x] = s.index_of(&face).expect("face of the simplex");
    }
    let p: Vec<usize> = s
        .members
        .iter()
        .map(|sigma| {
            let k = if sigma.iter().all(|&v| v < apex) {
                sigma.len() - 1
            } else if sigma.iter().all(|&v| v >= apex) {
                n + 2 - sigma.len()
            } else {
                apex
            };
            path[k]
        })
        .collect();
    Ok(ChaincofMaps {
        path,
        apex,
        reflected,
        i: MonotoneMap::raw(z.clone(), s.poset.clone(), i),
        p: MonotoneMap::raw(s.poset, z.clone(), p),
    })
}

/// Minimum inclusions of a single-maximum zigzag, each a retract of a
/// vertex inclusion.
fn peak_minima(z: &Arc<Poset>) -> Result<BTreeMap<usize, CofibrationCertificate>> {
    let m = chaincof_maps(z)?;
    if !is_monotone(&m.i) || !is_monotone(&m.p) {
        return Err(Error::Unverified("chaincof maps are not monotone".into()));
    }
    let n = z.len() - 2;
    let s = power_lattice(n + 1, Selection::Nonempty)?;
    let mut out = BTreeMap::new();
    for x in z.minimal_elements() {
        let v = match s.members[m.i.image[x]][..] {
            [v] => v,
            _ => return Err(Error::Unverified("a minimum is not sent to a vertex".into())),
        };
        let c = CofibrationCertificate::retract_same_source(
            CofibrationCertificate::sd_vertex(n, v)?,
            m.i.clone(),
            m.p.clone(),
        )?;
        out.insert(x, c);
    }
    Ok(out)
}

/// Certified minimum inclusions of a piece numbered in path order.
fn piece_minima(q: &Arc<Poset>) -> Result<BTreeMap<usize, CofibrationCertificate>> {
    if is_chain(q) {
        Ok(semilattice_witness(q)?.minimum_certificates)
    } else {
        peak_minima(q)
    }
}

/// Cuts the path at its local minima; consecutive pieces share one end.
fn pieces(z: &Poset, path: &[usize]) -> Vec<(usize, usize)> {
    let cuts: Vec<usize> = (0..path.len()).filter(|&k| z.is_minimal(path[k])).collect();
    let mut bounds = vec![0];
    bounds.extend(cuts.iter().copied().filter(|&c| c != 0 && c != path.len() - 1));
    bounds.push(path.len() - 1);
    bounds.dedup();
    bounds.windows(2).map(|w| (w[0], w[1])).collect()
}

pub fn zigzag_witness(z: &Arc<Poset>) -> Result<WitnessReport> {
    let path = zigzag_path(z).ok_or(Error::NotAZigzag)?;
    if z.is_empty() {
        return Err(Error::NotAZigzag);
    }
    let line = Arc::new(z.induced(&path));
    let segs = if line.len() == 1 { vec![(0, 0)] } else { pieces(&line, &(0..line.len()).collect::<Vec<_>>()) };
    let mut x: Option<(Arc<Poset>, BTreeMap<usize, CofibrationCertificate>)> = None;
    for &(a, b) in &segs {
        let keep: Vec<usize> = (a..=b).collect();
        let q = Arc::new(line.induced(&keep));
        let q_min = piece_minima(&q)?;
        x = Some(match x {
            None => (q, q_min),
            Some((cur, cur_min)) => glue(&cur, &cur_min, &q_min)?,
        });
    }
    let (built, minima) = x.expect("at least one piece");
    let iso = positional_iso(&built, z, path.clone())?;
    let mut out = BTreeMap::new();
    for (m, c) in minima {
        out.insert(path[m], c.then_iso(iso.clone())?);
    }
    let route = if segs.len() == 1 && !is_chain(z) { "chaincof" } else { "zziscof" };
    let theorem = if route == "chaincof" { Theorem::Chaincof } else { Theorem::Zziscof };
    report_from_minima(z, theorem, route, Category::Structural, out)
}

/// Glues `q` onto the last element of `x` (which is `q`'s first element).
fn glue(
    x: &Arc<Poset>,
    x_min: &BTreeMap<usize, CofibrationCertificate>,
    q_min: &BTreeMap<usize, CofibrationCertificate>,
) -> Result<(Arc<Poset>, BTreeMap<usize, CofibrationCertificate>)> {
    let s = x.len() - 1;
    let at_x =
        x_min.get(&s).ok_or_else(|| Error::NoWitness("shared element is not a minimum of the left part".into()))?;
    let at_q = q_min.get(&0).ok_or_else(|| Error::NoWitness("shared element is not a minimum of the piece".into()))?;
    let span = Span::new(at_x.conclusion.clone(), at_q.conclusion.clone())?;
    let (alpha, r) = CofibrationCertificate::pushout(at_q.clone(), span.clone(), Leg::Right)?;
    let (beta, _) = CofibrationCertificate::pushout(at_x.clone(), span, Leg::Left)?;
    let mut out = BTreeMap::new();
    for (&m, c) in x_min {
        out.insert(r.from_left.image[m], CofibrationCertificate::then(c.clone(), alpha.clone())?);
    }
    for (&m, c) in q_min {
        if m == 0 {
            continue;
        }
        out.insert(r.from_right.image[m], CofibrationCertificate::then(c.clone(), beta.clone())?);
    }
    Ok((r.object, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::sd2_simplex;

    #[test]
    fn peak_formula_on_three_elements() {
        let z = Arc::new(Poset::from_index_covers(3, &[(0, 1), (2, 1)]).unwrap());
        let m = chaincof_maps(&z).unwrap();
        let s = power_lattice(2, Selection::Nonempty).unwrap();
        let faces: Vec<&Vec<usize>> = m.i.image.iter().map(|&j| &s.members[j]).collect();
        assert_eq!(faces, vec![&vec![0], &vec![0, 1], &vec![1]]);
        assert!((0..3).all(|x| m.p.image[m.i.image[x]] == x));
    }

    #[test]
    fn fence_of_five() {
        let w = sd2_simplex(1).unwrap();
        let r = zigzag_witness(&w).unwrap();
        assert_eq!(r.minimum_certificates.len(), 3);
        assert_eq!(r.route, "zziscof");
    }

    #[test]
    fn chain_through_zigzag_route() {
        let c = Arc::new(Poset::chain(2));
        assert!(zigzag_witness(&c).unwrap().check().is_ok());
    }

    #[test]
    fn long_fence() {
        let z =
            Arc::new(Poset::from_index_covers(8, &[(0, 1), (2, 1), (2, 3), (3, 4), (5, 4), (6, 5), (6, 7)]).unwrap());
        let r = zigzag_witness(&z).unwrap();
        assert!(r.check().is_ok());
        assert_eq!(r.minimum_certificates.len(), z.minimal_elements().len());
    }
}
