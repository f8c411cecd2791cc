//! Finite `aSpec`: points are modules, `D(f)` is the set of points on which
//! `f` acts injectively, and the topology is generated by a chosen family
//! of `D(f)`.
//!
//! Point subsets are bitsets over the point list, so at most 64 points.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{AspecError, Result};
use crate::linalg::{is_zero_vec, unit_vec, Vector};
use crate::pointed::AugmentedAlgebra;
use crate::module::{acts_injectively, contract_module, is_isomorphic, is_simple, simple_modules, ModuleRep};
use crate::scalar::Scalar;

pub type Mask = u64;

pub fn mask_points(mask: Mask) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

#[derive(Clone, Debug)]
pub struct Point {
    pub label: String,
    pub module: ModuleRep,
    pub simple: bool,
    /// Name of the morphism a contracted point came from.
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct PointSet {
    pub algebra: Arc<Algebra>,
    pub points: Vec<Point>,
}

impl PointSet {
    /// The simple modules, labelled `S1, S2, ...`.
    pub fn simples(a: &Arc<Algebra>) -> Result<Self> {
        let points = simple_modules(a)?
            .into_iter()
            .map(|m| Point {
                label: m.label().to_string(),
                module: m,
                simple: true,
                witness: None,
            })
            .collect();
        Ok(PointSet {
            algebra: a.clone(),
            points,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn full(&self) -> Mask {
        if self.points.len() == 64 {
            Mask::MAX
        } else {
            (1 << self.points.len()) - 1
        }
    }

    pub fn labels(&self, mask: Mask) -> Vec<String> {
        mask_points(mask)
            .into_iter()
            .map(|i| self.points[i].label.clone())
            .collect()
    }

    /// Index of a point isomorphic to `m`, adding it as a contracted point
    /// when there is none.
    pub fn find_or_add(&mut self, m: ModuleRep, witness: &str) -> Result<usize> {
        for (i, p) in self.points.iter().enumerate() {
            if p.module.dim() == m.dim() && is_isomorphic(&p.module, &m)? {
                return Ok(i);
            }
        }
        if self.points.len() == 64 {
            return Err(AspecError::DimensionMismatch("more than 64 points".into()));
        }
        let simple = is_simple(&m);
        self.points.push(Point {
            label: format!("P{}", self.points.len() + 1),
            module: m,
            simple,
            witness: Some(witness.to_string()),
        });
        Ok(self.points.len() - 1)
    }

    pub fn simple_mask(&self) -> Mask {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.simple)
            .fold(0, |m, (i, _)| m | 1 << i)
    }
}

pub fn dset(f: &[Scalar], ps: &PointSet) -> Mask {
    ps.points
        .iter()
        .enumerate()
        .filter(|(_, p)| acts_injectively(&p.module, f))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Basis elements, all products `b_i b_j`, then the orthogonal idempotents
/// lifted from the Wedderburn blocks; zero and repeats dropped.
///
/// Without the idempotents `Q[x]/(x^3 - x^2)` would only see `D(x)` and get
/// a Sierpiński topology instead of the discrete one.
pub fn default_subbasis(a: &Arc<Algebra>) -> Vec<Vector> {
    let n = a.dim();
    let mut fs: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            fs.push(a.basis_product(i, j).clone());
        }
    }
    if let Ok(h) = AugmentedAlgebra::from_simple_modules(a.clone()) {
        fs.extend(h.idempotents);
    }
    let mut seen = std::collections::BTreeSet::new();
    fs.retain(|f| !is_zero_vec(f) && seen.insert(f.clone()));
    fs
}

#[derive(Clone, Debug)]
pub struct FiniteTopology {
    pub points: PointSet,
    pub subbasis: Vec<(Vector, Mask)>,
    /// Sorted by size, then numerically.
    pub opens: Vec<Mask>,
}

impl FiniteTopology {
    pub fn full(&self) -> Mask {
        self.points.full()
    }

    pub fn is_open(&self, u: Mask) -> bool {
        self.opens.binary_search_by(|o| open_order(*o, u)).is_ok()
    }

    pub fn open_index(&self, u: Mask) -> Option<usize> {
        self.opens.binary_search_by(|o| open_order(*o, u)).ok()
    }

    /// Intersection of all opens containing `pts`.
    pub fn minimal_open(&self, pts: Mask) -> Mask {
        self.opens
            .iter()
            .filter(|&&o| o & pts == pts)
            .fold(self.full(), |acc, &o| acc & o)
    }

    /// Opens contained in `u`, in lattice order.
    pub fn opens_within(&self, u: Mask) -> Vec<Mask> {
        self.opens.iter().copied().filter(|&o| o & !u == 0).collect()
    }

    pub fn is_topology(&self) -> bool {
        let full = self.full();
        self.is_open(0)
            && self.is_open(full)
            && self
                .opens
                .iter()
                .all(|&u| self.opens.iter().all(|&v| self.is_open(u & v) && self.is_open(u | v)))
    }
}

fn open_order(a: Mask, b: Mask) -> std::cmp::Ordering {
    (a.count_ones(), a).cmp(&(b.count_ones(), b))
}

fn sort_opens(opens: &mut Vec<Mask>) {
    opens.sort_by(|a, b| open_order(*a, *b));
    opens.dedup();
}

pub fn generate_topology(ps: &PointSet, fs: Option<&[Vector]>) -> FiniteTopology {
    let fs: Vec<Vector> = match fs {
        Some(fs) => fs.to_vec(),
        None => default_subbasis(&ps.algebra),
    };
    let subbasis: Vec<(Vector, Mask)> = fs.into_iter().map(|f| {
        let d = dset(&f, ps);
        (f, d)
    }).collect();
    let mut opens: Vec<Mask> = vec![0, ps.full()];
    opens.extend(subbasis.iter().map(|(_, d)| *d));
    sort_opens(&mut opens);
    loop {
        let mut next = opens.clone();
        for &u in &opens {
            for &v in &opens {
                next.push(u & v);
                next.push(u | v);
            }
        }
        sort_opens(&mut next);
        if next.len() == opens.len() {
            break;
        }
        opens = next;
    }
    FiniteTopology {
        points: ps.clone(),
        subbasis,
        opens,
    }
}

/// Any two nonempty opens meet; the empty space is not irreducible.
pub fn is_irreducible(t: &FiniteTopology) -> bool {
    if t.points.is_empty() {
        return false;
    }
    let nonempty: Vec<Mask> = t.opens.iter().copied().filter(|&o| o != 0).collect();
    nonempty.iter().all(|&u| nonempty.iter().all(|&v| u & v != 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct ContinuityCheck {
    pub f: Vector,
    /// Preimage of `D(f)` under the point map, over the target's points.
    pub preimage: Mask,
    /// `D(φ(f))` over the target's points.
    pub direct: Mask,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct AspecMap {
    /// Source points, including contracted points added on the way.
    pub source_points: PointSet,
    /// `images[q]` is the source point of the contraction of target point `q`.
    pub images: Vec<usize>,
    pub checks: Vec<ContinuityCheck>,
}

impl AspecMap {
    pub fn is_continuous(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// `Q -> Q^c` from the points of `B` to the points of `A`, with the
/// preimage law checked on every element of `fs` (default sub-basis of `A`).
pub fn aspec_map(
    phi: &AlgebraMorphism,
    name: &str,
    ps_b: &PointSet,
    ps_a: &PointSet,
    fs: Option<&[Vector]>,
) -> Result<AspecMap> {
    let mut source_points = ps_a.clone();
    let mut images = Vec::with_capacity(ps_b.len());
    for p in &ps_b.points {
        let c = contract_module(phi, &p.module)?;
        images.push(source_points.find_or_add(c, name)?);
    }
    let fs: Vec<Vector> = match fs {
        Some(fs) => fs.to_vec(),
        None => default_subbasis(&phi.source),
    };
    let checks = fs
        .into_iter()
        .map(|f| {
            let d_a = dset(&f, &source_points);
            let preimage = images
                .iter()
                .enumerate()
                .filter(|(_, &img)| d_a >> img & 1 == 1)
                .fold(0, |m, (q, _)| m | 1 << q);
            let direct = dset(&phi.apply(&f), ps_b);
            ContinuityCheck {
                f,
                preimage,
                direct,
                holds: preimage == direct,
            }
        })
        .collect();
    Ok(AspecMap {
        source_points,
        images,
        checks,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DLawReport {
    pub d_one_is_everything: bool,
    pub d_zero_is_empty: bool,
    pub pairs_checked: usize,
    /// Pairs `(f, g)` with `D(fg) != D(f) ∩ D(g)`.
    pub product_failures: usize,
}

impl DLawReport {
    pub fn holds(&self) -> bool {
        self.d_one_is_everything && self.d_zero_is_empty && self.product_failures == 0
    }
}

/// `D(1) = X`, `D(0) = ∅` and `D(fg) = D(f) ∩ D(g)` over all basis pairs
/// and `random_pairs` seeded random pairs with small integer coordinates.
pub fn check_d_laws(ps: &PointSet, random_pairs: usize, seed: u64) -> DLawReport {
    let a = &ps.algebra;
    let n = a.dim();
    let mut report = DLawReport {
        d_one_is_everything: dset(a.unit(), ps) == ps.full(),
        d_zero_is_empty: dset(&a.zero(), ps) == 0,
        ..DLawReport::default()
    };
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            pairs.push((unit_vec(n, i), unit_vec(n, j)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| -> Vector {
        (0..n).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect()
    };
    for _ in 0..random_pairs {
        let f = sample(&mut rng);
        let g = sample(&mut rng);
        pairs.push((f, g));
    }
    for (f, g) in &pairs {
        report.pairs_checked += 1;
        if dset(&a.mul(f, g), ps) != dset(f, ps) & dset(g, ps) {
            report.product_failures += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn points(a: Algebra) -> PointSet {
        PointSet::simples(&Arc::new(a)).unwrap()
    }

    #[test]
    fn ut2_dsets() {
        let ps = points(fixtures::ut2());
        assert_eq!(dset(&unit_vec(3, 0), &ps), 0b01);
        assert_eq!(dset(&unit_vec(3, 1), &ps), 0);
        let t = generate_topology(&ps, None);
        assert_eq!(t.opens, vec![0, 0b01, 0b10, 0b11]);
        assert!(t.is_topology());
        assert!(!is_irreducible(&t));
    }

    #[test]
    fn one_point_spaces() {
        let t = generate_topology(&points(fixtures::m2()), None);
        assert_eq!(t.opens, vec![0, 1]);
        assert!(is_irreducible(&t));
        let t = generate_topology(&points(fixtures::fat2()), None);
        assert_eq!(t.opens, vec![0, 0b01, 0b10, 0b11]);
    }

    #[test]
    fn sierpinski_is_irreducible() {
        let ps = points(fixtures::ut2());
        let e11 = unit_vec(3, 0);
        let t = generate_topology(&ps, Some(&[e11]));
        assert_eq!(t.opens, vec![0, 0b01, 0b11]);
        assert!(is_irreducible(&t));
    }

    #[test]
    fn embedding_contracts_to_a_new_point() {
        let (_, phi) = fixtures::morphisms().into_iter().find(|(n, _)| *n == "UT2->M2").unwrap();
        let ps_a = PointSet::simples(&phi.source).unwrap();
        let ps_b = PointSet::simples(&phi.target).unwrap();
        let m = aspec_map(&phi, "UT2->M2", &ps_b, &ps_a, None).unwrap();
        assert_eq!(m.source_points.len(), 3);
        assert!(!m.source_points.points[2].simple);
        assert!(m.is_continuous());
    }

    #[test]
    fn d_laws_hold() {
        for (_, a) in fixtures::catalog() {
            assert!(check_d_laws(&points(a), 100, 7).holds());
        }
    }
}
