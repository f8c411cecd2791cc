//! The structure presheaf on a finite `aSpec`, two sheafifications, stalks,
//! and the exhaustive sheaf-axiom check.
//!
//! Sections over `U` are the local-function ring in the sum of the simple
//! points of `U`; the empty open carries the zero ring. Restrictions are
//! the maps forced by `ρ_U(a) -> ρ_V(a)` and `e_P -> e_P` or `0`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{forced_map, Algebra};
use crate::completion::{complete, direct_product, local_function_ring};
use crate::error::{AspecError, Result};
use crate::linalg::{kernel_basis, zero_vec, Matrix, Subspace, Vector};
use crate::module::ModuleRep;
use crate::topology::{mask_points, FiniteTopology, Mask};

#[derive(Clone, Debug)]
pub struct Section {
    pub open: Mask,
    pub algebra: Arc<Algebra>,
    /// `A -> section`, column convention.
    pub rho: Matrix,
    /// `(point index, idempotent)` for the simple points of the open.
    pub idempotents: Vec<(usize, Vector)>,
}

impl Section {
    fn zero(a_dim: usize) -> Self {
        Section {
            open: 0,
            algebra: Arc::new(Algebra::zero_ring()),
            rho: Matrix::zeros(0, a_dim),
            idempotents: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    fn idempotent(&self, point: usize) -> Option<&Vector> {
        self.idempotents.iter().find(|(p, _)| *p == point).map(|(_, e)| e)
    }
}

/// Sections over every open (parallel to `topology.opens`) and the
/// restriction maps `(U, V)` for `V ⊆ U`, keyed by open index.
#[derive(Clone, Debug)]
pub struct Sections {
    pub topology: FiniteTopology,
    pub sections: Vec<Section>,
    pub restrictions: BTreeMap<(usize, usize), Matrix>,
}

impl Sections {
    pub fn section(&self, u: Mask) -> Option<&Section> {
        self.topology.open_index(u).map(|i| &self.sections[i])
    }

    pub fn restriction(&self, u: Mask, v: Mask) -> Option<&Matrix> {
        let (i, j) = (self.topology.open_index(u)?, self.topology.open_index(v)?);
        self.restrictions.get(&(i, j))
    }

    /// Value at the smallest open containing `pts`, which is the direct
    /// limit over all opens containing `pts` on a finite space.
    pub fn stalk(&self, pts: Mask) -> (Mask, &Section) {
        let u = self.topology.minimal_open(pts);
        (u, self.section(u).expect("minimal open is open"))
    }

    /// `res(V, W) ∘ res(U, V) = res(U, W)` and `res(U, U) = id` for all
    /// chains; `false` if some restriction is missing.
    pub fn is_functorial(&self) -> bool {
        let n = self.topology.opens.len();
        for i in 0..n {
            if self.restrictions.get(&(i, i)) != Some(&Matrix::identity(self.sections[i].dim())) {
                return false;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (u, v, w) = (self.topology.opens[i], self.topology.opens[j], self.topology.opens[k]);
                    if v & !u != 0 || w & !v != 0 {
                        continue;
                    }
                    let (Some(uv), Some(vw), Some(uw)) = (
                        self.restrictions.get(&(i, j)),
                        self.restrictions.get(&(j, k)),
                        self.restrictions.get(&(i, k)),
                    ) else {
                        return false;
                    };
                    if vw.mul(uv) != *uw {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Identity and gluing over every cover of every open.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        for (ui, &u) in self.topology.opens.iter().enumerate() {
            let within: Vec<usize> = self
                .topology
                .opens
                .iter()
                .enumerate()
                .filter(|(_, &o)| o & !u == 0)
                .map(|(i, _)| i)
                .collect();
            if within.len() > MAX_COVER_CANDIDATES {
                report.skipped_opens.push(u);
                continue;
            }
            for subset in 0u64..(1 << within.len()) {
                let cover: Vec<usize> = mask_points(subset).into_iter().map(|k| within[k]).collect();
                let union = cover.iter().fold(0, |m, &i| m | self.topology.opens[i]);
                if union != u {
                    continue;
                }
                report.covers_checked += 1;
                let masks: Vec<Mask> = cover.iter().map(|&i| self.topology.opens[i]).collect();
                match self.cover_verdict(ui, &cover) {
                    Some((identity, gluing)) => {
                        if !identity {
                            report.identity_failures.push((u, masks.clone()));
                        }
                        if !gluing {
                            report.gluing_failures.push((u, masks));
                        }
                    }
                    None => report.missing_restrictions.push((u, masks)),
                }
            }
        }
        report
    }

    fn cover_verdict(&self, ui: usize, cover: &[usize]) -> Option<(bool, bool)> {
        let du = self.sections[ui].dim();
        let dims: Vec<usize> = cover.iter().map(|&i| self.sections[i].dim()).collect();
        let total: usize = dims.iter().sum();
        let mut offsets = vec![0];
        for d in &dims {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut stacked = Matrix::zeros(total, du);
        for (pos, &vi) in cover.iter().enumerate() {
            let r = self.restrictions.get(&(ui, vi))?;
            for row in 0..r.rows() {
                for col in 0..du {
                    stacked[(offsets[pos] + row, col)] = r[(row, col)].clone();
                }
            }
        }
        let identity = stacked.rank() == du;
        let mut rows: Vec<Vector> = Vec::new();
        for (p, &vi) in cover.iter().enumerate() {
            for (q, &wi) in cover.iter().enumerate().skip(p + 1) {
                let meet = self.topology.opens[vi] & self.topology.opens[wi];
                let mi = self.topology.open_index(meet)?;
                let rv = self.restrictions.get(&(vi, mi))?;
                let rw = self.restrictions.get(&(wi, mi))?;
                for row in 0..rv.rows() {
                    let mut eq = zero_vec(total);
                    for c in 0..dims[p] {
                        eq[offsets[p] + c] = rv[(row, c)].clone();
                    }
                    for c in 0..dims[q] {
                        eq[offsets[q] + c] = -rw[(row, c)].clone();
                    }
                    rows.push(eq);
                }
            }
        }
        let equalizer = if rows.is_empty() {
            total
        } else {
            kernel_basis(&Matrix::from_rows(rows, total)).len()
        };
        Some((identity, identity && equalizer == du))
    }
}

const MAX_COVER_CANDIDATES: usize = 16;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub covers_checked: usize,
    pub identity_failures: Vec<(Mask, Vec<Mask>)>,
    pub gluing_failures: Vec<(Mask, Vec<Mask>)>,
    pub missing_restrictions: Vec<(Mask, Vec<Mask>)>,
    /// Opens with too many sub-opens for an exhaustive cover search.
    pub skipped_opens: Vec<Mask>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.identity_failures.is_empty()
            && self.gluing_failures.is_empty()
            && self.missing_restrictions.is_empty()
            && self.skipped_opens.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct PresheafData {
    pub data: Sections,
    pub order: usize,
    /// Restrictions that are not well defined.
    pub findings: Vec<String>,
}

fn family_section(t: &FiniteTopology, u: Mask, order: usize) -> Result<Section> {
    let a = &t.points.algebra;
    let pts: Vec<usize> = mask_points(u & t.points.simple_mask());
    if pts.is_empty() {
        let mut s = Section::zero(a.dim());
        s.open = u;
        return Ok(s);
    }
    let family: Vec<ModuleRep> = pts.iter().map(|&p| t.points.points[p].module.clone()).collect();
    let lf = local_function_ring(&complete(a, &family, order)?)?;
    Ok(Section {
        open: u,
        algebra: lf.carrier.carrier.clone(),
        rho: lf.rho.matrix.clone(),
        idempotents: pts.into_iter().zip(lf.carrier.idempotents).collect(),
    })
}

/// Direct computation of `O^A` in the sum of the given points.
pub fn direct_section(t: &FiniteTopology, pts: Mask, order: usize) -> Result<Section> {
    family_section(t, pts, order)
}

fn forced_restriction(from: &Section, to: &Section) -> Result<Matrix> {
    if to.dim() == 0 {
        return Ok(Matrix::zeros(0, from.dim()));
    }
    let mut pairs: Vec<(Vector, Vector)> = (0..from.rho.cols())
        .map(|k| (from.rho.column(k), to.rho.column(k)))
        .collect();
    for (p, e) in &from.idempotents {
        let image = to.idempotent(*p).cloned().unwrap_or_else(|| zero_vec(to.dim()));
        pairs.push((e.clone(), image));
    }
    forced_map(&from.algebra, &to.algebra, &pairs)
}

pub fn structure_presheaf(t: &FiniteTopology, order: usize) -> Result<PresheafData> {
    let sections = t
        .opens
        .iter()
        .map(|&u| family_section(t, u, order))
        .collect::<Result<Vec<_>>>()?;
    let mut restrictions = BTreeMap::new();
    let mut findings = Vec::new();
    for (i, &u) in t.opens.iter().enumerate() {
        for (j, &v) in t.opens.iter().enumerate() {
            if v & !u != 0 {
                continue;
            }
            if i == j {
                restrictions.insert((i, j), Matrix::identity(sections[i].dim()));
                continue;
            }
            match forced_restriction(&sections[i], &sections[j]) {
                Ok(m) => {
                    restrictions.insert((i, j), m);
                }
                Err(AspecError::KernelObstruction(msg)) => findings.push(format!(
                    "restriction {:?} -> {:?} is not well defined: {msg}",
                    t.points.labels(u),
                    t.points.labels(v)
                )),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(PresheafData {
        data: Sections {
            topology: t.clone(),
            sections,
            restrictions,
        },
        order,
        findings,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Compatible families over the minimal open neighbourhoods.
    Standard,
    /// Limit over the proper nonempty sub-opens; minimal opens keep the
    /// presheaf value.
    PaperLimit,
}

impl std::str::FromStr for Variant {
    type Err = AspecError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "paper-limit" => Ok(Variant::PaperLimit),
            other => Err(AspecError::Parse(format!("unknown sheaf variant {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SheafData {
    pub variant: Variant,
    pub data: Sections,
    /// For each open, the presheaf opens whose sections make up the limit.
    pub components: Vec<Vec<usize>>,
}

struct Limit {
    section: Section,
    /// Section coordinates to the product of the components.
    embedding: Matrix,
    offsets: Vec<usize>,
}

fn limit_over(p: &PresheafData, u: Mask, components: &[usize]) -> Result<Limit> {
    let t = &p.data.topology;
    let a_dim = t.points.algebra.dim();
    if components.is_empty() {
        let mut s = Section::zero(a_dim);
        s.open = u;
        return Ok(Limit {
            section: s,
            embedding: Matrix::zeros(0, 0),
            offsets: vec![0],
        });
    }
    let parts: Vec<&Algebra> = components.iter().map(|&i| p.data.sections[i].algebra.as_ref()).collect();
    let product = direct_product(&parts, "prod")?;
    let mut offsets = vec![0];
    for part in &parts {
        offsets.push(offsets.last().unwrap() + part.dim());
    }
    let total = product.dim();
    let mut rows = Vec::new();
    for (x, &vi) in components.iter().enumerate() {
        for (y, &wi) in components.iter().enumerate() {
            let (v, w) = (t.opens[vi], t.opens[wi]);
            if x == y || w & !v != 0 {
                continue;
            }
            let r = p.data.restrictions.get(&(vi, wi)).ok_or_else(|| {
                AspecError::KernelObstruction(format!(
                    "no restriction {:?} -> {:?}",
                    t.points.labels(v),
                    t.points.labels(w)
                ))
            })?;
            for row in 0..r.rows() {
                let mut eq = zero_vec(total);
                for c in 0..r.cols() {
                    eq[offsets[x] + c] = r[(row, c)].clone();
                }
                eq[offsets[y] + row] -= &crate::scalar::Scalar::one();
                rows.push(eq);
            }
        }
    }
    let space = if rows.is_empty() {
        Subspace::full(total)
    } else {
        Subspace::span(total, &kernel_basis(&Matrix::from_rows(rows, total)))
    };
    let algebra = Arc::new(product.restrict_to(&space, product.unit(), "lim")?);
    let tuple = |f: &dyn Fn(&Section) -> Vector| -> Vector {
        components
            .iter()
            .flat_map(|&i| f(&p.data.sections[i]))
            .collect()
    };
    let rho_cols: Vec<Vector> = (0..a_dim)
        .map(|k| {
            let v = tuple(&|s: &Section| s.rho.column(k));
            space.coords(&v).expect("images of A are compatible")
        })
        .collect();
    let rho = Matrix::from_columns(&rho_cols, algebra.dim());
    let mut idempotents = Vec::new();
    for pt in mask_points(u & t.points.simple_mask()) {
        let v = tuple(&|s: &Section| s.idempotent(pt).cloned().unwrap_or_else(|| zero_vec(s.dim())));
        if let Some(c) = space.coords(&v) {
            idempotents.push((pt, c));
        }
    }
    Ok(Limit {
        section: Section {
            open: u,
            algebra,
            rho,
            idempotents,
        },
        embedding: Matrix::from_columns(space.basis(), total),
        offsets,
    })
}

fn components_for(t: &FiniteTopology, u: Mask, variant: Variant) -> Vec<usize> {
    if u == 0 {
        return Vec::new();
    }
    let mut out: Vec<usize> = match variant {
        Variant::Standard => mask_points(u)
            .into_iter()
            .map(|x| t.minimal_open(1 << x))
            .map(|m| t.open_index(m).expect("minimal open is open"))
            .collect(),
        Variant::PaperLimit => {
            let proper: Vec<usize> = t
                .opens
                .iter()
                .enumerate()
                .filter(|(_, &o)| o != 0 && o != u && o & !u == 0)
                .map(|(i, _)| i)
                .collect();
            if proper.is_empty() {
                vec![t.open_index(u).expect("u is open")]
            } else {
                proper
            }
        }
    };
    out.sort();
    out.dedup();
    out
}

pub fn sheafify(p: &PresheafData, variant: Variant) -> Result<SheafData> {
    let t = &p.data.topology;
    let mut limits = Vec::with_capacity(t.opens.len());
    let mut components = Vec::with_capacity(t.opens.len());
    for &u in &t.opens {
        let comps = components_for(t, u, variant);
        limits.push(limit_over(p, u, &comps)?);
        components.push(comps);
    }
    let mut restrictions = BTreeMap::new();
    for (i, &u) in t.opens.iter().enumerate() {
        for (j, &v) in t.opens.iter().enumerate() {
            if v & !u != 0 {
                continue;
            }
            if i == j {
                restrictions.insert((i, j), Matrix::identity(limits[i].section.dim()));
                continue;
            }
            if let Some(m) = project_limit(&limits[i], &components[i], &limits[j], &components[j]) {
                restrictions.insert((i, j), m);
            }
        }
    }
    Ok(SheafData {
        variant,
        data: Sections {
            topology: t.clone(),
            sections: limits.into_iter().map(|l| l.section).collect(),
            restrictions,
        },
        components,
    })
}

/// Restriction between limits whose component lists are nested.
fn project_limit(from: &Limit, from_comps: &[usize], to: &Limit, to_comps: &[usize]) -> Option<Matrix> {
    let dn = to.section.dim();
    let df = from.section.dim();
    if dn == 0 {
        return Some(Matrix::zeros(0, df));
    }
    let total_to = *to.offsets.last().unwrap();
    let mut picked = Matrix::zeros(total_to, df);
    for (y, c) in to_comps.iter().enumerate() {
        let x = from_comps.iter().position(|d| d == c)?;
        let width = to.offsets[y + 1] - to.offsets[y];
        for r in 0..width {
            for col in 0..df {
                picked[(to.offsets[y] + r, col)] = from.embedding[(from.offsets[x] + r, col)].clone();
            }
        }
    }
    let space = Subspace::span(
        total_to,
        &(0..dn).map(|k| to.embedding.column(k)).collect::<Vec<_>>(),
    );
    let cols: Vec<Vector> = (0..df)
        .map(|col| space.coords(&picked.column(col)))
        .collect::<Option<_>>()?;
    Some(Matrix::from_columns(&cols, dn))
}

/// Whether the forced map `ρ_x(a) -> ρ_y(a)`, matching the idempotents of
/// shared points, is an isomorphism in one direction or the other.
pub fn sections_isomorphic(x: &Section, y: &Section) -> bool {
    if x.dim() != y.dim() {
        return false;
    }
    if x.dim() == 0 {
        return true;
    }
    let attempt = |s: &Section, t: &Section| -> bool {
        let mut pairs: Vec<(Vector, Vector)> = (0..s.rho.cols())
            .map(|k| (s.rho.column(k), t.rho.column(k)))
            .collect();
        for (p, e) in &s.idempotents {
            if let Some(f) = t.idempotent(*p) {
                pairs.push((e.clone(), f.clone()));
            }
        }
        match forced_map(&s.algebra, &t.algebra, &pairs) {
            Ok(m) => m.is_square() && m.inverse().is_some(),
            Err(_) => false,
        }
    };
    attempt(x, y) || attempt(y, x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StalkRow {
    pub points: Vec<String>,
    pub minimal_open: Vec<String>,
    pub presheaf_dim: usize,
    pub standard_dim: usize,
    pub paper_limit_dim: usize,
    pub direct_dim: usize,
    pub presheaf_agrees: bool,
    pub standard_agrees: bool,
    pub paper_limit_agrees: bool,
}

/// Stalks of the presheaf and of both sheafifications against the directly
/// computed local-function ring, for every set of at most two simple points.
pub fn compare_stalks(t: &FiniteTopology, order: usize) -> Result<Vec<StalkRow>> {
    let pre = structure_presheaf(t, order)?;
    let std_sheaf = sheafify(&pre, Variant::Standard)?;
    let paper = sheafify(&pre, Variant::PaperLimit)?;
    let simple = mask_points(t.points.simple_mask());
    let mut subsets: Vec<Mask> = simple.iter().map(|&p| 1 << p).collect();
    for (i, &p) in simple.iter().enumerate() {
        for &q in &simple[i + 1..] {
            subsets.push(1 << p | 1 << q);
        }
    }
    let mut rows = Vec::with_capacity(subsets.len());
    for pts in subsets {
        let direct = direct_section(t, pts, order)?;
        let (u, ps) = pre.data.stalk(pts);
        let (_, ss) = std_sheaf.data.stalk(pts);
        let (_, ls) = paper.data.stalk(pts);
        rows.push(StalkRow {
            points: t.points.labels(pts),
            minimal_open: t.points.labels(u),
            presheaf_dim: ps.dim(),
            standard_dim: ss.dim(),
            paper_limit_dim: ls.dim(),
            direct_dim: direct.dim(),
            presheaf_agrees: sections_isomorphic(ps, &direct),
            standard_agrees: sections_isomorphic(ss, &direct),
            paper_limit_agrees: sections_isomorphic(ls, &direct),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::unit_vec;
    use crate::topology::{generate_topology, PointSet};

    fn topology(a: Algebra) -> FiniteTopology {
        generate_topology(&PointSet::simples(&Arc::new(a)).unwrap(), None)
    }

    #[test]
    fn ut2_presheaf_sections() {
        let t = topology(fixtures::ut2());
        let p = structure_presheaf(&t, 2).unwrap();
        let dims: Vec<usize> = p.data.sections.iter().map(Section::dim).collect();
        assert_eq!(dims, vec![0, 1, 1, 3]);
        assert!(p.findings.is_empty());
        assert!(p.data.is_functorial());
        assert!(!p.data.check_axioms().holds());
        let s = sheafify(&p, Variant::Standard).unwrap();
        assert_eq!(s.data.section(0b11).unwrap().dim(), 2);
        assert!(s.data.check_axioms().holds());
        assert!(s.data.is_functorial());
    }

    #[test]
    fn ut2_stalk_comparison() {
        let t = topology(fixtures::ut2());
        let rows = compare_stalks(&t, 2).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[..2].iter().all(|r| r.presheaf_agrees && r.direct_dim == 1));
        let both = &rows[2];
        assert_eq!((both.presheaf_dim, both.standard_dim), (3, 2));
        assert!(both.presheaf_agrees);
        assert!(!both.standard_agrees);
    }

    #[test]
    fn sierpinski_variants_differ() {
        let a = Arc::new(fixtures::ut2());
        let t = generate_topology(&PointSet::simples(&a).unwrap(), Some(&[unit_vec(3, 0)]));
        let p = structure_presheaf(&t, 2).unwrap();
        let s = sheafify(&p, Variant::Standard).unwrap();
        let l = sheafify(&p, Variant::PaperLimit).unwrap();
        assert_eq!(s.data.section(0b11).unwrap().dim(), 3);
        assert_eq!(l.data.section(0b11).unwrap().dim(), 1);
        assert!(s.data.check_axioms().holds());
    }

    #[test]
    fn fat2_restriction_kills_reduced_point() {
        let t = topology(fixtures::fat2());
        let p = structure_presheaf(&t, 3).unwrap();
        assert_eq!(p.data.section(0b11).unwrap().dim(), 3);
        assert!(p.data.is_functorial());
        assert!(p.data.check_axioms().holds());
    }
}
