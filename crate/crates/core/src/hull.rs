//! Order-by-order construction of the hull of a family of simple modules.
//!
//! The hull at order `n` is a quotient of the truncated path algebra on the
//! quiver with one arrow `i -> j` per basis cocycle of `Ext^1(M_i, M_j)`. A
//! word `w : i -> j` lives in the corner `e_i H e_j` and the deformation map
//! sends `a` to `Σ_i e_i ⊗ η_i(a) + Σ_w w ⊗ ρ_w(a)` with `ρ_w(a)` a
//! `dim M_i x dim M_j` matrix.
//!
//! Degree `d` is handled as a small extension of the order `d - 1` hull: the
//! defect of the lifted map is split into a part that is a Hochschild
//! coboundary (absorbed by correcting the map) and a residue that becomes
//! new relations.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{wedderburn, Algebra};
use crate::error::{AspecError, Result};
use crate::linalg::{axpy, is_zero_vec, solve_linear, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::module::{cochain_differential, cochain_to_matrices, ext1, is_isomorphic, is_simple, ModuleRep};
use crate::pointed::AugmentedAlgebra;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    /// Position among the arrows from `source` to `target`.
    pub index: usize,
}

impl Arrow {
    pub fn label(&self) -> String {
        format!("t{}{}_{}", self.source + 1, self.target + 1, self.index + 1)
    }
}

/// A composable sequence of arrows; the empty sequence at `source` is the
/// vertex idempotent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Word {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Word {
    pub fn degree(&self) -> usize {
        self.arrows.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub degree: usize,
    /// `(word index, coefficient)` pairs.
    pub terms: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug)]
pub struct MatricPresentation {
    pub r: usize,
    pub arrows: Vec<Arrow>,
    /// Order actually reached (earlier than requested when the hull stabilized).
    pub order: usize,
    pub requested_order: usize,
    pub stabilized: bool,
    /// All words of degree `<= order`, by degree then lexicographically.
    pub words: Vec<Word>,
    /// The relation ideal in word coordinates.
    pub ideal: Subspace,
    /// Minimal generators of the ideal modulo `m I + I m`.
    pub relations: Vec<Relation>,
    concat: Vec<Vec<Option<usize>>>,
}

impl MatricPresentation {
    pub fn word_label(&self, w: usize) -> String {
        let word = &self.words[w];
        if word.arrows.is_empty() {
            format!("e{}", word.source + 1)
        } else {
            word.arrows
                .iter()
                .map(|&g| self.arrows[g].label())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Indices of the words forming the normal-form basis.
    pub fn basis_words(&self) -> Vec<usize> {
        self.ideal.free_columns()
    }

    /// Number of basis words in each degree `0..=order`.
    pub fn degree_dims(&self) -> Vec<usize> {
        let mut dims = vec![0; self.order + 1];
        for w in self.basis_words() {
            dims[self.words[w].degree()] += 1;
        }
        dims
    }

    pub fn dim(&self) -> usize {
        self.words.len() - self.ideal.dim()
    }

    /// Normal form of a word combination.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        self.ideal.reduce(v)
    }

    pub fn concat(&self, u: usize, v: usize) -> Option<usize> {
        self.concat[u][v]
    }

    /// The hull as an algebra on its basis words, augmented over `Q^r`.
    pub fn algebra(&self) -> Result<AugmentedAlgebra> {
        let basis = self.basis_words();
        let nw = self.words.len();
        let k = basis.len();
        let coords = |v: &[Scalar]| -> Vector {
            let red = self.reduce(v);
            basis.iter().map(|&b| red[b].clone()).collect()
        };
        let mut table = vec![vec![zero_vec(k); k]; k];
        for (x, &u) in basis.iter().enumerate() {
            for (y, &v) in basis.iter().enumerate() {
                if let Some(w) = self.concat[u][v] {
                    table[x][y] = coords(&unit_vec(nw, w));
                }
            }
        }
        let mut unit = zero_vec(k);
        for slot in unit.iter_mut().take(self.r) {
            *slot = Scalar::one();
        }
        let labels = basis.iter().map(|&w| self.word_label(w)).collect();
        let carrier = Algebra::new("H", labels, table, unit)?;
        let mut augmentation = Matrix::zeros(self.r, k);
        for i in 0..self.r {
            augmentation[(i, i)] = Scalar::one();
        }
        let idempotents = (0..self.r).map(|i| unit_vec(k, i)).collect();
        AugmentedAlgebra::new(Arc::new(carrier), vec![1; self.r], augmentation, idempotents)
    }
}

/// `rho[a][w]` is the `dim M_src(w) x dim M_tgt(w)` coefficient of word `w`
/// in the image of basis element `a`.
#[derive(Clone, Debug)]
pub struct DeformationMap {
    pub dims: Vec<usize>,
    pub rho: Vec<Vec<Matrix>>,
}

impl DeformationMap {
    /// Coordinates on the basis words: `out[a][k]` belongs to `basis_words()[k]`.
    pub fn normalized(&self, h: &MatricPresentation) -> Vec<Vec<Matrix>> {
        let basis = h.basis_words();
        let nw = h.words.len();
        self.rho
            .iter()
            .map(|coeffs| {
                basis
                    .iter()
                    .map(|&b| {
                        let w = &h.words[b];
                        let (ds, dt) = (self.dims[w.source], self.dims[w.target]);
                        let mut m = Matrix::zeros(ds, dt);
                        for p in 0..ds {
                            for q in 0..dt {
                                let v: Vector = (0..nw)
                                    .map(|x| {
                                        if h.words[x].source == w.source
                                            && h.words[x].target == w.target
                                        {
                                            coeffs[x][(p, q)].clone()
                                        } else {
                                            Scalar::zero()
                                        }
                                    })
                                    .collect();
                                m[(p, q)] = h.reduce(&v)[b].clone();
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect()
    }
}

/// Change of `Ext^1` basis per corner: the new cocycle `l` is
/// `Σ_k change[l][k] ψ_k`.
#[derive(Clone, Debug, Default)]
pub struct HullOptions {
    pub cocycle_change: BTreeMap<(usize, usize), Matrix>,
}

pub fn hull(a: &Arc<Algebra>, family: &[ModuleRep], n: usize) -> Result<(MatricPresentation, DeformationMap)> {
    hull_with(a, family, n, &HullOptions::default())
}

pub fn hull_with(
    a: &Arc<Algebra>,
    family: &[ModuleRep],
    n: usize,
    options: &HullOptions,
) -> Result<(MatricPresentation, DeformationMap)> {
    wedderburn(a)?;
    for (i, m) in family.iter().enumerate() {
        if **m.parent() != **a {
            return Err(AspecError::BadModule(format!("module {i} is over another algebra")));
        }
        if !is_simple(m) {
            return Err(AspecError::NotSimple(i));
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if is_isomorphic(&family[i], &family[j])? {
                return Err(AspecError::DuplicateModule(i, j));
            }
        }
    }
    let mut b = Builder::new(a, family, n, options)?;
    let mut prev_dim = b.r;
    let mut order = 0;
    let mut stabilized = false;
    for d in 1..=n {
        b.step(d)?;
        order = d;
        let dim = b.hull_dim(d);
        if dim == prev_dim {
            stabilized = true;
            break;
        }
        prev_dim = dim;
    }
    Ok(b.finish(order, n, stabilized))
}

struct Builder<'a> {
    a: &'a Algebra,
    dims: Vec<usize>,
    r: usize,
    nb: usize,
    arrows: Vec<Arrow>,
    cocycles: Vec<Vec<Matrix>>,
    words: Vec<Word>,
    concat: Vec<Vec<Option<usize>>>,
    rho: Vec<Vec<Matrix>>,
    ideal: Subspace,
    /// Per corner: cochain differential and its image.
    diff: Vec<Vec<Matrix>>,
    coboundaries: Vec<Vec<Subspace>>,
}

impl<'a> Builder<'a> {
    fn new(a: &'a Arc<Algebra>, family: &[ModuleRep], n: usize, options: &HullOptions) -> Result<Self> {
        let r = family.len();
        let nb = a.dim();
        let dims: Vec<usize> = family.iter().map(ModuleRep::dim).collect();
        let mut arrows = Vec::new();
        let mut cocycles = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let e = ext1(&family[i], &family[j])?;
                let psi = match options.cocycle_change.get(&(i, j)) {
                    Some(t) => {
                        if t.rows() != e.dim || t.cols() != e.dim || t.inverse().is_none() {
                            return Err(AspecError::DimensionMismatch(format!(
                                "cocycle change for ({i},{j}) must be an invertible {0}x{0} matrix",
                                e.dim
                            )));
                        }
                        (0..e.dim)
                            .map(|l| {
                                (0..nb)
                                    .map(|k| {
                                        let mut acc = Matrix::zeros(dims[i], dims[j]);
                                        for (m, c) in e.cocycles.iter().enumerate() {
                                            acc.add_scaled(&t[(l, m)], &c[k]);
                                        }
                                        acc
                                    })
                                    .collect()
                            })
                            .collect()
                    }
                    None => e.cocycles,
                };
                for (l, c) in psi.into_iter().enumerate() {
                    arrows.push(Arrow {
                        source: i,
                        target: j,
                        index: l,
                    });
                    cocycles.push(c);
                }
            }
        }
        let words = enumerate_words(r, &arrows, n);
        let mut index = BTreeMap::new();
        for (k, w) in words.iter().enumerate() {
            index.insert((w.source, w.arrows.clone()), k);
        }
        let concat: Vec<Vec<Option<usize>>> = words
            .iter()
            .map(|u| {
                words
                    .iter()
                    .map(|v| {
                        if u.target != v.source {
                            return None;
                        }
                        let mut seq = u.arrows.clone();
                        seq.extend_from_slice(&v.arrows);
                        index.get(&(u.source, seq)).copied()
                    })
                    .collect()
            })
            .collect();
        let mut rho = Vec::with_capacity(nb);
        for k in 0..nb {
            let row: Vec<Matrix> = words
                .iter()
                .map(|w| {
                    if w.arrows.is_empty() {
                        family[w.source].action()[k].clone()
                    } else {
                        Matrix::zeros(dims[w.source], dims[w.target])
                    }
                })
                .collect();
            rho.push(row);
        }
        let mut diff = Vec::with_capacity(r);
        let mut coboundaries = Vec::with_capacity(r);
        for i in 0..r {
            let mut drow = Vec::with_capacity(r);
            let mut brow = Vec::with_capacity(r);
            for j in 0..r {
                let m = cochain_differential(a, family[i].action(), family[j].action(), dims[i], dims[j]);
                let cols: Vec<Vector> = (0..m.cols()).map(|c| m.column(c)).collect();
                brow.push(Subspace::span(m.rows(), &cols));
                drow.push(m);
            }
            diff.push(drow);
            coboundaries.push(brow);
        }
        let nw = words.len();
        Ok(Builder {
            a,
            dims,
            r,
            nb,
            arrows,
            cocycles,
            words,
            concat,
            rho,
            ideal: Subspace::zero(nw),
            diff,
            coboundaries,
        })
    }

    fn nw(&self) -> usize {
        self.words.len()
    }

    fn words_up_to(&self, d: usize) -> usize {
        self.words.iter().take_while(|w| w.degree() <= d).count()
    }

    fn hull_dim(&self, d: usize) -> usize {
        self.words_up_to(d) - self.ideal.dim()
    }

    fn cochain_index(&self, a: usize, b: usize, p: usize, q: usize, ds: usize, dt: usize) -> usize {
        ((a * self.nb + b) * ds + p) * dt + q
    }

    /// Word-vectors of the defect, one per corner and 2-cochain coordinate,
    /// truncated to degree `<= d`.
    fn defects(&self, d: usize) -> Vec<Vec<Vec<Vector>>> {
        let (r, nb, nw) = (self.r, self.nb, self.nw());
        let limit = self.words_up_to(d);
        let mut out: Vec<Vec<Vec<Vector>>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| vec![zero_vec(nw); nb * nb * self.dims[i] * self.dims[j]])
                    .collect()
            })
            .collect();
        for a in 0..nb {
            for b in 0..nb {
                let mut x: Vec<Matrix> = (0..nw)
                    .map(|w| Matrix::zeros(self.dims[self.words[w].source], self.dims[self.words[w].target]))
                    .collect();
                for u in 0..limit {
                    if self.rho[a][u].is_zero() {
                        continue;
                    }
                    for v in 0..limit {
                        if let Some(w) = self.concat[u][v] {
                            if w < limit && !self.rho[b][v].is_zero() {
                                let prod = self.rho[a][u].mul(&self.rho[b][v]);
                                x[w].add_scaled(&Scalar::one(), &prod);
                            }
                        }
                    }
                }
                for (k, c) in self.a.basis_product(a, b).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (w, xw) in x.iter_mut().enumerate().take(limit) {
                        xw.add_scaled(&(-c.clone()), &self.rho[k][w]);
                    }
                }
                for (w, xw) in x.iter().enumerate().take(limit) {
                    let word = &self.words[w];
                    let (s, t) = (word.source, word.target);
                    let (ds, dt) = (self.dims[s], self.dims[t]);
                    for p in 0..ds {
                        for q in 0..dt {
                            if !xw[(p, q)].is_zero() {
                                let c = self.cochain_index(a, b, p, q, ds, dt);
                                out[s][t][c][w] = xw[(p, q)].clone();
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn arrow_word(&self, g: usize) -> usize {
        self.r + g
    }

    /// `span{t x, x t}` for arrows `t` and basis vectors `x` of the ideal,
    /// with words of degree `> d` dropped.
    fn ideal_products(&self, ideal: &Subspace, d: usize) -> Subspace {
        let nw = self.nw();
        let limit = self.words_up_to(d);
        let mut gens = Vec::new();
        for x in ideal.basis() {
            for g in 0..self.arrows.len() {
                let t = self.arrow_word(g);
                let mut left = zero_vec(nw);
                let mut right = zero_vec(nw);
                for (w, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(tw) = self.concat[t][w] {
                        if tw < limit {
                            left[tw] += c;
                        }
                    }
                    if let Some(wt) = self.concat[w][t] {
                        if wt < limit {
                            right[wt] += c;
                        }
                    }
                }
                gens.push(left);
                gens.push(right);
            }
        }
        Subspace::span(nw, &gens)
    }

    fn corner_of(&self, v: &[Scalar]) -> Option<(usize, usize)> {
        v.iter()
            .position(|c| !c.is_zero())
            .map(|w| (self.words[w].source, self.words[w].target))
    }

    fn step(&mut self, d: usize) -> Result<()> {
        let nw = self.nw();
        if d == 1 {
            for g in 0..self.arrows.len() {
                let w = self.arrow_word(g);
                for k in 0..self.nb {
                    self.rho[k][w] = self.cocycles[g][k].clone();
                }
            }
            debug_assert!(self.defects(1).iter().flatten().flatten().all(|v| is_zero_vec(v)));
            return Ok(());
        }
        let start = self.words_up_to(d - 1);
        let limit = self.words_up_to(d);
        let small = self.ideal_products(&self.ideal, d);
        let mut kgens: Vec<Vector> = self.ideal.basis().to_vec();
        kgens.extend((start..limit).map(|w| unit_vec(nw, w)));
        let kspace = Subspace::span(nw, &kgens);
        let kres_gens: Vec<Vector> = kspace.basis().iter().map(|v| small.reduce(v)).collect();
        let kres = Subspace::span(nw, &kres_gens);
        let defects = self.defects(d);

        let ideal = self.killed_span(&kres, &defects, &small)?;
        let kbar_gens: Vec<Vector> = kspace.basis().iter().map(|v| ideal.reduce(v)).collect();
        let kbar = Subspace::span(nw, &kbar_gens);

        for i in 0..self.r {
            for j in 0..self.r {
                let cochains = &defects[i][j];
                let nc = cochains.len();
                let coords: Vec<Vector> = cochains
                    .iter()
                    .map(|v| {
                        kbar.coords(&ideal.reduce(v))
                            .ok_or_else(|| internal("reduced defect outside the kernel"))
                    })
                    .collect::<Result<_>>()?;
                for (m, kappa) in kbar.basis().iter().enumerate() {
                    if self.corner_of(kappa) != Some((i, j)) {
                        continue;
                    }
                    let delta: Vector = (0..nc).map(|c| coords[c][m].clone()).collect();
                    if is_zero_vec(&delta) {
                        continue;
                    }
                    let sol = solve_linear(&self.diff[i][j], &delta)
                        .map_err(|_| internal("obstruction left after installing relations"))?;
                    let correction = cochain_to_matrices(&sol.particular, self.nb, self.dims[i], self.dims[j]);
                    for (w, kw) in kappa.iter().enumerate() {
                        if kw.is_zero() {
                            continue;
                        }
                        for (k, ck) in correction.iter().enumerate() {
                            self.rho[k][w].add_scaled(kw, ck);
                        }
                    }
                }
            }
        }
        self.ideal = ideal;
        debug_assert!(self.is_multiplicative(d));
        Ok(())
    }

    /// `L + K'`: the small-extension relations plus the span of the
    /// obstruction residues.
    fn killed_span(&self, kres: &Subspace, defects: &[Vec<Vec<Vector>>], small: &Subspace) -> Result<Subspace> {
        let nw = self.nw();
        let mut gens: Vec<Vector> = small.basis().to_vec();
        for i in 0..self.r {
            for j in 0..self.r {
                let cochains = &defects[i][j];
                let nc = cochains.len();
                let coords: Vec<Vector> = cochains
                    .iter()
                    .map(|v| {
                        kres.coords(&small.reduce(v))
                            .ok_or_else(|| internal("defect outside the small-extension kernel"))
                    })
                    .collect::<Result<_>>()?;
                let corner: Vec<usize> = (0..kres.dim())
                    .filter(|&k| self.corner_of(&kres.basis()[k]) == Some((i, j)))
                    .collect();
                let residues: Vec<Vector> = corner
                    .iter()
                    .map(|&k| {
                        let delta: Vector = (0..nc).map(|c| coords[c][k].clone()).collect();
                        self.coboundaries[i][j].reduce(&delta)
                    })
                    .collect();
                for c in 0..nc {
                    let mut v = zero_vec(nw);
                    for (pos, &k) in corner.iter().enumerate() {
                        axpy(&mut v, &residues[pos][c], &kres.basis()[k]);
                    }
                    if !is_zero_vec(&v) {
                        gens.push(v);
                    }
                }
            }
        }
        Ok(Subspace::span(nw, &gens))
    }

    fn is_multiplicative(&self, d: usize) -> bool {
        self.defects(d)
            .iter()
            .flatten()
            .flatten()
            .all(|v| self.ideal.contains(v))
    }

    fn finish(self, order: usize, requested: usize, stabilized: bool) -> (MatricPresentation, DeformationMap) {
        let limit = self.words_up_to(order);
        let words: Vec<Word> = self.words[..limit].to_vec();
        let restrict = |v: &[Scalar]| v[..limit].to_vec();
        let ideal = Subspace::span(limit, &self.ideal.basis().iter().map(|v| restrict(v)).collect::<Vec<_>>());
        let products = self.ideal_products(&self.ideal, order);
        let products = Subspace::span(limit, &products.basis().iter().map(|v| restrict(v)).collect::<Vec<_>>());
        let residues: Vec<Vector> = ideal.basis().iter().map(|v| products.reduce(v)).collect();
        let generators = Subspace::span(limit, &residues);
        let relations = generators
            .basis()
            .iter()
            .map(|v| Relation {
                degree: words[v.iter().position(|c| !c.is_zero()).unwrap()].degree(),
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(w, c)| (w, c.clone()))
                    .collect(),
            })
            .collect();
        let concat = self.concat[..limit]
            .iter()
            .map(|row| row[..limit].iter().map(|c| c.filter(|&w| w < limit)).collect())
            .collect();
        let rho = self.rho.iter().map(|row| row[..limit].to_vec()).collect();
        (
            MatricPresentation {
                r: self.r,
                arrows: self.arrows,
                order,
                requested_order: requested,
                stabilized,
                words,
                ideal,
                relations,
                concat,
            },
            DeformationMap { dims: self.dims, rho },
        )
    }
}

fn internal(msg: &str) -> AspecError {
    AspecError::Malformed(format!("hull construction: {msg}"))
}

fn enumerate_words(r: usize, arrows: &[Arrow], n: usize) -> Vec<Word> {
    let mut words: Vec<Word> = (0..r)
        .map(|i| Word {
            source: i,
            target: i,
            arrows: Vec::new(),
        })
        .collect();
    let mut frontier = words.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            for (g, arrow) in arrows.iter().enumerate() {
                if arrow.source == w.target {
                    let mut seq = w.arrows.clone();
                    seq.push(g);
                    next.push(Word {
                        source: w.source,
                        target: arrow.target,
                        arrows: seq,
                    });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words
}

/// Exact check that `ρ(a) ρ(b) - ρ(ab)` vanishes in the hull for every basis
/// pair.
pub fn is_multiplicative(a: &Algebra, h: &MatricPresentation, map: &DeformationMap) -> bool {
    let nb = a.dim();
    let nw = h.words.len();
    for x in 0..nb {
        for y in 0..nb {
            let mut defect: Vec<Matrix> = h
                .words
                .iter()
                .map(|w| Matrix::zeros(map.dims[w.source], map.dims[w.target]))
                .collect();
            for u in 0..nw {
                for v in 0..nw {
                    if let Some(w) = h.concat(u, v) {
                        let prod = map.rho[x][u].mul(&map.rho[y][v]);
                        defect[w].add_scaled(&Scalar::one(), &prod);
                    }
                }
            }
            for (k, c) in a.basis_product(x, y).iter().enumerate() {
                for w in 0..nw {
                    defect[w].add_scaled(&(-c.clone()), &map.rho[k][w]);
                }
            }
            for i in 0..h.r {
                for j in 0..h.r {
                    let (ds, dt) = (map.dims[i], map.dims[j]);
                    for p in 0..ds {
                        for q in 0..dt {
                            let v: Vector = (0..nw)
                                .map(|w| {
                                    let word = &h.words[w];
                                    if word.source == i && word.target == j {
                                        defect[w][(p, q)].clone()
                                    } else {
                                        Scalar::zero()
                                    }
                                })
                                .collect();
                            if !h.ideal.contains(&v) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::simple_modules;

    fn run(a: Algebra, n: usize) -> (Arc<Algebra>, MatricPresentation, DeformationMap) {
        let a = Arc::new(a);
        let family = simple_modules(&a).unwrap();
        let (h, rho) = hull(&a, &family, n).unwrap();
        (a, h, rho)
    }

    #[test]
    fn dual_hull_has_square_relation() {
        let (a, h, rho) = run(fixtures::dual(), 3);
        assert_eq!(h.arrows.len(), 1);
        assert_eq!(h.relations.len(), 1);
        let rel = &h.relations[0];
        assert_eq!(rel.degree, 2);
        assert_eq!(rel.terms.len(), 1);
        assert_eq!(h.word_label(rel.terms[0].0), "t11_1*t11_1");
        assert_eq!(h.dim(), 2);
        assert!(is_multiplicative(&a, &h, &rho));
    }

    #[test]
    fn m2_hull_is_trivial() {
        let (_, h, _) = run(fixtures::m2(), 4);
        assert!(h.arrows.is_empty());
        assert_eq!(h.dim(), 1);
        assert!(h.stabilized);
    }

    #[test]
    fn ut2_hull_is_free_on_one_arrow() {
        let (a, h, rho) = run(fixtures::ut2(), 3);
        assert_eq!(h.arrows.len(), 1);
        assert_eq!((h.arrows[0].source, h.arrows[0].target), (0, 1));
        assert!(h.relations.is_empty());
        assert_eq!(h.dim(), 3);
        assert!(is_multiplicative(&a, &h, &rho));
    }

    #[test]
    fn fat2_hull_splits_by_point() {
        let (a, h, rho) = run(fixtures::fat2(), 4);
        assert_eq!(h.r, 2);
        assert_eq!(h.dim(), 3);
        assert!(is_multiplicative(&a, &h, &rho));
        h.algebra().unwrap().carrier.validate().unwrap();
    }

    fn truncated_monomials(name: &str, exps: &[[u32; 2]], nilpotent: impl Fn(u32, u32) -> bool) -> Algebra {
        let labels: Vec<String> = exps.iter().map(|e| format!("x{}y{}", e[0], e[1])).collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let mut entries = Vec::new();
        for (i, a) in exps.iter().enumerate() {
            for (j, b) in exps.iter().enumerate() {
                let (x, y) = (a[0] + b[0], a[1] + b[1]);
                if !nilpotent(x, y) {
                    let k = exps.iter().position(|e| *e == [x, y]).unwrap();
                    entries.push((i, j, k, Scalar::one()));
                }
            }
        }
        let mut unit = vec![Scalar::zero(); exps.len()];
        unit[0] = Scalar::one();
        Algebra::from_entries(name, &refs, &entries, unit).unwrap()
    }

    #[test]
    fn cubic_obstruction_appears_in_degree_three() {
        let a = truncated_monomials("Q[x]/x^3", &[[0, 0], [1, 0], [2, 0]], |x, _| x >= 3);
        let (a, h, rho) = run(a, 5);
        assert_eq!(h.dim(), 3);
        assert_eq!(h.relations.len(), 1);
        assert_eq!(h.relations[0].degree, 3);
        assert!(is_multiplicative(&a, &h, &rho));
    }

    #[test]
    fn exterior_like_relations_include_a_commutator() {
        let a = truncated_monomials(
            "Q[x,y]/(x^2,y^2)",
            &[[0, 0], [1, 0], [0, 1], [1, 1]],
            |x, y| x >= 2 || y >= 2,
        );
        let (a, h, rho) = run(a, 4);
        assert_eq!(h.arrows.len(), 2);
        assert_eq!(h.dim(), 4);
        assert_eq!(h.relations.len(), 3);
        assert!(h.relations.iter().any(|r| r.terms.len() == 2));
        assert!(is_multiplicative(&a, &h, &rho));
        let square_zero = truncated_monomials(
            "Q[x,y]/(x,y)^2",
            &[[0, 0], [1, 0], [0, 1]],
            |x, y| x + y >= 2,
        );
        let (_, h, _) = run(square_zero, 4);
        assert_eq!(h.dim(), 3);
        assert_eq!(h.relations.len(), 4);
    }

    #[test]
    fn non_simple_family_is_rejected() {
        let a = Arc::new(fixtures::ut2());
        let reg = ModuleRep::regular(a.clone());
        assert_eq!(hull(&a, &[reg], 2).unwrap_err(), AspecError::NotSimple(0));
        let s = simple_modules(&a).unwrap();
        assert_eq!(
            hull(&a, &[s[0].clone(), s[0].clone()], 2).unwrap_err(),
            AspecError::DuplicateModule(0, 1)
        );
    }
}
