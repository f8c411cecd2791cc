//! The completion `Ô = End_H(H ⊗ M)` of an algebra in a family of simple
//! modules, its local-function ring, and the maps between them.

use std::sync::Arc;

use crate::algebra::{forced_map, jacobson_radical, Algebra, AlgebraMorphism};
use crate::error::{AspecError, Result};
use crate::hull::{hull, DeformationMap, MatricPresentation};
use crate::linalg::{kernel_basis, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::module::{contract_module, is_isomorphic, is_simple, simple_modules, ModuleRep};
use crate::pointed::{endo_algebra, mtower, truncated_local_quotient, AugmentedAlgebra, EndoAlgebra};
use crate::poly::{Polynomial, Presentation};
use crate::scalar::Scalar;

/// Nilpotency index of the radical plus one.
pub fn default_order(a: &Algebra) -> usize {
    jacobson_radical(a).nilpotency_index(a).unwrap_or(1) + 1
}

#[derive(Clone, Debug)]
pub struct EndoCompletion {
    pub algebra: Arc<Algebra>,
    pub family: Vec<ModuleRep>,
    pub hull: MatricPresentation,
    pub deformation: DeformationMap,
    pub endo: EndoAlgebra,
    /// `A -> Ô`.
    pub rho: AlgebraMorphism,
}

impl EndoCompletion {
    pub fn carrier(&self) -> &AugmentedAlgebra {
        &self.endo.algebra
    }
}

pub fn completion_endo(
    a: &Arc<Algebra>,
    family: &[ModuleRep],
    hull: MatricPresentation,
    deformation: DeformationMap,
) -> Result<EndoCompletion> {
    let base = hull.algebra()?;
    let endo = endo_algebra(&base, &deformation.dims)?;
    let basis = hull.basis_words();
    let normalized = deformation.normalized(&hull);
    let nh = basis.len();
    let mut cols = Vec::with_capacity(a.dim());
    for coeffs in &normalized {
        let mut v = zero_vec(endo.algebra.dim());
        for (pos, &w) in basis.iter().enumerate() {
            if coeffs[pos].is_zero() {
                continue;
            }
            let word = &hull.words[w];
            let part = endo.embed(word.source, word.target, &unit_vec(nh, pos), &coeffs[pos])?;
            crate::linalg::axpy(&mut v, &Scalar::one(), &part);
        }
        cols.push(v);
    }
    let rho = AlgebraMorphism::new(
        a.clone(),
        endo.algebra.carrier.clone(),
        Matrix::from_columns(&cols, endo.algebra.dim()),
    )?;
    Ok(EndoCompletion {
        algebra: a.clone(),
        family: family.to_vec(),
        hull,
        deformation,
        endo,
        rho,
    })
}

/// Hull followed by completion.
pub fn complete(a: &Arc<Algebra>, family: &[ModuleRep], order: usize) -> Result<EndoCompletion> {
    let (h, d) = hull(a, family, order)?;
    completion_endo(a, family, h, d)
}

/// Completion in all simple modules at the default order.
pub fn complete_in_simples(a: &Arc<Algebra>) -> Result<EndoCompletion> {
    let family = simple_modules(a)?;
    complete(a, &family, default_order(a))
}

/// The unital subalgebra of `Ô` generated by `ρ(A)` and the idempotents
/// `e_1..e_r`. Inverses of units of the form `ρ(a)` need not be adjoined:
/// each already lies in the subalgebra generated by `ρ(a)`.
#[derive(Clone, Debug)]
pub struct LocalFunctionRing {
    pub carrier: AugmentedAlgebra,
    /// Columns are the carrier basis in `Ô` coordinates.
    pub embedding: Matrix,
    /// `A -> O`.
    pub rho: AlgebraMorphism,
    /// `ker ρ` inside `A`.
    pub kernel: Subspace,
}

pub fn local_function_ring(c: &EndoCompletion) -> Result<LocalFunctionRing> {
    let o = &c.endo.algebra;
    let oc = &o.carrier;
    let mut gens: Vec<Vector> = (0..c.algebra.dim()).map(|k| c.rho.matrix.column(k)).collect();
    gens.extend(o.idempotents.iter().cloned());
    let space = oc.generated_subalgebra(&gens);
    let carrier = oc.restrict_to(&space, oc.unit(), &format!("O({})", c.algebra.name()))?;
    let embedding = Matrix::from_columns(space.basis(), oc.dim());
    let augmentation = o.augmentation.mul(&embedding);
    let idempotents = o
        .idempotents
        .iter()
        .map(|e| space.coords(e).expect("idempotents are generators"))
        .collect();
    let carrier = Arc::new(carrier);
    let rho_cols: Vec<Vector> = gens[..c.algebra.dim()]
        .iter()
        .map(|v| space.coords(v).expect("image of A is a generator"))
        .collect();
    let rho = AlgebraMorphism::new(
        c.algebra.clone(),
        carrier.clone(),
        Matrix::from_columns(&rho_cols, carrier.dim()),
    )?;
    let kernel = Subspace::span(c.algebra.dim(), &kernel_basis(&c.rho.matrix));
    Ok(LocalFunctionRing {
        carrier: AugmentedAlgebra::new(carrier, o.block_sizes.clone(), augmentation, idempotents)?,
        embedding,
        rho,
        kernel,
    })
}

#[derive(Clone, Debug)]
pub struct InducedMorphism {
    pub source: LocalFunctionRing,
    pub target: LocalFunctionRing,
    /// `O^A_{M^c} -> O^B_M`.
    pub map: AlgebraMorphism,
    pub commutes_with_augmentation: bool,
}

/// The map `ρ_A(a) -> ρ_B(φ(a))`, `e_i -> e_i`, between local-function
/// rings, where the family over `A` is the contraction of `family_b`.
pub fn induced_morphism(phi: &AlgebraMorphism, family_b: &[ModuleRep], order: usize) -> Result<InducedMorphism> {
    let mut family_a = Vec::with_capacity(family_b.len());
    for (i, m) in family_b.iter().enumerate() {
        let c = contract_module(phi, m)?;
        if !is_simple(&c) {
            return Err(AspecError::ContractedNotSimple(i));
        }
        family_a.push(c);
    }
    let ca = complete(&phi.source, &family_a, order)?;
    let cb = complete(&phi.target, family_b, order)?;
    let oa = local_function_ring(&ca)?;
    let ob = local_function_ring(&cb)?;
    let mut pairs: Vec<(Vector, Vector)> = (0..phi.source.dim())
        .map(|k| {
            let x = oa.rho.matrix.column(k);
            let y = ob.rho.apply(&phi.matrix.column(k));
            (x, y)
        })
        .collect();
    for (e, f) in oa.carrier.idempotents.iter().zip(&ob.carrier.idempotents) {
        pairs.push((e.clone(), f.clone()));
    }
    let m = forced_map(&oa.carrier.carrier, &ob.carrier.carrier, &pairs)?;
    let map = AlgebraMorphism::new(oa.carrier.carrier.clone(), ob.carrier.carrier.clone(), m)?;
    let commutes_with_augmentation = ob.carrier.augmentation.mul(&map.matrix) == oa.carrier.augmentation;
    Ok(InducedMorphism {
        source: oa,
        target: ob,
        map,
        commutes_with_augmentation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    /// The `m`-adic tower of `Ô` reaches `Ô` itself.
    pub complete: bool,
    /// The simple modules of `Ô`, pulled back along `ρ`, are the family.
    pub simples_recovered: bool,
    /// Completing the local-function ring again gives an isomorphic ring.
    pub idempotent: bool,
}

pub fn verify_family_props(c: &EndoCompletion) -> Result<FamilyReport> {
    let o = c.carrier();
    let tower = mtower(o, c.hull.order + 1)?;
    let is_complete = tower.is_complete();

    let simples = simple_modules(&o.carrier)?;
    let mut matched = vec![false; c.family.len()];
    let mut simples_recovered = simples.len() == c.family.len();
    for s in &simples {
        let pulled = contract_module(&c.rho, s)?;
        let hit = (0..c.family.len())
            .find(|&i| !matched[i] && is_isomorphic(&pulled, &c.family[i]).unwrap_or(false));
        match hit {
            Some(i) => matched[i] = true,
            None => simples_recovered = false,
        }
    }

    let lf = local_function_ring(c)?;
    let b = lf.carrier.carrier.clone();
    let order = default_order(&b).max(c.hull.order);
    let again = complete(&b, &simple_modules(&b)?, order)?;
    let lf2 = local_function_ring(&again)?;
    let idempotent = b.dim() == lf2.carrier.dim() && lf2.rho.is_bijective();
    Ok(FamilyReport {
        complete: is_complete,
        simples_recovered,
        idempotent,
    })
}

/// `Π_i R_i` on the concatenated bases.
pub fn direct_product(parts: &[&Algebra], name: &str) -> Result<Algebra> {
    let n: usize = parts.iter().map(|p| p.dim()).sum();
    let mut labels = Vec::with_capacity(n);
    let mut table = vec![vec![zero_vec(n); n]; n];
    let mut unit = zero_vec(n);
    let mut off = 0;
    for (pi, p) in parts.iter().enumerate() {
        let d = p.dim();
        for i in 0..d {
            labels.push(format!("{}:{}", pi + 1, p.labels()[i]));
            for j in 0..d {
                for (k, c) in p.basis_product(i, j).iter().enumerate() {
                    table[off + i][off + j][off + k] = c.clone();
                }
            }
            unit[off + i] = p.unit()[i].clone();
        }
        off += d;
    }
    Algebra::new(name, labels, table, unit)
}

/// For a commutative presentation realized by `A` (variable `v` is the
/// element `generators[v]`), an explicit isomorphism
/// `Ô -> Π_i (A / p_i^n)` over the points of the family.
#[derive(Clone, Debug)]
pub struct PointDecomposition {
    pub points: Vec<Vec<Scalar>>,
    pub factors: Vec<Algebra>,
    pub product: Arc<Algebra>,
    pub iso: AlgebraMorphism,
}

pub fn point_decomposition(
    c: &EndoCompletion,
    presentation: &Presentation,
    generators: &[Vector],
) -> Result<PointDecomposition> {
    if c.family.iter().any(|m| m.dim() != 1) {
        return Err(AspecError::BadModule("points must be one-dimensional modules".into()));
    }
    let order = c.hull.order + 1;
    let points: Vec<Vec<Scalar>> = c
        .family
        .iter()
        .map(|m| generators.iter().map(|g| m.act(g)[(0, 0)].clone()).collect())
        .collect();
    let locals = points
        .iter()
        .map(|p| truncated_local_quotient(presentation, p, order))
        .collect::<Result<Vec<_>>>()?;
    let factors: Vec<Algebra> = locals.iter().map(|l| l.carrier.clone()).collect();
    let refs: Vec<&Algebra> = factors.iter().collect();
    let product = Arc::new(direct_product(&refs, "Π A/p^n")?);
    let nv = presentation.nvars();
    let mut pairs = Vec::new();
    for (v, g) in generators.iter().enumerate() {
        let mut exp = vec![0; nv];
        exp[v] = 1;
        let var = Polynomial::monomial(exp);
        let y: Vector = locals.iter().flat_map(|l| l.image(&var)).collect();
        pairs.push((c.rho.apply(g), y));
    }
    let mut off = 0;
    for (i, l) in locals.iter().enumerate() {
        let mut y = zero_vec(product.dim());
        for (k, u) in l.carrier.unit().iter().enumerate() {
            y[off + k] = u.clone();
        }
        off += l.carrier.dim();
        pairs.push((c.carrier().idempotents[i].clone(), y));
    }
    let m = forced_map(&c.carrier().carrier, &product, &pairs)?;
    let iso = AlgebraMorphism::new(c.carrier().carrier.clone(), product.clone(), m)?;
    if !iso.is_bijective() {
        return Err(AspecError::BadMorphism("point decomposition is not bijective".into()));
    }
    Ok(PointDecomposition {
        points,
        factors,
        product,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::pointed::is_unit_pointed;

    #[test]
    fn rho_is_bijective_on_catalog() {
        for (name, a) in fixtures::catalog() {
            let a = Arc::new(a);
            let c = complete_in_simples(&a).unwrap();
            assert_eq!(c.carrier().dim(), a.dim(), "{name}");
            assert!(c.rho.is_bijective(), "{name}");
        }
    }

    #[test]
    fn family_properties_hold() {
        for a in [fixtures::dual(), fixtures::ut2(), fixtures::m2()] {
            let c = complete_in_simples(&Arc::new(a)).unwrap();
            let r = verify_family_props(&c).unwrap();
            assert_eq!(
                r,
                FamilyReport {
                    complete: true,
                    simples_recovered: true,
                    idempotent: true
                }
            );
        }
    }

    #[test]
    fn fat2_decomposes_over_its_points() {
        let a = Arc::new(fixtures::fat2());
        let c = complete_in_simples(&a).unwrap();
        let d = point_decomposition(&c, &fixtures::fat2_presentation(), &[a.basis_vector(1)]).unwrap();
        let mut dims: Vec<usize> = d.factors.iter().map(Algebra::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn single_point_of_fat2_kills_the_other() {
        let a = Arc::new(fixtures::fat2());
        let simples = simple_modules(&a).unwrap();
        let at_one = simples
            .iter()
            .find(|m| m.act(&a.basis_vector(1))[(0, 0)].is_one())
            .unwrap()
            .clone();
        let c = complete(&a, &[at_one], default_order(&a)).unwrap();
        let lf = local_function_ring(&c).unwrap();
        assert_eq!(lf.carrier.dim(), 1);
        assert_eq!(lf.kernel.dim(), 2);
    }

    #[test]
    fn units_match_augmentation() {
        let c = complete_in_simples(&Arc::new(fixtures::ut2())).unwrap();
        let o = c.carrier();
        for k in 0..o.dim() {
            let x = unit_vec(o.dim(), k);
            assert_eq!(is_unit_pointed(o, &x).is_some(), o.carrier.is_unit(&x).is_some());
        }
    }

    #[test]
    fn induced_maps() {
        let cat = fixtures::morphisms();
        let get = |n: &str| cat.iter().find(|(m, _)| *m == n).unwrap().1.clone();
        let split_to_q = get("SPLIT->Q");
        let fam = simple_modules(&split_to_q.target).unwrap();
        let m = induced_morphism(&split_to_q, &fam, 2).unwrap();
        assert!(m.commutes_with_augmentation);
        assert_eq!(m.source.carrier.dim(), 1);
        let fat = get("FAT2->DUAL");
        let fam = simple_modules(&fat.target).unwrap();
        let m = induced_morphism(&fat, &fam, 3).unwrap();
        assert!(m.map.is_bijective());
    }
}
