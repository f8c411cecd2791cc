//! Right modules given by structure maps.
//!
//! Vectors are rows and `m . a = m η(a)`, so `η(a b) = η(a) η(b)`. One matrix
//! is stored per algebra basis element.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{wedderburn, Algebra, AlgebraMorphism};
use crate::error::{AspecError, Result};
use crate::linalg::{kernel_basis, unit_vec, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct ModuleRep {
    parent: Arc<Algebra>,
    label: String,
    dim: usize,
    action: Vec<Matrix>,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.action == other.action && *self.parent == *other.parent
    }
}

impl ModuleRep {
    /// Validates the shapes and that `η` is a unital algebra map.
    pub fn new(
        parent: Arc<Algebra>,
        label: impl Into<String>,
        dim: usize,
        action: Vec<Matrix>,
    ) -> Result<Self> {
        let m = ModuleRep {
            parent,
            label: label.into(),
            dim,
            action,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.parent.dim();
        if self.action.len() != n {
            return Err(AspecError::BadModule(format!(
                "expected {n} action matrices, got {}",
                self.action.len()
            )));
        }
        if self
            .action
            .iter()
            .any(|m| m.rows() != self.dim || m.cols() != self.dim)
        {
            return Err(AspecError::BadModule("action matrix of wrong shape".into()));
        }
        if self.act(self.parent.unit()) != Matrix::identity(self.dim) {
            return Err(AspecError::BadModule("unit does not act as identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act(self.parent.basis_product(i, j));
                if lhs != rhs {
                    return Err(AspecError::BadModule(format!(
                        "not multiplicative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The right regular module `A_A`.
    pub fn regular(parent: Arc<Algebra>) -> Self {
        let n = parent.dim();
        let action = (0..n)
            .map(|j| {
                let rows = (0..n).map(|i| parent.basis_product(i, j).clone()).collect();
                Matrix::from_rows(rows, n)
            })
            .collect();
        ModuleRep {
            label: format!("{}_reg", parent.name()),
            parent,
            dim: n,
            action,
        }
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `η(x)` for an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m.add_scaled(c, a);
            }
        }
        m
    }

    /// Same module in the basis given by the rows of `p`: `η'(b) = P η(b) P^-1`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| AspecError::DimensionMismatch("change of basis is singular".into()))?;
        Ok(ModuleRep {
            parent: self.parent.clone(),
            label: self.label.clone(),
            dim: self.dim,
            action: self.action.iter().map(|a| p.mul(a).mul(&inv)).collect(),
        })
    }

    /// Re-parents the module onto an equal algebra value (for example one
    /// loaded from a file).
    pub fn rebase(&self, parent: Arc<Algebra>) -> Result<Self> {
        ModuleRep::new(parent, self.label.clone(), self.dim, self.action.clone())
    }
}

/// Absolute simplicity by Burnside: the action spans all of `End(M)`.
pub fn is_simple(m: &ModuleRep) -> bool {
    if m.dim == 0 {
        return false;
    }
    let d2 = m.dim * m.dim;
    let rows: Vec<Vector> = m.action.iter().map(|a| a.entries().to_vec()).collect();
    Subspace::span(d2, &rows).dim() == d2
}

fn same_parent(m: &ModuleRep, n: &ModuleRep) -> Result<()> {
    if m.parent.dim() != n.parent.dim() || *m.parent != *n.parent {
        return Err(AspecError::DimensionMismatch("modules over different algebras".into()));
    }
    Ok(())
}

/// Basis of `Hom_A(M, N)`: matrices `φ` with `η_M(b) φ = φ η_N(b)`.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<Matrix>> {
    same_parent(m, n)?;
    let (dm, dn) = (m.dim, n.dim);
    let unknowns = dm * dn;
    let var = |p: usize, q: usize| p * dn + q;
    let mut rows = Vec::new();
    for (em, en) in m.action.iter().zip(&n.action) {
        for p in 0..dm {
            for q in 0..dn {
                let mut row = vec![Scalar::zero(); unknowns];
                for r in 0..dm {
                    row[var(r, q)] += &em[(p, r)];
                }
                for r in 0..dn {
                    row[var(p, r)] -= &en[(r, q)];
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows(rows, unknowns);
    Ok(kernel_basis(&system)
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(dn.max(1)).map(|c| c.to_vec()).collect(), dn))
        .map(|mat| if dm == 0 { Matrix::zeros(0, dn) } else { mat })
        .collect())
}

/// Invertible intertwiner `M -> N`, if one is found.
///
/// Exhaustive for modules with a one-dimensional Hom space (in particular
/// simple modules), otherwise a seeded search over small integer
/// combinations of a Hom basis.
pub fn find_isomorphism(m: &ModuleRep, n: &ModuleRep) -> Result<Option<Matrix>> {
    if m.dim != n.dim {
        return Ok(None);
    }
    let basis = hom_space(m, n)?;
    if m.dim == 0 {
        return Ok(Some(Matrix::zeros(0, 0)));
    }
    for b in &basis {
        if b.inverse().is_some() {
            return Ok(Some(b.clone()));
        }
    }
    if basis.len() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x150_0001);
        for _ in 0..32 {
            let mut acc = Matrix::zeros(m.dim, n.dim);
            for b in &basis {
                acc.add_scaled(&Scalar::from_int(rng.gen_range(-4..=4)), b);
            }
            if acc.inverse().is_some() {
                return Ok(Some(acc));
            }
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// Linear map `C^1(A, Hom(M,N)) -> C^2(A, Hom(M,N))`,
/// `c -> [(a,b) -> c(ab) - η_M(a) c(b) - c(a) η_N(b)]`.
///
/// Layout: 1-cochains are indexed `(a, p, q)`, 2-cochains `(a, b, p, q)`,
/// row-major. The kernel is the derivation space and the image is the
/// space of Hochschild 2-coboundaries.
pub(crate) fn cochain_differential(a: &Algebra, eta_m: &[Matrix], eta_n: &[Matrix], dm: usize, dn: usize) -> Matrix {
    let nb = a.dim();
    let c1 = |k: usize, p: usize, q: usize| (k * dm + p) * dn + q;
    let c2 = |i: usize, j: usize, p: usize, q: usize| ((i * nb + j) * dm + p) * dn + q;
    let mut out = Matrix::zeros(nb * nb * dm * dn, nb * dm * dn);
    for i in 0..nb {
        for j in 0..nb {
            let prod = a.basis_product(i, j);
            for p in 0..dm {
                for q in 0..dn {
                    let row = c2(i, j, p, q);
                    for (k, ck) in prod.iter().enumerate() {
                        if !ck.is_zero() {
                            out[(row, c1(k, p, q))] += ck;
                        }
                    }
                    for r in 0..dm {
                        let e = &eta_m[i][(p, r)];
                        if !e.is_zero() {
                            out[(row, c1(j, r, q))] -= e;
                        }
                    }
                    for r in 0..dn {
                        let e = &eta_n[j][(r, q)];
                        if !e.is_zero() {
                            out[(row, c1(i, p, r))] -= e;
                        }
                    }
                }
            }
        }
    }
    out
}

/// Image of `φ -> [a -> η_M(a) φ - φ η_N(a)]` as a subspace of 1-cochains.
pub(crate) fn inner_derivations(eta_m: &[Matrix], eta_n: &[Matrix], dm: usize, dn: usize) -> Subspace {
    let nb = eta_m.len();
    let mut gens = Vec::new();
    for p0 in 0..dm {
        for q0 in 0..dn {
            let phi = Matrix::unit(dm, dn, p0, q0);
            let mut v = Vec::with_capacity(nb * dm * dn);
            for k in 0..nb {
                let d = eta_m[k].mul(&phi).sub(&phi.mul(&eta_n[k]));
                v.extend(d.entries().iter().cloned());
            }
            gens.push(v);
        }
    }
    Subspace::span(nb * dm * dn, &gens)
}

pub(crate) fn cochain_to_matrices(v: &[Scalar], nb: usize, dm: usize, dn: usize) -> Vec<Matrix> {
    (0..nb)
        .map(|k| {
            let mut m = Matrix::zeros(dm, dn);
            for p in 0..dm {
                for q in 0..dn {
                    m[(p, q)] = v[(k * dm + p) * dn + q].clone();
                }
            }
            m
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ext1 {
    pub dim: usize,
    /// Each cocycle assigns a `dim M x dim N` matrix to every algebra basis
    /// element; no nonzero combination is an inner derivation.
    pub cocycles: Vec<Vec<Matrix>>,
}

/// `Ext^1_A(M, N)` as derivations `d: A -> Hom(M, N)` with
/// `d(ab) = d(a) η_N(b) + η_M(a) d(b)`, modulo inner derivations.
///
/// Representatives are canonical: each is reduced against the echelon
/// basis of the inner derivations and the residues are put in reduced
/// echelon form.
pub fn ext1(m: &ModuleRep, n: &ModuleRep) -> Result<Ext1> {
    same_parent(m, n)?;
    let a = &m.parent;
    let (dm, dn, nb) = (m.dim, n.dim, a.dim());
    let diff = cochain_differential(a, &m.action, &n.action, dm, dn);
    let derivations = kernel_basis(&diff);
    let inner = inner_derivations(&m.action, &n.action, dm, dn);
    let residues: Vec<Vector> = derivations.iter().map(|d| inner.reduce(d)).collect();
    let reps = Subspace::span(nb * dm * dn, &residues);
    let cocycles = reps
        .basis()
        .iter()
        .map(|v| cochain_to_matrices(v, nb, dm, dn))
        .collect();
    Ok(Ext1 {
        dim: reps.dim(),
        cocycles,
    })
}

/// Restriction of scalars along `φ: A -> B`: `η_A = η_B ∘ φ`.
pub fn contract_module(phi: &AlgebraMorphism, n: &ModuleRep) -> Result<ModuleRep> {
    if n.parent.dim() != phi.target.dim() || *n.parent != *phi.target {
        return Err(AspecError::DimensionMismatch(
            "module is not over the morphism target".into(),
        ));
    }
    let action = (0..phi.source.dim())
        .map(|k| n.act(&phi.matrix.column(k)))
        .collect();
    Ok(ModuleRep {
        parent: phi.source.clone(),
        label: format!("{}^c", n.label),
        dim: n.dim,
        action,
    })
}

/// Whether `m -> m η(f)` is injective.
pub fn acts_injectively(m: &ModuleRep, f: &[Scalar]) -> bool {
    m.act(f).rank() == m.dim
}

/// One simple right module per Wedderburn block: the minimal right ideal
/// `f (A/rad)` of a primitive idempotent `f`, pulled back to `A`.
pub fn simple_modules(a: &Arc<Algebra>) -> Result<Vec<ModuleRep>> {
    let w = wedderburn(a)?;
    let s = &w.semisimple.algebra;
    let ns = s.dim();
    let mut out = Vec::with_capacity(w.blocks.len());
    for (bi, block) in w.blocks.iter().enumerate() {
        let gens: Vec<Vector> = (0..ns).map(|j| s.mul(&block.primitive, &unit_vec(ns, j))).collect();
        let ideal = Subspace::span(ns, &gens);
        let k = ideal.dim();
        let s_action: Vec<Matrix> = (0..ns)
            .map(|j| {
                let b = unit_vec(ns, j);
                let rows = ideal
                    .basis()
                    .iter()
                    .map(|u| ideal.coords(&s.mul(u, &b)).expect("right ideal is closed"))
                    .collect();
                Matrix::from_rows(rows, k)
            })
            .collect();
        let action = (0..a.dim())
            .map(|i| {
                let proj = w.semisimple.projection.column(i);
                let mut acc = Matrix::zeros(k, k);
                for (c, m) in proj.iter().zip(&s_action) {
                    if !c.is_zero() {
                        acc.add_scaled(c, m);
                    }
                }
                acc
            })
            .collect();
        let module = ModuleRep::new(a.clone(), format!("S{}", bi + 1), k, action)?;
        debug_assert!(is_simple(&module));
        out.push(module);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ut2_simples_are_block_projections() {
        let a = Arc::new(fixtures::ut2());
        let simples = simple_modules(&a).unwrap();
        assert_eq!(simples.len(), 2);
        let one = Matrix::identity(1);
        let zero = Matrix::zeros(1, 1);
        assert_eq!(simples[0].action(), &[one.clone(), zero.clone(), zero.clone()]);
        assert_eq!(simples[1].action(), &[zero.clone(), zero, one]);
    }

    #[test]
    fn burnside_verdicts() {
        let ut2 = Arc::new(fixtures::ut2());
        let simples = simple_modules(&ut2).unwrap();
        assert!(is_simple(&simples[0]));
        assert!(!is_simple(&ModuleRep::regular(ut2)));
        let m2 = Arc::new(fixtures::m2());
        let row = &simple_modules(&m2).unwrap()[0];
        assert_eq!(row.dim(), 2);
        assert!(is_simple(row));
    }

    #[test]
    fn hom_dimensions() {
        let ut2 = Arc::new(fixtures::ut2());
        let s = simple_modules(&ut2).unwrap();
        assert_eq!(hom_space(&s[0], &s[0]).unwrap().len(), 1);
        assert_eq!(hom_space(&s[0], &s[1]).unwrap().len(), 0);
        let split = Arc::new(fixtures::split());
        let ss = simple_modules(&split).unwrap();
        let reg = ModuleRep::regular(split);
        assert_eq!(hom_space(&reg, &ss[0]).unwrap().len(), 1);
    }

    #[test]
    fn ext_examples() {
        let dual = Arc::new(fixtures::dual());
        let s = &simple_modules(&dual).unwrap()[0];
        assert_eq!(ext1(s, s).unwrap().dim, 1);
        let m2 = Arc::new(fixtures::m2());
        let s = &simple_modules(&m2).unwrap()[0];
        assert_eq!(ext1(s, s).unwrap().dim, 0);
    }

    #[test]
    fn contraction_along_identity() {
        let ut2 = Arc::new(fixtures::ut2());
        let s = simple_modules(&ut2).unwrap();
        let id = AlgebraMorphism::identity(ut2);
        let c = contract_module(&id, &s[1]).unwrap();
        assert_eq!(c.action(), s[1].action());
    }

    #[test]
    fn m2_row_module_restricted_to_ut2_is_not_simple() {
        let (_, phi) = fixtures::morphisms().into_iter().find(|(n, _)| *n == "UT2->M2").unwrap();
        let row = &simple_modules(&phi.target).unwrap()[0];
        let c = contract_module(&phi, row).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(!c.action()[1].is_zero());
        assert!(!is_simple(&c));
    }

    #[test]
    fn injectivity() {
        let ut2 = Arc::new(fixtures::ut2());
        let s = simple_modules(&ut2).unwrap();
        assert!(acts_injectively(&s[0], ut2.unit()));
        assert!(!acts_injectively(&s[0], &ut2.zero()));
        assert!(!acts_injectively(&s[1], &ut2.basis_vector(0)));
    }
}
