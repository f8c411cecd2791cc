//! Finite-dimensional associative unital algebras given by structure
//! constants, with ideals, quotients, the radical and the Wedderburn split.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AspecError, Result};
use crate::linalg::{
    axpy, char_poly, is_zero_vec, kernel_basis, rational_roots, scale_vec, solve_linear,
    sub_vec, unit_vec, zero_vec, Matrix, Subspace, Vector,
};
use crate::scalar::Scalar;

/// Structure-constant presentation: `table[i][j]` holds the coordinates of
/// `b_i b_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
    unit: Vector,
}

impl Algebra {
    /// Unchecked constructor; see [`Algebra::validate`].
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<Vector>>,
        unit: Vector,
    ) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n || table.len() != n {
            return Err(AspecError::Malformed(format!(
                "expected {n} basis elements in unit and table"
            )));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(AspecError::Malformed("ragged structure table".into()));
            }
        }
        Ok(Algebra {
            name: name.into(),
            labels,
            table,
            unit,
        })
    }

    /// Builds from sparse entries `(i, j, k, c)` meaning `b_i b_j += c b_k`.
    pub fn from_entries(
        name: impl Into<String>,
        labels: &[&str],
        entries: &[(usize, usize, usize, Scalar)],
        unit: Vector,
    ) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![vec![zero_vec(n); n]; n];
        for (i, j, k, c) in entries {
            if *i >= n || *j >= n || *k >= n {
                return Err(AspecError::Malformed(format!(
                    "table index ({i},{j},{k}) out of range"
                )));
            }
            table[*i][*j][*k] += c;
        }
        Algebra::new(
            name,
            labels.iter().map(|s| s.to_string()).collect(),
            table,
            unit,
        )
    }

    /// The zero ring (dimension zero, `1 = 0`).
    pub fn zero_ring() -> Self {
        Algebra {
            name: "0".into(),
            labels: Vec::new(),
            table: Vec::new(),
            unit: Vec::new(),
        }
    }

    /// The base field as a one-dimensional algebra.
    pub fn field() -> Self {
        Algebra {
            name: "Q".into(),
            labels: vec!["1".into()],
            table: vec![vec![vec![Scalar::one()]]],
            unit: vec![Scalar::one()],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vec(self.dim())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), &self.table[i][j]);
            }
        }
        out
    }

    pub fn pow(&self, x: &[Scalar], e: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of `y -> x y` acting on column coordinate vectors.
    pub fn left_regular(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &unit_vec(n, j))).collect();
        Matrix::from_columns(&cols, n)
    }

    /// Matrix of `y -> y x` acting on column coordinate vectors.
    pub fn right_regular(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&unit_vec(n, j), x)).collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Exhaustive check of associativity and the unit laws.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let bij = &self.table[i][j];
                for k in 0..n {
                    let left = self.mul(bij, &unit_vec(n, k));
                    let right = self.mul(&unit_vec(n, i), &self.table[j][k]);
                    if left != right {
                        return Err(AspecError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            let b = unit_vec(n, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                return Err(AspecError::BadUnit(i));
            }
        }
        Ok(())
    }

    /// `Some(inverse)` iff the left-regular matrix of `x` is invertible.
    ///
    /// The inverse comes from Cayley–Hamilton on the regular representation:
    /// with `p(t) = t^n + ... + c_1 t + c_0`, `x^-1 = -(x^{n-1} + ... + c_1) / c_0`.
    pub fn is_unit(&self, x: &[Scalar]) -> Option<Vector> {
        let n = self.dim();
        if n == 0 {
            return Some(Vec::new());
        }
        let p = char_poly(&self.left_regular(x));
        let c0 = p[0].clone();
        if c0.is_zero() {
            return None;
        }
        let mut acc = zero_vec(n);
        let mut power = self.unit.clone();
        for ci in p.iter().skip(1) {
            axpy(&mut acc, ci, &power);
            power = self.mul(&power, x);
        }
        let inv = scale_vec(&(-(Scalar::one() / c0)), &acc);
        debug_assert_eq!(self.mul(x, &inv), self.unit);
        Some(inv)
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x b_j - b_j x = 0 for all j, linear in x
        let mut rows: Vec<Vector> = Vec::new();
        for j in 0..n {
            let l = self.right_regular(&unit_vec(n, j));
            let r = self.left_regular(&unit_vec(n, j));
            let d = l.sub(&r);
            rows.extend(d.to_rows());
        }
        let m = Matrix::from_rows(rows, n);
        Subspace::span(n, &kernel_basis(&m))
    }

    /// `span{u v : u in U, v in V}`.
    pub fn span_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut prods = Vec::new();
        for x in u.basis() {
            for y in v.basis() {
                let p = self.mul(x, y);
                if !is_zero_vec(&p) {
                    prods.push(p);
                }
            }
        }
        Subspace::span(self.dim(), &prods)
    }

    /// Smallest subalgebra containing `gens` and the unit.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut all = vec![self.unit.clone()];
        all.extend(gens.iter().cloned());
        let mut space = Subspace::span(n, &all);
        loop {
            let next = space.sum(&self.span_product(&space, &space));
            if next.dim() == space.dim() {
                return space;
            }
            space = next;
        }
    }

    /// Algebra structure on a multiplicatively closed subspace whose own unit
    /// is `unit` (which need not be the unit of `self`).
    pub fn restrict_to(&self, space: &Subspace, unit: &[Scalar], name: &str) -> Result<Algebra> {
        let k = space.dim();
        let mut table = vec![vec![zero_vec(k); k]; k];
        for (i, x) in space.basis().iter().enumerate() {
            for (j, y) in space.basis().iter().enumerate() {
                table[i][j] = space
                    .coords(&self.mul(x, y))
                    .ok_or_else(|| AspecError::Malformed("subspace not closed".into()))?;
            }
        }
        let unit = space
            .coords(unit)
            .ok_or_else(|| AspecError::Malformed("unit outside subspace".into()))?;
        let labels = (0..k).map(|i| format!("u{i}")).collect();
        Algebra::new(name, labels, table, unit)
    }

    /// Minimal polynomial of `x` inside a corner with unit `e` (lowest degree
    /// coefficient first). `x` must satisfy `e x = x e = x`.
    pub fn min_poly_in(&self, x: &[Scalar], e: &[Scalar]) -> Vec<Scalar> {
        let mut powers: Vec<Vector> = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            let m = Matrix::from_columns(&powers, self.dim());
            if let Ok(sol) = solve_linear(&m, &next) {
                let mut poly: Vec<Scalar> = sol.particular.iter().map(|c| -c).collect();
                poly.push(Scalar::one());
                return poly;
            }
            powers.push(next);
        }
    }

    /// Evaluates `prod_k (x - r_k e)` in the corner with unit `e`.
    fn corner_poly_product(&self, x: &[Scalar], e: &[Scalar], roots: &[Scalar]) -> Vector {
        let mut acc = e.to_vec();
        for r in roots {
            let factor = sub_vec(x, &scale_vec(r, e));
            acc = self.mul(&acc, &factor);
        }
        acc
    }
}

/// A two-sided ideal held as a subspace of the parent's coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    /// Checks closure under left and right multiplication by every basis element.
    pub fn new(a: &Algebra, space: Subspace) -> Result<Self> {
        if space.ambient() != a.dim() {
            return Err(AspecError::DimensionMismatch("ideal ambient dimension".into()));
        }
        let n = a.dim();
        for v in space.basis() {
            for i in 0..n {
                let b = unit_vec(n, i);
                if !space.contains(&a.mul(v, &b)) || !space.contains(&a.mul(&b, v)) {
                    return Err(AspecError::NotAnIdeal);
                }
            }
        }
        Ok(Ideal { space })
    }

    pub fn zero(a: &Algebra) -> Self {
        Ideal {
            space: Subspace::zero(a.dim()),
        }
    }

    pub fn span(a: &Algebra, vectors: &[Vector]) -> Result<Self> {
        Ideal::new(a, Subspace::span(a.dim(), vectors))
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vector] {
        self.space.basis()
    }

    /// `I^k` by iterated span products; `I^0` is the whole algebra.
    pub fn power(&self, a: &Algebra, k: usize) -> Ideal {
        let mut acc = Subspace::full(a.dim());
        for _ in 0..k {
            acc = a.span_product(&acc, &self.space);
        }
        Ideal { space: acc }
    }

    /// Smallest `k >= 1` with `I^k = 0`, or `None` if the powers stabilize at
    /// a nonzero ideal.
    pub fn nilpotency_index(&self, a: &Algebra) -> Option<usize> {
        let mut acc = self.space.clone();
        let mut k = 1;
        loop {
            if acc.dim() == 0 {
                return Some(k);
            }
            let next = a.span_product(&acc, &self.space);
            if next.dim() == acc.dim() {
                return None;
            }
            acc = next;
            k += 1;
        }
    }
}

/// Jacobson radical by the characteristic-zero trace criterion:
/// `rad A = {x : tr L_{x b} = 0 for every basis b}`.
pub fn jacobson_radical(a: &Algebra) -> Ideal {
    let n = a.dim();
    let traces: Vec<Scalar> = (0..n)
        .map(|k| (0..n).map(|j| a.basis_product(k, j)[j].clone()).sum())
        .collect();
    // gram[j][i] = tr L_{b_i b_j}; rad is the kernel of gram (x indexed by i)
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(j, i)] = crate::linalg::dot(a.basis_product(i, j), &traces);
        }
    }
    Ideal {
        space: Subspace::span(n, &kernel_basis(&gram)),
    }
}

/// `A / I` on the complement basis given by the non-pivot coordinates of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    /// `q x n`, column convention.
    pub projection: Matrix,
    /// Parent coordinates that index the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: &[Scalar]) -> Vector {
        self.projection.mul_vec(x)
    }

    /// Linear section: basis element `k` goes to parent basis element `complement[k]`.
    pub fn lift(&self, y: &[Scalar], parent_dim: usize) -> Vector {
        let mut out = zero_vec(parent_dim);
        for (k, &c) in self.complement.iter().enumerate() {
            out[c] = y[k].clone();
        }
        out
    }
}

pub fn quotient_algebra(a: &Algebra, ideal: &Ideal) -> Result<Quotient> {
    let ideal = Ideal::new(a, ideal.space.clone())?;
    let n = a.dim();
    let complement = ideal.space.free_columns();
    let q = complement.len();
    let project = |x: &[Scalar]| -> Vector {
        let r = ideal.space.reduce(x);
        complement.iter().map(|&c| r[c].clone()).collect()
    };
    let cols: Vec<Vector> = (0..n).map(|j| project(&unit_vec(n, j))).collect();
    let projection = Matrix::from_columns(&cols, q);
    let mut table = vec![vec![zero_vec(q); q]; q];
    for (k, &ck) in complement.iter().enumerate() {
        for (l, &cl) in complement.iter().enumerate() {
            table[k][l] = project(a.basis_product(ck, cl));
        }
    }
    let labels = complement.iter().map(|&c| a.labels()[c].clone()).collect();
    let algebra = Algebra::new(
        format!("{}/I", a.name()),
        labels,
        table,
        project(a.unit()),
    )?;
    Ok(Quotient {
        algebra,
        projection,
        complement,
    })
}

/// One simple block of `A / rad A`.
#[derive(Clone, Debug)]
pub struct Block {
    /// Central primitive idempotent, in coordinates of `A / rad A`.
    pub idempotent: Vector,
    /// A primitive idempotent inside the block, in the same coordinates.
    pub primitive: Vector,
    /// `n` when the block is isomorphic to `M_n(Q)`.
    pub matrix_size: usize,
    pub algebra: Algebra,
}

#[derive(Clone, Debug)]
pub struct Wedderburn {
    pub radical: Ideal,
    pub semisimple: Quotient,
    pub blocks: Vec<Block>,
}

pub fn wedderburn(a: &Algebra) -> Result<Wedderburn> {
    let radical = jacobson_radical(a);
    let semisimple = quotient_algebra(a, &radical)?;
    let s = &semisimple.algebra;
    let idems = central_idempotents(s)?;
    let mut blocks = Vec::with_capacity(idems.len());
    for (bi, e) in idems.into_iter().enumerate() {
        let n = s.dim();
        let es: Vec<Vector> = (0..n).map(|j| s.mul(&e, &unit_vec(n, j))).collect();
        let space = Subspace::span(n, &es);
        let algebra = s.restrict_to(&space, &e, &format!("block{bi}"))?;
        let primitive = primitive_idempotent(s, &e)?;
        let fs: Vec<Vector> = (0..n).map(|j| s.mul(&primitive, &unit_vec(n, j))).collect();
        let k = Subspace::span(n, &fs).dim();
        if k * k != space.dim() {
            return Err(AspecError::NotSplit(format!(
                "block {bi} of dimension {} is not a full matrix algebra",
                space.dim()
            )));
        }
        blocks.push(Block {
            idempotent: e,
            primitive,
            matrix_size: k,
            algebra,
        });
    }
    Ok(Wedderburn {
        radical,
        semisimple,
        blocks,
    })
}

pub fn wedderburn_blocks(a: &Algebra) -> Result<Vec<Block>> {
    Ok(wedderburn(a)?.blocks)
}

fn first_nonzero(v: &[Scalar]) -> usize {
    v.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX)
}

/// Central primitive idempotents of a semisimple algebra, split out of the
/// center by rational eigenvalues of central elements.
fn central_idempotents(s: &Algebra) -> Result<Vec<Vector>> {
    if s.dim() == 0 {
        return Ok(Vec::new());
    }
    let center = s.center();
    let mut idems = vec![s.unit().clone()];
    for z in center.basis() {
        let mut next = Vec::new();
        for e in idems {
            let ze = s.mul(z, &e);
            let mp = s.min_poly_in(&ze, &e);
            let degree = mp.len() - 1;
            let roots = rational_roots(&mp).unwrap_or_default();
            if roots.len() < degree {
                return Err(AspecError::NotSplit(
                    "center contains an element without rational spectrum".into(),
                ));
            }
            if roots.len() == 1 {
                next.push(e);
                continue;
            }
            for (i, lambda) in roots.iter().enumerate() {
                let others: Vec<Scalar> = roots
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, r)| r.clone())
                    .collect();
                let denom: Scalar = others
                    .iter()
                    .fold(Scalar::one(), |acc, mu| acc * (lambda - mu));
                let num = s.corner_poly_product(&ze, &e, &others);
                next.push(scale_vec(&denom.inv().expect("distinct roots"), &num));
            }
        }
        idems = next;
    }
    idems.sort_by_key(|e| first_nonzero(e));
    Ok(idems)
}

/// Coordinates of `x c` for `c` running over the basis of `corner`, as a
/// square matrix; singular iff `x` is a zero divisor in the corner.
fn corner_left_matrix(s: &Algebra, corner: &Subspace, x: &[Scalar]) -> Matrix {
    let cols: Vec<Vector> = corner
        .basis()
        .iter()
        .map(|c| corner.coords(&s.mul(x, c)).expect("corner closed"))
        .collect();
    Matrix::from_columns(&cols, corner.dim())
}

fn find_zero_divisor(s: &Algebra, f: &[Scalar], corner: &Subspace) -> Option<Vector> {
    let is_zero_divisor = |x: &[Scalar]| {
        !is_zero_vec(x) && corner_left_matrix(s, corner, x).rank() < corner.dim()
    };
    for c in corner.basis() {
        if is_zero_divisor(c) {
            return Some(c.clone());
        }
    }
    let shifted_by_root = |x: &Vector| -> Option<Vector> {
        let mp = s.min_poly_in(x, f);
        if mp.len() <= 2 {
            return None;
        }
        let roots = rational_roots(&mp)?;
        roots
            .first()
            .map(|r| sub_vec(x, &scale_vec(r, f)))
            .filter(|y| is_zero_divisor(y))
    };
    for c in corner.basis() {
        if let Some(z) = shifted_by_root(c) {
            return Some(z);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..64 {
        let mut x = zero_vec(s.dim());
        for c in corner.basis() {
            let k: i64 = rng.gen_range(-3..=3);
            axpy(&mut x, &Scalar::from_int(k), c);
        }
        if is_zero_divisor(&x) {
            return Some(x);
        }
        if let Some(z) = shifted_by_root(&x) {
            return Some(z);
        }
    }
    None
}

/// Refines the central idempotent `e` to a primitive idempotent by splitting
/// off right ideals generated by zero divisors of successive corners.
fn primitive_idempotent(s: &Algebra, e: &[Scalar]) -> Result<Vector> {
    let n = s.dim();
    let mut f = e.to_vec();
    loop {
        let corner_vecs: Vec<Vector> = (0..n)
            .map(|j| s.mul(&s.mul(&f, &unit_vec(n, j)), &f))
            .collect();
        let corner = Subspace::span(n, &corner_vecs);
        if corner.dim() == 1 {
            return Ok(f);
        }
        let z = find_zero_divisor(s, &f, &corner).ok_or_else(|| {
            AspecError::NotSplit(format!(
                "no rational zero divisor found in a corner of dimension {}",
                corner.dim()
            ))
        })?;
        let right: Vec<Vector> = corner.basis().iter().map(|c| s.mul(&z, c)).collect();
        let ideal = Subspace::span(n, &right);
        // g = sum_l alpha_l r_l with g r_m = r_m for all m
        let r = ideal.basis();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for rm in r {
            let prods: Vec<Vector> = r.iter().map(|rl| s.mul(rl, rm)).collect();
            for coord in 0..n {
                rows.push(prods.iter().map(|p| p[coord].clone()).collect());
                rhs.push(rm[coord].clone());
            }
        }
        let m = Matrix::from_rows(rows, r.len());
        let sol = solve_linear(&m, &rhs).map_err(|_| {
            AspecError::NotSplit("right ideal has no idempotent generator".into())
        })?;
        f = ideal.from_coords(&sol.particular);
    }
}

/// A unital algebra homomorphism, as a `target.dim() x source.dim()` matrix
/// acting on column coordinates.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    pub matrix: Matrix,
}

impl AlgebraMorphism {
    /// Checks unitality and multiplicativity on all basis pairs.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(AspecError::DimensionMismatch("morphism matrix shape".into()));
        }
        let m = AlgebraMorphism {
            source,
            target,
            matrix,
        };
        if m.apply(m.source.unit()) != *m.target.unit() {
            return Err(AspecError::BadMorphism("unit not preserved".into()));
        }
        let n = m.source.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = m.apply(m.source.basis_product(i, j));
                let rhs = m.target.mul(
                    &m.matrix.column(i),
                    &m.matrix.column(j),
                );
                if lhs != rhs {
                    return Err(AspecError::BadMorphism(format!(
                        "not multiplicative on ({i}, {j})"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let n = a.dim();
        AlgebraMorphism {
            source: a.clone(),
            target: a,
            matrix: Matrix::identity(n),
        }
    }

    pub fn apply(&self, x: &[Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if self.target.dim() != other.source.dim() {
            return Err(AspecError::DimensionMismatch("composition".into()));
        }
        Ok(AlgebraMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mul(&self.matrix),
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.is_square() && self.matrix.inverse().is_some()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.source.dim(), &kernel_basis(&self.matrix))
    }
}

/// The linear map `source -> target` forced by `x_s -> y_s` on generators,
/// extended multiplicatively (with `1 -> 1`).
///
/// Fails with `KernelObstruction` when the assignment is inconsistent on the
/// generated subalgebra, and with `Malformed` when the generators do not
/// generate `source`.
pub fn forced_map(source: &Algebra, target: &Algebra, pairs: &[(Vector, Vector)]) -> Result<Matrix> {
    let (n, m) = (source.dim(), target.dim());
    let join = |x: &[Scalar], y: &[Scalar]| -> Vector {
        let mut v = x.to_vec();
        v.extend_from_slice(y);
        v
    };
    let mut gens = vec![join(source.unit(), target.unit())];
    gens.extend(pairs.iter().map(|(x, y)| join(x, y)));
    let mut space = Subspace::span(n + m, &gens);
    loop {
        let mut prods = Vec::new();
        for u in space.basis() {
            for v in space.basis() {
                let x = source.mul(&u[..n], &v[..n]);
                let y = target.mul(&u[n..], &v[n..]);
                prods.push(join(&x, &y));
            }
        }
        let next = space.sum(&Subspace::span(n + m, &prods));
        if next.dim() == space.dim() {
            break;
        }
        space = next;
    }
    let x_pivots = space.pivots().iter().filter(|&&p| p < n).count();
    if x_pivots < space.dim() {
        // some element (0, y) with y != 0
        let witness = space
            .basis()
            .iter()
            .find(|v| is_zero_vec(&v[..n]))
            .map(|v| format!("{:?}", &v[n..]))
            .unwrap_or_default();
        return Err(AspecError::KernelObstruction(format!(
            "zero maps to nonzero element {witness}"
        )));
    }
    if x_pivots < n {
        return Err(AspecError::Malformed(
            "generators do not generate the source algebra".into(),
        ));
    }
    let cols: Vec<Vector> = space.basis().iter().map(|v| v[n..].to_vec()).collect();
    Ok(Matrix::from_columns(&cols, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn catalog_validates() {
        for (name, a) in fixtures::catalog() {
            a.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn broken_associativity_is_reported() {
        // UT2 with e11 e12 = e12 moved to e12 e11 = e12
        let a = Algebra::from_entries(
            "broken",
            &["e11", "e12", "e22"],
            &[(0, 0, 0, s(1)), (1, 0, 1, s(1)), (1, 2, 1, s(1)), (2, 2, 2, s(1))],
            vec![s(1), s(0), s(1)],
        )
        .unwrap();
        assert_eq!(a.validate(), Err(AspecError::NotAssociative(1, 0, 2)));
    }

    #[test]
    fn radical_dimensions() {
        assert_eq!(jacobson_radical(&fixtures::m2()).dim(), 0);
        let ut2 = fixtures::ut2();
        let rad = jacobson_radical(&ut2);
        assert_eq!(rad.dim(), 1);
        assert!(rad.space().contains(&[s(0), s(1), s(0)]));
        let dual = fixtures::dual();
        let rad = jacobson_radical(&dual);
        assert_eq!(rad.basis(), &[vec![s(0), s(1)]]);
        assert_eq!(rad.nilpotency_index(&dual), Some(2));
    }

    #[test]
    fn quotients() {
        let ut2 = fixtures::ut2();
        let q = quotient_algebra(&ut2, &jacobson_radical(&ut2)).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        q.algebra.validate().unwrap();
        assert!(q.algebra.is_commutative());
        assert_eq!(jacobson_radical(&q.algebra).dim(), 0);
        let same = quotient_algebra(&ut2, &Ideal::zero(&ut2)).unwrap();
        assert_eq!(same.algebra.dim(), 3);
        assert_eq!(same.projection, Matrix::identity(3));
        let dual = fixtures::dual();
        let q = quotient_algebra(&dual, &jacobson_radical(&dual)).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        let bad = Subspace::span(3, &[vec![s(1), s(0), s(0)]]);
        assert_eq!(Ideal::new(&ut2, bad), Err(AspecError::NotAnIdeal));
    }

    #[test]
    fn blocks() {
        let split = wedderburn_blocks(&fixtures::split()).unwrap();
        assert_eq!(split.len(), 2);
        assert!(split.iter().all(|b| b.matrix_size == 1));
        let m2 = wedderburn_blocks(&fixtures::m2()).unwrap();
        assert_eq!(m2.len(), 1);
        assert_eq!(m2[0].matrix_size, 2);
        assert!(matches!(
            wedderburn_blocks(&fixtures::gaussian()),
            Err(AspecError::NotSplit(_))
        ));
    }

    #[test]
    fn quaternions_are_not_split() {
        assert!(matches!(
            wedderburn_blocks(&fixtures::rational_quaternions()),
            Err(AspecError::NotSplit(_))
        ));
    }

    #[test]
    fn idempotents_are_orthogonal_and_central() {
        for (name, a) in fixtures::catalog() {
            let w = wedderburn(&a).unwrap();
            let s = &w.semisimple.algebra;
            let mut total = s.zero();
            for (i, bi) in w.blocks.iter().enumerate() {
                total = crate::linalg::add_vec(&total, &bi.idempotent);
                assert_eq!(s.mul(&bi.idempotent, &bi.idempotent), bi.idempotent, "{name}");
                for (j, bj) in w.blocks.iter().enumerate() {
                    if i != j {
                        assert!(is_zero_vec(&s.mul(&bi.idempotent, &bj.idempotent)));
                    }
                }
                assert!(s.center().contains(&bi.idempotent));
            }
            assert_eq!(&total, s.unit(), "{name}");
        }
    }

    #[test]
    fn units() {
        let dual = fixtures::dual();
        assert_eq!(dual.is_unit(dual.unit()), Some(dual.unit().clone()));
        assert!(dual.is_unit(&[s(0), s(1)]).is_none());
        assert_eq!(dual.is_unit(&[s(1), s(1)]), Some(vec![s(1), s(-1)]));
    }

    #[test]
    fn forced_map_detects_obstruction() {
        let dual = Arc::new(fixtures::dual());
        let q = Arc::new(Algebra::field());
        // x -> 0 is fine
        let m = forced_map(&dual, &q, &[(vec![s(0), s(1)], vec![s(0)])]).unwrap();
        assert_eq!(m, Matrix::from_ints(&[&[1, 0]]));
        // from Q to Q[x]/(x^2), 1 -> 1 only, fine; but x(=0 in Q?) cannot be forced
        let bad = forced_map(&q, &dual, &[(vec![s(0)], vec![s(0), s(1)])]);
        assert!(matches!(bad, Err(AspecError::KernelObstruction(_))));
    }
}
