//! Augmented algebras, their `m`-adic truncation towers, the tangent algebra,
//! generalized matrix algebras `⊕ e_i H e_j ⊗ Hom(M_i, M_j)`, and truncated
//! localizations of commutative presentations at rational points.
//!
//! Localization is only ever done through truncations: in a finite-dimensional
//! quotient the inverse of a unit already lies in the unital subalgebra it
//! generates (Cayley–Hamilton), so adjoining inverses adds nothing there.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{quotient_algebra, Algebra, AlgebraMorphism, Ideal};
use crate::error::{AspecError, Result};
use crate::linalg::{
    axpy, is_zero_vec, kernel_basis, solve_linear, sub_vec, unit_vec, zero_vec, Matrix, Subspace,
    Vector,
};
use crate::module::simple_modules;
use crate::poly::{monomials_up_to, Exponent, Polynomial, Presentation};
use crate::scalar::Scalar;

/// `⊕_i Mat(d_i)` on the basis of matrix units, block by block, row-major.
pub fn matrix_blocks_algebra(sizes: &[usize]) -> Algebra {
    let offsets = block_offsets(sizes);
    let n = *offsets.last().unwrap();
    let mut labels = Vec::with_capacity(n);
    let mut table = vec![vec![zero_vec(n); n]; n];
    let mut unit = zero_vec(n);
    for (b, &d) in sizes.iter().enumerate() {
        let o = offsets[b];
        for p in 0..d {
            for q in 0..d {
                labels.push(if d == 1 {
                    format!("b{}", b + 1)
                } else {
                    format!("b{}[{},{}]", b + 1, p + 1, q + 1)
                });
                for s in 0..d {
                    table[o + p * d + q][o + q * d + s][o + p * d + s] = Scalar::one();
                }
            }
            unit[o + p * d + p] = Scalar::one();
        }
    }
    Algebra::new("blocks", labels, table, unit).expect("block algebra is well formed")
}

fn block_offsets(sizes: &[usize]) -> Vec<usize> {
    let mut offsets = vec![0];
    for &d in sizes {
        offsets.push(offsets.last().unwrap() + d * d);
    }
    offsets
}

/// An algebra with a surjection `π` onto `⊕_i Mat(d_i)` split on the
/// diagonal by orthogonal idempotents `e_1..e_r`.
#[derive(Clone, Debug)]
pub struct AugmentedAlgebra {
    pub carrier: Arc<Algebra>,
    pub block_sizes: Vec<usize>,
    /// `(Σ d_i²) x dim`, column convention.
    pub augmentation: Matrix,
    pub idempotents: Vec<Vector>,
    /// `m = ker π`.
    pub radical: Ideal,
    /// Linear right inverse of `augmentation`.
    section: Matrix,
}

impl AugmentedAlgebra {
    pub fn new(
        carrier: Arc<Algebra>,
        block_sizes: Vec<usize>,
        augmentation: Matrix,
        idempotents: Vec<Vector>,
    ) -> Result<Self> {
        let blocks = Arc::new(matrix_blocks_algebra(&block_sizes));
        let pi = AlgebraMorphism::new(carrier.clone(), blocks.clone(), augmentation.clone())?;
        if idempotents.len() != block_sizes.len() {
            return Err(AspecError::DimensionMismatch(
                "one idempotent per block expected".into(),
            ));
        }
        let offsets = block_offsets(&block_sizes);
        let mut total = carrier.zero();
        for (i, e) in idempotents.iter().enumerate() {
            for (j, f) in idempotents.iter().enumerate() {
                let expect = if i == j { e.clone() } else { carrier.zero() };
                if carrier.mul(e, f) != expect {
                    return Err(AspecError::Malformed(format!(
                        "idempotents {i} and {j} are not orthogonal idempotents"
                    )));
                }
            }
            let mut block_unit = zero_vec(blocks.dim());
            let d = block_sizes[i];
            for p in 0..d {
                block_unit[offsets[i] + p * d + p] = Scalar::one();
            }
            if pi.apply(e) != block_unit {
                return Err(AspecError::Malformed(format!(
                    "idempotent {i} does not map to the unit of its block"
                )));
            }
            axpy(&mut total, &Scalar::one(), e);
        }
        if total != *carrier.unit() {
            return Err(AspecError::Malformed("idempotents do not sum to one".into()));
        }
        let mut section_cols = Vec::with_capacity(blocks.dim());
        for k in 0..blocks.dim() {
            let sol = solve_linear(&augmentation, &unit_vec(blocks.dim(), k)).map_err(|_| {
                AspecError::Malformed("augmentation is not surjective".into())
            })?;
            section_cols.push(sol.particular);
        }
        let section = Matrix::from_columns(&section_cols, carrier.dim());
        let radical = Ideal::new(&carrier, pi.kernel())?;
        Ok(AugmentedAlgebra {
            carrier,
            block_sizes,
            augmentation,
            idempotents,
            radical,
            section,
        })
    }

    /// Augmentation by the simple modules of a split algebra, with the block
    /// idempotents of `A / rad` lifted to orthogonal idempotents of `A`.
    pub fn from_simple_modules(a: Arc<Algebra>) -> Result<Self> {
        let simples = simple_modules(&a)?;
        let sizes: Vec<usize> = simples.iter().map(|m| m.dim()).collect();
        let offsets = block_offsets(&sizes);
        let n = a.dim();
        let mut augmentation = Matrix::zeros(*offsets.last().unwrap(), n);
        for k in 0..n {
            for (b, m) in simples.iter().enumerate() {
                let act = &m.action()[k];
                let d = sizes[b];
                for p in 0..d {
                    for q in 0..d {
                        augmentation[(offsets[b] + p * d + q, k)] = act[(p, q)].clone();
                    }
                }
            }
        }
        let mut idempotents: Vec<Vector> = Vec::with_capacity(sizes.len());
        let mut rest = a.unit().clone();
        for b in 0..sizes.len() {
            let e = if b + 1 == sizes.len() {
                rest.clone()
            } else {
                let d = sizes[b];
                let mut target = zero_vec(augmentation.rows());
                for p in 0..d {
                    target[offsets[b] + p * d + p] = Scalar::one();
                }
                let x0 = solve_linear(&augmentation, &target)
                    .map_err(|_| AspecError::Malformed("augmentation is not surjective".into()))?
                    .particular;
                let x = a.mul(&a.mul(&rest, &x0), &rest);
                lift_idempotent(&a, x)
            };
            rest = sub_vec(&rest, &e);
            idempotents.push(e);
        }
        AugmentedAlgebra::new(a, sizes, augmentation, idempotents)
    }

    pub fn r(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn augment(&self, x: &[Scalar]) -> Vector {
        self.augmentation.mul_vec(x)
    }

    /// Block `i` of `π(x)` as a `d_i x d_i` matrix.
    pub fn augmentation_block(&self, x: &[Scalar], i: usize) -> Matrix {
        let y = self.augment(x);
        let o = block_offsets(&self.block_sizes)[i];
        let d = self.block_sizes[i];
        Matrix::from_rows(
            (0..d).map(|p| y[o + p * d..o + (p + 1) * d].to_vec()).collect(),
            d,
        )
    }

    /// Some linear preimage of a point of `⊕ Mat(d_i)`.
    pub fn section_of(&self, y: &[Scalar]) -> Vector {
        self.section.mul_vec(y)
    }
}

/// Newton iteration `x -> 3x² - 2x³` inside the corner containing `x`;
/// terminates because `x² - x` is nilpotent.
fn lift_idempotent(a: &Algebra, mut x: Vector) -> Vector {
    loop {
        let x2 = a.mul(&x, &x);
        if x2 == x {
            return x;
        }
        let x3 = a.mul(&x2, &x);
        let mut next = x2.iter().map(|c| c * &Scalar::from_int(3)).collect::<Vector>();
        axpy(&mut next, &Scalar::from_int(-2), &x3);
        x = next;
    }
}

/// Quotients `H / m^k` for `k = 1..=n` with the connecting surjections.
#[derive(Clone, Debug)]
pub struct TruncationTower {
    /// `levels[k-1] = H / m^k`.
    pub levels: Vec<Algebra>,
    /// `projections[k-1]: H -> H / m^k`.
    pub projections: Vec<Matrix>,
    /// `connecting[k-1]: H / m^{k+1} -> H / m^k`.
    pub connecting: Vec<AlgebraMorphism>,
    pub max_order: usize,
    carrier_dim: usize,
}

impl TruncationTower {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(Algebra::dim).collect()
    }

    /// Whether the top level already equals the carrier.
    pub fn is_complete(&self) -> bool {
        self.levels.last().map_or(self.carrier_dim == 0, |l| l.dim() == self.carrier_dim)
    }

    /// First order at which the tower stops growing.
    pub fn stabilizes_at(&self) -> Option<usize> {
        let dims = self.dims();
        (1..dims.len()).find(|&k| dims[k] == dims[k - 1])
    }
}

pub fn mtower(h: &AugmentedAlgebra, n: usize) -> Result<TruncationTower> {
    let a = &h.carrier;
    let mut levels = Vec::with_capacity(n);
    let mut projections = Vec::with_capacity(n);
    let mut complements: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut power = h.radical.clone();
    for k in 1..=n {
        let q = quotient_algebra(a, &power)?;
        levels.push(q.algebra.with_name(format!("{}/m^{k}", a.name())));
        projections.push(q.projection);
        complements.push(q.complement);
        power = Ideal::new(a, a.span_product(power.space(), h.radical.space()))?;
    }
    let mut connecting = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        // lift a basis element of level k+1 through its complement coordinate
        let cols: Vec<Vector> = complements[k]
            .iter()
            .map(|&c| projections[k - 1].column(c))
            .collect();
        let m = Matrix::from_columns(&cols, levels[k - 1].dim());
        connecting.push(AlgebraMorphism::new(
            Arc::new(levels[k].clone()),
            Arc::new(levels[k - 1].clone()),
            m,
        )?);
    }
    Ok(TruncationTower {
        levels,
        projections,
        connecting,
        max_order: n,
        carrier_dim: a.dim(),
    })
}

/// Inverse of `x` when every block of `π(x)` is invertible, built as a block
/// inverse lifted through the section and corrected by a finite geometric
/// series in `m`. `None` when some block is singular or `m` is not nilpotent.
pub fn is_unit_pointed(h: &AugmentedAlgebra, x: &[Scalar]) -> Option<Vector> {
    let a = &h.carrier;
    let mut inv_blocks = Vec::with_capacity(h.r());
    for i in 0..h.r() {
        inv_blocks.push(h.augmentation_block(x, i).inverse()?);
    }
    let y: Vector = inv_blocks.iter().flat_map(|m| m.entries().to_vec()).collect();
    let y0 = h.section_of(&y);
    // x y0 = 1 - u with u in m
    let u = sub_vec(a.unit(), &a.mul(x, &y0));
    let mut series = a.unit().clone();
    let mut power = a.unit().clone();
    for _ in 0..=a.dim() {
        power = a.mul(&power, &u);
        if is_zero_vec(&power) {
            let inv = a.mul(&y0, &series);
            debug_assert_eq!(a.mul(x, &inv), *a.unit());
            return Some(inv);
        }
        axpy(&mut series, &Scalar::one(), &power);
    }
    None
}

/// `T(V) / (ker π)²` with `V_ij = Q^{d_ij}`: basis `e_1..e_r`, then the
/// generators `t^{ij}_l` ordered by `(i, j, l)`, with `e_i t^{ij}_l e_j = t^{ij}_l`
/// and every product of two generators zero.
pub fn tangent_algebra(d: &[Vec<usize>]) -> Result<AugmentedAlgebra> {
    let r = d.len();
    if d.iter().any(|row| row.len() != r) {
        return Err(AspecError::DimensionMismatch(
            "tangent dimension grid must be r x r".into(),
        ));
    }
    let mut labels: Vec<String> = (0..r).map(|i| format!("e{}", i + 1)).collect();
    let mut gens = Vec::new();
    for (i, row) in d.iter().enumerate() {
        for (j, &dij) in row.iter().enumerate() {
            for l in 0..dij {
                gens.push((i, j));
                labels.push(format!("t{}{}_{}", i + 1, j + 1, l + 1));
            }
        }
    }
    let n = labels.len();
    let mut entries = Vec::new();
    for i in 0..r {
        entries.push((i, i, i, Scalar::one()));
    }
    for (g, &(i, j)) in gens.iter().enumerate() {
        entries.push((i, r + g, r + g, Scalar::one()));
        entries.push((r + g, j, r + g, Scalar::one()));
    }
    let mut unit = zero_vec(n);
    for u in unit.iter_mut().take(r) {
        *u = Scalar::one();
    }
    let label_refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let carrier = Algebra::from_entries("T", &label_refs, &entries, unit)?;
    let mut augmentation = Matrix::zeros(r, n);
    for i in 0..r {
        augmentation[(i, i)] = Scalar::one();
    }
    let idempotents = (0..r).map(|i| unit_vec(n, i)).collect();
    AugmentedAlgebra::new(Arc::new(carrier), vec![1; r], augmentation, idempotents)
}

/// The generalized matrix algebra `⊕_{i,j} e_i H e_j ⊗ Mat(d_i x d_j)` over a
/// `Q^r`-augmented `H`, with `(u ⊗ f)(v ⊗ g) = uv ⊗ fg`.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    pub base: AugmentedAlgebra,
    pub dims: Vec<usize>,
    /// `corners[i][j]` is `e_i H e_j` inside `H`.
    pub corners: Vec<Vec<Subspace>>,
    pub algebra: AugmentedAlgebra,
    offsets: Vec<Vec<usize>>,
    total: usize,
}

impl EndoAlgebra {
    /// Coordinate of `w_c ⊗ E_pq` where `w_c` is basis element `c` of corner `(i, j)`.
    pub fn index(&self, i: usize, j: usize, c: usize, p: usize, q: usize) -> usize {
        self.offsets[i][j] + (c * self.dims[i] + p) * self.dims[j] + q
    }

    /// `w ⊗ f` for `w ∈ e_i H e_j` and a `d_i x d_j` matrix `f`.
    pub fn embed(&self, i: usize, j: usize, w: &[Scalar], f: &Matrix) -> Result<Vector> {
        let coords = self.corners[i][j]
            .coords(w)
            .ok_or_else(|| AspecError::Malformed(format!("element outside corner ({i},{j})")))?;
        let mut out = zero_vec(self.total);
        for (c, wc) in coords.iter().enumerate() {
            if wc.is_zero() {
                continue;
            }
            for p in 0..self.dims[i] {
                for q in 0..self.dims[j] {
                    out[self.index(i, j, c, p, q)] += &(wc * &f[(p, q)]);
                }
            }
        }
        Ok(out)
    }

    /// Corner `(i, j)` component as `(corner coordinates c, d_i x d_j matrix)` pairs.
    pub fn component(&self, x: &[Scalar], i: usize, j: usize) -> Vec<Matrix> {
        (0..self.corners[i][j].dim())
            .map(|c| {
                let mut m = Matrix::zeros(self.dims[i], self.dims[j]);
                for p in 0..self.dims[i] {
                    for q in 0..self.dims[j] {
                        m[(p, q)] = x[self.index(i, j, c, p, q)].clone();
                    }
                }
                m
            })
            .collect()
    }
}

pub fn endo_algebra(h: &AugmentedAlgebra, dims: &[usize]) -> Result<EndoAlgebra> {
    if h.block_sizes.iter().any(|&d| d != 1) || dims.len() != h.r() {
        return Err(AspecError::DimensionMismatch(
            "endomorphism algebra needs a Q^r-augmented base and one dimension per point".into(),
        ));
    }
    let hc = &h.carrier;
    let r = h.r();
    let nh = hc.dim();
    let corners: Vec<Vec<Subspace>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let vs: Vec<Vector> = (0..nh)
                        .map(|b| {
                            let left = hc.mul(&h.idempotents[i], &unit_vec(nh, b));
                            hc.mul(&left, &h.idempotents[j])
                        })
                        .collect();
                    Subspace::span(nh, &vs)
                })
                .collect()
        })
        .collect();
    let mut offsets = vec![vec![0; r]; r];
    let mut total = 0;
    let mut labels = Vec::new();
    for i in 0..r {
        for j in 0..r {
            offsets[i][j] = total;
            for (c, w) in corners[i][j].basis().iter().enumerate() {
                let name = corner_label(hc, w, c);
                for p in 0..dims[i] {
                    for q in 0..dims[j] {
                        labels.push(format!("{name}⊗E{}{}[{},{}]", i + 1, j + 1, p + 1, q + 1));
                    }
                }
            }
            total += corners[i][j].dim() * dims[i] * dims[j];
        }
    }
    let mut partial = EndoAlgebra {
        base: h.clone(),
        dims: dims.to_vec(),
        corners,
        algebra: h.clone(),
        offsets,
        total,
    };
    let mut table = vec![vec![zero_vec(total); total]; total];
    for i in 0..r {
        for j in 0..r {
            for (c, u) in partial.corners[i][j].basis().iter().enumerate() {
                for k in 0..r {
                    for (c2, v) in partial.corners[j][k].basis().iter().enumerate() {
                        let uv = hc.mul(u, v);
                        let uv_coords = partial.corners[i][k]
                            .coords(&uv)
                            .expect("corner product stays in its corner");
                        for p in 0..dims[i] {
                            for q in 0..dims[j] {
                                for s in 0..dims[k] {
                                    let row = partial.index(i, j, c, p, q);
                                    let col = partial.index(j, k, c2, q, s);
                                    for (c3, coef) in uv_coords.iter().enumerate() {
                                        if !coef.is_zero() {
                                            table[row][col][partial.index(i, k, c3, p, s)] +=
                                                coef;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = zero_vec(total);
    let mut idempotents = Vec::with_capacity(r);
    for i in 0..r {
        let e = partial.embed(i, i, &h.idempotents[i], &Matrix::identity(dims[i]))?;
        axpy(&mut unit, &Scalar::one(), &e);
        idempotents.push(e);
    }
    let algebra = Algebra::new(format!("End({})", hc.name()), labels, table, unit)?;
    // π(w ⊗ f) = ε_i(w) f on diagonal corners
    let block_offs = block_offsets(dims);
    let mut augmentation = Matrix::zeros(*block_offs.last().unwrap(), total);
    for i in 0..r {
        for (c, w) in partial.corners[i][i].basis().iter().enumerate() {
            let eps = h.augment(w)[i].clone();
            if eps.is_zero() {
                continue;
            }
            let d = dims[i];
            for p in 0..d {
                for q in 0..d {
                    augmentation[(block_offs[i] + p * d + q, partial.index(i, i, c, p, q))] =
                        eps.clone();
                }
            }
        }
    }
    partial.algebra =
        AugmentedAlgebra::new(Arc::new(algebra), dims.to_vec(), augmentation, idempotents)?;
    Ok(partial)
}

fn corner_label(h: &Algebra, w: &[Scalar], c: usize) -> String {
    let support: Vec<usize> = (0..w.len()).filter(|&k| !w[k].is_zero()).collect();
    match support.as_slice() {
        [k] if w[*k].is_one() => h.labels()[*k].clone(),
        _ => format!("w{c}"),
    }
}

/// `Π(φ)`: applies `φ` to corner coordinates and keeps the `Hom` factors.
pub fn transport_endo(
    phi: &AlgebraMorphism,
    src: &EndoAlgebra,
    dst: &EndoAlgebra,
) -> Result<AlgebraMorphism> {
    if src.dims != dst.dims {
        return Err(AspecError::DimensionMismatch("families differ".into()));
    }
    for (e, f) in src.base.idempotents.iter().zip(&dst.base.idempotents) {
        if phi.apply(e) != *f {
            return Err(AspecError::IdempotentsNotPreserved);
        }
    }
    let r = src.dims.len();
    let mut cols = vec![Vector::new(); src.algebra.dim()];
    for i in 0..r {
        for j in 0..r {
            for (c, w) in src.corners[i][j].basis().iter().enumerate() {
                let image = phi.apply(w);
                for p in 0..src.dims[i] {
                    for q in 0..src.dims[j] {
                        let f = Matrix::unit(src.dims[i], src.dims[j], p, q);
                        cols[src.index(i, j, c, p, q)] = dst.embed(i, j, &image, &f)?;
                    }
                }
            }
        }
    }
    AlgebraMorphism::new(
        src.algebra.carrier.clone(),
        dst.algebra.carrier.clone(),
        Matrix::from_columns(&cols, dst.algebra.dim()),
    )
}

/// `A / p^n` for a commutative presentation `A` and a rational point `p`,
/// in coordinates centred at `p`.
#[derive(Clone, Debug)]
pub struct TruncatedLocalRing {
    pub presentation: Presentation,
    pub point: Vec<Scalar>,
    pub order: usize,
    pub carrier: Algebra,
    /// Monomials of degree `< order` in the shifted variables.
    pub monomials: Vec<Exponent>,
    /// `carrier.dim() x monomials.len()`.
    pub projection: Matrix,
}

impl TruncatedLocalRing {
    /// Image of a polynomial in the original variables.
    pub fn image(&self, f: &Polynomial) -> Vector {
        let shifted = f.shift(&self.point).truncate(self.order as u32);
        self.projection.mul_vec(&monomial_coords(&shifted, &self.monomials))
    }
}

fn monomial_coords(f: &Polynomial, monomials: &[Exponent]) -> Vector {
    let index: BTreeMap<&Exponent, usize> = monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut v = zero_vec(monomials.len());
    for (e, c) in f.terms() {
        v[index[e]] = c.clone();
    }
    v
}

fn monomial_label(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn check_point(presentation: &Presentation, point: &[Scalar]) -> Result<()> {
    if point.len() != presentation.nvars() {
        return Err(AspecError::DimensionMismatch(
            "point has the wrong number of coordinates".into(),
        ));
    }
    for (i, g) in presentation.relations.iter().enumerate() {
        if !g.eval(point).is_zero() {
            return Err(AspecError::PointNotOnVariety(i));
        }
    }
    Ok(())
}

pub fn truncated_local_quotient(
    presentation: &Presentation,
    point: &[Scalar],
    n: usize,
) -> Result<TruncatedLocalRing> {
    check_point(presentation, point)?;
    let nv = presentation.nvars();
    let monomials = if n == 0 {
        Vec::new()
    } else {
        monomials_up_to(nv, n as u32 - 1)
    };
    let index: BTreeMap<Exponent, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let m = monomials.len();
    let mut table = vec![vec![zero_vec(m); m]; m];
    for (i, a) in monomials.iter().enumerate() {
        for (j, b) in monomials.iter().enumerate() {
            let e: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if let Some(&k) = index.get(&e) {
                table[i][j][k] = Scalar::one();
            }
        }
    }
    let unit = if m == 0 { Vec::new() } else { unit_vec(m, 0) };
    let labels = monomials
        .iter()
        .map(|e| monomial_label(&presentation.vars, e))
        .collect();
    let truncated_poly = Algebra::new("P/(deg>=n)", labels, table, unit)?;
    let shifted: Vec<Polynomial> = presentation.relations.iter().map(|g| g.shift(point)).collect();
    let mut gens = Vec::new();
    for g in &shifted {
        for e in &monomials {
            let mg = Polynomial::monomial(e.clone()).mul(g).truncate(n as u32);
            gens.push(monomial_coords(&mg, &monomials));
        }
    }
    let ideal = Ideal::span(&truncated_poly, &gens)?;
    let q = quotient_algebra(&truncated_poly, &ideal)?;
    let name = format!(
        "A/p^{n} at ({})",
        point.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    );
    Ok(TruncatedLocalRing {
        presentation: presentation.clone(),
        point: point.to_vec(),
        order: n,
        carrier: q.algebra.with_name(name),
        monomials,
        projection: q.projection,
    })
}

/// `ker(A -> A/p^N)` restricted to elements of degree `<= d`, modulo the
/// relations of degree `<= d`.
#[derive(Clone, Debug)]
pub struct HausdorffSlice {
    /// Monomials of degree `<= d` in the original variables.
    pub monomials: Vec<Exponent>,
    /// Canonical residues of the kernel modulo the relation slice.
    pub kernel: Subspace,
}

impl HausdorffSlice {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn elements(&self) -> Vec<Polynomial> {
        self.kernel
            .basis()
            .iter()
            .map(|v| {
                let mut p = Polynomial::zero();
                for (e, c) in self.monomials.iter().zip(v) {
                    p.add_term(e.clone(), c.clone());
                }
                p
            })
            .collect()
    }
}

pub fn hausdorff_kernel_bounded(
    presentation: &Presentation,
    point: &[Scalar],
    d: usize,
    order: usize,
) -> Result<HausdorffSlice> {
    let local = truncated_local_quotient(presentation, point, order)?;
    let monomials = monomials_up_to(presentation.nvars(), d as u32);
    let cols: Vec<Vector> = monomials
        .iter()
        .map(|e| local.image(&Polynomial::monomial(e.clone())))
        .collect();
    let eval = Matrix::from_columns(&cols, local.carrier.dim());
    let kernel = kernel_basis(&eval);
    let mut rel = Vec::new();
    for g in &presentation.relations {
        for e in &monomials {
            let mg = Polynomial::monomial(e.clone()).mul(g);
            if mg.degree().is_some_and(|k| k as usize <= d) {
                rel.push(monomial_coords(&mg, &monomials));
            }
        }
    }
    let relations = Subspace::span(monomials.len(), &rel);
    let residues: Vec<Vector> = kernel.iter().map(|k| relations.reduce(k)).collect();
    Ok(HausdorffSlice {
        kernel: Subspace::span(monomials.len(), &residues),
        monomials,
    })
}
