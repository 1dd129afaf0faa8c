//! Endomorphism and automorphism predicates, brute-force automorphism
//! enumeration over prime fields, and finite matrix-group checks
//! (closure, normality, internal semidirect products, centralizers).

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lei3;
use crate::matrix::{Matrix, Vector};
use crate::subspace::Subspace;

/// Default cap on the number of candidate matrices `q^(n^2)`.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// A linear map of `F^n`, identified with its matrix (column `j` is the
/// image of `e_j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearMap(Matrix);

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(LinearMap(matrix))
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        LinearMap(Matrix::identity(field, n))
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        LinearMap(Matrix::zeros(field, n, n))
    }

    /// From integer rows as displayed (row `r`, column `c`).
    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        LinearMap::new(Matrix::from_i64_rows(field, rows))
    }

    /// From the images of the basis vectors.
    pub fn from_images(field: FieldSpec, images: &[Vector]) -> Result<Self> {
        LinearMap::new(Matrix::from_columns(field, images.len(), images)?)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field()
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.0.mul_vec(v)
    }

    /// `self ∘ rhs`, i.e. the matrix product `self · rhs`.
    pub fn compose(&self, rhs: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap(self.0.mul(&rhs.0)?))
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        Ok(LinearMap(self.0.invert()?))
    }

    pub fn is_invertible(&self) -> bool {
        self.0.determinant().is_ok_and(|d| !d.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        self.0.get(row, col)
    }
}

fn check_map(alg: &Algebra, f: &LinearMap) -> Result<()> {
    if f.field() != alg.field() {
        return Err(Error::FieldMismatch {
            left: alg.field().to_string(),
            right: f.field().to_string(),
        });
    }
    if f.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: f.dim(),
        });
    }
    Ok(())
}

/// `f([e_i, e_j]) = [f(e_i), f(e_j)]` for all basis pairs.
pub fn is_endomorphism(alg: &Algebra, f: &LinearMap) -> Result<bool> {
    check_map(alg, f)?;
    let n = alg.dim();
    let images: Vec<Vector> = (0..n).map(|i| f.matrix().column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&alg.basis_bracket(i, j))?;
            let rhs = alg.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_automorphism(alg: &Algebra, f: &LinearMap) -> Result<bool> {
    Ok(is_endomorphism(alg, f)? && f.is_invertible())
}

/// A finite set of square matrices of a common size over a common field.
/// Whether the set is a group is decided by [`MatrixGroup::is_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup {
    field: FieldSpec,
    dim: usize,
    elements: BTreeSet<LinearMap>,
}

impl MatrixGroup {
    pub fn new(field: FieldSpec, dim: usize, elements: impl IntoIterator<Item = LinearMap>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for f in elements {
            if f.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: f.field().to_string(),
                });
            }
            if f.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.dim(),
                });
            }
            set.insert(f);
        }
        Ok(MatrixGroup {
            field,
            dim,
            elements: set,
        })
    }

    pub fn trivial(field: FieldSpec, dim: usize) -> Self {
        MatrixGroup {
            field,
            dim,
            elements: BTreeSet::from([LinearMap::identity(field, dim)]),
        }
    }

    /// Returns the set unchanged if it is a group, [`Error::NotAGroup`] otherwise.
    pub fn into_validated(self) -> Result<Self> {
        if self.is_group() {
            Ok(self)
        } else {
            Err(Error::NotAGroup)
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, f: &LinearMap) -> bool {
        self.elements.contains(f)
    }

    pub fn iter(&self) -> impl Iterator<Item = &LinearMap> {
        self.elements.iter()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1 && self.iter().all(LinearMap::is_identity)
    }

    /// Identity present, closed under products and inverses.
    pub fn is_group(&self) -> bool {
        if !self.contains(&LinearMap::identity(self.field, self.dim)) {
            return false;
        }
        for a in &self.elements {
            match a.inverse() {
                Ok(inv) if self.contains(&inv) => {}
                _ => return false,
            }
            for b in &self.elements {
                let ab = a.compose(b).expect("members share field and size");
                if !self.contains(&ab) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_subset_of(&self, other: &MatrixGroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn intersection(&self, other: &MatrixGroup) -> Result<MatrixGroup> {
        check_compatible(self, other)?;
        Ok(MatrixGroup {
            field: self.field,
            dim: self.dim,
            elements: self.elements.intersection(&other.elements).cloned().collect(),
        })
    }

    fn filtered(&self, mut keep: impl FnMut(&LinearMap) -> Result<bool>) -> Result<MatrixGroup> {
        let mut elements = BTreeSet::new();
        for f in &self.elements {
            if keep(f)? {
                elements.insert(f.clone());
            }
        }
        Ok(MatrixGroup {
            field: self.field,
            dim: self.dim,
            elements,
        })
    }
}

fn check_compatible(a: &MatrixGroup, b: &MatrixGroup) -> Result<()> {
    if a.field != b.field {
        return Err(Error::FieldMismatch {
            left: a.field.to_string(),
            right: b.field.to_string(),
        });
    }
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    Ok(())
}

pub fn is_subgroup(h: &MatrixGroup, g: &MatrixGroup) -> Result<bool> {
    check_compatible(h, g)?;
    Ok(h.is_subset_of(g) && h.is_group())
}

/// Subgroup with `x⁻¹ n x ∈ N` for every `x ∈ G`, `n ∈ N`.
pub fn is_normal(n: &MatrixGroup, g: &MatrixGroup) -> Result<bool> {
    if !is_subgroup(n, g)? {
        return Ok(false);
    }
    for x in g.iter() {
        let x_inv = x.inverse()?;
        for m in n.iter() {
            let conj = x_inv.compose(m)?.compose(x)?;
            if !n.contains(&conj) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `G = N ⋊ H`: `N` normal, `H` a subgroup, `N ∩ H = 1`, `NH = G`.
pub fn is_internal_semidirect(g: &MatrixGroup, n: &MatrixGroup, h: &MatrixGroup) -> Result<bool> {
    check_compatible(g, n)?;
    check_compatible(g, h)?;
    if !is_normal(n, g)? || !is_subgroup(h, g)? || !n.intersection(h)?.is_trivial() {
        return Ok(false);
    }
    let mut products = BTreeSet::new();
    for x in n.iter() {
        for y in h.iter() {
            products.insert(x.compose(y)?);
        }
    }
    Ok(products == g.elements)
}

/// `C_G(A)`: elements of `g` fixing `a` pointwise.
pub fn centralizer_of_subalgebra(g: &MatrixGroup, a: &Subspace) -> Result<MatrixGroup> {
    check_subspace(g, a)?;
    g.filtered(|f| {
        for v in a.basis() {
            if &f.apply(v)? != v {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// `C_G(L/A)`: elements acting trivially on `L/A`. `a` must be `g`-invariant.
pub fn centralizer_of_quotient(g: &MatrixGroup, a: &Subspace) -> Result<MatrixGroup> {
    check_subspace(g, a)?;
    for f in g.iter() {
        if !a.image_under(f.matrix())?.is_subspace_of(a)? {
            return Err(Error::NotInvariant);
        }
    }
    let n = g.dim();
    g.filtered(|f| {
        for i in 0..n {
            let mut d = f.matrix().column(i);
            d[i] = &d[i] - &g.field().one();
            if !a.contains(&d)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn check_subspace(g: &MatrixGroup, a: &Subspace) -> Result<()> {
    if a.field() != g.field() {
        return Err(Error::FieldMismatch {
            left: g.field().to_string(),
            right: a.field().to_string(),
        });
    }
    if a.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: a.ambient_dim(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariance {
    /// `f(S) = S`
    Equal,
    /// `f(S) ⊊ S`
    MappedInto,
    Neither,
}

pub fn invariance_check(alg: &Algebra, f: &LinearMap, s: &Subspace) -> Result<Invariance> {
    check_map(alg, f)?;
    let image = s.image_under(f.matrix())?;
    Ok(if &image == s {
        Invariance::Equal
    } else if image.is_subspace_of(s)? {
        Invariance::MappedInto
    } else {
        Invariance::Neither
    })
}

/// All automorphisms of `alg` over its prime field, by exhaustive search
/// over the `q^(n^2)` matrices.
pub fn enumerate_automorphisms(alg: &Algebra, budget: u64) -> Result<MatrixGroup> {
    let p = alg.field().modulus().ok_or(Error::NotFiniteField)?;
    let n = alg.dim();
    let cells = u32::try_from(n * n).map_err(|_| Error::BudgetExceeded {
        candidates: format!("{p}^{}", n * n),
        budget,
    })?;
    match u64::from(p).checked_pow(cells) {
        Some(c) if c <= budget => {}
        _ => {
            return Err(Error::BudgetExceeded {
                candidates: format!("{p}^{cells}"),
                budget,
            })
        }
    }

    let search = ResidueSearch::new(alg, p);
    let field = alg.field();
    let mut found = Vec::new();
    let mut m = vec![0u32; n * n];
    loop {
        if search.det(&m) != 0 && search.is_endomorphism(&m) {
            let rows: Vec<Vector> = m
                .chunks(n)
                .map(|r| r.iter().map(|&x| field.from_i64(i64::from(x))).collect())
                .collect();
            found.push(LinearMap(Matrix::from_rows(field, rows)?));
        }
        if !odometer_step(&mut m, p) {
            break;
        }
    }
    MatrixGroup::new(field, n, found)?.into_validated()
}

/// Advances `digits` as a base-`p` counter; false once it wraps to zero.
fn odometer_step(digits: &mut [u32], p: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// Residue-level view of an algebra over `F_p`, for the enumeration hot loop.
struct ResidueSearch {
    p: u64,
    n: usize,
    /// Nonzero structure constants `(i, j, k, c)`.
    terms: Vec<(usize, usize, usize, u64)>,
}

impl ResidueSearch {
    fn new(alg: &Algebra, p: u32) -> Self {
        let n = alg.dim();
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = alg.constant(i, j, k).residue().expect("prime field");
                    if c != 0 {
                        terms.push((i, j, k, u64::from(c)));
                    }
                }
            }
        }
        ResidueSearch {
            p: u64::from(p),
            n,
            terms,
        }
    }

    fn det(&self, m: &[u32]) -> u64 {
        let (n, p) = (self.n, self.p);
        let mut a: Vec<u64> = m.iter().map(|&x| u64::from(x)).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = pow_mod(pv, p - 2, p);
            for r in col + 1..n {
                let factor = a[r * n + col] * inv % p;
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = factor * a[col * n + j] % p;
                    a[r * n + j] = (a[r * n + j] + p - sub) % p;
                }
            }
        }
        det
    }

    /// `M c(i,j,·) = Σ_{a,b} M[a][i] M[b][j] c(a,b,·)` for every pair `(i, j)`.
    fn is_endomorphism(&self, m: &[u32]) -> bool {
        let (n, p) = (self.n, self.p);
        let at = |r: usize, c: usize| u64::from(m[r * n + c]);
        let mut lhs = vec![0u64; n];
        let mut rhs = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                lhs.iter_mut().for_each(|x| *x = 0);
                rhs.iter_mut().for_each(|x| *x = 0);
                for &(a, b, k, c) in &self.terms {
                    if a == i && b == j {
                        for (r, l) in lhs.iter_mut().enumerate() {
                            *l = (*l + at(r, k) * c) % p;
                        }
                    }
                    let w = at(a, i) * at(b, j) % p;
                    if w != 0 {
                        rhs[k] = (rhs[k] + w * c) % p;
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Checks that `map` is a bijective homomorphism from the finite group
/// `(domain, op)` onto `target`.
pub fn is_isomorphism_witness<D>(
    domain: &[D],
    op: impl Fn(&D, &D) -> D,
    map: impl Fn(&D) -> Result<LinearMap>,
    target: &MatrixGroup,
) -> Result<bool> {
    if domain.len() != target.order() {
        return Ok(false);
    }
    let images = domain.iter().map(&map).collect::<Result<Vec<_>>>()?;
    let distinct: BTreeSet<&LinearMap> = images.iter().collect();
    if distinct.len() != images.len() || !images.iter().all(|f| target.contains(f)) {
        return Ok(false);
    }
    for (a, fa) in domain.iter().zip(&images) {
        for (b, fb) in domain.iter().zip(&images) {
            if map(&op(a, b))? != fa.compose(fb)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(α₃, β₃) ↦ t_matrix(α₃, β₃)` is an isomorphism `(F_q,+)² → t`.
pub fn witness_iso_to_additive_pairs(t: &MatrixGroup) -> Result<bool> {
    let field = t.field();
    let elems: Vec<Scalar> = field.elements().ok_or(Error::NotFiniteField)?.collect();
    let pairs: Vec<(Scalar, Scalar)> = elems
        .iter()
        .flat_map(|x| elems.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    is_isomorphism_witness(
        &pairs,
        |(a, b), (c, d)| (a + c, b + d),
        |(x, y)| lei3::t_matrix(x, y),
        t,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicativeKind {
    /// `σ ↦ j_matrix(σ - 1)`
    J,
    /// `σ ↦ d_matrix(σ)`
    D,
}

/// The parametrization of `h` by `σ ∈ F_q^×` is an isomorphism.
pub fn witness_iso_to_multiplicative(h: &MatrixGroup, kind: MultiplicativeKind) -> Result<bool> {
    let field = h.field();
    let units: Vec<Scalar> = field.units().ok_or(Error::NotFiniteField)?.collect();
    let one = field.one();
    is_isomorphism_witness(
        &units,
        |a, b| a * b,
        |s| match kind {
            MultiplicativeKind::J => lei3::j_matrix(&(s - &one)),
            MultiplicativeKind::D => lei3::d_matrix(s),
        },
        h,
    )
}
