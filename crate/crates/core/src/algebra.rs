//! Finite-dimensional algebras given by structure constants, and the
//! standard Leibniz invariants: kernel, centers, central series,
//! annihilators, ideal predicates.
//!
//! Indices are 0-based here; the text file format uses 1-based indices.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{check_field, Matrix, Vector};
use crate::subspace::Subspace;

/// `c[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    constants: Vec<Scalar>,
}

/// First basis triple on which the left Leibniz identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `[[e_i, e_j], e_k]`
    pub lhs: Vector,
    /// `[e_i, [e_j, e_k]] - [e_j, [e_i, e_k]]`
    pub rhs: Vector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "{c}"),
            Nilpotency::NotNilpotent => write!(f, "not nilpotent"),
        }
    }
}

impl Algebra {
    /// The abelian algebra of dimension `dim`.
    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        assert!(dim >= 1, "algebra dimension must be at least 1");
        Algebra {
            field,
            dim,
            constants: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Builds an algebra from a flat tensor indexed `(i * dim + j) * dim + k`.
    pub fn from_constants(field: FieldSpec, dim: usize, constants: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: constants.len(),
            });
        }
        for s in &constants {
            check_field(field, s)?;
        }
        Ok(Algebra {
            field,
            dim,
            constants,
        })
    }

    /// Sets `c[i][j][k]`.
    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, value: Scalar) -> Result<()> {
        check_field(self.field, &value)?;
        for idx in [i, j, k] {
            if idx >= self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: idx + 1,
                });
            }
        }
        let n = self.dim;
        self.constants[(i * n + j) * n + k] = value;
        Ok(())
    }

    /// Builder form of [`Algebra::set_constant`] for integer coefficients.
    pub fn with_bracket(mut self, i: usize, j: usize, k: usize, coeff: i64) -> Self {
        let value = self.field.from_i64(coeff);
        self.set_constant(i, j, k, value).expect("index in range");
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim;
        &self.constants[(i * n + j) * n + k]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.constants
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.dim;
        self.constants[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.constants[(i * n + j) * n + k];
                    if !c.is_zero() {
                        *o = &*o + &(&w * c);
                    }
                }
            }
        }
        out
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        v.iter().try_for_each(|s| check_field(self.field, s))
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: s.field().to_string(),
            });
        }
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn first_leibniz_violation(&self) -> Option<LeibnizViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let eij = self.basis_bracket(i, j);
                for k in 0..n {
                    let ek = self.basis_vector(k);
                    let lhs = self.bracket_unchecked(&eij, &ek);
                    let a = self.bracket_unchecked(&self.basis_vector(i), &self.basis_bracket(j, k));
                    let b = self.bracket_unchecked(&self.basis_vector(j), &self.basis_bracket(i, k));
                    let rhs: Vector = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                    if lhs != rhs {
                        return Some(LeibnizViolation { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        None
    }

    /// Left Leibniz identity `[[a,b],c] = [a,[b,c]] - [b,[a,c]]`, checked on
    /// basis triples (enough by trilinearity).
    pub fn is_left_leibniz(&self) -> bool {
        self.first_leibniz_violation().is_none()
    }

    /// `[a,a] = 0` for all `a`: zero diagonal brackets and antisymmetric
    /// off-diagonal pairs.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| self.basis_bracket(i, i).iter().all(Scalar::is_zero))
            && (0..n).all(|i| {
                (i + 1..n).all(|j| {
                    self.basis_bracket(i, j)
                        .iter()
                        .zip(self.basis_bracket(j, i))
                        .all(|(a, b)| (a + &b).is_zero())
                })
            })
    }

    /// Span of all squares `[a,a]`, via the polarization generators
    /// `[e_i,e_i]` and `[e_i,e_j] + [e_j,e_i]`.
    pub fn leibniz_kernel(&self) -> Result<Subspace> {
        if !self.is_left_leibniz() {
            return Err(Error::NotLeibniz);
        }
        let n = self.dim;
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.basis_bracket(i, i));
            for j in i + 1..n {
                let s: Vector = self
                    .basis_bracket(i, j)
                    .iter()
                    .zip(self.basis_bracket(j, i))
                    .map(|(a, b)| a + &b)
                    .collect();
                gens.push(s);
            }
        }
        Subspace::from_vectors(self.field, n, gens)
    }

    /// Matrix of `x ↦ [v, x]`.
    pub fn left_multiplication(&self, v: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|i| self.bracket_unchecked(v, &self.basis_vector(i)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("columns have length dim")
    }

    /// Matrix of `x ↦ [x, v]`.
    pub fn right_multiplication(&self, v: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|i| self.bracket_unchecked(&self.basis_vector(i), v))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("columns have length dim")
    }

    fn stacked_kernel(&self, blocks: Vec<Matrix>) -> Subspace {
        let rows: Vec<Vector> = blocks.iter().flat_map(Matrix::row_vectors).collect();
        if rows.is_empty() {
            return Subspace::full(self.field, self.dim);
        }
        Matrix::from_rows(self.field, rows)
            .expect("blocks share a column count")
            .solve_right_kernel()
    }

    fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim).map(|i| self.basis_vector(i)).collect()
    }

    /// `{x : [x, y] = 0 for all y}`
    pub fn left_center(&self) -> Subspace {
        let blocks = self
            .basis_vectors()
            .iter()
            .map(|e| self.right_multiplication(e))
            .collect();
        self.stacked_kernel(blocks)
    }

    /// `{x : [y, x] = 0 for all y}`
    pub fn right_center(&self) -> Subspace {
        let blocks = self
            .basis_vectors()
            .iter()
            .map(|e| self.left_multiplication(e))
            .collect();
        self.stacked_kernel(blocks)
    }

    pub fn center(&self) -> Subspace {
        self.left_center()
            .intersect(&self.right_center())
            .expect("both centers live in the same ambient space")
    }

    /// `[L, L]`
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.field, self.dim);
        self.product_subspace(&full, &full)
            .expect("full space matches the algebra")
    }

    /// `[A, B]`, the span of `[u, v]` over basis vectors of `a` and `b`.
    pub fn product_subspace(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let mut gens = Vec::with_capacity(a.dim() * b.dim());
        for u in a.basis() {
            for v in b.basis() {
                gens.push(self.bracket_unchecked(u, v));
            }
        }
        Subspace::from_vectors(self.field, self.dim, gens)
    }

    /// `γ_1 = L`, `γ_{k+1} = [L, γ_k]`, up to (not repeating) the first stable term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.field, self.dim);
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.product_subspace(&full, last).expect("same ambient space");
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `ζ_0 = 0`, `ζ_{k+1} = {x : [x, L] ⊆ ζ_k and [L, x] ⊆ ζ_k}`, up to the
    /// first stable term.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::zero(self.field, self.dim)];
        loop {
            let last = series.last().unwrap();
            let eqs = last.defining_equations();
            let mut blocks = Vec::with_capacity(2 * self.dim);
            for e in self.basis_vectors() {
                blocks.push(eqs.mul(&self.right_multiplication(&e)).expect("shapes agree"));
                blocks.push(eqs.mul(&self.left_multiplication(&e)).expect("shapes agree"));
            }
            let next = self.stacked_kernel(blocks);
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Least `c` with `γ_{c+1} = 0`.
    pub fn nilpotency_class(&self) -> Nilpotency {
        let series = self.lower_central_series();
        if series.last().is_some_and(Subspace::is_zero) {
            Nilpotency::Class(series.len() - 1)
        } else {
            Nilpotency::NotNilpotent
        }
    }

    /// `{a ∈ h : [a, m] = 0}`
    pub fn annihilator_left(&self, m: &Subspace, h: &Subspace) -> Result<Subspace> {
        self.check_subspace(m)?;
        self.check_subspace(h)?;
        let blocks = m.basis().iter().map(|v| self.right_multiplication(v)).collect();
        self.stacked_kernel(blocks).intersect(h)
    }

    /// `{a ∈ h : [m, a] = 0}`
    pub fn annihilator_right(&self, m: &Subspace, h: &Subspace) -> Result<Subspace> {
        self.check_subspace(m)?;
        self.check_subspace(h)?;
        let blocks = m.basis().iter().map(|v| self.left_multiplication(v)).collect();
        self.stacked_kernel(blocks).intersect(h)
    }

    pub fn annihilator(&self, m: &Subspace, h: &Subspace) -> Result<Subspace> {
        self.annihilator_left(m, h)?
            .intersect(&self.annihilator_right(m, h)?)
    }

    pub fn is_subalgebra(&self, a: &Subspace) -> Result<bool> {
        self.product_subspace(a, a)?.is_subspace_of(a)
    }

    /// Subalgebra with `[L, A] ⊆ A`.
    pub fn is_left_ideal(&self, a: &Subspace) -> Result<bool> {
        let full = Subspace::full(self.field, self.dim);
        Ok(self.is_subalgebra(a)? && self.product_subspace(&full, a)?.is_subspace_of(a)?)
    }

    /// Subalgebra with `[A, L] ⊆ A`.
    pub fn is_right_ideal(&self, a: &Subspace) -> Result<bool> {
        let full = Subspace::full(self.field, self.dim);
        Ok(self.is_subalgebra(a)? && self.product_subspace(a, &full)?.is_subspace_of(a)?)
    }

    pub fn is_ideal(&self, a: &Subspace) -> Result<bool> {
        Ok(self.is_left_ideal(a)? && self.is_right_ideal(a)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn lei3(field: FieldSpec) -> Algebra {
        Algebra::abelian(field, 3)
            .with_bracket(0, 0, 2, 1)
            .with_bracket(0, 1, 2, 1)
    }

    fn vec_q(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn bracket_general_elements() {
        let alg = lei3(q());
        let x = vec_q(&[1, 2, 3]);
        let y = vec_q(&[4, 5, 6]);
        // ξ1 (η1 + η2) a3 = 1 · 9 a3
        assert_eq!(alg.bracket(&x, &y).unwrap(), vec_q(&[0, 0, 9]));
        assert_eq!(alg.bracket(&vec_q(&[0, 0, 0]), &y).unwrap(), vec_q(&[0, 0, 0]));
        assert!(alg.bracket(&vec_q(&[1, 2]), &y).is_err());
    }

    #[test]
    fn idempotent_square_is_not_leibniz() {
        let alg = Algebra::abelian(q(), 1).with_bracket(0, 0, 0, 1);
        let v = alg.first_leibniz_violation().unwrap();
        assert_eq!((v.i, v.j, v.k), (0, 0, 0));
        assert_eq!(v.lhs, vec_q(&[1]));
        assert_eq!(v.rhs, vec_q(&[0]));
        assert_eq!(alg.leibniz_kernel(), Err(Error::NotLeibniz));
        assert_eq!(alg.nilpotency_class(), Nilpotency::NotNilpotent);
        assert_eq!(alg.lower_central_series().len(), 1);
    }

    #[test]
    fn lie_checks() {
        assert!(!lei3(q()).is_lie());
        assert!(Algebra::abelian(q(), 3).is_lie());
        let nonabelian = Algebra::abelian(q(), 2)
            .with_bracket(0, 1, 1, 1)
            .with_bracket(1, 0, 1, -1);
        assert!(nonabelian.is_lie());
        assert!(nonabelian.is_left_leibniz());
        assert!(nonabelian.leibniz_kernel().unwrap().is_zero());
    }

    #[test]
    fn lie_check_in_characteristic_two() {
        // [e1,e2] = [e2,e1] = e1 is antisymmetric in characteristic 2.
        let f2 = FieldSpec::prime(2).unwrap();
        let sym = Algebra::abelian(f2, 2).with_bracket(0, 1, 0, 1).with_bracket(1, 0, 0, 1);
        assert!(sym.is_lie());
        let sq = Algebra::abelian(f2, 2).with_bracket(1, 1, 0, 1);
        assert!(!sq.is_lie());
    }

    #[test]
    fn lei3_invariants() {
        let alg = lei3(q());
        let a3 = Subspace::coordinate(q(), 3, &[2]);
        let a23 = Subspace::coordinate(q(), 3, &[1, 2]);
        assert_eq!(alg.leibniz_kernel().unwrap(), a3);
        assert_eq!(alg.derived_subalgebra(), a3);
        assert_eq!(alg.center(), a3);
        assert_eq!(alg.left_center(), a23);
        assert_eq!(alg.nilpotency_class(), Nilpotency::Class(2));
        let upper = alg.upper_central_series();
        assert_eq!(upper[1], a3);
        assert!(upper.last().unwrap().is_full());
    }

    #[test]
    fn lei3_right_center_matches_enumeration() {
        let f3 = FieldSpec::prime(3).unwrap();
        let alg = lei3(f3);
        let elems: Vec<Scalar> = f3.elements().unwrap().collect();
        let mut members = Vec::new();
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let x = vec![a.clone(), b.clone(), c.clone()];
                    let kills = (0..3).all(|j| {
                        alg.bracket(&alg.basis_vector(j), &x).unwrap().iter().all(Scalar::is_zero)
                    });
                    if kills {
                        members.push(x);
                    }
                }
            }
        }
        // a1 - a2 is killed from the left since [a1, a1] = [a1, a2].
        assert_eq!(members.len(), 9);
        let rc = alg.right_center();
        assert_eq!(rc.dim(), 2);
        assert!(members.iter().all(|x| rc.contains(x).unwrap()));
        assert_eq!(rc.to_string(), "[1,2,0];[0,0,1]");
    }

    #[test]
    fn annihilators_of_a1() {
        let alg = lei3(q());
        let full = Subspace::full(q(), 3);
        let a1 = Subspace::coordinate(q(), 3, &[0]);
        let left = alg.annihilator_left(&a1, &full).unwrap();
        assert_eq!(left, Subspace::coordinate(q(), 3, &[1, 2]));
        // [a1, x] = (ξ1 + ξ2) a3
        let right = alg.annihilator_right(&a1, &full).unwrap();
        let expected = Subspace::from_vectors(q(), 3, vec![vec_q(&[1, -1, 0]), vec_q(&[0, 0, 1])]).unwrap();
        assert_eq!(right, expected);
        let zero = Subspace::zero(q(), 3);
        assert_eq!(alg.annihilator(&zero, &full).unwrap(), full);
    }

    #[test]
    fn ideals() {
        let alg = lei3(q());
        assert!(alg.is_ideal(&Subspace::coordinate(q(), 3, &[0, 2])).unwrap());
        let b = Subspace::coordinate(q(), 3, &[1]);
        assert!(alg.is_subalgebra(&b).unwrap());
        // [a2, L] = 0 but [a1, a2] = a3.
        assert!(alg.is_right_ideal(&b).unwrap());
        assert!(!alg.is_left_ideal(&b).unwrap());
        assert!(alg.is_ideal(&Subspace::full(q(), 3)).unwrap());
        // span{a1} is not even a subalgebra: [a1, a1] = a3.
        assert!(!alg.is_subalgebra(&Subspace::coordinate(q(), 3, &[0])).unwrap());
    }

    #[test]
    fn abelian_series() {
        let alg = Algebra::abelian(q(), 3);
        let lower = alg.lower_central_series();
        assert_eq!(lower.len(), 2);
        assert!(lower[1].is_zero());
        let upper = alg.upper_central_series();
        assert_eq!(upper.len(), 2);
        assert!(upper[1].is_full());
        assert_eq!(alg.nilpotency_class(), Nilpotency::Class(1));
        assert!(alg.center().is_full());
        assert!(alg.derived_subalgebra().is_zero());
    }
}
