//! Subspaces of `F^n` in canonical reduced row-echelon form.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{check_field, format_vector, Matrix, Vector};

/// A linear subspace of `F^n`. The basis is the nonzero part of the RREF of
/// any spanning set, so two subspaces are equal iff their representations are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            field,
            ambient_dim: n,
            basis: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace::from_matrix(&Matrix::identity(field, n))
    }

    /// Span of `e_i` for the given 0-based indices.
    pub fn coordinate(field: FieldSpec, n: usize, indices: &[usize]) -> Self {
        let vecs = indices
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); n];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace::from_vectors(field, n, vecs).expect("coordinate index in range")
    }

    pub fn from_vectors(field: FieldSpec, n: usize, vectors: Vec<Vector>) -> Result<Self> {
        for v in &vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
            for s in v {
                check_field(field, s)?;
            }
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(field, n));
        }
        Ok(Subspace::from_matrix(&Matrix::from_rows(field, vectors)?))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, rank) = m.rref();
        Subspace {
            field: m.field(),
            ambient_dim: m.cols(),
            basis: (0..rank).map(|i| r.row(i)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        for s in v {
            check_field(self.field, s)?;
        }
        if v.iter().all(|s| s.is_zero()) {
            return Ok(true);
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(Matrix::from_rows(self.field, rows)?.rank() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let rows: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::from_vectors(self.field, self.ambient_dim, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        // U ∩ W = (U⊥ + W⊥)⊥ for the standard bilinear form, which is
        // nondegenerate over every field.
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{w : <v, w> = 0 for all v in self}` under the standard bilinear form.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient_dim);
        }
        Matrix::from_rows(self.field, self.basis.clone())
            .expect("basis rows share a length")
            .solve_right_kernel()
    }

    /// A matrix whose right kernel is exactly this subspace.
    pub fn defining_equations(&self) -> Matrix {
        let ann = self.annihilator();
        if ann.basis.is_empty() {
            Matrix::zeros(self.field, 1, self.ambient_dim)
        } else {
            Matrix::from_rows(self.field, ann.basis).expect("rows share a length")
        }
    }

    /// Image of this subspace under the linear map with matrix `m` (column convention).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        let imgs = self
            .basis
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.field, m.rows(), imgs)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

/// Basis rows joined by `;`, or `(empty)` for the zero subspace.
impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "(empty)");
        }
        let rows: Vec<String> = self.basis.iter().map(|v| format_vector(v)).collect();
        write!(f, "{}", rows.join(";"))
    }
}
