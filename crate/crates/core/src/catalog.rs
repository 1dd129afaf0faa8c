//! The three non-Lie nilpotent Leibniz algebras of dimension 3 with basis
//! `a1, a2, a3`:
//!
//! * `Lei1`: `[a1,a1] = a2`, `[a1,a2] = a3` (class 3)
//! * `Lei2`: `[a1,a1] = a3` (class 2, two-dimensional center)
//! * `Lei3`: `[a1,a1] = [a1,a2] = a3` (class 2, one-dimensional center)
//!
//! All other basis brackets vanish.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::field::FieldSpec;

pub fn lei1(field: FieldSpec) -> Algebra {
    Algebra::abelian(field, 3)
        .with_bracket(0, 0, 1, 1)
        .with_bracket(0, 1, 2, 1)
}

pub fn lei2(field: FieldSpec) -> Algebra {
    Algebra::abelian(field, 3).with_bracket(0, 0, 2, 1)
}

pub fn lei3(field: FieldSpec) -> Algebra {
    Algebra::abelian(field, 3)
        .with_bracket(0, 0, 2, 1)
        .with_bracket(0, 1, 2, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogName {
    Lei1,
    Lei2,
    Lei3,
}

impl CatalogName {
    pub const ALL: [CatalogName; 3] = [CatalogName::Lei1, CatalogName::Lei2, CatalogName::Lei3];

    pub fn build(self, field: FieldSpec) -> Algebra {
        match self {
            CatalogName::Lei1 => lei1(field),
            CatalogName::Lei2 => lei2(field),
            CatalogName::Lei3 => lei3(field),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown catalog algebra {0:?} (expected lei1, lei2 or lei3)")]
pub struct UnknownName(pub String);

impl FromStr for CatalogName {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, UnknownName> {
        match s {
            "lei1" => Ok(CatalogName::Lei1),
            "lei2" => Ok(CatalogName::Lei2),
            "lei3" => Ok(CatalogName::Lei3),
            other => Err(UnknownName(other.to_string())),
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CatalogName::Lei1 => "lei1",
            CatalogName::Lei2 => "lei2",
            CatalogName::Lei3 => "lei3",
        };
        f.write_str(s)
    }
}
