//! The automorphism group of `Lei3` (`[a1,a1] = [a1,a2] = a3`).
//!
//! Every automorphism has the matrix
//!
//! ```text
//! | α₁  0        0         |
//! | α₂  α₁+α₂    0         |
//! | α₃  β₃       α₁²+α₁α₂  |
//! ```
//!
//! with `α₁ ≠ 0` and `α₁ + α₂ ≠ 0`, and the group splits as `G = S ⋊ D`,
//! `S = T ⋊ J` for the families built below. Products follow the column
//! convention, and factorizations put `S` (resp. `T`) on the left.

use crate::aut::{
    self, centralizer_of_quotient, enumerate_automorphisms, is_internal_semidirect, is_normal,
    LinearMap, MatrixGroup, MultiplicativeKind,
};
use crate::catalog;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::report::Report;

/// Free parameters of an automorphism; `β₂ = α₁ + α₂` is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutParams {
    alpha1: Scalar,
    alpha2: Scalar,
    alpha3: Scalar,
    beta3: Scalar,
}

impl AutParams {
    pub fn new(alpha1: Scalar, alpha2: Scalar, alpha3: Scalar, beta3: Scalar) -> Result<Self> {
        common_field(&[&alpha1, &alpha2, &alpha3, &beta3])?;
        if alpha1.is_zero() {
            return Err(Error::InadmissibleParams("α₁ = 0"));
        }
        if (&alpha1 + &alpha2).is_zero() {
            return Err(Error::InadmissibleParams("α₁ + α₂ = 0"));
        }
        Ok(AutParams {
            alpha1,
            alpha2,
            alpha3,
            beta3,
        })
    }

    pub fn from_i64(field: FieldSpec, a1: i64, a2: i64, a3: i64, b3: i64) -> Result<Self> {
        AutParams::new(
            field.from_i64(a1),
            field.from_i64(a2),
            field.from_i64(a3),
            field.from_i64(b3),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.alpha1.field()
    }

    pub fn alpha1(&self) -> &Scalar {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &Scalar {
        &self.alpha2
    }

    pub fn alpha3(&self) -> &Scalar {
        &self.alpha3
    }

    pub fn beta3(&self) -> &Scalar {
        &self.beta3
    }

    pub fn beta2(&self) -> Scalar {
        &self.alpha1 + &self.alpha2
    }

    /// Reads the parameters back off a matrix of the general form,
    /// rejecting anything that deviates from it.
    pub fn from_matrix(g: &LinearMap) -> Result<Self> {
        if g.dim() != 3 {
            return Err(Error::NotInFamily("not a 3x3 matrix"));
        }
        let e = |r, c| g.entry(r, c).clone();
        if !(e(0, 1).is_zero() && e(0, 2).is_zero() && e(1, 2).is_zero()) {
            return Err(Error::NotInFamily("nonzero entry above the diagonal"));
        }
        let (a1, a2, a3, b3) = (e(0, 0), e(1, 0), e(2, 0), e(2, 1));
        if e(1, 1) != &a1 + &a2 {
            return Err(Error::NotInFamily("β₂ ≠ α₁ + α₂"));
        }
        if e(2, 2) != &(&a1 * &a1) + &(&a1 * &a2) {
            return Err(Error::NotInFamily("(3,3) entry ≠ α₁² + α₁α₂"));
        }
        AutParams::new(a1, a2, a3, b3).map_err(|_| Error::NotInFamily("inadmissible parameters"))
    }
}

fn common_field(xs: &[&Scalar]) -> Result<FieldSpec> {
    let field = xs[0].field();
    for x in &xs[1..] {
        if x.field() != field {
            return Err(Error::FieldMismatch {
                left: field.to_string(),
                right: x.field().to_string(),
            });
        }
    }
    Ok(field)
}

fn from_rows(field: FieldSpec, rows: [[Scalar; 3]; 3]) -> LinearMap {
    let rows = rows.into_iter().map(Vec::from).collect();
    LinearMap::new(Matrix::from_rows(field, rows).expect("entries share the field"))
        .expect("square")
}

pub fn general_aut_matrix(p: &AutParams) -> LinearMap {
    let field = p.field();
    let z = field.zero();
    let corner = &(&p.alpha1 * &p.alpha1) + &(&p.alpha1 * &p.alpha2);
    let g = from_rows(
        field,
        [
            [p.alpha1.clone(), z.clone(), z.clone()],
            [p.alpha2.clone(), p.beta2(), z],
            [p.alpha3.clone(), p.beta3.clone(), corner],
        ],
    );
    debug_assert!(aut::is_automorphism(&catalog::lei3(field), &g).unwrap_or(false));
    g
}

/// The `S` family: `α₁ = 1`. Requires `1 + α₂ ≠ 0`.
pub fn s_matrix(alpha2: &Scalar, alpha3: &Scalar, beta3: &Scalar) -> Result<LinearMap> {
    let field = common_field(&[alpha2, alpha3, beta3])?;
    let d = &field.one() + alpha2;
    if d.is_zero() {
        return Err(Error::InadmissibleParams("1 + α₂ = 0"));
    }
    let (o, z) = (field.one(), field.zero());
    Ok(from_rows(
        field,
        [
            [o, z.clone(), z.clone()],
            [alpha2.clone(), d.clone(), z],
            [alpha3.clone(), beta3.clone(), d],
        ],
    ))
}

/// The unitriangular `T` family.
pub fn t_matrix(alpha3: &Scalar, beta3: &Scalar) -> Result<LinearMap> {
    let field = common_field(&[alpha3, beta3])?;
    let (o, z) = (field.one(), field.zero());
    Ok(from_rows(
        field,
        [
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z],
            [alpha3.clone(), beta3.clone(), o],
        ],
    ))
}

/// The `J` family: `a1 ↦ a1 + λa2`, `a2 ↦ (1+λ)a2`, `a3 ↦ (1+λ)a3`.
pub fn j_matrix(lambda: &Scalar) -> Result<LinearMap> {
    let field = lambda.field();
    let d = &field.one() + lambda;
    if d.is_zero() {
        return Err(Error::InadmissibleParams("1 + λ = 0"));
    }
    let (o, z) = (field.one(), field.zero());
    Ok(from_rows(
        field,
        [
            [o, z.clone(), z.clone()],
            [lambda.clone(), d.clone(), z.clone()],
            [z.clone(), z, d],
        ],
    ))
}

/// The `D` family: `diag(σ, σ, σ²)`.
pub fn d_matrix(sigma: &Scalar) -> Result<LinearMap> {
    if sigma.is_zero() {
        return Err(Error::InadmissibleParams("σ = 0"));
    }
    let field = sigma.field();
    let z = field.zero();
    Ok(from_rows(
        field,
        [
            [sigma.clone(), z.clone(), z.clone()],
            [z.clone(), sigma.clone(), z.clone()],
            [z.clone(), z, sigma * sigma],
        ],
    ))
}

/// `v(x) = ξ₁a₁ + (ξ₁λ + ξ₂ + ξ₂λ)a₂ + (ξ₁μ + ξ₂ν + ξ₃(1+λ))a₃`, built
/// by applying the rule to the basis.
pub fn make_v(lambda: &Scalar, mu: &Scalar, nu: &Scalar) -> Result<LinearMap> {
    let field = common_field(&[lambda, mu, nu])?;
    let one = field.one();
    if (&one + lambda).is_zero() {
        return Err(Error::InadmissibleParams("1 + λ = 0"));
    }
    let rule = |xi: [Scalar; 3]| {
        let [x1, x2, x3] = xi;
        vec![
            x1.clone(),
            &(&(&x1 * lambda) + &x2) + &(&x2 * lambda),
            &(&(&x1 * mu) + &(&x2 * nu)) + &(&x3 * &(&one + lambda)),
        ]
    };
    let images: Vec<_> = basis(field).into_iter().map(rule).collect();
    LinearMap::from_images(field, &images)
}

/// `z(x) = ξ₁a₁ + ξ₂a₂ + (ξ₁λ + ξ₂μ + ξ₃)a₃`.
pub fn make_z(lambda: &Scalar, mu: &Scalar) -> Result<LinearMap> {
    let field = common_field(&[lambda, mu])?;
    let rule = |xi: [Scalar; 3]| {
        let [x1, x2, x3] = xi;
        let c = &(&(&x1 * lambda) + &(&x2 * mu)) + &x3;
        vec![x1, x2, c]
    };
    let images: Vec<_> = basis(field).into_iter().map(rule).collect();
    LinearMap::from_images(field, &images)
}

fn basis(field: FieldSpec) -> [[Scalar; 3]; 3] {
    let (o, z) = (field.one(), field.zero());
    [
        [o.clone(), z.clone(), z.clone()],
        [z.clone(), o.clone(), z.clone()],
        [z.clone(), z, o],
    ]
}

/// Splits `g` as `s · d` with `d = d_matrix(α₁)` and
/// `s = s_matrix(α₂/α₁, α₃/α₁, β₃/α₁)`.
pub fn factor_sd(g: &LinearMap) -> Result<(LinearMap, LinearMap)> {
    let p = AutParams::from_matrix(g)?;
    let inv = p.alpha1.inv()?;
    let s = s_matrix(&(&p.alpha2 * &inv), &(&p.alpha3 * &inv), &(&p.beta3 * &inv))?;
    let d = d_matrix(&p.alpha1)?;
    Ok((s, d))
}

/// Parameters `(α₂, α₃, β₃)` of a matrix in the `S` family.
pub fn s_params(s: &LinearMap) -> Result<(Scalar, Scalar, Scalar)> {
    let p = AutParams::from_matrix(s)?;
    if !p.alpha1.is_one() {
        return Err(Error::NotInFamily("α₁ ≠ 1"));
    }
    Ok((p.alpha2, p.alpha3, p.beta3))
}

/// Splits `s` as `t · j` with `j = j_matrix(z)`, `t = t_matrix(x, y)`,
/// where `z = α₂`, `y = β₃/(1+α₂)`, `x = α₃ - yα₂`.
pub fn factor_tj(s: &LinearMap) -> Result<(LinearMap, LinearMap)> {
    let (a2, a3, b3) = s_params(s)?;
    let y = b3.checked_div(&(&s.field().one() + &a2))?;
    let x = &a3 - &(&y * &a2);
    Ok((t_matrix(&x, &y)?, j_matrix(&a2)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    G,
    S,
    T,
    J,
    D,
}

/// The full family over a finite field, deduplicated and validated as a group.
pub fn family(kind: FamilyKind, field: FieldSpec) -> Result<MatrixGroup> {
    let elems: Vec<Scalar> = field.elements().ok_or(Error::NotFiniteField)?.collect();
    let units: Vec<Scalar> = field.units().ok_or(Error::NotFiniteField)?.collect();
    let mut out = Vec::new();
    match kind {
        FamilyKind::G => {
            for a1 in &units {
                for a2 in &elems {
                    for a3 in &elems {
                        for b3 in &elems {
                            if let Ok(p) = AutParams::new(a1.clone(), a2.clone(), a3.clone(), b3.clone()) {
                                out.push(general_aut_matrix(&p));
                            }
                        }
                    }
                }
            }
        }
        FamilyKind::S => {
            for a2 in &elems {
                for a3 in &elems {
                    for b3 in &elems {
                        if let Ok(s) = s_matrix(a2, a3, b3) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        FamilyKind::T => {
            for a3 in &elems {
                for b3 in &elems {
                    out.push(t_matrix(a3, b3)?);
                }
            }
        }
        FamilyKind::J => out.extend(elems.iter().filter_map(|l| j_matrix(l).ok())),
        FamilyKind::D => {
            for s in &units {
                out.push(d_matrix(s)?);
            }
        }
    }
    MatrixGroup::new(field, 3, out)?.into_validated()
}

/// Group orders observed while checking the theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupOrders {
    pub g: usize,
    pub s: usize,
    pub t: usize,
    pub j: usize,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub field: FieldSpec,
    pub orders: GroupOrders,
    pub claims: Vec<Claim>,
}

impl TheoremReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new();
        r.push("field", self.field);
        r.push("g_order", self.orders.g);
        r.push("s_order", self.orders.s);
        r.push("t_order", self.orders.t);
        r.push("j_order", self.orders.j);
        r.push("d_order", self.orders.d);
        for c in &self.claims {
            r.push(format!("claim_{}", c.id), if c.passed { "pass" } else { "fail" });
        }
        r
    }
}

type Check<'a> = Box<dyn Fn() -> Result<bool> + 'a>;

/// Checks every structural claim about `Aut(Lei3)` over a finite field
/// against the brute-force automorphism group.
pub fn verify_theorem(field: FieldSpec, budget: u64) -> Result<TheoremReport> {
    if !field.is_finite() {
        return Err(Error::NotFiniteField);
    }
    let alg = catalog::lei3(field);
    let enumerated = enumerate_automorphisms(&alg, budget)?;
    let g = family(FamilyKind::G, field)?;
    let s = family(FamilyKind::S, field)?;
    let t = family(FamilyKind::T, field)?;
    let j = family(FamilyKind::J, field)?;
    let d = family(FamilyKind::D, field)?;

    let checks: [(&'static str, Check<'_>); 8] = [
        ("brute-force automorphisms equal the parametric family", Box::new(|| Ok(enumerated == g))),
        (
            "S is the centralizer of L/left_center and is normal",
            Box::new(|| {
                let c = centralizer_of_quotient(&enumerated, &alg.left_center())?;
                Ok(c == s && is_normal(&s, &enumerated)?)
            }),
        ),
        ("G = S ⋊ D", Box::new(|| is_internal_semidirect(&g, &s, &d))),
        ("S = T ⋊ J", Box::new(|| is_internal_semidirect(&s, &t, &j))),
        ("T is normal in G", Box::new(|| is_normal(&t, &g))),
        (
            "T ∩ J and S ∩ D are trivial",
            Box::new(|| Ok(t.intersection(&j)?.is_trivial() && s.intersection(&d)?.is_trivial())),
        ),
        (
            "T ≅ F⁺ × F⁺, J ≅ F^×, D ≅ F^×",
            Box::new(|| {
                Ok(aut::witness_iso_to_additive_pairs(&t)?
                    && aut::witness_iso_to_multiplicative(&j, MultiplicativeKind::J)?
                    && aut::witness_iso_to_multiplicative(&d, MultiplicativeKind::D)?)
            }),
        ),
        (
            "factorizations g = s·d and s = t·j round-trip",
            Box::new(|| {
                for x in g.iter() {
                    let (sx, dx) = factor_sd(x)?;
                    if !s.contains(&sx) || !d.contains(&dx) || &sx.compose(&dx)? != x {
                        return Ok(false);
                    }
                }
                for x in s.iter() {
                    let (tx, jx) = factor_tj(x)?;
                    if !t.contains(&tx) || !j.contains(&jx) || &tx.compose(&jx)? != x {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
        ),
    ];

    let claims = checks
        .iter()
        .enumerate()
        .map(|(i, (name, check))| Claim {
            id: i + 1,
            name,
            passed: check().unwrap_or(false),
        })
        .collect();

    Ok(TheoremReport {
        field,
        orders: GroupOrders {
            g: enumerated.order(),
            s: s.order(),
            t: t.order(),
            j: j.order(),
            d: d.order(),
        },
        claims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn m(field: FieldSpec, rows: &[&[i64]]) -> LinearMap {
        LinearMap::from_i64_rows(field, rows).unwrap()
    }

    #[test]
    fn general_matrix_examples() {
        let k = f(5);
        let id = general_aut_matrix(&AutParams::from_i64(k, 1, 0, 0, 0).unwrap());
        assert!(id.is_identity());
        let g = general_aut_matrix(&AutParams::from_i64(k, 2, 1, 3, 4).unwrap());
        assert_eq!(g, m(k, &[&[2, 0, 0], &[1, 3, 0], &[3, 4, 1]]));
        assert!(aut::is_automorphism(&catalog::lei3(k), &g).unwrap());
        assert_eq!(
            AutParams::from_i64(k, 0, 1, 0, 0),
            Err(Error::InadmissibleParams("α₁ = 0"))
        );
        assert!(AutParams::from_i64(k, 2, 3, 0, 0).is_err());
    }

    #[test]
    fn family_matrix_examples() {
        let k = f(5);
        assert!(t_matrix(&k.zero(), &k.zero()).unwrap().is_identity());
        assert_eq!(d_matrix(&k.from_i64(2)).unwrap(), m(k, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 4]]));
        let f3 = f(3);
        assert_eq!(j_matrix(&f3.one()).unwrap(), m(f3, &[&[1, 0, 0], &[1, 2, 0], &[0, 0, 2]]));
        assert!(j_matrix(&f3.from_i64(2)).is_err());
        assert!(d_matrix(&k.zero()).is_err());
        assert!(s_matrix(&k.from_i64(4), &k.zero(), &k.zero()).is_err());
    }

    #[test]
    fn v_and_z_rules() {
        let f3 = f(3);
        assert!(make_z(&f3.zero(), &f3.zero()).unwrap().is_identity());
        let v = make_v(&f3.from_i64(1), &f3.from_i64(2), &f3.from_i64(3)).unwrap();
        // image of a2: (1 + λ) a2 + ν a3 = 2 a2 + 0 a3
        assert_eq!(v.matrix().column(1), vec![f3.zero(), f3.from_i64(2), f3.zero()]);
        assert!(make_v(&f3.from_i64(2), &f3.zero(), &f3.zero()).is_err());
        for (l, mu, nu) in [(0, 0, 0), (1, 2, 0), (1, 1, 1)] {
            let (l, mu, nu) = (f3.from_i64(l), f3.from_i64(mu), f3.from_i64(nu));
            assert_eq!(make_v(&l, &mu, &nu).unwrap(), s_matrix(&l, &mu, &nu).unwrap());
            assert_eq!(make_z(&l, &mu).unwrap(), t_matrix(&l, &mu).unwrap());
        }
    }

    #[test]
    fn factor_sd_example() {
        let k = f(5);
        let g = general_aut_matrix(&AutParams::from_i64(k, 2, 1, 3, 4).unwrap());
        let (s, d) = factor_sd(&g).unwrap();
        assert_eq!(s, s_matrix(&k.from_i64(3), &k.from_i64(4), &k.from_i64(2)).unwrap());
        assert_eq!(d, m(k, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 4]]));
        assert_eq!(s.compose(&d).unwrap(), g);
        let id = LinearMap::identity(k, 3);
        assert_eq!(factor_sd(&id).unwrap(), (id.clone(), id.clone()));
        let dm = d_matrix(&k.from_i64(3)).unwrap();
        assert_eq!(factor_sd(&dm).unwrap(), (id, dm));
    }

    #[test]
    fn factor_tj_example() {
        let k = f(5);
        let s = s_matrix(&k.from_i64(3), &k.from_i64(4), &k.from_i64(2)).unwrap();
        let (t, j) = factor_tj(&s).unwrap();
        assert_eq!(t, t_matrix(&k.zero(), &k.from_i64(3)).unwrap());
        assert_eq!(j, j_matrix(&k.from_i64(3)).unwrap());
        assert_eq!(t.compose(&j).unwrap(), s);
        let tm = t_matrix(&k.from_i64(1), &k.from_i64(2)).unwrap();
        assert_eq!(factor_tj(&tm).unwrap(), (tm, LinearMap::identity(k, 3)));
    }

    #[test]
    fn not_in_family_rejected() {
        let k = f(5);
        let bad = m(k, &[&[2, 0, 0], &[1, 2, 0], &[3, 4, 1]]);
        assert!(matches!(factor_sd(&bad), Err(Error::NotInFamily(_))));
        let not_s = general_aut_matrix(&AutParams::from_i64(k, 2, 1, 3, 4).unwrap());
        assert!(matches!(factor_tj(&not_s), Err(Error::NotInFamily(_))));
        let upper = m(k, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(matches!(factor_sd(&upper), Err(Error::NotInFamily(_))));
    }

    #[test]
    fn family_orders() {
        assert_eq!(family(FamilyKind::T, f(2)).unwrap().order(), 4);
        assert!(family(FamilyKind::J, f(2)).unwrap().is_trivial());
        assert_eq!(family(FamilyKind::G, f(3)).unwrap().order(), 36);
        assert_eq!(family(FamilyKind::G, FieldSpec::Rationals), Err(Error::NotFiniteField));
    }

    #[test]
    fn theorem_over_f2() {
        let r = verify_theorem(f(2), aut::DEFAULT_BUDGET).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(r.orders, GroupOrders { g: 4, s: 4, t: 4, j: 1, d: 1 });
        assert_eq!(verify_theorem(FieldSpec::Rationals, 10), Err(Error::NotFiniteField));
    }
}
