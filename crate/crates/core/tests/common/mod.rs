#![allow(dead_code)]

use leibniz::aut::{is_endomorphism, LinearMap};
use leibniz::lei3::AutParams;
use leibniz::{Algebra, FieldSpec, Matrix, Scalar, Subspace, Vector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed shared by every randomized suite.
pub const SEED: u64 = 0x4c65_6962_6e69_7a33;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream)
}

pub fn fp(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Every vector of `F_q^n`.
pub fn all_vectors(field: FieldSpec, n: usize) -> Vec<Vector> {
    let elems: Vec<Scalar> = field.elements().unwrap().collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Every subspace of `F_q^n`, as spans of all `n`-tuples of vectors.
pub fn all_subspaces(field: FieldSpec, n: usize) -> Vec<Subspace> {
    let vecs = all_vectors(field, n);
    let mut seen = std::collections::HashSet::new();
    let mut idx = vec![0usize; n];
    loop {
        let gens = idx.iter().map(|&i| vecs[i].clone()).collect();
        seen.insert(Subspace::from_vectors(field, n, gens).unwrap());
        let mut k = 0;
        loop {
            if k == n {
                return seen.into_iter().collect();
            }
            idx[k] += 1;
            if idx[k] < vecs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Span of `{[x,x] : x ∈ F_q^n}` by enumeration.
pub fn brute_force_squares(alg: &Algebra) -> Subspace {
    let squares = all_vectors(alg.field(), alg.dim())
        .iter()
        .map(|x| alg.bracket(x, x).unwrap())
        .collect();
    Subspace::from_vectors(alg.field(), alg.dim(), squares).unwrap()
}

/// Sparse random tensors over `F_3` of dimension 1..=3, kept when they
/// satisfy the left Leibniz identity.
pub fn random_leibniz_algebras(count: usize, stream: u64) -> Vec<Algebra> {
    let f3 = fp(3);
    let mut rng = rng(stream);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dim = rng.gen_range(1..=3);
        let constants = (0..dim * dim * dim)
            .map(|_| {
                if rng.gen_bool(0.2) {
                    f3.from_i64(rng.gen_range(1..3))
                } else {
                    f3.zero()
                }
            })
            .collect();
        let alg = Algebra::from_constants(f3, dim, constants).unwrap();
        if alg.is_left_leibniz() {
            out.push(alg);
        }
    }
    out
}

pub fn random_matrix(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let p = field.modulus().unwrap() as i64;
    let rows = (0..n)
        .map(|_| (0..n).map(|_| field.from_i64(rng.gen_range(0..p))).collect())
        .collect();
    Matrix::from_rows(field, rows).unwrap()
}

/// Random endomorphisms found by rejection over uniformly random matrices.
pub fn random_endomorphisms(alg: &Algebra, count: usize, rng: &mut ChaCha8Rng) -> Vec<LinearMap> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let f = LinearMap::new(random_matrix(alg.field(), alg.dim(), rng)).unwrap();
        if is_endomorphism(alg, &f).unwrap() {
            out.push(f);
        }
    }
    out
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.gen_range(-20i64..=20);
    let den = rng.gen_range(1i64..=9);
    FieldSpec::Rationals
        .from_ratio(&num.into(), &den.into())
        .unwrap()
}

/// Admissible rational parameters (α₁ ≠ 0, α₁ + α₂ ≠ 0) by rejection.
pub fn random_rational_params(rng: &mut ChaCha8Rng) -> AutParams {
    loop {
        let p = AutParams::new(
            random_rational(rng),
            random_rational(rng),
            random_rational(rng),
            random_rational(rng),
        );
        if let Ok(p) = p {
            return p;
        }
    }
}

pub fn all_params(field: FieldSpec) -> Vec<AutParams> {
    let elems: Vec<Scalar> = field.elements().unwrap().collect();
    let mut out = Vec::new();
    for a1 in &elems {
        for a2 in &elems {
            for a3 in &elems {
                for b3 in &elems {
                    if let Ok(p) = AutParams::new(a1.clone(), a2.clone(), a3.clone(), b3.clone()) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}
