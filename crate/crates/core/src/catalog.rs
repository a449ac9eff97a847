//! Named small algebras and random generators of valid instances.
//!
//! Every fixture here is validated by the exhaustive checkers in the test
//! suite rather than assumed from the literature.

use crate::algebra::{direct_sum_binary, BinaryAlgebra, TernaryAlgebra};
use crate::matrix::Matrix;
use crate::scalar::{int, Scalar};
use rand::Rng;

pub fn abelian(n: usize) -> BinaryAlgebra {
    BinaryAlgebra::zero(n)
}

/// `[e₁,e₁] = e₂`, all other brackets zero.
pub fn heis2() -> BinaryAlgebra {
    BinaryAlgebra::from_entries(2, [([0, 0, 1], int(1))]).expect("heis2")
}

/// The Lie algebra sl₂ in the basis (e, f, h):
/// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`, extended antisymmetrically.
pub fn sl2() -> BinaryAlgebra {
    BinaryAlgebra::from_entries(
        3,
        [
            ([0, 1, 2], int(1)),
            ([1, 0, 2], int(-1)),
            ([2, 0, 0], int(2)),
            ([0, 2, 0], int(-2)),
            ([2, 1, 1], int(-2)),
            ([1, 2, 1], int(2)),
        ],
    )
    .expect("sl2")
}

/// Two-dimensional non-abelian Lie algebra: `[e₁,e₂] = e₂ = -[e₂,e₁]`.
pub fn aff2() -> BinaryAlgebra {
    BinaryAlgebra::from_entries(2, [([0, 1, 1], int(1)), ([1, 0, 1], int(-1))]).expect("aff2")
}

/// `[e₁,e₂] = e₁`, `[e₂,e₁] = e₂`: fails the Leibniz identity.
pub fn non_leibniz2() -> BinaryAlgebra {
    BinaryAlgebra::from_entries(2, [([0, 1, 0], int(1)), ([1, 0, 1], int(1))]).expect("non-leibniz")
}

/// Totally "symmetric" ternary bracket on dimension 2 with every basis
/// triple mapped to `e₁`; fails the ternary identity.
pub fn symmetric_ternary2() -> TernaryAlgebra {
    let entries = (0..8).map(|i| ([i >> 2, (i >> 1) & 1, i & 1, 0], int(1)));
    TernaryAlgebra::from_entries(2, entries).expect("symmetric")
}

/// `g ⊕ g` with `[(x,u),(y,v)] = ([x,y],[u,y])`. For a Lie algebra `g` this is
/// a right Leibniz algebra that is not a Lie algebra.
pub fn hemisemidirect(g: &BinaryAlgebra) -> BinaryAlgebra {
    let n = g.dim();
    let mut entries = Vec::new();
    for (idx, v) in g.tensor().nonzero_entries() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        entries.push(([i, j, k], v.clone()));
        entries.push(([n + i, j, n + k], v.clone()));
    }
    BinaryAlgebra::from_entries(2 * n, entries).expect("hemisemidirect")
}

fn small<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    int(rng.gen_range(-bound..=bound))
}

/// Nilpotent class-2 bracket: the first `k` basis vectors bracket into the
/// span of the remaining central ones. Leibniz by construction.
pub fn nilpotent_binary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BinaryAlgebra {
    assert!(n >= 2, "need room for a central part");
    let k = rng.gen_range(1..n);
    let mut entries = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for c in k..n {
                entries.push(([i, j, c], small(rng, 2)));
            }
        }
    }
    BinaryAlgebra::from_entries(n, entries).expect("nilpotent")
}

/// Ternary analogue of [`nilpotent_binary`].
pub fn nilpotent_ternary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> TernaryAlgebra {
    assert!(n >= 2, "need room for a central part");
    let k = rng.gen_range(1..n);
    let mut entries = Vec::new();
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                for c in k..n {
                    entries.push(([i, j, l, c], small(rng, 2)));
                }
            }
        }
    }
    TernaryAlgebra::from_entries(n, entries).expect("nilpotent")
}

/// Product of a unit lower and a unit upper triangular matrix with small
/// integer entries; always invertible.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Greater => small(rng, 1),
        std::cmp::Ordering::Less => int(0),
    });
    let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => int(1),
        std::cmp::Ordering::Less => small(rng, 1),
        std::cmp::Ordering::Greater => int(0),
    });
    lower.mul(&upper).expect("square")
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(rng, bound))
}

/// A random Leibniz algebra of dimension `n` (2 ≤ n ≤ 4) drawn from
/// nilpotent class-2 brackets and basis changes / scalings / padded direct
/// sums of the named Lie and non-Lie examples.
pub fn random_leibniz<R: Rng + ?Sized>(rng: &mut R, n: usize) -> BinaryAlgebra {
    assert!((2..=4).contains(&n));
    let base = match (n, rng.gen_range(0..3)) {
        (_, 0) => nilpotent_binary(rng, n),
        (2, _) => [heis2(), aff2()][rng.gen_range(0..2)].clone(),
        (3, _) => [
            sl2(),
            direct_sum_binary(&aff2(), &abelian(1)),
            direct_sum_binary(&heis2(), &abelian(1)),
        ][rng.gen_range(0..3)]
        .clone(),
        (_, _) => [
            hemisemidirect(&aff2()),
            direct_sum_binary(&sl2(), &abelian(1)),
            direct_sum_binary(&heis2(), &aff2()),
        ][rng.gen_range(0..3)]
        .clone(),
    };
    let scale = int(rng.gen_range(1..=3)) * if rng.gen_bool(0.5) { int(1) } else { int(-1) };
    base.scaled(&scale)
        .change_basis(&random_invertible(rng, n))
        .expect("invertible")
}
