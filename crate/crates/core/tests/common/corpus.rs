//! Shared fixture corpus for integration and acceptance tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tlz_core::algebra::{direct_sum_binary, ternary_from_binary, BinaryAlgebra, TernaryAlgebra};
use tlz_core::catalog;
use tlz_core::deform::{deformation_from_pair, DeformationData, PairData};
use tlz_core::modrep::{dual_representation, Representation};
use tlz_core::scalar::int;
use tlz_core::{Matrix, Tensor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn binaries() -> Vec<(String, BinaryAlgebra)> {
    let mut out = vec![
        ("abelian2".to_string(), catalog::abelian(2)),
        ("abelian3".to_string(), catalog::abelian(3)),
        ("heis2".to_string(), catalog::heis2()),
        ("sl2".to_string(), catalog::sl2()),
        ("aff2".to_string(), catalog::aff2()),
        ("nonleibniz2".to_string(), catalog::non_leibniz2()),
        (
            "hemisemidirect-aff2".to_string(),
            catalog::hemisemidirect(&catalog::aff2()),
        ),
        (
            "heis2+abelian1".to_string(),
            direct_sum_binary(&catalog::heis2(), &catalog::abelian(1)),
        ),
    ];
    let mut r = rng(7);
    for i in 0..4 {
        out.push((format!("nilpotent-{i}"), catalog::nilpotent_binary(&mut r, 3)));
    }
    out
}

pub fn ternaries() -> Vec<(String, TernaryAlgebra)> {
    let mut out: Vec<(String, TernaryAlgebra)> = binaries()
        .into_iter()
        .filter(|(_, b)| b.dim() <= 3)
        .map(|(name, b)| (format!("{name}-assoc"), ternary_from_binary(&b)))
        .collect();
    out.push(("symmetric-ternary2".to_string(), catalog::symmetric_ternary2()));
    let mut r = rng(11);
    for i in 0..3 {
        out.push((format!("nilpotent-ternary-{i}"), catalog::nilpotent_ternary(&mut r, 3)));
    }
    out
}

/// Operator candidates on dimension `n`: zero, identity multiples, shifts,
/// idempotents and a few random integer matrices.
pub fn operators(n: usize, seed: u64) -> Vec<(String, Matrix)> {
    let unit = |i: usize, j: usize| Matrix::from_fn(n, n, |a, b| if a == i && b == j { int(1) } else { int(0) });
    let mut out = vec![
        ("zero".to_string(), Matrix::zeros(n, n)),
        ("id".to_string(), Matrix::identity(n)),
        ("2id".to_string(), Matrix::scalar(n, int(2))),
        ("-id".to_string(), Matrix::scalar(n, int(-1))),
        ("shift01".to_string(), unit(0, 1)),
        ("shift10".to_string(), unit(1, 0)),
        ("proj0".to_string(), unit(0, 0)),
        ("proj-last".to_string(), unit(n - 1, n - 1)),
    ];
    let mut r = rng(seed);
    for i in 0..3 {
        out.push((format!("random-{i}"), catalog::random_matrix(&mut r, n, n, 1)));
    }
    out
}

/// Base algebras with a genuine representation for the deformation tests.
pub fn rep_bases() -> Vec<(String, TernaryAlgebra, Representation)> {
    let mut out = all_bases();
    out.retain(|(name, _, _)| !name.contains("coadjoint"));
    out
}

/// Also includes the sl2 coadjoint data, which is not a representation but
/// still exercises the pair duality.
pub fn all_bases() -> Vec<(String, TernaryAlgebra, Representation)> {
    let sl2 = ternary_from_binary(&catalog::sl2());
    let aff2 = ternary_from_binary(&catalog::aff2());
    let hemi = ternary_from_binary(&catalog::hemisemidirect(&catalog::aff2()));
    let nil = catalog::nilpotent_ternary(&mut rng(23), 3);
    vec![
        ("sl2-adjoint".into(), sl2.clone(), Representation::adjoint(&sl2)),
        (
            "sl2-coadjoint".into(),
            sl2.clone(),
            dual_representation(&Representation::adjoint(&sl2)),
        ),
        ("aff2-adjoint".into(), aff2.clone(), Representation::adjoint(&aff2)),
        (
            "hemisemidirect-adjoint".into(),
            hemi.clone(),
            Representation::adjoint(&hemi),
        ),
        ("nilpotent-adjoint".into(), nil.clone(), Representation::adjoint(&nil)),
    ]
}

/// Candidate pairs: scalar pairs plus products of simple operators on the
/// algebra and on the module. Not all of them are Nijenhuis pairs.
pub fn pair_candidates() -> Vec<(String, TernaryAlgebra, Representation, PairData)> {
    let mut out = Vec::new();
    for (name, t, rep) in all_bases() {
        let (n, m) = (t.dim(), rep.module_dim());
        for c in [0, 1, -1, 2] {
            out.push((
                format!("{name}/scalar{c}"),
                t.clone(),
                rep.clone(),
                PairData::scalar(n, m, int(c)),
            ));
        }
        let simple = |k: usize| -> Vec<(String, Matrix)> {
            operators(k, 0)
                .into_iter()
                .filter(|(s, _)| !s.starts_with("random") && !s.contains("id"))
                .collect()
        };
        for (ln, nm) in simple(n) {
            for (tn, tm) in simple(m) {
                let pair = PairData::new(nm.clone(), tm).unwrap();
                out.push((format!("{name}/{ln}+{tn}"), t.clone(), rep.clone(), pair));
            }
        }
    }
    out
}

pub fn sparse_random<R: Rng>(r: &mut R, dims: Vec<usize>, density: u32) -> Tensor {
    Tensor::from_fn(dims, |_| {
        if r.gen_ratio(1, density) {
            int(r.gen_range(-2..=2))
        } else {
            int(0)
        }
    })
}

/// Random data of mixed quality: pure noise, pair-generated data, noise
/// added to one component of valid data, and linear doublings.
pub fn random_deformation<R: Rng>(
    r: &mut R,
    t: &TernaryAlgebra,
    rep: &Representation,
    pair: &PairData,
) -> DeformationData {
    let (n, m) = (t.dim(), rep.module_dim());
    let bracket = || vec![n; 4];
    let action = || vec![n, n, m, m];
    match r.gen_range(0..4) {
        0 => DeformationData {
            w1: sparse_random(r, bracket(), 6),
            w2: sparse_random(r, bracket(), 6),
            wl1: sparse_random(r, action(), 8),
            wl2: sparse_random(r, action(), 8),
            wm1: sparse_random(r, action(), 8),
            wm2: sparse_random(r, action(), 8),
            wr1: sparse_random(r, action(), 8),
            wr2: sparse_random(r, action(), 8),
        },
        1 => deformation_from_pair(t, rep, pair).unwrap(),
        2 => {
            let mut d = deformation_from_pair(t, rep, pair).unwrap();
            let noise = sparse_random(r, action(), 30);
            match r.gen_range(0..3) {
                0 => d.wl2 = d.wl2.add(&noise).unwrap(),
                1 => d.wm1 = d.wm1.add(&noise).unwrap(),
                _ => d.w2 = d.w2.add(&sparse_random(r, bracket(), 30)).unwrap(),
            }
            d
        }
        _ => {
            let c = int(r.gen_range(-2..=2));
            DeformationData::from_parts(
                t.tensor().scale(&c),
                Tensor::zeros(bracket()),
                rep.scale(&c),
                Representation::zero(n, m),
            )
        }
    }
}
