//! Linear-operator identities on binary and ternary algebras, the brackets
//! operators induce, transfer to the associated ternary algebra, and exact
//! solvers for the operator classes whose identities are linear.

use crate::algebra::{ternary_from_binary, BinaryAlgebra, TernaryAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, AffineSolution};
use crate::matrix::Matrix;
use crate::report::{sweep, CheckReport};
use crate::scalar::{self, basis, vec_add, vec_scale, vec_sub, vec_zero, Scalar};
use crate::tensor::Tensor;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum OperatorKind {
    /// Weight-λ derivation.
    Derivation(Scalar),
    /// Weight-λ Rota-Baxter operator.
    RotaBaxter(Scalar),
    Centroid,
    Reynolds,
    Averaging,
    Nijenhuis,
    CentralDerivation,
    /// Binary: `d2[x,y] = [Dx,y] + [x,d1 y]`, and when `d3` is given also
    /// `d3[x,y] = [Dx,y] + [x,d2 y]`.
    /// Ternary: `d3[x,y,z] = [Dx,y,z] + [x,d1 y,z] + [x,y,d2 z]`.
    GeneralizedDerivation {
        d1: Option<Matrix>,
        d2: Option<Matrix>,
        d3: Option<Matrix>,
    },
    /// Binary: `d1[x,y] = [Dx,y] + [x,Dy]`, and when `d2` is given also
    /// `d2[x,y] = [d1 x,y] + [x,d1 y]`.
    /// Ternary: `d1[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz]`, or with `d2`
    /// given, `d2[x,y,z] = [d1 x,y,z] + [x,Dy,z] + [x,y,Dz]`.
    QuasiDerivation {
        d1: Option<Matrix>,
        d2: Option<Matrix>,
    },
}

impl OperatorKind {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::Derivation(_) => "derivation",
            OperatorKind::RotaBaxter(_) => "rota-baxter",
            OperatorKind::Centroid => "centroid",
            OperatorKind::Reynolds => "reynolds",
            OperatorKind::Averaging => "averaging",
            OperatorKind::Nijenhuis => "nijenhuis",
            OperatorKind::CentralDerivation => "central-derivation",
            OperatorKind::GeneralizedDerivation { .. } => "generalized-derivation",
            OperatorKind::QuasiDerivation { .. } => "quasiderivation",
        }
    }

    fn auxiliaries(&self) -> Vec<&Matrix> {
        match self {
            OperatorKind::GeneralizedDerivation { d1, d2, d3 } => [d1, d2, d3].into_iter().flatten().collect(),
            OperatorKind::QuasiDerivation { d1, d2 } => [d1, d2].into_iter().flatten().collect(),
            _ => Vec::new(),
        }
    }
}

fn require_aux<'a>(kind: &OperatorKind, aux: &'a Option<Matrix>, name: &'static str) -> Result<&'a Matrix> {
    aux.as_ref().ok_or_else(|| Error::MissingAuxiliary {
        kind: kind.name().to_string(),
        aux: name,
    })
}

fn require_operators(kind: &OperatorKind, op: &Matrix, n: usize) -> Result<()> {
    op.require_shape(n, n)?;
    for aux in kind.auxiliaries() {
        aux.require_shape(n, n)?;
    }
    Ok(())
}

type Sides = (Vec<Scalar>, Vec<Scalar>);
type IdentityFn<'a> = Box<dyn Fn(&[usize]) -> Sides + Send + Sync + 'a>;

/// A named identity evaluated on a basis tuple.
struct Identity<'a> {
    name: &'static str,
    eval: IdentityFn<'a>,
}

fn identity<'a>(name: &'static str, eval: impl Fn(&[usize]) -> Sides + Send + Sync + 'a) -> Identity<'a> {
    Identity {
        name,
        eval: Box::new(eval),
    }
}

fn run_identities(report_name: &str, identities: &[Identity<'_>], n: usize, arity: usize) -> CheckReport {
    let names: Vec<&str> = identities.iter().map(|i| i.name).collect();
    sweep(report_name, &names, &vec![n; arity], |t, r| {
        for id in identities {
            let (l, rr) = (id.eval)(t);
            r.record(id.name, t, &l, &rr);
        }
    })
}

/// Basis vectors and their images under a matrix, precomputed per operator.
struct Images {
    e: Vec<Vec<Scalar>>,
    m: Vec<Vec<Scalar>>,
}

impl Images {
    fn new(op: &Matrix) -> Self {
        let n = op.cols();
        Images {
            e: (0..n).map(|i| basis(n, i)).collect(),
            m: (0..n).map(|j| op.column(j)).collect(),
        }
    }

    /// Basis vector `i`, or its image when `apply` is set.
    fn pick(&self, i: usize, apply: bool) -> &[Scalar] {
        if apply {
            &self.m[i]
        } else {
            &self.e[i]
        }
    }
}

fn sum(parts: &[Vec<Scalar>]) -> Vec<Scalar> {
    let n = parts.first().map_or(0, Vec::len);
    scalar::vec_sum(n, parts)
}

fn binary_identities<'a>(b: &'a BinaryAlgebra, kind: &'a OperatorKind, op: &'a Matrix) -> Result<Vec<Identity<'a>>> {
    let n = b.dim();
    require_operators(kind, op, n)?;
    let im = Images::new(op);
    let e = move |i: usize| basis::<Scalar>(n, i);
    let br = move |x: &[Scalar], y: &[Scalar]| b.bracket(x, y);
    let ids = match kind {
        OperatorKind::Derivation(w) => vec![identity("derivation", move |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = op.apply(b.tensor().slice(&[x, y]));
            let rhs = sum(&[
                br(&im.m[x], &e(y)),
                br(&e(x), &im.m[y]),
                vec_scale(w, b.tensor().slice(&[x, y])),
            ]);
            (lhs, rhs)
        })],
        OperatorKind::RotaBaxter(w) => vec![identity("rota-baxter", move |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = br(&im.m[x], &im.m[y]);
            let inner = sum(&[
                br(&im.m[x], &e(y)),
                br(&e(x), &im.m[y]),
                vec_scale(w, b.tensor().slice(&[x, y])),
            ]);
            (lhs, op.apply(&inner))
        })],
        OperatorKind::Centroid => {
            let im2 = Images::new(op);
            vec![
                identity("centroid-left", move |t| {
                    let lhs = op.apply(b.tensor().slice(&[t[0], t[1]]));
                    (lhs, br(&im.m[t[0]], &e(t[1])))
                }),
                identity("centroid-right", move |t| {
                    let lhs = op.apply(b.tensor().slice(&[t[0], t[1]]));
                    (lhs, br(&e(t[0]), &im2.m[t[1]]))
                }),
            ]
        }
        OperatorKind::Reynolds => vec![identity("reynolds", move |t| {
            let (x, y) = (t[0], t[1]);
            let both = br(&im.m[x], &im.m[y]);
            let inner = vec_sub(&vec_add(&br(&im.m[x], &e(y)), &br(&e(x), &im.m[y])), &both);
            (both, op.apply(&inner))
        })],
        OperatorKind::Averaging => {
            let im2 = Images::new(op);
            vec![
                identity("averaging-left", move |t| {
                    let (x, y) = (t[0], t[1]);
                    (op.apply(&br(&im.m[x], &e(y))), br(&im.m[x], &im.m[y]))
                }),
                identity("averaging-right", move |t| {
                    let (x, y) = (t[0], t[1]);
                    (op.apply(&br(&e(x), &im2.m[y])), br(&im2.m[x], &im2.m[y]))
                }),
            ]
        }
        OperatorKind::Nijenhuis => vec![identity("nijenhuis", move |t| {
            let (x, y) = (t[0], t[1]);
            let lhs = br(&im.m[x], &im.m[y]);
            let inner = vec_sub(
                &vec_add(&br(&im.m[x], &e(y)), &br(&e(x), &im.m[y])),
                &op.apply(b.tensor().slice(&[x, y])),
            );
            (lhs, op.apply(&inner))
        })],
        OperatorKind::CentralDerivation => {
            let im2 = Images::new(op);
            vec![
                identity("central-image", move |t| {
                    (op.apply(b.tensor().slice(&[t[0], t[1]])), vec_zero(n))
                }),
                identity("central-left", move |t| (br(&im.m[t[0]], &e(t[1])), vec_zero(n))),
                identity("central-right", move |t| (br(&e(t[0]), &im2.m[t[1]]), vec_zero(n))),
            ]
        }
        OperatorKind::GeneralizedDerivation { d1, d2, d3 } => {
            let d1 = Images::new(require_aux(kind, d1, "d1")?);
            let d2m = require_aux(kind, d2, "d2")?;
            let mut ids = Vec::new();
            let im_first = Images::new(op);
            ids.push(identity("generalized", move |t| {
                let (x, y) = (t[0], t[1]);
                let lhs = d2m.apply(b.tensor().slice(&[x, y]));
                (lhs, vec_add(&br(&im_first.m[x], &e(y)), &br(&e(x), &d1.m[y])))
            }));
            if let Some(d3m) = d3 {
                let d2 = Images::new(d2m);
                ids.push(identity("generalized-chain", move |t| {
                    let (x, y) = (t[0], t[1]);
                    let lhs = d3m.apply(b.tensor().slice(&[x, y]));
                    (lhs, vec_add(&br(&im.m[x], &e(y)), &br(&e(x), &d2.m[y])))
                }));
            }
            ids
        }
        OperatorKind::QuasiDerivation { d1, d2 } => {
            let d1m = require_aux(kind, d1, "d1")?;
            let mut ids = vec![identity("quasi", move |t| {
                let (x, y) = (t[0], t[1]);
                let lhs = d1m.apply(b.tensor().slice(&[x, y]));
                (lhs, vec_add(&br(&im.m[x], &e(y)), &br(&e(x), &im.m[y])))
            })];
            if let Some(d2m) = d2 {
                let d1i = Images::new(d1m);
                ids.push(identity("quasi-chain", move |t| {
                    let (x, y) = (t[0], t[1]);
                    let lhs = d2m.apply(b.tensor().slice(&[x, y]));
                    (lhs, vec_add(&br(&d1i.m[x], &e(y)), &br(&e(x), &d1i.m[y])))
                }));
            }
            ids
        }
    };
    Ok(ids)
}

/// `Σ` over the three ways of applying the operator to exactly `count` of
/// the slots (`count` ∈ {1, 2}).
fn slot_sum(t: &TernaryAlgebra, im: &Images, idx: &[usize], count: usize) -> Vec<Scalar> {
    let patterns: [[bool; 3]; 3] = if count == 1 {
        [[true, false, false], [false, true, false], [false, false, true]]
    } else {
        [[true, true, false], [true, false, true], [false, true, true]]
    };
    let parts: Vec<Vec<Scalar>> = patterns
        .iter()
        .map(|p| t.bracket(im.pick(idx[0], p[0]), im.pick(idx[1], p[1]), im.pick(idx[2], p[2])))
        .collect();
    sum(&parts)
}

fn ternary_identities<'a>(t: &'a TernaryAlgebra, kind: &'a OperatorKind, op: &'a Matrix) -> Result<Vec<Identity<'a>>> {
    let n = t.dim();
    require_operators(kind, op, n)?;
    let base = move |i: &[usize]| t.tensor().slice(&[i[0], i[1], i[2]]).to_vec();
    let make = || Images::new(op);
    let ids = match kind {
        OperatorKind::Derivation(w) => {
            let im = make();
            vec![identity("derivation", move |i| {
                let lhs = op.apply(&base(i));
                let all = t.bracket(&im.m[i[0]], &im.m[i[1]], &im.m[i[2]]);
                let rhs = sum(&[
                    slot_sum(t, &im, i, 1),
                    vec_scale(w, &slot_sum(t, &im, i, 2)),
                    vec_scale(&(w * w), &all),
                ]);
                (lhs, rhs)
            })]
        }
        OperatorKind::RotaBaxter(w) => {
            let im = make();
            vec![identity("rota-baxter", move |i| {
                let lhs = t.bracket(&im.m[i[0]], &im.m[i[1]], &im.m[i[2]]);
                let inner = sum(&[
                    slot_sum(t, &im, i, 2),
                    vec_scale(w, &slot_sum(t, &im, i, 1)),
                    vec_scale(&(w * w), &base(i)),
                ]);
                (lhs, op.apply(&inner))
            })]
        }
        OperatorKind::Centroid => {
            let names = ["centroid-1", "centroid-2", "centroid-3"];
            names
                .iter()
                .enumerate()
                .map(|(slot, &name)| {
                    let im = make();
                    identity(name, move |i| {
                        let lhs = op.apply(&base(i));
                        let rhs = t.bracket(
                            im.pick(i[0], slot == 0),
                            im.pick(i[1], slot == 1),
                            im.pick(i[2], slot == 2),
                        );
                        (lhs, rhs)
                    })
                })
                .collect()
        }
        OperatorKind::Reynolds => {
            let im = make();
            vec![identity("reynolds", move |i| {
                let all = t.bracket(&im.m[i[0]], &im.m[i[1]], &im.m[i[2]]);
                let two = scalar::int(2);
                let inner = vec_sub(&slot_sum(t, &im, i, 2), &vec_scale(&two, &all));
                (all, op.apply(&inner))
            })]
        }
        OperatorKind::Averaging => {
            let names = ["averaging-xy", "averaging-xz", "averaging-yz"];
            let patterns = [[true, true, false], [true, false, true], [false, true, true]];
            names
                .iter()
                .zip(patterns)
                .map(|(&name, p)| {
                    let im = make();
                    identity(name, move |i| {
                        let inner = t.bracket(im.pick(i[0], p[0]), im.pick(i[1], p[1]), im.pick(i[2], p[2]));
                        let all = t.bracket(&im.m[i[0]], &im.m[i[1]], &im.m[i[2]]);
                        (op.apply(&inner), all)
                    })
                })
                .collect()
        }
        OperatorKind::Nijenhuis => {
            let im = make();
            vec![identity("nijenhuis", move |i| {
                let lhs = t.bracket(&im.m[i[0]], &im.m[i[1]], &im.m[i[2]]);
                let two = op.apply(&slot_sum(t, &im, i, 2));
                let one = op.apply(&op.apply(&slot_sum(t, &im, i, 1)));
                let zero = op.apply(&op.apply(&op.apply(&base(i))));
                (lhs, vec_add(&vec_sub(&two, &one), &zero))
            })]
        }
        OperatorKind::CentralDerivation => {
            let mut ids = vec![identity("central-image", move |i| (op.apply(&base(i)), vec_zero(n)))];
            for (slot, name) in ["central-1", "central-2", "central-3"].into_iter().enumerate() {
                let im = make();
                ids.push(identity(name, move |i| {
                    let v = t.bracket(
                        im.pick(i[0], slot == 0),
                        im.pick(i[1], slot == 1),
                        im.pick(i[2], slot == 2),
                    );
                    (v, vec_zero(n))
                }));
            }
            ids
        }
        OperatorKind::GeneralizedDerivation { d1, d2, d3 } => {
            let d1 = Images::new(require_aux(kind, d1, "d1")?);
            let d2 = Images::new(require_aux(kind, d2, "d2")?);
            let d3 = require_aux(kind, d3, "d3")?;
            let im = make();
            vec![identity("generalized", move |i| {
                let lhs = d3.apply(&base(i));
                let rhs = sum(&[
                    t.bracket(&im.m[i[0]], &im.e[i[1]], &im.e[i[2]]),
                    t.bracket(&im.e[i[0]], &d1.m[i[1]], &im.e[i[2]]),
                    t.bracket(&im.e[i[0]], &im.e[i[1]], &d2.m[i[2]]),
                ]);
                (lhs, rhs)
            })]
        }
        OperatorKind::QuasiDerivation { d1, d2 } => {
            let d1m = require_aux(kind, d1, "d1")?;
            let (first, outer) = match d2 {
                Some(d2m) => (Images::new(d1m), d2m),
                None => (make(), d1m),
            };
            let im = make();
            vec![identity("quasi", move |i| {
                let lhs = outer.apply(&base(i));
                let rhs = sum(&[
                    t.bracket(&first.m[i[0]], &im.e[i[1]], &im.e[i[2]]),
                    t.bracket(&im.e[i[0]], &im.m[i[1]], &im.e[i[2]]),
                    t.bracket(&im.e[i[0]], &im.e[i[1]], &im.m[i[2]]),
                ]);
                (lhs, rhs)
            })]
        }
    };
    Ok(ids)
}

/// Checks the defining identity of `kind` for `op` on every basis pair.
pub fn check_binary_operator(b: &BinaryAlgebra, kind: &OperatorKind, op: &Matrix) -> Result<CheckReport> {
    let ids = binary_identities(b, kind, op)?;
    Ok(run_identities(kind.name(), &ids, b.dim(), 2))
}

/// Checks the ternary identity of `kind` for `op` on every basis triple.
///
/// The weight-λ derivation identity is
/// `D[x,y,z] = Σ[one D] + λ·Σ[two D] + λ²·[Dx,Dy,Dz]`, the Reynolds identity is
/// `[Rx,Ry,Rz] = R(Σ[two R] − 2[Rx,Ry,Rz])`.
pub fn check_ternary_operator(t: &TernaryAlgebra, kind: &OperatorKind, op: &Matrix) -> Result<CheckReport> {
    let ids = ternary_identities(t, kind, op)?;
    Ok(run_identities(kind.name(), &ids, t.dim(), 3))
}

#[derive(Debug, Clone, PartialEq)]
pub enum BinaryRecipe {
    /// `[Nx,y] + [x,Ny] + [x,y]`.
    NijenhuisSum(Matrix),
    /// `[βx,y]`.
    AveragingLeft(Matrix),
    /// `[Rx,y] + [x,Ry] + λ[x,y]`.
    RotaBaxter(Matrix, Scalar),
}

pub fn induced_bracket_binary(b: &BinaryAlgebra, recipe: &BinaryRecipe) -> Result<BinaryAlgebra> {
    let n = b.dim();
    let op = match recipe {
        BinaryRecipe::NijenhuisSum(m) | BinaryRecipe::AveragingLeft(m) | BinaryRecipe::RotaBaxter(m, _) => m,
    };
    op.require_shape(n, n)?;
    let im = Images::new(op);
    let mut data = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            let plain = b.tensor().slice(&[x, y]);
            let v = match recipe {
                BinaryRecipe::NijenhuisSum(_) => sum(&[
                    b.bracket(&im.m[x], &im.e[y]),
                    b.bracket(&im.e[x], &im.m[y]),
                    plain.to_vec(),
                ]),
                BinaryRecipe::AveragingLeft(_) => b.bracket(&im.m[x], &im.e[y]),
                BinaryRecipe::RotaBaxter(_, w) => sum(&[
                    b.bracket(&im.m[x], &im.e[y]),
                    b.bracket(&im.e[x], &im.m[y]),
                    vec_scale(w, plain),
                ]),
            };
            data.extend(v);
        }
    }
    BinaryAlgebra::new(Tensor::new(vec![n; 3], data)?)
}

#[derive(Debug, Clone, PartialEq)]
pub enum TernaryRecipe {
    /// `[βx,βy,z]`.
    Averaging(Matrix),
    /// `[Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz]`.
    RotaBaxter0(Matrix),
}

pub fn induced_bracket_ternary(t: &TernaryAlgebra, recipe: &TernaryRecipe) -> Result<TernaryAlgebra> {
    let n = t.dim();
    let op = match recipe {
        TernaryRecipe::Averaging(m) | TernaryRecipe::RotaBaxter0(m) => m,
    };
    op.require_shape(n, n)?;
    let im = Images::new(op);
    let mut data = Vec::with_capacity(n.pow(4));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = match recipe {
                    TernaryRecipe::Averaging(_) => t.bracket(&im.m[x], &im.m[y], &im.e[z]),
                    TernaryRecipe::RotaBaxter0(_) => slot_sum(t, &im, &[x, y, z], 2),
                };
                data.extend(v);
            }
        }
    }
    TernaryAlgebra::new(Tensor::new(vec![n; 4], data)?)
}

/// The two averaging-induced brackets `[β-,β-,-]ᵢ` of a pair of brackets.
pub fn averaging_pair(
    t1: &TernaryAlgebra,
    t2: &TernaryAlgebra,
    beta: &Matrix,
) -> Result<(TernaryAlgebra, TernaryAlgebra)> {
    let recipe = TernaryRecipe::Averaging(beta.clone());
    Ok((
        induced_bracket_ternary(t1, &recipe)?,
        induced_bracket_ternary(t2, &recipe)?,
    ))
}

/// The three centroid-twisted brackets `[θx,y,z]`, `[θx,θy,z]`, `[θx,θy,θz]`.
pub fn centroid_bracket_family(t: &TernaryAlgebra, theta: &Matrix, variant: u8) -> Result<TernaryAlgebra> {
    let n = t.dim();
    theta.require_shape(n, n)?;
    if !(1..=3).contains(&variant) {
        return Err(Error::UnsupportedKind(format!("centroid bracket variant {variant}")));
    }
    let im = Images::new(theta);
    let v = variant as usize;
    let mut data = Vec::with_capacity(n.pow(4));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                data.extend(t.bracket(im.pick(x, v >= 1), im.pick(y, v >= 2), im.pick(z, v >= 3)));
            }
        }
    }
    TernaryAlgebra::new(Tensor::new(vec![n; 4], data)?)
}

/// Binary verdict and the verdict of the corresponding operator on the
/// associated ternary algebra.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub binary: CheckReport,
    pub ternary: CheckReport,
    pub ternary_kind: OperatorKind,
}

impl TransferReport {
    /// Binary pass implies ternary pass.
    pub fn implication_holds(&self) -> bool {
        !self.binary.passed() || self.ternary.passed()
    }
}

/// The ternary operator kind that a binary operator of `kind` is expected
/// to satisfy on the associated ternary algebra `{x,y,z} = [x,[y,z]]`.
///
/// Generalized derivations need the chain map `d3` and transfer with
/// auxiliaries `(D, d1, d3)`; quasiderivations need `d2` and transfer as
/// `d2{x,y,z} = {d1 x,y,z} + {x,Dy,z} + {x,y,Dz}`.
pub fn transferred_kind(kind: &OperatorKind, op: &Matrix) -> Result<OperatorKind> {
    Ok(match kind {
        OperatorKind::GeneralizedDerivation { d1, d3, .. } => OperatorKind::GeneralizedDerivation {
            d1: Some(op.clone()),
            d2: Some(require_aux(kind, d1, "d1")?.clone()),
            d3: Some(require_aux(kind, d3, "d3")?.clone()),
        },
        OperatorKind::QuasiDerivation { d1, d2 } => OperatorKind::QuasiDerivation {
            d1: Some(require_aux(kind, d1, "d1")?.clone()),
            d2: Some(require_aux(kind, d2, "d2")?.clone()),
        },
        other => other.clone(),
    })
}

pub fn check_operator_transfer(b: &BinaryAlgebra, kind: &OperatorKind, op: &Matrix) -> Result<TransferReport> {
    let ternary_kind = transferred_kind(kind, op)?;
    let binary = check_binary_operator(b, kind, op)?;
    let ternary = check_ternary_operator(&ternary_from_binary(b), &ternary_kind, op)?;
    Ok(TransferReport {
        binary,
        ternary,
        ternary_kind,
    })
}

/// Checks `[β₂[β₁x,y],z] + [β₁[β₂x,y],z] = [[β₁x,β₂y],z] + [[β₂x,β₁y],z]` on
/// basis triples, or with `strict` the bracket-free
/// `β₂[β₁x,y] + β₁[β₂x,y] = [β₁x,β₂y] + [β₂x,β₁y]` on basis pairs.
/// Flags report commutation and injectivity of each operator.
pub fn check_compatible_averaging(
    b: &BinaryAlgebra,
    beta1: &Matrix,
    beta2: &Matrix,
    strict: bool,
) -> Result<CheckReport> {
    let n = b.dim();
    beta1.require_shape(n, n)?;
    beta2.require_shape(n, n)?;
    let (i1, i2) = (Images::new(beta1), Images::new(beta2));
    let pair = |x: usize, y: usize| -> Sides {
        let lhs = vec_add(
            &beta2.apply(&b.bracket(&i1.m[x], &i1.e[y])),
            &beta1.apply(&b.bracket(&i2.m[x], &i2.e[y])),
        );
        let rhs = vec_add(&b.bracket(&i1.m[x], &i2.m[y]), &b.bracket(&i2.m[x], &i1.m[y]));
        (lhs, rhs)
    };
    let mut report = if strict {
        sweep(
            "compatible-averaging",
            &["compatible-averaging-strict"],
            &[n, n],
            |t, r| {
                let (l, rr) = pair(t[0], t[1]);
                r.record("compatible-averaging-strict", t, &l, &rr);
            },
        )
    } else {
        sweep("compatible-averaging", &["compatible-averaging"], &[n, n, n], |t, r| {
            let (l, rr) = pair(t[0], t[1]);
            let z = &i1.e[t[2]];
            r.record("compatible-averaging", t, &b.bracket(&l, z), &b.bracket(&rr, z));
        })
    };
    report.set_flag("commuting", beta1.mul(beta2)? == beta2.mul(beta1)?);
    report.set_flag("injective-1", beta1.is_injective());
    report.set_flag("injective-2", beta2.is_injective());
    Ok(report)
}

/// For invertible `R`: reports whether `R` is Rota-Baxter of weight λ and
/// whether `R⁻¹` is a derivation of weight λ.
pub fn check_inverse_rb_derivation(t: &TernaryAlgebra, r: &Matrix, weight: &Scalar) -> Result<CheckReport> {
    r.require_shape(t.dim(), t.dim())?;
    let inv = linalg::inverse(r)?;
    let mut report = CheckReport::new("inverse-rota-baxter");
    report.absorb(
        "operator",
        check_ternary_operator(t, &OperatorKind::RotaBaxter(weight.clone()), r)?,
    );
    report.absorb(
        "inverse",
        check_ternary_operator(t, &OperatorKind::Derivation(weight.clone()), &inv)?,
    );
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct NijenhuisRbReport {
    pub square_zero: bool,
    pub idempotent: bool,
    pub nijenhuis: CheckReport,
    pub rota_baxter_zero: CheckReport,
    pub rota_baxter_minus_one: CheckReport,
}

impl NijenhuisRbReport {
    /// `N² = 0`: Nijenhuis ⇔ Rota-Baxter of weight 0.
    /// `N² = N`: Rota-Baxter of weight −1 ⇒ Nijenhuis.
    pub fn implication_holds(&self) -> bool {
        let nij = self.nijenhuis.passed();
        let zero_ok = !self.square_zero || nij == self.rota_baxter_zero.passed();
        let idem_ok = !self.idempotent || !self.rota_baxter_minus_one.passed() || nij;
        zero_ok && idem_ok
    }
}

pub fn check_nijenhuis_rb_equivalence(t: &TernaryAlgebra, op: &Matrix) -> Result<NijenhuisRbReport> {
    let sq = op.mul(op)?;
    Ok(NijenhuisRbReport {
        square_zero: sq.is_zero(),
        idempotent: &sq == op,
        nijenhuis: check_ternary_operator(t, &OperatorKind::Nijenhuis, op)?,
        rota_baxter_zero: check_ternary_operator(t, &OperatorKind::RotaBaxter(Scalar::zero()), op)?,
        rota_baxter_minus_one: check_ternary_operator(t, &OperatorKind::RotaBaxter(-Scalar::one()), op)?,
    })
}

/// Exact description of an operator solution set.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorSpace {
    /// Linear space spanned by `basis`.
    Linear(Vec<Matrix>),
    /// `particular + span(basis)`.
    Affine {
        particular: Matrix,
        basis: Vec<Matrix>,
    },
    Empty,
}

impl OperatorSpace {
    pub fn basis(&self) -> &[Matrix] {
        match self {
            OperatorSpace::Linear(b) | OperatorSpace::Affine { basis: b, .. } => b,
            OperatorSpace::Empty => &[],
        }
    }
}

/// An algebra whose operators can be solved for.
#[derive(Debug, Clone, Copy)]
pub enum AlgebraRef<'a> {
    Binary(&'a BinaryAlgebra),
    Ternary(&'a TernaryAlgebra),
}

impl AlgebraRef<'_> {
    pub fn dim(&self) -> usize {
        match self {
            AlgebraRef::Binary(b) => b.dim(),
            AlgebraRef::Ternary(t) => t.dim(),
        }
    }

    pub fn check(&self, kind: &OperatorKind, op: &Matrix) -> Result<CheckReport> {
        match self {
            AlgebraRef::Binary(b) => check_binary_operator(b, kind, op),
            AlgebraRef::Ternary(t) => check_ternary_operator(t, kind, op),
        }
    }

    /// Concatenated `lhs − rhs` over every identity and basis tuple.
    fn residual(&self, kind: &OperatorKind, op: &Matrix) -> Result<Vec<Scalar>> {
        let (ids, arity) = match self {
            AlgebraRef::Binary(b) => (binary_identities(b, kind, op)?, 2),
            AlgebraRef::Ternary(t) => (ternary_identities(t, kind, op)?, 3),
        };
        let n = self.dim();
        let mut out = Vec::new();
        for flat in 0..n.pow(arity as u32) {
            let tuple: Vec<usize> = (0..arity).map(|p| flat / n.pow((arity - 1 - p) as u32) % n).collect();
            for id in &ids {
                let (l, r) = (id.eval)(&tuple);
                out.extend(vec_sub(&l, &r));
            }
        }
        Ok(out)
    }
}

/// Solves for every operator of a kind whose identity is linear (centroid,
/// central derivation, weight-0 derivation) or affine (binary weight-λ
/// derivation). Columns are indexed by matrix entries in row-major order.
pub fn solve_operator_space(algebra: AlgebraRef<'_>, kind: &OperatorKind) -> Result<OperatorSpace> {
    let affine = match (kind, &algebra) {
        (OperatorKind::Centroid | OperatorKind::CentralDerivation, _) => false,
        (OperatorKind::Derivation(w), _) if w.is_zero() => false,
        (OperatorKind::Derivation(_), AlgebraRef::Binary(_)) => true,
        _ => {
            return Err(Error::UnsupportedKind(format!(
                "{} is not a linear operator class",
                kind.name()
            )))
        }
    };
    let n = algebra.dim();
    let offset = algebra.residual(kind, &Matrix::zeros(n, n))?;
    let columns: Vec<Vec<Scalar>> = (0..n * n)
        .map(|k| {
            let unit = Matrix::from_fn(n, n, |i, j| if i * n + j == k { Scalar::one() } else { Scalar::zero() });
            algebra.residual(kind, &unit).map(|r| vec_sub(&r, &offset))
        })
        .collect::<Result<_>>()?;
    let system = Matrix::from_columns(offset.len(), &columns);
    let to_matrix = |v: &[Scalar]| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone());
    if !affine {
        return Ok(OperatorSpace::Linear(
            linalg::nullspace(&system).iter().map(|v| to_matrix(v)).collect(),
        ));
    }
    let rhs: Vec<Scalar> = offset.iter().map(|v| -v.clone()).collect();
    Ok(match linalg::affine_solve(&system, &rhs)? {
        AffineSolution::Infeasible => OperatorSpace::Empty,
        AffineSolution::Solved { particular, nullspace } => OperatorSpace::Affine {
            particular: to_matrix(&particular),
            basis: nullspace.iter().map(|v| to_matrix(v)).collect(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::int;

    fn shift() -> Matrix {
        Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]])
    }

    #[test]
    fn scalar_maps_pass_basic_kinds() {
        let b = catalog::sl2();
        let t = ternary_from_binary(&b);
        let c = Matrix::scalar(3, int(5));
        assert!(check_binary_operator(&b, &OperatorKind::Centroid, &c).unwrap().passed());
        assert!(check_ternary_operator(&t, &OperatorKind::Centroid, &c)
            .unwrap()
            .passed());
        assert!(check_binary_operator(&b, &OperatorKind::Nijenhuis, &c)
            .unwrap()
            .passed());
        assert!(check_ternary_operator(&t, &OperatorKind::Nijenhuis, &c)
            .unwrap()
            .passed());
        let id = Matrix::identity(3);
        assert!(check_binary_operator(&b, &OperatorKind::Averaging, &id)
            .unwrap()
            .passed());
        assert!(
            check_ternary_operator(&t, &OperatorKind::Reynolds, &Matrix::zeros(3, 3))
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn identity_is_weight_minus_two_rota_baxter() {
        let t = ternary_from_binary(&catalog::sl2());
        let r = check_inverse_rb_derivation(&t, &Matrix::identity(3), &int(-2)).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn singular_rb_inverse_is_an_error() {
        let t = ternary_from_binary(&catalog::sl2());
        assert_eq!(
            check_inverse_rb_derivation(&t, &shift(), &int(0)).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn shift_is_rb_zero_on_sl2() {
        let b = catalog::sl2();
        let rb = OperatorKind::RotaBaxter(int(0));
        assert!(check_binary_operator(&b, &rb, &shift()).unwrap().passed());
        let tr = check_operator_transfer(&b, &rb, &shift()).unwrap();
        assert!(tr.ternary.passed());
        let eq = check_nijenhuis_rb_equivalence(&ternary_from_binary(&b), &shift()).unwrap();
        assert!(eq.square_zero && eq.implication_holds() && eq.nijenhuis.passed());
    }

    #[test]
    fn missing_auxiliary_is_reported() {
        let kind = OperatorKind::QuasiDerivation { d1: None, d2: None };
        let err = check_binary_operator(&catalog::heis2(), &kind, &Matrix::identity(2)).unwrap_err();
        assert!(matches!(err, Error::MissingAuxiliary { .. }));
    }

    #[test]
    fn sl2_centroid_is_one_dimensional() {
        let b = catalog::sl2();
        let space = solve_operator_space(AlgebraRef::Binary(&b), &OperatorKind::Centroid).unwrap();
        assert_eq!(space, OperatorSpace::Linear(vec![Matrix::identity(3)]));
    }

    #[test]
    fn abelian_spaces_are_full() {
        let b = catalog::abelian(2);
        for kind in [
            OperatorKind::Centroid,
            OperatorKind::CentralDerivation,
            OperatorKind::Derivation(int(0)),
        ] {
            assert_eq!(
                solve_operator_space(AlgebraRef::Binary(&b), &kind)
                    .unwrap()
                    .basis()
                    .len(),
                4
            );
        }
    }

    #[test]
    fn nonlinear_kind_is_unsupported() {
        let b = catalog::heis2();
        assert!(matches!(
            solve_operator_space(AlgebraRef::Binary(&b), &OperatorKind::RotaBaxter(int(0))),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn centroid_variants_scale() {
        let t = ternary_from_binary(&catalog::sl2());
        let theta = Matrix::scalar(3, int(2));
        let v3 = centroid_bracket_family(&t, &theta, 3).unwrap();
        assert_eq!(v3, t.scaled(&int(8)));
        assert_eq!(centroid_bracket_family(&t, &Matrix::identity(3), 1).unwrap(), t);
    }
}
