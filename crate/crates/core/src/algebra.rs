//! Binary and ternary algebras given by structure constants, their defining
//! identities, compatibility, and the algebra-to-algebra constructions.
//!
//! Conventions: `[eᵢ,eⱼ] = Σₖ c[i,j,k] eₖ` and `[eᵢ,eⱼ,eₖ] = Σₗ t[i,j,k,l] eₗ`.
//! Product bases (tensor squares, scalar extensions) are ordered
//! lexicographically with the left factor major.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{sweep, CheckReport};
use crate::scalar::{self, Ring, Scalar};
use crate::tensor::{Arg, Tensor};
use num_traits::{One, Zero};

pub const RIGHT_LEIBNIZ: &str = "right-leibniz";
pub const TERNARY_LEIBNIZ: &str = "ternary-leibniz";
pub const CROSS_LEIBNIZ: &str = "cross-leibniz";
pub const CROSS_TERNARY: &str = "cross-ternary-leibniz";

fn require_cube(t: &Tensor, arity: usize, what: &str) -> Result<usize> {
    let n = t.dims().first().copied().unwrap_or(0);
    if t.arity() != arity || t.dims().iter().any(|&d| d != n) {
        return Err(Error::shape(
            format!("{what} tensor of arity {arity} with equal dimensions"),
            format!("profile {:?}", t.dims()),
        ));
    }
    Ok(n)
}

fn require_same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(format!("dimensions {a} and {b} differ")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryAlgebra {
    c: Tensor,
}

impl BinaryAlgebra {
    pub fn new(c: Tensor) -> Result<Self> {
        require_cube(&c, 3, "binary bracket")?;
        Ok(BinaryAlgebra { c })
    }

    pub fn zero(n: usize) -> Self {
        BinaryAlgebra {
            c: Tensor::zeros(vec![n; 3]),
        }
    }

    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ([usize; 3], Scalar)>,
    {
        let c = Tensor::from_entries(vec![n; 3], entries.into_iter().map(|(i, v)| (i.to_vec(), v)))?;
        Ok(BinaryAlgebra { c })
    }

    pub fn dim(&self) -> usize {
        self.c.dims()[0]
    }

    pub fn tensor(&self) -> &Tensor {
        &self.c
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.c.apply(&[x, y])
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        BinaryAlgebra { c: self.c.scale(k) }
    }

    /// Structure constants in the basis `fᵢ = P eᵢ` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim();
        p.require_shape(n, n)?;
        let inv = crate::linalg::inverse(p)?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = inv.apply(&self.bracket(&cols[i], &cols[j]));
                entries.extend(v.into_iter().enumerate().map(|(k, c)| ([i, j, k], c)));
            }
        }
        Self::from_entries(n, entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryAlgebra {
    t: Tensor,
}

impl TernaryAlgebra {
    pub fn new(t: Tensor) -> Result<Self> {
        require_cube(&t, 4, "ternary bracket")?;
        Ok(TernaryAlgebra { t })
    }

    pub fn zero(n: usize) -> Self {
        TernaryAlgebra {
            t: Tensor::zeros(vec![n; 4]),
        }
    }

    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ([usize; 4], Scalar)>,
    {
        let t = Tensor::from_entries(vec![n; 4], entries.into_iter().map(|(i, v)| (i.to_vec(), v)))?;
        Ok(TernaryAlgebra { t })
    }

    pub fn dim(&self) -> usize {
        self.t.dims()[0]
    }

    pub fn tensor(&self) -> &Tensor {
        &self.t
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.t.apply(&[x, y, z])
    }

    pub fn scaled(&self, k: &Scalar) -> Self {
        TernaryAlgebra { t: self.t.scale(k) }
    }

    /// Structure constants in the basis `fᵢ = P eᵢ` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        let n = self.dim();
        p.require_shape(n, n)?;
        let inv = crate::linalg::inverse(p)?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        let t = Tensor::from_fn(vec![n; 4], |idx| {
            let v = self.bracket(&cols[idx[0]], &cols[idx[1]], &cols[idx[2]]);
            inv.row(idx[3]).iter().zip(&v).map(|(a, b)| a * b).sum()
        });
        Ok(TernaryAlgebra { t })
    }
}

/// A commutative associative algebra; the axioms are enforced on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommAssocAlgebra {
    p: Tensor,
}

impl CommAssocAlgebra {
    pub fn new(p: Tensor) -> Result<Self> {
        let n = require_cube(&p, 3, "product")?;
        for i in 0..n {
            for j in 0..n {
                if p.slice(&[i, j]) != p.slice(&[j, i]) {
                    return Err(Error::AxiomViolation(format!("not commutative at ({i},{j})")));
                }
                for k in 0..n {
                    let left = p.apply_args(&[Arg::V(p.slice(&[i, j])), Arg::E(k)]);
                    let right = p.apply_args(&[Arg::E(i), Arg::V(p.slice(&[j, k]))]);
                    if left != right {
                        return Err(Error::AxiomViolation(format!("not associative at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(CommAssocAlgebra { p })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::truncated_polynomials(1)
    }

    /// `ℚ[ε]/(ε^k)` with basis `1, ε, …, ε^{k-1}`.
    pub fn truncated_polynomials(k: usize) -> Self {
        let p = Tensor::from_fn(vec![k; 3], |i| {
            if i[0] + i[1] == i[2] {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        CommAssocAlgebra { p }
    }

    /// Dual numbers `ℚ[ε]/(ε²)`.
    pub fn dual_numbers() -> Self {
        Self::truncated_polynomials(2)
    }

    pub fn dim(&self) -> usize {
        self.p.dims()[0]
    }

    pub fn tensor(&self) -> &Tensor {
        &self.p
    }
}

/// Both sides of the right Leibniz identity with `outer` applied last:
/// `[[x,y]ᵢ,z]ₒ = [x,[y,z]ᵢ]ₒ + [[x,z]ᵢ,y]ₒ`.
pub(crate) fn leibniz_sides<T: Ring>(
    outer: &Tensor<T>,
    inner: &Tensor<T>,
    x: usize,
    y: usize,
    z: usize,
) -> (Vec<T>, Vec<T>) {
    let lhs = outer.apply_args(&[Arg::V(inner.slice(&[x, y])), Arg::E(z)]);
    let mut rhs = outer.apply_args(&[Arg::E(x), Arg::V(inner.slice(&[y, z]))]);
    let third = outer.apply_args(&[Arg::V(inner.slice(&[x, z])), Arg::E(y)]);
    scalar::vec_axpy(&mut rhs, &T::one(), &third);
    (lhs, rhs)
}

/// Both sides of the ternary Leibniz identity with `outer` applied last:
/// `[[x,y,z],t,u] = [x,y,[z,t,u]] + [x,[y,t,u],z] + [[x,t,u],y,z]`.
pub(crate) fn lci_sides<T: Ring>(outer: &Tensor<T>, inner: &Tensor<T>, idx: &[usize]) -> (Vec<T>, Vec<T>) {
    let (x, y, z, t, u) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
    let lhs = outer.apply_args(&[Arg::V(inner.slice(&[x, y, z])), Arg::E(t), Arg::E(u)]);
    let mut rhs = outer.apply_args(&[Arg::E(x), Arg::E(y), Arg::V(inner.slice(&[z, t, u]))]);
    let second = outer.apply_args(&[Arg::E(x), Arg::V(inner.slice(&[y, t, u])), Arg::E(z)]);
    let third = outer.apply_args(&[Arg::V(inner.slice(&[x, t, u])), Arg::E(y), Arg::E(z)]);
    scalar::vec_axpy(&mut rhs, &T::one(), &second);
    scalar::vec_axpy(&mut rhs, &T::one(), &third);
    (lhs, rhs)
}

/// Polarized identity `F(a,b) + F(b,a)` from a two-structure residual.
pub(crate) fn polarized<T: Ring>(ab: (Vec<T>, Vec<T>), ba: (Vec<T>, Vec<T>)) -> (Vec<T>, Vec<T>) {
    (scalar::vec_add(&ab.0, &ba.0), scalar::vec_add(&ab.1, &ba.1))
}

/// Checks `[[x,y],z] = [x,[y,z]] + [[x,z],y]` on every basis triple.
pub fn check_leibniz(b: &BinaryAlgebra) -> CheckReport {
    let n = b.dim();
    sweep("leibniz", &[RIGHT_LEIBNIZ], &[n, n, n], |t, r| {
        let (l, rr) = leibniz_sides(b.tensor(), b.tensor(), t[0], t[1], t[2]);
        r.record(RIGHT_LEIBNIZ, t, &l, &rr);
    })
}

/// Checks the ternary Leibniz identity on every basis 5-tuple.
pub fn check_ternary_leibniz(t: &TernaryAlgebra) -> CheckReport {
    let n = t.dim();
    sweep("ternary-leibniz", &[TERNARY_LEIBNIZ], &[n; 5], |idx, r| {
        let (l, rr) = lci_sides(t.tensor(), t.tensor(), idx);
        r.record(TERNARY_LEIBNIZ, idx, &l, &rr);
    })
}

/// Checks the six-term cross identity
/// `[[x,y]₁,z]₂ + [[x,y]₂,z]₁ = [x,[y,z]₁]₂ + [x,[y,z]₂]₁ + [[x,z]₁,y]₂ + [[x,z]₂,y]₁`.
pub fn check_compatible_leibniz(b1: &BinaryAlgebra, b2: &BinaryAlgebra) -> Result<CheckReport> {
    require_same_dim(b1.dim(), b2.dim())?;
    let n = b1.dim();
    Ok(sweep("compatible-leibniz", &[CROSS_LEIBNIZ], &[n, n, n], |t, r| {
        let (l, rr) = polarized(
            leibniz_sides(b2.tensor(), b1.tensor(), t[0], t[1], t[2]),
            leibniz_sides(b1.tensor(), b2.tensor(), t[0], t[1], t[2]),
        );
        r.record(CROSS_LEIBNIZ, t, &l, &rr);
    }))
}

/// Checks the eight-term cross identity of two ternary brackets.
pub fn check_compatible_ternary(t1: &TernaryAlgebra, t2: &TernaryAlgebra) -> Result<CheckReport> {
    require_same_dim(t1.dim(), t2.dim())?;
    let n = t1.dim();
    Ok(sweep("compatible-ternary", &[CROSS_TERNARY], &[n; 5], |idx, r| {
        let (l, rr) = polarized(
            lci_sides(t2.tensor(), t1.tensor(), idx),
            lci_sides(t1.tensor(), t2.tensor(), idx),
        );
        r.record(CROSS_TERNARY, idx, &l, &rr);
    }))
}

/// `k1·[-,-]₁ + k2·[-,-]₂`.
pub fn pencil_binary(b1: &BinaryAlgebra, b2: &BinaryAlgebra, k1: &Scalar, k2: &Scalar) -> Result<BinaryAlgebra> {
    require_same_dim(b1.dim(), b2.dim())?;
    BinaryAlgebra::new(b1.tensor().scale(k1).add(&b2.tensor().scale(k2))?)
}

/// `k1·[-,-,-]₁ + k2·[-,-,-]₂`.
pub fn pencil_ternary(t1: &TernaryAlgebra, t2: &TernaryAlgebra, k1: &Scalar, k2: &Scalar) -> Result<TernaryAlgebra> {
    require_same_dim(t1.dim(), t2.dim())?;
    TernaryAlgebra::new(t1.tensor().scale(k1).add(&t2.tensor().scale(k2))?)
}

/// The associated ternary bracket `{x,y,z} = [x,[y,z]]`.
pub fn ternary_from_binary(b: &BinaryAlgebra) -> TernaryAlgebra {
    let n = b.dim();
    let c = b.tensor();
    let mut data = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                data.extend(c.apply_args(&[Arg::E(i), Arg::V(c.slice(&[j, k]))]));
            }
        }
    }
    TernaryAlgebra {
        t: Tensor::new(vec![n; 4], data).expect("profile"),
    }
}

/// Bracket on `A⊗A` (basis `eᵢ⊗eⱼ` at index `i·n+j`):
/// `{x⊗y, x'⊗y'} = x⊗[y,x',y'] + [x,x',y']⊗y`.
pub fn tensor_square_leibniz(t: &TernaryAlgebra) -> BinaryAlgebra {
    let n = t.dim();
    let nn = n * n;
    let tt = t.tensor();
    let mut c = vec![Scalar::zero(); nn * nn * nn];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let base = ((i * n + j) * nn + (k * n + l)) * nn;
                    for (b, v) in tt.slice(&[j, k, l]).iter().enumerate() {
                        if !v.is_zero() {
                            c[base + i * n + b] += v;
                        }
                    }
                    for (a, v) in tt.slice(&[i, k, l]).iter().enumerate() {
                        if !v.is_zero() {
                            c[base + a * n + j] += v;
                        }
                    }
                }
            }
        }
    }
    BinaryAlgebra {
        c: Tensor::new(vec![nn; 3], c).expect("profile"),
    }
}

/// Componentwise bracket on `L₁⊕L₂`; mixed brackets vanish.
pub fn direct_sum_ternary(t1: &TernaryAlgebra, t2: &TernaryAlgebra) -> TernaryAlgebra {
    let (n1, n2) = (t1.dim(), t2.dim());
    let t = Tensor::from_fn(vec![n1 + n2; 4], |i| {
        if i.iter().all(|&x| x < n1) {
            t1.tensor().get(i).clone()
        } else if i.iter().all(|&x| x >= n1) {
            let j: Vec<usize> = i.iter().map(|&x| x - n1).collect();
            t2.tensor().get(&j).clone()
        } else {
            Scalar::zero()
        }
    });
    TernaryAlgebra { t }
}

/// Componentwise bracket on `L₁⊕L₂`; mixed brackets vanish.
pub fn direct_sum_binary(b1: &BinaryAlgebra, b2: &BinaryAlgebra) -> BinaryAlgebra {
    let (n1, n2) = (b1.dim(), b2.dim());
    let c = Tensor::from_fn(vec![n1 + n2; 3], |i| {
        if i.iter().all(|&x| x < n1) {
            b1.tensor().get(i).clone()
        } else if i.iter().all(|&x| x >= n1) {
            let j: Vec<usize> = i.iter().map(|&x| x - n1).collect();
            b2.tensor().get(&j).clone()
        } else {
            Scalar::zero()
        }
    });
    BinaryAlgebra { c }
}

/// `{a⊗x, b⊗y, c⊗z} = abc⊗[x,y,z]` on `A⊗L` (basis `aₚ⊗eᵢ` at `p·n+i`).
pub fn scalar_extension(a: &CommAssocAlgebra, t: &TernaryAlgebra) -> TernaryAlgebra {
    let (k, n) = (a.dim(), t.dim());
    let p = a.tensor();
    // triple products abc, indexed [a,b,c] -> vector over A
    let triple: Vec<Vec<Scalar>> = (0..k * k * k)
        .map(|idx| {
            let (x, y, z) = (idx / (k * k), (idx / k) % k, idx % k);
            p.apply_args(&[Arg::V(p.slice(&[x, y])), Arg::E(z)])
        })
        .collect();
    let out = Tensor::from_fn(vec![k * n; 4], |i| {
        let (pa, pb, pc, pf) = (i[0] / n, i[1] / n, i[2] / n, i[3] / n);
        let coeff = &triple[(pa * k + pb) * k + pc][pf];
        if coeff.is_zero() {
            return Scalar::zero();
        }
        coeff * t.tensor().get(&[i[0] % n, i[1] % n, i[2] % n, i[3] % n])
    });
    TernaryAlgebra { t: out }
}
