//! Bimodules and representations of binary and ternary algebras, their
//! compatibility notions, Rota-Baxter bimodules, 2-cocycles, semidirect
//! products and O-operators.
//!
//! Action tensors keep the output index last. A representation stores
//! `λ, μ, ρ : L×L → End(V)` as tensors of profile `(n,n,m,m)` indexed
//! `[x, y, input, output]`. Semidirect products use the concatenated basis
//! of `L⊕M` with the algebra coordinates first.

use crate::algebra::{lci_sides, leibniz_sides, polarized, BinaryAlgebra, TernaryAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operators::{induced_bracket_binary, induced_bracket_ternary, BinaryRecipe, TernaryRecipe};
use crate::report::{sweep, CheckReport};
use crate::scalar::{basis, vec_add, vec_axpy, vec_sum, vec_zero, Ring, Scalar};
use crate::tensor::{Arg, Tensor};
use num_traits::{One, Zero};

fn require_profile<T: Ring>(t: &Tensor<T>, dims: &[usize], what: &str) -> Result<()> {
    if t.dims() != dims {
        return Err(Error::shape(
            format!("{what} with profile {dims:?}"),
            format!("profile {:?}", t.dims()),
        ));
    }
    Ok(())
}

/// Bimodule over a binary algebra: `l : L×M → M`, `r : M×L → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryBimodule {
    pub l: Tensor,
    pub r: Tensor,
}

impl BinaryBimodule {
    pub fn new(l: Tensor, r: Tensor) -> Result<Self> {
        if l.arity() != 3 || r.arity() != 3 {
            return Err(Error::shape(
                "arity-3 action tensors",
                format!("{:?} and {:?}", l.dims(), r.dims()),
            ));
        }
        let (n, m) = (l.dims()[0], l.dims()[1]);
        require_profile(&l, &[n, m, m], "left action")?;
        require_profile(&r, &[m, n, m], "right action")?;
        Ok(BinaryBimodule { l, r })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        BinaryBimodule {
            l: Tensor::zeros(vec![n, m, m]),
            r: Tensor::zeros(vec![m, n, m]),
        }
    }

    /// `M = L` with both actions given by the bracket.
    pub fn regular(b: &BinaryAlgebra) -> Self {
        BinaryBimodule {
            l: b.tensor().clone(),
            r: b.tensor().clone(),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.l.dims()[0]
    }

    pub fn module_dim(&self) -> usize {
        self.l.dims()[1]
    }

    fn require_over(&self, n: usize) -> Result<()> {
        if self.algebra_dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "bimodule over dimension {} used with algebra of dimension {n}",
                self.algebra_dim()
            )));
        }
        Ok(())
    }
}

/// Bimodule over a ternary algebra: `l₁ : M×L×L`, `l₂ : L×M×L`, `l₃ : L×L×M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryBimodule {
    pub l1: Tensor,
    pub l2: Tensor,
    pub l3: Tensor,
}

impl TernaryBimodule {
    pub fn new(l1: Tensor, l2: Tensor, l3: Tensor) -> Result<Self> {
        if l1.arity() != 4 {
            return Err(Error::shape("arity-4 action tensors", format!("{:?}", l1.dims())));
        }
        let (m, n) = (l1.dims()[0], l1.dims()[1]);
        require_profile(&l1, &[m, n, n, m], "l1")?;
        require_profile(&l2, &[n, m, n, m], "l2")?;
        require_profile(&l3, &[n, n, m, m], "l3")?;
        Ok(TernaryBimodule { l1, l2, l3 })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        TernaryBimodule {
            l1: Tensor::zeros(vec![m, n, n, m]),
            l2: Tensor::zeros(vec![n, m, n, m]),
            l3: Tensor::zeros(vec![n, n, m, m]),
        }
    }

    /// `M = L` with all three actions given by the bracket.
    pub fn regular(t: &TernaryAlgebra) -> Self {
        TernaryBimodule {
            l1: t.tensor().clone(),
            l2: t.tensor().clone(),
            l3: t.tensor().clone(),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.l1.dims()[1]
    }

    pub fn module_dim(&self) -> usize {
        self.l1.dims()[0]
    }

    fn require_over(&self, n: usize) -> Result<()> {
        if self.algebra_dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "bimodule over dimension {} used with algebra of dimension {n}",
                self.algebra_dim()
            )));
        }
        Ok(())
    }
}

/// Representation `(λ, μ, ρ)` of a ternary algebra on `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub lambda: Tensor,
    pub mu: Tensor,
    pub rho: Tensor,
}

impl Representation {
    pub fn new(lambda: Tensor, mu: Tensor, rho: Tensor) -> Result<Self> {
        if lambda.arity() != 4 {
            return Err(Error::shape(
                "arity-4 representation tensors",
                format!("{:?}", lambda.dims()),
            ));
        }
        let (n, m) = (lambda.dims()[0], lambda.dims()[2]);
        for (t, name) in [(&lambda, "lambda"), (&mu, "mu"), (&rho, "rho")] {
            require_profile(t, &[n, n, m, m], name)?;
        }
        Ok(Representation { lambda, mu, rho })
    }

    pub fn zero(n: usize, m: usize) -> Self {
        let z = Tensor::zeros(vec![n, n, m, m]);
        Representation {
            lambda: z.clone(),
            mu: z.clone(),
            rho: z,
        }
    }

    /// `λ(x,y)z = μ(x,z)y = ρ(y,z)x = [x,y,z]`.
    pub fn adjoint(t: &TernaryAlgebra) -> Self {
        rep_from_bimodule(&TernaryBimodule::regular(t))
    }

    pub fn algebra_dim(&self) -> usize {
        self.lambda.dims()[0]
    }

    pub fn module_dim(&self) -> usize {
        self.lambda.dims()[2]
    }

    pub fn add(&self, other: &Representation) -> Result<Representation> {
        Ok(Representation {
            lambda: self.lambda.add(&other.lambda)?,
            mu: self.mu.add(&other.mu)?,
            rho: self.rho.add(&other.rho)?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Representation {
        Representation {
            lambda: self.lambda.scale(c),
            mu: self.mu.scale(c),
            rho: self.rho.scale(c),
        }
    }

    pub(crate) fn require_over(&self, n: usize) -> Result<()> {
        if self.algebra_dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "representation over dimension {} used with algebra of dimension {n}",
                self.algebra_dim()
            )));
        }
        Ok(())
    }

    pub(crate) fn parts(&self) -> RepTensors<'_, Scalar> {
        RepTensors {
            lam: &self.lambda,
            mu: &self.mu,
            rho: &self.rho,
        }
    }
}

/// Trilinear map `ω : L×L×L → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    pub w: Tensor,
}

impl Cocycle {
    pub fn new(w: Tensor) -> Result<Self> {
        if w.arity() != 4 {
            return Err(Error::shape("arity-4 cocycle tensor", format!("{:?}", w.dims())));
        }
        let n = w.dims()[0];
        let m = w.dims()[3];
        require_profile(&w, &[n, n, n, m], "cocycle")?;
        Ok(Cocycle { w })
    }
}

/// A map `T : V → L` (an `n×m` matrix) together with a representation on `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperatorData {
    pub t: Matrix,
    pub rep: Representation,
}

impl OOperatorData {
    pub fn new(t: Matrix, rep: Representation) -> Result<Self> {
        t.require_shape(rep.algebra_dim(), rep.module_dim())?;
        Ok(OOperatorData { t, rep })
    }
}

/// Two structures of the same shape, one per bracket of a compatible pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatiblePack<M> {
    pub first: M,
    pub second: M,
}

// ---------------------------------------------------------------------------
// binary bimodules

const BINARY_AXIOMS: [&str; 3] = ["axiom-1", "axiom-2", "axiom-3"];

/// Semidirect bracket on `L⊕M`: `[x+m, y+n] = [x,y] + l(x,n) + r(m,y)`.
pub fn semidirect_binary(b: &BinaryAlgebra, module: &BinaryBimodule) -> Result<BinaryAlgebra> {
    let n = b.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    let mut entries: Vec<([usize; 3], Scalar)> = Vec::new();
    for (i, v) in b.tensor().nonzero_entries() {
        entries.push(([i[0], i[1], i[2]], v.clone()));
    }
    for (i, v) in module.l.nonzero_entries() {
        entries.push(([i[0], n + i[1], n + i[2]], v.clone()));
    }
    for (i, v) in module.r.nonzero_entries() {
        entries.push(([n + i[0], i[1], n + i[2]], v.clone()));
    }
    BinaryAlgebra::from_entries(n + m, entries)
}

type SidesFn = fn(&Tensor, &Tensor, &[usize]) -> (Vec<Scalar>, Vec<Scalar>);

/// Identity on `L⊕M` restricted to tuples with exactly one module argument,
/// summed over (outer, inner) pairs. `names[p]` labels the tuples whose
/// module argument sits in slot `p`.
pub(crate) fn module_slot_report(
    name: &str,
    names: &[&str],
    n: usize,
    m: usize,
    pairs: &[(&Tensor, &Tensor)],
    sides: SidesFn,
) -> CheckReport {
    let slots = names.len();
    let mut report = CheckReport::new(name);
    for (p, id) in names.iter().enumerate() {
        let ranges: Vec<usize> = (0..slots).map(|q| if q == p { m } else { n }).collect();
        let part = sweep(name, &[id], &ranges, |t, r| {
            let idx: Vec<usize> = t
                .iter()
                .enumerate()
                .map(|(q, &i)| if q == p { n + i } else { i })
                .collect();
            let mut acc: Option<(Vec<Scalar>, Vec<Scalar>)> = None;
            for (outer, inner) in pairs {
                let s = sides(outer, inner, &idx);
                acc = Some(match acc {
                    None => s,
                    Some(a) => polarized(a, s),
                });
            }
            let (l, rr) = acc.expect("at least one pair");
            r.record(id, t, &l[n..], &rr[n..]);
        });
        report.merge(part);
    }
    report
}

fn binary_sides(outer: &Tensor, inner: &Tensor, idx: &[usize]) -> (Vec<Scalar>, Vec<Scalar>) {
    leibniz_sides(outer, inner, idx[0], idx[1], idx[2])
}

pub(crate) fn ternary_sides(outer: &Tensor, inner: &Tensor, idx: &[usize]) -> (Vec<Scalar>, Vec<Scalar>) {
    lci_sides(outer, inner, idx)
}

/// Binary bimodule axioms, named by the slot of the module argument in the
/// Leibniz identity: `axiom-1` is `l([x,y],m) = l(x,l(y,m)) + r(l(x,m),y)`,
/// `axiom-2` is `r(l(x,m),y) = l(x,r(m,y)) + l([x,y],m)`, `axiom-3` is
/// `r(r(m,x),y) = r(m,[x,y]) + r(r(m,y),x)`.
pub fn check_binary_bimodule(b: &BinaryAlgebra, module: &BinaryBimodule) -> Result<CheckReport> {
    let s = semidirect_binary(b, module)?;
    let (n, m) = (b.dim(), module.module_dim());
    // the module argument of axiom k sits in slot 3 - k
    let names = [BINARY_AXIOMS[2], BINARY_AXIOMS[1], BINARY_AXIOMS[0]];
    let mut report = module_slot_report(
        "binary-bimodule",
        &names,
        n,
        m,
        &[(s.tensor(), s.tensor())],
        binary_sides,
    );
    report.outcomes.sort_by(|a, b| a.identity.cmp(&b.identity));
    Ok(report)
}

/// Both bimodule checks plus the mixed equations obtained by polarizing the
/// three axioms in (bracket, l, r).
pub fn check_compatible_bimodule_binary(
    b1: &BinaryAlgebra,
    b2: &BinaryAlgebra,
    pack: &CompatiblePack<BinaryBimodule>,
) -> Result<CheckReport> {
    let s1 = semidirect_binary(b1, &pack.first)?;
    let s2 = semidirect_binary(b2, &pack.second)?;
    if s1.dim() != s2.dim() {
        return Err(Error::DimensionMismatch("packs of different shapes".into()));
    }
    let (n, m) = (b1.dim(), pack.first.module_dim());
    let mut report = CheckReport::new("compatible-binary-bimodule");
    report.absorb("first", check_binary_bimodule(b1, &pack.first)?);
    report.absorb("second", check_binary_bimodule(b2, &pack.second)?);
    let names = ["mixed-3", "mixed-2", "mixed-1"];
    let mut mixed = module_slot_report(
        "mixed",
        &names,
        n,
        m,
        &[(s2.tensor(), s1.tensor()), (s1.tensor(), s2.tensor())],
        binary_sides,
    );
    mixed.outcomes.sort_by(|a, b| a.identity.cmp(&b.identity));
    report.merge(mixed);
    Ok(report)
}

/// Ternary bimodule induced by a binary one over `{x,y,z} = [x,[y,z]]`:
/// `l₁(m,x,y) = r(m,[x,y])`, `l₂(x,m,y) = l(x,r(m,y))`, `l₃(x,y,m) = l(x,l(y,m))`.
pub fn bimodule_from_binary(b: &BinaryAlgebra, module: &BinaryBimodule) -> Result<TernaryBimodule> {
    let n = b.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    let (l, r, c) = (&module.l, &module.r, b.tensor());
    let l1 = Tensor::from_fn(vec![m, n, n, m], |i| {
        r.apply_args(&[Arg::E(i[0]), Arg::V(c.slice(&[i[1], i[2]]))])[i[3]].clone()
    });
    let l2 = Tensor::from_fn(vec![n, m, n, m], |i| {
        l.apply_args(&[Arg::E(i[0]), Arg::V(r.slice(&[i[1], i[2]]))])[i[3]].clone()
    });
    let l3 = Tensor::from_fn(vec![n, n, m, m], |i| {
        l.apply_args(&[Arg::E(i[0]), Arg::V(l.slice(&[i[1], i[2]]))])[i[3]].clone()
    });
    Ok(TernaryBimodule { l1, l2, l3 })
}

// ---------------------------------------------------------------------------
// ternary bimodules and representations

const TERNARY_AXIOMS: [&str; 5] = ["axiom-1", "axiom-2", "axiom-3", "axiom-4", "axiom-5"];

/// Semidirect bracket on `L⊕M`:
/// `[x+m₁,y+m₂,z+m₃] = [x,y,z] + l₁(m₁,y,z) + l₂(x,m₂,z) + l₃(x,y,m₃) + ω(x,y,z)`.
pub fn semidirect_ternary(t: &TernaryAlgebra, module: &TernaryBimodule, w: Option<&Cocycle>) -> Result<TernaryAlgebra> {
    let n = t.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    if let Some(w) = w {
        require_profile(&w.w, &[n, n, n, m], "cocycle")?;
    }
    let mut entries: Vec<([usize; 4], Scalar)> = Vec::new();
    for (i, v) in t.tensor().nonzero_entries() {
        entries.push(([i[0], i[1], i[2], i[3]], v.clone()));
    }
    for (i, v) in module.l1.nonzero_entries() {
        entries.push(([n + i[0], i[1], i[2], n + i[3]], v.clone()));
    }
    for (i, v) in module.l2.nonzero_entries() {
        entries.push(([i[0], n + i[1], i[2], n + i[3]], v.clone()));
    }
    for (i, v) in module.l3.nonzero_entries() {
        entries.push(([i[0], i[1], n + i[2], n + i[3]], v.clone()));
    }
    if let Some(w) = w {
        for (i, v) in w.w.nonzero_entries() {
            entries.push(([i[0], i[1], i[2], n + i[3]], v.clone()));
        }
    }
    TernaryAlgebra::from_entries(n + m, entries)
}

/// The five bimodule axioms; `axiom-k` is the ternary Leibniz identity with
/// the module argument in slot `k`, e.g. `axiom-1` is
/// `l₁(l₁(m,x,y),z,t) = l₁(m,x,[y,z,t]) + l₁(m,[x,z,t],y) + l₁(l₁(m,z,t),x,y)`
/// and `axiom-2` is
/// `l₁(l₂(x,m,y),z,t) = l₂(x,m,[y,z,t]) + l₂(x,l₁(m,z,t),y) + l₂([x,z,t],m,y)`.
pub fn check_ternary_bimodule(t: &TernaryAlgebra, module: &TernaryBimodule) -> Result<CheckReport> {
    let s = semidirect_ternary(t, module, None)?;
    let (n, m) = (t.dim(), module.module_dim());
    Ok(module_slot_report(
        "ternary-bimodule",
        &TERNARY_AXIOMS,
        n,
        m,
        &[(s.tensor(), s.tensor())],
        ternary_sides,
    ))
}

/// Componentwise actions on `M⊕N`.
pub fn direct_sum_bimodules(a: &TernaryBimodule, b: &TernaryBimodule) -> Result<TernaryBimodule> {
    let n = a.algebra_dim();
    b.require_over(n)?;
    let (ma, mb) = (a.module_dim(), b.module_dim());
    let m = ma + mb;
    // `module_pos` and the output are module positions; others are algebra.
    let block = |ta: &Tensor, tb: &Tensor, module_pos: usize, dims: Vec<usize>| {
        Tensor::from_fn(dims, |i| {
            let (mi, out) = (i[module_pos], i[3]);
            if mi < ma && out < ma {
                let mut j = i.to_vec();
                j[module_pos] = mi;
                ta.get(&j).clone()
            } else if mi >= ma && out >= ma {
                let mut j = i.to_vec();
                j[module_pos] = mi - ma;
                j[3] = out - ma;
                tb.get(&j).clone()
            } else {
                Scalar::zero()
            }
        })
    };
    Ok(TernaryBimodule {
        l1: block(&a.l1, &b.l1, 0, vec![m, n, n, m]),
        l2: block(&a.l2, &b.l2, 1, vec![n, m, n, m]),
        l3: block(&a.l3, &b.l3, 2, vec![n, n, m, m]),
    })
}

/// `λ(x,y)m = l₃(x,y,m)`, `μ(x,y)m = l₂(x,m,y)`, `ρ(x,y)m = l₁(m,x,y)`.
pub fn rep_from_bimodule(module: &TernaryBimodule) -> Representation {
    let (n, m) = (module.algebra_dim(), module.module_dim());
    let dims = vec![n, n, m, m];
    Representation {
        lambda: module.l3.clone(),
        mu: Tensor::from_fn(dims.clone(), |i| module.l2.get(&[i[0], i[2], i[1], i[3]]).clone()),
        rho: Tensor::from_fn(dims, |i| module.l1.get(&[i[2], i[0], i[1], i[3]]).clone()),
    }
}

/// Inverse of [`rep_from_bimodule`].
pub fn bimodule_from_rep(rep: &Representation) -> TernaryBimodule {
    let (n, m) = (rep.algebra_dim(), rep.module_dim());
    TernaryBimodule {
        l1: Tensor::from_fn(vec![m, n, n, m], |i| rep.rho.get(&[i[1], i[2], i[0], i[3]]).clone()),
        l2: Tensor::from_fn(vec![n, m, n, m], |i| rep.mu.get(&[i[0], i[2], i[1], i[3]]).clone()),
        l3: rep.lambda.clone(),
    }
}

/// Borrowed `(λ, μ, ρ)` tensors over any coefficient ring.
pub(crate) struct RepTensors<'a, T> {
    pub lam: &'a Tensor<T>,
    pub mu: &'a Tensor<T>,
    pub rho: &'a Tensor<T>,
}

impl<T> Clone for RepTensors<'_, T> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<T> Copy for RepTensors<'_, T> {}

/// `A(x,y)` applied to `v`, for an operator-valued tensor `A`.
fn act<T: Ring>(a: &Tensor<T>, x: Arg<'_, T>, y: Arg<'_, T>, v: &[T]) -> Vec<T> {
    a.apply_args(&[x, y, Arg::V(v)])
}

fn add_all<T: Ring>(len: usize, parts: &[Vec<T>]) -> Vec<T> {
    vec_sum(len, parts)
}

/// Terms of representation axiom `axiom` (1..=5) that involve the bracket,
/// evaluated at `(x,y,z,t)` on the module basis vector `m`.
pub(crate) fn rep_linear_sides<T: Ring>(
    b: &Tensor<T>,
    r: RepTensors<'_, T>,
    axiom: usize,
    idx: &[usize],
) -> (Vec<T>, Vec<T>) {
    use Arg::{E, V};
    let (x, y, z, t, m) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
    let dim = r.lam.out_dim();
    let e = basis::<T>(dim, m);
    let zero = || vec_zero::<T>(dim);
    match axiom {
        1 => (act(r.lam, V(b.slice(&[x, y, z])), E(t), &e), zero()),
        2 => (act(r.mu, V(b.slice(&[x, y, z])), E(t), &e), zero()),
        3..=5 => {
            let op = [r.lam, r.mu, r.rho][axiom - 3];
            let rhs = add_all(
                dim,
                &[
                    act(op, E(x), V(b.slice(&[y, z, t])), &e),
                    act(op, V(b.slice(&[x, z, t])), E(y), &e),
                ],
            );
            (zero(), rhs)
        }
        _ => unreachable!("representation axioms are numbered 1..=5"),
    }
}

/// Composition terms of representation axiom `axiom`, with `outer` acting
/// after `inner`.
pub(crate) fn rep_quadratic_sides<T: Ring>(
    outer: RepTensors<'_, T>,
    inner: RepTensors<'_, T>,
    axiom: usize,
    idx: &[usize],
) -> (Vec<T>, Vec<T>) {
    use Arg::E;
    let (x, y, z, t, m) = (idx[0], idx[1], idx[2], idx[3], idx[4]);
    let dim = outer.lam.out_dim();
    let e = basis::<T>(dim, m);
    let zero = || vec_zero::<T>(dim);
    let comp = |o: &Tensor<T>, a: usize, bb: usize, i: &Tensor<T>, c: usize, d: usize| {
        act(o, E(a), E(bb), &act(i, E(c), E(d), &e))
    };
    match axiom {
        1 | 2 => {
            let last = if axiom == 1 { inner.lam } else { inner.mu };
            let rhs = add_all(
                dim,
                &[
                    comp(outer.lam, x, y, last, z, t),
                    comp(outer.mu, x, z, last, y, t),
                    comp(outer.rho, y, z, last, x, t),
                ],
            );
            (zero(), rhs)
        }
        3 => (
            comp(outer.rho, z, t, inner.lam, x, y),
            comp(outer.lam, x, y, inner.rho, z, t),
        ),
        4 => (
            comp(outer.rho, z, t, inner.mu, x, y),
            comp(outer.mu, x, y, inner.rho, z, t),
        ),
        5 => (
            comp(outer.rho, z, t, inner.rho, x, y),
            comp(outer.rho, x, y, inner.rho, z, t),
        ),
        _ => unreachable!("representation axioms are numbered 1..=5"),
    }
}

pub(crate) fn rep_axiom_sides<T: Ring>(
    b: &Tensor<T>,
    r: RepTensors<'_, T>,
    axiom: usize,
    idx: &[usize],
) -> (Vec<T>, Vec<T>) {
    let (ll, lr) = rep_linear_sides(b, r, axiom, idx);
    let (ql, qr) = rep_quadratic_sides(r, r, axiom, idx);
    (vec_add(&ll, &ql), vec_add(&lr, &qr))
}

pub const REP_AXIOMS: [&str; 5] = ["rep-1", "rep-2", "rep-3", "rep-4", "rep-5"];

/// The five representation axioms on every basis `(x,y,z,t)` and module
/// basis vector:
/// `λ([x,y,z],t) = λ(x,y)λ(z,t) + μ(x,z)λ(y,t) + ρ(y,z)λ(x,t)`,
/// `μ([x,y,z],t) = λ(x,y)μ(z,t) + μ(x,z)μ(y,t) + ρ(y,z)μ(x,t)`,
/// `ρ(z,t)λ(x,y) = λ(x,y)ρ(z,t) + λ(x,[y,z,t]) + λ([x,z,t],y)`,
/// `ρ(z,t)μ(x,y) = μ(x,[y,z,t]) + μ(x,y)ρ(z,t) + μ([x,z,t],y)`,
/// `ρ(z,t)ρ(x,y) = ρ(x,[y,z,t]) + ρ([x,z,t],y) + ρ(x,y)ρ(z,t)`.
pub fn check_representation(t: &TernaryAlgebra, rep: &Representation) -> Result<CheckReport> {
    rep.require_over(t.dim())?;
    let (n, m) = (t.dim(), rep.module_dim());
    Ok(sweep("representation", &REP_AXIOMS, &[n, n, n, n, m], |idx, r| {
        for (k, name) in REP_AXIOMS.iter().enumerate() {
            let (l, rr) = rep_axiom_sides(t.tensor(), rep.parts(), k + 1, idx);
            r.record(name, idx, &l, &rr);
        }
    }))
}

/// Semidirect bracket built directly from a representation:
/// `[x+m₁,y+m₂,z+m₃] = [x,y,z] + ρ(y,z)m₁ + μ(x,z)m₂ + λ(x,y)m₃`.
pub fn semidirect_from_rep(t: &TernaryAlgebra, rep: &Representation) -> Result<TernaryAlgebra> {
    let n = t.dim();
    rep.require_over(n)?;
    let m = rep.module_dim();
    let mut entries: Vec<([usize; 4], Scalar)> = Vec::new();
    for (i, v) in t.tensor().nonzero_entries() {
        entries.push(([i[0], i[1], i[2], i[3]], v.clone()));
    }
    for (i, v) in rep.lambda.nonzero_entries() {
        // λ(x,y) m₃
        entries.push(([i[0], i[1], n + i[2], n + i[3]], v.clone()));
    }
    for (i, v) in rep.mu.nonzero_entries() {
        // μ(x,z) m₂
        entries.push(([i[0], n + i[2], i[1], n + i[3]], v.clone()));
    }
    for (i, v) in rep.rho.nonzero_entries() {
        // ρ(y,z) m₁
        entries.push(([n + i[2], i[0], i[1], n + i[3]], v.clone()));
    }
    TernaryAlgebra::from_entries(n + m, entries)
}

/// Both bimodule checks plus the five mixed equations (the bimodule axioms
/// polarized in (bracket, l₁, l₂, l₃)).
pub fn check_compatible_bimodule_ternary(
    t1: &TernaryAlgebra,
    t2: &TernaryAlgebra,
    pack: &CompatiblePack<TernaryBimodule>,
) -> Result<CheckReport> {
    if t1.dim() != t2.dim() || pack.first.module_dim() != pack.second.module_dim() {
        return Err(Error::DimensionMismatch("compatible bimodule shapes differ".into()));
    }
    let s1 = semidirect_ternary(t1, &pack.first, None)?;
    let s2 = semidirect_ternary(t2, &pack.second, None)?;
    let (n, m) = (t1.dim(), pack.first.module_dim());
    let mut report = CheckReport::new("compatible-ternary-bimodule");
    report.absorb("first", check_ternary_bimodule(t1, &pack.first)?);
    report.absorb("second", check_ternary_bimodule(t2, &pack.second)?);
    let names = ["mixed-1", "mixed-2", "mixed-3", "mixed-4", "mixed-5"];
    report.merge(module_slot_report(
        "mixed",
        &names,
        n,
        m,
        &[(s2.tensor(), s1.tensor()), (s1.tensor(), s2.tensor())],
        ternary_sides,
    ));
    Ok(report)
}

/// The two semidirect brackets `[x+m₁,y+m₂,z+m₃]ⁱ = [x,y,z]ᵢ + l₁ⁱ(m₁,y,z) + l₂ⁱ(x,m₂,z) + l₃ⁱ(x,y,m₃)`.
pub fn compatible_semidirect(
    t1: &TernaryAlgebra,
    t2: &TernaryAlgebra,
    pack: &CompatiblePack<TernaryBimodule>,
) -> Result<(TernaryAlgebra, TernaryAlgebra)> {
    Ok((
        semidirect_ternary(t1, &pack.first, None)?,
        semidirect_ternary(t2, &pack.second, None)?,
    ))
}

/// Representation route: `[x+m₁,y+m₂,z+m₃]ᵢ = [x,y,z]ᵢ + λᵢ(x,y)m₃ + μᵢ(x,z)m₂ + ρᵢ(y,z)m₁`.
pub fn compatible_semidirect_rep(
    t1: &TernaryAlgebra,
    t2: &TernaryAlgebra,
    pack: &CompatiblePack<Representation>,
) -> Result<(TernaryAlgebra, TernaryAlgebra)> {
    Ok((
        semidirect_from_rep(t1, &pack.first)?,
        semidirect_from_rep(t2, &pack.second)?,
    ))
}

pub const CROSS_REP: [&str; 5] = ["cross-1", "cross-2", "cross-3", "cross-4", "cross-5"];

/// Cross equations for two representations on the same algebra, e.g.
/// `ρ₁(z,t)λ₂(x,y) + ρ₂(z,t)λ₁(x,y) − λ₁(x,y)ρ₂(z,t) − λ₂(x,y)ρ₁(z,t) = 0`.
/// `cross-1..3` polarize the ρ-commutation axioms for λ, μ, ρ and
/// `cross-4..5` the λ- and μ-bracket axioms.
///
/// Flags: each input's own verdict, `sum-is-representation`, and
/// `routes-agree` (only meaningful when both inputs are representations).
pub fn check_compatible_representations(
    t: &TernaryAlgebra,
    r1: &Representation,
    r2: &Representation,
) -> Result<CheckReport> {
    r1.require_over(t.dim())?;
    r2.require_over(t.dim())?;
    if r1.module_dim() != r2.module_dim() {
        return Err(Error::DimensionMismatch("representations on different spaces".into()));
    }
    let (n, m) = (t.dim(), r1.module_dim());
    // printed order: commutation axioms 3, 4, 5 first, then bracket axioms 1, 2
    let axiom_of = [3, 4, 5, 1, 2];
    let mut report = sweep("compatible-representations", &CROSS_REP, &[n, n, n, n, m], |idx, r| {
        for (name, &axiom) in CROSS_REP.iter().zip(&axiom_of) {
            let (l, rr) = polarized(
                rep_quadratic_sides(r1.parts(), r2.parts(), axiom, idx),
                rep_quadratic_sides(r2.parts(), r1.parts(), axiom, idx),
            );
            r.record(name, idx, &l, &rr);
        }
    });
    let first = check_representation(t, r1)?.passed();
    let second = check_representation(t, r2)?.passed();
    let sum = check_representation(t, &r1.add(r2)?)?.passed();
    report.set_flag("first-is-representation", first);
    report.set_flag("second-is-representation", second);
    report.set_flag("sum-is-representation", sum);
    if first && second {
        report.set_flag("routes-agree", sum == report.passed());
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Rota-Baxter bimodules

pub(crate) fn columns(op: &Matrix) -> Vec<Vec<Scalar>> {
    (0..op.cols()).map(|j| op.column(j)).collect()
}

fn basis_vectors(n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| basis(n, i)).collect()
}

/// `l(Rx, R_M m) = R_M(l(Rx,m) + l(x,R_M m))` and
/// `r(R_M m, Rx) = R_M(r(R_M m,x) + r(m,Rx))`.
pub fn check_rb_bimodule_binary(
    b: &BinaryAlgebra,
    r: &Matrix,
    module: &BinaryBimodule,
    rm: &Matrix,
) -> Result<CheckReport> {
    let n = b.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    r.require_shape(n, n)?;
    rm.require_shape(m, m)?;
    let (rx, ex, rmm, em) = (columns(r), basis_vectors(n), columns(rm), basis_vectors(m));
    let l = |x: &[Scalar], v: &[Scalar]| module.l.apply(&[x, v]);
    let rr = |v: &[Scalar], x: &[Scalar]| module.r.apply(&[v, x]);
    Ok(sweep(
        "rota-baxter-bimodule",
        &["rb-left", "rb-right"],
        &[n, m],
        |t, rep| {
            let (x, k) = (t[0], t[1]);
            let lhs = l(&rx[x], &rmm[k]);
            let rhs = rm.apply(&vec_add(&l(&rx[x], &em[k]), &l(&ex[x], &rmm[k])));
            rep.record("rb-left", t, &lhs, &rhs);
            let lhs = rr(&rmm[k], &rx[x]);
            let rhs = rm.apply(&vec_add(&rr(&rmm[k], &ex[x]), &rr(&em[k], &rx[x])));
            rep.record("rb-right", t, &lhs, &rhs);
        },
    ))
}

/// `l'(x,m) = l(Rx,m) + l(x,R_M m)`, `r'(m,x) = r(R_M m,x) + r(m,Rx)`; a
/// bimodule over the descendent algebra `[Rx,y] + [x,Ry]`.
pub fn induced_bimodule_binary(
    b: &BinaryAlgebra,
    r: &Matrix,
    module: &BinaryBimodule,
    rm: &Matrix,
) -> Result<BinaryBimodule> {
    let n = b.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    r.require_shape(n, n)?;
    rm.require_shape(m, m)?;
    let (rx, ex, rmm, em) = (columns(r), basis_vectors(n), columns(rm), basis_vectors(m));
    let mut ld = Vec::new();
    for x in 0..n {
        for k in 0..m {
            ld.extend(vec_add(
                &module.l.apply(&[&rx[x], &em[k]]),
                &module.l.apply(&[&ex[x], &rmm[k]]),
            ));
        }
    }
    let mut rd = Vec::new();
    for k in 0..m {
        for x in 0..n {
            rd.extend(vec_add(
                &module.r.apply(&[&rmm[k], &ex[x]]),
                &module.r.apply(&[&em[k], &rx[x]]),
            ));
        }
    }
    BinaryBimodule::new(Tensor::new(vec![n, m, m], ld)?, Tensor::new(vec![m, n, m], rd)?)
}

/// Descendent algebra `L_R` of a binary weight-0 Rota-Baxter operator.
pub fn rb_descendent_binary(b: &BinaryAlgebra, r: &Matrix) -> Result<BinaryAlgebra> {
    induced_bracket_binary(b, &BinaryRecipe::RotaBaxter(r.clone(), Scalar::zero()))
}

/// Descendent algebra `L_R` of a ternary weight-0 Rota-Baxter operator.
pub fn rb_descendent_ternary(t: &TernaryAlgebra, r: &Matrix) -> Result<TernaryAlgebra> {
    induced_bracket_ternary(t, &TernaryRecipe::RotaBaxter0(r.clone()))
}

/// Slot patterns `(first, second, third)` of the ternary Rota-Baxter
/// bimodule sums, with `true` meaning "apply the map of that slot".
const RB_TERNARY_PATTERNS: [[[bool; 3]; 3]; 3] = [
    // l₁(R_M m, Rx, y) + l₁(m, Rx, Ry) + l₁(R_M m, x, Ry)
    [[true, true, false], [false, true, true], [true, false, true]],
    // l₂(Rx, R_M m, y) + l₂(x, R_M m, Ry) + l₂(Rx, m, Ry)
    [[true, true, false], [false, true, true], [true, false, true]],
    // l₃(Rx, y, R_M m) + l₃(x, Ry, R_M m) + l₃(Rx, Ry, m)
    [[true, false, true], [false, true, true], [true, true, false]],
];

struct RbTernaryCtx<'a> {
    module: &'a TernaryBimodule,
    rx: Vec<Vec<Scalar>>,
    ex: Vec<Vec<Scalar>>,
    rmm: Vec<Vec<Scalar>>,
    em: Vec<Vec<Scalar>>,
}

impl RbTernaryCtx<'_> {
    /// Action `k` (0,1,2 for l₁,l₂,l₃) on algebra indices `(a, b)` and module
    /// index `k_m`, applying the maps in `pattern` slot by slot.
    fn action(&self, k: usize, a: usize, b: usize, km: usize, pattern: [bool; 3]) -> Vec<Scalar> {
        let alg = |i: usize, on: bool| if on { &self.rx[i] } else { &self.ex[i] };
        let md = |on: bool| if on { &self.rmm[km] } else { &self.em[km] };
        match k {
            0 => self
                .module
                .l1
                .apply(&[md(pattern[0]), alg(a, pattern[1]), alg(b, pattern[2])]),
            1 => self
                .module
                .l2
                .apply(&[alg(a, pattern[0]), md(pattern[1]), alg(b, pattern[2])]),
            _ => self
                .module
                .l3
                .apply(&[alg(a, pattern[0]), alg(b, pattern[1]), md(pattern[2])]),
        }
    }

    fn primed(&self, k: usize, a: usize, b: usize, km: usize) -> Vec<Scalar> {
        let parts: Vec<Vec<Scalar>> = RB_TERNARY_PATTERNS[k]
            .iter()
            .map(|&p| self.action(k, a, b, km, p))
            .collect();
        vec_sum(self.em.len(), &parts)
    }
}

fn rb_ternary_ctx<'a>(
    t: &TernaryAlgebra,
    r: &Matrix,
    module: &'a TernaryBimodule,
    rm: &Matrix,
) -> Result<RbTernaryCtx<'a>> {
    let n = t.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    r.require_shape(n, n)?;
    rm.require_shape(m, m)?;
    Ok(RbTernaryCtx {
        module,
        rx: columns(r),
        ex: basis_vectors(n),
        rmm: columns(rm),
        em: basis_vectors(m),
    })
}

/// The three Rota-Baxter bimodule equations, e.g.
/// `l₁(R_M m, Rx, Ry) = R_M(l₁(R_M m,Rx,y) + l₁(m,Rx,Ry) + l₁(R_M m,x,Ry))`.
pub fn check_rb_bimodule_ternary(
    t: &TernaryAlgebra,
    r: &Matrix,
    module: &TernaryBimodule,
    rm: &Matrix,
) -> Result<CheckReport> {
    let ctx = rb_ternary_ctx(t, r, module, rm)?;
    let (n, m) = (t.dim(), module.module_dim());
    let names = ["rb-1", "rb-2", "rb-3"];
    let full: [[bool; 3]; 3] = [[true, true, true]; 3];
    Ok(sweep("rota-baxter-bimodule", &names, &[n, n, m], |tp, rep| {
        let (a, b, km) = (tp[0], tp[1], tp[2]);
        for (k, name) in names.iter().enumerate() {
            let lhs = ctx.action(k, a, b, km, full[k]);
            let rhs = rm.apply(&ctx.primed(k, a, b, km));
            rep.record(name, tp, &lhs, &rhs);
        }
    }))
}

/// The primed actions `l₁', l₂', l₃'` (the sums inside the Rota-Baxter
/// bimodule equations), a bimodule over the weight-0 descendent `L_R`.
pub fn induced_bimodule_ternary(
    t: &TernaryAlgebra,
    r: &Matrix,
    module: &TernaryBimodule,
    rm: &Matrix,
) -> Result<TernaryBimodule> {
    let ctx = rb_ternary_ctx(t, r, module, rm)?;
    let (n, m) = (t.dim(), module.module_dim());
    let l1 = Tensor::from_fn(vec![m, n, n, m], |i| ctx.primed(0, i[1], i[2], i[0])[i[3]].clone());
    let l2 = Tensor::from_fn(vec![n, m, n, m], |i| ctx.primed(1, i[0], i[2], i[1])[i[3]].clone());
    let l3 = Tensor::from_fn(vec![n, n, m, m], |i| ctx.primed(2, i[0], i[1], i[2])[i[3]].clone());
    Ok(TernaryBimodule { l1, l2, l3 })
}

// ---------------------------------------------------------------------------
// cocycles

/// `l₁(ω(x,y,z),t,u) + ω([x,y,z],t,u) = l₃(x,y,ω(z,t,u)) + l₂(x,ω(y,t,u),z)
///  + l₁(ω(x,t,u),y,z) + ω(x,y,[z,t,u]) + ω(x,[y,t,u],z) + ω([x,t,u],y,z)`.
pub fn check_cocycle(t: &TernaryAlgebra, module: &TernaryBimodule, w: &Cocycle) -> Result<CheckReport> {
    use Arg::{E, V};
    let n = t.dim();
    module.require_over(n)?;
    let m = module.module_dim();
    require_profile(&w.w, &[n, n, n, m], "cocycle")?;
    let (b, ww) = (t.tensor(), &w.w);
    Ok(sweep("cocycle", &["cocycle"], &[n; 5], |i, r| {
        let (x, y, z, tt, u) = (i[0], i[1], i[2], i[3], i[4]);
        let mut lhs = module.l1.apply_args(&[V(ww.slice(&[x, y, z])), E(tt), E(u)]);
        vec_axpy(
            &mut lhs,
            &Scalar::one(),
            &ww.apply_args(&[V(b.slice(&[x, y, z])), E(tt), E(u)]),
        );
        let rhs = vec_sum(
            m,
            &[
                module.l3.apply_args(&[E(x), E(y), V(ww.slice(&[z, tt, u]))]),
                module.l2.apply_args(&[E(x), V(ww.slice(&[y, tt, u])), E(z)]),
                module.l1.apply_args(&[V(ww.slice(&[x, tt, u])), E(y), E(z)]),
                ww.apply_args(&[E(x), E(y), V(b.slice(&[z, tt, u]))]),
                ww.apply_args(&[E(x), V(b.slice(&[y, tt, u])), E(z)]),
                ww.apply_args(&[V(b.slice(&[x, tt, u])), E(y), E(z)]),
            ],
        );
        r.record("cocycle", i, &lhs, &rhs);
    }))
}

// ---------------------------------------------------------------------------
// O-operators

/// `[Tu,Tv,Tw] = T(λ(Tu,Tv)w + μ(Tu,Tw)v + ρ(Tv,Tw)u)` on basis triples of V.
pub fn check_o_operator(data: &OOperatorData, t: &TernaryAlgebra) -> Result<CheckReport> {
    let n = t.dim();
    data.rep.require_over(n)?;
    let m = data.rep.module_dim();
    data.t.require_shape(n, m)?;
    let tu = columns(&data.t);
    let bracket = o_operator_bracket(data)?;
    Ok(sweep("o-operator", &["o-operator"], &[m, m, m], |i, r| {
        let lhs = t.bracket(&tu[i[0]], &tu[i[1]], &tu[i[2]]);
        let rhs = data.t.apply(bracket.tensor().slice(i));
        r.record("o-operator", i, &lhs, &rhs);
    }))
}

/// `[u₁,u₂,u₃]_T = λ(Tu₁,Tu₂)u₃ + μ(Tu₁,Tu₃)u₂ + ρ(Tu₂,Tu₃)u₁`.
pub fn o_operator_bracket(data: &OOperatorData) -> Result<TernaryAlgebra> {
    use Arg::V;
    let (n, m) = (data.rep.algebra_dim(), data.rep.module_dim());
    data.t.require_shape(n, m)?;
    let tu = columns(&data.t);
    let eu = basis_vectors(m);
    let rep = &data.rep;
    let mut out = Vec::with_capacity(m.pow(4));
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                out.extend(vec_sum(
                    m,
                    &[
                        act(&rep.lambda, V(&tu[a]), V(&tu[b]), &eu[c]),
                        act(&rep.mu, V(&tu[a]), V(&tu[c]), &eu[b]),
                        act(&rep.rho, V(&tu[b]), V(&tu[c]), &eu[a]),
                    ],
                ));
            }
        }
    }
    TernaryAlgebra::new(Tensor::new(vec![m; 4], out)?)
}

/// Morphism `(f, φ)` from `T'` to `T`: `Tφ = fT'` and
/// `φ∘A(x,y) = A(fx,fy)∘φ` for `A ∈ {λ, μ, ρ}`.
///
/// Flags: `f-homomorphism` (f preserves the bracket of `t`) and
/// `phi-homomorphism` (φ maps `[-,-,-]_{T'}` to `[-,-,-]_T`).
pub fn check_o_morphism(
    t: &TernaryAlgebra,
    f: &Matrix,
    phi: &Matrix,
    data: &OOperatorData,
    data_prime: &OOperatorData,
) -> Result<CheckReport> {
    use Arg::V;
    let n = t.dim();
    let m = data.rep.module_dim();
    data.rep.require_over(n)?;
    if data.rep != data_prime.rep {
        return Err(Error::DimensionMismatch(
            "a morphism of O-operators needs one common representation".into(),
        ));
    }
    f.require_shape(n, n)?;
    phi.require_shape(m, m)?;
    data.t.require_shape(n, m)?;
    data_prime.t.require_shape(n, m)?;
    let rep = &data.rep;
    let (fx, ex, pu, eu) = (columns(f), basis_vectors(n), columns(phi), basis_vectors(m));
    let mut report = CheckReport::new("o-morphism");
    let tphi = data.t.mul(phi)?;
    let ft = f.mul(&data_prime.t)?;
    for u in 0..m {
        let (l, r) = (tphi.column(u), ft.column(u));
        report.record("intertwine-t", &[u], &l, &r);
    }
    let names = ["lambda", "mu", "rho"];
    let ops = [&rep.lambda, &rep.mu, &rep.rho];
    report.merge(sweep("o-morphism", &names, &[n, n, m], |i, r| {
        let (x, y, u) = (i[0], i[1], i[2]);
        for (name, op) in names.iter().zip(ops) {
            let lhs = phi.apply(&act(op, V(&ex[x]), V(&ex[y]), &eu[u]));
            let rhs = act(op, V(&fx[x]), V(&fx[y]), &pu[u]);
            r.record(name, i, &lhs, &rhs);
        }
    }));
    let f_hom = (0..n * n * n).all(|k| {
        let (x, y, z) = (k / (n * n), (k / n) % n, k % n);
        f.apply(t.tensor().slice(&[x, y, z])) == t.bracket(&fx[x], &fx[y], &fx[z])
    });
    let target = o_operator_bracket(data)?;
    let source = o_operator_bracket(data_prime)?;
    let phi_hom = (0..m * m * m).all(|k| {
        let (a, b, c) = (k / (m * m), (k / m) % m, k % m);
        phi.apply(source.tensor().slice(&[a, b, c])) == target.bracket(&pu[a], &pu[b], &pu[c])
    });
    report.set_flag("f-homomorphism", f_hom);
    report.set_flag("phi-homomorphism", phi_hom);
    Ok(report)
}

/// `λ*(x,y) = −λ(x,y)ᵀ` in the dual basis, likewise μ*, ρ*.
pub fn dual_representation(rep: &Representation) -> Representation {
    let dual = |a: &Tensor| a.permute(&[0, 1, 3, 2]).map(|v| -v.clone());
    Representation {
        lambda: dual(&rep.lambda),
        mu: dual(&rep.mu),
        rho: dual(&rep.rho),
    }
}

/// `φ` is a bracket homomorphism: `φ[x,y,z]₁ = [φx,φy,φz]₂`.
pub fn is_ternary_homomorphism(phi: &Matrix, from: &TernaryAlgebra, to: &TernaryAlgebra) -> Result<bool> {
    phi.require_shape(to.dim(), from.dim())?;
    let cols = columns(phi);
    let n = from.dim();
    Ok((0..n * n * n).all(|k| {
        let (x, y, z) = (k / (n * n), (k / n) % n, k % n);
        phi.apply(from.tensor().slice(&[x, y, z])) == to.bracket(&cols[x], &cols[y], &cols[z])
    }))
}
