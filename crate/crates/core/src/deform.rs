//! One-parameter infinitesimal deformations
//! `[x,y,z]_s = [x,y,z] + s·ω¹ + s²·ω²`, `λ_s = λ + s·ω_λ¹ + s²·ω_λ²` (same for
//! μ, ρ) of a ternary Leibniz algebra with a representation, Nijenhuis pairs
//! and the trivial deformations they generate.

use crate::algebra::{check_compatible_ternary, check_ternary_leibniz, lci_sides, TernaryAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modrep::{
    check_representation, columns, module_slot_report, rep_axiom_sides, semidirect_from_rep, ternary_sides, RepTensors,
    Representation, REP_AXIOMS,
};
use crate::operators::{check_ternary_operator, OperatorKind};
use crate::poly::PolyScalar;
use crate::report::{sweep, CheckReport};
use crate::scalar::{basis, vec_add, vec_sub, vec_sum, Scalar};
use crate::tensor::{Arg, Tensor};
use num_traits::{One, Zero};

/// Degree-one and degree-two parts of a deformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationData {
    pub w1: Tensor,
    pub w2: Tensor,
    pub wl1: Tensor,
    pub wl2: Tensor,
    pub wm1: Tensor,
    pub wm2: Tensor,
    pub wr1: Tensor,
    pub wr2: Tensor,
}

impl DeformationData {
    pub fn zero(n: usize, m: usize) -> Self {
        let w = Tensor::zeros(vec![n; 4]);
        let r = Tensor::zeros(vec![n, n, m, m]);
        DeformationData {
            w1: w.clone(),
            w2: w,
            wl1: r.clone(),
            wl2: r.clone(),
            wm1: r.clone(),
            wm2: r.clone(),
            wr1: r.clone(),
            wr2: r,
        }
    }

    /// Assembles data from the two bracket parts and the two representation parts.
    pub fn from_parts(w1: Tensor, w2: Tensor, r1: Representation, r2: Representation) -> Self {
        DeformationData {
            w1,
            w2,
            wl1: r1.lambda,
            wl2: r2.lambda,
            wm1: r1.mu,
            wm2: r2.mu,
            wr1: r1.rho,
            wr2: r2.rho,
        }
    }

    /// Validates the shapes against an algebra of dimension `n` acting on dimension `m`.
    pub fn require_shape(&self, n: usize, m: usize) -> Result<()> {
        for w in [&self.w1, &self.w2] {
            w.require_dims(&[n; 4])?;
        }
        for r in [&self.wl1, &self.wl2, &self.wm1, &self.wm2, &self.wr1, &self.wr2] {
            r.require_dims(&[n, n, m, m])?;
        }
        Ok(())
    }

    /// The bracket part of degree `k` (1 or 2).
    pub fn bracket(&self, k: usize) -> &Tensor {
        if k == 1 {
            &self.w1
        } else {
            &self.w2
        }
    }

    /// The representation part of degree `k` (1 or 2).
    pub fn rep(&self, k: usize) -> Representation {
        let (l, m, r) = if k == 1 {
            (&self.wl1, &self.wm1, &self.wr1)
        } else {
            (&self.wl2, &self.wm2, &self.wr2)
        };
        Representation {
            lambda: l.clone(),
            mu: m.clone(),
            rho: r.clone(),
        }
    }

    pub fn is_linear(&self) -> bool {
        [&self.w2, &self.wl2, &self.wm2, &self.wr2].iter().all(|t| t.is_zero())
    }
}

/// A Nijenhuis pair candidate: `N` on the algebra, `T` on the representation space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairData {
    pub n: Matrix,
    pub t: Matrix,
}

impl PairData {
    pub fn new(n: Matrix, t: Matrix) -> Result<Self> {
        if !n.is_square() {
            return Err(Error::NotSquare {
                rows: n.rows(),
                cols: n.cols(),
            });
        }
        if !t.is_square() {
            return Err(Error::NotSquare {
                rows: t.rows(),
                cols: t.cols(),
            });
        }
        Ok(PairData { n, t })
    }

    /// `(c·Id, c·Id)`.
    pub fn scalar(n: usize, m: usize, c: Scalar) -> Self {
        PairData {
            n: Matrix::scalar(n, c.clone()),
            t: Matrix::scalar(m, c),
        }
    }

    fn require_shape(&self, n: usize, m: usize) -> Result<()> {
        self.n.require_shape(n, n)?;
        self.t.require_shape(m, m)
    }
}

fn require_base(t: &TernaryAlgebra, rep: &Representation) -> Result<(usize, usize)> {
    rep.require_over(t.dim())?;
    Ok((t.dim(), rep.module_dim()))
}

const DEGREE_NAMES: [&str; 5] = [
    "base-bracket",
    "bracket-degree-1",
    "bracket-degree-2",
    "bracket-degree-3",
    "bracket-degree-4",
];

fn rep_group(d: usize) -> &'static str {
    match d {
        0 => "base-rep",
        1 => "rep-degree-1",
        2 => "rep-degree-2",
        _ => "rep-degree-3/4",
    }
}

/// The deformation equation system, grouped by power of `s`: for every
/// degree `d ≤ 4` the terms `Σ_{i+j=d}` of the ternary Leibniz identity with
/// the degree-`i` structure applied outside the degree-`j` one, on the
/// algebra and on `L⊕V` with one argument from `V`. Degree 0 is the base
/// structure itself.
pub fn check_deformation_equations(
    t: &TernaryAlgebra,
    rep: &Representation,
    data: &DeformationData,
) -> Result<CheckReport> {
    let (n, m) = require_base(t, rep)?;
    data.require_shape(n, m)?;
    let brackets = [t.tensor(), &data.w1, &data.w2];
    let semis = [
        semidirect_from_rep(t, rep)?,
        semidirect_from_rep(&TernaryAlgebra::new(data.w1.clone())?, &data.rep(1))?,
        semidirect_from_rep(&TernaryAlgebra::new(data.w2.clone())?, &data.rep(2))?,
    ];
    let pairs_of =
        |d: usize| -> Vec<(usize, usize)> { (0..=2).filter(|&i| d >= i && d - i <= 2).map(|i| (i, d - i)).collect() };

    let mut report = sweep("deformation-equations", &DEGREE_NAMES, &[n; 5], |idx, r| {
        for (d, name) in DEGREE_NAMES.iter().enumerate() {
            let mut lhs = vec![Scalar::zero(); n];
            let mut rhs = lhs.clone();
            for (i, j) in pairs_of(d) {
                let (l, rr) = lci_sides(brackets[i], brackets[j], idx);
                lhs = vec_add(&lhs, &l);
                rhs = vec_add(&rhs, &rr);
            }
            r.record(name, idx, &lhs, &rhs);
        }
    });
    for d in 0..=4 {
        let name = rep_group(d);
        let pairs: Vec<(&Tensor, &Tensor)> = pairs_of(d)
            .into_iter()
            .map(|(i, j)| (semis[i].tensor(), semis[j].tensor()))
            .collect();
        report.merge(module_slot_report(
            "deformation-equations",
            &[name; 5],
            n,
            m,
            &pairs,
            ternary_sides,
        ));
    }
    Ok(report)
}

fn poly_family(parts: [&Tensor; 3]) -> Tensor<PolyScalar> {
    Tensor::from_fn(parts[0].dims().to_vec(), |i| {
        PolyScalar::new(parts.iter().map(|p| p.get(i).clone()).collect())
    })
}

/// Lowest power of `s` whose coefficient fails, from an expansion report.
pub fn lowest_failing_degree(report: &CheckReport) -> Option<usize> {
    report
        .failed_identities()
        .iter()
        .filter_map(|id| id.rsplit_once("s^").and_then(|(_, k)| k.parse().ok()))
        .min()
}

const MAX_DEFORMATION_DEGREE: usize = 4;

/// Records the coefficient of every power of `s` up to the polynomial cap
/// as its own identity `{prefix}-s^{d}`.
fn record_powers(r: &mut CheckReport, prefix: &str, tuple: &[usize], l: &[PolyScalar], rr: &[PolyScalar]) {
    record_powers_to(r, prefix, tuple, l, rr, crate::poly::MAX_DEGREE);
}

fn record_powers_to(
    r: &mut CheckReport,
    prefix: &str,
    tuple: &[usize],
    l: &[PolyScalar],
    rr: &[PolyScalar],
    top: usize,
) {
    for d in 0..=top {
        let lc: Vec<Scalar> = l.iter().map(|p| p.coeff(d)).collect();
        let rc: Vec<Scalar> = rr.iter().map(|p| p.coeff(d)).collect();
        r.record(&format!("{prefix}-s^{d}"), tuple, &lc, &rc);
    }
}

/// Forms the polynomial families `[-,-,-]_s` and `(λ_s, μ_s, ρ_s)` and
/// requires every coefficient of the ternary Leibniz identity and of the five
/// representation axioms to vanish. Identities are named `bracket-s^k` and
/// `rep-k-s^d` (axiom `k`, power `d`).
pub fn check_deformation_by_expansion(
    t: &TernaryAlgebra,
    rep: &Representation,
    data: &DeformationData,
) -> Result<CheckReport> {
    let (n, m) = require_base(t, rep)?;
    data.require_shape(n, m)?;
    let b = poly_family([t.tensor(), &data.w1, &data.w2]);
    let lam = poly_family([&rep.lambda, &data.wl1, &data.wl2]);
    let mu = poly_family([&rep.mu, &data.wm1, &data.wm2]);
    let rho = poly_family([&rep.rho, &data.wr1, &data.wr2]);
    let parts = RepTensors {
        lam: &lam,
        mu: &mu,
        rho: &rho,
    };

    let record = |r: &mut CheckReport, prefix: &str, tuple: &[usize], l: &[PolyScalar], rr: &[PolyScalar]| {
        record_powers_to(r, prefix, tuple, l, rr, MAX_DEFORMATION_DEGREE)
    };
    let mut report = sweep("deformation-expansion", &[], &[n; 5], |idx, r| {
        let (l, rr) = lci_sides(&b, &b, idx);
        record(r, "bracket", idx, &l, &rr);
    });
    report.merge(sweep("deformation-expansion", &[], &[n, n, n, n, m], |idx, r| {
        for (k, name) in REP_AXIOMS.iter().enumerate() {
            let (l, rr) = rep_axiom_sides(&b, parts, k + 1, idx);
            record(r, name, idx, &l, &rr);
        }
    }));
    if let Some(d) = lowest_failing_degree(&report) {
        report.note(format!("lowest failing power of s: {d}"));
    }
    Ok(report)
}

/// `A(u,v)` as an `m×m` matrix for algebra vectors `u`, `v`.
fn op_matrix(a: &Tensor, u: &[Scalar], v: &[Scalar]) -> Matrix {
    let m = a.out_dim();
    let cols: Vec<Vec<Scalar>> = (0..m)
        .map(|k| a.apply_args(&[Arg::V(u), Arg::V(v), Arg::V(&basis(m, k))]))
        .collect();
    Matrix::from_columns(m, &cols)
}

/// The four matrices `A(Nx,Ny), A(Nx,y), A(x,Ny), A(x,y)` used by the pair equations.
struct PairTerms {
    nn: Matrix,
    n1: Matrix,
    n2: Matrix,
    id: Matrix,
}

fn pair_terms(a: &Tensor, nx: &[Scalar], ny: &[Scalar], ex: &[Scalar], ey: &[Scalar]) -> PairTerms {
    PairTerms {
        nn: op_matrix(a, nx, ny),
        n1: op_matrix(a, nx, ey),
        n2: op_matrix(a, ex, ny),
        id: op_matrix(a, ex, ey),
    }
}

fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("square matrices of one size")
}

fn ma(a: &Matrix, b: &Matrix) -> Matrix {
    a.add(b).expect("square matrices of one size")
}

fn ms(a: &Matrix, b: &Matrix) -> Matrix {
    a.sub(b).expect("square matrices of one size")
}

const PAIR_NAMES: [&str; 3] = ["pair-lambda", "pair-mu", "pair-rho"];

fn pair_report(
    name: &str,
    t: &TernaryAlgebra,
    rep: &Representation,
    pair: &PairData,
    sides: impl Fn(&PairTerms, &Matrix) -> (Matrix, Matrix) + Sync,
) -> Result<CheckReport> {
    let (n, m) = require_base(t, rep)?;
    pair.require_shape(n, m)?;
    let nx = columns(&pair.n);
    let ops = [&rep.lambda, &rep.mu, &rep.rho];
    let mut report = CheckReport::new(name);
    report.absorb(
        "nijenhuis",
        check_ternary_operator(t, &OperatorKind::Nijenhuis, &pair.n)?,
    );
    report.merge(sweep(name, &PAIR_NAMES, &[n, n], |i, r| {
        let (ex, ey) = (basis(n, i[0]), basis(n, i[1]));
        for (id, op) in PAIR_NAMES.iter().zip(ops) {
            let terms = pair_terms(op, &nx[i[0]], &nx[i[1]], &ex, &ey);
            let (l, rr) = sides(&terms, &pair.t);
            r.record(id, i, l.data(), rr.data());
        }
    }));
    Ok(report)
}

/// `N` is Nijenhuis and, for `A ∈ {λ, μ, ρ}`,
/// `A(Nx,Ny)T = T(A(Nx,Ny) + A(Nx,y)T + A(x,Ny)T) − T²(A(x,y)T + A(Nx,y) + A(x,Ny)) + T³A(x,y)`.
pub fn check_nijenhuis_pair(t: &TernaryAlgebra, rep: &Representation, pair: &PairData) -> Result<CheckReport> {
    pair_report("nijenhuis-pair", t, rep, pair, |a, tt| {
        let t2 = mm(tt, tt);
        let t3 = mm(&t2, tt);
        let lhs = mm(&a.nn, tt);
        let first = mm(tt, &ma(&ma(&a.nn, &mm(&a.n1, tt)), &mm(&a.n2, tt)));
        let second = mm(&t2, &ma(&ma(&mm(&a.id, tt), &a.n1), &a.n2));
        let rhs = ma(&ms(&first, &second), &mm(&t3, &a.id));
        (lhs, rhs)
    })
}

/// `N` is Nijenhuis and, for `A ∈ {λ, μ, ρ}`,
/// `A(x,y)T³ = TA(Nx,Ny) − (A(Nx,Ny) + TA(Nx,y) + TA(x,Ny))T + (TA(x,y) + A(Nx,y) + A(x,Ny))T²`.
pub fn check_dual_nijenhuis_pair(t: &TernaryAlgebra, rep: &Representation, pair: &PairData) -> Result<CheckReport> {
    pair_report("dual-nijenhuis-pair", t, rep, pair, |a, tt| {
        let t2 = mm(tt, tt);
        let lhs = mm(&a.id, &mm(&t2, tt));
        let first = mm(tt, &a.nn);
        let second = mm(&ma(&ma(&a.nn, &mm(tt, &a.n1)), &mm(tt, &a.n2)), tt);
        let third = mm(&ma(&ma(&mm(tt, &a.id), &a.n1), &a.n2), &t2);
        (lhs, ma(&ms(&first, &second), &third))
    })
}

/// Deformation generated by a pair:
/// `ω¹ = [Nx,y,z] + [x,Ny,z] + [x,y,Nz] − N[x,y,z]`,
/// `ω² = [Nx,Ny,z] + [Nx,y,Nz] + [x,Ny,Nz] − Nω¹(x,y,z)`,
/// `ω_A¹(x,y) = A(x,y)T + A(Nx,y) + A(x,Ny) − TA(x,y)`,
/// `ω_A²(x,y) = A(Nx,Ny) + A(Nx,y)T + A(x,Ny)T − Tω_A¹(x,y)`.
pub fn deformation_from_pair(t: &TernaryAlgebra, rep: &Representation, pair: &PairData) -> Result<DeformationData> {
    let (n, m) = require_base(t, rep)?;
    pair.require_shape(n, m)?;
    let nx = columns(&pair.n);
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| basis(n, i)).collect();
    let mut w1 = Vec::with_capacity(n.pow(4));
    let mut w2 = Vec::with_capacity(n.pow(4));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let one = vec_sum(
                    n,
                    &[
                        t.bracket(&nx[x], &e[y], &e[z]),
                        t.bracket(&e[x], &nx[y], &e[z]),
                        t.bracket(&e[x], &e[y], &nx[z]),
                    ],
                );
                let first = vec_sub(&one, &pair.n.apply(t.tensor().slice(&[x, y, z])));
                let two = vec_sum(
                    n,
                    &[
                        t.bracket(&nx[x], &nx[y], &e[z]),
                        t.bracket(&nx[x], &e[y], &nx[z]),
                        t.bracket(&e[x], &nx[y], &nx[z]),
                    ],
                );
                let second = vec_sub(&two, &pair.n.apply(&first));
                w1.extend(first);
                w2.extend(second);
            }
        }
    }
    let tt = &pair.t;
    // tensor index [x, y, input, output] holds matrix entry (output, input)
    let to_tensor = |mats: &[Matrix]| {
        let data = mats
            .iter()
            .flat_map(|mat| (0..m).flat_map(move |i| (0..m).map(move |o| mat.get(o, i).clone())))
            .collect();
        Tensor::new(vec![n, n, m, m], data).expect("sized by construction")
    };
    let rep_parts = |a: &Tensor| -> (Tensor, Tensor) {
        let mut first_parts = Vec::with_capacity(n * n);
        let mut second_parts = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let a = pair_terms(a, &nx[x], &nx[y], &e[x], &e[y]);
                let first = ms(&ma(&ma(&mm(&a.id, tt), &a.n1), &a.n2), &mm(tt, &a.id));
                let second = ms(&ma(&ma(&a.nn, &mm(&a.n1, tt)), &mm(&a.n2, tt)), &mm(tt, &first));
                first_parts.push(first);
                second_parts.push(second);
            }
        }
        (to_tensor(&first_parts), to_tensor(&second_parts))
    };
    let (wl1, wl2) = rep_parts(&rep.lambda);
    let (wm1, wm2) = rep_parts(&rep.mu);
    let (wr1, wr2) = rep_parts(&rep.rho);
    Ok(DeformationData {
        w1: Tensor::new(vec![n; 4], w1)?,
        w2: Tensor::new(vec![n; 4], w2)?,
        wl1,
        wl2,
        wm1,
        wm2,
        wr1,
        wr2,
    })
}

fn poly_vec(v: &[Scalar]) -> Vec<PolyScalar> {
    v.iter().map(|c| PolyScalar::constant(c.clone())).collect()
}

/// `(1 + sA)v` for a matrix `A`.
fn one_plus_s(a: &Matrix, v: &[PolyScalar]) -> Vec<PolyScalar> {
    let s = PolyScalar::monomial(Scalar::one(), 1);
    (0..a.rows())
        .map(|i| {
            let mut acc = v[i].clone();
            for (j, vj) in v.iter().enumerate() {
                let c = a.get(i, j);
                if !c.is_zero() {
                    acc = acc + s.clone() * PolyScalar::constant(c.clone()) * vj.clone();
                }
            }
            acc
        })
        .collect()
}

/// Certifies that `(Id + sN, Id + sT)` maps the deformation `B` onto `A`:
/// `(Id+sN)[x,y,z]^B_s = [(Id+sN)x, (Id+sN)y, (Id+sN)z]^A_s` and
/// `(Id+sT)∘C^B_s(x,y) = C^A_s((Id+sN)x, (Id+sN)y)∘(Id+sT)` for `C ∈ {λ, μ, ρ}`,
/// compared coefficientwise in `s`.
pub fn check_equivalence(
    t: &TernaryAlgebra,
    rep: &Representation,
    data_a: &DeformationData,
    data_b: &DeformationData,
    pair: &PairData,
) -> Result<CheckReport> {
    let (n, m) = require_base(t, rep)?;
    data_a.require_shape(n, m)?;
    data_b.require_shape(n, m)?;
    pair.require_shape(n, m)?;
    let fam = |base: &Tensor, a: &Tensor, b: &Tensor| poly_family([base, a, b]);
    let ba = fam(t.tensor(), &data_a.w1, &data_a.w2);
    let bb = fam(t.tensor(), &data_b.w1, &data_b.w2);
    let ops_a = [
        fam(&rep.lambda, &data_a.wl1, &data_a.wl2),
        fam(&rep.mu, &data_a.wm1, &data_a.wm2),
        fam(&rep.rho, &data_a.wr1, &data_a.wr2),
    ];
    let ops_b = [
        fam(&rep.lambda, &data_b.wl1, &data_b.wl2),
        fam(&rep.mu, &data_b.wm1, &data_b.wm2),
        fam(&rep.rho, &data_b.wr1, &data_b.wr2),
    ];
    let phi: Vec<Vec<PolyScalar>> = (0..n).map(|i| one_plus_s(&pair.n, &poly_vec(&basis(n, i)))).collect();
    let psi: Vec<Vec<PolyScalar>> = (0..m).map(|i| one_plus_s(&pair.t, &poly_vec(&basis(m, i)))).collect();
    let names = ["lambda", "mu", "rho"];

    let mut report = sweep("equivalence", &["bracket"], &[n, n, n], |i, r| {
        let lhs = one_plus_s(&pair.n, bb.slice(i));
        let rhs = ba.apply(&[&phi[i[0]], &phi[i[1]], &phi[i[2]]]);
        record_powers(r, "bracket", i, &lhs, &rhs);
    });
    report.merge(sweep("equivalence", &names, &[n, n, m], |i, r| {
        let (x, y, k) = (i[0], i[1], i[2]);
        for (name, (a, b)) in names.iter().zip(ops_a.iter().zip(&ops_b)) {
            let lhs = one_plus_s(&pair.t, &b.apply_args(&[Arg::E(x), Arg::E(y), Arg::E(k)]));
            let rhs = a.apply(&[&phi[x], &phi[y], &psi[k]]);
            record_powers(r, name, i, &lhs, &rhs);
        }
    }));
    if let Some(d) = lowest_failing_degree(&report) {
        report.note(format!("first nonvanishing power of s: {d}"));
    }
    Ok(report)
}

/// Verdicts for a pair and for `N⊕T` on the semidirect algebra.
#[derive(Debug, Clone)]
pub struct PairSumReport {
    pub pair: CheckReport,
    pub sum: CheckReport,
}

impl PairSumReport {
    /// A passing pair forces `N⊕T` to be Nijenhuis.
    pub fn implication_holds(&self) -> bool {
        !self.pair.passed() || self.sum.passed()
    }
}

/// Checks the pair and the block-diagonal operator `N⊕T` on `L⊕V` with the
/// semidirect bracket.
pub fn pair_sum_nijenhuis(t: &TernaryAlgebra, rep: &Representation, pair: &PairData) -> Result<PairSumReport> {
    let (n, m) = require_base(t, rep)?;
    pair.require_shape(n, m)?;
    let semi = semidirect_from_rep(t, rep)?;
    Ok(PairSumReport {
        pair: check_nijenhuis_pair(t, rep, pair)?,
        sum: check_ternary_operator(&semi, &OperatorKind::Nijenhuis, &pair.n.block_diag(&pair.t))?,
    })
}

/// For data with vanishing degree-two part: `ω¹` is ternary Leibniz
/// (`condition-1`), compatible with the bracket (`condition-2`),
/// `(ω_λ¹, ω_μ¹, ω_ρ¹)` represents `(L, ω¹)` (`condition-3`) and the summed
/// triple represents `(L, [-,-,-] + ω¹)` (`condition-4`).
pub fn linear_deformation_check(
    t: &TernaryAlgebra,
    rep: &Representation,
    data: &DeformationData,
) -> Result<CheckReport> {
    let (n, m) = require_base(t, rep)?;
    data.require_shape(n, m)?;
    if !data.is_linear() {
        return Err(Error::NonzeroQuadraticPart);
    }
    let w = TernaryAlgebra::new(data.w1.clone())?;
    let r1 = data.rep(1);
    let sum = TernaryAlgebra::new(t.tensor().add(&data.w1)?)?;
    let mut report = CheckReport::new("linear-deformation");
    report.absorb("condition-1", check_ternary_leibniz(&w));
    report.absorb("condition-2", check_compatible_ternary(t, &w)?);
    report.absorb("condition-3", check_representation(&w, &r1)?);
    report.absorb("condition-4", check_representation(&sum, &rep.add(&r1)?)?);
    Ok(report)
}
