//! Exhaustive evaluator written independently of the library's checkers.
//!
//! Tensors are read through their raw row-major data only; every identity is
//! spelled out term by term with explicit vectors.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use tlz_core::{Matrix, Tensor};

pub type Q = BigRational;

pub fn e(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// Multilinear evaluation by summing over every combination of nonzero
/// input coordinates.
pub fn eval(t: &Tensor, args: &[&[Q]]) -> Vec<Q> {
    let dims = t.dims();
    let k = args.len();
    assert_eq!(k + 1, dims.len());
    let out = dims[k];
    let data = t.data();
    let support: Vec<Vec<usize>> = args
        .iter()
        .map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect())
        .collect();
    let mut res = vec![Q::zero(); out];
    if support.iter().any(|s| s.is_empty()) {
        return res;
    }
    let mut pos = vec![0usize; k];
    loop {
        let mut coeff = Q::one();
        let mut flat = 0;
        for slot in 0..k {
            let i = support[slot][pos[slot]];
            coeff *= &args[slot][i];
            flat = flat * dims[slot] + i;
        }
        for o in 0..out {
            let c = &data[flat * out + o];
            if !c.is_zero() {
                res[o] += &coeff * c;
            }
        }
        let mut s = k;
        loop {
            if s == 0 {
                return res;
            }
            s -= 1;
            pos[s] += 1;
            if pos[s] < support[s].len() {
                break;
            }
            pos[s] = 0;
        }
    }
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

pub fn sum(parts: &[Vec<Q>]) -> Vec<Q> {
    let mut acc = vec![Q::zero(); parts[0].len()];
    for p in parts {
        acc = add(&acc, p);
    }
    acc
}

pub fn mat(m: &Matrix, v: &[Q]) -> Vec<Q> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Q::zero(), |acc, j| acc + m.get(i, j) * &v[j]))
        .collect()
}

fn tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(k as u32)).map(move |mut c| {
        let mut v = vec![0; k];
        for s in (0..k).rev() {
            v[s] = c % n;
            c /= n;
        }
        v
    })
}

fn ranges(r: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &n in r {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..n).map(move |i| {
                    let mut q = p.clone();
                    q.push(i);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn b2(c: &Tensor, x: &[Q], y: &[Q]) -> Vec<Q> {
    eval(c, &[x, y])
}

pub fn b3(t: &Tensor, x: &[Q], y: &[Q], z: &[Q]) -> Vec<Q> {
    eval(t, &[x, y, z])
}

pub fn leibniz(c: &Tensor) -> bool {
    let n = c.dims()[0];
    tuples(n, 3).all(|t| {
        let (x, y, z) = (e(n, t[0]), e(n, t[1]), e(n, t[2]));
        b2(c, &b2(c, &x, &y), &z) == add(&b2(c, &x, &b2(c, &y, &z)), &b2(c, &b2(c, &x, &z), &y))
    })
}

pub fn ternary_leibniz(t: &Tensor) -> bool {
    let n = t.dims()[0];
    tuples(n, 5).all(|i| {
        let v: Vec<Vec<Q>> = i.iter().map(|&k| e(n, k)).collect();
        let (x, y, z, s, u) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
        let lhs = b3(t, &b3(t, x, y, z), s, u);
        let rhs = sum(&[
            b3(t, x, y, &b3(t, z, s, u)),
            b3(t, x, &b3(t, y, s, u), z),
            b3(t, &b3(t, x, s, u), y, z),
        ]);
        lhs == rhs
    })
}

/// Compatibility as: the sum of the two brackets is again Leibniz
/// (valid when both brackets are Leibniz).
pub fn compatible_binary_via_sum(c1: &Tensor, c2: &Tensor) -> bool {
    leibniz(&c1.add(c2).unwrap())
}

/// Six-term cross identity written out.
pub fn compatible_binary(c1: &Tensor, c2: &Tensor) -> bool {
    let n = c1.dims()[0];
    tuples(n, 3).all(|t| {
        let (x, y, z) = (e(n, t[0]), e(n, t[1]), e(n, t[2]));
        let lhs = add(&b2(c2, &b2(c1, &x, &y), &z), &b2(c1, &b2(c2, &x, &y), &z));
        let rhs = sum(&[
            b2(c2, &x, &b2(c1, &y, &z)),
            b2(c1, &x, &b2(c2, &y, &z)),
            b2(c2, &b2(c1, &x, &z), &y),
            b2(c1, &b2(c2, &x, &z), &y),
        ]);
        lhs == rhs
    })
}

pub fn compatible_ternary(t1: &Tensor, t2: &Tensor) -> bool {
    let n = t1.dims()[0];
    tuples(n, 5).all(|i| {
        let v: Vec<Vec<Q>> = i.iter().map(|&k| e(n, k)).collect();
        let (x, y, z, s, u) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
        let side = |a: &Tensor, b: &Tensor| {
            (
                b3(a, &b3(b, x, y, z), s, u),
                sum(&[
                    b3(a, x, y, &b3(b, z, s, u)),
                    b3(a, x, &b3(b, y, s, u), z),
                    b3(a, &b3(b, x, s, u), y, z),
                ]),
            )
        };
        let (l1, r1) = side(t1, t2);
        let (l2, r2) = side(t2, t1);
        add(&l1, &l2) == add(&r1, &r2)
    })
}

/// `{x,y,z} = [x,[y,z]]` computed directly.
pub fn associated_ternary(c: &Tensor) -> Tensor {
    let n = c.dims()[0];
    let mut data = Vec::new();
    for t in tuples(n, 3) {
        let (x, y, z) = (e(n, t[0]), e(n, t[1]), e(n, t[2]));
        data.extend(b2(c, &x, &b2(c, &y, &z)));
    }
    Tensor::new(vec![n; 4], data).unwrap()
}

// ---------------------------------------------------------------------------
// bimodules and representations

/// `l([x,y],m) = l(x,l(y,m)) + r(l(x,m),y)`, `r(l(x,m),y) = l(x,r(m,y)) + l([x,y],m)`,
/// `r(r(m,x),y) = r(m,[x,y]) + r(r(m,y),x)`.
pub fn binary_bimodule(c: &Tensor, l: &Tensor, r: &Tensor) -> bool {
    let n = c.dims()[0];
    let m = l.dims()[1];
    ranges(&[n, n, m]).into_iter().all(|t| {
        let (x, y, v) = (e(n, t[0]), e(n, t[1]), e(m, t[2]));
        let a1 = b2(l, &b2(c, &x, &y), &v) == add(&b2(l, &x, &b2(l, &y, &v)), &b2(r, &b2(l, &x, &v), &y));
        let a2 = b2(r, &b2(l, &x, &v), &y) == add(&b2(l, &x, &b2(r, &v, &y)), &b2(l, &b2(c, &x, &y), &v));
        let a3 = b2(r, &b2(r, &v, &x), &y) == add(&b2(r, &v, &b2(c, &x, &y)), &b2(r, &b2(r, &v, &y), &x));
        a1 && a2 && a3
    })
}

/// The five ternary bimodule axioms written out (module argument in slot 1..5).
pub fn ternary_bimodule(t: &Tensor, l1: &Tensor, l2: &Tensor, l3: &Tensor) -> bool {
    let n = t.dims()[0];
    let m = l1.dims()[0];
    ranges(&[n, n, n, n, m]).into_iter().all(|i| {
        let (x, y, z, s, v) = (e(n, i[0]), e(n, i[1]), e(n, i[2]), e(n, i[3]), e(m, i[4]));
        let br = |a: &[Q], b: &[Q], c: &[Q]| b3(t, a, b, c);
        // slot 1: m, x, y, z, s
        let a1 = b3(l1, &b3(l1, &v, &x, &y), &z, &s)
            == sum(&[
                b3(l1, &v, &x, &br(&y, &z, &s)),
                b3(l1, &v, &br(&x, &z, &s), &y),
                b3(l1, &b3(l1, &v, &z, &s), &x, &y),
            ]);
        // slot 2: x, m, y, z, s
        let a2 = b3(l1, &b3(l2, &x, &v, &y), &z, &s)
            == sum(&[
                b3(l2, &x, &v, &br(&y, &z, &s)),
                b3(l2, &x, &b3(l1, &v, &z, &s), &y),
                b3(l2, &br(&x, &z, &s), &v, &y),
            ]);
        // slot 3: x, y, m, z, s
        let a3 = b3(l1, &b3(l3, &x, &y, &v), &z, &s)
            == sum(&[
                b3(l3, &x, &y, &b3(l1, &v, &z, &s)),
                b3(l3, &x, &br(&y, &z, &s), &v),
                b3(l3, &br(&x, &z, &s), &y, &v),
            ]);
        // slot 4: x, y, z, m, s
        let a4 = b3(l2, &br(&x, &y, &z), &v, &s)
            == sum(&[
                b3(l3, &x, &y, &b3(l2, &z, &v, &s)),
                b3(l2, &x, &b3(l2, &y, &v, &s), &z),
                b3(l1, &b3(l2, &x, &v, &s), &y, &z),
            ]);
        // slot 5: x, y, z, s, m
        let a5 = b3(l3, &br(&x, &y, &z), &s, &v)
            == sum(&[
                b3(l3, &x, &y, &b3(l3, &z, &s, &v)),
                b3(l2, &x, &b3(l3, &y, &s, &v), &z),
                b3(l1, &b3(l3, &x, &s, &v), &y, &z),
            ]);
        a1 && a2 && a3 && a4 && a5
    })
}

/// Representation `(λ, μ, ρ)` turned into actions by re-indexing, then
/// checked as a bimodule.
pub fn representation(t: &Tensor, lam: &Tensor, mu: &Tensor, rho: &Tensor) -> bool {
    let (l1, l2, l3) = rep_actions(lam, mu, rho);
    ternary_bimodule(t, &l1, &l2, &l3)
}

pub fn rep_actions(lam: &Tensor, mu: &Tensor, rho: &Tensor) -> (Tensor, Tensor, Tensor) {
    let n = lam.dims()[0];
    let m = lam.dims()[2];
    let mut l1 = Vec::new();
    for i in ranges(&[m, n, n, m]) {
        l1.push(rho.get(&[i[1], i[2], i[0], i[3]]).clone());
    }
    let mut l2 = Vec::new();
    for i in ranges(&[n, m, n, m]) {
        l2.push(mu.get(&[i[0], i[2], i[1], i[3]]).clone());
    }
    (
        Tensor::new(vec![m, n, n, m], l1).unwrap(),
        Tensor::new(vec![n, m, n, m], l2).unwrap(),
        lam.clone(),
    )
}

/// `[x+a, y+b, z+c] = [x,y,z] + l₁(a,y,z) + l₂(x,b,z) + l₃(x,y,c) + ω(x,y,z)`
/// assembled coordinate by coordinate.
pub fn semidirect(t: &Tensor, l1: &Tensor, l2: &Tensor, l3: &Tensor, w: Option<&Tensor>) -> Tensor {
    let n = t.dims()[0];
    let m = l1.dims()[0];
    let d = n + m;
    let mut data = vec![Q::zero(); d.pow(4)];
    let at = |i: [usize; 4]| ((i[0] * d + i[1]) * d + i[2]) * d + i[3];
    for i in ranges(&[d, d, d]) {
        let (a, b, c) = (i[0], i[1], i[2]);
        let alg = |k: usize| k < n;
        for o in 0..d {
            let v = match (alg(a), alg(b), alg(c), o < n) {
                (true, true, true, true) => t.get(&[a, b, c, o]).clone(),
                (true, true, true, false) => w.map_or(Q::zero(), |w| w.get(&[a, b, c, o - n]).clone()),
                (false, true, true, false) => l1.get(&[a - n, b, c, o - n]).clone(),
                (true, false, true, false) => l2.get(&[a, b - n, c, o - n]).clone(),
                (true, true, false, false) => l3.get(&[a, b, c - n, o - n]).clone(),
                _ => Q::zero(),
            };
            data[at([a, b, c, o])] = v;
        }
    }
    Tensor::new(vec![d; 4], data).unwrap()
}

/// 2-cocycle condition via the ternary Leibniz identity of the twisted
/// semidirect product.
pub fn cocycle(t: &Tensor, l1: &Tensor, l2: &Tensor, l3: &Tensor, w: &Tensor) -> bool {
    ternary_leibniz(&semidirect(t, l1, l2, l3, Some(w)))
}

pub fn o_operator(t: &Tensor, lam: &Tensor, mu: &Tensor, rho: &Tensor, op: &Matrix) -> bool {
    let m = op.cols();
    tuples(m, 3).all(|i| {
        let (u, v, w) = (e(m, i[0]), e(m, i[1]), e(m, i[2]));
        let (tu, tv, tw) = (mat(op, &u), mat(op, &v), mat(op, &w));
        let lhs = b3(t, &tu, &tv, &tw);
        let inner = sum(&[
            eval(lam, &[&tu, &tv, &w]),
            eval(mu, &[&tu, &tw, &v]),
            eval(rho, &[&tv, &tw, &u]),
        ]);
        lhs == mat(op, &inner)
    })
}

// ---------------------------------------------------------------------------
// operators

pub enum Op<'a> {
    Derivation(Q),
    RotaBaxter(Q),
    Centroid,
    Reynolds,
    Averaging,
    Nijenhuis,
    CentralDerivation,
    Generalized { d1: &'a Matrix, d2: &'a Matrix },
    Quasi { d1: &'a Matrix },
}

pub fn binary_operator(c: &Tensor, kind: &Op<'_>, b: &Matrix) -> bool {
    let n = c.dims()[0];
    let br = |x: &[Q], y: &[Q]| b2(c, x, y);
    tuples(n, 2).all(|t| {
        let (x, y) = (e(n, t[0]), e(n, t[1]));
        let (bx, by) = (mat(b, &x), mat(b, &y));
        let xy = br(&x, &y);
        match kind {
            Op::Derivation(w) => mat(b, &xy) == sum(&[br(&bx, &y), br(&x, &by), scale(w, &xy)]),
            Op::RotaBaxter(w) => br(&bx, &by) == mat(b, &sum(&[br(&bx, &y), br(&x, &by), scale(w, &xy)])),
            Op::Centroid => mat(b, &xy) == br(&bx, &y) && mat(b, &xy) == br(&x, &by),
            Op::Reynolds => {
                let both = br(&bx, &by);
                both == mat(b, &sub(&add(&br(&bx, &y), &br(&x, &by)), &both))
            }
            Op::Averaging => {
                let both = br(&bx, &by);
                mat(b, &br(&bx, &y)) == both && mat(b, &br(&x, &by)) == both
            }
            Op::Nijenhuis => br(&bx, &by) == mat(b, &sub(&add(&br(&bx, &y), &br(&x, &by)), &mat(b, &xy))),
            Op::CentralDerivation => {
                let z = vec![Q::zero(); n];
                mat(b, &xy) == z && br(&bx, &y) == z && br(&x, &by) == z
            }
            Op::Generalized { d1, d2 } => mat(d2, &xy) == add(&br(&bx, &y), &br(&x, &mat(d1, &y))),
            Op::Quasi { d1 } => mat(d1, &xy) == add(&br(&bx, &y), &br(&x, &by)),
        }
    })
}

pub fn ternary_operator(t: &Tensor, kind: &Op<'_>, b: &Matrix) -> bool {
    let n = t.dims()[0];
    let br = |x: &[Q], y: &[Q], z: &[Q]| b3(t, x, y, z);
    tuples(n, 3).all(|i| {
        let (x, y, z) = (e(n, i[0]), e(n, i[1]), e(n, i[2]));
        let (bx, by, bz) = (mat(b, &x), mat(b, &y), mat(b, &z));
        let base = br(&x, &y, &z);
        let one = sum(&[br(&bx, &y, &z), br(&x, &by, &z), br(&x, &y, &bz)]);
        let two = sum(&[br(&bx, &by, &z), br(&bx, &y, &bz), br(&x, &by, &bz)]);
        let all = br(&bx, &by, &bz);
        let zero = vec![Q::zero(); n];
        match kind {
            Op::Derivation(w) => mat(b, &base) == sum(&[one.clone(), scale(w, &two), scale(&(w * w), &all)]),
            Op::RotaBaxter(w) => all == mat(b, &sum(&[two.clone(), scale(w, &one), scale(&(w * w), &base)])),
            Op::Centroid => {
                let lhs = mat(b, &base);
                lhs == br(&bx, &y, &z) && lhs == br(&x, &by, &z) && lhs == br(&x, &y, &bz)
            }
            Op::Reynolds => {
                let two_q = Q::from_integer(2.into());
                all == mat(b, &sub(&two, &scale(&two_q, &all)))
            }
            Op::Averaging => {
                mat(b, &br(&bx, &by, &z)) == all && mat(b, &br(&bx, &y, &bz)) == all && mat(b, &br(&x, &by, &bz)) == all
            }
            Op::Nijenhuis => {
                let rhs = add(
                    &sub(&mat(b, &two), &mat(b, &mat(b, &one))),
                    &mat(b, &mat(b, &mat(b, &base))),
                );
                all == rhs
            }
            Op::CentralDerivation => {
                mat(b, &base) == zero && br(&bx, &y, &z) == zero && br(&x, &by, &z) == zero && br(&x, &y, &bz) == zero
            }
            Op::Generalized { d1, d2 } => {
                // outer map is d2 here: d2[x,y,z] = [Bx,y,z] + [x,d1 y,z] + [x,y,d1 z]
                mat(d2, &base) == sum(&[br(&bx, &y, &z), br(&x, &mat(d1, &y), &z), br(&x, &y, &mat(d1, &z))])
            }
            Op::Quasi { d1 } => mat(d1, &base) == one,
        }
    })
}
