//! Exact linear algebra over the rationals: echelon form, nullspace, affine
//! solving and inversion.
//!
//! Pivoting is deterministic: columns are scanned left to right and the
//! pivot row is the first remaining row with a nonzero entry.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_traits::{One, Zero};

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &Matrix) -> Echelon {
    let cols = m.cols();
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

/// Scales `v` so its first nonzero entry is 1.
fn normalize_leading(mut v: Vec<Scalar>) -> Vec<Scalar> {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
        }
    }
    v
}

fn kernel_from_echelon(e: &Echelon, cols: usize) -> Vec<Vec<Scalar>> {
    let free = (0..cols).filter(|c| !e.pivots.contains(c));
    free.map(|f| {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (row, &p) in e.rows.iter().zip(&e.pivots) {
            v[p] = -row[f].clone();
        }
        normalize_leading(v)
    })
    .collect()
}

/// Basis of `{v : m·v = 0}`, one vector per free column, each normalized to
/// leading entry 1. Empty iff `m` is injective.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Scalar>> {
    kernel_from_echelon(&rref(m), m.cols())
}

#[derive(Debug, Clone, PartialEq)]
pub enum AffineSolution {
    Solved {
        /// Solution with every free variable set to zero.
        particular: Vec<Scalar>,
        nullspace: Vec<Vec<Scalar>>,
    },
    Infeasible,
}

/// Solves `m·v = b` exactly.
pub fn affine_solve(m: &Matrix, b: &[Scalar]) -> Result<AffineSolution> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let cols = m.cols();
    let augmented = Matrix::from_fn(m.rows(), cols + 1, |i, j| {
        if j < cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let e = rref(&augmented);
    if e.pivots.last() == Some(&cols) {
        return Ok(AffineSolution::Infeasible);
    }
    let mut particular = vec![Scalar::zero(); cols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        particular[p] = row[cols].clone();
    }
    let coeff = Echelon {
        rows: e.rows.iter().map(|r| r[..cols].to_vec()).collect(),
        pivots: e.pivots.clone(),
    };
    Ok(AffineSolution::Solved {
        particular,
        nullspace: kernel_from_echelon(&coeff, cols),
    })
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Matrix::identity(0));
    }
    let augmented = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let e = rref(&augmented);
    if e.pivots.len() < n || e.pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    Matrix::from_rows(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}
