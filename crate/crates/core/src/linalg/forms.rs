use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, IntVector, RatMatrix};
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// Sylvester inertia `(positive, negative, zero)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Signature {
            positive,
            negative,
            zero,
        }
    }

    pub fn as_tuple(self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }
}

/// Signature by exact congruence diagonalization over ℚ.
///
/// Pivots on a nonzero diagonal entry when one exists in the active block;
/// otherwise a nonzero off-diagonal pair spans a hyperbolic plane, which is
/// split off whole and counted as one positive and one negative direction.
pub fn signature(gram: &IntMatrix) -> Result<Signature> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    let mut a = RatMatrix::from(gram);
    let mut sig = Signature::new(0, 0, 0);
    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[(i, i)].is_zero()) {
            a.swap_rows(k, i);
            a.swap_cols(k, i);
            let piv = a[(k, k)].clone();
            for i in k + 1..n {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let f = &a[(i, k)] / &piv;
                sym_eliminate(&mut a, i, k, &f, n);
            }
            if piv.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
            k += 1;
            continue;
        }
        let off = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[(i, j)].is_zero());
        let Some((i, j)) = off else {
            sig.zero += n - k;
            break;
        };
        a.swap_rows(k, i);
        a.swap_cols(k, i);
        a.swap_rows(k + 1, j);
        a.swap_cols(k + 1, j);
        let b = a[(k, k + 1)].clone();
        for l in k + 2..n {
            // row_l -= α row_k + β row_{k+1}, with the block [[0,b],[b,0]]
            let alpha = &a[(l, k + 1)] / &b;
            let beta = &a[(l, k)] / &b;
            sym_eliminate(&mut a, l, k, &alpha, n);
            sym_eliminate(&mut a, l, k + 1, &beta, n);
        }
        sig.positive += 1;
        sig.negative += 1;
        k += 2;
    }
    Ok(sig)
}

/// `row_i -= f·row_k` followed by `col_i -= f·col_k`.
fn sym_eliminate(a: &mut RatMatrix, i: usize, k: usize, f: &BigRational, n: usize) {
    if f.is_zero() {
        return;
    }
    for j in 0..n {
        let d = f * &a[(k, j)];
        a[(i, j)] -= d;
    }
    for j in 0..n {
        let d = f * &a[(j, k)];
        a[(j, i)] -= d;
    }
}

/// Primitive generators of `ker(m) ∩ ℤ^cols`, in row Hermite normal form.
pub fn rational_kernel(m: &IntMatrix) -> Vec<IntVector> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let basis: Vec<IntVector> = (rank..m.cols()).map(|j| snf.v.column(j)).collect();
    hermite_rows(basis)
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`.
/// Zero rows are dropped, so the output is a basis when the input spans a
/// lattice of full row rank.
pub fn hermite_rows(mut rows: Vec<IntVector>) -> Vec<IntVector> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                done &= rows[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let pivot_row = rows[r].clone();
            for i in 0..r {
                let q = rows[i][c].div_floor(&pivot_row[c]);
                if !q.is_zero() {
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
            r += 1;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    rows
}

/// `G = L · D · Lᵀ` with `L` unit lower triangular.
#[derive(Debug, Clone)]
pub struct RationalLdl {
    pub l: RatMatrix,
    pub d: Vec<BigRational>,
}

/// Exact LDLᵀ of a positive-definite Gram matrix.
pub fn ldl_decompose(gram: &IntMatrix) -> Result<RationalLdl> {
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = gram.rows();
    let g = RatMatrix::from(gram);
    let mut l = RatMatrix::identity(n);
    let mut d: Vec<BigRational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut dj = g[(j, j)].clone();
        for k in 0..j {
            dj -= &l[(j, k)] * &l[(j, k)] * &d[k];
        }
        if !dj.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        for i in j + 1..n {
            let mut s = g[(i, j)].clone();
            for k in 0..j {
                s -= &l[(i, k)] * &l[(j, k)] * &d[k];
            }
            l[(i, j)] = s / &dj;
        }
        d.push(dj);
    }
    Ok(RationalLdl { l, d })
}

/// Largest integer `r` with `r² ≤ n` (n ≥ 0).
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}
