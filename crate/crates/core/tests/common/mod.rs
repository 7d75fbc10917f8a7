//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use k3lattice::linalg::{isqrt, IntMatrix, RatMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;

pub fn to_i64_rows(g: &IntMatrix) -> Vec<Vec<i64>> {
    g.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect())
        .collect()
}

pub fn quad(g: &[Vec<i64>], x: &[i64]) -> i64 {
    let n = x.len();
    let mut s = 0;
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        let mut row = 0;
        for j in 0..n {
            row += g[i][j] * x[j];
        }
        s += x[i] * row;
    }
    s
}

pub fn pair(g: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| x[i] * g[i][j] * y[j]).sum::<i64>())
        .sum()
}

/// `|xᵢ| ≤ ⌊√(c·(M⁻¹)ᵢᵢ)⌋` for a positive-definite rational `M`.
pub fn cauchy_schwarz_box(m: &RatMatrix, c: i64) -> Vec<i64> {
    let inv = m.inverse().unwrap();
    (0..m.rows())
        .map(|i| {
            let t: BigRational = &inv[(i, i)] * BigRational::from_integer(BigInt::from(c));
            isqrt(&t.floor().to_integer()).to_i64().unwrap()
        })
        .collect()
}

pub fn box_size(bounds: &[i64]) -> u128 {
    bounds.iter().map(|&b| (2 * b + 1) as u128).product()
}

/// Calls `f` on every point of `∏ [−bᵢ, bᵢ]`.
pub fn for_each_in_box(bounds: &[i64], mut f: impl FnMut(&[i64])) {
    let n = bounds.len();
    let mut x: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        f(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if x[i] < bounds[i] {
                x[i] += 1;
                break;
            }
            x[i] = -bounds[i];
        }
    }
}

/// Every nonzero `x` with `x² ≤ max_norm`, by naive box scan.
pub fn short_vectors_oracle(g: &IntMatrix, max_norm: i64) -> BTreeSet<(i64, Vec<i64>)> {
    let gi = to_i64_rows(g);
    let bounds = cauchy_schwarz_box(&RatMatrix::from(g), max_norm);
    let mut out = BTreeSet::new();
    for_each_in_box(&bounds, |x| {
        let q = quad(&gi, x);
        if q > 0 && q <= max_norm {
            out.insert((q, x.to_vec()));
        }
    });
    out
}

/// Whether some `r` with `r² = −2` is orthogonal to `v`, for hyperbolic `g`
/// and `v² > 0`. Roots orthogonal to `v` have norm 2 under the majorant
/// `M = 2(Gv)(Gv)ᵀ/v² − G`, which bounds the scan.
pub fn has_wall_oracle(g: &IntMatrix, v: &[i64]) -> bool {
    let gi = to_i64_rows(g);
    let n = v.len();
    let vv = quad(&gi, v);
    assert!(vv > 0);
    let gv: Vec<i64> = (0..n)
        .map(|i| (0..n).map(|j| gi[i][j] * v[j]).sum())
        .collect();
    let mut m = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = BigRational::new(BigInt::from(2 * gv[i] * gv[j]), BigInt::from(vv))
                - BigRational::from_integer(BigInt::from(gi[i][j]));
        }
    }
    let bounds = cauchy_schwarz_box(&m, 2);
    let mut found = false;
    for_each_in_box(&bounds, |r| {
        if !found && quad(&gi, r) == -2 && pair(&gi, r, v) == 0 {
            found = true;
        }
    });
    found
}

/// Least `v²` over the box for `v` in `C_N`, with a witness.
pub fn min_degree_oracle(g: &IntMatrix, norm_limit: i64, bx: i64) -> Option<(i64, Vec<i64>)> {
    let gi = to_i64_rows(g);
    let mut best: Option<(i64, Vec<i64>)> = None;
    for_each_in_box(&vec![bx; g.rows()], |v| {
        let q = quad(&gi, v);
        if q <= 0 || q > norm_limit || best.as_ref().is_some_and(|b| b.0 <= q) {
            return;
        }
        if !has_wall_oracle(g, v) {
            best = Some((q, v.to_vec()));
        }
    });
    best
}

/// `BᵀB` for a random nonsingular lower-triangular `B`.
pub fn random_positive_definite<R: Rng>(rng: &mut R, rank: usize) -> IntMatrix {
    let mut b = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        b[i][i] = rng.random_range(1..=2);
        for j in 0..i {
            b[i][j] = rng.random_range(-1..=1);
        }
    }
    let mut g = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            g[i][j] = (0..rank).map(|k| b[k][i] * b[k][j]).sum();
        }
    }
    IntMatrix::from_i64(&g)
}

pub fn random_vec<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<BigInt> {
    (0..n)
        .map(|_| BigInt::from(rng.random_range(-bound..=bound)))
        .collect()
}
