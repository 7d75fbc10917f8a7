use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::element::CliffordElement;
use super::endo::TraceForm;
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{det_exact, IntMatrix};
use crate::par::{map_range, Parallelism};

/// Default rank cap for assembling the `2^n × 2^n` Gram matrix of `φ_a`.
pub const PAIRING_CAP: usize = 8;

/// `φ_a(x, y) = Tr(L_{ι(x)·y·a})`.
pub fn phi_a(x: &CliffordElement, y: &CliffordElement, a: &CliffordElement) -> Result<BigInt> {
    let z = x.reversal().mul(y)?.mul(a)?;
    let tf = TraceForm::new(x.host(), Parallelism::Sequential)?;
    tf.eval(&z)
}

/// Gram matrix of `φ_a` on the monomial basis.
pub fn phi_gram(a: &CliffordElement, mode: Parallelism) -> Result<IntMatrix> {
    let tf = TraceForm::new(a.host(), mode)?;
    phi_gram_with(a, &tf, mode)
}

fn phi_gram_with(a: &CliffordElement, tf: &TraceForm, mode: Parallelism) -> Result<IntMatrix> {
    let host = a.host();
    let dim = 1usize << host.rank();
    let right: Vec<CliffordElement> = map_range(mode, dim, |t| {
        CliffordElement::monomial(host, t as u64)
            .expect("mask in range")
            .mul(a)
            .expect("same host")
    });
    let rows = map_range(mode, dim, |s| {
        let left = CliffordElement::monomial(host, s as u64)
            .expect("mask in range")
            .reversal();
        right
            .iter()
            .map(|r| {
                tf.eval(&left.mul(r).expect("same host"))
                    .expect("same host")
            })
            .collect::<Vec<_>>()
    });
    IntMatrix::from_rows(rows)
}

/// Full rank over `Q`, decided modulo a few primes first and exactly otherwise.
fn is_nonsingular(m: &IntMatrix) -> Result<bool> {
    const PRIMES: [u64; 3] = [
        2_305_843_009_213_693_951,
        4_611_686_018_427_387_847,
        1_000_000_007,
    ];
    let n = m.rows();
    for p in PRIMES {
        let pb = BigInt::from(p);
        let mut a: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let r = ((&m[(i, j)] % &pb) + &pb) % &pb;
                        u64::try_from(r).expect("reduced mod p")
                    })
                    .collect()
            })
            .collect();
        if full_rank_mod(&mut a, p) {
            return Ok(true);
        }
    }
    Ok(!det_exact(m)?.is_zero())
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn full_rank_mod(a: &mut [Vec<u64>], p: u64) -> bool {
    let n = a.len();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return false;
        };
        a.swap(col, piv);
        let inv = powmod(a[col][col], p - 2, p);
        for r in col + 1..n {
            if a[r][col] == 0 {
                continue;
            }
            let f = mulmod(a[r][col], inv, p);
            for c in col..n {
                let sub = mulmod(f, a[col][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
    }
    true
}

fn is_antisymmetric(g: &IntMatrix) -> bool {
    let n = g.rows();
    (0..n).all(|i| g[(i, i)].is_zero() && (i + 1..n).all(|j| g[(i, j)] == -&g[(j, i)]))
}

/// Candidate directions `e_S − ι(e_S)`, deduplicated up to sign.
fn anti_fixed_basis(host: &Arc<Lattice>) -> Vec<CliffordElement> {
    let mut out: Vec<CliffordElement> = Vec::new();
    for s in 0..1u64 << host.rank() {
        let e = CliffordElement::monomial(host, s).expect("mask in range");
        let b = e.sub(&e.reversal()).expect("same host");
        if b.is_zero() {
            continue;
        }
        let neg = b.scale(&BigInt::from(-1));
        if out.iter().any(|o| *o == b || *o == neg) {
            continue;
        }
        out.push(b);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

const COEFFS: [i64; 4] = [1, -1, 2, -2];

/// Odometer step over `choice`, last slot fastest; false once it wraps.
fn advance(choice: &mut [usize], base: usize) -> bool {
    for slot in choice.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Search bounds for [`find_polarization_element`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolarizationSearch {
    pub max_support: usize,
    pub coeff_bound: i64,
}

impl Default for PolarizationSearch {
    fn default() -> Self {
        PolarizationSearch {
            max_support: 2,
            coeff_bound: 2,
        }
    }
}

/// Vectors `g = v·w` used for the scaling-law check.
fn scaling_generators(host: &Arc<Lattice>) -> Vec<CliffordElement> {
    let n = host.rank();
    let mut vs = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut v = vec![BigInt::zero(); n];
            v[i] += 1;
            if j != i {
                v[j] += 1;
            }
            if !host.norm(&v).is_zero() {
                vs.push(v);
            }
        }
    }
    let mut gens = Vec::new();
    if let (Some(v), Some(w)) = (vs.first(), vs.get(1)) {
        let v = CliffordElement::vector(host, v).expect("rank matches");
        let w = CliffordElement::vector(host, w).expect("rank matches");
        gens.push(v.mul(&w).expect("same host"));
    }
    gens
}

fn scaling_law_holds(
    a: &CliffordElement,
    tf: &TraceForm,
    gens: &[CliffordElement],
) -> Result<bool> {
    let host = a.host();
    let sample = (1u64 << host.rank()).min(8);
    for g in gens {
        // ι(g)·g is the scalar v²w²
        let norm = g.reversal().mul(g)?.scalar_part();
        for s in 0..sample {
            for t in 0..sample {
                let x = CliffordElement::monomial(host, s)?;
                let y = CliffordElement::monomial(host, t)?;
                let base = tf.eval(&x.reversal().mul(&y)?.mul(a)?)?;
                let gx = g.mul(&x)?;
                let gy = g.mul(&y)?;
                let moved = tf.eval(&gx.reversal().mul(&gy)?.mul(a)?)?;
                if moved != &norm * base {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// First `a` in a fixed order with `φ_a` alternating and nondegenerate.
///
/// Candidates are integer combinations of `e_S − ι(e_S)` (so `ι(a) = −a`),
/// by increasing support, then basis order, then coefficients `1, −1, 2, −2`.
pub fn find_polarization_element(
    host: &Arc<Lattice>,
    mode: Parallelism,
) -> Result<CliffordElement> {
    find_polarization_element_with(host, PolarizationSearch::default(), mode)
}

pub fn find_polarization_element_with(
    host: &Arc<Lattice>,
    bounds: PolarizationSearch,
    mode: Parallelism,
) -> Result<CliffordElement> {
    if host.rank() > PAIRING_CAP {
        return Err(Error::RankOverCap {
            rank: host.rank(),
            cap: PAIRING_CAP,
        });
    }
    let tf = TraceForm::new(host, mode)?;
    let gens = scaling_generators(host);
    let basis = anti_fixed_basis(host);
    let coeffs: Vec<i64> = COEFFS
        .iter()
        .copied()
        .filter(|c| c.abs() <= bounds.coeff_bound)
        .collect();
    if coeffs.is_empty() {
        return Err(Error::SearchExhausted {
            max_support: bounds.max_support,
            coeff_bound: bounds.coeff_bound,
        });
    }
    for k in 1..=bounds.max_support.min(basis.len()) {
        for support in combinations(basis.len(), k) {
            let mut choice = vec![0usize; k];
            loop {
                let mut a = CliffordElement::zero(host)?;
                for (slot, &b) in support.iter().enumerate() {
                    a = a.add(&basis[b].scale(&BigInt::from(coeffs[choice[slot]])))?;
                }
                if !a.is_zero() {
                    let g = phi_gram_with(&a, &tf, mode)?;
                    if is_antisymmetric(&g)
                        && is_nonsingular(&g)?
                        && scaling_law_holds(&a, &tf, &gens)?
                    {
                        return Ok(a);
                    }
                }
                if !advance(&mut choice, coeffs.len()) {
                    break;
                }
            }
        }
    }
    Err(Error::SearchExhausted {
        max_support: bounds.max_support,
        coeff_bound: bounds.coeff_bound,
    })
}
