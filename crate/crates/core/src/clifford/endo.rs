use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::element::{same_host, CliffordElement};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{IntMatrix, IntVector, RatMatrix};
use crate::par::{map_range, Parallelism};

/// Default rank cap for building `2^n × 2^n` matrices.
pub const LEFT_MUL_CAP: usize = 10;

/// An endomorphism of `C(L)` in the subset-mask basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoMatrix {
    rank: usize,
    entries: IntMatrix,
}

impl EndoMatrix {
    pub fn new(rank: usize, entries: IntMatrix) -> Result<Self> {
        let dim = 1usize << rank;
        if entries.rows() != dim || entries.cols() != dim {
            return Err(Error::Shape(format!(
                "expected {dim}x{dim} for rank {rank}, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        Ok(EndoMatrix { rank, entries })
    }

    pub fn identity(rank: usize) -> Self {
        EndoMatrix {
            rank,
            entries: IntMatrix::identity(1 << rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        1 << self.rank
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn trace(&self) -> BigInt {
        self.entries.trace()
    }

    pub fn compose(&self, other: &EndoMatrix) -> Result<EndoMatrix> {
        EndoMatrix::new(self.rank, self.entries.checked_mul(&other.entries)?)
    }
}

/// `Tr(A·B)` without forming the product.
pub fn trace_of_product(a: &EndoMatrix, b: &EndoMatrix) -> Result<BigInt> {
    if a.rank != b.rank {
        return Err(Error::Shape("endomorphisms of different algebras".into()));
    }
    let n = a.dim();
    let mut t = BigInt::zero();
    for i in 0..n {
        for j in 0..n {
            let x = &a.entries[(i, j)];
            if !x.is_zero() {
                t += x * &b.entries[(j, i)];
            }
        }
    }
    Ok(t)
}

fn check_cap(rank: usize, cap: usize) -> Result<()> {
    if rank > cap {
        Err(Error::RankOverCap { rank, cap })
    } else {
        Ok(())
    }
}

/// Matrix of `y ↦ x·y`.
pub fn left_mul_matrix(x: &CliffordElement) -> Result<EndoMatrix> {
    left_mul_matrix_with(x, Parallelism::Sequential)
}

pub fn left_mul_matrix_with(x: &CliffordElement, mode: Parallelism) -> Result<EndoMatrix> {
    let n = x.rank();
    check_cap(n, LEFT_MUL_CAP)?;
    let host = x.host();
    let dim = 1usize << n;
    let cols = map_range(mode, dim, |t| {
        let e = CliffordElement::monomial(host, t as u64).expect("mask in range");
        x.mul(&e).expect("same host")
    });
    let mut m = IntMatrix::zeros(dim, dim);
    for (t, col) in cols.into_iter().enumerate() {
        for (mask, c) in col.terms() {
            m[(mask as usize, t)] = c.clone();
        }
    }
    EndoMatrix::new(n, m)
}

/// The linear functional `z ↦ Tr(L_z)`, tabulated on monomials.
#[derive(Debug, Clone)]
pub struct TraceForm {
    host: Arc<Lattice>,
    values: Vec<BigInt>,
}

impl TraceForm {
    pub fn new(host: &Arc<Lattice>, mode: Parallelism) -> Result<Self> {
        let n = host.rank();
        check_cap(n, LEFT_MUL_CAP)?;
        let dim = 1usize << n;
        let values = map_range(mode, dim, |p| {
            let ep = CliffordElement::monomial(host, p as u64).expect("mask in range");
            let mut t = BigInt::zero();
            for s in 0..dim {
                let es = CliffordElement::monomial(host, s as u64).expect("mask in range");
                t += ep.mul(&es).expect("same host").coeff(s as u64);
            }
            t
        });
        Ok(TraceForm {
            host: Arc::clone(host),
            values,
        })
    }

    /// `Tr(L_z)`.
    pub fn eval(&self, z: &CliffordElement) -> Result<BigInt> {
        if !same_host(&self.host, z.host()) {
            return Err(Error::HostMismatch);
        }
        Ok(z.terms().map(|(m, c)| c * &self.values[m as usize]).sum())
    }

    pub fn monomial_values(&self) -> &[BigInt] {
        &self.values
    }
}

/// `(Tr(L_v·L_w), 2^n·b(v, w))`.
pub fn trace_pairing_identity(
    v: &[BigInt],
    w: &[BigInt],
    host: &Arc<Lattice>,
) -> Result<(BigInt, BigInt)> {
    check_cap(host.rank(), LEFT_MUL_CAP)?;
    let lv = left_mul_matrix(&CliffordElement::vector(host, v)?)?;
    let lw = left_mul_matrix(&CliffordElement::vector(host, w)?)?;
    let lhs = trace_of_product(&lv, &lw)?;
    let rhs = host.pair(v, w) << host.rank();
    if lhs != rhs {
        return Err(Error::Invariant(format!(
            "Tr(L_v L_w) = {lhs} but 2^n b(v,w) = {rhs}"
        )));
    }
    Ok((lhs, rhs))
}

/// Dual-basis left multiplications `L(w∨ᵢ)` for a unimodular host.
#[derive(Debug, Clone)]
pub struct Projector {
    host: Arc<Lattice>,
    duals: Vec<EndoMatrix>,
}

impl Projector {
    pub fn new(host: &Arc<Lattice>) -> Result<Self> {
        check_cap(host.rank(), LEFT_MUL_CAP)?;
        let det = host.det();
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det });
        }
        let inv = RatMatrix::from(host.gram())
            .inverse()?
            .to_integer()
            .ok_or_else(|| {
                Error::Invariant("inverse of a unimodular Gram is not integral".into())
            })?;
        let duals = inv
            .columns()
            .iter()
            .map(|c| left_mul_matrix(&CliffordElement::vector(host, c)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Projector {
            host: Arc::clone(host),
            duals,
        })
    }

    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    /// `Σ cᵢ eᵢ` with `cᵢ = Tr(f·L(w∨ᵢ)) / 2^n`.
    pub fn project(&self, f: &EndoMatrix) -> Result<IntVector> {
        let n = self.host.rank();
        if f.rank() != n {
            return Err(Error::Shape(format!(
                "endomorphism of rank {} on host of rank {n}",
                f.rank()
            )));
        }
        let denom = BigInt::one() << n;
        self.duals
            .iter()
            .enumerate()
            .map(|(index, l)| {
                let t = trace_of_product(f, l)?;
                let (q, r) = t.div_rem(&denom);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::NonIntegralTrace {
                        index,
                        numerator: t,
                        denominator: denom.clone(),
                    })
                }
            })
            .collect()
    }
}

pub fn project_endo_to_l(f: &EndoMatrix, host: &Arc<Lattice>) -> Result<IntVector> {
    Projector::new(host)?.project(f)
}
