//! Short vectors, (−2)-walls and the bounded minimal-polarization search.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{orthogonal_complement, Lattice, LatticeEmbedding};
use crate::linalg::{isqrt, ldl_decompose, IntVector, RationalLdl};
use crate::par::{map_slice, position_first, Parallelism};

/// All vectors of a prescribed norm in a positive-definite lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortVectorReport {
    pub lattice: Lattice,
    pub norm: BigInt,
    /// Sorted lexicographically; closed under negation.
    pub vectors: Vec<IntVector>,
    /// The enumeration is exhaustive by construction.
    pub complete: bool,
}

/// Depth-first Fincke–Pohst enumeration over an exact LDLᵀ.
struct Enumerator<'a> {
    ldl: &'a RationalLdl,
    n: usize,
}

impl Enumerator<'_> {
    /// Integers `x` with `d·(x + c)² ≤ budget`.
    fn range(&self, level: usize, c: &BigRational, budget: &BigRational) -> Vec<BigInt> {
        let t = budget / &self.ldl.d[level];
        if t.is_negative() {
            return Vec::new();
        }
        let s = isqrt(&t.floor().to_integer()) + 1;
        let center = -c;
        let lo: BigInt = center.floor().to_integer() - &s;
        let hi: BigInt = center.ceil().to_integer() + &s;
        let mut out = Vec::new();
        let mut x = lo;
        while x <= hi {
            let shifted = BigRational::from_integer(x.clone()) + c;
            if &shifted * &shifted <= t {
                out.push(x.clone());
            }
            x += 1;
        }
        out
    }

    /// `Σ_{j>level} L[j][level]·x_j`
    fn center(&self, level: usize, x: &[BigInt]) -> BigRational {
        let mut c = BigRational::zero();
        for (j, xj) in x.iter().enumerate().take(self.n).skip(level + 1) {
            if !xj.is_zero() {
                c += &self.ldl.l[(j, level)] * BigRational::from_integer(xj.clone());
            }
        }
        c
    }

    fn spend(
        &self,
        level: usize,
        xv: &BigInt,
        c: &BigRational,
        budget: &BigRational,
    ) -> BigRational {
        let shifted = BigRational::from_integer(xv.clone()) + c;
        budget - &self.ldl.d[level] * &shifted * &shifted
    }

    fn descend(
        &self,
        level: usize,
        x: &mut IntVector,
        budget: BigRational,
        out: &mut Vec<IntVector>,
    ) {
        let c = self.center(level, x);
        for xv in self.range(level, &c, &budget) {
            let rest = self.spend(level, &xv, &c, &budget);
            x[level] = xv;
            if level == 0 {
                out.push(x.clone());
            } else {
                self.descend(level - 1, x, rest, out);
            }
        }
        x[level] = BigInt::zero();
    }

    /// Every `x` with `xᵀGx ≤ bound`, including zero.
    fn run(&self, bound: &BigInt, mode: Parallelism) -> Vec<IntVector> {
        if self.n == 0 {
            return vec![Vec::new()];
        }
        let top = self.n - 1;
        let budget = BigRational::from_integer(bound.clone());
        let zero = BigRational::zero();
        let firsts = self.range(top, &zero, &budget);
        let chunks = map_slice(mode, &firsts, |xv| {
            let mut x = vec![BigInt::zero(); self.n];
            x[top] = xv.clone();
            let rest = self.spend(top, xv, &zero, &budget);
            let mut out = Vec::new();
            if top == 0 {
                out.push(x);
            } else {
                self.descend(top - 1, &mut x, rest, &mut out);
            }
            out
        });
        chunks.into_iter().flatten().collect()
    }
}

fn require_positive_definite(n: &Lattice) -> Result<RationalLdl> {
    if !n.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    ldl_decompose(n.gram())
}

/// All nonzero `v` with `v² ≤ max_norm`, paired with their norms, sorted by
/// norm and then lexicographically.
pub fn short_vectors_up_to(
    n: &Lattice,
    max_norm: &BigInt,
    mode: Parallelism,
) -> Result<Vec<(BigInt, IntVector)>> {
    let ldl = require_positive_definite(n)?;
    let en = Enumerator {
        ldl: &ldl,
        n: n.rank(),
    };
    let mut out: Vec<(BigInt, IntVector)> = en
        .run(max_norm, mode)
        .into_iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .map(|v| (n.norm(&v), v))
        .collect();
    out.sort();
    Ok(out)
}

/// Exhaustive list of vectors of norm exactly `target_norm`.
pub fn short_vectors(
    n: &Lattice,
    target_norm: &BigInt,
    mode: Parallelism,
) -> Result<ShortVectorReport> {
    if !target_norm.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "target norm must be positive, got {target_norm}"
        )));
    }
    let ldl = require_positive_definite(n)?;
    let en = Enumerator {
        ldl: &ldl,
        n: n.rank(),
    };
    let mut vectors: Vec<IntVector> = en
        .run(target_norm, mode)
        .into_iter()
        .filter(|v| &n.norm(v) == target_norm)
        .collect();
    vectors.sort();
    Ok(ShortVectorReport {
        lattice: n.clone(),
        norm: target_norm.clone(),
        vectors,
        complete: true,
    })
}

/// All `w` with `w² = −2` and `w·v = 0`, in `n`-coordinates.
///
/// `v^⊥` is negative definite for hyperbolic `n` and `v² > 0`, so the walls
/// are the norm-2 vectors of the negated complement.
pub fn minus_two_walls_through(n: &Lattice, v: &[BigInt]) -> Result<Vec<IntVector>> {
    n.require_hyperbolic()?;
    n.check_vector(v)?;
    if !n.norm(v).is_positive() {
        return Err(Error::InvalidParameter("wall test needs v² > 0".into()));
    }
    let line = LatticeEmbedding::from_columns(n, &[v.to_vec()])?;
    let perp = orthogonal_complement(&line)?;
    if perp.source().rank() == 0 {
        return Ok(Vec::new());
    }
    let negated = Lattice::new(perp.source().gram().neg())?;
    let report = short_vectors(&negated, &BigInt::from(2), Parallelism::Sequential)?;
    let mut walls: Vec<IntVector> = report.vectors.iter().map(|x| perp.apply(x)).collect();
    walls.sort();
    Ok(walls)
}

/// `v ∈ C_N`: `v² > 0` and no (−2)-vector is orthogonal to `v`.
pub fn in_cn(n: &Lattice, v: &[BigInt]) -> Result<bool> {
    n.require_hyperbolic()?;
    n.check_vector(v)?;
    if !n.norm(v).is_positive() {
        return Ok(false);
    }
    Ok(minus_two_walls_through(n, v)?.is_empty())
}

/// Outcome of [`min_polarization_degree`], with the search parameters that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationSearchResult {
    pub lattice: Lattice,
    /// Smallest `v²` found for `v ∈ C_N`; an upper bound on `D_N`.
    pub upper_bound: Option<BigInt>,
    pub certificate: Option<IntVector>,
    pub searched_norm_limit: i64,
    pub searched_box: i64,
    /// True only in rank 1, where the generator settles `D_N` exactly.
    pub exhaustive: bool,
}

/// Position of an integer in the order `0, 1, −1, 2, −2, …`.
fn zigzag(x: i64) -> u64 {
    if x > 0 {
        2 * x as u64 - 1
    } else {
        2 * x.unsigned_abs()
    }
}

/// Every coordinate vector in `[−box, box]^rank`.
fn box_vectors(rank: usize, bx: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-bx..=bx).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Candidates `v` with coordinates in the box and `0 < v² ≤ norm_limit`,
/// ordered by `v²`, then lexicographically in the order `0, 1, −1, 2, …`.
pub fn polarization_candidates(
    n: &Lattice,
    norm_limit: i64,
    coeff_box: i64,
) -> Vec<(BigInt, IntVector)> {
    let limit = BigInt::from(norm_limit);
    let mut cands: Vec<(BigInt, Vec<u64>, IntVector)> = box_vectors(n.rank(), coeff_box)
        .into_iter()
        .filter_map(|c| {
            let v: IntVector = c.iter().map(|&x| BigInt::from(x)).collect();
            let q = n.norm(&v);
            (q.is_positive() && q <= limit).then(|| (q, c.iter().map(|&x| zigzag(x)).collect(), v))
        })
        .collect();
    cands.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    cands.into_iter().map(|(q, _, v)| (q, v)).collect()
}

/// Bounded search for the least degree of a vector in `C_N`.
///
/// In rank ≥ 2 the answer is a certified upper bound on `D_N`: every
/// vector in the box with norm up to the limit is tried in a fixed order and
/// the first one in `C_N` is returned.
pub fn min_polarization_degree(
    n: &Lattice,
    norm_limit: i64,
    coeff_box: i64,
    mode: Parallelism,
) -> Result<PolarizationSearchResult> {
    n.require_hyperbolic()?;
    if norm_limit <= 0 || coeff_box <= 0 {
        return Err(Error::InvalidParameter(format!(
            "norm limit and box must be positive (got {norm_limit}, {coeff_box})"
        )));
    }
    let cands = polarization_candidates(n, norm_limit, coeff_box);
    let hit = position_first(mode, &cands, |(_, v)| in_cn(n, v).unwrap_or(false));
    let (upper_bound, certificate) = match hit {
        Some(i) => (Some(cands[i].0.clone()), Some(cands[i].1.clone())),
        None => (None, None),
    };
    Ok(PolarizationSearchResult {
        lattice: n.clone(),
        exhaustive: n.rank() == 1 && upper_bound.is_some(),
        upper_bound,
        certificate,
        searched_norm_limit: norm_limit,
        searched_box: coeff_box,
    })
}

/// Independent recheck of a claimed polarization certificate.
pub fn verify_certificate(n: &Lattice, v: &[BigInt], claimed_degree: &BigInt) -> bool {
    v.len() == n.rank() && &n.norm(v) == claimed_degree && in_cn(n, v).unwrap_or(false)
}
