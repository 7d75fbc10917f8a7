//! Finite lists of lattices with bounded rank and discriminant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::lattice::{orthogonal_complement, saturation_index, Lattice, LatticeEmbedding};
use crate::linalg::{det_exact, signature, IntMatrix};
use crate::par::{map_slice, Parallelism};
use crate::roots::short_vectors_up_to;

pub const MAX_ENUMERATION_RANK: usize = 3;

/// Canonical positive-definite Gram matrices of rank `rank` and determinant
/// at most `max_disc`, sorted by determinant and then by upper triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedFormList {
    pub rank: usize,
    pub max_disc: u64,
    pub even_only: bool,
    pub forms: Vec<IntMatrix>,
}

impl ReducedFormList {
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Number of forms per determinant.
    pub fn counts_by_disc(&self) -> BTreeMap<BigInt, usize> {
        let mut m = BTreeMap::new();
        for f in &self.forms {
            *m.entry(det_exact(f).expect("square")).or_insert(0) += 1;
        }
        m
    }

    /// `disc,count` table.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("disc,count\n");
        for (d, c) in self.counts_by_disc() {
            s.push_str(&format!("{d},{c}\n"));
        }
        s
    }
}

fn check_rank(rank: usize) -> Result<()> {
    if (1..=MAX_ENUMERATION_RANK).contains(&rank) {
        Ok(())
    } else {
        Err(Error::RankOutOfRange {
            rank,
            min: 1,
            max: MAX_ENUMERATION_RANK,
        })
    }
}

fn upper_triangle(g: &IntMatrix) -> Vec<BigInt> {
    let n = g.rows();
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| g[(i, j)].clone())
        .collect()
}

fn sort_key(g: &IntMatrix) -> (BigInt, Vec<BigInt>) {
    (det_exact(g).expect("square"), upper_triangle(g))
}

fn gram_of(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

fn det3(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Whether the chosen vectors extend to a basis of `Z^n`.
fn extends_to_basis(vs: &[&[i64]], n: usize) -> bool {
    match vs.len() {
        1 => gcd_all(vs[0]) == 1,
        2 if n == 2 => (vs[0][0] * vs[1][1] - vs[0][1] * vs[1][0]).abs() == 1,
        2 => {
            let (x, y) = (vs[0], vs[1]);
            gcd_all(&[
                x[0] * y[1] - x[1] * y[0],
                x[0] * y[2] - x[2] * y[0],
                x[1] * y[2] - x[2] * y[1],
            ]) == 1
        }
        3 => {
            det3([
                [vs[0][0], vs[1][0], vs[2][0]],
                [vs[0][1], vs[1][1], vs[2][1]],
                [vs[0][2], vs[1][2], vs[2][2]],
            ])
            .abs()
                == 1
        }
        _ => false,
    }
}

/// Canonical representative of the isometry class of a positive-definite
/// Gram matrix of rank at most 3.
///
/// Among all bases the diagonal is minimised lexicographically (it equals
/// the successive minima), then the off-diagonal entries are maximised.
pub fn canonical_form(gram: &IntMatrix) -> Result<IntMatrix> {
    let n = gram.rows();
    check_rank(n)?;
    let lat = Lattice::new(gram.clone())?;
    if !lat.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    if n == 1 {
        return Ok(gram.clone());
    }
    let g: Vec<Vec<i64>> = gram
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().expect("small entries"))
                .collect()
        })
        .collect();
    let bound = (0..n).map(|i| g[i][i]).max().expect("rank >= 1");
    let short: Vec<(i64, Vec<i64>)> =
        short_vectors_up_to(&lat, &BigInt::from(bound), Parallelism::Sequential)?
            .into_iter()
            .map(|(nm, v)| {
                (
                    nm.to_i64().expect("small norm"),
                    v.iter()
                        .map(|x| x.to_i64().expect("small coordinate"))
                        .collect(),
                )
            })
            .collect();
    let pair = |x: &[i64], y: &[i64]| -> i64 {
        (0..n)
            .map(|i| (0..n).map(|j| x[i] * g[i][j] * y[j]).sum::<i64>())
            .sum()
    };

    let mut best: Option<(Vec<i64>, Vec<i64>)> = None;
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    search(&short, n, &pair, &mut chosen, &mut best);
    let (diag, neg_off) = best.ok_or_else(|| Error::Invariant("no reduced basis found".into()))?;
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = diag[i];
    }
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            rows[i][j] = -neg_off[k];
            rows[j][i] = -neg_off[k];
            k += 1;
        }
    }
    Ok(gram_of(&rows))
}

type Key = (Vec<i64>, Vec<i64>);

fn search<F: Fn(&[i64], &[i64]) -> i64>(
    short: &[(i64, Vec<i64>)],
    n: usize,
    pair: &F,
    chosen: &mut Vec<usize>,
    best: &mut Option<Key>,
) {
    let k = chosen.len();
    if k == n {
        let diag: Vec<i64> = chosen.iter().map(|&i| short[i].0).collect();
        let mut off = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                off.push(-pair(&short[chosen[i]].1, &short[chosen[j]].1));
            }
        }
        let key = (diag, off);
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return;
    }
    let start = chosen.last().map_or(0, |&i| short[i].0);
    for (idx, (nm, v)) in short.iter().enumerate() {
        if *nm < start {
            continue;
        }
        if let Some((bd, _)) = best {
            let prefix: Vec<i64> = chosen.iter().map(|&i| short[i].0).chain([*nm]).collect();
            if prefix.as_slice() > &bd[..=k] {
                break;
            }
        }
        let mut vs: Vec<&[i64]> = chosen.iter().map(|&i| short[i].1.as_slice()).collect();
        vs.push(v);
        if !extends_to_basis(&vs, n) {
            continue;
        }
        chosen.push(idx);
        search(short, n, pair, chosen, best);
        chosen.pop();
    }
}

fn rank3_candidates(max_disc: i64) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let cap = 2 * max_disc;
    for a in 1..=cap {
        for b in a..=cap / a {
            for c in b..=cap / (a * b) {
                let h1 = a / 2;
                let h2 = b / 2;
                for x in -h1..=h1 {
                    for y in -h1..=h1 {
                        for z in -h2..=h2 {
                            let m = [[a, x, y], [x, b, z], [y, z, c]];
                            let d = det3(m);
                            if d <= 0 || d > max_disc || a * b - x * x <= 0 {
                                continue;
                            }
                            out.push(m.iter().map(|r| r.to_vec()).collect());
                        }
                    }
                }
            }
        }
    }
    out
}

/// Positive-definite lattices of rank `rank` with `0 < det ≤ max_disc`, one
/// per isometry class.
pub fn enumerate_lattices(
    rank: usize,
    max_disc: u64,
    even_only: bool,
    mode: Parallelism,
) -> Result<ReducedFormList> {
    check_rank(rank)?;
    let dmax = i64::try_from(max_disc)
        .map_err(|_| Error::InvalidParameter("max_disc too large".into()))?;
    let mut forms: Vec<IntMatrix> = match rank {
        1 => (1..=dmax).map(|a| gram_of(&[vec![a]])).collect(),
        2 => {
            let mut v = Vec::new();
            for a in 1..=dmax {
                for b in 0..=a / 2 {
                    for c in a.. {
                        if a * c - b * b > dmax {
                            break;
                        }
                        v.push(gram_of(&[vec![a, b], vec![b, c]]));
                    }
                }
            }
            v
        }
        _ => {
            let candidates = rank3_candidates(dmax);
            let canon = map_slice(mode, &candidates, |m| canonical_form(&gram_of(m)));
            let mut v = canon.into_iter().collect::<Result<Vec<_>>>()?;
            v.sort_by_key(upper_triangle);
            v.dedup();
            v
        }
    };
    if even_only {
        forms.retain(|f| (0..rank).all(|i| f[(i, i)].is_even()));
    }
    forms.sort_by_cached_key(sort_key);
    Ok(ReducedFormList {
        rank,
        max_disc,
        even_only,
        forms,
    })
}

/// `T = Pic^⊥` and the two discriminant magnitudes, which agree.
#[derive(Debug, Clone)]
pub struct TranscendentalInvariants {
    pub t: LatticeEmbedding,
    pub disc_t: BigInt,
    pub disc_pic: BigInt,
}

pub fn transcendental_invariants(pic: &LatticeEmbedding) -> Result<TranscendentalInvariants> {
    let det = pic.target().det();
    if !det.abs().is_one() {
        return Err(Error::NotUnimodular { det });
    }
    if !saturation_index(pic).is_one() {
        return Err(Error::NotSaturated);
    }
    let t = orthogonal_complement(pic)?;
    let disc_t = t.source().det().abs();
    let disc_pic = pic.source().det().abs();
    if disc_t != disc_pic {
        return Err(Error::Invariant(format!(
            "|disc T| = {disc_t} but |disc Pic| = {disc_pic}"
        )));
    }
    Ok(TranscendentalInvariants {
        t,
        disc_t,
        disc_pic,
    })
}

/// Half-range of the coefficient box used for rank-3 Picard candidates.
pub const PICARD_RANK3_BOX: i64 = 2;

/// Even hyperbolic Gram matrices with `0 < |det| ≤ max_disc`.
///
/// Ranks 1 and 2 are complete up to coefficient normalisation; rank 3 only
/// covers diagonal halves and off-diagonal entries bounded by
/// [`PICARD_RANK3_BOX`]. No isometry testing is done.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardCandidates {
    pub max_rank: usize,
    pub max_disc: u64,
    pub forms: Vec<IntMatrix>,
    pub deduplicated_up_to_isometry: bool,
    pub exhaustive: bool,
}

pub fn bounded_picard_candidates(max_rank: usize, max_disc: u64) -> Result<PicardCandidates> {
    check_rank(max_rank)?;
    let dmax = i64::try_from(max_disc)
        .map_err(|_| Error::InvalidParameter("max_disc too large".into()))?;
    let mut forms = Vec::new();
    let mut k = 1;
    while 2 * k <= dmax {
        forms.push(gram_of(&[vec![2 * k]]));
        k += 1;
    }
    if max_rank >= 2 {
        let mut b = 0;
        while b * b <= dmax {
            let rest = dmax - b * b;
            for a in 0..=rest / 4 {
                for c in 0..=rest / 4 {
                    let d = b * b + 4 * a * c;
                    if d == 0 || d > dmax {
                        continue;
                    }
                    forms.push(gram_of(&[vec![2 * a, b], vec![b, -2 * c]]));
                }
            }
            b += 1;
        }
    }
    if max_rank >= 3 {
        let r = PICARD_RANK3_BOX;
        let mut seen = std::collections::BTreeSet::new();
        for a in -r..=r {
            for b in -r..=r {
                for c in -r..=r {
                    for x in 0..=r {
                        for y in -r..=r {
                            for z in -r..=r {
                                let m = [[2 * a, x, y], [x, 2 * b, z], [y, z, 2 * c]];
                                let d = det3(m).abs();
                                if d == 0 || d > dmax {
                                    continue;
                                }
                                let g =
                                    gram_of(&m.iter().map(|row| row.to_vec()).collect::<Vec<_>>());
                                if signature(&g)?.as_tuple() == (1, 2, 0)
                                    && seen.insert(upper_triangle(&g))
                                {
                                    forms.push(g);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    forms.sort_by_cached_key(|g| {
        (
            g.rows(),
            det_exact(g).expect("square").abs(),
            upper_triangle(g),
        )
    });
    Ok(PicardCandidates {
        max_rank,
        max_disc,
        forms,
        deduplicated_up_to_isometry: false,
        exhaustive: max_rank < 3,
    })
}
