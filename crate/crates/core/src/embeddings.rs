//! Explicit constructions: four-square witnesses, `⟨2d⟩ ↪ ⟨1⟩⁵`,
//! `L_d ↪ L`, and the vector `v_d ∈ Λ` with `v_d^⊥ ≅ L_d`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lattice::{
    big_l, direct_sum_all, k3_lattice, l_d, orthogonal_complement, rank_one, Lattice,
    LatticeEmbedding,
};
use crate::linalg::{det_exact, solve_integer, IntMatrix, IntVector};

/// `m = z² + w² + v² + u²` with `z ≥ w ≥ v ≥ u ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FourSquareWitness {
    pub m: u64,
    pub parts: [u64; 4],
}

impl FourSquareWitness {
    pub fn is_valid(&self) -> bool {
        let sum: u128 = self
            .parts
            .iter()
            .map(|&p| u128::from(p) * u128::from(p))
            .sum();
        sum == u128::from(self.m) && self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

/// The lexicographically largest descending four-square representation.
///
/// Descending search on each part; the first hit in this order is the
/// lexicographic maximum.
pub fn four_squares(m: u64) -> FourSquareWitness {
    let top = m.isqrt();
    for z in (0..=top).rev() {
        let r1 = m - z * z;
        if r1 > 3 * z * z {
            break;
        }
        for w in (0..=z.min(r1.isqrt())).rev() {
            let r2 = r1 - w * w;
            // remaining two squares must fit under w each
            if r2 > 2 * w * w {
                break;
            }
            for v in (0..=w.min(r2.isqrt())).rev() {
                let r3 = r2 - v * v;
                if r3 > v * v {
                    break;
                }
                let u = r3.isqrt();
                if u * u == r3 {
                    return FourSquareWitness {
                        m,
                        parts: [z, w, v, u],
                    };
                }
            }
        }
    }
    unreachable!("every nonnegative integer is a sum of four squares")
}

fn check_d(d: i64) -> Result<()> {
    if d <= 0 {
        return Err(Error::InvalidParameter(format!(
            "d must be positive, got {d}"
        )));
    }
    Ok(())
}

/// Image of the generator of `⟨2d⟩` in `⟨1⟩⁵`: `(1, z, w, v, u)` with
/// `2d = 1 + z² + w² + v² + u²`.
pub fn i5_image(d: i64) -> Result<IntVector> {
    check_d(d)?;
    let wit = four_squares(2 * d as u64 - 1);
    let mut col = vec![BigInt::one()];
    col.extend(wit.parts.iter().map(|&p| BigInt::from(p)));
    Ok(col)
}

fn i5() -> Lattice {
    let one = rank_one(1);
    direct_sum_all([&one, &one, &one, &one, &one]).with_label("<1>^5")
}

/// `⟨2d⟩ ↪ ⟨1⟩⁵`, primitive because of the leading coordinate 1.
pub fn embed_2d_in_i5(d: i64) -> Result<LatticeEmbedding> {
    let col = i5_image(d)?;
    LatticeEmbedding::new(rank_one(2 * d), i5(), IntMatrix::from_columns(5, &[col])?)
}

/// `i_d : L_d ↪ L`: identity on `E8² ⊕ U²`, [`embed_2d_in_i5`] on `⟨2d⟩`.
pub fn embed_ld_in_l(d: i64) -> Result<LatticeEmbedding> {
    let col = i5_image(d)?;
    let mut m = IntMatrix::zeros(25, 21);
    for i in 0..20 {
        m[(i, i)] = BigInt::one();
    }
    for (k, x) in col.into_iter().enumerate() {
        m[(20 + k, 20)] = x;
    }
    LatticeEmbedding::new(l_d(d)?, big_l(), m)
}

/// `Λ_d = i_d(L_d)^⊥ ⊂ L` as an embedding.
pub fn ld_complement_embedding(d: i64) -> Result<LatticeEmbedding> {
    Ok(orthogonal_complement(&embed_ld_in_l(d)?)?.with_source_label(format!("Lambda_{d}")))
}

/// `Λ_d = i_d(L_d)^⊥ ⊂ L`, a rank-4 lattice with `|disc| = 2d`.
pub fn complement_of_ld_in_l(d: i64) -> Result<Lattice> {
    Ok(ld_complement_embedding(d)?.source().clone())
}

/// `v_d` together with its complement in `Λ` and the identification with `L_d`.
#[derive(Debug, Clone)]
pub struct VdData {
    /// `e − d·f` in the last hyperbolic plane of `Λ`.
    pub vector: IntVector,
    /// `v_d^⊥ ⊂ Λ` in saturated Hermite basis.
    pub complement: LatticeEmbedding,
    /// Bijective isometry from the complement onto `L_d`.
    pub isometry: LatticeEmbedding,
}

pub fn v_d_in_k3(d: i64) -> Result<VdData> {
    check_d(d)?;
    let k3 = k3_lattice();
    let dd = BigInt::from(d);
    let mut vector = vec![BigInt::from(0); 22];
    vector[20] = BigInt::one();
    vector[21] = -&dd;
    let v_in = LatticeEmbedding::from_columns(&k3, std::slice::from_ref(&vector))?;
    let complement = orthogonal_complement(&v_in)?.with_source_label(format!("v_{d}^perp"));

    // E8² ⊕ U² coordinates, then e + d·f
    let mut nice = IntMatrix::zeros(22, 21);
    for i in 0..20 {
        nice[(i, i)] = BigInt::one();
    }
    nice[(20, 20)] = BigInt::one();
    nice[(21, 20)] = dd;
    let columns = complement
        .image_columns()
        .iter()
        .map(|c| solve_integer(&nice, c))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invariant("complement not contained in E8²⊕U²⊕⟨e+df⟩".into()))?;
    let t = IntMatrix::from_columns(21, &columns)?;
    if !det_exact(&t)?.abs().is_one() {
        return Err(Error::Invariant(
            "complement basis change is not unimodular".into(),
        ));
    }
    let isometry = LatticeEmbedding::new(complement.source().clone(), l_d(d)?, t)?;
    Ok(VdData {
        vector,
        complement,
        isometry,
    })
}
