use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::Lattice;
use crate::error::{Error, Result};
use crate::linalg::{
    hermite_rows, rational_kernel, smith_normal_form, solve_integer, IntMatrix, IntVector,
    RatMatrix,
};

/// A metric embedding `source ↪ target`: `matrix` is `target.rank × source.rank`
/// and satisfies `matrixᵀ · G_target · matrix = G_source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeEmbedding {
    source: Lattice,
    target: Lattice,
    matrix: IntMatrix,
}

impl LatticeEmbedding {
    pub fn new(source: Lattice, target: Lattice, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::Shape(format!(
                "embedding matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.rank(),
                source.rank()
            )));
        }
        if &matrix.congruence(target.gram())? != source.gram() {
            return Err(Error::NotMetric);
        }
        if smith_normal_form(&matrix).rank() != matrix.cols() {
            return Err(Error::DependentColumns);
        }
        Ok(LatticeEmbedding {
            source,
            target,
            matrix,
        })
    }

    /// The sublattice of `target` spanned by `columns`, with its induced form.
    pub fn from_columns(target: &Lattice, columns: &[IntVector]) -> Result<Self> {
        let matrix = IntMatrix::from_columns(target.rank(), columns)?;
        let gram = matrix.congruence(target.gram())?;
        Self::new(Lattice::new(gram)?, target.clone(), matrix)
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn image_columns(&self) -> Vec<IntVector> {
        self.matrix.columns()
    }

    pub fn apply(&self, x: &[BigInt]) -> IntVector {
        self.matrix.mul_vec(x)
    }

    pub fn with_source_label(mut self, label: impl Into<String>) -> Self {
        self.source = self.source.with_label(label);
        self
    }
}

/// True iff the cokernel of the embedding matrix is torsion-free.
pub fn is_primitive(sub: &LatticeEmbedding) -> bool {
    let snf = smith_normal_form(sub.matrix());
    let factors = snf.invariant_factors();
    factors.len() == sub.matrix().cols() && factors.iter().all(One::is_one)
}

/// `(ℚ-span of the image) ∩ target`, with the induced form.
pub fn saturate(sub: &LatticeEmbedding) -> Result<LatticeEmbedding> {
    let b = sub.matrix();
    let k = b.cols();
    let snf = smith_normal_form(b);
    let u_inv = RatMatrix::from(&snf.u)
        .inverse()?
        .to_integer()
        .ok_or_else(|| Error::Invariant("SNF row transform is not unimodular".into()))?;
    let basis = hermite_rows((0..k).map(|j| u_inv.column(j)).collect());
    let out = LatticeEmbedding::from_columns(sub.target(), &basis)?;
    Ok(match sub.source().label() {
        Some(l) => out.with_source_label(format!("sat({l})")),
        None => out,
    })
}

/// Index of the image of `sub` in its saturation.
pub fn saturation_index(sub: &LatticeEmbedding) -> BigInt {
    smith_normal_form(sub.matrix())
        .invariant_factors()
        .iter()
        .product::<BigInt>()
}

/// The saturated sublattice of `target` orthogonal to the image of `sub`.
pub fn orthogonal_complement(sub: &LatticeEmbedding) -> Result<LatticeEmbedding> {
    if !sub.target().is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let constraints = sub.matrix().transpose().checked_mul(sub.target().gram())?;
    let basis = rational_kernel(&constraints);
    if basis.is_empty() {
        let empty = Lattice::new(IntMatrix::zeros(0, 0))?;
        return LatticeEmbedding::new(
            empty,
            sub.target().clone(),
            IntMatrix::zeros(sub.target().rank(), 0),
        );
    }
    let out = LatticeEmbedding::from_columns(sub.target(), &basis)?;
    Ok(match sub.source().label() {
        Some(l) => out.with_source_label(format!("({l})^perp")),
        None => out,
    })
}

/// `(|disc N|, |disc N′|, [M : N + N′])` for mutually orthogonal saturated
/// sublattices of a unimodular lattice `M` with complementary ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscComplementReport {
    pub disc_n: BigInt,
    pub disc_nprime: BigInt,
    pub index: BigInt,
}

impl DiscComplementReport {
    pub fn as_triple(&self) -> (BigInt, BigInt, BigInt) {
        (
            self.disc_n.clone(),
            self.disc_nprime.clone(),
            self.index.clone(),
        )
    }
}

pub fn check_disc_complement(
    n: &LatticeEmbedding,
    nprime: &LatticeEmbedding,
) -> Result<DiscComplementReport> {
    let mut problems = Vec::new();
    if n.target().gram() != nprime.target().gram() {
        problems.push("embeddings have different targets".to_string());
    } else {
        if !n.target().is_unimodular() {
            problems.push(format!(
                "target is not unimodular (det {})",
                n.target().det()
            ));
        }
        let cross = n
            .matrix()
            .transpose()
            .checked_mul(&n.target().gram().checked_mul(nprime.matrix())?)?;
        if !cross.is_zero() {
            problems.push("images are not orthogonal".to_string());
        }
        if n.source().rank() + nprime.source().rank() != n.target().rank() {
            problems.push(format!(
                "ranks {} + {} do not add up to {}",
                n.source().rank(),
                nprime.source().rank(),
                n.target().rank()
            ));
        }
    }
    if !is_primitive(n) {
        problems.push("N is not saturated".to_string());
    }
    if !is_primitive(nprime) {
        problems.push("N' is not saturated".to_string());
    }
    if !problems.is_empty() {
        return Err(Error::Preconditions(problems));
    }

    let disc_n = n.source().det().abs();
    let disc_nprime = nprime.source().det().abs();
    let stacked = n.matrix().hstack(nprime.matrix())?;
    let index = smith_normal_form(&stacked)
        .invariant_factors()
        .iter()
        .product::<BigInt>();
    if disc_n != disc_nprime || disc_n != index {
        return Err(Error::Invariant(format!(
            "discriminants {disc_n}, {disc_nprime} and index {index} disagree"
        )));
    }
    Ok(DiscComplementReport {
        disc_n,
        disc_nprime,
        index,
    })
}

/// Coordinates of `image` in terms of the embedding's source basis, if the
/// vector lies in the image.
pub fn preimage(sub: &LatticeEmbedding, image: &[BigInt]) -> Option<IntVector> {
    solve_integer(sub.matrix(), image)
}
