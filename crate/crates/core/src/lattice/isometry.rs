use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::discriminant::{discriminant_group, is_integral};
use super::Lattice;
use crate::error::{Error, Result};
use crate::linalg::{det_exact, IntMatrix, IntVector};

/// An automorphism `g` of a lattice: `gᵀ · G · g = G`, `det g = ±1`.
/// Acts on coordinate column vectors from the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    lattice: Lattice,
    matrix: IntMatrix,
}

impl Isometry {
    pub fn new(lattice: Lattice, matrix: IntMatrix) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Shape(format!(
                "isometry matrix is {}x{}, lattice rank is {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if &matrix.congruence(lattice.gram())? != lattice.gram()
            || !det_exact(&matrix)?.abs().is_one()
        {
            return Err(Error::NotIsometry);
        }
        Ok(Isometry { lattice, matrix })
    }

    pub fn identity(lattice: &Lattice) -> Self {
        Isometry {
            matrix: IntMatrix::identity(lattice.rank()),
            lattice: lattice.clone(),
        }
    }

    pub fn minus_identity(lattice: &Lattice) -> Self {
        Isometry {
            matrix: IntMatrix::identity(lattice.rank()).neg(),
            lattice: lattice.clone(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> IntVector {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        if self.lattice.gram() != other.lattice.gram() {
            return Err(Error::Shape("isometries of different lattices".into()));
        }
        Ok(Isometry {
            lattice: self.lattice.clone(),
            matrix: self.matrix.checked_mul(&other.matrix)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// The reflection `x ↦ x − (2(x·w)/w²)·w`.
pub fn reflection(w: &[BigInt], n: &Lattice) -> Result<Isometry> {
    n.check_vector(w)?;
    let ww = n.norm(w);
    if ww.is_zero() {
        return Err(Error::IsotropicReflection);
    }
    let gw = n.gram().mul_vec(w);
    let mut columns = Vec::with_capacity(n.rank());
    for (j, xw) in gw.iter().enumerate() {
        let num = BigInt::from(2) * xw;
        if !num.is_multiple_of(&ww) {
            let r = BigRational::new(num, ww.clone());
            return Err(Error::ReflectionNotIntegral {
                basis_index: j,
                numerator: r.numer().clone(),
                denominator: r.denom().clone(),
            });
        }
        let c = num / &ww;
        let mut col: IntVector = w.iter().map(|x| -(&c * x)).collect();
        col[j] += 1;
        columns.push(col);
    }
    Isometry::new(n.clone(), IntMatrix::from_columns(n.rank(), &columns)?)
}

/// Eichler transvection `x ↦ x + (x·f)a − (x·a)f − ½a²(x·f)f` for isotropic
/// `f` and `a ⟂ f`.
pub fn eichler_transvection(f: &[BigInt], a: &[BigInt], n: &Lattice) -> Result<Isometry> {
    n.check_vector(f)?;
    n.check_vector(a)?;
    if !n.norm(f).is_zero() {
        return Err(Error::TransvectionPrecondition("f is not isotropic".into()));
    }
    if !n.pair(a, f).is_zero() {
        return Err(Error::TransvectionPrecondition(
            "a is not orthogonal to f".into(),
        ));
    }
    let aa = n.norm(a);
    let gf = n.gram().mul_vec(f);
    let ga = n.gram().mul_vec(a);
    let two = BigInt::from(2);
    if aa.is_odd() && gf.iter().any(|x| x.is_odd()) {
        return Err(Error::TransvectionNotIntegral { norm: aa });
    }
    let mut columns = Vec::with_capacity(n.rank());
    for j in 0..n.rank() {
        let xf = &gf[j];
        let xa = &ga[j];
        let half = (&aa * xf) / &two;
        let col: IntVector = (0..n.rank())
            .map(|i| {
                let mut c = xf * &a[i] - xa * &f[i] - &half * &f[i];
                if i == j {
                    c += 1;
                }
                c
            })
            .collect();
        columns.push(col);
    }
    Isometry::new(n.clone(), IntMatrix::from_columns(n.rank(), &columns)?)
}

/// True iff `g` acts trivially on `N∨/N`.
pub fn in_discriminant_kernel(g: &Isometry) -> Result<bool> {
    let form = discriminant_group(g.lattice())?;
    for x in &form.generators {
        let gx: Vec<BigRational> = (0..x.len())
            .map(|i| {
                x.iter()
                    .enumerate()
                    .map(|(j, xj)| xj * BigRational::from_integer(g.matrix()[(i, j)].clone()))
                    .sum::<BigRational>()
            })
            .collect();
        let diff: Vec<BigRational> = gx.iter().zip(x).map(|(a, b)| a - b).collect();
        if !is_integral(&diff) {
            return Ok(false);
        }
    }
    Ok(true)
}
