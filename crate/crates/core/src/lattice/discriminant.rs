use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Lattice;
use crate::error::{Error, Result};
use crate::linalg::smith_normal_form;

/// The finite quadratic module `N∨/N`.
///
/// Generators are expressed in the rational coordinates of `N ⊗ ℚ`; the
/// `i`-th generator has order `invariant_factors[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantForm {
    pub invariant_factors: Vec<BigInt>,
    pub generators: Vec<Vec<BigRational>>,
    /// `b(gᵢ, gⱼ) mod 1`, reduced into `[0, 1)`.
    pub bilinear: Vec<Vec<BigRational>>,
    /// `q(gᵢ) = gᵢ² mod 2`, reduced into `[0, 2)`.
    pub quadratic: Vec<BigRational>,
}

impl DiscriminantForm {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

pub(crate) fn reduce_mod(x: &BigRational, m: &BigInt) -> BigRational {
    let m = BigRational::from_integer(m.clone());
    let q = (x / &m).floor();
    x - q * m
}

/// Invariant factors and finite quadratic form of `N∨/N`.
pub fn discriminant_group(n: &Lattice) -> Result<DiscriminantForm> {
    if !n.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let snf = smith_normal_form(n.gram());
    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in snf.diagonal().into_iter().enumerate() {
        if d.is_one() {
            continue;
        }
        let g: Vec<BigRational> = snf
            .v
            .column(i)
            .into_iter()
            .map(|x| BigRational::new(x, d.clone()))
            .collect();
        invariant_factors.push(d);
        generators.push(g);
    }
    let gram = n.gram();
    let pair = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let gij = &gram[(i, j)];
                if !gij.is_zero() {
                    acc += xi * yj * BigRational::from_integer(gij.clone());
                }
            }
        }
        acc
    };
    let one = BigInt::one();
    let two = BigInt::from(2);
    let bilinear = generators
        .iter()
        .map(|x| {
            generators
                .iter()
                .map(|y| reduce_mod(&pair(x, y), &one))
                .collect()
        })
        .collect();
    let quadratic = generators
        .iter()
        .map(|x| reduce_mod(&pair(x, x), &two))
        .collect();
    Ok(DiscriminantForm {
        invariant_factors,
        generators,
        bilinear,
        quadratic,
    })
}

/// Denominator-cleared check that a rational vector is integral.
pub(crate) fn is_integral(v: &[BigRational]) -> bool {
    v.iter()
        .all(|x| x.denom().is_one() || x.numer().is_multiple_of(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::standard::{direct_sum, e8, hyperbolic_u, l_d, rank_one};
    use num_traits::Signed;

    #[test]
    fn unimodular_lattices_have_trivial_group() {
        assert!(discriminant_group(&e8()).unwrap().is_trivial());
        assert!(discriminant_group(&hyperbolic_u()).unwrap().is_trivial());
    }

    #[test]
    fn l_d_is_cyclic_of_order_2d() {
        for d in 1..=20i64 {
            let form = discriminant_group(&l_d(d).unwrap()).unwrap();
            assert!(form.is_cyclic());
            assert_eq!(form.order(), BigInt::from(2 * d));
            // generator e/2d of ⟨2d⟩: q = 1/(2d)
            assert_eq!(
                form.quadratic[0],
                BigRational::new(BigInt::one(), BigInt::from(2 * d))
            );
        }
    }

    #[test]
    fn order_matches_determinant() {
        let n = direct_sum(&rank_one(4), &direct_sum(&rank_one(6), &hyperbolic_u()));
        let form = discriminant_group(&n).unwrap();
        assert_eq!(form.order(), n.det().abs());
        assert_eq!(
            form.invariant_factors,
            vec![BigInt::from(2), BigInt::from(12)]
        );
        for row in &form.bilinear {
            for x in row {
                assert!(!x.is_negative() && x < &BigRational::one());
            }
        }
    }

    #[test]
    fn degenerate_is_rejected() {
        let z = Lattice::from_i64(&[[0, 0], [0, 1]]).unwrap();
        assert_eq!(discriminant_group(&z), Err(Error::Degenerate));
    }
}
