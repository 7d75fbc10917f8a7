use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::element::CliffordElement;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// `g = v·w` together with `g⁻¹ = (w·v) / (v²·w²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSpinElement {
    pub g: CliffordElement,
    pub g_inv_numerator: CliffordElement,
    pub g_inv_denominator: BigInt,
}

pub fn gspin_generator(v: &[BigInt], w: &[BigInt], host: &Arc<Lattice>) -> Result<GSpinElement> {
    let nv = host.norm(v);
    let nw = host.norm(w);
    if nv.is_zero() || nw.is_zero() {
        return Err(Error::IsotropicVector);
    }
    let ve = CliffordElement::vector(host, v)?;
    let we = CliffordElement::vector(host, w)?;
    Ok(GSpinElement {
        g: ve.mul(&we)?,
        g_inv_numerator: we.mul(&ve)?,
        g_inv_denominator: nv * nw,
    })
}

impl GSpinElement {
    pub fn host(&self) -> &Arc<Lattice> {
        self.g.host()
    }

    /// Coordinates of `g·u·g⁻¹`; errors if the result leaves degree one.
    pub fn conjugate(&self, u: &[BigInt]) -> Result<Vec<BigRational>> {
        let ue = CliffordElement::vector(self.host(), u)?;
        let z = self.g.mul(&ue)?.mul(&self.g_inv_numerator)?;
        let coords = z
            .as_vector()
            .ok_or_else(|| Error::Invariant("conjugate of a vector is not a vector".into()))?;
        Ok(coords
            .into_iter()
            .map(|c| BigRational::new(c, self.g_inv_denominator.clone()))
            .collect())
    }
}

/// Outcome of [`conjugation_preserves_lattice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationCheck {
    pub preserves: bool,
    /// First basis index whose conjugate is not integral, with that conjugate.
    pub offending: Option<(usize, Vec<BigRational>)>,
}

pub fn conjugation_preserves_lattice(gs: &GSpinElement) -> Result<ConjugationCheck> {
    let n = gs.host().rank();
    for i in 0..n {
        let mut e = vec![BigInt::zero(); n];
        e[i] = BigInt::from(1);
        let image = gs.conjugate(&e)?;
        if image.iter().any(|c| !c.is_integer()) {
            return Ok(ConjugationCheck {
                preserves: false,
                offending: Some((i, image)),
            });
        }
    }
    Ok(ConjugationCheck {
        preserves: true,
        offending: None,
    })
}
