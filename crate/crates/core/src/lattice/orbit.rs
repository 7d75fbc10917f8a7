//! Moving primitive vectors to a normal form with Eichler transvections.
//!
//! The lattice must have the shape `U ⊕ U ⊕ R`, with the two hyperbolic
//! planes occupying basis positions `(e₁, f₁, e₂, f₂) = (0, 1, 2, 3)`.
//! Writing `v = α e₁ + β f₁ + α′ e₂ + β′ f₂ + r`, transvections built from
//! the isotropic vectors of one plane and vectors of the other act on
//! `(α, β, α′, β′)` by elementary Euclidean moves. They concentrate
//! `gcd(v · L)` (the divisor of `v`) in `α`, clear the second plane and
//! reduce `r` modulo `α·R`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::isometry::{eichler_transvection, Isometry};
use super::Lattice;
use crate::error::{Error, Result};
use crate::linalg::{content, IntMatrix, IntVector};

const E1: usize = 0;
const F1: usize = 1;
const E2: usize = 2;
const F2: usize = 3;

/// Normal form of a primitive vector under the transvection group.
#[derive(Debug, Clone)]
pub struct OrbitRepresentative {
    /// Isometry carrying the input vector to `image`.
    pub isometry: Isometry,
    /// `divisor·e₁ + β·f₁ + r` with `r` reduced modulo `divisor·R`.
    pub image: IntVector,
    /// `gcd(v · L)`.
    pub divisor: BigInt,
    /// `r / divisor` in the coordinates of `R`: the class of `v / divisor`
    /// in the discriminant group (zero when the divisor is 1).
    pub discriminant_class: Vec<BigRational>,
}

impl OrbitRepresentative {
    /// True when the image is `e₁ + (v²/2)·f₁`, i.e. `e₁ − d·f₁` for `v² = −2d`.
    pub fn is_canonical(&self) -> bool {
        self.divisor.is_one() && self.image.iter().skip(E2).all(Zero::is_zero)
    }
}

/// Checks that basis vectors 0..4 span an orthogonal summand `U ⊕ U`.
pub fn has_hyperbolic_frame(n: &Lattice) -> bool {
    if n.rank() < 4 {
        return false;
    }
    let g = n.gram();
    let uu = IntMatrix::from_i64(&[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
    (0..4).all(|i| (0..4).all(|j| g[(i, j)] == uu[(i, j)]))
        && (0..4).all(|i| (4..n.rank()).all(|j| g[(i, j)].is_zero()))
}

/// The vector `e₁ − d·f₁` of norm `−2d`.
pub fn canonical_vector(rank: usize, d: &BigInt) -> IntVector {
    let mut v = vec![BigInt::zero(); rank];
    v[E1] = BigInt::one();
    v[F1] = -d;
    v
}

struct Walker<'a> {
    n: &'a Lattice,
    v: IntVector,
    g: IntMatrix,
}

impl Walker<'_> {
    fn unit(&self, i: usize, x: &BigInt) -> IntVector {
        let mut u = vec![BigInt::zero(); self.n.rank()];
        u[i] = x.clone();
        u
    }

    fn apply(&mut self, t: &Isometry) {
        self.v = t.apply(&self.v);
        self.g = t.matrix() * &self.g;
    }

    /// `E(basis[iso], a)`
    fn transvect(&mut self, iso: usize, a: &IntVector) -> Result<()> {
        if a.iter().all(Zero::is_zero) {
            return Ok(());
        }
        let f = self.unit(iso, &BigInt::one());
        let t = eichler_transvection(&f, a, self.n)?;
        self.apply(&t);
        Ok(())
    }

    /// `E(iso, x·basis[dir])`
    fn mv(&mut self, iso: usize, dir: usize, x: &BigInt) -> Result<()> {
        if x.is_zero() {
            return Ok(());
        }
        let a = self.unit(dir, x);
        self.transvect(iso, &a)
    }

    fn c(&self, i: usize) -> &BigInt {
        &self.v[i]
    }

    /// Makes `α` divide `β, α′, β′` and clears `α′, β′`.
    fn concentrate(&mut self) -> Result<()> {
        loop {
            if self.c(E1).is_zero() {
                if !self.c(E2).is_zero() {
                    // α −= x·α′ with x = −1
                    self.mv(E1, F2, &BigInt::from(-1))?;
                } else if !self.c(F2).is_zero() {
                    self.mv(E1, E2, &BigInt::from(-1))?;
                } else if !self.c(F1).is_zero() {
                    // α′ += β
                    self.mv(E1, E2, &BigInt::one())?;
                } else {
                    return Ok(());
                }
                continue;
            }
            let alpha = self.c(E1).clone();
            let x = -self.c(E2).div_floor(&alpha);
            self.mv(F1, E2, &x)?;
            let x = -self.c(F2).div_floor(&alpha);
            self.mv(F1, F2, &x)?;
            if !self.c(E2).is_zero() {
                let x = step_quotient(self.c(E1), self.c(E2));
                self.mv(E1, F2, &x)?;
                continue;
            }
            if !self.c(F2).is_zero() {
                let x = step_quotient(self.c(E1), self.c(F2));
                self.mv(E1, E2, &x)?;
                continue;
            }
            if !self.c(F1).is_multiple_of(self.c(E1)) {
                self.mv(E1, E2, &BigInt::one())?;
                continue;
            }
            return Ok(());
        }
    }
}

/// Carries a primitive vector of nonzero norm to its orbit normal form.
///
/// For unimodular `n` (more generally whenever the divisor is 1 and `R` is
/// even) the image is exactly `e₁ + (v²/2)·f₁`. Otherwise the image keeps
/// the divisor in front of `e₁` and a residue `r` that records the
/// discriminant class of `v/divisor`.
pub fn move_primitive_vector(v: &[BigInt], n: &Lattice) -> Result<OrbitRepresentative> {
    n.check_vector(v)?;
    if !has_hyperbolic_frame(n) {
        return Err(Error::HyperbolicFrameMissing);
    }
    let c = content(v);
    if !c.is_one() {
        return Err(Error::NotPrimitive { content: c });
    }
    let vv = n.norm(v);
    if vv.is_zero() {
        return Err(Error::ZeroNorm);
    }

    let rank = n.rank();
    let rest = 4..rank;
    let mut w = Walker {
        n,
        v: v.to_vec(),
        g: IntMatrix::identity(rank),
    };

    loop {
        w.concentrate()?;
        // pairings of r with the basis of R
        let r_pairs: Vec<BigInt> = {
            let gv = n.gram().mul_vec(&w.v);
            gv[rest.clone()].to_vec()
        };
        let alpha = w.c(E1).abs();
        let h = r_pairs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if alpha.is_one() || (!alpha.is_zero() && h.is_multiple_of(&alpha)) {
            break;
        }
        if h.is_zero() {
            // α = 0 here forces v ∈ R with r ⟂ R
            return Err(Error::Degenerate);
        }
        // a ∈ R with r·a = h, then α′ = −h via E(e₂, a)
        let coeffs = bezout(&r_pairs);
        let mut a = vec![BigInt::zero(); rank];
        for (k, c) in coeffs.into_iter().enumerate() {
            a[4 + k] = c;
        }
        w.transvect(E2, &a)?;
    }

    if w.c(E1).is_negative() {
        let t = Isometry::minus_identity(n);
        w.apply(&t);
    }
    let alpha = w.c(E1).clone();
    let mut a = vec![BigInt::zero(); rank];
    for i in rest.clone() {
        a[i] = -w.c(i).div_floor(&alpha);
    }
    w.transvect(F1, &a)?;

    let image = w.v.clone();
    let isometry = Isometry::new(n.clone(), w.g)?;
    if isometry.apply(v) != image || n.norm(&image) != vv {
        return Err(Error::Invariant(
            "orbit walk lost track of the vector".into(),
        ));
    }
    let discriminant_class = rest
        .map(|i| BigRational::new(image[i].clone(), alpha.clone()))
        .collect();
    Ok(OrbitRepresentative {
        isometry,
        image,
        divisor: alpha,
        discriminant_class,
    })
}

/// Quotient leaving a nonzero remainder of `a` modulo `b`, smaller than `|b|`.
fn step_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.is_zero() {
        q - 1
    } else {
        q
    }
}

/// Coefficients `c` with `Σ cᵢ·xᵢ = gcd(x)`.
fn bezout(xs: &[BigInt]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); xs.len()];
    let mut g = BigInt::zero();
    for (i, x) in xs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let e = g.extended_gcd(x);
        // e.gcd = e.x·g + e.y·x
        for c in coeffs.iter_mut().take(i) {
            *c *= &e.x;
        }
        coeffs[i] = e.y;
        g = e.gcd;
    }
    if g.is_negative() {
        for c in coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    coeffs
}
