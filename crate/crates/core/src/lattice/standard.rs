use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, det_exact, IntMatrix, Signature};

/// A free ℤ-module with a symmetric integral bilinear form, given by its
/// Gram matrix in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    gram: IntMatrix,
    label: Option<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Lattice { gram, label: None })
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        linalg::bilinear(&self.gram, x, y)
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        linalg::norm(&self.gram, x)
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.gram).expect("Gram matrices are square")
    }

    pub fn signature(&self) -> Signature {
        linalg::signature(&self.gram).expect("Gram matrices are symmetric")
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % 2u32).is_zero())
    }

    pub fn is_positive_definite(&self) -> bool {
        let s = self.signature();
        s.negative == 0 && s.zero == 0
    }

    /// Checks the Hodge-index signature `(1, rank − 1)`.
    pub fn require_hyperbolic(&self) -> Result<()> {
        let s = self.signature();
        let expected_neg = self.rank().saturating_sub(1);
        if self.rank() == 0 || s.positive != 1 || s.negative != expected_neg || s.zero != 0 {
            return Err(Error::SignatureMismatch {
                expected_pos: 1,
                expected_neg,
                pos: s.positive,
                neg: s.negative,
                zero: s.zero,
            });
        }
        Ok(())
    }

    pub(crate) fn check_vector(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::Shape(format!(
                "vector of length {} in a rank-{} lattice",
                v.len(),
                self.rank()
            )));
        }
        Ok(())
    }
}

/// Standard Dynkin Gram matrix of E8 (Bourbaki labelling: chain
/// 1–3–4–5–6–7–8 with node 2 attached to 4), positive definite.
pub fn e8_gram() -> IntMatrix {
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = IntMatrix::zeros(8, 8);
    for i in 0..8 {
        g[(i, i)] = BigInt::from(2);
    }
    for (a, b) in edges {
        g[(a, b)] = BigInt::from(-1);
        g[(b, a)] = BigInt::from(-1);
    }
    g
}

pub fn e8() -> Lattice {
    Lattice::new(e8_gram()).unwrap().with_label("E8")
}

pub fn hyperbolic_u() -> Lattice {
    Lattice::from_i64(&[[0, 1], [1, 0]])
        .unwrap()
        .with_label("U")
}

/// `⟨n⟩`
pub fn rank_one(n: impl Into<BigInt>) -> Lattice {
    let n = n.into();
    let label = format!("<{n}>");
    Lattice::new(IntMatrix::diagonal(&[n]))
        .unwrap()
        .with_label(label)
}

pub fn direct_sum(a: &Lattice, b: &Lattice) -> Lattice {
    let label = match (a.label(), b.label()) {
        (Some(x), Some(y)) => Some(format!("{x}+{y}")),
        _ => None,
    };
    Lattice {
        gram: a.gram.block_diag(&b.gram),
        label,
    }
}

pub fn direct_sum_all<'a>(parts: impl IntoIterator<Item = &'a Lattice>) -> Lattice {
    parts.into_iter().fold(
        Lattice {
            gram: IntMatrix::zeros(0, 0),
            label: None,
        },
        |acc, x| {
            if acc.rank() == 0 {
                x.clone()
            } else {
                direct_sum(&acc, x)
            }
        },
    )
}

/// The same module with the form negated.
pub fn negate(a: &Lattice) -> Lattice {
    Lattice {
        gram: a.gram.neg(),
        label: a.label().map(|l| format!("-({l})")),
    }
}

/// `Λ = E8² ⊕ U³`, signature (19, 3). Basis: two E8 blocks, then the
/// hyperbolic planes in order, each as `(e, f)`.
pub fn k3_lattice() -> Lattice {
    let (e, u) = (e8(), hyperbolic_u());
    direct_sum_all([&e, &e, &u, &u, &u]).with_label("K3")
}

/// `L_d = E8² ⊕ U² ⊕ ⟨2d⟩`, signature (19, 2).
pub fn l_d(d: i64) -> Result<Lattice> {
    if d <= 0 {
        return Err(Error::InvalidParameter(format!(
            "d must be positive, got {d}"
        )));
    }
    let (e, u) = (e8(), hyperbolic_u());
    let tail = rank_one(2 * d);
    Ok(direct_sum_all([&e, &e, &u, &u, &tail]).with_label(format!("L_{d}")))
}

/// `L = E8² ⊕ U² ⊕ ⟨1⟩⁵`, unimodular of rank 25.
pub fn big_l() -> Lattice {
    let (e, u, one) = (e8(), hyperbolic_u(), rank_one(1));
    direct_sum_all([&e, &e, &u, &u, &one, &one, &one, &one, &one]).with_label("L")
}
