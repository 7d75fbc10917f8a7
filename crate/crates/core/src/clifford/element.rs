use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Largest host rank for which masks fit a `u64`.
pub const MAX_ELEMENT_RANK: usize = 63;

/// An element of the integral Clifford algebra `C(L)`.
///
/// The basis is the set of ordered monomials `e_S = e_{s₁}⋯e_{s_k}`
/// (`s₁ < ⋯ < s_k`), indexed by the bit mask of `S`. Products are
/// straightened with `eᵢeⱼ + eⱼeᵢ = 2b(eᵢ, eⱼ)`, so `v² = b(v, v)`.
#[derive(Clone, Debug)]
pub struct CliffordElement {
    host: Arc<Lattice>,
    coeffs: BTreeMap<u64, BigInt>,
}

impl PartialEq for CliffordElement {
    fn eq(&self, other: &Self) -> bool {
        same_host(&self.host, &other.host) && self.coeffs == other.coeffs
    }
}

impl Eq for CliffordElement {}

pub(crate) fn same_host(a: &Arc<Lattice>, b: &Arc<Lattice>) -> bool {
    Arc::ptr_eq(a, b) || a.gram() == b.gram()
}

fn add_term(map: &mut BTreeMap<u64, BigInt>, mask: u64, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(mask).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&mask);
    }
}

impl CliffordElement {
    pub fn zero(host: &Arc<Lattice>) -> Result<Self> {
        if host.rank() > MAX_ELEMENT_RANK {
            return Err(Error::RankOverCap {
                rank: host.rank(),
                cap: MAX_ELEMENT_RANK,
            });
        }
        Ok(CliffordElement {
            host: Arc::clone(host),
            coeffs: BTreeMap::new(),
        })
    }

    pub fn from_terms(
        host: &Arc<Lattice>,
        terms: impl IntoIterator<Item = (u64, BigInt)>,
    ) -> Result<Self> {
        let mut x = Self::zero(host)?;
        let limit = 1u128 << host.rank();
        for (mask, c) in terms {
            if u128::from(mask) >= limit {
                return Err(Error::InvalidParameter(format!(
                    "mask {mask} out of range for rank {}",
                    host.rank()
                )));
            }
            add_term(&mut x.coeffs, mask, c);
        }
        Ok(x)
    }

    pub fn scalar(host: &Arc<Lattice>, c: impl Into<BigInt>) -> Result<Self> {
        Self::from_terms(host, [(0, c.into())])
    }

    pub fn one(host: &Arc<Lattice>) -> Result<Self> {
        Self::scalar(host, 1)
    }

    pub fn monomial(host: &Arc<Lattice>, mask: u64) -> Result<Self> {
        Self::from_terms(host, [(mask, BigInt::one())])
    }

    /// The degree-one element `Σ vᵢ eᵢ`.
    pub fn vector(host: &Arc<Lattice>, v: &[BigInt]) -> Result<Self> {
        host.check_vector(v)?;
        Self::from_terms(
            host,
            v.iter().enumerate().map(|(i, c)| (1u64 << i, c.clone())),
        )
    }

    pub fn host(&self) -> &Arc<Lattice> {
        &self.host
    }

    pub fn rank(&self) -> usize {
        self.host.rank()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, mask: u64) -> BigInt {
        self.coeffs.get(&mask).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scalar_part(&self) -> BigInt {
        self.coeff(0)
    }

    /// Degree-one coordinates, if the element is a pure vector.
    pub fn as_vector(&self) -> Option<Vec<BigInt>> {
        if self.coeffs.keys().any(|m| m.count_ones() != 1) {
            return None;
        }
        Some((0..self.rank()).map(|i| self.coeff(1 << i)).collect())
    }

    fn check_host(&self, other: &Self) -> Result<()> {
        if same_host(&self.host, &other.host) {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_host(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.coeffs {
            add_term(&mut out.coeffs, m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = CliffordElement {
            host: Arc::clone(&self.host),
            coeffs: BTreeMap::new(),
        };
        for (&m, c) in &self.coeffs {
            add_term(&mut out.coeffs, m, c * k);
        }
        out
    }

    /// Restriction to monomials of even degree.
    pub fn even_part(&self) -> Self {
        CliffordElement {
            host: Arc::clone(&self.host),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.count_ones() % 2 == 0)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// Right multiplication by a single generator `e_t`, accumulated into `out`.
    fn push_times_generator(
        &self,
        mask: u64,
        c: &BigInt,
        t: usize,
        out: &mut BTreeMap<u64, BigInt>,
    ) {
        let g = self.host.gram();
        let tb = 1u64 << t;
        // generators of S above t, from the top down
        let above: Vec<usize> = (t + 1..self.rank())
            .rev()
            .filter(|&s| mask & (1 << s) != 0)
            .collect();
        let mut sign = BigInt::one();
        for &s in &above {
            let b = &g[(s, t)];
            if !b.is_zero() {
                add_term(out, mask & !(1 << s), &sign * c * BigInt::from(2) * b);
            }
            sign = -sign;
        }
        if mask & tb != 0 {
            add_term(out, mask & !tb, sign * c * &g[(t, t)]);
        } else {
            add_term(out, mask | tb, sign * c);
        }
    }

    fn times_generator(&self, t: usize) -> Self {
        let mut out = BTreeMap::new();
        for (&m, c) in &self.coeffs {
            self.push_times_generator(m, c, t, &mut out);
        }
        CliffordElement {
            host: Arc::clone(&self.host),
            coeffs: out,
        }
    }

    /// Clifford product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_host(other)?;
        let mut acc = BTreeMap::new();
        for (&tm, tc) in &other.coeffs {
            let mut part = self.clone();
            for t in 0..self.rank() {
                if tm & (1 << t) != 0 {
                    part = part.times_generator(t);
                }
            }
            for (m, c) in part.coeffs {
                add_term(&mut acc, m, c * tc);
            }
        }
        Ok(CliffordElement {
            host: Arc::clone(&self.host),
            coeffs: acc,
        })
    }

    /// The reversal anti-involution `ι(e_{s₁}⋯e_{s_k}) = e_{s_k}⋯e_{s₁}`,
    /// computed by multiplying the generators in reversed order.
    pub fn reversal(&self) -> Self {
        let mut acc = BTreeMap::new();
        for (&m, c) in &self.coeffs {
            let mut word = CliffordElement {
                host: Arc::clone(&self.host),
                coeffs: BTreeMap::from([(0u64, c.clone())]),
            };
            for t in (0..self.rank()).rev() {
                if m & (1 << t) != 0 {
                    word = word.times_generator(t);
                }
            }
            for (wm, wc) in word.coeffs {
                add_term(&mut acc, wm, wc);
            }
        }
        CliffordElement {
            host: Arc::clone(&self.host),
            coeffs: acc,
        }
    }
}

/// Free-function form of [`CliffordElement::mul`].
pub fn clifford_mul(x: &CliffordElement, y: &CliffordElement) -> Result<CliffordElement> {
    x.mul(y)
}

pub fn reversal(x: &CliffordElement) -> CliffordElement {
    x.reversal()
}

pub fn even_part(x: &CliffordElement) -> CliffordElement {
    x.even_part()
}

pub fn is_even(x: &CliffordElement) -> bool {
    x.is_even()
}
