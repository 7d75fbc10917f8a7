//! Exact-arithmetic lattice toolkit for K3-type integral quadratic forms.
//!
//! Everything here works over arbitrary-precision integers and rationals;
//! nothing falls back to floating point. The crate is organised as:
//!
//! - [`linalg`]: integer and rational matrices, Smith normal form,
//!   determinants, Sylvester signature, saturated kernels, LDLᵀ.
//! - [`lattice`]: the `Lattice` carrier, standard lattices (E8, U, the K3
//!   lattice), discriminant forms, saturation, complements, reflections and
//!   Eichler transvections.
//! - [`embeddings`]: four-square witnesses and the explicit primitive
//!   embeddings `L_d ↪ L` and `v_d^⊥ ≅ L_d`.
//! - [`roots`]: exact Fincke–Pohst short-vector enumeration, (−2)-walls
//!   and the bounded search for minimal polarization degrees.
//! - [`clifford`]: the integral Clifford algebra of a lattice, its reversal,
//!   the trace pairing `φ_a` and the unimodular trace projector.
//! - [`enumeration`]: reduced positive-definite forms of bounded
//!   discriminant and hyperbolic Picard-type candidates.
//!
//! With the default `parallel` feature the enumeration kernels can fan out
//! over rayon; every entry point takes a [`Parallelism`] and produces the
//! same output in either mode.

pub mod clifford;
pub mod embeddings;
pub mod enumeration;
pub mod error;
pub mod lattice;
pub mod linalg;
mod par;
pub mod roots;

pub use error::{Error, Result};
pub use lattice::{DiscriminantForm, Isometry, Lattice, LatticeEmbedding};
pub use linalg::{IntMatrix, IntVector, RatMatrix};
pub use par::Parallelism;
