//! Integral lattices, their embeddings, discriminant forms and isometries.
//!
//! Sign convention: E8 is positive definite, so the K3 lattice
//! `Λ = E8² ⊕ U³` has signature (19, 3), `v_d = e − d·f` has norm `−2d`, and
//! its complement contains `e + d·f` of norm `+2d`.

mod discriminant;
mod embedding;
mod isometry;
mod orbit;
pub mod standard;

pub use discriminant::{discriminant_group, DiscriminantForm};
pub use embedding::{
    check_disc_complement, is_primitive, orthogonal_complement, preimage, saturate,
    saturation_index, DiscComplementReport, LatticeEmbedding,
};
pub use isometry::{eichler_transvection, in_discriminant_kernel, reflection, Isometry};
pub use orbit::{
    canonical_vector, has_hyperbolic_frame, move_primitive_vector, OrbitRepresentative,
};
pub use standard::{
    big_l, direct_sum, direct_sum_all, e8, hyperbolic_u, k3_lattice, l_d, negate, rank_one, Lattice,
};
