//! The integral Clifford algebra `C(L)` with `v² = b(v, v)`.
//!
//! Elements are stored in the ordered-monomial basis indexed by bit masks.
//! Traces are taken in the left-regular representation on `C(L)` itself.

mod element;
mod endo;
mod gspin;
mod pairing;

pub use element::{clifford_mul, even_part, is_even, reversal, CliffordElement, MAX_ELEMENT_RANK};
pub use endo::{
    left_mul_matrix, left_mul_matrix_with, project_endo_to_l, trace_of_product,
    trace_pairing_identity, EndoMatrix, Projector, TraceForm, LEFT_MUL_CAP,
};
pub use gspin::{conjugation_preserves_lattice, gspin_generator, ConjugationCheck, GSpinElement};
pub use pairing::{
    find_polarization_element, find_polarization_element_with, phi_a, phi_gram, PolarizationSearch,
    PAIRING_CAP,
};
