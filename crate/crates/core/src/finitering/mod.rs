//! Finite commutative unital rings given by structure constants, with
//! exhaustive ideal-theoretic searches.

mod absorbing;
mod format;
mod lattice_enum;
mod ring;

pub use absorbing::{
    af_dim, is_n_absorbing, omega, omegas, power_index, taf_factorization, Capped, ZeroAbsorption,
    DEFAULT_AFDIM_CAP, DEFAULT_OMEGA_CAP,
};
pub use lattice_enum::{
    enumerate_ideals, enumerate_ideals_capped, local_structure, DEFAULT_IDEAL_CAP,
};
pub use ring::{FiniteIdeal, FiniteRing, RingQuotient, DEFAULT_RING_BOUND};
