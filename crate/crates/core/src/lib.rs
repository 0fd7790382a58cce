//! AF-dimension of quadratic orders `Z[r w_n]` and of finite commutative rings.
//!
//! The [`classify`] module evaluates closed-form criteria in terms of the
//! Kronecker symbol of the field discriminant at the primes dividing `r`.
//! The [`finitering`] module computes the same invariants by exhaustive
//! search on explicit finite rings, and [`classify::verify_afdim_local`]
//! ties the two together on finite quotients of the order.

pub mod classify;
pub mod error;
pub mod finitering;
mod lattice;
pub mod numtheory;
pub mod quadorder;

pub use classify::{
    af_dim_order, classify_axb, classify_order, sweep, verify_afdim_local, AfDim, AxbReport,
    FieldDesc, OrderReport, VerificationReport, VerifyConfig,
};
pub use error::{Error, ErrorKind, Result};
pub use finitering::{Capped, FiniteIdeal, FiniteRing};
pub use numtheory::{factorize, kronecker, legendre, sqrt_mod, Factorization};
pub use quadorder::{
    discriminant, ideal_contains, ideal_from_generators, ideal_mul, make_order, quotient_ring,
    split_prime, IdealHNF, QuadOrder, QuadraticField, SplitKind, SplittingResult,
};
