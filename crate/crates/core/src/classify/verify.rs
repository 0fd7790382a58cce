use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finitering::{enumerate_ideals, local_structure, omega, Capped, DEFAULT_OMEGA_CAP};
use crate::numtheory::{factorize, is_prime, kronecker};
use crate::quadorder::{make_order, quotient_ring, IdealHNF, DEFAULT_QUOTIENT_BOUND};

/// Parameters for [`verify_afdim_local`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// The quotient is taken by `p^(2a + exponent_margin)`.
    pub exponent_margin: u32,
    pub quotient_bound: u64,
    pub omega_cap: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exponent_margin: 2,
            quotient_bound: DEFAULT_QUOTIENT_BOUND,
            omega_cap: DEFAULT_OMEGA_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyTarget {
    pub n: i64,
    pub r: i64,
    pub p: i64,
    pub a: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub target: VerifyTarget,
    pub predicted_local_max: u32,
    pub observed_local_max: u32,
    /// Proper ideals of the quotient not contained in `M^2`.
    pub ideals_examined: usize,
    pub agrees: bool,
    pub exponent: u32,
    pub quotient_order: u64,
    pub note: String,
}

/// Checks the local AF-dimension prediction at `p` against an exhaustive
/// computation in `R / p^e R`, `e = 2a + exponent_margin`.
///
/// The observed value is the largest `omega` among proper ideals of the
/// quotient that are not contained in the square of its maximal ideal.
pub fn verify_afdim_local(
    n: i64,
    r: i64,
    p: i64,
    a: u32,
    cfg: &VerifyConfig,
) -> Result<VerificationReport> {
    let order = make_order(n, r)?;
    if p < 2 || !is_prime(p as u64) {
        return Err(Error::NotPrime { p });
    }
    let (_, f) = factorize(r)?;
    if a == 0 || f.exponent_of(p as u64) != a {
        return Err(Error::WrongExponent { r, p, a });
    }
    let symbol = kronecker(order.field.d, p)?;
    if symbol == 1 {
        return Err(Error::Unverifiable { p });
    }
    let predicted = if symbol == 0 { 2 * a + 1 } else { 2 * a };

    let exponent = 2 * a + cfg.exponent_margin;
    let modulus = (p as u64)
        .checked_pow(exponent)
        .filter(|&m| m <= i64::MAX as u64)
        .ok_or(Error::Overflow("quotient modulus"))?;
    let quotient = quotient_ring(
        &order,
        &IdealHNF::integer(modulus as i64)?,
        cfg.quotient_bound,
    )?;
    let ring = &quotient.ring;

    let m = local_structure(ring)
        .ok_or_else(|| Error::InvalidRing("quotient by a prime power is not local".into()))?;
    let m2 = ring.product(&m, &m);
    let targets: Vec<_> = enumerate_ideals(ring)?
        .into_iter()
        .filter(|j| ring.is_proper(j) && !ring.is_subset(j, &m2))
        .collect();

    let values: Vec<Capped> = targets
        .par_iter()
        .map(|j| omega(ring, j, cfg.omega_cap))
        .collect::<Result<_>>()?;
    let mut observed = 0;
    for v in values {
        match v {
            Capped::Finite(w) => observed = observed.max(w),
            Capped::AboveCap { above_cap } => {
                return Err(Error::AboveCap {
                    what: "omega",
                    cap: above_cap,
                })
            }
        }
    }

    let agrees = observed == predicted;
    let note = if agrees {
        format!("max omega over ideals outside M^2 in R/{p}^{exponent}R matches")
    } else {
        format!("max omega over ideals outside M^2 in R/{p}^{exponent}R is {observed}, expected {predicted}")
    };
    Ok(VerificationReport {
        target: VerifyTarget { n, r, p, a },
        predicted_local_max: predicted,
        observed_local_max: observed,
        ideals_examined: targets.len(),
        agrees,
        exponent,
        quotient_order: ring.order(),
        note,
    })
}
