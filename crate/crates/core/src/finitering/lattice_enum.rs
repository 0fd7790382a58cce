use std::collections::HashSet;

use super::{FiniteIdeal, FiniteRing};
use crate::error::{Error, Result};

/// Default cap on the size of an ideal lattice.
pub const DEFAULT_IDEAL_CAP: usize = 100_000;

/// Every ideal of `ring`, sorted by cardinality and then canonical basis.
pub fn enumerate_ideals(ring: &FiniteRing) -> Result<Vec<FiniteIdeal>> {
    enumerate_ideals_capped(ring, DEFAULT_IDEAL_CAP)
}

/// Closure of the principal ideals under pairwise sums; every ideal of a
/// finite ring is a finite sum of principal ideals.
pub fn enumerate_ideals_capped(ring: &FiniteRing, cap: usize) -> Result<Vec<FiniteIdeal>> {
    let mut seen: HashSet<FiniteIdeal> = HashSet::new();
    let mut principals = Vec::new();
    for x in ring.elements() {
        let i = ring.principal_ideal(x);
        if seen.insert(i.clone()) {
            principals.push(i);
            if principals.len() > cap {
                return Err(Error::TooManyIdeals { cap });
            }
        }
    }

    let mut all = principals.clone();
    let mut next = 0;
    while next < all.len() {
        let current = all[next].clone();
        next += 1;
        for p in &principals {
            if ring.is_subset(p, &current) {
                continue;
            }
            let s = ring.sum(&current, p);
            if !seen.contains(&s) {
                seen.insert(s.clone());
                all.push(s);
                if all.len() > cap {
                    return Err(Error::TooManyIdeals { cap });
                }
            }
        }
    }
    all.sort();
    Ok(all)
}

/// The unique maximal ideal when `ring` is local, i.e. when the non-units
/// form an ideal.
pub fn local_structure(ring: &FiniteRing) -> Option<FiniteIdeal> {
    let mut m = ring.zero_ideal();
    let mut nonunits = 0u64;
    for x in ring.elements() {
        if ring.is_unit(x) {
            continue;
        }
        nonunits += 1;
        if !ring.contains(&m, x) {
            m = ring.sum(&m, &ring.principal_ideal(x));
            if !ring.is_proper(&m) {
                return None;
            }
        }
    }
    debug_assert_eq!(m.order(), nonunits);
    Some(m)
}
