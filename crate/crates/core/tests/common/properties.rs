//! Exhaustive property checks over the finite-ring corpus. Each check returns
//! the list of violations it found.

use afdim_core::finitering::{
    af_dim, is_n_absorbing, local_structure, omega, DEFAULT_AFDIM_CAP, DEFAULT_OMEGA_CAP,
};
use afdim_core::{Capped, FiniteRing};

use super::{
    is_n_absorbing_oracle, is_prime_oracle, power_index_oracle, proper_ideals, CorpusRing,
};

pub type Violations = Vec<String>;
pub type Check = fn(&CorpusRing) -> Violations;

pub fn one_absorbing_is_prime(c: &CorpusRing) -> Violations {
    let r = &c.ring;
    proper_ideals(r)
        .iter()
        .filter(|i| is_n_absorbing(r, i, 1).unwrap() != is_prime_oracle(r, i))
        .map(|i| {
            format!(
                "{}: 1-absorbing and prime disagree on {:?}",
                c.name,
                r.ideal_elements(i)
            )
        })
        .collect()
}

pub fn monotone(c: &CorpusRing) -> Violations {
    let r = &c.ring;
    let mut out = Vec::new();
    for i in proper_ideals(r) {
        for n in 1..=4 {
            if is_n_absorbing(r, &i, n).unwrap() && !is_n_absorbing(r, &i, n + 1).unwrap() {
                out.push(format!(
                    "{}: {:?} is {n}- but not {}-absorbing",
                    c.name,
                    r.ideal_elements(&i),
                    n + 1
                ));
            }
        }
    }
    out
}

pub fn quotient_invariant(c: &CorpusRing) -> Violations {
    let r = &c.ring;
    let ideals = proper_ideals(r);
    let mut out = Vec::new();
    for j in &ideals {
        let q = r.quotient(j).unwrap();
        for i in ideals.iter().filter(|i| r.is_subset(j, i)) {
            let image = q.project_ideal(r, i);
            for n in 1..=4 {
                if is_n_absorbing(r, i, n).unwrap() != is_n_absorbing(&q.ring, &image, n).unwrap() {
                    out.push(format!(
                        "{}: n = {n}, I = {:?}, J = {:?}",
                        c.name,
                        r.ideal_elements(i),
                        r.ideal_elements(j)
                    ));
                }
            }
        }
    }
    out
}

/// The memoized search against the tuple-by-tuple definition, on rings of
/// order at most `max_order` and for `n <= 3`.
pub fn search_matches_definition(c: &CorpusRing, max_order: u64) -> Violations {
    let r = &c.ring;
    if r.order() > max_order {
        return Vec::new();
    }
    let mut out = Vec::new();
    for i in proper_ideals(r) {
        for n in 1..=3u32 {
            if is_n_absorbing(r, &i, n).unwrap() != is_n_absorbing_oracle(r, &i, n as usize) {
                out.push(format!(
                    "{}: n = {n}, I = {:?}",
                    c.name,
                    r.ideal_elements(&i)
                ));
            }
        }
    }
    out
}

/// On a local ring, `omega(I) = min { n : M^n ⊆ I }` for `(0) != I != R`.
pub fn omega_is_power_index(c: &CorpusRing) -> Violations {
    let r = &c.ring;
    let Some(m) = local_structure(r) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for i in proper_ideals(r).into_iter().filter(|i| i.order() > 1) {
        let w = omega(r, &i, DEFAULT_OMEGA_CAP).unwrap();
        let k = power_index_oracle(r, &m, &i);
        if w.finite() != k {
            out.push(format!(
                "{}: omega {w} vs power index {k:?} on {:?}",
                c.name,
                r.ideal_elements(&i)
            ));
        }
    }
    out
}

/// On a local ring, AF-dimension at most 2 iff every ideal is comparable to `M^2`.
pub fn taf_iff_comparable(c: &CorpusRing) -> Violations {
    let r = &c.ring;
    let Some(m) = local_structure(r) else {
        return Vec::new();
    };
    let m2 = r.product(&m, &m);
    let comparable = afdim_core::finitering::enumerate_ideals(r)
        .unwrap()
        .iter()
        .all(|i| r.is_subset(i, &m2) || r.is_subset(&m2, i));
    let dim = af_dim(r, DEFAULT_AFDIM_CAP).unwrap();
    let taf = matches!(dim, Capped::Finite(n) if n <= 2);
    if taf == comparable {
        Vec::new()
    } else {
        vec![format!(
            "{}: af_dim {dim}, comparable to M^2: {comparable}",
            c.name
        )]
    }
}

pub fn zpk_products_have_dim_one(c: &CorpusRing) -> Violations {
    if !c.zpk_product {
        return Vec::new();
    }
    match af_dim(&c.ring, DEFAULT_AFDIM_CAP).unwrap() {
        Capped::Finite(1) => Vec::new(),
        other => vec![format!("{}: af_dim {other}", c.name)],
    }
}

pub fn format_round_trips(c: &CorpusRing) -> Violations {
    match c.ring.to_string().parse::<FiniteRing>() {
        Ok(back) if back == c.ring => Vec::new(),
        Ok(_) => vec![format!("{}: parsed ring differs", c.name)],
        Err(e) => vec![format!("{}: {e}", c.name)],
    }
}

/// Units found by scanning for inverses, against `local_structure`.
pub fn local_structure_matches_scan(c: &CorpusRing) -> Violations {
    let r = &c.ring;
    let non_units: Vec<u32> = r
        .elements()
        .filter(|&x| !r.elements().any(|y| r.mul(x, y) == r.one()))
        .collect();
    let closed = non_units
        .iter()
        .all(|&x| non_units.iter().all(|&y| non_units.contains(&r.add(x, y))));
    match local_structure(r) {
        Some(m) if closed && r.ideal_elements(&m) == non_units => Vec::new(),
        None if !closed => Vec::new(),
        got => vec![format!(
            "{}: local_structure {:?}, non-units closed: {closed}",
            c.name,
            got.map(|m| m.order())
        )],
    }
}

pub const ALL: [(&str, Check); 9] = [
    ("1-absorbing iff prime", one_absorbing_is_prime),
    ("n-absorbing implies (n+1)-absorbing", monotone),
    ("quotient invariance", quotient_invariant),
    ("search matches definition", |c| {
        search_matches_definition(c, 16)
    }),
    ("omega = power index on local rings", omega_is_power_index),
    ("af_dim <= 2 iff comparable to M^2", taf_iff_comparable),
    ("af_dim = 1 on products of Z/p^k", zpk_products_have_dim_one),
    ("text format round trip", format_round_trips),
    (
        "local_structure matches unit scan",
        local_structure_matches_scan,
    ),
];
