//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub mod properties;

use afdim_core::finitering::enumerate_ideals;
use afdim_core::{
    ideal_from_generators, make_order, quotient_ring, FiniteIdeal, FiniteRing, IdealHNF,
};

pub struct CorpusRing {
    pub name: String,
    pub ring: FiniteRing,
    /// A finite product of rings `Z/p^k`.
    pub zpk_product: bool,
}

fn entry(name: impl Into<String>, ring: FiniteRing, zpk_product: bool) -> CorpusRing {
    CorpusRing {
        name: name.into(),
        ring,
        zpk_product,
    }
}

fn z(m: u64) -> FiniteRing {
    FiniteRing::zmod(m).unwrap()
}

fn prod(parts: &[FiniteRing]) -> FiniteRing {
    FiniteRing::direct_product(parts).unwrap()
}

fn mono(modulus: u64, basis: &[&[u32]]) -> FiniteRing {
    let basis: Vec<Vec<u32>> = basis.iter().map(|b| b.to_vec()).collect();
    FiniteRing::monomial_algebra(modulus, &basis).unwrap()
}

fn quad(n: i64, r: i64, gens: &[(i64, i64)]) -> FiniteRing {
    let order = make_order(n, r).unwrap();
    let ideal = ideal_from_generators(&order, gens).unwrap();
    quotient_ring(&order, &ideal, 64).unwrap().ring
}

fn quad_int(n: i64, r: i64, m: i64) -> FiniteRing {
    let order = make_order(n, r).unwrap();
    quotient_ring(&order, &IdealHNF::integer(m).unwrap(), 64)
        .unwrap()
        .ring
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

pub const FIXTURES: [&str; 4] = [
    "square_zero_plane.ring",
    "z4_dual.ring",
    "gaussian_mod_3.ring",
    "f2_times_f4.ring",
];

/// Fixed corpus of finite commutative rings of order at most 64.
pub fn corpus() -> Vec<CorpusRing> {
    let mut out = Vec::new();
    for m in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
        out.push(entry(format!("Z/{m}"), z(m), true));
    }
    out.push(entry("Z/2 x Z/3", prod(&[z(2), z(3)]), true));
    out.push(entry("Z/2 x Z/2", prod(&[z(2), z(2)]), true));
    out.push(entry("Z/4 x Z/3", prod(&[z(4), z(3)]), true));
    out.push(entry("Z/4 x Z/2", prod(&[z(4), z(2)]), true));
    out.push(entry("Z/8 x Z/3", prod(&[z(8), z(3)]), true));
    out.push(entry("Z/2 x Z/9", prod(&[z(2), z(9)]), true));
    out.push(entry("Z/2 x Z/3 x Z/5", prod(&[z(2), z(3), z(5)]), true));

    out.push(entry("F2[x]/(x^2)", mono(2, &[&[0], &[1]]), false));
    out.push(entry("F2[x]/(x^3)", mono(2, &[&[0], &[1], &[2]]), false));
    out.push(entry("F3[x]/(x^2)", mono(3, &[&[0], &[1]]), false));
    out.push(entry("Z/4[x]/(x^2)", mono(4, &[&[0], &[1]]), false));
    out.push(entry(
        "F2[x,y]/(x,y)^2",
        mono(2, &[&[0, 0], &[1, 0], &[0, 1]]),
        false,
    ));
    out.push(entry(
        "F3[x,y]/(x,y)^2",
        mono(3, &[&[0, 0], &[1, 0], &[0, 1]]),
        false,
    ));
    out.push(entry(
        "F2[x,y]/(x^2,y^2)",
        mono(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
        false,
    ));
    out.push(entry(
        "F2[x,y]/(x,y)^3",
        mono(2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[1, 1], &[0, 2]]),
        false,
    ));
    out.push(entry(
        "F2[x,y]/(x^2,xy,y^3)",
        mono(2, &[&[0, 0], &[1, 0], &[0, 1], &[0, 2]]),
        false,
    ));
    out.push(entry(
        "F2[x,y]/(x^2,y^3)",
        mono(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[0, 2], &[1, 2]]),
        false,
    ));
    out.push(entry(
        "F2[x,y,z]/(x,y,z)^2",
        mono(2, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        false,
    ));
    out.push(entry(
        "F2 x F2[x]/(x^2)",
        prod(&[z(2), mono(2, &[&[0], &[1]])]),
        false,
    ));

    out.push(entry("Z[i]/(2)", quad_int(-1, 1, 2), false));
    out.push(entry("Z[w_-3]/(2) = F4", quad_int(-3, 1, 2), false));
    out.push(entry("Z[i]/(2+2i)", quad(-1, 1, &[(2, 2)]), false));
    out.push(entry("Z[i]/(5)", quad_int(-1, 1, 5), false));
    out.push(entry("Z[2i]/(4)", quad_int(-1, 2, 4), false));
    out.push(entry("Z[3i]/(3)", quad_int(-1, 3, 3), false));
    out.push(entry("Z[1+sqrt5]/(2)", quad_int(5, 2, 2), false));
    out.push(entry("Z[sqrt2]/(4)", quad_int(2, 1, 4), false));

    for name in FIXTURES {
        out.push(entry(name, fixture(name).parse().unwrap(), false));
    }
    out
}

pub fn proper_ideals(ring: &FiniteRing) -> Vec<FiniteIdeal> {
    enumerate_ideals(ring)
        .unwrap()
        .into_iter()
        .filter(|i| ring.is_proper(i))
        .collect()
}

/// Prime by the element-wise definition.
pub fn is_prime_oracle(ring: &FiniteRing, ideal: &FiniteIdeal) -> bool {
    if !ring.is_proper(ideal) {
        return false;
    }
    ring.elements().all(|x| {
        ring.contains(ideal, x)
            || ring
                .elements()
                .all(|y| !ring.contains(ideal, ring.mul(x, y)) || ring.contains(ideal, y))
    })
}

/// n-absorbing by the definition: every (n+1)-tuple with product in `I`
/// has an n-element subproduct in `I`. Exponential, small rings only.
pub fn is_n_absorbing_oracle(ring: &FiniteRing, ideal: &FiniteIdeal, n: usize) -> bool {
    fn rec(ring: &FiniteRing, ideal: &FiniteIdeal, n: usize, tuple: &mut Vec<u32>) -> bool {
        if tuple.len() == n + 1 {
            let product = tuple.iter().fold(ring.one(), |acc, &x| ring.mul(acc, x));
            if !ring.contains(ideal, product) {
                return true;
            }
            return (0..=n).any(|skip| {
                let sub = tuple
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .fold(ring.one(), |acc, (_, &x)| ring.mul(acc, x));
                ring.contains(ideal, sub)
            });
        }
        // Sorted tuples suffice because the ring is commutative.
        let start = tuple.last().copied().unwrap_or(0);
        for x in start..ring.order() as u32 {
            tuple.push(x);
            let ok = rec(ring, ideal, n, tuple);
            tuple.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    ring.is_proper(ideal) && rec(ring, ideal, n, &mut Vec::new())
}

/// Smallest n with `M^n ⊆ I`. `M^n` is generated by the n-fold products of
/// elements of `M`, so it suffices that all of those lie in `I`.
pub fn power_index_oracle(ring: &FiniteRing, m: &FiniteIdeal, ideal: &FiniteIdeal) -> Option<u32> {
    let m_elems = ring.ideal_elements(m);
    let mut products: BTreeSet<u32> = m_elems.iter().copied().collect();
    for n in 1..=64 {
        if products.iter().all(|&x| ring.contains(ideal, x)) {
            return Some(n);
        }
        products = products
            .iter()
            .flat_map(|&x| m_elems.iter().map(move |&y| (x, y)))
            .map(|(x, y)| ring.mul(x, y))
            .collect();
    }
    None
}
