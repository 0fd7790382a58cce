//! n-absorbing ideals by exhaustive search, and the quantities built on them.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lattice_enum::enumerate_ideals;
use super::{FiniteIdeal, FiniteRing};
use crate::error::{Error, Result};

pub const DEFAULT_OMEGA_CAP: u32 = 12;
pub const DEFAULT_AFDIM_CAP: u32 = 6;

/// Result of a bounded search: a value, or the cap that was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Capped {
    Finite(u32),
    AboveCap { above_cap: u32 },
}

impl Capped {
    pub fn finite(self) -> Option<u32> {
        match self {
            Capped::Finite(n) => Some(n),
            Capped::AboveCap { .. } => None,
        }
    }
}

impl fmt::Display for Capped {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capped::Finite(n) => write!(f, "{n}"),
            Capped::AboveCap { above_cap } => write!(f, ">{above_cap}"),
        }
    }
}

const ZERO: u32 = u32::MAX;

/// Decides whether the zero ideal of a ring is n-absorbing.
///
/// A violating tuple has a zero product while every n-element subproduct is
/// nonzero. Such a tuple contains no units and no zeros, and multiplying an
/// entry by a unit changes nothing, so the search runs over multisets of
/// associate classes of nonzero non-units.
#[derive(Debug, Clone)]
pub struct ZeroAbsorption {
    classes: usize,
    /// `class_mul[a * classes + b]`: class of the product, or `ZERO`.
    class_mul: Vec<u32>,
}

impl ZeroAbsorption {
    pub fn new(ring: &FiniteRing) -> Self {
        let units: Vec<u32> = ring.elements().filter(|&x| ring.is_unit(x)).collect();
        let mut class_of = vec![ZERO; ring.order() as usize];
        let mut reps = Vec::new();
        for x in ring.elements().skip(1) {
            if class_of[x as usize] != ZERO || ring.is_unit(x) {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &u in &units {
                class_of[ring.mul(u, x) as usize] = id;
            }
        }
        let classes = reps.len();
        let mut class_mul = vec![ZERO; classes * classes];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate().skip(a) {
                let p = ring.mul(ra, rb);
                let c = if p == 0 { ZERO } else { class_of[p as usize] };
                class_mul[a * classes + b] = c;
                class_mul[b * classes + a] = c;
            }
        }
        Self { classes, class_mul }
    }

    /// Number of associate classes of nonzero non-units.
    pub fn classes(&self) -> usize {
        self.classes
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.class_mul[a as usize * self.classes + b as usize]
    }

    pub fn is_n_absorbing(&self, n: u32) -> bool {
        assert!(n >= 1);
        let mut memo = HashSet::new();
        !self.violation(n as usize, &[], 0, &mut memo)
    }

    /// `sets[s]` holds the classes of all products of `s + 1` chosen entries.
    fn violation(
        &self,
        n: usize,
        sets: &[Vec<u32>],
        start: u32,
        memo: &mut HashSet<(u32, Vec<Vec<u32>>)>,
    ) -> bool {
        let chosen = sets.len();
        'next: for c in start..self.classes as u32 {
            if chosen == n {
                if self.mul(c, sets[n - 1][0]) != ZERO {
                    continue;
                }
                for set in &sets[..n - 1] {
                    if set.iter().any(|&v| self.mul(c, v) == ZERO) {
                        continue 'next;
                    }
                }
                return true;
            }
            let mut next = Vec::with_capacity(chosen + 1);
            for s in 0..=chosen {
                let mut set = sets.get(s).cloned().unwrap_or_default();
                if s == 0 {
                    set.push(c);
                } else {
                    for &v in &sets[s - 1] {
                        let w = self.mul(c, v);
                        if w == ZERO {
                            continue 'next;
                        }
                        set.push(w);
                    }
                }
                set.sort_unstable();
                set.dedup();
                next.push(set);
            }
            if !memo.insert((c, next.clone())) {
                continue;
            }
            if self.violation(n, &next, c, memo) {
                return true;
            }
        }
        false
    }

    /// Smallest `n <= cap` for which the zero ideal is n-absorbing.
    pub fn omega(&self, cap: u32) -> Capped {
        (1..=cap)
            .find(|&n| self.is_n_absorbing(n))
            .map_or(Capped::AboveCap { above_cap: cap }, Capped::Finite)
    }
}

fn proper_quotient(ring: &FiniteRing, ideal: &FiniteIdeal) -> Result<ZeroAbsorption> {
    let q = ring.quotient(ideal)?;
    Ok(ZeroAbsorption::new(&q.ring))
}

/// Whether `ideal` is n-absorbing, decided in `R / I` against the zero ideal.
pub fn is_n_absorbing(ring: &FiniteRing, ideal: &FiniteIdeal, n: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidRing("n must be positive".into()));
    }
    Ok(proper_quotient(ring, ideal)?.is_n_absorbing(n))
}

/// Smallest n for which `ideal` is n-absorbing, searched up to `cap`.
pub fn omega(ring: &FiniteRing, ideal: &FiniteIdeal, cap: u32) -> Result<Capped> {
    Ok(proper_quotient(ring, ideal)?.omega(cap))
}

/// Smallest `n` with `M^n` inside `ideal`, for a nilpotent maximal ideal `m`.
pub fn power_index(ring: &FiniteRing, m: &FiniteIdeal, ideal: &FiniteIdeal) -> Option<u32> {
    let mut power = m.clone();
    for n in 1..=ring.order().ilog2() + 1 {
        if ring.is_subset(&power, ideal) {
            return Some(n);
        }
        power = ring.product(&power, m);
    }
    None
}

/// Closure of `factors` under products, each reachable ideal paired with a
/// shortest factor list (indices into `factors`). Only products containing
/// `floor` are kept.
fn product_closure(
    ring: &FiniteRing,
    factors: &[FiniteIdeal],
    floor: Option<&FiniteIdeal>,
    stop_at: Option<&FiniteIdeal>,
) -> HashMap<FiniteIdeal, Vec<usize>> {
    let keeps = |i: &FiniteIdeal| floor.is_none_or(|f| ring.is_subset(f, i));
    let mut reached: HashMap<FiniteIdeal, Vec<usize>> = HashMap::new();
    let mut frontier: Vec<FiniteIdeal> = Vec::new();
    for (idx, f) in factors.iter().enumerate() {
        if keeps(f) && !reached.contains_key(f) {
            reached.insert(f.clone(), vec![idx]);
            frontier.push(f.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for k in &frontier {
            for (idx, f) in factors.iter().enumerate() {
                let p = ring.product(k, f);
                if reached.contains_key(&p) || !keeps(&p) {
                    continue;
                }
                let mut witness = reached[k].clone();
                witness.push(idx);
                let done = stop_at == Some(&p);
                reached.insert(p.clone(), witness);
                if done {
                    return reached;
                }
                next.push(p);
            }
        }
        frontier = next;
    }
    reached
}

/// `omega` of every proper ideal in `ideals`, computed in parallel.
pub fn omegas(ring: &FiniteRing, ideals: &[FiniteIdeal], cap: u32) -> Result<Vec<Capped>> {
    ideals.par_iter().map(|i| omega(ring, i, cap)).collect()
}

/// AF-dimension: the least `n <= cap` such that every proper ideal is a
/// product of n-absorbing ideals.
pub fn af_dim(ring: &FiniteRing, cap: u32) -> Result<Capped> {
    let ideals = enumerate_ideals(ring)?;
    let proper: Vec<FiniteIdeal> = ideals.into_iter().filter(|i| ring.is_proper(i)).collect();
    let w = omegas(ring, &proper, cap)?;
    for n in 1..=cap {
        let factors: Vec<FiniteIdeal> = proper
            .iter()
            .zip(&w)
            .filter(|(_, w)| w.finite().is_some_and(|w| w <= n))
            .map(|(i, _)| i.clone())
            .collect();
        if factors.len() == proper.len() {
            return Ok(Capped::Finite(n));
        }
        let reached = product_closure(ring, &factors, None, None);
        if proper.iter().all(|i| reached.contains_key(i)) {
            return Ok(Capped::Finite(n));
        }
    }
    Ok(Capped::AboveCap { above_cap: cap })
}

/// A factorization of `ideal` into 2-absorbing ideals, if one exists.
///
/// Factorizations into ideals strictly larger than `ideal` are preferred
/// (shortest first); failing that, a 2-absorbing `ideal` is its own witness.
/// Factors are listed by decreasing cardinality.
pub fn taf_factorization(
    ring: &FiniteRing,
    ideal: &FiniteIdeal,
) -> Result<Option<Vec<FiniteIdeal>>> {
    if !ring.is_proper(ideal) {
        return Err(Error::NotProper);
    }
    let mut candidates: Vec<FiniteIdeal> = enumerate_ideals(ring)?
        .into_iter()
        .filter(|i| ring.is_proper(i) && i != ideal && ring.is_subset(ideal, i))
        .collect();
    let absorbing: Vec<bool> = candidates
        .par_iter()
        .map(|i| is_n_absorbing(ring, i, 2))
        .collect::<Result<_>>()?;
    let mut flags = absorbing.into_iter();
    candidates.retain(|_| flags.next().unwrap_or(false));
    candidates.sort_by(|a, b| {
        b.order()
            .cmp(&a.order())
            .then_with(|| a.basis().cmp(b.basis()))
    });

    let reached = product_closure(ring, &candidates, Some(ideal), Some(ideal));
    if let Some(witness) = reached.get(ideal) {
        let mut factors: Vec<FiniteIdeal> =
            witness.iter().map(|&i| candidates[i].clone()).collect();
        factors.sort_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then_with(|| a.basis().cmp(b.basis()))
        });
        return Ok(Some(factors));
    }
    if is_n_absorbing(ring, ideal, 2)? {
        return Ok(Some(vec![ideal.clone()]));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitering::local_structure;

    fn z(m: u64) -> FiniteRing {
        FiniteRing::zmod(m).unwrap()
    }

    fn square_zero_plane() -> FiniteRing {
        FiniteRing::monomial_algebra(2, &[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap()
    }

    /// Definition checked over all ordered tuples, for cross-checking.
    fn brute_force(ring: &FiniteRing, ideal: &FiniteIdeal, n: u32) -> bool {
        let elems: Vec<u32> = ring.elements().collect();
        let mut tuple = vec![0usize; n as usize + 1];
        loop {
            let xs: Vec<u32> = tuple.iter().map(|&i| elems[i]).collect();
            let prod = xs.iter().fold(ring.one(), |a, &b| ring.mul(a, b));
            if ring.contains(ideal, prod) {
                let absorbed = (0..xs.len()).any(|skip| {
                    let sub = xs
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .fold(ring.one(), |a, (_, &b)| ring.mul(a, b));
                    ring.contains(ideal, sub)
                });
                if !absorbed {
                    return false;
                }
            }
            let mut pos = 0;
            loop {
                if pos == tuple.len() {
                    return true;
                }
                tuple[pos] += 1;
                if tuple[pos] < elems.len() {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
        }
    }

    #[test]
    fn absorbing_examples() {
        let z6 = z(6);
        assert!(is_n_absorbing(&z6, &z6.zero_ideal(), 2).unwrap());
        assert!(!is_n_absorbing(&z6, &z6.zero_ideal(), 1).unwrap());
        let z8 = z(8);
        assert!(!is_n_absorbing(&z8, &z8.zero_ideal(), 2).unwrap());
        let z7 = z(7);
        assert!(is_n_absorbing(&z7, &z7.zero_ideal(), 1).unwrap());
        assert_eq!(
            is_n_absorbing(&z7, &z7.unit_ideal(), 1),
            Err(Error::NotProper)
        );
    }

    #[test]
    fn search_matches_definition_on_small_rings() {
        let rings = vec![
            z(8),
            z(12),
            z(16),
            square_zero_plane(),
            FiniteRing::direct_product(&[z(4), z(2)]).unwrap(),
        ];
        for r in &rings {
            for i in enumerate_ideals(r)
                .unwrap()
                .iter()
                .filter(|i| r.is_proper(i))
            {
                for n in 1..=3 {
                    assert_eq!(
                        is_n_absorbing(r, i, n).unwrap(),
                        brute_force(r, i, n),
                        "ring {r:?} ideal {:?} n {n}",
                        i.basis()
                    );
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        let z8 = z(8);
        assert_eq!(omega(&z8, &z8.zero_ideal(), 12), Ok(Capped::Finite(3)));
        assert_eq!(
            omega(&z8, &z8.principal_ideal(4), 12),
            Ok(Capped::Finite(2))
        );
        let z7 = z(7);
        assert_eq!(omega(&z7, &z7.zero_ideal(), 12), Ok(Capped::Finite(1)));
        let z64 = z(64);
        assert_eq!(
            omega(&z64, &z64.zero_ideal(), 4),
            Ok(Capped::AboveCap { above_cap: 4 })
        );
        assert_eq!(omega(&z64, &z64.zero_ideal(), 12), Ok(Capped::Finite(6)));
    }

    #[test]
    fn power_index_on_z8() {
        let r = z(8);
        let m = local_structure(&r).unwrap();
        assert_eq!(power_index(&r, &m, &r.zero_ideal()), Some(3));
        assert_eq!(power_index(&r, &m, &r.principal_ideal(4)), Some(2));
        assert_eq!(power_index(&r, &m, &m), Some(1));
    }

    #[test]
    fn af_dim_examples() {
        assert_eq!(af_dim(&z(8), 6), Ok(Capped::Finite(1)));
        assert_eq!(af_dim(&z(6), 6), Ok(Capped::Finite(1)));
        assert_eq!(af_dim(&square_zero_plane(), 6), Ok(Capped::Finite(2)));
        assert_eq!(
            af_dim(&square_zero_plane(), 1),
            Ok(Capped::AboveCap { above_cap: 1 })
        );
    }

    #[test]
    fn taf_examples() {
        let z6 = z(6);
        let f = taf_factorization(&z6, &z6.zero_ideal()).unwrap().unwrap();
        assert_eq!(f, vec![z6.principal_ideal(2), z6.principal_ideal(3)]);

        let z8 = z(8);
        let two = z8.principal_ideal(2);
        assert_eq!(
            taf_factorization(&z8, &two).unwrap(),
            Some(vec![two.clone()])
        );
        let f = taf_factorization(&z8, &z8.zero_ideal()).unwrap().unwrap();
        let product = f.iter().fold(z8.unit_ideal(), |acc, i| z8.product(&acc, i));
        assert_eq!(product, z8.zero_ideal());
        assert!(f.iter().all(|i| is_n_absorbing(&z8, i, 2).unwrap()));
        assert!(
            f == vec![two.clone(), two.clone(), two.clone()]
                || f == vec![two.clone(), z8.principal_ideal(4)]
        );

        assert_eq!(
            taf_factorization(&z8, &z8.unit_ideal()),
            Err(Error::NotProper)
        );
    }

    #[test]
    fn taf_absent_when_no_factorization() {
        // F_2[x, y] / (x, y)^3: witnesses exist for every proper ideal iff af_dim <= 2
        let cube = FiniteRing::monomial_algebra(
            2,
            &[
                vec![0, 0],
                vec![1, 0],
                vec![0, 1],
                vec![2, 0],
                vec![1, 1],
                vec![0, 2],
            ],
        )
        .unwrap();
        let dim = af_dim(&cube, 6).unwrap();
        let ideals = enumerate_ideals(&cube).unwrap();
        let all_factor = ideals
            .iter()
            .filter(|i| cube.is_proper(i))
            .all(|i| taf_factorization(&cube, i).unwrap().is_some());
        assert_eq!(all_factor, dim.finite().is_some_and(|d| d <= 2));
    }
}
