//! Quadratic fields, their orders `Z[r w]`, ideals as rank-2 lattices in
//! Hermite normal form, prime splitting, and finite quotient rings.
//!
//! Elements of an order are written in the basis `(1, theta)` with
//! `theta = r w`, as integer pairs `(x, y)` meaning `x + y theta`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finitering::FiniteRing;
use crate::numtheory::{self, kronecker};

/// Default bound on the norm of an ideal we are willing to quotient by.
pub const DEFAULT_QUOTIENT_BOUND: u64 = 65_536;

/// `Q(sqrt n)` for squarefree `n`, with its discriminant `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticField {
    pub n: i64,
    pub d: i64,
}

impl QuadraticField {
    pub fn new(n: i64) -> Result<Self> {
        Ok(Self {
            n,
            d: discriminant(n)?,
        })
    }

    /// Whether `n = 1 (mod 4)`, so that `w = (1 + sqrt n) / 2`.
    pub fn is_one_mod_four(&self) -> bool {
        self.n.rem_euclid(4) == 1
    }
}

/// Discriminant of `Q(sqrt n)`.
pub fn discriminant(n: i64) -> Result<i64> {
    if n == 0 || n == 1 {
        return Err(Error::TrivialField { n });
    }
    if !numtheory::is_squarefree(n)? {
        return Err(Error::NotSquarefree { n });
    }
    if n.rem_euclid(4) == 1 {
        Ok(n)
    } else {
        n.checked_mul(4).ok_or(Error::Overflow("discriminant"))
    }
}

/// The order `Z[theta]`, `theta = r w_n`, with `theta^2 = t theta - u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadOrder {
    pub field: QuadraticField,
    pub r: i64,
    pub t: i128,
    pub u: i128,
}

pub fn make_order(n: i64, r: i64) -> Result<QuadOrder> {
    let field = QuadraticField::new(n)?;
    if r < 1 {
        return Err(Error::NonPositiveConductor { r });
    }
    let (r128, n128) = (r as i128, n as i128);
    let (t, u) = if field.is_one_mod_four() {
        (r128, r128 * r128 * (1 - n128) / 4)
    } else {
        (0, -r128 * r128 * n128)
    };
    Ok(QuadOrder { field, r, t, u })
}

/// An element `x + y theta`.
pub type Coord = (i64, i64);

fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

impl QuadOrder {
    pub fn n(&self) -> i64 {
        self.field.n
    }

    pub fn is_maximal(&self) -> bool {
        self.r == 1
    }

    fn mul_wide(&self, (x1, y1): (i128, i128), (x2, y2): (i128, i128)) -> (i128, i128) {
        (
            x1 * x2 - self.u * y1 * y2,
            x1 * y2 + x2 * y1 + self.t * y1 * y2,
        )
    }

    /// Product of two elements.
    pub fn mul(&self, a: Coord, b: Coord) -> Result<Coord> {
        let (x, y) = self.mul_wide((a.0 as i128, a.1 as i128), (b.0 as i128, b.1 as i128));
        Ok((narrow(x, "element product")?, narrow(y, "element product")?))
    }

    /// Norm form: the product of an element with its conjugate.
    pub fn norm(&self, (x, y): Coord) -> i128 {
        let (x, y) = (x as i128, y as i128);
        x * x + self.t * x * y + self.u * y * y
    }
}

/// A nonzero ideal `Z a + Z (b + c theta)` with `0 <= b < a` and `c | a, c | b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdealHNF {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for IdealHNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl IdealHNF {
    pub fn norm(&self) -> u128 {
        self.a as u128 * self.c as u128
    }

    /// The principal ideal `m R` for a nonzero integer `m`.
    pub fn integer(m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::DegenerateIdeal);
        }
        let m = m.checked_abs().ok_or(Error::Overflow("ideal"))?;
        Ok(Self { a: m, b: 0, c: m })
    }

    pub fn unit() -> Self {
        Self { a: 1, b: 0, c: 1 }
    }

    /// Lattice membership of `x + y theta`.
    pub fn contains(&self, (x, y): Coord) -> bool {
        let (x, y) = (x as i128, y as i128);
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        if y % c != 0 {
            return false;
        }
        (x - (y / c) * b) % a == 0
    }

    /// Whether the lattice is closed under multiplication by `theta` in `order`.
    pub fn is_ideal_of(&self, order: &QuadOrder) -> bool {
        if self.a <= 0 || self.c <= 0 || self.b < 0 || self.b >= self.a {
            return false;
        }
        if self.a % self.c != 0 || self.b % self.c != 0 {
            return false;
        }
        let contains_wide = |(x, y): (i128, i128)| match (i64::try_from(x), i64::try_from(y)) {
            (Ok(x), Ok(y)) => self.contains((x, y)),
            _ => false,
        };
        let theta = (0i128, 1i128);
        contains_wide(order.mul_wide(theta, (self.a as i128, 0)))
            && contains_wide(order.mul_wide(theta, (self.b as i128, self.c as i128)))
    }

    pub fn basis(&self) -> [Coord; 2] {
        [(self.a, 0), (self.b, self.c)]
    }

    fn check_of(&self, order: &QuadOrder) -> Result<()> {
        if self.is_ideal_of(order) {
            Ok(())
        } else {
            Err(Error::ForeignIdeal(self.to_string()))
        }
    }
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    egcd(a, b).0
}

/// HNF of the Z-span of `vectors`, which must have rank 2.
fn lattice_hnf<I: IntoIterator<Item = (i128, i128)>>(vectors: I) -> Result<IdealHNF> {
    let mut a = 0i128;
    let mut pivot: Option<(i128, i128)> = None;
    for (x, y) in vectors {
        if y == 0 {
            a = gcd_i128(a, x);
            continue;
        }
        match pivot {
            None => pivot = Some((x, y)),
            Some((px, py)) => {
                let (g, s, t) = egcd(py, y);
                let combined = (s * px + t * x, g);
                let killed = (y / g) * px - (py / g) * x;
                a = gcd_i128(a, killed);
                pivot = Some(if a != 0 {
                    (combined.0.rem_euclid(a), combined.1)
                } else {
                    combined
                });
            }
        }
    }
    let (px, c) = pivot.ok_or(Error::DegenerateIdeal)?;
    if a == 0 {
        return Err(Error::DegenerateIdeal);
    }
    let (px, c) = if c < 0 { (-px, -c) } else { (px, c) };
    let b = px.rem_euclid(a);
    Ok(IdealHNF {
        a: narrow(a, "ideal")?,
        b: narrow(b, "ideal")?,
        c: narrow(c, "ideal")?,
    })
}

/// The ideal generated by `gens`: the lattice spanned by the generators and
/// their `theta`-multiples.
pub fn ideal_from_generators(order: &QuadOrder, gens: &[Coord]) -> Result<IdealHNF> {
    if gens.iter().all(|&g| g == (0, 0)) {
        return Err(Error::DegenerateIdeal);
    }
    let theta = (0i128, 1i128);
    let vectors = gens.iter().flat_map(|&(x, y)| {
        let g = (x as i128, y as i128);
        [g, order.mul_wide(theta, g)]
    });
    let ideal = lattice_hnf(vectors)?;
    debug_assert!(ideal.is_ideal_of(order));
    Ok(ideal)
}

pub fn ideal_mul(order: &QuadOrder, i: &IdealHNF, j: &IdealHNF) -> Result<IdealHNF> {
    i.check_of(order)?;
    j.check_of(order)?;
    let wide = |(x, y): Coord| (x as i128, y as i128);
    let products = i
        .basis()
        .into_iter()
        .flat_map(|g| j.basis().map(|h| order.mul_wide(wide(g), wide(h))));
    lattice_hnf(products)
}

pub fn ideal_pow(order: &QuadOrder, i: &IdealHNF, k: u32) -> Result<IdealHNF> {
    let mut acc = IdealHNF::unit();
    for _ in 0..k {
        acc = ideal_mul(order, &acc, i)?;
    }
    Ok(acc)
}

pub fn ideal_contains(order: &QuadOrder, i: &IdealHNF, x: Coord) -> Result<bool> {
    i.check_of(order)?;
    Ok(i.contains(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitKind {
    Ramified,
    Split,
    Inert,
}

impl SplitKind {
    pub fn from_symbol(symbol: i8) -> Self {
        match symbol {
            0 => SplitKind::Ramified,
            1 => SplitKind::Split,
            _ => SplitKind::Inert,
        }
    }
}

impl fmt::Display for SplitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitKind::Ramified => "ramified",
            SplitKind::Split => "split",
            SplitKind::Inert => "inert",
        })
    }
}

/// Decomposition of `p Z[w_n]` into prime ideals of the maximal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingResult {
    pub n: i64,
    pub p: i64,
    pub kind: SplitKind,
    pub primes: Vec<IdealHNF>,
}

/// Roots of `x^2 - t x + u` modulo the prime `p`, ascending.
fn roots_mod_p(t: i128, u: i128, p: i64) -> Result<Vec<u64>> {
    let pu = p as u64;
    let t_mod = t.rem_euclid(p as i128) as u64;
    let u_mod = u.rem_euclid(p as i128) as u64;
    if p == 2 {
        return Ok((0..2u64)
            .filter(|&x| (x * x + t_mod * x + u_mod).is_multiple_of(2))
            .collect());
    }
    let disc = (t * t - 4 * u).rem_euclid(p as i128) as i64;
    let Some(s) = numtheory::sqrt_mod(disc, p)? else {
        return Ok(Vec::new());
    };
    let half = numtheory::inv_mod_prime(2, pu);
    let mut roots: Vec<u64> = [(t_mod + s) % pu, (t_mod + pu - s) % pu]
        .into_iter()
        .map(|x| numtheory::mul_mod(x, half, pu))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

pub fn split_prime(n: i64, p: i64) -> Result<SplittingResult> {
    let order = make_order(n, 1)?;
    let symbol = kronecker(order.field.d, p)?;
    let kind = SplitKind::from_symbol(symbol);
    let mut primes = match kind {
        SplitKind::Inert => vec![IdealHNF::integer(p)?],
        SplitKind::Ramified | SplitKind::Split => roots_mod_p(order.t, order.u, p)?
            .into_iter()
            .map(|root| ideal_from_generators(&order, &[(p, 0), (-(root as i64), 1)]))
            .collect::<Result<_>>()?,
    };
    primes.sort();
    let expected = if kind == SplitKind::Split { 2 } else { 1 };
    assert_eq!(
        primes.len(),
        expected,
        "root count disagrees with the Kronecker symbol for n = {n}, p = {p}"
    );
    Ok(SplittingResult { n, p, kind, primes })
}

/// `R / I` as an explicit finite ring, together with the projection from
/// order coordinates.
#[derive(Debug, Clone)]
pub struct QuadQuotient {
    pub ring: FiniteRing,
    pub ideal: IdealHNF,
    /// `b / c`: the quotient basis is `(1, theta + shift)`.
    shift: i128,
}

impl QuadQuotient {
    /// Index of the image of `x + y theta`.
    pub fn project(&self, (x, y): Coord) -> u32 {
        let (a, c) = (self.ideal.a as i128, self.ideal.c as i128);
        let (x, y) = (x as i128, y as i128);
        let first = (x - y * self.shift).rem_euclid(a) as u64;
        if c == 1 {
            self.ring.index_of(&[first])
        } else {
            self.ring.index_of(&[first, y.rem_euclid(c) as u64])
        }
    }
}

/// The quotient ring `R / I`, of order `norm(I)`.
///
/// Writing `phi = theta + b/c`, the ideal is `Z a + Z c phi`, so the quotient
/// is `Z_a x Z_c` in the basis `(1, phi)`.
pub fn quotient_ring(order: &QuadOrder, ideal: &IdealHNF, bound: u64) -> Result<QuadQuotient> {
    ideal.check_of(order)?;
    let norm = ideal.norm();
    if norm > bound as u128 {
        return Err(Error::QuotientTooLarge { norm, bound });
    }
    if norm == 1 {
        return Err(Error::NotProper);
    }
    let (a, c) = (ideal.a as i128, ideal.c as i128);
    let s = ideal.b as i128 / c;
    // phi^2 = (t + 2s) phi - (t s + s^2 + u)
    let phi_sq_const = (-(order.t * s + s * s + order.u)).rem_euclid(a) as u64;
    let phi_sq_lin = (order.t + 2 * s).rem_euclid(c) as u64;
    let (a, c) = (a as u64, c as u64);
    let ring = if c == 1 {
        FiniteRing::new(vec![a], vec![vec![1]], vec![1])?
    } else {
        FiniteRing::new(
            vec![a, c],
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![0, 1],
                vec![phi_sq_const, phi_sq_lin],
            ],
            vec![1, 0],
        )?
    };
    Ok(QuadQuotient {
        ring,
        ideal: *ideal,
        shift: s,
    })
}
