use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::lattice::{diagonalize, hnf_contains, hnf_with_moduli};

/// Largest ring we will build by default.
pub const DEFAULT_RING_BOUND: u64 = 65_536;

/// A finite commutative unital ring, presented as the additive group
/// `Z_{e_1} x ... x Z_{e_k}` with structure constants for the products of
/// basis elements.
///
/// Elements are addressed by index: coordinate `i` has stride `e_1 ... e_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    moduli: Vec<u64>,
    /// `table[i * k + j]` holds the coordinates of `b_i b_j`.
    table: Vec<Vec<u64>>,
    one: Vec<u64>,
    strides: Vec<u64>,
    size: u64,
}

impl FiniteRing {
    pub fn new(moduli: Vec<u64>, table: Vec<Vec<u64>>, one: Vec<u64>) -> Result<Self> {
        Self::with_bound(moduli, table, one, DEFAULT_RING_BOUND)
    }

    /// Build and validate a ring, rejecting anything larger than `bound`.
    pub fn with_bound(
        moduli: Vec<u64>,
        table: Vec<Vec<u64>>,
        one: Vec<u64>,
        bound: u64,
    ) -> Result<Self> {
        let k = moduli.len();
        let invalid = |msg: String| Err(Error::InvalidRing(msg));
        if k == 0 {
            return invalid("the zero ring is not allowed".into());
        }
        if let Some(e) = moduli.iter().find(|&&e| e < 2) {
            return invalid(format!("cyclic order {e} must be at least 2"));
        }
        let order = moduli.iter().try_fold(1u128, |acc, &e| {
            let acc = acc * e as u128;
            (acc <= bound as u128).then_some(acc)
        });
        let Some(order) = order else {
            let order = moduli.iter().map(|&e| e as u128).product();
            return Err(Error::RingTooLarge { order, bound });
        };
        if bound > u32::MAX as u64 + 1 {
            return invalid("ring bound exceeds the index range".into());
        }
        if table.len() != k * k {
            return invalid(format!(
                "expected {} structure constants, got {}",
                k * k,
                table.len()
            ));
        }
        let in_range = |v: &[u64]| v.len() == k && v.iter().zip(&moduli).all(|(x, e)| x < e);
        if let Some(pos) = table.iter().position(|v| !in_range(v)) {
            return invalid(format!(
                "structure constant b{} b{} is malformed",
                pos / k,
                pos % k
            ));
        }
        if !in_range(&one) {
            return invalid("unity vector is malformed".into());
        }

        let mut strides = Vec::with_capacity(k);
        let mut acc = 1u64;
        for &e in &moduli {
            strides.push(acc);
            acc *= e;
        }
        let ring = Self {
            moduli,
            table,
            one,
            strides,
            size: order as u64,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let k = self.rank();
        let unit = |i: usize| -> Vec<u64> { (0..k).map(|l| u64::from(l == i)).collect() };
        for i in 0..k {
            for j in 0..k {
                let c = &self.table[i * k + j];
                if c != &self.table[j * k + i] {
                    return Err(Error::InvalidRing(format!("b{i} b{j} != b{j} b{i}")));
                }
                // b_i has additive order e_i, so e_i must kill b_i b_j
                let killed = c
                    .iter()
                    .zip(&self.moduli)
                    .all(|(&x, &e)| (x as u128 * self.moduli[i] as u128).is_multiple_of(e as u128));
                if !killed {
                    return Err(Error::InvalidRing(format!(
                        "b{i} b{j} is not annihilated by {}",
                        self.moduli[i]
                    )));
                }
            }
        }
        for i in 0..k {
            let bi = unit(i);
            if self.mul_coords(&self.one, &bi) != bi {
                return Err(Error::InvalidRing(format!("unity does not fix b{i}")));
            }
            for j in 0..k {
                let bj = unit(j);
                let bij = self.mul_coords(&bi, &bj);
                for l in 0..k {
                    let bl = unit(l);
                    if self.mul_coords(&bij, &bl)
                        != self.mul_coords(&bi, &self.mul_coords(&bj, &bl))
                    {
                        return Err(Error::InvalidRing(format!(
                            "multiplication is not associative on b{i}, b{j}, b{l}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z / m`.
    pub fn zmod(m: u64) -> Result<Self> {
        Self::new(vec![m], vec![vec![1 % m]], vec![1 % m])
    }

    /// Direct product of rings.
    pub fn direct_product(factors: &[FiniteRing]) -> Result<Self> {
        let moduli: Vec<u64> = factors
            .iter()
            .flat_map(|r| r.moduli.iter().copied())
            .collect();
        let k = moduli.len();
        let mut table = vec![vec![0u64; k]; k * k];
        let mut one = Vec::with_capacity(k);
        let mut offset = 0;
        for f in factors {
            let fk = f.rank();
            for i in 0..fk {
                for j in 0..fk {
                    let dst = &mut table[(offset + i) * k + offset + j];
                    dst[offset..offset + fk].copy_from_slice(&f.table[i * fk + j]);
                }
            }
            one.extend_from_slice(&f.one);
            offset += fk;
        }
        Self::new(moduli, table, one)
    }

    /// `(Z/m)[x_1, ..., x_v] / (monomials outside basis)`, where `basis` lists
    /// the surviving exponent vectors. `basis` must be closed under taking
    /// divisors and contain the zero vector.
    pub fn monomial_algebra(modulus: u64, basis: &[Vec<u32>]) -> Result<Self> {
        let pos = |m: &[u32]| basis.iter().position(|b| b.as_slice() == m);
        let nvars = basis.first().map_or(0, Vec::len);
        if basis.iter().any(|b| b.len() != nvars) {
            return Err(Error::InvalidRing(
                "exponent vectors differ in length".into(),
            ));
        }
        let Some(unit_pos) = pos(&vec![0; nvars]) else {
            return Err(Error::InvalidRing(
                "basis must contain the constant monomial".into(),
            ));
        };
        for b in basis {
            for v in 0..nvars {
                if b[v] > 0 {
                    let mut d = b.clone();
                    d[v] -= 1;
                    if pos(&d).is_none() {
                        return Err(Error::InvalidRing(format!(
                            "monomial basis not divisor-closed at {b:?}"
                        )));
                    }
                }
            }
        }
        let k = basis.len();
        let mut table = vec![vec![0u64; k]; k * k];
        for i in 0..k {
            for j in 0..k {
                let m: Vec<u32> = basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect();
                if let Some(p) = pos(&m) {
                    table[i * k + j][p] = 1 % modulus;
                }
            }
        }
        let mut one = vec![0u64; k];
        one[unit_pos] = 1 % modulus;
        Self::new(vec![modulus; k], table, one)
    }

    /// Cardinality.
    pub fn order(&self) -> u64 {
        self.size
    }

    /// Number of cyclic factors of the additive group.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &[u64] {
        &self.table[i * self.rank() + j]
    }

    pub fn one_coords(&self) -> &[u64] {
        &self.one
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        self.index_of(&self.one)
    }

    /// Index of basis element `b_i`.
    pub fn basis_element(&self, i: usize) -> u32 {
        self.strides[i] as u32
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size as u32
    }

    pub fn coords(&self, x: u32) -> Vec<u64> {
        let mut x = x as u64;
        self.moduli
            .iter()
            .map(|&e| {
                let c = x % e;
                x /= e;
                c
            })
            .collect()
    }

    /// Index of a coordinate vector; entries are reduced modulo the cyclic orders.
    pub fn index_of(&self, coords: &[u64]) -> u32 {
        coords
            .iter()
            .zip(&self.moduli)
            .zip(&self.strides)
            .map(|((&c, &e), &s)| (c % e) * s)
            .sum::<u64>() as u32
    }

    fn index_of_wide(&self, coords: &[i128]) -> u32 {
        coords
            .iter()
            .zip(&self.moduli)
            .zip(&self.strides)
            .map(|((&c, &e), &s)| c.rem_euclid(e as i128) as u64 * s)
            .sum::<u64>() as u32
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.coords(x), self.coords(y));
        let sum: Vec<u64> = a.iter().zip(&b).map(|(p, q)| p + q).collect();
        self.index_of(&sum)
    }

    pub fn neg(&self, x: u32) -> u32 {
        let c: Vec<u64> = self
            .coords(x)
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &e)| (e - c) % e)
            .collect();
        self.index_of(&c)
    }

    pub fn mul_coords(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let k = self.rank();
        let mut acc = vec![0u128; k];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let w = xi as u128 * yj as u128;
                for (a, &c) in acc.iter_mut().zip(&self.table[i * k + j]) {
                    *a += w * c as u128;
                }
            }
        }
        acc.iter()
            .zip(&self.moduli)
            .map(|(&a, &e)| (a % e as u128) as u64)
            .collect()
    }

    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.index_of(&self.mul_coords(&self.coords(x), &self.coords(y)))
    }

    pub fn pow(&self, x: u32, mut e: u32) -> u32 {
        let mut acc = self.one();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x` is a unit iff `x R = R`.
    pub fn is_unit(&self, x: u32) -> bool {
        self.principal_ideal(x).size == self.size
    }

    fn wide(c: &[u64]) -> Vec<i128> {
        c.iter().map(|&x| x as i128).collect()
    }

    fn ideal_from_rows<I>(&self, rows: I, mut generators: Vec<u32>) -> FiniteIdeal
    where
        I: IntoIterator<Item = Vec<i128>>,
    {
        let basis = hnf_with_moduli(rows, &self.moduli);
        let index: u64 = basis.iter().enumerate().map(|(i, r)| r[i] as u64).product();
        generators.sort_unstable();
        generators.dedup();
        generators.retain(|&g| g != 0);
        FiniteIdeal {
            basis,
            size: self.size / index,
            generators,
        }
    }

    /// Ideal generated by the given elements.
    pub fn ideal(&self, generators: &[u32]) -> FiniteIdeal {
        let k = self.rank();
        let rows: Vec<Vec<i128>> = generators
            .iter()
            .flat_map(|&g| {
                let gc = self.coords(g);
                (0..k).map(move |i| {
                    let mut row = vec![0u128; k];
                    for (j, &x) in gc.iter().enumerate() {
                        for (r, &c) in row.iter_mut().zip(&self.table[j * k + i]) {
                            *r += x as u128 * c as u128;
                        }
                    }
                    row.into_iter().map(|x| x as i128).collect::<Vec<_>>()
                })
            })
            .collect();
        self.ideal_from_rows(rows, generators.to_vec())
    }

    pub fn principal_ideal(&self, x: u32) -> FiniteIdeal {
        self.ideal(&[x])
    }

    pub fn zero_ideal(&self) -> FiniteIdeal {
        self.ideal(&[])
    }

    pub fn unit_ideal(&self) -> FiniteIdeal {
        self.ideal(&[self.one()])
    }

    pub fn is_proper(&self, i: &FiniteIdeal) -> bool {
        i.size < self.size
    }

    pub fn contains(&self, i: &FiniteIdeal, x: u32) -> bool {
        hnf_contains(&i.basis, &Self::wide(&self.coords(x)))
    }

    /// `i` is contained in `j`.
    pub fn is_subset(&self, i: &FiniteIdeal, j: &FiniteIdeal) -> bool {
        i.size <= j.size
            && i.basis
                .iter()
                .all(|r| hnf_contains(&j.basis, &r.iter().map(|&x| x as i128).collect::<Vec<_>>()))
    }

    pub fn sum(&self, i: &FiniteIdeal, j: &FiniteIdeal) -> FiniteIdeal {
        let rows = i
            .basis
            .iter()
            .chain(&j.basis)
            .map(|r| r.iter().map(|&x| x as i128).collect());
        let gens = i.generators.iter().chain(&j.generators).copied().collect();
        self.ideal_from_rows(rows, gens)
    }

    pub fn product(&self, i: &FiniteIdeal, j: &FiniteIdeal) -> FiniteIdeal {
        let to_elem = |r: &Vec<i64>| -> Vec<u64> {
            r.iter()
                .zip(&self.moduli)
                .map(|(&x, &e)| (x as i128).rem_euclid(e as i128) as u64)
                .collect()
        };
        let ie: Vec<Vec<u64>> = i.basis.iter().map(to_elem).collect();
        let je: Vec<Vec<u64>> = j.basis.iter().map(to_elem).collect();
        let rows: Vec<Vec<i128>> = ie
            .iter()
            .flat_map(|x| je.iter().map(|y| Self::wide(&self.mul_coords(x, y))))
            .collect();
        let gens = i
            .generators
            .iter()
            .flat_map(|&g| j.generators.iter().map(move |&h| (g, h)))
            .map(|(g, h)| self.mul(g, h))
            .collect();
        self.ideal_from_rows(rows, gens)
    }

    pub fn ideal_pow(&self, i: &FiniteIdeal, e: u32) -> FiniteIdeal {
        (0..e).fold(self.unit_ideal(), |acc, _| self.product(&acc, i))
    }

    /// Sorted element indices of an ideal.
    pub fn ideal_elements(&self, i: &FiniteIdeal) -> Vec<u32> {
        self.elements().filter(|&x| self.contains(i, x)).collect()
    }

    /// The quotient `R / I` together with the projection and a section.
    pub fn quotient(&self, i: &FiniteIdeal) -> Result<RingQuotient> {
        if !self.is_proper(i) {
            return Err(Error::NotProper);
        }
        let dg = diagonalize(&i.basis);
        let kept: Vec<usize> = (0..self.rank()).filter(|&c| dg.d[c] > 1).collect();
        let moduli: Vec<u64> = kept.iter().map(|&c| dg.d[c] as u64).collect();
        let map: Vec<Vec<i128>> =
            dg.v.iter()
                .map(|row| kept.iter().map(|&c| row[c]).collect())
                .collect();
        let lifts: Vec<u32> = kept
            .iter()
            .map(|&c| self.index_of_wide(&dg.v_inv[c]))
            .collect();

        let project = |x: &[u64]| -> Vec<u64> {
            (0..kept.len())
                .map(|c| {
                    let s: i128 = x
                        .iter()
                        .zip(&map)
                        .map(|(&xi, row)| xi as i128 * row[c])
                        .sum();
                    s.rem_euclid(moduli[c] as i128) as u64
                })
                .collect()
        };
        let kq = kept.len();
        let mut table = Vec::with_capacity(kq * kq);
        for &a in &lifts {
            for &b in &lifts {
                table.push(project(&self.coords(self.mul(a, b))));
            }
        }
        let one = project(&self.one);
        let ring = FiniteRing::with_bound(moduli.clone(), table, one, self.size.max(2))?;
        Ok(RingQuotient { ring, map, lifts })
    }
}

/// An ideal of a [`FiniteRing`]: the HNF of its preimage lattice in `Z^k`
/// together with known ring generators. Identity is the lattice alone.
#[derive(Debug, Clone)]
pub struct FiniteIdeal {
    basis: Vec<Vec<i64>>,
    size: u64,
    generators: Vec<u32>,
}

impl FiniteIdeal {
    /// Number of elements.
    pub fn order(&self) -> u64 {
        self.size
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Canonical lattice basis.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }
}

impl PartialEq for FiniteIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}

impl Eq for FiniteIdeal {}

impl Hash for FiniteIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.basis.hash(state);
    }
}

impl PartialOrd for FiniteIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By cardinality, then by canonical basis.
impl Ord for FiniteIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.size, &self.basis).cmp(&(other.size, &other.basis))
    }
}

/// `R / I` with the maps between `R` and the quotient.
#[derive(Debug, Clone)]
pub struct RingQuotient {
    pub ring: FiniteRing,
    /// Projection matrix: coordinate `c` of the image of `x` is `sum_j x_j map[j][c]`.
    map: Vec<Vec<i128>>,
    /// Preimages in `R` of the quotient's basis elements.
    lifts: Vec<u32>,
}

impl RingQuotient {
    pub fn project_coords(&self, x: &[u64]) -> u32 {
        let coords: Vec<u64> = self
            .ring
            .moduli()
            .iter()
            .enumerate()
            .map(|(c, &e)| {
                let s: i128 = x
                    .iter()
                    .zip(&self.map)
                    .map(|(&xi, row)| xi as i128 * row[c])
                    .sum();
                s.rem_euclid(e as i128) as u64
            })
            .collect();
        self.ring.index_of(&coords)
    }

    pub fn project(&self, parent: &FiniteRing, x: u32) -> u32 {
        self.project_coords(&parent.coords(x))
    }

    /// A preimage of `q` in the parent ring.
    pub fn lift(&self, parent: &FiniteRing, q: u32) -> u32 {
        self.ring
            .coords(q)
            .iter()
            .zip(&self.lifts)
            .fold(0, |acc, (&c, &b)| {
                let term = (0..c).fold(0, |t, _| parent.add(t, b));
                parent.add(acc, term)
            })
    }

    /// Image of an ideal of the parent ring.
    pub fn project_ideal(&self, parent: &FiniteRing, i: &FiniteIdeal) -> FiniteIdeal {
        let gens: Vec<u32> = i
            .generators
            .iter()
            .map(|&g| self.project(parent, g))
            .collect();
        let rows = i.basis.iter().map(|r| {
            let coords: Vec<u64> = r
                .iter()
                .zip(parent.moduli())
                .map(|(&x, &e)| (x as i128).rem_euclid(e as i128) as u64)
                .collect();
            let img = self.project_coords(&coords);
            self.ring
                .coords(img)
                .into_iter()
                .map(|x| x as i128)
                .collect()
        });
        self.ring.ideal_from_rows(rows, gens)
    }
}
