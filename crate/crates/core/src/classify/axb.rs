use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::is_prime;

/// The finite field `F_{p^k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u64,
    pub k: u32,
}

impl FieldDesc {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFields(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidFields(format!(
                "degree of F_{p}^k must be positive"
            )));
        }
        if p.checked_pow(k).is_none() {
            return Err(Error::Overflow("field order"));
        }
        Ok(FieldDesc { p, k })
    }

    pub fn order(self) -> u64 {
        self.p.pow(self.k)
    }

    /// Whether `self` embeds in `other`.
    pub fn embeds_in(self, other: FieldDesc) -> bool {
        self.p == other.p && other.k.is_multiple_of(self.k)
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

/// Parses `p` or `p^k`.
impl FromStr for FieldDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFields(format!("expected p or p^k, got {s:?}"));
        let (p, k) = match s.trim().split_once('^') {
            Some((p, k)) => (p.trim(), k.trim()),
            None => (s.trim(), "1"),
        };
        let p = p.parse::<u64>().map_err(|_| bad())?;
        let k = k.parse::<u32>().map_err(|_| bad())?;
        FieldDesc::new(p, k)
    }
}

/// Classification of `A + X B[X]` for `A = prod F_{q_i}`, `B = prod F_{p_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxbReport {
    pub a_fields: Vec<FieldDesc>,
    pub b_fields: Vec<FieldDesc>,
    /// `spec_map[j] = i` when the `j`-th factor of B lies over the `i`-th of A.
    pub spec_map: Vec<usize>,
    pub reduced_dim1: bool,
    pub lpvr: bool,
    pub taf: bool,
    pub general_zpi: bool,
    pub bezout: bool,
}

/// Classifies `A + X B[X]` given the map from factors of B to factors of A.
///
/// Each `b_fields[j]` must contain `a_fields[spec_map[j]]`.
pub fn classify_axb(
    a_fields: &[FieldDesc],
    b_fields: &[FieldDesc],
    spec_map: &[usize],
) -> Result<AxbReport> {
    if a_fields.is_empty() || b_fields.is_empty() {
        return Err(Error::InvalidFields(
            "A and B need at least one factor each".into(),
        ));
    }
    for f in a_fields.iter().chain(b_fields) {
        FieldDesc::new(f.p, f.k)?;
    }
    if spec_map.len() != b_fields.len() {
        return Err(Error::InvalidFields(format!(
            "map has {} entries but B has {} factors",
            spec_map.len(),
            b_fields.len()
        )));
    }
    for (j, &i) in spec_map.iter().enumerate() {
        let Some(&a) = a_fields.get(i) else {
            return Err(Error::InvalidFields(format!(
                "map entry {i} is out of range for A"
            )));
        };
        let b = b_fields[j];
        if !a.embeds_in(b) {
            return Err(Error::InvalidFields(format!(
                "F_{a} does not embed in F_{b}"
            )));
        }
    }

    let mut hit = vec![false; a_fields.len()];
    let mut injective = true;
    for &i in spec_map {
        injective &= !std::mem::replace(&mut hit[i], true);
    }
    let bijective = injective && hit.iter().all(|&h| h);
    let same_fields = spec_map
        .iter()
        .enumerate()
        .all(|(j, &i)| a_fields[i].k == b_fields[j].k);
    let general_zpi = bijective && same_fields;

    Ok(AxbReport {
        a_fields: a_fields.to_vec(),
        b_fields: b_fields.to_vec(),
        spec_map: spec_map.to_vec(),
        reduced_dim1: true,
        lpvr: bijective,
        taf: bijective,
        general_zpi,
        bezout: general_zpi,
    })
}
