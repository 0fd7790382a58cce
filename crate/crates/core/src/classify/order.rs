use std::fmt;
use std::ops::RangeInclusive;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numtheory::{factorize, is_squarefree, kronecker};
use crate::quadorder::make_order;

/// AF-dimension of an order: a positive integer or infinity.
///
/// In JSON a finite value is a bare integer and infinity is `{"finite": false}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AfDim {
    Finite(u32),
    Infinite,
}

impl AfDim {
    pub fn is_finite(self) -> bool {
        matches!(self, AfDim::Finite(_))
    }

    /// `self <= bound`, with infinity above every bound.
    pub fn at_most(self, bound: u32) -> bool {
        matches!(self, AfDim::Finite(n) if n <= bound)
    }
}

impl fmt::Display for AfDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AfDim::Finite(n) => write!(f, "{n}"),
            AfDim::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for AfDim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            AfDim::Finite(n) => s.serialize_u32(*n),
            AfDim::Infinite => {
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry("finite", &false)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for AfDim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Finite(u32),
            Marker { finite: bool },
        }
        match Repr::deserialize(d)? {
            Repr::Finite(0) => Err(de::Error::custom("AF-dimension must be positive")),
            Repr::Finite(n) => Ok(AfDim::Finite(n)),
            Repr::Marker { finite: false } => Ok(AfDim::Infinite),
            Repr::Marker { finite: true } => {
                Err(de::Error::custom("finite AF-dimension needs a value"))
            }
        }
    }
}

/// A prime factor of `r` with its exponent and `kronecker(d, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDatum {
    pub p: u64,
    pub a: u32,
    pub symbol: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub n: i64,
    pub r: i64,
    pub d: i64,
    pub factor_data: Vec<FactorDatum>,
    /// Indices into `factor_data` with symbol 0.
    pub f1_set: Vec<usize>,
    /// Indices into `factor_data` with symbol -1.
    pub f2_set: Vec<usize>,
    pub af_dim: AfDim,
    pub dedekind: bool,
    pub gpvd: bool,
    pub lpvd: bool,
    pub lapvd: bool,
    pub locally_conducive: bool,
    pub taf: bool,
    /// Set for `r = 1`, where the value rests on the maximal order being Dedekind.
    pub by_convention: bool,
}

fn factor_data(d: i64, r: i64) -> Result<Vec<FactorDatum>> {
    let (_, f) = factorize(r)?;
    f.factors()
        .iter()
        .map(|&(p, a)| {
            Ok(FactorDatum {
                p,
                a,
                symbol: kronecker(d, p as i64)?,
            })
        })
        .collect()
}

fn af_dim_from(data: &[FactorDatum]) -> AfDim {
    if data.is_empty() {
        return AfDim::Finite(1);
    }
    if data.iter().any(|f| f.symbol == 1) {
        return AfDim::Infinite;
    }
    let value = data
        .iter()
        .map(|f| if f.symbol == 0 { 2 * f.a + 1 } else { 2 * f.a })
        .max()
        .unwrap_or(1);
    AfDim::Finite(value)
}

/// AF-dimension of `Z[r w_n]` from the factorization of `r`.
pub fn af_dim_order(n: i64, r: i64) -> Result<AfDim> {
    let order = make_order(n, r)?;
    Ok(af_dim_from(&factor_data(order.field.d, r)?))
}

pub fn classify_order(n: i64, r: i64) -> Result<OrderReport> {
    let order = make_order(n, r)?;
    let d = order.field.d;
    let data = factor_data(d, r)?;
    let af_dim = af_dim_from(&data);
    let indices = |s: i8| -> Vec<usize> {
        data.iter()
            .enumerate()
            .filter(|(_, f)| f.symbol == s)
            .map(|(i, _)| i)
            .collect()
    };
    let squarefree = is_squarefree(r)?;
    let no_split = data.iter().all(|f| f.symbol != 1);
    let all_inert = data.iter().all(|f| f.symbol == -1);
    let pvd = squarefree && all_inert;
    Ok(OrderReport {
        n,
        r,
        d,
        f1_set: indices(0),
        f2_set: indices(-1),
        factor_data: data,
        af_dim,
        dedekind: r == 1,
        gpvd: pvd,
        lpvd: pvd,
        lapvd: squarefree && no_split,
        locally_conducive: no_split,
        taf: af_dim.at_most(2),
        by_convention: r == 1,
    })
}

/// Reports for every squarefree `n` (other than 0 and 1) and every `r >= 1`
/// in the given ranges, ordered by `(n, r)`.
pub fn sweep(
    n_range: RangeInclusive<i64>,
    r_range: RangeInclusive<i64>,
) -> Result<Vec<OrderReport>> {
    let mut out = Vec::new();
    for n in n_range {
        if n == 0 || n == 1 || !is_squarefree(n)? {
            continue;
        }
        for r in r_range.clone().filter(|&r| r >= 1) {
            out.push(classify_order(n, r)?);
        }
    }
    Ok(out)
}
