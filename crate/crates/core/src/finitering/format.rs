//! Plain-text ring descriptions.
//!
//! ```text
//! # F_2[x, y] / (x, y)^2, basis 1, x, y
//! orders 2 2 2
//! one 1 0 0
//! mul 0 0 1 0 0
//! mul 0 1 0 1 0
//! mul 0 2 0 0 1
//! ```
//!
//! * `orders e_1 ... e_k` gives the additive group `Z_{e_1} x ... x Z_{e_k}`
//!   and must come first.
//! * `one c_1 ... c_k` gives the coordinates of the identity.
//! * `mul i j c_1 ... c_k` gives the coordinates of `b_i b_j`. The entry for
//!   `(j, i)` is implied; pairs that are never listed multiply to zero.
//! * Blank lines and text after `#` are ignored. Tokens are separated by
//!   whitespace.
//!
//! The serialized form lists every pair `i <= j`, so parsing it back yields an
//! identical ring.

use std::fmt;
use std::str::FromStr;

use super::FiniteRing;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers(line: usize, tokens: &[&str]) -> Result<Vec<u64>> {
    tokens
        .iter()
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| parse_err(line, format!("expected a non-negative integer, got {t:?}")))
        })
        .collect()
}

impl FromStr for FiniteRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut moduli: Option<Vec<u64>> = None;
        let mut one: Option<Vec<u64>> = None;
        let mut table: Vec<Option<Vec<u64>>> = Vec::new();

        for (lineno, raw) in s.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, rest)) = tokens.split_first() else {
                continue;
            };
            match keyword {
                "orders" => {
                    if moduli.is_some() {
                        return Err(parse_err(line, "duplicate orders line"));
                    }
                    let m = numbers(line, rest)?;
                    if m.is_empty() {
                        return Err(parse_err(line, "orders line is empty"));
                    }
                    table = vec![None; m.len() * m.len()];
                    moduli = Some(m);
                }
                "one" => {
                    let k = moduli
                        .as_ref()
                        .ok_or_else(|| parse_err(line, "orders must come first"))?
                        .len();
                    if one.is_some() {
                        return Err(parse_err(line, "duplicate one line"));
                    }
                    let v = numbers(line, rest)?;
                    if v.len() != k {
                        return Err(parse_err(line, format!("expected {k} coordinates")));
                    }
                    one = Some(v);
                }
                "mul" => {
                    let k = moduli
                        .as_ref()
                        .ok_or_else(|| parse_err(line, "orders must come first"))?
                        .len();
                    let v = numbers(line, rest)?;
                    if v.len() != k + 2 {
                        return Err(parse_err(
                            line,
                            format!("expected 2 indices and {k} coordinates"),
                        ));
                    }
                    let (i, j) = (v[0] as usize, v[1] as usize);
                    if i >= k || j >= k {
                        return Err(parse_err(line, format!("basis index out of range 0..{k}")));
                    }
                    let c = v[2..].to_vec();
                    for slot in [i * k + j, j * k + i] {
                        match &table[slot] {
                            Some(prev) if *prev != c => {
                                return Err(parse_err(
                                    line,
                                    format!("conflicting entries for b{i} b{j}"),
                                ));
                            }
                            _ => table[slot] = Some(c.clone()),
                        }
                    }
                }
                other => return Err(parse_err(line, format!("unknown keyword {other:?}"))),
            }
        }

        let moduli = moduli.ok_or_else(|| parse_err(0, "missing orders line"))?;
        let one = one.ok_or_else(|| parse_err(0, "missing one line"))?;
        let k = moduli.len();
        let table = table
            .into_iter()
            .map(|c| c.unwrap_or_else(|| vec![0; k]))
            .collect();
        FiniteRing::new(moduli, table, one)
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.rank();
        writeln!(f, "orders {}", join(self.moduli()))?;
        writeln!(f, "one {}", join(self.one_coords()))?;
        for i in 0..k {
            for j in i..k {
                writeln!(f, "mul {i} {j} {}", join(self.structure_constant(i, j)))?;
            }
        }
        Ok(())
    }
}
