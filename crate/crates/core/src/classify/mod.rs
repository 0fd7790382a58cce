//! Closed-form classification of quadratic orders and of `A + X B[X]`,
//! plus exhaustive verification on finite quotients.

mod axb;
mod order;
mod verify;

pub use axb::{classify_axb, AxbReport, FieldDesc};
pub use order::{af_dim_order, classify_order, sweep, AfDim, FactorDatum, OrderReport};
pub use verify::{verify_afdim_local, VerificationReport, VerifyConfig, VerifyTarget};

use serde::Serialize;

/// One compact JSON object per line, each terminated by `\n`.
pub fn to_json_lines<T: Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("report types always serialize"));
        out.push('\n');
    }
    out
}
