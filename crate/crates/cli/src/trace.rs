//! Iteration traces as delimited text.

use linsolve_core::{format_scalar, IterationTrace};

pub const TRACE_HEADER: &str = "iteration,component,value,delta";

/// One row per component per sweep, values in round-trip precision.
pub fn format_trace(trace: &IterationTrace) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    for rec in &trace.records {
        for (i, (x, d)) in rec.x.iter().zip(rec.deltas.iter()).enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                rec.iteration,
                i,
                format_scalar(*x),
                format_scalar(*d)
            ));
        }
    }
    out
}
