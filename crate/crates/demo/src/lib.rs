//! wasm-bindgen exports for the browser page in `www/`.
//!
//! Every export returns plain vectors so the page can draw them straight
//! onto a canvas, and so the same functions run in native tests.

use greedyconv::experiments::primitive_gap_series;
use greedyconv::{ssift, GreedyTable};
use wasm_bindgen::prelude::*;

/// Keeps a single request within a few megabytes of memory.
pub const MAX_N: u32 = 2_000_000;

fn check_n(n: u32) -> Result<(), String> {
    if n == 0 || n > MAX_N {
        return Err(format!("N must be between 1 and {MAX_N}"));
    }
    Ok(())
}

/// Height of each `n` in `1..=n` for the greedy partition of length `d`.
#[wasm_bindgen]
pub fn heights(d: usize, n: u32) -> Result<Vec<u8>, String> {
    check_n(n)?;
    let table = GreedyTable::build(d, u64::from(n)).map_err(|e| e.to_string())?;
    Ok(table.heights()[1..].to_vec())
}

/// Consecutive primitive gaps as flat triples `leader, gap, running mean`.
#[wasm_bindgen]
pub fn gap_series(d: usize, n: u32, rank: Option<usize>) -> Result<Vec<f64>, String> {
    check_n(n)?;
    let points = primitive_gap_series(d, u64::from(n), rank).map_err(|e| e.to_string())?;
    Ok(points
        .iter()
        .flat_map(|p| [p.leader as f64, p.gap as f64, p.mean])
        .collect())
}

/// Membership of `1..=n` in the selective sifting by a comma-separated set.
#[wasm_bindgen]
pub fn sift_membership(set: &str, n: u32) -> Result<Vec<u8>, String> {
    check_n(n)?;
    let set = set
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u64>()
                .map_err(|_| format!("not an integer: {t:?}"))
        })
        .collect::<Result<Vec<u64>, String>>()?;
    let result = ssift(&set, u64::from(n)).map_err(|e| e.to_string())?;
    Ok(result.bitmap().iter().map(|&b| u8::from(b)).collect())
}
