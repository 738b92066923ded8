#![no_main]

use libfuzzer_sys::fuzz_target;
use linsolve_core::{format_matrix, parse_matrix, DenseMatrix};

fuzz_target!(|input: (u8, Vec<u64>)| {
    let (cols, bits) = input;
    let cols = usize::from(cols % 8) + 1;
    let values: Vec<f64> = bits
        .into_iter()
        .map(f64::from_bits)
        .filter(|v| v.is_finite())
        .collect();
    let rows = values.len() / cols;
    if rows == 0 {
        return;
    }
    let m = DenseMatrix::from_row_major(rows, cols, values[..rows * cols].to_vec()).unwrap();
    let back = parse_matrix(&format_matrix(&m)).expect("formatted output parses");
    for (a, b) in m.as_row_major().iter().zip(back.as_row_major()) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
});
