#![no_main]

use libfuzzer_sys::fuzz_target;
use linsolve_core::{format_matrix, parse_column, parse_matrix};

fuzz_target!(|text: &str| {
    // Must never panic; anything accepted has to survive a round trip.
    if let Ok(m) = parse_matrix(text) {
        assert!(m.as_row_major().iter().all(|v| v.is_finite()));
        let again = parse_matrix(&format_matrix(&m)).expect("formatted output parses");
        assert_eq!(again, m);
    }
    let _ = parse_column(text);
});
