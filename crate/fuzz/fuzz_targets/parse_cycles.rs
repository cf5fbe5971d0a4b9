#![no_main]

use libfuzzer_sys::fuzz_target;
use permkit::cycle_text::parse_cycles;
use permkit::Perm;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cycles) = parse_cycles(text) {
        for c in &cycles {
            assert!(!c.is_empty());
        }
        // accepted cycles always compose
        Perm::from_cycles(&cycles).unwrap();
    }
});
