#![no_main]

use libfuzzer_sys::fuzz_target;
use permkit::cli::parse_rank;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rank(text) {
        let trimmed = text.trim_start_matches('0');
        let expected = if trimmed.is_empty() { "0" } else { trimmed };
        assert_eq!(r.to_string(), expected);
    }
});
