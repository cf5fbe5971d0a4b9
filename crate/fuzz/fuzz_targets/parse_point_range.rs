#![no_main]

use libfuzzer_sys::fuzz_target;
use permkit::cli::parse_point_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_point_range(text) {
        assert!(r.start <= r.end);
        assert_eq!(parse_point_range(&format!("{}..{}", r.start, r.end)), Ok(r));
    }
});
