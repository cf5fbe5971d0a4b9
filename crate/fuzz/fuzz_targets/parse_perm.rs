#![no_main]

use libfuzzer_sys::fuzz_target;
use permkit::cycle_text::{format, parse};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse(text) {
        Ok(p) => {
            let canonical = format(&p);
            assert_eq!(parse(&canonical).unwrap(), p);
            assert_eq!(format(&parse(&canonical).unwrap()), canonical);
        }
        Err(e) => assert!(e.is_parse(), "{text:?}: {e}"),
    }
});
