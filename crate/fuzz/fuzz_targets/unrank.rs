#![no_main]

use libfuzzer_sys::fuzz_target;
use num_bigint::BigUint;
use permkit::ranking::{factorial, rank_lex, rank_mr, unrank_lex, unrank_mr};

// First byte picks the size, the rest is a big-endian rank.
fuzz_target!(|data: &[u8]| {
    let Some((&size, rest)) = data.split_first() else { return };
    let n = usize::from(size % 64);
    let rank = BigUint::from_bytes_be(rest);
    let in_range = n > 0 && rank < factorial(n);
    match unrank_lex(n, &rank) {
        Ok(p) => {
            assert!(in_range);
            assert_eq!(rank_lex(&p, n).unwrap(), rank);
        }
        Err(_) => assert!(!in_range),
    }
    match unrank_mr(n, &rank) {
        Ok(p) => {
            assert!(in_range);
            assert_eq!(rank_mr(&p, n).unwrap(), rank);
        }
        Err(_) => assert!(!in_range),
    }
});
