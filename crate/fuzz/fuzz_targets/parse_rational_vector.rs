#![no_main]

use libfuzzer_sys::fuzz_target;
use zerodim::RatVec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = RatVec::parse(text) {
        let again = RatVec::parse(&v.to_string()).expect("display output parses");
        assert_eq!(again, v);
    }
});
