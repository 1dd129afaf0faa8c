#![no_main]

use leibniz::parse_algebra_file;
use libfuzzer_sys::fuzz_target;

// The first byte picks the field; the rest is a single coefficient token.
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let Ok(token) = std::str::from_utf8(rest) else { return };
    if token.contains(['\n', '\r', '#']) {
        return;
    }
    let field = ["Q", "F2", "F3", "F5", "F2147483647"][sel as usize % 5];
    let text = format!("field = {field}\ndim = 2\nbracket 1 2 = 2:{token}\n");
    if let Ok(alg) = parse_algebra_file(&text) {
        assert!(alg.constant(0, 0, 0).is_zero());
    }
});
