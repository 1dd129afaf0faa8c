#![no_main]

use leibniz::{parse_algebra_file, render_algebra_file};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(alg) = parse_algebra_file(text) else { return };
    // Accepted input must survive a render/parse cycle unchanged.
    let rendered = render_algebra_file(&alg);
    let again = parse_algebra_file(&rendered).expect("rendered file parses");
    assert_eq!(again, alg);
    if alg.dim() <= 4 {
        let _ = alg.is_left_leibniz();
    }
});
