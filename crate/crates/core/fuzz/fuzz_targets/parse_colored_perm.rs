#![no_main]

use libfuzzer_sys::fuzz_target;
use wreath::colored_perm::ColoredPermutation;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = ColoredPermutation::from_json_str(s) {
            // anything accepted must survive a round trip
            let back = ColoredPermutation::from_json_str(&g.to_json_string()).unwrap();
            assert_eq!(back, g);
            let _ = g.compose(&g.transpose());
        }
    }
});
