#![no_main]

use libfuzzer_sys::fuzz_target;
use wreath::cyclotomic::CycEl;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(x) = CycEl::from_json_str(s) {
            let _ = x.conj();
            let _ = x.to_string();
        }
    }
});
