#![no_main]

use libfuzzer_sys::fuzz_target;
use wreath::shapes::{multi_syt_count, MultiPartition};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(shape) = MultiPartition::from_json_str(s) {
            if shape.size() <= 12 {
                let _ = multi_syt_count(&shape);
            }
        }
    }
});
