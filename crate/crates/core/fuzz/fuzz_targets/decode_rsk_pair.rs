#![no_main]

use libfuzzer_sys::fuzz_target;
use wreath::rsk::{colored_rsk, inverse_colored_rsk, TableauPair};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(pair) = TableauPair::from_json_str(s) else {
        return;
    };
    let r = pair.p.0.len();
    let n = pair.p.0.iter().map(|t| t.num_cells()).sum();
    if let Ok(g) = inverse_colored_rsk(&pair, r, n) {
        assert_eq!(colored_rsk(&g), pair);
    }
});
