#![no_main]

use libfuzzer_sys::fuzz_target;
use zerodim::bg::enumerate_bg_mu;
use zerodim::CoxeterDatum;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(d) = CoxeterDatum::from_json(text) else { return };
    // keep the enumeration cheap
    if d.rank() <= 4 && d.roots().pair_rho(d.mu()) <= zerodim::rat::qi(4) {
        let _ = enumerate_bg_mu(&d);
    }
});
