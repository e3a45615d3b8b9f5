//! Certificate decoding followed by verification. Neither may panic, and a
//! certificate that verifies must survive a serialize/parse round trip.

#![no_main]

use distgraph::certify::{check_certificate, Certificate, CertificateKind};
use libfuzzer_sys::fuzz_target;

// verification is O(√r); skip radicands that would only make the run slow
const MAX_R: u64 = 1 << 32;

fn small(c: &Certificate) -> bool {
    let cores = match &c.kind {
        CertificateKind::ComponentCount { core1, core2, .. } => [*core1, *core2],
        CertificateKind::AngleSpectrum { core1, core2, witness } => {
            if witness.r1 > MAX_R || witness.r2 > MAX_R || witness.p > MAX_R {
                return false;
            }
            [*core1, *core2]
        }
    };
    [c.r1, c.r2, cores[0], cores[1]].iter().all(|&r| r <= MAX_R)
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cert) = Certificate::from_json(text) else {
        return;
    };
    if !small(&cert) {
        return;
    }
    if check_certificate(&cert).is_ok() {
        let again = Certificate::from_json(&cert.to_json()).expect("round trip");
        assert_eq!(again, cert);
        assert!(check_certificate(&again).is_ok());
    }
});
