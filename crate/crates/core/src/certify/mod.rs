//! Non-isomorphism certificates for pairs of distance graphs on ℤ².
//!
//! `G(ℤ², √r)` has `r / core(r)` components, each isomorphic to
//! `G(ℤ², √core(r))`. Two radicands with different component counts are
//! separated by that count alone. Equal counts with distinct radicands force
//! distinct cores, and two distinct core radicands are separated by an angle
//! between neighbor vectors that only one of them realizes.

mod verify;

use serde::{Deserialize, Serialize};

use crate::arith::Radicand;
use crate::error::{Error, Result};
use crate::lattice::component_count;
use crate::spectra::{angle_witness, AngleWitness};

pub use verify::{check_certificate, verify_certificate, verify_certificate_json, Rejection};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub format_version: String,
    pub r1: u64,
    pub r2: u64,
    pub kind: CertificateKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum CertificateKind {
    /// `k1 ≠ k2` components. The cores pin `r_i = k_i · core_i`.
    ComponentCount {
        k1: u64,
        k2: u64,
        core1: u64,
        core2: u64,
    },
    /// Equal component counts, distinct cores; the witness is computed on
    /// the cores, larger first.
    AngleSpectrum {
        core1: u64,
        core2: u64,
        witness: AngleWitness,
    },
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

fn realized(r: u64) -> Result<Radicand> {
    let rad = Radicand::new(r)?;
    if !rad.realized {
        return Err(Error::NotRealized { r });
    }
    Ok(rad)
}

/// Certify that `G(ℤ², √r1)` and `G(ℤ², √r2)` are not isomorphic.
pub fn certify_nonisomorphic(r1: u64, r2: u64) -> Result<Certificate> {
    if r1 == r2 {
        return Err(Error::IdenticalRadicands { r: r1 });
    }
    let (rad1, rad2) = (realized(r1)?, realized(r2)?);
    let (k1, k2) = (component_count(r1)?, component_count(r2)?);
    let (core1, core2) = (rad1.core, rad2.core);
    let kind = if k1 != k2 {
        CertificateKind::ComponentCount {
            k1,
            k2,
            core1,
            core2,
        }
    } else {
        // k = r / core, so equal k and r1 ≠ r2 give core1 ≠ core2
        let witness = angle_witness(core1.max(core2), core1.min(core2))?;
        CertificateKind::AngleSpectrum {
            core1,
            core2,
            witness,
        }
    };
    Ok(Certificate {
        format_version: FORMAT_VERSION.to_string(),
        r1,
        r2,
        kind,
    })
}
