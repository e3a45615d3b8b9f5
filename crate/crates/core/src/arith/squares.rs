use serde::{Deserialize, Serialize};

use super::{factorize, gcd, Factorization};
use crate::error::{Error, Result};

/// A radicand `r` with its factorization split as
/// `r = 2^γ · ∏ pᵅ · ∏ q^(2β)`, `p ≡ 1` and `q ≡ 3 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Radicand {
    pub r: u64,
    pub factorization: Factorization,
    pub gamma: u32,
    /// Primes ≡ 1 (mod 4) with their exponents.
    pub p_part: Vec<(u64, u32)>,
    /// Primes ≡ 3 (mod 4) with half their exponent (rounded down when
    /// the radicand is not realized).
    pub q_part: Vec<(u64, u32)>,
    pub realized: bool,
    /// `2^⌊γ/2⌋ · ∏ q^β`, a divisor of `gcd(a, b)` for every `a² + b² = r`.
    pub h: u64,
    /// `∏ pᵅ`.
    pub core: u64,
}

impl Radicand {
    pub fn new(r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroRadicand);
        }
        let factorization = factorize(r);
        let mut gamma = 0;
        let mut p_part = Vec::new();
        let mut q_part = Vec::new();
        let mut realized = true;
        for &(p, e) in factorization.factors() {
            match p % 4 {
                2 => gamma = e,
                1 => p_part.push((p, e)),
                _ => {
                    realized &= e % 2 == 0;
                    q_part.push((p, e / 2));
                }
            }
        }
        let h = q_part
            .iter()
            .fold(1u64 << (gamma / 2), |acc, &(q, beta)| acc * q.pow(beta));
        let core = p_part.iter().map(|&(p, e)| p.pow(e)).product();
        Ok(Radicand {
            r,
            factorization,
            gamma,
            p_part,
            q_part,
            realized,
            h,
            core,
        })
    }

    /// Number of components of `G(ℤ², √r)` predicted by the factorization,
    /// `r / core`. Only meaningful when realized.
    pub fn cofactor(&self) -> u64 {
        self.r / self.core
    }
}

/// A solution of `a² + b² = r`, stored canonically with `a ≥ b ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub a: u64,
    pub b: u64,
    pub r: u64,
    pub primitive: bool,
}

impl Representation {
    fn new(a: u64, b: u64) -> Self {
        debug_assert!(a >= b);
        Representation {
            a,
            b,
            r: a * a + b * b,
            primitive: gcd(a, b) == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreDecomposition {
    pub core: u64,
    pub gamma: u32,
    pub q_part: Vec<(u64, u32)>,
}

/// Whether `r` is a sum of two integer squares: every prime ≡ 3 (mod 4)
/// appears to an even power. Zero is reported as not realized since it
/// yields no edges.
pub fn is_realized(r: u64) -> bool {
    Radicand::new(r).is_ok_and(|rad| rad.realized)
}

/// Every canonical `(a, b)` with `a ≥ b ≥ 0` and `a² + b² = r`, ordered by
/// decreasing `a`. Empty when `r` is not realized (or zero).
pub fn all_representations(r: u64) -> Vec<Representation> {
    if r == 0 {
        return Vec::new();
    }
    let top = r.isqrt();
    // a ≥ b means a² ≥ r/2
    let mut a = (r / 2).isqrt();
    while a * a < r - r / 2 {
        a += 1;
    }
    let mut out = Vec::new();
    for a in (a..=top).rev() {
        let rest = r - a * a;
        let b = rest.isqrt();
        if b * b == rest && b <= a {
            out.push(Representation::new(a, b));
        }
    }
    out
}

/// The primitive representation with the smallest `a`.
///
/// Exists exactly when `r` is realized with `γ ≤ 1` and no primes ≡ 3 (mod 4).
pub fn primitive_representation(r: u64) -> Result<Representation> {
    let rad = Radicand::new(r)?;
    if !rad.realized {
        return Err(Error::NotRealized { r });
    }
    if rad.gamma > 1 || !rad.q_part.is_empty() {
        return Err(Error::NoPrimitiveRepresentation { r });
    }
    all_representations(r)
        .into_iter()
        .filter(|rep| rep.primitive)
        .min_by_key(|rep| rep.a)
        .ok_or(Error::NoPrimitiveRepresentation { r })
}

/// `h = 2^⌊γ/2⌋ · ∏ q^β`.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn mandatory_gcd_divisor(r: u64) -> u64 {
    Radicand::new(r).expect("mandatory_gcd_divisor requires r >= 1").h
}

/// Split a realized `r` as `core · 2^γ · ∏ q^(2β)`.
pub fn core_decompose(r: u64) -> Result<CoreDecomposition> {
    let rad = Radicand::new(r)?;
    if !rad.realized {
        return Err(Error::NotRealized { r });
    }
    Ok(CoreDecomposition {
        core: rad.core,
        gamma: rad.gamma,
        q_part: rad.q_part,
    })
}
