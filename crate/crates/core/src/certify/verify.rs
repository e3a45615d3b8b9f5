//! Independent certificate checker.
//!
//! Recomputes every claim from the radicands with its own enumeration,
//! factorization and gcd. The only shared routine is the subgroup index
//! used for component counts.

use std::fmt;

use super::{Certificate, CertificateKind, FORMAT_VERSION};
use crate::lattice::{sublattice_index, LatticeVector, SublatticeIndex};
use crate::spectra::AngleWitness;

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection(pub String);

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Rejection {}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), Rejection> {
    if cond {
        Ok(())
    } else {
        Err(Rejection(why()))
    }
}

fn euclid(mut a: u64, mut b: u64) -> u64 {
    while b > 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn prime_exponents(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && prime_exponents(n) == [(n, 1)]
}

/// Lattice points on the circle `x² + y² = r`.
fn circle(r: u64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let m = r.isqrt();
    for x in 0..=m {
        let rest = r - x * x;
        let y = rest.isqrt();
        if y * y != rest {
            continue;
        }
        let (x, y) = (x as i64, y as i64);
        for p in [(x, y), (-x, y), (x, -y), (-x, -y)] {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

struct Facts {
    components: u64,
    core: u64,
}

fn facts(r: u64) -> Result<Facts, Rejection> {
    ensure(r >= 1, || "radicand must be positive".into())?;
    let pts = circle(r);
    ensure(!pts.is_empty(), || format!("{r} is not a sum of two squares"))?;
    let gens: Vec<_> = pts.iter().map(|&(x, y)| LatticeVector::new(x, y)).collect();
    let components = match sublattice_index(&gens) {
        SublatticeIndex::Finite(k) => k,
        SublatticeIndex::Infinite => return Err(Rejection(format!("{r}: degenerate lattice"))),
    };
    let core = prime_exponents(r)
        .into_iter()
        .filter(|&(p, _)| p % 4 == 1)
        .map(|(p, e)| p.pow(e))
        .product();
    Ok(Facts { components, core })
}

fn check_witness(w: &AngleWitness, big: u64, small: u64) -> Result<(), Rejection> {
    ensure(w.r1 == big && w.r2 == small, || {
        format!("witness radicands ({}, {}) should be ({big}, {small})", w.r1, w.r2)
    })?;
    let (a, b) = (w.a, w.b);
    ensure(
        (a as u128) * (a as u128) + (b as u128) * (b as u128) == big as u128,
        || format!("{a}² + {b}² ≠ {big}"),
    )?;
    ensure(b >= 1 && euclid(a, b) == 1, || {
        format!("({a}, {b}) is not a primitive positive pair")
    })?;
    // canonical choice: a ≥ b, smallest a among primitive pairs
    let canonical = circle(big)
        .into_iter()
        .filter(|&(x, y)| x >= y && y >= 0 && euclid(x as u64, y as u64) == 1)
        .map(|(x, _)| x as u64)
        .min();
    ensure(canonical == Some(a), || format!("({a}, {b}) is not the canonical representation of {big}"))?;

    let num = 2 * a as i128 * b as i128;
    let g = euclid(num as u64, big) as i128;
    ensure(
        w.cosine.num() as i128 == num / g && w.cosine.den() as i128 == big as i128 / g,
        || format!("cosine {} ≠ 2·{a}·{b}/{big}", w.cosine),
    )?;

    ensure(is_prime(w.p) && w.p % 4 == 1 && w.n >= 1, || {
        format!("{}^{} is not a power of a prime ≡ 1 mod 4", w.p, w.n)
    })?;
    let pn = (w.p as u128).checked_pow(w.n);
    ensure(
        pn.is_some_and(|pn| big as u128 % pn == 0 && small as u128 % pn != 0),
        || format!("{}^{} does not separate {big} from {small}", w.p, w.n),
    )?;
    let small_factors = prime_exponents(small);
    let exp_in_small = |p| small_factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1);
    let best = prime_exponents(big)
        .into_iter()
        .filter(|&(p, e)| e > exp_in_small(p))
        .max_by_key(|&(p, e)| (p as u128).pow(e));
    ensure(best == Some((w.p, w.n)), || {
        format!("{}^{} is not the largest separating prime power", w.p, w.n)
    })?;

    let lhs = num * small as i128;
    let pts = circle(small);
    for &(x1, y1) in &pts {
        for &(x2, y2) in &pts {
            let d = x1 as i128 * x2 as i128 + y1 as i128 * y2 as i128;
            ensure(big as i128 * d != lhs, || {
                format!("angle is realized at {small} by ({x1},{y1}), ({x2},{y2})")
            })?;
        }
    }
    Ok(())
}

/// Check every claim of `c`, returning the first failure.
pub fn check_certificate(c: &Certificate) -> Result<(), Rejection> {
    ensure(c.format_version == FORMAT_VERSION, || {
        format!("unsupported format version `{}`", c.format_version)
    })?;
    ensure(c.r1 != c.r2, || "radicands are identical".into())?;
    let f1 = facts(c.r1)?;
    let f2 = facts(c.r2)?;
    match &c.kind {
        CertificateKind::ComponentCount {
            k1,
            k2,
            core1,
            core2,
        } => {
            ensure(*k1 == f1.components && *k2 == f2.components, || {
                format!(
                    "claimed counts ({k1}, {k2}), actual ({}, {})",
                    f1.components, f2.components
                )
            })?;
            ensure(*core1 == f1.core && *core2 == f2.core, || {
                format!("claimed cores ({core1}, {core2}), actual ({}, {})", f1.core, f2.core)
            })?;
            ensure(k1 != k2, || "component counts are equal".into())
        }
        CertificateKind::AngleSpectrum {
            core1,
            core2,
            witness,
        } => {
            ensure(f1.components == f2.components, || {
                "component counts differ; angle certificate does not apply".into()
            })?;
            ensure(*core1 == f1.core && *core2 == f2.core, || {
                format!("claimed cores ({core1}, {core2}), actual ({}, {})", f1.core, f2.core)
            })?;
            ensure(core1 != core2, || "cores are equal".into())?;
            check_witness(witness, *core1.max(core2), *core1.min(core2))
        }
    }
}

pub fn verify_certificate(c: &Certificate) -> bool {
    check_certificate(c).is_ok()
}

/// Parse and verify; unparseable input is rejected.
pub fn verify_certificate_json(text: &str) -> bool {
    Certificate::from_json(text).is_ok_and(|c| verify_certificate(&c))
}
