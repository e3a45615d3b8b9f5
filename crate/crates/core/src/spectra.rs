//! Exact angle spectra of `G(ℤ², √r)`.
//!
//! The cosine of the angle between two neighbor vectors `w, w′` is
//! `(w·w′)/r`, so the spectrum is stored as the integer dot products and
//! compared by cross-multiplication.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_core_radicand, primitive_representation};
use crate::error::{Error, Result};
use crate::lattice::neighbor_vectors;

/// A cosine value `num/den` in lowest terms, `den > 0`, `|num| ≤ den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCosine")]
pub struct RationalCosine {
    num: i64,
    den: i64,
}

#[derive(Deserialize)]
struct RawCosine {
    num: i64,
    den: i64,
}

impl TryFrom<RawCosine> for RationalCosine {
    type Error = Error;

    fn try_from(raw: RawCosine) -> Result<Self> {
        let c = RationalCosine::new(raw.num, raw.den)?;
        if (c.num, c.den) != (raw.num, raw.den) {
            return Err(Error::Malformed(format!(
                "cosine {}/{} is not in lowest terms",
                raw.num, raw.den
            )));
        }
        Ok(c)
    }
}

impl RationalCosine {
    /// Reduce `num/den`, failing unless the value lies in `[−1, 1]`.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 || num.unsigned_abs() > den.unsigned_abs() {
            return Err(Error::InvalidCosine { num, den });
        }
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let sign = if den < 0 { -1 } else { 1 };
        // i128 so that i64::MIN survives negation
        let n = sign * num as i128 / g;
        let d = sign * den as i128 / g;
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Ok(RationalCosine { num, den }),
            _ => Err(Error::InvalidCosine { num, den }),
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    /// Display-only conversion.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Whether this value equals `d / r`.
    pub fn equals_ratio(&self, d: i64, r: u64) -> bool {
        self.num as i128 * r as i128 == d as i128 * self.den as i128
    }
}

impl Ord for RationalCosine {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for RationalCosine {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RationalCosine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for RationalCosine {
    type Err = Error;

    /// Accepts `N/D` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(format!("not a rational cosine: `{s}`"));
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = num.parse::<i64>().map_err(|_| bad())?;
        let den = den.parse::<i64>().map_err(|_| bad())?;
        RationalCosine::new(num, den)
    }
}

/// Angle witness: `v_α = ⟨a,b⟩`, `v_β = ⟨b,a⟩` at squared length `r1`
/// span an angle with cosine `2ab/r1` that no pair of vectors of squared
/// length `r2` realizes. `pⁿ` divides `r1` but not `r2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngleWitness {
    pub r1: u64,
    pub r2: u64,
    pub a: u64,
    pub b: u64,
    pub cosine: RationalCosine,
    pub p: u64,
    pub n: u32,
}

fn realized_radicand(r: u64) -> Result<i64> {
    if r == 0 {
        return Err(Error::ZeroRadicand);
    }
    i64::try_from(r).map_err(|_| Error::Malformed(format!("radicand {r} too large")))
}

/// `{ w·w′ : |w|² = |w′|² = r }`.
pub fn dot_spectrum(r: u64) -> Result<BTreeSet<i64>> {
    realized_radicand(r)?;
    let set = neighbor_vectors(r);
    if set.is_empty() {
        return Err(Error::NotRealized { r });
    }
    let mut dots = BTreeSet::new();
    for w in set.iter() {
        for z in set.iter() {
            dots.insert(w.dot(z) as i64);
        }
    }
    Ok(dots)
}

pub fn cosine_spectrum(r: u64) -> Result<BTreeSet<RationalCosine>> {
    let den = realized_radicand(r)?;
    dot_spectrum(r)?
        .into_iter()
        .map(|d| RationalCosine::new(d, den))
        .collect()
}

pub fn is_angle_realized(c: RationalCosine, r: u64) -> Result<bool> {
    Ok(dot_spectrum(r)?.into_iter().any(|d| c.equals_ratio(d, r)))
}

/// The prime power `pⁿ` dividing `r1` but not `r2` with the largest value;
/// `n` is the full exponent of `p` in `r1`.
pub fn separating_prime_power(r1: u64, r2: u64) -> Option<(u64, u32)> {
    let f2 = factorize(r2);
    factorize(r1)
        .factors()
        .iter()
        .filter(|&&(p, e)| e > f2.exponent_of(p))
        .max_by_key(|&&(p, e)| (p as u128).pow(e))
        .copied()
}

/// Build and check an angle realized at `r1` but not at `r2`, for distinct
/// core radicands `r1 > r2`.
pub fn angle_witness(r1: u64, r2: u64) -> Result<AngleWitness> {
    if r1 == r2 {
        return Err(Error::IdenticalRadicands { r: r1 });
    }
    for r in [r1, r2] {
        realized_radicand(r)?;
        if !is_core_radicand(r) {
            return Err(Error::NotCoreRadicand { r });
        }
    }
    if r1 < r2 {
        return Err(Error::NotDescending { r1, r2 });
    }
    let (p, n) = separating_prime_power(r1, r2).expect("r1 > r2 so r1 does not divide r2");
    let rep = primitive_representation(r1)?;
    let cross = 2 * rep.a as i128 * rep.b as i128;
    let cosine = RationalCosine::new(cross as i64, r1 as i64)?;
    let target = cross * r2 as i128;
    if dot_spectrum(r2)?
        .into_iter()
        .any(|d| r1 as i128 * d as i128 == target)
    {
        return Err(Error::AngleRealized { r1, r2 });
    }
    Ok(AngleWitness {
        r1,
        r2,
        a: rep.a,
        b: rep.b,
        cosine,
        p,
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cos(n: i64, d: i64) -> RationalCosine {
        RationalCosine::new(n, d).unwrap()
    }

    // exhaustive pairs over every lattice vector in the bounding box
    fn brute_dots(r: u64) -> BTreeSet<i64> {
        let m = r.isqrt() as i64;
        let mut vs = Vec::new();
        for x in -m..=m {
            for y in -m..=m {
                if (x * x + y * y) as u64 == r {
                    vs.push((x, y));
                }
            }
        }
        let mut out = BTreeSet::new();
        for &(a, b) in &vs {
            for &(c, d) in &vs {
                out.insert(a * c + b * d);
            }
        }
        out
    }

    #[test]
    fn cosine_reduction() {
        assert_eq!(cos(24, 25).to_string(), "24/25");
        assert_eq!(cos(-10, 25), cos(-2, 5));
        assert_eq!(cos(5, -5).to_string(), "-1");
        assert_eq!(cos(0, 7).to_string(), "0");
        assert!(RationalCosine::new(6, 5).is_err());
        assert!(RationalCosine::new(1, 0).is_err());
        assert_eq!("3/5".parse::<RationalCosine>().unwrap(), cos(3, 5));
        assert_eq!("-1".parse::<RationalCosine>().unwrap(), cos(-1, 1));
        assert!("2".parse::<RationalCosine>().is_err());
        assert!("a/b".parse::<RationalCosine>().is_err());
        assert!(cos(-1, 1) < cos(-4, 5) && cos(3, 5) < cos(4, 5));
    }

    #[test]
    fn cosine_json_requires_lowest_terms() {
        let c: RationalCosine = serde_json::from_str(r#"{"num":24,"den":25}"#).unwrap();
        assert_eq!(c, cos(24, 25));
        assert!(serde_json::from_str::<RationalCosine>(r#"{"num":2,"den":4}"#).is_err());
        assert!(serde_json::from_str::<RationalCosine>(r#"{"num":5,"den":4}"#).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let set = |xs: &[i64]| xs.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(dot_spectrum(1).unwrap(), set(&[-1, 0, 1]));
        assert_eq!(dot_spectrum(5).unwrap(), set(&[-5, -4, -3, 0, 3, 4, 5]));
        assert_eq!(dot_spectrum(2).unwrap(), set(&[-2, 0, 2]));
        assert_eq!(dot_spectrum(3), Err(Error::NotRealized { r: 3 }));

        let c1: Vec<_> = cosine_spectrum(1).unwrap().into_iter().collect();
        assert_eq!(c1, vec![cos(-1, 1), cos(0, 1), cos(1, 1)]);
        let c5: Vec<_> = cosine_spectrum(5).unwrap().into_iter().collect();
        assert_eq!(
            c5,
            vec![cos(-1, 1), cos(-4, 5), cos(-3, 5), cos(0, 1), cos(3, 5), cos(4, 5), cos(1, 1)]
        );
        assert!(cosine_spectrum(25).unwrap().contains(&cos(24, 25)));
    }

    #[test]
    fn spectrum_matches_brute_force() {
        for r in (1..=400).filter(|&r| crate::arith::is_realized(r)) {
            let dots = dot_spectrum(r).unwrap();
            assert_eq!(dots, brute_dots(r), "r = {r}");
            assert!(dots.contains(&(r as i64)) && dots.contains(&-(r as i64)));
            assert!(dots.iter().all(|d| dots.contains(&-d)));
        }
    }

    #[test]
    fn realized_angle_examples() {
        assert_eq!(is_angle_realized(cos(1, 1), 25), Ok(true));
        assert_eq!(is_angle_realized(cos(24, 25), 5), Ok(false));
        assert_eq!(is_angle_realized(cos(3, 5), 5), Ok(true));
    }

    #[test]
    fn witness_examples() {
        let w = angle_witness(25, 5).unwrap();
        assert_eq!((w.a, w.b, w.cosine, w.p, w.n), (4, 3, cos(24, 25), 5, 2));
        // 2abr2 = 120 is not a multiple of 25
        assert!(brute_dots(5).iter().all(|d| 25 * d != 120));

        let w = angle_witness(5, 1).unwrap();
        assert_eq!((w.a, w.b, w.cosine, w.p, w.n), (2, 1, cos(4, 5), 5, 1));

        let w = angle_witness(13, 5).unwrap();
        assert_eq!((w.a, w.b, w.cosine, w.p, w.n), (3, 2, cos(12, 13), 13, 1));
        assert!(brute_dots(5).iter().all(|d| 13 * d != 60));

        // 65 = 5·13 against 5: only 13 separates
        let w = angle_witness(65, 5).unwrap();
        assert_eq!((w.p, w.n), (13, 1));
        // against 1 both separate, the larger power wins
        let w = angle_witness(65, 1).unwrap();
        assert_eq!((w.p, w.n), (13, 1));
        let w = angle_witness(125, 13).unwrap();
        assert_eq!((w.p, w.n), (5, 3));
    }

    #[test]
    fn witness_errors() {
        assert_eq!(angle_witness(5, 5), Err(Error::IdenticalRadicands { r: 5 }));
        assert_eq!(angle_witness(10, 5), Err(Error::NotCoreRadicand { r: 10 }));
        assert_eq!(angle_witness(25, 9), Err(Error::NotCoreRadicand { r: 9 }));
        assert_eq!(angle_witness(5, 25), Err(Error::NotDescending { r1: 5, r2: 25 }));
    }

    #[test]
    fn divisibility_mechanism() {
        let cores: Vec<u64> = (1..=500).filter(|&r| is_core_radicand(r)).collect();
        for &r1 in &cores {
            for &r2 in cores.iter().filter(|&&r2| r2 < r1) {
                let w = angle_witness(r1, r2).unwrap();
                let pn = (w.p as i128).pow(w.n);
                assert_eq!(r1 as i128 % pn, 0);
                assert_ne!(r2 as i128 % pn, 0);
                let lhs = 2 * w.a as i128 * w.b as i128 * r2 as i128;
                assert_ne!(lhs % pn, 0, "({r1}, {r2})");
                for d in dot_spectrum(r2).unwrap() {
                    assert_eq!((r1 as i128 * d as i128) % pn, 0);
                }
            }
        }
    }
}
