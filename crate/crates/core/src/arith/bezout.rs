use serde::{Deserialize, Serialize};

use super::gcd;
use crate::error::{Error, Result};

/// Solution of `s·a − t·b = −1` for even `a`, odd `b`, with `s` the least
/// nonnegative choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutPair {
    pub s: u64,
    pub t: u64,
    pub a: u64,
    pub b: u64,
}

/// Inverse of `a` modulo `m` for coprime `a`, `m` with `m ≥ 1`.
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Find `s, t ≥ 0` with `s·a − t·b = −1`, `s` minimal.
///
/// `s` is `−a⁻¹ mod b`; for `a = 0` this forces `b = 1` and gives `(0, 1)`.
pub fn solve_unit_bezout(a: u64, b: u64) -> Result<BezoutPair> {
    if a % 2 != 0 || b % 2 == 0 {
        return Err(Error::BadParity { a, b });
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let s = if b == 1 {
        0
    } else {
        (b - mod_inverse(a, b)) % b
    };
    let t = (s as u128 * a as u128 + 1) / b as u128;
    Ok(BezoutPair {
        s,
        t: t as u64,
        a,
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: scan s upward.
    fn scan(a: u64, b: u64) -> (u64, u64) {
        (0..)
            .find(|s| (s * a + 1) % b == 0)
            .map(|s| (s, (s * a + 1) / b))
            .unwrap()
    }

    #[test]
    fn examples() {
        let p = solve_unit_bezout(4, 3).unwrap();
        assert_eq!((p.s, p.t), (2, 3));
        assert!(p.s + p.t < 4 + 3);
        let p = solve_unit_bezout(0, 1).unwrap();
        assert_eq!((p.s, p.t), (0, 1));
        let p = solve_unit_bezout(2, 1).unwrap();
        assert_eq!((p.s, p.t), (0, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(solve_unit_bezout(3, 3), Err(Error::BadParity { a: 3, b: 3 }));
        assert_eq!(solve_unit_bezout(2, 4), Err(Error::BadParity { a: 2, b: 4 }));
        assert_eq!(solve_unit_bezout(6, 3), Err(Error::NotCoprime { a: 6, b: 3 }));
        assert_eq!(solve_unit_bezout(0, 3), Err(Error::NotCoprime { a: 0, b: 3 }));
    }

    #[test]
    fn identity_and_minimality_for_small_pairs() {
        for a in (0..=200u64).step_by(2) {
            for b in (1..=200 - a).step_by(2) {
                if gcd(a, b) != 1 {
                    continue;
                }
                let p = solve_unit_bezout(a, b).unwrap();
                assert_eq!(
                    (p.s as i128) * (a as i128) - (p.t as i128) * (b as i128),
                    -1,
                    "a = {a}, b = {b}"
                );
                assert_eq!((p.s, p.t), scan(a, b), "a = {a}, b = {b}");
                if a > 0 {
                    assert!(p.s < b);
                }
            }
        }
    }
}
