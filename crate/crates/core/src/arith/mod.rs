//! Number theory over the radicand `r` of a distance graph `G(ℤ², √r)`.
//!
//! Everything here is exact. Factorization is trial division, which is
//! plenty for radicands up to roughly 10¹².

mod bezout;
mod factor;
mod squares;

pub use bezout::{solve_unit_bezout, BezoutPair};
pub use factor::{factorize, Factorization};
pub use squares::{
    all_representations, core_decompose, is_realized, mandatory_gcd_divisor,
    primitive_representation, CoreDecomposition, Radicand, Representation,
};

/// Greatest common divisor with `gcd(0, b) = b`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// True when every prime factor of `r` is congruent to 1 mod 4.
/// `1` counts as a core radicand (empty product).
pub fn is_core_radicand(r: u64) -> bool {
    r >= 1 && factorize(r).factors().iter().all(|&(p, _)| p % 4 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_zero_convention() {
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(gcd(5, 0), 5);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn core_radicands() {
        assert!(is_core_radicand(1));
        assert!(is_core_radicand(5));
        assert!(is_core_radicand(325));
        assert!(!is_core_radicand(2));
        assert!(!is_core_radicand(45));
        assert!(!is_core_radicand(0));
    }
}
