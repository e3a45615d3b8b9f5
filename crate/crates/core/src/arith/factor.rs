use serde::{Deserialize, Serialize};

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Exponent of `p` in `n` (zero when `p` does not divide `n`).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

/// Factor `n` by trial division up to `√n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k ± 1 wheel
    let mut p: u64 = 5;
    while p.checked_mul(p).is_some_and(|sq| sq <= rest) {
        push(p, &mut rest);
        push(p + 2, &mut rest);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { n, factors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert!(factorize(1).factors().is_empty());
        assert_eq!(factorize(25).factors(), &[(5, 2)]);
        assert_eq!(factorize(360).factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97).factors(), &[(97, 1)]);
        assert_eq!(factorize(49).factors(), &[(7, 2)]);
    }

    #[test]
    fn large_prime() {
        let p = 1_000_000_007;
        assert_eq!(factorize(p).factors(), &[(p, 1)]);
        assert_eq!(factorize(p * 3).factors(), &[(3, 1), (p, 1)]);
    }

    #[test]
    #[should_panic]
    fn zero_panics() {
        factorize(0);
    }

    fn is_prime(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    proptest! {
        #[test]
        fn product_and_ordering(n in 1u64..2_000_000) {
            let f = factorize(n);
            let prod: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
            prop_assert_eq!(prod, n);
            for w in f.factors().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
            }
            for &(p, e) in f.factors() {
                prop_assert!(e >= 1);
                prop_assert!(is_prime(p));
            }
        }
    }
}
