use thiserror::Error;

/// Failures reported by the library. Every variant names the precondition
/// that did not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand must be positive")]
    ZeroRadicand,

    #[error("{r} is not a sum of two squares")]
    NotRealized { r: u64 },

    #[error("{r} has no primitive representation (needs 2^γ with γ ≤ 1 and no primes ≡ 3 mod 4)")]
    NoPrimitiveRepresentation { r: u64 },

    #[error("{r} is not a core radicand (every prime factor must be ≡ 1 mod 4)")]
    NotCoreRadicand { r: u64 },

    #[error("expected even a and odd b, got a = {a}, b = {b}")]
    BadParity { a: u64, b: u64 },

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("radicands are identical ({r})")]
    IdenticalRadicands { r: u64 },

    #[error("angle witness needs r1 > r2, got r1 = {r1}, r2 = {r2}")]
    NotDescending { r1: u64, r2: u64 },

    #[error("vector ({x}, {y}) does not have squared length {r}")]
    WrongLength { r: u64, x: i64, y: i64 },

    #[error("path would need {steps} steps, limit is {limit}")]
    PathTooLong { steps: u128, limit: u64 },

    #[error("cosine {num}/{den} is not a value in [-1, 1]")]
    InvalidCosine { num: i64, den: i64 },

    #[error("angle 2ab/{r1} is realized at squared distance {r2}")]
    AngleRealized { r1: u64, r2: u64 },

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
