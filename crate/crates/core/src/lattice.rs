//! Lattice vectors, neighbor sets and component structure of `G(ℤ², √r)`.
//!
//! Two vertices lie in the same component iff their difference is in the
//! subgroup generated by the neighbor vectors, so the number of components
//! is that subgroup's index in ℤ².

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::all_representations;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector {
    pub const ORIGIN: LatticeVector = LatticeVector { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticeVector { x, y }
    }

    pub fn squared_norm(self) -> i128 {
        self.dot(self)
    }

    pub fn dot(self, other: LatticeVector) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    /// `(x, y) ↦ (y, x)`
    pub fn swap(self) -> Self {
        LatticeVector::new(self.y, self.x)
    }

    /// True when `|self|² == r`.
    pub fn has_squared_norm(self, r: u64) -> bool {
        self.squared_norm() == r as i128
    }
}

impl From<[i64; 2]> for LatticeVector {
    fn from([x, y]: [i64; 2]) -> Self {
        LatticeVector { x, y }
    }
}

impl From<LatticeVector> for [i64; 2] {
    fn from(v: LatticeVector) -> Self {
        [v.x, v.y]
    }
}

impl From<(i64, i64)> for LatticeVector {
    fn from((x, y): (i64, i64)) -> Self {
        LatticeVector { x, y }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for LatticeVector {
    fn add_assign(&mut self, o: LatticeVector) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, o: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.x, -self.y)
    }
}

impl Mul<LatticeVector> for i64 {
    type Output = LatticeVector;
    fn mul(self, v: LatticeVector) -> LatticeVector {
        LatticeVector::new(self * v.x, self * v.y)
    }
}

/// All vectors of squared length `r`, i.e. the edge directions of `G(ℤ², √r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborSet {
    pub r: u64,
    pub vectors: Vec<LatticeVector>,
}

impl NeighborSet {
    /// Degree of every vertex.
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = LatticeVector> + '_ {
        self.vectors.iter().copied()
    }
}

/// The full sign/swap orbit of every representation of `r`, sorted.
pub fn neighbor_vectors(r: u64) -> NeighborSet {
    let mut set = BTreeSet::new();
    for rep in all_representations(r) {
        let (a, b) = (rep.a as i64, rep.b as i64);
        for (x, y) in [(a, b), (b, a)] {
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                set.insert(LatticeVector::new(sx * x, sy * y));
            }
        }
    }
    NeighborSet {
        r,
        vectors: set.into_iter().collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SublatticeIndex {
    Finite(u64),
    Infinite,
}

/// Subgroup of ℤ² in Hermite normal form: rows `(d1, e)` and `(0, d2)`.
///
/// A zero `d1` means no generator with nonzero `x` was seen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SublatticeBasis {
    d1: i128,
    e: i128,
    d2: i128,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    ext_gcd(a, b).0
}

impl SublatticeBasis {
    pub fn generated_by<I: IntoIterator<Item = LatticeVector>>(generators: I) -> Self {
        let mut basis = SublatticeBasis { d1: 0, e: 0, d2: 0 };
        for v in generators {
            basis.insert(v.x as i128, v.y as i128);
        }
        basis
    }

    fn insert(&mut self, x: i128, y: i128) {
        if x == 0 {
            self.d2 = gcd_i128(self.d2, y);
        } else if self.d1 == 0 {
            self.d1 = x;
            self.e = y;
        } else {
            let (g, u, v) = ext_gcd(self.d1, x);
            let residual_y = (x / g) * self.e - (self.d1 / g) * y;
            self.e = u * self.e + v * y;
            self.d1 = g;
            self.d2 = gcd_i128(self.d2, residual_y);
        }
        if self.d1 < 0 {
            self.d1 = -self.d1;
            self.e = -self.e;
        }
        if self.d2 != 0 {
            self.e = self.e.rem_euclid(self.d2);
        }
    }

    pub fn index(&self) -> SublatticeIndex {
        if self.d1 == 0 || self.d2 == 0 {
            SublatticeIndex::Infinite
        } else {
            SublatticeIndex::Finite((self.d1 * self.d2) as u64)
        }
    }

    /// Whether `v` lies in the subgroup.
    pub fn contains(&self, v: LatticeVector) -> bool {
        let (x, y) = (v.x as i128, v.y as i128);
        let rest_y = if self.d1 == 0 {
            if x != 0 {
                return false;
            }
            y
        } else {
            if x % self.d1 != 0 {
                return false;
            }
            y - (x / self.d1) * self.e
        };
        if self.d2 == 0 {
            rest_y == 0
        } else {
            rest_y % self.d2 == 0
        }
    }
}

/// Index `[ℤ² : L]` of the subgroup `L` generated by `vectors`.
pub fn sublattice_index(vectors: &[LatticeVector]) -> SublatticeIndex {
    SublatticeBasis::generated_by(vectors.iter().copied()).index()
}

fn realized_neighbors(r: u64) -> Result<NeighborSet> {
    if r == 0 {
        return Err(Error::ZeroRadicand);
    }
    let set = neighbor_vectors(r);
    if set.is_empty() {
        return Err(Error::NotRealized { r });
    }
    Ok(set)
}

/// Number of connected components of `G(ℤ², √r)`.
pub fn component_count(r: u64) -> Result<u64> {
    let set = realized_neighbors(r)?;
    match sublattice_index(&set.vectors) {
        SublatticeIndex::Finite(k) => Ok(k),
        // a realized r always has two independent neighbor vectors
        SublatticeIndex::Infinite => unreachable!("rank-deficient neighbor set for r = {r}"),
    }
}

pub fn same_component(r: u64, u: LatticeVector, v: LatticeVector) -> Result<bool> {
    let set = realized_neighbors(r)?;
    Ok(SublatticeBasis::generated_by(set.iter()).contains(u - v))
}

/// `G(ℤ, d)` splits into the `d` residue classes mod `d`.
pub fn component_count_1d(d: u64) -> u64 {
    d
}
