//! Explicit walks between lattice points in `G(ℤ², √r)` for a core radicand.
//!
//! With `a² + b² = r`, `gcd(a, b) = 1`, `a` even and `s·a − t·b = −1`, the
//! multiset
//!
//! ```text
//! ⟨a,b⟩ + (a/2)·[s⟨a,b⟩ + s⟨a,−b⟩ + t⟨−b,a⟩ + t⟨−b,−a⟩]
//!       + ((b−1)/2)·[s⟨b,a⟩ + s⟨−b,a⟩ + t⟨a,−b⟩ + t⟨−a,−b⟩]
//! ```
//!
//! of `(s+t)(a+b−1) + 1` vectors of squared length `r` sums to `⟨0, 1⟩`.
//! Swapping and negating coordinates gives the other three unit vectors, and
//! concatenating those blocks reaches any lattice point.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{is_core_radicand, primitive_representation, solve_unit_bezout, BezoutPair};
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Refuse to materialize witnesses longer than this.
pub const MAX_WITNESS_STEPS: u64 = 50_000_000;

/// A walk given as a start vertex and its steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub r: u64,
    pub start: LatticeVector,
    pub steps: Vec<LatticeVector>,
}

impl PathWitness {
    pub fn new(r: u64, start: LatticeVector, steps: Vec<LatticeVector>) -> Self {
        PathWitness { r, start, steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> LatticeVector {
        self.steps.iter().fold(self.start, |p, &s| p + s)
    }

    /// `start`, then every vertex reached, `len() + 1` items.
    pub fn vertices(&self) -> impl Iterator<Item = LatticeVector> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().scan(self.start, |p, &s| {
            *p += s;
            Some(*p)
        }))
    }

    /// Every step has squared length `r`.
    pub fn validate(&self) -> Result<()> {
        self.walk().map(|_| ())
    }

    /// Validate and require the walk to run from `u` to `v`, in one pass.
    pub fn validate_between(&self, u: LatticeVector, v: LatticeVector) -> Result<()> {
        let end = self.walk()?;
        if self.start != u || end != Some(v) {
            return Err(Error::Malformed(format!(
                "walk runs from {} to {}, expected {u} to {v}",
                self.start,
                end.map_or("overflow".to_string(), |e| e.to_string())
            )));
        }
        Ok(())
    }

    // Checks every step; returns the end vertex, or None if a coordinate
    // overflows.
    fn walk(&self) -> Result<Option<LatticeVector>> {
        const LIM: u64 = 1 << 31;
        if self.r == 0 {
            return Err(Error::ZeroRadicand);
        }
        // Fast path: with |x|, |y| < 2³¹ squares and their sum stay below 2⁶³,
        // and fewer than 2³² such steps cannot overflow an i64 sum.
        let mut ok = self.steps.len() < 1 << 32 && self.r < 1 << 63;
        let r = self.r as i64;
        let (mut sx, mut sy) = (0i64, 0i64);
        if ok {
            for s in &self.steps {
                ok &= (s.x.unsigned_abs() < LIM)
                    & (s.y.unsigned_abs() < LIM)
                    & (s.x.wrapping_mul(s.x).wrapping_add(s.y.wrapping_mul(s.y)) == r);
                sx = sx.wrapping_add(s.x);
                sy = sy.wrapping_add(s.y);
            }
        }
        if !ok {
            let (mut x, mut y) = (0i128, 0i128);
            for s in &self.steps {
                if !s.has_squared_norm(self.r) {
                    return Err(Error::WrongLength {
                        r: self.r,
                        x: s.x,
                        y: s.y,
                    });
                }
                x += s.x as i128;
                y += s.y as i128;
            }
            let end_x = i64::try_from(x + self.start.x as i128);
            let end_y = i64::try_from(y + self.start.y as i128);
            return Ok(match (end_x, end_y) {
                (Ok(x), Ok(y)) => Some(LatticeVector::new(x, y)),
                _ => None,
            });
        }
        Ok(match (self.start.x.checked_add(sx), self.start.y.checked_add(sy)) {
            (Some(x), Some(y)) => Some(LatticeVector::new(x, y)),
            _ => None,
        })
    }

    pub fn is_vertex_distinct(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.len() + 1);
        self.vertices().all(|p| seen.insert(p))
    }

    /// Line format: `r R`, `start X Y`, then one `step DX DY` per step.
    pub fn to_text(&self) -> String {
        let mut out = format!("r {}\nstart {} {}\n", self.r, self.start.x, self.start.y);
        for s in &self.steps {
            writeln!(out, "step {} {}", s.x, s.y).unwrap();
        }
        out
    }

    /// Parse the line format. Blank lines and `#` comments are skipped.
    /// The result is validated.
    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |line: usize, what: &str| Error::Malformed(format!("line {line}: {what}"));
        let mut r = None;
        let mut start = None;
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().unwrap_or_default();
            let nums: Vec<&str> = words.collect();
            let int = |s: &str| s.parse::<i64>().map_err(|_| bad(line_no, "expected an integer"));
            match (key, nums.as_slice()) {
                ("r", [v]) if r.is_none() => {
                    r = Some(v.parse::<u64>().map_err(|_| bad(line_no, "bad radicand"))?)
                }
                ("start", [x, y]) if r.is_some() && start.is_none() => {
                    start = Some(LatticeVector::new(int(x)?, int(y)?))
                }
                ("step", [x, y]) if start.is_some() => {
                    steps.push(LatticeVector::new(int(x)?, int(y)?))
                }
                _ => return Err(bad(line_no, "unexpected line")),
            }
        }
        let r = r.ok_or_else(|| Error::Malformed("missing `r` line".into()))?;
        let start = start.ok_or_else(|| Error::Malformed("missing `start` line".into()))?;
        let w = PathWitness::new(r, start, steps);
        if w.walk()?.is_none() {
            return Err(Error::Malformed("coordinate overflow".into()));
        }
        Ok(w)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let w: PathWitness =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if w.walk()?.is_none() {
            return Err(Error::Malformed("coordinate overflow".into()));
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "+x")]
    PosX,
    #[serde(rename = "-x")]
    NegX,
    #[serde(rename = "+y")]
    PosY,
    #[serde(rename = "-y")]
    NegY,
}

impl Direction {
    pub fn unit(self) -> LatticeVector {
        match self {
            Direction::PosX => LatticeVector::new(1, 0),
            Direction::NegX => LatticeVector::new(-1, 0),
            Direction::PosY => LatticeVector::new(0, 1),
            Direction::NegY => LatticeVector::new(0, -1),
        }
    }

    /// Image of a vector under the symmetry taking `⟨0,1⟩` to `self.unit()`.
    fn orient(self, v: LatticeVector) -> LatticeVector {
        match self {
            Direction::PosY => v,
            Direction::NegY => -v,
            Direction::PosX => v.swap(),
            Direction::NegX => -v.swap(),
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+x" | "x" => Ok(Direction::PosX),
            "-x" => Ok(Direction::NegX),
            "+y" | "y" => Ok(Direction::PosY),
            "-y" => Ok(Direction::NegY),
            _ => Err(Error::Malformed(format!("unknown direction `{s}`"))),
        }
    }
}

/// The `(a, b, s, t)` driving the unit translation: `a` even, `b` odd,
/// `a² + b² = r`, `gcd(a, b) = 1`, `s·a − t·b = −1`.
pub fn unit_translation_parameters(r: u64) -> Result<BezoutPair> {
    if !is_core_radicand(r) {
        return Err(if r == 0 {
            Error::ZeroRadicand
        } else {
            Error::NotCoreRadicand { r }
        });
    }
    let rep = primitive_representation(r)?;
    let (a, b) = if rep.a % 2 == 0 {
        (rep.a, rep.b)
    } else {
        (rep.b, rep.a)
    };
    solve_unit_bezout(a, b)
}

/// Number of vectors in [`unit_translation`]: `(s+t)(a+b−1) + 1`.
pub fn unit_translation_len(p: &BezoutPair) -> u64 {
    (p.s + p.t) * (p.a + p.b - 1) + 1
}

/// Vectors of squared length `r` summing to `⟨0, 1⟩`, in the order of the
/// displayed sum.
pub fn unit_translation(r: u64) -> Result<Vec<LatticeVector>> {
    let p = unit_translation_parameters(r)?;
    if unit_translation_len(&p) > MAX_WITNESS_STEPS {
        return Err(Error::PathTooLong {
            steps: unit_translation_len(&p) as u128,
            limit: MAX_WITNESS_STEPS,
        });
    }
    let (a, b) = (p.a as i64, p.b as i64);
    let (s, t) = (p.s as usize, p.t as usize);
    let v = LatticeVector::new;
    let mut out = Vec::with_capacity(unit_translation_len(&p) as usize);
    out.push(v(a, b));
    let first = [(s, v(a, b)), (s, v(a, -b)), (t, v(-b, a)), (t, v(-b, -a))];
    let second = [(s, v(b, a)), (s, v(-b, a)), (t, v(a, -b)), (t, v(-a, -b))];
    for (reps, group) in [(a / 2, first), ((b - 1) / 2, second)] {
        for _ in 0..reps {
            for (count, w) in group {
                out.extend(std::iter::repeat_n(w, count));
            }
        }
    }
    Ok(out)
}

/// [`unit_translation`] moved onto another axis direction.
pub fn axis_translation(r: u64, direction: Direction) -> Result<Vec<LatticeVector>> {
    Ok(unit_translation(r)?
        .into_iter()
        .map(|w| direction.orient(w))
        .collect())
}

/// A walk from `u` to `v` of length `((s+t)(a+b−1)+1)·(|x|+|y|)` where
/// `⟨x, y⟩ = v − u`: all `x`-translations first, then `y`.
///
/// The walk may revisit vertices; see [`loop_erase`].
pub fn build_path(r: u64, u: LatticeVector, v: LatticeVector) -> Result<PathWitness> {
    let p = unit_translation_parameters(r)?;
    let d = v - u;
    let moves = d.x.unsigned_abs() as u128 + d.y.unsigned_abs() as u128;
    let total = unit_translation_len(&p) as u128 * moves;
    if total > MAX_WITNESS_STEPS as u128 {
        return Err(Error::PathTooLong {
            steps: total,
            limit: MAX_WITNESS_STEPS,
        });
    }
    let up = unit_translation(r)?;
    let mut steps = Vec::with_capacity(total as usize);
    let legs = [
        (if d.x >= 0 { Direction::PosX } else { Direction::NegX }, d.x.unsigned_abs()),
        (if d.y >= 0 { Direction::PosY } else { Direction::NegY }, d.y.unsigned_abs()),
    ];
    for (dir, count) in legs {
        if count == 0 {
            continue;
        }
        let block: Vec<_> = up.iter().map(|&w| dir.orient(w)).collect();
        for _ in 0..count {
            steps.extend_from_slice(&block);
        }
    }
    Ok(PathWitness::new(r, u, steps))
}

/// `n < 8·r^{3/2}`, decided exactly as `n² < 64·r³`.
pub fn within_length_bound(n: u64, r: u64) -> bool {
    let n = n as u128;
    let r = r as u128;
    match r.checked_pow(3).and_then(|c| c.checked_mul(64)) {
        Some(rhs) => n * n < rhs,
        None => true,
    }
}

/// Erase cycles in visiting order: whenever a vertex recurs, cut the walk
/// back to its first visit. The result is vertex-distinct with the same
/// endpoints.
pub fn loop_erase(w: &PathWitness) -> PathWitness {
    let mut kept: Vec<LatticeVector> = Vec::with_capacity(w.len() + 1);
    let mut position: HashMap<LatticeVector, usize> = HashMap::new();
    for p in w.vertices() {
        if let Some(&i) = position.get(&p) {
            for q in kept.drain(i + 1..) {
                position.remove(&q);
            }
        } else {
            position.insert(p, kept.len());
            kept.push(p);
        }
    }
    let steps = kept.windows(2).map(|pair| pair[1] - pair[0]).collect();
    PathWitness::new(w.r, w.start, steps)
}
