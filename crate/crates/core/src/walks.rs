//! Exact path and walk counts in `G(ℤ², √r)`.
//!
//! A path visits pairwise distinct vertices; a walk may revisit. Both are
//! graph invariants, and the distinction matters: the unique straight path
//! from the origin to `n·p` is generally not the unique walk.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{neighbor_vectors, LatticeVector, NeighborSet};

/// Upper bound on work for the exhaustive counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_NODES)
    }
}

/// `f_l(u, v)`: paths with `l` edges from `u` to `v` in `G(ℤ², √r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCountQuery {
    pub r: u64,
    pub l: u32,
    pub u: LatticeVector,
    pub v: LatticeVector,
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

struct PathSearch<'a> {
    r: i128,
    steps: &'a [LatticeVector],
    target: LatticeVector,
    path: Vec<LatticeVector>,
    visited: u64,
    limit: u64,
}

impl PathSearch<'_> {
    fn on_path(&self, p: LatticeVector) -> bool {
        self.path.iter().any(|&q| q == p)
    }

    /// Paths of `remaining` more edges from the last vertex of `self.path`.
    fn extend(&mut self, remaining: u32) -> Result<u64> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit });
        }
        let here = *self.path.last().expect("path starts non-empty");
        if remaining == 0 {
            return Ok(u64::from(here == self.target));
        }
        // triangle inequality: |here − target| ≤ remaining·√r
        let k = remaining as i128;
        if (here - self.target).squared_norm() > k * k * self.r {
            return Ok(0);
        }
        if remaining == 1 {
            let last = self.target - here;
            return Ok(u64::from(last.squared_norm() == self.r && !self.on_path(self.target)));
        }
        let mut total = 0;
        for i in 0..self.steps.len() {
            let next = here + self.steps[i];
            if self.on_path(next) {
                continue;
            }
            self.path.push(next);
            let sub = self.extend(remaining - 1);
            self.path.pop();
            total += sub?;
        }
        Ok(total)
    }
}

/// Number of vertex-distinct paths of length `q.l` from `q.u` to `q.v`.
///
/// Depth-first enumeration pruned by the triangle inequality. Fails with
/// [`Error::BudgetExceeded`] once more than `budget.max_nodes` search nodes
/// are visited; the count is never truncated.
pub fn count_paths(q: &PathCountQuery, budget: SearchBudget) -> Result<u64> {
    let set = realized_neighbors(q.r)?;
    let mut search = PathSearch {
        r: q.r as i128,
        steps: &set.vectors,
        target: q.v,
        path: vec![q.u],
        visited: 0,
        limit: budget.max_nodes,
    };
    search.extend(q.l)
}

/// Number of step sequences of length `l` from `u` to `v` (revisits allowed),
/// by `l`-fold convolution of the neighbor indicator on a dense grid.
///
/// The grid has `(2·l·⌊√r⌋ + 1)²` cells; a grid larger than
/// `budget.max_nodes` cells is refused.
pub fn count_walks(
    r: u64,
    l: u32,
    u: LatticeVector,
    v: LatticeVector,
    budget: SearchBudget,
) -> Result<BigUint> {
    let set = realized_neighbors(r)?;
    let d = v - u;
    let reach = l as i128 * r.isqrt() as i128;
    if (d.x as i128).abs() > reach || (d.y as i128).abs() > reach {
        return Ok(BigUint::ZERO);
    }
    let side = 2 * reach + 1;
    if side * side > budget.max_nodes as i128 {
        return Err(Error::BudgetExceeded {
            limit: budget.max_nodes,
        });
    }
    let (side, reach) = (side as usize, reach as i64);
    let cell = |p: LatticeVector| ((p.y + reach) as usize) * side + (p.x + reach) as usize;

    let mut grid = vec![BigUint::ZERO; side * side];
    grid[cell(LatticeVector::ORIGIN)] = BigUint::from(1u8);
    // after `step` steps the support lies within step·⌊√r⌋ of the origin
    let m = r.isqrt() as i64;
    for step in 0..l as i64 {
        let mut next = vec![BigUint::ZERO; side * side];
        let span = step * m;
        for y in -span..=span {
            for x in -span..=span {
                let p = LatticeVector::new(x, y);
                let here = &grid[cell(p)];
                if *here == BigUint::ZERO {
                    continue;
                }
                for w in set.iter() {
                    next[cell(p + w)] += here;
                }
            }
        }
        grid = next;
    }
    Ok(std::mem::take(&mut grid[cell(d)]))
}

/// Whether the straight path `0, p, 2p, …, n·p` is the only path of length
/// `n` from the origin to `n·p`.
pub fn verify_collinear_uniqueness(
    r: u64,
    p: LatticeVector,
    n: u32,
    budget: SearchBudget,
) -> Result<bool> {
    if r == 0 {
        return Err(Error::ZeroRadicand);
    }
    if !p.has_squared_norm(r) {
        return Err(Error::WrongLength { r, x: p.x, y: p.y });
    }
    let q = PathCountQuery {
        r,
        l: n,
        u: LatticeVector::ORIGIN,
        v: (n as i64) * p,
    };
    Ok(count_paths(&q, budget)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn v(x: i64, y: i64) -> LatticeVector {
        LatticeVector::new(x, y)
    }

    fn paths(r: u64, l: u32, a: LatticeVector, b: LatticeVector) -> u64 {
        count_paths(&PathCountQuery { r, l, u: a, v: b }, SearchBudget::default()).unwrap()
    }

    fn walks(r: u64, l: u32, a: LatticeVector, b: LatticeVector) -> u64 {
        count_walks(r, l, a, b, SearchBudget::default())
            .unwrap()
            .try_into()
            .unwrap()
    }

    // Unpruned enumeration of every step sequence.
    fn brute(r: u64, l: u32, a: LatticeVector, b: LatticeVector) -> (u64, u64) {
        fn go(
            steps: &[LatticeVector],
            trail: &mut Vec<LatticeVector>,
            left: u32,
            b: LatticeVector,
            out: &mut (u64, u64),
        ) {
            let here = *trail.last().unwrap();
            if left == 0 {
                if here == b {
                    out.1 += 1;
                    let distinct: HashSet<_> = trail.iter().collect();
                    if distinct.len() == trail.len() {
                        out.0 += 1;
                    }
                }
                return;
            }
            for &s in steps {
                trail.push(here + s);
                go(steps, trail, left - 1, b, out);
                trail.pop();
            }
        }
        let steps = neighbor_vectors(r).vectors;
        let mut out = (0, 0);
        go(&steps, &mut vec![a], l, b, &mut out);
        out
    }

    #[test]
    fn path_examples() {
        assert_eq!(paths(1, 1, v(0, 0), v(1, 0)), 1);
        assert_eq!(paths(1, 2, v(0, 0), v(1, 1)), 2);
        assert_eq!(paths(1, 3, v(0, 0), v(1, 0)), 2);
        assert_eq!(brute(1, 3, v(0, 0), v(1, 0)).0, 2);
        assert_eq!(paths(1, 0, v(3, 3), v(3, 3)), 1);
        assert_eq!(paths(1, 0, v(3, 3), v(3, 4)), 0);
        assert_eq!(paths(1, 2, v(0, 0), v(0, 0)), 0);
    }

    #[test]
    fn walk_examples() {
        assert_eq!(walks(1, 2, v(0, 0), v(0, 0)), 4);
        assert_eq!(walks(1, 4, v(0, 0), v(0, 0)), 36);
        // (1,1)+(1,−1) and (1,−1)+(1,1)
        assert_eq!(brute(2, 2, v(0, 0), v(2, 0)).1, 2);
        assert_eq!(walks(2, 2, v(0, 0), v(2, 0)), 2);
        assert_eq!(walks(1, 0, v(0, 0), v(0, 0)), 1);
        assert_eq!(walks(1, 3, v(0, 0), v(9, 0)), 0);
    }

    #[test]
    fn collinear_examples() {
        let b = SearchBudget::default();
        assert_eq!(verify_collinear_uniqueness(1, v(1, 0), 3, b), Ok(true));
        assert_eq!(verify_collinear_uniqueness(2, v(1, 1), 2, b), Ok(true));
        assert_eq!(verify_collinear_uniqueness(25, v(4, 3), 2, b), Ok(true));
        assert_eq!(
            verify_collinear_uniqueness(25, v(4, 4), 2, b),
            Err(Error::WrongLength { r: 25, x: 4, y: 4 })
        );
    }

    #[test]
    fn walks_are_not_unique_where_paths_are() {
        // with two spare steps a walk can backtrack, a path cannot
        assert_eq!(paths(1, 2, v(0, 0), v(2, 0)), 1);
        assert!(walks(1, 4, v(0, 0), v(2, 0)) > paths(1, 4, v(0, 0), v(2, 0)));
    }

    #[test]
    fn budget_is_enforced() {
        let q = PathCountQuery {
            r: 25,
            l: 8,
            u: v(0, 0),
            v: v(1, 0),
        };
        assert_eq!(
            count_paths(&q, SearchBudget::new(100)),
            Err(Error::BudgetExceeded { limit: 100 })
        );
        assert_eq!(
            count_walks(25, 50, v(0, 0), v(0, 0), SearchBudget::new(100)),
            Err(Error::BudgetExceeded { limit: 100 })
        );
    }

    #[test]
    fn not_realized() {
        let q = PathCountQuery {
            r: 3,
            l: 1,
            u: v(0, 0),
            v: v(1, 0),
        };
        assert_eq!(count_paths(&q, SearchBudget::default()), Err(Error::NotRealized { r: 3 }));
    }

    #[test]
    fn closed_two_walks_equal_degree() {
        for r in (1..=100).filter(|&r| crate::arith::is_realized(r)) {
            assert_eq!(walks(r, 2, v(0, 0), v(0, 0)), neighbor_vectors(r).len() as u64);
        }
    }

    #[test]
    fn off_circle_points_never_have_a_unique_path() {
        // r = 1, n = 2: f_2(0, α) = 1 only on the circle |α|² = 4
        for x in -3..=3 {
            for y in -3..=3 {
                let a = v(x, y);
                if paths(1, 2, v(0, 0), a) == 1 {
                    assert_eq!(a.squared_norm(), 4, "α = {a}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn counts_match_brute_force_and_symmetries(
            r in prop::sample::select(vec![1u64, 2, 4, 5]),
            l in 0u32..=4,
            ux in -2i64..=2, uy in -2i64..=2,
            dx in -4i64..=4, dy in -4i64..=4,
            tx in -50i64..=50, ty in -50i64..=50,
        ) {
            let (a, b) = (v(ux, uy), v(ux + dx, uy + dy));
            let (p, w) = (paths(r, l, a, b), walks(r, l, a, b));
            prop_assert_eq!((p, w), brute(r, l, a, b));
            prop_assert!(p <= w);
            prop_assert_eq!(p, paths(r, l, b, a));
            prop_assert_eq!(w, walks(r, l, b, a));
            let t = v(tx, ty);
            prop_assert_eq!(p, paths(r, l, a + t, b + t));
            prop_assert_eq!(w, walks(r, l, a + t, b + t));
        }
    }
}
