//! Exact solver for level systems `{ A x = n·1, x ≥ 1 }` over the integers.
//!
//! Variables are assigned depth-first in index order with increasing values,
//! so the first solution found at a level is the lexicographically smallest.
//! Two kinds of propagation cut the tree:
//!
//! * interval bounds: since every coefficient is non-negative, a variable is
//!   bounded above by what is left of each row once the unassigned variables
//!   take their minimum value 1;
//! * forcing: the system is brought to reduced echelon form with the pivot
//!   of each row on its largest-index variable, so every pivot variable is a
//!   function of smaller-index variables and `n` and is never branched on.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::{linalg, Rational};

/// Equations `Σ_j rows[r][j] x_j = n` with non-negative integer coefficients.
#[derive(Clone, Debug)]
pub struct LevelSystem {
    rows: Vec<Vec<i64>>,
    vars: usize,
    /// For each variable: `Some(row)` of the echelon form that determines it.
    forced: Vec<Option<usize>>,
    /// Echelon rows over the columns `x_0..x_{vars-1}, n`.
    echelon: Vec<Vec<Rational>>,
    /// Variables that occur in no equation; pinned to 1.
    unconstrained: Vec<bool>,
    inconsistent: bool,
}

impl LevelSystem {
    pub fn new(rows: Vec<Vec<i64>>, vars: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == vars && r.iter().all(|&c| c >= 0)));
        let unconstrained: Vec<bool> = (0..vars)
            .map(|j| rows.iter().all(|r| r[j] == 0))
            .collect();
        // columns reversed so that pivots land on the largest index
        let mut m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                let mut row: Vec<Rational> =
                    r.iter().rev().map(|&c| Rational::from_integer(c)).collect();
                row.push(-Rational::one());
                row
            })
            .collect();
        let pivots = linalg::rref(&mut m);
        let mut forced = vec![None; vars];
        let mut inconsistent = false;
        let mut echelon = Vec::new();
        for (r, &pc) in pivots.iter().enumerate() {
            if pc == vars {
                // a row reading n = 0
                inconsistent = true;
                continue;
            }
            let var = vars - 1 - pc;
            let mut row: Vec<Rational> = (0..vars).map(|j| m[r][vars - 1 - j]).collect();
            row.push(m[r][vars]);
            forced[var] = Some(echelon.len());
            echelon.push(row);
        }
        LevelSystem {
            rows,
            vars,
            forced,
            echelon,
            unconstrained,
            inconsistent,
        }
    }

    /// Smallest `n` compatible with `x ≥ 1`.
    pub fn lower_bound(&self) -> i64 {
        self.rows
            .iter()
            .map(|r| r.iter().sum::<i64>())
            .max()
            .unwrap_or(1)
            .max(1)
    }

    /// The lexicographically smallest solution at level `n`, if any.
    pub fn solve_at(&self, n: i64) -> Option<Vec<i64>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![0i64; self.vars];
        let mut partial = vec![0i64; self.rows.len()];
        if self.assign(0, n, &mut x, &mut partial) {
            Some(x)
        } else {
            None
        }
    }

    /// Searches `n = lower_bound(), ..., bound` and returns the first level
    /// with a solution.
    pub fn minimize(&self, bound: i64) -> Option<(i64, Vec<i64>)> {
        (self.lower_bound()..=bound).find_map(|n| self.solve_at(n).map(|x| (n, x)))
    }

    fn upper_bound(&self, j: usize, n: i64, partial: &[i64]) -> i64 {
        let mut ub = i64::MAX;
        for (r, row) in self.rows.iter().enumerate() {
            if row[j] == 0 {
                continue;
            }
            let rest: i64 = row[j + 1..].iter().sum();
            let room = n - partial[r] - rest;
            ub = ub.min(room.div_euclid(row[j]));
        }
        ub
    }

    fn forced_value(&self, e: usize, n: i64, x: &[i64], var: usize) -> Option<i64> {
        // x_var = -(Σ_{j<var} e_j x_j + e_n n); the pivot coefficient is 1
        let row = &self.echelon[e];
        let mut acc = row[self.vars] * Rational::from_integer(n);
        for (j, &xj) in x.iter().enumerate().take(var) {
            if !row[j].is_zero() {
                acc += row[j] * Rational::from_integer(xj);
            }
        }
        let v = -acc;
        v.is_integer().then(|| v.to_integer())
    }

    fn assign(&self, j: usize, n: i64, x: &mut [i64], partial: &mut [i64]) -> bool {
        if j == self.vars {
            return partial.iter().all(|&p| p == n);
        }
        if self.unconstrained[j] {
            x[j] = 1;
            return self.assign(j + 1, n, x, partial);
        }
        let ub = self.upper_bound(j, n, partial);
        if ub < 1 {
            return false;
        }
        let (lo, hi) = match self.forced[j] {
            Some(e) => match self.forced_value(e, n, x, j) {
                Some(v) if (1..=ub).contains(&v) => (v, v),
                _ => return false,
            },
            None => (1, ub),
        };
        for v in lo..=hi {
            x[j] = v;
            for (r, row) in self.rows.iter().enumerate() {
                partial[r] += row[j] * v;
            }
            let ok = self.assign(j + 1, n, x, partial);
            for (r, row) in self.rows.iter().enumerate() {
                partial[r] -= row[j] * v;
            }
            if ok {
                return true;
            }
        }
        false
    }
}
