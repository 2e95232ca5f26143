//! Exact linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::Rational;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// column of each nonzero row.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in c..cols {
                    let delta = f * m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// A basis of `{x : m x = 0}` for a matrix with `cols` columns.
///
/// One vector per free column, with a 1 in that column.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free];
        }
        basis.push(v);
    }
    basis
}

pub fn to_rational(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}

/// Whether the integer vectors are linearly independent over ℚ.
pub fn is_independent(vectors: &[Vec<i64>]) -> bool {
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| to_rational(v)).collect();
    rank(&rows) == vectors.len()
}

/// Coordinates of `target` in terms of linearly independent `basis` vectors,
/// or `None` when `target` is outside their rational span.
pub fn coordinates(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let dim = target.len();
    // augmented system: columns are the basis vectors, last column the target
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| Rational::from_integer(b[i])).collect();
            row.push(Rational::from_integer(target[i]));
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    debug_assert_eq!(pivots.len(), k, "basis must be independent");
    let mut x = vec![Rational::zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = m[row][k];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        to_rational(v)
    }

    #[test]
    fn nullspace_of_rank_one_matrix() {
        let m = vec![q(&[1, 2, 3]), q(&[2, 4, 6])];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let m = vec![q(&[1, 1]), q(&[1, -1])];
        assert!(nullspace(&m, 2).is_empty());
    }

    #[test]
    fn coordinates_in_span() {
        let basis = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(coordinates(&basis, &[1, 2, 1]), Some(q(&[1, 1])));
        assert_eq!(coordinates(&basis, &[1, 0, 0]), None);
        let half = coordinates(&[vec![2, 0]], &[1, 0]).unwrap();
        assert_eq!(half, vec![Rational::new(1, 2)]);
    }

    #[test]
    fn independence() {
        assert!(is_independent(&[vec![1, 0], vec![0, 1]]));
        assert!(!is_independent(&[vec![1, 0], vec![0, 1], vec![1, 1]]));
        assert!(is_independent(&[]));
    }
}
