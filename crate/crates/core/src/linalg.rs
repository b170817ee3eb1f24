//! Small exact linear algebra: rational elimination and Smith normal form
//! over the integers.

#![allow(clippy::needless_range_loop)]

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Determinant of a square rational matrix by fraction-exact elimination.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Integer determinant via the rational routine.
pub fn determinant_i64(matrix: &[Vec<i64>]) -> BigInt {
    let m: Vec<Vec<Rational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect()
        })
        .collect();
    determinant(&m).to_integer()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let delta = &factor * &m[r][j];
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
    row_reduce(&mut m).len()
}

/// Solves the square system `m x = rhs`; `None` when singular.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// A basis of the right null space of `rows` (vectors of length `dim`).
pub fn null_space(rows: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

/// Diagonal of the Smith normal form of an integer matrix. The result has
/// `min(rows, cols)` entries `d_1 | d_2 | ...`, all nonnegative; zeros trail.
pub fn smith_diagonal(matrix: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let steps = rows.min(cols);
    for t in 0..steps {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pr, pc)) = min_nonzero(&m, t) else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in (t + 1)..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = m[r][t].div_floor(&m[t][t]);
                for c in t..cols {
                    let delta = &q * &m[t][c];
                    m[r][c] -= delta;
                }
                if !m[r][t].is_zero() {
                    dirty = true;
                }
            }
            for c in (t + 1)..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = m[t][c].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[c] -= delta;
                }
                if !m[t][c].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Pivot must divide the rest of the block.
                let offender = ((t + 1)..rows)
                    .flat_map(|r| ((t + 1)..cols).map(move |c| (r, c)))
                    .find(|&(r, c)| !m[r][c].is_multiple_of(&m[t][t]));
                match offender {
                    None => break,
                    Some((r, _)) => {
                        for c in t..cols {
                            let v = m[r][c].clone();
                            m[t][c] += v;
                        }
                        continue;
                    }
                }
            }
            let (pr, pc) = min_nonzero(&m, t).expect("block has a nonzero entry");
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
        }
        if m[t][t].is_negative() {
            for c in t..cols {
                m[t][c] = -m[t][c].clone();
            }
        }
    }
    (0..steps).map(|i| m[i][i].clone()).collect()
}

fn min_nonzero(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in m.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if m[br][bc].abs() <= v.abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}
