use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Invariant factors of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Positive, nonzero, each dividing the next.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// Diagonalise `a` in place by unimodular row and column operations and read
/// off the invariant factors.
///
/// Pivots are always the entry of smallest absolute value in the active
/// block, which keeps intermediate growth down.
pub(crate) fn smith(mut a: Vec<Vec<BigInt>>, cols: usize) -> SmithForm {
    let rows = a.len();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = min_abs(&a, t, t..rows, t..cols) else {
            break;
        };
        a.swap(t, pr);
        swap_cols(&mut a, t, pc);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let pivot_row = &head[t];
                for (x, y) in tail[0][t..].iter_mut().zip(&pivot_row[t..]) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a[t..].iter_mut() {
                    if !row[t].is_zero() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                // A remainder survived and is smaller than the pivot: promote
                // the smallest entry of the pivot cross and go again.
                let best_col = (t..cols)
                    .filter(|&j| !a[t][j].is_zero())
                    .min_by(|&x, &y| a[t][x].abs().cmp(&a[t][y].abs()))
                    .expect("pivot row is nonzero");
                let best_row = (t..rows)
                    .filter(|&i| !a[i][t].is_zero())
                    .min_by(|&x, &y| a[x][t].abs().cmp(&a[y][t].abs()))
                    .expect("pivot column is nonzero");
                if a[t][best_col].abs() <= a[best_row][t].abs() {
                    swap_cols(&mut a, t, best_col);
                } else {
                    a.swap(t, best_row);
                }
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            let p = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t][t..].iter_mut().zip(&tail[0][t..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    let factors: Vec<BigInt> = (0..t).map(|i| a[i][i].abs()).collect();
    SmithForm { rank: factors.len(), factors }
}

fn min_abs(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: core::ops::Range<usize>,
    cols: core::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &a[i][j];
            if v.is_zero() {
                continue;
            }
            let av = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| av < *b) {
                let unit = av == BigInt::from(1);
                best = Some((i, j, av));
                if unit {
                    let (i, j, _) = best.unwrap();
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}
