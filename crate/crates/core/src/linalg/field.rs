//! Gaussian elimination over ℚ and 𝔽ₚ.
//!
//! Elimination runs on a ring-specific element type (`u64` residues for 𝔽ₚ,
//! `BigRational` for ℚ) so that the hot loops never normalise through the
//! generic [`Scalar`] path.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::ring::{mod_inverse, Scalar};

pub(crate) trait FieldArith {
    type E: Clone + PartialEq;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a` is nonzero.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn lift(&self, x: &Scalar) -> Self::E;
    fn lower(&self, e: &Self::E) -> Scalar;
}

pub(crate) struct Rationals;

impl FieldArith for Rationals {
    type E = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn inv(&self, a: &Scalar) -> Scalar {
        a.recip()
    }
    fn lift(&self, x: &Scalar) -> Scalar {
        x.clone()
    }
    fn lower(&self, e: &Scalar) -> Scalar {
        e.clone()
    }
}

pub(crate) struct ModP(pub u64);

impl FieldArith for ModP {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        let p = self.0;
        (a + (p - b)) % p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        mod_inverse(*a, self.0)
    }
    fn lift(&self, x: &Scalar) -> u64 {
        // Canonical 𝔽ₚ scalars are integers in 0..p.
        x.numer().to_u64().expect("scalar not reduced mod p") % self.0
    }
    fn lower(&self, e: &u64) -> Scalar {
        Scalar::from_integer(BigInt::from(*e))
    }
}

type SparseRow<E> = Vec<(usize, E)>;

/// `row - factor * pivot`, both sorted by column.
fn axpy<F: FieldArith>(f: &F, row: &SparseRow<F::E>, factor: &F::E, pivot: &SparseRow<F::E>) -> SparseRow<F::E> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            let v = f.sub(&f.zero(), &f.mul(factor, &pivot[j].1));
            if !f.is_zero(&v) {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = f.sub(&row[i].1, &f.mul(factor, &pivot[j].1));
            if !f.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained row echelon form with monic pivot rows.
pub(crate) struct Echelon<'a, F: FieldArith> {
    field: &'a F,
    pivots: BTreeMap<usize, SparseRow<F::E>>,
}

impl<'a, F: FieldArith> Echelon<'a, F> {
    pub(crate) fn new(field: &'a F) -> Self {
        Echelon { field, pivots: BTreeMap::new() }
    }

    /// Reduce `row` against the current pivots and keep it if independent.
    pub(crate) fn insert(&mut self, mut row: SparseRow<F::E>) -> bool {
        let f = self.field;
        while let Some((lead, coef)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(f, &row, &coef, p),
                None => {
                    let inv = f.inv(&coef);
                    for entry in row.iter_mut() {
                        entry.1 = f.mul(&entry.1, &inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub(crate) fn rank_of_rows<F: FieldArith>(f: &F, rows: Vec<Vec<(usize, Scalar)>>) -> usize {
    let mut ech = Echelon::new(f);
    for row in rows {
        let lifted: SparseRow<F::E> = row
            .iter()
            .map(|(c, x)| (*c, f.lift(x)))
            .filter(|(_, e)| !f.is_zero(e))
            .collect();
        ech.insert(lifted);
    }
    ech.rank()
}

/// Null space of a dense `rows × cols` matrix via reduced row echelon form.
pub(crate) fn kernel<F: FieldArith>(f: &F, rows: usize, cols: usize, entries: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut a: Vec<Vec<F::E>> = (0..rows)
        .map(|r| entries[r * cols..(r + 1) * cols].iter().map(|x| f.lift(x)).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(x, &f.mul(&factor, y));
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    let mut is_pivot = alloc::vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = alloc::vec![f.zero(); cols];
        v[free] = f.one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = f.sub(&f.zero(), &a[row][free]);
        }
        basis.push(v.iter().map(|e| f.lower(e)).collect());
    }
    basis
}
