use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::{LinalgError, Ring, Scalar};

type SparseRow = Vec<(usize, Scalar)>;

/// A matrix of exact scalars over one of the supported rings.
///
/// Rows are stored sparsely, as column-sorted `(col, value)` lists without
/// explicit zeros; differentials of bar complexes have a handful of nonzeros
/// per column, so this is what keeps degree-5 complexes in memory. Entries are
/// kept in the canonical form of the ring (see [`Ring::reduce`]).
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl ExactMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> ExactMatrix {
        ExactMatrix { ring, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(ring: Ring, n: usize) -> ExactMatrix {
        let data = (0..n).map(|i| vec![(i, ring.one())]).collect();
        ExactMatrix { ring, rows: n, cols: n, data }
    }

    /// Build from explicit dense rows. Every row must have the same length and
    /// every entry must have an image in `ring`.
    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<ExactMatrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::RaggedRows);
            }
            let mut sparse = Vec::new();
            for (c, x) in row.iter().enumerate() {
                let x = ring.reduce(x)?;
                if !x.is_zero() {
                    sparse.push((c, x));
                }
            }
            data.push(sparse);
        }
        Ok(ExactMatrix { ring, rows: nrows, cols, data })
    }

    /// Convenience for small integer matrices; entries are reduced into `ring`.
    pub fn from_i64_rows(ring: Ring, rows: &[&[i64]]) -> ExactMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged integer matrix");
                row.iter()
                    .enumerate()
                    .map(|(c, &v)| (c, ring.from_i64(v)))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        ExactMatrix { ring, rows: rows.len(), cols, data }
    }

    /// Sparse ingestion: `(row, col, value)` triplets, duplicates are summed.
    pub fn from_triplets<I>(ring: Ring, rows: usize, cols: usize, triplets: I) -> Result<ExactMatrix, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut buckets: Vec<SparseRow> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::IndexOutOfRange { row: r, col: c, rows, cols });
            }
            buckets[r].push((c, ring.reduce(&v)?));
        }
        let data = buckets.into_iter().map(|row| normalize_row(ring, row)).collect();
        Ok(ExactMatrix { ring, rows, cols, data })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        match self.data[r].binary_search_by_key(&c, |(k, _)| *k) {
            Ok(pos) => self.data[r][pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Nonzero entries of row `r`, sorted by column.
    pub fn sparse_row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    pub fn dense_row(&self, r: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.cols];
        for (c, x) in &self.data[r] {
            out[*c] = x.clone();
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.dense_row(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    /// Nonzero entries of each row as `(col, value)` pairs.
    pub fn sparse_rows(&self) -> Vec<Vec<(usize, Scalar)>> {
        self.data.clone()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, x) in row {
                data[*c].push((r, x.clone()));
            }
        }
        ExactMatrix { ring: self.ring, rows: self.cols, cols: self.rows, data }
    }

    /// The matrix product `self · rhs`.
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.ring != rhs.ring {
            return Err(LinalgError::RingMismatch(self.ring, rhs.ring));
        }
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let ring = self.ring;
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: alloc::collections::BTreeMap<usize, Scalar> = alloc::collections::BTreeMap::new();
                for (k, a) in row {
                    for (c, b) in &rhs.data[*k] {
                        let slot = acc.entry(*c).or_insert_with(Scalar::zero);
                        *slot = ring.add(slot, &ring.mul(a, b));
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        Ok(ExactMatrix { ring, rows: self.rows, cols: rhs.cols, data })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch { left: (self.rows, self.cols), right: (v.len(), 1) });
        }
        let ring = self.ring;
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().fold(ring.zero(), |acc, (c, a)| ring.add(&acc, &ring.mul(a, &v[*c]))))
            .collect())
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.same_shape(rhs)?;
        Ok(self.merge(rhs, false))
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        self.same_shape(rhs)?;
        Ok(self.merge(rhs, true))
    }

    pub fn scale(&self, s: &Scalar) -> ExactMatrix {
        let ring = self.ring;
        let s = ring.reduce(s).expect("scale factor outside ring");
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, a)| (*c, ring.mul(a, &s))).filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        ExactMatrix { ring, rows: self.rows, cols: self.cols, data }
    }

    /// Reinterpret the entries in another ring (for instance an integral
    /// differential read over ℚ or 𝔽ₚ).
    pub fn change_ring(&self, ring: Ring) -> Result<ExactMatrix, LinalgError> {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for (c, x) in row {
                let y = ring.reduce(x)?;
                if !y.is_zero() {
                    out.push((*c, y));
                }
            }
            data.push(out);
        }
        Ok(ExactMatrix { ring, rows: self.rows, cols: self.cols, data })
    }

    /// Reorder rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> ExactMatrix {
        assert_eq!(row_perm.len(), self.rows);
        assert_eq!(col_perm.len(), self.cols);
        let mut data: Vec<SparseRow> = vec![Vec::new(); self.rows];
        for (r, row) in self.data.iter().enumerate() {
            let mut moved: SparseRow = row.iter().map(|(c, x)| (col_perm[*c], x.clone())).collect();
            moved.sort_by_key(|(c, _)| *c);
            data[row_perm[r]] = moved;
        }
        ExactMatrix { ring: self.ring, rows: self.rows, cols: self.cols, data }
    }

    /// Place `blocks[i][j]` (or zero where `None`) into one block matrix.
    pub fn block(
        ring: Ring,
        row_sizes: &[usize],
        col_sizes: &[usize],
        blocks: &[Vec<Option<&ExactMatrix>>],
    ) -> Result<ExactMatrix, LinalgError> {
        let rows: usize = row_sizes.iter().sum();
        let cols: usize = col_sizes.iter().sum();
        let mut data: Vec<SparseRow> = Vec::with_capacity(rows);
        for (bi, &rs) in row_sizes.iter().enumerate() {
            let start = data.len();
            data.resize(start + rs, Vec::new());
            let mut c0 = 0;
            for (bj, &cs) in col_sizes.iter().enumerate() {
                if let Some(b) = blocks[bi][bj] {
                    if b.rows != rs || b.cols != cs {
                        return Err(LinalgError::ShapeMismatch { left: (rs, cs), right: (b.rows, b.cols) });
                    }
                    if b.ring != ring {
                        return Err(LinalgError::RingMismatch(ring, b.ring));
                    }
                    for (r, row) in b.data.iter().enumerate() {
                        data[start + r].extend(row.iter().map(|(c, x)| (c0 + c, x.clone())));
                    }
                }
                c0 += cs;
            }
        }
        Ok(ExactMatrix { ring, rows, cols, data })
    }

    /// Keep only the listed columns, in the given order.
    pub fn select_columns(&self, keep: &[usize]) -> ExactMatrix {
        let mut position = vec![usize::MAX; self.cols];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut out: SparseRow =
                    row.iter().filter(|(c, _)| position[*c] != usize::MAX).map(|(c, x)| (position[*c], x.clone())).collect();
                out.sort_by_key(|(c, _)| *c);
                out
            })
            .collect();
        ExactMatrix { ring: self.ring, rows: self.rows, cols: keep.len(), data }
    }

    fn merge(&self, rhs: &ExactMatrix, subtract: bool) -> ExactMatrix {
        let ring = self.ring;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| {
                let mut row: SparseRow = a.clone();
                row.extend(b.iter().map(|(c, x)| (*c, if subtract { ring.neg(x) } else { x.clone() })));
                normalize_row(ring, row)
            })
            .collect();
        ExactMatrix { ring, rows: self.rows, cols: self.cols, data }
    }

    fn same_shape(&self, rhs: &ExactMatrix) -> Result<(), LinalgError> {
        if self.ring != rhs.ring {
            return Err(LinalgError::RingMismatch(self.ring, rhs.ring));
        }
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }
}

/// Sort by column, sum duplicates, drop zeros.
fn normalize_row(ring: Ring, mut row: SparseRow) -> SparseRow {
    row.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, x) in row {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx = ring.add(lx, &x),
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix<{}> {}x{} [", self.ring, self.rows, self.cols)?;
        for r in 0..self.rows {
            f.write_str("  ")?;
            for (i, x) in self.dense_row(r).iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("\n")?;
        }
        f.write_str("]")
    }
}
