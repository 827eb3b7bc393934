use alloc::vec::Vec;

use crate::linalg::{homology_at, ExactMatrix, HomologyGroup, Ring};

use super::BarError;

/// A bounded chain complex `C_top → ⋯ → C_1 → C_0` of free modules.
///
/// The complex is taken to be zero above `top`, so [`ChainComplex::homology`]
/// at `top` is the kernel of `d_top`. Models that truncate an infinite complex
/// build one degree more than they report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: Ring,
    ranks: Vec<usize>,
    /// `differentials[n - 1]` is `d_n : C_n → C_{n−1}`.
    differentials: Vec<ExactMatrix>,
}

impl ChainComplex {
    /// Checks shapes, rings and `d_{n−1} d_n = 0`.
    pub fn new(ring: Ring, ranks: Vec<usize>, differentials: Vec<ExactMatrix>) -> Result<ChainComplex, BarError> {
        assert!(!ranks.is_empty(), "a complex has at least degree 0");
        if differentials.len() + 1 != ranks.len() {
            return Err(BarError::SizeMismatch { expected: ranks.len() - 1, got: differentials.len() });
        }
        for (k, d) in differentials.iter().enumerate() {
            let n = k + 1;
            if d.ring() != ring {
                return Err(crate::linalg::LinalgError::RingMismatch(ring, d.ring()).into());
            }
            if d.rows() != ranks[n - 1] || d.cols() != ranks[n] {
                return Err(crate::linalg::LinalgError::ShapeMismatch {
                    left: (ranks[n - 1], ranks[n]),
                    right: (d.rows(), d.cols()),
                }
                .into());
            }
            if n >= 2 && !differentials[n - 2].mul(d)?.is_zero() {
                return Err(BarError::NotAComplex { degree: n });
            }
        }
        Ok(ChainComplex { ring, ranks, differentials })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    /// `d_n`, including the zero maps out of `C_0` and into `C_top`.
    pub fn differential(&self, n: usize) -> ExactMatrix {
        if n == 0 {
            ExactMatrix::zeros(self.ring, 0, self.rank(0))
        } else if n <= self.top_degree() {
            self.differentials[n - 1].clone()
        } else {
            ExactMatrix::zeros(self.ring, self.rank(n - 1), 0)
        }
    }

    pub fn homology(&self, n: usize) -> Result<HomologyGroup, BarError> {
        Ok(homology_at(&self.differential(n + 1), &self.differential(n))?)
    }

    /// `H_0, …, H_last`.
    pub fn homology_up_to(&self, last: usize) -> Result<Vec<HomologyGroup>, BarError> {
        (0..=last).map(|n| self.homology(n)).collect()
    }
}

/// Totalizes a first-quadrant bicomplex `E_{p,q}` up to total degree `top`.
///
/// `Tot_k = ⨁_{p+q=k} E_{p,q}` with summands in increasing `p`. The caller
/// supplies `vertical(p, q): E_{p,q} → E_{p,q−1}` (for `q ≥ 1`) and
/// `horizontal(p, q): E_{p,q} → E_{p−1,q}` (for `p ≥ 1`), already signed so
/// that the squares anticommute.
pub fn total_complex(
    ring: Ring,
    top: usize,
    rank: impl Fn(usize, usize) -> usize,
    vertical: impl Fn(usize, usize) -> ExactMatrix,
    horizontal: impl Fn(usize, usize) -> ExactMatrix,
) -> Result<ChainComplex, BarError> {
    let sizes = |k: usize| -> Vec<usize> { (0..=k).map(|p| rank(p, k - p)).collect() };
    let ranks: Vec<usize> = (0..=top).map(|k| sizes(k).iter().sum()).collect();
    let mut differentials = Vec::with_capacity(top);
    for k in 1..=top {
        let cols = sizes(k);
        let rows = sizes(k - 1);
        let verticals: Vec<Option<ExactMatrix>> = (0..=k).map(|p| (p < k).then(|| vertical(p, k - p))).collect();
        let horizontals: Vec<Option<ExactMatrix>> = (0..=k).map(|p| (p >= 1).then(|| horizontal(p, k - p))).collect();
        let blocks: Vec<Vec<Option<&ExactMatrix>>> = (0..k)
            .map(|row_p| {
                (0..=k)
                    .map(|col_p| {
                        if col_p == row_p {
                            verticals[col_p].as_ref()
                        } else if col_p == row_p + 1 {
                            horizontals[col_p].as_ref()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        differentials.push(ExactMatrix::block(ring, &rows, &cols, &blocks)?);
    }
    ChainComplex::new(ring, ranks, differentials)
}
