//! Exact linear algebra over ℤ, ℚ and 𝔽ₚ.
//!
//! Everything downstream reduces to three questions about matrices: rank,
//! null space and (over ℤ) invariant factors. [`homology_at`] combines them
//! into the homology of a single spot `C_{n+1} → C_n → C_{n-1}`.

mod field;
mod matrix;
mod ring;
mod snf;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

pub use matrix::ExactMatrix;
pub use ring::{Ring, Scalar};
pub use snf::SmithForm;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch: {left:?} against {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("ring mismatch: {0} against {1}")]
    RingMismatch(Ring, Ring),
    #[error("composite of consecutive differentials is not zero")]
    CompositionNonzero,
    #[error("{value} has no image in {ring}")]
    NotInRing { value: Scalar, ring: Ring },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown ring `{0}` (expected Z, Q or F<p>)")]
    UnknownRing(String),
    #[error("rows of different lengths")]
    RaggedRows,
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("operation needs integer matrices, got {0}")]
    RequiresIntegers(Ring),
    #[error("operation needs a field, got {0}")]
    RequiresField(Ring),
}

/// Smith normal form of an integer matrix: the nonzero invariant factors
/// `d₁ | d₂ | … | d_r` and the rank `r`.
pub fn smith_normal_form(m: &ExactMatrix) -> Result<SmithForm, LinalgError> {
    if m.ring() != Ring::Integers {
        return Err(LinalgError::RequiresIntegers(m.ring()));
    }
    let a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| m.dense_row(r).iter().map(|x| x.to_integer()).collect())
        .collect();
    Ok(snf::smith(a, m.cols()))
}

/// Rank over the ring's field of fractions (ℚ for integer matrices).
pub fn rank(m: &ExactMatrix) -> usize {
    match m.ring() {
        Ring::PrimeField(p) => field::rank_of_rows(&field::ModP(p), m.sparse_rows()),
        Ring::Rationals | Ring::Integers => field::rank_of_rows(&field::Rationals, m.sparse_rows()),
    }
}

/// A basis of `{ v : m v = 0 }` over ℚ or 𝔽ₚ.
pub fn kernel_basis(m: &ExactMatrix) -> Result<Vec<Vec<Scalar>>, LinalgError> {
    let entries: Vec<Scalar> = (0..m.rows()).flat_map(|r| m.dense_row(r)).collect();
    match m.ring() {
        Ring::Rationals => Ok(field::kernel(&field::Rationals, m.rows(), m.cols(), &entries)),
        Ring::PrimeField(p) => Ok(field::kernel(&field::ModP(p), m.rows(), m.cols(), &entries)),
        Ring::Integers => Err(LinalgError::RequiresField(Ring::Integers)),
    }
}

/// Homology of one spot of a chain complex.
///
/// Over a field only `free_rank` (the dimension) is meaningful and `torsion`
/// is empty. Over ℤ the group is `ℤ^free_rank ⊕ ⨁ ℤ/dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub ring: Ring,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero(ring: Ring) -> HomologyGroup {
        HomologyGroup { ring, free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(ring: Ring, rank: usize) -> HomologyGroup {
        HomologyGroup { ring, free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// `ker(d_out) / im(d_in)` for `C_{n+1} --d_in--> C_n --d_out--> C_{n-1}`.
///
/// Matrices act on column vectors, so `d_in` is `dim C_n × dim C_{n+1}` and
/// `d_out` is `dim C_{n-1} × dim C_n`.
pub fn homology_at(d_in: &ExactMatrix, d_out: &ExactMatrix) -> Result<HomologyGroup, LinalgError> {
    if d_in.ring() != d_out.ring() {
        return Err(LinalgError::RingMismatch(d_in.ring(), d_out.ring()));
    }
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::ShapeMismatch {
            left: (d_out.rows(), d_out.cols()),
            right: (d_in.rows(), d_in.cols()),
        });
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(LinalgError::CompositionNonzero);
    }
    let ring = d_in.ring();
    let dim = d_out.cols();
    let rank_out = rank(d_out);
    match ring {
        Ring::Integers => {
            let snf = smith_normal_form(d_in)?;
            let torsion = snf.factors.into_iter().filter(|d| !d.is_one()).collect();
            Ok(HomologyGroup { ring, free_rank: dim - rank_out - snf.rank, torsion })
        }
        _ => {
            let rank_in = rank(d_in);
            Ok(HomologyGroup { ring, free_rank: dim - rank_out - rank_in, torsion: Vec::new() })
        }
    }
}
