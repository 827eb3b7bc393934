//! The hyperoctahedral bar construction and the Loday functor, together with
//! chain models for Hochschild, reflexive, cyclic and dihedral homology.
//!
//! Degree `n` of every complex here is `M ⊗ A^{⊗n}` in the basis of tensors of
//! basis vectors, indexed by multi-indices `(i₀, i₁, …, i_n)` (see
//! [`TensorBasis`]). Nothing is normalized.
//!
//! Signs: the reflexive involution is `y_n = (−1)^{n(n+1)/2} r` and the cyclic
//! operator is `t_n = (−1)^n τ`, where `r` and `τ` are the unsigned reversal
//! and rotation. With these signs `y` commutes with `b`, `b(1 − t) = (1 − t)b′`
//! and `b′N = Nb`; tests check each identity on matrices.

mod complex;
mod models;
mod tensor;

use thiserror::Error;

use crate::invalg::AlgebraError;
use crate::linalg::{LinalgError, Ring};

pub use complex::{total_complex, ChainComplex};
pub use models::{
    bar_prime_boundary, cyclic_bicomplex, cyclic_homology, cyclic_operator, dihedral_homology_rational,
    dihedral_operator, hochschild_boundary, hochschild_complex, hochschild_homology, invariant_homology,
    norm_operator, reflexive_bicomplex, reflexive_homology, reflexive_homology_via_invariants, reflexive_operator,
    reflexive_action_matrix, rotation_matrix,
};
pub use tensor::{
    bar_apply, based_bar_apply, loday_degeneracy, loday_face, reflexive_action, rotation, TensorBasis,
    TensorElement,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BarError {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("morphism does not fix the basepoint 0")]
    NotBased,
    #[error("no Loday {kind} with index {index} in degree {degree}")]
    IndexOutOfRange { kind: &'static str, index: usize, degree: usize },
    #[error("basis index {index} out of range for slot {slot}")]
    BasisIndex { slot: usize, index: usize },
    #[error("dihedral homology is only modelled over Q (2 must be invertible), got {0}")]
    RingNotRational(Ring),
    #[error("differentials do not compose to zero between degrees {degree} and {}", degree - 1)]
    NotAComplex { degree: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
