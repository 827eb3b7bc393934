//! Crossed simplicial groups and involutive non-commutative sets, made
//! computable.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: exact matrices over ℤ, ℚ and 𝔽ₚ, Smith normal form and
//!   homology of a single spot in a chain complex.
//! * [`groups`]: hyperoctahedral groups as signed permutations, together with
//!   the reflexive, cyclic, dihedral, symmetric and based subgroups.
//! * [`ncsets`]: morphisms of involutive non-commutative sets (maps whose
//!   fibres are totally ordered and carry a `C₂` label) and their composition.
//! * [`factorize`]: the normal forms `Δ ∘ H`, `D ∘ H⁺` and `ΔRᵒᵖ ∘ H⁺`, and the
//!   right module `B` built from them.
//! * [`invalg`]: involutive algebras and bimodules given by structure
//!   constants.
//! * [`barhom`]: the hyperoctahedral bar construction, Loday functors and the
//!   Hochschild, reflexive, cyclic and rational dihedral chain models.
//!
//! Everything here is `no_std` and only needs `alloc`. Parsing, rendering and
//! the command-line front end live in the companion `ifas` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod barhom;
pub mod factorize;
pub mod groups;
pub mod invalg;
pub mod linalg;
pub mod ncsets;
