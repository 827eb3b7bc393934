//! Seeded random inputs for the verification sweeps.

use ifas_core::groups::SignedPermutation;
use ifas_core::invalg::InvolutiveAlgebra;
use ifas_core::linalg::Scalar;
use ifas_core::barhom::{TensorBasis, TensorElement};
use ifas_core::ncsets::{LabeledPreimage, NCMorphism};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x1fa5;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A morphism `[n] → [m]`: a uniform map of finite sets, each fibre put in a
/// uniform order, every point labelled by a fair coin.
pub fn morphism<R: Rng>(rng: &mut R, n: usize, m: usize) -> NCMorphism {
    let mut fibres: Vec<Vec<(usize, bool)>> = vec![Vec::new(); m + 1];
    for j in 0..=n {
        fibres[rng.gen_range(0..=m)].push((j, rng.gen()));
    }
    for fibre in &mut fibres {
        fibre.shuffle(rng);
    }
    NCMorphism::new(n, m, fibres.into_iter().map(LabeledPreimage).collect()).expect("a partition of [n]")
}

/// As [`morphism`], but with `0` placed in the fibre over `0`.
pub fn based_morphism<R: Rng>(rng: &mut R, n: usize, m: usize) -> NCMorphism {
    let mut fibres: Vec<Vec<(usize, bool)>> = vec![Vec::new(); m + 1];
    fibres[0].push((0, rng.gen()));
    for j in 1..=n {
        fibres[rng.gen_range(0..=m)].push((j, rng.gen()));
    }
    for fibre in &mut fibres {
        fibre.shuffle(rng);
    }
    NCMorphism::new(n, m, fibres.into_iter().map(LabeledPreimage).collect()).expect("a partition of [n]")
}

pub fn signed_permutation<R: Rng>(rng: &mut R, n: usize) -> SignedPermutation {
    let mut sigma: Vec<usize> = (0..=n).collect();
    sigma.shuffle(rng);
    let labels = (0..=n).map(|_| rng.gen()).collect();
    SignedPermutation::new(sigma, labels).expect("a shuffled identity")
}

/// A uniform element of `H⁺_{n+1}`: `σ(0) = 0`, `z₀ = 1`.
pub fn based_signed_permutation<R: Rng>(rng: &mut R, n: usize) -> SignedPermutation {
    let mut rest: Vec<usize> = (1..=n).collect();
    rest.shuffle(rng);
    let sigma = std::iter::once(0).chain(rest).collect();
    let labels = std::iter::once(false).chain((1..=n).map(|_| rng.gen())).collect();
    SignedPermutation::new(sigma, labels).expect("a shuffled identity")
}

/// A composable pair `(f: [n] → [m], g: [m] → [l])` with all sizes `≤ max_n`.
pub fn composable_pair<R: Rng>(rng: &mut R, max_n: usize, based: bool) -> (NCMorphism, NCMorphism) {
    let n = rng.gen_range(0..=max_n);
    let m = rng.gen_range(0..=max_n);
    let l = rng.gen_range(0..=max_n);
    if based {
        (based_morphism(rng, n, m), based_morphism(rng, m, l))
    } else {
        (morphism(rng, n, m), morphism(rng, m, l))
    }
}

/// A tensor in `A^{⊗n+1}` with a handful of small integer coefficients.
pub fn tensor<R: Rng>(rng: &mut R, a: &InvolutiveAlgebra, n: usize) -> TensorElement {
    let ring = a.ring();
    let basis = TensorBasis::new(a.dim(), a.dim(), n);
    let mut x = TensorElement::zero(ring, basis);
    for _ in 0..rng.gen_range(1..=3) {
        let idx: Vec<usize> = (0..=n).map(|_| rng.gen_range(0..a.dim())).collect();
        let c: Scalar = ring.from_i64(rng.gen_range(-3..=3));
        x.add_term(idx, &c).expect("index in range");
    }
    x
}
