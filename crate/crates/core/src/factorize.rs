//! Normal forms for the decompositions `IF(as) = Δ ∘ H`, `H = D ∘ H⁺` and
//! `IΓ(as) = ΔRᵒᵖ ∘ H⁺`, and the right `H⁺`-module `B`.
//!
//! A decomposition `C = A ∘ B` means every morphism of `C` is uniquely a
//! `B`-morphism followed by an `A`-morphism; every factorization here returns
//! its parts in that order, `(A-part, B-part)`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::groups::{GroupFamily, SignedPermutation};
use crate::linalg::{Ring, Scalar};
use crate::ncsets::{
    embed_delta, embed_group, embed_reflection, loday_degeneracy_morphism, loday_face_morphism, CategoryTag,
    NCMorphism,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FactorizeError {
    #[error("morphism does not fix the basepoint 0")]
    NotBased,
    #[error("size mismatch: [{expected}] expected, got [{got}]")]
    SizeMismatch { expected: usize, got: usize },
    #[error("{0} is not in the based subgroup H⁺")]
    NotInHPlus(SignedPermutation),
}

/// `f = embed_delta(phi) ∘ embed_group(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaHFactorization {
    /// Values of the order-preserving map `[n] → [m]`.
    pub phi: Vec<usize>,
    pub target_m: usize,
    pub g: SignedPermutation,
}

impl DeltaHFactorization {
    pub fn phi_morphism(&self) -> NCMorphism {
        embed_delta(&self.phi, self.target_m).expect("phi is order-preserving")
    }

    pub fn reconstruct(&self) -> NCMorphism {
        self.phi_morphism().compose(&embed_group(&self.g)).expect("sizes agree")
    }
}

/// Read the preimage lists of `f` one after the other; the element at
/// position `p` of that concatenation goes to `p`, keeping its label, and
/// `phi` collapses each block back onto its target.
pub fn factor_delta_h(f: &NCMorphism) -> DeltaHFactorization {
    let n = f.source();
    let mut sigma = vec![0; n + 1];
    let mut labels = vec![false; n + 1];
    let mut phi = Vec::with_capacity(n + 1);
    let mut p = 0;
    for (i, pre) in f.preimages().iter().enumerate() {
        for &(j, z) in pre.entries() {
            sigma[j] = p;
            labels[p] = z;
            phi.push(i);
            p += 1;
        }
    }
    let g = SignedPermutation::new(sigma, labels).expect("a partition induces a bijection");
    DeltaHFactorization { phi, target_m: f.target(), g }
}

/// `g = d ∘ h` with `d ∈ ⟨R, T⟩` and `h ∈ H⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DHplusFactorization {
    pub d: SignedPermutation,
    pub h: SignedPermutation,
}

/// Writes `g = (z; σ)` with `k = σ(0)` as
///
/// * `T^k ∘ (z_k, z_{k+1}, …, z_{k−1}; τ^{−k} σ)` when `z_k = 1`,
/// * `R ∘ T^{n−k} ∘ (t z_k, t z_{k−1}, …, t z_{k+1}; τ^{k−n} r σ)` when `z_k = t`,
///
/// indices mod `n + 1`, `τ` the cycle `i ↦ i + 1` and `r` the reversal.
pub fn factor_d_hplus(g: &SignedPermutation) -> DHplusFactorization {
    let size = g.size();
    let n = size - 1;
    let z = g.labels();
    let sigma = g.sigma();
    let k = sigma[0];
    let t = SignedPermutation::canonical_t(n);
    let (d, h_sigma, h_labels): (_, Vec<usize>, Vec<bool>) = if !z[k] {
        let d = t.pow(k);
        let h_sigma = sigma.iter().map(|&s| (s + size - k) % size).collect();
        let h_labels = (0..size).map(|i| z[(k + i) % size]).collect();
        (d, h_sigma, h_labels)
    } else {
        let d = SignedPermutation::canonical_r(n).compose(&t.pow(n - k)).expect("same size");
        let h_sigma = sigma.iter().map(|&s| (k + size - s) % size).collect();
        let h_labels = (0..size).map(|i| !z[(k + size - i) % size]).collect();
        (d, h_sigma, h_labels)
    };
    let h = SignedPermutation::new(h_sigma, h_labels).expect("conjugate of a signed permutation");
    debug_assert!(h.is_member(GroupFamily::BasedHyperoctahedral));
    debug_assert_eq!(d.compose(&h).as_ref(), Ok(g));
    DHplusFactorization { d, h }
}

/// `f = rho ∘ embed_group(h)` with `rho ∈ ΔRᵒᵖ` and `h ∈ H⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflexiveFactorization {
    pub rho: NCMorphism,
    pub phi: Vec<usize>,
    pub d: SignedPermutation,
    pub h: SignedPermutation,
}

impl ReflexiveFactorization {
    pub fn reconstruct(&self) -> NCMorphism {
        self.rho.compose(&embed_group(&self.h)).expect("sizes agree")
    }
}

/// Chains [`factor_delta_h`] and [`factor_d_hplus`]:
/// `f = embed_delta(phi) ∘ embed_group(d) ∘ embed_group(h)`, and
/// `rho = embed_delta(phi) ∘ embed_group(d)`.
pub fn factor_reflexive(f: &NCMorphism) -> Result<ReflexiveFactorization, FactorizeError> {
    if !f.is_based() {
        return Err(FactorizeError::NotBased);
    }
    let dh = factor_delta_h(f);
    let DHplusFactorization { d, h } = factor_d_hplus(&dh.g);
    let rho = dh.phi_morphism().compose(&embed_group(&d)).expect("sizes agree");
    debug_assert!(rho.is_in(CategoryTag::IGammaAs));
    Ok(ReflexiveFactorization { rho, phi: dh.phi, d, h })
}

/// `f ∈ ΔRᵒᵖ` iff `f` is based and its `Δ ∘ H` group part is dihedral, i.e.
/// `ΔRᵒᵖ = ΔDᵒᵖ ∩ IΓ(as)`.
pub fn is_delta_r_op(f: &NCMorphism) -> bool {
    f.is_based() && factor_d_hplus(&factor_delta_h(f).g).h.is_identity()
}

/// The subcategory of `IΓ(as)` generated by the Loday faces, degeneracies
/// and reflections, restricted to objects `[0] … [max_n]`.
///
/// Closure is by breadth-first composition with generators, so this is an
/// independent description of `ΔRᵒᵖ` for membership checks.
pub fn generated_delta_r_op(max_n: usize) -> BTreeSet<NCMorphism> {
    let mut generators = Vec::new();
    for n in 0..=max_n {
        generators.push(embed_reflection(n));
        for i in 0..=n {
            if n >= 1 {
                generators.push(loday_face_morphism(n, i).expect("valid face"));
            }
            if n < max_n {
                generators.push(loday_degeneracy_morphism(n, i).expect("valid degeneracy"));
            }
        }
    }
    let mut seen: BTreeSet<NCMorphism> = (0..=max_n).map(NCMorphism::identity).collect();
    let mut queue: VecDeque<NCMorphism> = seen.iter().cloned().collect();
    while let Some(f) = queue.pop_front() {
        for gen in generators.iter().filter(|gen| gen.source() == f.target()) {
            let composite = gen.compose(&f).expect("matching sizes");
            if seen.insert(composite.clone()) {
                queue.push_back(composite);
            }
        }
    }
    seen
}

/// The action `B([m]) → B([n])` of `f: [n] → [m]` on a basis element
/// `h ∈ H⁺_{m+1}`: the `H⁺` component of `embed_group(h) ∘ f`.
///
/// Pre-composition alone leaves the based groupoid; re-factorizing through
/// `Δ ∘ D ∘ H⁺` and keeping the last factor is what makes this a right
/// action of the whole category.
pub fn b_module_action(f: &NCMorphism, h: &SignedPermutation) -> Result<SignedPermutation, FactorizeError> {
    if h.n() != f.target() {
        return Err(FactorizeError::SizeMismatch { expected: f.target(), got: h.n() });
    }
    if !h.is_member(GroupFamily::BasedHyperoctahedral) {
        return Err(FactorizeError::NotInHPlus(h.clone()));
    }
    let composite = embed_group(h).compose(f).expect("sizes checked");
    Ok(factor_d_hplus(&factor_delta_h(&composite).g).h)
}

/// An element of `B([m])`, the free module on `H⁺_{m+1}`.
pub type BElement = BTreeMap<SignedPermutation, Scalar>;

/// Linear extension of [`b_module_action`].
pub fn b_module_action_linear(ring: Ring, f: &NCMorphism, x: &BElement) -> Result<BElement, FactorizeError> {
    let mut out = BElement::new();
    for (h, c) in x {
        let image = b_module_action(f, h)?;
        let entry = out.entry(image).or_insert_with(|| ring.zero());
        *entry = ring.add(entry, c);
    }
    out.retain(|_, c| *c != ring.zero());
    Ok(out)
}
